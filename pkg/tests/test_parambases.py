import pytest

from ncsf import parambases as pb
from ncsf.compositions import Composition, compositions_of
from ncsf.polyring import RatFunc, rdet_scalar


@pytest.mark.parametrize("family", ["generic", "qt", "bz", "hlt"])
@pytest.mark.parametrize("n", range(1, 5))
def test_kostka_shape_and_first_column(family, n):
    K = pb.kostka_matrix(n, family).entries
    size = 2 ** (n - 1)
    assert len(K) == size and all(len(row) == size for row in K)
    assert all(row[0] == 1 for row in K)


@pytest.mark.parametrize("n", range(1, 5))
def test_qt_is_specialization_of_generic(n):
    assert pb.qt_specialization_consistency(n).status == "pass"


@pytest.mark.parametrize("n", range(1, 5))
def test_generic_determinant_factorizes(n):
    det = rdet_scalar(pb.kostka_matrix(n, "generic").entries)
    assert det == pb.generic_det_formula(n)


@pytest.mark.parametrize("m", range(1, 5))
def test_block_determinant_identity(m):
    assert pb.block_det_check(m, seed=m).status == "pass"


@pytest.mark.parametrize("family", ["generic", "qt"])
@pytest.mark.parametrize("n", range(1, 4))
def test_duality(family, n):
    assert pb.duality_check(n, family).status == "pass"


@pytest.mark.parametrize("family", ["qt", "bz", "hlt"])
def test_inverse_for_specialized_families(family):
    assert pb.inverse_check(3, family).status == "pass"


@pytest.mark.parametrize("which", ["t1", "q1"])
@pytest.mark.parametrize("n", range(1, 4))
def test_triangular_specializations(which, n):
    assert pb.triangular_specialization_check(n, which).status == "pass"


@pytest.mark.parametrize("n", range(1, 4))
def test_displayed_qt_inverse_is_off_by_sign(n):
    comps = compositions_of(n)
    sign = (-1) ** (n - 1)
    for I in comps:
        for J in comps:
            assert pb.displayed_qt_inverse_entry(I, J) == pb.inverse_entry(I, J, "qt") * sign


def test_displayed_qt_inverse_sign_is_recorded():
    report = pb.displayed_qt_inverse_check(2)
    assert report.status == "discrepancy"
    assert pb.displayed_qt_inverse_check(3).status == "pass"


def test_product_support_is_prefix_interval():
    I = Composition((2,))
    got = pb.product_in_basis(I, Composition((2,)), "generic")
    assert set(got) == set(pb.product_support_interval(I, 2))
    assert {K.key() for K in got} == {"4", "3.1", "2.2", "2.1.1"}


@pytest.mark.parametrize("family", ["generic", "qt", "bz", "hlt"])
def test_products_against_grassmann(family):
    for I in compositions_of(2):
        for J in compositions_of(2):
            report = pb.product_check(I, J, family)
            assert report.status == "pass", report.witnesses


@pytest.mark.parametrize("n", range(1, 5))
def test_bz_bracket_sign(n):
    report = pb.bz_bilinear_check(n)
    assert not any("corrected" in w["identity"] for w in report.witnesses)
    assert report.status == ("discrepancy" if n % 2 == 0 else "pass")


def test_unknown_family():
    with pytest.raises(KeyError):
        pb.kostka_matrix(3, "nope")


def test_matrix_renderings_agree():
    M = pb.kostka_matrix(3, "qt")
    csv_rows = M.to_csv().strip().splitlines()
    assert csv_rows[0] == ",3,2.1,1.2,1.1.1"
    assert M.to_json()["entries"] == M.rendered()
    assert M.to_latex().count("\\\\") == 3


def test_pairing_closed_is_nonzero_on_diagonal():
    for I in compositions_of(4):
        assert RatFunc.coerce(pb.pairing_closed(I, I, "qt")) != RatFunc(0)
