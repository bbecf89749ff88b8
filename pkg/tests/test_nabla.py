import pytest

from ncsf import nabla
from ncsf.compositions import compositions_of, parse_word
from ncsf.parambases import basis_element
from ncsf.polyring import RatFunc, ResourceLimitError


@pytest.mark.parametrize("n", range(1, 5))
def test_bz_basis_are_eigenvectors(n):
    for I in compositions_of(n):
        H = basis_element(I, "bz").ribbon_expansion()
        image = {}
        for J, c in H.items():
            for K, d in nabla.nabla_ribbon(J).items():
                image[K] = RatFunc.coerce(image.get(K, 0)) + RatFunc.coerce(c) * RatFunc.coerce(d)
        ev = nabla.eigenvalue(I)
        for K in compositions_of(n):
            assert RatFunc.coerce(image.get(K, 0)) == RatFunc.coerce(H.get(K, 0)) * ev


@pytest.mark.parametrize("n", range(1, 5))
def test_ribbon_inverse_table(n):
    assert nabla.context(n).inverse_report().status == "pass"


@pytest.mark.parametrize("n", range(1, 5))
def test_nabla_lambda_packed_words(n):
    report = nabla.nabla_lambda_packed_check(n)
    assert report.status == "pass"


def test_lambda_product_form_orientation():
    n = 3
    target = nabla.nabla_lambda(n)
    stated = nabla.lambda_closed_form(n, "q+t")
    assert all(RatFunc.coerce(target.get(K, 0)) == RatFunc.coerce(stated.get(K, 0)) for K in compositions_of(n))
    swapped = nabla.lambda_closed_form(n, "t+q")
    assert any(RatFunc.coerce(target.get(K, 0)) != RatFunc.coerce(swapped.get(K, 0)) for K in compositions_of(n))


def test_phi_example():
    sigma, phi = nabla.phi_example()
    assert sigma == "54368721"
    assert phi == nabla.phi_statistic(parse_word("22135411"))


@pytest.mark.parametrize("n", range(1, 6))
def test_w_statistic_matches_nabla(n):
    assert nabla.w_statistic_polynomial(n) == nabla.w_from_nabla(n)


def test_ribbon_theorem_outcome_is_adjudicated():
    closed = nabla.nabla_ribbon_closed_check(3)
    assert closed.status in ("pass", "discrepancy")
    assert nabla.corrected_packed_form_check(4, nabla.CORRECTED_PACKED).status == "pass"


def test_size_limit():
    with pytest.raises(ResourceLimitError):
        nabla.context(nabla.NABLA_LIMIT + 1)
