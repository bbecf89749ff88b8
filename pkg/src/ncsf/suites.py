"""Named verification suites, shared by ``ncsf verify`` and the test suite.

Each suite takes ``max_n`` and a seed and returns a list of reports.  Expensive
checks are capped below ``max_n`` where the cap is stated next to the call.
"""

from __future__ import annotations

from .compositions import compositions_of


def suite_kostka(max_n: int, seed: int) -> list:
    from .parambases import kostka_matrix, qt_specialization_consistency
    from .report import Report

    out = []
    for n in range(1, min(max_n, 6) + 1):
        out.append(qt_specialization_consistency(n))
    shapes = Report(f"kostka-shapes[n<={max_n}]")
    for n in range(1, min(max_n, 6) + 1):
        for fam in ("generic", "qt", "bz", "hlt"):
            K = kostka_matrix(n, fam)
            size = len(compositions_of(n))
            shapes.record(f"K_{n}[{fam}] is {size}x{size}", len(K.entries), size,
                          len(K.entries) == size and all(len(r) == size for r in K.entries))
    out.append(shapes)
    return out


def suite_det(max_n: int, seed: int) -> list:
    from .parambases import det_kostka_check, block_det_check

    out = [det_kostka_check(n, "qt", symbolic_max=4, points=20, seed=seed) for n in range(1, max_n + 1)]
    out += [det_kostka_check(n, "generic", symbolic_max=4, points=20, seed=seed) for n in range(1, max_n + 1)]
    out += [block_det_check(m, seed=seed) for m in range(1, min(max_n, 5) + 1)]
    return out


def suite_duality(max_n: int, seed: int) -> list:
    from .parambases import duality_check, factorized_pairings_check

    out = [duality_check(n, fam) for n in range(1, max_n + 1) for fam in ("generic", "qt")]
    out += [factorized_pairings_check(n) for n in range(1, max_n + 2)]
    return out


def suite_products(max_n: int, seed: int) -> list:
    from .parambases import product_check

    out = []
    for total in range(2, max_n + 1):
        for a in range(1, total):
            for I in compositions_of(a):
                for J in compositions_of(total - a):
                    for fam in ("generic", "qt"):
                        out.append(product_check(I, J, fam))
    return out


def suite_inverse(max_n: int, seed: int) -> list:
    from .parambases import displayed_qt_inverse_check, inverse_check, triangular_specialization_check

    out = []
    for n in range(1, max_n + 1):
        for fam in ("generic", "qt"):
            out.append(inverse_check(n, fam, symbolic_max=4, points=20, seed=seed))
    for n in range(1, min(max_n, 4) + 1):
        out += [triangular_specialization_check(n, "t1"), triangular_specialization_check(n, "q1")]
    # the displayed (Q,T) inverse is adjudicated up to n = 3; n = 4 takes minutes
    out += [displayed_qt_inverse_check(n) for n in range(1, min(max_n, 3) + 1)]
    return out


def suite_nabla(max_n: int, seed: int) -> list:
    from .nabla import (CORRECTED_PACKED, context, corrected_packed_form_check, nabla_lambda_packed_check,
                        nabla_ribbon_closed_check, nabla_ribbon_packed_suite, w_statistic_check)

    top = min(max_n, 5)
    out = [context(n).inverse_report() for n in range(1, top + 1)]
    out += [nabla_lambda_packed_check(n) for n in range(1, top + 1)]
    out.append(w_statistic_check(top))
    out.append(nabla_ribbon_closed_check(min(max_n, 4)))
    out.append(nabla_ribbon_packed_suite(min(max_n, 4)))
    out.append(corrected_packed_form_check(min(max_n, 4), CORRECTED_PACKED))
    return out


def suite_quasidet(max_n: int, seed: int) -> list:
    from .quasidet import basis_check, classical_quasidet_check, random_expansion_check, ribbon_pair_check

    return [
        ribbon_pair_check(min(max_n + 2, 6)),
        random_expansion_check(min(max_n, 5), trials=100, seed=seed),
        classical_quasidet_check(min(max_n, 5)),
        basis_check(min(max_n, 5), seed=seed),
    ]


def suite_factoring(max_n: int, seed: int) -> list:
    from .quasidet import biword_check, determinant_closed_forms_check, factoring_check

    top = min(max_n, 5)
    return [
        factoring_check(top),
        determinant_closed_forms_check(min(max_n + 1, 6), corrected=False),
        determinant_closed_forms_check(min(max_n + 1, 6), corrected=True),
        biword_check(top, corrected=False),
        biword_check(top, corrected=True),
    ]


def suite_hooks(max_n: int, seed: int) -> list:
    from .comsym import hook_311_example_check, hook_checks, macdonald_oracle_check

    top = min(max_n, 5)
    out = [macdonald_oracle_check(min(max_n, 4))]
    out += [hook_checks(n, k, "macdonald") for n in range(2, top + 1) for k in range(n)]
    out += [hook_checks(n, k, "transform") for n in range(2, min(max_n, 4) + 1) for k in range(n)]
    if max_n >= 5:
        out.append(hook_311_example_check())
    return out


def suite_bilinear(max_n: int, seed: int) -> list:
    from .parambases import bz_bilinear_check, ribbon_form_check

    out = [ribbon_form_check(n) for n in range(1, max_n + 1)]
    out += [bz_bilinear_check(n) for n in range(1, max_n + 1)]
    return out


SUITES = {
    "kostka": suite_kostka,
    "det": suite_det,
    "duality": suite_duality,
    "products": suite_products,
    "inverse": suite_inverse,
    "nabla": suite_nabla,
    "quasidet": suite_quasidet,
    "factoring": suite_factoring,
    "hooks": suite_hooks,
    "bilinear": suite_bilinear,
}
SUITE_NAMES = tuple(SUITES)


def run_suite(name: str, max_n: int, seed: int = 0) -> list:
    if max_n < 1:
        raise ValueError("max-n must be at least 1")
    return SUITES[name](max_n, seed)
