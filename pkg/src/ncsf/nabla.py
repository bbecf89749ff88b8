"""The multiparameter ``nabla`` operator on the BZ specialization.

``nabla`` is diagonal on ``H~^BZ_I`` with eigenvalue ``prod_d z_d(I)``; its
action on ribbons is obtained by the change of basis ``R = K^{-1} H~``.  The
packed-word formulas are checked against that definition.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .compositions import (
    Composition,
    as_composition,
    compositions_of,
    conjugate,
    count_descent_class,
    evaluation,
    omega_complement,
    ordered_bell,
    packed_words,
    recoils,
    refines,
    sigma_of_word,
    word_str,
)
from .grassmann import GrassmannElem
from .parambases import BZ, inverse_kostka, kostka_matrix, qs, ts
from .polyring import ONE, MPoly, NotDivisibleError, RatFunc, ResourceLimitError
from .report import Report

NABLA_LIMIT = 5


def eigenvalue(I) -> MPoly:
    """``prod_d z_d(I)`` under the BZ specialization."""
    out = ONE
    for z in BZ.alphabet(as_composition(I)):
        out = out * z
    return out


nabla_H = eigenvalue


@dataclass
class NablaContext:
    """BZ Kostka matrix and its inverse in degree ``n``, with cached ``nabla R_I``."""

    n: int
    K: list = field(init=False, repr=False)
    Kinv: list = field(init=False, repr=False)
    _cache: dict = field(default_factory=dict, init=False, repr=False)

    def __post_init__(self):
        if self.n > NABLA_LIMIT:
            raise ResourceLimitError(f"nabla on ribbons limited to n <= {NABLA_LIMIT}")
        self.K = kostka_matrix(self.n, BZ).entries
        self.Kinv = inverse_kostka(self.n, BZ).entries
        self.comps = compositions_of(self.n)
        self.eigen = [eigenvalue(K) for K in self.comps]

    def inverse_report(self) -> Report:
        report = Report(f"nabla-kostka-inverse[n={self.n}]")
        report.record(f"K^-1 K = 1 (n={self.n}, first and last rows)", self.check_inverse(), True,
                      self.check_inverse())
        return report

    def check_inverse(self) -> bool:
        """``K^{-1} K = 1`` on a few rows (full symbolic products are costly at ``n = 5``)."""
        size = len(self.comps)
        for i in {0, size - 1}:
            for j in range(size):
                acc = RatFunc(0)
                for k in range(size):
                    acc = acc + self.Kinv[i][k] * self.K[k][j]
                if acc != (1 if i == j else 0):
                    return False
        return True

    def ribbon(self, I) -> dict:
        """``{J: coefficient of R_J in nabla R_I}``, coefficients as :class:`RatFunc`."""
        I = as_composition(I)
        if I in self._cache:
            return self._cache[I]
        row = self.Kinv[self.comps.index(I)]
        # common denominator over the row, then one exact division per coefficient
        lcm = {}
        for c in row:
            for f, e in c.den.items():
                lcm[f] = max(lcm.get(f, 0), e)
        L = ONE
        for f, e in lcm.items():
            L = L * f ** e
        scaled = []
        for c, lam in zip(row, self.eigen):
            cofactor = ONE
            for f, e in lcm.items():
                cofactor = cofactor * f ** (e - c.den.get(f, 0))
            scaled.append(c.num * cofactor * lam)
        out = {}
        for b, J in enumerate(self.comps):
            num = MPoly()
            for a, s in enumerate(scaled):
                if s and self.K[a][b]:
                    num = num + s * self.K[a][b]
            try:
                out[J] = RatFunc(num.divexact(L))
            except NotDivisibleError:
                out[J] = RatFunc(num, dict(lcm))
        self._cache[I] = out
        return out

    def ribbon_elem(self, I) -> GrassmannElem:
        return GrassmannElem.from_ribbons(self.n, self.ribbon(I))


@lru_cache(maxsize=None)
def context(n: int) -> NablaContext:
    return NablaContext(n)


def nabla_ribbon(I) -> dict:
    I = as_composition(I)
    return context(I.n).ribbon(I)


def nabla_lambda(n: int) -> dict:
    return nabla_ribbon(Composition((1,) * n))


# --- packed words -----------------------------------------------------------

def phi_statistic(w, n: int = None) -> MPoly:
    """``prod_{i in Des(sigma_w^{-1})} x_i`` with ``x_i = q_i`` on a plateau of the sorted word, else ``t_{n-i}``."""
    w = tuple(w)
    n = len(w) if n is None else n
    up = sorted(w)
    out = ONE
    for i in recoils(sigma_of_word(w)):
        out = out * (qs(i) if up[i - 1] == up[i] else ts(n - i))
    return out


def recoil_composition(w) -> Composition:
    """``C(sigma_w^{-1})``"""
    w = tuple(w)
    return Composition.from_descents(len(w), recoils(sigma_of_word(w)))


def packed_word_sum(n: int, weight=phi_statistic, keep=lambda w: True) -> dict:
    """``sum_w weight(w) / d_{C(sigma_w^{-1})} R_{C(sigma_w^{-1})}`` over kept packed words."""
    acc = {}
    for w in packed_words(n):
        if not keep(w):
            continue
        C = recoil_composition(w)
        term = weight(w) * Fraction(1, count_descent_class(C))
        acc[C] = acc.get(C, MPoly()) + term
    return {C: acc[C] for C in compositions_of(n) if C in acc and acc[C]}


def w_statistic_polynomial(n: int) -> MPoly:
    """``W_n(q, t) = sum_{w in PW_n} phi(w)``."""
    total = MPoly()
    for w in packed_words(n):
        total = total + phi_statistic(w, n)
    return total


def w_from_nabla(n: int) -> MPoly:
    """``<nabla Lambda_n, F_1^n> = sum_J d_J [R_J] nabla Lambda_n``."""
    total = RatFunc(0)
    for J, c in nabla_lambda(n).items():
        total = total + c * count_descent_class(J)
    return total.to_poly()


def all_ones(n: int) -> dict:
    from .polyring import Indeterminate

    m = {}
    for i in range(1, max(n, 2)):
        m[Indeterminate("qseq", i)] = 1
        m[Indeterminate("tseq", i)] = 1
    return m


def lambda_closed_form(n: int, convention: str = "q+t") -> dict:
    """``sum_J prod_{j in Des(J)} x_j R_J`` with ``x_j = q_j + t_{n-j}`` (``q+t``) or ``t_j + q_{n-j}`` (``t+q``)."""
    out = {}
    for J in compositions_of(n):
        c = ONE
        for j in J.descents():
            c = c * ((qs(j) + ts(n - j)) if convention == "q+t" else (ts(j) + qs(n - j)))
        out[J] = c
    return out


def _same(a: dict, b: dict, n: int) -> list:
    """Compositions whose coefficients differ."""
    bad = []
    for J in compositions_of(n):
        x, y = RatFunc.coerce(a.get(J, 0)), RatFunc.coerce(b.get(J, 0))
        if x != y:
            bad.append(J)
    return bad


def nabla_lambda_packed_check(n: int) -> Report:
    """Packed-word expansion of ``nabla Lambda_n`` against the basis-change definition."""
    report = Report(f"nabla-lambda-packed[n={n}]")
    with report.timed():
        truth = nabla_lambda(n)
        packed = packed_word_sum(n)
        for J in compositions_of(n):
            report.record(f"[R_{J}] nabla Lambda_{n}", packed.get(J, 0), truth.get(J, 0),
                          RatFunc.coerce(packed.get(J, 0)) == truth.get(J, RatFunc(0)))
        for conv in ("q+t", "t+q"):
            closed = lambda_closed_form(n, conv)
            ok = not _same(closed, truth, n)
            report.data[f"closed form {conv}"] = "holds" if ok else "fails"
        report.note(f"product form with (q_j + t_(n-j)): {report.data['closed form q+t']}; "
                    f"with (t_j + q_(n-j)): {report.data['closed form t+q']}")
    return report


# --- ribbon closed forms ----------------------------------------------------

def _mono(indices, make) -> MPoly:
    out = ONE
    for d in indices:
        out = out * make(d)
    return out


@dataclass(frozen=True)
class RibbonConvention:
    """One reading of the ribbon formula for ``nabla R_I``.

    ``order``: ``finer`` keeps ``J`` with ``Des(J) ⊇ Des(bar(I)~)``, ``coarser`` the reverse.
    ``factor``: ``t+q`` is ``t_i + q_{n-i}``, ``q+t`` is ``q_i + t_{n-i}``.
    """

    order: str = "finer"
    factor: str = "t+q"
    sign: str = "|I|+l(I)"
    prefactor: str = "stated"

    def label(self):
        return f"order={self.order}, factor={self.factor}, sign={self.sign}, prefactor={self.prefactor}"


def _sign(I: Composition, rule: str) -> int:
    return {
        "|I|+l(I)": (-1) ** (I.n + len(I)),
        "l(I)-1": (-1) ** (len(I) - 1),
        "+": 1,
    }[rule]


def _prefactor(I: Composition, rule: str) -> MPoly:
    n = I.n
    a, b = conjugate(I).descents(), omega_complement(I).descents()
    return {
        "stated": _mono(a, qs) * _mono(b, ts),
        "mirrored": _mono(a, lambda d: qs(n - d)) * _mono(b, lambda d: ts(n - d)),
        "swapped": _mono(a, ts) * _mono(b, qs),
    }[rule]


def ribbon_closed_form(I, conv: RibbonConvention = RibbonConvention()) -> dict:
    I = as_composition(I)
    n = I.n
    base = omega_complement(I)
    pre = _prefactor(I, conv.prefactor) * _sign(I, conv.sign)
    desI = set(I.descents())
    out = {}
    for J in compositions_of(n):
        keep = refines(J, base) if conv.order == "finer" else refines(base, J)
        if not keep:
            continue
        c = pre
        for i in sorted(desI & set(J.descents())):
            c = c * ((ts(i) + qs(n - i)) if conv.factor == "t+q" else (qs(i) + ts(n - i)))
        out[J] = c
    return out


RIBBON_CONVENTIONS = tuple(
    RibbonConvention(o, f, s, p)
    for o, f, s, p in itertools.product(("finer", "coarser"), ("t+q", "q+t"),
                                         ("|I|+l(I)", "l(I)-1", "+"),
                                         ("stated", "mirrored", "swapped"))
)


def nabla_ribbon_closed_check(max_n: int) -> Report:
    """Adjudicate the ribbon closed form over a set of index conventions."""
    report = Report(f"nabla-ribbon-closed[n<={max_n}]")
    stated = RibbonConvention()
    survivors = list(RIBBON_CONVENTIONS)
    for n in range(1, max_n + 1):
        for I in compositions_of(n):
            truth = nabla_ribbon(I)
            closed = ribbon_closed_form(I, stated)
            for J in _same(closed, truth, n):
                report.record(f"[R_{J}] nabla R_{I} (stated form)", closed.get(J, 0), truth.get(J, 0),
                              False, discrepancy=True)
            report.checked += 1
            survivors = [c for c in survivors if not _same(ribbon_closed_form(I, c), truth, n)]
    report.data["matching conventions"] = [c.label() for c in survivors]
    if report.status != "pass":
        if survivors:
            report.note("stated ribbon form fails; conventions matching every I: "
                        + "; ".join(c.label() for c in survivors))
        else:
            report.status = "fail"
            report.note("no convention in the search space matches the basis-change definition")
    return report


# --- packed-word formula for nabla R_I --------------------------------------

@dataclass(frozen=True)
class PackedConvention:
    """One reading of the packed-word formula for ``nabla R_I``.

    ``ev``: ``coarser`` keeps words with ``Des(ev(w)) ⊆ Des(I)``, ``finer`` the reverse.
    ``weight``: ``phi`` inserts ``phi(w)`` in each term; ``none`` is the formula as printed.
    ``theta``: ``t_d`` or ``t_{n-d}`` over ``Des(bar(I)~)``, or ``1``.
    """

    ev: str = "coarser"
    weight: str = "none"
    theta: str = "t_d"
    sign: str = "|I|+l(I)"

    def label(self):
        return f"ev={self.ev}, weight={self.weight}, theta={self.theta}, sign={self.sign}"


STATED_PACKED = PackedConvention()
CORRECTED_PACKED = PackedConvention(ev="coarser", weight="phi", theta="t_{n-d}", sign="|I|+l(I)")


def _theta(I: Composition, rule: str) -> MPoly:
    n = I.n
    des = omega_complement(I).descents()
    if rule == "t_d":
        return _mono(des, ts)
    if rule == "t_{n-d}":
        return _mono(des, lambda d: ts(n - d))
    if rule == "q_d":
        return _mono(des, qs)
    return ONE


def _ev_keep(I: Composition, rule: str):
    desI = set(I.descents())

    def keep(w):
        d = set(evaluation(w).descents())
        return d <= desI if rule == "coarser" else d >= desI
    return keep


def packed_ribbon_form(I, conv: PackedConvention = STATED_PACKED) -> dict:
    I = as_composition(I)
    n = I.n
    weight = (lambda w: phi_statistic(w, n)) if conv.weight == "phi" else (lambda w: ONE)
    summed = packed_word_sum(n, weight, _ev_keep(I, conv.ev))
    pre = _theta(I, conv.theta) * _sign(I, conv.sign)
    return {J: c * pre for J, c in summed.items()}


PACKED_CONVENTIONS = tuple(
    PackedConvention(e, w, th, s)
    for e, w, th, s in itertools.product(("coarser", "finer"), ("none", "phi"),
                                          ("t_d", "t_{n-d}", "q_d", "1"),
                                          ("|I|+l(I)", "l(I)-1", "+"))
)


def nabla_ribbon_packed_check(I, conventions=PACKED_CONVENTIONS) -> Report:
    """Stated packed-word formula for one ``I``; also lists the conventions that hold."""
    I = as_composition(I)
    n = I.n
    report = Report(f"nabla-ribbon-packed[{I}]")
    truth = nabla_ribbon(I)
    stated = packed_ribbon_form(I, STATED_PACKED)
    for J in compositions_of(n):
        a, b = RatFunc.coerce(stated.get(J, 0)), truth.get(J, RatFunc(0))
        report.record(f"[R_{J}] nabla R_{I}", a, b, a == b, discrepancy=True)
    report.data["matching conventions"] = [
        c.label() for c in conventions if not _same(packed_ribbon_form(I, c), truth, n)
    ]
    return report


def nabla_ribbon_packed_suite(max_n: int) -> Report:
    """Run :func:`nabla_ribbon_packed_check` for every ``I`` with ``|I| <= max_n``.

    The outcome is ``pass`` if the stated formula holds everywhere, ``discrepancy``
    if it fails but some convention holds for every ``I``, ``fail`` otherwise.
    """
    report = Report(f"nabla-ribbon-packed[n<={max_n}]")
    survivors = {c.label() for c in PACKED_CONVENTIONS}
    for n in range(1, max_n + 1):
        for I in compositions_of(n):
            r = nabla_ribbon_packed_check(I)
            report.merge(r)
            survivors &= set(r.data["matching conventions"])
    ordered = [c.label() for c in PACKED_CONVENTIONS if c.label() in survivors]
    report.data["matching conventions"] = ordered
    if report.status != "pass":
        if ordered:
            report.note("stated packed-word formula fails; conventions valid for every I: "
                        + "; ".join(ordered))
        else:
            report.status = "fail"
            report.note("no convention in the search space matches the basis-change definition")
    return report


def corrected_packed_form_check(max_n: int, conv: PackedConvention) -> Report:
    """Strict check of one packed-word convention for all ``|I| <= max_n``."""
    report = Report(f"nabla-ribbon-packed[{conv.label()}, n<={max_n}]")
    for n in range(1, max_n + 1):
        for I in compositions_of(n):
            truth = nabla_ribbon(I)
            form = packed_ribbon_form(I, conv)
            for J in compositions_of(n):
                a, b = RatFunc.coerce(form.get(J, 0)), truth.get(J, RatFunc(0))
                report.record(f"[R_{J}] nabla R_{I}", a, b, a == b)
    return report


def phi_example() -> tuple:
    w = (2, 2, 1, 3, 5, 4, 1, 1)
    return word_str(sigma_of_word(w)), phi_statistic(w)


def w_statistic_check(max_n: int) -> Report:
    report = Report(f"w-statistic[n<={max_n}]")
    for n in range(1, max_n + 1):
        W = w_statistic_polynomial(n)
        at_one = W.specialize(all_ones(n), strict=False)
        report.record(f"W_{n}(1,1) = |PW_{n}|", at_one, ordered_bell(n), at_one == ordered_bell(n))
        via = w_from_nabla(n)
        report.record(f"W_{n} = <nabla Lambda_{n}, F_1^{n}>", W, via, W == via)
    return report
