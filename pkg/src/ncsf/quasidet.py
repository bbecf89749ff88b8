"""Row-ordered determinants of almost-triangular matrices with ``Sym``-valued entries.

For a scalar almost-triangular matrix ``W`` and a sequence of generators
``G_k`` (``G_0 = 1``), ``H'(W, G)`` is the row-ordered determinant of the
matrix with entries ``w_ij G_{j-i+1}``.  Every nonzero term of that
determinant is a product of ``G``'s in row order, so expansions are returned as
``{composition J: coefficient of G^J}``.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .compositions import Composition, as_composition, compositions_of, sign
from .grassmann import GrassmannElem, product_sym, s_to_r, unit
from .polyring import (
    ONE,
    Indeterminate,
    MPoly,
    NotDivisibleError,
    RatFunc,
    det_rational,
    rdet_scalar,
    var,
)
from .report import Report

BRUTE_RDET_LIMIT = 7


def w(i: int, j: int) -> MPoly:
    return var("wij", (i, j))


@dataclass(frozen=True)
class AlmostTriangularPair:
    """A pair ``(U, V)`` of almost-triangular ``n x n`` matrices (0-based lists).

    ``descent_rows`` says which matrix supplies row ``i`` of ``W(I)`` when
    ``i-1`` is a descent of ``I``; the other matrix supplies the remaining rows.
    """

    n: int
    U: tuple
    V: tuple
    descent_rows: str = "U"

    def __post_init__(self):
        for M in (self.U, self.V):
            if len(M) != self.n or any(len(r) != self.n for r in M):
                raise ValueError(f"matrices must be {self.n} x {self.n}")
            for i in range(self.n):
                for j in range(i - 1):
                    if M[i][j]:
                        raise ValueError(f"entry ({i + 1},{j + 1}) below the subdiagonal is nonzero")
        if self.descent_rows not in ("U", "V"):
            raise ValueError("descent_rows must be 'U' or 'V'")


def _freeze(M):
    return tuple(tuple(MPoly.const(c) if isinstance(c, int) else c for c in row) for row in M)


def make_pair(U, V, descent_rows: str = "U") -> AlmostTriangularPair:
    return AlmostTriangularPair(len(U), _freeze(U), _freeze(V), descent_rows)


def assemble_W(pair: AlmostTriangularPair, I) -> list:
    """Row ``i`` (1-based) of ``W(I)`` comes from the descent matrix iff ``i-1 in Des(I)``."""
    I = as_composition(I)
    if I.n != pair.n:
        raise ValueError(f"|{I}| = {I.n} but the matrices are {pair.n} x {pair.n}")
    des = set(I.descents())
    on, off = (pair.U, pair.V) if pair.descent_rows == "U" else (pair.V, pair.U)
    return [list(on[i] if i in des else off[i]) for i in range(pair.n)]


def sigma_I(I) -> tuple:
    """``I^#`` plus ``(0, 1, ..., n-1)``."""
    I = as_composition(I)
    sharp = []
    for part in I:
        sharp += [part] + [0] * (part - 1)
    perm = tuple(a + k for k, a in enumerate(sharp))
    if sorted(perm) != list(range(1, I.n + 1)):
        raise AssertionError(f"sigma_{I} = {perm} is not a permutation")
    return perm


def s_expansion_of(W) -> dict:
    """``H'(W, S) = sum_J eps(sigma_J) w_{1 sigma_J(1)} ... w_{n sigma_J(n)} S^J``."""
    n = len(W)
    out = {}
    for J in compositions_of(n):
        perm = sigma_I(J)
        c = MPoly.const(sign(perm))
        for i, p in enumerate(perm):
            c = c * W[i][p - 1]
            if not c:
                break
        if c:
            out[J] = c
    return out


def s_expansion(pair: AlmostTriangularPair, I) -> dict:
    return s_expansion_of(assemble_W(pair, I))


def brute_force_rdet_of(W) -> dict:
    """Row-ordered determinant summed over all of ``S_n``, letters collected in row order."""
    n = len(W)
    if n > BRUTE_RDET_LIMIT:
        raise ValueError(f"brute-force rdet limited to n <= {BRUTE_RDET_LIMIT}")
    out = {}
    for perm in itertools.permutations(range(n)):
        degrees = [perm[i] - i + 1 for i in range(n)]
        if any(d < 0 for d in degrees):
            continue
        c = MPoly.const(sign([p + 1 for p in perm]))
        for i, p in enumerate(perm):
            c = c * W[i][p]
            if not c:
                break
        if not c:
            continue
        J = Composition(d for d in degrees if d)
        out[J] = out.get(J, MPoly()) + c
    return {J: out[J] for J in compositions_of(n) if J in out and out[J]}


def brute_force_rdet(pair: AlmostTriangularPair, I) -> dict:
    return brute_force_rdet_of(assemble_W(pair, I))


def quasideterminant_of(W) -> dict:
    """``|A|_{1n}`` via the path formula after scaling rows ``2..n`` to subdiagonal ``-1``.

    Coefficients are :class:`RatFunc`; needs every ``w_{i,i-1}`` nonzero.
    """
    n = len(W)
    out = {}
    for mask in range(1 << (n - 1)):
        cuts = [j for j in range(1, n) if mask >> (j - 1) & 1]
        J = Composition.from_descents(n, cuts)
        bounds = [0] + cuts + [n]
        num, den = ONE, ONE
        for a, b in zip(bounds, bounds[1:]):
            num = num * W[a][b - 1]
            if a:
                den = den * -W[a][a - 1]
        if num:
            out[J] = RatFunc(num) / RatFunc(den)
    return {J: out[J] for J in compositions_of(n) if J in out}


def r_expansion_of(W) -> dict:
    """``W_J``: product of the diagonal minors of ``W`` blocked by the parts of ``J``."""
    n = len(W)
    out = {}
    for J in compositions_of(n):
        c, start = ONE, 0
        for part in J:
            block = [row[start:start + part] for row in W[start:start + part]]
            c = c * rdet_scalar(block)
            if not c:
                break
            start += part
        if c:
            out[J] = c
    return out


def r_expansion(pair: AlmostTriangularPair, I) -> dict:
    return r_expansion_of(assemble_W(pair, I))


def expand_generators(expansion: dict, generator) -> GrassmannElem:
    """``sum_J c_J G_{j_1} ... G_{j_r}`` on ribbons, with ``generator(k)`` the image of ``G_k``."""
    n = next(iter(expansion)).n
    total = GrassmannElem(n)
    for J, c in expansion.items():
        prod = unit()
        for k in J:
            prod = product_sym(prod, generator(k))
        total = total + prod.scale(c)
    return total


# --- concrete pairs ---------------------------------------------------------

def ribbon_pair(n: int) -> AlmostTriangularPair:
    """``U``: first row 1, row 2 all -1, row ``i >= 3`` -1 from column ``i-1``; ``V``: first row 1, subdiagonal -1."""
    U = [[0] * n for _ in range(n)]
    V = [[0] * n for _ in range(n)]
    for j in range(n):
        U[0][j] = V[0][j] = 1
    for i in range(1, n):
        for j in range(max(i - 1, 0), n):
            U[i][j] = -1
        V[i][i - 1] = -1
    return make_pair(U, V, "U")


def factoring_family(n: int) -> AlmostTriangularPair:
    """The pair over ``x, y, a, b, q_i, u_i`` whose ribbon coefficients factor into binomials.

    Rows on descents come from ``V``.
    """
    x, y, a, b = var("x"), var("yvar"), var("a"), var("b")
    U = [[MPoly()] * n for _ in range(n)]
    V = [[MPoly()] * n for _ in range(n)]
    for j in range(1, n + 1):
        U[0][j - 1] = V[0][j - 1] = x ** j - y ** j
    for i in range(2, n + 1):
        for j in range(i - 1, n + 1):
            e = j - i + 1
            U[i - 1][j - 1] = a * var("qseq", i - 1) * x ** e - y ** e
            V[i - 1][j - 1] = x ** e - b * var("useq", n + 1 - i) * y ** e
    return AlmostTriangularPair(n, tuple(map(tuple, U)), tuple(map(tuple, V)), "V")


def generic_W(n: int) -> list:
    """Almost-triangular matrix of indeterminates ``w_{ij}``."""
    return [[w(i, j) if i <= j + 1 else MPoly() for j in range(1, n + 1)] for i in range(1, n + 1)]


def random_pair(n: int, rng: random.Random, lo: int = -5, hi: int = 5, descent_rows: str = "U",
                nonzero: bool = False):
    values = [v for v in range(lo, hi + 1) if v or not nonzero]

    def mat():
        return [[rng.choice(values) if i <= j + 1 else 0 for j in range(n)] for i in range(n)]
    return make_pair(mat(), mat(), descent_rows)


# --- factoring family helpers -----------------------------------------------

X_VAR, Y_VAR = Indeterminate("x"), Indeterminate("yvar")


def det_U_closed(n: int) -> MPoly:
    """``(x - y) prod_{i<n} (x - a q_i y)``"""
    x, y, a = var("x"), var("yvar"), var("a")
    out = x - y
    for i in range(1, n):
        out = out * (x - a * var("qseq", i) * y)
    return out


def det_V_closed(n: int, corrected: bool = False) -> MPoly:
    """``(x - y) prod_{i<n} (y - b u_{n-i} x)``; ``corrected`` flips each factor to ``(b u_{n-i} x - y)``."""
    x, y, b = var("x"), var("yvar"), var("b")
    out = x - y
    for i in range(1, n):
        f = y - b * var("useq", n - i) * x
        out = out * (-f if corrected else f)
    return out


def top_coefficient_closed(I, n: int, corrected: bool = False) -> MPoly:
    """Coefficient of ``R_n`` in ``H'_I``: ``(x-y) prod_{d in Des(I)} z'_d prod_{e not in Des(I)} z_e``.

    ``z_e = x - a q_e y`` and ``z'_d = y - b u_{n-d} x`` (negated when ``corrected``).
    """
    x, y, a, b = var("x"), var("yvar"), var("a"), var("b")
    des = set(as_composition(I).descents())
    out = x - y
    for d in range(1, n):
        if d in des:
            f = y - b * var("useq", n - d) * x
            out = out * (-f if corrected else f)
        else:
            out = out * (x - a * var("qseq", d) * y)
    return out


def _homogeneous_xy_degree(p: MPoly):
    degs = set()
    for d in range(0, p.degree_in(X_VAR) + 1):
        c = p.coefficient_in(X_VAR, d)
        for e in range(0, c.degree_in(Y_VAR) + 1):
            if c.coefficient_in(Y_VAR, e):
                degs.add(d + e)
    return degs.pop() if len(degs) == 1 else None


def factor_binomials(p: MPoly):
    """Split ``p`` into ``content * prod (m1 x - m2 y)`` with monomial ``m1, m2``.

    Returns ``(content, factors)`` or ``None`` when ``p`` is not such a product.
    ``content`` is a constant times a monomial in the other variables.
    """
    if not p:
        return None
    d = _homogeneous_xy_degree(p)
    if d is None:
        return None
    x, y = var("x"), var("yvar")
    return _factor(p, d, x, y)


def _factor(p, d, x, y):
    if d == 0:
        return (p, []) if p.is_monomial() else None
    lead = p.coefficient_in(X_VAR, d)
    trail = p.coefficient_in(Y_VAR, d)
    if not lead:
        rest = _factor(p.divexact(y), d - 1, x, y)
        return None if rest is None else (rest[0], [y] + rest[1])
    if not trail:
        rest = _factor(p.divexact(x), d - 1, x, y)
        return None if rest is None else (rest[0], [x] + rest[1])
    if not (lead.is_monomial() and trail.is_monomial()):
        return None
    for m1 in lead.monomial_divisors():
        for m2 in trail.monomial_divisors():
            for s in (1, -1):
                f = m1 * x - m2 * y * s
                try:
                    quo = p.divexact(f)
                except NotDivisibleError:
                    continue
                rest = _factor(quo, d - 1, x, y)
                if rest is not None:
                    return rest[0], [f] + rest[1]
    return None


def render_factored(content, factors) -> str:
    parts = [f"({f})" for f in factors]
    if content != 1:
        parts.insert(0, str(content) if content.is_monomial() and len(str(content)) < 4
                     else f"({content})")
    return "*".join(parts) if parts else "1"


def biword_coefficient(I, J, n: int = None, corrected: bool = False) -> MPoly:
    """Product of binomial factors read off the biword ``(u over v)`` of boolean words.

    As stated the rules carry no ``a`` or ``b`` and are compared with
    ``W_J / (x - y)`` at ``a = b = 1``; the index in the ``w_1 = (1 over 0)``
    rule is read as ``u_{n-1}``.  With ``corrected`` the two boundary rules
    ``w_1 = (1 over 0)`` and ``w_{n-1} = (0 over 1)`` become ``(u_{n-1} x - y)``
    and ``(q_{n-1} x - y)``, and ``q_i -> a q_i``, ``u_i -> b u_i`` throughout.
    """
    I, J = as_composition(I), as_composition(J)
    n = I.n if n is None else n
    u, v = I.bits(), J.bits()
    x, y = var("x"), var("yvar")
    a, b = (var("a"), var("b")) if corrected else (ONE, ONE)

    def Q(i):
        return a * var("qseq", i)

    def Uv(i):
        return b * var("useq", i)

    c = ONE
    if n < 2:
        return c
    m = n - 1
    if (u[0], v[0]) == (0, 0):
        c = c * (x - Q(1) * y)
    elif (u[0], v[0]) == (1, 0):
        c = c * ((Uv(n - 1) * x - y) if corrected else (x - Uv(n - 1) * y))
    if (u[m - 1], v[m - 1]) == (0, 1):
        c = c * ((Q(n - 1) * x - y) if corrected else (x - Q(n - 1) * y))
    elif (u[m - 1], v[m - 1]) == (1, 1):
        c = c * (x - Uv(1) * y)
    for i in range(1, n - 1):
        a0, a1, b0, b1 = u[i - 1], u[i], v[i - 1], v[i]
        if (b0, b1) == (0, 0):
            c = c * ((x - Q(i + 1) * y) if a1 == 0 else (x * Uv(n - i - 1) - y))
        elif (b0, b1) == (1, 1):
            c = c * ((x * Q(i) - y) if a0 == 0 else (x - Uv(n - i) * y))
        elif (b0, b1) == (1, 0):
            f = {
                (0, 0): x * Q(i) - Q(i + 1) * y,
                (0, 1): x * Q(i) * Uv(n - i - 1) - y,
                (1, 0): x - Q(i + 1) * Uv(n - i) * y,
                (1, 1): x * Uv(n - i - 1) - Uv(n - i) * y,
            }[(a0, a1)]
            c = c * f * (x - y)
    return c


def ab_to_one():
    return {Indeterminate("a"): 1, Indeterminate("b"): 1}


# --- checks -----------------------------------------------------------------

def _exp_equal(a: dict, b: dict) -> bool:
    keys = set(a) | set(b)
    return all(RatFunc.coerce(a.get(k, 0)) == RatFunc.coerce(b.get(k, 0)) for k in keys)


def ribbon_pair_check(max_n: int) -> Report:
    """``H_I(U, V) = (-1)^{l(I)-1} R_I`` for the ribbon pair."""
    report = Report(f"ribbon-pair[n<={max_n}]")
    with report.timed():
        for n in range(1, max_n + 1):
            pair = ribbon_pair(n)
            for I in compositions_of(n):
                W = assemble_W(pair, I)
                H = s_to_r(quasideterminant_of(W))
                expected = {I: (-1) ** (len(I) - 1)}
                report.record(f"H_{I}(U,V)", H, expected, _exp_equal(H, expected))
                Hp = s_to_r(s_expansion_of(W))
                report.record(f"H'_{I}(U,V) = H_{I}(U,V)", Hp, H, _exp_equal(Hp, H))
    return report


def r211_display() -> tuple:
    """``W(211)`` for the ribbon pair and its S-expansion."""
    pair = ribbon_pair(4)
    W = assemble_W(pair, (2, 1, 1))
    return W, s_expansion_of(W)


def random_expansion_check(max_n: int, trials: int = 100, seed: int = 0) -> Report:
    """``s_expansion = brute-force rdet`` and ``s_to_r(s_expansion) = r_expansion`` for random pairs."""
    report = Report(f"random-expansions[n<={max_n}, trials={trials}]")
    rng = random.Random(seed)
    with report.timed():
        for k in range(trials):
            n = 2 + k % (max_n - 1)
            pair = random_pair(n, rng, descent_rows=rng.choice("UV"))
            I = rng.choice(compositions_of(n))
            W = assemble_W(pair, I)
            s = s_expansion_of(W)
            brute = brute_force_rdet_of(W)
            report.record(f"trial {k}: S-expansion vs rdet (n={n}, I={I})", s, brute, _exp_equal(s, brute))
            r = r_expansion_of(W)
            conv = s_to_r(s)
            report.record(f"trial {k}: diagonal minors vs S->R (n={n}, I={I})", r, conv,
                          _exp_equal(r, conv))
            if all(W[i][i - 1] for i in range(1, n)):
                H = quasideterminant_of(W)
                sub = ONE
                for i in range(1, n):
                    sub = sub * W[i][i - 1]
                scaled = {J: RatFunc(c) * (-1) ** (n - 1) / RatFunc(sub) for J, c in s.items()}
                report.record(f"trial {k}: H = (-1)^(n-1) H' / prod w_(i,i-1)", H, scaled,
                              _exp_equal(H, scaled))
    return report


def generic_n3_expansion() -> dict:
    return s_expansion_of(generic_W(3))


def classical_quasidet_check(max_n: int) -> Report:
    """``S_n`` from the ``Lambda`` matrix and ``n S_n`` from the ``Psi`` matrix."""
    from .grassmann import complete_image, elementary_image, psi_image

    report = Report(f"classical-quasidets[n<={max_n}]")
    for n in range(2, max_n + 1):
        ones = [[ONE if i <= j + 1 else MPoly() for j in range(n)] for i in range(n)]
        lam = expand_generators(quasideterminant_of(ones), lambda k: elementary_image((k,)))
        lhs = lam.scale((-1) ** (n - 1))
        Sn = complete_image((n,))
        ok = all(RatFunc.coerce(lhs.coefficient(K)) == RatFunc.coerce(Sn.coefficient(K))
                 for K in compositions_of(n))
        report.record(f"S_{n} = (-1)^(n-1) |Lambda matrix|", lhs, Sn, ok)
        W = [[ONE if i <= j else (MPoly.const(-i) if i == j + 1 else MPoly()) for j in range(n)]
             for i in range(n)]
        H = quasideterminant_of(W)
        psi = expand_generators(H, psi_image)
        nSn = Sn.scale(n)
        ok = all(RatFunc.coerce(psi.coefficient(K)) == RatFunc.coerce(nSn.coefficient(K))
                 for K in compositions_of(n))
        report.record(f"{n} S_{n} = |Psi matrix|", psi, nSn, ok)
    return report


def factoring_check(max_n: int) -> Report:
    """Every ``W_J`` of ``H'_I`` is a product of binomials (``x, y`` homogeneous, monomial coefficients)."""
    report = Report(f"factoring-family[n<={max_n}]")
    with report.timed():
        for n in range(2, max_n + 1):
            pair = factoring_family(n)
            for I in compositions_of(n):
                r = r_expansion(pair, I)
                for J in compositions_of(n):
                    c = r.get(J, MPoly())
                    fact = factor_binomials(c)
                    report.record(f"[R_{J}] H'_{I} factors into binomials", c, "binomial product",
                                  fact is not None)
    return report


def determinant_closed_forms_check(max_n: int, corrected: bool = False) -> Report:
    """``det U``, ``det V`` and the ``R_n`` coefficient of every ``H'_I`` against their closed forms.

    As stated, ``det V`` and the ``R_n`` coefficients with an odd number of
    descents are off by a sign; ``corrected`` uses ``(b u x - y)`` factors.
    """
    label = "corrected" if corrected else "stated"
    report = Report(f"factoring-closed-forms[{label}, n<={max_n}]")
    for n in range(2, max_n + 1):
        pair = factoring_family(n)
        dU, dV = rdet_scalar([list(r) for r in pair.U]), rdet_scalar([list(r) for r in pair.V])
        report.record(f"det U (n={n})", dU, det_U_closed(n), dU == det_U_closed(n))
        closed = det_V_closed(n, corrected)
        report.record(f"det V (n={n})", dV, closed, dV == closed, discrepancy=not corrected)
        for I in compositions_of(n):
            top = r_expansion(pair, I).get(Composition((n,)), MPoly())
            closed = top_coefficient_closed(I, n, corrected)
            report.record(f"[R_{n}] H'_{I}", top, closed, top == closed, discrepancy=not corrected)
    return report


def biword_check(max_n: int, corrected: bool = False) -> Report:
    """Biword rules against ``W_J / (x - y)``: at ``a = b = 1`` as stated, generic when ``corrected``."""
    label = "corrected" if corrected else "stated"
    report = Report(f"biword-rules[{label}, n<={max_n}]")
    xy = var("x") - var("yvar")
    for n in range(2, max_n + 1):
        pair = factoring_family(n)
        for I in compositions_of(n):
            r = r_expansion(pair, I)
            for J in compositions_of(n):
                true = r.get(J, MPoly())
                if not corrected:
                    true = true.specialize(ab_to_one(), strict=False)
                try:
                    true = true.divexact(xy)
                except NotDivisibleError:
                    report.fail(f"(x-y) divides [R_{J}] H'_{I}", true, "divisible")
                    continue
                rule = biword_coefficient(I, J, n, corrected)
                report.record(f"biword rule c_[{I},{J}]", rule, true, rule == true,
                              discrepancy=not corrected)
    return report


def basis_check(max_n: int, seed: int = 0) -> Report:
    """The S-coefficient matrix of ``{H_I(U, V)}`` is invertible for a random pair."""
    report = Report(f"generic-basis[n<={max_n}]")
    rng = random.Random(seed)
    for n in range(1, max_n + 1):
        pair = random_pair(n, rng, lo=-9, hi=9, nonzero=True)
        comps = compositions_of(n)
        M = []
        for I in comps:
            s = s_expansion(pair, I)
            M.append([s[J].constant_value() if J in s else 0 for J in comps])
        d = det_rational(M)
        report.record(f"det of H_I -> S^J matrix (n={n})", d, "nonzero", d != 0)
    return report
