"""``Sym_n`` and ``QSym_n`` realized as Grassmann algebras.

The ribbon ``R_I`` is identified with ``eta_D = eta_{d_1} ... eta_{d_k}`` where
``D = Des(I)``; dually the fundamental quasi-symmetric function ``F_I`` is
``xi_D``.  Subsets of ``[n-1]`` are bitmasks (bit ``d-1`` for generator ``d``).
Coefficients may be ints, Fractions, :class:`MPoly` or :class:`RatFunc`.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .compositions import (
    Composition,
    as_composition,
    compositions_of,
    count_descent_class,
    omega_complement,
)
from .polyring import MPoly, RatFunc, coeff_equal

ETA = "eta"
XI = "xi"


class GrassmannError(ValueError):
    """Degree or side mismatch between Grassmann elements."""


def mask_of(subset) -> int:
    mask = 0
    for d in subset:
        mask |= 1 << (d - 1)
    return mask


def subset_of(mask: int) -> tuple:
    out, d = [], 1
    while mask:
        if mask & 1:
            out.append(d)
        mask >>= 1
        d += 1
    return tuple(out)


def wedge_sign(a: int, b: int) -> int:
    """Sign of reordering ``eta_A eta_B`` into increasing order (``A``, ``B`` disjoint)."""
    inversions = 0
    while b:
        low = b & -b
        inversions += bin(a & ~((low << 1) - 1)).count("1")
        b ^= low
    return -1 if inversions & 1 else 1


def _add_into(terms: dict, mask: int, c):
    if not c:
        return
    old = terms.get(mask)
    v = c if old is None else old + c
    if v:
        terms[mask] = v
    else:
        terms.pop(mask, None)


class GrassmannElem:
    """Element of the Grassmann algebra on ``n-1`` generators, on the eta or xi side."""

    __slots__ = ("degree", "side", "terms")

    def __init__(self, degree: int, terms=None, side: str = ETA):
        if side not in (ETA, XI):
            raise GrassmannError(f"unknown side {side!r}")
        self.degree = degree
        self.side = side
        full = self.full_mask
        clean = {}
        for mask, c in (terms or {}).items():
            if not isinstance(mask, int):
                mask = mask_of(mask)
            if mask & ~full:
                raise GrassmannError(f"generator index outside [1, {degree - 1}]")
            _add_into(clean, mask, c)
        self.terms = clean

    @property
    def full_mask(self) -> int:
        return (1 << max(self.degree - 1, 0)) - 1

    @classmethod
    def one(cls, degree: int, side: str = ETA):
        return cls(degree, {0: 1}, side)

    @classmethod
    def generator(cls, degree: int, i: int, side: str = ETA, coeff=1):
        return cls(degree, {1 << (i - 1): coeff}, side)

    @classmethod
    def monomial(cls, degree: int, subset, side: str = ETA, coeff=1):
        """``coeff * eta_{d_1} ... eta_{d_k}`` for the listed generators, in the listed order."""
        elem = cls(degree, {0: coeff}, side)
        for d in subset:
            elem = elem.wedge(cls.generator(degree, d, side))
        return elem

    @classmethod
    def ribbon(cls, I, coeff=1):
        I = as_composition(I)
        return cls(I.n, {I.descent_mask(): coeff}, ETA)

    @classmethod
    def fundamental(cls, I, coeff=1):
        I = as_composition(I)
        return cls(I.n, {I.descent_mask(): coeff}, XI)

    @classmethod
    def from_ribbons(cls, n: int, expansion: dict):
        """Build from ``{composition: coeff}`` on the ribbon basis."""
        return cls(n, {as_composition(I).descent_mask(): c for I, c in expansion.items()}, ETA)

    def ribbon_expansion(self) -> dict:
        """``{composition: coeff}``, compositions in canonical order."""
        if self.degree == 0:
            return {Composition(()): self.terms[0]} if 0 in self.terms else {}
        # walk the nonzero terms only; words of equal length sort like their binary values
        comps = [Composition.from_descents(self.degree, subset_of(m)) for m in self.terms]
        comps.sort(key=Composition.word)
        return {I: self.terms[I.descent_mask()] for I in comps}

    def coefficient(self, I) -> object:
        return self.terms.get(as_composition(I).descent_mask(), 0)

    def _check(self, other, same_side=True):
        if not isinstance(other, GrassmannElem):
            raise GrassmannError(f"expected a GrassmannElem, got {type(other).__name__}")
        if other.degree != self.degree:
            raise GrassmannError(f"degree mismatch: {self.degree} vs {other.degree}")
        if same_side and other.side != self.side:
            raise GrassmannError(f"side mismatch: {self.side} vs {other.side}")

    # --- linear structure ---------------------------------------------------
    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            _add_into(terms, m, c)
        return GrassmannElem(self.degree, terms, self.side)

    def __neg__(self):
        return GrassmannElem(self.degree, {m: -c for m, c in self.terms.items()}, self.side)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return GrassmannElem(self.degree, {m: c * v for m, v in self.terms.items()}, self.side)

    def __rmul__(self, c):
        if isinstance(c, GrassmannElem):
            return NotImplemented
        return self.scale(c)

    def __mul__(self, other):
        if isinstance(other, GrassmannElem):
            return self.wedge(other)
        return self.scale(other)

    def map_coefficients(self, fn):
        return GrassmannElem(self.degree, {m: fn(c) for m, c in self.terms.items()}, self.side)

    def specialize(self, mapping, strict: bool = True):
        def sub(c):
            return c.specialize(mapping, strict) if isinstance(c, (MPoly, RatFunc)) else c
        return self.map_coefficients(sub)

    def __eq__(self, other):
        if not isinstance(other, GrassmannElem):
            return NotImplemented
        if (self.degree, self.side) != (other.degree, other.side):
            return False
        for m in set(self.terms) | set(other.terms):
            if not coeff_equal(self.terms.get(m, 0), other.terms.get(m, 0)):
                return False
        return True

    __hash__ = None

    # --- algebra structure --------------------------------------------------
    def wedge(self, other):
        """Grassmann product; ``eta_i eta_j = -eta_j eta_i``."""
        self._check(other)
        terms = {}
        for a, ca in self.terms.items():
            for b, cb in other.terms.items():
                if a & b:
                    continue
                c = ca * cb
                if wedge_sign(a, b) < 0:
                    c = -c
                _add_into(terms, a | b, c)
        return GrassmannElem(self.degree, terms, self.side)

    def star(self):
        """Anti-involution with ``eta_i^* = (-1)^i eta_i``."""
        if self.side != ETA:
            raise GrassmannError("star is defined on the eta side only")
        terms = {}
        for m, c in self.terms.items():
            d = subset_of(m)
            k = len(d)
            s = sum(d) + k * (k - 1) // 2
            terms[m] = -c if s & 1 else c
        return GrassmannElem(self.degree, terms, self.side)

    def integral(self):
        """Coefficient of the top monomial ``eta_1 ... eta_{n-1}``."""
        if self.side != ETA:
            raise GrassmannError("Grassmann integral is taken on the eta side")
        return self.terms.get(self.full_mask, 0)

    def __str__(self):
        if not self.terms:
            return "0"
        letter = "η" if self.side == ETA else "ξ"
        lines = []
        for m in sorted(self.terms, key=lambda m: (bin(m).count("1"), subset_of(m))):
            lines.append(f"{letter}{{{','.join(map(str, subset_of(m)))}}}: {self.terms[m]}")
        return "\n".join(lines)

    def __repr__(self):
        return f"GrassmannElem(degree={self.degree}, side={self.side!r}, terms={len(self.terms)})"

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "side": self.side,
            "terms": {",".join(map(str, subset_of(m))): str(self.terms[m])
                      for m in sorted(self.terms, key=lambda m: subset_of(m))},
        }


def bilinear_form(f: GrassmannElem, g: GrassmannElem):
    """``(f, g) = integral(f^* g)``."""
    if f.side != ETA or g.side != ETA:
        raise GrassmannError("the bilinear form pairs two eta-side elements")
    return f.star().wedge(g).integral()


def dual_pairing(f: GrassmannElem, g: GrassmannElem):
    """``<xi_D, eta_E> = delta_{DE}``, extended bilinearly."""
    if f.side != XI or g.side != ETA:
        raise GrassmannError("dual pairing expects (xi-side, eta-side)")
    if f.degree != g.degree:
        raise GrassmannError(f"degree mismatch: {f.degree} vs {g.degree}")
    total = 0
    for m, c in f.terms.items():
        d = g.terms.get(m)
        if d:
            total = total + c * d
    return total


def k_factorized(Z, side: str = ETA) -> GrassmannElem:
    """``K_n(Z) = (1 + z_1 eta_1) ... (1 + z_{n-1} eta_{n-1})``."""
    Z = list(Z)
    terms = {0: 1}
    for i, z in enumerate(Z):
        bit = 1 << i
        new = dict(terms)
        if z:
            for m, c in terms.items():
                new[m | bit] = c * z
        terms = new
    return GrassmannElem(len(Z) + 1, terms, side)


def l_factorized(Z) -> GrassmannElem:
    """``L_n(Z) = (z_1 - xi_1) ... (z_{n-1} - xi_{n-1})`` on the xi side."""
    Z = list(Z)
    terms = {0: 1}
    for i, z in enumerate(Z):
        bit = 1 << i
        new = {}
        for m, c in terms.items():
            if z:
                _add_into(new, m, c * z)
            _add_into(new, m | bit, -c)
        terms = new
    return GrassmannElem(len(Z) + 1, terms, XI)


# --- classical bases --------------------------------------------------------

def complete_image(I) -> GrassmannElem:
    """``S^I <-> prod_{d in Des(I)} (1 + eta_d)``."""
    I = as_composition(I)
    return GrassmannElem(I.n, {m: 1 for m in _submasks(I.descent_mask())})


def elementary_image(I) -> GrassmannElem:
    """``Lambda^I <-> prod_i theta_i`` with ``theta_i = 1 + eta_i`` on descents, ``eta_i`` elsewhere."""
    I = as_composition(I)
    full = (1 << (I.n - 1)) - 1
    forced = full & ~I.descent_mask()
    return GrassmannElem(I.n, {forced | m: 1 for m in _submasks(I.descent_mask())})


def psi_image(n: int) -> GrassmannElem:
    """``Psi_n <-> 1 - eta_1 + eta_1 eta_2 - ...``"""
    return GrassmannElem(n, {(1 << k) - 1: (-1) ** k for k in range(n)})


def phi_image(n: int) -> GrassmannElem:
    """``Phi_n <-> sum_k (-1)^k / binom(n-1, k) E_k``."""
    terms = {}
    for m in range(1 << (n - 1)):
        k = bin(m).count("1")
        terms[m] = Fraction((-1) ** k, comb(n - 1, k))
    return GrassmannElem(n, terms)


def klyachko(n: int, q) -> GrassmannElem:
    """q-Klyachko element ``K_n(q) = (1 + q eta_1)(1 + q^2 eta_2) ...``."""
    return k_factorized([q ** i for i in range(1, n)])


def hivert_hl(I, q) -> GrassmannElem:
    """``(eta_{d_1} + q)(eta_{d_2} + q^2) ... (eta_{d_k} + q^k)`` over the descents of ``I``.

    Only this descent product is implemented; nothing cross-checks it.
    """
    I = as_composition(I)
    elem = GrassmannElem.one(I.n)
    for k, d in enumerate(I.descents(), start=1):
        elem = elem.wedge(GrassmannElem(I.n, {1 << (d - 1): 1, 0: q ** k}))
    return elem


CLASSICAL = {
    "S": complete_image,
    "Lambda": elementary_image,
    "R": GrassmannElem.ribbon,
}


def classical_image(name: str, arg, q=None) -> GrassmannElem:
    """Dispatch: ``S``, ``Lambda``, ``R`` take a composition; ``Psi``, ``Phi`` a degree;
    ``Klyachko`` a degree and ``q``; ``HivertHL`` a composition and ``q``."""
    if name in CLASSICAL:
        return CLASSICAL[name](arg)
    if name == "Psi":
        return psi_image(arg)
    if name == "Phi":
        return phi_image(arg)
    if name == "Klyachko":
        return klyachko(arg, q)
    if name == "HivertHL":
        return hivert_hl(arg, q)
    raise KeyError(f"unknown classical basis {name!r}")


def _submasks(mask: int):
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


# --- external product -------------------------------------------------------

def product_sym(f: GrassmannElem, g: GrassmannElem) -> GrassmannElem:
    """Product ``Sym_n x Sym_m -> Sym_{n+m}``: ``f(eta_1..eta_{n-1}) (1 + eta_n) g(eta_{n+1}..)``."""
    if f.side != ETA or g.side != ETA:
        raise GrassmannError("the product of Sym is taken on the eta side")
    n, m = f.degree, g.degree
    if m == 0:
        return f.scale(g.terms.get(0, 0))
    if n == 0:
        return g.scale(f.terms.get(0, 0))
    bit = 1 << (n - 1)
    terms = {}
    for a, ca in f.terms.items():
        for b, cb in g.terms.items():
            c = ca * cb
            shifted = b << n
            _add_into(terms, a | shifted, c)
            _add_into(terms, a | bit | shifted, c)
    return GrassmannElem(n + m, terms)


def unit(degree: int = 0) -> GrassmannElem:
    return GrassmannElem(degree, {0: 1})


# --- basis changes R <-> S --------------------------------------------------

def s_to_r(expansion: dict) -> dict:
    """S-basis expansion to R-basis: ``S^I = sum_{Des(K) in Des(I)} R_K``."""
    out = {}
    n = None
    for I, c in expansion.items():
        I = as_composition(I)
        n = I.n
        for m in _submasks(I.descent_mask()):
            K = Composition.from_descents(n, subset_of(m))
            _add_into(out, K, c)
    return _canonical(out)


def r_to_s(expansion: dict) -> dict:
    """R-basis expansion to S-basis: ``R_I = sum_{Des(K) in Des(I)} (-1)^{l(I)-l(K)} S^K``."""
    out = {}
    for I, c in expansion.items():
        I = as_composition(I)
        full = I.descent_mask()
        for m in _submasks(full):
            K = Composition.from_descents(I.n, subset_of(m))
            sgn = (-1) ** (bin(full).count("1") - bin(m).count("1"))
            _add_into(out, K, c if sgn > 0 else -c)
    return _canonical(out)


def _canonical(expansion: dict) -> dict:
    if not expansion:
        return {}
    n = next(iter(expansion)).n
    return {I: expansion[I] for I in compositions_of(n) if I in expansion}


# --- ribbon bilinear form closed form --------------------------------------

def ribbon_form_closed(I, J) -> int:
    """``(R_I, R_J) = (-1)^{l(I)-1} delta_{I, bar(J)~}``."""
    I, J = as_composition(I), as_composition(J)
    return (-1) ** (len(I) - 1) if I == omega_complement(J) else 0


# --- dual of Phi^{1^r} -----------------------------------------------------

def phi_dual_exponential(r: int) -> GrassmannElem:
    """``f_{r-1}(xi) = sum_D a_D xi_D``, ``a_D`` = number of permutations of ``r`` with descent set ``D``.

    This is ``r! * Phi^*_{1^r}`` (the dual basis element itself carries the
    factor ``1/r!``, see :func:`phi_dual_basis`).
    """
    if r < 1 or r > 7:
        raise ValueError("phi_dual_exponential supports 1 <= r <= 7")
    return GrassmannElem(r, {I.descent_mask(): count_descent_class(I) for I in compositions_of(r)}, XI)


def phi_dual_basis(r: int) -> dict:
    """Brute-force dual basis ``{J: Phi^*_J}`` of the products ``Phi^J`` in degree ``r``."""
    from .polyring import inverse_rational

    comps = compositions_of(r)
    rows = []
    for J in comps:
        elem = unit()
        for part in J:
            elem = product_sym(elem, phi_image(part))
        rows.append([elem.terms.get(K.descent_mask(), 0) for K in comps])
    inv = inverse_rational(rows)
    return {I: GrassmannElem(r, {K.descent_mask(): inv[k][i] for k, K in enumerate(comps)}, XI)
            for i, I in enumerate(comps)}
