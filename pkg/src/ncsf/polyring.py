"""Exact sparse multivariate polynomials and rational functions over Q.

Every indeterminate lives in one process-wide :class:`Registry`.  A monomial is
packed into a single Python integer: the exponent of the variable registered in
slot ``k`` occupies bits ``16k .. 16k+14`` (bit ``16k+15`` is a guard bit used
by the divisibility test).  Monomial multiplication is then integer addition
and comparing two packed monomials as integers is a lexicographic monomial
order, which is what exact division needs.  The *displayed* order is a
different one: graded lexicographic over the registry's canonical variable
order (family rank, then index), so rendering does not depend on the order in
which variables happened to be registered.

Coefficients are ``int`` or :class:`fractions.Fraction`; there is no floating
point anywhere.  :class:`RatFunc` keeps its denominator as a multiset of
normalized factors so that sums of fractions sharing factors stay small; no
multivariate gcd is ever computed.
"""

from __future__ import annotations

import heapq
import itertools
import random
import re
import threading
from fractions import Fraction
from typing import NamedTuple

from .compositions import ResourceLimitError  # noqa: F401  (re-exported)

FIELD_BITS = 16
FIELD_MASK = (1 << FIELD_BITS) - 1
MAX_EXPONENT = (1 << (FIELD_BITS - 1)) - 1
SYMBOLIC_DET_LIMIT = 16

FAMILIES = ("y", "qij", "tij", "wij", "qseq", "tseq", "x", "yvar", "a", "b", "useq", "hcom", "q", "t")
FAMILY_RANK = {f: i for i, f in enumerate(FAMILIES)}


class MissingBindingError(KeyError):
    """A substitution or evaluation point does not cover a variable of the polynomial."""


class NotDivisibleError(ArithmeticError):
    """Exact division was requested but the divisor does not divide."""


class DegenerateSpecializationError(ZeroDivisionError):
    """A specialization sends a denominator factor to zero."""


class Indeterminate(NamedTuple):
    family: str
    index: object = None

    def render(self) -> str:
        f, idx = self.family, self.index
        if f == "y":
            return f"y_{{{idx}}}"
        if f in ("qij", "tij", "wij"):
            return f"{f[0]}_{{{idx[0]},{idx[1]}}}"
        if f in ("qseq", "tseq", "useq", "hcom"):
            letter = {"qseq": "q", "tseq": "t", "useq": "u", "hcom": "h"}[f]
            return f"{letter}_{idx}" if idx < 10 else f"{letter}_{{{idx}}}"
        if f == "yvar":
            return "y"
        return f

    def sort_key(self):
        idx = self.index
        if isinstance(idx, str):
            idx = (len(idx), idx)
        return (FAMILY_RANK[self.family], idx if idx is not None else ())


class Registry:
    """Append-only map between indeterminates and bit-field slots."""

    def __init__(self):
        self._lock = threading.Lock()
        self._slot = {}
        self._vars = []
        self._guard = 0
        self._guard_len = 0
        self._rank = []
        self._rank_dirty = True

    def slot(self, var: Indeterminate) -> int:
        s = self._slot.get(var)
        if s is not None:
            return s
        if var.family not in FAMILY_RANK:
            raise ValueError(f"unknown indeterminate family {var.family!r}")
        with self._lock:
            s = self._slot.get(var)
            if s is None:
                s = len(self._vars)
                self._vars.append(var)
                self._slot[var] = s
                self._rank_dirty = True
        return s

    def var(self, slot: int) -> Indeterminate:
        return self._vars[slot]

    def __len__(self):
        return len(self._vars)

    def guard_mask(self) -> int:
        n = len(self._vars)
        if n != self._guard_len:
            g = 0
            for k in range(n):
                g |= 1 << (FIELD_BITS * k + FIELD_BITS - 1)
            self._guard, self._guard_len = g, n
        return self._guard

    def rank(self, slot: int) -> int:
        """Position of the slot's variable in the canonical variable order."""
        if self._rank_dirty:
            with self._lock:
                order = sorted(range(len(self._vars)), key=lambda s: self._vars[s].sort_key())
                rank = [0] * len(order)
                for r, s in enumerate(order):
                    rank[s] = r
                self._rank = rank
                self._rank_dirty = False
        return self._rank[slot]


REGISTRY = Registry()


def unpack(m: int):
    """Yield ``(slot, exponent)`` pairs of a packed monomial."""
    slot = 0
    while m:
        e = m & FIELD_MASK
        if e:
            yield slot, e
        m >>= FIELD_BITS
        slot += 1


def _divides(a: int, b: int) -> bool:
    """True iff monomial ``a`` divides monomial ``b``."""
    g = REGISTRY.guard_mask()
    return ((b | g) - a) & g == g


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _as_coeff(c):
    if isinstance(c, bool):
        return int(c)
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return _norm(c)
    return None


def _cdiv(a, b):
    if isinstance(a, int) and isinstance(b, int) and a % b == 0:
        return a // b
    return _norm(Fraction(a) / b)


class MPoly:
    """Immutable sparse polynomial: packed monomial -> nonzero rational."""

    __slots__ = ("_t", "_hash")

    def __init__(self, terms=None):
        self._t = {m: c for m, c in (terms or {}).items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms):
        p = cls.__new__(cls)
        p._t = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c):
        c = _as_coeff(c)
        return cls._raw({0: c} if c else {})

    @classmethod
    def var(cls, family, index=None):
        ind = family if isinstance(family, Indeterminate) else Indeterminate(family, index)
        return cls._raw({1 << (FIELD_BITS * REGISTRY.slot(ind)): 1})

    @staticmethod
    def parse(text: str) -> "MPoly":
        return parse_poly(text)

    # --- inspection ---------------------------------------------------------
    @property
    def terms(self) -> dict:
        return self._t

    def is_zero(self) -> bool:
        return not self._t

    def __bool__(self):
        return bool(self._t)

    def __len__(self):
        return len(self._t)

    def is_constant(self) -> bool:
        return not self._t or (len(self._t) == 1 and 0 in self._t)

    def constant_value(self):
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self._t.get(0, 0)

    def variables(self) -> set:
        slots = set()
        for m in self._t:
            slots.update(s for s, _ in unpack(m))
        return {REGISTRY.var(s) for s in slots}

    def total_degree(self) -> int:
        return max((sum(e for _, e in unpack(m)) for m in self._t), default=0)

    def degree_in(self, var: Indeterminate) -> int:
        s = REGISTRY.slot(var)
        return max(((m >> (FIELD_BITS * s)) & FIELD_MASK for m in self._t), default=0)

    def leading(self):
        """Leading ``(monomial, coefficient)`` in the internal lex order."""
        m = max(self._t)
        return m, self._t[m]

    def is_monomial(self) -> bool:
        return len(self._t) == 1

    def coefficient_in(self, var: Indeterminate, k: int) -> "MPoly":
        """Coefficient of ``var^k``, as a polynomial in the remaining variables."""
        shift = FIELD_BITS * REGISTRY.slot(var)
        out = {}
        for m, c in self._t.items():
            if (m >> shift) & FIELD_MASK == k:
                out[m & ~(FIELD_MASK << shift)] = c
        return MPoly._raw(out)

    def monomial_divisors(self):
        """All monic monomials dividing the single monomial of ``self``."""
        if len(self._t) != 1:
            raise ValueError("monomial_divisors needs a single term")
        (m,) = self._t
        parts = list(unpack(m))
        for exps in itertools.product(*(range(e + 1) for _, e in parts)):
            d = 0
            for (s, _), e in zip(parts, exps):
                d |= e << (FIELD_BITS * s)
            yield MPoly._raw({d: 1})

    # --- arithmetic ---------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, MPoly):
            return other
        c = _as_coeff(other)
        if c is None:
            return None
        return MPoly.const(c)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if len(other._t) > len(self._t):
            a, b = other._t, self._t
        else:
            a, b = self._t, other._t
        res = dict(a)
        for m, c in b.items():
            v = res.get(m, 0) + c
            if v:
                res[m] = v
            else:
                res.pop(m, None)
        return MPoly._raw(res)

    __radd__ = __add__

    def __neg__(self):
        return MPoly._raw({m: -c for m, c in self._t.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._t, other._t
        if not a or not b:
            return MPoly._raw({})
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            (mb, cb), = b.items()
            return MPoly._raw({m + mb: _norm(c * cb) for m, c in a.items()})
        res = {}
        get = res.get
        for m2, c2 in b.items():
            for m1, c1 in a.items():
                m = m1 + m2
                res[m] = get(m, 0) + c1 * c2
        return MPoly._raw({m: _norm(c) for m, c in res.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result, base = MPoly.const(1), self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __truediv__(self, other):
        c = _as_coeff(other)
        if c is not None:
            if c == 0:
                raise ZeroDivisionError("division of a polynomial by zero")
            return MPoly._raw({m: _cdiv(v, c) for m, v in self._t.items()})
        if isinstance(other, MPoly) and other.is_constant():
            return self / other.constant_value()
        return NotImplemented

    def __rtruediv__(self, other):
        return NotImplemented

    def divexact(self, d: "MPoly") -> "MPoly":
        """Quotient ``self / d``; raises :class:`NotDivisibleError` if ``d`` does not divide."""
        d = self._coerce(d)
        if not d:
            raise ZeroDivisionError("exact division by zero polynomial")
        if d.is_constant():
            return self / d.constant_value()
        ld, lc = d.leading()
        rem = dict(self._t)
        heap = [-m for m in rem]
        heapq.heapify(heap)
        quot = {}
        dterms = list(d._t.items())
        while rem:
            m = -heapq.heappop(heap)
            c = rem.get(m)
            if c is None:
                continue
            if not _divides(ld, m):
                raise NotDivisibleError(f"{d} does not divide {self}")
            qm = m - ld
            qc = _cdiv(c, lc)
            quot[qm] = qc
            for dm, dc in dterms:
                tm = qm + dm
                v = rem.get(tm, 0) - qc * dc
                if v:
                    if tm not in rem:
                        heapq.heappush(heap, -tm)
                    rem[tm] = _norm(v)
                else:
                    rem.pop(tm, None)
        return MPoly._raw(quot)

    def divides(self, other: "MPoly") -> bool:
        try:
            other.divexact(self)
        except NotDivisibleError:
            return False
        return True

    # --- comparison ---------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, MPoly):
            return self._t == other._t
        c = _as_coeff(other)
        if c is None:
            return NotImplemented
        return self._t == ({0: c} if c else {})

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._t.items()))
        return self._hash

    # --- substitution -------------------------------------------------------
    def specialize(self, mapping, strict: bool = True) -> "MPoly":
        """Simultaneous substitution ``var -> image``.

        ``mapping`` maps :class:`Indeterminate` to MPoly or rational.  With
        ``strict`` every variable of ``self`` must be bound; otherwise unbound
        variables are left in place.
        """
        images = {}
        for s in {s for m in self._t for s, _ in unpack(m)}:
            var = REGISTRY.var(s)
            if var in mapping:
                img = mapping[var]
                images[s] = img if isinstance(img, MPoly) else MPoly.const(img)
            elif strict:
                raise MissingBindingError(var.render())
            else:
                images[s] = None
        powers = {}

        def power(s, e):
            key = (s, e)
            p = powers.get(key)
            if p is None:
                p = images[s] ** e
                powers[key] = p
            return p

        acc = {}
        for m, c in self._t.items():
            kept = 0
            term = MPoly._raw({0: c})
            for s, e in unpack(m):
                if images[s] is None:
                    kept += e << (FIELD_BITS * s)
                else:
                    term = term * power(s, e)
                    if not term:
                        break
            for tm, tc in term._t.items():
                k = tm + kept
                acc[k] = acc.get(k, 0) + tc
        return MPoly._raw({m: _norm(c) for m, c in acc.items() if c})

    subs = specialize

    def evaluate(self, point):
        """Exact rational value at ``point`` (a map ``Indeterminate -> rational``)."""
        vals = {}
        total = 0
        for m, c in self._t.items():
            v = Fraction(c)
            for s, e in unpack(m):
                x = vals.get(s)
                if x is None:
                    var = REGISTRY.var(s)
                    if var not in point:
                        raise MissingBindingError(var.render())
                    x = vals[s] = Fraction(point[var])
                v *= x ** e
            total += v
        return _norm(Fraction(total))

    # --- rendering ----------------------------------------------------------
    def _sorted_terms(self):
        def key(item):
            m = item[0]
            exps = sorted((REGISTRY.rank(s), e) for s, e in unpack(m))
            deg = sum(e for _, e in exps)
            # descending grlex: higher degree first, then larger exponent on earlier variables
            return (-deg, [(r, -e) for r, e in exps])
        return sorted(self._t.items(), key=key)

    def __str__(self):
        if not self._t:
            return "0"
        out = []
        for i, (m, c) in enumerate(self._sorted_terms()):
            factors = sorted(((REGISTRY.rank(s), REGISTRY.var(s), e) for s, e in unpack(m)))
            mono = "*".join(v.render() + (f"^{e}" if e > 1 else "") for _, v, e in factors)
            neg = c < 0
            a = -c if neg else c
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            if i == 0:
                out.append(("-" if neg else "") + body)
            else:
                out.append((" - " if neg else " + ") + body)
        return "".join(out)

    def __repr__(self):
        return f"MPoly({str(self)!r})"


def var(family, index=None) -> MPoly:
    return MPoly.var(family, index)


def const(c) -> MPoly:
    return MPoly.const(c)


ONE = MPoly.const(1)
ZERO = MPoly.const(0)


# --- rational functions ----------------------------------------------------

def _normalize_factor(f: MPoly):
    """Return ``(scale, monic)`` with ``f == scale * monic`` and ``monic`` having leading coefficient 1."""
    _, lc = f.leading()
    if lc == 1:
        return 1, f
    return lc, f / lc


class RatFunc:
    """``num / prod(f^k for f, k in den)`` with monic, nonconstant denominator factors."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = num if isinstance(num, MPoly) else MPoly.const(num)
        factors = {}
        if den is not None:
            if isinstance(den, dict):
                items = den.items()
            else:
                items = ((den, 1),)
            for f, k in items:
                f = f if isinstance(f, MPoly) else MPoly.const(f)
                if not f:
                    raise ZeroDivisionError("rational function with zero denominator")
                if f.is_constant():
                    num = num / (f.constant_value() ** k)
                    continue
                scale, f = _normalize_factor(f)
                if scale != 1:
                    num = num / (Fraction(scale) ** k)
                factors[f] = factors.get(f, 0) + k
        self.num = num
        self.den = factors if num else {}
        if num and factors:
            self._cancel()

    @classmethod
    def _raw(cls, num, den):
        r = cls.__new__(cls)
        r.num = num
        r.den = den if num else {}
        return r

    def _cancel(self):
        for f in list(self.den):
            while self.den.get(f):
                try:
                    q = self.num.divexact(f)
                except NotDivisibleError:
                    break
                self.num = q
                self.den[f] -= 1
                if not self.den[f]:
                    del self.den[f]

    def denominator(self) -> MPoly:
        d = ONE
        for f, k in self.den.items():
            d = d * f ** k
        return d

    def is_polynomial(self) -> bool:
        return not self.den

    def to_poly(self) -> MPoly:
        if self.den:
            raise NotDivisibleError(f"{self} is not a polynomial")
        return self.num

    def __bool__(self):
        return bool(self.num)

    def is_zero(self) -> bool:
        return not self.num

    @staticmethod
    def coerce(x) -> "RatFunc":
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, MPoly):
            return RatFunc._raw(x, {})
        c = _as_coeff(x)
        if c is None:
            raise TypeError(f"cannot coerce {type(x).__name__} to RatFunc")
        return RatFunc._raw(MPoly.const(c), {})

    def _other(self, other):
        if isinstance(other, (RatFunc, MPoly)) or _as_coeff(other) is not None:
            return RatFunc.coerce(other)
        return None

    def _to_common(self, other):
        lcm = dict(self.den)
        for f, k in other.den.items():
            if lcm.get(f, 0) < k:
                lcm[f] = k
        a, b = self.num, other.num
        for f, k in lcm.items():
            ka, kb = k - self.den.get(f, 0), k - other.den.get(f, 0)
            if ka:
                a = a * f ** ka
            if kb:
                b = b * f ** kb
        return a, b, lcm

    def __add__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        if not other.num:
            return self
        if not self.num:
            return other
        a, b, lcm = self._to_common(other)
        r = RatFunc._raw(a + b, lcm)
        if r.num and r.den:
            r._cancel()
        return r

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._raw(-self.num, dict(self.den))

    def __sub__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        num = self.num * other.num
        if not num:
            return RatFunc._raw(num, {})
        den = dict(self.den)
        for f, k in other.den.items():
            den[f] = den.get(f, 0) + k
        r = RatFunc._raw(num, den)
        if den and not num.is_constant():
            r._cancel()
        return r

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if not self.num:
            raise ZeroDivisionError("inverse of the zero rational function")
        return RatFunc(self.denominator(), {self.num: 1} if not self.num.is_constant() else self.num)

    def __truediv__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        if not other.num:
            raise ZeroDivisionError("division by the zero rational function")
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return RatFunc._raw(self.num ** k, {f: m * k for f, m in self.den.items()})

    def __eq__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        a, b, _ = self._to_common(other)
        return a == b

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    __hash__ = None

    def specialize(self, mapping, strict: bool = True) -> "RatFunc":
        num = self.num.specialize(mapping, strict)
        den = {}
        for f, k in self.den.items():
            g = f.specialize(mapping, strict)
            if not g:
                raise DegenerateSpecializationError(
                    f"specialization sends denominator factor {f} to zero")
            den[g] = den.get(g, 0) + k
        return RatFunc(num, den)

    subs = specialize

    def evaluate(self, point):
        d = Fraction(1)
        for f, k in self.den.items():
            v = f.evaluate(point)
            if v == 0:
                raise ZeroDivisionError(f"denominator factor {f} vanishes at the point")
            d *= Fraction(v) ** k
        return _norm(Fraction(self.num.evaluate(point)) / d)

    def variables(self) -> set:
        vs = set(self.num.variables())
        for f in self.den:
            vs |= f.variables()
        return vs

    def __str__(self):
        if not self.den:
            return str(self.num)
        factors = sorted(self.den.items(), key=lambda fk: str(fk[0]))
        den = "*".join(f"({f})" + (f"^{k}" if k > 1 else "") for f, k in factors)
        return f"({self.num})/({den})"

    def __repr__(self):
        return f"RatFunc({str(self)!r})"


def to_ratfunc(x) -> RatFunc:
    return RatFunc.coerce(x)


def coeff_equal(a, b) -> bool:
    """Equality for mixed rational / MPoly / RatFunc coefficients."""
    if isinstance(a, RatFunc) or isinstance(b, RatFunc):
        return RatFunc.coerce(a) == RatFunc.coerce(b)
    return (a if isinstance(a, MPoly) else MPoly.const(a)) == b


def is_zero(c) -> bool:
    return not c


def specialize(p, mapping, strict: bool = True):
    if isinstance(p, (MPoly, RatFunc)):
        return p.specialize(mapping, strict)
    return p


def evaluate(p, point):
    if isinstance(p, (MPoly, RatFunc)):
        return p.evaluate(point)
    return _norm(Fraction(p))


def variables_of(p) -> set:
    if isinstance(p, (MPoly, RatFunc)):
        return p.variables()
    return set()


# --- determinants -----------------------------------------------------------

def rdet_scalar(M, limit: int = SYMBOLIC_DET_LIMIT) -> MPoly:
    """Determinant of a square matrix of commutative polynomials (fraction-free Bareiss)."""
    n = len(M)
    if any(len(row) != n for row in M):
        raise ValueError("determinant of a non-square matrix")
    if n > limit:
        raise ResourceLimitError(f"symbolic determinant of size {n} exceeds limit {limit}")
    if n == 0:
        return ONE
    A = [[x if isinstance(x, MPoly) else MPoly.const(x) for x in row] for row in M]
    sgn, prev = 1, ONE
    for k in range(n - 1):
        if not A[k][k]:
            for i in range(k + 1, n):
                if A[i][k]:
                    A[k], A[i] = A[i], A[k]
                    sgn = -sgn
                    break
            else:
                return ZERO
        pivot = A[k][k]
        for i in range(k + 1, n):
            aik = A[i][k]
            row_i, row_k = A[i], A[k]
            for j in range(k + 1, n):
                v = row_i[j] * pivot
                if aik and row_k[j]:
                    v = v - aik * row_k[j]
                row_i[j] = v.divexact(prev) if prev != 1 else v
            row_i[k] = ZERO
        prev = pivot
    return A[n - 1][n - 1] if sgn > 0 else -A[n - 1][n - 1]


def det_rational(M):
    """Determinant of a matrix of rationals by Gaussian elimination."""
    A = [[Fraction(x) for x in row] for row in M]
    n = len(A)
    det = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if A[i][k]), None)
        if piv is None:
            return 0
        if piv != k:
            A[k], A[piv] = A[piv], A[k]
            det = -det
        det *= A[k][k]
        inv = 1 / A[k][k]
        for i in range(k + 1, n):
            f = A[i][k] * inv
            if f:
                A[i] = [a - f * b for a, b in zip(A[i], A[k])]
    return _norm(det)


def inverse_rational(M):
    """Inverse of a nonsingular rational matrix (Gauss-Jordan)."""
    n = len(M)
    A = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(M)]
    for k in range(n):
        piv = next((i for i in range(k, n) if A[i][k]), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        A[k], A[piv] = A[piv], A[k]
        inv = 1 / A[k][k]
        A[k] = [a * inv for a in A[k]]
        for i in range(n):
            if i != k and A[i][k]:
                f = A[i][k]
                A[i] = [a - f * b for a, b in zip(A[i], A[k])]
    return [[_norm(x) for x in row[n:]] for row in A]


def matmul(A, B):
    """Product of two matrices of ring elements (any coefficient type)."""
    n, m, p = len(A), len(B), len(B[0]) if B else 0
    out = []
    for i in range(n):
        row = []
        for j in range(p):
            acc = None
            for k in range(m):
                a, b = A[i][k], B[k][j]
                if a and b:
                    acc = a * b if acc is None else acc + a * b
            row.append(0 if acc is None else acc)
        out.append(row)
    return out


# --- random points ----------------------------------------------------------

def random_point(variables, rng: random.Random, lo: int = -97, hi: int = 97, maxden: int = 13):
    """Random rational point; values avoid 0 and +-1 to stay off the usual degenerate loci."""
    point = {}
    for v in sorted(variables, key=lambda v: v.sort_key()):
        while True:
            x = Fraction(rng.randint(lo, hi), rng.randint(1, maxden))
            if x not in (0, 1, -1):
                break
        point[v] = x
    return point


def seeded_points(variables, count: int, seed: int, condition=None):
    """``count`` reproducible random points, rejecting those where ``condition(point)`` is false."""
    rng = random.Random(seed)
    points = []
    attempts = 0
    while len(points) < count:
        attempts += 1
        if attempts > 50 * count:
            raise RuntimeError("could not find enough admissible random points")
        p = random_point(variables, rng)
        if condition is None or condition(p):
            points.append(p)
    return points


# --- parsing ----------------------------------------------------------------

_TOKEN = re.compile(
    r"\s*(?:"
    r"(?P<num>\d+(?:/\d+)?)"
    r"|(?P<y>y_\{?(?P<yw>[01]+)\}?)"
    r"|(?P<qt>[qtw])_\{(?P<i>\d+),\s*(?P<j>\d+)\}"
    r"|(?P<seq>[qtuh])_(?:\{(?P<k1>\d+)\}|(?P<k2>\d))"
    r"|(?P<name>[xyabqt])(?![_{])"
    r"|(?P<op>[-+*/^()])"
    r")"
)


def _tokenize(text):
    pos, out = 0, []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial near {text[pos:pos + 12]!r}")
        pos = m.end()
        if m.group("num"):
            out.append(("num", Fraction(m.group("num"))))
        elif m.group("y"):
            out.append(("var", Indeterminate("y", m.group("yw"))))
        elif m.group("qt"):
            fam = {"q": "qij", "t": "tij", "w": "wij"}[m.group("qt")]
            out.append(("var", Indeterminate(fam, (int(m.group("i")), int(m.group("j"))))))
        elif m.group("seq"):
            fam = {"q": "qseq", "t": "tseq", "u": "useq", "h": "hcom"}[m.group("seq")]
            out.append(("var", Indeterminate(fam, int(m.group("k1") or m.group("k2")))))
        elif m.group("name"):
            name = m.group("name")
            out.append(("var", Indeterminate("yvar" if name == "y" else name)))
        else:
            out.append(("op", m.group("op")))
    return out


def parse_poly(text: str) -> MPoly:
    """Parse the canonical rendering (and a little more: parentheses, implicit products)."""
    tokens = _tokenize(text)
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else (None, None)

    def take():
        nonlocal pos
        if pos >= len(tokens):
            raise ValueError(f"unexpected end of {text!r}")
        tok = tokens[pos]
        pos += 1
        return tok

    def expr():
        kind, val = peek()
        negate = False
        if kind == "op" and val in "+-":
            take()
            negate = val == "-"
        acc = term()
        if negate:
            acc = -acc
        while True:
            kind, val = peek()
            if kind == "op" and val in "+-":
                take()
                rhs = term()
                acc = acc + rhs if val == "+" else acc - rhs
            else:
                return acc

    def term():
        acc = power()
        while True:
            kind, val = peek()
            if kind == "op" and val == "*":
                take()
                acc = acc * power()
            elif kind == "op" and val == "/":
                take()
                acc = acc / power()
            elif kind in ("num", "var") or (kind == "op" and val == "("):
                acc = acc * power()
            else:
                return acc

    def power():
        base = atom()
        kind, val = peek()
        if kind == "op" and val == "^":
            take()
            k, e = take()
            if k != "num":
                raise ValueError("exponent must be a number")
            base = base ** int(e)
        return base

    def atom():
        kind, val = take()
        if kind == "num":
            return MPoly.const(val)
        if kind == "var":
            return MPoly.var(val)
        if kind == "op" and val == "(":
            inner = expr()
            k, v = take()
            if v != ")":
                raise ValueError("unbalanced parenthesis")
            return inner
        if kind == "op" and val == "-":
            return -atom()
        raise ValueError(f"unexpected token {val!r}")

    if not tokens:
        raise ValueError("empty polynomial")
    result = expr()
    if pos != len(tokens):
        raise ValueError(f"trailing tokens in {text!r}")
    return result


def parse_ratfunc(text: str) -> RatFunc:
    """Parse ``"(num)/(den)"`` or a plain polynomial; the denominator is one factor."""
    depth = 0
    for i, ch in enumerate(text):
        depth += ch == "("
        depth -= ch == ")"
        if ch == "/" and depth == 0 and not text[i + 1:i + 2].isdigit():
            return RatFunc(parse_poly(text[:i]), parse_poly(text[i + 1:]))
    return RatFunc(parse_poly(text))
