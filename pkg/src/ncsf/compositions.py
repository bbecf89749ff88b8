"""Compositions, descent sets, boolean words, packed words and permutation statistics.

Compositions are the index set of every basis of ``Sym_n``.  A composition
``I = (i_1, ..., i_r)`` of ``n`` is encoded by its descent set
``{i_1, i_1+i_2, ..., i_1+...+i_{r-1}}`` or, equivalently, by a boolean word
of length ``n-1`` whose ``i``-th letter is 1 iff ``i`` is a descent.

The canonical order of compositions of ``n`` (used by every matrix in this
package) is the ascending binary value of the boolean word, e.g.
``4, 31, 22, 211, 13, 121, 112, 1111`` for ``n = 4``.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from math import factorial

BRUTE_FORCE_LIMIT = 9
COMPOSITION_LIMIT = 16


class ResourceLimitError(RuntimeError):
    """Raised when a brute-force routine is asked for a size it will not handle."""


class Composition(tuple):
    """An integer composition, stored as the tuple of its parts."""

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"composition parts must be positive: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> "Composition":
        """Parse ``"2.1.1"``, ``"2,1,1"`` or a run of digits such as ``"211"``."""
        text = text.strip().strip("()[]")
        if not text:
            return cls(())
        for sep in ".,":
            if sep in text:
                return cls(int(p) for p in text.split(sep) if p.strip())
        return cls(int(c) for c in text)

    @classmethod
    def from_descents(cls, n: int, descents) -> "Composition":
        """Inverse of :meth:`descents`."""
        if n == 0:
            return cls(())
        cuts = sorted(set(descents))
        if cuts and (cuts[0] < 1 or cuts[-1] > n - 1):
            raise ValueError(f"descent set {cuts} not contained in [1, {n - 1}]")
        bounds = [0] + cuts + [n]
        return cls(b - a for a, b in zip(bounds, bounds[1:]))

    @classmethod
    def from_word(cls, bits) -> "Composition":
        """Composition of ``len(bits)+1`` with descent ``i`` iff ``bits[i-1] == 1``."""
        if isinstance(bits, str):
            bits = [int(c) for c in bits]
        return cls.from_descents(len(bits) + 1, [i + 1 for i, b in enumerate(bits) if b])

    @property
    def n(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def descents(self) -> tuple:
        return tuple(itertools.accumulate(self[:-1]))

    def descent_mask(self) -> int:
        """Descent set as a bitmask, bit ``d-1`` standing for descent ``d``."""
        mask = 0
        for d in self.descents():
            mask |= 1 << (d - 1)
        return mask

    def word(self) -> str:
        """Boolean word as a bit string of length ``n-1``."""
        des = set(self.descents())
        return "".join("1" if i in des else "0" for i in range(1, self.n))

    def bits(self) -> tuple:
        return tuple(int(c) for c in self.word())

    def mirror(self) -> "Composition":
        return Composition(reversed(self))

    def conjugate(self) -> "Composition":
        return conjugate(self)

    def omega_complement(self) -> "Composition":
        return omega_complement(self)

    def concat(self, other) -> "Composition":
        """``I . J``"""
        return Composition(tuple(self) + tuple(other))

    def near_concat(self, other) -> "Composition":
        """``I |> J``: last part of ``I`` glued to the first part of ``J``."""
        if not self:
            return Composition(other)
        if not other:
            return Composition(self)
        return Composition(self[:-1] + (self[-1] + other[0],) + tuple(other[1:]))

    def key(self) -> str:
        """Dot-separated rendering used in JSON keys and CLI output."""
        return ".".join(str(p) for p in self)

    def __repr__(self):
        return f"Composition({self.key()})"

    def __str__(self):
        return self.key()


def as_composition(obj) -> Composition:
    if isinstance(obj, Composition):
        return obj
    if isinstance(obj, str):
        return Composition.parse(obj)
    return Composition(obj)


@lru_cache(maxsize=None)
def compositions_of(n: int) -> tuple:
    """All compositions of ``n`` in canonical order (ascending boolean-word value)."""
    if n < 1:
        raise ValueError("compositions_of needs n >= 1 (empty degree)")
    if n > COMPOSITION_LIMIT:
        raise ResourceLimitError(f"enumerating 2^{n - 1} compositions refused (limit n <= {COMPOSITION_LIMIT})")
    return tuple(
        Composition.from_word(bits) for bits in itertools.product((0, 1), repeat=n - 1)
    )


def composition_index(I) -> int:
    """Row/column position of ``I`` in :func:`compositions_of`."""
    I = as_composition(I)
    w = I.word()
    return int(w, 2) if w else 0


def conjugate(I) -> Composition:
    """Conjugate composition ``I~`` (transpose of the ribbon diagram)."""
    I = as_composition(I)
    n = I.n
    mirrored = {n - d for d in I.descents()}
    return Composition.from_descents(n, [i for i in range(1, n) if i not in mirrored])


def omega_complement(I) -> Composition:
    """``bar(I)~``: the composition whose descent set is the complement of ``Des(I)``."""
    I = as_composition(I)
    n = I.n
    des = set(I.descents())
    return Composition.from_descents(n, [i for i in range(1, n) if i not in des])


def refines(J, K) -> bool:
    """True iff ``Des(J)`` contains ``Des(K)`` (``J`` is finer than ``K``)."""
    J, K = as_composition(J), as_composition(K)
    if J.n != K.n:
        raise ValueError(f"size mismatch: |{J}| = {J.n} but |{K}| = {K.n}")
    return set(K.descents()) <= set(J.descents())


# --- words and permutations -------------------------------------------------

def is_packed(word) -> bool:
    letters = set(word)
    return bool(letters) and letters == set(range(1, max(letters) + 1))


@lru_cache(maxsize=None)
def packed_words(n: int) -> tuple:
    """All packed words of length ``n`` in lexicographic order."""
    if n < 1:
        raise ValueError("packed words need n >= 1")
    return tuple(w for w in itertools.product(range(1, n + 1), repeat=n) if is_packed(w))


def standardize(word) -> tuple:
    """Standard permutation of ``word``; equal letters are numbered left to right."""
    order = sorted(range(len(word)), key=lambda i: (word[i], i))
    perm = [0] * len(word)
    for value, pos in enumerate(order, start=1):
        perm[pos] = value
    return tuple(perm)


def sigma_of_word(word) -> tuple:
    """``sigma_w``: mirror the word, standardize, mirror back."""
    return tuple(reversed(standardize(tuple(reversed(tuple(word))))))


def inverse(perm) -> tuple:
    inv = [0] * len(perm)
    for i, p in enumerate(perm, start=1):
        inv[p - 1] = i
    return tuple(inv)


def sign(perm) -> int:
    """Signature of a permutation in one-line notation."""
    seen = [False] * len(perm)
    s = 1
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, cycle = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j] - 1
            cycle += 1
        if cycle % 2 == 0:
            s = -s
    return s


def permutation_descents(perm) -> tuple:
    return tuple(i for i in range(1, len(perm)) if perm[i - 1] > perm[i])


def recoils(perm) -> tuple:
    """Descent set of the inverse permutation."""
    return permutation_descents(inverse(perm))


def descent_composition(perm) -> Composition:
    """``C(sigma)``, the composition of ``n`` whose descent set is ``Des(sigma)``."""
    return Composition.from_descents(len(perm), permutation_descents(perm))


@lru_cache(maxsize=None)
def _descent_class_sizes(n: int) -> dict:
    if n > BRUTE_FORCE_LIMIT:
        raise ResourceLimitError(f"brute force over S_{n} refused (limit {BRUTE_FORCE_LIMIT})")
    counts = {}
    for perm in itertools.permutations(range(1, n + 1)):
        c = descent_composition(perm)
        counts[c] = counts.get(c, 0) + 1
    return counts


def count_descent_class(I) -> int:
    """``d_I``: number of permutations of ``n`` with descent composition ``I``."""
    I = as_composition(I)
    return _descent_class_sizes(I.n).get(I, 0)


def evaluation(word) -> Composition:
    """``ev(w)``: multiplicities of the letters ``1, 2, ..., max(w)`` of a packed word."""
    if not is_packed(word):
        raise ValueError(f"{word} is not a packed word")
    return Composition(word.count(k) for k in range(1, max(word) + 1))


def ordered_bell(n: int) -> int:
    """Number of packed words of length ``n`` (Fubini numbers)."""
    fub = [1]
    for m in range(1, n + 1):
        fub.append(sum(_binom(m, k) * fub[m - k] for k in range(1, m + 1)))
    return fub[n]


def _binom(a, b):
    return factorial(a) // (factorial(b) * factorial(a - b))


def word_str(word) -> str:
    return "".join(str(c) for c in word)


def parse_word(text: str) -> tuple:
    text = text.strip()
    if "," in text or "." in text:
        return tuple(int(c) for c in text.replace(".", ",").split(",") if c)
    return tuple(int(c) for c in text)
