"""Sets of interpretations as fixed-width bitsets.

Bit ``i`` of an :class:`InterpSet` is set iff ``decode(i, sig)`` belongs to the
set.  Bits live in a plain Python ``int``; all operators are a handful of
shifts and masks per atom, so they also work unchanged on numpy unsigned
arrays (see :mod:`eqlogic.expressiveness`).

The ``<=`` ordering between interpretations is per-atom: a 2 may drop to a 1
and nothing else moves.  Down-closure therefore copies every member with a 2
at atom ``k`` to the index ``3**(n-1-k)`` lower, once per atom; up-closure
does the reverse for 1's.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .core import (
    Interpretation,
    Signature,
    SignatureError,
    as_interpretation,
    decode,
)


def _repeat(pattern: int, period: int, count: int) -> int:
    """``pattern`` tiled ``count`` times with the given bit period."""
    if count == 0:
        return 0
    half = _repeat(pattern, period, count // 2)
    out = half | (half << (period * (count // 2)))
    if count % 2:
        out |= pattern << (period * (count - 1))
    return out


@dataclass(frozen=True)
class Layout:
    """Bit masks shared by every set over an n-atom signature."""

    n: int
    size: int
    full: int
    classical: int
    weights: tuple[int, ...]
    ones: tuple[int, ...]  # ones[k]: indices whose k-th trit is 1
    twos: tuple[int, ...]  # twos[k]: indices whose k-th trit is 2


@lru_cache(maxsize=None)
def layout(n: int) -> Layout:
    size = 3**n
    full = (1 << size) - 1
    weights, ones, twos = [], [], []
    for k in range(n):
        w = 3 ** (n - 1 - k)
        run = (1 << w) - 1
        weights.append(w)
        ones.append(_repeat(run << w, 3 * w, 3**k))
        twos.append(_repeat(run << (2 * w), 3 * w, 3**k))
    classical = full
    for m in ones:
        classical &= ~m
    return Layout(n, size, full, classical, tuple(weights), tuple(ones), tuple(twos))


# Bit-level kernels.  They only use &, |, ~, << and >> so numpy arrays of a
# wide enough unsigned dtype are accepted in place of ints.


def down_bits(bits, lay: Layout):
    for w, m in zip(lay.weights, lay.twos):
        bits = bits | ((bits & m) >> w)
    return bits


def up_bits(bits, lay: Layout):
    for w, m in zip(lay.weights, lay.ones):
        bits = bits | ((bits & m) << w)
    return bits


def totals_bits(bits, lay: Layout):
    """Image of the set under v -> v_t."""
    for w, m in zip(lay.weights, lay.ones):
        bits = (bits & (lay.full & ~m)) | ((bits & m) << w)
    return bits


class InterpSet:
    """Immutable set of interpretations over one fixed signature."""

    __slots__ = ("sig", "bits")

    def __init__(self, sig: Signature, bits: int = 0):
        lay = layout(len(sig))
        if bits < 0 or bits > lay.full:
            raise ValueError(f"bit vector wider than 3^{len(sig)}")
        object.__setattr__(self, "sig", sig)
        object.__setattr__(self, "bits", bits)

    def __setattr__(self, name, value):
        raise AttributeError("InterpSet is immutable")

    # construction

    @classmethod
    def empty(cls, sig: Signature) -> InterpSet:
        return cls(sig, 0)

    @classmethod
    def full(cls, sig: Signature) -> InterpSet:
        return cls(sig, layout(len(sig)).full)

    @classmethod
    def all_classical(cls, sig: Signature) -> InterpSet:
        return cls(sig, layout(len(sig)).classical)

    @classmethod
    def of(cls, sig: Signature, members: Iterable[Interpretation | str | int]) -> InterpSet:
        bits = 0
        for m in members:
            bits |= 1 << as_interpretation(m, sig).index
        return cls(sig, bits)

    @classmethod
    def atom(cls, sig: Signature, name: str) -> InterpSet:
        """All interpretations making ``name`` true."""
        return cls(sig, layout(len(sig)).twos[sig.position(name)])

    @property
    def layout(self) -> Layout:
        return layout(len(self.sig))

    # container protocol

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __bool__(self) -> bool:
        return self.bits != 0

    def indices(self) -> Iterator[int]:
        b, i = self.bits, 0
        while b:
            if b & 1:
                yield i
            b >>= 1
            i += 1

    def __iter__(self) -> Iterator[Interpretation]:
        for i in self.indices():
            yield decode(i, self.sig)

    def __contains__(self, v) -> bool:
        return bool(self.bits >> as_interpretation(v, self.sig).index & 1)

    def to_strings(self) -> list[str]:
        """Canonical serialisation: digit strings in ascending index order."""
        return [str(v) for v in self]

    def __eq__(self, other) -> bool:
        if not isinstance(other, InterpSet):
            return NotImplemented
        return self.sig == other.sig and self.bits == other.bits

    def __hash__(self):
        return hash((self.sig, self.bits))

    def __repr__(self):
        return "InterpSet({" + ", ".join(self.to_strings()) + "})"

    # operators

    def _check(self, other: InterpSet) -> None:
        if not isinstance(other, InterpSet):
            raise TypeError(f"expected InterpSet, got {type(other).__name__}")
        if other.sig != self.sig:
            raise SignatureError(f"signature mismatch: {self.sig} vs {other.sig}")

    def __and__(self, other: InterpSet) -> InterpSet:
        self._check(other)
        return InterpSet(self.sig, self.bits & other.bits)

    def __or__(self, other: InterpSet) -> InterpSet:
        self._check(other)
        return InterpSet(self.sig, self.bits | other.bits)

    def __sub__(self, other: InterpSet) -> InterpSet:
        self._check(other)
        return InterpSet(self.sig, self.bits & ~other.bits)

    def __invert__(self) -> InterpSet:
        return InterpSet(self.sig, self.layout.full & ~self.bits)

    def __le__(self, other: InterpSet) -> bool:
        self._check(other)
        return self.bits & ~other.bits == 0

    def __lt__(self, other: InterpSet) -> bool:
        return self <= other and self.bits != other.bits

    def __ge__(self, other: InterpSet) -> bool:
        return other <= self


def complement(s: InterpSet) -> InterpSet:
    return ~s


def classical(s: InterpSet) -> InterpSet:
    return InterpSet(s.sig, s.bits & s.layout.classical)


def down(s: InterpSet) -> InterpSet:
    return InterpSet(s.sig, down_bits(s.bits, s.layout))


def up(s: InterpSet) -> InterpSet:
    return InterpSet(s.sig, up_bits(s.bits, s.layout))


def totals(s: InterpSet) -> InterpSet:
    """``{total_of(v) : v in s}``."""
    return InterpSet(s.sig, totals_bits(s.bits, s.layout))


def is_total_closed(s: InterpSet) -> bool:
    return totals(s) <= s


def union(a: InterpSet, b: InterpSet) -> InterpSet:
    return a | b


def intersect(a: InterpSet, b: InterpSet) -> InterpSet:
    return a & b


def difference(a: InterpSet, b: InterpSet) -> InterpSet:
    return a - b


def is_subset(a: InterpSet, b: InterpSet) -> bool:
    return a <= b


def is_equal(a: InterpSet, b: InterpSet) -> bool:
    a._check(b)
    return a.bits == b.bits


def is_empty(s: InterpSet) -> bool:
    return s.bits == 0


def total_closed_count(n: int) -> int:
    """Number of total-closed subsets over an n-atom signature.

    Each classical w with k true atoms owns the 2**k - 1 non-classical
    interpretations below it; they may be present only when w is.
    """
    from math import comb

    count = 1
    for k in range(n + 1):
        count *= (1 + 2 ** (2**k - 1)) ** comb(n, k)
    return count
