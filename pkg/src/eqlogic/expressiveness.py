"""Definability of formulas in connective fragments.

A fragment is a subset of {bot, and, or, imp}.  Its closure over a signature
is the least family of sets that contains the atom denotations (and the
empty set when ``bot`` is allowed) and is closed under the set operators
behind the allowed connectives.  The closure is exactly the set of
denotations of formulas written with those connectives, so a formula is
definable iff its denotation is a member.

Sets over at most three atoms fit in 27 bits, so the family is held in a
``uint32`` numpy array and each round applies every operator to all new
operand pairs at once.  Rounds run breadth-first; within a round operators
go in the order and < or < imp and operand pairs in row-major index order.
The first derivation found for a set is the one recorded for its witness.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from .core import Signature
from .denotation import denote, implication_bits
from .formula import BOT, And, Atom, Formula, Implies, Or, atoms
from .intset import InterpSet, layout

MAX_ATOMS = 3
_CHUNK = 1 << 21


class Connective(enum.IntEnum):
    BOT = 0
    AND = 1
    OR = 2
    IMPLIES = 3


_NAMES = {
    "bot": Connective.BOT,
    "and": Connective.AND,
    "or": Connective.OR,
    "imp": Connective.IMPLIES,
    "implies": Connective.IMPLIES,
}

_ATOM = -1

Fragment = frozenset  # of Connective


def parse_fragment(text: str) -> frozenset[Connective]:
    """``"bot,and,imp"`` -> fragment; an empty string means atoms only."""
    out = set()
    for name in (t.strip().lower() for t in text.split(",")):
        if not name:
            continue
        if name not in _NAMES:
            raise ValueError(f"unknown connective {name!r}; use bot, and, or, imp")
        out.add(_NAMES[name])
    return frozenset(out)


def fragment_name(frag) -> str:
    return ",".join(("bot", "and", "or", "imp")[c] for c in sorted(frag))


class SignatureTooLarge(ValueError):
    pass


class ClosureWitnessError(RuntimeError):
    pass


@dataclass
class ClosureFamily:
    """Sets reached by a closure run, each with the derivation that first produced it.

    ``complete`` is False when the run stopped early after reaching a target
    set; the family is then a prefix of the full closure.
    """

    sig: Signature
    fragment: frozenset
    sets: np.ndarray
    ops: np.ndarray
    left: np.ndarray
    right: np.ndarray
    complete: bool
    rounds: int
    _witnesses: dict = field(default_factory=dict, repr=False)

    def __len__(self) -> int:
        return len(self.sets)

    def index(self, s: InterpSet) -> int | None:
        hits = np.flatnonzero(self.sets == s.bits)
        return int(hits[0]) if len(hits) else None

    def __contains__(self, s: InterpSet) -> bool:
        return self.index(s) is not None

    def members(self) -> list[InterpSet]:
        return [InterpSet(self.sig, int(b)) for b in self.sets]

    def witness(self, k: int) -> Formula:
        """Formula over the fragment denoting ``members()[k]``; checked against ``denote``."""
        f = self._build(k)
        if denote(f, self.sig).bits != int(self.sets[k]):
            raise ClosureWitnessError(f"witness for set #{k} has the wrong denotation")
        return f

    def _build(self, k: int) -> Formula:
        memo = self._witnesses
        stack = [k]
        while stack:
            i = stack[-1]
            if i in memo:
                stack.pop()
                continue
            op = int(self.ops[i])
            if op == _ATOM:
                memo[i] = Atom(self.sig.atoms[int(self.left[i])])
            elif op == Connective.BOT:
                memo[i] = BOT
            else:
                l, r = int(self.left[i]), int(self.right[i])
                pending = [j for j in (l, r) if j not in memo]
                if pending:
                    stack.extend(pending)
                    continue
                cls = {Connective.AND: And, Connective.OR: Or, Connective.IMPLIES: Implies}[op]
                memo[i] = cls(memo[l], memo[r])
            stack.pop()
        return memo[k]


class _Seen:
    """Packed membership bitmap over all 2**(3**n) candidate sets."""

    def __init__(self, width: int):
        self.bm = np.zeros(((1 << width) + 7) // 8, dtype=np.uint8)

    def has(self, vals: np.ndarray) -> np.ndarray:
        return ((self.bm[vals >> 3] >> (vals & 7).astype(np.uint8)) & 1).astype(bool)

    def add(self, vals: np.ndarray) -> None:
        np.bitwise_or.at(self.bm, vals >> 3, (1 << (vals & 7)).astype(np.uint8))


def _blocks(L: int, prev: int):
    """Row blocks ``(i0, i1, j0)`` covering pairs with an operand of index >= prev.

    Rows below ``prev`` only pair with new columns; later rows pair with all.
    """
    for lo, hi, j0 in ((0, prev, prev), (prev, L, 0)):
        if lo >= hi or j0 >= L:
            continue
        step = max(1, _CHUNK // (L - j0))
        for i0 in range(lo, hi, step):
            yield i0, min(hi, i0 + step), j0


def fragment_closure(
    sig: Signature, frag, target: InterpSet | None = None, max_sets: int | None = None
) -> ClosureFamily:
    """Least family of denotations over ``sig`` closed under the fragment's connectives.

    With ``target`` the run stops as soon as that set has been derived.
    ``max_sets`` aborts with ``RuntimeError`` once the family grows past it.
    """
    if len(sig) > MAX_ATOMS:
        raise SignatureTooLarge(f"closure supports at most {MAX_ATOMS} atoms, got {len(sig)}")
    frag = frozenset(Connective(c) for c in frag)
    lay = layout(len(sig))
    seen = _Seen(lay.size)

    sets, ops, left, right = [], [], [], []

    def seed(bits, op, l):
        arr = np.array([bits], dtype=np.uint32)
        if not seen.has(arr)[0]:
            seen.add(arr)
            sets.append(arr)
            ops.append(np.array([op], dtype=np.int8))
            left.append(np.array([l], dtype=np.int64))
            right.append(np.array([-1], dtype=np.int64))

    if Connective.BOT in frag:
        seed(0, Connective.BOT, -1)
    for k in range(len(sig)):
        seed(lay.twos[k], _ATOM, k)

    kernels = {
        Connective.AND: lambda a, b: a & b,
        Connective.OR: lambda a, b: a | b,
        Connective.IMPLIES: lambda a, b: implication_bits(a, b, lay),
    }
    active = [c for c in (Connective.AND, Connective.OR, Connective.IMPLIES) if c in frag]
    want = None if target is None else np.array([target.bits], dtype=np.uint32)

    if not sets:
        empty = np.zeros(0, dtype=np.int64)
        return ClosureFamily(sig, frag, np.zeros(0, dtype=np.uint32), empty.astype(np.int8), empty, empty, True, 0)
    F = np.concatenate(sets)
    S_ops, S_l, S_r = np.concatenate(ops), np.concatenate(left), np.concatenate(right)
    prev, rounds = 0, 0
    done = want is not None and seen.has(want)[0]
    complete = False

    while not done:
        L = len(F)
        if not active:
            complete = True
            break
        new_sets, new_ops, new_l, new_r = [], [], [], []
        for op in active:
            for i0, i1, j0 in _blocks(L, prev):
                vals = kernels[op](F[i0:i1, None], F[None, j0:]).ravel()
                fresh = np.flatnonzero(~seen.has(vals))
                if not len(fresh):
                    continue
                _, first = np.unique(vals[fresh], return_index=True)
                pos = fresh[np.sort(first)]
                vals = vals[pos]
                ii, jj = np.divmod(pos, L - j0)
                seen.add(vals)
                new_sets.append(vals)
                new_ops.append(np.full(len(vals), op, dtype=np.int8))
                new_l.append(ii + i0)
                new_r.append(jj + j0)
                if want is not None and seen.has(want)[0]:
                    done = True
                    break
            if done:
                break
        rounds += 1
        if not new_sets:
            complete = True
            break
        prev = L
        F = np.concatenate([F] + new_sets)
        S_ops = np.concatenate([S_ops] + new_ops)
        S_l = np.concatenate([S_l] + new_l)
        S_r = np.concatenate([S_r] + new_r)
        if max_sets is not None and len(F) > max_sets:
            raise RuntimeError(f"closure exceeded {max_sets} sets after {rounds} rounds")

    return ClosureFamily(sig, frag, F, S_ops, S_l, S_r, complete, rounds)


def is_definable(f: Formula, frag, sig: Signature | None = None) -> tuple[bool, Formula | None]:
    """Whether some fragment formula has the same denotation as ``f``, plus one such formula."""
    if sig is None:
        sig = atoms(f)
    target = denote(f, sig)
    fam = fragment_closure(sig, frag, target=target)
    k = fam.index(target)
    if k is None:
        return False, None
    return True, fam.witness(k)
