"""Denotations of formulas and their equilibrium models.

``denote`` builds the set of three-valued models of a formula by structural
induction over the tree, using only set operations.  ``valuate`` is the
pointwise truth-table evaluation and is kept as an independent check.
"""

from __future__ import annotations

from .core import Interpretation, Signature, SignatureError, as_interpretation, is_classical
from .formula import And, Atom, Bot, Formula, Implies, Or, atom_names, atoms
from .intset import InterpSet, Layout, classical, complement, down, down_bits, up

FALSE, UNDEFINED, TRUE = 0, 1, 2


class UnknownAtomError(SignatureError):
    pass


def _require_atoms(f: Formula, sig: Signature) -> None:
    missing = atom_names(f) - set(sig.atoms)
    if missing:
        raise UnknownAtomError(f"atoms {sorted(missing)} not in signature {sig}")


def valuate(v: Interpretation, f: Formula) -> int:
    if isinstance(f, Bot):
        return FALSE
    if isinstance(f, Atom):
        if f.name not in v.sig:
            raise UnknownAtomError(f"atom {f.name!r} not in signature {v.sig}")
        return v[f.name]
    a = valuate(v, f.left)
    b = valuate(v, f.right)
    if isinstance(f, And):
        return min(a, b)
    if isinstance(f, Or):
        return max(a, b)
    return TRUE if a <= b else b


def implication_bits(a, b, lay: Layout):
    """Bit-level image of implication: ``(~A | B) & down(classical(~A | B))``."""
    x = ((lay.full & ~a) if isinstance(a, int) else (~a & lay.full)) | b
    return x & down_bits(x & lay.classical, lay)


def implication(a: InterpSet, b: InterpSet) -> InterpSet:
    a._check(b)
    return InterpSet(a.sig, implication_bits(a.bits, b.bits, a.layout))


def denote(f: Formula, sig: Signature | None = None) -> InterpSet:
    """Set of all interpretations over ``sig`` that make ``f`` true (value 2)."""
    if sig is None:
        sig = atoms(f)
    _require_atoms(f, sig)
    memo: dict[Formula, InterpSet] = {}

    def go(g: Formula) -> InterpSet:
        hit = memo.get(g)
        if hit is not None:
            return hit
        if isinstance(g, Bot):
            out = InterpSet.empty(sig)
        elif isinstance(g, Atom):
            out = InterpSet.atom(sig, g.name)
        elif isinstance(g, And):
            out = go(g.left) & go(g.right)
        elif isinstance(g, Or):
            out = go(g.left) | go(g.right)
        elif isinstance(g, Implies):
            out = implication(go(g.left), go(g.right))
        else:
            raise TypeError(f"not a formula: {g!r}")
        memo[g] = out
        return out

    return go(f)


def denote_implication_union(a: InterpSet, b: InterpSet) -> InterpSet:
    """Implication written as a union; agrees with :func:`implication` on total-closed sets."""
    na = complement(a)
    return down(classical(na)) | (na & down(classical(b))) | b


def denote_negation(a: InterpSet) -> InterpSet:
    """Models of a negation: interpretations whose totalisation is a classical countermodel."""
    return down(classical(complement(a)))


def equilibrium_of(d: InterpSet) -> InterpSet:
    """Classical members of ``d`` not above any non-classical member of ``d``."""
    return classical(d) - up(d - InterpSet.all_classical(d.sig))


def equilibrium_models(f: Formula, sig: Signature | None = None) -> InterpSet:
    if sig is None:
        sig = atoms(f)
    return equilibrium_of(denote(f, sig))


def is_equilibrium(v: Interpretation | str, f: Formula, sig: Signature | None = None) -> bool:
    """Fixpoint test: the only model of ``f`` at or below ``v`` is ``v`` itself."""
    if isinstance(v, Interpretation):
        sig = v.sig if sig is None else sig
    elif sig is None:
        sig = atoms(f)
    v = as_interpretation(v, sig)
    if not is_classical(v):
        raise ValueError(f"equilibrium models are classical; got {v}")
    single = InterpSet.of(sig, [v])
    return denote(f, sig) & down(single) == single
