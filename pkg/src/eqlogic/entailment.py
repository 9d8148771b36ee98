"""Entailment and equivalence relations between formulas.

All relations compare the three model sets of a formula over a shared
signature: its denotation, the classical part of it, and its equilibrium
models.  Strong entailment (equilibrium models of ``a & g`` are equilibrium
models of ``b & g`` for every context ``g``) is decided without enumerating
contexts, and a refuting context is built when it fails.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .core import Interpretation, Signature, is_classical, total_of
from .denotation import denote, equilibrium_of, equilibrium_models
from .formula import TOP, And, Atom, Formula, Implies, atoms, conj, render
from .intset import InterpSet, classical, down


class EntailmentKind(enum.Enum):
    G3 = "g3"
    CLASSICAL = "classical"
    SKEPTICAL = "skeptical"
    CREDULOUS = "credulous"
    WEAK = "weak"
    STRONG = "strong"
    PEARCE = "pearce"


class EquivalenceKind(enum.Enum):
    G3 = "g3"
    CLASSICAL = "classical"
    WEAK = "weak"
    STRONG = "strong"


class WitnessError(RuntimeError):
    """A constructed counterexample failed its own check; this is a bug."""


@dataclass(frozen=True)
class Witness:
    """Context refuting ``a`` strongly entails ``b``.

    ``model`` is an equilibrium model of ``a & context`` that is not one of
    ``b & context``.  ``condition`` says which half of the characterisation
    failed: 1 for classical entailment, 2 for the down-closure inclusion.
    """

    context: Formula
    model: Interpretation
    condition: int

    def check(self, a: Formula, b: Formula, sig: Signature) -> bool:
        left = equilibrium_models(And(a, self.context), sig)
        right = equilibrium_models(And(b, self.context), sig)
        return self.model in left and self.model not in right

    def __str__(self):
        return f"context {render(self.context)}, model {self.model}"


def _sig_for(sig: Signature | None, *fs: Formula) -> Signature:
    return atoms(*fs) if sig is None else sig


def strongly_entails_sets(da: InterpSet, db: InterpSet) -> bool:
    """Strong entailment from denotations: classical entailment plus
    ``down(classical(da)) & db <= da``."""
    return classical(da) <= classical(db) and (down(classical(da)) & db) <= da


def entails_strong(a: Formula, b: Formula, sig: Signature | None = None) -> bool:
    sig = _sig_for(sig, a, b)
    return strongly_entails_sets(denote(a, sig), denote(b, sig))


def entails(a: Formula, b: Formula, kind: EntailmentKind | str, sig: Signature | None = None) -> bool:
    kind = EntailmentKind(kind)
    sig = _sig_for(sig, a, b)
    if kind is EntailmentKind.STRONG:
        return entails_strong(a, b, sig)
    da, db = denote(a, sig), denote(b, sig)
    if kind is EntailmentKind.G3:
        return da <= db
    if kind is EntailmentKind.CLASSICAL:
        return classical(da) <= classical(db)
    ea = equilibrium_of(da)
    if kind is EntailmentKind.SKEPTICAL:
        return ea <= classical(db)
    if kind is EntailmentKind.CREDULOUS:
        return bool(ea & classical(db))
    if kind is EntailmentKind.WEAK:
        return ea <= equilibrium_of(db)
    # Pearce's equilibrium entailment falls back to classical entailment
    # for tautologies and for formulas without equilibrium models.
    if da != InterpSet.full(sig) and ea:
        return ea <= classical(db)
    return classical(da) <= classical(db)


def equivalent(a: Formula, b: Formula, kind: EquivalenceKind | str, sig: Signature | None = None) -> bool:
    kind = EquivalenceKind(kind)
    sig = _sig_for(sig, a, b)
    if kind is EquivalenceKind.STRONG:
        return entails_strong(a, b, sig) and entails_strong(b, a, sig)
    da, db = denote(a, sig), denote(b, sig)
    if kind is EquivalenceKind.G3:
        return da == db
    if kind is EquivalenceKind.CLASSICAL:
        return classical(da) == classical(db)
    return equilibrium_of(da) == equilibrium_of(db)


def check_sufficient_condition(a: Formula, b: Formula, sig: Signature | None = None) -> bool:
    """Cheap test: ``a`` classically entails ``b`` and ``b`` entails ``a`` in G3.

    A true result implies ``entails_strong(a, b)``; false says nothing.
    """
    sig = _sig_for(sig, a, b)
    return entails(a, b, EntailmentKind.CLASSICAL, sig) and entails(b, a, EntailmentKind.G3, sig)


def gamma_v(v: Interpretation) -> Formula:
    """Conjunction of the atoms true in ``v``, in signature order."""
    if not is_classical(v):
        raise ValueError(f"expected a classical interpretation, got {v}")
    return conj([Atom(p) for p, t in zip(v.sig.atoms, v.values) if t == 2])


def _context_for(u: Interpretation) -> Formula:
    # atoms true in u, then p -> q for every ordered pair of distinct atoms undefined in u
    undefined = [p for p, t in zip(u.sig.atoms, u.values) if t == 1]
    parts: list[Formula] = [Atom(p) for p, t in zip(u.sig.atoms, u.values) if t == 2]
    parts += [Implies(Atom(p), Atom(q)) for p in undefined for q in undefined if p != q]
    return conj(parts) if parts else TOP


def strong_entailment_witness(a: Formula, b: Formula, sig: Signature | None = None) -> Witness | None:
    """``None`` if ``a`` strongly entails ``b``, otherwise a verified :class:`Witness`."""
    sig = _sig_for(sig, a, b)
    da, db = denote(a, sig), denote(b, sig)
    bad = classical(da) - classical(db)
    if bad:
        v = next(iter(bad))
        w = Witness(gamma_v(v), v, 1)
    else:
        bad = (down(classical(da)) & db) - da
        if not bad:
            return None
        u = next(iter(bad))
        w = Witness(_context_for(u), total_of(u), 2)
    if not w.check(a, b, sig):
        raise WitnessError(f"constructed witness does not refute: {w}")
    return w
