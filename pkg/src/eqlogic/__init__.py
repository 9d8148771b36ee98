"""Denotational semantics for here-and-there logic and equilibrium models."""

from .core import (
    Interpretation,
    Signature,
    decode,
    encode,
    is_classical,
    leq,
    lt,
    total_of,
)
from .denotation import (
    denote,
    denote_implication_union,
    denote_negation,
    equilibrium_models,
    is_equilibrium,
    valuate,
)
from .entailment import (
    EntailmentKind,
    EquivalenceKind,
    Witness,
    check_sufficient_condition,
    entails,
    entails_strong,
    equivalent,
    gamma_v,
    strong_entailment_witness,
)
from .expressiveness import Connective, fragment_closure, is_definable, parse_fragment
from .formula import And, Atom, Bot, Formula, Implies, Or, atoms, parse, render, subformulas
from .intset import InterpSet, classical, complement, down, is_total_closed, up

__all__ = [name for name in dir() if not name.startswith("_")]
