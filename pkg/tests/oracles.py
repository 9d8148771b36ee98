"""Brute-force reference implementations.

Nothing here touches the bitset kernels: orderings are checked pairwise with
``leq`` and model sets come from truth-table valuation.
"""

from itertools import product

from eqlogic.core import Signature, decode, is_classical, leq, lt, total_of
from eqlogic.denotation import valuate
from eqlogic.formula import And, enumerate_formulas
from eqlogic.intset import InterpSet


def all_interps(sig):
    return [decode(i, sig) for i in range(sig.size)]


def models_by_valuation(f, sig):
    return InterpSet.of(sig, [v for v in all_interps(sig) if valuate(v, f) == 2])


def down_scan(s):
    members = list(s)
    return InterpSet.of(s.sig, [u for u in all_interps(s.sig) if any(leq(u, v) for v in members)])


def up_scan(s):
    members = list(s)
    return InterpSet.of(s.sig, [u for u in all_interps(s.sig) if any(leq(v, u) for v in members)])


def total_closed_scan(s):
    return all(total_of(v) in s for v in s)


def minimal_classical_models(models):
    """Classical members with no strictly smaller member: the textbook definition."""
    ms = list(models)
    return InterpSet.of(
        models.sig, [v for v in ms if is_classical(v) and not any(lt(u, v) for u in ms)]
    )


def equilibrium_by_valuation(f, sig):
    return minimal_classical_models(models_by_valuation(f, sig))


def all_subsets(sig):
    for bits in range(1 << sig.size):
        yield InterpSet(sig, bits)


def total_closed_subsets(sig):
    return [s for s in all_subsets(sig) if total_closed_scan(s)]


def context_denotations(sig, max_nodes):
    """Distinct model sets of every context formula up to ``max_nodes`` nodes, with one formula each."""
    seen = {}
    for g in enumerate_formulas(sig.atoms, max_nodes):
        d = models_by_valuation(g, sig)
        seen.setdefault(d, g)
    return seen


def refutes(a_models, b_models, ctx_models):
    """Equilibrium models of a & ctx that are not equilibrium models of b & ctx."""
    ea = minimal_classical_models(a_models & ctx_models)
    eb = minimal_classical_models(b_models & ctx_models)
    return ea - eb


def sweep_refutation(a, b, sig, contexts):
    """First context (in enumeration order) whose conjunction breaks weak entailment, or None."""
    am, bm = models_by_valuation(a, sig), models_by_valuation(b, sig)
    for d, g in contexts.items():
        if refutes(am, bm, d):
            return g
    return None
