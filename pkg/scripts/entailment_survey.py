"""Count how the entailment relations relate on all small formula pairs.

For every ordered pair of formulas up to ``--max-nodes`` nodes over p, q,
tally which of G3, classical, weak and strong entailment hold, and how
often the cheap sufficient condition decides strong entailment.
"""

import argparse
from collections import Counter
from dataclasses import dataclass

from eqlogic import Signature
from eqlogic.denotation import denote, equilibrium_of
from eqlogic.entailment import strongly_entails_sets
from eqlogic.formula import enumerate_formulas
from eqlogic.intset import classical


@dataclass
class SurveyConfig:
    max_nodes: int = 5
    atoms: tuple[str, ...] = ("p", "q")


def run(cfg: SurveyConfig):
    sig = Signature(cfg.atoms)
    dens = {denote(f, sig) for f in enumerate_formulas(list(cfg.atoms), cfg.max_nodes)}
    rows = [(d, classical(d), equilibrium_of(d)) for d in dens]
    tally = Counter()
    for da, ca, ea in rows:
        for db, cb, eb in rows:
            strong = strongly_entails_sets(da, db)
            tally["pairs"] += 1
            tally["g3"] += da <= db
            tally["classical"] += ca <= cb
            tally["weak"] += ea <= eb
            tally["strong"] += strong
            tally["strong, not g3"] += strong and not da <= db
            tally["weak, not strong"] += (ea <= eb) and not strong
            tally["sufficient condition"] += ca <= cb and db <= da
    print(f"{len(dens)} distinct denotations from formulas of up to {cfg.max_nodes} nodes")
    for k, v in tally.items():
        print(f"  {k:<22}{v:>8}")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-nodes", type=int, default=5)
    run(SurveyConfig(ap.parse_args().max_nodes))


if __name__ == "__main__":
    main()
