"""Size of the family of sets definable in each connective fragment.

    python scripts/closure_census.py --atoms 2
    python scripts/closure_census.py --atoms 3 --max-sets 200000
"""

import argparse
import time
from dataclasses import dataclass

from eqlogic import Signature
from eqlogic.expressiveness import fragment_closure, fragment_name, parse_fragment
from eqlogic.intset import total_closed_count

FRAGMENTS = ["bot,and,or", "bot,or,imp", "bot,and,imp", "and,imp", "or,imp", "imp"]


@dataclass
class CensusConfig:
    atoms: int = 2
    max_sets: int | None = None
    fragments: tuple[str, ...] = tuple(FRAGMENTS)


def run(cfg: CensusConfig):
    sig = Signature(tuple("pqr"[: cfg.atoms]))
    print(f"{cfg.atoms} atoms, {total_closed_count(cfg.atoms)} total-closed sets")
    print(f"{'fragment':<16}{'sets':>10}{'rounds':>8}{'complete':>10}{'seconds':>9}")
    for text in cfg.fragments:
        frag = parse_fragment(text)
        t0 = time.perf_counter()
        try:
            fam = fragment_closure(sig, frag, max_sets=cfg.max_sets)
        except RuntimeError:
            print(f"{fragment_name(frag):<16}{'>' + str(cfg.max_sets):>10}{'-':>8}{'False':>10}{time.perf_counter() - t0:>9.2f}")
            continue
        dt = time.perf_counter() - t0
        print(f"{fragment_name(frag):<16}{len(fam):>10}{fam.rounds:>8}{str(fam.complete):>10}{dt:>9.2f}")


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--atoms", type=int, default=2, choices=[1, 2, 3])
    ap.add_argument("--max-sets", type=int, default=None)
    ap.add_argument("--fragments", nargs="*", default=FRAGMENTS)
    a = ap.parse_args()
    run(CensusConfig(a.atoms, a.max_sets, tuple(a.fragments)))


if __name__ == "__main__":
    main()
