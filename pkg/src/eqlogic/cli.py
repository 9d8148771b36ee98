"""Command-line front end.

    eqlogic models "~p -> q" [--sig p,q] [--classical] [--json]
    eqlogic eq-models "r | (~p -> q)" --sig p,q,r
    eqlogic check strong "p | q" "~p -> q" --witness
    eqlogic definable "p | q" bot,and,imp

Exit status: 0 success / relation holds, 1 relation fails (or not
definable), 2 usage or parse error.  ``--json`` prints one object of the
form ``{"query": {...}, "signature": [...], "result": {...}}``.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass, field

from .core import Signature, SignatureError
from .denotation import denote, equilibrium_of
from .entailment import (
    EntailmentKind,
    EquivalenceKind,
    WitnessError,
    entails,
    equivalent,
    strong_entailment_witness,
)
from .expressiveness import SignatureTooLarge, fragment_closure, fragment_name, parse_fragment
from .formula import ParseError, atoms, parse, render
from .intset import classical

CHECK_KINDS = [k.value for k in EntailmentKind] + ["eq-" + k.value for k in EquivalenceKind]


class UsageError(Exception):
    pass


@dataclass
class QueryConfig:
    command: str
    formulas: list[str]
    sig: str | None = None
    json: bool = False
    kind: str | None = None
    options: dict = field(default_factory=dict)

    def parsed(self):
        fs = [parse(t) for t in self.formulas]
        natural = atoms(*fs)
        if self.sig is None:
            return fs, natural
        sig = Signature.parse(self.sig)
        missing = set(natural.atoms) - set(sig.atoms)
        if missing:
            raise UsageError(f"--sig {self.sig} does not cover atoms {sorted(missing)}")
        return fs, sig


def _models(cfg: QueryConfig):
    (f,), sig = cfg.parsed()
    d = denote(f, sig)
    if cfg.options.get("classical"):
        d = classical(d)
    listing = d.to_strings()
    return 0, {"models": listing, "count": len(listing)}, " ".join(listing)


def _eq_models(cfg: QueryConfig):
    (f,), sig = cfg.parsed()
    listing = equilibrium_of(denote(f, sig)).to_strings()
    return 0, {"models": listing, "count": len(listing)}, " ".join(listing)


def _check(cfg: QueryConfig):
    (a, b), sig = cfg.parsed()
    kind = cfg.kind
    if kind.startswith("eq-"):
        holds = equivalent(a, b, EquivalenceKind(kind[3:]), sig)
    else:
        holds = entails(a, b, EntailmentKind(kind), sig)
    result = {"holds": holds}
    lines = ["holds" if holds else "fails"]
    if not holds and cfg.options.get("witness") and kind in ("strong", "eq-strong"):
        pair = (a, b)
        w = strong_entailment_witness(a, b, sig)
        if w is None:
            pair = (b, a)
            w = strong_entailment_witness(b, a, sig)
        if not w.check(*pair, sig):
            raise WitnessError(f"witness failed re-verification: {w}")
        result["witness"] = {
            "gamma": render(w.context),
            "model": str(w.model),
            "condition": w.condition,
            "direction": [render(pair[0]), render(pair[1])],
        }
        if pair[0] is not a:
            lines.append(f"direction = {render(b)} => {render(a)}")
        lines.append(f"gamma = {render(w.context)}")
        lines.append(f"model = {w.model}")
    return (0 if holds else 1), result, "\n".join(lines)


def _definable(cfg: QueryConfig):
    (f,), sig = cfg.parsed()
    frag = parse_fragment(cfg.options["fragment"])
    target = denote(f, sig)
    fam = fragment_closure(sig, frag, target=target)
    k = fam.index(target)
    result = {
        "fragment": fragment_name(frag),
        "definable": k is not None,
        "closure_size": len(fam),
        "closure_complete": fam.complete,
        "witness": None,
    }
    if k is None:
        return 1, result, "no"
    result["witness"] = render(fam.witness(k))
    return 0, result, f"yes\nwitness = {result['witness']}"


_HANDLERS = {"models": _models, "eq-models": _eq_models, "check": _check, "definable": _definable}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--sig", help="comma-separated atoms in the order to use (default: alphabetical atoms)")
    common.add_argument("--json", action="store_true", help="print a JSON object instead of text")

    p = argparse.ArgumentParser(prog="eqlogic", description="Here-and-there denotations and equilibrium models.")
    sub = p.add_subparsers(dest="command", required=True)

    m = sub.add_parser("models", parents=[common], help="list the three-valued models of a formula")
    m.add_argument("formula")
    m.add_argument("--classical", action="store_true", help="only classical models")

    e = sub.add_parser("eq-models", parents=[common], help="list equilibrium models")
    e.add_argument("formula")

    c = sub.add_parser("check", parents=[common], help="decide an entailment or equivalence")
    c.add_argument("kind", choices=CHECK_KINDS)
    c.add_argument("a")
    c.add_argument("b")
    c.add_argument("--witness", action="store_true", help="on a failed strong check, print a refuting context")

    d = sub.add_parser("definable", parents=[common], help="is the formula expressible in a connective fragment")
    d.add_argument("formula")
    d.add_argument("fragment", help="comma-separated subset of bot,and,or,imp")
    return p


def config_from_args(ns: argparse.Namespace) -> QueryConfig:
    if ns.command == "check":
        return QueryConfig("check", [ns.a, ns.b], ns.sig, ns.json, kind=ns.kind, options={"witness": ns.witness})
    opts = {}
    if ns.command == "models":
        opts["classical"] = ns.classical
    if ns.command == "definable":
        opts["fragment"] = ns.fragment
    return QueryConfig(ns.command, [ns.formula], ns.sig, ns.json, options=opts)


def main(argv: list[str] | None = None) -> int:
    ns = build_parser().parse_args(argv)
    cfg = config_from_args(ns)
    try:
        _, sig = cfg.parsed()
        code, result, text = _HANDLERS[cfg.command](cfg)
    except (ParseError, SignatureError, SignatureTooLarge, UsageError, ValueError) as exc:
        print(f"eqlogic: error: {exc}", file=sys.stderr)
        return 2
    if cfg.json:
        query = {k: v for k, v in asdict(cfg).items() if k != "json"}
        print(json.dumps({"query": query, "signature": list(sig.atoms), "result": result}))
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
