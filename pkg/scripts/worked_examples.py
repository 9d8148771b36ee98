"""Print the standard worked examples: models, equilibrium models, a strong
entailment counterexample and the choice-rule comparison."""

from eqlogic import Signature
from eqlogic.denotation import denote, equilibrium_models
from eqlogic.entailment import entails_strong, strong_entailment_witness
from eqlogic.formula import And, parse, render
from eqlogic.intset import classical

PQ = Signature.of("p", "q")
PQR = Signature.of("p", "q", "r")


def show(label, s):
    print(f"{label:<37} {' '.join(s.to_strings()) or '(none)'}")


def main():
    f = parse("~p -> q")
    show("models of ~p -> q", denote(f, PQ))
    show("classical models of ~p -> q", classical(denote(f, PQ)))
    show("equilibrium models of ~p -> q", equilibrium_models(f, PQ))
    show("equilibrium models of p | (~p -> q)", equilibrium_models(parse("p | (~p -> q)"), PQ))
    show("equilibrium models of r | (~p -> q)", equilibrium_models(parse("r | (~p -> q)"), PQR))

    a, b = parse("p | q"), parse("~p -> q")
    print(f"\n{render(a)} strongly entails {render(b)}: {entails_strong(a, b, PQ)}")
    w = strong_entailment_witness(a, b, PQ)
    print(f"  refuting context {render(w.context)}, model {w.model}")

    loop = parse("(p -> q) & (q -> p)")
    choice = parse("(~p -> q) & (~q -> p)")
    print()
    show("eq. models of (p | q) & loop", equilibrium_models(And(a, loop), PQ))
    show("eq. models of choice & loop", equilibrium_models(And(choice, loop), PQ))


if __name__ == "__main__":
    main()
