"""Preference orders let a context keep its exceptions and still conclude.

Three chemical elements, one of them atypical: classically "non-metals are
gases" fails because of Carbon, but under a preference order that treats
Helium as more typical than Carbon, the defeasible version holds. The same
tiny example shows what a non-modular order costs: rational monotonicity.
"""

from dfca import (
    Conditional,
    ModularityError,
    PreferentialContext,
    FormalContext,
    StrictOrder,
    extension,
    ranks_from_order,
)
from dfca.formula import And, Atom, Not


def verdict(value):
    return "holds" if value else "does not hold"


def main():
    context = FormalContext(
        ["Helium", "Hydrogen", "Carbon"],
        ["Gas", "Non-metal", "Reactive", "Essential", "Solid", "Abundant"],
        [0b100011, 0b101111, 0b011010],
    )
    non_metal = Atom("Non-metal")
    gas = Atom("Gas")

    print("classically, Non-metal -> Gas:",
          verdict(extension(context, non_metal) & ~extension(context, gas) == 0))
    print("  the counterexample:",
          ", ".join(context.object_names(
              extension(context, non_metal) & ~extension(context, gas))))

    # Helium is more typical than Carbon; Hydrogen stays incomparable
    order = StrictOrder(3, [(0, 2)])
    pc = PreferentialContext(context, order)
    defeasible = Conditional.defeasible(non_metal, gas)
    print(f"\nwith the preference order, {defeasible}:",
          verdict(pc.satisfies(defeasible)))
    print("  typical non-metals:",
          ", ".join(context.object_names(
              order.minimise(extension(context, non_metal)))))

    print("\nis the order modular?", order.is_modular())
    try:
        ranks_from_order(order)
    except ModularityError as exc:
        print("  so it has no rank equivalent:", exc)

    print("\nrational monotonicity needs modularity, and here it fails:")
    probes = [
        Conditional.defeasible(non_metal, gas),
        Conditional.defeasible(non_metal, Not(Atom("Essential"))),
        Conditional.defeasible(And(non_metal, Atom("Essential")), gas),
    ]
    for probe in probes:
        print(f"  {probe}: {verdict(pc.satisfies(probe))}")
    print("  the first two licence strengthening the antecedent; the third refuses")


if __name__ == "__main__":
    main()
