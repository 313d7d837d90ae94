"""Ranking objects by how exceptional the conditionals make them.

Six people and a "friends with" table, plus two defeasible rules. The
ranking algorithm settles the unexceptional objects first and pushes the
rest upward, producing the least ranking that satisfies the rules. The
enumeration oracle then confirms the minimality claim by brute force.
"""

from pathlib import Path

from dfca import (
    KnowledgeBase,
    context_preference,
    delta_valid,
    enumerate_ranked_models,
    load_conditionals,
    load_context,
    object_rank,
)

DATA = Path(__file__).resolve().parent.parent / "data"


def main():
    context = load_context(DATA / "friends.cxt")
    kb = KnowledgeBase(load_conditionals(DATA / "friends.kb"))

    print("the rules:")
    for c in kb:
        print(f"  {c}")
    print("\nevery subset plausibly answerable?", delta_valid(context, kb))

    ranked, partition = object_rank(context, kb)
    print("\nranks, least exceptional first:")
    for level, stratum in enumerate(partition.strata):
        print(f"  rank {level}: {', '.join(context.object_names(stratum))}")

    models = enumerate_ranked_models(context, kb)
    print(f"\nthe context admits {len(models)} satisfying rankings in total")
    least = [
        m for m in models
        if all(context_preference(m, other).le for other in models)
    ]
    print("rankings below all others:", len(least))
    print("that one equals the computed ranking?",
          least[0].ranking == ranked.ranking)


if __name__ == "__main__":
    main()
