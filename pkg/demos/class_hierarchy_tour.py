"""Tour of the class hierarchy on the bundled example games.

Each example is the smallest digraph separating two adjacent classes; the
witnesses printed here are the positions whose (g, g_minus) pair or move
structure breaks the stronger property.
"""

from grundylab import classify, enumerate_subgame, load_fixture, sg_labels
from grundylab.fixtures import FIXTURE_NAMES, fixture_roots

ORDER = ["domestic", "tame", "pet", "miserable", "strongly_miserable",
         "forced", "returnable"]

for name in FIXTURE_NAMES:
    game = load_fixture(name)
    lg = sg_labels(enumerate_subgame(game, fixture_roots(name)))
    report = classify(lg)
    held = [p for p in ORDER if report.verdicts[p]]
    print(f"{name}  ({len(lg.graph)} nodes)")
    print(f"  labels: " + "  ".join(
        f"{x}{tuple(lab)}" for x, lab in sorted(lg.labels.items())))
    print(f"  holds: {', '.join(held) or '(nothing)'}")
    for pred in ORDER:
        if not report.verdicts[pred]:
            pos, lab, reason = report.witnesses[pred]
            print(f"  not {pred}: {pos} {tuple(lab)} ({reason})")
            break
    print()
