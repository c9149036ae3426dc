"""Closed forms versus brute force on the Wythoff family and Euclid.

The P-positions of the diagonal-move game follow the golden-ratio Beatty
sequence; its misere variant differs in exactly six positions. Euclid's
swap positions are the Fibonacci pairs, up to a gcd factor.
"""

from grundylab import (
    CandidateSets,
    enumerate_subgame,
    sg_labels,
    verify_candidate_sets,
)
from grundylab.zoo import (
    box_roots,
    euclid_swap_oracle,
    make_family,
    wythoff_p,
)

print("first P-position pairs, normal vs misere:")
for n in range(8):
    print(f"  n={n}: {wythoff_p(n)}  {wythoff_p(n, 'misere')}")

game = make_family("wythoff")
lg = sg_labels(enumerate_subgame(game, box_roots(2, 30)))
normal = {p for p, lab in lg.labels.items() if lab.g == 0}
misere = {p for p, lab in lg.labels.items() if lab.g_minus == 0}
print(f"\npositions where the conventions disagree (bound 30): "
      f"{sorted(normal ^ misere)}")

# Euclid: the oracle proposes the swap sets, the verifier certifies them
game = make_family("euclid_grossman")
graph = enumerate_subgame(
    game, [(x, y) for x in range(1, 16) for y in range(1, 16)])
v01 = {x for x in graph.nodes if euclid_swap_oracle("grossman", x) == (0, 1)}
v10 = {x for x in graph.nodes if euclid_swap_oracle("grossman", x) == (1, 0)}
report = verify_candidate_sets(graph, CandidateSets(v01, v10), "miserable")
print(f"\nEuclid swap sets from the Fibonacci oracle verify: {report.ok}")
print("  smallest (0,1) swaps:", sorted(v01)[:6])
print("  smallest (1,0) swaps:", sorted(v10)[:6])
