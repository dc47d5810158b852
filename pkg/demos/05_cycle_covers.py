"""Cycle odd-covers of even-degree graphs.

Only even-degree graphs are XORs of cycles.  Peeling the graph into
delta/2 layers of vertex-disjoint cycles (each layer covering every
maximum-degree vertex) and closing each layer's two covering paths with
their shared endpoint edge gives at most delta cycles.  The same two
relaxations as for paths apply: subdivisions reach delta/2 exactly, and an
apex vertex over a forest decomposition reaches the linear arboricity.
"""

from itertools import combinations

from oddcover import (
    Graph,
    cycle_iso_cover,
    cycle_odd_cover,
    cycle_top_cover,
    degree_profile,
    eulerian_random,
    exact_linear_forests,
    peel_cycle_layers,
    verify_cover,
)


def K(n):
    return Graph(n, list(combinations(range(n), 2)))


g = K(5)
print("K5 peels into layers of vertex-disjoint cycles:")
for i, layer in enumerate(peel_cycle_layers(g)):
    print(f"  layer {i}: {layer}")

cover = cycle_odd_cover(g)
delta, _, _ = degree_profile(g)
print(f"\ncycle odd-cover of K5: {cover.count} cycles (budget delta = {delta})")
for c in cover.members:
    print(f"  cycle {c}")
print(f"verified: {verify_cover(cover).valid}\n")

# Random even-degree graphs stay within delta.
for seed in (1, 2, 3):
    g = eulerian_random(16, seed=seed)
    cover = cycle_odd_cover(g)
    delta, _, _ = degree_profile(g)
    print(f"seed {seed}: m={g.m:2d} delta={delta} cycles={cover.count}")

# Subdivision variant: exactly delta/2 cycles.
g = K(5)
h, cover, chains = cycle_top_cover(g)
print(f"\nsubdivision of K5 covered by {cover.count} cycles "
      f"(= delta/2, verified {verify_cover(cover).valid})")

# Apex variant: one extra vertex closes a forest-stitched path cover.
forests = exact_linear_forests(g, 3)
cover = cycle_iso_cover(g, forests)
print(f"K5 with apex vertex: {cover.count} cycles through vertex "
      f"{cover.target.n - 1} (verified {verify_cover(cover).valid})")
