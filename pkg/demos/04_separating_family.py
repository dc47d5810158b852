"""A family where adding one isolated vertex genuinely helps.

Two copies of K_{2k+1}-minus-k-edges (built from the classical Hamiltonian
cycle decomposition) wired together at k-1 odd-degree endpoints give an
Eulerian graph G with:

    linear arboricity = k        (k-forest witness)
    cover with added vertex = k  (stitch the forests through one vertex)
    plain cover number = k + 1   (counting certificate, no search needed)

So the plain cover number exceeds every structural floor -- degree, odd
vertices, and arboricity -- by one, and the isolated-vertex relaxation is
strictly stronger.
"""

from oddcover import (
    OddCover,
    counterexample,
    degree_profile,
    iso_cover_from_forests,
    verify_cover,
    walecki_cycles,
)

k = 3

# Step 0: the ingredient -- K_{2k+1} decomposes into k Hamiltonian cycles.
cycles = walecki_cycles(k)
print(f"K_{2 * k + 1} as {k} Hamiltonian cycles:")
for c in cycles:
    print(f"  {c}")

# Step 1: the doubled graph.
g, paths, forests, cert = counterexample(k)
delta, v_odd, _ = degree_profile(g)
print(f"\nG: n={g.n}, m={g.m}, delta={delta}, v_odd={v_odd} (Eulerian)")

# Step 2: upper witnesses.
cover = OddCover(g, paths, "path")
print(f"{k + 1}-path decomposition verifies: {verify_cover(cover).valid}")
iso = iso_cover_from_forests(g, forests)
print(f"{k}-forest witness stitches into {iso.count} paths with "
      f"{iso.target.n - g.n} added vertex (verifies: {verify_cover(iso).valid})")

# Step 3: the lower side is pure arithmetic.  Both copies contain vertices
# of degree 2k, so each of k hypothetical paths must cross between the
# copies; only k-1 crossing edges exist, forcing a repeat that costs two
# extra edge slots:
print(f"\nslots needed  = m + 2 = {cert['slots_needed']}")
print(f"slots offered = k(4k+1) = {cert['slots_available']}")
print(f"k paths impossible: {cert['holds']}")
print(f"\nconclusion: cover number = {k + 1}, with an isolated vertex = {k}")
