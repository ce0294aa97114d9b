"""Half-edge graphs: building, canonical forms, contraction and extraction.

A graph is a set of half-edges partitioned into edges (pairs) and vertices
(arbitrary parts), with some 1-valent vertices marked external.  Run this
script to walk through the basic operations on the named corpus.
"""

from ckhopf.corpus import named_graph
from ckhopf.graphs import (
    automorphism_count,
    canonical_key,
    connected_components,
    contract_edge,
    contract_subgraph,
    disjoint_union,
    enumerate_graphs,
    extract_subgraph,
    is_isomorphic,
    relabel,
)

loop1 = named_graph("loop1")
bubble = named_graph("bubble")
twoleg = named_graph("twoleg")

print("The bubble: two vertices joined by two parallel edges.")
print(" ", canonical_key(bubble).decode())
print("  grade (edges, internal, external):", tuple(bubble.grade()))
print("  |Aut| =", automorphism_count(bubble), "(swap the vertices, swap the edges)")
print()

print("Canonical keys are relabeling invariant:")
shuffled = relabel(bubble, {0: 3, 1: 2, 2: 1, 3: 0})
print("  same key after relabeling:", canonical_key(shuffled) == canonical_key(bubble))
print()

print("Contracting one edge of the bubble merges its endpoints into a loop:")
once = contract_edge(bubble, bubble.internal_edges()[0])
print("  bubble/e is isomorphic to loop1:", is_isomorphic(once, loop1))
print("Contracting the remaining loop leaves a single empty vertex:")
twice = contract_subgraph(bubble, bubble.internal_edges())
print("  result:", twice)
print()

print("Extracting one edge of the bubble adds fresh external legs:")
ex = extract_subgraph(bubble, [bubble.internal_edges()[0]])
print("  extract(bubble, e) is isomorphic to twoleg:", is_isomorphic(ex, twoleg))
print()

print("Disjoint unions multiply automorphisms (with a wreath factor):")
double = disjoint_union(loop1, loop1)
print("  |Aut(loop1 u loop1)| =", automorphism_count(double))
print("  components:", len(connected_components(double)))
print()

print("Isomorphism classes by edge count:")
for n in range(4):
    row = {f: len(enumerate_graphs(n, f)) for f in ("all", "connected", "connected_plus")}
    print(f"  {n} edges: {row}")
