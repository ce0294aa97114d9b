"""Chord diagrams, orthogonal invariants, and the graph-to-tensor dictionary.

A chord diagram on 2N points indexes an O(n)-invariant tensor beta_c; the
coinvariants z_c form the dual basis.  Splitting the 2N positions into blocks
turns a chord diagram into a graph, and block-symmetrizing beta_c turns a
graph into an invariant tensor: that is the map phi, inverted by psi.
"""

from ckhopf.chords import (
    BlockShape,
    ChordDiagram,
    beta,
    chord_from_graph,
    enumerate_chords,
    pair_raw,
    z_coinv,
)
from ckhopf.corpus import named_graph
from ckhopf.poly import GraphPoly
from ckhopf.tensors import phi, project, psi

print("Chord diagrams are counted by double factorials:")
for N in range(5):
    print(f"  N={N}: {len(enumerate_chords(N))}")
print()

print("beta_c and z_c are dual bases: the evaluation matrix at N=2, n=3 is")
cs = enumerate_chords(2)
for c1 in cs:
    row = [pair_raw(beta(c1, 3), z_coinv(c2, 3)) for c2 in cs]
    print("  ", row)
print()

print("A graph is a chord diagram plus a block structure:")
bubble = named_graph("bubble")
shape, c = chord_from_graph(bubble)
print("  bubble =", f"shape {shape} with diagram {c}")
print()

print("phi(bubble, 2): block-symmetrized beta, summing x_i x_j over both blocks:")
for (blocks, ext), coeff in phi(bubble, 2).terms():
    print("  ", coeff, "blocks", blocks, "external", ext)
print()

print("psi evaluates an invariant lift against the coinvariants and recovers")
print("the graph exactly:")
for name in ("loop1", "bubble", "twoleg", "tadpole2"):
    g = named_graph(name)
    back = psi(phi(g, 4))
    print(f"  psi(phi({name}, 4)) == {name}:", back == GraphPoly.from_graph(g))
print()

print("Dropping the top basis direction is compatible with phi (naturality):")
print("  project(phi(bubble, 3)) == phi(bubble, 2):",
      project(phi(bubble, 3)) == phi(bubble, 2))
