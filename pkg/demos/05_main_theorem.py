"""The main equivalence: graph insertion equals tensor contraction.

phi carries the insertion product of graphs to the canonical pre-Lie product
of polynomial-vector-field-type tensors: a block of the first tensor is
contracted against the external monomial of the second, exactly mirroring the
grafting of one graph into a vertex of the other.
"""

from ckhopf.corpus import connected_corpus, named_graph
from ckhopf.insertion import insertion_product
from ckhopf.poly import GraphPoly
from ckhopf.tensors import phi, phi_poly, tensor_delta, tensor_mul, tensor_prelie
from ckhopf.tensors import InvariantTensor, PairTensor
from ckhopf.graphs import disjoint_union

loop1 = named_graph("loop1")
twoleg = named_graph("twoleg")
bubble = named_graph("bubble")

print("Tensor side of loop1 o twoleg = 2 bubble, at n = 4:")
lhs = tensor_prelie(phi(loop1, 4), phi(twoleg, 4))
print("  tensor_prelie(phi(loop1), phi(twoleg)) == 2 phi(bubble):",
      lhs == phi(bubble, 4).scale(2))
print()

print("phi is an algebra map and sends connected graphs to primitives:")
print("  phi(loop1 u bubble) == phi(loop1) phi(bubble):",
      phi(disjoint_union(loop1, bubble), 3) == tensor_mul(phi(loop1, 3), phi(bubble, 3)))
d = tensor_delta(phi(bubble, 6), 3, 3)
one = InvariantTensor.unit(3)
print("  delta(phi(bubble)) == phi (x) 1 + 1 (x) phi:",
      d == PairTensor.outer(phi(bubble, 3), one) + PairTensor.outer(one, phi(bubble, 3)))
print()

print("Equivariance over every ordered pair of connected corpus graphs with an")
print("internal edge and at most four edges in total, at n = total edges:")
plus = connected_corpus(3)
pairs = [(g1, g2) for g1 in plus for g2 in plus if len(g1.edges) + len(g2.edges) <= 4]
for g1, g2 in pairs:
    n = len(g1.edges) + len(g2.edges)
    graph_side = phi_poly(
        insertion_product(GraphPoly.from_graph(g1), GraphPoly.from_graph(g2)), n
    )
    tensor_side = tensor_prelie(phi(g1, n), phi(g2, n))
    assert graph_side == tensor_side
print(f"  phi(G1 o G2) == phi(G1) o phi(G2) on {len(pairs)} pairs")
