"""Exact-arithmetic graph Hopf algebra, insertion pre-Lie products, and the
orthogonal-invariant tensor picture, verified on exhaustively enumerated
small instances."""

from .graphs import (
    EMPTY_GRAPH,
    GradeTriple,
    HalfEdgeGraph,
    automorphism_count,
    canonical_form,
    canonical_key,
    connected_components,
    contract_edge,
    contract_subgraph,
    disjoint_union,
    enumerate_by_grade,
    enumerate_graphs,
    extract_subgraph,
    graph,
    is_connected,
    is_isomorphic,
    validate,
)
from .poly import GraphPoly, GraphTensorPoly, graph_from_key, poly, product
from .hopf import (
    antipode,
    coproduct,
    counit,
    lie_bracket,
    pairing,
    star_product,
    unit,
)
from .insertion import associator, insert_at, insertion_product, prelie_check
from .chords import (
    BlockShape,
    ChordDiagram,
    RawTensor,
    beta,
    chord_from_graph,
    enumerate_chords,
    graph_from_chord,
    pair_raw,
    z_coinv,
)
from .tensors import (
    InvariantTensor,
    PairTensor,
    block_symmetrize,
    phi,
    phi_poly,
    project,
    psi,
    tensor_delta,
    tensor_mul,
    tensor_prelie,
)
from .verify import VerificationReport, run_suite

__all__ = [
    "EMPTY_GRAPH",
    "GradeTriple",
    "HalfEdgeGraph",
    "automorphism_count",
    "canonical_form",
    "canonical_key",
    "connected_components",
    "contract_edge",
    "contract_subgraph",
    "disjoint_union",
    "enumerate_by_grade",
    "enumerate_graphs",
    "extract_subgraph",
    "graph",
    "is_connected",
    "is_isomorphic",
    "validate",
    "GraphPoly",
    "GraphTensorPoly",
    "graph_from_key",
    "poly",
    "product",
    "antipode",
    "coproduct",
    "counit",
    "lie_bracket",
    "pairing",
    "star_product",
    "unit",
    "associator",
    "insert_at",
    "insertion_product",
    "prelie_check",
    "BlockShape",
    "ChordDiagram",
    "RawTensor",
    "beta",
    "chord_from_graph",
    "enumerate_chords",
    "graph_from_chord",
    "pair_raw",
    "z_coinv",
    "InvariantTensor",
    "PairTensor",
    "block_symmetrize",
    "phi",
    "phi_poly",
    "project",
    "psi",
    "tensor_delta",
    "tensor_mul",
    "tensor_prelie",
    "VerificationReport",
    "run_suite",
]
