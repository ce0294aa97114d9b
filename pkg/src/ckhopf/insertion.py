"""Insertion pre-Lie product on connected graphs with internal edges.

``insert_at(g1, v, sigma, g2)`` grafts g2 into g1 at the internal vertex v:
the external edges of g2 are discarded and each half-edge of v replaces the
attachment half-edge matched to it by sigma.  The product g1 o g2 sums over
all eligible vertices of g1 and all bijections.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Sequence

from .errors import NotInternalVertex, ValencyMismatch
from .graphs import HalfEdgeGraph, canonical_key
from .poly import GraphPoly, graph_from_key


def insert_at(
    g1: HalfEdgeGraph,
    v: Sequence[int],
    sigma: dict[int, tuple[int, int]],
    g2: HalfEdgeGraph,
) -> HalfEdgeGraph:
    """Insert g2 into g1 at vertex v via the bijection sigma: v -> E_ext(g2).

    Edges of the result are E(g1) plus the internal edges of g2; the vertex v
    is disbanded, each of its half-edges joining the g2-vertex its matched
    external edge was attached to.  External vertices are those of g1.
    """
    v = tuple(sorted(v))
    if not v:
        # 0-valent site: only an empty vertex of g1, receiving a leg-less graph
        if g1.n_empty == 0:
            raise NotInternalVertex("g1 has no empty vertex")
        if g2.external_edges():
            raise ValencyMismatch("0-valent site needs a graph with no external edges")
        from .graphs import disjoint_union

        u = disjoint_union(g1, g2)
        return HalfEdgeGraph(u.edges, u.vertices, u.external, u.n_empty - 1)
    if v not in g1.internal_vertices():
        raise NotInternalVertex(f"{v!r} is not an internal vertex of g1")
    ext_edges = g2.external_edges()
    if len(v) != len(ext_edges):
        raise ValencyMismatch(
            f"vertex valency {len(v)} != {len(ext_edges)} external edges"
        )
    sigma = {h: tuple(sorted(e)) for h, e in sigma.items()}
    if set(sigma) != set(v) or set(sigma.values()) != set(ext_edges):
        raise ValencyMismatch("sigma is not a bijection from v onto E_ext(g2)")

    shift = g1.n_half_edges
    ext2 = g2.external_set()
    # attachment half-edge of an external edge: the end at an internal vertex
    attach: dict[tuple[int, int], int] = {}
    for e in ext_edges:
        a, b = e
        attach[e] = b if a in ext2 else a

    discarded = {h for e in ext_edges for h in e}
    # replacement map applied to g2's surviving structure
    repl: dict[int, int] = {}
    for h2 in g2.half_edges:
        if h2 not in discarded:
            repl[h2] = h2 + shift
    site_of: dict[int, int] = {}  # g2 attachment half-edge -> half-edge of v
    for h, e in sigma.items():
        site_of[attach[e]] = h

    edges = list(g1.edges)
    for a, b in g2.edges:
        if (a, b) in ext_edges:
            continue
        edges.append(tuple(sorted((repl[a], repl[b]))))

    vertices = [tuple(w) for w in g1.vertices if tuple(w) != v]
    n_empty = g1.n_empty + g2.n_empty
    for w in g2.vertices:
        if len(w) == 1 and w[0] in ext2:
            continue
        merged = [repl[h] for h in w if h not in discarded]
        merged += [site_of[h] for h in w if h in site_of]
        if merged:
            vertices.append(tuple(sorted(merged)))
        else:
            n_empty += 1

    from .graphs import _normalize_surviving

    return _normalize_surviving(edges, vertices, g1.external, n_empty)


@lru_cache(maxsize=None)
def _insertion_basis(k1: bytes, k2: bytes) -> GraphPoly:
    g1, g2 = graph_from_key(k1), graph_from_key(k2)
    ext_edges = g2.external_edges()
    want = len(ext_edges)
    out: dict[bytes, Fraction] = {}
    for v in g1.internal_vertices():
        if len(v) != want:
            continue
        for perm in permutations(ext_edges):
            sigma = dict(zip(v, perm))
            key = canonical_key(insert_at(g1, v, sigma, g2))
            out[key] = out.get(key, Fraction(0)) + 1
    if want == 0 and g1.n_empty:
        key = canonical_key(insert_at(g1, (), {}, g2))
        out[key] = out.get(key, Fraction(0)) + g1.n_empty
    return GraphPoly(out)


def insertion_product(a: GraphPoly, b: GraphPoly) -> GraphPoly:
    """Bilinear extension of the insertion sum; valency mismatches give zero."""
    out = GraphPoly.zero()
    for k1, c1 in a.terms():
        for k2, c2 in b.terms():
            out = out + _insertion_basis(k1, k2).scale(c1 * c2)
    return out


def associator(a: GraphPoly, b: GraphPoly, c: GraphPoly) -> GraphPoly:
    return insertion_product(insertion_product(a, b), c) - insertion_product(
        a, insertion_product(b, c)
    )


def prelie_check(a: GraphPoly, b: GraphPoly, c: GraphPoly) -> bool:
    """Right symmetry of the associator: assoc(a, b, c) == assoc(a, c, b)."""
    return associator(a, b, c) == associator(a, c, b)
