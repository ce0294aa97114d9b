"""Half-edge multigraphs: validation, canonical forms, contraction, enumeration.

A graph is a finite set of half-edges together with a partition into edges
(unordered pairs), a partition into vertices (arbitrary, possibly empty parts),
and a set of external vertices, each of which must be 1-valent.  Empty vertices
are legal: they arise when a loop is contracted and count as internal vertices
of valency zero.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, NamedTuple, Sequence

from .errors import (
    DanglingHalfEdge,
    EmptySubgraph,
    ExternalNotUnivalent,
    NonPairEdge,
    NotInternalEdge,
    OverlappingPartition,
    ResourceBound,
)


class GradeTriple(NamedTuple):
    """(edge count, internal edge count, external vertex count)."""

    n: int
    m: int
    k: int

    def __add__(self, other):
        return GradeTriple(self.n + other[0], self.m + other[1], self.k + other[2])


@dataclass(frozen=True)
class HalfEdgeGraph:
    """Immutable half-edge graph with labels normalized to 0..2n-1.

    ``edges`` is a sorted tuple of sorted pairs, ``vertices`` a sorted tuple of
    the nonempty vertex parts (each a sorted tuple), ``external`` the sorted
    tuple of half-edges that belong to external vertices, and ``n_empty`` the
    number of empty (0-valent, internal) vertices.
    """

    edges: tuple[tuple[int, int], ...]
    vertices: tuple[tuple[int, ...], ...]
    external: tuple[int, ...]
    n_empty: int = 0

    @property
    def n_half_edges(self) -> int:
        return 2 * len(self.edges)

    @property
    def half_edges(self) -> range:
        return range(self.n_half_edges)

    def is_empty(self) -> bool:
        return not self.edges and self.n_empty == 0

    def external_set(self) -> frozenset[int]:
        return frozenset(self.external)

    def internal_edges(self) -> tuple[tuple[int, int], ...]:
        ext = self.external_set()
        return tuple(e for e in self.edges if e[0] not in ext and e[1] not in ext)

    def external_edges(self) -> tuple[tuple[int, int], ...]:
        ext = self.external_set()
        return tuple(e for e in self.edges if e[0] in ext or e[1] in ext)

    def internal_vertices(self) -> tuple[tuple[int, ...], ...]:
        ext = self.external_set()
        return tuple(v for v in self.vertices if not (len(v) == 1 and v[0] in ext))

    def external_vertices(self) -> tuple[tuple[int, ...], ...]:
        ext = self.external_set()
        return tuple(v for v in self.vertices if len(v) == 1 and v[0] in ext)

    def vertex_of(self) -> dict[int, int]:
        """Half-edge -> index into ``vertices``."""
        out: dict[int, int] = {}
        for i, v in enumerate(self.vertices):
            for h in v:
                out[h] = i
        return out

    def partner(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for a, b in self.edges:
            out[a] = b
            out[b] = a
        return out

    def grade(self) -> GradeTriple:
        return GradeTriple(len(self.edges), len(self.internal_edges()), len(self.external))

    def __repr__(self) -> str:  # short, for test failure readability
        return (
            f"HalfEdgeGraph(edges={list(self.edges)}, vertices={list(self.vertices)}, "
            f"external={list(self.external)}, n_empty={self.n_empty})"
        )


EMPTY_GRAPH = HalfEdgeGraph((), (), (), 0)


# ---------------------------------------------------------------------------
# Validation


def validate(
    half_edges: Iterable[object],
    edges: Iterable[Sequence[object]],
    vertices: Iterable[Sequence[object]],
    external_vertices: Iterable[int] = (),
) -> HalfEdgeGraph:
    """Check a raw description and normalize half-edge labels to 0..2n-1.

    ``external_vertices`` lists positions into the ``vertices`` sequence, as in
    the JSON file format.  Raises a subclass of :class:`InvalidGraph` on any
    structural violation.
    """
    labels = list(half_edges)
    if len(set(labels)) != len(labels):
        raise OverlappingPartition("duplicate half-edge labels")
    label_set = set(labels)
    try:
        ordered_labels = sorted(labels)
    except TypeError:
        ordered_labels = sorted(labels, key=repr)
    order = {h: i for i, h in enumerate(ordered_labels)}

    seen: set[object] = set()
    norm_edges = []
    for e in edges:
        pair = tuple(e)
        if len(pair) != 2 or pair[0] == pair[1]:
            raise NonPairEdge(f"edge {pair!r} is not a pair of two distinct half-edges")
        if pair[0] not in label_set or pair[1] not in label_set:
            raise NonPairEdge(f"edge {pair!r} references unknown half-edges")
        for h in pair:
            if h in seen:
                raise OverlappingPartition(f"half-edge {h!r} occurs in two edges")
            seen.add(h)
        norm_edges.append(tuple(sorted((order[pair[0]], order[pair[1]]))))
    if seen != label_set:
        missing = label_set - seen
        raise DanglingHalfEdge(f"half-edges {sorted(missing, key=repr)!r} occur in no edge")

    seen_v: set[object] = set()
    norm_vertices = []
    n_empty = 0
    for v in vertices:
        part = tuple(v)
        for h in part:
            if h not in label_set:
                raise OverlappingPartition(f"vertex {part!r} references unknown half-edge {h!r}")
            if h in seen_v:
                raise OverlappingPartition(f"half-edge {h!r} occurs in two vertices")
            seen_v.add(h)
        if not part:
            n_empty += 1
        norm_vertices.append(tuple(sorted(order[h] for h in part)))
    if seen_v != label_set:
        missing = label_set - seen_v
        raise DanglingHalfEdge(f"half-edges {sorted(missing, key=repr)!r} occur in no vertex")

    vertex_list = list(vertices)
    external_h: list[int] = []
    for idx in external_vertices:
        if not 0 <= idx < len(vertex_list):
            raise ExternalNotUnivalent(f"external vertex index {idx} out of range")
        part = tuple(vertex_list[idx])
        if len(part) != 1:
            raise ExternalNotUnivalent(f"external vertex {part!r} has valency {len(part)}")
        external_h.append(order[part[0]])

    if len(set(external_h)) != len(external_h):
        raise OverlappingPartition("external vertex listed twice")

    return HalfEdgeGraph(
        edges=tuple(sorted(norm_edges)),
        vertices=tuple(sorted(v for v in norm_vertices if v)),
        external=tuple(sorted(external_h)),
        n_empty=n_empty,
    )


def graph(
    edges: Iterable[Sequence[object]],
    vertices: Iterable[Sequence[object]],
    external: Iterable[object] = (),
    n_empty: int = 0,
) -> HalfEdgeGraph:
    """Convenience builder: ``external`` names the half-edges of external vertices."""
    vertex_list = [tuple(v) for v in vertices] + [()] * n_empty
    ext = set(external)
    ext_idx = []
    for h in ext:
        matches = [i for i, v in enumerate(vertex_list) if h in v]
        if len(matches) != 1 or len(vertex_list[matches[0]]) != 1:
            raise ExternalNotUnivalent(f"half-edge {h!r} is not the sole member of a vertex")
        ext_idx.append(matches[0])
    labels = sorted({h for v in vertex_list for h in v}, key=repr)
    return validate(labels, edges, vertex_list, ext_idx)


def relabel(g: HalfEdgeGraph, mapping: dict[int, int]) -> HalfEdgeGraph:
    """Apply a bijection of half-edge labels (must be a permutation of 0..2n-1)."""
    return HalfEdgeGraph(
        edges=tuple(sorted(tuple(sorted((mapping[a], mapping[b]))) for a, b in g.edges)),
        vertices=tuple(sorted(tuple(sorted(mapping[h] for h in v)) for v in g.vertices)),
        external=tuple(sorted(mapping[h] for h in g.external)),
        n_empty=g.n_empty,
    )


# ---------------------------------------------------------------------------
# Canonical form
#
# The half-edge graph is reduced to its vertex multigraph (loop counts, edge
# multiplicities, external flags, empty-vertex count), which is a complete
# isomorphism invariant: vertices carry no cyclic order, so any matching of
# vertices and of parallel edge bundles extends to a half-edge isomorphism.
# The multigraph is canonically ordered by color refinement followed by a
# minimal-code search over orderings compatible with the color classes.


def _multigraph(g: HalfEdgeGraph):
    nodes = g.vertices
    V = len(nodes)
    ext_set = g.external_set()
    ext = [1 if (len(v) == 1 and v[0] in ext_set) else 0 for v in nodes]
    vert_of: dict[int, int] = {}
    for i, v in enumerate(nodes):
        for h in v:
            vert_of[h] = i
    loops = [0] * V
    mult = [[0] * V for _ in range(V)]
    for a, b in g.edges:
        va, vb = vert_of[a], vert_of[b]
        if va == vb:
            loops[va] += 1
        else:
            mult[va][vb] += 1
            mult[vb][va] += 1
    return V, ext, loops, mult


def _refine_classes(V, ext, loops, mult):
    """Iterated equitable refinement; returns classes ordered by color value."""
    deg = [sum(mult[i]) + 2 * loops[i] for i in range(V)]
    colors: list = [(ext[i], deg[i], loops[i]) for i in range(V)]
    while True:
        sigs = [
            (colors[i], tuple(sorted((colors[j], mult[i][j]) for j in range(V) if mult[i][j])))
            for i in range(V)
        ]
        if len(set(sigs)) == len(set(colors)):
            break
        colors = sigs
    order = sorted(set(colors))
    rank = {c: r for r, c in enumerate(order)}
    classes: list[list[int]] = [[] for _ in order]
    for i in range(V):
        classes[rank[colors[i]]].append(i)
    return classes


def _canonical_order(V, ext, loops, mult, classes):
    """Minimal-code vertex ordering and the multigraph automorphism count.

    The code of an ordering lists, per position, (ext flag, loop count, row of
    multiplicities to earlier positions).  Twin vertices (interchangeable by a
    transposition automorphism) are collapsed during the search and accounted
    for by multiplicity.
    """
    flat_classes = [list(c) for c in classes]
    best_code: list = []
    best_count = 0

    order: list[int] = []

    def twin_groups(cands):
        groups: list[list[int]] = []
        for v in cands:
            for grp in groups:
                w = grp[0]
                if (
                    loops[v] == loops[w]
                    and ext[v] == ext[w]
                    and all(mult[v][x] == mult[w][x] for x in range(V) if x != v and x != w)
                ):
                    grp.append(v)
                    break
            else:
                groups.append([v])
        return groups

    def rec(ci, remaining, multiplicity):
        # invariant: the placed prefix equals best_code[:len(order)]
        nonlocal best_count
        if not remaining:
            nci = ci + 1
            while nci < len(flat_classes) and not flat_classes[nci]:
                nci += 1
            if nci == len(flat_classes):
                best_count += multiplicity
                return
            rec(nci, list(flat_classes[nci]), multiplicity)
            return
        pos = len(order)
        for grp in twin_groups(remaining):
            v = grp[0]
            entry = (ext[v], loops[v], tuple(mult[v][order[p]] for p in range(pos)))
            if pos < len(best_code):
                if entry > best_code[pos]:
                    continue
                if entry < best_code[pos]:
                    del best_code[pos:]
                    best_code.append(entry)
                    best_count = 0
            else:
                best_code.append(entry)
            order.append(v)
            rec(ci, [x for x in remaining if x != v], multiplicity * len(grp))
            order.pop()

    if V == 0:
        return [], 1
    first = 0
    while first < len(flat_classes) and not flat_classes[first]:
        first += 1
    rec(first, list(flat_classes[first]), 1)

    # Recover the vertex order that realizes best_code deterministically.
    result: list[int] = []

    def rebuild(ci, remaining):
        if not remaining:
            nci = ci + 1
            while nci < len(flat_classes) and not flat_classes[nci]:
                nci += 1
            if nci == len(flat_classes):
                return True
            return rebuild(nci, list(flat_classes[nci]))
        pos = len(result)
        for v in sorted(remaining):
            entry = (ext[v], loops[v], tuple(mult[v][result[p]] for p in range(pos)))
            if entry == best_code[pos]:
                result.append(v)
                if rebuild(ci, [x for x in remaining if x != v]):
                    return True
                result.pop()
        return False

    rebuild(first, list(flat_classes[first]))
    return result, best_count


def _rebuild_canonical(order, ext, loops, mult, n_empty) -> HalfEdgeGraph:
    V = len(order)
    pos_ext = [ext[v] for v in order]
    pos_loops = [loops[v] for v in order]
    pos_mult = [[mult[order[i]][order[j]] for j in range(V)] for i in range(V)]
    slots: list[tuple[int, int]] = []
    for i in range(V):
        slots.extend([(i, i)] * pos_loops[i])
        for j in range(i + 1, V):
            slots.extend([(i, j)] * pos_mult[i][j])
    slots.sort()
    edges = []
    members: list[list[int]] = [[] for _ in range(V)]
    for t, (u, v) in enumerate(slots):
        a, b = 2 * t, 2 * t + 1
        edges.append((a, b))
        members[u].append(a)
        members[v].append(b)
    external = tuple(sorted(members[i][0] for i in range(V) if pos_ext[i]))
    return HalfEdgeGraph(
        edges=tuple(edges),
        vertices=tuple(sorted(tuple(sorted(m)) for m in members)),
        external=external,
        n_empty=n_empty,
    )


def to_json_dict(g: HalfEdgeGraph) -> dict:
    """The graph file format; external vertices given by index into the vertex list."""
    vertices = [()] * g.n_empty + list(g.vertices)
    ext_set = g.external_set()
    external = [
        i for i, v in enumerate(vertices) if len(v) == 1 and v[0] in ext_set
    ]
    return {
        "half_edges": list(g.half_edges),
        "edges": [list(e) for e in g.edges],
        "vertices": [list(v) for v in vertices],
        "external": external,
    }


def from_json_dict(doc: dict) -> HalfEdgeGraph:
    return validate(
        doc.get("half_edges", []),
        doc.get("edges", []),
        doc.get("vertices", []),
        doc.get("external", []),
    )


@lru_cache(maxsize=None)
def _canonical(g: HalfEdgeGraph) -> tuple[bytes, HalfEdgeGraph, int]:
    V, ext, loops, mult = _multigraph(g)
    classes = _refine_classes(V, ext, loops, mult)
    order, aut_mg = _canonical_order(V, ext, loops, mult, classes)
    canon = _rebuild_canonical(order, ext, loops, mult, g.n_empty)
    key = json.dumps(to_json_dict(canon), separators=(",", ":")).encode("ascii")
    aut = aut_mg
    for i in range(V):
        aut *= 2 ** loops[i] * _factorial(loops[i])
        for j in range(i + 1, V):
            aut *= _factorial(mult[i][j])
    return key, canon, aut


def _factorial(n: int) -> int:
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def canonical_form(g: HalfEdgeGraph) -> tuple[bytes, HalfEdgeGraph]:
    """Canonical key (bytes of the canonical JSON serialization) and relabeled graph."""
    key, canon, _ = _canonical(g)
    return key, canon


def canonical_key(g: HalfEdgeGraph) -> bytes:
    return _canonical(g)[0]


def graph_from_key(key: bytes) -> HalfEdgeGraph:
    """Keys are self-describing: parse the canonical serialization back."""
    return from_json_dict(json.loads(key.decode("ascii")))


def automorphism_count(g: HalfEdgeGraph) -> int:
    """Number of half-edge bijections g -> g preserving edges, vertices, external."""
    return _canonical(g)[2]


def is_isomorphic(g1: HalfEdgeGraph, g2: HalfEdgeGraph) -> bool:
    return canonical_key(g1) == canonical_key(g2)


# ---------------------------------------------------------------------------
# Contraction, extraction, union, components


def _normalize_surviving(edges, vertices, external, n_empty) -> HalfEdgeGraph:
    """Order-preserving compaction of the surviving half-edge labels."""
    alive = sorted({h for e in edges for h in e})
    order = {h: i for i, h in enumerate(alive)}
    return HalfEdgeGraph(
        edges=tuple(sorted(tuple(sorted((order[a], order[b]))) for a, b in edges)),
        vertices=tuple(sorted(tuple(sorted(order[h] for h in v)) for v in vertices if v)),
        external=tuple(sorted(order[h] for h in external)),
        n_empty=n_empty + sum(1 for v in vertices if not v),
    )


def _check_internal(g: HalfEdgeGraph, edges) -> list[tuple[int, int]]:
    internal = set(g.internal_edges())
    out = []
    for e in edges:
        pair = tuple(sorted(e))
        if pair not in internal:
            raise NotInternalEdge(f"{pair!r} is not an internal edge of the graph")
        out.append(pair)
    if len(set(out)) != len(out):
        raise NotInternalEdge("subgraph lists an edge twice")
    return out


def contract_subgraph(g: HalfEdgeGraph, gamma: Iterable[Sequence[int]]) -> HalfEdgeGraph:
    """Contract every edge of ``gamma`` (a subset of the internal edges) at once.

    Non-loop edges merge their endpoint vertices; loops are simply removed from
    their vertex.  The result is independent of contraction order.
    """
    gamma_edges = _check_internal(g, gamma)
    if not gamma_edges:
        return g
    removed = {h for e in gamma_edges for h in e}
    vert_of = g.vertex_of()

    parent = list(range(len(g.vertices)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in gamma_edges:
        ra, rb = find(vert_of[a]), find(vert_of[b])
        if ra != rb:
            parent[ra] = rb

    groups: dict[int, list[int]] = {}
    for i, v in enumerate(g.vertices):
        groups.setdefault(find(i), []).extend(h for h in v if h not in removed)
    new_vertices = [tuple(sorted(v)) for v in groups.values()]
    new_edges = [e for e in g.edges if tuple(e) not in set(map(tuple, gamma_edges))]
    return _normalize_surviving(new_edges, new_vertices, g.external, g.n_empty)


def contract_edge(g: HalfEdgeGraph, e: Sequence[int]) -> HalfEdgeGraph:
    return contract_subgraph(g, [e])


def extract_subgraph(g: HalfEdgeGraph, gamma: Iterable[Sequence[int]]) -> HalfEdgeGraph:
    """Build the standalone graph of a nonempty internal-edge subset.

    Half-edges of the meeting vertices that do not belong to ``gamma`` become
    ends of fresh external legs.
    """
    gamma_edges = _check_internal(g, gamma)
    if not gamma_edges:
        raise EmptySubgraph("subgraph extraction needs at least one edge")
    gamma_halves = {h for e in gamma_edges for h in e}
    touched = [v for v in g.vertices if any(h in gamma_halves for h in v)]
    dangling = sorted(h for v in touched for h in v if h not in gamma_halves)
    fresh_start = g.n_half_edges
    legs = [(h, fresh_start + i) for i, h in enumerate(dangling)]
    edges = list(gamma_edges) + legs
    vertices = [tuple(v) for v in touched] + [(fresh_start + i,) for i in range(len(dangling))]
    external = [fresh_start + i for i in range(len(dangling))]
    return _normalize_surviving(edges, vertices, external, 0)


def disjoint_union(g1: HalfEdgeGraph, g2: HalfEdgeGraph) -> HalfEdgeGraph:
    shift = g1.n_half_edges
    return HalfEdgeGraph(
        edges=tuple(sorted(g1.edges + tuple((a + shift, b + shift) for a, b in g2.edges))),
        vertices=tuple(
            sorted(g1.vertices + tuple(tuple(h + shift for h in v) for v in g2.vertices))
        ),
        external=tuple(sorted(g1.external + tuple(h + shift for h in g2.external))),
        n_empty=g1.n_empty + g2.n_empty,
    )


def connected_components(g: HalfEdgeGraph) -> list[HalfEdgeGraph]:
    """Components as standalone graphs; the empty graph has none.

    Each empty vertex is its own component.  The list is sorted by canonical
    key so it is deterministic.
    """
    parent: dict[int, int] = {h: h for h in g.half_edges}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    for a, b in g.edges:
        union(a, b)
    for v in g.vertices:
        for h in v[1:]:
            union(v[0], h)

    buckets: dict[int, set[int]] = {}
    for h in g.half_edges:
        buckets.setdefault(find(h), set()).add(h)

    ext_set = g.external_set()
    comps = []
    for halves in buckets.values():
        edges = [e for e in g.edges if e[0] in halves]
        vertices = [v for v in g.vertices if v and v[0] in halves]
        external = [h for h in halves if h in ext_set]
        comps.append(_normalize_surviving(edges, vertices, external, 0))
    comps.extend([HalfEdgeGraph((), (), (), 1)] * g.n_empty)
    return sorted(comps, key=canonical_key)


def is_connected(g: HalfEdgeGraph) -> bool:
    return len(connected_components(g)) == 1


# ---------------------------------------------------------------------------
# Enumeration by isomorphism class
#
# Connected graphs with at least one internal edge decompose as a "core"
# (their internal edges and internal vertices) plus external legs; cores are
# generated by edge augmentation, legs are distributed afterwards, and
# arbitrary graphs are multisets of connected ones.


def default_budget() -> int:
    return int(os.environ.get("CKHOPF_BUDGET", "5000000"))


class _Budget:
    def __init__(self, limit: int | None):
        self.limit = default_budget() if limit is None else limit
        self.used = 0

    def spend(self, k: int = 1):
        self.used += k
        if self.used > self.limit:
            raise ResourceBound(f"enumeration exceeded budget of {self.limit} steps")


_CORES: dict[int, list[HalfEdgeGraph]] = {}


def _connected_cores(m: int, budget: _Budget) -> list[HalfEdgeGraph]:
    """Connected graphs of grade (m, m, 0): internal structure only, min valency 1."""
    if m in _CORES:
        return _CORES[m]
    if m == 0:
        return []
    if m == 1:
        loop = graph(edges=[(0, 1)], vertices=[(0, 1)])
        segment = graph(edges=[(0, 1)], vertices=[(0,), (1,)])
        _CORES[1] = sorted({canonical_key(g): g for g in (loop, segment)}.values(), key=canonical_key)
        return _CORES[1]
    out: dict[bytes, HalfEdgeGraph] = {}
    for core in _connected_cores(m - 1, budget):
        n_h = core.n_half_edges
        a, b = n_h, n_h + 1
        new_edge = (a, b)
        V = len(core.vertices)
        placements = []
        for i in range(V):
            placements.append([(i, a), (i, b)])          # loop at vertex i
            placements.append([(i, a)])                  # edge to a fresh 1-valent vertex
            for j in range(i + 1, V):
                placements.append([(i, a), (j, b)])      # edge between two vertices
        for placed in placements:
            budget.spend()
            vertices = [list(v) for v in core.vertices]
            fresh: list[int] = []
            assigned = {h for _, h in placed}
            for i, h in placed:
                vertices[i].append(h)
            for h in new_edge:
                if h not in assigned:
                    fresh.append(h)
            vparts = [tuple(sorted(v)) for v in vertices] + [(h,) for h in fresh]
            cand = HalfEdgeGraph(
                edges=tuple(sorted(core.edges + (new_edge,))),
                vertices=tuple(sorted(vparts)),
                external=(),
                n_empty=0,
            )
            key, canon = canonical_form(cand)
            out.setdefault(key, canon)
    _CORES[m] = sorted(out.values(), key=canonical_key)
    return _CORES[m]


_WITH_LEGS: dict[tuple[int, int], list[HalfEdgeGraph]] = {}


def _attach_legs(core: HalfEdgeGraph, dist: Sequence[int]) -> HalfEdgeGraph:
    n_h = core.n_half_edges
    edges = list(core.edges)
    vertices = [list(v) for v in core.vertices]
    ext = []
    nxt = n_h
    for i, count in enumerate(dist):
        for _ in range(count):
            h, hp = nxt, nxt + 1
            nxt += 2
            vertices[i].append(h)
            edges.append((h, hp))
            ext.append(hp)
    vparts = [tuple(sorted(v)) for v in vertices] + [(h,) for h in ext]
    return HalfEdgeGraph(
        edges=tuple(sorted(edges)),
        vertices=tuple(sorted(vparts)),
        external=tuple(sorted(ext)),
        n_empty=0,
    )


def _connected_with_legs(m: int, k: int, budget: _Budget) -> list[HalfEdgeGraph]:
    """Connected classes of grade (m + k, m, k) for m >= 1."""
    if (m, k) in _WITH_LEGS:
        return _WITH_LEGS[(m, k)]
    out: dict[bytes, HalfEdgeGraph] = {}
    for core in _connected_cores(m, budget):
        V = len(core.vertices)
        for dist in _compositions_of(k, V):
            budget.spend()
            cand = _attach_legs(core, dist)
            key, canon = canonical_form(cand)
            out.setdefault(key, canon)
    _WITH_LEGS[(m, k)] = sorted(out.values(), key=canonical_key)
    return _WITH_LEGS[(m, k)]


def _compositions_of(k: int, parts: int):
    """All tuples of ``parts`` nonnegative integers summing to k."""
    if parts == 0:
        if k == 0:
            yield ()
        return
    for first in range(k + 1):
        for rest in _compositions_of(k - first, parts - 1):
            yield (first,) + rest


def dot_graph(k: int) -> HalfEdgeGraph:
    """One internal vertex with k external legs; grade (k, 0, k)."""
    edges = [(2 * i, 2 * i + 1) for i in range(k)]
    center = tuple(2 * i for i in range(k))
    vertices = [center] + [(2 * i + 1,) for i in range(k)]
    return graph(edges=edges, vertices=vertices, external=[2 * i + 1 for i in range(k)])


def free_propagator() -> HalfEdgeGraph:
    """A single edge between two external vertices; grade (1, 0, 2)."""
    return graph(edges=[(0, 1)], vertices=[(0,), (1,)], external=[0, 1])


def connected_classes(n: int, plus: bool, budget: _Budget | None = None) -> list[HalfEdgeGraph]:
    """Connected isomorphism classes with n edges (``plus``: >= 1 internal edge)."""
    budget = budget or _Budget(None)
    out: dict[bytes, HalfEdgeGraph] = {}
    for m in range(1, n + 1):
        for g in _connected_with_legs(m, n - m, budget):
            out[canonical_key(g)] = g
    if not plus and n >= 1:
        d = dot_graph(n)
        out[canonical_key(d)] = d
        if n == 1:
            fp = free_propagator()
            out[canonical_key(fp)] = fp
    return sorted(out.values(), key=canonical_key)


def enumerate_graphs(
    n_edges: int, filter: str = "all", budget: int | None = None
) -> list[HalfEdgeGraph]:
    """One canonical representative per isomorphism class with ``n_edges`` edges.

    ``filter`` is one of ``all``, ``connected``, ``connected_plus``; the last
    additionally requires at least one internal edge.  Graphs containing empty
    vertices are excluded from the generating set.
    """
    if n_edges < 0:
        raise ValueError("n_edges must be nonnegative")
    b = _Budget(budget)
    if filter == "connected":
        return connected_classes(n_edges, plus=False, budget=b)
    if filter == "connected_plus":
        return connected_classes(n_edges, plus=True, budget=b)
    if filter != "all":
        raise ValueError(f"unknown filter {filter!r}")
    if n_edges == 0:
        return [EMPTY_GRAPH]
    pieces: list[HalfEdgeGraph] = []
    for j in range(1, n_edges + 1):
        pieces.extend(connected_classes(j, plus=False, budget=b))
    return _multisets(pieces, n_edges, lambda g: len(g.edges), b)


_GRADE_CACHE: dict[tuple[int, int, int], list[HalfEdgeGraph]] = {}


def enumerate_by_grade(
    n: int, m: int, k: int, budget: int | None = None
) -> list[HalfEdgeGraph]:
    """All classes (connected or not, no empty vertices) of exact grade (n, m, k)."""
    if (n, m, k) in _GRADE_CACHE:
        return _GRADE_CACHE[(n, m, k)]
    b = _Budget(budget)
    pieces: list[HalfEdgeGraph] = []
    for j in range(1, n + 1):
        pieces.extend(connected_classes(j, plus=False, budget=b))
    out = []
    for g in _multisets(pieces, n, lambda g: len(g.edges), b):
        gr = g.grade()
        if gr.m == m and gr.k == k:
            out.append(g)
    _GRADE_CACHE[(n, m, k)] = out
    return out


def _multisets(pieces, total, size, budget: _Budget):
    """All disjoint unions of connected pieces with sizes summing to ``total``."""
    pieces = sorted(pieces, key=canonical_key)
    out: dict[bytes, HalfEdgeGraph] = {}

    def rec(start: int, remaining: int, acc: HalfEdgeGraph):
        if remaining == 0:
            budget.spend()
            key, canon = canonical_form(acc)
            out.setdefault(key, canon)
            return
        for i in range(start, len(pieces)):
            s = size(pieces[i])
            if s <= remaining:
                rec(i, remaining - s, disjoint_union(acc, pieces[i]))

    rec(0, total, EMPTY_GRAPH)
    return sorted(out.values(), key=canonical_key)
