"""Finite linear combinations of graph isomorphism classes over exact rationals.

Graphs are identified by canonical key; the key bytes are the canonical JSON
serialization, so they parse back to a graph without any side table.
"""

from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

from .graphs import (
    EMPTY_GRAPH,
    HalfEdgeGraph,
    canonical_key,
    disjoint_union,
    from_json_dict,
)


@lru_cache(maxsize=None)
def graph_from_key(key: bytes) -> HalfEdgeGraph:
    return from_json_dict(json.loads(key.decode("ascii")))


EMPTY_KEY = canonical_key(EMPTY_GRAPH)

Scalar = Fraction | int


def _frac(x: Scalar) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class GraphPoly:
    """A finitely supported map from isomorphism classes to rationals."""

    __slots__ = ("_terms",)

    def __init__(self, terms: dict[bytes, Fraction] | None = None):
        self._terms = {k: v for k, v in (terms or {}).items() if v != 0}

    @classmethod
    def zero(cls) -> "GraphPoly":
        return cls()

    @classmethod
    def one(cls) -> "GraphPoly":
        return cls({EMPTY_KEY: Fraction(1)})

    @classmethod
    def from_graph(cls, g: HalfEdgeGraph, coeff: Scalar = 1) -> "GraphPoly":
        return cls({canonical_key(g): _frac(coeff)})

    def terms(self) -> Iterator[tuple[bytes, Fraction]]:
        return iter(sorted(self._terms.items()))

    def graphs(self) -> Iterator[tuple[HalfEdgeGraph, Fraction]]:
        for k, c in self.terms():
            yield graph_from_key(k), c

    def coeff(self, g: HalfEdgeGraph) -> Fraction:
        return self._terms.get(canonical_key(g), Fraction(0))

    def coeff_key(self, key: bytes) -> Fraction:
        return self._terms.get(key, Fraction(0))

    def support(self) -> list[bytes]:
        return sorted(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __add__(self, other: "GraphPoly") -> "GraphPoly":
        out = dict(self._terms)
        for k, v in other._terms.items():
            out[k] = out.get(k, Fraction(0)) + v
        return GraphPoly(out)

    def __sub__(self, other: "GraphPoly") -> "GraphPoly":
        return self + (-other)

    def __neg__(self) -> "GraphPoly":
        return GraphPoly({k: -v for k, v in self._terms.items()})

    def scale(self, c: Scalar) -> "GraphPoly":
        c = _frac(c)
        return GraphPoly({k: c * v for k, v in self._terms.items()})

    def __rmul__(self, c: Scalar) -> "GraphPoly":
        return self.scale(c)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GraphPoly) and self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        if self.is_zero():
            return "GraphPoly(0)"
        bits = [f"{c} * {k.decode('ascii')}" for k, c in self.terms()]
        return "GraphPoly(" + " + ".join(bits) + ")"

    def grade_projection(self, n: int, m: int | None = None, k: int | None = None) -> "GraphPoly":
        out = {}
        for key, c in self._terms.items():
            gr = graph_from_key(key).grade()
            if gr.n == n and (m is None or gr.m == m) and (k is None or gr.k == k):
                out[key] = c
        return GraphPoly(out)

    def max_edges(self) -> int:
        return max((len(graph_from_key(k).edges) for k in self._terms), default=0)


def poly(*graphs_and_coeffs) -> GraphPoly:
    """poly(g1, c1, g2, c2, ...) convenience constructor."""
    out = GraphPoly.zero()
    pairs = list(graphs_and_coeffs)
    if len(pairs) % 2:
        pairs.append(1)
    for g, c in zip(pairs[::2], pairs[1::2]):
        out = out + GraphPoly.from_graph(g, c)
    return out


@lru_cache(maxsize=None)
def _union_key(k1: bytes, k2: bytes) -> bytes:
    return canonical_key(disjoint_union(graph_from_key(k1), graph_from_key(k2)))


def product(p: GraphPoly, q: GraphPoly) -> GraphPoly:
    """Bilinear extension of disjoint union; the empty graph is the unit."""
    out: dict[bytes, Fraction] = {}
    for k1, c1 in p._terms.items():
        for k2, c2 in q._terms.items():
            key = _union_key(k1, k2)
            out[key] = out.get(key, Fraction(0)) + c1 * c2
    return GraphPoly(out)


class GraphTensorPoly:
    """Finitely supported element of H (x) H, keyed by ordered key pairs."""

    __slots__ = ("_terms",)

    def __init__(self, terms: dict[tuple[bytes, bytes], Fraction] | None = None):
        self._terms = {k: v for k, v in (terms or {}).items() if v != 0}

    @classmethod
    def zero(cls) -> "GraphTensorPoly":
        return cls()

    @classmethod
    def unit(cls) -> "GraphTensorPoly":
        return cls({(EMPTY_KEY, EMPTY_KEY): Fraction(1)})

    @classmethod
    def of(cls, g1: HalfEdgeGraph, g2: HalfEdgeGraph, coeff: Scalar = 1) -> "GraphTensorPoly":
        return cls({(canonical_key(g1), canonical_key(g2)): _frac(coeff)})

    @classmethod
    def outer(cls, p: GraphPoly, q: GraphPoly) -> "GraphTensorPoly":
        out = {}
        for k1, c1 in p._terms.items():
            for k2, c2 in q._terms.items():
                out[(k1, k2)] = c1 * c2
        return cls(out)

    def terms(self) -> Iterator[tuple[tuple[bytes, bytes], Fraction]]:
        return iter(sorted(self._terms.items()))

    def coeff_pair(self, k1: bytes, k2: bytes) -> Fraction:
        return self._terms.get((k1, k2), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __add__(self, other: "GraphTensorPoly") -> "GraphTensorPoly":
        out = dict(self._terms)
        for k, v in other._terms.items():
            out[k] = out.get(k, Fraction(0)) + v
        return GraphTensorPoly(out)

    def __sub__(self, other: "GraphTensorPoly") -> "GraphTensorPoly":
        return self + other.scale(-1)

    def scale(self, c: Scalar) -> "GraphTensorPoly":
        c = _frac(c)
        return GraphTensorPoly({k: c * v for k, v in self._terms.items()})

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GraphTensorPoly) and self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        return f"GraphTensorPoly({len(self._terms)} terms)"

    def mul(self, other: "GraphTensorPoly") -> "GraphTensorPoly":
        """Componentwise product: (a (x) b)(c (x) d) = (a u c) (x) (b u d)."""
        out: dict[tuple[bytes, bytes], Fraction] = {}
        for (a, b), c1 in self._terms.items():
            for (c, d), c2 in other._terms.items():
                key = (_union_key(a, c), _union_key(b, d))
                out[key] = out.get(key, Fraction(0)) + c1 * c2
        return GraphTensorPoly(out)


class GraphTensor3:
    """Element of H (x) H (x) H, used by the coassociativity checks."""

    __slots__ = ("_terms",)

    def __init__(self, terms: dict[tuple[bytes, bytes, bytes], Fraction] | None = None):
        self._terms = {k: v for k, v in (terms or {}).items() if v != 0}

    def __add__(self, other: "GraphTensor3") -> "GraphTensor3":
        out = dict(self._terms)
        for k, v in other._terms.items():
            out[k] = out.get(k, Fraction(0)) + v
        return GraphTensor3(out)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GraphTensor3) and self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def is_zero(self) -> bool:
        return not self._terms

    def terms(self):
        return iter(sorted(self._terms.items()))

    def __repr__(self) -> str:
        return f"GraphTensor3({len(self._terms)} terms)"
