"""JSON serialization for graphs, graph polynomials and invariant tensors.

Rationals are written as "p/q" strings; no floating point appears anywhere.
Serialization is canonical: lists sorted, no whitespace, so equal values give
equal bytes.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .chords import RawTensor
from .graphs import HalfEdgeGraph, from_json_dict, to_json_dict
from .poly import GraphPoly, GraphTensorPoly
from .tensors import InvariantTensor


def frac_to_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def frac_from_str(s) -> Fraction:
    if isinstance(s, int):
        return Fraction(s)
    return Fraction(s)


def dumps(doc) -> str:
    return json.dumps(doc, separators=(",", ":"))


def graph_to_doc(g: HalfEdgeGraph) -> dict:
    return to_json_dict(g)


def graph_from_doc(doc: dict) -> HalfEdgeGraph:
    return from_json_dict(doc)


def poly_to_doc(p: GraphPoly) -> list:
    out = []
    for key, coeff in p.terms():
        out.append({"coefficient": frac_to_str(coeff), "graph": json.loads(key.decode("ascii"))})
    return out


def poly_from_doc(doc: list) -> GraphPoly:
    out = GraphPoly.zero()
    for item in doc:
        g = graph_from_doc(item["graph"])
        out = out + GraphPoly.from_graph(g, frac_from_str(item["coefficient"]))
    return out


def tensor_poly_to_doc(t: GraphTensorPoly) -> list:
    out = []
    for (k1, k2), coeff in t.terms():
        out.append(
            {
                "coefficient": frac_to_str(coeff),
                "graphs": [json.loads(k1.decode("ascii")), json.loads(k2.decode("ascii"))],
            }
        )
    return out


def tensor_poly_from_doc(doc: list) -> GraphTensorPoly:
    out = GraphTensorPoly.zero()
    for item in doc:
        g1 = graph_from_doc(item["graphs"][0])
        g2 = graph_from_doc(item["graphs"][1])
        out = out + GraphTensorPoly.of(g1, g2, frac_from_str(item["coefficient"]))
    return out


def invariant_to_doc(t: InvariantTensor) -> dict:
    terms = []
    for (blocks, ext), coeff in t.terms():
        terms.append(
            {
                "coeff": frac_to_str(coeff),
                "blocks": [list(b) for b in blocks],
                "external": list(ext),
            }
        )
    return {"dimension": t.dim, "terms": terms}


def invariant_from_doc(doc: dict) -> InvariantTensor:
    terms = {}
    for item in doc["terms"]:
        blocks = tuple(sorted(tuple(sorted(b)) for b in item["blocks"]))
        ext = tuple(sorted(item["external"]))
        key = (blocks, ext)
        terms[key] = terms.get(key, Fraction(0)) + frac_from_str(item["coeff"])
    return InvariantTensor(doc["dimension"], terms)


def raw_tensor_to_doc(t: RawTensor) -> dict:
    return {
        "dimension": t.dim,
        "length": t.length,
        "words": [{"coeff": frac_to_str(c), "word": list(w)} for w, c in t.terms()],
    }
