"""Invariant tensors: the nondiagrammatic side of the graph Hopf algebra.

An invariant tensor over dimension n is a rational combination of terms, each
a multiset of internal block monomials (degree >= 1) together with an external
monomial, all over the orthonormal basis x_1..x_n.  Everything here is built
from the chord invariants beta_c, which keeps O(n)-invariance automatic.

The graph-to-tensor map ``phi`` block-symmetrizes beta_c along a block
presentation of the graph; ``psi`` inverts it by evaluating an invariant lift
against the coinvariants z_c.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product as iproduct
from typing import Iterable, Sequence

from .chords import (
    BlockShape,
    RawTensor,
    beta,
    chord_from_graph,
    enumerate_chords,
    graph_from_chord,
    pair_raw,
    z_coinv,
)
from .errors import (
    DimensionMismatch,
    InhomogeneousInput,
    NotInLPlus,
    ShapeMismatch,
)
from .graphs import HalfEdgeGraph
from .poly import GraphPoly

Blocks = tuple[tuple[int, ...], ...]
Mono = tuple[int, ...]
Term = tuple[Blocks, Mono]


def _norm_term(blocks: Iterable[Sequence[int]], external: Sequence[int]) -> Term:
    bs = tuple(sorted(tuple(sorted(b)) for b in blocks))
    return bs, tuple(sorted(external))


class InvariantTensor:
    """Sparse rational combination of block-monomial terms over dimension n."""

    __slots__ = ("dim", "_terms")

    def __init__(self, dim: int, terms: dict[Term, Fraction] | None = None):
        self.dim = dim
        self._terms = {t: v for t, v in (terms or {}).items() if v != 0}

    @classmethod
    def unit(cls, dim: int) -> "InvariantTensor":
        return cls(dim, {((), ()): Fraction(1)})

    @classmethod
    def zero(cls, dim: int) -> "InvariantTensor":
        return cls(dim, {})

    def terms(self):
        return iter(sorted(self._terms.items()))

    def coeff(self, blocks: Iterable[Sequence[int]], external: Sequence[int]) -> Fraction:
        return self._terms.get(_norm_term(blocks, external), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __add__(self, other: "InvariantTensor") -> "InvariantTensor":
        if self.dim != other.dim:
            raise DimensionMismatch("cannot add tensors over different dimensions")
        out = dict(self._terms)
        for t, v in other._terms.items():
            out[t] = out.get(t, Fraction(0)) + v
        return InvariantTensor(self.dim, out)

    def __sub__(self, other: "InvariantTensor") -> "InvariantTensor":
        return self + other.scale(-1)

    def scale(self, c) -> "InvariantTensor":
        c = Fraction(c)
        return InvariantTensor(self.dim, {t: c * v for t, v in self._terms.items()})

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, InvariantTensor)
            and self.dim == other.dim
            and self._terms == other._terms
        )

    def __hash__(self):
        return hash((self.dim, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        return f"InvariantTensor(dim={self.dim}, {len(self._terms)} terms)"

    def bigrades(self) -> set[tuple[int, int]]:
        """Set of (N, k) with 2N the total degree and k the external degree."""
        out = set()
        for (blocks, ext), _ in self._terms.items():
            total = sum(len(b) for b in blocks) + len(ext)
            if total % 2:
                raise InhomogeneousInput("term of odd total degree cannot be invariant")
            out.add((total // 2, len(ext)))
        return out

    def bigrade(self) -> tuple[int, int]:
        grades = self.bigrades()
        if len(grades) != 1:
            raise InhomogeneousInput(f"tensor is not homogeneous: bigrades {sorted(grades)}")
        return grades.pop()

    def component(self, bigrade: tuple[int, int]) -> "InvariantTensor":
        out = {}
        for (blocks, ext), v in self._terms.items():
            total = sum(len(b) for b in blocks) + len(ext)
            if (total // 2, len(ext)) == bigrade:
                out[(blocks, ext)] = v
        return InvariantTensor(self.dim, out)


def block_symmetrize(f: RawTensor, shape: BlockShape) -> InvariantTensor:
    """Project a raw tensor to block monomials along the given layout."""
    if f.length != shape.total:
        raise ShapeMismatch(f"raw length {f.length} != shape total {shape.total}")
    bounds = []
    pos = 0
    for k in shape.internal:
        bounds.append((pos, pos + k))
        pos += k
    ext_lo = pos
    out: dict[Term, Fraction] = {}
    for word, c in f.terms():
        blocks = [word[a:b] for a, b in bounds]
        term = _norm_term(blocks, word[ext_lo:])
        out[term] = out.get(term, Fraction(0)) + c
    return InvariantTensor(f.dim, out)


@lru_cache(maxsize=None)
def _phi_cached(g: HalfEdgeGraph, n: int) -> InvariantTensor:
    shape, c = chord_from_graph(g)
    return block_symmetrize(beta(c, n), shape)


def phi(g: HalfEdgeGraph, n: int) -> InvariantTensor:
    """The graph-to-tensor map: block-symmetrized chord invariant."""
    return _phi_cached(g, n)


def phi_poly(p: GraphPoly, n: int) -> InvariantTensor:
    out = InvariantTensor.zero(n)
    for g, c in p.graphs():
        out = out + phi(g, n).scale(c)
    return out


def tensor_mul(t1: InvariantTensor, t2: InvariantTensor) -> InvariantTensor:
    """Union of block multisets and product of external monomials, bilinearly."""
    if t1.dim != t2.dim:
        raise DimensionMismatch("tensor product needs equal dimensions")
    out: dict[Term, Fraction] = {}
    for (b1, e1), c1 in t1._terms.items():
        for (b2, e2), c2 in t2._terms.items():
            term = _norm_term(b1 + b2, e1 + e2)
            out[term] = out.get(term, Fraction(0)) + c1 * c2
    return InvariantTensor(t1.dim, out)


class PairTensor:
    """Element of (tensors over m) (x) (tensors over n), for the coproduct."""

    __slots__ = ("dim_left", "dim_right", "_terms")

    def __init__(self, dim_left: int, dim_right: int, terms=None):
        self.dim_left = dim_left
        self.dim_right = dim_right
        self._terms = {t: v for t, v in (terms or {}).items() if v != 0}

    @classmethod
    def outer(cls, t1: InvariantTensor, t2: InvariantTensor) -> "PairTensor":
        out = {}
        for k1, c1 in t1._terms.items():
            for k2, c2 in t2._terms.items():
                out[(k1, k2)] = c1 * c2
        return cls(t1.dim, t2.dim, out)

    def __add__(self, other: "PairTensor") -> "PairTensor":
        if (self.dim_left, self.dim_right) != (other.dim_left, other.dim_right):
            raise DimensionMismatch("pair tensors over different dimensions")
        out = dict(self._terms)
        for t, v in other._terms.items():
            out[t] = out.get(t, Fraction(0)) + v
        return PairTensor(self.dim_left, self.dim_right, out)

    def __sub__(self, other: "PairTensor") -> "PairTensor":
        return self + other.scale(-1)

    def scale(self, c) -> "PairTensor":
        c = Fraction(c)
        return PairTensor(self.dim_left, self.dim_right, {t: c * v for t, v in self._terms.items()})

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, PairTensor)
            and (self.dim_left, self.dim_right) == (other.dim_left, other.dim_right)
            and self._terms == other._terms
        )

    def __hash__(self):
        return hash((self.dim_left, self.dim_right, frozenset(self._terms.items())))

    def is_zero(self) -> bool:
        return not self._terms

    def terms(self):
        return iter(sorted(self._terms.items()))

    def left_counit(self) -> InvariantTensor:
        """Collapse the left leg: keep terms whose left factor is the unit."""
        out = {}
        for (tl, tr), v in self._terms.items():
            if tl == ((), ()):
                out[tr] = out.get(tr, Fraction(0)) + v
        return InvariantTensor(self.dim_right, out)

    def right_counit(self) -> InvariantTensor:
        out = {}
        for (tl, tr), v in self._terms.items():
            if tr == ((), ()):
                out[tl] = out.get(tl, Fraction(0)) + v
        return InvariantTensor(self.dim_left, out)

    def __repr__(self) -> str:
        return f"PairTensor(dims=({self.dim_left},{self.dim_right}), {len(self._terms)} terms)"


def _subsets(seq: Sequence) -> Iterable[tuple[tuple, tuple]]:
    """All (chosen, rest) splits of positions of ``seq``."""
    n = len(seq)
    for mask in range(1 << n):
        chosen = tuple(seq[i] for i in range(n) if mask >> i & 1)
        rest = tuple(seq[i] for i in range(n) if not mask >> i & 1)
        yield chosen, rest


def tensor_delta(t: InvariantTensor, m: int, n: int) -> PairTensor:
    """Coproduct: split blocks and deconcatenate the external monomial, then
    push the left leg through pi_m (indices <= m) and the right leg through
    pi_n (indices > m, shifted down).  Terms with a killed variable vanish."""
    if t.dim != m + n:
        raise DimensionMismatch(f"tensor dimension {t.dim} != m + n = {m + n}")
    out: dict = {}
    for (blocks, ext), c in t._terms.items():
        for bl, br in _subsets(blocks):
            if any(any(x > m for x in b) for b in bl):
                continue
            if any(any(x <= m for x in b) for b in br):
                continue
            for el, er in _subsets(ext):
                if any(x > m for x in el) or any(x <= m for x in er):
                    continue
                left = _norm_term(bl, el)
                right = _norm_term(
                    [tuple(x - m for x in b) for b in br], tuple(x - m for x in er)
                )
                out[(left, right)] = out.get((left, right), Fraction(0)) + c
    return PairTensor(m, n, out)


def _match_count(block: Mono, ext: Mono) -> int:
    """Number of slot bijections matching equal values, counted over positions."""
    if sorted(block) != sorted(ext):
        return 0
    count = 1
    for x in set(block):
        count *= _factorial(block.count(x))
    return count


def _factorial(n: int) -> int:
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def tensor_prelie(t1: InvariantTensor, t2: InvariantTensor) -> InvariantTensor:
    """Pre-Lie contraction of a block of t1 against the external monomial of t2.

    Both arguments must lie in l_plus: every homogeneous component of bigrade
    (N, k) has N > k.
    """
    if t1.dim != t2.dim:
        raise DimensionMismatch("pre-Lie product needs equal dimensions")
    for t in (t1, t2):
        for N, k in t.bigrades():
            if N <= k:
                raise NotInLPlus(f"component of bigrade ({N},{k}) is not in l_plus")
    out: dict[Term, Fraction] = {}
    for (b1, e1), c1 in t1._terms.items():
        for (b2, e2), c2 in t2._terms.items():
            l0 = len(e2)
            for i, block in enumerate(b1):
                if len(block) != l0:
                    continue
                matches = _match_count(block, e2)
                if not matches:
                    continue
                term = _norm_term(b1[:i] + b1[i + 1 :] + b2, e1)
                out[term] = out.get(term, Fraction(0)) + c1 * c2 * matches
    return InvariantTensor(t1.dim, out)


def project(t: InvariantTensor) -> InvariantTensor:
    """Drop every term containing the top index; the result lives over dim - 1."""
    n = t.dim - 1
    out = {}
    for (blocks, ext), c in t._terms.items():
        if any(any(x > n for x in b) for b in blocks) or any(x > n for x in ext):
            continue
        out[(blocks, ext)] = c
    return InvariantTensor(n, out)


def project_to(t: InvariantTensor, n: int) -> InvariantTensor:
    out = t
    while out.dim > n:
        out = project(out)
    return out


def apply_signed_permutation(
    t: InvariantTensor, perm: Sequence[int], signs: Sequence[int]
) -> InvariantTensor:
    """Act by the orthogonal map x_i -> signs[i] * x_perm[i] (1-based tables)."""
    out: dict[Term, Fraction] = {}
    for (blocks, ext), c in t._terms.items():
        sign = 1
        for x in [x for b in blocks for x in b] + list(ext):
            sign *= signs[x - 1]
        term = _norm_term(
            [tuple(perm[x - 1] for x in b) for b in blocks],
            tuple(perm[x - 1] for x in ext),
        )
        out[term] = out.get(term, Fraction(0)) + c * sign
    return InvariantTensor(t.dim, out)


# ---------------------------------------------------------------------------
# The inverse map


def _invariant_lift(terms: list[tuple[Blocks, Mono, Fraction]], sizes: tuple[int, ...], dim: int) -> RawTensor:
    """Average block-monomial terms over within-block permutations, swaps of
    equal-size blocks, and external permutations; an invariant preimage of the
    block projection (characteristic zero)."""
    k0 = len(terms[0][1]) if terms else 0
    length = sum(sizes) + k0
    size_groups: list[list[int]] = []
    for i, s in enumerate(sizes):
        if size_groups and sizes[size_groups[-1][0]] == s:
            size_groups[-1].append(i)
        else:
            size_groups.append([i])
    group_size = 1
    for grp in size_groups:
        group_size *= _factorial(len(grp))
    within = group_size * _factorial(k0)
    for s in sizes:
        within *= _factorial(s)
    inv_order = Fraction(1, within)

    words: dict[tuple[int, ...], Fraction] = {}
    for blocks, ext, coeff in terms:
        ordered = sorted(blocks, key=lambda b: (len(b), b))
        if tuple(len(b) for b in ordered) != sizes:
            raise ShapeMismatch("term does not match the shape group")
        weight = coeff * inv_order
        for group_orders in iproduct(*[permutations(grp) for grp in size_groups]):
            arrangement = [None] * len(sizes)
            for grp, order in zip(size_groups, group_orders):
                for src, dst in zip(grp, order):
                    arrangement[dst] = ordered[src]
            for chunk_words in iproduct(*[permutations(b) for b in arrangement]):
                head = tuple(x for chunk in chunk_words for x in chunk)
                for tail in permutations(ext):
                    word = head + tail
                    words[word] = words.get(word, Fraction(0)) + weight
    return RawTensor(dim, length, words)


def psi(t: InvariantTensor, n: int | None = None) -> GraphPoly:
    """Evaluate an invariant lift against the coinvariants z_c.

    Requires a homogeneous tensor; a tensor of bigrade (N, k) with N > n maps
    to zero.  On images of ``phi`` this inverts it exactly.
    """
    if n is None:
        n = t.dim
    if n != t.dim:
        raise DimensionMismatch(f"tensor lives over dimension {t.dim}, not {n}")
    if t.is_zero():
        return GraphPoly.zero()
    N, _k = t.bigrade()
    if N > n:
        return GraphPoly.zero()

    groups: dict[tuple[int, ...], list[tuple[Blocks, Mono, Fraction]]] = {}
    for (blocks, ext), c in t._terms.items():
        sizes = tuple(sorted(len(b) for b in blocks))
        groups.setdefault(sizes, []).append((blocks, ext, c))

    out = GraphPoly.zero()
    diagrams = enumerate_chords(N)
    for sizes, terms in sorted(groups.items()):
        shape = BlockShape(sizes, len(terms[0][1]))
        lift = _invariant_lift(terms, sizes, t.dim)
        for c in diagrams:
            value = pair_raw(lift, z_coinv(c, n))
            if value:
                out = out + GraphPoly.from_graph(graph_from_chord(shape, c), value)
    return out
