"""Coxeter group elements as integer matrices on the root lattice.

Reflections, inversion sets, the two length functions, absolute order, the
noncrossing partition poset, c-sortability and cover reflections.

Convention (fixed globally): a word (v1,...,vk) denotes s_{v1} o ... o s_{vk},
so its matrix is S_{v1} @ ... @ S_{vk} and the rightmost letter acts first
on column vectors: w(v) = mat . v.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce

from . import fields
from .quiver import (
    DimVector,
    Quiver,
    Root,
    Vertex,
    cartan_matrix,
    coxeter_element_word,
    positive_roots,
    require_finite_type,
    simple_roots,
    support,
)


@dataclass(frozen=True)
class GroupElement:
    """Integer matrix acting on dimension vectors by w(v) = mat . v."""

    mat: tuple[tuple[int, ...], ...]

    @staticmethod
    def identity(n: int) -> "GroupElement":
        return GroupElement(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @property
    def n(self) -> int:
        return len(self.mat)

    def apply(self, v: DimVector) -> DimVector:
        return tuple(sum(row[j] * v[j] for j in range(len(v))) for row in self.mat)

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        a, b = self.mat, other.mat
        n = len(a)
        return GroupElement(
            tuple(
                tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
                for i in range(n)
            )
        )

    def inverse(self) -> "GroupElement":
        rows = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(self.n)]
                for i, row in enumerate(self.mat)]
        reduced, pivots = fields.rref(fields.QQ, rows)
        if pivots != list(range(self.n)):
            raise ValueError("matrix is not invertible")
        inv = []
        for row in reduced:
            tail = row[self.n:]
            if any(x.denominator != 1 for x in tail):
                raise ValueError("inverse is not integral")
            inv.append(tuple(int(x) for x in tail))
        return GroupElement(tuple(inv))

    def is_identity(self) -> bool:
        return all(self.mat[i][j] == (1 if i == j else 0) for i in range(self.n) for j in range(self.n))

    def to_json(self) -> str:
        return json.dumps([list(row) for row in self.mat])


@dataclass(frozen=True)
class NCPoset:
    """The interval [e, cox(Q)] of absolute order."""

    elements: tuple[GroupElement, ...]
    leq: tuple[tuple[bool, ...], ...]

    def __len__(self) -> int:
        return len(self.elements)

    def index(self, w: GroupElement) -> int:
        return self.elements.index(w)

    def cover_relations(self) -> tuple[tuple[int, int], ...]:
        n = len(self.elements)
        covers = []
        for i in range(n):
            for j in range(n):
                if i == j or not self.leq[i][j]:
                    continue
                if not any(
                    k != i and k != j and self.leq[i][k] and self.leq[k][j] for k in range(n)
                ):
                    covers.append((i, j))
        return tuple(covers)

    def to_json(self) -> str:
        return json.dumps(
            {
                "elements": [[list(r) for r in w.mat] for w in self.elements],
                "cover_relations": [list(c) for c in self.cover_relations()],
            }
        )


def reflection(q: Quiver, v: Root) -> GroupElement:
    """s_v(w) = w - (v,w) v for a root v."""
    if len(v) != q.n or sum(
        cartan_matrix(q)[i][j] * v[i] * v[j] for i in range(q.n) for j in range(q.n)
    ) != 2:
        raise ValueError(f"{v} is not a root")
    b = cartan_matrix(q)
    cols = []
    for j in range(q.n):
        pairing = sum(b[k][j] * v[k] for k in range(q.n))
        cols.append(tuple((1 if i == j else 0) - pairing * v[i] for i in range(q.n)))
    return GroupElement(tuple(tuple(cols[j][i] for j in range(q.n)) for i in range(q.n)))


@lru_cache(maxsize=None)
def simple_reflection(q: Quiver, v: Vertex) -> GroupElement:
    return reflection(q, simple_roots(q)[v - 1])


def word_to_element(q: Quiver, word: tuple[Vertex, ...]) -> GroupElement:
    mats = [simple_reflection(q, v) for v in word]
    return reduce(lambda a, b: a * b, mats, GroupElement.identity(q.n))


@lru_cache(maxsize=None)
def coxeter_element(q: Quiver) -> GroupElement:
    return word_to_element(q, coxeter_element_word(q))


@lru_cache(maxsize=None)
def weyl_group(q: Quiver) -> tuple[GroupElement, ...]:
    """Full finite Weyl group by breadth-first closure under the simple
    reflections (right multiplication)."""
    require_finite_type(q)
    gens = [simple_reflection(q, v) for v in q.vertices]
    seen = {GroupElement.identity(q.n)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for w in frontier:
            for s in gens:
                u = w * s
                if u not in seen:
                    seen.add(u)
                    nxt.append(u)
        frontier = nxt
    return tuple(sorted(seen, key=lambda w: w.mat))


def inversion_set(q: Quiver, w: GroupElement) -> frozenset[Root]:
    """Positive roots sent to negative roots by w^{-1}."""
    require_finite_type(q)
    winv = w.inverse()
    return frozenset(
        alpha for alpha in positive_roots(q) if any(x < 0 for x in winv.apply(alpha))
    )


def length_S(q: Quiver, w: GroupElement) -> int:
    return len(inversion_set(q, w))


def fixed_space(q: Quiver, w: GroupElement) -> tuple[tuple[Fraction, ...], ...]:
    """Canonical rational basis of ker(mat - id)."""
    rows = [
        [Fraction(w.mat[i][j] - (1 if i == j else 0)) for j in range(q.n)]
        for i in range(q.n)
    ]
    basis = fields.nullspace(fields.QQ, rows, q.n)
    return fields.row_space(fields.QQ, basis)


def absolute_length(q: Quiver, w: GroupElement) -> int:
    """l_T(w) = n - dim fix(w) (Carter's lemma) in finite type."""
    require_finite_type(q)
    return q.n - len(fixed_space(q, w))


def absolute_leq(q: Quiver, u: GroupElement, v: GroupElement) -> bool:
    """u <= v in absolute order: l_T(u) + l_T(u^{-1} v) = l_T(v)."""
    return absolute_length(q, u) + absolute_length(q, u.inverse() * v) == absolute_length(q, v)


@lru_cache(maxsize=None)
def noncrossing_partitions(q: Quiver) -> NCPoset:
    """The interval [e, cox(Q)] in absolute order, as a poset."""
    require_finite_type(q)
    cox = coxeter_element(q)
    lcox = absolute_length(q, cox)
    elems = [
        w
        for w in weyl_group(q)
        if absolute_length(q, w) + absolute_length(q, w.inverse() * cox) == lcox
    ]
    elems.sort(key=lambda w: (absolute_length(q, w), w.mat))
    leq = tuple(
        tuple(absolute_leq(q, u, v) for v in elems) for u in elems
    )
    return NCPoset(tuple(elems), leq)


def _left_descent(q: Quiver, w: GroupElement, v: Vertex) -> bool:
    """l_S(s_v w) < l_S(w), i.e. e_v lies in the inversion set of w."""
    return any(x < 0 for x in w.inverse().apply(simple_roots(q)[v - 1]))


def _right_descent(q: Quiver, w: GroupElement, v: Vertex) -> bool:
    """l_S(w s_v) < l_S(w), i.e. w(e_v) is a negative root."""
    return any(x < 0 for x in w.apply(simple_roots(q)[v - 1]))


def _validate_word(q: Quiver, c_word: tuple[Vertex, ...]) -> None:
    if len(set(c_word)) != len(c_word) or any(not 1 <= v <= q.n for v in c_word):
        raise ValueError(f"invalid Coxeter word {c_word!r}")


def is_c_sortable(q: Quiver, w: GroupElement, c_word: tuple[Vertex, ...]) -> bool:
    """Reading's inductive characterization of c-sortability.

    With s the first letter of the word: if l_S(sw) > l_S(w) then w must lie
    in the reflection subgroup generated by the other simple reflections and
    be sc-sortable; if l_S(sw) < l_S(w) then sw must be scs-sortable.
    """
    require_finite_type(q)
    _validate_word(q, c_word)
    return _sortable(q, w, tuple(c_word))


def _sortable(q: Quiver, w: GroupElement, c_word: tuple[Vertex, ...]) -> bool:
    if not c_word:
        return w.is_identity()
    v = c_word[0]
    if _left_descent(q, w, v):
        return _sortable(q, simple_reflection(q, v) * w, c_word[1:] + (v,))
    rest = set(c_word[1:])
    if any(not support(alpha) <= rest for alpha in inversion_set(q, w)):
        return False  # w is outside the parabolic subgroup on the other letters
    return _sortable(q, w, c_word[1:])


def cover_reflections(q: Quiver, w: GroupElement) -> frozenset[GroupElement]:
    """{w s w^{-1} : s a right descent of w}."""
    winv = w.inverse()
    out = set()
    for v in q.vertices:
        if _right_descent(q, w, v):
            out.add(w * simple_reflection(q, v) * winv)
    return frozenset(out)


def reduced_word(q: Quiver, w: GroupElement) -> tuple[Vertex, ...]:
    """Canonical reduced word: repeatedly strip the smallest left descent."""
    word = []
    cur = w
    while not cur.is_identity():
        v = next(v for v in q.vertices if _left_descent(q, cur, v))
        word.append(v)
        cur = simple_reflection(q, v) * cur
    return tuple(word)


def c_sorting_word(q: Quiver, w: GroupElement, c_word: tuple[Vertex, ...]) -> tuple[Vertex, ...]:
    """The c-sorting word of w: greedy subword of c^infinity."""
    _validate_word(q, c_word)
    if len(set(c_word)) != q.n:
        raise ValueError("c-sorting needs a full Coxeter word")
    out = []
    cur = w
    while not cur.is_identity():
        for v in c_word:
            if _left_descent(q, cur, v):
                out.append(v)
                cur = simple_reflection(q, v) * cur
    return tuple(out)


def element_repr(q: Quiver, w: GroupElement) -> str:
    """Reduced word rendering, 'e' for the identity."""
    word = reduced_word(q, w)
    return "e" if not word else ".".join(f"s{v}" for v in word)
