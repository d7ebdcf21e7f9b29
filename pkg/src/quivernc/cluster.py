"""Elementary model of the cluster category.

Indecomposables are the indecomposable representations plus one shifted
projective P_v[1] per vertex; all orthogonality checks reduce to Hom/Ext
statements inside rep Q.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

from .quiver import Quiver, Root, Vertex, positive_roots, require_finite_type, support
from .replab import ext_dim_roots
from .tors import IndecSet, gen, is_support_tilting


@dataclass(frozen=True)
class CCIndec:
    """Either an indecomposable representation (root) or a shifted
    projective P_vertex[1]."""

    root: Root | None = None
    shift: Vertex | None = None

    def __post_init__(self):
        if (self.root is None) == (self.shift is None):
            raise ValueError("exactly one of root / shift must be set")

    @property
    def is_shift(self) -> bool:
        return self.shift is not None

    def sort_key(self):
        return (1, (self.shift,)) if self.is_shift else (0, self.root)

    def to_obj(self):
        return {"shift": self.shift} if self.is_shift else {"rep": list(self.root)}

    def __repr__(self) -> str:
        return f"shift({self.shift})" if self.is_shift else f"rep{list(self.root)}"


def cc_rep(root: Root) -> CCIndec:
    return CCIndec(root=tuple(root))


def cc_shift(v: Vertex) -> CCIndec:
    return CCIndec(shift=v)


ClusterTilting = frozenset  # of CCIndec


def cc_ext_orthogonal(q: Quiver, x: CCIndec, y: CCIndec) -> bool:
    """No extensions in the cluster category, via the rep Q reductions:
    two reps need Ext vanishing both ways; a rep against P_i[1] needs
    Hom(P_i, X) = 0, i.e. X_i = 0; two shifts are always orthogonal."""
    require_finite_type(q)
    if x.is_shift and y.is_shift:
        return True
    if x.is_shift:
        return y.root[x.shift - 1] == 0
    if y.is_shift:
        return x.root[y.shift - 1] == 0
    return (
        ext_dim_roots(q, x.root, y.root) == 0
        and ext_dim_roots(q, y.root, x.root) == 0
    )


@lru_cache(maxsize=None)
def all_cc_indecs(q: Quiver) -> tuple[CCIndec, ...]:
    require_finite_type(q)
    items = [cc_rep(r) for r in positive_roots(q)] + [cc_shift(v) for v in q.vertices]
    return tuple(sorted(items, key=CCIndec.sort_key))


@lru_cache(maxsize=None)
def cluster_tilting_objects(q: Quiver) -> tuple[ClusterTilting, ...]:
    """All maximal pairwise-orthogonal objects; each has exactly n summands."""
    items = all_cc_indecs(q)
    orth = {
        (a, b): cc_ext_orthogonal(q, a, b) for a in items for b in items
    }
    found: list[ClusterTilting] = []

    def extend(chosen: tuple[CCIndec, ...], start: int) -> None:
        if len(chosen) == q.n:
            found.append(frozenset(chosen))
            return
        for i in range(start, len(items)):
            x = items[i]
            if all(orth[(x, c)] for c in chosen):
                extend(chosen + (x,), i + 1)

    extend((), 0)
    for t in found:
        extra = [
            z for z in items if z not in t and all(orth[(z, x)] for x in t)
        ]
        if extra:
            raise RuntimeError(f"cluster tilting object {sorted(t, key=CCIndec.sort_key)} is not maximal")
    return tuple(sorted(found, key=lambda t: sorted(x.sort_key() for x in t)))


def complete_support_tilting(q: Quiver, c: IndecSet) -> ClusterTilting:
    """Add the shifted projectives of the vertices outside the support."""
    if not is_support_tilting(q, c):
        raise ValueError("input is not a support tilting object")
    supp: set[Vertex] = set()
    for r in c:
        supp |= support(r)
    return frozenset(
        {cc_rep(r) for r in c} | {cc_shift(v) for v in q.vertices if v not in supp}
    )


def support_tilting_of(t: ClusterTilting) -> IndecSet:
    """Inverse of completion: drop the shifted projectives."""
    return frozenset(x.root for x in t if not x.is_shift)


def mutate(q: Quiver, t: ClusterTilting, x: CCIndec) -> ClusterTilting:
    """Exchange x for the unique other complement of t - x."""
    t = frozenset(t)
    if x not in t:
        raise ValueError(f"{x!r} is not a summand of the cluster tilting object")
    rest = t - {x}
    complements = [
        z
        for z in all_cc_indecs(q)
        if z not in rest and all(cc_ext_orthogonal(q, z, c) for c in rest)
    ]
    if len(complements) != 2 or x not in complements:
        raise RuntimeError(
            f"almost tilting object has {len(complements)} complements, expected 2"
        )
    other = next(z for z in complements if z != x)
    return rest | {other}


def gen_of(q: Quiver, t: ClusterTilting) -> IndecSet:
    """Gen of the rep-part summands (shifts contribute nothing)."""
    return gen(q, support_tilting_of(t))


def gen_leq(q: Quiver, t: ClusterTilting, v: ClusterTilting) -> bool:
    return gen_of(q, t) <= gen_of(q, v)


def cluster_tilting_to_json(t: ClusterTilting) -> str:
    return json.dumps(
        {"summands": [x.to_obj() for x in sorted(t, key=CCIndec.sort_key)]}
    )
