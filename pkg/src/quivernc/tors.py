"""Torsion classes, Gen-closure, Ext/split projectives, support tilting and
the wide-subcategory extraction a(T).

Subcategories closed under sums and summands are identified with their sets
of indecomposables, i.e. with frozensets of positive roots.  The brute-force
oracles work with explicit GF(2) representations.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from . import fields
from .errors import OracleCapError
from .fields import GF2, QQ
from .quiver import Quiver, Root, Vertex, positive_roots, require_finite_type, support
from .replab import (
    DEFAULT_CAP,
    Representation,
    decompose,
    direct_sum,
    ext_dim_roots,
    hom_basis,
    hom_dim_roots,
    indecomposable,
    quotient_representation,
    sub_representation,
    subrepresentation_subspaces,
)

IndecSet = frozenset  # of Root


def _check_roots(q: Quiver, s: IndecSet) -> None:
    bad = [r for r in s if r not in positive_roots(q)]
    if bad:
        raise ValueError(f"not positive roots of the quiver: {sorted(bad)}")


def gen(q: Quiver, s: IndecSet, field=QQ) -> IndecSet:
    """Indecomposables of Gen(S): quotients of finite sums of members.

    X lies in Gen(S) iff the trace of S in X (the sum of all images of
    morphisms out of add S) is all of X.
    """
    require_finite_type(q)
    s = frozenset(s)
    _check_roots(q, s)
    if not s:
        return frozenset()
    out = set()
    for x in positive_roots(q):
        if x in s:
            out.add(x)
            continue
        target = indecomposable(q, x, field)
        spans = [[] for _ in range(q.n)]
        for r in s:
            for phi in hom_basis(indecomposable(q, r, field), target).elements:
                for v in range(q.n):
                    cols = len(phi[v][0]) if phi[v] else 0
                    for c in range(cols):
                        spans[v].append([phi[v][i][c] for i in range(target.dims[v])])
        if all(
            fields.rank(field, spans[v]) == target.dims[v] for v in range(q.n)
        ):
            out.add(x)
    return frozenset(out)


@lru_cache(maxsize=None)
def quotient_root_closure(q: Quiver, alpha: Root, cap: int = DEFAULT_CAP) -> frozenset[Root]:
    """Every root appearing as a summand of some quotient of M_alpha (GF(2))."""
    m = indecomposable(q, alpha, GF2)
    out: set[Root] = set()
    for sub in subrepresentation_subspaces(m, cap):
        out.update(decompose(q, quotient_representation(m, sub)))
    return frozenset(out)


def _multisets_with_dim(q: Quiver, target: tuple[int, ...]) -> list[tuple[Root, ...]]:
    roots = positive_roots(q)

    def rec(i: int, remaining: tuple[int, ...]) -> list[tuple[Root, ...]]:
        if all(x == 0 for x in remaining):
            return [()]
        if i == len(roots):
            return []
        out = []
        r = roots[i]
        max_copies = min(
            (remaining[v] // r[v] for v in range(q.n) if r[v]), default=0
        )
        for k in range(max_copies + 1):
            rest = tuple(remaining[v] - k * r[v] for v in range(q.n))
            for tail in rec(i + 1, rest):
                out.append((r,) * k + tail)
        return out

    return rec(0, target)


@lru_cache(maxsize=None)
def extension_root_closure(
    q: Quiver, alpha: Root, beta: Root, cap: int = DEFAULT_CAP
) -> frozenset[Root]:
    """Summands of every middle term E of 0 -> M_beta -> E -> M_alpha -> 0.

    Candidates are all multisets of roots with the right total dimension;
    a candidate qualifies when some GF(2) subrepresentation is isomorphic to
    M_beta with quotient isomorphic to M_alpha.
    """
    total = tuple(a + b for a, b in zip(alpha, beta))
    if sum(total) > cap:
        raise OracleCapError(
            f"extension search at dimension {sum(total)} exceeds the cap {cap}"
        )
    out: set[Root] = set()
    for candidate in _multisets_with_dim(q, total):
        e = direct_sum([indecomposable(q, r, GF2) for r in candidate])
        found = False
        for sub in subrepresentation_subspaces(e, cap):
            if tuple(len(rows) for rows in sub) != beta:
                continue
            if decompose(q, sub_representation(e, sub)) != (beta,):
                continue
            if decompose(q, quotient_representation(e, sub)) == (alpha,):
                found = True
                break
        if found:
            out.update(candidate)
    return frozenset(out)


def is_torsion_class(q: Quiver, s: IndecSet, cap: int = DEFAULT_CAP) -> bool:
    """Brute-force oracle: closed under quotients and extensions over GF(2)."""
    require_finite_type(q)
    s = frozenset(s)
    _check_roots(q, s)
    for alpha in s:
        if not quotient_root_closure(q, alpha, cap) <= s:
            return False
    for alpha in s:
        for beta in s:
            if not extension_root_closure(q, alpha, beta, cap) <= s:
                return False
    return True


def is_wide(q: Quiver, s: IndecSet, cap: int = DEFAULT_CAP) -> bool:
    """Oracle: closed under kernels, cokernels and extensions, checked on
    every GF(2) morphism between members."""
    require_finite_type(q)
    s = frozenset(s)
    _check_roots(q, s)
    for alpha in s:
        for beta in s:
            if not extension_root_closure(q, alpha, beta, cap) <= s:
                return False
            ma = indecomposable(q, alpha, GF2)
            mb = indecomposable(q, beta, GF2)
            basis = hom_basis(ma, mb).elements
            for coeffs in itertools.product(range(2), repeat=len(basis)):
                if not any(coeffs):
                    continue
                phi = [
                    [
                        [
                            sum(c * basis[k][v][i][j] for k, c in enumerate(coeffs)) % 2
                            for j in range(ma.dims[v])
                        ]
                        for i in range(mb.dims[v])
                    ]
                    for v in range(q.n)
                ]
                kernel = tuple(
                    fields.row_space(GF2, fields.nullspace(GF2, phi[v], ma.dims[v]))
                    for v in range(q.n)
                )
                if not set(decompose(q, sub_representation(ma, kernel))) <= s:
                    return False
                image = tuple(
                    fields.row_space(
                        GF2,
                        [
                            [phi[v][i][j] for i in range(mb.dims[v])]
                            for j in range(ma.dims[v])
                        ],
                    )
                    for v in range(q.n)
                )
                if not set(decompose(q, quotient_representation(mb, image))) <= s:
                    return False
    return True


def _require_torsion_class(q: Quiver, t: IndecSet) -> None:
    if frozenset(t) not in torsion_classes_set(q):
        raise ValueError("input is not a (finitely generated) torsion class")


def ext_projectives(q: Quiver, t: IndecSet) -> IndecSet:
    """Roots of T with Ext^1 into every member of T vanishing."""
    require_finite_type(q)
    t = frozenset(t)
    _require_torsion_class(q, t)
    return frozenset(
        a for a in t if all(ext_dim_roots(q, a, b) == 0 for b in t)
    )


def split_projectives(q: Quiver, t: IndecSet) -> IndecSet:
    """The minimal generator: ext-projectives with redundant summands removed."""
    t = frozenset(t)
    current = set(ext_projectives(q, t))
    changed = True
    while changed:
        changed = False
        for x in sorted(current):
            if x in gen(q, frozenset(current - {x})):
                current.remove(x)
                changed = True
                break
    result = frozenset(current)
    if gen(q, result) != t:
        raise RuntimeError("minimal generator does not generate the torsion class")
    return result


def a_of(q: Quiver, t: IndecSet) -> IndecSet:
    """The wide subcategory of T: members receiving no morphism from a
    non-split Ext-projective."""
    t = frozenset(t)
    _require_torsion_class(q, t)
    nonsplit = ext_projectives(q, t) - split_projectives(q, t)
    return frozenset(
        x
        for x in t
        if all(hom_dim_roots(q, p, x) == 0 for p in nonsplit)
    )


def is_support_tilting(q: Quiver, c: IndecSet) -> bool:
    """Pairwise Ext vanishing plus: #summands = #simples in the support."""
    require_finite_type(q)
    c = frozenset(c)
    _check_roots(q, c)
    for a in c:
        for b in c:
            if ext_dim_roots(q, a, b) != 0:
                return False
    supp: set[Vertex] = set()
    for a in c:
        supp |= support(a)
    return len(c) == len(supp)


@lru_cache(maxsize=None)
def enumerate_support_tilting(q: Quiver) -> tuple[IndecSet, ...]:
    """All basic support tilting objects, via Ext-compatible subset search."""
    require_finite_type(q)
    roots = positive_roots(q)
    compatible = {
        (a, b): ext_dim_roots(q, a, b) == 0 and ext_dim_roots(q, b, a) == 0
        for a in roots
        for b in roots
    }
    found: list[IndecSet] = []

    def extend(chosen: tuple[Root, ...], start: int) -> None:
        cset = frozenset(chosen)
        supp: set[Vertex] = set()
        for a in chosen:
            supp |= support(a)
        if len(chosen) == len(supp):
            found.append(cset)
        for i in range(start, len(roots)):
            r = roots[i]
            if all(compatible[(r, c)] for c in chosen):
                extend(chosen + (r,), i + 1)

    extend((), 0)
    return tuple(sorted(found, key=lambda s: (len(s), sorted(s))))


@lru_cache(maxsize=None)
def enumerate_torsion_classes(q: Quiver) -> tuple[IndecSet, ...]:
    """All finitely generated torsion classes, as Gen of support tiltings."""
    classes = [gen(q, c) for c in enumerate_support_tilting(q)]
    ordered = sorted(set(classes), key=lambda s: (len(s), sorted(s)))
    if len(ordered) != len(classes):
        raise RuntimeError("support tilting objects generated a repeated torsion class")
    return tuple(ordered)


@lru_cache(maxsize=None)
def torsion_classes_set(q: Quiver) -> frozenset[IndecSet]:
    return frozenset(enumerate_torsion_classes(q))


def wide_simples(q: Quiver, a: IndecSet) -> tuple[Root, ...]:
    """Simple objects of a wide subcategory in exceptional-sequence order.

    A member is simple in A when it has no proper nonzero subobject lying
    in A; the order places x before y whenever Hom(y, x) or Ext^1(y, x) is
    nonzero, lexicographically least among valid orders.
    """
    require_finite_type(q)
    a = frozenset(a)
    _check_roots(q, a)
    simples = []
    for alpha in a:
        m = indecomposable(q, alpha, GF2)
        proper = False
        for sub in subrepresentation_subspaces(m):
            dims = tuple(len(rows) for rows in sub)
            if dims == alpha or all(x == 0 for x in dims):
                continue
            if set(decompose(q, sub_representation(m, sub))) <= a:
                proper = True
                break
        if not proper:
            simples.append(alpha)
    # x must precede y whenever x "hits" y (Hom(x,y) or Ext(x,y) nonzero)
    must_precede = {
        (x, y)
        for x in simples
        for y in simples
        if x != y
        and (hom_dim_roots(q, x, y) > 0 or ext_dim_roots(q, x, y) > 0)
    }
    order: list[Root] = []
    remaining = set(simples)
    while remaining:
        ready = sorted(
            x
            for x in remaining
            if not any((y, x) in must_precede for y in remaining if y != x)
        )
        if not ready:
            raise ValueError("no exceptional order exists; input is not wide")
        order.append(ready[0])
        remaining.remove(ready[0])
    return tuple(order)


def torsion_free_complement(q: Quiver, t: IndecSet) -> IndecSet:
    """F = {X : Hom(Y, X) = 0 for all Y in T}."""
    t = frozenset(t)
    _require_torsion_class(q, t)
    return frozenset(
        x
        for x in positive_roots(q)
        if all(hom_dim_roots(q, y, x) == 0 for y in t)
    )


def torsion_subobject(
    q: Quiver, t: IndecSet, m: Representation, cap: int = DEFAULT_CAP
) -> Representation:
    """t(X): the maximal subobject of X lying in add T (field of X)."""
    t = frozenset(t)
    _require_torsion_class(q, t)
    candidates = []
    for sub in subrepresentation_subspaces(m, cap):
        if set(decompose(q, sub_representation(m, sub))) <= t:
            candidates.append(sub)
    field = m.field

    def contains(big, small) -> bool:
        for v in range(q.n):
            pivots = _sub_pivots(field, big[v])
            for row in small[v]:
                if not fields.in_span(field, big[v], pivots, row):
                    return False
        return True

    best = max(candidates, key=lambda sub: sum(len(rows) for rows in sub))
    if not all(contains(best, other) for other in candidates):
        raise RuntimeError("torsion subobjects have no unique maximum")
    return sub_representation(m, best)


def _sub_pivots(field, rows) -> list[int]:
    return [next(i for i, x in enumerate(row) if not field.is_zero(x)) for row in rows]
