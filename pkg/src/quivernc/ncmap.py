"""The bridge maps: torsion classes to noncrossing partitions, sortable
elements, Reading's nc/cl recursions, exceptional sequences with the braid
action, the cover-reflection criterion and the fixed-space description.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import fields
from .cluster import CCIndec, ClusterTilting, gen_of, mutate
from .errors import OracleCapError
from .quiver import (
    Quiver,
    Root,
    Vertex,
    cartan_matrix,
    positive_roots,
    require_finite_type,
    simple_roots,
)
from .replab import ext_dim_roots, hom_dim_roots
from .tors import IndecSet, a_of, torsion_classes_set, wide_simples
from .weyl import (
    GroupElement,
    cover_reflections,
    fixed_space,
    inversion_set,
    is_c_sortable,
    length_S,
    reflection,
    simple_reflection,
    weyl_group,
)


def cox_of_wide(q: Quiver, a: IndecSet) -> GroupElement:
    """Product of the reflections of the simples of A in exceptional order."""
    return _reflection_product(q, wide_simples(q, a))


def nc_of_torsion(q: Quiver, t: IndecSet) -> GroupElement:
    """cox(a(T)): the noncrossing partition attached to a torsion class.

    Over all torsion classes this is a bijection onto NC_Q; it carries
    inclusion of the associated wide subcategories to absolute order
    (inclusion of the torsion classes themselves is the Cambrian order,
    which NC_Q does not refine).
    """
    return cox_of_wide(q, a_of(q, t))


@lru_cache(maxsize=None)
def _inversion_index(q: Quiver) -> dict[frozenset, GroupElement]:
    return {inversion_set(q, w): w for w in weyl_group(q)}


def sortable_of_torsion(q: Quiver, t: IndecSet) -> GroupElement:
    """The element whose inversion set is exactly Ind(T)."""
    require_finite_type(q)
    w = _inversion_index(q).get(frozenset(t))
    if w is None:
        raise ValueError("no group element has the given roots as inversion set")
    return w


def torsion_of_sortable(q: Quiver, w: GroupElement) -> IndecSet:
    """The torsion class whose indecomposables are the inversions of w."""
    s = frozenset(inversion_set(q, w))
    if s not in torsion_classes_set(q):
        raise ValueError("inversion set is not a torsion class; w is not sortable")
    return s


def reading_nc(q: Quiver, w: GroupElement, c_word: tuple[Vertex, ...]) -> GroupElement:
    """Reading's recursion from sortable elements to noncrossing partitions.

    With s the first letter of c: if sw is longer, recurse into the
    parabolic word sc; otherwise recurse on sw with word scs and multiply
    by s on the right (cover-reflection case) or conjugate by s.
    """
    if not is_c_sortable(q, w, c_word):
        raise ValueError("element is not sortable for the given word")
    return _reading_nc(q, w, tuple(c_word))


def _reading_nc(q: Quiver, w: GroupElement, c_word: tuple[Vertex, ...]) -> GroupElement:
    if w.is_identity():
        return w
    v = c_word[0]
    s = simple_reflection(q, v)
    if length_S(q, s * w) > length_S(q, w):
        return _reading_nc(q, w, c_word[1:])
    scs = c_word[1:] + (v,)
    inner = _reading_nc(q, s * w, scs)
    if s in cover_reflections(q, w):
        return inner * s
    return s * inner * s


def reading_cl(q: Quiver, w: GroupElement, c_word: tuple[Vertex, ...]) -> IndecSet:
    """Reading's recursion from sortable elements to support tilting objects.

    At root level the reflection functor step sends each root through s_v
    and adjoins e_v exactly when v lies outside the support so far.
    """
    if not is_c_sortable(q, w, c_word):
        raise ValueError("element is not sortable for the given word")
    return _reading_cl(q, w, tuple(c_word))


def _reading_cl(q: Quiver, w: GroupElement, c_word: tuple[Vertex, ...]) -> IndecSet:
    if w.is_identity():
        return frozenset()
    v = c_word[0]
    s = simple_reflection(q, v)
    if length_S(q, s * w) > length_S(q, w):
        return _reading_cl(q, w, c_word[1:])
    inner = _reading_cl(q, s * w, c_word[1:] + (v,))
    out = set()
    for root in inner:
        image = s.apply(root)
        if any(x < 0 for x in image):
            raise RuntimeError(f"reflection step produced the negative root {image}")
        out.add(image)
    if not any(root[v - 1] != 0 for root in inner):
        out.add(simple_roots(q)[v - 1])
    return frozenset(out)


def is_exceptional_sequence(q: Quiver, seq: tuple[Root, ...]) -> bool:
    """No backward Hom or Ext: for i < j, Hom(X_j, X_i) = Ext(X_j, X_i) = 0."""
    require_finite_type(q)
    roots = positive_roots(q)
    if any(r not in roots for r in seq):
        return False
    if len(set(seq)) != len(seq):
        return False
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if hom_dim_roots(q, seq[j], seq[i]) or ext_dim_roots(q, seq[j], seq[i]):
                return False
    return True


def _positive(root: tuple[int, ...]) -> Root:
    if all(x >= 0 for x in root):
        return tuple(root)
    if all(x <= 0 for x in root):
        return tuple(-x for x in root)
    raise ValueError(f"{root} is neither positive nor negative")


def braid_act(
    q: Quiver, i: int, seq: tuple[Root, ...], direction: str = "+"
) -> tuple[Root, ...]:
    """Braid generator sigma_i (1-based) on an exceptional sequence.

    Forward: (..., X_i, X_{i+1}, ...) -> (..., X_{i+1}, R X_i, ...) with
    dim R X_i the positive representative of s_{X_{i+1}}(dim X_i); the
    inverse uses the left mutation L.
    """
    if not 1 <= i <= len(seq) - 1:
        raise ValueError(f"position {i} out of range for length {len(seq)}")
    x, y = seq[i - 1], seq[i]
    if direction == "+":
        new_pair = (y, _positive(reflection(q, y).apply(x)))
    elif direction == "-":
        new_pair = (_positive(reflection(q, x).apply(y)), x)
    else:
        raise ValueError("direction must be '+' or '-'")
    out = seq[: i - 1] + new_pair + seq[i + 1 :]
    if not is_exceptional_sequence(q, out):
        raise RuntimeError("braid action left the set of exceptional sequences")
    if _reflection_product(q, out) != _reflection_product(q, seq):
        raise RuntimeError("braid action changed the reflection product")
    return out


def _reflection_product(q: Quiver, seq: tuple[Root, ...]) -> GroupElement:
    out = GroupElement.identity(q.n)
    for root in seq:
        out = out * reflection(q, root)
    return out


@lru_cache(maxsize=None)
def complete_exceptional_sequences(q: Quiver) -> tuple[tuple[Root, ...], ...]:
    """All complete exceptional sequences, by prefix-pruned search."""
    require_finite_type(q)
    if q.n > 4:
        raise OracleCapError("exceptional-sequence enumeration capped at rank 4")
    roots = positive_roots(q)
    out: list[tuple[Root, ...]] = []

    def extend(prefix: tuple[Root, ...]) -> None:
        if len(prefix) == q.n:
            out.append(prefix)
            return
        for r in roots:
            if r in prefix:
                continue
            if all(
                hom_dim_roots(q, r, p) == 0 and ext_dim_roots(q, r, p) == 0
                for p in prefix
            ):
                extend(prefix + (r,))

    extend(())
    return tuple(sorted(out))


def braid_orbit(q: Quiver, seq: tuple[Root, ...]) -> frozenset[tuple[Root, ...]]:
    """Closure of one sequence under all braid generators and inverses."""
    seen = {seq}
    frontier = [seq]
    while frontier:
        nxt = []
        for s in frontier:
            for i in range(1, len(s)):
                for d in ("+", "-"):
                    t = braid_act(q, i, s, d)
                    if t not in seen:
                        seen.add(t)
                        nxt.append(t)
        frontier = nxt
    return frozenset(seen)


def upper_indecs(q: Quiver, t: ClusterTilting) -> frozenset[CCIndec]:
    """Summands whose mutation strictly shrinks Gen."""
    base = gen_of(q, t)
    return frozenset(x for x in t if gen_of(q, mutate(q, t, x)) < base)


def _perp_intersection(q: Quiver, roots: list[Root]) -> tuple[tuple[Fraction, ...], ...]:
    b = cartan_matrix(q)
    rows = [
        [Fraction(sum(b[k][j] * r[k] for k in range(q.n))) for j in range(q.n)]
        for r in roots
    ]
    basis = fields.nullspace(fields.QQ, rows, q.n)
    return fields.row_space(fields.QQ, basis)


@dataclass(frozen=True)
class RSReport:
    cluster_tilting: tuple[CCIndec, ...]
    upper: tuple[CCIndec, ...]
    fixed_space: tuple
    perp_space: tuple
    passed: bool


def rs_check(q: Quiver, t: ClusterTilting) -> RSReport:
    """Fixed space of the noncrossing partition of Gen T versus the
    intersection of the perpendiculars of the upper summand roots."""
    upper = upper_indecs(q, t)
    nc = nc_of_torsion(q, gen_of(q, t))
    fix = fixed_space(q, nc)
    perp = _perp_intersection(q, [x.root for x in upper if not x.is_shift])
    return RSReport(
        cluster_tilting=tuple(sorted(t, key=CCIndec.sort_key)),
        upper=tuple(sorted(upper, key=CCIndec.sort_key)),
        fixed_space=fix,
        perp_space=perp,
        passed=fix == perp,
    )


def initial_letters(q: Quiver, c_word: tuple[Vertex, ...]) -> tuple[Vertex, ...]:
    """Letters that can start a reduced word for the Coxeter element: those
    commuting with everything before them in the word."""
    b = cartan_matrix(q)
    out = []
    for i, v in enumerate(c_word):
        if all(b[u - 1][v - 1] == 0 for u in c_word[:i]):
            out.append(v)
    return tuple(out)


@dataclass(frozen=True)
class CoverCriterionReport:
    torsion_class: tuple[Root, ...]
    applicable: tuple[Vertex, ...]
    not_applicable: tuple[Vertex, ...]
    failures: tuple[Vertex, ...]
    passed: bool


def cover_criterion_check(
    q: Quiver, t: IndecSet, c_word: tuple[Vertex, ...]
) -> CoverCriterionReport:
    """For each initial s with l_S(s w_T) < l_S(w_T): s is a cover
    reflection of w_T exactly when the simple at s lies in a(T)."""
    w = sortable_of_torsion(q, t)
    wide = a_of(q, t)
    covers = cover_reflections(q, w)
    applicable, skipped, failures = [], [], []
    for v in initial_letters(q, c_word):
        s = simple_reflection(q, v)
        if length_S(q, s * w) >= length_S(q, w):
            skipped.append(v)
            continue
        applicable.append(v)
        if (s in covers) != (simple_roots(q)[v - 1] in wide):
            failures.append(v)
    return CoverCriterionReport(
        torsion_class=tuple(sorted(t)),
        applicable=tuple(applicable),
        not_applicable=tuple(skipped),
        failures=tuple(failures),
        passed=not failures,
    )
