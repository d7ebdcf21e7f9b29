"""Acyclic quiver model: text format, Euler form, root system, Coxeter word.

Vertices are labelled 1..n.  Dimension vectors and roots are plain integer
tuples in the basis of simple roots, ordered lexicographically whenever a
canonical order is needed.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import NotFiniteTypeError, QuiverSyntaxError

Vertex = int
DimVector = tuple[int, ...]
Root = tuple[int, ...]


@dataclass(frozen=True)
class Quiver:
    """Finite acyclic directed multigraph on vertices 1..n (loops rejected)."""

    n: int
    arrows: tuple[tuple[Vertex, Vertex], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("quiver needs at least one vertex")
        arrows = tuple(sorted(tuple(a) for a in self.arrows))
        object.__setattr__(self, "arrows", arrows)
        for s, t in arrows:
            if not (1 <= s <= self.n and 1 <= t <= self.n):
                raise ValueError(f"arrow {s}->{t} uses an undeclared vertex")
            if s == t:
                raise ValueError(f"loop at vertex {s} is not allowed")
        self.topological_order()  # raises on an oriented cycle

    @property
    def vertices(self) -> tuple[Vertex, ...]:
        return tuple(range(1, self.n + 1))

    def topological_order(self) -> tuple[Vertex, ...]:
        """Smallest-label-first topological order (sources before targets)."""
        indeg = {v: 0 for v in self.vertices}
        for _, t in self.arrows:
            indeg[t] += 1
        ready = sorted(v for v, d in indeg.items() if d == 0)
        order: list[Vertex] = []
        while ready:
            v = ready.pop(0)
            order.append(v)
            for s, t in self.arrows:
                if s == v:
                    indeg[t] -= 1
                    if indeg[t] == 0 and t not in ready:
                        ready.append(t)
            ready.sort()
        if len(order) != self.n:
            raise ValueError("quiver has an oriented cycle")
        return tuple(order)

    def arrows_into(self, v: Vertex) -> tuple[int, ...]:
        return tuple(i for i, (_, t) in enumerate(self.arrows) if t == v)

    def arrows_out_of(self, v: Vertex) -> tuple[int, ...]:
        return tuple(i for i, (s, _) in enumerate(self.arrows) if s == v)

    def is_sink(self, v: Vertex) -> bool:
        return not self.arrows_out_of(v)

    def is_source(self, v: Vertex) -> bool:
        return not self.arrows_into(v)

    def sinks(self) -> tuple[Vertex, ...]:
        return tuple(v for v in self.vertices if self.is_sink(v))

    def sources(self) -> tuple[Vertex, ...]:
        return tuple(v for v in self.vertices if self.is_source(v))

    def reflect_at(self, v: Vertex) -> "Quiver":
        """Reverse every arrow incident with v."""
        new = tuple((t, s) if s == v or t == v else (s, t) for s, t in self.arrows)
        return Quiver(self.n, new)

    def to_json(self) -> str:
        return json.dumps({"vertices": self.n, "arrows": [list(a) for a in self.arrows]})


def parse_quiver(text: str) -> Quiver:
    """Parse the quiver DSL.

    Line "vertices N" followed by zero or more lines "arrow S T"; comments
    start with '#'.

    >>> parse_quiver("vertices 2\\narrow 2 1").arrows
    ((2, 1),)
    """
    n: int | None = None
    arrows: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "vertices":
            if n is not None:
                raise QuiverSyntaxError(f"line {lineno}: duplicate vertices declaration")
            if len(parts) != 2 or not parts[1].isdigit():
                raise QuiverSyntaxError(f"line {lineno}: expected 'vertices N'")
            n = int(parts[1])
            if n < 1:
                raise QuiverSyntaxError(f"line {lineno}: vertex count must be positive")
        elif parts[0] == "arrow":
            if n is None:
                raise QuiverSyntaxError(f"line {lineno}: arrow before vertices declaration")
            if len(parts) != 3 or not (parts[1].isdigit() and parts[2].isdigit()):
                raise QuiverSyntaxError(f"line {lineno}: expected 'arrow S T'")
            s, t = int(parts[1]), int(parts[2])
            if not (1 <= s <= n and 1 <= t <= n):
                raise QuiverSyntaxError(f"line {lineno}: arrow endpoint out of range")
            if s == t:
                raise QuiverSyntaxError(f"line {lineno}: loops are not allowed")
            arrows.append((s, t))
        else:
            raise QuiverSyntaxError(f"line {lineno}: unknown directive {parts[0]!r}")
    if n is None:
        raise QuiverSyntaxError("missing vertices declaration")
    try:
        return Quiver(n, tuple(arrows))
    except ValueError as exc:
        raise QuiverSyntaxError(str(exc)) from exc


def _check_length(q: Quiver, v: DimVector) -> None:
    if len(v) != q.n:
        raise ValueError(f"dimension vector of length {len(v)}, expected {q.n}")


def euler_form(q: Quiver, a: DimVector, b: DimVector) -> int:
    """<a,b> = sum_i a_i b_i - sum_{i->j} a_i b_j."""
    _check_length(q, a)
    _check_length(q, b)
    total = sum(x * y for x, y in zip(a, b))
    for s, t in q.arrows:
        total -= a[s - 1] * b[t - 1]
    return total


def symmetrized_form(q: Quiver, a: DimVector, b: DimVector) -> int:
    """(a,b) = <a,b> + <b,a>."""
    return euler_form(q, a, b) + euler_form(q, b, a)


@lru_cache(maxsize=None)
def cartan_matrix(q: Quiver) -> tuple[tuple[int, ...], ...]:
    """Matrix of the symmetrized form in the simple-root basis."""
    simples = simple_roots(q)
    return tuple(
        tuple(symmetrized_form(q, ei, ej) for ej in simples) for ei in simples
    )


def simple_roots(q: Quiver) -> tuple[Root, ...]:
    return tuple(
        tuple(1 if i == j else 0 for j in range(q.n)) for i in range(q.n)
    )


def _det(rows: list[list[Fraction]]) -> Fraction:
    n = len(rows)
    a = [row[:] for row in rows]
    det = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det *= a[c][c]
        inv = 1 / a[c][c]
        for i in range(c + 1, n):
            f = a[i][c] * inv
            if f:
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return det


@lru_cache(maxsize=None)
def classify(q: Quiver) -> str:
    """'finite', 'affine' or 'wild' by definiteness of the symmetrized form."""
    b = cartan_matrix(q)
    idx = range(q.n)
    leading_positive = True
    for k in range(1, q.n + 1):
        rows = [[Fraction(b[i][j]) for j in idx[:k]] for i in idx[:k]]
        if _det(rows) <= 0:
            leading_positive = False
            break
    if leading_positive:
        return "finite"
    # positive semidefinite <=> every principal minor is >= 0
    for size in range(1, q.n + 1):
        for subset in itertools.combinations(idx, size):
            rows = [[Fraction(b[i][j]) for j in subset] for i in subset]
            if _det(rows) < 0:
                return "wild"
    return "affine"


def require_finite_type(q: Quiver) -> None:
    kind = classify(q)
    if kind != "finite":
        raise NotFiniteTypeError(f"quiver is of {kind} type, not finite type")


@lru_cache(maxsize=None)
def positive_roots(q: Quiver) -> tuple[Root, ...]:
    """All v >= 0 with (v,v) = 2, found by closing the simples under
    simple reflections; lexicographically sorted."""
    require_finite_type(q)
    b = cartan_matrix(q)

    def reflect(v: Root, i: int) -> Root:
        c = sum(b[i][k] * v[k] for k in range(q.n))
        return tuple(v[k] - (c if k == i else 0) for k in range(q.n))

    found: set[Root] = set(simple_roots(q))
    frontier = list(found)
    while frontier:
        nxt = []
        for v in frontier:
            for i in range(q.n):
                w = reflect(v, i)
                if all(x >= 0 for x in w) and w not in found:
                    found.add(w)
                    nxt.append(w)
        frontier = nxt
    return tuple(sorted(found))


def is_positive_root(q: Quiver, v: DimVector) -> bool:
    return len(v) == q.n and all(x >= 0 for x in v) and symmetrized_form(q, v, v) == 2


def coxeter_element_word(q: Quiver) -> tuple[Vertex, ...]:
    """Topological order of the vertices; reading it left to right and
    multiplying simple reflections gives cox(Q)."""
    return q.topological_order()


def support(v: DimVector) -> frozenset[Vertex]:
    return frozenset(i + 1 for i, x in enumerate(v) if x != 0)
