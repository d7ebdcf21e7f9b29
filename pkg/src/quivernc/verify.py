"""Verification suites: exhaustive desk-scale checks of the structural
theorems, reported with counterexample payloads on failure.
"""

from __future__ import annotations

import itertools
import json
import random
import time
from dataclasses import dataclass, field

from . import cluster as cl
from . import latt, ncmap, stab, tors
from .quiver import Quiver, coxeter_element_word, positive_roots, support
from .weyl import (
    GroupElement,
    absolute_length,
    absolute_leq,
    coxeter_element,
    is_c_sortable,
    noncrossing_partitions,
    reduced_word,
    reflection,
    weyl_group,
    word_to_element,
)


@dataclass
class VerifyReport:
    suite: str
    instances: int = 0
    failures: list[str] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, payload: str) -> None:
        self.instances += 1
        if not ok:
            self.failures.append(payload)

    def to_json(self) -> str:
        return json.dumps(
            {"check": self.suite, "instances": self.instances, "failures": self.failures}
        )


def _roots_str(s) -> str:
    return "{" + ",".join(str(list(r)) for r in sorted(s)) + "}"


def min_deletions_to_identity(q: Quiver, word: tuple[int, ...]) -> int:
    """Dyer's characterization of absolute length: fewest letters to delete
    from a reduced word to leave a factorization of the identity."""
    for k in range(len(word) + 1):
        for gone in itertools.combinations(range(len(word)), k):
            remaining = tuple(v for i, v in enumerate(word) if i not in gone)
            if word_to_element(q, remaining).is_identity():
                return k
    raise RuntimeError("unreachable: deleting every letter yields the identity")


def suite_bijections(q: Quiver, seed: int = 0, cap: int = 12) -> VerifyReport:
    rep = VerifyReport("bijections")
    t0 = time.monotonic()
    classes = tors.enumerate_torsion_classes(q)
    tiltings = tors.enumerate_support_tilting(q)
    cts = cl.cluster_tilting_objects(q)
    nc_elems = {ncmap.nc_of_torsion(q, t) for t in classes}
    cword = coxeter_element_word(q)
    sortable_count = sum(1 for w in weyl_group(q) if is_c_sortable(q, w, cword))
    counts = {len(classes), len(tiltings), len(cts), len(nc_elems), sortable_count}
    rep.check(len(counts) == 1, f"counts disagree: {sorted(counts)}")

    for c in tiltings:
        rep.check(
            tors.ext_projectives(q, tors.gen(q, c)) == c,
            f"ext_projectives(gen(C)) != C for C={_roots_str(c)}",
        )
    for t in classes:
        rep.check(
            tors.gen(q, tors.ext_projectives(q, t)) == t,
            f"gen(ext_projectives(T)) != T for T={_roots_str(t)}",
        )
        wide = tors.a_of(q, t)
        rep.check(
            tors.gen(q, wide) == t,
            f"gen(a(T)) != T for T={_roots_str(t)}",
        )
        rep.check(
            tors.a_of(q, tors.gen(q, wide)) == wide,
            f"a(gen(A)) != A for A={_roots_str(wide)}",
        )
    for c in tiltings:
        ct = cl.complete_support_tilting(q, c)
        rep.check(
            cl.support_tilting_of(ct) == c and ct in cts,
            f"completion round trip failed for C={_roots_str(c)}",
        )

    split_cache: dict = {}

    def split_of(t):
        if t not in split_cache:
            split_cache[t] = tors.split_projectives(q, t)
        return split_cache[t]

    for ct in cts:
        rep.check(len(ct) == q.n, f"cluster tilting with {len(ct)} summands")
        gen_t = cl.gen_of(q, ct)
        for x in sorted(ct, key=cl.CCIndec.sort_key):
            v = cl.mutate(q, ct, x)
            y = next(z for z in v if z not in ct)
            rep.check(
                cl.mutate(q, v, y) == ct,
                f"mutation not involutive at {x!r} of {_roots_str(cl.support_tilting_of(ct))}",
            )
            gen_v = cl.gen_of(q, v)
            x_split = (not x.is_shift) and x.root in split_of(gen_t)
            y_split = (not y.is_shift) and y.root in split_of(gen_v)
            rep.check(
                x_split != y_split,
                f"exactly-one-split-complement fails at {x!r}",
            )
            rep.check(
                (gen_v < gen_t) if x_split else (gen_v > gen_t),
                f"mutation order law fails at {x!r}",
            )
        rs = ncmap.rs_check(q, ct)
        rep.check(rs.passed, f"fixed-space description fails for {rs.cluster_tilting}")

    if q.n <= 3:  # exhaustive oracle cross-check
        class_set = set(classes)
        for k in range(len(positive_roots(q)) + 1):
            for sub in itertools.combinations(positive_roots(q), k):
                s = frozenset(sub)
                rep.check(
                    tors.is_torsion_class(q, s, cap) == (s in class_set),
                    f"oracle disagrees on {_roots_str(s)}",
                )
    rep.wall_time = time.monotonic() - t0
    return rep


def suite_lattice(q: Quiver, seed: int = 0, cap: int = 12) -> VerifyReport:
    rep = VerifyReport("lattice")
    t0 = time.monotonic()
    nc = noncrossing_partitions(q)
    nc_poset = latt.FinitePoset(tuple(range(len(nc))), nc.leq)
    rep.check(latt.lattice_analyze(nc_poset).is_lattice, "NC poset is not a lattice")

    cp = latt.cambrian_poset(q)
    analysis = latt.lattice_analyze(cp)
    nroots = len(positive_roots(q))
    rep.check(analysis.is_lattice, "Cambrian poset is not a lattice")
    rep.check(analysis.is_trim, "Cambrian lattice is not trim")
    rep.check(
        len(analysis.join_irreducibles)
        == len(analysis.meet_irreducibles)
        == analysis.longest_chain
        == nroots,
        f"irreducible counts/chain {len(analysis.join_irreducibles)},"
        f"{len(analysis.meet_irreducibles)},{analysis.longest_chain} != {nroots}",
    )
    ji_payloads = {cp.payloads[i] for i in analysis.join_irreducibles}
    rep.check(
        ji_payloads == set(latt.principal_torsion_classes(q)),
        "join-irreducibles are not the principal torsion classes",
    )
    chain = latt.splitting_chain(q)
    classes = tors.enumerate_torsion_classes(q)
    class_set = set(classes)
    for s in chain:
        rep.check(s in class_set, f"splitting class {_roots_str(s)} is not a torsion class")
    if q.n <= 3:
        idx = {p: i for i, p in enumerate(cp.payloads)}
        joins, meets = latt._bound_tables(cp)
        # The closure-based join must agree with the poset-theoretic one.
        for i, t1 in enumerate(cp.payloads):
            for j, t2 in enumerate(cp.payloads):
                rep.check(
                    latt.torsion_join(q, t1, t2) == cp.payloads[joins[i][j]],
                    f"closure join disagrees with lattice join at"
                    f" {_roots_str(t1)}, {_roots_str(t2)}",
                )
                rep.check(
                    cp.payloads[meets[i][j]] == (t1 & t2),
                    "meet is not intersection",
                )
        # Splitting classes are left modular (the input to trimness).
        for s in chain:
            x = idx[s]
            for y in range(len(cp)):
                for z in range(len(cp)):
                    if y == z or not cp.leq[y][z]:
                        continue
                    rep.check(
                        meets[joins[y][x]][z] == joins[y][meets[x][z]],
                        f"left-modularity fails at S={_roots_str(s)}",
                    )
    rep.wall_time = time.monotonic() - t0
    return rep


def suite_stability(q: Quiver, seed: int = 0, cap: int = 12) -> VerifyReport:
    rep = VerifyReport("stability")
    t0 = time.monotonic()
    rng = random.Random(seed)
    for c in tors.enumerate_support_tilting(q):
        r = stab.verify_semistable_theorem(q, c, cap=cap)
        rep.check(
            r.passed,
            f"default coefficients: semistable {r.semistable} != wide {r.wide}"
            f" for C={_roots_str(c)}",
        )
        split = tors.split_projectives(q, tors.gen(q, c))
        supp: set[int] = set()
        for root in c:
            supp |= support(root)
        for _ in range(3):
            a = {root: (0 if root in split else rng.choice([1, 2, 3])) for root in c}
            b = {v: rng.choice([-1, -2]) for v in q.vertices if v not in supp}
            r = stab.verify_semistable_theorem(q, c, a, b, cap=cap)
            rep.check(
                r.passed,
                f"coefficients a={a}, b={b}: semistable {r.semistable} != wide"
                f" {r.wide} for C={_roots_str(c)}",
            )
        if q.n <= 3:
            rep.check(
                tors.is_wide(q, frozenset(r.semistable), cap),
                f"semistables of C={_roots_str(c)} fail the wide oracle",
            )
    rep.wall_time = time.monotonic() - t0
    return rep


def suite_exceptional(q: Quiver, seed: int = 0, cap: int = 12) -> VerifyReport:
    rep = VerifyReport("exceptional")
    t0 = time.monotonic()
    cox = coxeter_element(q)
    seqs = ncmap.complete_exceptional_sequences(q)
    for s in seqs:
        prod = GroupElement.identity(q.n)
        for r in s:
            prod = prod * reflection(q, r)
        rep.check(prod == cox, f"reflection product != cox for {s}")
    rep.check(
        ncmap.braid_orbit(q, seqs[0]) == frozenset(seqs),
        "braid action is not transitive on complete exceptional sequences",
    )
    if q.n >= 3:
        s0 = seqs[0]
        lhs = ncmap.braid_act(q, 1, ncmap.braid_act(q, 2, ncmap.braid_act(q, 1, s0)))
        rhs = ncmap.braid_act(q, 2, ncmap.braid_act(q, 1, ncmap.braid_act(q, 2, s0)))
        rep.check(lhs == rhs, "braid relation s1 s2 s1 = s2 s1 s2 fails")
    lt = absolute_length(q, cox)
    rep.check(lt == q.n, f"l_T(cox) = {lt} != n")
    rep.check(
        min_deletions_to_identity(q, reduced_word(q, cox)) == q.n,
        "Dyer deletion count for cox disagrees with n",
    )
    rep.wall_time = time.monotonic() - t0
    return rep


def suite_reading(q: Quiver, seed: int = 0, cap: int = 12) -> VerifyReport:
    rep = VerifyReport("reading")
    t0 = time.monotonic()
    cword = coxeter_element_word(q)
    sortables = [w for w in weyl_group(q) if is_c_sortable(q, w, cword)]
    rep.check(
        len(sortables) == len(tors.enumerate_torsion_classes(q)),
        f"{len(sortables)} sortable elements vs"
        f" {len(tors.enumerate_torsion_classes(q))} torsion classes",
    )
    for w in sortables:
        t = ncmap.torsion_of_sortable(q, w)
        rep.check(
            ncmap.sortable_of_torsion(q, t) == w,
            f"sortable/torsion round trip fails at {reduced_word(q, w)}",
        )
        rep.check(
            ncmap.reading_nc(q, w, cword) == ncmap.nc_of_torsion(q, t),
            f"nc coincidence fails at {reduced_word(q, w)}",
        )
        rep.check(
            ncmap.reading_cl(q, w, cword) == tors.ext_projectives(q, t),
            f"cl coincidence fails at {reduced_word(q, w)}",
        )
        ccr = ncmap.cover_criterion_check(q, t, cword)
        rep.check(
            ccr.passed,
            f"cover criterion fails at T={_roots_str(t)}: letters {ccr.failures}",
        )
    # The order isomorphism pairs wide subcategories under inclusion with
    # NC_Q under absolute order (inclusion of torsion classes is the
    # Cambrian order, a different poset).
    classes = tors.enumerate_torsion_classes(q)
    wides = {t: tors.a_of(q, t) for t in classes}
    nc_of = {t: ncmap.nc_of_torsion(q, t) for t in classes}
    rep.check(
        len(set(nc_of.values())) == len(classes),
        "nc_of_torsion is not injective",
    )
    for t1 in classes:
        for t2 in classes:
            rep.check(
                (wides[t1] <= wides[t2]) == absolute_leq(q, nc_of[t1], nc_of[t2]),
                f"order isomorphism fails at {_roots_str(wides[t1])} vs {_roots_str(wides[t2])}",
            )
    rep.wall_time = time.monotonic() - t0
    return rep


SUITES = {
    "bijections": suite_bijections,
    "lattice": suite_lattice,
    "stability": suite_stability,
    "exceptional": suite_exceptional,
    "reading": suite_reading,
}
