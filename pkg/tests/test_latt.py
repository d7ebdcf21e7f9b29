import json

import pytest

from quivernc import (
    FinitePoset,
    cambrian_poset,
    enumerate_torsion_classes,
    lattice_analyze,
    noncrossing_partitions,
    positive_roots,
    principal_torsion_classes,
    splitting_chain,
    torsion_join,
    torsion_meet,
)
from quivernc.latt import _bound_tables
from quivernc.tors import is_torsion_class


def boolean_lattice_two_atoms():
    elems = (frozenset(), frozenset({1}), frozenset({2}), frozenset({1, 2}))
    return FinitePoset.from_elements(elems, lambda a, b: a <= b)


class TestFinitePoset:
    def test_validation(self):
        with pytest.raises(ValueError, match="reflexive"):
            FinitePoset((1, 2), ((False, False), (False, True))).validate()
        with pytest.raises(ValueError, match="antisymmetric"):
            FinitePoset((1, 2), ((True, True), (True, True))).validate()
        leq = (
            (True, True, False),
            (False, True, True),
            (False, False, True),
        )
        with pytest.raises(ValueError, match="transitive"):
            FinitePoset((1, 2, 3), leq).validate()

    def test_covers(self):
        p = boolean_lattice_two_atoms()
        assert set(p.covers()) == {(0, 1), (0, 2), (1, 3), (2, 3)}


class TestLatticeAnalyze:
    def test_boolean_two_atoms(self):
        report = lattice_analyze(boolean_lattice_two_atoms())
        assert report.is_lattice
        assert len(report.join_irreducibles) == 2
        assert len(report.meet_irreducibles) == 2
        assert report.longest_chain == 2
        assert report.is_extremal and report.is_trim

    def test_pentagon_is_trim_but_not_distributive(self):
        # 0 < a < 1 and 0 < b < c < 1
        order = {
            (0, 0), (0, 1), (0, 2), (0, 3), (0, 4),
            (1, 1), (1, 4),
            (2, 2), (2, 3), (2, 4),
            (3, 3), (3, 4),
            (4, 4),
        }
        p = FinitePoset.from_elements((0, 1, 2, 3, 4), lambda a, b: (a, b) in order)
        report = lattice_analyze(p)
        assert report.is_lattice and report.is_trim
        assert report.longest_chain == 3

    def test_non_lattice(self):
        # two incomparable tops: no joins
        p = FinitePoset.from_elements(
            (0, 1, 2, 3),
            lambda a, b: a == b or (a in (0,) and b in (2, 3)) or (a == 1 and b in (2, 3)),
        )
        assert not lattice_analyze(p).is_lattice

    def test_cambrian_a2(self, a2):
        cp = cambrian_poset(a2)
        report = lattice_analyze(cp)
        assert report.is_lattice and report.is_trim
        assert report.longest_chain == 3
        ji = {cp.payloads[i] for i in report.join_irreducibles}
        assert ji == {
            frozenset({(1, 0)}),
            frozenset({(0, 1)}),
            frozenset({(0, 1), (1, 1)}),
        }

    @pytest.mark.parametrize("fix", ["a2", "a3", "a4", "d4"])
    def test_cambrian_trim_with_counts(self, fix, request):
        q = request.getfixturevalue(fix)
        report = lattice_analyze(cambrian_poset(q))
        n = len(positive_roots(q))
        assert report.is_trim
        assert len(report.join_irreducibles) == n
        assert len(report.meet_irreducibles) == n
        assert report.longest_chain == n

    @pytest.mark.parametrize("fix", ["a2", "a3", "a4", "d4"])
    def test_nc_poset_is_lattice(self, fix, request):
        q = request.getfixturevalue(fix)
        nc = noncrossing_partitions(q)
        p = FinitePoset(tuple(range(len(nc))), nc.leq)
        assert lattice_analyze(p).is_lattice

    def test_report_json(self, a2):
        cp = cambrian_poset(a2)
        doc = json.loads(lattice_analyze(cp).to_json(cp, describe=lambda s: sorted(s)))
        assert doc["is_trim"] is True
        assert len(doc["join_irreducibles"]) == 3


class TestMeetJoin:
    def test_meet_is_intersection(self, a2):
        t = frozenset({(1, 1), (0, 1)})
        assert torsion_meet(a2, t, frozenset(positive_roots(a2))) == t
        assert torsion_meet(a2, t, frozenset({(1, 0)})) == frozenset()

    def test_join_forces_extension(self, a2):
        assert torsion_join(a2, frozenset({(1, 0)}), frozenset({(0, 1)})) == frozenset(
            positive_roots(a2)
        )

    @pytest.mark.parametrize("fix", ["a2", "a3"])
    def test_join_and_meet_match_lattice_tables(self, fix, request):
        q = request.getfixturevalue(fix)
        cp = cambrian_poset(q)
        joins, meets = _bound_tables(cp)
        for i, t1 in enumerate(cp.payloads):
            for j, t2 in enumerate(cp.payloads):
                assert torsion_join(q, t1, t2) == cp.payloads[joins[i][j]]
                assert torsion_meet(q, t1, t2) == cp.payloads[meets[i][j]]

    def test_join_output_is_torsion_class(self, a3):
        classes = enumerate_torsion_classes(a3)
        for t1 in classes[:5]:
            for t2 in classes[:5]:
                assert is_torsion_class(a3, torsion_join(a3, t1, t2))


class TestPrincipalClasses:
    def test_a1(self, a1):
        assert principal_torsion_classes(a1) == (frozenset({(1,)}),)

    def test_a2(self, a2):
        assert set(principal_torsion_classes(a2)) == {
            frozenset({(1, 0)}),
            frozenset({(0, 1)}),
            frozenset({(0, 1), (1, 1)}),
        }

    @pytest.mark.parametrize("fix", ["a3", "a4", "d4"])
    def test_one_per_root_and_join_irreducible(self, fix, request):
        q = request.getfixturevalue(fix)
        principal = principal_torsion_classes(q)
        assert len(principal) == len(positive_roots(q))
        cp = cambrian_poset(q)
        report = lattice_analyze(cp)
        assert {cp.payloads[i] for i in report.join_irreducibles} == set(principal)


class TestSplittingChain:
    def test_a2_chain(self, a2):
        chain = splitting_chain(a2)
        assert [sorted(s) for s in chain] == [
            [(0, 1), (1, 0), (1, 1)],
            [(0, 1), (1, 1)],
            [(0, 1)],
            [],
        ]

    @pytest.mark.parametrize("fix", ["a2", "a3", "a4", "d4"])
    def test_chain_of_torsion_classes(self, fix, request):
        q = request.getfixturevalue(fix)
        chain = splitting_chain(q)
        classes = set(enumerate_torsion_classes(q))
        assert len(chain) == len(positive_roots(q)) + 1
        assert chain[0] == frozenset(positive_roots(q))
        assert chain[-1] == frozenset()
        for i in range(len(chain) - 1):
            assert chain[i + 1] < chain[i]
        for s in chain:
            assert s in classes

    @pytest.mark.parametrize("fix", ["a2", "a3"])
    def test_chain_members_are_splitting(self, fix, request):
        """Every indecomposable is torsion or torsion free for each S_i."""
        from quivernc import torsion_free_complement

        q = request.getfixturevalue(fix)
        for s in splitting_chain(q):
            f = torsion_free_complement(q, s)
            assert s | f == frozenset(positive_roots(q))

    @pytest.mark.parametrize("fix", ["a2", "a3"])
    def test_left_modularity(self, fix, request):
        q = request.getfixturevalue(fix)
        cp = cambrian_poset(q)
        joins, meets = _bound_tables(cp)
        idx = {p: i for i, p in enumerate(cp.payloads)}
        for s in splitting_chain(q):
            x = idx[s]
            for y in range(len(cp)):
                for z in range(len(cp)):
                    if y != z and cp.leq[y][z]:
                        assert meets[joins[y][x]][z] == joins[y][meets[x][z]]

    def test_chain_is_left_modular_maximal_chain(self, a3):
        cp = cambrian_poset(a3)
        report = lattice_analyze(cp)
        assert report.left_modular_chain is not None
        chain_payloads = {cp.payloads[i] for i in report.left_modular_chain}
        assert len(chain_payloads) == len(positive_roots(a3)) + 1
