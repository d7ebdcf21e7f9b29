import itertools

import pytest

from quivernc import (
    a_of,
    enumerate_support_tilting,
    enumerate_torsion_classes,
    ext_projectives,
    gen,
    indecomposable,
    is_support_tilting,
    is_torsion_class,
    positive_roots,
    split_projectives,
    torsion_free_complement,
    torsion_subobject,
    wide_simples,
)
from quivernc.fields import GF2
from quivernc.replab import (
    decompose,
    direct_sum,
    ext_dim_roots,
    hom_basis,
    hom_dim_roots,
    simple_rep,
    sub_representation,
    subrepresentation_subspaces,
)
from quivernc.tors import is_wide


def a_of_kernel_oracle(q, t):
    """The kernel-condition definition of a(T), checked over GF(2) against
    morphisms from members and from two-element direct sums of members."""
    sources = [indecomposable(q, r, GF2) for r in sorted(t)]
    sources += [
        direct_sum([indecomposable(q, r1, GF2), indecomposable(q, r2, GF2)])
        for r1 in sorted(t)
        for r2 in sorted(t)
    ]
    out = set()
    for b in sorted(t):
        mb = indecomposable(q, b, GF2)
        good = True
        for y in sources:
            basis = hom_basis(y, mb).elements
            for coeffs in itertools.product(range(2), repeat=len(basis)):
                phi = [
                    [
                        [
                            sum(c * basis[k][v][i][j] for k, c in enumerate(coeffs)) % 2
                            for j in range(y.dims[v])
                        ]
                        for i in range(mb.dims[v])
                    ]
                    for v in range(q.n)
                ]
                from quivernc.fields import nullspace, row_space

                kernel = tuple(
                    row_space(GF2, nullspace(GF2, phi[v], y.dims[v]))
                    for v in range(q.n)
                )
                if not set(decompose(q, sub_representation(y, kernel))) <= t:
                    good = False
                    break
            if not good:
                break
        if good:
            out.add(b)
    return frozenset(out)


class TestGen:
    def test_empty(self, a2):
        assert gen(a2, frozenset()) == frozenset()

    def test_a2(self, a2):
        assert gen(a2, frozenset({(1, 1)})) == {(1, 1), (0, 1)}

    def test_a3(self, a3):
        assert gen(a3, frozenset({(1, 1, 1)})) == {
            (1, 1, 1), (0, 1, 1), (1, 1, 0), (0, 1, 0),
        }

    def test_rejects_non_roots(self, a2):
        with pytest.raises(ValueError):
            gen(a2, frozenset({(2, 1)}))

    def test_gen_of_wide_is_torsion_class(self, a2, a3):
        for q in (a2, a3):
            for t in enumerate_torsion_classes(q):
                assert is_torsion_class(q, gen(q, a_of(q, t)))


class TestTorsionOracle:
    def test_examples(self, a2):
        assert is_torsion_class(a2, frozenset({(0, 1)}))
        assert not is_torsion_class(a2, frozenset({(1, 0), (0, 1)}))
        assert is_torsion_class(a2, frozenset())
        assert is_torsion_class(a2, frozenset(positive_roots(a2)))

    @pytest.mark.parametrize("fix", ["a2", "a3"])
    def test_exhaustive_equivalence(self, fix, request):
        """The oracle accepts exactly the enumerated torsion classes."""
        q = request.getfixturevalue(fix)
        classes = set(enumerate_torsion_classes(q))
        for k in range(len(positive_roots(q)) + 1):
            for sub in itertools.combinations(positive_roots(q), k):
                assert is_torsion_class(q, frozenset(sub)) == (frozenset(sub) in classes)


class TestExtSplitProjectives:
    def test_empty(self, a2):
        assert ext_projectives(a2, frozenset()) == frozenset()

    def test_examples(self, a2):
        t = frozenset({(1, 1), (0, 1)})
        assert ext_projectives(a2, t) == t
        assert split_projectives(a2, t) == {(1, 1)}
        everything = frozenset(positive_roots(a2))
        assert ext_projectives(a2, everything) == {(1, 0), (1, 1)}
        assert split_projectives(a2, everything) == {(1, 0), (1, 1)}
        assert split_projectives(a2, frozenset({(1, 0)})) == {(1, 0)}

    def test_rejects_non_torsion_input(self, a2):
        with pytest.raises(ValueError):
            ext_projectives(a2, frozenset({(1, 0), (0, 1)}))


class TestAOf:
    def test_examples(self, a2, a3):
        assert a_of(a2, frozenset({(1, 1), (0, 1)})) == {(1, 1)}
        everything = frozenset(positive_roots(a2))
        assert a_of(a2, everything) == everything
        assert a_of(a3, frozenset({(1, 1, 1), (0, 1, 1), (1, 1, 0), (0, 1, 0)})) == {
            (1, 1, 1)
        }

    @pytest.mark.parametrize("fix", ["a2", "a3"])
    def test_matches_kernel_definition(self, fix, request):
        q = request.getfixturevalue(fix)
        for t in enumerate_torsion_classes(q):
            assert a_of(q, t) == a_of_kernel_oracle(q, t)

    @pytest.mark.parametrize("fix", ["a2", "a3"])
    def test_round_trips(self, fix, request):
        q = request.getfixturevalue(fix)
        for t in enumerate_torsion_classes(q):
            wide = a_of(q, t)
            assert gen(q, wide) == t
            assert a_of(q, gen(q, wide)) == wide

    @pytest.mark.parametrize("fix", ["a2", "a3"])
    def test_output_is_wide(self, fix, request):
        q = request.getfixturevalue(fix)
        for t in enumerate_torsion_classes(q):
            assert is_wide(q, a_of(q, t))

    def test_projectives_of_wide_are_split_projectives(self, a3):
        """Quotient description: every member of a(T) is the quotient of a
        split projective by a split projective."""
        for t in enumerate_torsion_classes(a3):
            split = split_projectives(a3, t)
            for x in a_of(a3, t):
                if x in split:
                    continue
                found = False
                for p in split:
                    mp = indecomposable(a3, p, GF2)
                    for sub in subrepresentation_subspaces(mp):
                        dims = tuple(len(rows) for rows in sub)
                        if tuple(p[i] - dims[i] for i in range(3)) != x:
                            continue
                        parts = decompose(a3, sub_representation(mp, sub))
                        if all(r in split for r in parts):
                            found = True
                            break
                    if found:
                        break
                assert found, (t, x)


class TestSupportTilting:
    def test_examples(self, a2):
        assert is_support_tilting(a2, frozenset({(1, 1), (0, 1)}))
        assert not is_support_tilting(a2, frozenset({(1, 1)}))
        assert not is_support_tilting(a2, frozenset({(1, 0), (0, 1)}))
        assert is_support_tilting(a2, frozenset())

    @pytest.mark.parametrize(
        "fix,count", [("a1", 2), ("a2", 5), ("a3", 14), ("a4", 42), ("d4", 50)]
    )
    def test_counts(self, fix, count, request):
        q = request.getfixturevalue(fix)
        assert len(enumerate_support_tilting(q)) == count
        assert len(enumerate_torsion_classes(q)) == count

    @pytest.mark.parametrize("fix", ["a2", "a3", "a4", "d4"])
    def test_bijection_round_trips(self, fix, request):
        q = request.getfixturevalue(fix)
        for c in enumerate_support_tilting(q):
            assert ext_projectives(q, gen(q, c)) == c
        for t in enumerate_torsion_classes(q):
            assert gen(q, ext_projectives(q, t)) == t


class TestWideSimples:
    def test_whole_category_a2(self, a2):
        assert wide_simples(a2, frozenset(positive_roots(a2))) == ((0, 1), (1, 0))

    def test_singletons(self, a2, a3):
        assert wide_simples(a2, frozenset({(1, 1)})) == ((1, 1),)
        assert wide_simples(a3, frozenset({(1, 1, 1)})) == ((1, 1, 1),)

    def test_simple_count_is_absolute_length(self, a3):
        from quivernc import absolute_length
        from quivernc.ncmap import cox_of_wide

        for t in enumerate_torsion_classes(a3):
            wide = a_of(a3, t)
            assert len(wide_simples(a3, wide)) == absolute_length(
                a3, cox_of_wide(a3, wide)
            )

    def test_order_impossible(self, a2):
        # {S1, S2} is not wide: the order constraint cannot be met twice over
        simples = wide_simples(a2, frozenset({(1, 0), (0, 1)}))
        assert simples == ((0, 1), (1, 0))  # constraint is one-way here, so fine


class TestTorsionPairs:
    def test_complement_example(self, a2):
        assert torsion_free_complement(a2, frozenset({(1, 1), (0, 1)})) == {(1, 0)}

    def test_complement_hom_vanishing(self, a3):
        for t in enumerate_torsion_classes(a3):
            f = torsion_free_complement(a3, t)
            assert not (t & f)
            for y in t:
                for x in f:
                    assert hom_dim_roots(a3, y, x) == 0

    def test_torsion_subobject_of_member(self, a2):
        t = frozenset({(1, 1), (0, 1)})
        m = indecomposable(a2, (1, 1), GF2)
        assert torsion_subobject(a2, t, m).dims == (1, 1)

    def test_torsion_subobject_of_sum(self, a2):
        t = frozenset({(0, 1)})
        m = direct_sum([simple_rep(a2, 1, GF2), simple_rep(a2, 2, GF2)])
        sub = torsion_subobject(a2, t, m)
        assert sub.dims == (0, 1)
        assert decompose(a2, sub) == ((0, 1),)

    def test_canonical_sequence_quotient_is_torsion_free(self, a2):
        from quivernc.replab import quotient_representation, subrepresentation_subspaces

        t = frozenset({(0, 1)})
        f = torsion_free_complement(a2, t)
        m = indecomposable(a2, (1, 1), GF2)
        tx = torsion_subobject(a2, t, m)
        assert tx.dims == (0, 0)  # Hom(S2, M11) = 0
        # quotient by t(X) must decompose inside the torsion free class
        sub = next(
            s
            for s in subrepresentation_subspaces(m)
            if tuple(len(rows) for rows in s) == tx.dims
        )
        q_rep = quotient_representation(m, sub)
        assert set(decompose(a2, q_rep)) <= f


def test_pairwise_ext_compat_is_necessary(a3):
    for c in enumerate_support_tilting(a3):
        for x in c:
            for y in c:
                assert ext_dim_roots(a3, x, y) == 0
