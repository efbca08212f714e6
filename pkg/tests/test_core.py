from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from granula import (
    Comparison,
    Relation,
    Universe,
    compare,
    empty,
    finer_or_equal,
    format_granule,
    granule_of,
    join_relation,
    make_granule,
    meet,
    parse_granule,
    parse_set,
    prob_distribution,
    quotient_join,
    relation_of,
    transitive_closure,
    whole,
)
from granula.core import is_granule_text
from granula.errors import (
    EmptyBlockError,
    NotEquivalenceError,
    OverlapError,
    UniverseMismatchError,
    UnknownElementError,
)
from strategies import granules, universes

U4 = Universe.of_size(4)


def g(text, u=U4):
    return parse_granule(text, u)


class TestUniverse:
    def test_of_size_names(self):
        assert Universe.of_size(3).elements == ("1", "2", "3")

    def test_rejects_duplicates_and_empty(self):
        with pytest.raises(ValueError):
            Universe(("a", "a"))
        with pytest.raises(ValueError):
            Universe(())

    def test_rejects_reserved_characters(self):
        with pytest.raises(ValueError):
            Universe(("a,b",))

    def test_index_unknown(self):
        with pytest.raises(UnknownElementError):
            U4.index("9")
        with pytest.raises(KeyError):
            U4.index("9")


class TestGranule:
    def test_blocks_are_canonical(self):
        a = make_granule([{3, 2}, {0, 1}], U4)
        assert a.blocks == (frozenset({0, 1}), frozenset({2, 3}))
        assert a == make_granule([{1, 0}, {2, 3}], U4)

    def test_overlap_rejected(self):
        with pytest.raises(OverlapError):
            make_granule([{0, 1}, {1, 2}], U4)

    def test_empty_block_rejected(self):
        with pytest.raises(EmptyBlockError):
            make_granule([{0}, set()], U4)

    def test_carrier_and_quotient(self):
        a = g("{{1,2},{4}}")
        assert a.carrier == frozenset({0, 1, 3})
        assert not a.is_quotient
        assert whole(U4).is_quotient
        assert empty(U4).is_empty

    def test_text_round_trip(self):
        for text in ["{{1,2},{3,4}}", "{{1},{2},{3},{4}}", "{{2,3}}", "{}"]:
            assert format_granule(g(text)) == text

    def test_text_tolerates_spaces(self):
        assert g(" { {1, 2} , {3} } ") == g("{{1,2},{3}}")

    def test_unknown_name(self):
        with pytest.raises(UnknownElementError):
            g("{{1,5}}")

    def test_parse_set(self):
        assert parse_set("{1,3}", U4) == frozenset({0, 2})
        assert parse_set("{}", U4) == frozenset()

    def test_granule_text_detection(self):
        assert is_granule_text("{{1}}")
        assert is_granule_text("{}") is False
        assert not is_granule_text("{1,2}")


class TestRelations:
    def test_relation_round_trip(self):
        a = g("{{1,2},{3}}")
        r = relation_of(a)
        assert r.pairs == {(0, 0), (0, 1), (1, 0), (1, 1), (2, 2)}
        assert r.is_equivalence()
        assert granule_of(r) == a

    def test_granule_of_rejects_non_equivalence(self):
        with pytest.raises(NotEquivalenceError):
            granule_of(Relation(U4, {(0, 1)}))

    def test_join_relation_not_transitive(self):
        r = join_relation(g("{{1,2}}"), g("{{2,3}}"))
        assert not r.is_transitive()
        assert transitive_closure(r).pairs >= {(0, 2), (2, 0)}

    def test_closure_matches_quotient_join(self):
        a, b = g("{{1,2},{4}}"), g("{{2,3}}")
        assert granule_of(transitive_closure(join_relation(a, b))) == quotient_join(a, b)


class TestOperations:
    def test_meet(self):
        assert meet(g("{{1,2},{3,4}}"), g("{{1},{2,3,4}}")) == g("{{1},{2},{3,4}}")

    def test_meet_on_subsets(self):
        assert meet(g("{{1,2}}"), g("{{2,3}}")) == g("{{2}}")
        assert meet(g("{{1}}"), g("{{2}}")).is_empty

    def test_quotient_join_chains(self):
        assert quotient_join(g("{{1,2},{3},{4}}"), g("{{2,3},{1},{4}}")) == g("{{1,2,3},{4}}")

    def test_quotient_join_on_subsets(self):
        assert quotient_join(g("{{1,2}}"), g("{{3}}")) == g("{{1,2},{3}}")

    def test_different_universes(self):
        with pytest.raises(UniverseMismatchError):
            meet(whole(U4), whole(Universe.of_size(3)))

    def test_compare(self):
        fine, coarse = g("{{1},{2},{3,4}}"), g("{{1,2},{3,4}}")
        assert compare(fine, coarse) is Comparison.STRICTLY_FINER_LHS
        assert compare(coarse, fine) is Comparison.STRICTLY_FINER_RHS
        assert compare(fine, fine) is Comparison.EQUAL
        assert compare(g("{{1,2},{3,4}}"), g("{{1,3},{2,4}}")) is Comparison.INCOMPARABLE

    def test_order_is_relation_inclusion(self):
        # on subsets the order follows the relations, not the carriers alone
        assert finer_or_equal(g("{{1}}"), g("{{1,2}}"))
        assert not finer_or_equal(g("{{1,2}}"), g("{{1}}"))
        assert finer_or_equal(empty(U4), g("{{3}}"))


class TestDistribution:
    def test_fixture_values(self):
        d = prob_distribution(g("{{1,2},{3,4}}"), g("{{1,2,3},{4}}"))
        assert d[0, 0] == Fraction(1, 2)
        assert d[0, 1] == 0
        assert d[1, 0] == Fraction(1, 4)
        assert d[1, 1] == Fraction(1, 4)
        assert d.total == 1 == d.bound

    def test_partial_carriers(self):
        d = prob_distribution(g("{{1,2}}"), g("{{2,3},{4}}"))
        assert d.total == Fraction(1, 4)
        assert d.bound == Fraction(1, 2)


@st.composite
def pair_of_granules(draw):
    u = draw(universes(max_size=6))
    return draw(granules(u)), draw(granules(u)), draw(granules(u))


@given(pair_of_granules())
def test_meet_and_join_are_bounds(abc):
    a, b, c = abc
    m, j = meet(a, b), quotient_join(a, b)
    assert finer_or_equal(m, a) and finer_or_equal(m, b)
    assert finer_or_equal(a, j) and finer_or_equal(b, j)
    # greatest / least among all bounds
    if finer_or_equal(c, a) and finer_or_equal(c, b):
        assert finer_or_equal(c, m)
    if finer_or_equal(a, c) and finer_or_equal(b, c):
        assert finer_or_equal(j, c)


@given(pair_of_granules())
def test_lattice_laws(abc):
    a, b, c = abc
    assert meet(a, b) == meet(b, a)
    assert quotient_join(a, b) == quotient_join(b, a)
    assert meet(meet(a, b), c) == meet(a, meet(b, c))
    assert quotient_join(quotient_join(a, b), c) == quotient_join(a, quotient_join(b, c))
    assert meet(a, quotient_join(a, b)) == a
    assert quotient_join(a, meet(a, b)) == a


@given(pair_of_granules())
def test_order_matches_relations(abc):
    a, b, _ = abc
    assert finer_or_equal(a, b) == (relation_of(a).pairs <= relation_of(b).pairs)
    assert finer_or_equal(a, b) == (meet(a, b) == a)


@given(pair_of_granules())
def test_distribution_sum_bound(abc):
    a, b, _ = abc
    d = prob_distribution(a, b)
    assert sum(d.entries.values()) == Fraction(len(a.carrier & b.carrier), a.universe.n)
    assert d.total <= d.bound


@given(pair_of_granules())
def test_text_form_round_trip(abc):
    a = abc[0]
    assert parse_granule(format_granule(a), a.universe) == a
