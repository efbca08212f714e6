import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from granula import (
    MeasureKind,
    Universe,
    are_independent,
    co_entropy,
    conditional_fineness,
    conditional_fineness_entropy,
    conditional_granularity,
    conditional_granularity_entropy,
    entropy,
    finer_or_equal,
    fineness,
    granularity,
    is_quotient_complement,
    parse_granule,
    subsethood,
    supsethood,
    whole,
)
from reference import expand, sh_ref
from strategies import granules, universes

U4 = Universe.of_size(4)
A = parse_granule("{{1,2},{3,4}}", U4)
B = parse_granule("{{1,2,3},{4}}", U4)


X = set(range(1, 5))
A_RAW = [{1, 2}, {3, 4}]
B_RAW = [{1, 2, 3}, {4}]


class TestSubsethood:
    def test_kind_parse(self):
        assert MeasureKind.parse("sh3") is MeasureKind.SH3
        assert MeasureKind.parse("4") is MeasureKind.SH4
        assert str(MeasureKind.SH5) == "sh5"
        with pytest.raises(ValueError):
            MeasureKind.parse("sh6")

    def test_example_values(self):
        a, b = frozenset({0, 1}), frozenset({1, 2})
        assert subsethood(MeasureKind.SH1, b, a, 4) == Fraction(3, 4)
        assert subsethood(MeasureKind.SH2, b, a, 4) == Fraction(1, 2)
        assert subsethood(MeasureKind.SH3, b, a, 4) == Fraction(2, 3)
        assert subsethood(MeasureKind.SH4, b, a, 4) == Fraction(2, 3)
        assert subsethood(MeasureKind.SH5, b, a, 4) == Fraction(1, 2)

    @pytest.mark.parametrize("kind", list(MeasureKind))
    def test_matches_reference(self, kind):
        universe = frozenset(range(4))
        sets = [frozenset(i for i in range(4) if mask >> i & 1) for mask in range(16)]
        for a in sets:
            for b in sets:
                assert subsethood(kind, b, a, 4) == sh_ref(kind.value, b, a, universe)
                assert supsethood(kind, b, a, 4) == 1 - sh_ref(kind.value, b, a, universe)

    @pytest.mark.parametrize("kind", list(MeasureKind))
    def test_inclusion_gives_one(self, kind):
        assert subsethood(kind, frozenset({0, 1, 2}), frozenset({1}), 4) == 1
        assert subsethood(kind, frozenset(range(4)), frozenset(range(4)), 4) == 1


class TestWorkedFixture:
    def test_granularity_sh2(self):
        assert conditional_granularity(MeasureKind.SH2, B, A) == Fraction(3, 4)

    def test_granularity_sh1(self):
        assert conditional_granularity(MeasureKind.SH1, B, A) == Fraction(7, 8)

    def test_fineness_sh2(self):
        assert conditional_fineness(MeasureKind.SH2, B, A) == Fraction(1, 4)

    def test_entropies_sh2(self):
        co = conditional_fineness_entropy(MeasureKind.SH2, B, A)
        h = conditional_granularity_entropy(MeasureKind.SH2, B, A)
        assert co.value == pytest.approx(0.5, abs=1e-9) and not co.clamped
        assert h.value == pytest.approx(1.5, abs=1e-9)

    @pytest.mark.parametrize("kind", list(MeasureKind))
    def test_all_kinds_match_expansion(self, kind):
        g, f, h, co = expand(kind.value, B_RAW, A_RAW, X)
        assert conditional_granularity(kind, B, A) == g
        assert conditional_fineness(kind, B, A) == f
        assert conditional_granularity_entropy(kind, B, A).value == pytest.approx(h, abs=1e-9)
        assert conditional_fineness_entropy(kind, B, A).value == pytest.approx(co, abs=1e-9)

    def test_sh5_clamps(self):
        # b = {1,2,3} and a = {3,4} cover X, so sh5 is 0 on a pair with mass
        assert conditional_fineness_entropy(MeasureKind.SH5, B, A).clamped

    def test_log_base(self):
        bits = conditional_fineness_entropy(MeasureKind.SH2, B, A).value
        nats = conditional_fineness_entropy(MeasureKind.SH2, B, A, base=math.e).value
        assert nats == pytest.approx(bits * math.log(2))


class TestUnconditional:
    def test_reduce_to_whole(self):
        for kind in MeasureKind:
            assert granularity(kind, A) == conditional_granularity(kind, A, whole(U4))
            assert fineness(kind, A) == conditional_fineness(kind, A, whole(U4))

    def test_co_entropy_is_shannon_for_sh2(self):
        discrete = parse_granule("{{1},{2},{3},{4}}", U4)
        assert co_entropy(MeasureKind.SH2, discrete).value == pytest.approx(2.0)
        assert co_entropy(MeasureKind.SH2, A).value == pytest.approx(1.0)
        assert entropy(MeasureKind.SH2, whole(U4)).value == pytest.approx(2.0)


class TestIndependence:
    def test_disjoint_carriers(self):
        a = parse_granule("{{1,2}}", U4)
        b = parse_granule("{{3},{4}}", U4)
        assert are_independent(a, b)
        assert not is_quotient_complement(b, a)
        assert is_quotient_complement(parse_granule("{{3,4}}", U4), a)
        for kind in MeasureKind:
            assert conditional_granularity(kind, b, a) == 0
            assert conditional_fineness(kind, b, a) == Fraction(1, 2)


@st.composite
def operands(draw, quotient=False):
    u = draw(universes(max_size=6))
    return draw(granules(u, quotient)), draw(granules(u, quotient)), draw(st.sampled_from(list(MeasureKind)))


def _raw(g):
    return [{int(g.universe.elements[i]) for i in block} for block in g.blocks]


@given(operands())
def test_matches_brute_expansion(ops):
    a, b, kind = ops
    g, f, h, co = expand(kind.value, _raw(b), _raw(a), set(range(1, a.universe.n + 1)))
    assert conditional_granularity(kind, b, a) == g
    assert conditional_fineness(kind, b, a) == f
    assert conditional_fineness_entropy(kind, b, a).value == pytest.approx(co, abs=1e-9)
    assert conditional_granularity_entropy(kind, b, a).value == pytest.approx(max(h, 0.0), abs=1e-9)


@given(operands())
def test_ranges(ops):
    a, b, kind = ops
    bound = Fraction(min(len(a.carrier), len(b.carrier)), a.universe.n)
    g = conditional_granularity(kind, b, a)
    assert 0 <= g <= bound
    assert 0 <= conditional_fineness(kind, b, a) <= bound
    log_n = math.log2(a.universe.n)
    for e in (conditional_fineness_entropy(kind, b, a), conditional_granularity_entropy(kind, b, a)):
        assert -1e-9 <= e.value <= log_n + 1e-9


@given(operands(quotient=True))
def test_finer_reaches_bound_on_quotients(ops):
    a, b, kind = ops
    assert (conditional_granularity(kind, b, a) == 1) == finer_or_equal(a, b)
    assert (conditional_fineness_entropy(kind, b, a).value == 0) == finer_or_equal(a, b)
