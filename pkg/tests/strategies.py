"""Hypothesis strategies for universes, sets and granules."""

from hypothesis import strategies as st

from granula import Universe, make_granule


@st.composite
def universes(draw, min_size=1, max_size=7):
    return Universe.of_size(draw(st.integers(min_size, max_size)))


@st.composite
def subsets(draw, u, nonempty=False):
    chosen = draw(st.sets(st.integers(0, u.n - 1), min_size=1 if nonempty else 0))
    return frozenset(chosen)


@st.composite
def granules(draw, u, quotient=False, nonempty=True):
    """Random partition of a random carrier (the whole universe when ``quotient``)."""
    if quotient:
        carrier = sorted(u.full)
    else:
        carrier = sorted(draw(subsets(u, nonempty=nonempty)))
    labels = draw(st.lists(st.integers(0, len(carrier)), min_size=len(carrier), max_size=len(carrier)))
    blocks: dict[int, set[int]] = {}
    for x, label in zip(carrier, labels):
        blocks.setdefault(label, set()).add(x)
    return make_granule(blocks.values(), u)
