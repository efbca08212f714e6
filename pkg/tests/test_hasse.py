import re

import pytest

from granula import InformationSystem, Universe, export_hasse, micro_space, parse_granule
from granula.errors import CapExceededError
from granula.hasse import macro_hasse, micro_hasse


def discrete(n):
    u = Universe.of_size(n)
    return InformationSystem.from_granules([parse_granule("{" + ",".join("{%d}" % i for i in range(1, n + 1)) + "}", u)])


def test_micro_one_element():
    d = micro_hasse(micro_space(discrete(1)))
    assert len(d.nodes) == 2 and len(d.edges) == 1


def test_micro_diamond():
    d = micro_hasse(micro_space(discrete(2)))
    assert len(d.nodes) == 4 and len(d.edges) == 4
    assert all(marked for _, _, marked in d.nodes)


def test_micro_marks_definables_only():
    u = Universe.of_size(3)
    space = micro_space(InformationSystem.from_granules([parse_granule("{{1,2},{3}}", u)]))
    marked = {label for _, label, flag in micro_hasse(space).nodes if flag}
    assert marked == {"{}", "{1,2}", "{3}", "{1,2,3}"}


def test_micro_cap():
    with pytest.raises(CapExceededError):
        micro_hasse(micro_space(discrete(6)))


def test_macro_three_blocks():
    u = Universe.of_size(4)
    d = macro_hasse(InformationSystem.from_granules([parse_granule("{{1},{2},{3,4}}", u)]))
    assert len(d.nodes) == 5
    # partition lattice of 3 items: bottom to three atoms, three atoms to top
    assert len(d.edges) == 6
    assert d.base is not None


def test_dot_text():
    dot = export_hasse(micro_space(discrete(2)))
    assert dot.startswith("digraph micro {")
    assert len(re.findall(r"->", dot)) == 4
    assert 'label="{1,2}"' in dot
    macro = export_hasse(discrete(3))
    assert "shape=box" in macro and macro.count("->") == 6
