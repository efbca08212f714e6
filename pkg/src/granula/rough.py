"""Micro (set) and macro (granule) knowledge spaces of an information system.

The micro space is a family of definable subsets of the universe, closed under
union and intersection, with the empty set adjoined.  Set approximations are
the greatest definable subset and least definable superset of a target.

The macro space is the base granule ``P`` together with every granule strictly
coarser than it (every partition of the set of P-blocks).  Granule
approximations are the greatest member below and least member above a target
under the coarse-fine order.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Iterator, Sequence

from .combinatorics import set_partitions
from .core import (
    Granule,
    Universe,
    finer_or_equal,
    format_set,
    make_granule,
    meet,
    quotient_join,
)
from .errors import (
    CapExceededError,
    IncompleteSystemError,
    NoAttributesError,
    NoBoundError,
    UniverseMismatchError,
)

__all__ = [
    "InformationSystem",
    "Mode",
    "Category",
    "MicroKnowledgeSpace",
    "SetApproximation",
    "GranuleApproximation",
    "DEFAULT_FAMILY_CAP",
    "DEFAULT_BLOCK_CAP",
    "base_granule",
    "definable_sets",
    "micro_space",
    "approximate_set",
    "pawlak_approximation",
    "definable_granules",
    "macro_family",
    "lower_granule",
    "upper_granule",
    "approximate_granule",
    "complete_shortcut",
]

DEFAULT_FAMILY_CAP = 1 << 16
DEFAULT_BLOCK_CAP = 8  # Bell(8) = 4140 granules


@dataclass(frozen=True)
class InformationSystem:
    """A universe plus named attributes, each an equivalence granule on a subset."""

    universe: Universe
    attributes: tuple[tuple[str, Granule], ...]

    def __post_init__(self) -> None:
        attributes = tuple((str(name), g) for name, g in self.attributes)
        object.__setattr__(self, "attributes", attributes)
        names = [name for name, _ in attributes]
        if len(set(names)) != len(names):
            raise ValueError("attribute names must be unique")
        for name, g in attributes:
            if g.universe != self.universe:
                raise UniverseMismatchError(f"attribute {name!r} is on another universe")

    @classmethod
    def from_granules(cls, granules: Sequence[Granule], names: Sequence[str] | None = None) -> InformationSystem:
        if not granules:
            raise NoAttributesError("an information system needs at least one attribute")
        names = names or [f"P{i + 1}" for i in range(len(granules))]
        return cls(granules[0].universe, tuple(zip(names, granules)))

    @property
    def names(self) -> list[str]:
        return [name for name, _ in self.attributes]

    @property
    def granules(self) -> list[Granule]:
        return [g for _, g in self.attributes]

    def attribute(self, name: str) -> Granule:
        for key, g in self.attributes:
            if key == name:
                return g
        raise KeyError(name)

    @property
    def complete(self) -> bool:
        """Every attribute is defined on the whole universe."""
        return all(g.is_quotient for _, g in self.attributes)


class Mode(enum.Enum):
    """How the definable sets of the micro space are generated."""

    PAPER_LITERAL = "paper-literal"  # nonempty unions of blocks of P
    ATTRIBUTE_GENERATED = "attribute-generated"  # union/intersection closure of all attribute blocks

    @classmethod
    def default_for(cls, sys: InformationSystem) -> Mode:
        return cls.PAPER_LITERAL if sys.complete else cls.ATTRIBUTE_GENERATED


class Category(enum.Enum):
    """Pawlak's classification of a target against its approximations."""

    DEFINABLE = "definable"
    ROUGHLY_DEFINABLE = "roughly_definable"
    INTERNALLY_UNDEFINABLE = "internally_undefinable"
    EXTERNALLY_UNDEFINABLE = "externally_undefinable"
    TOTALLY_UNDEFINABLE = "totally_undefinable"

    @property
    def coarse(self) -> str:
        """Two-way projection: ``d`` (definable), ``d_r`` (roughly definable) or ``~d_r``."""
        if self is Category.DEFINABLE:
            return "d"
        if self is Category.ROUGHLY_DEFINABLE:
            return "d_r"
        return "~d_r"


def base_granule(sys: InformationSystem) -> Granule:
    """Iterated meet of all attribute granules."""
    if not sys.attributes:
        raise NoAttributesError("an information system needs at least one attribute")
    return reduce(meet, sys.granules)


# -- micro knowledge space ----------------------------------------------------------


def _unions(blocks: Sequence[frozenset[int]], cap: int) -> set[frozenset[int]]:
    if (1 << len(blocks)) - 1 > cap:
        raise CapExceededError(
            f"{len(blocks)} blocks give {(1 << len(blocks)) - 1} definable sets, over cap {cap}"
        )
    out = set()
    for mask in range(1, 1 << len(blocks)):
        out.add(frozenset().union(*(b for i, b in enumerate(blocks) if mask >> i & 1)))
    return out


def _closure(generators: Iterable[frozenset[int]], cap: int) -> set[frozenset[int]]:
    family = {g for g in generators if g}
    frontier = list(family)
    while frontier:
        fresh = []
        for x in frontier:
            for y in list(family):
                for z in (x | y, x & y):
                    if z and z not in family:
                        family.add(z)
                        fresh.append(z)
                        if len(family) > cap:
                            raise CapExceededError(f"definable family exceeds cap {cap}")
        frontier = fresh
    return family


def definable_sets(
    sys: InformationSystem, mode: Mode | str | None = None, *, cap: int = DEFAULT_FAMILY_CAP
) -> frozenset[frozenset[int]]:
    """Nonempty definable sets for ``mode`` (the empty set is not included)."""
    mode = Mode(mode) if mode is not None else Mode.default_for(sys)
    if mode is Mode.PAPER_LITERAL:
        return frozenset(_unions(base_granule(sys).blocks, cap))
    if not sys.attributes:
        raise NoAttributesError("an information system needs at least one attribute")
    return frozenset(_closure((b for g in sys.granules for b in g.blocks), cap))


@dataclass(frozen=True)
class MicroKnowledgeSpace:
    universe: Universe
    base: Granule
    definables: frozenset[frozenset[int]]
    mode: Mode

    @property
    def family(self) -> frozenset[frozenset[int]]:
        """Definables with the empty set adjoined."""
        return self.definables | {frozenset()}

    def is_definable(self, target: frozenset[int]) -> bool:
        return target in self.family


def micro_space(
    sys: InformationSystem, mode: Mode | str | None = None, *, cap: int = DEFAULT_FAMILY_CAP
) -> MicroKnowledgeSpace:
    mode = Mode(mode) if mode is not None else Mode.default_for(sys)
    return MicroKnowledgeSpace(sys.universe, base_granule(sys), definable_sets(sys, mode, cap=cap), mode)


@dataclass(frozen=True)
class SetApproximation:
    """Lower/upper approximation of a set; ``upper`` is None when no definable superset exists."""

    target: frozenset[int]
    lower: frozenset[int]
    upper: frozenset[int] | None
    category: Category

    def to_dict(self, u: Universe) -> dict:
        return {
            "target": format_set(self.target, u),
            "lower": format_set(self.lower, u),
            "upper": None if self.upper is None else format_set(self.upper, u),
            "category": self.category.value,
            "class": self.category.coarse,
        }


def _categorize(target, lower, upper, top) -> Category:
    if upper is not None and lower == target == upper:
        return Category.DEFINABLE
    empty_below = not lower
    full_above = upper is None or upper == top
    if empty_below and full_above:
        return Category.TOTALLY_UNDEFINABLE
    if empty_below:
        return Category.INTERNALLY_UNDEFINABLE
    if full_above:
        return Category.EXTERNALLY_UNDEFINABLE
    return Category.ROUGHLY_DEFINABLE


def approximate_set(target: Iterable[int], space: MicroKnowledgeSpace) -> SetApproximation:
    """Greatest definable subset and least definable superset of ``target``.

    With no definable superset the upper approximation is reported as absent and
    the target is classed as undefinable from above.
    """
    target = space.universe.check(target)
    inside = [d for d in space.definables if d <= target]
    lower = frozenset().union(*inside)
    if not target:
        upper: frozenset[int] | None = frozenset()
    else:
        around = [d for d in space.definables if target <= d]
        upper = reduce(frozenset.intersection, around) if around else None
    return SetApproximation(target, lower, upper, _categorize(target, lower, upper, space.universe.full))


def pawlak_approximation(target: Iterable[int], p: Granule) -> tuple[frozenset[int], frozenset[int]]:
    """Classical block arithmetic: blocks inside the target, blocks meeting it."""
    target = frozenset(target)
    lower = frozenset().union(*(b for b in p.blocks if b <= target))
    upper = frozenset().union(*(b for b in p.blocks if b & target))
    return lower, upper


# -- macro knowledge space ----------------------------------------------------------


def _coarsenings(p: Granule) -> Iterator[Granule]:
    for grouping in set_partitions(p.blocks):
        yield make_granule([frozenset().union(*group) for group in grouping], p.universe)


def definable_granules(sys: InformationSystem, cap: int = DEFAULT_BLOCK_CAP) -> list[Granule]:
    """Every granule strictly coarser than P, built from unions of P-blocks."""
    p = base_granule(sys)
    if len(p.blocks) > cap:
        raise CapExceededError(f"P has {len(p.blocks)} blocks, over cap {cap}")
    return [g for g in _coarsenings(p) if g != p]


def macro_family(sys: InformationSystem, cap: int = DEFAULT_BLOCK_CAP) -> list[Granule]:
    """P followed by its definable granules."""
    return [base_granule(sys), *definable_granules(sys, cap)]


@dataclass(frozen=True)
class GranuleApproximation:
    lower: Granule
    upper: Granule


def lower_granule(a: Granule, sys: InformationSystem, *, cap: int = DEFAULT_BLOCK_CAP) -> Granule:
    """Quotient join of ``a & B`` over members ``B`` of the macro family finer than ``a``."""
    below = [meet(a, b) for b in macro_family(sys, cap) if finer_or_equal(b, a)]
    if not below:
        raise NoBoundError(f"no member of the macro space is finer than {a}", side="lower")
    return reduce(quotient_join, below)


def upper_granule(a: Granule, sys: InformationSystem, *, cap: int = DEFAULT_BLOCK_CAP) -> Granule:
    """Meet of ``a v_t B`` over members ``B`` of the macro family coarser than ``a``."""
    above = [quotient_join(a, b) for b in macro_family(sys, cap) if finer_or_equal(a, b)]
    if not above:
        raise NoBoundError(f"no member of the macro space is coarser than {a}", side="upper")
    return reduce(meet, above)


def approximate_granule(a: Granule, sys: InformationSystem, *, cap: int = DEFAULT_BLOCK_CAP) -> GranuleApproximation:
    return GranuleApproximation(lower_granule(a, sys, cap=cap), upper_granule(a, sys, cap=cap))


def complete_shortcut(a: Granule, sys: InformationSystem) -> GranuleApproximation:
    """``(a & P, a v_t P)``, the closed form offered for complete systems."""
    if not sys.complete:
        raise IncompleteSystemError("the shortcut applies to complete systems only")
    p = base_granule(sys)
    return GranuleApproximation(meet(a, p), quotient_join(a, p))
