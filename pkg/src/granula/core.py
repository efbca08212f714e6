"""Universes, equivalence granules, relations and the operations between them.

A granule is a family of pairwise-disjoint nonempty blocks over a subset (its
carrier) of a fixed, ordered universe.  Blocks are frozensets of element
indices; the block tuple is kept in canonical order (by smallest member) so
that structural equality is granule equality.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import (
    EmptyBlockError,
    NotEquivalenceError,
    OverlapError,
    ParseError,
    UniverseMismatchError,
    UnknownElementError,
)

__all__ = [
    "MAX_UNIVERSE",
    "Block",
    "Universe",
    "Granule",
    "Relation",
    "MeetDistribution",
    "Comparison",
    "make_granule",
    "whole",
    "empty",
    "relation_of",
    "granule_of",
    "transitive_closure",
    "meet",
    "join_relation",
    "quotient_join",
    "finer_or_equal",
    "compare",
    "prob_distribution",
    "parse_set",
    "parse_granule",
    "format_set",
    "format_granule",
]

#: Soft cap on universe size for the library proper.
MAX_UNIVERSE = 64

Block = frozenset  # frozenset[int] of element indices


@dataclass(frozen=True)
class Universe:
    """An ordered finite set of distinct element names."""

    elements: tuple[str, ...]

    def __post_init__(self) -> None:
        elements = tuple(str(e) for e in self.elements)
        object.__setattr__(self, "elements", elements)
        if not elements:
            raise ValueError("a universe needs at least one element")
        if len(elements) > MAX_UNIVERSE:
            raise ValueError(f"universe size {len(elements)} exceeds cap {MAX_UNIVERSE}")
        if len(set(elements)) != len(elements):
            raise ValueError("universe element names must be unique")
        for name in elements:
            if not name or any(ch in name for ch in "{},") or name != name.strip():
                raise ValueError(f"invalid element name {name!r}")

    @classmethod
    def of_size(cls, n: int) -> Universe:
        """Universe ``{1, ..., n}`` with decimal names."""
        return cls(tuple(str(i) for i in range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.elements)

    @cached_property
    def _positions(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.elements)}

    @cached_property
    def full(self) -> frozenset[int]:
        return frozenset(range(self.n))

    def index(self, name: str) -> int:
        try:
            return self._positions[name]
        except KeyError:
            raise UnknownElementError(f"unknown element {name!r}") from None

    def indices(self, names: Iterable[str]) -> frozenset[int]:
        return frozenset(self.index(name) for name in names)

    def check(self, members: Iterable[int]) -> frozenset[int]:
        members = frozenset(members)
        for i in members:
            if not isinstance(i, int) or not 0 <= i < self.n:
                raise UnknownElementError(f"index {i!r} outside universe of size {self.n}")
        return members

    def __str__(self) -> str:
        return format_set(self.full, self)


@dataclass(frozen=True)
class Granule:
    """An equivalence granule: a partition of its carrier.

    Construct through :func:`make_granule` or directly; blocks are validated and
    put in canonical order either way.
    """

    universe: Universe
    blocks: tuple[frozenset[int], ...] = ()

    def __post_init__(self) -> None:
        blocks = [self.universe.check(b) for b in self.blocks]
        seen: set[int] = set()
        for b in blocks:
            if not b:
                raise EmptyBlockError("granule blocks must be nonempty")
            if seen & b:
                raise OverlapError(f"blocks overlap on {format_set(seen & b, self.universe)}")
            seen |= b
        blocks.sort(key=min)
        object.__setattr__(self, "blocks", tuple(blocks))

    @cached_property
    def carrier(self) -> frozenset[int]:
        return frozenset().union(*self.blocks)

    @property
    def is_empty(self) -> bool:
        return not self.blocks

    @property
    def is_quotient(self) -> bool:
        """True when the carrier is the whole universe."""
        return len(self.carrier) == self.universe.n

    @cached_property
    def block_of(self) -> Mapping[int, int]:
        """Map from element index to the position of its block."""
        return {x: i for i, b in enumerate(self.blocks) for x in b}

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self) -> Iterator[frozenset[int]]:
        return iter(self.blocks)

    def __str__(self) -> str:
        return format_granule(self)


@dataclass(frozen=True)
class Relation:
    """A set of ordered index pairs over a universe."""

    universe: Universe
    pairs: frozenset[tuple[int, int]] = frozenset()

    def __post_init__(self) -> None:
        pairs = frozenset((int(x), int(y)) for x, y in self.pairs)
        self.universe.check(x for pair in pairs for x in pair)
        object.__setattr__(self, "pairs", pairs)

    @cached_property
    def field(self) -> frozenset[int]:
        return frozenset(x for pair in self.pairs for x in pair)

    def is_reflexive_on_field(self) -> bool:
        return all((x, x) in self.pairs for x in self.field)

    def is_symmetric(self) -> bool:
        return all((y, x) in self.pairs for x, y in self.pairs)

    def is_transitive(self) -> bool:
        succ = _successors(self.pairs)
        return all(succ.get(y, set()) <= succ[x] for x, y in self.pairs)

    def is_equivalence(self) -> bool:
        return self.is_reflexive_on_field() and self.is_symmetric() and self.is_transitive()

    def __contains__(self, pair: object) -> bool:
        return pair in self.pairs

    def __le__(self, other: Relation) -> bool:
        return self.pairs <= other.pairs

    def __len__(self) -> int:
        return len(self.pairs)


def _successors(pairs: Iterable[tuple[int, int]]) -> dict[int, set[int]]:
    succ: dict[int, set[int]] = {}
    for x, y in pairs:
        succ.setdefault(x, set()).add(y)
    return succ


def make_granule(blocks: Iterable[Iterable[int]], u: Universe) -> Granule:
    """Build a validated granule from index blocks.

    Raises :class:`OverlapError` or :class:`EmptyBlockError` on malformed input.
    """
    return Granule(u, tuple(frozenset(b) for b in blocks))


def whole(u: Universe) -> Granule:
    """The one-block quotient granule ``{X}``."""
    return Granule(u, (u.full,))


def empty(u: Universe) -> Granule:
    return Granule(u, ())


def _same_universe(*granules: Granule) -> Universe:
    u = granules[0].universe
    for g in granules[1:]:
        if g.universe != u:
            raise UniverseMismatchError("granules are defined on different universes")
    return u


def relation_of(g: Granule) -> Relation:
    """The equivalence relation (on the carrier) whose classes are the blocks."""
    return Relation(g.universe, frozenset((x, y) for b in g.blocks for x in b for y in b))


def granule_of(r: Relation) -> Granule:
    """Equivalence classes of ``r``; inverse of :func:`relation_of`."""
    if not r.is_reflexive_on_field():
        raise NotEquivalenceError("relation is not reflexive on its field")
    if not r.is_symmetric():
        raise NotEquivalenceError("relation is not symmetric")
    if not r.is_transitive():
        raise NotEquivalenceError("relation is not transitive")
    succ = _successors(r.pairs)
    return Granule(r.universe, tuple({frozenset(s) for s in succ.values()}))


def transitive_closure(r: Relation) -> Relation:
    """Smallest transitive superset of ``r`` (Warshall over the field)."""
    succ = {x: set(ys) for x, ys in _successors(r.pairs).items()}
    for k in sorted(r.field):
        reach_k = succ.get(k)
        if not reach_k:
            continue
        for ys in succ.values():
            if k in ys:
                ys |= reach_k
    return Relation(r.universe, frozenset((x, y) for x, ys in succ.items() for y in ys))


def meet(a: Granule, b: Granule) -> Granule:
    """Greatest common refinement: all nonempty blockwise intersections."""
    u = _same_universe(a, b)
    return Granule(u, tuple(x & y for x in a.blocks for y in b.blocks if not x.isdisjoint(y)))


def join_relation(a: Granule, b: Granule) -> Relation:
    """Plain union of the two relations; usually not transitive."""
    _same_universe(a, b)
    return Relation(a.universe, relation_of(a).pairs | relation_of(b).pairs)


def quotient_join(a: Granule, b: Granule) -> Granule:
    """Finest granule coarser than both, via union-find over the blocks."""
    u = _same_universe(a, b)
    parent: dict[int, int] = {x: x for x in a.carrier | b.carrier}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for block in (*a.blocks, *b.blocks):
        first, *rest = sorted(block)
        root = find(first)
        for x in rest:
            other = find(x)
            if other != root:
                parent[other] = root
    classes: dict[int, set[int]] = {}
    for x in parent:
        classes.setdefault(find(x), set()).add(x)
    return Granule(u, tuple(frozenset(c) for c in classes.values()))


def finer_or_equal(a: Granule, b: Granule) -> bool:
    """``a`` is finer than ``b`` (``b`` coarser than ``a``): each block of a lies in a block of b."""
    _same_universe(a, b)
    where = b.block_of
    for block in a.blocks:
        x = next(iter(block))
        if x not in where or not block <= b.blocks[where[x]]:
            return False
    return True


class Comparison(enum.Enum):
    """Outcome of comparing two granules under the coarse-fine order."""

    EQUAL = "equal"
    STRICTLY_FINER_LHS = "strictly_finer_lhs"
    STRICTLY_FINER_RHS = "strictly_finer_rhs"
    INCOMPARABLE = "incomparable"

    @property
    def lhs_finer(self) -> bool:
        """Left operand is finer than or equal to the right one."""
        return self in (Comparison.EQUAL, Comparison.STRICTLY_FINER_LHS)

    @property
    def rhs_finer(self) -> bool:
        return self in (Comparison.EQUAL, Comparison.STRICTLY_FINER_RHS)


def compare(a: Granule, b: Granule) -> Comparison:
    ab = finer_or_equal(a, b)
    ba = finer_or_equal(b, a)
    if ab and ba:
        return Comparison.EQUAL
    if ab:
        return Comparison.STRICTLY_FINER_LHS
    if ba:
        return Comparison.STRICTLY_FINER_RHS
    return Comparison.INCOMPARABLE


@dataclass(frozen=True)
class MeetDistribution:
    """Probability table ``p(a_i & b_j) = |a_i & b_j| / n`` over block pairs.

    ``entries`` holds every pair ``(i, j)`` of block positions, zeros included.
    """

    entries: Mapping[tuple[int, int], Fraction]
    n: int
    m: int  # smaller carrier size

    @property
    def total(self) -> Fraction:
        return sum(self.entries.values(), Fraction(0))

    @property
    def bound(self) -> Fraction:
        """The ceiling ``m/n`` on the total mass."""
        return Fraction(self.m, self.n)

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        return self.entries[key]

    def nonzero(self) -> Iterator[tuple[tuple[int, int], Fraction]]:
        return ((k, p) for k, p in self.entries.items() if p)


def prob_distribution(a: Granule, b: Granule) -> MeetDistribution:
    u = _same_universe(a, b)
    entries = {
        (i, j): Fraction(len(x & y), u.n)
        for i, x in enumerate(a.blocks)
        for j, y in enumerate(b.blocks)
    }
    return MeetDistribution(entries, u.n, min(len(a.carrier), len(b.carrier)))


# -- canonical text form ---------------------------------------------------------


def format_set(members: Iterable[int], u: Universe) -> str:
    return "{" + ",".join(u.elements[i] for i in sorted(members)) + "}"


def format_granule(g: Granule) -> str:
    return "{" + ",".join(format_set(b, g.universe) for b in g.blocks) + "}"


class _Reader:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            found = self.peek() or "end of input"
            raise ParseError(f"expected {ch!r}, found {found!r}", column=self.pos + 1)
        self.pos += 1

    def name(self) -> str:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] not in "{},":
            self.pos += 1
        token = self.text[start:self.pos].strip()
        if not token:
            raise ParseError("expected an element name", column=start + 1)
        return token

    def names(self) -> list[str]:
        self.expect("{")
        out: list[str] = []
        if self.peek() == "}":
            self.pos += 1
            return out
        while True:
            out.append(self.name())
            if self.peek() == ",":
                self.pos += 1
                continue
            self.expect("}")
            return out

    def end(self) -> None:
        if self.peek():
            raise ParseError("trailing characters", column=self.pos + 1)


def parse_set(text: str, u: Universe) -> frozenset[int]:
    """Parse ``{a,b,c}`` into an index set."""
    reader = _Reader(text)
    names = reader.names()
    reader.end()
    return u.indices(names)


def parse_granule(text: str, u: Universe) -> Granule:
    """Parse ``{{a,b},{c}}`` (or ``{}`` for the empty granule)."""
    reader = _Reader(text)
    reader.expect("{")
    blocks: list[frozenset[int]] = []
    if reader.peek() == "}":
        reader.pos += 1
    else:
        while True:
            blocks.append(u.indices(reader.names()))
            if reader.peek() == ",":
                reader.pos += 1
                continue
            reader.expect("}")
            break
    reader.end()
    return make_granule(blocks, u)


def is_granule_text(text: str) -> bool:
    """Whether ``text`` looks like a granule (nested braces) rather than a set."""
    inner = text.strip()[1:].lstrip()
    return inner.startswith("{")


def granule_from_names(blocks: Sequence[Iterable[str]], u: Universe) -> Granule:
    return make_granule([u.indices(b) for b in blocks], u)
