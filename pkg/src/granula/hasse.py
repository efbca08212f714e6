"""Hasse diagrams of the micro and macro knowledge spaces as DOT text."""

from __future__ import annotations

from dataclasses import dataclass

from .combinatorics import subsets_by_size
from .core import finer_or_equal, format_granule, format_set
from .errors import CapExceededError
from .rough import InformationSystem, MicroKnowledgeSpace, macro_family

__all__ = ["HasseDiagram", "micro_hasse", "macro_hasse", "export_hasse", "MICRO_CAP", "MACRO_CAP"]

MICRO_CAP = 5
MACRO_CAP = 6


@dataclass(frozen=True)
class HasseDiagram:
    """Nodes (id, label, marked) and cover edges (lower id, upper id)."""

    name: str
    nodes: tuple[tuple[str, str, bool], ...]
    edges: tuple[tuple[str, str], ...]
    base: str | None = None

    def to_dot(self) -> str:
        lines = [f"digraph {self.name} {{", "  rankdir=BT;", "  node [shape=ellipse];"]
        for node_id, label, marked in self.nodes:
            attrs = [f'label="{label}"']
            if node_id == self.base:
                attrs.append("shape=box")
            if marked:
                attrs.append("style=filled")
                attrs.append('fillcolor="lightblue"')
            lines.append(f"  {node_id} [{', '.join(attrs)}];")
        for lo, hi in self.edges:
            lines.append(f"  {lo} -> {hi};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def micro_hasse(space: MicroKnowledgeSpace) -> HasseDiagram:
    """Boolean lattice of all subsets, definable ones marked."""
    u = space.universe
    if u.n > MICRO_CAP:
        raise CapExceededError(f"micro lattice limited to n <= {MICRO_CAP}, got {u.n}")
    family = space.family

    def node_id(s: frozenset[int]) -> str:
        return "s" + str(sum(1 << i for i in s))

    nodes = tuple((node_id(s), format_set(s, u), s in family) for s in subsets_by_size(u.n))
    edges = tuple(
        (node_id(s), node_id(s | {x}))
        for s in subsets_by_size(u.n)
        for x in range(u.n)
        if x not in s
    )
    return HasseDiagram("micro", nodes, edges)


def macro_hasse(sys: InformationSystem) -> HasseDiagram:
    """Lattice of P and its coarsenings; a cover merges exactly two blocks."""
    family = macro_family(sys, cap=MACRO_CAP)
    base = family[0]
    family.sort(key=lambda g: (-len(g.blocks), format_granule(g)))
    ids = {g: f"g{i}" for i, g in enumerate(family)}
    nodes = tuple((ids[g], format_granule(g), g != base) for g in family)
    edges = tuple(
        (ids[lo], ids[hi])
        for lo in family
        for hi in family
        if len(lo.blocks) == len(hi.blocks) + 1 and finer_or_equal(lo, hi)
    )
    return HasseDiagram("macro", nodes, edges, base=ids[base])


def export_hasse(space: MicroKnowledgeSpace | InformationSystem) -> str:
    """DOT document for a micro space, or for the macro space of a system."""
    if isinstance(space, MicroKnowledgeSpace):
        return micro_hasse(space).to_dot()
    return macro_hasse(space).to_dot()
