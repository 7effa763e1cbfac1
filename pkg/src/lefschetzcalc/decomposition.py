"""Decomposition - Vertex blocks, component counts and index gaps."""

# Programmed by CoolCat467

from __future__ import annotations

# Copyright (C) 2025  CoolCat467
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU Lesser General Public License as
# published by the Free Software Foundation, either version 3 of the
# License, or (at your option) any later version.
#
# This program is distributed in the hope that it will be useful, but
# WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU
# Lesser General Public License for more details.
#
# You should have received a copy of the GNU Lesser General Public
# License along with this program.  If not, see
# <https://www.gnu.org/licenses/>.

__title__ = "Decomposition"
__author__ = "CoolCat467"
__license__ = "GNU Lesser General Public License Version 3"

import logging
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import NamedTuple

import networkx as nx

from lefschetzcalc.arc_engine import arc_equal, sphere_intersection
from lefschetzcalc.fibration_calculus import (
    AbstractLF,
    HomologyGroup,
    cycle_arc,
    euler_characteristic,
    simplify_cycle,
    total_space_homology,
)
from lefschetzcalc.plumbing_lattice import divisibility_chain
from lefschetzcalc.search import (
    DEFAULT_BLOCK_SEARCH_BUDGET,
    SearchBudget,
    reduce_until,
)

logger = logging.getLogger(__name__)


class DecompositionError(ValueError):
    """Invalid index gap parameters, mismatched reports or fibers."""

    __slots__ = ()


class BlockFailure(str, Enum):
    """Why a cycle list is not in vertex block form."""

    NON_VERTEX_CYCLE = "non-vertex cycle"
    INTERLEAVED_VERTEX = "interleaved vertex"
    UNUSED_VERTEX = "unused vertex"


class BlockDetectionError(Exception):
    """Cycle list is not a run of vertex sphere blocks."""

    __slots__ = ("reason",)

    def __init__(self, reason: BlockFailure, message: str) -> None:
        """Initialize with failure reason and detail message."""
        super().__init__(f"{reason.value}: {message}")
        self.reason = reason


@dataclass(frozen=True, slots=True)
class BlockDecomposition:
    """Cyclic runs of equal vertex spheres as (vertex, count) pairs."""

    blocks: tuple[tuple[int, int], ...]
    leftover_vertices: frozenset[int] = frozenset()

    @property
    def summands(self) -> int:
        """Number of blocks with at least two cycles."""
        return sum(1 for _, count in self.blocks if count >= 2)


def detect_blocks(f: AbstractLF) -> BlockDecomposition:
    """Return vertex block decomposition of f.

    Blocks are listed in cyclic order starting at the block of the
    smallest vertex.
    Raises BlockDetectionError naming the first failed condition.
    """
    tree = f.fiber
    vertices = []
    for position, cycle in enumerate(f.cycles, start=1):
        simple = simplify_cycle(tree, cycle)
        if simple is None:
            raise BlockDetectionError(
                BlockFailure.NON_VERTEX_CYCLE,
                f"cycle {position} is not a vertex sphere",
            )
        vertices.append(simple[0].base)
    # Start at a run boundary so no block wraps around.
    start = next(
        (
            index
            for index in range(len(vertices))
            if vertices[index] != vertices[index - 1]
        ),
        0,
    )
    ordered = vertices[start:] + vertices[:start]
    blocks: list[tuple[int, int]] = []
    for vertex in ordered:
        if blocks and blocks[-1][0] == vertex:
            blocks[-1] = (vertex, blocks[-1][1] + 1)
        else:
            blocks.append((vertex, 1))
    seen: set[int] = set()
    for vertex, _ in blocks:
        if vertex in seen:
            raise BlockDetectionError(
                BlockFailure.INTERLEAVED_VERTEX,
                f"vertex {vertex} occurs in separate runs",
            )
        seen.add(vertex)
    unused = frozenset(range(1, tree.vertex_count + 1)) - seen
    if unused:
        raise BlockDetectionError(
            BlockFailure.UNUSED_VERTEX,
            f"vertices {sorted(unused)} have no cycle",
        )
    first = blocks.index(min(blocks))
    return BlockDecomposition(tuple(blocks[first:] + blocks[:first]))


class Exactness(str, Enum):
    """How much a component count claims."""

    UNKNOWN = "unknown"
    LOWER_BOUND = "lower_bound"
    EXACT = "exact"

    @property
    def strength(self) -> int:
        """Order used to combine counts, unknown weakest."""
        return list(Exactness).index(self)


@dataclass(frozen=True, slots=True)
class ComponentCount:
    """Number of nonzero coproduct factors of the wrapped category.

    vanishing marks a count of zero coming from ball summands only.
    """

    value: int
    exactness: Exactness
    justification: str = field(default="", compare=False)
    vanishing: bool = False

    def __post_init__(self) -> None:
        """Raise DecompositionError if an exact count is below one."""
        if self.value < 0:
            raise DecompositionError(f"Negative component count {self.value}")
        if self.exactness is Exactness.EXACT and self.value < 1:
            raise DecompositionError("An exact component count is at least 1")


class IndexGapReport(NamedTuple):
    """Maslov index spread of a wrapped generator in an A_k summand."""

    n: int
    k: int
    gap_max_min: int
    gap_min_max: int
    nonvanishing_certified: bool


def index_gaps(n: int, k: int) -> IndexGapReport:
    """Return index gap report for an A_k block at sphere dimension n.

    Raises DecompositionError if n < 2 or k < 1.
    """
    if n < 2 or k < 1:
        raise DecompositionError(
            f"Index gaps need n >= 2 and k >= 1, got n={n}, k={k}",
        )
    gap_max_min = (n - 1) * (k + 1) + 2
    gap_min_max = n
    return IndexGapReport(
        n,
        k,
        gap_max_min,
        gap_min_max,
        gap_max_min >= 4 and gap_min_max >= 2,
    )


def _count_blocks(f: AbstractLF, blocks: BlockDecomposition) -> ComponentCount:
    value = blocks.summands
    if value == 0:
        return ComponentCount(
            0,
            Exactness.LOWER_BOUND,
            "every block is a single cycle, each giving a ball",
            vanishing=True,
        )
    if f.fiber.is_path:
        return ComponentCount(
            value,
            Exactness.EXACT,
            f"end connected sum of {value} A-type Milnor fibers, each "
            "indecomposable with nonvanishing wrapped category",
        )
    return ComponentCount(
        value,
        Exactness.LOWER_BOUND,
        f"{value} vertex blocks on a non-path fiber",
    )


def analyze_components(
    f: AbstractLF,
    budget: SearchBudget = DEFAULT_BLOCK_SEARCH_BUDGET,
) -> tuple[ComponentCount, BlockDecomposition | None]:
    """Return component count and the block form it was read from."""
    try:
        blocks = detect_blocks(f)
    except BlockDetectionError as exc:
        logger.debug("direct block detection failed: %s", exc)
    else:
        return _count_blocks(f, blocks), blocks

    def in_block_form(state: AbstractLF) -> bool:
        try:
            detect_blocks(state)
        except BlockDetectionError:
            return False
        return True

    reduction = reduce_until(f, in_block_form, budget)
    if reduction is None:
        return (
            ComponentCount(
                0,
                Exactness.UNKNOWN,
                "no vertex block form within search budget; interleaved "
                "sequences are told apart by symplectic cohomology, not "
                "computed here",
            ),
            None,
        )
    blocks = detect_blocks(reduction.claimed_end)
    count = _count_blocks(reduction.claimed_end, blocks)
    return (
        ComponentCount(
            count.value,
            count.exactness,
            f"{count.justification}, after {len(reduction)} Weinstein moves",
            count.vanishing,
        ),
        blocks,
    )


def component_count(
    f: AbstractLF,
    budget: SearchBudget = DEFAULT_BLOCK_SEARCH_BUDGET,
) -> ComponentCount:
    """Return tagged component count of f.

    Direct block detection is tried first, then a bounded Weinstein
    search for a block form.
    """
    return analyze_components(f, budget)[0]


@dataclass(frozen=True, slots=True)
class InvariantReport:
    """Homology, Euler characteristic, components and index gaps."""

    sphere_dim: int
    homology: tuple[HomologyGroup, ...]
    euler_characteristic: int
    components: ComponentCount
    index_gaps: tuple[IndexGapReport, ...] = ()


def invariant_report(
    f: AbstractLF,
    budget: SearchBudget = DEFAULT_BLOCK_SEARCH_BUDGET,
) -> InvariantReport:
    """Return full invariant report of f."""
    count, blocks = analyze_components(f, budget)
    gaps: tuple[IndexGapReport, ...] = ()
    if blocks is not None:
        gaps = tuple(
            sorted(
                index_gaps(f.sphere_dim, size - 1)
                for _, size in blocks.blocks
                if size >= 2
            ),
        )
    return InvariantReport(
        f.sphere_dim,
        total_space_homology(f),
        euler_characteristic(f),
        count,
        gaps,
    )


def _sum_counts(
    first: ComponentCount,
    second: ComponentCount,
) -> ComponentCount:
    if first.vanishing:
        exactness = second.exactness
    elif second.vanishing:
        exactness = first.exactness
    else:
        exactness = min(
            first.exactness,
            second.exactness,
            key=lambda item: item.strength,
        )
    value = first.value + second.value
    if exactness is Exactness.EXACT and value < 1:
        exactness = Exactness.LOWER_BOUND
    return ComponentCount(
        value,
        exactness,
        f"sum of ({first.justification}) and ({second.justification})",
        first.vanishing and second.vanishing,
    )


def sum_invariants(
    first: InvariantReport,
    second: InvariantReport,
) -> InvariantReport:
    """Return report of the end connected sum of two reports.

    Raises DecompositionError if the sphere dimensions differ.
    """
    if first.sphere_dim != second.sphere_dim:
        raise DecompositionError(
            f"Cannot add reports with n = {first.sphere_dim} and "
            f"n = {second.sphere_dim}",
        )
    homology = [HomologyGroup(0, 1)]
    for left, right in zip(
        first.homology[1:],
        second.homology[1:],
        strict=True,
    ):
        homology.append(
            HomologyGroup(
                left.degree,
                left.rank + right.rank,
                tuple(
                    factor
                    for factor in divisibility_chain(
                        left.torsion + right.torsion,
                    )
                    if factor > 1
                ),
            ),
        )
    return InvariantReport(
        first.sphere_dim,
        tuple(homology),
        first.euler_characteristic + second.euler_characteristic - 1,
        _sum_counts(first.components, second.components),
        tuple(sorted(first.index_gaps + second.index_gaps)),
    )


@dataclass(frozen=True, slots=True)
class ThimbleGraph:
    """Diagnostic graph on cycle positions joined when their arcs meet.

    Connectivity here says nothing about wrapped category components.
    """

    vertices: tuple[int, ...]
    edges: frozenset[tuple[int, int]]

    def is_connected(self) -> bool:
        """Return if every vertex is reachable from the first."""
        if not self.vertices:
            return True
        graph: nx.Graph[int] = nx.Graph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(self.edges)
        return nx.is_connected(graph)


def thimble_graph(f: AbstractLF) -> ThimbleGraph:
    """Return graph joining cycles whose arcs are equal or intersect.

    Raises DecompositionError if the fiber is not a path.
    """
    if not f.fiber.is_path:
        raise DecompositionError("Thimble graph needs a path fiber")
    arcs = [cycle_arc(f.fiber, cycle) for cycle in f.cycles]
    edges = set()
    for (left, first), (right, second) in combinations(
        enumerate(arcs, start=1),
        2,
    ):
        if arc_equal(first, second) or sphere_intersection(first, second) > 0:
            edges.add((left, right))
    return ThimbleGraph(tuple(range(1, f.cycle_count + 1)), frozenset(edges))


if __name__ == "__main__":  # pragma: nocover
    print(f"{__title__}\nProgrammed by {__author__}.")
