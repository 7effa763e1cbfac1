"""Search - Bounded move searches between fibrations."""

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

__title__ = "Search"
__author__ = "CoolCat467"
__license__ = "GNU Lesser General Public License Version 3"

import heapq
import logging
from dataclasses import dataclass
from functools import partial
from typing import TYPE_CHECKING, Final, NamedTuple

import trio

from lefschetzcalc.certificates import (
    SEARCH_PROVENANCE,
    Certificate,
    align_steps,
)
from lefschetzcalc.fibration_calculus import (
    AbstractLF,
    CyclicShift,
    Destabilize,
    Direction,
    Hurwitz,
    IllegalMoveError,
    Mode,
    Move,
    RewriteCycle,
    SmoothReplace,
    Stabilize,
    apply_move,
    canonical_key,
    canonical_rotation,
    cycle_complexity,
    inverse_moves,
    simplify_cycle,
    smooth_exponents,
)

if TYPE_CHECKING:
    from collections.abc import Callable, Sequence

logger = logging.getLogger(__name__)

NOT_FOUND_MESSAGE: Final = "no certificate within budget"


class SearchError(ValueError):
    """Search inputs or budget are invalid."""

    __slots__ = ()


@dataclass(frozen=True, slots=True)
class SearchBudget:
    """Limits on a search.

    max_depth counts expansion levels on both sides together.
    allow_stabilize_up_to is how many vertices a state may have beyond
    the larger starting fiber.
    """

    max_depth: int = 8
    max_states: int = 20000
    allow_stabilize_up_to: int = 1

    def __post_init__(self) -> None:
        """Raise SearchError if a limit is out of range."""
        if self.max_depth < 1 or self.max_states < 1:
            raise SearchError(
                "Search depth and state limits must be positive, got "
                f"{self.max_depth} and {self.max_states}",
            )
        if self.allow_stabilize_up_to < 0:
            raise SearchError(
                "Stabilization allowance cannot be negative, got "
                f"{self.allow_stabilize_up_to}",
            )


DEFAULT_BLOCK_SEARCH_BUDGET: Final = SearchBudget(
    max_depth=16,
    max_states=1500,
    allow_stabilize_up_to=0,
)


@dataclass(frozen=True, slots=True)
class SearchResult:
    """Outcome of a search; certificate is None when nothing was found."""

    certificate: Certificate | None
    explored: int
    depth: int
    message: str = ""

    @property
    def found(self) -> bool:
        """Whether a certificate was found."""
        return self.certificate is not None


class Expansion(NamedTuple):
    """Child state and the steps reaching it from its parent."""

    steps: tuple[Move, ...]
    state: AbstractLF


class _Node(NamedTuple):
    state: AbstractLF
    parent: bytes | None
    steps: tuple[Move, ...]
    depth: int


def normalize(state: AbstractLF) -> Expansion:
    """Return rewrites and shifts putting state in canonical rotation.

    Cycles recognized as vertex spheres are rewritten bare first.
    """
    steps: list[Move] = []
    for position, cycle in enumerate(state.cycles, start=1):
        if cycle.is_vertex_sphere:
            continue
        simple = simplify_cycle(state.fiber, cycle)
        if simple is not None:
            sphere, chain = simple
            steps.append(RewriteCycle(position, sphere, chain))
    for move in steps:
        state = apply_move(state, move, Mode.WEINSTEIN)
    shift = canonical_rotation(state)
    if shift:
        state = state.replace_cycles(
            state.cycles[shift:] + state.cycles[:shift],
        )
        steps.extend([CyclicShift(Direction.LEFT)] * shift)
    return Expansion(tuple(steps), state)


def _macros(
    state: AbstractLF,
    mode: Mode,
    vertex_limit: int,
) -> list[tuple[Move, ...]]:
    """Return candidate move groups in expansion order.

    Hurwitz moves across the wrap point are a shift then a Hurwitz
    move. Destabilization only removes the newest vertex, brought to
    the front by shifts, so every group has an exact inverse.
    """
    count = state.cycle_count
    groups: list[tuple[Move, ...]] = []
    for position in range(1, count):
        for direction in (Direction.RIGHT, Direction.LEFT):
            groups.append((Hurwitz(position, direction),))
    if count > 1:
        for direction in (Direction.RIGHT, Direction.LEFT):
            groups.append(
                (CyclicShift(Direction.RIGHT), Hurwitz(1, direction)),
            )
    newest = state.fiber.vertex_count
    for position, cycle in enumerate(state.cycles, start=1):
        if cycle.is_vertex_sphere and cycle.base == newest:
            shifts = (CyclicShift(Direction.LEFT),) * (position - 1)
            groups.append((*shifts, Destabilize(1)))
    if newest < vertex_limit:
        groups.extend(
            (Stabilize(vertex),) for vertex in range(1, newest + 1)
        )
    if mode is Mode.SMOOTH:
        for position in range(1, count + 1):
            for vertex in range(1, newest + 1):
                groups.extend(
                    (SmoothReplace(position, vertex, exponent),)
                    for exponent in smooth_exponents(state.sphere_dim)
                )
    return groups


def expand(
    state: AbstractLF,
    mode: Mode,
    vertex_limit: int,
) -> list[Expansion]:
    """Return every legal normalized child of state in expansion order."""
    children = []
    for group in _macros(state, mode, vertex_limit):
        child = state
        try:
            for move in group:
                child = apply_move(child, move, mode)
        except IllegalMoveError:
            continue
        tail = normalize(child)
        children.append(Expansion(group + tail.steps, tail.state))
    return children


def replay_inverse(
    parent: AbstractLF,
    steps: Sequence[Move],
    mode: Mode,
) -> list[Move]:
    """Return moves undoing steps applied to parent."""
    if not steps:
        return []
    states = [parent]
    for move in steps[:-1]:
        states.append(apply_move(states[-1], move, mode))
    undo: list[Move] = []
    for before, move in zip(reversed(states), reversed(steps), strict=True):
        undo.extend(inverse_moves(before, move))
    return undo


async def _expand_level(
    states: Sequence[AbstractLF],
    mode: Mode,
    vertex_limit: int,
    workers: int,
) -> list[list[Expansion]]:
    """Return children of every state, in the same order as states."""
    if workers <= 1:
        return [expand(state, mode, vertex_limit) for state in states]
    results: list[list[Expansion]] = [[] for _ in states]
    limiter = trio.CapacityLimiter(workers)

    async def run_one(index: int) -> None:
        results[index] = await trio.to_thread.run_sync(
            partial(expand, states[index], mode, vertex_limit),
            limiter=limiter,
        )

    async with trio.open_nursery() as nursery:
        for index in range(len(states)):
            nursery.start_soon(run_one, index)
    return results


def _path_to(nodes: dict[bytes, _Node], key: bytes) -> list[bytes]:
    path = [key]
    while (parent := nodes[path[-1]].parent) is not None:
        path.append(parent)
    path.reverse()
    return path


class _Side:
    """One direction of a bidirectional search."""

    __slots__ = ("depth", "frontier", "nodes")

    def __init__(self, root: AbstractLF) -> None:
        """Initialize from a starting fibration."""
        start = normalize(root)
        key = canonical_key(start.state)
        self.nodes: dict[bytes, _Node] = {
            key: _Node(start.state, None, start.steps, 0),
        }
        self.frontier = [key]
        self.depth = 0


def _splice(
    forward: _Side,
    backward: _Side,
    meet: bytes,
    start: AbstractLF,
    end: AbstractLF,
    mode: Mode,
) -> list[Move]:
    """Return moves from start to end through the meeting key."""
    steps: list[Move] = []
    for key in _path_to(forward.nodes, meet):
        steps.extend(forward.nodes[key].steps)
    path = _path_to(backward.nodes, meet)
    steps.extend(
        align_steps(forward.nodes[meet].state, backward.nodes[meet].state),
    )
    for key in reversed(path[1:]):
        node = backward.nodes[key]
        assert node.parent is not None
        parent = backward.nodes[node.parent].state
        steps.extend(replay_inverse(parent, node.steps, mode))
    root = backward.nodes[path[0]]
    steps.extend(replay_inverse(end, root.steps, mode))
    return steps


async def search_async(
    start: AbstractLF,
    end: AbstractLF,
    mode: Mode,
    budget: SearchBudget | None = None,
    workers: int = 1,
) -> SearchResult:
    """Return certificate from start to end found by bidirectional BFS.

    Workers only spread the expansion of a level across threads; the
    merge follows expansion order, so results match a one worker run.
    Raises SearchError if start and end have different n.
    """
    if budget is None:
        budget = SearchBudget()
    if start.sphere_dim != end.sphere_dim:
        raise SearchError(
            f"Cannot search between n = {start.sphere_dim} and "
            f"n = {end.sphere_dim}",
        )
    vertex_limit = (
        max(start.fiber.vertex_count, end.fiber.vertex_count)
        + budget.allow_stabilize_up_to
    )
    forward = _Side(start)
    backward = _Side(end)

    def found(meet: bytes) -> SearchResult:
        steps = _splice(forward, backward, meet, start, end, mode)
        explored = len(forward.nodes) + len(backward.nodes)
        logger.info(
            "found %d step certificate after %d states",
            len(steps),
            explored,
        )
        return SearchResult(
            Certificate(mode, start, tuple(steps), end, SEARCH_PROVENANCE),
            explored,
            forward.depth + backward.depth,
        )

    (root_key,) = forward.nodes
    if root_key in backward.nodes:
        return found(root_key)

    while forward.depth + backward.depth < budget.max_depth:
        if not forward.frontier or not backward.frontier:
            break
        if len(backward.frontier) < len(forward.frontier):
            side, other = backward, forward
        else:
            side, other = forward, backward
        states = [side.nodes[key].state for key in side.frontier]
        children = await _expand_level(states, mode, vertex_limit, workers)
        side.depth += 1
        logger.debug(
            "level %d: expanded %d states",
            side.depth,
            len(states),
        )
        new_frontier: list[bytes] = []
        for parent_key, expansions in zip(
            side.frontier,
            children,
            strict=True,
        ):
            for steps, child in expansions:
                key = canonical_key(child)
                if key in side.nodes:
                    continue
                side.nodes[key] = _Node(child, parent_key, steps, side.depth)
                if key in other.nodes:
                    return found(key)
                new_frontier.append(key)
                if len(side.nodes) + len(other.nodes) >= budget.max_states:
                    logger.info("state budget exhausted")
                    return SearchResult(
                        None,
                        budget.max_states,
                        forward.depth + backward.depth,
                        NOT_FOUND_MESSAGE,
                    )
        side.frontier = new_frontier

    explored = len(forward.nodes) + len(backward.nodes)
    logger.info("no certificate after %d states", explored)
    return SearchResult(
        None,
        explored,
        forward.depth + backward.depth,
        NOT_FOUND_MESSAGE,
    )


def search(
    start: AbstractLF,
    end: AbstractLF,
    mode: Mode,
    budget: SearchBudget | None = None,
    workers: int = 1,
) -> SearchResult:
    """Return result of search_async run in a fresh trio event loop."""
    return trio.run(search_async, start, end, mode, budget, workers)


def total_complexity(state: AbstractLF) -> int:
    """Return summed normal form size of every cycle."""
    return sum(cycle_complexity(state.fiber, cycle) for cycle in state.cycles)


def reduce_until(
    start: AbstractLF,
    goal: Callable[[AbstractLF], bool],
    budget: SearchBudget = DEFAULT_BLOCK_SEARCH_BUDGET,
    mode: Mode = Mode.WEINSTEIN,
) -> Certificate | None:
    """Return certificate to the first state meeting goal, or None.

    Best first search ordered by total cycle complexity, ties going to
    the earliest generated state.
    """
    vertex_limit = start.fiber.vertex_count + budget.allow_stabilize_up_to
    root = normalize(start)
    if goal(root.state):
        return Certificate(
            mode,
            start,
            root.steps,
            root.state,
            SEARCH_PROVENANCE,
        )
    nodes: dict[bytes, _Node] = {
        canonical_key(root.state): _Node(root.state, None, root.steps, 0),
    }
    serial = 0
    queue = [(total_complexity(root.state), serial, canonical_key(root.state))]
    while queue:
        _, _, key = heapq.heappop(queue)
        node = nodes[key]
        if node.depth >= budget.max_depth:
            continue
        for steps, child in expand(node.state, mode, vertex_limit):
            child_key = canonical_key(child)
            if child_key in nodes:
                continue
            nodes[child_key] = _Node(child, key, steps, node.depth + 1)
            if goal(child):
                moves: list[Move] = []
                for step_key in _path_to(nodes, child_key):
                    moves.extend(nodes[step_key].steps)
                logger.info(
                    "reached goal in %d steps after %d states",
                    len(moves),
                    len(nodes),
                )
                return Certificate(
                    mode,
                    start,
                    tuple(moves),
                    child,
                    SEARCH_PROVENANCE,
                )
            if len(nodes) >= budget.max_states:
                logger.info("reduction budget exhausted")
                return None
            serial += 1
            heapq.heappush(
                queue,
                (total_complexity(child), serial, child_key),
            )
    return None


if __name__ == "__main__":  # pragma: nocover
    print(f"{__title__}\nProgrammed by {__author__}.")
