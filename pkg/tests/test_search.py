from __future__ import annotations

import random

import pytest

from lefschetzcalc import catalog
from lefschetzcalc.catalog import ALPHA, BETA
from lefschetzcalc.certificates import verify
from lefschetzcalc.fibration_calculus import (
    AbstractLF,
    Cycle,
    CyclicShift,
    Hurwitz,
    Mode,
    RewriteCycle,
    SmoothReplace,
    apply_move,
    apply_moves,
    legal_moves,
)
from lefschetzcalc.plumbing_lattice import PlumbingTree
from lefschetzcalc.search import (
    DEFAULT_BLOCK_SEARCH_BUDGET,
    NOT_FOUND_MESSAGE,
    SearchBudget,
    SearchError,
    expand,
    normalize,
    reduce_until,
    replay_inverse,
    search,
    search_async,
    total_complexity,
)


@pytest.mark.parametrize(
    ("depth", "states", "stabilize", "message"),
    [
        (0, 10, 0, r"^Search depth and state limits must be positive"),
        (4, 0, 0, r"^Search depth and state limits must be positive"),
        (4, 10, -1, r"^Stabilization allowance cannot be negative"),
    ],
)
def test_budget_validation(
    depth: int,
    states: int,
    stabilize: int,
    message: str,
) -> None:
    with pytest.raises(SearchError, match=message):
        SearchBudget(depth, states, stabilize)


def test_default_budgets() -> None:
    budget = SearchBudget()
    assert (budget.max_depth, budget.max_states) == (8, 20000)
    assert budget.allow_stabilize_up_to == 1
    assert DEFAULT_BLOCK_SEARCH_BUDGET.allow_stabilize_up_to == 0


def test_normalize_rewrites_and_rotates() -> None:
    f = AbstractLF(PlumbingTree.path(2, 2), (BETA, Cycle(1, ((1, 1),))))
    steps, state = normalize(f)
    assert steps[0] == RewriteCycle(2, ALPHA)
    assert state.cycles == (ALPHA, BETA)
    assert apply_moves(f, steps, Mode.WEINSTEIN) == state


def test_normalize_keeps_canonical_state() -> None:
    y1 = catalog.build_Y(1, 2)
    assert normalize(y1) == ((), y1)


def test_expand_children() -> None:
    y1 = catalog.build_Y(1, 2)
    children = expand(y1, Mode.WEINSTEIN, 2)
    assert len(children) == 10
    assert len(expand(y1, Mode.WEINSTEIN, 3)) == 12


def test_expand_smooth_adds_replacements() -> None:
    x1 = catalog.build_X(1, 2)
    states = [child.state for child in expand(x1, Mode.SMOOTH, 2)]
    assert normalize(catalog.build_Y(1, 2)).state in states


def test_replay_inverse_undoes_expansion() -> None:
    x1 = catalog.build_X(1, 2)
    for steps, child in expand(x1, Mode.SMOOTH, 3):
        undo = replay_inverse(x1, steps, Mode.SMOOTH)
        assert apply_moves(child, undo, Mode.SMOOTH) == x1


def test_search_same_fibration() -> None:
    y1 = catalog.build_Y(1, 2)
    result = search(y1, y1, Mode.WEINSTEIN)
    assert result.found
    assert result.certificate is not None
    assert result.certificate.steps == ()
    assert result.depth == 0


def test_search_rotated_fibration() -> None:
    y1 = catalog.build_Y(1, 2)
    rotated = y1.replace_cycles(y1.cycles[1:] + y1.cycles[:1])
    result = search(rotated, y1, Mode.WEINSTEIN)
    assert result.certificate is not None
    assert result.depth == 0
    assert verify(result.certificate).accepted


def test_search_smooth_one_replacement() -> None:
    x1 = catalog.build_X(1, 2)
    y1 = catalog.build_Y(1, 2)
    result = search(x1, y1, Mode.SMOOTH, SearchBudget(2, 500, 0))
    assert result.certificate is not None
    assert result.depth == 1
    assert any(
        isinstance(move, SmoothReplace) for move in result.certificate.steps
    )
    assert verify(result.certificate).accepted


def test_search_weinstein_reaches_milnor_fiber() -> None:
    x1 = catalog.build_X(1, 2)
    a3 = catalog.build_A_milnor(3, 2)
    result = search(x1, a3, Mode.WEINSTEIN)
    assert result.certificate is not None
    assert result.certificate.start == x1
    assert result.certificate.claimed_end == a3
    assert verify(result.certificate).accepted


def test_search_gives_up_within_budget() -> None:
    x1 = catalog.build_X(1, 2)
    y1 = catalog.build_Y(1, 2)
    result = search(x1, y1, Mode.WEINSTEIN, SearchBudget(1, 500, 0))
    assert not result.found
    assert result.message == NOT_FOUND_MESSAGE
    assert result.depth == 1


def test_search_state_limit() -> None:
    x1 = catalog.build_X(1, 2)
    y1 = catalog.build_Y(1, 2)
    result = search(x1, y1, Mode.WEINSTEIN, SearchBudget(8, 5, 0))
    assert not result.found
    assert result.explored == 5


def test_search_dimension_mismatch() -> None:
    with pytest.raises(SearchError, match=r"^Cannot search between n = 2"):
        search(
            catalog.build_Y(1, 2),
            catalog.build_Y(1, 4),
            Mode.WEINSTEIN,
        )


@pytest.mark.trio
async def test_search_workers_match_single_worker() -> None:
    x1 = catalog.build_X(1, 2)
    a3 = catalog.build_A_milnor(3, 2)
    budget = SearchBudget(6, 3000, 1)
    single = await search_async(x1, a3, Mode.WEINSTEIN, budget, workers=1)
    threaded = await search_async(x1, a3, Mode.WEINSTEIN, budget, workers=3)
    assert single == threaded


def test_reduce_until_root_goal() -> None:
    y1 = catalog.build_Y(1, 2)
    cert = reduce_until(y1, lambda state: state.cycle_count == 5)
    assert cert is not None
    assert cert.steps == ()


def test_reduce_until_removes_vertex() -> None:
    x1 = catalog.build_X(1, 2)
    cert = reduce_until(x1, lambda state: state.fiber.vertex_count == 1)
    assert cert is not None
    assert cert.claimed_end.fiber.vertex_count == 1
    assert cert.claimed_end.cycle_count == 4
    assert verify(cert).accepted


def test_reduce_until_gives_up() -> None:
    y1 = catalog.build_Y(1, 2)
    budget = SearchBudget(2, 50, 0)
    cert = reduce_until(y1, lambda state: state.cycle_count == 3, budget)
    assert cert is None


def test_total_complexity() -> None:
    assert total_complexity(catalog.build_Y(2, 2)) == 0
    assert total_complexity(catalog.build_X(1, 2)) > 0


def test_expand_single_vertex_cycle() -> None:
    lone = AbstractLF(PlumbingTree.path(2, 2), (BETA,))
    assert expand(lone, Mode.WEINSTEIN, 2) == []
    assert len(expand(lone, Mode.WEINSTEIN, 3)) == 2


def test_search_from_single_cycle() -> None:
    lone = AbstractLF(PlumbingTree.path(2, 2), (BETA,))
    assert search(lone, lone, Mode.WEINSTEIN).found
    budget = SearchBudget(2, 200, 1)
    result = search(lone, catalog.build_Y(1, 2), Mode.WEINSTEIN, budget)
    assert not result.found
    assert result.certificate is None


@pytest.mark.parametrize("seed", range(20))
def test_search_round_trips(seed: int) -> None:
    rng = random.Random(seed)
    starts = [
        catalog.build_X(1, 2),
        catalog.build_Y(1, 2),
        catalog.build_Z((1, 1), 2),
        catalog.build_P_Tmj(3, 2, 2),
    ]
    budget = SearchBudget(6, 4000, 0)
    for _ in range(10):
        start = rng.choice(starts)
        end = start
        for _ in range(rng.randint(0, 3)):
            options = [
                move
                for move in legal_moves(end, Mode.WEINSTEIN)
                if isinstance(move, (CyclicShift, Hurwitz))
            ]
            end = apply_move(end, rng.choice(options), Mode.WEINSTEIN)
        there = search(start, end, Mode.WEINSTEIN, budget)
        back = search(end, start, Mode.WEINSTEIN, budget)
        assert there.certificate is not None
        assert back.certificate is not None
        assert there.certificate.claimed_end == end
        assert back.certificate.claimed_end == start
        assert verify(there.certificate).accepted
        assert verify(back.certificate).accepted
