from __future__ import annotations

from itertools import product

import pytest

from lefschetzcalc import catalog
from lefschetzcalc.catalog import ALPHA, BETA
from lefschetzcalc.decomposition import (
    BlockDecomposition,
    BlockDetectionError,
    BlockFailure,
    ComponentCount,
    DecompositionError,
    Exactness,
    IndexGapReport,
    analyze_components,
    component_count,
    detect_blocks,
    index_gaps,
    invariant_report,
    sum_invariants,
    thimble_graph,
)
from lefschetzcalc.fibration_calculus import (
    AbstractLF,
    Cycle,
    HomologyGroup,
    euler_characteristic,
    total_space_homology,
)
from lefschetzcalc.plumbing_lattice import PlumbingTree
from lefschetzcalc.search import SearchBudget


def test_detect_blocks_rotates_to_run_start() -> None:
    f = AbstractLF(PlumbingTree.path(2, 2), (BETA, ALPHA, ALPHA, BETA))
    blocks = detect_blocks(f)
    assert blocks == BlockDecomposition(((1, 2), (2, 2)))
    assert blocks.summands == 2


def test_detect_blocks_single_vertex() -> None:
    blocks = detect_blocks(catalog.build_A_milnor(2, 3))
    assert blocks.blocks == ((1, 3),)


def test_detect_blocks_accepts_twisted_vertex_sphere() -> None:
    f = AbstractLF(
        PlumbingTree.path(2, 2),
        (ALPHA, Cycle(1, ((1, -1),)), BETA, BETA),
    )
    assert detect_blocks(f).blocks == ((1, 2), (2, 2))


@pytest.mark.parametrize(
    ("f", "reason", "message"),
    [
        (
            catalog.build_X(1, 2),
            BlockFailure.NON_VERTEX_CYCLE,
            r"^non-vertex cycle: cycle 4 is not a vertex sphere$",
        ),
        (
            catalog.build_P_Tmj(3, 2, 2),
            BlockFailure.INTERLEAVED_VERTEX,
            r"^interleaved vertex: vertex 1 occurs in separate runs$",
        ),
        (
            AbstractLF(PlumbingTree.path(3, 2), (ALPHA, ALPHA, BETA)),
            BlockFailure.UNUSED_VERTEX,
            r"^unused vertex: vertices \[3\] have no cycle$",
        ),
    ],
)
def test_block_failures(
    f: AbstractLF,
    reason: BlockFailure,
    message: str,
) -> None:
    with pytest.raises(BlockDetectionError, match=message) as info:
        detect_blocks(f)
    assert info.value.reason is reason


def test_component_count_validation() -> None:
    with pytest.raises(DecompositionError, match=r"^Negative component"):
        ComponentCount(-1, Exactness.UNKNOWN)
    with pytest.raises(DecompositionError, match=r"^An exact component"):
        ComponentCount(0, Exactness.EXACT)


def test_exactness_strength() -> None:
    assert Exactness.UNKNOWN.strength < Exactness.LOWER_BOUND.strength
    assert Exactness.LOWER_BOUND.strength < Exactness.EXACT.strength


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
@pytest.mark.parametrize("n", [2, 4])
def test_y_has_two_components(k: int, n: int) -> None:
    count = component_count(catalog.build_Y(k, n))
    assert count == ComponentCount(2, Exactness.EXACT)


def test_x_reduces_to_one_component() -> None:
    count, blocks = analyze_components(catalog.build_X(1, 2))
    assert count == ComponentCount(1, Exactness.EXACT)
    assert blocks is not None
    assert blocks.summands == 1
    assert "Weinstein moves" in count.justification


def test_z_components() -> None:
    count = component_count(catalog.build_Z((2, 2, 1), 2))
    assert count == ComponentCount(3, Exactness.EXACT)


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
@pytest.mark.parametrize("n", [2, 4])
def test_x_and_y_are_separated(k: int, n: int) -> None:
    x = catalog.build_X(k, n)
    y = catalog.build_Y(k, n)
    assert total_space_homology(x) == total_space_homology(y)
    assert component_count(x) == ComponentCount(1, Exactness.EXACT)
    assert component_count(y) == ComponentCount(2, Exactness.EXACT)


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_z_components_match_length(k: int) -> None:
    for params in product(range(1, 5), repeat=k):
        count = component_count(catalog.build_Z(params, 2))
        assert count == ComponentCount(k, Exactness.EXACT)


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_z_family_counts(k: int) -> None:
    for params in product(range(1, 5), repeat=k):
        members = catalog.z_family(params, 2)
        counts = [component_count(member).value for member in members]
        assert counts == list(range(1, k + 1))
        assert len({euler_characteristic(m) for m in members}) == 1


def test_ball_summands_vanish() -> None:
    f = AbstractLF(PlumbingTree.path(2, 2), (ALPHA, BETA))
    count = component_count(f)
    assert count.value == 0
    assert count.exactness is Exactness.LOWER_BOUND
    assert count.vanishing


def test_non_path_blocks_are_lower_bound() -> None:
    star = PlumbingTree.from_edges(4, [(1, 2), (2, 3), (2, 4)], 2)
    f = AbstractLF(
        star,
        (Cycle(1), Cycle(1), Cycle(2), Cycle(2), Cycle(3), Cycle(4)),
    )
    count = component_count(f)
    assert count == ComponentCount(2, Exactness.LOWER_BOUND)


def test_interleaved_sequence_is_unknown() -> None:
    budget = SearchBudget(1, 5, 0)
    count, blocks = analyze_components(catalog.build_P_Tmj(3, 2, 2), budget)
    assert count.exactness is Exactness.UNKNOWN
    assert blocks is None
    assert "symplectic cohomology" in count.justification


@pytest.mark.parametrize("n", range(2, 9))
@pytest.mark.parametrize("k", range(1, 9))
def test_index_gaps_certified(n: int, k: int) -> None:
    report = index_gaps(n, k)
    assert report.gap_max_min == (n - 1) * (k + 1) + 2
    assert report.gap_min_max == n
    assert report.nonvanishing_certified


def test_index_gaps_known_value() -> None:
    assert index_gaps(2, 1) == IndexGapReport(2, 1, 4, 2, True)


@pytest.mark.parametrize(("n", "k"), [(1, 1), (2, 0)])
def test_index_gaps_errors(n: int, k: int) -> None:
    with pytest.raises(DecompositionError, match=r"^Index gaps need"):
        index_gaps(n, k)


def test_invariant_report_y() -> None:
    report = invariant_report(catalog.build_Y(1, 2))
    assert report.sphere_dim == 2
    assert report.homology == (
        HomologyGroup(0, 1),
        HomologyGroup(1, 0),
        HomologyGroup(2, 0),
        HomologyGroup(3, 3),
    )
    assert report.euler_characteristic == -2
    assert report.components == ComponentCount(2, Exactness.EXACT)
    assert report.index_gaps == (index_gaps(2, 1), index_gaps(2, 2))


def test_sum_invariants_matches_end_connected_sum() -> None:
    y1 = catalog.build_Y(1, 2)
    a3 = catalog.build_A_milnor(3, 2)
    joined = catalog.end_connect_sum_fibration([y1, a3])
    total = sum_invariants(invariant_report(y1), invariant_report(a3))
    assert total == invariant_report(joined)
    assert total.components.value == 3
    assert total.euler_characteristic == -5


def test_sum_invariants_torsion_chain() -> None:
    tree = PlumbingTree.path(2, 3)
    five = AbstractLF(
        tree,
        (Cycle.twisted(2, 2, 1), Cycle.twisted(1, 2, 2)),
    )
    report = invariant_report(five, SearchBudget(1, 5, 0))
    assert report.homology[3].torsion == (5,)
    total = sum_invariants(report, report)
    assert total.homology[3].torsion == (5, 5)


def test_sum_invariants_dimension_mismatch() -> None:
    with pytest.raises(DecompositionError, match=r"^Cannot add reports"):
        sum_invariants(
            invariant_report(catalog.build_Y(1, 2)),
            invariant_report(catalog.build_Y(1, 4)),
        )


def test_sum_with_ball_keeps_exactness() -> None:
    ball = invariant_report(AbstractLF(PlumbingTree.path(1, 2), (ALPHA,)))
    assert ball.components.vanishing
    total = sum_invariants(invariant_report(catalog.build_Y(1, 2)), ball)
    assert total.components == ComponentCount(2, Exactness.EXACT)


def test_thimble_graph() -> None:
    graph = thimble_graph(catalog.build_Y(1, 2))
    assert graph.vertices == (1, 2, 3, 4, 5)
    assert (1, 2) in graph.edges
    assert (3, 4) in graph.edges
    assert graph.is_connected()


def test_thimble_graph_disconnected() -> None:
    f = AbstractLF(PlumbingTree.path(3, 2), (ALPHA, ALPHA, Cycle(3)))
    graph = thimble_graph(f)
    assert graph.edges == frozenset({(1, 2)})
    assert not graph.is_connected()


def test_thimble_graph_needs_path() -> None:
    star = PlumbingTree.from_edges(4, [(1, 2), (2, 3), (2, 4)], 2)
    with pytest.raises(DecompositionError, match=r"needs a path fiber$"):
        thimble_graph(AbstractLF(star, (Cycle(1),)))
