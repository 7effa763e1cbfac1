from __future__ import annotations

import random
from itertools import (
    combinations,
    combinations_with_replacement,
    permutations,
    product,
)
from math import gcd, prod

import pytest

from lefschetzcalc.plumbing_lattice import (
    PlumbingError,
    PlumbingTree,
    apply_twist_word,
    divisibility_chain,
    intersection_form,
    picard_lefschetz,
    relabel_after_removal,
    smith_normal_form,
    step_for,
    vertex_class,
)


def _det(rows: list[list[int]]) -> int:
    size = len(rows)
    total = 0
    for perm in permutations(range(size)):
        inversions = sum(
            1
            for a in range(size)
            for b in range(a + 1, size)
            if perm[a] > perm[b]
        )
        sign = -1 if inversions % 2 else 1
        total += sign * prod(rows[i][perm[i]] for i in range(size))
    return total


def _naive_factors(matrix: list[list[int]]) -> tuple[int, ...]:
    """Invariant factors from gcds of k x k minors."""
    height, width = len(matrix), len(matrix[0])
    divisors = [1]
    for k in range(1, min(height, width) + 1):
        value = 0
        for rows in combinations(range(height), k):
            for cols in combinations(range(width), k):
                value = gcd(
                    value,
                    _det([[matrix[r][c] for c in cols] for r in rows]),
                )
        if value == 0:
            break
        divisors.append(value)
    return tuple(
        divisors[k] // divisors[k - 1] for k in range(1, len(divisors))
    )


def test_path_tree() -> None:
    tree = PlumbingTree.path(4, 2)
    assert tree.canonical_edges() == ((1, 2), (2, 3), (3, 4))
    assert tree.is_path
    assert tree.leaves() == (1, 4)
    assert tree.path_order() == (1, 2, 3, 4)
    assert tree.neighbors(2) == (1, 3)


def test_from_edges_normalizes() -> None:
    tree = PlumbingTree.from_edges(3, [[2, 1], (3, 2)], 2)
    assert tree.canonical_edges() == ((1, 2), (2, 3))


@pytest.mark.parametrize(
    ("count", "edges", "message"),
    [
        (0, [], r"^Tree needs at least one vertex"),
        (3, [(1, 2)], r"^A tree on 3 vertices needs 2 edges"),
        (2, [(1, 1)], r"^Self loop at vertex 1"),
        (2, [(1, 3)], r"^Edge vertex 3 out of range"),
        (4, [(1, 2), (2, 1), (3, 4)], r"^A tree on 4 vertices"),
    ],
)
def test_invalid_trees(
    count: int,
    edges: list[tuple[int, int]],
    message: str,
) -> None:
    with pytest.raises(PlumbingError, match=message):
        PlumbingTree.from_edges(count, edges, 2)


def test_disconnected_tree() -> None:
    with pytest.raises(PlumbingError, match=r"^Edges do not connect"):
        PlumbingTree.from_edges(4, [(1, 2), (2, 3), (1, 3)], 2)


def test_tree_graph() -> None:
    tree = PlumbingTree.from_edges(4, [(1, 2), (2, 3), (2, 4)], 2)
    graph = tree.graph()
    assert sorted(graph.nodes) == [1, 2, 3, 4]
    assert sorted(tuple(sorted(edge)) for edge in graph.edges) == [
        (1, 2),
        (2, 3),
        (2, 4),
    ]
    assert PlumbingTree.path(1, 2).graph().number_of_edges() == 0


def test_sphere_dimension_minimum() -> None:
    with pytest.raises(PlumbingError, match=r"^Sphere dimension must be"):
        PlumbingTree.path(2, 1)


def test_star_is_not_path() -> None:
    tree = PlumbingTree.from_edges(4, [(1, 2), (2, 3), (2, 4)], 2)
    assert not tree.is_path
    assert tree.degree(2) == 3
    with pytest.raises(PlumbingError, match=r"^Tree is not a path graph"):
        tree.path_order()


def test_leaf_add_and_remove() -> None:
    tree = PlumbingTree.path(3, 2)
    grown = tree.with_leaf(2)
    assert grown.vertex_count == 4
    assert grown.adjacent(2, 4)
    assert grown.without_leaf(4) == tree
    shrunk = tree.without_leaf(1)
    assert shrunk == PlumbingTree.path(2, 2)
    with pytest.raises(PlumbingError, match=r"^Vertex 2 is not a leaf"):
        tree.without_leaf(2)
    with pytest.raises(PlumbingError, match=r"^Cannot remove the only"):
        PlumbingTree.path(1, 2).without_leaf(1)


def test_relabel_after_removal() -> None:
    assert relabel_after_removal(5, 3) == 4
    assert relabel_after_removal(2, 3) == 2


def test_even_form() -> None:
    form = intersection_form(PlumbingTree.path(3, 2))
    assert form.matrix == ((-2, 1, 0), (1, -2, 1), (0, 1, -2))
    assert form.is_symmetric


def test_odd_form_is_skew() -> None:
    form = intersection_form(PlumbingTree.path(3, 3))
    assert form.matrix == ((0, 1, 0), (-1, 0, 1), (0, -1, 0))
    assert not form.is_symmetric


def test_twist_of_own_vertex_even() -> None:
    form = intersection_form(PlumbingTree.path(2, 2))
    alpha = vertex_class(2, 1)
    assert picard_lefschetz(form, alpha, 1, 1) == (-1, 0)


def test_twist_neighbor_even() -> None:
    form = intersection_form(PlumbingTree.path(2, 2))
    beta = vertex_class(2, 2)
    assert picard_lefschetz(form, beta, 1, 1) == (1, 1)
    assert picard_lefschetz(form, beta, 1, -1) == (1, 1)


def test_twist_odd_depends_on_sign() -> None:
    form = intersection_form(PlumbingTree.path(2, 3))
    beta = vertex_class(2, 2)
    assert picard_lefschetz(form, beta, 1, 1) == (-1, 1)
    assert picard_lefschetz(form, beta, 1, -1) == (1, 1)
    alpha = vertex_class(2, 1)
    assert picard_lefschetz(form, alpha, 1, 1) == alpha


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_braid_relation_on_classes(n: int) -> None:
    form = intersection_form(PlumbingTree.path(3, n))
    rng = random.Random(7 + n)
    for _ in range(50):
        x = tuple(rng.randint(-3, 3) for _ in range(3))
        for a, b in ((1, 2), (2, 3)):
            left = apply_twist_word(form, [(a, 1), (b, 1), (a, 1)], x)
            right = apply_twist_word(form, [(b, 1), (a, 1), (b, 1)], x)
            assert left == right
        far = apply_twist_word(form, [(1, 1), (3, 1)], x)
        assert far == apply_twist_word(form, [(3, 1), (1, 1)], x)


def _random_tree(rng: random.Random, sphere_dim: int) -> PlumbingTree:
    count = rng.randint(2, 8)
    edges = [
        (vertex, rng.randint(1, vertex - 1)) for vertex in range(2, count + 1)
    ]
    return PlumbingTree.from_edges(count, edges, sphere_dim)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_relations_on_random_trees(n: int) -> None:
    rng = random.Random(40 + n)
    for _ in range(20):
        tree = _random_tree(rng, n)
        form = intersection_form(tree)
        size = tree.vertex_count
        for _ in range(10):
            x = tuple(rng.randint(-3, 3) for _ in range(size))
            for a, b in combinations(range(1, size + 1), 2):
                sign = rng.choice((1, -1))
                if tree.adjacent(a, b):
                    left = [(a, sign), (b, sign), (a, sign)]
                    right = [(b, sign), (a, sign), (b, sign)]
                else:
                    left = [(a, sign), (b, sign)]
                    right = [(b, sign), (a, sign)]
                expected = apply_twist_word(form, right, x)
                assert apply_twist_word(form, left, x) == expected


@pytest.mark.parametrize("n", [2, 3])
def test_twist_inverse(n: int) -> None:
    form = intersection_form(PlumbingTree.path(3, n))
    x = (2, -1, 3)
    assert apply_twist_word(form, [(2, -1), (2, 1)], x) == x


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_inverse_twists_carry_beta_to_alpha(n: int) -> None:
    # Holds with a plus sign under this convention in every dimension.
    form = intersection_form(PlumbingTree.path(2, n))
    beta = vertex_class(2, 2)
    moved = apply_twist_word(form, [(2, -1), (1, -1)], beta)
    assert moved == vertex_class(2, 1)


def test_twist_errors() -> None:
    form = intersection_form(PlumbingTree.path(2, 2))
    with pytest.raises(PlumbingError, match=r"^Twist sign must be"):
        picard_lefschetz(form, (1, 0), 1, 2)
    with pytest.raises(PlumbingError, match=r"^Vertex 3 out of range"):
        picard_lefschetz(form, (1, 0), 3, 1)
    with pytest.raises(PlumbingError, match=r"^Class has 3 coefficients"):
        form.pairing((1, 0, 0), (1, 0))


def test_smith_known() -> None:
    form = smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
    assert form.factors == (2, 6, 12)
    assert form.rank == 3
    assert form.torsion == (2, 6, 12)


def test_smith_zero_and_empty() -> None:
    assert smith_normal_form([[0, 0], [0, 0]]).factors == ()
    assert smith_normal_form([]).rank == 0


def _row_classes(width: int, bound: int) -> list[tuple[int, ...]]:
    """Rows up to sign: zero, or first nonzero entry positive."""
    rows = product(range(-bound, bound + 1), repeat=width)
    return [row for row in rows if next((v for v in row if v), 1) > 0]


def test_smith_against_minors() -> None:
    # Row order and row signs do not change invariant factors.
    classes = _row_classes(3, 2)
    assert len(classes) == 63
    checked = 0
    for rows in combinations_with_replacement(classes, 3):
        matrix = [list(row) for row in rows]
        assert smith_normal_form(matrix).factors == _naive_factors(matrix)
        checked += 1
    assert checked == 43680


def test_smith_row_operations_keep_factors() -> None:
    rng = random.Random(99)
    for _ in range(60):
        matrix = [[rng.randint(-3, 3) for _ in range(3)] for _ in range(3)]
        factors = smith_normal_form(matrix).factors
        for order in permutations(matrix):
            for signs in product((1, -1), repeat=3):
                moved = [
                    [sign * value for value in row]
                    for sign, row in zip(signs, order, strict=True)
                ]
                assert smith_normal_form(moved).factors == factors


def test_smith_all_small_square() -> None:
    entries = range(-3, 4)
    for a, b, c, d in product(entries, repeat=4):
        matrix = [[a, b], [c, d]]
        assert smith_normal_form(matrix).factors == _naive_factors(matrix)


def test_smith_rectangular() -> None:
    matrix = [[2, 0, 0, 0], [0, 3, 0, 0]]
    assert smith_normal_form(matrix).factors == (1, 6)


def test_divisibility_chain() -> None:
    assert divisibility_chain([4, 6]) == (2, 12)
    assert divisibility_chain([3, 1, 2]) == (1, 1, 6)


@pytest.mark.parametrize(
    ("n", "step"),
    [(2, 2), (4, 4), (6, 4), (8, 4)],
)
def test_step_for(n: int, step: int) -> None:
    assert step_for(n) == step


def test_step_for_odd() -> None:
    with pytest.raises(PlumbingError):
        step_for(3)
