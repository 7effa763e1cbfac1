"""Plumbing Lattice - Middle homology of plumbing fibers and twist action."""

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

__title__ = "Plumbing Lattice"
__author__ = "CoolCat467"
__license__ = "GNU Lesser General Public License Version 3"

from dataclasses import dataclass
from functools import cache
from math import gcd
from typing import TYPE_CHECKING, NamedTuple, TypeAlias

import networkx as nx
from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import smith_normal_form as _snf

if TYPE_CHECKING:
    from collections.abc import Iterable, Sequence

    from mypy_extensions import u8
    from typing_extensions import Self

HomClass: TypeAlias = tuple[int, ...]
TwistLetter: TypeAlias = tuple[int, int]


class PlumbingError(ValueError):
    """Invalid plumbing tree, vertex, or lattice vector."""

    __slots__ = ()


@dataclass(frozen=True, slots=True)
class PlumbingTree:
    """Plumbing of n-spheres along a tree.

    Vertices are numbered 1..vertex_count. Edges are stored as sorted
    pairs ``(low, high)``.
    """

    vertex_count: int
    edges: frozenset[tuple[int, int]]
    sphere_dim: int

    def __post_init__(self) -> None:
        """Normalize edges and validate tree shape.

        Raises PlumbingError if edges do not form a tree on
        1..vertex_count or sphere_dim is less than 2.
        """
        if self.vertex_count < 1:
            raise PlumbingError(
                f"Tree needs at least one vertex, got {self.vertex_count}",
            )
        if self.sphere_dim < 2:
            raise PlumbingError(
                f"Sphere dimension must be at least 2, got {self.sphere_dim}",
            )
        normalized: set[tuple[int, int]] = set()
        for first, second in self.edges:
            if first == second:
                raise PlumbingError(f"Self loop at vertex {first}")
            for vertex in (first, second):
                if not 1 <= vertex <= self.vertex_count:
                    raise PlumbingError(
                        f"Edge vertex {vertex} out of range "
                        f"1..{self.vertex_count}",
                    )
            normalized.add((min(first, second), max(first, second)))
        if len(normalized) != self.vertex_count - 1:
            raise PlumbingError(
                f"A tree on {self.vertex_count} vertices needs "
                f"{self.vertex_count - 1} edges, got {len(normalized)}",
            )
        object.__setattr__(self, "edges", frozenset(normalized))
        if not nx.is_connected(self.graph()):
            raise PlumbingError("Edges do not connect every vertex")

    @classmethod
    def from_edges(
        cls,
        vertex_count: int,
        edges: Iterable[Sequence[int]],
        sphere_dim: int,
    ) -> Self:
        """Return tree from any iterable of vertex pairs."""
        pairs: set[tuple[int, int]] = set()
        for edge in edges:
            if len(edge) != 2:
                raise PlumbingError(f"Edge {edge!r} is not a vertex pair")
            pairs.add((int(edge[0]), int(edge[1])))
        return cls(vertex_count, frozenset(pairs), sphere_dim)

    @classmethod
    def path(cls, vertex_count: int, sphere_dim: int) -> Self:
        """Return the A-type path tree 1 - 2 - ... - vertex_count."""
        return cls(
            vertex_count,
            frozenset((v, v + 1) for v in range(1, vertex_count)),
            sphere_dim,
        )

    def neighbors(self, vertex: int) -> tuple[int, ...]:
        """Return sorted neighbors of vertex."""
        self.check_vertex(vertex)
        found = []
        for low, high in self.edges:
            if low == vertex:
                found.append(high)
            elif high == vertex:
                found.append(low)
        return tuple(sorted(found))

    def graph(self) -> nx.Graph[int]:
        """Return the tree as an undirected graph on 1..vertex_count."""
        graph: nx.Graph[int] = nx.Graph()
        graph.add_nodes_from(range(1, self.vertex_count + 1))
        graph.add_edges_from(self.edges)
        return graph

    def check_vertex(self, vertex: int) -> None:
        """Raise PlumbingError if vertex is not in this tree."""
        if not 1 <= vertex <= self.vertex_count:
            raise PlumbingError(
                f"Vertex {vertex} out of range 1..{self.vertex_count}",
            )

    def adjacent(self, first: int, second: int) -> bool:
        """Return if two vertices share an edge."""
        return (min(first, second), max(first, second)) in self.edges

    def degree(self, vertex: int) -> int:
        """Return number of edges at vertex."""
        return len(self.neighbors(vertex))

    def leaves(self) -> tuple[int, ...]:
        """Return vertices of degree at most one."""
        return tuple(
            v
            for v in range(1, self.vertex_count + 1)
            if self.degree(v) <= 1
        )

    @property
    def is_path(self) -> bool:
        """Whether this is an A-type (path graph) tree."""
        return all(
            self.degree(v) <= 2 for v in range(1, self.vertex_count + 1)
        )

    def path_order(self) -> tuple[int, ...]:
        """Return vertices in walking order along a path tree.

        The walk starts at the smaller endpoint.
        Raises PlumbingError if tree is not a path.
        """
        if not self.is_path:
            raise PlumbingError("Tree is not a path graph")
        order = [min(self.leaves())]
        while len(order) < self.vertex_count:
            options = [v for v in self.neighbors(order[-1]) if v not in order]
            order.append(options[0])
        return tuple(order)

    def with_leaf(self, attach_to: int) -> PlumbingTree:
        """Return tree with a new leaf vertex attached at attach_to."""
        self.check_vertex(attach_to)
        new_vertex = self.vertex_count + 1
        return PlumbingTree(
            new_vertex,
            self.edges | {(attach_to, new_vertex)},
            self.sphere_dim,
        )

    def without_leaf(self, leaf: int) -> PlumbingTree:
        """Return tree with leaf removed and higher vertices shifted down.

        Raises PlumbingError if vertex is not a leaf or is the only vertex.
        """
        self.check_vertex(leaf)
        if self.vertex_count == 1:
            raise PlumbingError("Cannot remove the only vertex of a tree")
        if self.degree(leaf) != 1:
            raise PlumbingError(f"Vertex {leaf} is not a leaf")
        edges = set()
        for low, high in self.edges:
            if leaf in (low, high):
                continue
            edges.add(
                (
                    relabel_after_removal(low, leaf),
                    relabel_after_removal(high, leaf),
                ),
            )
        return PlumbingTree(
            self.vertex_count - 1,
            frozenset(edges),
            self.sphere_dim,
        )

    def canonical_edges(self) -> tuple[tuple[int, int], ...]:
        """Return sorted edge tuple."""
        return tuple(sorted(self.edges))


def relabel_after_removal(vertex: int, removed: int) -> int:
    """Return new label of vertex after removed vertex is deleted."""
    return vertex - 1 if vertex > removed else vertex


@dataclass(frozen=True, slots=True)
class IntersectionForm:
    """Intersection pairing on the vertex-sphere basis."""

    matrix: tuple[tuple[int, ...], ...]
    sphere_dim: int

    @property
    def rank(self) -> int:
        """Number of basis vectors."""
        return len(self.matrix)

    @property
    def is_symmetric(self) -> bool:
        """Whether the form is symmetric (even sphere dimension)."""
        return self.sphere_dim % 2 == 0

    def pairing(self, x: HomClass, y: HomClass) -> int:
        """Return <x, y>."""
        self.check_class(x)
        self.check_class(y)
        return sum(
            x[i] * self.matrix[i][j] * y[j]
            for i in range(self.rank)
            if x[i]
            for j in range(self.rank)
            if y[j]
        )

    def pair_with_vertex(self, x: HomClass, vertex: int) -> int:
        """Return <x, delta_vertex>."""
        column = vertex - 1
        return sum(x[i] * self.matrix[i][column] for i in range(self.rank))

    def check_class(self, x: HomClass) -> None:
        """Raise PlumbingError if x has the wrong length."""
        if len(x) != self.rank:
            raise PlumbingError(
                f"Class has {len(x)} coefficients, lattice rank is "
                f"{self.rank}",
            )


@cache
def intersection_form(tree: PlumbingTree) -> IntersectionForm:
    """Return intersection form of tree under the fixed sign convention.

    Even n: -2 on the diagonal, +1 on edges.
    Odd n: skew, +1 at (i, j) and -1 at (j, i) for edges with i < j.
    """
    size = tree.vertex_count
    even = tree.sphere_dim % 2 == 0
    rows = [[0] * size for _ in range(size)]
    for low, high in tree.edges:
        rows[low - 1][high - 1] = 1
        rows[high - 1][low - 1] = 1 if even else -1
    if even:
        for index in range(size):
            rows[index][index] = -2
    return IntersectionForm(
        tuple(tuple(row) for row in rows),
        tree.sphere_dim,
    )


def vertex_class(rank: int, vertex: int) -> HomClass:
    """Return basis class of vertex sphere."""
    if not 1 <= vertex <= rank:
        raise PlumbingError(f"Vertex {vertex} out of range 1..{rank}")
    return tuple(int(index == vertex - 1) for index in range(rank))


def picard_lefschetz(
    form: IntersectionForm,
    x: HomClass,
    vertex: int,
    sign: int,
) -> HomClass:
    """Return tau_vertex^sign applied to x.

    Reflection for even n (sign ignored), transvection for odd n.
    Raises PlumbingError if vertex or sign is invalid.
    """
    form.check_class(x)
    if not 1 <= vertex <= form.rank:
        raise PlumbingError(f"Vertex {vertex} out of range 1..{form.rank}")
    if sign not in {1, -1}:
        raise PlumbingError(f"Twist sign must be +1 or -1, got {sign}")
    pairing = form.pair_with_vertex(x, vertex)
    if form.is_symmetric:
        self_pairing = form.matrix[vertex - 1][vertex - 1]
        shift = -(2 * pairing // self_pairing)
    else:
        shift = sign * pairing
    if not shift:
        return x
    result = list(x)
    result[vertex - 1] += shift
    return tuple(result)


def apply_twist_word(
    form: IntersectionForm,
    word: Sequence[TwistLetter],
    x: HomClass,
) -> HomClass:
    """Return composition of twists applied to x.

    Words are outermost first, so the last letter acts first.
    """
    for vertex, sign in reversed(word):
        x = picard_lefschetz(form, x, vertex, sign)
    return x


class SmithForm(NamedTuple):
    """Nonzero invariant factors and rank of an integer matrix."""

    factors: tuple[int, ...]
    rank: int

    @property
    def torsion(self) -> tuple[int, ...]:
        """Invariant factors greater than one."""
        return tuple(f for f in self.factors if f > 1)


def smith_normal_form(matrix: Sequence[Sequence[int]]) -> SmithForm:
    """Return invariant factors d_1 | d_2 | ... and rank of matrix."""
    rows = [list(map(int, row)) for row in matrix]
    if not rows or not rows[0]:
        return SmithForm((), 0)
    width = len(rows[0])
    if any(len(row) != width for row in rows):
        raise PlumbingError("Matrix rows have different lengths")
    domain_matrix = DomainMatrix(
        [[ZZ(entry) for entry in row] for row in rows],
        (len(rows), width),
        ZZ,
    )
    diagonal = _snf(domain_matrix).to_list()
    factors = divisibility_chain(
        abs(int(diagonal[index][index]))
        for index in range(min(len(rows), width))
        if diagonal[index][index]
    )
    return SmithForm(factors, len(factors))


def divisibility_chain(values: Iterable[int]) -> tuple[int, ...]:
    """Return diagonal entries rearranged into a divisibility chain."""
    chain = sorted(values)
    for low in range(len(chain)):
        for high in range(low + 1, len(chain)):
            divisor = gcd(chain[low], chain[high])
            chain[high] = chain[low] * chain[high] // divisor
            chain[low] = divisor
    return tuple(chain)


def step_for(sphere_dim: int) -> u8:
    """Return smooth replacement exponent step for sphere dimension.

    Raises PlumbingError for odd dimensions, where no step exists.
    """
    if sphere_dim % 2:
        raise PlumbingError(
            f"Smooth replacement is unavailable for odd n = {sphere_dim}",
        )
    return 2 if sphere_dim == 2 else 4


if __name__ == "__main__":  # pragma: nocover
    print(f"{__title__}\nProgrammed by {__author__}.")
