"""Catalog - Named trees and fibrations."""

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

__title__ = "Catalog"
__author__ = "CoolCat467"
__license__ = "GNU Lesser General Public License Version 3"

import re
from dataclasses import dataclass
from enum import Enum
from typing import TYPE_CHECKING

from lefschetzcalc.fibration_calculus import (
    AbstractLF,
    Cycle,
    simplify_cycle,
)
from lefschetzcalc.plumbing_lattice import (
    PlumbingError,
    PlumbingTree,
    step_for,
)

if TYPE_CHECKING:
    from collections.abc import Iterable, Sequence

# On A_2 fibers alpha is vertex 1 and beta is vertex 2.
ALPHA = Cycle(1)
BETA = Cycle(2)


class CatalogError(ValueError):
    """Bad parameters for a named construction."""

    __slots__ = ()


class TreeKind(str, Enum):
    """Family of a named plumbing tree."""

    A = "A"
    D = "D"
    E = "E"
    T = "T"
    EDGES = "edges"


@dataclass(frozen=True, slots=True)
class TreeSpec:
    """Description of a plumbing tree by family name or edge list."""

    kind: TreeKind
    rank: int = 0
    attach: int = 0
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        """Raise CatalogError if parameters do not fit the family."""
        match self.kind:
            case TreeKind.A:
                if self.rank < 1:
                    raise CatalogError(f"A(m) needs m >= 1, got {self.rank}")
            case TreeKind.D:
                if self.rank < 4:
                    raise CatalogError(f"D(m) needs m >= 4, got {self.rank}")
            case TreeKind.E:
                if self.rank not in {6, 7, 8}:
                    raise CatalogError(
                        f"E(m) needs m in 6, 7, 8, got {self.rank}",
                    )
            case TreeKind.T:
                if not 1 <= self.attach <= self.rank:
                    raise CatalogError(
                        f"T(m, j) needs 1 <= j <= m, got m={self.rank}, "
                        f"j={self.attach}",
                    )
            case TreeKind.EDGES:
                if self.rank < 1:
                    raise CatalogError(
                        "Edge list tree needs a vertex count, got "
                        f"{self.rank}",
                    )

    def describe(self) -> str:
        """Return short name like ``D5`` or ``T(3,2)``."""
        match self.kind:
            case TreeKind.T:
                return f"T({self.rank},{self.attach})"
            case TreeKind.EDGES:
                pairs = ",".join(f"{a}-{b}" for a, b in self.edges)
                return f"edges({self.rank}:{pairs})"
            case _:
                return f"{self.kind.value}{self.rank}"


_TREE_PATTERN = re.compile(
    r"^(?:(?P<family>[ADE])(?P<rank>\d+)"
    r"|T\((?P<m>\d+),(?P<j>\d+)\)"
    r"|edges\((?P<count>\d+):(?P<pairs>[\d\-,]*)\))$",
)


def parse_tree_spec(text: str) -> TreeSpec:
    """Return TreeSpec from text like ``A3``, ``T(3,2)``, ``edges(3:1-2,2-3)``.

    Raises CatalogError if text is not a tree description.
    """
    found = _TREE_PATTERN.match(text.replace(" ", ""))
    if found is None:
        raise CatalogError(f"Unrecognized tree description {text!r}")
    if found["family"]:
        return TreeSpec(TreeKind(found["family"]), int(found["rank"]))
    if found["m"]:
        return TreeSpec(TreeKind.T, int(found["m"]), int(found["j"]))
    edges = []
    for pair in filter(None, found["pairs"].split(",")):
        low, _, high = pair.partition("-")
        if not low or not high:
            raise CatalogError(f"Bad edge {pair!r} in {text!r}")
        edges.append((int(low), int(high)))
    return TreeSpec(TreeKind.EDGES, int(found["count"]), edges=tuple(edges))


def _t_tree(m: int, j: int, n: int) -> PlumbingTree:
    edges = [(v, v + 1) for v in range(1, m)]
    edges.append((j, m + 1))
    return PlumbingTree.from_edges(m + 1, edges, n)


def build_tree(spec: TreeSpec, n: int) -> PlumbingTree:
    """Return plumbing tree for spec with n-sphere vertices.

    T(m, j) is the path 1..m with vertex m+1 attached at j. D(m) and
    E(m) are the T trees T(m-1, m-2) and T(m-1, 3).
    Raises CatalogError if the edge list is not a tree or n < 2.
    """
    try:
        match spec.kind:
            case TreeKind.A:
                return PlumbingTree.path(spec.rank, n)
            case TreeKind.D:
                return _t_tree(spec.rank - 1, spec.rank - 2, n)
            case TreeKind.E:
                return _t_tree(spec.rank - 1, 3, n)
            case TreeKind.T:
                return _t_tree(spec.rank, spec.attach, n)
            case TreeKind.EDGES:
                return PlumbingTree.from_edges(spec.rank, spec.edges, n)
    except PlumbingError as exc:
        raise CatalogError(str(exc)) from None


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise CatalogError(message)


def _a2(n: int) -> PlumbingTree:
    try:
        return PlumbingTree.path(2, n)
    except PlumbingError as exc:
        raise CatalogError(str(exc)) from None


def build_A_milnor(m: int, n: int) -> AbstractLF:  # noqa: N802
    """Return (A_1; alpha repeated m+1 times), the A_m Milnor fiber."""
    _require(m >= 1, f"A_m Milnor fiber needs m >= 1, got {m}")
    try:
        tree = PlumbingTree.path(1, n)
    except PlumbingError as exc:
        raise CatalogError(str(exc)) from None
    return AbstractLF(tree, (ALPHA,) * (m + 1))


def build_X(k: int, n: int) -> AbstractLF:  # noqa: N802
    """Return (A_2; alpha x (2k+1), tau_alpha^2k(beta), beta)."""
    _require(k >= 1, f"X_k needs k >= 1, got {k}")
    return AbstractLF(
        _a2(n),
        (ALPHA,) * (2 * k + 1) + (Cycle.twisted(1, 2 * k, 2), BETA),
    )


def build_Q(m: int, n: int) -> AbstractLF:  # noqa: N802
    """Return (A_2; alpha x m, beta, beta)."""
    _require(m >= 1, f"Q_m needs m >= 1, got {m}")
    return AbstractLF(_a2(n), (ALPHA,) * m + (BETA, BETA))


def build_Y(k: int, n: int) -> AbstractLF:  # noqa: N802
    """Return (A_2; alpha x (2k+1), beta, beta), the same as Q_{2k+1}."""
    _require(k >= 1, f"Y_k needs k >= 1, got {k}")
    return build_Q(2 * k + 1, n)


def build_Z(params: Sequence[int], n: int) -> AbstractLF:  # noqa: N802
    """Return (A_k; alpha_1 x (i_1+1), ..., alpha_k x (i_k+1))."""
    _require(len(params) > 0, "Z needs at least one parameter")
    _require(
        all(value >= 1 for value in params),
        f"Z parameters must all be >= 1, got {tuple(params)}",
    )
    try:
        tree = PlumbingTree.path(len(params), n)
    except PlumbingError as exc:
        raise CatalogError(str(exc)) from None
    cycles: list[Cycle] = []
    for vertex, value in enumerate(params, start=1):
        cycles.extend([Cycle(vertex)] * (value + 1))
    return AbstractLF(tree, tuple(cycles))


def build_P_Tmj(m: int, j: int, n: int) -> AbstractLF:  # noqa: N802
    """Return (A_2; alpha x j, beta, alpha x (m+1-j), beta).

    Its total space is taken to be the plumbing of (n+1)-spheres along
    T(m, j).
    """
    _require(m >= 2, f"P(T_m^j) needs m >= 2, got {m}")
    _require(1 <= j <= m, f"P(T_m^j) needs 1 <= j <= m, got m={m}, j={j}")
    return AbstractLF(
        _a2(n),
        (ALPHA,) * j + (BETA,) + (ALPHA,) * (m + 1 - j) + (BETA,),
    )


def milnor_tree_parameters(kind: str, rank: int) -> tuple[int, int]:
    """Return (m, j) with the kind/rank Milnor fiber equal to P(T_m^j).

    Raises CatalogError for unknown kinds or ranks.
    """
    match kind.upper():
        case "A":
            _require(rank >= 3, f"A_r Milnor fiber needs r >= 3, got {rank}")
            return rank - 1, 1
        case "D":
            _require(rank >= 4, f"D_r Milnor fiber needs r >= 4, got {rank}")
            return rank - 1, rank - 2
        case "E":
            _require(
                rank in {6, 7, 8},
                f"E_r Milnor fiber needs r in 6, 7, 8, got {rank}",
            )
            return rank - 1, 3
    raise CatalogError(f"Unknown Milnor fiber kind {kind!r}")


def build_milnor(kind: str, rank: int, n: int) -> AbstractLF:
    """Return fibration presenting the A/D/E Milnor fiber of given rank."""
    m, j = milnor_tree_parameters(kind, rank)
    return build_P_Tmj(m, j, n)


def z_family_parameters(
    params: Sequence[int],
    n: int,
) -> list[tuple[int, ...]]:
    """Return Z parameters of the k family members built from params.

    Member r keeps the first r-1 entries scaled by the step and merges
    the rest into one entry.
    Raises CatalogError if n is odd or an entry is below 1.
    """
    _require(len(params) > 0, "Z family needs at least one parameter")
    _require(
        all(value >= 1 for value in params),
        f"Z family parameters must all be >= 1, got {tuple(params)}",
    )
    try:
        step = step_for(n)
    except PlumbingError as exc:
        raise CatalogError(str(exc)) from None
    k = len(params)
    members = []
    for r in range(1, k + 1):
        head = [step * value for value in params[: r - 1]]
        tail = step * sum(params[r - 1 : k - 1]) + params[-1]
        members.append((*head, tail))
    return members


def z_family(params: Sequence[int], n: int) -> list[AbstractLF]:
    """Return the k diffeomorphic Z fibrations with 1..k components."""
    return [build_Z(member, n) for member in z_family_parameters(params, n)]


def _vertex_blocks(part: AbstractLF) -> list[tuple[int, int]]:
    """Return (path position, count) blocks of a block form part."""
    tree = part.fiber
    if not tree.is_path:
        raise CatalogError("End connected sum parts need path fibers")
    order = tree.path_order()
    vertices = []
    for cycle in part.cycles:
        simple = simplify_cycle(tree, cycle)
        if simple is None:
            raise CatalogError("End connected sum part is not in block form")
        vertices.append(order.index(simple[0].base) + 1)
    start = vertices.index(min(vertices))
    vertices = vertices[start:] + vertices[:start]
    blocks: list[tuple[int, int]] = []
    for position in vertices:
        if blocks and blocks[-1][0] == position:
            blocks[-1] = (position, blocks[-1][1] + 1)
        else:
            blocks.append((position, 1))
    if len({position for position, _ in blocks}) != len(blocks):
        raise CatalogError("End connected sum part has interleaved blocks")
    return blocks


def end_connect_sum_fibration(parts: Iterable[AbstractLF]) -> AbstractLF:
    """Return end connected sum of block form fibrations.

    Fibers are joined end to end along one path and the cycle blocks
    are concatenated in order.
    Raises CatalogError if a part is not in vertex block form.
    """
    pieces = tuple(parts)
    _require(len(pieces) > 0, "End connected sum needs at least one part")
    dims = {part.sphere_dim for part in pieces}
    _require(len(dims) == 1, f"Parts have different sphere dimensions {dims}")
    offset = 0
    cycles: list[Cycle] = []
    for part in pieces:
        for position, count in _vertex_blocks(part):
            cycles.extend([Cycle(offset + position)] * count)
        offset += part.fiber.vertex_count
    return AbstractLF(PlumbingTree.path(offset, dims.pop()), tuple(cycles))


BUILD_TARGETS = ("A", "X", "Y", "Z", "Q", "P_Tmj", "milnor")


def _need(value: int | None, flag: str, name: str) -> int:
    if value is None:
        raise CatalogError(f"{name} needs --{flag}")
    return value


def build_named(
    name: str,
    n: int,
    *,
    k: int | None = None,
    m: int | None = None,
    i: Sequence[int] = (),
    j: int | None = None,
    kind: str | None = None,
) -> AbstractLF:
    """Return catalog fibration by target name and parameters.

    Raises CatalogError for unknown names or missing parameters.
    """
    match name:
        case "A":
            return build_A_milnor(_need(m, "m", name), n)
        case "X":
            return build_X(_need(k, "k", name), n)
        case "Y":
            return build_Y(_need(k, "k", name), n)
        case "Z":
            return build_Z(tuple(i), n)
        case "Q":
            return build_Q(_need(m, "m", name), n)
        case "P_Tmj":
            return build_P_Tmj(_need(m, "m", name), _need(j, "j", name), n)
        case "milnor":
            if kind is None:
                raise CatalogError("milnor needs --kind")
            return build_milnor(kind, _need(m, "m", name), n)
    raise CatalogError(
        f"Unknown target {name!r}, expected one of {', '.join(BUILD_TARGETS)}",
    )


if __name__ == "__main__":  # pragma: nocover
    print(f"{__title__}\nProgrammed by {__author__}.")
