"""Fibration Calculus - Abstract Lefschetz fibrations and their moves."""

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

__title__ = "Fibration Calculus"
__author__ = "CoolCat467"
__license__ = "GNU Lesser General Public License Version 3"
__version__ = "0.1.0"

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import TYPE_CHECKING, ClassVar, NamedTuple, TypeAlias

from lefschetzcalc import keycodec
from lefschetzcalc.arc_engine import (
    Arc,
    MarkedDisk,
    apply_braid_word,
    arc_equal,
    sphere_intersection,
    standard_arc,
)
from lefschetzcalc.plumbing_lattice import (
    HomClass,
    PlumbingError,
    PlumbingTree,
    TwistLetter,
    apply_twist_word,
    intersection_form,
    relabel_after_removal,
    smith_normal_form,
    step_for,
    vertex_class,
)

if TYPE_CHECKING:
    from collections.abc import Iterable, Sequence

    from typing_extensions import Self

TwistWord: TypeAlias = tuple[TwistLetter, ...]


class Mode(str, Enum):
    """Equivalence a certificate or move is claimed in."""

    WEINSTEIN = "weinstein"
    SMOOTH = "smooth"


class Direction(str, Enum):
    """Direction of a cyclic shift or Hurwitz move."""

    LEFT = "left"
    RIGHT = "right"

    @property
    def opposite(self) -> Direction:
        """The other direction."""
        return Direction.RIGHT if self is Direction.LEFT else Direction.LEFT


class MoveRejection(str, Enum):
    """Why apply_move refused a move."""

    MODE = "wrong mode"
    PARITY = "parity violation"
    POSITION = "position out of range"
    VERTEX = "vertex out of range"
    DESTABILIZE = "destabilize precondition failed"
    SMOOTH = "smooth replacement precondition failed"
    REWRITE = "cycles not shown equal"


class IllegalMoveError(Exception):
    """Move cannot be applied to a fibration."""

    __slots__ = ("reason",)

    def __init__(self, reason: MoveRejection, message: str) -> None:
        """Initialize with rejection reason and detail message."""
        super().__init__(f"{reason.value}: {message}")
        self.reason = reason


def reduce_twist_word(word: Iterable[TwistLetter]) -> TwistWord:
    """Return twist word with adjacent inverse letters cancelled."""
    stack: list[TwistLetter] = []
    for vertex, sign in word:
        if stack and stack[-1] == (vertex, -sign):
            stack.pop()
        else:
            stack.append((vertex, sign))
    return tuple(stack)


def invert_twist_word(word: Sequence[TwistLetter]) -> TwistWord:
    """Return inverse twist word."""
    return tuple((vertex, -sign) for vertex, sign in reversed(word))


@dataclass(frozen=True, slots=True)
class Cycle:
    """Vanishing cycle: twist word applied to a vertex sphere.

    Words are outermost first: ``((1, 1), (2, -1))`` on base 3 is
    tau_1 tau_2^-1 applied to the third vertex sphere.
    """

    base: int
    word: TwistWord = ()

    @classmethod
    def vertex(cls, vertex: int) -> Self:
        """Return bare vertex sphere."""
        return cls(vertex)

    @classmethod
    def twisted(cls, vertex: int, exponent: int, base: int) -> Self:
        """Return tau_vertex^exponent applied to vertex sphere base."""
        sign = 1 if exponent > 0 else -1
        return cls(base, ((vertex, sign),) * abs(exponent))

    @property
    def is_vertex_sphere(self) -> bool:
        """Whether the word is empty."""
        return not self.word

    def vertices(self) -> set[int]:
        """Return every vertex this cycle mentions."""
        return {self.base} | {vertex for vertex, _ in self.word}

    def relabeled(self, removed: int) -> Cycle:
        """Return cycle with vertices above removed shifted down."""
        return Cycle(
            relabel_after_removal(self.base, removed),
            tuple(
                (relabel_after_removal(vertex, removed), sign)
                for vertex, sign in self.word
            ),
        )


def twist_cycle(along: Cycle, sign: int, target: Cycle) -> Cycle:
    """Return twist along a cycle, raised to sign, applied to target."""
    word = (
        along.word
        + ((along.base, sign),)
        + invert_twist_word(along.word)
        + target.word
    )
    return Cycle(target.base, reduce_twist_word(word))


@dataclass(frozen=True, slots=True)
class AbstractLF:
    """Abstract Lefschetz fibration: fiber tree and ordered cycles."""

    fiber: PlumbingTree
    cycles: tuple[Cycle, ...]

    def __post_init__(self) -> None:
        """Raise PlumbingError if cycles are empty or name bad vertices."""
        if not self.cycles:
            raise PlumbingError("Fibration needs at least one vanishing cycle")
        for cycle in self.cycles:
            self.fiber.check_vertex(cycle.base)
            for vertex, sign in cycle.word:
                self.fiber.check_vertex(vertex)
                if sign not in {1, -1}:
                    raise PlumbingError(
                        f"Twist sign must be +1 or -1, got {sign}",
                    )

    @property
    def sphere_dim(self) -> int:
        """Dimension n of the fiber's vertex spheres."""
        return self.fiber.sphere_dim

    @property
    def total_dimension(self) -> int:
        """Dimension 2n+2 of the total space."""
        return 2 * self.sphere_dim + 2

    @property
    def cycle_count(self) -> int:
        """Number of vanishing cycles."""
        return len(self.cycles)

    def replace_cycles(self, cycles: Iterable[Cycle]) -> AbstractLF:
        """Return copy with new cycle list on the same fiber."""
        return AbstractLF(self.fiber, tuple(cycles))

    def check_position(self, position: int) -> None:
        """Raise IllegalMoveError if position is not 1..cycle_count."""
        if not 1 <= position <= self.cycle_count:
            raise IllegalMoveError(
                MoveRejection.POSITION,
                f"position {position} not in 1..{self.cycle_count}",
            )


# region: Moves


@dataclass(frozen=True, slots=True)
class CyclicShift:
    """Rotate the cycle list; left moves the first cycle to the end."""

    direction: Direction
    kind: ClassVar[str] = "cyclic_shift"

    def describe(self) -> str:
        """Return short human readable description."""
        return f"shift {self.direction.value}"


@dataclass(frozen=True, slots=True)
class Hurwitz:
    """Hurwitz move on the pair at position, position+1."""

    position: int
    direction: Direction
    kind: ClassVar[str] = "hurwitz"

    def describe(self) -> str:
        """Return short human readable description."""
        return f"hurwitz {self.direction.value} at {self.position}"


@dataclass(frozen=True, slots=True)
class Stabilize:
    """Attach a new leaf at attach_to and prepend its vertex sphere."""

    attach_to: int
    kind: ClassVar[str] = "stabilize"

    def describe(self) -> str:
        """Return short human readable description."""
        return f"stabilize at vertex {self.attach_to}"


@dataclass(frozen=True, slots=True)
class Destabilize:
    """Remove a leaf vertex sphere cycle and its leaf."""

    position: int
    kind: ClassVar[str] = "destabilize"

    def describe(self) -> str:
        """Return short human readable description."""
        return f"destabilize at {self.position}"


@dataclass(frozen=True, slots=True)
class SmoothReplace:
    """Replace tau_vertex^exponent(c) by c at position (smooth only)."""

    position: int
    vertex: int
    exponent: int
    kind: ClassVar[str] = "smooth_replace"

    def describe(self) -> str:
        """Return short human readable description."""
        return (
            f"smooth replace at {self.position} "
            f"(vertex {self.vertex}, exponent {self.exponent})"
        )


@dataclass(frozen=True, slots=True)
class RewriteCycle:
    """Replace the cycle at position by an equal cycle.

    For fibers that are not paths, chain lists the intermediate twist
    words connecting old and new word by elementary relations.
    """

    position: int
    cycle: Cycle
    chain: tuple[TwistWord, ...] = ()
    kind: ClassVar[str] = "rewrite_cycle"

    def describe(self) -> str:
        """Return short human readable description."""
        return f"rewrite {self.position} as {format_cycle(self.cycle)}"


Move: TypeAlias = (
    CyclicShift
    | Hurwitz
    | Stabilize
    | Destabilize
    | SmoothReplace
    | RewriteCycle
)


def format_cycle(cycle: Cycle) -> str:
    """Return readable form like ``t1^-1 t2 (v3)``."""
    letters = [
        f"t{vertex}" if sign > 0 else f"t{vertex}^-1"
        for vertex, sign in cycle.word
    ]
    return " ".join((*letters, f"(v{cycle.base})"))


# endregion

# region: Cycle normal forms


class PathFrame(NamedTuple):
    """Marked disk and vertex positions for a path fiber."""

    disk: MarkedDisk
    position_of: dict[int, int]
    vertex_at: tuple[int, ...]


@lru_cache(maxsize=256)
def path_frame(tree: PlumbingTree) -> PathFrame:
    """Return arc model frame of a path tree.

    Raises PlumbingError if tree is not a path.
    """
    order = tree.path_order()
    return PathFrame(
        MarkedDisk(tree.vertex_count + 1),
        {vertex: index + 1 for index, vertex in enumerate(order)},
        order,
    )


@lru_cache(maxsize=65536)
def cycle_arc(tree: PlumbingTree, cycle: Cycle) -> Arc:
    """Return matching arc of cycle in a path fiber."""
    frame = path_frame(tree)
    base = standard_arc(frame.disk, frame.position_of[cycle.base])
    word = [(frame.position_of[vertex], sign) for vertex, sign in cycle.word]
    return apply_braid_word(frame.disk, word, base)


def _vertex_arc(tree: PlumbingTree, vertex: int) -> Arc:
    frame = path_frame(tree)
    return standard_arc(frame.disk, frame.position_of[vertex])


def cycle_code(tree: PlumbingTree, cycle: Cycle) -> tuple[int, ...]:
    """Return normal form code of cycle.

    Path fibers use the exact arc code. Other trees fall back to the
    base vertex and freely reduced word.
    """
    if tree.is_path:
        return cycle_arc(tree, cycle).canonical_code
    flat: list[int] = [cycle.base]
    for vertex, sign in reduce_twist_word(cycle.word):
        flat.extend((vertex, sign))
    return tuple(flat)


def cycle_complexity(tree: PlumbingTree, cycle: Cycle) -> int:
    """Return size of a cycle's normal form, zero for vertex spheres."""
    if tree.is_path:
        arc = cycle_arc(tree, cycle)
        return arc.complexity + (not arc.is_standard)
    return len(reduce_twist_word(cycle.word))


def cycles_equal(tree: PlumbingTree, first: Cycle, second: Cycle) -> bool:
    """Return if two cycles are known equal.

    Exact on path fibers. Elsewhere only syntactic equality after free
    reduction is recognized.
    """
    if tree.is_path:
        return arc_equal(cycle_arc(tree, first), cycle_arc(tree, second))
    return first.base == second.base and reduce_twist_word(
        first.word,
    ) == reduce_twist_word(second.word)


def cycle_intersection(tree: PlumbingTree, first: Cycle, second: Cycle) -> int:
    """Return geometric intersection of two cycles.

    Path fibers use the arc model. Other trees report the absolute
    homological pairing, a lower bound.
    """
    if tree.is_path:
        return sphere_intersection(
            cycle_arc(tree, first),
            cycle_arc(tree, second),
        )
    form = intersection_form(tree)
    return abs(
        form.pairing(
            class_of(tree, first),
            class_of(tree, second),
        ),
    )


def class_of(tree: PlumbingTree, cycle: Cycle) -> HomClass:
    """Return homology class of cycle."""
    return apply_twist_word(
        intersection_form(tree),
        cycle.word,
        vertex_class(tree.vertex_count, cycle.base),
    )


def _fixes_base(tree: PlumbingTree, letter: TwistLetter, base: int) -> bool:
    """Return if a twist leaves the base vertex sphere in place."""
    vertex = letter[0]
    return vertex == base or not tree.adjacent(vertex, base)


def simplify_cycle(
    tree: PlumbingTree,
    cycle: Cycle,
) -> tuple[Cycle, tuple[TwistWord, ...]] | None:
    """Return (vertex sphere, rewrite chain) if cycle is a vertex sphere.

    Path fibers decide this exactly. Other trees strip innermost twists
    fixing the base sphere, recording each intermediate word.
    """
    if tree.is_path:
        arc = cycle_arc(tree, cycle)
        if not arc.is_standard:
            return None
        return Cycle(path_frame(tree).vertex_at[arc.start - 1]), ()
    word = reduce_twist_word(cycle.word)
    chain: list[TwistWord] = []
    if word != cycle.word:
        chain.append(word)
    while word and _fixes_base(tree, word[-1], cycle.base):
        word = word[:-1]
        chain.append(word)
    if word:
        return None
    return Cycle(cycle.base), tuple(chain[:-1])


def _one_relation_apart(
    tree: PlumbingTree,
    base: int,
    first: TwistWord,
    second: TwistWord,
) -> bool:
    """Return if two twist words differ by one elementary relation."""
    if reduce_twist_word(first) == reduce_twist_word(second):
        return True
    for longer, shorter in ((first, second), (second, first)):
        if (
            len(longer) == len(shorter) + 1
            and longer[:-1] == shorter
            and _fixes_base(tree, longer[-1], base)
        ):
            return True
    if len(first) != len(second):
        return False
    differ = [
        index for index in range(len(first)) if first[index] != second[index]
    ]
    if not differ:
        return True
    low, high = differ[0], differ[-1]
    if high - low == 1:
        (u, s), (v, t) = first[low], first[high]
        return (
            second[low] == (v, t)
            and second[high] == (u, s)
            and u != v
            and not tree.adjacent(u, v)
        )
    signs = {sign for _, sign in first[low : high + 1]}
    if high - low == 2 and len(signs) == 1:
        u, v = first[low][0], first[low + 1][0]
        sign = first[low][1]
        return (
            first[high][0] == u
            and tree.adjacent(u, v)
            and second[low : high + 1] == ((v, sign), (u, sign), (v, sign))
        )
    return False


def _rewrite_is_legal(
    tree: PlumbingTree,
    old: Cycle,
    new: Cycle,
    chain: Sequence[TwistWord],
) -> bool:
    if tree.is_path:
        return cycles_equal(tree, old, new)
    if old.base != new.base:
        return False
    words = (old.word, *chain, new.word)
    return all(
        _one_relation_apart(tree, old.base, words[index], words[index + 1])
        for index in range(len(words) - 1)
    )


# endregion

# region: Applying moves


def _check_vertex(tree: PlumbingTree, vertex: int) -> None:
    if not 1 <= vertex <= tree.vertex_count:
        raise IllegalMoveError(
            MoveRejection.VERTEX,
            f"vertex {vertex} not in 1..{tree.vertex_count}",
        )


def _hurwitz(f: AbstractLF, move: Hurwitz) -> AbstractLF:
    if not 1 <= move.position < f.cycle_count:
        raise IllegalMoveError(
            MoveRejection.POSITION,
            f"hurwitz position {move.position} not in 1..{f.cycle_count - 1}",
        )
    index = move.position - 1
    first, second = f.cycles[index], f.cycles[index + 1]
    if move.direction is Direction.RIGHT:
        pair = (second, twist_cycle(second, 1, first))
    else:
        pair = (twist_cycle(first, -1, second), first)
    cycles = list(f.cycles)
    cycles[index : index + 2] = pair
    return f.replace_cycles(cycles)


def _destabilize(f: AbstractLF, move: Destabilize) -> AbstractLF:
    f.check_position(move.position)
    cycle = f.cycles[move.position - 1]
    tree = f.fiber
    if not cycle.is_vertex_sphere:
        raise IllegalMoveError(
            MoveRejection.DESTABILIZE,
            f"cycle {move.position} is not a bare vertex sphere",
        )
    leaf = cycle.base
    if tree.vertex_count == 1 or tree.degree(leaf) != 1:
        raise IllegalMoveError(
            MoveRejection.DESTABILIZE,
            f"vertex {leaf} is not a removable leaf",
        )
    others = f.cycles[: move.position - 1] + f.cycles[move.position :]
    if not others:
        raise IllegalMoveError(
            MoveRejection.DESTABILIZE,
            "no other vanishing cycle would remain",
        )
    if any(leaf in other.vertices() for other in others):
        raise IllegalMoveError(
            MoveRejection.DESTABILIZE,
            f"vertex {leaf} is used by another cycle",
        )
    return AbstractLF(
        tree.without_leaf(leaf),
        tuple(other.relabeled(leaf) for other in others),
    )


def _smooth_replace(
    f: AbstractLF,
    move: SmoothReplace,
    mode: Mode,
) -> AbstractLF:
    if mode is not Mode.SMOOTH:
        raise IllegalMoveError(
            MoveRejection.MODE,
            "smooth replacement is only allowed in smooth mode",
        )
    try:
        step = step_for(f.sphere_dim)
    except PlumbingError as exc:
        raise IllegalMoveError(MoveRejection.PARITY, str(exc)) from None
    if move.exponent == 0 or move.exponent % step:
        raise IllegalMoveError(
            MoveRejection.PARITY,
            f"exponent {move.exponent} is not a nonzero multiple of {step} "
            f"for n = {f.sphere_dim}",
        )
    f.check_position(move.position)
    _check_vertex(f.fiber, move.vertex)
    current = f.cycles[move.position - 1]
    untwisted = Cycle(
        current.base,
        reduce_twist_word(
            Cycle.twisted(move.vertex, -move.exponent, current.base).word
            + current.word,
        ),
    )
    meeting = cycle_intersection(f.fiber, untwisted, Cycle(move.vertex))
    if meeting != 1:
        raise IllegalMoveError(
            MoveRejection.SMOOTH,
            f"untwisted cycle meets vertex {move.vertex} sphere "
            f"{meeting} times, need exactly 1",
        )
    cycles = list(f.cycles)
    cycles[move.position - 1] = untwisted
    return f.replace_cycles(cycles)


def _rewrite(f: AbstractLF, move: RewriteCycle) -> AbstractLF:
    f.check_position(move.position)
    try:
        replacement = f.replace_cycles(
            (
                *f.cycles[: move.position - 1],
                move.cycle,
                *f.cycles[move.position :],
            ),
        )
    except PlumbingError as exc:
        raise IllegalMoveError(MoveRejection.VERTEX, str(exc)) from None
    if not _rewrite_is_legal(
        f.fiber,
        f.cycles[move.position - 1],
        move.cycle,
        move.chain,
    ):
        raise IllegalMoveError(
            MoveRejection.REWRITE,
            f"cycle {move.position} is not shown equal to "
            f"{format_cycle(move.cycle)}",
        )
    return replacement


def apply_move(f: AbstractLF, move: Move, mode: Mode) -> AbstractLF:
    """Return fibration after applying move in mode.

    Raises IllegalMoveError with a reason if the move is not legal.
    """
    match move:
        case CyclicShift(direction=direction):
            if direction is Direction.LEFT:
                return f.replace_cycles(f.cycles[1:] + f.cycles[:1])
            return f.replace_cycles(f.cycles[-1:] + f.cycles[:-1])
        case Hurwitz():
            return _hurwitz(f, move)
        case Stabilize(attach_to=vertex):
            _check_vertex(f.fiber, vertex)
            return AbstractLF(
                f.fiber.with_leaf(vertex),
                (Cycle(f.fiber.vertex_count + 1), *f.cycles),
            )
        case Destabilize():
            return _destabilize(f, move)
        case SmoothReplace():
            return _smooth_replace(f, move, mode)
        case RewriteCycle():
            return _rewrite(f, move)


def apply_moves(
    f: AbstractLF,
    moves: Iterable[Move],
    mode: Mode,
) -> AbstractLF:
    """Return fibration after applying every move in order."""
    for move in moves:
        f = apply_move(f, move, mode)
    return f


def smooth_exponents(sphere_dim: int) -> tuple[int, ...]:
    """Return smooth replacement exponents offered as moves."""
    if sphere_dim % 2:
        return ()
    step = step_for(sphere_dim)
    return (step, -step)


def candidate_moves(
    f: AbstractLF,
    mode: Mode,
    max_vertices: int | None = None,
) -> list[Move]:
    """Return moves to try, in the fixed enumeration order."""
    moves: list[Move] = [
        CyclicShift(Direction.LEFT),
        CyclicShift(Direction.RIGHT),
    ]
    for position in range(1, f.cycle_count):
        moves.append(Hurwitz(position, Direction.RIGHT))
        moves.append(Hurwitz(position, Direction.LEFT))
    moves.extend(
        Destabilize(position) for position in range(1, f.cycle_count + 1)
    )
    if max_vertices is None or f.fiber.vertex_count < max_vertices:
        moves.extend(
            Stabilize(vertex)
            for vertex in range(1, f.fiber.vertex_count + 1)
        )
    if mode is Mode.SMOOTH:
        for position in range(1, f.cycle_count + 1):
            for vertex in range(1, f.fiber.vertex_count + 1):
                for exponent in smooth_exponents(f.sphere_dim):
                    moves.append(SmoothReplace(position, vertex, exponent))
    return moves


def legal_moves(
    f: AbstractLF,
    mode: Mode,
    max_vertices: int | None = None,
) -> list[Move]:
    """Return every enumerated move apply_move accepts.

    Smooth replacements are offered with exponent plus or minus the
    step for the fiber dimension.
    """
    found = []
    for move in candidate_moves(f, mode, max_vertices):
        try:
            apply_move(f, move, mode)
        except IllegalMoveError:
            continue
        found.append(move)
    return found


def inverse_moves(before: AbstractLF, move: Move) -> tuple[Move, ...]:
    """Return moves taking apply_move(before, move) back to before.

    Raises IllegalMoveError for a destabilization that relabels vertices
    or leaves a cycle behind the new one, which have no exact inverse.
    """
    match move:
        case CyclicShift(direction=direction):
            return (CyclicShift(direction.opposite),)
        case Hurwitz(position=position, direction=direction):
            return (Hurwitz(position, direction.opposite),)
        case Stabilize():
            return (Destabilize(1),)
        case Destabilize(position=position):
            leaf = before.cycles[position - 1].base
            if position != 1 or leaf != before.fiber.vertex_count:
                raise IllegalMoveError(
                    MoveRejection.DESTABILIZE,
                    "only a first-position destabilization of the newest "
                    "vertex has an exact inverse",
                )
            return (Stabilize(before.fiber.neighbors(leaf)[0]),)
        case SmoothReplace(
            position=position,
            vertex=vertex,
            exponent=exponent,
        ):
            return (SmoothReplace(position, vertex, -exponent),)
        case RewriteCycle(position=position, chain=chain):
            return (
                RewriteCycle(
                    position,
                    before.cycles[position - 1],
                    tuple(reversed(chain)),
                ),
            )


# endregion

# region: Invariants


def cycle_class(f: AbstractLF, position: int) -> HomClass:
    """Return homology class of the cycle at 1-based position."""
    f.check_position(position)
    return class_of(f.fiber, f.cycles[position - 1])


def canonical_rotation(f: AbstractLF) -> int:
    """Return smallest left rotation giving the minimal code sequence."""
    codes = [cycle_code(f.fiber, cycle) for cycle in f.cycles]
    best = 0
    best_codes = codes
    for shift in range(1, len(codes)):
        rotated = codes[shift:] + codes[:shift]
        if rotated < best_codes:
            best, best_codes = shift, rotated
    return best


def canonical_form(f: AbstractLF) -> tuple[tuple[int, ...], ...]:
    """Return rotation invariant normal form of fibration.

    First entry describes the fiber, the rest are cycle codes from the
    minimal rotation.
    """
    tree = f.fiber
    header: list[int] = [tree.sphere_dim, tree.vertex_count]
    for low, high in tree.canonical_edges():
        header.extend((low, high))
    shift = canonical_rotation(f)
    rotated = f.cycles[shift:] + f.cycles[:shift]
    return (
        tuple(header),
        *(cycle_code(tree, cycle) for cycle in rotated),
    )


def canonical_key(f: AbstractLF) -> bytes:
    """Return comparable key, equal for shifted or rewritten fibrations.

    Keys depend on vertex labels. Fibrations that differ only by a
    relabelling of the fiber tree get different keys, and search never
    relabels vertices, so it will not join them.
    """
    return keycodec.encode_key(canonical_form(f))


class HomologyGroup(NamedTuple):
    """Finitely generated abelian group Z^rank plus torsion factors."""

    degree: int
    rank: int
    torsion: tuple[int, ...] = ()

    @property
    def is_trivial(self) -> bool:
        """Whether the group is zero."""
        return self.rank == 0 and not self.torsion

    def describe(self) -> str:
        """Return a name like ``Z^2 + Z/3``."""
        parts = []
        if self.rank:
            parts.append("Z" if self.rank == 1 else f"Z^{self.rank}")
        parts.extend(f"Z/{factor}" for factor in self.torsion)
        return " + ".join(parts) or "0"


def boundary_matrix(f: AbstractLF) -> list[list[int]]:
    """Return V x m matrix whose columns are the cycle classes."""
    columns = [class_of(f.fiber, cycle) for cycle in f.cycles]
    return [
        [column[row] for column in columns]
        for row in range(f.fiber.vertex_count)
    ]


def total_space_homology(f: AbstractLF) -> tuple[HomologyGroup, ...]:
    """Return integral homology of the total space in degrees 0..n+1."""
    n = f.sphere_dim
    smith = smith_normal_form(boundary_matrix(f))
    groups = [HomologyGroup(0, 1)]
    groups.extend(HomologyGroup(degree, 0) for degree in range(1, n))
    groups.append(
        HomologyGroup(n, f.fiber.vertex_count - smith.rank, smith.torsion),
    )
    groups.append(HomologyGroup(n + 1, f.cycle_count - smith.rank))
    return tuple(groups)


def euler_characteristic(f: AbstractLF) -> int:
    """Return Euler characteristic from the handle count."""
    n = f.sphere_dim
    fiber = 1 + f.fiber.vertex_count * (-1) ** n
    return fiber + (-1) ** (n + 1) * f.cycle_count


# endregion


if __name__ == "__main__":  # pragma: nocover
    print(f"{__title__}\nProgrammed by {__author__}.")
