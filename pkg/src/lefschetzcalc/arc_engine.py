"""Arc Engine - Matching arcs in a marked disk and half twists."""

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

# Model: marked points 1..p sit on a horizontal axis, the basepoint is
# below them and every point has a vertical ray going up to the
# boundary. Letter +j records crossing ray j from left to right, -j the
# reverse. An arc from point a to point b is the double coset of its
# crossing word modulo loops around its own endpoints, so reducing the
# word and stripping +-a in front and +-b at the back gives a unique
# code.

__title__ = "Arc Engine"
__author__ = "CoolCat467"
__license__ = "GNU Lesser General Public License Version 3"

from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Final, NamedTuple, TypeAlias

if TYPE_CHECKING:
    from collections.abc import Iterable, Sequence

Word: TypeAlias = tuple[int, ...]

_LEFT: Final = 1
_RIGHT: Final = 2
_PUNCTURE: Final = 0


class ArcError(ValueError):
    """Invalid arc, braid letter, or disk mismatch."""

    __slots__ = ()


@dataclass(frozen=True, slots=True)
class MarkedDisk:
    """Disk with point_count marked points on a line."""

    point_count: int

    def __post_init__(self) -> None:
        """Raise ArcError if fewer than two points."""
        if self.point_count < 2:
            raise ArcError(
                f"Marked disk needs at least 2 points, got {self.point_count}",
            )


class BraidLetter(NamedTuple):
    """Half twist generator sigma_index raised to sign."""

    index: int
    sign: int


@dataclass(frozen=True, slots=True)
class Arc:
    """Isotopy class of a matching arc.

    Value equality only looks at the canonical code. The witness is one
    braid word carrying a standard arc to this one, kept so twists
    along this arc can be written as conjugates.
    """

    point_count: int
    start: int
    end: int
    word: Word
    witness: tuple[BraidLetter, ...] | None = field(
        default=None,
        compare=False,
        repr=False,
    )
    base_index: int = field(default=0, compare=False, repr=False)

    @property
    def canonical_code(self) -> tuple[int, ...]:
        """Normal form encoding, unique per isotopy class."""
        return (self.point_count, self.start, self.end, *self.word)

    @property
    def is_standard(self) -> bool:
        """Whether this is a straight segment between neighbors."""
        return self.end == self.start + 1 and not self.word

    @property
    def complexity(self) -> int:
        """Number of ray crossings in normal form."""
        return len(self.word)


def reduce_word(word: Iterable[int]) -> Word:
    """Return freely reduced word."""
    stack: list[int] = []
    for letter in word:
        if stack and stack[-1] == -letter:
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)


def invert_word(word: Sequence[int]) -> Word:
    """Return inverse of a free group word."""
    return tuple(-letter for letter in reversed(word))


def _normalize(
    point_count: int,
    start: int,
    end: int,
    word: Iterable[int],
) -> tuple[int, int, Word]:
    """Return canonical (start, end, word) for an arc."""
    reduced = reduce_word(word)
    if start > end:
        start, end = end, start
        reduced = invert_word(reduced)
    low = 0
    high = len(reduced)
    while low < high and abs(reduced[low]) == start:
        low += 1
    while high > low and abs(reduced[high - 1]) == end:
        high -= 1
    return start, end, reduced[low:high]


def check_disk(disk: MarkedDisk, *arcs: Arc) -> None:
    """Raise ArcError if any arc lives in another disk."""
    for arc in arcs:
        if arc.point_count != disk.point_count:
            raise ArcError(
                f"Arc on {arc.point_count} points used in disk with "
                f"{disk.point_count}",
            )


def check_letter(disk: MarkedDisk, letter: BraidLetter) -> None:
    """Raise ArcError if letter does not name a generator of this disk."""
    index, sign = letter
    if not 1 <= index < disk.point_count:
        raise ArcError(
            f"Generator index {index} out of range 1..{disk.point_count - 1}",
        )
    if sign not in {1, -1}:
        raise ArcError(f"Braid letter sign must be +1 or -1, got {sign}")


def standard_arc(disk: MarkedDisk, index: int) -> Arc:
    """Return straight matching arc a_index joining points index, index+1.

    Raises ArcError if index is out of range.
    """
    if not 1 <= index < disk.point_count:
        raise ArcError(
            f"Standard arc index {index} out of range "
            f"1..{disk.point_count - 1}",
        )
    return Arc(disk.point_count, index, index + 1, (), (), index)


def _generator_image(letter: int, index: int, sign: int) -> Word:
    """Return Artin image of one letter under sigma_index^sign."""
    generator = abs(letter)
    if sign > 0:
        if generator == index:
            image: Word = (index, index + 1, -index)
        elif generator == index + 1:
            image = (index,)
        else:
            image = (generator,)
    elif generator == index:
        image = (index + 1,)
    elif generator == index + 1:
        image = (-(index + 1), index, index + 1)
    else:
        image = (generator,)
    return image if letter > 0 else invert_word(image)


def _tail_prefix(point: int, index: int, sign: int) -> Word:
    """Return correction word for the tail of point under sigma_index^sign."""
    if sign > 0 and point == index:
        return (index,)
    if sign < 0 and point == index + 1:
        return (-(index + 1),)
    return ()


def _swap(point: int, index: int) -> int:
    if point == index:
        return index + 1
    if point == index + 1:
        return index
    return point


def _twist_generator(arc: Arc, index: int, sign: int) -> Arc:
    """Return sigma_index^sign applied to arc, keeping the witness."""
    image: list[int] = []
    for letter in arc.word:
        image.extend(_generator_image(letter, index, sign))
    word = (
        invert_word(_tail_prefix(arc.start, index, sign))
        + tuple(image)
        + _tail_prefix(arc.end, index, sign)
    )
    start, end, normal = _normalize(
        arc.point_count,
        _swap(arc.start, index),
        _swap(arc.end, index),
        word,
    )
    witness = None
    if arc.witness is not None:
        witness = (BraidLetter(index, sign), *arc.witness)
    return Arc(arc.point_count, start, end, normal, witness, arc.base_index)


def invert_braid(word: Sequence[BraidLetter]) -> tuple[BraidLetter, ...]:
    """Return inverse braid word."""
    return tuple(BraidLetter(index, -sign) for index, sign in reversed(word))


def apply_braid_word(
    disk: MarkedDisk,
    word: Sequence[tuple[int, int]],
    arc: Arc,
) -> Arc:
    """Return braid word applied to arc.

    Words are composition products written outermost first, so the
    last letter acts first.
    Raises ArcError on invalid letters or disk mismatch.
    """
    check_disk(disk, arc)
    letters = [BraidLetter(*letter) for letter in word]
    for letter in letters:
        check_letter(disk, letter)
    for index, sign in reversed(letters):
        arc = _twist_generator(arc, index, sign)
    return arc


def _witness_of(arc: Arc) -> tuple[tuple[BraidLetter, ...], int]:
    """Return (witness word, standard arc index) producing arc.

    Raises ArcError if arc carries no witness and is not standard.
    """
    if arc.witness is not None and arc.base_index:
        return arc.witness, arc.base_index
    if arc.is_standard:
        return (), arc.start
    raise ArcError(
        f"Arc {arc.canonical_code} has no producing braid word",
    )


def half_twist(disk: MarkedDisk, target: Arc, along: Arc, sign: int) -> Arc:
    """Return half twist along an arc, raised to sign, applied to target.

    A twist along w(a_i) is the conjugate w sigma_i^sign w^-1.
    Raises ArcError if along has no producing braid word.
    """
    check_disk(disk, target, along)
    if sign not in {1, -1}:
        raise ArcError(f"Twist sign must be +1 or -1, got {sign}")
    if along.is_standard:
        return apply_braid_word(disk, ((along.start, sign),), target)
    witness, index = _witness_of(along)
    conjugate = (*witness, BraidLetter(index, sign), *invert_braid(witness))
    return apply_braid_word(disk, conjugate, target)


def arc_equal(first: Arc, second: Arc) -> bool:
    """Return if two arcs are isotopic.

    Raises ArcError if arcs live in different disks.
    """
    if first.point_count != second.point_count:
        raise ArcError("Arcs live in different marked disks")
    return first.canonical_code == second.canonical_code


def _side_in_pocket(side: tuple[int, int], index: int) -> bool:
    """Return if a ray side faces the region above segment index."""
    point, where = side
    return (point == index and where == _RIGHT) or (
        point == index + 1 and where == _LEFT
    )


def _interior_crossings(arc: Arc, index: int) -> int:
    """Return minimal interior crossings of arc with standard arc index.

    Cutting the disk along every ray splits the arc into pieces with
    ends on ray sides or marked points. The segment a_index separates
    the region above it from the rest, so a piece crosses it once
    exactly when its ends lie on different sides.
    """
    ends: list[tuple[int, int]] = [(arc.start, _PUNCTURE)]
    for letter in arc.word:
        point = abs(letter)
        if letter > 0:
            ends.extend(((point, _LEFT), (point, _RIGHT)))
        else:
            ends.extend(((point, _RIGHT), (point, _LEFT)))
    ends.append((arc.end, _PUNCTURE))
    touching = {index, index + 1}
    count = 0
    for piece in range(0, len(ends), 2):
        first, second = ends[piece], ends[piece + 1]
        if any(
            where == _PUNCTURE and point in touching
            for point, where in (first, second)
        ):
            continue
        if _side_in_pocket(first, index) != _side_in_pocket(second, index):
            count += 1
    return count


def sphere_intersection(first: Arc, second: Arc) -> int:
    """Return intersection number of the matching spheres of two arcs.

    Counts minimal interior crossings plus shared endpoints, so an arc
    meets itself twice.
    Raises ArcError on disk mismatch or arcs without a producing word.
    """
    if first.point_count != second.point_count:
        raise ArcError("Arcs live in different marked disks")
    disk = MarkedDisk(first.point_count)
    if not second.is_standard and first.is_standard:
        first, second = second, first
    witness, index = _witness_of(second)
    moved = apply_braid_word(disk, invert_braid(witness), first)
    shared = len({moved.start, moved.end} & {index, index + 1})
    return _interior_crossings(moved, index) + shared


if __name__ == "__main__":  # pragma: nocover
    print(f"{__title__}\nProgrammed by {__author__}.")
