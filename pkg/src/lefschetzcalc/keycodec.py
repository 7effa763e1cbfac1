"""Key Codec - Compact byte encoding for canonical fibration keys."""

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

__title__ = "Key Codec"
__author__ = "CoolCat467"
__license__ = "GNU Lesser General Public License Version 3"

from itertools import count
from typing import TYPE_CHECKING, Any

if TYPE_CHECKING:
    from collections.abc import Iterable, Sequence


class KeyCodecError(ValueError):
    """Key bytes are truncated or malformed."""

    __slots__ = ()


def zigzag(value: int) -> int:
    """Return signed integer folded onto the naturals (0, -1, 1, -2 ...)."""
    return value * 2 if value >= 0 else -value * 2 - 1


def unzigzag(value: int) -> int:
    """Return signed integer from its zigzag form.

    Raises KeyCodecError if value is negative.
    """
    if value < 0:
        raise KeyCodecError(f"zigzag value must be natural, got {value}")
    return value // 2 if value % 2 == 0 else -(value + 1) // 2


class KeyBuffer(bytearray):
    """Byte buffer of varint encoded integer records."""

    __slots__ = ("pos",)

    def __init__(self, *args: Any, **kwargs: Any) -> None:
        """Initialize starting at position zero."""
        super().__init__(*args, **kwargs)
        self.pos = 0

    def write_varuint(self, value: int) -> None:
        """Write unsigned integer, seven bits per byte, low group first.

        Raises KeyCodecError if value is negative.
        """
        if value < 0:
            raise KeyCodecError(f"Tried to write negative varuint {value}")
        remaining = value
        while True:
            if remaining & ~0x7F == 0:
                self.append(remaining)
                return
            self.append(remaining & 0x7F | 0x80)
            remaining >>= 7

    def write_signed(self, value: int) -> None:
        """Write signed integer as zigzag varuint."""
        self.write_varuint(zigzag(value))

    def write_record(self, values: Sequence[int]) -> None:
        """Write length prefixed run of signed integers."""
        self.write_varuint(len(values))
        for value in values:
            self.write_signed(value)

    def read_varuint(self) -> int:
        """Read unsigned varint.

        Raises KeyCodecError if the buffer ends inside a varint.
        """
        result = 0
        for shift in count():
            if self.pos >= len(self):
                raise KeyCodecError("Key ended inside a varint")
            byte = self[self.pos]
            self.pos += 1
            result |= (byte & 0x7F) << (7 * shift)
            if not byte & 0x80:
                return result
        raise AssertionError("unreachable")  # pragma: nocover

    def read_signed(self) -> int:
        """Read zigzag encoded signed integer."""
        return unzigzag(self.read_varuint())

    def read_record(self) -> tuple[int, ...]:
        """Read length prefixed run of signed integers."""
        length = self.read_varuint()
        return tuple(self.read_signed() for _ in range(length))

    @property
    def remaining(self) -> int:
        """Amount of bytes not yet read."""
        return len(self) - self.pos


def encode_key(records: Iterable[Sequence[int]]) -> bytes:
    """Return bytes encoding a sequence of integer records."""
    items = tuple(records)
    buffer = KeyBuffer()
    buffer.write_varuint(len(items))
    for record in items:
        buffer.write_record(record)
    return bytes(buffer)


def decode_key(data: bytes) -> tuple[tuple[int, ...], ...]:
    """Return records encoded by encode_key.

    Raises KeyCodecError if data is malformed or has trailing bytes.
    """
    buffer = KeyBuffer(data)
    records = tuple(buffer.read_record() for _ in range(buffer.read_varuint()))
    if buffer.remaining:
        raise KeyCodecError(f"{buffer.remaining} trailing bytes after key")
    return records


if __name__ == "__main__":  # pragma: nocover
    print(f"{__title__}\nProgrammed by {__author__}.")
