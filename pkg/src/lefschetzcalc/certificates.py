"""Certificates - Replayable move sequences and the builtin proof scripts."""

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

__title__ = "Certificates"
__author__ = "CoolCat467"
__license__ = "GNU Lesser General Public License Version 3"

import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING, Final

from lefschetzcalc import catalog
from lefschetzcalc.catalog import ALPHA
from lefschetzcalc.fibration_calculus import (
    AbstractLF,
    Cycle,
    CyclicShift,
    Destabilize,
    Direction,
    Hurwitz,
    IllegalMoveError,
    Mode,
    Move,
    MoveRejection,
    RewriteCycle,
    SmoothReplace,
    Stabilize,
    apply_move,
    canonical_key,
    canonical_rotation,
    inverse_moves,
)
from lefschetzcalc.plumbing_lattice import PlumbingError, step_for

if TYPE_CHECKING:
    from collections.abc import Callable, Iterable, Sequence

logger = logging.getLogger(__name__)

SEARCH_PROVENANCE: Final = "search"


class CertificateError(ValueError):
    """Certificate cannot be built, reversed, or composed."""

    __slots__ = ()


@dataclass(frozen=True, slots=True)
class Certificate:
    """Move sequence claimed to turn start into claimed_end in mode."""

    mode: Mode
    start: AbstractLF
    steps: tuple[Move, ...]
    claimed_end: AbstractLF
    provenance: str = SEARCH_PROVENANCE

    def __len__(self) -> int:
        """Return number of steps."""
        return len(self.steps)

    def states(self) -> list[AbstractLF]:
        """Return start followed by the state after each step.

        Raises IllegalMoveError if a step is illegal.
        """
        states = [self.start]
        for move in self.steps:
            states.append(apply_move(states[-1], move, self.mode))
        return states


@dataclass(frozen=True, slots=True)
class Verdict:
    """Result of replaying a certificate.

    failed_step is 1-based, or None when every step was legal.
    """

    accepted: bool
    failed_step: int | None = None
    reason: str = ""
    rejection: MoveRejection | None = None

    def describe(self) -> str:
        """Return one line summary."""
        if self.accepted:
            return "accept"
        if self.failed_step is None:
            return f"reject: {self.reason}"
        return f"reject at step {self.failed_step}: {self.reason}"


def verify(cert: Certificate) -> Verdict:
    """Return verdict from replaying every step of cert in its mode."""
    state = cert.start
    for index, move in enumerate(cert.steps, start=1):
        try:
            state = apply_move(state, move, cert.mode)
        except IllegalMoveError as exc:
            logger.info("step %d (%s) rejected: %s", index, move, exc)
            return Verdict(False, index, str(exc), exc.reason)
    if canonical_key(state) != canonical_key(cert.claimed_end):
        logger.info("replay ends away from the claimed end")
        return Verdict(False, None, "end does not match claimed end")
    return Verdict(True)


def align_steps(source: AbstractLF, target: AbstractLF) -> list[Move]:
    """Return shifts and rewrites taking source to target exactly.

    Raises CertificateError if the canonical keys differ.
    """
    if canonical_key(source) != canonical_key(target):
        raise CertificateError("Fibrations to align are not equivalent")
    count = source.cycle_count
    shift = (canonical_rotation(source) - canonical_rotation(target)) % count
    steps: list[Move] = []
    if shift <= count - shift:
        steps.extend([CyclicShift(Direction.LEFT)] * shift)
    else:
        steps.extend([CyclicShift(Direction.RIGHT)] * (count - shift))
    rotated = source.cycles[shift:] + source.cycles[:shift]
    for position, (have, want) in enumerate(
        zip(rotated, target.cycles, strict=True),
        start=1,
    ):
        if have != want:
            steps.append(RewriteCycle(position, want))
    return steps


def reverse_certificate(cert: Certificate) -> Certificate:
    """Return certificate from claimed_end back to start.

    Raises CertificateError if cert does not replay or a step has no
    exact inverse.
    """
    try:
        states = cert.states()
        steps = align_steps(cert.claimed_end, states[-1])
        for before, move in zip(
            reversed(states[:-1]),
            reversed(cert.steps),
            strict=True,
        ):
            steps.extend(inverse_moves(before, move))
    except IllegalMoveError as exc:
        raise CertificateError(f"Cannot reverse certificate: {exc}") from exc
    return Certificate(
        cert.mode,
        cert.claimed_end,
        tuple(steps),
        cert.start,
        f"reverse of {cert.provenance}",
    )


def compose_certificates(
    first: Certificate,
    second: Certificate,
) -> Certificate:
    """Return certificate running first then second.

    The result is smooth if either part is.
    Raises CertificateError if first does not end where second starts.
    """
    if canonical_key(first.claimed_end) != canonical_key(second.start):
        raise CertificateError(
            "First certificate does not end where the second starts",
        )
    smooth = Mode.SMOOTH in {first.mode, second.mode}
    mode = Mode.SMOOTH if smooth else first.mode
    try:
        middle = first.states()[-1]
    except IllegalMoveError as exc:
        raise CertificateError(f"First certificate fails: {exc}") from exc
    return Certificate(
        mode,
        first.start,
        (*first.steps, *align_steps(middle, second.start), *second.steps),
        second.claimed_end,
        f"{first.provenance}; {second.provenance}",
    )


def compose_all(certs: Iterable[Certificate]) -> Certificate:
    """Return composition of a nonempty chain of certificates."""
    chain = list(certs)
    if not chain:
        raise CertificateError("Nothing to compose")
    result = chain[0]
    for cert in chain[1:]:
        result = compose_certificates(result, cert)
    return result


# region: Builtin proof scripts


def _smooth_step(n: int) -> int:
    """Return step for smooth replacement, CertificateError at odd n."""
    try:
        return int(step_for(n))
    except PlumbingError as exc:
        raise CertificateError(
            f"Smooth certificates need even n, got n = {n}",
        ) from exc


def x_to_a_milnor(k: int, n: int) -> Certificate:
    """Return Weinstein certificate from X_k to the A_{2k+1} Milnor fiber.

    The twisted beta is walked to the front, the list is rotated, one
    more Hurwitz move turns beta into alpha and the unused beta leaf
    is rotated to the front and destabilized.
    """
    start = catalog.build_X(k, n)
    length = 2 * k + 3
    steps: list[Move] = [
        Hurwitz(position, Direction.LEFT)
        for position in range(2 * k + 1, 0, -1)
    ]
    steps.append(CyclicShift(Direction.LEFT))
    steps.append(Hurwitz(length - 1, Direction.LEFT))
    steps.append(RewriteCycle(length - 1, ALPHA))
    steps.append(CyclicShift(Direction.RIGHT))
    steps.append(Destabilize(1))
    return Certificate(
        Mode.WEINSTEIN,
        start,
        tuple(steps),
        catalog.build_A_milnor(2 * k + 1, n),
        f"X_{k} to A_{2 * k + 1} by Hurwitz moves",
    )


def x_to_y(k: int, n: int) -> Certificate:
    """Return smooth certificate from X_k to Y_k.

    Raises CertificateError if 2k is not a multiple of the smooth step.
    """
    step = _smooth_step(n)
    if (2 * k) % step:
        raise CertificateError(
            f"X_{k} and Y_{k} need 2k divisible by {step} at n = {n}",
        )
    return Certificate(
        Mode.SMOOTH,
        catalog.build_X(k, n),
        (SmoothReplace(2 * k + 2, ALPHA.base, 2 * k),),
        catalog.build_Y(k, n),
        f"X_{k} to Y_{k} by smooth replacement",
    )


def _p_or_q(m: int, j: int, n: int) -> AbstractLF:
    if j == m + 1:
        return catalog.build_Q(m + 1, n)
    return catalog.build_P_Tmj(m, j, n)


def p_shift(m: int, j: int, n: int) -> Certificate:
    """Return smooth certificate from P(T_m^j) to P(T_m^{j+step}).

    When j + step is m + 1 the target is Q_{m+1}.
    Raises CertificateError if j + step exceeds m + 1.
    """
    step = _smooth_step(n)
    if j < 1 or j + step > m + 1:
        raise CertificateError(
            f"Cannot shift P(T_{m}^{j}) by {step}: need 1 <= j and "
            f"j + {step} <= {m + 1}",
        )
    try:
        start = catalog.build_P_Tmj(m, j, n)
    except catalog.CatalogError as exc:
        raise CertificateError(str(exc)) from exc
    steps: list[Move] = [
        Hurwitz(position, Direction.RIGHT)
        for position in range(j + 1, j + step + 1)
    ]
    steps.append(SmoothReplace(j + step + 1, ALPHA.base, step))
    return Certificate(
        Mode.SMOOTH,
        start,
        tuple(steps),
        _p_or_q(m, j + step, n),
        f"P(T_{m}^{j}) to {'Q' if j + step == m + 1 else 'P'} shift",
    )


def p_chain(m: int, j_from: int, j_to: int, n: int) -> Certificate:
    """Return smooth certificate from P(T_m^j_from) to P(T_m^j_to).

    j_to may be m + 1, naming Q_{m+1}.
    Raises CertificateError if the distance is not a positive multiple
    of the smooth step.
    """
    step = _smooth_step(n)
    distance = j_to - j_from
    if distance <= 0 or distance % step:
        raise CertificateError(
            f"P(T_{m}^{j_from}) to j = {j_to} needs a positive multiple "
            f"of {step}",
        )
    return compose_all(
        p_shift(m, j, n) for j in range(j_from, j_to, step)
    )


def p_to_q(m: int, n: int) -> Certificate:
    """Return smooth certificate from P(T_m^{m+1-step}) to Q_{m+1}."""
    step = _smooth_step(n)
    return p_shift(m, m + 1 - step, n)


def z_split(prefix: Sequence[int], i: int, j: int, n: int) -> Certificate:
    """Return smooth certificate Z(prefix; step*i + j) -> Z(prefix; step*i; j).

    A new leaf is stabilized next to the last vertex, its sphere is
    carried through the last block by Hurwitz moves, one smooth
    replacement removes the step*i twists and the list is rotated home.
    Raises CertificateError if n is odd or i, j are below 1.
    """
    step = _smooth_step(n)
    if i < 1 or j < 1:
        raise CertificateError(f"Z split needs i, j >= 1, got i={i}, j={j}")
    total = step * i + j
    try:
        start = catalog.build_Z((*prefix, total), n)
        end = catalog.build_Z((*prefix, step * i, j), n)
    except catalog.CatalogError as exc:
        raise CertificateError(str(exc)) from exc
    last = len(prefix) + 1
    u = Cycle(last)
    v = Cycle(last + 1)
    head = sum(value + 1 for value in prefix)

    steps: list[Move] = [
        CyclicShift(Direction.RIGHT),
        Stabilize(last),
        Hurwitz(1, Direction.RIGHT),
        Hurwitz(1, Direction.RIGHT),
        RewriteCycle(2, v),
        CyclicShift(Direction.LEFT),
        CyclicShift(Direction.LEFT),
    ]
    # Now (prefix blocks, u^total, d, v) with d = tau_u(v).
    for repeat in range(j - 1):
        position = head + total - repeat
        steps.append(Hurwitz(position, Direction.RIGHT))
        steps.append(RewriteCycle(position + 1, v))
    moved = step * i + 1
    steps.extend(
        Hurwitz(position, Direction.LEFT)
        for position in range(head + moved, head, -1)
    )
    steps.append(SmoothReplace(head + 1, u.base, -step * i))
    for position in range(head, 0, -1):
        steps.append(Hurwitz(position, Direction.LEFT))
        steps.append(RewriteCycle(position, v))
    steps.append(CyclicShift(Direction.LEFT))
    return Certificate(
        Mode.SMOOTH,
        start,
        tuple(steps),
        end,
        f"Z split of {total} into {step * i} and {j}",
    )


def z_family_chain(params: Sequence[int], n: int) -> list[Certificate]:
    """Return certificates linking consecutive members of a Z family."""
    step = _smooth_step(n)
    try:
        members = catalog.z_family_parameters(params, n)
    except catalog.CatalogError as exc:
        raise CertificateError(str(exc)) from exc
    chain = []
    for r in range(1, len(params)):
        prefix = members[r - 1][:-1]
        rest = step * sum(params[r : len(params) - 1]) + params[-1]
        chain.append(z_split(prefix, params[r - 1], rest, n))
    return chain


def milnor_pair_table(
    n: int,
    k_max: int = 2,
) -> list[tuple[str, int, int, int]]:
    """Return (label, m, j_from, j_to) rows of diffeomorphic A/D/E pairs.

    Each row links P(T_m^j_from) to P(T_m^j_to), where j_to = m + 1
    names Q_{m+1}. n = 2 rows use step 2, even n >= 4 rows use step 4.
    Families indexed by k run for k up to k_max.
    """
    if _smooth_step(n) == 2:
        rows = [
            ("A6/E6", 5, 1, 3),
            ("A7/E7", 6, 1, 3),
            ("E7/D7", 6, 3, 5),
            ("D7/Q7", 6, 5, 7),
            ("A8/E8", 7, 1, 3),
        ]
        for k in range(2, k_max + 2):
            rank = 2 * k + 1
            rows.append((f"A{rank}/D{rank}", 2 * k, 1, 2 * k - 1))
            rows.append((f"D{rank}/Q{rank}", 2 * k, 2 * k - 1, 2 * k + 1))
        return rows
    rows = [("E7/Q7", 6, 3, 7), ("A8/E8", 7, 1, 5)]
    for k in range(1, k_max + 1):
        four = 4 * k
        rows.append((f"A{four + 1}/Q{four + 1}", four, 1, four + 1))
        rows.append((f"D{four + 2}/Q{four + 2}", four + 1, 2, four + 2))
        rows.append((f"A{four + 3}/D{four + 3}", four + 2, 1, four + 1))
    return rows


def milnor_pairs(n: int, k_max: int = 2) -> list[tuple[str, Certificate]]:
    """Return labelled smooth certificates between A/D/E Milnor fibers."""
    return [
        (label, p_chain(m, j_from, j_to, n))
        for label, m, j_from, j_to in milnor_pair_table(n, k_max)
    ]


BUILTIN_GENERATORS: Final[dict[str, Callable[..., Certificate]]] = {
    "x_to_a_milnor": x_to_a_milnor,
    "x_to_y": x_to_y,
    "p_shift": p_shift,
    "p_chain": p_chain,
    "p_to_q": p_to_q,
    "z_split": z_split,
}


def builtin_certificates(
    n: int,
    limit: int = 3,
) -> list[tuple[str, Certificate]]:
    """Return named builtin certificates with parameters up to limit.

    Smooth certificates are included only at even n.
    """
    named: list[tuple[str, Certificate]] = [
        (f"x_to_a_milnor(k={k})", x_to_a_milnor(k, n))
        for k in range(1, limit + 1)
    ]
    if n % 2:
        return named
    step = _smooth_step(n)
    named.extend(
        (f"x_to_y(k={k})", x_to_y(k, n))
        for k in range(1, limit + 1)
        if (2 * k) % step == 0
    )
    for m in range(2, limit + 3):
        named.extend(
            (f"p_shift(m={m},j={j})", p_shift(m, j, n))
            for j in range(1, m + 2 - step)
        )
    for i in range(1, limit + 1):
        for j in range(1, limit + 1):
            named.append((f"z_split(i={i},j={j})", z_split((), i, j, n)))
            named.append((f"z_split(1;i={i},j={j})", z_split((1,), i, j, n)))
    named.extend(
        (f"milnor {label}", cert) for label, cert in milnor_pairs(n, 1)
    )
    return named


# endregion


if __name__ == "__main__":  # pragma: nocover
    print(f"{__title__}\nProgrammed by {__author__}.")
