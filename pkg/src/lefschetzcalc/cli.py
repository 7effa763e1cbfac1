"""CLI - Command line front end for the fibration calculus."""

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

__title__ = "CLI"
__author__ = "CoolCat467"
__license__ = "GNU Lesser General Public License Version 3"

import argparse
import logging
import random
import re
import sys
from pathlib import Path
from typing import TYPE_CHECKING, Final, NamedTuple

import trio

from lefschetzcalc import catalog, certificates
from lefschetzcalc.catalog import CatalogError
from lefschetzcalc.certificates import (
    Certificate,
    CertificateError,
    reverse_certificate,
    verify,
)
from lefschetzcalc.decomposition import (
    Exactness,
    component_count,
    index_gaps,
)
from lefschetzcalc.documents import (
    DocumentError,
    certificate_to_document,
    dumps,
    fibration_to_document,
    load_certificate,
    load_fibration,
    report_text,
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
    SmoothReplace,
    Stabilize,
    __version__,
    apply_move,
    euler_characteristic,
    legal_moves,
    total_space_homology,
)
from lefschetzcalc.plumbing_lattice import PlumbingTree, step_for
from lefschetzcalc.repl import run_stdin_session
from lefschetzcalc.search import SearchBudget, SearchError, search

if TYPE_CHECKING:
    from collections.abc import Callable, Sequence

logger = logging.getLogger(__name__)

EXIT_OK: Final = 0
EXIT_NEGATIVE: Final = 1
EXIT_USAGE: Final = 2

USAGE_ERRORS: Final = (
    CatalogError,
    CertificateError,
    DocumentError,
    IllegalMoveError,
    SearchError,
    OSError,
)

MOVE_SPEC_HELP: Final = (
    "shift:left|right, hurwitz:POS:left|right, stabilize:VERTEX, "
    "destabilize:POS, smooth:POS:VERTEX:EXPONENT"
)

_SHORTHAND = re.compile(r"^(?P<name>[A-Za-z_]+)\((?P<args>[\d,\s]*)\)$")


class UsageError(ValueError):
    """Command line argument does not parse."""

    __slots__ = ()


def _int(text: str, what: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise UsageError(f"{what} must be an integer, got {text!r}") from None


def _direction(text: str) -> Direction:
    try:
        return Direction(text.lower())
    except ValueError:
        raise UsageError(
            f"Direction must be left or right, got {text!r}",
        ) from None


def parse_move_spec(text: str) -> Move:
    """Return move from colon separated spec.

    Raises UsageError if the spec does not name a move.
    """
    name, *fields = text.strip().split(":")
    match name.lower(), fields:
        case "shift", [direction]:
            return CyclicShift(_direction(direction))
        case "hurwitz", [position, direction]:
            return Hurwitz(_int(position, "position"), _direction(direction))
        case "stabilize", [vertex]:
            return Stabilize(_int(vertex, "vertex"))
        case "destabilize", [position]:
            return Destabilize(_int(position, "position"))
        case "smooth", [position, vertex, exponent]:
            return SmoothReplace(
                _int(position, "position"),
                _int(vertex, "vertex"),
                _int(exponent, "exponent"),
            )
    raise UsageError(f"Bad move spec {text!r}, expected {MOVE_SPEC_HELP}")


def parse_int_list(text: str) -> tuple[int, ...]:
    """Return integers from comma separated text."""
    return tuple(_int(part, "list entry") for part in text.split(",") if part)


def build_shorthand(text: str, n: int) -> AbstractLF:
    """Return catalog fibration named like ``X(1)`` or ``Z(2,1)``.

    Raises UsageError for text that is not a shorthand.
    """
    found = _SHORTHAND.match(text.strip())
    if found is None:
        raise UsageError(f"{text!r} is neither a file nor a NAME(args)")
    name = found["name"]
    values = parse_int_list(found["args"].replace(" ", ""))
    match name, values:
        case ("A" | "Q", (m,)):
            return catalog.build_named(name, n, m=m)
        case ("X" | "Y", (k,)):
            return catalog.build_named(name, n, k=k)
        case ("P_Tmj", (m, j)):
            return catalog.build_named(name, n, m=m, j=j)
        case ("Z", _):
            return catalog.build_named(name, n, i=values)
    raise UsageError(f"Bad shorthand {text!r}")


def read_fibration(source: str, n: int = 2) -> AbstractLF:
    """Return fibration from a document file or a catalog shorthand."""
    path = Path(source)
    if path.is_file():
        return load_fibration(path.read_bytes())
    return build_shorthand(source, n)


def emit(text: str, out: Path | None) -> None:
    """Write text to out, or to standard output."""
    if out is None:
        sys.stdout.write(text)
        return
    out.write_text(text, encoding="utf-8")
    logger.info("wrote %s", out)


# region: Commands


def cmd_build(args: argparse.Namespace) -> int:
    """Write catalog fibration document."""
    f = catalog.build_named(
        args.name,
        args.n,
        k=args.k,
        m=args.m,
        i=parse_int_list(args.i) if args.i else (),
        j=args.j,
        kind=args.kind,
    )
    emit(dumps(fibration_to_document(f)), args.out)
    return EXIT_OK


def cmd_invariants(args: argparse.Namespace) -> int:
    """Print invariant report document."""
    f = read_fibration(args.file, args.n)
    budget = SearchBudget(args.depth, args.max_states, 0)
    emit(report_text(f, budget), args.out)
    return EXIT_OK


def cmd_apply(args: argparse.Namespace) -> int:
    """Apply one move and write the resulting fibration."""
    f = read_fibration(args.file, args.n)
    move = parse_move_spec(args.move)
    result = apply_move(f, move, Mode(args.mode))
    emit(dumps(fibration_to_document(result)), args.out)
    return EXIT_OK


def cmd_search(args: argparse.Namespace) -> int:
    """Search for a certificate between two fibrations."""
    start = read_fibration(args.start, args.n)
    end = read_fibration(args.end, args.n)
    budget = SearchBudget(args.depth, args.max_states, args.stabilize)
    result = search(start, end, Mode(args.mode), budget, args.workers)
    if result.certificate is None:
        print(
            f"{result.message} ({result.explored} states, "
            f"depth {result.depth})",
            file=sys.stderr,
        )
        return EXIT_NEGATIVE
    emit(dumps(certificate_to_document(result.certificate)), args.out)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    """Replay a certificate document."""
    cert = load_certificate(Path(args.certificate).read_bytes())
    verdict = verify(cert)
    print(verdict.describe())
    return EXIT_OK if verdict.accepted else EXIT_NEGATIVE


def cmd_repl(args: argparse.Namespace) -> int:
    """Run interactive session on standard input."""
    trio.run(run_stdin_session, Mode(args.mode))
    return EXIT_OK


# endregion

# region: Reproduction suite


class SuiteRow(NamedTuple):
    """One labelled check of the reproduction suite."""

    label: str
    passed: bool
    detail: str = ""

    def render(self) -> str:
        """Return stable one line form."""
        status = "PASS" if self.passed else "FAIL"
        detail = f"  {self.detail}" if self.detail else ""
        return f"{self.label:<44} {status}{detail}"


def _accepted(cert: Certificate) -> bool:
    return verify(cert).accepted


def _mark(ok: bool) -> str:
    return "PASS" if ok else "FAIL"


def certificate_rows(n: int, limit: int) -> list[SuiteRow]:
    """Return one row per builtin certificate at n."""
    return [
        SuiteRow(f"builtin n={n} {name}", _accepted(cert), cert.mode.value)
        for name, cert in certificates.builtin_certificates(n, limit)
    ]


def separation_rows(n: int, limit: int) -> list[SuiteRow]:
    """Return X_k against Y_k rows: smooth certificate and counts."""
    rows = []
    step = step_for(n)
    for k in range(1, limit + 1):
        if (2 * k) % step:
            continue
        x_count = component_count(catalog.build_X(k, n))
        y_count = component_count(catalog.build_Y(k, n))
        same_homology = total_space_homology(
            catalog.build_X(k, n),
        ) == total_space_homology(catalog.build_Y(k, n))
        cert_ok = _accepted(certificates.x_to_y(k, n))
        counts_ok = (
            x_count.value == 1
            and y_count.value == 2
            and x_count.exactness is Exactness.EXACT
            and y_count.exactness is Exactness.EXACT
        )
        rows.append(
            SuiteRow(
                f"X/Y separation n={n} k={k}",
                cert_ok and counts_ok and same_homology,
                f"diffeo cert {_mark(cert_ok)}, components "
                f"{x_count.value}!={y_count.value} {_mark(counts_ok)}",
            ),
        )
    return rows


Z_FAMILY_PARAMETERS: Final = ((1, 1), (2, 1), (1, 1, 1), (1, 2, 1))


def z_family_rows(n: int, limit: int) -> list[SuiteRow]:
    """Return one row per exotic Z family."""
    rows = []
    for params in Z_FAMILY_PARAMETERS:
        if len(params) > limit:
            continue
        members = catalog.z_family(params, n)
        invariants = {
            (total_space_homology(member), euler_characteristic(member))
            for member in members
        }
        counts = [component_count(member).value for member in members]
        chain = certificates.z_family_chain(params, n)
        certs_ok = all(_accepted(cert) for cert in chain)
        counts_ok = counts == list(range(1, len(params) + 1))
        rows.append(
            SuiteRow(
                f"Z family n={n} i={params}",
                certs_ok and counts_ok and len(invariants) == 1,
                f"family of {len(members)}, counts {counts}",
            ),
        )
    return rows


def milnor_rows(n: int, k_max: int) -> list[SuiteRow]:
    """Return one row per diffeomorphic A/D/E Milnor fiber pair."""
    rows = []
    for label, cert in certificates.milnor_pairs(n, k_max):
        ok = _accepted(cert) and total_space_homology(
            cert.start,
        ) == total_space_homology(cert.claimed_end)
        rows.append(
            SuiteRow(
                f"Milnor pair n={n} {label}",
                ok,
                "Weinstein distinction: NOT IMPLEMENTED "
                "(symplectic cohomology out of scope)",
            ),
        )
    return rows


def index_gap_rows(max_n: int = 8, max_k: int = 8) -> list[SuiteRow]:
    """Return one row per n checking gap formulas and certification."""
    rows = []
    for n in range(2, max_n + 1):
        ok = True
        for k in range(1, max_k + 1):
            report = index_gaps(n, k)
            ok &= report.gap_max_min == (n - 1) * (k + 1) + 2
            ok &= report.gap_min_max == n
            ok &= report.nonvanishing_certified
        rows.append(SuiteRow(f"index gaps n={n} k=1..{max_k}", ok))
    return rows


def ball_row(n: int) -> SuiteRow:
    """Return row checking the ball has trivial reduced homology."""
    ball = AbstractLF(PlumbingTree.path(1, n), (catalog.ALPHA,))
    groups = total_space_homology(ball)
    ok = all(group.is_trivial for group in groups[1:])
    return SuiteRow(f"ball n={n} reduced homology trivial", ok)


def random_walk_rows(
    n: int,
    seed: int,
    walks: int = 4,
    length: int = 6,
) -> list[SuiteRow]:
    """Return rows replaying random Hurwitz walks and their reverses."""
    rng = random.Random(seed + n)
    rows = []
    for walk in range(walks):
        start = catalog.build_X(1 + walk % 2, n)
        state = start
        steps: list[Move] = []
        for _ in range(length):
            options = [
                move
                for move in legal_moves(state, Mode.WEINSTEIN)
                if isinstance(move, (CyclicShift, Hurwitz))
            ]
            move = rng.choice(options)
            state = apply_move(state, move, Mode.WEINSTEIN)
            steps.append(move)
        cert = Certificate(
            Mode.WEINSTEIN,
            start,
            tuple(steps),
            state,
            f"random walk {walk}",
        )
        ok = _accepted(cert) and _accepted(reverse_certificate(cert))
        rows.append(SuiteRow(f"random walk n={n} seed={seed} #{walk}", ok))
    return rows


def suite_rows(limit: int = 3, seed: int = 0) -> list[SuiteRow]:
    """Return every row of the reproduction suite."""
    rows: list[SuiteRow] = []
    for n in (2, 3, 4):
        rows.append(ball_row(n))
        rows.extend(certificate_rows(n, limit))
        rows.extend(random_walk_rows(n, seed))
    for n in (2, 4):
        rows.extend(separation_rows(n, limit))
        rows.extend(z_family_rows(n, limit))
        rows.extend(milnor_rows(n, max(1, limit - 1)))
    rows.extend(index_gap_rows())
    return rows


def cmd_suite(args: argparse.Namespace) -> int:
    """Print the reproduction table, exit 0 if every row passes."""
    rows = suite_rows(args.limit, args.seed)
    for row in rows:
        print(row.render())
    failed = sum(1 for row in rows if not row.passed)
    print(f"{len(rows) - failed}/{len(rows)} rows passed")
    return EXIT_OK if not failed else EXIT_NEGATIVE


# endregion


def _add_mode(parser: argparse.ArgumentParser, default: str) -> None:
    parser.add_argument(
        "--mode",
        choices=[mode.value for mode in Mode],
        default=default,
        help=f"equivalence mode (default: {default})",
    )


def _add_n(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--n",
        type=int,
        default=2,
        help="sphere dimension for catalog shorthands (default: 2)",
    )


def _add_out(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--out",
        type=Path,
        default=None,
        help="write document here instead of standard output",
    )


def build_parser() -> argparse.ArgumentParser:
    """Return argument parser with every subcommand."""
    parser = argparse.ArgumentParser(
        prog="lefschetzcalc",
        description="Moves, certificates and invariants of abstract "
        "Weinstein Lefschetz fibrations.",
    )
    parser.add_argument(
        "--version",
        action="version",
        version=f"%(prog)s {__version__}",
    )
    parser.add_argument(
        "-v",
        "--verbose",
        action="store_true",
        help="log at DEBUG level",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    build = commands.add_parser("build", help="build a catalog fibration")
    build.add_argument("name", help=", ".join(catalog.BUILD_TARGETS))
    build.add_argument("--k", type=int, default=None)
    build.add_argument("--m", type=int, default=None)
    build.add_argument("--i", default="", help="comma separated list")
    build.add_argument("--j", type=int, default=None)
    build.add_argument("--kind", default=None, help="A, D or E")
    _add_n(build)
    _add_out(build)
    build.set_defaults(handler=cmd_build)

    invariants = commands.add_parser(
        "invariants",
        help="print invariant report",
    )
    invariants.add_argument("file", help="fibration document or NAME(args)")
    invariants.add_argument("--depth", type=int, default=16)
    invariants.add_argument("--max-states", type=int, default=1500)
    _add_n(invariants)
    _add_out(invariants)
    invariants.set_defaults(handler=cmd_invariants)

    apply = commands.add_parser("apply", help="apply one move")
    apply.add_argument("file", help="fibration document or NAME(args)")
    apply.add_argument("move", help=MOVE_SPEC_HELP)
    _add_mode(apply, Mode.WEINSTEIN.value)
    _add_n(apply)
    _add_out(apply)
    apply.set_defaults(handler=cmd_apply)

    search_parser = commands.add_parser(
        "search",
        help="search for a certificate",
    )
    for name in ("start", "end"):
        search_parser.add_argument(
            name,
            help="fibration document or NAME(args)",
        )
    _add_mode(search_parser, Mode.WEINSTEIN.value)
    search_parser.add_argument("--depth", type=int, default=8)
    search_parser.add_argument("--max-states", type=int, default=20000)
    search_parser.add_argument("--stabilize", type=int, default=1)
    search_parser.add_argument("--workers", type=int, default=1)
    _add_n(search_parser)
    _add_out(search_parser)
    search_parser.set_defaults(handler=cmd_search)

    verify_parser = commands.add_parser("verify", help="replay a certificate")
    verify_parser.add_argument("certificate", help="certificate document")
    verify_parser.set_defaults(handler=cmd_verify)

    suite = commands.add_parser(
        "suite",
        help="run builtin certificates and invariant separations",
    )
    suite.add_argument("--limit", type=int, default=3)
    suite.add_argument("--seed", type=int, default=0)
    suite.set_defaults(handler=cmd_suite)

    repl = commands.add_parser("repl", help="interactive move session")
    _add_mode(repl, Mode.WEINSTEIN.value)
    repl.set_defaults(handler=cmd_repl)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    """Run command line and return exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    handler: Callable[[argparse.Namespace], int] = args.handler
    try:
        return handler(args)
    except (UsageError, *USAGE_ERRORS) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: nocover
    raise SystemExit(main())
