"""Documents - JSON files for fibrations, certificates and reports."""

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

__title__ = "Documents"
__author__ = "CoolCat467"
__license__ = "GNU Lesser General Public License Version 3"

import json
from typing import TYPE_CHECKING, Any, Final, TypeAlias

from cryptography.hazmat.primitives import hashes

from lefschetzcalc.certificates import Certificate
from lefschetzcalc.decomposition import (
    ComponentCount,
    Exactness,
    IndexGapReport,
    InvariantReport,
    invariant_report,
)
from lefschetzcalc.fibration_calculus import (
    AbstractLF,
    Cycle,
    CyclicShift,
    Destabilize,
    Direction,
    HomologyGroup,
    Hurwitz,
    Mode,
    Move,
    RewriteCycle,
    SmoothReplace,
    Stabilize,
    TwistWord,
)
from lefschetzcalc.plumbing_lattice import PlumbingError, PlumbingTree
from lefschetzcalc.search import DEFAULT_BLOCK_SEARCH_BUDGET, SearchBudget

if TYPE_CHECKING:
    from collections.abc import Sequence

Document: TypeAlias = dict[str, Any]

VERSION: Final = 1
KINDS: Final = ("fibration", "certificate", "report")
SH_MARKER: Final = "not implemented"


class DocumentError(ValueError):
    """Document does not parse or does not match its schema."""

    __slots__ = ()


def _get(body: Any, name: str, kind: type | tuple[type, ...]) -> Any:
    """Return field of a JSON object, checking its type.

    Raises DocumentError if body is not an object, the field is missing
    or has the wrong type.
    """
    if not isinstance(body, dict):
        raise DocumentError(f"Expected an object holding {name!r}")
    if name not in body:
        raise DocumentError(f"Missing field {name!r}")
    value = body[name]
    if isinstance(value, bool) and kind is int:
        raise DocumentError(f"Field {name!r} must be an integer")
    if not isinstance(value, kind):
        raise DocumentError(f"Field {name!r} has the wrong type")
    return value


def _int_list(value: Any, name: str) -> list[int]:
    if not isinstance(value, list) or not all(
        isinstance(item, int) and not isinstance(item, bool) for item in value
    ):
        raise DocumentError(f"{name} must be a list of integers")
    return value


# region: Fibrations


def word_to_document(word: TwistWord) -> list[list[int]]:
    """Return word as [vertex, exponent] runs."""
    runs: list[list[int]] = []
    for vertex, sign in word:
        if runs and runs[-1][0] == vertex and (runs[-1][1] > 0) == (sign > 0):
            runs[-1][1] += sign
        else:
            runs.append([vertex, sign])
    return runs


def word_from_document(runs: Any) -> TwistWord:
    """Return twist word from [vertex, exponent] runs.

    Raises DocumentError on a malformed run or zero exponent.
    """
    if not isinstance(runs, list):
        raise DocumentError("word must be a list of [vertex, exponent]")
    word: list[tuple[int, int]] = []
    for run in runs:
        entry = _int_list(run, "word entry")
        if len(entry) != 2 or entry[1] == 0:
            raise DocumentError(f"Bad word entry {run!r}")
        vertex, exponent = entry
        sign = 1 if exponent > 0 else -1
        word.extend([(vertex, sign)] * abs(exponent))
    return tuple(word)


def fibration_body(f: AbstractLF) -> Document:
    """Return the fields describing a fibration."""
    return {
        "n": f.sphere_dim,
        "fiber": {
            "vertices": f.fiber.vertex_count,
            "edges": [list(edge) for edge in f.fiber.canonical_edges()],
        },
        "cycles": [
            {"base": cycle.base, "word": word_to_document(cycle.word)}
            for cycle in f.cycles
        ],
    }


def cycle_from_document(body: Any) -> Cycle:
    """Return cycle from {base, word} object."""
    return Cycle(
        _get(body, "base", int),
        word_from_document(_get(body, "word", list)),
    )


def fibration_from_body(body: Any) -> AbstractLF:
    """Return fibration from its fields.

    Raises DocumentError if the fields do not describe a fibration.
    """
    fiber = _get(body, "fiber", dict)
    edges = [
        _int_list(edge, "edge") for edge in _get(fiber, "edges", list)
    ]
    cycles = tuple(
        cycle_from_document(item) for item in _get(body, "cycles", list)
    )
    try:
        tree = PlumbingTree.from_edges(
            _get(fiber, "vertices", int),
            edges,
            _get(body, "n", int),
        )
        return AbstractLF(tree, cycles)
    except PlumbingError as exc:
        raise DocumentError(f"Invalid fibration: {exc}") from exc


def fibration_to_document(f: AbstractLF) -> Document:
    """Return fibration document."""
    return {"kind": "fibration", "version": VERSION, **fibration_body(f)}


# endregion

# region: Moves and certificates


def move_to_document(move: Move) -> Document:
    """Return move object tagged by its kind."""
    body: Document = {"move": move.kind}
    match move:
        case CyclicShift(direction=direction):
            body["direction"] = direction.value
        case Hurwitz(position=position, direction=direction):
            body["position"] = position
            body["direction"] = direction.value
        case Stabilize(attach_to=vertex):
            body["attach_to"] = vertex
        case Destabilize(position=position):
            body["position"] = position
        case SmoothReplace(
            position=position,
            vertex=vertex,
            exponent=exponent,
        ):
            body["position"] = position
            body["vertex"] = vertex
            body["exponent"] = exponent
        case RewriteCycle(position=position, cycle=cycle, chain=chain):
            body["position"] = position
            body["cycle"] = {
                "base": cycle.base,
                "word": word_to_document(cycle.word),
            }
            body["chain"] = [word_to_document(word) for word in chain]
    return body


def _direction(body: Any) -> Direction:
    value = _get(body, "direction", str)
    try:
        return Direction(value)
    except ValueError:
        raise DocumentError(f"Unknown direction {value!r}") from None


def move_from_document(body: Any) -> Move:
    """Return move from its tagged object.

    Raises DocumentError for unknown kinds or missing fields.
    """
    kind = _get(body, "move", str)
    match kind:
        case "cyclic_shift":
            return CyclicShift(_direction(body))
        case "hurwitz":
            return Hurwitz(_get(body, "position", int), _direction(body))
        case "stabilize":
            return Stabilize(_get(body, "attach_to", int))
        case "destabilize":
            return Destabilize(_get(body, "position", int))
        case "smooth_replace":
            return SmoothReplace(
                _get(body, "position", int),
                _get(body, "vertex", int),
                _get(body, "exponent", int),
            )
        case "rewrite_cycle":
            return RewriteCycle(
                _get(body, "position", int),
                cycle_from_document(_get(body, "cycle", dict)),
                tuple(
                    word_from_document(word)
                    for word in _get(body, "chain", list)
                ),
            )
    raise DocumentError(f"Unknown move kind {kind!r}")


def certificate_to_document(cert: Certificate) -> Document:
    """Return certificate document."""
    return {
        "kind": "certificate",
        "version": VERSION,
        "mode": cert.mode.value,
        "start": fibration_body(cert.start),
        "steps": [move_to_document(move) for move in cert.steps],
        "end": fibration_body(cert.claimed_end),
        "provenance": cert.provenance,
    }


def certificate_from_document(doc: Document) -> Certificate:
    """Return certificate from its document."""
    mode = _get(doc, "mode", str)
    try:
        parsed_mode = Mode(mode)
    except ValueError:
        raise DocumentError(f"Unknown mode {mode!r}") from None
    return Certificate(
        parsed_mode,
        fibration_from_body(_get(doc, "start", dict)),
        tuple(move_from_document(move) for move in _get(doc, "steps", list)),
        fibration_from_body(_get(doc, "end", dict)),
        _get(doc, "provenance", str),
    )


# endregion

# region: Reports


def report_to_document(report: InvariantReport) -> Document:
    """Return report document."""
    components = report.components
    return {
        "kind": "report",
        "version": VERSION,
        "n": report.sphere_dim,
        "homology": [
            {
                "degree": group.degree,
                "rank": group.rank,
                "torsion": list(group.torsion),
            }
            for group in report.homology
        ],
        "euler_characteristic": report.euler_characteristic,
        "components": {
            "value": components.value,
            "exactness": components.exactness.value,
            "justification": components.justification,
            "vanishing": components.vanishing,
        },
        "index_gaps": [gap._asdict() for gap in report.index_gaps],
        "sh_comparison": SH_MARKER,
    }


def report_from_document(doc: Document) -> InvariantReport:
    """Return report from its document."""
    components = _get(doc, "components", dict)
    exactness = _get(components, "exactness", str)
    try:
        parsed = Exactness(exactness)
    except ValueError:
        raise DocumentError(f"Unknown exactness {exactness!r}") from None
    homology = tuple(
        HomologyGroup(
            _get(group, "degree", int),
            _get(group, "rank", int),
            tuple(_int_list(_get(group, "torsion", list), "torsion")),
        )
        for group in _get(doc, "homology", list)
    )
    gaps = tuple(
        IndexGapReport(
            _get(gap, "n", int),
            _get(gap, "k", int),
            _get(gap, "gap_max_min", int),
            _get(gap, "gap_min_max", int),
            _get(gap, "nonvanishing_certified", bool),
        )
        for gap in _get(doc, "index_gaps", list)
    )
    return InvariantReport(
        _get(doc, "n", int),
        homology,
        _get(doc, "euler_characteristic", int),
        ComponentCount(
            _get(components, "value", int),
            parsed,
            _get(components, "justification", str),
            _get(components, "vanishing", bool),
        ),
        gaps,
    )


# endregion

# region: Text


def _compact(doc: Document) -> bytes:
    return json.dumps(doc, sort_keys=True, separators=(",", ":")).encode(
        "utf-8",
    )


def digest_of(doc: Document) -> str:
    """Return hex SHA-256 of the compact sorted JSON of doc."""
    body = {key: value for key, value in doc.items() if key != "digest"}
    hasher = hashes.Hash(hashes.SHA256())
    hasher.update(_compact(body))
    return hasher.finalize().hex()


def dumps(doc: Document, digest: bool = True) -> str:
    """Return stable JSON text of doc, sorted keys, two space indent."""
    body = {key: value for key, value in doc.items() if key != "digest"}
    if digest:
        body["digest"] = digest_of(body)
    return json.dumps(body, sort_keys=True, indent=2) + "\n"


def decode_text(data: bytes | str) -> str:
    """Return document text from raw file bytes.

    Raises DocumentError if data is not UTF-8.
    """
    if isinstance(data, str):
        return data
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise DocumentError(f"Document is not UTF-8 text: {exc}") from exc


def loads(text: bytes | str, kinds: Sequence[str] = KINDS) -> Document:
    """Return document parsed from text or raw UTF-8 bytes.

    Raises DocumentError on undecodable bytes, bad JSON, unexpected kind
    or version, or a digest that does not match the content.
    """
    text = decode_text(text)
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"Not valid JSON: {exc}") from exc
    kind = _get(doc, "kind", str)
    if kind not in kinds:
        raise DocumentError(
            f"Expected a {' or '.join(kinds)} document, got {kind!r}",
        )
    version = _get(doc, "version", int)
    if version != VERSION:
        raise DocumentError(f"Unsupported document version {version}")
    if "digest" in doc and doc["digest"] != digest_of(doc):
        raise DocumentError("Document digest does not match its content")
    return dict(doc)


def load_fibration(text: bytes | str) -> AbstractLF:
    """Return fibration from document text."""
    return fibration_from_body(loads(text, ("fibration",)))


def load_certificate(text: bytes | str) -> Certificate:
    """Return certificate from document text."""
    return certificate_from_document(loads(text, ("certificate",)))


def load_report(text: bytes | str) -> InvariantReport:
    """Return invariant report from document text."""
    return report_from_document(loads(text, ("report",)))


def report_text(
    f: AbstractLF,
    budget: SearchBudget = DEFAULT_BLOCK_SEARCH_BUDGET,
) -> str:
    """Return invariant report document text of f."""
    return dumps(report_to_document(invariant_report(f, budget)))


# endregion


if __name__ == "__main__":  # pragma: nocover
    print(f"{__title__}\nProgrammed by {__author__}.")
