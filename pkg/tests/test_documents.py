from __future__ import annotations

import json
from typing import TYPE_CHECKING

import pytest

from lefschetzcalc import catalog
from lefschetzcalc.certificates import Certificate, x_to_a_milnor, z_split
from lefschetzcalc.decomposition import invariant_report
from lefschetzcalc.documents import (
    SH_MARKER,
    DocumentError,
    certificate_to_document,
    digest_of,
    dumps,
    fibration_to_document,
    load_certificate,
    load_fibration,
    load_report,
    loads,
    move_from_document,
    move_to_document,
    report_text,
    report_to_document,
    word_from_document,
    word_to_document,
)
from lefschetzcalc.fibration_calculus import (
    AbstractLF,
    Cycle,
    CyclicShift,
    Direction,
    Hurwitz,
    Mode,
    RewriteCycle,
    SmoothReplace,
    Stabilize,
)
from lefschetzcalc.plumbing_lattice import PlumbingTree

if TYPE_CHECKING:
    from lefschetzcalc.fibration_calculus import Move


def test_word_runs() -> None:
    word = ((1, 1), (1, 1), (2, -1), (1, -1))
    runs = word_to_document(word)
    assert runs == [[1, 2], [2, -1], [1, -1]]
    assert word_from_document(runs) == word


def test_word_sign_change_splits_run() -> None:
    assert word_to_document(((3, 1), (3, -1))) == [[3, 1], [3, -1]]


@pytest.mark.parametrize(
    ("runs", "message"),
    [
        ({"vertex": 1}, r"^word must be a list"),
        ([[1, 0]], r"^Bad word entry \[1, 0\]$"),
        ([[1, 2, 3]], r"^Bad word entry"),
        ([[1, True]], r"^word entry must be a list of integers$"),
    ],
)
def test_bad_words(runs: object, message: str) -> None:
    with pytest.raises(DocumentError, match=message):
        word_from_document(runs)


def test_fibration_document_shape() -> None:
    doc = fibration_to_document(catalog.build_X(1, 2))
    assert doc["kind"] == "fibration"
    assert doc["version"] == 1
    assert doc["n"] == 2
    assert doc["fiber"] == {"vertices": 2, "edges": [[1, 2]]}
    assert doc["cycles"][3] == {"base": 2, "word": [[1, 2]]}


@pytest.mark.parametrize(
    "f",
    [
        catalog.build_X(2, 4),
        catalog.build_P_Tmj(4, 2, 3),
        AbstractLF(
            PlumbingTree.from_edges(4, [(1, 2), (2, 3), (2, 4)], 2),
            (Cycle(1, ((4, 1), (3, -1))), Cycle(2)),
        ),
    ],
)
def test_fibration_text(f: AbstractLF) -> None:
    assert load_fibration(dumps(fibration_to_document(f))) == f


@pytest.mark.parametrize(
    "move",
    [
        CyclicShift(Direction.LEFT),
        Hurwitz(3, Direction.RIGHT),
        Stabilize(2),
        SmoothReplace(4, 1, -2),
        RewriteCycle(1, Cycle(1), (((4, 1),),)),
    ],
)
def test_move_documents(move: Move) -> None:
    assert move_from_document(move_to_document(move)) == move


def test_move_errors() -> None:
    with pytest.raises(DocumentError, match=r"^Unknown move kind 'twist'"):
        move_from_document({"move": "twist"})
    with pytest.raises(DocumentError, match=r"^Unknown direction 'up'"):
        move_from_document({"move": "cyclic_shift", "direction": "up"})
    with pytest.raises(DocumentError, match=r"^Missing field 'position'"):
        move_from_document({"move": "destabilize"})


@pytest.mark.parametrize(
    "cert",
    [x_to_a_milnor(1, 2), z_split((1,), 1, 2, 2)],
)
def test_certificate_text(cert: Certificate) -> None:
    text = dumps(certificate_to_document(cert))
    assert load_certificate(text) == cert


def test_certificate_unknown_mode() -> None:
    doc = certificate_to_document(x_to_a_milnor(1, 2))
    doc["mode"] = "contact"
    with pytest.raises(DocumentError, match=r"^Unknown mode 'contact'"):
        load_certificate(dumps(doc))


def test_report_text() -> None:
    y1 = catalog.build_Y(1, 2)
    text = report_text(y1)
    assert load_report(text) == invariant_report(y1)
    assert json.loads(text)["sh_comparison"] == SH_MARKER


def test_report_document_fields() -> None:
    doc = report_to_document(invariant_report(catalog.build_Y(1, 2)))
    assert doc["components"]["value"] == 2
    assert doc["components"]["exactness"] == "exact"
    assert doc["homology"][3] == {"degree": 3, "rank": 3, "torsion": []}
    assert doc["index_gaps"][0] == {
        "n": 2,
        "k": 1,
        "gap_max_min": 4,
        "gap_min_max": 2,
        "nonvanishing_certified": True,
    }


def test_report_unknown_exactness() -> None:
    doc = report_to_document(invariant_report(catalog.build_Y(1, 2)))
    doc["components"]["exactness"] = "probably"
    with pytest.raises(DocumentError, match=r"^Unknown exactness"):
        load_report(dumps(doc))


def test_dumps_is_stable() -> None:
    doc = fibration_to_document(catalog.build_Y(1, 2))
    text = dumps(doc)
    assert text.endswith("}\n")
    assert text == dumps(json.loads(text))
    parsed = json.loads(text)
    assert parsed["digest"] == digest_of(doc)
    assert len(parsed["digest"]) == 64
    assert list(parsed) == sorted(parsed)


def test_digest_ignores_digest_field() -> None:
    doc = fibration_to_document(catalog.build_Y(1, 2))
    assert digest_of(doc) == digest_of({**doc, "digest": "0" * 64})


def test_tampered_digest() -> None:
    parsed = json.loads(dumps(fibration_to_document(catalog.build_Y(1, 2))))
    parsed["n"] = 4
    with pytest.raises(DocumentError, match=r"^Document digest does not"):
        load_fibration(json.dumps(parsed))


def test_missing_digest_is_accepted() -> None:
    y1 = catalog.build_Y(1, 2)
    text = dumps(fibration_to_document(y1), digest=False)
    assert "digest" not in json.loads(text)
    assert load_fibration(text) == y1


def test_bool_is_not_an_integer() -> None:
    doc = fibration_to_document(catalog.build_Y(1, 2))
    doc["n"] = True
    with pytest.raises(DocumentError, match=r"^Field 'n' must be an integer"):
        load_fibration(dumps(doc))


@pytest.mark.parametrize(
    ("text", "message"),
    [
        ("{", r"^Not valid JSON"),
        ("[]", r"^Expected an object holding 'kind'"),
        ('{"kind": "fibration"}', r"^Missing field 'version'"),
        ('{"kind": "fibration", "version": 2}', r"^Unsupported document"),
        ('{"kind": "certificate", "version": 1}', r"^Expected a fibration"),
        ('{"kind": 3, "version": 1}', r"^Field 'kind' has the wrong type"),
    ],
)
def test_loads_errors(text: str, message: str) -> None:
    with pytest.raises(DocumentError, match=message):
        loads(text, ("fibration",))


def test_loads_bytes() -> None:
    y1 = catalog.build_Y(1, 2)
    data = dumps(fibration_to_document(y1)).encode("utf-8")
    assert load_fibration(data) == y1


@pytest.mark.parametrize("data", [b"\xff\xfe{}", b'{"kind": "\xc3"}'])
def test_loads_rejects_non_utf8(data: bytes) -> None:
    with pytest.raises(DocumentError, match=r"^Document is not UTF-8 text"):
        loads(data)


def test_invalid_fibration_body() -> None:
    doc = fibration_to_document(catalog.build_Y(1, 2))
    doc["fiber"]["edges"] = []
    with pytest.raises(DocumentError, match=r"^Invalid fibration: A tree"):
        load_fibration(dumps(doc))


def test_certificate_mode_survives() -> None:
    cert = z_split((), 1, 1, 2)
    assert load_certificate(dumps(certificate_to_document(cert))).mode is (
        Mode.SMOOTH
    )
