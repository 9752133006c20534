"""Tests for the JSON analysis document and its schema."""

import json
from pathlib import Path

import jsonschema
import pytest

from tree_spectra.cli.document import SCHEMA_VERSION, build_document
from tree_spectra.verify.analysis import TreeAnalysis
from tree_spectra.verify.engine import verify_all
from tree_spectra.verify.report import CheckRecord, VerificationReport

SCHEMA_PATH = Path(__file__).resolve().parents[1] / "docs" / "analysis-document.schema.json"


@pytest.fixture(scope="module")
def schema():
    """The published analysis-document schema."""
    return json.loads(SCHEMA_PATH.read_text())


def _document(t, **kwargs):
    analysis = TreeAnalysis(t)
    return build_document(analysis, verify_all(t, analysis=analysis), **kwargs)


@pytest.mark.parametrize("fixture", ["single_edge", "p5", "star5", "double_star_22", "spider"])
def test_document_matches_schema(schema, request, fixture):
    """Test that documents of the fixture trees validate and survive JSON."""
    document = _document(request.getfixturevalue(fixture))

    jsonschema.validate(document, schema)
    assert json.loads(json.dumps(document)) == document


def test_document_with_vectors_and_seed(schema, p4):
    """Test the optional eigenvectors and seed echo."""
    document = _document(p4, with_vectors=True, seed=17)

    jsonschema.validate(document, schema)
    assert document["seed"] == 17
    assert len(document["spectrum"]["eigenvectors"]) == 4
    assert document["schema_version"] == SCHEMA_VERSION


def test_document_p4_contents(p4):
    """Test covers, polynomial and separation fields of P4."""
    document = _document(p4)

    assert document["covers"]["cover_union"] == [0, 1, 2, 3]
    assert document["covers"]["always_excluded"] == []
    assert document["covers"]["witness_matching"] == [[0, 1], [2, 3]]
    assert document["matching_polynomial"] == {
        "n": 4,
        "coefficients": {"0": "1", "1": "5/4", "2": "1/4"},
        "multiplicity_of_one": 0,
    }
    assert [c["cover"] for c in document["separation"]["per_cover"]][0] == [1, 2]
    assert document["separation"]["lambda_bar"] == pytest.approx(0.5)
    assert document["tool"]["name"] == "tree-spectra"


def test_document_failed_verification(schema, double_star_22):
    """Test that failed records are carried into the document."""
    record = CheckRecord(theorem="interlacing", tolerances={"interlace_tol": 1e-8})
    record.fail("quotient spectrum of [0, 1] does not interlace")

    document = build_document(TreeAnalysis(double_star_22), VerificationReport(n=6, records=[record]))

    jsonschema.validate(document, schema)
    assert document["verification"]["passed"] is False
    assert document["verification"]["records"][0]["notes"] == ["quotient spectrum of [0, 1] does not interlace"]


def test_schema_rejects_float_coefficients(schema, p4):
    """Test that coefficients must be exact rational strings."""
    document = _document(p4)
    document["matching_polynomial"]["coefficients"]["1"] = 1.25

    with pytest.raises(jsonschema.ValidationError):
        jsonschema.validate(document, schema)
