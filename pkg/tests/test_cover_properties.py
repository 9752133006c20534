"""Tests for the deletion, leaf and expansion properties of minimum covers."""

from hypothesis import given, settings as hypothesis_settings

from tests.strategies import trees
from tree_spectra.cover.matching import CoverReport
from tree_spectra.cover.properties import check_cover_properties


def test_cover_properties_p4(p4):
    """Test every property on the three minimum covers of P4.

    Verifies the per-property instance counts: all three nonempty subsets
    of each two-vertex cover are deleted and expanded.
    """
    result = check_cover_properties(p4)

    assert result.passed
    assert result.covers_checked == 3
    assert not result.truncated
    assert result.checks == {"deletion": 9, "leaves": 3, "expansion": 9, "excluded_deletion": 0}


def test_cover_properties_p5(p5):
    """Test that deleting any always-excluded vertex of P5 keeps the cover size."""
    result = check_cover_properties(p5)

    assert result.passed
    assert result.covers_checked == 1
    assert result.checks["excluded_deletion"] == 3


def test_cover_properties_truncated(p4):
    result = check_cover_properties(p4, cap=1)

    assert result.truncated
    assert result.covers_checked == 1


def test_cover_properties_counterexample(p4, caplog):
    """Test that a wrong excluded set is reported as a counterexample.

    Verifies the failure is recorded verbatim and logged as a warning.
    """
    bogus = CoverReport(
        cover_size=2,
        witness_cover=frozenset({1, 2}),
        matching_size=2,
        witness_matching=frozenset({(0, 1), (2, 3)}),
        cover_union=frozenset({0, 2, 3}),
        always_excluded=frozenset({1}),
    )

    with caplog.at_level("WARNING"):
        result = check_cover_properties(p4, report=bogus)

    assert not result.passed
    assert all(c["property"] == "excluded_deletion" for c in result.counterexamples)
    assert result.counterexamples[0]["deleted"] == 1
    assert "Cover properties failed" in caplog.text


@hypothesis_settings(deadline=None, max_examples=40)
@given(trees(max_n=12))
def test_cover_properties_random(t):
    """Test that the properties hold on random trees."""
    assert check_cover_properties(t).passed
