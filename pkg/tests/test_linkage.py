"""Tests for linkage systems, the criterion, pairings and the size table."""
from __future__ import annotations

from fractions import Fraction

import pytest

from carter_linkage.const import (
    E8_D7_PAIR_COUNT,
    E8_D7_POSITIVE_PAIRS,
    EXPECTED_E_COMPONENT,
    EXPECTED_TOTALS,
)
from carter_linkage.diagram import catalog, get_diagram
from carter_linkage.exceptions import PreconditionError
from carter_linkage.linkage import (
    ComponentKind,
    ambient_candidates,
    criterion_check,
    e8_d7_pairs,
    enumerate_full,
    enumerate_partial,
    extension_root_coordinate,
    from_two_row,
    inverse_form_value,
    is_linkage_root,
    pairing_check,
    single_endpoint_admits,
    table_one,
    to_two_row,
    vertex_extension,
)
from carter_linkage.root_system import AdeType


class TestAmbients:
    """Tests for rank-(l+1) ambient selection."""

    def test_candidates_d5(self, d5):
        """Test D5 extends to A6, D6 and E6."""
        assert [str(t) for t in ambient_candidates(d5)] == ["A6", "D6", "E6"]

    def test_candidates_d7(self):
        """Test D7 extends to A8, D8 and E8."""
        assert [str(t) for t in ambient_candidates(get_diagram("D7"))] == ["A8", "D8", "E8"]

    def test_candidates_d4(self, d4):
        """Test there is no E5."""
        assert [str(t) for t in ambient_candidates(d4)] == ["A5", "D5"]

    def test_extension_rank_checked(self, d5):
        """Test the ambient must have rank l+1."""
        with pytest.raises(PreconditionError):
            vertex_extension(d5, AdeType("E", 7))

    def test_no_a_embedding(self, d5):
        """Test D5 does not embed in A6."""
        assert vertex_extension(d5, AdeType("A", 6)) is None
        assert enumerate_partial(d5, AdeType("A", 6)) == frozenset()


class TestInverseForm:
    """Tests for 𝓑∨ on labels."""

    def test_partial_labels_are_linkage_roots(self, d5_in_e6):
        """Test every E6 label of D5 has 𝓑∨ < 2."""
        for u in enumerate_partial(d5_in_e6.diagram, AdeType("E", 6)):
            assert is_linkage_root(d5_in_e6, u)
            assert inverse_form_value(d5_in_e6, u) == Fraction(5, 4)

    @pytest.mark.parametrize("vertex, admits", [(0, True), (1, False), (2, True), (3, False), (4, True)])
    def test_single_endpoint(self, d5_in_e6, vertex, admits):
        """Test b∨_ii < 2 on the D5 diagonal 5/4, 2, 5/4, 3, 1."""
        assert single_endpoint_admits(d5_in_e6, vertex) is admits


class TestEnumerate:
    """Tests for full linkage systems."""

    @pytest.mark.parametrize("l", sorted(EXPECTED_TOTALS))
    def test_totals(self, l):
        """Test the size of 𝓛(Γ) is the same over the whole class."""
        for d in catalog(f"D{l}"):
            assert len(enumerate_full(d).total) == EXPECTED_TOTALS[l], d.name

    @pytest.mark.parametrize("l", [8, 9])
    def test_totals_large(self, l):
        """Test 2l labels from rank 8 on."""
        assert len(enumerate_full(get_diagram(f"D{l}")).total) == 2 * l

    @pytest.mark.parametrize("l", sorted(EXPECTED_E_COMPONENT))
    def test_e_component(self, l):
        """Test the labels only E ambients produce."""
        components = enumerate_full(get_diagram(f"D{l}")).exclusive_components()
        assert len(components[ComponentKind.E]) == EXPECTED_E_COMPONENT[l]

    def test_d4_only_d(self, d4):
        """Test D4 has a D-component of 24 labels and nothing else."""
        components = enumerate_full(d4).exclusive_components()
        assert list(components) == [ComponentKind.D]
        assert len(components[ComponentKind.D]) == 24

    def test_d7_e8_contains_d8(self):
        """Test the E8 labels of D7 include all D8 labels."""
        system = enumerate_full(get_diagram("D7"))
        assert system.partials["D8"] <= system.partials["E8"]
        assert len(system.partials["E8"]) == 142

    def test_notes(self, d5):
        """Test ambients without an embedding are noted."""
        assert enumerate_full(d5).notes == {"A6": "no embedding"}

    def test_closed_under_negation(self, d5_a1):
        """Test -u is a label whenever u is."""
        total = enumerate_full(d5_a1).total
        assert all(-u in total for u in total)

    def test_to_json(self, d5):
        """Test the exported counts."""
        data = enumerate_full(d5).to_json()
        assert data["total"] == 42
        assert data["partials"]["E6"]["count"] == 32
        assert data["partials"]["D6"]["count"] == 10


class TestCriterion:
    """Tests for the exhaustive criterion over ambient roots."""

    @pytest.mark.parametrize("name", ["D4", "D5", "D5(a1)", "D6(a2)", "E6(a1)"])
    def test_criterion(self, name):
        """Test 𝓑∨ < 2 outside the span and = 2 inside."""
        report = criterion_check(get_diagram(name))
        assert report.results
        assert report.passed, [r.failures for r in report.results]

    def test_counts(self, d5):
        """Test the E6 result splits 72 roots into 32 outside and 40 inside."""
        result = next(r for r in criterion_check(d5).results if r.ambient == "E6")
        assert (result.roots_checked, result.outside, result.inside) == (72, 32, 40)

    def test_every_realization_checked(self, d4):
        """Test the D5 ambient of D4 is checked on all six realizations."""
        result = next(r for r in criterion_check(d4).results if r.ambient == "D5")
        assert result.realizations == 6
        assert result.passed


class TestPairing:
    """Tests for δ = μ_max - φ + τ in D_{l+1}."""

    @pytest.mark.parametrize("l", [4, 5, 6, 7, 8])
    def test_pairing(self, l):
        """Test every root outside D_l has a partner with the opposite label."""
        report = pairing_check(l)
        assert report.passed, report.failures
        assert report.checked == 4 * l

    @pytest.mark.parametrize("l", [3, 9])
    def test_out_of_range(self, l):
        """Test the checked range."""
        with pytest.raises(PreconditionError):
            pairing_check(l)


class TestE8D7:
    """Tests for the pairs of E8 roots over D7."""

    def test_pair_count(self):
        """Test 14 pairs, 7 positive."""
        pairs = e8_d7_pairs()
        assert len(pairs) == E8_D7_PAIR_COUNT
        assert sum(p.is_positive for p in pairs) == 7

    def test_positive_pairs(self):
        """Test the positive pairs in two-row layout."""
        positive = [p for p in e8_d7_pairs() if p.is_positive]
        got = tuple(
            (to_two_row(p.eta.coords), to_two_row(p.lam.coords), p.label.labels) for p in positive
        )
        assert got == E8_D7_POSITIVE_PAIRS

    def test_opposite_labels(self):
        """Test η∇ = -λ∇ for every pair."""
        for pair in e8_d7_pairs():
            assert pair.eta != -pair.lam
            assert extension_root_coordinate(pair.eta) + extension_root_coordinate(pair.lam) in (-4, 4)

    def test_two_row_layout(self):
        """Test layout conversion keeps τ2 last."""
        coords = (1, 2, 3, 4, 5, 6, 7, 8)
        assert to_two_row(coords) == (1, 3, 4, 5, 6, 7, 8, 2)
        assert from_two_row(to_two_row(coords)) == coords


class TestTable:
    """Tests for table rows."""

    def test_d5_rows(self):
        """Test both diagrams of C(D5) share one row shape."""
        rows = table_one((5,))
        assert [r.diagram for r in rows] == ["D5", "D5(a1)"]
        for row in rows:
            assert row.components == {"D": 10, "E": 32}
            assert row.orbit_sizes["E"] == (16, 16)
            assert row.p_values == {"D": (Fraction(1),), "E": (Fraction(5, 4),)}
            assert row.total == 42

    def test_d4_row(self):
        """Test D4 has three loctets."""
        row = table_one((4,))[0]
        assert row.orbit_sizes == {"D": (8, 8, 8)}
        assert row.total == 24
