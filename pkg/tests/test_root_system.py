"""Tests for ADE root system generation."""
from __future__ import annotations

import pytest

from carter_linkage.exceptions import AmbientMismatchError, InvalidTypeError, ParseError
from carter_linkage.linalg import det
from carter_linkage.root_system import (
    AdeType,
    cartan_matrix,
    generate,
    in_span,
    inner,
    maximal_root,
)


class TestAdeType:
    """Tests for type tags."""

    def test_parse_case_insensitive(self):
        """Test lower-case tags parse."""
        assert AdeType.parse("d5") == AdeType("D", 5)
        assert str(AdeType.parse("E8")) == "E8"

    def test_parse_rejects(self):
        """Test malformed tags."""
        with pytest.raises(ParseError):
            AdeType.parse("F4")

    @pytest.mark.parametrize("family, rank", [("D", 3), ("E", 5), ("E", 9), ("A", 0)])
    def test_invalid_types(self, family, rank):
        """Test combinations that are not simply-laced Dynkin types."""
        with pytest.raises(InvalidTypeError):
            AdeType(family, rank)

    def test_try_make(self):
        """Test try_make swallows invalid combinations."""
        assert AdeType.try_make("E", 5) is None
        assert AdeType.try_make("E", 6) == AdeType("E", 6)


class TestGenerate:
    """Tests for root closure."""

    @pytest.mark.parametrize(
        "tag, count",
        [("A1", 2), ("A4", 20), ("D4", 24), ("D5", 40), ("D8", 112), ("E6", 72), ("E7", 126), ("E8", 240)],
    )
    def test_root_counts(self, tag, count):
        """Test the number of roots."""
        t = AdeType.parse(tag)
        assert len(generate(t)) == count
        assert t.root_count == count

    @pytest.mark.parametrize("tag, value", [("A3", 4), ("D6", 4), ("E6", 3), ("E7", 2), ("E8", 1)])
    def test_cartan_determinant(self, tag, value):
        """Test det of the Cartan matrix."""
        t = AdeType.parse(tag)
        assert det(cartan_matrix(t)) == value
        assert t.cartan_determinant == value

    def test_every_root_has_norm_two(self, e6):
        """Test (γ, γ) = 2 for every root."""
        assert all(e6.gram_array[i, i] == 2 for i in range(len(e6)))

    def test_roots_sorted_and_symmetric(self, e6):
        """Test roots are sorted and closed under negation."""
        assert list(e6.roots) == sorted(e6.roots)
        assert all(e6.contains((-r).coords) for r in e6.roots)

    def test_e8_maximal_root(self):
        """Test the maximal root of E8 in Bourbaki numbering."""
        assert maximal_root(generate(AdeType("E", 8))).coords == (2, 3, 4, 6, 5, 4, 3, 2)

    def test_d5_maximal_root(self):
        """Test the maximal root of D5."""
        assert maximal_root(generate(AdeType("D", 5))).coords == (1, 2, 2, 1, 1)

    def test_maximal_root_dominant(self, e6):
        """Test the maximal root has no negative inner product with a simple root."""
        mu = maximal_root(e6)
        assert all(inner(mu, s) >= 0 for s in e6.simple_roots)

    def test_reflect_mirror(self, e6):
        """Test s_α(α) = -α."""
        alpha = e6.simple_roots[0]
        assert e6.reflect(alpha, alpha) == -alpha

    def test_index_unknown(self, e6):
        """Test looking up a non-root."""
        with pytest.raises(KeyError):
            e6.index((5, 0, 0, 0, 0, 0))

    def test_to_json(self):
        """Test exported root lists."""
        data = generate(AdeType("A", 2)).to_json()
        assert data["type"] == "A2"
        assert data["count"] == 6
        assert data["cartan"] == [[2, -1], [-1, 2]]


class TestInner:
    """Tests for inner products and spans."""

    def test_inner_simple(self, e6):
        """Test adjacent simple roots pair to -1."""
        simple = e6.simple_roots
        # Bourbaki: 1 - 3 - 4 - 5 - 6 with 2 on 4
        assert inner(simple[0], simple[2]) == -1
        assert inner(simple[1], simple[3]) == -1
        assert inner(simple[0], simple[1]) == 0

    def test_inner_mismatch(self, e6):
        """Test roots of different systems cannot be paired."""
        other = generate(AdeType("D", 6)).simple_roots[0]
        with pytest.raises(AmbientMismatchError):
            inner(e6.simple_roots[0], other)

    def test_in_span(self, e6):
        """Test span membership."""
        simple = e6.simple_roots
        assert in_span(e6.root((1, 0, 1, 0, 0, 0)), simple[:3])
        assert not in_span(simple[5], simple[:3])
