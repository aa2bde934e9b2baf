"""Tests for dual reflections and W∨-orbits."""
from __future__ import annotations

import random
from fractions import Fraction

import pytest

from carter_linkage.const import EXPECTED_E_ORBIT_COUNT, EXPECTED_E_ORBIT_SIZE
from carter_linkage.diagram import get_diagram
from carter_linkage.dual_weyl import (
    DualReflection,
    apply_dual_word,
    contragredient_check,
    dual_reflect,
    duality_check,
    intertwining_check,
    orbit_dot,
    orbit_partition,
    random_word,
    transpose_identity_check,
)
from carter_linkage.exceptions import (
    ClosureViolationError,
    DimensionError,
    PreconditionError,
    ReflectionRangeError,
)
from carter_linkage.gamma_set import LabelVector
from carter_linkage.linkage import ComponentKind, enumerate_full


class TestDualReflect:
    """Tests for the case table of s*_τi."""

    def test_solid_neighbour_gains(self, d5):
        """Test α1 reflects onto its solid neighbour β1."""
        u = LabelVector((1, 0, 0, 0, 0))
        assert dual_reflect(d5, 0, u) == LabelVector((-1, 0, 0, 1, 0))

    def test_dotted_neighbour_loses(self, d5_a1):
        """Test α1 of D5(a1): solid to β1, dotted to β2."""
        u = LabelVector((1, 0, 0, 0, 0))
        assert dual_reflect(d5_a1, 0, u) == LabelVector((-1, 0, 1, -1, 0))

    def test_zero_entry_fixed(self, d5):
        """Test u_i = 0 leaves u unchanged."""
        u = LabelVector((0, 1, 0, 0, 0))
        assert dual_reflect(d5, 0, u) is u

    def test_involution(self, d5_a1):
        """Test s*_τi applied twice is the identity."""
        u = LabelVector((1, 0, 0, 0, 0))
        assert dual_reflect(d5_a1, 0, dual_reflect(d5_a1, 0, u)) == u

    def test_leaves_ternary_range(self, d5):
        """Test a neighbour entry reaching 2 is reported."""
        with pytest.raises(ReflectionRangeError):
            dual_reflect(d5, 0, LabelVector((1, 0, 0, 1, 0)))

    def test_dimension(self, d5):
        """Test the label length must match the diagram."""
        with pytest.raises(DimensionError):
            dual_reflect(d5, 0, LabelVector((1, 0)))

    def test_word_rightmost_first(self, d5):
        """Test w* applies the rightmost reflection first."""
        u = LabelVector((0, 0, 0, 1, 0))
        expected = dual_reflect(d5, 0, dual_reflect(d5, 3, u))
        assert apply_dual_word(d5, [0, 3], u) == expected

    def test_callable_reflection(self, d5):
        """Test DualReflection delegates to dual_reflect."""
        u = LabelVector((1, 0, 0, 0, 0))
        assert DualReflection(d5, 0)(u) == dual_reflect(d5, 0, u)


class TestOrbits:
    """Tests for orbit partitions."""

    def test_d4_loctets(self, d4):
        """Test D4 splits into three loctets with p = 1."""
        orbits = orbit_partition(d4, enumerate_full(d4).total)
        assert [o.size for o in orbits] == [8, 8, 8]
        assert all(o.is_loctet for o in orbits)
        assert {o.p for o in orbits} == {Fraction(1)}

    @pytest.mark.parametrize("l", sorted(EXPECTED_E_ORBIT_SIZE))
    def test_e_orbits(self, l):
        """Test the E-component splits into two equal orbits with p = l/4."""
        d = get_diagram(f"D{l}")
        labels = enumerate_full(d).exclusive_components()[ComponentKind.E]
        orbits = orbit_partition(d, labels)
        assert len(orbits) == EXPECTED_E_ORBIT_COUNT
        assert all(o.size == EXPECTED_E_ORBIT_SIZE[l] for o in orbits)
        assert all(o.p == Fraction(l, 4) for o in orbits)

    def test_orbits_sorted(self, d5_a1):
        """Test orbits are ordered by their smallest member."""
        orbits = orbit_partition(d5_a1, enumerate_full(d5_a1).total)
        firsts = [o.labels[0] for o in orbits]
        assert firsts == sorted(firsts)
        assert all(list(o.labels) == sorted(o.labels) for o in orbits)

    def test_not_closed(self, d5):
        """Test a set not closed under dual reflections."""
        with pytest.raises(ClosureViolationError):
            orbit_partition(d5, [LabelVector((1, 0, 0, 0, 0))])

    def test_to_json(self, d4):
        """Test orbit export."""
        data = orbit_partition(d4, enumerate_full(d4).total)[0].to_json()
        assert data["p"] == "1"
        assert data["size"] == 8
        assert len(data["labels"]) == 8

    def test_orbit_dot(self, d4):
        """Test the orbit graph source."""
        orbit = orbit_partition(d4, enumerate_full(d4).total)[0]
        text = orbit_dot(d4, orbit, "loctet")
        assert text.startswith('graph "loctet" {')
        assert "shape=box" in text
        assert text.count('[label="') >= 8


class TestMatrixIdentities:
    """Tests for the reflection identities in the Γ-set basis."""

    @pytest.mark.parametrize("name", ["D5", "D5(a1)", "E6(a2)"])
    def test_transpose_and_intertwining(self, name):
        """Test s* = ᵗs and B·s = s*·B for every vertex."""
        d = get_diagram(name)
        for i in range(d.rank):
            assert transpose_identity_check(d, i)
            assert intertwining_check(d, i)

    def test_contragredient(self, d5_a1):
        """Test w* = ᵗw⁻¹ for seeded random words."""
        rng = random.Random(7)
        for _ in range(20):
            assert contragredient_check(d5_a1, random_word(rng, d5_a1.rank, 6))

    def test_duality(self, d5_in_e6):
        """Test (wγ)∇ = w*·γ∇ in E6."""
        rng = random.Random(11)
        outside = d5_in_e6.outside_roots()
        for _ in range(20):
            gamma = rng.choice(outside)
            word = random_word(rng, d5_in_e6.rank, 6)
            assert duality_check(d5_in_e6, word, gamma)

    def test_duality_needs_outside_root(self, d5_in_e6):
        """Test roots of the span are refused."""
        with pytest.raises(PreconditionError):
            duality_check(d5_in_e6, [0], d5_in_e6.roots[1])

    def test_random_word_seeded(self):
        """Test the same seed gives the same word."""
        assert random_word(random.Random(3), 5, 6) == random_word(random.Random(3), 5, 6)
        assert all(0 <= i < 5 for i in random_word(random.Random(3), 5, 6))
