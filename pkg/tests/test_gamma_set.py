"""Tests for Γ-sets, label vectors and projections."""
from __future__ import annotations

from fractions import Fraction

import pytest

from carter_linkage.diagram import get_diagram, partial_cartan
from carter_linkage.exceptions import DimensionError, LabelRangeError, PreconditionError
from carter_linkage.gamma_set import (
    LabelVector,
    conjugate_partner,
    find_gamma_set,
    label_vector,
    linkage_diagram,
    normal_vector,
    project,
    realization_labels,
    realizations,
)
from carter_linkage.linalg import eval_form
from carter_linkage.linkage import d_in_d_gamma_set, e8_d7_gamma_set, e8_d7_pairs
from carter_linkage.root_system import AdeType, cartan_matrix, generate, maximal_root


class TestLabelVector:
    """Tests for ternary label vectors."""

    def test_entries_ternary(self):
        """Test entries outside {-1, 0, 1} are rejected."""
        with pytest.raises(LabelRangeError) as err:
            LabelVector((0, 2, 0))
        assert err.value.index == 1
        assert err.value.value == 2

    def test_negation(self):
        """Test -u flips every entry."""
        assert -LabelVector((1, 0, -1)) == LabelVector((-1, 0, 1))

    def test_str(self):
        """Test the printed form."""
        assert str(LabelVector((1, 0, -1))) == "(1,0,-1)"


class TestFindGammaSet:
    """Tests for embedding diagrams in root systems."""

    def test_d5_in_e6(self, d5, d5_in_e6):
        """Test the Gram matrix of the found roots is B_Γ."""
        assert d5_in_e6.b == partial_cartan(d5).matrix
        assert d5_in_e6.determinant == 4
        assert d5_in_e6.rank == 5

    def test_outside_roots(self, d5_in_e6):
        """Test 72 - 40 roots lie outside span(D5)."""
        assert len(d5_in_e6.outside_roots()) == 32

    def test_cycle_in_own_class(self, d5_a1, d5_a1_in_d5):
        """Test D5(a1) embeds in D5."""
        assert d5_a1_in_d5.b == partial_cartan(d5_a1).matrix

    def test_no_embedding(self):
        """Test D4 does not embed in A4."""
        assert find_gamma_set(get_diagram("D4"), generate(AdeType("A", 4))) is None

    def test_e6_a2_in_e6(self):
        """Test the grid diagram embeds in E6."""
        d = get_diagram("E6(a2)")
        g = find_gamma_set(d, generate(AdeType("E", 6)))
        assert g is not None
        assert g.b == partial_cartan(d).matrix


class TestLabels:
    """Tests for labels of roots outside the span."""

    def test_outside_labels_ternary(self, d5_in_e6):
        """Test every root outside the span has a ternary label."""
        for gamma in d5_in_e6.outside_roots():
            assert all(x in (-1, 0, 1) for x in label_vector(d5_in_e6, gamma))

    def test_gamma_root_label(self, d5_in_e6):
        """Test τ_i itself has a ±2 entry."""
        with pytest.raises(LabelRangeError):
            label_vector(d5_in_e6, d5_in_e6.roots[0])

    def test_projection_norm(self, d5_in_e6):
        """Test 𝓑(μ) > 0 for the normal part of roots outside the span."""
        for gamma in d5_in_e6.outside_roots():
            data = project(d5_in_e6, label_vector(d5_in_e6, gamma))
            assert 0 < data.mu_norm_sq <= 2
            assert data.inverse_form_value < 2

    def test_projection_reconstructs_label(self, d5_in_e6):
        """Test B_Γ·γ_L gives back γ∇."""
        for gamma in d5_in_e6.outside_roots():
            label = label_vector(d5_in_e6, gamma)
            assert d5_in_e6.b.apply(project(d5_in_e6, label).gamma_l) == label.labels

    def test_forms(self, d5_in_e6):
        """Test 𝓑 and 𝓑∨ are built on B_Γ and its inverse."""
        assert d5_in_e6.inverse_form.matrix == d5_in_e6.b_inverse
        assert d5_in_e6.inverse_form.inverse().matrix == d5_in_e6.form.matrix
        assert d5_in_e6.inverse_form([1, 0, 0, 0, 0]) == Fraction(5, 4)

    def test_normal_vector(self, d5_in_e6):
        """Test μ = γ - γ_L is orthogonal to the Γ-set with 𝓑(μ) from the projection."""
        cartan = cartan_matrix(d5_in_e6.ambient.type)
        for gamma in d5_in_e6.outside_roots():
            gamma_l, mu = normal_vector(d5_in_e6, gamma)
            assert tuple(a + b for a, b in zip(gamma_l, mu)) == gamma.coords
            c_mu = cartan.apply(mu)
            assert all(sum(x * y for x, y in zip(c_mu, tau.coords)) == 0 for tau in d5_in_e6.roots)
            assert eval_form(cartan, mu) == project(d5_in_e6, label_vector(d5_in_e6, gamma)).mu_norm_sq

    def test_project_dimension(self, d5_in_e6):
        """Test label length must match the rank."""
        with pytest.raises(DimensionError):
            project(d5_in_e6, (1, 0))

    def test_conjugate_partner_needs_outside_root(self, d5_in_e6):
        """Test roots of the span are refused."""
        with pytest.raises(PreconditionError):
            conjugate_partner(d5_in_e6, d5_in_e6.roots[0])

    def test_conjugate_partner_none_for_d5_in_e6(self, d5_in_e6):
        """Test the 32 labels of D5 in E6 are carried by one root each."""
        assert all(conjugate_partner(d5_in_e6, gamma) is None for gamma in d5_in_e6.outside_roots())

    def test_conjugate_partner_of_extension_root(self):
        """Test the simple root extending D6 to D7 is paired with -μ_max."""
        g = d_in_d_gamma_set(6)
        extension = g.ambient.simple_roots[0]
        assert conjugate_partner(g, extension) == -maximal_root(g.ambient)

    def test_conjugate_partner_e8_over_d7(self):
        """Test η is paired with -λ for every E8 pair with η∇ = -λ∇."""
        g = e8_d7_gamma_set()
        for pair in e8_d7_pairs():
            assert conjugate_partner(g, pair.eta) == -pair.lam


class TestRealizations:
    """Tests for the images of a Γ-set under subsystem automorphisms."""

    def test_d5_in_e6_two_realizations(self, d5_in_e6):
        """Test the D5 diagram symmetry gives a second realization."""
        found = realizations(d5_in_e6)
        assert len(found) == 2
        assert all(g.b == d5_in_e6.b for g in found)

    def test_union_of_labels(self, d4):
        """Test D4 in D5: one realization gives 8 labels, all six give 24."""
        witness = find_gamma_set(d4, generate(AdeType("D", 5)))
        found = realizations(witness)
        single = realization_labels(witness)
        union = set().union(*(realization_labels(g) for g in found))
        assert len(found) == 6
        assert len(single) == 8
        assert len(union) == 24
        assert single < union

    def test_bound_per_realization(self, d4):
        """Test |Φ(D5)| - |Φ(D4)| bounds each realization but not the union."""
        witness = find_gamma_set(d4, generate(AdeType("D", 5)))
        bound = 40 - 24
        found = realizations(witness)
        assert all(len(realization_labels(g)) <= bound for g in found)
        assert len(set().union(*(realization_labels(g) for g in found))) > bound

    def test_d5_in_e6_single_realization_suffices(self, d5_in_e6):
        """Test the witness alone already carries the 32 E6 labels."""
        single = realization_labels(d5_in_e6)
        union = set().union(*(realization_labels(g) for g in realizations(d5_in_e6)))
        assert len(single) == 32
        assert single == union
        assert all(not u.is_zero for u in union)


class TestLinkageDiagram:
    """Tests for diagrams extended by a linkage root."""

    def test_extension(self, d5):
        """Test γ joins the vertices of its nonzero label entries."""
        d = linkage_diagram(d5, (1, 0, 0, -1, 0))
        assert d.rank == 6
        assert d.name == "D5+γ(1,0,0,-1,0)"
        assert d.sign(0, 5) == 1
        assert d.sign(3, 5) == -1

    def test_extension_dimension(self, d5):
        """Test the label length is checked."""
        with pytest.raises(DimensionError):
            linkage_diagram(d5, (1, 0))
