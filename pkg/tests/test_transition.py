"""Tests for transition matrices inside a homogeneous class."""
from __future__ import annotations

import pytest

from carter_linkage.diagram import get_diagram, partial_cartan
from carter_linkage.exceptions import PreconditionError
from carter_linkage.linalg import RatMatrix, congruent, det
from carter_linkage.linkage import enumerate_full
from carter_linkage.transition import (
    CHECK_FRAME,
    CHECK_LABEL_TRANSPORT,
    chain,
    chain_frame,
    find_transition,
    similarity_transition,
    transport,
    verify_transition,
)


class TestFindTransition:
    """Tests for single-step transitions."""

    def test_d5_a1_to_d5(self, d5_a1):
        """Test a Γ-set of D5(a1) moves to one of D5."""
        steps = chain(d5_a1, get_diagram("D5"))
        assert steps is not None and len(steps) == 1
        step = steps[0]
        assert step.to_set.b == partial_cartan(get_diagram("D5")).matrix
        assert det(step.matrix) == -1
        assert step.matrix @ step.matrix == RatMatrix.identity(5)
        assert not step.is_degenerate

    def test_frame_congruence(self, d5_a1):
        """Test ᵗF·B_from·F = B_to."""
        step = chain(d5_a1, get_diagram("D5"))[0]
        assert congruent(step.frame, step.from_set.b) == step.to_set.b

    def test_rank_mismatch(self, d5_in_e6):
        """Test diagrams of different ranks."""
        with pytest.raises(PreconditionError):
            find_transition(d5_in_e6, get_diagram("D6"))

    def test_to_json(self, d5_a1):
        """Test exported indices are 1-based."""
        step = chain(d5_a1, get_diagram("D5"))[0]
        data = step.to_json()
        assert data["from"] == "D5(a1)"
        assert data["to"] == "D5"
        assert 1 <= data["moved_vertex"] <= 5
        assert sorted(data["witness"]["perm"]) == [1, 2, 3, 4, 5]


class TestVerify:
    """Tests for verify_transition."""

    @pytest.mark.parametrize(
        "source, target",
        [("D4(a1)", "D4"), ("D5(a1)", "D5"), ("D6(a1)", "D6"), ("D6(a2)", "D6")],
    )
    def test_chain_verifies(self, source, target):
        """Test every step of a chain passes all checks, labels included."""
        steps = chain(get_diagram(source), get_diagram(target))
        assert steps
        for step in steps:
            report = verify_transition(step)
            assert report.passed, report.failures
            assert report.checks[CHECK_LABEL_TRANSPORT]
            assert report.from_total == report.to_total

    def test_transport_onto_source(self, d5_a1):
        """Test transported labels of D5 are exactly those of D5(a1)."""
        step = chain(d5_a1, get_diagram("D5"))[0]
        carried = {transport(step, u) for u in enumerate_full(get_diagram("D5")).total}
        assert carried == set(enumerate_full(d5_a1).total)


class TestSimilarity:
    """Tests for the degenerate transitions L_τ."""

    def test_sign_flip(self, d5_a1_in_d5):
        """Test L_τ toggles the edges at τ and keeps the identities."""
        step = similarity_transition(d5_a1_in_d5, 0)
        assert step.is_degenerate
        assert step.to_set.diagram.name == "L1·D5(a1)"
        assert step.to_set.diagram.sign(0, 3) == -1
        report = verify_transition(step, labels=False)
        assert report.passed, report.failures
        assert report.checks[CHECK_FRAME]

    def test_vertex_range(self, d5_a1_in_d5):
        """Test the vertex index is checked."""
        with pytest.raises(PreconditionError):
            similarity_transition(d5_a1_in_d5, 5)


class TestChain:
    """Tests for chains of transitions."""

    def test_equal_diagrams(self, d5):
        """Test a diagram needs no transition to itself."""
        assert chain(d5, d5) == []

    def test_other_class(self, d5):
        """Test diagrams of different classes."""
        with pytest.raises(PreconditionError):
            chain(d5, get_diagram("D6(a1)"))

    def test_chain_frame(self):
        """Test the product of frames carries B_source to B_target."""
        source, target = get_diagram("D6(a2)"), get_diagram("D6")
        steps = chain(source, target)
        frame = chain_frame(steps, 6)
        assert congruent(frame, steps[0].from_set.b) == steps[-1].to_set.b

    def test_empty_chain_frame(self):
        """Test the empty product is the identity."""
        assert chain_frame([], 4) == RatMatrix.identity(4)
