"""Tests for spectra and the Coxeter eigenvalue relation."""
from __future__ import annotations

import pytest

from carter_linkage.const import COXETER_TYPES
from carter_linkage.diagram import get_diagram, partial_cartan
from carter_linkage.exceptions import PreconditionError, ShapeError
from carter_linkage.linalg import RatMatrix
from carter_linkage.spectral import (
    coxeter_matrix,
    coxeter_relation_check,
    diagram_spectrum,
    spectra_equal,
    spectrum,
)


class TestSpectrum:
    """Tests for eigenvalues of symmetric matrices."""

    def test_a2(self):
        """Test A2 has eigenvalues 1 and 3."""
        report = spectrum(RatMatrix.parse("2 -1; -1 2"))
        assert report.eigenvalues == pytest.approx((1.0, 3.0))
        assert report.in_open_interval
        assert report.margin == pytest.approx(1.0)

    def test_asymmetric(self):
        """Test only symmetric matrices."""
        with pytest.raises(PreconditionError):
            spectrum(RatMatrix.parse("2 1; 0 2"))

    @pytest.mark.parametrize("name", ["D5", "D5(a1)", "D9(a3)", "E6(a2)", "E8"])
    def test_inside_interval(self, name):
        """Test every catalog spectrum lies in (0, 4)."""
        assert diagram_spectrum(get_diagram(name)).in_open_interval

    def test_to_json(self):
        """Test exported extremes."""
        data = spectrum(RatMatrix.parse("2 -1; -1 2")).to_json()
        assert data["min"] == pytest.approx(1.0)
        assert data["max"] == pytest.approx(3.0)

    def test_spectra_differ_in_class(self):
        """Test D4(a1) (2 ± √2 twice) and D4 (2 ± √3, 2, 2) differ."""
        a = partial_cartan(get_diagram("D4")).matrix
        b = partial_cartan(get_diagram("D4(a1)")).matrix
        assert spectra_equal(a, a)
        assert not spectra_equal(a, b)

    def test_spectra_shape(self):
        """Test matrices of different sizes."""
        with pytest.raises(ShapeError):
            spectra_equal(RatMatrix.parse("2"), RatMatrix.parse("2 -1; -1 2"))


class TestCoxeter:
    """Tests for the Coxeter relation."""

    @pytest.mark.parametrize("name", COXETER_TYPES)
    def test_relation(self, name):
        """Test λ + 2 + 1/λ = (ρ - 2)² on Dynkin diagrams."""
        report = coxeter_relation_check(get_diagram(name))
        assert report.passed
        assert len(report.coxeter_side) == len(report.cartan_side)

    def test_a1_coxeter(self):
        """Test the Coxeter element of A1 is -1."""
        assert coxeter_matrix(get_diagram("A1")).tolist() == [[-1.0]]

    def test_not_dynkin(self, d5_a1):
        """Test cycle diagrams are refused."""
        with pytest.raises(PreconditionError):
            coxeter_relation_check(d5_a1)
