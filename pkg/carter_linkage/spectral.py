"""Floating point spectra of (partial) Cartan matrices and Coxeter elements.

This is the only module that leaves exact arithmetic.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from .const import COXETER_TOLERANCE, SPECTRUM_LOWER, SPECTRUM_TOLERANCE, SPECTRUM_UPPER
from .diagram import CarterDiagram, partial_cartan
from .exceptions import PreconditionError, ShapeError
from .linalg import RatMatrix

_LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class SpectrumReport:
    eigenvalues: tuple[float, ...]
    tolerance: float = SPECTRUM_TOLERANCE

    @property
    def minimum(self) -> float:
        return self.eigenvalues[0]

    @property
    def maximum(self) -> float:
        return self.eigenvalues[-1]

    @property
    def margin(self) -> float:
        """Distance of the spectrum from the boundary of (0, 4)."""
        return min(self.minimum - SPECTRUM_LOWER, SPECTRUM_UPPER - self.maximum)

    @property
    def in_open_interval(self) -> bool:
        return self.margin > self.tolerance

    def to_json(self) -> dict:
        return {
            "eigenvalues": list(self.eigenvalues),
            "min": self.minimum,
            "max": self.maximum,
            "in_open_interval": self.in_open_interval,
            "tolerance": self.tolerance,
        }


@dataclass(frozen=True)
class CoxeterReport:
    """Both sides of λ + 2 + 1/λ = (ρ - 2)², sorted."""

    name: str
    coxeter_side: tuple[float, ...]
    cartan_side: tuple[float, ...]
    max_modulus_error: float
    tolerance: float = COXETER_TOLERANCE

    @property
    def max_deviation(self) -> float:
        return max(
            (abs(a - b) for a, b in zip(self.coxeter_side, self.cartan_side)), default=0.0
        )

    @property
    def passed(self) -> bool:
        return (
            len(self.coxeter_side) == len(self.cartan_side)
            and self.max_deviation <= self.tolerance
            and self.max_modulus_error <= self.tolerance
        )


def _float_array(m: RatMatrix) -> np.ndarray:
    return m.to_array().astype(float)


def _eigenvalues(m: RatMatrix) -> np.ndarray:
    if not m.is_symmetric:
        raise PreconditionError("spectrum needs a symmetric matrix")
    return np.sort(np.linalg.eigvalsh(_float_array(m)))


def spectrum(b: RatMatrix) -> SpectrumReport:
    """Eigenvalues of a symmetric matrix, ascending."""
    return SpectrumReport(tuple(float(x) for x in _eigenvalues(b)))


def diagram_spectrum(d: CarterDiagram) -> SpectrumReport:
    report = spectrum(partial_cartan(d).matrix)
    _LOGGER.debug("%s: spectrum in [%.6f, %.6f]", d.name, report.minimum, report.maximum)
    return report


def coxeter_matrix(d: CarterDiagram) -> np.ndarray:
    """Product s_1·s_2···s_n of the simple reflections, in simple-root coordinates."""
    cartan = np.array(d.gram_rows(), dtype=float)
    n = d.rank
    product = np.eye(n)
    for i in range(n):
        reflection = np.eye(n)
        reflection[i, :] -= cartan[i, :]
        product = product @ reflection
    return product


def coxeter_relation_check(d: CarterDiagram) -> CoxeterReport:
    """Match {λ + 2 + 1/λ} over Coxeter eigenvalues with {(ρ - 2)²} over Cartan eigenvalues."""
    if not d.is_dynkin:
        raise PreconditionError(f"{d.name} is not a Dynkin diagram")
    lambdas = np.linalg.eigvals(coxeter_matrix(d))
    rhos = _eigenvalues(partial_cartan(d).matrix)
    left = np.sort((lambdas + 2 + 1 / lambdas).real)
    right = np.sort((rhos - 2) ** 2)
    report = CoxeterReport(
        d.name,
        tuple(float(x) for x in left),
        tuple(float(x) for x in right),
        float(np.max(np.abs(np.abs(lambdas) - 1))),
    )
    _LOGGER.debug("%s: Coxeter relation deviation %.3g", d.name, report.max_deviation)
    return report


def spectra_equal(b1: RatMatrix, b2: RatMatrix) -> bool:
    """Sorted spectra agree within the spectrum tolerance."""
    if b1.shape != b2.shape:
        raise ShapeError(f"cannot compare spectra of {b1.shape} and {b2.shape}")
    return bool(np.allclose(_eigenvalues(b1), _eigenvalues(b2), rtol=0, atol=SPECTRUM_TOLERANCE))
