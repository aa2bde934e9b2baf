"""Spectra of catalog matrices and the Coxeter eigenvalue relation."""

from __future__ import annotations

import logging

from ..const import (
    CATALOG_D_RANKS,
    CATALOG_SPECTRUM_MARGIN,
    COXETER_TYPES,
    E_RANKS,
    MAX_RANK,
    SPECTRUM_TOLERANCE,
    SUITE_SPECTRUM,
)
from ..diagram import CarterDiagram, catalog, get_diagram, partial_cartan
from ..spectral import coxeter_relation_check, diagram_spectrum, spectra_equal
from .base import BaseSuite, SuiteResult

_LOGGER = logging.getLogger(__name__)


def spectrum_catalog() -> list[CarterDiagram]:
    """A1..A9, every D-type class up to rank 9 and the E classes."""
    out = [get_diagram(f"A{l}") for l in range(1, MAX_RANK + 1)]
    for l in CATALOG_D_RANKS:
        out += catalog(f"D{l}")
    for l in E_RANKS:
        out += catalog(f"E{l}")
    return out


class SpectrumSuite(BaseSuite):
    """Eigenvalues strictly inside (0, 4); λ + 2 + 1/λ = (ρ - 2)² on Dynkin diagrams.

    Equality of spectra within a homogeneous class is only reported.
    """

    suite_name = SUITE_SPECTRUM

    def run(self) -> SuiteResult:
        result = self.new_result()
        extremes = {}
        same_spectrum = {}
        for d in spectrum_catalog():
            report = diagram_spectrum(d)
            extremes[d.name] = [report.minimum, report.maximum]
            result.check(
                report.margin > CATALOG_SPECTRUM_MARGIN,
                f"{d.name}: spectrum [{report.minimum:.9f}, {report.maximum:.9f}] touches (0, 4)",
            )
            trace = sum(report.eigenvalues)
            result.check(
                abs(trace - 2 * d.rank) <= SPECTRUM_TOLERANCE * d.rank * 10,
                f"{d.name}: eigenvalue sum {trace} differs from {2 * d.rank}",
            )
            if not d.is_dynkin and d.class_type is not None:
                dynkin = get_diagram(str(d.class_type))
                same = spectra_equal(partial_cartan(d).matrix, partial_cartan(dynkin).matrix)
                same_spectrum[d.name] = same
                if not same:
                    _LOGGER.warning("%s and %s have different spectra", d.name, dynkin.name)
        for name in COXETER_TYPES:
            report = coxeter_relation_check(get_diagram(name))
            result.check(
                report.passed,
                f"{name}: Coxeter relation deviation {report.max_deviation:.3g}, "
                f"modulus error {report.max_modulus_error:.3g}",
            )
        result.details["extremes"] = extremes
        result.details["same_spectrum_as_dynkin"] = same_spectrum
        self._log_action(
            f"Spectra of {len(extremes)} diagrams", f"Coxeter relation on {len(COXETER_TYPES)} types"
        )
        return result
