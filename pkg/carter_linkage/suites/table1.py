"""Linkage system sizes, component sizes and orbit structure of C(D_l)."""

from __future__ import annotations

import logging
from fractions import Fraction

from ..const import (
    CATALOG_D_RANKS,
    D5_INVERSE_SCALE,
    D5_INVERSE_SCALED,
    EXPECTED_E_COMPONENT,
    EXPECTED_E_ORBIT_COUNT,
    EXPECTED_E_ORBIT_SIZE,
    EXPECTED_TOTALS,
    LOCTET_SIZE,
    SUITE_TABLE1,
)
from ..diagram import d_catalog, get_diagram, partial_cartan
from ..export import table_row_json
from ..linalg import RatMatrix
from ..linkage import ComponentKind, TableRow, enumerate_full, table_row
from .base import BaseSuite, SuiteResult

_LOGGER = logging.getLogger(__name__)

# D4 has three D5-realizations related by triality, one loctet each
D4_LOCTETS = 3


def expected_total(l: int) -> int:
    return EXPECTED_TOTALS.get(l, 2 * l)


def expected_d_component(l: int) -> int:
    return D4_LOCTETS * LOCTET_SIZE if l == 4 else 2 * l


class Table1Suite(BaseSuite):
    """Reproduce the table of linkage system sizes for every catalog D-type diagram."""

    suite_name = SUITE_TABLE1

    def run(self) -> SuiteResult:
        result = self.new_result()
        self._check_d5_inverse(result)
        rows = []
        for d in d_catalog(CATALOG_D_RANKS):
            l = d.rank
            row = table_row(d)
            rows.append(table_row_json(row))
            result.check(
                row.total == expected_total(l),
                f"{d.name}: total {row.total}, expected {expected_total(l)}",
            )
            d_size = row.components.get(ComponentKind.D.value, 0)
            result.check(
                d_size == expected_d_component(l),
                f"{d.name}: D-component {d_size}, expected {expected_d_component(l)}",
            )
            result.check(
                row.p_values.get(ComponentKind.D.value) == (Fraction(1),),
                f"{d.name}: D-orbit p values {row.p_values.get(ComponentKind.D.value)}",
            )
            if l == 4:
                result.check(
                    row.orbit_sizes.get(ComponentKind.D.value) == (LOCTET_SIZE,) * D4_LOCTETS,
                    f"{d.name}: D-orbits {row.orbit_sizes.get(ComponentKind.D.value)}",
                )
            if l in EXPECTED_E_COMPONENT:
                self._check_e_component(result, d.name, l, row)
            if l == 7:
                system = enumerate_full(d)
                result.check(
                    system.component(ComponentKind.D) <= system.component(ComponentKind.E),
                    f"{d.name}: D8 labels are not all E8 labels",
                )
            self._log_action(f"{d.name}: total {row.total}", f"components {row.components}")
        result.details["rows"] = rows
        return result

    def _check_e_component(self, result: SuiteResult, name: str, l: int, row: TableRow) -> None:
        e_size = row.components.get(ComponentKind.E.value, 0)
        result.check(
            e_size == EXPECTED_E_COMPONENT[l],
            f"{name}: E-component {e_size}, expected {EXPECTED_E_COMPONENT[l]}",
        )
        expected_orbits = (EXPECTED_E_ORBIT_SIZE[l],) * EXPECTED_E_ORBIT_COUNT
        result.check(
            row.orbit_sizes.get(ComponentKind.E.value) == expected_orbits,
            f"{name}: E-orbits {row.orbit_sizes.get(ComponentKind.E.value)}, expected {expected_orbits}",
        )
        result.check(
            row.p_values.get(ComponentKind.E.value) == (Fraction(l, 4),),
            f"{name}: E-orbit p values {row.p_values.get(ComponentKind.E.value)}, expected {l}/4",
        )

    def _check_d5_inverse(self, result: SuiteResult) -> None:
        printed = RatMatrix.from_rows(D5_INVERSE_SCALED).scale(Fraction(1, D5_INVERSE_SCALE))
        result.check(
            partial_cartan(get_diagram("D5")).inverse == printed,
            "D5: inverse partial Cartan matrix differs from the printed one",
        )
