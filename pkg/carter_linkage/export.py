"""JSON, DOT and CSV emitters for the objects the CLI can export."""

from __future__ import annotations

import csv
import io
import json
import logging
from collections.abc import Iterable
from pathlib import Path

from .const import (
    CATALOG_D_RANKS,
    EXPORT_DIAGRAM,
    EXPORT_GAMMA,
    EXPORT_LINKAGE,
    EXPORT_ORBITS,
    EXPORT_ROOTS,
    EXPORT_SUPPORT,
    EXPORT_TABLE1,
    EXPORT_TRANSITION,
    FAMILY_D,
    FORMAT_CSV,
    FORMAT_DOT,
    FORMAT_JSON,
)
from .diagram import CarterDiagram, get_diagram, partial_cartan, to_dot
from .dual_weyl import orbit_dot, orbit_partition
from .exceptions import PreconditionError, UnknownDiagramError
from .gamma_set import GammaSet, find_gamma_set
from .linalg import eval_form, format_rational
from .linkage import ComponentKind, TableRow, enumerate_full, table_one
from .root_system import AdeType, generate
from .transition import chain

_LOGGER = logging.getLogger(__name__)

TRANSITION_SEPARATOR = ":"


def dump_json(data: object) -> str:
    """Stable JSON text: two-space indent, unicode kept, trailing newline."""
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


def own_gamma_set(d: CarterDiagram) -> GammaSet:
    """A Γ-set of ``d`` inside the root system of its homogeneous class."""
    if d.class_type is None:
        raise PreconditionError(f"{d.name} has no homogeneous class")
    g = find_gamma_set(d, generate(d.class_type))
    if g is None:
        raise PreconditionError(f"{d.name} does not embed in {d.class_type}")
    return g


def orbits_json(d: CarterDiagram) -> dict:
    system = enumerate_full(d)
    return {
        "base": d.name,
        "components": {
            kind.value: [o.to_json() for o in orbit_partition(d, labels)]
            for kind, labels in system.exclusive_components().items()
        },
    }


def orbits_dot(d: CarterDiagram) -> str:
    """One graph per orbit, concatenated."""
    system = enumerate_full(d)
    graphs = []
    for kind, labels in system.exclusive_components().items():
        for number, orbit in enumerate(orbit_partition(d, labels), start=1):
            graphs.append(orbit_dot(d, orbit, f"{d.name} {kind.value}{number}"))
    return "".join(graphs)


def linkage_csv(d: CarterDiagram) -> str:
    """One row per label of 𝓛(d): the components it occurs in, entries, 𝓑∨."""
    system = enumerate_full(d)
    b_inverse = partial_cartan(d).inverse
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["components", *d.vertices, "inverse_form"])
    for u in sorted(system.total):
        kinds = "".join(k.value for k in ComponentKind if u in system.component(k))
        writer.writerow([kinds, *u.labels, format_rational(eval_form(b_inverse, u.labels))])
    return buffer.getvalue()


def table_row_json(row: TableRow) -> dict:
    return {
        "diagram": row.diagram,
        "components": row.components,
        "orbit_sizes": {k: list(v) for k, v in row.orbit_sizes.items()},
        "p": {k: [format_rational(p) for p in v] for k, v in row.p_values.items()},
        "total": row.total,
    }


def table_csv(rows: Iterable[TableRow]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["diagram", "D", "E", "orbits_D", "orbits_E", "p_D", "p_E", "total"])
    for row in rows:
        writer.writerow(
            [
                row.diagram,
                row.components.get("D", 0),
                row.components.get("E", 0),
                " ".join(map(str, row.orbit_sizes.get("D", ()))),
                " ".join(map(str, row.orbit_sizes.get("E", ()))),
                " ".join(format_rational(p) for p in row.p_values.get("D", ())),
                " ".join(format_rational(p) for p in row.p_values.get("E", ())),
                row.total,
            ]
        )
    return buffer.getvalue()


def table_ranks(name: str) -> tuple[int, ...]:
    """``all`` for every catalog rank, otherwise a class name such as ``D5``."""
    if name.strip().lower() == "all":
        return CATALOG_D_RANKS
    t = AdeType.parse(name)
    if t.family != FAMILY_D:
        raise UnknownDiagramError(f"the linkage table covers D-type classes, not {t}")
    return (t.rank,)


def transition_json(name: str) -> dict:
    """``FROM:TO`` names a chain inside one homogeneous class."""
    source_name, sep, target_name = name.partition(TRANSITION_SEPARATOR)
    if not sep:
        raise PreconditionError(f"transition export needs FROM{TRANSITION_SEPARATOR}TO, got {name!r}")
    source, target = get_diagram(source_name), get_diagram(target_name)
    steps = chain(source, target)
    return {
        "from": source.name,
        "to": target.name,
        "found": steps is not None,
        "chain": [step.to_json() for step in steps or []],
    }


def render(what: str, name: str, fmt: str) -> str:
    """Text of one exportable object."""
    if fmt not in EXPORT_SUPPORT.get(what, ()):
        raise PreconditionError(f"{what} cannot be exported as {fmt}")
    if what == EXPORT_ROOTS:
        return dump_json(generate(AdeType.parse(name)).to_json())
    if what == EXPORT_TABLE1:
        rows = table_one(table_ranks(name))
        if fmt == FORMAT_CSV:
            return table_csv(rows)
        return dump_json([table_row_json(row) for row in rows])
    if what == EXPORT_TRANSITION:
        return dump_json(transition_json(name))
    d = get_diagram(name)
    if what == EXPORT_DIAGRAM:
        return to_dot(d) if fmt == FORMAT_DOT else dump_json(d.to_json())
    if what == EXPORT_GAMMA:
        return dump_json(own_gamma_set(d).to_json())
    if what == EXPORT_LINKAGE:
        return linkage_csv(d) if fmt == FORMAT_CSV else dump_json(enumerate_full(d).to_json())
    if what == EXPORT_ORBITS:
        return orbits_dot(d) if fmt == FORMAT_DOT else dump_json(orbits_json(d))
    raise PreconditionError(f"unknown export {what!r}")


def export(what: str, name: str, fmt: str = FORMAT_JSON, out: str | Path | None = None) -> str:
    """Render and, when ``out`` is given, write the text to that file."""
    text = render(what, name, fmt)
    if out is not None:
        Path(out).write_text(text, encoding="utf-8")
        _LOGGER.info("Wrote %s %s as %s to %s", what, name, fmt, out)
    return text
