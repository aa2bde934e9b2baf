"""Validation schemas for CLI options and JSON inputs."""

from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Any

import voluptuous as vol

from .const import (
    ALL_SUITES,
    CONF_CRITERION_DIAGRAMS,
    CONF_FORMAT,
    CONF_NAME,
    CONF_OUT,
    CONF_SAMPLES,
    CONF_SEED,
    CONF_SUITES,
    CONF_WHAT,
    DEFAULT_SAMPLES,
    DEFAULT_SEED,
    EDGE_DOTTED,
    EDGE_SOLID,
    EXPORT_FORMATS,
    EXPORT_SUPPORT,
    FORMAT_JSON,
)
from .diagram import CarterDiagram
from .exceptions import ParseError
from .linalg import RatMatrix

_LOGGER = logging.getLogger(__name__)


def _export_format_supported(options: dict[str, Any]) -> dict[str, Any]:
    supported = EXPORT_SUPPORT[options[CONF_WHAT]]
    if options[CONF_FORMAT] not in supported:
        raise vol.Invalid(
            f"{options[CONF_WHAT]} supports {', '.join(supported)}, not {options[CONF_FORMAT]}",
            path=[CONF_FORMAT],
        )
    return options


def _unique_names(data: dict[str, Any]) -> dict[str, Any]:
    names = list(data["alpha"]) + list(data["beta"])
    if len(set(names)) != len(names):
        raise vol.Invalid("vertex names must be unique", path=["alpha"])
    return data


VERIFY_OPTIONS_SCHEMA = vol.Schema({
    vol.Required(CONF_SUITES): vol.All([vol.In(ALL_SUITES)], vol.Length(min=1)),
    vol.Optional(CONF_CRITERION_DIAGRAMS, default=list): [str],
    vol.Optional(CONF_SAMPLES, default=DEFAULT_SAMPLES): vol.All(
        vol.Coerce(int), vol.Range(min=1)
    ),
    vol.Optional(CONF_SEED, default=DEFAULT_SEED): vol.Coerce(int),
})

EXPORT_OPTIONS_SCHEMA = vol.All(
    vol.Schema({
        vol.Required(CONF_WHAT): vol.In(sorted(EXPORT_SUPPORT)),
        vol.Required(CONF_NAME): vol.All(str, vol.Length(min=1)),
        vol.Optional(CONF_FORMAT, default=FORMAT_JSON): vol.In(EXPORT_FORMATS),
        vol.Optional(CONF_OUT, default=None): vol.Any(None, str),
    }),
    _export_format_supported,
)

DIAGRAM_SCHEMA = vol.All(
    vol.Schema(
        {
            vol.Required("name"): vol.All(str, vol.Length(min=1)),
            vol.Required("alpha"): [str],
            vol.Required("beta"): [str],
            vol.Required("edges"): [
                vol.ExactSequence([
                    vol.All(int, vol.Range(min=0)),
                    vol.All(int, vol.Range(min=0)),
                    vol.In((EDGE_SOLID, EDGE_DOTTED)),
                ])
            ],
        },
        extra=vol.ALLOW_EXTRA,
    ),
    _unique_names,
)


def validate_verify_options(options: dict[str, Any]) -> dict[str, Any]:
    return VERIFY_OPTIONS_SCHEMA(options)


def validate_export_options(options: dict[str, Any]) -> dict[str, Any]:
    return EXPORT_OPTIONS_SCHEMA(options)


def _read_json(path: str | Path) -> Any:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as err:
        raise ParseError(f"{path}: {err}") from err


def load_diagram(path: str | Path) -> CarterDiagram:
    """Read a diagram file in the export schema.

    Raises:
        vol.Invalid: the JSON does not follow the diagram schema
        InvalidDiagramError: edges do not fit the listed vertices
    """
    data = DIAGRAM_SCHEMA(_read_json(path))
    diagram = CarterDiagram.from_json(data)
    _LOGGER.debug("Loaded diagram %s from %s", diagram.name, path)
    return diagram


def load_matrix(path: str | Path) -> RatMatrix:
    """Read a matrix file: rows separated by newlines or ``;``, entries by spaces."""
    text = Path(path).read_text(encoding="utf-8")
    rows = [line.strip() for line in text.replace(";", "\n").splitlines()]
    return RatMatrix.parse("; ".join(row for row in rows if row and not row.startswith("#")))
