"""Command line interface: ``carter-linkage <command> ...``."""

from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Sequence
from typing import Any

import voluptuous as vol

from . import __version__
from .config import load_diagram, load_matrix, validate_export_options
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
    E_RANKS,
    EXIT_FAILURE,
    EXIT_OK,
    EXIT_USAGE,
    EXPORT_FORMATS,
    EXPORT_SUPPORT,
    FAMILY_D,
    FORMAT_JSON,
    MAX_RANK,
    MIN_RANK,
)
from .diagram import CarterDiagram, get_diagram, homogeneous_class, partial_cartan
from .dual_weyl import orbit_partition
from .exceptions import CarterLinkageError
from .export import dump_json, export
from .flation import UnitForm, ovsienko_reduce
from .linalg import format_rational
from .linkage import enumerate_full, enumerate_partial
from .root_system import AdeType
from .runner import VerificationRunner
from .transition import chain, verify_transition

_LOGGER = logging.getLogger(__name__)

# verify flag -> suite name
_SUITE_FLAGS = {name: name.replace("-", "_") for name in ALL_SUITES}


def _emit(args: argparse.Namespace, text: str, data: Any) -> None:
    sys.stdout.write(dump_json(data) if args.json else text.rstrip("\n") + "\n")


def _diagram(args: argparse.Namespace) -> CarterDiagram:
    if getattr(args, "diagram_file", None):
        return load_diagram(args.diagram_file)
    if not args.name:
        raise CarterLinkageError("a diagram name or --diagram-file is required")
    return get_diagram(args.name)


def _class_names() -> list[str]:
    names = [f"D{l}" for l in range(MIN_RANK[FAMILY_D], MAX_RANK + 1)]
    return names + [f"E{l}" for l in E_RANKS]


def cmd_catalog(args: argparse.Namespace) -> int:
    classes = [homogeneous_class(name) for name in ([args.cls] if args.cls else _class_names())]
    data = {f"C({c.dynkin})": list(c.members) for c in classes}
    lines = [f"{key}: {', '.join(members)}" for key, members in data.items()]
    _emit(args, "\n".join(lines), data)
    return EXIT_OK


def cmd_gram(args: argparse.Namespace) -> int:
    d = _diagram(args)
    b = partial_cartan(d)
    text = (
        f"B_Γ of {d.name} ({', '.join(d.vertices)}):\n{b.matrix.to_text()}\n\n"
        f"B_Γ⁻¹:\n{b.inverse.to_text()}\n\ndet = {format_rational(b.determinant)}"
    )
    data = {
        "name": d.name,
        "vertices": list(d.vertices),
        "gram": b.matrix.to_text_rows(),
        "inverse": b.inverse.to_text_rows(),
        "determinant": format_rational(b.determinant),
    }
    _emit(args, text, data)
    return EXIT_OK


def _orbit_lines(d: CarterDiagram) -> tuple[list[str], dict]:
    lines = []
    data = {}
    for kind, labels in enumerate_full(d).exclusive_components().items():
        orbits = orbit_partition(d, labels)
        data[kind.value] = [o.to_json() for o in orbits]
        for o in orbits:
            tag = " (loctet)" if o.is_loctet else ""
            lines.append(f"  {kind.value}: {o.size} labels, p = {format_rational(o.p)}{tag}")
    return lines, data


def cmd_linkage(args: argparse.Namespace) -> int:
    d = _diagram(args)
    if args.ambient:
        ambient = AdeType.parse(args.ambient)
        labels = enumerate_partial(d, ambient)
        _emit(
            args,
            f"𝓛_{ambient}({d.name}): {len(labels)} labels",
            {"base": d.name, "ambient": str(ambient), "labels": [u.to_list() for u in sorted(labels)]},
        )
        return EXIT_OK
    system = enumerate_full(d)
    lines = [f"Linkage system of {d.name}"]
    lines += [f"  {name}: {len(labels)}" for name, labels in sorted(system.partials.items())]
    lines += [f"  {name}: {note}" for name, note in sorted(system.notes.items())]
    lines.append(f"  total: {len(system.total)}")
    data = system.to_json()
    if args.orbits:
        orbit_lines, data["orbits"] = _orbit_lines(d)
        lines += ["Orbits", *orbit_lines]
    _emit(args, "\n".join(lines), data)
    return EXIT_OK


def cmd_orbits(args: argparse.Namespace) -> int:
    d = _diagram(args)
    lines, data = _orbit_lines(d)
    _emit(args, "\n".join([f"W∨-orbits of {d.name}", *lines]), {"base": d.name, "components": data})
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    suites = [name for name, dest in _SUITE_FLAGS.items() if getattr(args, dest) not in (None, False)]
    if args.all or not suites:
        suites = list(ALL_SUITES)
    options = {
        CONF_SUITES: suites,
        CONF_CRITERION_DIAGRAMS: args.criterion or [],
        CONF_SAMPLES: args.samples,
        CONF_SEED: args.seed,
    }
    report = VerificationRunner(options).run()
    _emit(args, report.to_text(), report.to_json(timings=args.timings))
    return EXIT_OK if report.passed else EXIT_FAILURE


def cmd_reduce(args: argparse.Namespace) -> int:
    if args.matrix:
        form, name = UnitForm(load_matrix(args.matrix)), args.matrix
    else:
        d = _diagram(args)
        form, name = UnitForm.of(d), d.name
    result = ovsienko_reduce(form)
    text = (
        f"{name} reduces to {' + '.join(result.type_names)} "
        f"after {len(result.steps)} inflations\n"
        f"steps: {' '.join(map(str, result.steps)) or '-'}\n"
        f"certificate T:\n{result.certificate.to_text()}"
    )
    _emit(args, text, {"input": name, **result.to_json()})
    return EXIT_OK


def cmd_transition(args: argparse.Namespace) -> int:
    source, target = get_diagram(args.source), get_diagram(args.target)
    steps = chain(source, target)
    if steps is None:
        _emit(args, f"no transition chain {source.name} -> {target.name}", {"found": False})
        return EXIT_FAILURE
    lines = [f"{source.name} -> {target.name}: {len(steps)} step(s)"]
    data = {"found": True, "chain": []}
    ok = True
    for step in steps:
        report = verify_transition(step)
        ok = ok and report.passed
        lines.append(
            f"  {step.name}: vertex {step.moved_vertex + 1}, t = {list(step.coefficients)}, "
            f"{'verified' if report.passed else 'FAILED ' + ', '.join(report.failures)}"
        )
        lines.append("  M =\n" + "\n".join("    " + row for row in step.matrix.to_text().splitlines()))
        data["chain"].append({**step.to_json(), "checks": report.checks})
    _emit(args, "\n".join(lines), data)
    return EXIT_OK if ok else EXIT_FAILURE


def cmd_export(args: argparse.Namespace) -> int:
    options = validate_export_options(
        {CONF_WHAT: args.what, CONF_NAME: args.name, CONF_FORMAT: args.format, CONF_OUT: args.out}
    )
    text = export(options[CONF_WHAT], options[CONF_NAME], options[CONF_FORMAT], options[CONF_OUT])
    if options[CONF_OUT] is None:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="carter-linkage",
        description="Linkage systems, dual Weyl orbits and transitions of Carter diagrams.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    common.add_argument("-q", "--quiet", action="store_true", help="warnings only")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("catalog", parents=[common], help="list homogeneous classes and their diagrams")
    p.add_argument("cls", nargs="?", help="class such as D5 or C(D5)")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("gram", parents=[common], help="print B_Γ and its inverse")
    p.add_argument("name", nargs="?")
    p.add_argument("--diagram-file")
    p.set_defaults(func=cmd_gram)

    p = sub.add_parser("linkage", parents=[common], help="linkage system sizes")
    p.add_argument("name", nargs="?")
    p.add_argument("--diagram-file")
    p.add_argument("--ambient", help="restrict to one ambient, e.g. E6")
    p.add_argument("--orbits", action="store_true", help="add the W∨-orbit decomposition")
    p.set_defaults(func=cmd_linkage)

    p = sub.add_parser("orbits", parents=[common], help="W∨-orbits of the linkage system")
    p.add_argument("name", nargs="?")
    p.add_argument("--diagram-file")
    p.set_defaults(func=cmd_orbits)

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    for name, dest in _SUITE_FLAGS.items():
        if name != "criterion":
            p.add_argument(f"--{name}", dest=dest, action="store_true")
    p.add_argument(
        "--criterion", nargs="*", metavar="NAME", help="criterion check (all D-type diagrams by default)"
    )
    p.add_argument("--all", action="store_true")
    p.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--timings", action="store_true", help="add durations and the action history to --json")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("reduce", parents=[common], help="Ovsienko reduction of a unit form")
    p.add_argument("name", nargs="?")
    source = p.add_mutually_exclusive_group()
    source.add_argument("--matrix", help="matrix file, rows by newline or ';'")
    source.add_argument("--diagram-file")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("transition", parents=[common], help="transition chain between two diagrams of one class")
    p.add_argument("source", metavar="FROM")
    p.add_argument("target", metavar="TO")
    p.set_defaults(func=cmd_transition)

    p = sub.add_parser("export", parents=[common], help="write JSON, DOT or CSV")
    p.add_argument("what", choices=sorted(EXPORT_SUPPORT))
    p.add_argument("name", help="diagram, type, class (table1: D5 or all) or FROM:TO")
    p.add_argument("--format", choices=EXPORT_FORMATS, default=FORMAT_JSON)
    p.add_argument("--out")
    p.set_defaults(func=cmd_export)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return EXIT_OK if err.code in (0, None) else EXIT_USAGE
    level = logging.DEBUG if args.verbose else logging.WARNING if args.quiet else logging.INFO
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    try:
        return args.func(args)
    except vol.Invalid as err:
        _LOGGER.error("Invalid input: %s", err)
        return EXIT_USAGE
    except CarterLinkageError as err:
        _LOGGER.error("%s", err)
        return EXIT_USAGE
    except OSError as err:
        _LOGGER.error("%s", err)
        return EXIT_FAILURE
