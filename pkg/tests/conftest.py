"""Pytest fixtures for Carter linkage tests."""
from __future__ import annotations

import json

import pytest

from carter_linkage.diagram import CarterDiagram, get_diagram
from carter_linkage.gamma_set import GammaSet, find_gamma_set
from carter_linkage.root_system import AdeType, RootSystem, generate
from carter_linkage.runner import VerificationRunner


@pytest.fixture(scope="session")
def d4() -> CarterDiagram:
    """D4 Dynkin diagram from the catalog."""
    return get_diagram("D4")


@pytest.fixture(scope="session")
def d5() -> CarterDiagram:
    """D5 Dynkin diagram: leaves and the chain end in α, the branch node β1."""
    return get_diagram("D5")


@pytest.fixture(scope="session")
def d5_a1() -> CarterDiagram:
    """D5(a1): square α1-β1-α2-β2 with β2 dotted to α1, tail β3 on α2."""
    return get_diagram("D5(a1)")


@pytest.fixture(scope="session")
def e6() -> RootSystem:
    """Root system of type E6."""
    return generate(AdeType("E", 6))


@pytest.fixture(scope="session")
def d5_in_e6(d5, e6) -> GammaSet:
    """A Γ-set of D5 inside E6."""
    g = find_gamma_set(d5, e6)
    assert g is not None
    return g


@pytest.fixture(scope="session")
def d5_a1_in_d5(d5_a1) -> GammaSet:
    """A Γ-set of D5(a1) inside its own class D5."""
    g = find_gamma_set(d5_a1, generate(AdeType("D", 5)))
    assert g is not None
    return g


@pytest.fixture
def runner() -> VerificationRunner:
    """Runner with a single cheap suite selected."""
    return VerificationRunner({"suites": ["spectrum"]})


@pytest.fixture
def diagram_file(tmp_path, d5_a1):
    """D5(a1) written in the export schema."""
    path = tmp_path / "d5a1.json"
    path.write_text(json.dumps(d5_a1.to_json()), encoding="utf-8")
    return path


@pytest.fixture
def matrix_file(tmp_path):
    """A2 with a positive off-diagonal entry, one row per line."""
    path = tmp_path / "form.txt"
    path.write_text("# unit form\n2 1\n1 2\n", encoding="utf-8")
    return path
