"""Linkage systems of Carter diagrams in exact arithmetic."""

from __future__ import annotations

__version__ = "1.0.0"

from .diagram import CarterDiagram, get_diagram, homogeneous_class, partial_cartan, validate
from .exceptions import CarterLinkageError
from .gamma_set import GammaSet, LabelVector, find_gamma_set, label_vector
from .linkage import enumerate_full, enumerate_partial
from .root_system import AdeType, Root, RootSystem, generate

__all__ = [
    "__version__",
    "AdeType",
    "CarterDiagram",
    "CarterLinkageError",
    "GammaSet",
    "LabelVector",
    "Root",
    "RootSystem",
    "enumerate_full",
    "enumerate_partial",
    "find_gamma_set",
    "generate",
    "get_diagram",
    "homogeneous_class",
    "label_vector",
    "partial_cartan",
    "validate",
]
