"""Verification suites behind the ``verify`` command."""

from .base import BaseSuite, SuiteResult
from .criterion import CriterionSuite
from .dual import DualSuite
from .e8d7 import E8D7Suite
from .pairing import PairingSuite
from .reduce_all import ReduceAllSuite
from .spectrum import SpectrumSuite
from .table1 import Table1Suite
from .transitions import TransitionsSuite

SUITE_HANDLERS: dict[str, type[BaseSuite]] = {
    handler.suite_name: handler
    for handler in (
        CriterionSuite,
        DualSuite,
        E8D7Suite,
        PairingSuite,
        ReduceAllSuite,
        SpectrumSuite,
        Table1Suite,
        TransitionsSuite,
    )
}

__all__ = [
    "BaseSuite",
    "SuiteResult",
    "SUITE_HANDLERS",
    "CriterionSuite",
    "DualSuite",
    "E8D7Suite",
    "PairingSuite",
    "ReduceAllSuite",
    "SpectrumSuite",
    "Table1Suite",
    "TransitionsSuite",
]
