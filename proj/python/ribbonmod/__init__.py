"""Exact invariants, existence predicates and dimension formulas for sheaves on ribbons."""

from ._ribbonmod import *  # noqa: F401,F403
from ._ribbonmod import DomainError, IntegralityError, run_cli  # noqa: F401

__version__ = "0.1.0"
