"""Exact Brieskorn lattice computations for Laurent polynomials."""

import json
from fractions import Fraction

from ._core import (
    BudgetExceeded,
    Error,
    HypothesisError,
    ParseError,
    UsageError,
    milnor_number,
    newton_number,
    normalize,
)
from ._core import run as _run

__all__ = [
    "BudgetExceeded",
    "Error",
    "HypothesisError",
    "ParseError",
    "UsageError",
    "analyze",
    "milnor_number",
    "newton_number",
    "normalize",
    "rational",
    "run",
]


def run(command, job, h=None):
    """Run a pipeline command; `job` is a dict or a JSON string. Returns the report as a dict."""
    text = job if isinstance(job, str) else json.dumps(job)
    return json.loads(_run(command, text, h))


def analyze(job):
    return run("analyze", job)


def rational(text):
    """Convert a report rational such as "-4/25" into a Fraction."""
    return Fraction(text)
