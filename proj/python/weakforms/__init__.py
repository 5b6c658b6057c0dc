"""Exact weakly holomorphic modular forms of prime level.

Rationals come back as fractions.Fraction. ``run`` returns the same report
document as the command-line tool.
"""

import json

from ._weakforms import (
    DomainError,
    PrecisionError,
    RankError,
    UsageError,
    WeakBasis,
    ahlgren_bound,
    dim_E,
    dim_M,
    dim_S,
    duality_check,
    gap_count_bound,
    gap_sets,
    genfun_check,
    genus,
    hurwitz,
    index_set_predicted,
    lambda_p,
    recurrence_check,
    trace_tn,
    weak_basis,
)
from ._weakforms import _run

__all__ = [
    "DomainError",
    "PrecisionError",
    "RankError",
    "UsageError",
    "WeakBasis",
    "ahlgren_bound",
    "dim_E",
    "dim_M",
    "dim_S",
    "duality_check",
    "gap_count_bound",
    "gap_sets",
    "genfun_check",
    "genus",
    "hurwitz",
    "index_set_predicted",
    "lambda_p",
    "recurrence_check",
    "run",
    "trace_tn",
    "weak_basis",
]


def run(command, p, **options):
    """Run a report command (dims, gaps, basis, duality, genfun, trace).

    Returns the parsed document {command, config, results, pass}.
    """
    return json.loads(_run(command, p, **options))
