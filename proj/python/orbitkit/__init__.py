"""Promotion on P-strict labelings and rowmotion on Q-partitions."""

import json

from ._orbitkit import (
    Bijection,
    CapExceeded,
    Error,
    GammaPoset,
    InvariantViolation,
    LabelingSpace,
    PartitionSpace,
    Poset,
    SpecError,
    poset,
    run_json,
)

__all__ = [
    "Bijection",
    "CapExceeded",
    "Error",
    "GammaPoset",
    "InvariantViolation",
    "LabelingSpace",
    "PartitionSpace",
    "Poset",
    "SpecError",
    "poset",
    "run",
]


def run(command, **options):
    """Runs a CLI subcommand and returns (exit_code, report dict, text)."""
    code, report, text = run_json(command, **options)
    return code, json.loads(report), text
