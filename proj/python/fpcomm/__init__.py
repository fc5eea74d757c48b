"""Rank-problem communication bounds over F_p."""

import json

from ._fpcomm import (
    FpcommError,
    count_rank_matrices,
    dft,
    mat_rank,
    rank_bound_constant,
    rank_ratio_alpha,
    rank_witness_bound,
    run_cli,
    theta_hat,
    theta_hat_l1,
    verify_uniformizing,
)

__all__ = [
    "FpcommError",
    "cli",
    "count_rank_matrices",
    "dft",
    "mat_rank",
    "rank_bound_constant",
    "rank_ratio_alpha",
    "rank_witness_bound",
    "run_cli",
    "theta_hat",
    "theta_hat_l1",
    "verify_uniformizing",
]


def cli(*args):
    """Run an fpcomm command and return (exit code, parsed JSON document)."""
    code, out, _ = run_cli([str(a) for a in args])
    return code, json.loads(out)
