"""Recover the unknown amplitude from clone measurements and predict its spread.

Each clone carries gamma = s*alpha + c*beta with strategy constants
(s, c) = (signal_scale, offset_scale). Averaged quadrature measurements give
y + i*z with expectation sqrt(2)*gamma, so the affine inversion

    alpha_est = ((y + i*z)/sqrt(2) - c*beta) / s

is unbiased for every strategy. Its per-quadrature standard deviation is
1/sqrt(2) for the optimal choice (for any number of clones), 1 for the
offset choice, and (1/sqrt(2))/(1-epsilon) for the near-optimal choice.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    DegenerateSignalError,
    InfoCloneError,
    StrategyMismatchError,
    require_finite_complex,
    require_seed,
)
from .measurement import MeasurementRecord, measure_clones
from .transform import StrategyKind, StrategySpec

__all__ = [
    "EstimateSummary",
    "check_record",
    "clone_amplitude",
    "clone_linear_map",
    "estimate_alpha",
    "run_trials",
    "theoretical_std",
]

_SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class EstimateSummary:
    """Monte Carlo campaign statistics for one strategy and one true alpha.

    std_re and std_im are sample standard deviations (n_trials - 1 divisor)
    of the per-trial estimates' quadratures; theory_std is the predicted
    value for both.
    """

    strategy: StrategySpec
    true_alpha: complex
    n_trials: int
    mean_estimate: complex
    std_re: float
    std_im: float
    theory_std: float
    seed: int


def clone_linear_map(strategy: StrategySpec) -> tuple[float, float]:
    """The (signal, offset) coefficients of gamma = s*alpha + c*beta."""
    s = strategy.signal_scale
    if s == 0.0:
        raise DegenerateSignalError("clone map carries no alpha signal")
    return s, strategy.offset_scale


def clone_amplitude(strategy: StrategySpec, alpha: complex) -> complex:
    """Per-clone amplitude produced from the held amplitude alpha."""
    alpha = require_finite_complex(alpha, "alpha")
    s, c = clone_linear_map(strategy)
    return s * alpha + c * strategy.beta


def estimate_alpha(record: MeasurementRecord, strategy: StrategySpec) -> complex:
    """Invert the clone map on the measured group averages."""
    s, c = clone_linear_map(strategy)
    return (complex(record.y, record.z) / _SQRT2 - c * strategy.beta) / s


def theoretical_std(strategy: StrategySpec) -> float:
    """Predicted per-quadrature standard deviation of the estimate."""
    if strategy.kind is StrategyKind.OPTIMAL:
        return math.sqrt(0.5)
    if strategy.kind is StrategyKind.OFFSET:
        return 1.0
    return math.sqrt(0.5) / (1.0 - strategy.epsilon)


def check_record(
    record: MeasurementRecord,
    strategy: StrategySpec,
    true_alpha: complex,
    tol: float = 1e-9,
) -> None:
    """Check a record's clone amplitude against a strategy and a known alpha.

    Only meaningful in harnesses where the true alpha is known; estimation
    itself never sees alpha and performs no such check.
    """
    expected = clone_amplitude(strategy, true_alpha)
    if abs(record.clone_amplitude - expected) > tol:
        raise StrategyMismatchError(
            f"record carries clone amplitude {record.clone_amplitude!r} but the "
            f"strategy predicts {expected!r}"
        )


def run_trials(
    strategy: StrategySpec,
    true_alpha: complex,
    n_trials: int,
    seed: int,
) -> EstimateSummary:
    """Repeat clone-measure-estimate n_trials times and summarize.

    Trial i draws from the substreams keyed by (seed, i, group), so the
    summary is reproducible bit for bit and trials are independent. The
    reduction runs in trial order.
    """
    true_alpha = require_finite_complex(true_alpha, "true_alpha")
    m = int(n_trials)
    if m < 2:
        raise InfoCloneError(f"n_trials must be >= 2, got {n_trials!r}")
    seed = require_seed(seed)
    gamma = clone_amplitude(strategy, true_alpha)
    n = strategy.n_copies
    estimates = np.empty(m, dtype=complex)
    for i in range(m):
        record = measure_clones(gamma, n, seed, trial_index=i)
        estimates[i] = estimate_alpha(record, strategy)
    return EstimateSummary(
        strategy=strategy,
        true_alpha=true_alpha,
        n_trials=m,
        mean_estimate=complex(estimates.mean()),
        std_re=float(estimates.real.std(ddof=1)),
        std_im=float(estimates.imag.std(ddof=1)),
        theory_std=theoretical_std(strategy),
        seed=seed,
    )
