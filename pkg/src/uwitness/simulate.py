"""Finite-shot simulation of the sequential parity measurements.

Shots are drawn per copy count from the exact four-outcome distribution of
the two-stage measurement; the witness estimate plugs the three empirical
moments into the witness polynomial, with a percentile bootstrap for the
confidence interval.  Everything is deterministic under a fixed seed.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .collective import COPY_COUNTS, outcome_probabilities
from .witness import witness_polynomial

DEFAULT_RESAMPLES = 1000


@dataclass(frozen=True)
class ShotRecord:
    """Outcome counts of one finite-shot run on n_copies stacked pairs.

    counts follows OutcomeTable.as_vector() order: (+,+), (+,-), (-,+), (-,-).
    """

    n_copies: int
    shots: int
    counts: np.ndarray
    seed: int

    def __post_init__(self):
        c = np.array(self.counts, dtype=float)
        if c.shape != (4,):
            raise ValueError(f"counts must have 4 entries, got shape {c.shape}")
        c.setflags(write=False)
        object.__setattr__(self, "counts", c)


@dataclass(frozen=True)
class WitnessEstimate:
    pi2_hat: float
    pi3_hat: float
    pi4_hat: float
    witness_hat: float
    ci_low: float
    ci_high: float
    shots_per_moment: dict
    resamples: int

    def as_dict(self) -> dict:
        return {
            "pi2_hat": self.pi2_hat,
            "pi3_hat": self.pi3_hat,
            "pi4_hat": self.pi4_hat,
            "witness_hat": self.witness_hat,
            "ci_low": self.ci_low,
            "ci_high": self.ci_high,
            "shots_per_moment": {str(k): int(v) for k, v in sorted(self.shots_per_moment.items())},
            "resamples": self.resamples,
        }


def sample_shots(rho: np.ndarray, n: int, shots: int, seed: int) -> ShotRecord:
    """Draw ``shots`` outcomes of the n-copy sequential measurement.

    Inverse-CDF sampling against the exact outcome probabilities; cells with
    probability zero can never fire.
    """
    if shots < 1:
        raise ValueError(f"shots must be >= 1, got {shots}")
    p = outcome_probabilities(rho, n).as_vector()
    p = np.clip(p, 0.0, None)
    cdf = np.cumsum(p)
    cdf[-1] = 1.0
    u = np.random.default_rng(seed).random(shots)
    cells = np.searchsorted(cdf, u, side="right")
    counts = np.bincount(cells, minlength=4)
    return ShotRecord(n_copies=n, shots=shots, counts=counts, seed=seed)


def moment_estimate(record: ShotRecord) -> float:
    """Empirical signed sum (c++ - c+- - c-+ + c--)/shots."""
    c = record.counts
    return float((c[0] - c[1] - c[2] + c[3]) / record.shots)


def estimate(records, resamples: int = DEFAULT_RESAMPLES, seed: int = 0) -> WitnessEstimate:
    """Plug-in witness estimate with a percentile bootstrap 95% interval.

    ``records`` must hold exactly one ShotRecord for each of n = 2, 3, 4.
    The bootstrap redraws each record's counts from its own empirical
    distribution ``resamples`` times and takes the 2.5% / 97.5% quantiles of
    the recomputed witness values.
    """
    by_n = {}
    for r in records:
        if r.n_copies in by_n:
            raise ValueError(f"duplicate record for n = {r.n_copies}")
        by_n[r.n_copies] = r
    missing = [n for n in COPY_COUNTS if n not in by_n]
    if missing:
        raise ValueError(f"missing shot records for n = {missing}")
    for r in by_n.values():
        if r.shots < 1:
            raise ValueError(f"record for n = {r.n_copies} has zero shots")
    if resamples < 1:
        raise ValueError(f"resamples must be >= 1, got {resamples}")

    hats = {n: moment_estimate(by_n[n]) for n in COPY_COUNTS}
    witness_hat = float(witness_polynomial(hats[2], hats[3], hats[4]))

    rng = np.random.default_rng(seed)
    boot_moments = {}
    for n in COPY_COUNTS:
        r = by_n[n]
        phat = np.clip(r.counts / r.counts.sum(), 0.0, None)
        phat = phat / phat.sum()
        draws = rng.multinomial(int(r.shots), phat, size=resamples)
        boot_moments[n] = (draws[:, 0] - draws[:, 1] - draws[:, 2] + draws[:, 3]) / r.shots
    boot_w = witness_polynomial(boot_moments[2], boot_moments[3], boot_moments[4])
    ci_low, ci_high = np.quantile(boot_w, (0.025, 0.975))

    return WitnessEstimate(
        pi2_hat=hats[2],
        pi3_hat=hats[3],
        pi4_hat=hats[4],
        witness_hat=witness_hat,
        ci_low=float(ci_low),
        ci_high=float(ci_high),
        shots_per_moment={n: int(by_n[n].shots) for n in COPY_COUNTS},
        resamples=resamples,
    )
