"""Seeded Monte Carlo estimate of the thermally averaged moments.

Drift velocities are drawn independently from a zero-mean normal law with
variance kT/m. Each sample carries its own (generally asymmetric) moment
set: self entries pick up m^2 v_i^2, cross entries carry no velocity term.
The per-sample moments are propagated by free flight and averaged.

The sample index space is cut into fixed blocks of ``SAMPLE_BLOCK``
samples. Block ``b`` draws from ``SeedSequence(seed, spawn_key=(b,))`` and
block statistics are merged in block order, so the estimate depends on
(seed, n_samples) only, not on how blocks are grouped into batches.
"""
from __future__ import annotations

import asyncio
import logging
import math
from dataclasses import dataclass

import numpy as np

from disent.service.exceptions import SamplingError
from disent.service.model import (
    MOMENT_NAMES,
    GaussianParams,
    MomentSet,
    PhysicalConstants,
    VelocityPair,
    check_temperature,
    initial_moments,
)

logger = logging.getLogger(__name__)

SAMPLE_BLOCK = 16384
DEFAULT_SEED = 20240229


@dataclass(frozen=True)
class McConfig:
    n_samples: int = 1_000_000
    seed: int = DEFAULT_SEED
    batch_size: int = 4 * SAMPLE_BLOCK

    def __post_init__(self):
        if self.n_samples < 1:
            raise SamplingError(
                f"n_samples must be at least 1, got {self.n_samples}"
            )
        if self.batch_size < 1:
            raise SamplingError(
                f"batch_size must be at least 1, got {self.batch_size}"
            )
        if not 0 <= self.seed < 2**64:
            raise SamplingError(
                f"seed must be a 64-bit unsigned integer, got {self.seed}"
            )


@dataclass(frozen=True)
class MomentErrors:
    xx: float
    x1x2: float
    pp: float
    p1p2: float
    xp_sym: float
    x_cross_p: float

    def as_tuple(self) -> tuple[float, ...]:
        return tuple(getattr(self, name) for name in MOMENT_NAMES)


@dataclass(frozen=True)
class McEstimate:
    moments: MomentSet
    std_errors: MomentErrors
    n_samples: int


@dataclass(frozen=True)
class _BlockStats:
    n: int
    mean: np.ndarray
    m2: np.ndarray

    def merge(self, other: _BlockStats) -> _BlockStats:
        n = self.n + other.n
        delta = other.mean - self.mean
        return _BlockStats(
            n=n,
            mean=self.mean + delta * (other.n / n),
            m2=self.m2 + other.m2 + delta * delta * (self.n * other.n / n),
        )


def _block_sizes(n_samples: int) -> list[int]:
    full, rest = divmod(n_samples, SAMPLE_BLOCK)
    return [SAMPLE_BLOCK] * full + ([rest] if rest else [])


def _sample_moments(
    params: GaussianParams,
    temperature: float,
    t: float,
    consts: PhysicalConstants,
    rng: np.random.Generator,
    size: int,
) -> np.ndarray:
    """Per-sample moments, one row per entry of MOMENT_NAMES."""
    at_rest = initial_moments(params, VelocityPair(), consts)
    sigma = math.sqrt(consts.k * temperature / consts.m)
    v1, v2 = rng.normal(0.0, sigma, size=(2, size))
    m_sq = consts.m * consts.m

    x1x1 = np.full(size, at_rest.xx)
    x2x2 = np.full(size, at_rest.xx)
    x1x2 = np.full(size, at_rest.x1x2)
    p1p1 = m_sq * (v1 * v1) + at_rest.pp
    p2p2 = m_sq * (v2 * v2) + at_rest.pp
    p1p2 = np.full(size, at_rest.p1p2)
    x1p1 = np.full(size, at_rest.xp_sym)
    x2p2 = np.full(size, at_rest.xp_sym)
    x2p1 = np.full(size, at_rest.x_cross_p)
    x1p2 = np.full(size, at_rest.x_cross_p)

    tau = t / consts.m
    x1x1, x2x2, x1x2 = (
        x1x1 + 2 * tau * x1p1 + tau * tau * p1p1,
        x2x2 + 2 * tau * x2p2 + tau * tau * p2p2,
        x1x2 + tau * (x1p2 + x2p1) + tau * tau * p1p2,
    )
    x1p1, x2p2, x2p1, x1p2 = (
        x1p1 + tau * p1p1,
        x2p2 + tau * p2p2,
        x2p1 + tau * p1p2,
        x1p2 + tau * p1p2,
    )
    return np.stack(
        [
            (x1x1 + x2x2) / 2,
            x1x2,
            (p1p1 + p2p2) / 2,
            p1p2,
            (x1p1 + x2p2) / 2,
            (x2p1 + x1p2) / 2,
        ]
    )


def _block_stats(values: np.ndarray) -> _BlockStats:
    # Shifted by the first sample so constant rows come out exact.
    shift = values[:, 0]
    mean = shift + (values - shift[:, None]).mean(axis=1)
    residual = values - mean[:, None]
    return _BlockStats(
        n=values.shape[1], mean=mean, m2=(residual * residual).sum(axis=1)
    )


def _run_batch(
    params: GaussianParams,
    temperature: float,
    t: float,
    consts: PhysicalConstants,
    seed: int,
    blocks: list[tuple[int, int]],
) -> list[_BlockStats]:
    stats = []
    for block_index, size in blocks:
        rng = np.random.default_rng(
            np.random.SeedSequence(seed, spawn_key=(block_index,))
        )
        stats.append(
            _block_stats(
                _sample_moments(params, temperature, t, consts, rng, size)
            )
        )
    return stats


async def mc_thermal_moments_async(
    params: GaussianParams,
    temperature: float,
    t: float,
    consts: PhysicalConstants,
    cfg: McConfig,
) -> McEstimate:
    temperature = check_temperature(temperature)
    blocks = list(enumerate(_block_sizes(cfg.n_samples)))
    blocks_per_batch = max(1, math.ceil(cfg.batch_size / SAMPLE_BLOCK))
    batches = [
        blocks[start : start + blocks_per_batch]
        for start in range(0, len(blocks), blocks_per_batch)
    ]
    logger.debug(
        "sampling %d velocity pairs in %d blocks, %d batches",
        cfg.n_samples,
        len(blocks),
        len(batches),
    )
    tasks = [
        asyncio.create_task(
            asyncio.to_thread(
                _run_batch, params, temperature, t, consts, cfg.seed, batch
            )
        )
        for batch in batches
    ]
    batch_results = await asyncio.gather(*tasks)

    block_stats = [stats for batch in batch_results for stats in batch]
    total = block_stats[0]
    for stats in block_stats[1:]:
        total = total.merge(stats)

    if total.n > 1:
        std_errors = np.sqrt(total.m2 / (total.n - 1) / total.n)
    else:
        std_errors = np.where(total.m2 == 0, 0.0, math.inf)
    return McEstimate(
        moments=MomentSet(*(float(value) for value in total.mean)),
        std_errors=MomentErrors(*(float(value) for value in std_errors)),
        n_samples=total.n,
    )


def mc_thermal_moments(
    params: GaussianParams,
    temperature: float,
    t: float,
    consts: PhysicalConstants,
    cfg: McConfig = McConfig(),
) -> McEstimate:
    return asyncio.run(
        mc_thermal_moments_async(params, temperature, t, consts, cfg)
    )
