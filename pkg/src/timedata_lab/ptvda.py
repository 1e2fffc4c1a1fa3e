"""Partitioned parallel sort with complexity instrumentation and
asymptotic-ratio classification."""

from __future__ import annotations

import heapq
import math
import random
import time
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .errors import DomainError

# Default asymptotic-ratio bound M.
DEFAULT_RATIO_BOUND = 1e6

# Timings shorter than this are considered below clock resolution.
MIN_TIMABLE_S = 10 * time.get_clock_info("perf_counter").resolution

INFINITE = math.inf


@dataclass(frozen=True)
class SortInstance:
    elements: list
    partitions: int = 1

    def __post_init__(self):
        if self.partitions < 1:
            raise DomainError("partition count must be >= 1")
        if self.partitions > max(1, len(self.elements)):
            raise DomainError("more partitions than elements")


class RatioClass(Enum):
    UNIT = "Unit"
    VANISHING = "Vanishing"
    DIVERGING = "Diverging"


@dataclass
class ComplexityProbe:
    """Measured sort timings with an a*n*log(n) + b least-squares fit."""

    sizes: list[int]
    measured: dict[int, float]
    fit_a: float | None = None
    fit_b: float | None = None
    fit_residual: float | None = None
    loglog_slope: float | None = None
    warnings: list[str] = field(default_factory=list)

    def __post_init__(self):
        if any(b <= a for a, b in zip(self.sizes, self.sizes[1:])):
            raise DomainError("probe sizes must be strictly increasing")
        if any(n < 2 for n in self.sizes):
            raise DomainError("probe sizes must be >= 2")


def parallel_sort(instance: SortInstance) -> list:
    """Sort by partitioning into p sorted sublists and k-way merging.

    Deterministic for any worker scheduling: the merge runs after every
    worker finishes and breaks ties by lowest partition index.
    """
    elements = instance.elements
    p = instance.partitions
    if len(elements) <= 1 or p == 1:
        return sorted(elements)

    chunk = -(-len(elements) // p)  # ceil division
    slices = [elements[i:i + chunk] for i in range(0, len(elements), chunk)]
    with ThreadPoolExecutor(max_workers=p) as pool:
        runs = list(pool.map(sorted, slices))
    # heapq.merge prefers the earlier iterable on equal keys.
    return list(heapq.merge(*runs))


def classify_ratio(n, n_prime, m_bound: float = DEFAULT_RATIO_BOUND) -> RatioClass:
    """Classify the asymptotic ratio n/n' into {Unit, Vanishing, Diverging}.

    math.inf is the explicit infinity marker; finite ratios beyond m_bound
    (or below 1/m_bound) collapse to the corresponding limit class.
    """
    if m_bound <= 0:
        raise DomainError("ratio bound must be positive")
    n_inf = n == INFINITE
    np_inf = n_prime == INFINITE
    if n_inf and np_inf:
        raise DomainError("both sizes infinite: ratio ambiguous")
    if not n_inf and n < 1:
        raise DomainError("n must be >= 1")
    if not np_inf and n_prime < 1:
        raise DomainError("n' must be >= 1")
    if n_inf:
        return RatioClass.DIVERGING
    if np_inf:
        return RatioClass.VANISHING
    if n == n_prime:
        return RatioClass.UNIT
    if n / n_prime > m_bound:
        return RatioClass.DIVERGING
    if n_prime / n > m_bound:
        return RatioClass.VANISHING
    return RatioClass.UNIT


def scaling_probe(sizes: list[int], trials: int = 3, partitions: int = 4,
                  seed: int | None = None) -> ComplexityProbe:
    """Time parallel_sort on random instances and fit the growth model.

    Fits elapsed ~ a*n*log(n) + b by least squares and reports the log-log
    slope; sub-quadratic growth shows as slope comfortably below 2.
    """
    if len(sizes) < 2:
        raise DomainError("need at least 2 sizes for a fit")
    if trials < 3:
        raise DomainError("need at least 3 trials per size")
    rng = random.Random(seed)

    probe = ComplexityProbe(sizes=list(sizes), measured={})
    for n in sizes:
        best = math.inf
        for _ in range(trials):
            data = [rng.random() for _ in range(n)]
            start = time.perf_counter()
            parallel_sort(SortInstance(data, partitions))
            best = min(best, time.perf_counter() - start)
        probe.measured[n] = best

    if any(t < MIN_TIMABLE_S for t in probe.measured.values()):
        probe.warnings.append("timing below clock resolution; fit skipped")
        warnings.warn(probe.warnings[-1], stacklevel=2)
        return probe

    ns = np.array(sizes, dtype=float)
    ts = np.array([probe.measured[n] for n in sizes])
    design = np.column_stack([ns * np.log(ns), np.ones_like(ns)])
    coeffs, *_ = np.linalg.lstsq(design, ts, rcond=None)
    probe.fit_a, probe.fit_b = float(coeffs[0]), float(coeffs[1])
    probe.fit_residual = float(np.sqrt(np.mean((design @ coeffs - ts) ** 2)))
    slope, _ = np.polyfit(np.log(ns), np.log(ts), 1)
    probe.loglog_slope = float(slope)
    return probe
