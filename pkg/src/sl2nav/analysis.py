"""Validation instruments: partial-quotient-sum statistics over a fixed
denominator, and an exact breadth-first distance oracle on the Cayley
graph of SL2(F_p) for small p.
"""

from __future__ import annotations

import csv
import random
import statistics
from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .euclid import partial_quotient_sum
from .mat2 import Mat2Fp, random_sl2
from .navigate import NavConfig, decompose, threshold

EXHAUSTIVE_CEILING = 10**7
BFS_CEILING = 10**7


@dataclass(frozen=True)
class TStats:
    """Distribution summary of T(a/p) over numerators a."""

    p: int
    count: int
    mean: float
    median: float
    max_value: int
    below_threshold_fraction: dict[float, float]
    histogram: dict[int, int]
    overflow: int
    overflow_cutoff: int

    def to_json_dict(self) -> dict:
        return {
            "p": str(self.p),
            "count": self.count,
            "mean": self.mean,
            "median": self.median,
            "max": self.max_value,
            "below_threshold_fraction": {
                str(c): frac for c, frac in self.below_threshold_fraction.items()
            },
            "histogram": {str(t): n for t, n in sorted(self.histogram.items())},
            "overflow": self.overflow,
            "overflow_cutoff": self.overflow_cutoff,
        }


def t_stats(
    p: int,
    *,
    samples: int | None = None,
    seed: int = 0,
    c_list: Sequence[float] = (2.0,),
    exhaustive_ceiling: int = EXHAUSTIVE_CEILING,
) -> TStats:
    """Partial quotient sums T(a/p) over all a in [1, p-1], or over
    `samples` uniform draws when given.

    Reports mean, median, max, an exact-valued histogram (one overflow
    bucket past twice the largest configured threshold), and for each
    constant C in c_list the fraction of values within threshold(p, C).
    """
    if not c_list:
        raise ValueError("c_list must not be empty")
    if samples is None:
        if p - 1 > exhaustive_ceiling:
            raise ValueError(
                "exhaustive mode over p=%d exceeds the ceiling %d; use sample mode"
                % (p, exhaustive_ceiling)
            )
        numerators = range(1, p)
    else:
        if samples < 1:
            raise ValueError("samples must be positive")
        rng = random.Random(seed)
        numerators = [rng.randrange(1, p) for _ in range(samples)]

    values = [partial_quotient_sum(a, p) for a in numerators]
    count = len(values)
    cutoff = int(2 * threshold(p, max(c_list)))
    histogram: dict[int, int] = {}
    overflow = 0
    for t in values:
        if t <= cutoff:
            histogram[t] = histogram.get(t, 0) + 1
        else:
            overflow += 1
    fractions = {
        c: sum(1 for t in values if t <= threshold(p, c)) / count for c in c_list
    }
    return TStats(
        p=p,
        count=count,
        mean=statistics.fmean(values),
        median=float(statistics.median(values)),
        max_value=max(values),
        below_threshold_fraction=fractions,
        histogram=histogram,
        overflow=overflow,
        overflow_cutoff=cutoff,
    )


def write_histogram_csv(stats: TStats, path: str) -> None:
    """Histogram as CSV rows t_value,count with a trailing overflow row."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["t_value", "count"])
        for t in sorted(stats.histogram):
            writer.writerow([t, stats.histogram[t]])
        writer.writerow(["overflow", stats.overflow])


@dataclass(frozen=True)
class BfsTable:
    """Exact Cayley distances from the identity for the whole group."""

    p: int
    distances: dict[int, int]
    diameter: int

    def key(self, m: Mat2Fp) -> int:
        return ((m.a * self.p + m.b) * self.p + m.c) * self.p + m.d

    def distance(self, m: Mat2Fp) -> int:
        if m.p != self.p:
            raise ValueError("modulus mismatch: %d vs %d" % (m.p, self.p))
        return self.distances[self.key(m)]

    @property
    def order(self) -> int:
        return len(self.distances)

    def to_json_dict(self) -> dict:
        return {"p": str(self.p), "order": self.order, "diameter": self.diameter}


def bfs_distances(p: int, ceiling: int = BFS_CEILING) -> BfsTable:
    """Breadth-first search over all of SL2(F_p) from the identity, using
    right multiplication by U, L, U^-1, L^-1.

    The group has p(p^2-1) elements; each is stored once under a packed
    integer key.
    """
    order = p * (p * p - 1)
    if order > ceiling:
        raise ValueError(
            "group order %d at p=%d exceeds the ceiling %d" % (order, p, ceiling)
        )
    start = ((1 * p + 0) * p + 0) * p + 1
    distances = {start: 0}
    queue = deque([(1, 0, 0, 1, 0)])
    diameter = 0
    while queue:
        a, b, c, d, dist = queue.popleft()
        ndist = dist + 1
        for na, nb, nc, nd in (
            (a, (b + a) % p, c, (d + c) % p),  # *U
            (a, (b - a) % p, c, (d - c) % p),  # *U^-1
            ((a + b) % p, b, (c + d) % p, d),  # *L
            ((a - b) % p, b, (c - d) % p, d),  # *L^-1
        ):
            key = ((na * p + nb) * p + nc) * p + nd
            if key not in distances:
                distances[key] = ndist
                diameter = ndist
                queue.append((na, nb, nc, nd, ndist))
    return BfsTable(p=p, distances=distances, diameter=diameter)


@dataclass(frozen=True)
class OracleComparison:
    """Synthesized word lengths against exact Cayley distances."""

    p: int
    samples: int
    violations: int
    min_ratio: float
    mean_ratio: float
    max_ratio: float
    rows: tuple[tuple[Mat2Fp, int, int], ...]

    def to_json_dict(self) -> dict:
        return {
            "p": str(self.p),
            "samples": self.samples,
            "violations": self.violations,
            "min_ratio": self.min_ratio,
            "mean_ratio": self.mean_ratio,
            "max_ratio": self.max_ratio,
        }


def oracle_compare(
    p: int, n: int, cfg: NavConfig = NavConfig(), table: BfsTable | None = None
) -> OracleComparison:
    """Decompose n random targets and compare lengths with BFS distances.

    A violation is a word shorter than the exact distance (impossible for
    a correct word).  Ratios length/distance are summarized over targets
    at positive distance.
    """
    if table is None:
        table = bfs_distances(p)
    rng = random.Random(cfg.seed)
    rows = []
    violations = 0
    ratios = []
    for _ in range(n):
        target = random_sl2(p, rng)
        report = decompose(target, cfg)
        dist = table.distance(target)
        rows.append((target, report.length, dist))
        if report.length < dist:
            violations += 1
        if dist > 0:
            ratios.append(report.length / dist)
    if ratios:
        min_ratio, mean_ratio, max_ratio = min(ratios), statistics.fmean(ratios), max(ratios)
    else:
        min_ratio = mean_ratio = max_ratio = 0.0
    return OracleComparison(
        p=p,
        samples=n,
        violations=violations,
        min_ratio=min_ratio,
        mean_ratio=mean_ratio,
        max_ratio=max_ratio,
        rows=tuple(rows),
    )


def write_distance_histogram_csv(table: BfsTable, path: str) -> None:
    """Distance distribution as CSV rows distance,count."""
    counts: dict[int, int] = {}
    for dist in table.distances.values():
        counts[dist] = counts.get(dist, 0) + 1
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["distance", "count"])
        for dist in sorted(counts):
            writer.writerow([dist, counts[dist]])


def write_comparison_csv(report: OracleComparison, path: str) -> None:
    """Per-target rows matrix,length,distance."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["matrix", "length", "distance"])
        for target, length, dist in report.rows:
            writer.writerow([target.entries_string(), length, dist])
