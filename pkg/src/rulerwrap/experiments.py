"""Deterministic random-instance statistics for the linear wrap.

Instances are drawn with SplitMix64: trial t of master seed s runs the
stream seeded by mix64(s + (t+1)*GAMMA), and value j of a stream with
state z is mix64(z + j*GAMMA), where GAMMA is the 64-bit golden-ratio
increment and mix64 the usual xorshift-multiply finalizer.  Bounded values
are lo + (u mod width); the modulo bias is below width / 2^64, irrelevant
next to the tolerances used anywhere in this package.  Everything is
integer arithmetic accumulated exactly and divided once at the end, so a
config reproduces its statistics bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from . import backend

GAMMA = 0x9E3779B97F4A7C15
_MASK = (1 << 64) - 1


def mix64(z: int) -> int:
    """SplitMix64 output finalizer (scalar reference)."""
    z &= _MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return (z ^ (z >> 31)) & _MASK


def stream_state(seed: int, trial: int) -> int:
    """Initial state of the substream for one trial of one master seed."""
    return mix64((seed + (trial + 1) * GAMMA) & _MASK)


def splitmix_values(state: int, count: int) -> np.ndarray:
    """First ``count`` raw 64-bit outputs of the stream with the given state."""
    idx = np.arange(1, count + 1, dtype=np.uint64)
    with np.errstate(over="ignore"):
        z = np.uint64(state) + idx * np.uint64(GAMMA)
        z = (z ^ (z >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
        z = (z ^ (z >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
        z = z ^ (z >> np.uint64(31))
    return z


def uniform_lengths(seed: int, trial: int, n: int, lo: int, hi: int) -> np.ndarray:
    """Length array for one trial: n values uniform on [lo, hi], as uint64."""
    raw = splitmix_values(stream_state(seed, trial), n)
    width = np.uint64(hi - lo + 1)
    return np.uint64(lo) + raw % width


@dataclass(frozen=True)
class ExperimentConfig:
    """One batch of trials: instance shape, value range, seed, checkpoints."""

    n: int
    runs: int
    lo: int = 1
    hi: int = 100
    seed: int = 1
    checkpoints: tuple[int, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if self.runs < 1:
            raise ValueError("runs must be at least 1")
        if not 1 <= self.lo <= self.hi:
            raise ValueError(f"need 1 <= lo <= hi, got lo={self.lo} hi={self.hi}")
        cps = tuple(sorted(set(int(c) for c in self.checkpoints)))
        if cps and not (0 <= cps[0] and cps[-1] <= self.n):
            raise ValueError(f"checkpoints must lie in 0..{self.n}")
        object.__setattr__(self, "checkpoints", cps)


def default_checkpoints(n: int) -> tuple[int, ...]:
    """0, 1 and the powers of ten up to n."""
    cps = [0]
    c = 1
    while c <= n:
        cps.append(c)
        c *= 10
    return tuple(cps)


@dataclass(frozen=True)
class TrialStats:
    """Aggregated trial output, exact until formatted."""

    avg_y: dict[int, Fraction]
    mean_max_occupancy: Fraction
    runs_completed: int


def run_random_trials(cfg: ExperimentConfig) -> TrialStats:
    """Average wrapping length per checkpoint hinge, over seeded random trials.

    Each trial's per-hinge wrapping lengths are recorded as they are
    computed, before any pair is discarded, so a checkpoint reads hinge i's
    value no matter what the array did afterwards.
    """
    cps = cfg.checkpoints or default_checkpoints(cfg.n)
    sums = dict.fromkeys(cps, 0)
    occ_sum = 0
    bound = cfg.n * cfg.hi
    for t in range(cfg.runs):
        lengths = uniform_lengths(cfg.seed, t, cfg.n, cfg.lo, cfg.hi)
        res = backend.scan(lengths, want_y=True, total_bound=bound)
        y = res.y_all
        for cp in cps:
            sums[cp] += int(y[cp])
        occ_sum += res.max_occupancy
    return TrialStats(
        avg_y={cp: Fraction(sums[cp], cfg.runs) for cp in cps},
        mean_max_occupancy=Fraction(occ_sum, cfg.runs),
        runs_completed=cfg.runs,
    )


def occupancy_growth(
    ns: Iterable[int], runs: int, lo: int = 1, hi: int = 100, seed: int = 1
) -> list[tuple[int, Fraction]]:
    """Mean maximum live-pair count per input size.

    Stream ids are assigned per (size index, trial) so adding sizes never
    reshuffles earlier ones.
    """
    sizes = [int(n) for n in ns]
    rows = []
    for j, n in enumerate(sizes):
        if n < 1:
            raise ValueError("sizes must be at least 1")
        if not 1 <= lo <= hi:
            raise ValueError(f"need 1 <= lo <= hi, got lo={lo} hi={hi}")
        occ_sum = 0
        for t in range(runs):
            lengths = uniform_lengths(seed, j * runs + t, n, lo, hi)
            res = backend.scan(lengths, total_bound=n * hi)
            occ_sum += res.max_occupancy
        rows.append((n, Fraction(occ_sum, runs)))
    return rows


def one_decimal(value: Fraction) -> str:
    """Exact one-decimal rendering (ties to even), for CSV output."""
    tenths = round(value * 10)
    return f"{tenths // 10}.{tenths % 10}"


def stats_csv(stats: TrialStats) -> str:
    lines = ["checkpoint,avg_y"]
    for cp in sorted(stats.avg_y):
        lines.append(f"{cp},{one_decimal(stats.avg_y[cp])}")
    return "\n".join(lines) + "\n"


def occupancy_csv(rows: Sequence[tuple[int, Fraction]]) -> str:
    lines = ["n,mean_max_occupancy"]
    for n, occ in rows:
        lines.append(f"{n},{one_decimal(occ)}")
    return "\n".join(lines) + "\n"
