"""Step counting and per-pull delay reports.

A StepCounter is the single accumulator all instrumented operations
charge against: one count per adjacency arc examined, per queue push or
pop, per lazy-array read/write, per heap comparison, and per iteration
of a sweep loop.  The counter also tracks lazy-array cell allocation so
reports can state peak concurrently-live cells.

run_metered drives an enumerator to exhaustion, recording the counted
steps of every pull.  Metering itself never touches the counter, so a
report reflects exactly what the machine spent.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction


class StepCounter:
    __slots__ = ("total", "lazy_live_cells", "lazy_peak_cells", "lazy_alloc_count")

    def __init__(self):
        self.total = 0
        self.lazy_live_cells = 0
        self.lazy_peak_cells = 0
        self.lazy_alloc_count = 0

    def record_alloc(self, cells: int) -> None:
        self.lazy_alloc_count += 1
        self.lazy_live_cells += cells
        if self.lazy_live_cells > self.lazy_peak_cells:
            self.lazy_peak_cells = self.lazy_live_cells

    def record_release(self, cells: int) -> None:
        self.lazy_live_cells -= cells


@dataclass
class DelayReport:
    """Measured schedule of one full enumeration run."""

    pulls: int
    max_delay: int
    mean_delay: Fraction
    per_phase_max: dict[str, int]
    declared_bound_value: int
    fitted_constant: Fraction | None
    peak_queue: int
    lazy_cells_allocated: int
    preprocessing_steps: int
    wall_time_s: float = field(compare=False, default=0.0)

    def to_kv(self) -> str:
        rows = [
            f"pulls={self.pulls}",
            f"max_delay={self.max_delay}",
            f"mean_delay={self.mean_delay}",
            f"declared_bound_value={self.declared_bound_value}",
            f"fitted_constant={self.fitted_constant if self.fitted_constant is not None else 'na'}",
            f"peak_queue={self.peak_queue}",
            f"lazy_cells_allocated={self.lazy_cells_allocated}",
            f"preprocessing_steps={self.preprocessing_steps}",
        ]
        for phase in sorted(self.per_phase_max):
            rows.append(f"phase_max.{phase}={self.per_phase_max[phase]}")
        rows.append(f"wall_time_s={self.wall_time_s:.6f}")
        return "\n".join(rows) + "\n"


def run_metered(enum, *, keep_triples: bool = True):
    """Drain an enumerator, returning (triples, DelayReport).

    The final pull that detects end-of-stream is included in the delay
    figures.  Preprocessing (work the enumerator performs before its
    first delay window) is measured separately and excluded from delays.
    """
    counter = enum.counter
    t0 = time.perf_counter()
    enum.prepare()
    triples = []
    pulls = 0
    max_delay = 0
    total_delay = 0
    per_phase: dict[str, int] = {}
    while True:
        phase = enum.phase
        before = counter.total
        triple = enum.pull()
        delta = counter.total - before
        pulls += 1
        total_delay += delta
        if delta > max_delay:
            max_delay = delta
        prev = per_phase.get(phase, 0)
        if delta > prev:
            per_phase[phase] = delta
        if triple is None:
            break
        if keep_triples:
            triples.append(triple)
    wall = time.perf_counter() - t0
    base = enum.bound_base()
    fitted = Fraction(max_delay) / base if base > 0 else None
    report = DelayReport(
        pulls=pulls,
        max_delay=max_delay,
        mean_delay=Fraction(total_delay, pulls) if pulls else Fraction(0),
        per_phase_max=per_phase,
        declared_bound_value=enum.declared_bound(),
        fitted_constant=fitted,
        peak_queue=enum.peak_queue,
        lazy_cells_allocated=counter.lazy_peak_cells,
        preprocessing_steps=enum.preprocessing_steps,
        wall_time_s=wall,
    )
    return triples, report


def fit_bound(max_delays, bases) -> Fraction:
    """Smallest constant C with max_delay <= C * base on every sample."""
    if len(max_delays) != len(bases) or not max_delays:
        raise ValueError("need matching non-empty samples")
    best = Fraction(0)
    for d, b in zip(max_delays, bases):
        b = Fraction(b)
        if b <= 0:
            raise ValueError("bound base must be positive")
        c = Fraction(d) / b
        if c > best:
            best = c
    return best
