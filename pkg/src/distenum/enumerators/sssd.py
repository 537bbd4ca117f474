"""Single-source distance enumeration with bounded per-output delay.

One search from the requested source, pulled a budget at a time.  The
budget scales with the largest degree seen so far, so the schedule
adapts as denser vertices are reached.  Output order is hop order
(unweighted) or distance order (weighted); both are sorted by distance
and trivially row-wise.
"""
from __future__ import annotations

from fractions import Fraction

from .base import Enumerator, OutputMode, base_max_degree
from .searches import bfs_search, dijkstra_search
from ..lazyarray import LazyArray


class SingleSourceEnumerator(Enumerator):
    def __init__(self, graph, source: int, mode: OutputMode = OutputMode(),
                 counter=None, config=None):
        super().__init__(graph, counter, config)
        if not 0 <= source < graph.n:
            raise ValueError(f"source {source} out of range for n={graph.n}")
        self.source = source
        self.mode = mode
        if mode.no_self:
            self._budget_scale *= 2

    def _make_machine(self):
        g = self.graph
        sweep = not self.mode.reachable_only
        if g.weighted:
            return self._weighted_machine(sweep)
        return self._unweighted_machine(sweep)

    def _unweighted_machine(self, sweep):
        dist = LazyArray(self.graph.n, self.counter)
        skip = 0 if self.mode.no_self else -1
        return bfs_search(self, self.source, dist, skip_le=skip, sweep=sweep)

    def _weighted_machine(self, sweep):
        n, c = self.graph.n, self.counter
        dist = LazyArray(n, c)
        settled = LazyArray(n, c)
        handles = LazyArray(n, c)
        return dijkstra_search(self, self.source, dist, settled, handles,
                               skip_self=self.mode.no_self, sweep=sweep)

    def _refresh_budget(self):
        self._budget_cached = self._budget_max_degree(
            self.config.per_max_degree, self.graph.weighted)

    def bound_base(self) -> Fraction:
        return base_max_degree(self.graph)
