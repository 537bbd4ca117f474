"""All-pairs distance enumeration: row-wise and unordered regimes.

Three machines share the search primitives:

* RowSearchEnumerator streams complete rows in source order, one search
  per source.  Delay tracks the largest degree seen.
* UnconstrainedApsdEnumerator banks all self pairs up front, emitting
  the first half of them under a small constant budget while the
  searches warm up; afterwards the budget tracks the average degree.
* NoSelfApsdEnumerator drops self pairs, which kills the cheap bank, so
  a cursor over cheap per-vertex output (direct edges, unreachable fans
  for isolated vertices) is interleaved with the searches: the cursor
  refills the queue whenever it runs low, and searches grind the bulk
  work the rest of the time.  Budget tracks the average degree.
"""
from __future__ import annotations

from collections import deque

from .base import (Enumerator, INFINITE, IDLE, OutputMode, base_avg_degree,
                   base_max_degree)
from .searches import slot_search
from ..lazyarray import LazyArray


def _balanced_order(seq):
    """Ascending prefix, then alternate ends: 0 1 2 3 4 n-1 5 n-2 ...

    Under pair dedup the kept share of a row shrinks with its position
    in the representative order, so a run of late rows is a run of
    near-pure filtering.  Pairing an early row with a late one keeps the
    kept share of every stretch near one half, which is what lets the
    paced pull quota hold the queue steady.
    """
    items = list(seq)
    n = len(items)
    head = min(4, n)
    out = items[:head]
    lo, hi = head, n - 1
    while lo <= hi:
        out.append(items[lo])
        if hi != lo:
            out.append(items[hi])
        lo += 1
        hi -= 1
    return out


class RowSearchEnumerator(Enumerator):
    """Rows in source order; optional no-self and reachable-only trims."""

    def __init__(self, graph, mode: OutputMode = OutputMode(),
                 counter=None, config=None):
        super().__init__(graph, counter, config)
        if mode.sorted:
            raise ValueError("row searches cannot promise a globally "
                             "sorted stream")
        self.mode = mode
        if mode.no_self:
            self._budget_scale *= 2
        self._sources = None

    def _preprocess(self):
        if not (self.mode.reachable_only and self.mode.no_self):
            return
        # With both trims a source contributes nothing unless it has a
        # non-loop arc, and a trailing run of empty rows would stall the
        # stream; one linear pass drops those sources for good.
        g, c = self.graph, self.counter
        sources = []
        for v in range(g.n):
            c.total += 1
            for i in g.arcs_from(v):
                c.total += 1
                if g.targets[i] != v:
                    sources.append(v)
                    break
        self._sources = sources

    def _make_machine(self):
        return self._run_rows()

    def _run_rows(self):
        sources = self._sources if self._sources is not None \
            else range(self.graph.n)
        skip = 0 if self.mode.no_self else -1
        sweep = not self.mode.reachable_only
        for s in sources:
            while len(self.q) >= self.qcap:
                yield IDLE
            yield from slot_search(self, s, skip_le=skip, sweep=sweep)

    def _refresh_budget(self):
        self._budget_cached = self._budget_max_degree(
            self.config.per_max_degree, self.graph.weighted)

    def bound_base(self):
        return base_max_degree(self.graph)


class UnconstrainedApsdEnumerator(Enumerator):
    """All n^2 pairs, order free; self pairs double as the head bank."""

    _dedup_paced = True

    def __init__(self, graph, counter=None, config=None):
        super().__init__(graph, counter, config)
        self._degree_sum = None
        self.phase = "stream" if graph.n <= 2 else "head"

    def _preprocess(self):
        # Tiny graphs cannot fund a head phase; read the degrees up
        # front and run a single full-budget phase instead.
        if self.graph.n <= 2:
            total = 0
            for v in range(self.graph.n):
                self.counter.total += 1
                total += self.graph.degree(v)
            self._degree_sum = total

    def _make_machine(self):
        return self._run()

    def _run(self):
        g, c = self.graph, self.counter
        n = g.n
        if self._degree_sum is None:
            total = 0
            for v in range(n):
                c.total += 1
                total += g.degree(v)
                # banked as it accumulates: paced deduped pulls pop
                # slowly enough that the head phase can end mid-loop
                self._degree_sum = total
                self._emit(v, v, 0)
                yield
            self._refresh_budget()
        else:
            for v in range(n):
                c.total += 1
                self._emit(v, v, 0)
                yield
        sources = _balanced_order(range(n)) if self.dedup else range(n)
        for s in sources:
            while len(self.q) >= self.qcap:
                yield IDLE
            yield from slot_search(self, s, skip_le=0, sweep=True)

    def _after_emit(self):
        if self.phase == "head" and self.emitted >= self.graph.n // 2:
            self.phase = "stream"
            self._refresh_budget()

    def _refresh_budget(self):
        if self.phase == "head":
            self._budget_cached = self.config.head * self._budget_scale
            return
        assert self._degree_sum is not None, "degree sum not banked in time"
        self._budget_cached = self._budget_avg_degree(
            self.config.per_avg_degree, self._degree_sum, self.graph.weighted)

    def bound_base(self):
        return base_avg_degree(self.graph)


class NoSelfApsdEnumerator(Enumerator):
    """All n(n-1) non-self pairs, order free."""

    _dedup_paced = True

    def __init__(self, graph, counter=None, config=None):
        super().__init__(graph, counter, config)
        self.mode = OutputMode(no_self=True)
        self._pending = deque()
        self._degsum_budget = 0
        self._tmin = None
        self._order = None
        self._rank = None

    def _preprocess(self):
        if not self.graph.weighted:
            return
        # Weighted rows have no unit-distance head start, so the cursor
        # emits each vertex's cheapest outgoing distance instead, and
        # processing vertices in degree order keeps those scans short
        # while the queue is still thin.  Counting sort over degrees.
        g, c = self.graph, self.counter
        n = g.n
        degs = []
        dmax = 0
        total = 0
        for v in range(n):
            c.total += 1
            d = g.degree(v)
            degs.append(d)
            total += d
            if d > dmax:
                dmax = d
        buckets = []
        for _ in range(dmax + 1):
            c.total += 1
            buckets.append([])
        for v in range(n):
            c.total += 1
            buckets[degs[v]].append(v)
        order = []
        rank = [0] * n
        for bucket in buckets:
            for v in bucket:
                c.total += 1
                rank[v] = len(order)
                order.append(v)
        self._order = order
        self._rank = rank
        self._degsum_budget = total
        self._tmin = LazyArray(n, c)

    def _dedup_key_fn(self):
        if not self.graph.weighted:
            return lambda v: v
        # Keep the copy produced by the vertex processed first, so the
        # filter never starves the cursor's early head-start items.
        return lambda v: self._rank[v]

    def _make_machine(self):
        return self._drive()

    def _cursor_order(self):
        # weighted runs already walk vertices by degree rank
        base = self._order if self._order is not None \
            else range(self.graph.n)
        return _balanced_order(base) if self.dedup else base

    def _drive(self):
        cursor = self._weighted_cursor() if self.graph.weighted \
            else self._unweighted_cursor()
        cursor_alive = True
        pending = self._pending
        search = None
        while True:
            if cursor_alive and len(self.q) < self.low_water:
                try:
                    yield next(cursor)
                except StopIteration:
                    cursor_alive = False
                continue
            if search is None and pending:
                self.counter.total += 1
                search = self._make_search(pending.popleft())
                yield
                continue
            if search is not None:
                try:
                    yield next(search)
                except StopIteration:
                    search = None
                continue
            if cursor_alive:
                try:
                    yield next(cursor)
                except StopIteration:
                    cursor_alive = False
                continue
            return

    def _unweighted_cursor(self):
        g, c = self.graph, self.counter
        n = g.n
        offsets, targets = g.offsets, g.targets
        seen = 0
        slots = [None, None]
        for s in self._cursor_order():
            while len(self.q) >= self.qcap:
                yield IDLE
            c.total += 1
            deg = offsets[s + 1] - offsets[s]
            seen += deg
            self._degsum_budget = seen
            self._refresh_budget()
            yield
            marks = None
            out_arc = False
            if deg > 0:
                slot = s & 1
                if slots[slot] is not None:
                    slots[slot].release()
                marks = LazyArray(n, c)
                slots[slot] = marks
                yield
            for i in range(offsets[s], offsets[s + 1]):
                c.total += 1
                t = targets[i]
                if t != s:
                    out_arc = True
                    if marks.read(t) is None:
                        marks.write(t, 1)
                        self._emit(s, t, 1)
                yield
            if out_arc:
                self._pending.append(s)
                c.total += 1
                yield
            else:
                # Only loops or nothing at all: the row is all
                # unreachable and needs no search.
                for t in range(n):
                    while len(self.q) >= self.qcap:
                        yield IDLE
                    c.total += 1
                    if t != s:
                        self._emit(s, t, INFINITE)
                    yield

    def _weighted_cursor(self):
        g, c = self.graph, self.counter
        n = g.n
        offsets, targets, weights = g.offsets, g.targets, g.weights
        for s in self._cursor_order():
            while len(self.q) >= self.qcap:
                yield IDLE
            c.total += 1
            yield
            best_w = best_t = None
            for i in range(offsets[s], offsets[s + 1]):
                c.total += 1
                t = targets[i]
                if t != s and (best_w is None or weights[i] < best_w):
                    best_w, best_t = weights[i], t
                yield
            if best_t is None:
                # No way out of s: its whole row is unreachable.
                for t in range(n):
                    while len(self.q) >= self.qcap:
                        yield IDLE
                    c.total += 1
                    if t != s:
                        self._emit(s, t, INFINITE)
                    yield
            else:
                # A cheapest outgoing arc is a shortest path to its head:
                # any other route starts with an arc at least as heavy.
                self._tmin.write(s, best_t)
                self._emit(s, best_t, best_w)
                self._pending.append(s)
                c.total += 1
                yield

    def _make_search(self, s):
        if not self.graph.weighted:
            return slot_search(self, s, skip_le=1, sweep=True)
        return self._weighted_search(s)

    def _weighted_search(self, s):
        t = self._tmin.read(s)
        yield
        yield from slot_search(self, s, skip_le=0, skip_target=t, sweep=True)

    def _refresh_budget(self):
        self._budget_cached = self._budget_avg_degree(
            self.config.per_avg_degree, self._degsum_budget,
            self.graph.weighted)

    def bound_base(self):
        return base_avg_degree(self.graph)
