"""Globally distance-sorted all-pairs enumeration.

One search instance per source runs lazily; a driver interleaves them so
the merged stream comes out in non-decreasing distance order.

Unweighted driver: a FIFO pool.  Hop distances make every live
instance's next production either the level being emitted or the next
one, so the head of the pool always holds a global minimum: emit it,
advance the instance, keep it at the head while it stays on the level
and rotate it to the back when it moves past it.

Weighted driver: a priority queue keyed by each instance's next
production distance.  The initial key is the weight of the cheapest
non-loop arc, which is exactly the first distance the instance will
produce; afterwards each instance is reinserted under the distance of
its freshly produced pair, so extraction order is emission order.

Unreachable pairs carry the largest distance and close the stream.
Rows of vertices that never got an instance are emitted directly; the
rest come from connected components (undirected, constant work per
pair) or from per-instance sweeps gated on a full-reach check
(directed).  Space is quadratic: every instance keeps its distance
array alive so the closing phase can read it.
"""
from __future__ import annotations

from collections import deque

from .base import (Enumerator, INFINITE, IDLE, OutputMode, base_max_degree)
from ..lazyarray import LazyArray
from ..pq import AddressablePQ


class _Instance:
    __slots__ = ("s", "dist", "settled", "handles", "gen", "pending",
                 "reached")

    def __init__(self, s, dist, settled=None, handles=None):
        self.s = s
        self.dist = dist
        self.settled = settled
        self.handles = handles
        self.gen = None
        self.pending = None
        self.reached = 0


class _SortedBase(Enumerator):
    """Machinery shared by the sorted regimes."""

    def __init__(self, graph, mode: OutputMode, counter=None, config=None):
        super().__init__(graph, counter, config)
        self.mode = mode
        self._instances: list[_Instance] = []
        self._fans: list[int] = []

    def _refresh_budget(self):
        self._budget_cached = self._budget_max_degree(
            self.config.per_pool_degree, self.graph.weighted)

    def bound_base(self):
        return base_max_degree(self.graph)

    # -- per-source search instances --------------------------------------

    def _new_bfs_instance(self, s, skip_le):
        inst = _Instance(s, LazyArray(self.graph.n, self.counter))
        inst.gen = self._bfs_instance(inst, skip_le)
        self._instances.append(inst)
        return inst

    def _new_dijkstra_instance(self, s):
        n, c = self.graph.n, self.counter
        inst = _Instance(s, LazyArray(n, c), LazyArray(n, c), LazyArray(n, c))
        inst.gen = self._dijkstra_instance(inst)
        self._instances.append(inst)
        return inst

    def _bfs_instance(self, inst, skip_le):
        g, c = self.graph, self.counter
        offsets, targets = g.offsets, g.targets
        dist = inst.dist
        s = inst.s
        dist.write(s, 0)
        inst.reached = 1
        c.total += 1
        frontier = deque([s])
        yield
        while frontier:
            c.total += 1
            v = frontier.popleft()
            dv = dist.read(v)
            yield
            nd = dv + 1
            for i in range(offsets[v], offsets[v + 1]):
                c.total += 1
                w = targets[i]
                if dist.read(w) is None:
                    dist.write(w, nd)
                    inst.reached += 1
                    c.total += 1
                    frontier.append(w)
                yield
            if dv > skip_le:
                inst.pending = (s, v, dv)
            yield

    def _dijkstra_instance(self, inst):
        g, c = self.graph, self.counter
        offsets, targets, weights = g.offsets, g.targets, g.weights
        dist, settled, handles = inst.dist, inst.settled, inst.handles
        s = inst.s
        pq = AddressablePQ(c)
        dist.write(s, 0)
        inst.reached = 1
        h = yield from pq.insert_g(0, s)
        handles.write(s, h)
        yield
        while pq:
            d, v = yield from pq.extract_min_g()
            settled.write(v, 1)
            yield
            for i in range(offsets[v], offsets[v + 1]):
                c.total += 1
                w = targets[i]
                if settled.read(w) is not None:
                    yield
                    continue
                nd = d + weights[i]
                dw = dist.read(w)
                if dw is None:
                    dist.write(w, nd)
                    inst.reached += 1
                    hw = yield from pq.insert_g(nd, w)
                    handles.write(w, hw)
                elif nd < dw:
                    dist.write(w, nd)
                    yield from pq.decrease_key_g(handles.read(w), nd)
                yield
            if v != s:
                inst.pending = (s, v, d)
            yield

    def _advance(self, inst):
        while inst.pending is None:
            try:
                next(inst.gen)
            except StopIteration:
                return False
            yield
        return True

    # -- drivers -----------------------------------------------------------

    def _pool_loop(self, pool):
        c = self.counter
        while pool:
            while len(self.q) >= self.qcap:
                yield IDLE
            inst = pool[0]
            if inst.pending is None:
                ok = yield from self._advance(inst)
                if not ok:
                    c.total += 1
                    pool.popleft()
                    yield
                    continue
            u, v, d = inst.pending
            inst.pending = None
            c.total += 1
            self._emit(u, v, d)
            yield
            ok = yield from self._advance(inst)
            if not ok:
                c.total += 1
                pool.popleft()
                yield
            elif inst.pending[2] != d:
                c.total += 1
                pool.popleft()
                pool.append(inst)
                yield

    def _sched_loop(self, sched):
        c = self.counter
        while sched:
            while len(self.q) >= self.qcap:
                yield IDLE
            _key, inst = yield from sched.extract_min_g()
            yield
            if inst.pending is None:
                ok = yield from self._advance(inst)
                if not ok:
                    continue
            u, v, d = inst.pending
            inst.pending = None
            c.total += 1
            self._emit(u, v, d)
            yield
            ok = yield from self._advance(inst)
            if ok:
                yield from sched.insert_g(inst.pending[2], inst)
                yield

    # -- closing infinite phase -------------------------------------------

    def _inf_phase(self):
        g, c = self.graph, self.counter
        n = g.n
        for s in self._fans:
            for t in range(n):
                while len(self.q) >= self.qcap:
                    yield IDLE
                c.total += 1
                if t != s:
                    self._emit(s, t, INFINITE)
                yield
        if g.directed:
            yield from self._inf_directed()
        else:
            yield from self._inf_undirected()

    def _inf_undirected(self):
        # A pair is unreachable exactly when its endpoints sit in
        # different connected components, so label components once and
        # emit cross pairs with constant work each.
        g, c = self.graph, self.counter
        n = g.n
        offsets, targets = g.offsets, g.targets
        comp = [-1] * n
        comps: list[list[int]] = []
        for v in range(n):
            c.total += 1
            if comp[v] >= 0:
                yield
                continue
            cid = len(comps)
            comps.append([v])
            comp[v] = cid
            c.total += 1
            frontier = deque([v])
            yield
            while frontier:
                c.total += 1
                u = frontier.popleft()
                yield
                for i in range(offsets[u], offsets[u + 1]):
                    c.total += 1
                    w = targets[i]
                    if comp[w] < 0:
                        comp[w] = cid
                        comps[cid].append(w)
                        c.total += 1
                        frontier.append(w)
                    yield
        if len(comps) <= 1:
            return
        for inst in self._instances:
            s = inst.s
            cs = comp[s]
            c.total += 1
            yield
            for cid, bucket in enumerate(comps):
                if cid == cs:
                    continue
                for t in bucket:
                    while len(self.q) >= self.qcap:
                        yield IDLE
                    c.total += 1
                    self._emit(s, t, INFINITE)
                    yield

    def _inf_directed(self):
        # No component shortcut under direction; sweep each incomplete
        # instance's distance array and skip the fully reaching ones.
        g, c = self.graph, self.counter
        n = g.n
        for inst in self._instances:
            c.total += 1
            if inst.reached >= n:
                yield
                continue
            yield
            dist = inst.dist
            for t in range(n):
                while len(self.q) >= self.qcap:
                    yield IDLE
                c.total += 1
                if dist.read(t) is None:
                    self._emit(inst.s, t, INFINITE)
                yield


class SortedApsdEnumerator(_SortedBase):
    """All n^2 pairs in globally non-decreasing distance order."""

    def __init__(self, graph, mode: OutputMode = OutputMode(sorted=True),
                 counter=None, config=None):
        super().__init__(graph, mode, counter, config)
        self.phase = "stream" if graph.n <= 2 else "head"

    def _preprocess(self):
        if self.graph.n <= 2:
            dmax = 0
            for v in range(self.graph.n):
                self.counter.total += 1
                dmax = max(dmax, self.graph.degree(v))
            self._dmax_seen = dmax

    def _after_emit(self):
        if self.phase == "head" and self.emitted >= self.graph.n // 2:
            self.phase = "stream"
            self._refresh_budget()

    def _make_machine(self):
        return self._run()

    def _run(self):
        g, c = self.graph, self.counter
        n = g.n
        dmax = self._dmax_seen
        for v in range(n):
            c.total += 1
            d = g.degree(v)
            if d > dmax:
                dmax = d
            self._emit(v, v, 0)
            yield
        self._dmax_seen = dmax
        self._refresh_budget()
        if g.weighted:
            yield from self._start_weighted()
        else:
            offsets, targets = g.offsets, g.targets
            pool = deque()
            for v in range(n):
                c.total += 1
                # No non-loop arc: the whole row past the self pair is
                # unreachable, so a search instance would burn setup and
                # teardown without producing; fan the row out instead.
                out_arc = False
                for i in range(offsets[v], offsets[v + 1]):
                    c.total += 1
                    if targets[i] != v:
                        out_arc = True
                        break
                if out_arc:
                    pool.append(self._new_bfs_instance(v, 0))
                    c.total += 1
                else:
                    self._fans.append(v)
                yield
            yield from self._pool_loop(pool)
        if not self.mode.reachable_only:
            yield from self._inf_phase()

    def _start_weighted(self):
        g, c = self.graph, self.counter
        offsets, targets, weights = g.offsets, g.targets, g.weights
        sched = AddressablePQ(c)
        for v in range(g.n):
            c.total += 1
            best = None
            for i in range(offsets[v], offsets[v + 1]):
                c.total += 1
                t = targets[i]
                if t != v and (best is None or weights[i] < best):
                    best = weights[i]
                yield
            if best is None:
                self._fans.append(v)
                yield
                continue
            inst = self._new_dijkstra_instance(v)
            c.total += 1
            yield
            yield from sched.insert_g(best, inst)
            yield
        yield from self._sched_loop(sched)


class SortedNoSelfApsdEnumerator(_SortedBase):
    """All n(n-1) non-self pairs in non-decreasing distance order."""

    def __init__(self, graph, mode: OutputMode = OutputMode(sorted=True,
                                                            no_self=True),
                 counter=None, config=None):
        super().__init__(graph, mode, counter, config)
        self._sources: list[int] = []
        self._sched = None

    def _preprocess(self):
        g, c = self.graph, self.counter
        n = g.n
        if not g.weighted:
            offsets, targets = g.offsets, g.targets
            dmax = 0
            for v in range(n):
                c.total += 1
                deg = g.degree(v)
                if deg > dmax:
                    dmax = deg
                # A vertex with no non-loop arc produces nothing: treat
                # it like an isolated one and fan its row out directly.
                out_arc = False
                for i in range(offsets[v], offsets[v + 1]):
                    c.total += 1
                    if targets[i] != v:
                        out_arc = True
                        break
                if out_arc:
                    self._sources.append(v)
                else:
                    self._fans.append(v)
            self._dmax_seen = dmax
            return
        # Weighted: the whole setup fits the preprocessing allowance,
        # so arrays, instances and the scheduler heap are built here.
        offsets, targets, weights = g.offsets, g.targets, g.weights
        dmax = 0
        entries = []
        for v in range(n):
            c.total += 1
            deg = offsets[v + 1] - offsets[v]
            if deg > dmax:
                dmax = deg
            best = None
            for i in range(offsets[v], offsets[v + 1]):
                c.total += 1
                t = targets[i]
                if t != v and (best is None or weights[i] < best):
                    best = weights[i]
            if best is None:
                self._fans.append(v)
                continue
            inst = self._new_dijkstra_instance(v)
            c.total += 1
            entries.append((best, inst))
        self._dmax_seen = dmax
        sched = AddressablePQ(c)
        sched.build(entries)
        self._sched = sched

    def _make_machine(self):
        return self._run()

    def _run(self):
        g = self.graph
        if g.weighted:
            yield from self._sched_loop(self._sched)
        else:
            yield from self._edge_cursor()
            pool = deque()
            c = self.counter
            for s in self._sources:
                c.total += 1
                pool.append(self._new_bfs_instance(s, 1))
                c.total += 1
                yield
            yield from self._pool_loop(pool)
        if not self.mode.reachable_only:
            yield from self._inf_phase()

    def _edge_cursor(self):
        # Unit arcs are distance-1 pairs; they open the stream and bank
        # enough output to fund instance setup.  Marks deduplicate
        # parallel arcs.
        g, c = self.graph, self.counter
        n = g.n
        offsets, targets = g.offsets, g.targets
        slots = [None, None]
        for idx, s in enumerate(self._sources):
            while len(self.q) >= self.qcap:
                yield IDLE
            c.total += 1
            slot = idx & 1
            if slots[slot] is not None:
                slots[slot].release()
            marks = LazyArray(n, c)
            slots[slot] = marks
            yield
            for i in range(offsets[s], offsets[s + 1]):
                c.total += 1
                t = targets[i]
                if t != s and marks.read(t) is None:
                    marks.write(t, 1)
                    self._emit(s, t, 1)
                yield
        if slots[0] is not None:
            slots[0].release()
        if slots[1] is not None:
            slots[1].release()
