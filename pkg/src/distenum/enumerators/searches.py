"""Instrumented single-source searches used as machine building blocks.

Both searches are generators that yield once per handful of counted
steps so a pull can stop them mid-flight with bounded overshoot.  They
emit (source, target, distance) into the owning enumerator's solution
queue at visit time: breadth-first in hop order, best-first in weight
order.  The optional closing sweep reports unreached vertices with
infinite distance.  Both back off (yield IDLE) between visits while the
solution queue is at capacity, so banked output stays linear in n.
"""
from __future__ import annotations

from collections import deque

from .base import IDLE, INFINITE
from ..lazyarray import LazyArray
from ..pq import AddressablePQ


def slot_search(enum, s: int, *, skip_le: int = -1,
                skip_target: int | None = None, sweep: bool = True):
    """One search whose arrays live in an alternating two-slot pool.

    Sequential all-pairs machines call this once per source; releasing
    the slot of the search before last keeps at most two searches' cells
    concurrently live, so lazy space stays linear in n.
    """
    g = enum.graph
    counter = enum.counter
    slot = enum._slot_idx & 1
    enum._slot_idx += 1
    old = enum._slots[slot]
    if old is not None:
        for arr in old:
            arr.release()
    want = 3 if g.weighted else 1
    arrs = tuple(LazyArray(g.n, counter) for _ in range(want))
    enum._slots[slot] = arrs
    yield
    if g.weighted:
        yield from dijkstra_search(enum, s, *arrs, skip_self=skip_le >= 0,
                                   skip_target=skip_target, sweep=sweep)
    else:
        yield from bfs_search(enum, s, arrs[0], skip_le=skip_le, sweep=sweep)


def bfs_search(enum, s: int, dist: LazyArray, *, skip_le: int = -1,
               sweep: bool = True):
    """Breadth-first search from s, emitting visits with hop distance.

    skip_le suppresses emissions with distance <= skip_le (-1 emits all,
    0 drops the self pair, 1 additionally drops direct neighbors).
    """
    g = enum.graph
    counter = enum.counter
    offsets, targets = g.offsets, g.targets
    dist.write(s, 0)
    counter.total += 1
    frontier = deque([s])
    yield
    while frontier:
        while len(enum.q) >= enum.qcap:
            yield IDLE
        counter.total += 1
        v = frontier.popleft()
        dv = dist.read(v)
        enum._see_degree(offsets[v + 1] - offsets[v])
        yield
        nd = dv + 1
        for i in range(offsets[v], offsets[v + 1]):
            counter.total += 1
            w = targets[i]
            if dist.read(w) is None:
                dist.write(w, nd)
                counter.total += 1
                frontier.append(w)
            yield
        if dv > skip_le:
            enum._emit(s, v, dv)
        yield
    if sweep:
        for t in range(g.n):
            while len(enum.q) >= enum.qcap:
                yield IDLE
            counter.total += 1
            if dist.read(t) is None:
                enum._emit(s, t, INFINITE)
            yield


def dijkstra_search(enum, s: int, dist: LazyArray, settled: LazyArray,
                    handles: LazyArray, *, skip_self: bool = False,
                    skip_target: int | None = None, sweep: bool = True):
    """Best-first search from s, emitting settles in distance order."""
    g = enum.graph
    counter = enum.counter
    offsets, targets, weights = g.offsets, g.targets, g.weights
    pq = AddressablePQ(counter)
    dist.write(s, 0)
    h = yield from pq.insert_g(0, s)
    handles.write(s, h)
    yield
    while pq:
        while len(enum.q) >= enum.qcap:
            yield IDLE
        d, v = yield from pq.extract_min_g()
        settled.write(v, 1)
        enum._see_degree(offsets[v + 1] - offsets[v])
        yield
        for i in range(offsets[v], offsets[v + 1]):
            counter.total += 1
            w = targets[i]
            if settled.read(w) is not None:
                yield
                continue
            nd = d + weights[i]
            dw = dist.read(w)
            if dw is None:
                dist.write(w, nd)
                hw = yield from pq.insert_g(nd, w)
                handles.write(w, hw)
            elif nd < dw:
                dist.write(w, nd)
                yield from pq.decrease_key_g(handles.read(w), nd)
            yield
        if (v != s or not skip_self) and v != skip_target:
            enum._emit(s, v, d)
        yield
    if sweep:
        for t in range(g.n):
            while len(enum.q) >= enum.qcap:
                yield IDLE
            counter.total += 1
            if settled.read(t) is None:
                enum._emit(s, t, INFINITE)
            yield
