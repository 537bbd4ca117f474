"""Addressable binary min-heap with decrease-key.

Every insert returns a handle that stays valid until the entry is
extracted.  Key ties break by insertion order (first inserted wins), so
extraction order is deterministic.  Each key comparison charges one
counted step; the generator variants of the operations additionally
yield once per comparison so an enumerator machine can suspend inside a
heap operation with step-exact budgets.  Extraction performs at most
2 * ceil(log2(size)) comparisons, insert and decrease_key at most
ceil(log2(size)).
"""
from __future__ import annotations

from .metering import StepCounter


def _drain(gen):
    while True:
        try:
            next(gen)
        except StopIteration as stop:
            return stop.value


class AddressablePQ:
    __slots__ = ("counter", "_heap", "_keys", "_seqs", "_payloads", "_pos", "_next_seq")

    def __init__(self, counter: StepCounter | None = None):
        self.counter = counter if counter is not None else StepCounter()
        self._heap: list[int] = []
        self._keys: list = []
        self._seqs: list[int] = []
        self._payloads: list = []
        self._pos: list[int] = []
        self._next_seq = 0

    def __len__(self) -> int:
        return len(self._heap)

    def __bool__(self) -> bool:
        return bool(self._heap)

    def __contains__(self, handle: int) -> bool:
        """True while the handle's entry is live (inserted, not extracted)."""
        return 0 <= handle < len(self._keys) and self._pos[handle] >= 0

    def key_of(self, handle: int):
        self._check_live(handle)
        return self._keys[handle]

    def peek_min(self):
        if not self._heap:
            raise IndexError("peek on empty queue")
        h = self._heap[0]
        return self._keys[h], self._payloads[h]

    # -- plain operations -------------------------------------------------

    def insert(self, key, payload=None) -> int:
        return _drain(self.insert_g(key, payload))

    def decrease_key(self, handle: int, key) -> None:
        _drain(self.decrease_key_g(handle, key))

    def extract_min(self):
        """Remove and return the minimal (key, payload), or None if empty."""
        return _drain(self.extract_min_g())

    def build(self, items) -> list[int]:
        """Bulk-load (key, payload) pairs; linear comparison count."""
        if self._heap:
            raise ValueError("build requires an empty queue")
        handles = []
        for key, payload in items:
            h = self._new_entry(key, payload)
            self._pos[h] = len(self._heap)
            self._heap.append(h)
            handles.append(h)
        for i in reversed(range(len(self._heap) // 2)):
            _drain(self._sift_down_g(i))
        return handles

    # -- generator operations (one yield per comparison) ------------------

    def insert_g(self, key, payload=None):
        h = self._new_entry(key, payload)
        i = len(self._heap)
        self._pos[h] = i
        self._heap.append(h)
        yield from self._sift_up_g(i)
        return h

    def decrease_key_g(self, handle: int, key):
        self._check_live(handle)
        if (key, self._seqs[handle]) > (self._keys[handle], self._seqs[handle]):
            raise ValueError(
                f"decrease_key to larger key {key!r} (current {self._keys[handle]!r})")
        self._keys[handle] = key
        yield from self._sift_up_g(self._pos[handle])

    def extract_min_g(self):
        heap = self._heap
        if not heap:
            return None
        h = heap[0]
        last = heap.pop()
        if heap:
            heap[0] = last
            self._pos[last] = 0
            yield from self._sift_down_g(0)
        self._pos[h] = -1
        return self._keys[h], self._payloads[h]

    # -- internals --------------------------------------------------------

    def _new_entry(self, key, payload) -> int:
        h = len(self._keys)
        self._keys.append(key)
        self._seqs.append(self._next_seq)
        self._next_seq += 1
        self._payloads.append(payload)
        self._pos.append(-1)
        return h

    def _check_live(self, handle: int) -> None:
        if not 0 <= handle < len(self._keys) or self._pos[handle] < 0:
            raise ValueError(f"handle {handle} is not live")

    def _less(self, ha: int, hb: int) -> bool:
        self.counter.total += 1
        ka, kb = self._keys[ha], self._keys[hb]
        if ka != kb:
            return ka < kb
        return self._seqs[ha] < self._seqs[hb]

    def _sift_up_g(self, i: int):
        heap, pos = self._heap, self._pos
        while i > 0:
            parent = (i - 1) >> 1
            hp, hi = heap[parent], heap[i]
            less = self._less(hi, hp)
            yield
            if not less:
                return
            heap[i], heap[parent] = hp, hi
            pos[hp], pos[hi] = i, parent
            i = parent

    def _sift_down_g(self, i: int):
        heap, pos = self._heap, self._pos
        n = len(heap)
        while True:
            child = 2 * i + 1
            if child >= n:
                return
            right = child + 1
            if right < n:
                less = self._less(heap[right], heap[child])
                yield
                if less:
                    child = right
            less = self._less(heap[child], heap[i])
            yield
            if not less:
                return
            hc, hi = heap[child], heap[i]
            heap[i], heap[child] = hc, hi
            pos[hc], pos[hi] = i, child
            i = child
