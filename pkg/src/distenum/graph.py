"""Graph storage, text format, and instance generators.

Graphs are immutable once built: vertices are 0-based ints, adjacency is
kept in CSR form (offsets/targets/weights).  Self-loops and parallel edges
are legal input; an undirected edge is stored in both directions.  Edge
weights are non-negative ints capped at n ** weight_cap_exponent, which
keeps all finite distances well inside exact integer range.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

DEFAULT_WEIGHT_CAP_EXPONENT = 3


class GraphFormatError(ValueError):
    """Raised for malformed graph text or inconsistent edge lists."""


@dataclass(frozen=True)
class DegreeStats:
    max_degree: int
    degree_sum: int
    n: int

    @property
    def avg_degree(self) -> Fraction:
        if self.n == 0:
            return Fraction(0)
        return Fraction(self.degree_sum, self.n)


class Graph:
    """Immutable CSR graph.

    degree(v) counts stored arcs leaving v, so an undirected edge adds one
    to both endpoints and an undirected self-loop adds two to its vertex.
    """

    __slots__ = ("n", "m", "directed", "weighted", "offsets", "targets", "weights", "_stats")

    def __init__(self, n: int, m: int, directed: bool, weighted: bool,
                 offsets: list[int], targets: list[int], weights: list[int] | None):
        self.n = n
        self.m = m
        self.directed = directed
        self.weighted = weighted
        self.offsets = offsets
        self.targets = targets
        self.weights = weights
        self._stats: DegreeStats | None = None

    @property
    def arc_count(self) -> int:
        return len(self.targets)

    def degree(self, v: int) -> int:
        return self.offsets[v + 1] - self.offsets[v]

    def arcs_from(self, v: int) -> range:
        return range(self.offsets[v], self.offsets[v + 1])

    def neighbors(self, v: int) -> Iterator[int]:
        for i in self.arcs_from(v):
            yield self.targets[i]

    def stats(self) -> DegreeStats:
        if self._stats is None:
            dmax = 0
            for v in range(self.n):
                d = self.degree(v)
                if d > dmax:
                    dmax = d
            self._stats = DegreeStats(dmax, len(self.targets), self.n)
        return self._stats

    def __repr__(self) -> str:
        kind = "directed" if self.directed else "undirected"
        w = "weighted" if self.weighted else "unweighted"
        return f"Graph(n={self.n}, m={self.m}, {kind}, {w})"


def from_edge_list(n: int, edges: Sequence[tuple], directed: bool, *,
                   weighted: bool | None = None,
                   weight_cap_exponent: int = DEFAULT_WEIGHT_CAP_EXPONENT) -> Graph:
    """Build a Graph from (u, v) or (u, v, w) tuples.

    All edges must agree on the presence of a weight.  Weights must be
    ints in [0, n ** weight_cap_exponent]; ids must be in [0, n).
    """
    if n < 0:
        raise GraphFormatError(f"vertex count must be non-negative, got {n}")
    if weighted is None:
        weighted = bool(edges) and len(edges[0]) == 3
    cap = n ** weight_cap_exponent
    norm: list[tuple[int, int, int]] = []
    for e in edges:
        if weighted:
            if len(e) != 3:
                raise GraphFormatError(f"weighted graph needs (u, v, w) edges, got {e!r}")
            u, v, w = e
            if not isinstance(w, int) or isinstance(w, bool):
                raise GraphFormatError(f"weight must be an int, got {w!r}")
            if w < 0:
                raise GraphFormatError(f"negative weight {w} on edge ({u}, {v})")
            if w > cap:
                raise GraphFormatError(
                    f"weight {w} on edge ({u}, {v}) exceeds cap {cap} (n**{weight_cap_exponent})")
        else:
            if len(e) != 2:
                raise GraphFormatError(f"unweighted graph needs (u, v) edges, got {e!r}")
            u, v = e
            w = 1
        if not (0 <= u < n) or not (0 <= v < n):
            raise GraphFormatError(f"edge ({u}, {v}) out of range for n={n}")
        norm.append((u, v, w))

    counts = [0] * (n + 1)
    for u, v, _ in norm:
        counts[u + 1] += 1
        if not directed:
            counts[v + 1] += 1
    offsets = counts
    for i in range(n):
        offsets[i + 1] += offsets[i]
    total = offsets[n]
    targets = [0] * total
    wlist: list[int] | None = [0] * total if weighted else None
    fill = offsets[:-1].copy() if n else []
    for u, v, w in norm:
        i = fill[u]
        fill[u] = i + 1
        targets[i] = v
        if wlist is not None:
            wlist[i] = w
        if not directed:
            j = fill[v]
            fill[v] = j + 1
            targets[j] = u
            if wlist is not None:
                wlist[j] = w
    return Graph(n, len(norm), directed, weighted, offsets, targets, wlist)


# ---------------------------------------------------------------------------
# text format:  header "n m directed|undirected weighted|unweighted",
# then one edge per line ("u v" or "u v w"); '#' starts a comment.

def format_graph(g: Graph) -> str:
    kind = "directed" if g.directed else "undirected"
    w = "weighted" if g.weighted else "unweighted"
    lines = [f"{g.n} {g.m} {kind} {w}"]
    if g.directed:
        for u in range(g.n):
            for i in g.arcs_from(u):
                v = g.targets[i]
                if g.weighted:
                    lines.append(f"{u} {v} {g.weights[i]}")
                else:
                    lines.append(f"{u} {v}")
    else:
        # each undirected edge is stored twice; emit the u <= v copy, and
        # for self-loops (two identical arcs per edge) every second one
        for u in range(g.n):
            loop_seen = 0
            for i in g.arcs_from(u):
                v = g.targets[i]
                if u < v:
                    emit = True
                elif u == v:
                    loop_seen += 1
                    emit = loop_seen % 2 == 0
                else:
                    emit = False
                if emit:
                    if g.weighted:
                        lines.append(f"{u} {v} {g.weights[i]}")
                    else:
                        lines.append(f"{u} {v}")
    return "\n".join(lines) + "\n"


def parse_graph(text: str, *, weight_cap_exponent: int = DEFAULT_WEIGHT_CAP_EXPONENT) -> Graph:
    rows: list[list[str]] = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line.split())
    if not rows:
        raise GraphFormatError("empty graph text")
    head = rows[0]
    if len(head) != 4:
        raise GraphFormatError(f"bad header {' '.join(head)!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise GraphFormatError(f"bad header counts {' '.join(head)!r}") from exc
    if head[2] not in ("directed", "undirected") or head[3] not in ("weighted", "unweighted"):
        raise GraphFormatError(f"bad header flags {' '.join(head)!r}")
    directed = head[2] == "directed"
    weighted = head[3] == "weighted"
    body = rows[1:]
    if len(body) != m:
        raise GraphFormatError(f"header says {m} edges, found {len(body)}")
    edges: list[tuple] = []
    want = 3 if weighted else 2
    for row in body:
        if len(row) != want:
            raise GraphFormatError(f"bad edge line {' '.join(row)!r}")
        try:
            nums = [int(x) for x in row]
        except ValueError as exc:
            raise GraphFormatError(f"bad edge line {' '.join(row)!r}") from exc
        edges.append(tuple(nums))
    return from_edge_list(n, edges, directed, weighted=weighted,
                          weight_cap_exponent=weight_cap_exponent)


def load_graph(path) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph(fh.read())


def save_graph(g: Graph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_graph(g))


# ---------------------------------------------------------------------------
# generators

def gen_clique_path(k: int) -> Graph:
    """Clique of size k with one clique edge replaced by a long path.

    Vertices 0..k-1 form the clique; the edge {k-2, k-1} is replaced by a
    path through k*k fresh inner vertices (ids k..k+k*k-1), so the path
    between its clique endpoints has k*k + 1 edges.  n = k + k*k and every
    clique vertex keeps degree k - 1.
    """
    if k < 3:
        raise ValueError(f"need k >= 3, got {k}")
    n = k + k * k
    edges: list[tuple[int, int]] = []
    for i in range(k):
        for j in range(i + 1, k):
            if (i, j) != (k - 2, k - 1):
                edges.append((i, j))
    chain = [k - 2] + list(range(k, k + k * k)) + [k - 1]
    for a, b in zip(chain, chain[1:]):
        edges.append((a, b))
    return from_edge_list(n, edges, directed=False)


def gen_star(n: int, weights: Sequence[int]) -> Graph:
    """Weighted star: center 0 joined to 1..n-1 with the given weights."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if len(weights) != n - 1:
        raise ValueError(f"need {n - 1} weights for n={n}, got {len(weights)}")
    edges = [(0, i + 1, int(w)) for i, w in enumerate(weights)]
    return from_edge_list(n, edges, directed=False, weighted=True)


def gen_bmm_graph(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> Graph:
    """Tripartite layered graph whose distance-2 pairs encode a boolean product.

    For d x d inputs, layer I is [0, d), layer J is [d, 2d), layer K is
    [2d, 3d); arc i-j exists iff a[i][j], arc j-k iff b[j][k].  2*d*d extra
    isolated vertices pad the instance.  (a @ b)[i][k] = 1 exactly when the
    distance from i to 2d + k is 2.
    """
    d = len(a)
    if d == 0 or any(len(r) != d for r in a) or len(b) != d or any(len(r) != d for r in b):
        raise ValueError("need two square matrices of the same size")
    n = 2 * d * d + 3 * d
    edges: list[tuple[int, int]] = []
    for i in range(d):
        for j in range(d):
            if a[i][j]:
                edges.append((i, d + j))
    for j in range(d):
        for k in range(d):
            if b[j][k]:
                edges.append((d + j, 2 * d + k))
    return from_edge_list(n, edges, directed=False)


def gen_isolated_plus_edge(n: int) -> Graph:
    """n - 2 isolated vertices plus the single edge {n-2, n-1}."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    return from_edge_list(n, [(n - 2, n - 1)], directed=False)


def gen_random(n: int, m: int, *, directed: bool = False, max_weight: int = 0,
               seed: int = 0) -> Graph:
    """Uniform simple random graph with m edges; weighted iff max_weight > 0."""
    if n < 0 or m < 0:
        raise ValueError("n and m must be non-negative")
    limit = n * (n - 1) if directed else n * (n - 1) // 2
    if m > limit:
        raise ValueError(f"m={m} infeasible for n={n} ({'directed' if directed else 'undirected'})")
    rng = random.Random(seed)
    chosen: list[int]
    if m <= limit // 2 or limit <= 1024:
        if limit <= 1024:
            chosen = rng.sample(range(limit), m)
        else:
            seen: set[int] = set()
            while len(seen) < m:
                seen.add(rng.randrange(limit))
            chosen = sorted(seen)
    else:
        chosen = rng.sample(range(limit), m)

    def decode(idx: int) -> tuple[int, int]:
        if directed:
            u, r = divmod(idx, n - 1)
            v = r + (1 if r >= u else 0)
            return u, v
        # unrank an unordered pair {u < v}
        u = 0
        span = n - 1
        while idx >= span:
            idx -= span
            u += 1
            span -= 1
        return u, u + 1 + idx

    pairs = [decode(i) for i in chosen]
    if max_weight > 0:
        edges = [(u, v, rng.randint(0, max_weight)) for u, v in pairs]
        return from_edge_list(n, edges, directed, weighted=True)
    return from_edge_list(n, list(pairs), directed)
