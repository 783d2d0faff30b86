"""Simple undirected graphs with bit-row adjacency, the basic constructions
(complete, empty, disjoint union, join), the two-sided clique-plus-isolated
join family, and a graph6 codec.

Vertices are 0-based contiguous integers. ``disjoint_union`` and ``join``
relabel the second operand by an offset of ``g.n``, so constructions are
deterministic and serialize stably. Graphs are immutable after construction
and safe to share across worker threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

GRAPH6_MAX_VERTICES = 512


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph: ``rows[v]`` has bit ``u`` set iff ``uv`` is an edge."""

    n: int
    rows: tuple[int, ...]
    m: int = field(init=False, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be >= 0")
        if len(self.rows) != self.n:
            raise ValueError("adjacency must have one row per vertex")
        deg_total = 0
        for v, row in enumerate(self.rows):
            if row < 0 or row >> self.n:
                raise ValueError(f"row {v} has bits outside 0..n-1")
            if (row >> v) & 1:
                raise ValueError(f"self-loop at vertex {v}")
            deg_total += row.bit_count()
        for v in range(self.n):
            for u in self._bits(self.rows[v]):
                if not (self.rows[u] >> v) & 1:
                    raise ValueError(f"adjacency not symmetric at ({v}, {u})")
        object.__setattr__(self, "m", deg_total // 2)

    @staticmethod
    def _bits(mask: int):
        while mask:
            low = mask & -mask
            yield low.bit_length() - 1
            mask ^= low

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def neighbors(self, v: int):
        return self._bits(self.rows[v])

    def edges(self):
        for v in range(self.n):
            for u in self._bits(self.rows[v] >> (v + 1)):
                yield (v, u + v + 1)

    def to_array(self) -> np.ndarray:
        """Dense float64 adjacency matrix."""
        a = np.zeros((self.n, self.n), dtype=np.float64)
        for v in range(self.n):
            for u in self._bits(self.rows[v]):
                a[v, u] = 1.0
        return a

    def rows_u64(self) -> np.ndarray:
        """Adjacency rows as a uint64 array for the kernel layer (n <= 64)."""
        if self.n > 64:
            raise ValueError("bit-row kernels support at most 64 vertices")
        return np.array(self.rows, dtype=np.uint64)

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = 1
        while True:
            grow = seen
            for v in self._bits(seen):
                grow |= self.rows[v]
            if grow == seen:
                return seen == (1 << self.n) - 1
            seen = grow


def from_edges(n: int, edges) -> Graph:
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def complete(k: int) -> Graph:
    if k < 0:
        raise ValueError("order must be >= 0")
    full = (1 << k) - 1
    return Graph(k, tuple(full ^ (1 << v) for v in range(k)))


def empty_graph(k: int) -> Graph:
    if k < 0:
        raise ValueError("order must be >= 0")
    return Graph(k, (0,) * k)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    rows = list(g.rows) + [row << g.n for row in h.rows]
    return Graph(g.n + h.n, tuple(rows))


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus every edge between the two parts."""
    h_side = ((1 << h.n) - 1) << g.n
    g_side = (1 << g.n) - 1
    rows = [row | h_side for row in g.rows]
    rows += [(row << g.n) | g_side for row in h.rows]
    return Graph(g.n + h.n, tuple(rows))


@dataclass(frozen=True)
class ExtremalParams:
    """Parameters of the family (K_a u O_a0) v (K_b u O_b0).

    ``b = chi - a`` and ``b0 = n - chi - a0`` are derived. A pair (a, a0) is
    feasible when 1 <= a <= chi-1 and 0 <= a0 <= n-chi, with 3 <= chi <= n-1;
    the resulting graph has order n and chromatic number exactly chi.
    """

    n: int
    chi: int
    a: int
    a0: int

    def __post_init__(self):
        if not 3 <= self.chi <= self.n - 1:
            raise ValueError(
                f"need 3 <= chi <= n-1: got chi={self.chi}, n={self.n}")
        if not 1 <= self.a <= self.chi - 1:
            raise ValueError(
                f"need 1 <= a <= chi-1: got a={self.a}, chi={self.chi}")
        if self.a0 < 0:
            raise ValueError(f"need a0 >= 0: got a0={self.a0}")
        if self.b0 < 0:
            raise ValueError(
                f"need a0 <= n-chi (a0 + b0 = n - chi): got a0={self.a0}, "
                f"n-chi={self.n - self.chi}")

    @property
    def b(self) -> int:
        return self.chi - self.a

    @property
    def b0(self) -> int:
        return self.n - self.chi - self.a0


def extremal_graph(params: ExtremalParams) -> Graph:
    """Build (K_a u O_a0) v (K_b u O_b0); connected, not complete, order n."""
    left = disjoint_union(complete(params.a), empty_graph(params.a0))
    right = disjoint_union(complete(params.b), empty_graph(params.b0))
    return join(left, right)


class Graph6Error(ValueError):
    """Malformed graph6 input; ``offset`` is the byte index into the token."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def _graph6_values(s: str) -> list[int]:
    vals = []
    for k, ch in enumerate(s):
        v = ord(ch) - 63
        if not 0 <= v <= 63:
            raise Graph6Error(f"byte {ord(ch)!r} outside the graph6 range 63..126", k)
        vals.append(v)
    return vals


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line (an optional '>>graph6<<' prefix is tolerated).

    Byte offsets in errors are relative to the start of the encoding proper.
    """
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise Graph6Error("empty graph6 token", 0)
    vals = _graph6_values(s)
    if vals[0] == 63:
        if len(vals) >= 2 and vals[1] == 63:
            raise Graph6Error("8-byte order header exceeds the supported range", 1)
        if len(vals) < 4:
            raise Graph6Error("truncated extended order header", len(s))
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        body_off = 4
    else:
        n = vals[0]
        body_off = 1
    if n > GRAPH6_MAX_VERTICES:
        raise Graph6Error(f"order {n} exceeds the {GRAPH6_MAX_VERTICES}-vertex cap", 0)
    body = vals[body_off:]
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) < need:
        raise Graph6Error("truncated adjacency bit stream", len(s))
    if len(body) > need:
        raise Graph6Error("trailing bytes after adjacency bits", body_off + need)
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] >> (5 - k % 6)) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    if nbits % 6:
        pad = body[-1] & ((1 << (6 - nbits % 6)) - 1)
        if pad:
            raise Graph6Error("nonzero padding bits", body_off + need - 1)
    return Graph(n, tuple(rows))


def to_graph6(g: Graph) -> str:
    """Canonical graph6 encoding (no header prefix)."""
    n = g.n
    if n > GRAPH6_MAX_VERTICES:
        raise ValueError(f"order {n} exceeds the {GRAPH6_MAX_VERTICES}-vertex cap")
    if n <= 62:
        out = [chr(n + 63)]
    else:
        out = ["~", chr((n >> 12) + 63), chr(((n >> 6) & 63) + 63), chr((n & 63) + 63)]
    acc = 0
    nacc = 0
    for j in range(1, n):
        for i in range(j):
            acc = (acc << 1) | ((g.rows[i] >> j) & 1)
            nacc += 1
            if nacc == 6:
                out.append(chr(acc + 63))
                acc = 0
                nacc = 0
    if nacc:
        out.append(chr((acc << (6 - nacc)) + 63))
    return "".join(out)
