"""Simple graphs stored as symmetric arc pairs, plus parsers and fixtures.

Arc ``2e`` runs along edge ``e`` in its stored direction and arc ``2e + 1``
is its reversal, so the inverse arc is always ``a ^ 1``.
"""
from __future__ import annotations

import math
import re
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional

INFINITY = math.inf


class GraphParseError(ValueError):
    """Malformed graph input. ``line`` is 1-based when known."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        seen = set()
        for u, v in self.edges:
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise ValueError(f"edge ({u}, {v}) references a missing vertex")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ValueError(f"duplicate edge {key}")
            seen.add(key)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], name: str = "") -> "Graph":
        """Build a graph with edges in sorted canonical order."""
        canon = sorted((min(u, v), max(u, v)) for u, v in edges)
        return cls(n, tuple(canon), name)

    @property
    def arc_count(self) -> int:
        return 2 * len(self.edges)

    @cached_property
    def arcs(self) -> tuple[tuple[int, int], ...]:
        """Arc ``a`` as ``(origin, terminus)``."""
        out = []
        for u, v in self.edges:
            out.append((u, v))
            out.append((v, u))
        return tuple(out)

    @staticmethod
    def inverse(a: int) -> int:
        return a ^ 1

    def origin(self, a: int) -> int:
        return self.arcs[a][0]

    def terminus(self, a: int) -> int:
        return self.arcs[a][1]

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def out_arcs(self) -> tuple[tuple[int, ...], ...]:
        """Arcs leaving each vertex."""
        out: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for a, (o, _) in enumerate(self.arcs):
            out[o].append(a)
        return tuple(tuple(x) for x in out)

    @cached_property
    def in_arcs(self) -> tuple[tuple[int, ...], ...]:
        """Arcs entering each vertex."""
        inc: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for a, (_, t) in enumerate(self.arcs):
            inc[t].append(a)
        return tuple(tuple(x) for x in inc)

    def degree(self, v: int) -> int:
        return len(self.neighbors[v])

    @property
    def degrees(self) -> list[int]:
        return [len(nb) for nb in self.neighbors]

    def regularity(self) -> Optional[int]:
        """Common degree if the graph is regular, else ``None``."""
        degs = set(self.degrees)
        if len(degs) == 1:
            return degs.pop()
        return None

    def adjacency(self) -> list[list[int]]:
        m = [[0] * self.vertex_count for _ in range(self.vertex_count)]
        for u, v in self.edges:
            m[u][v] = m[v][u] = 1
        return m


@dataclass(frozen=True)
class GraphReport:
    vertex_count: int
    edge_count: int
    degree_min: int
    degree_max: int
    is_regular: bool
    regularity_k: Optional[int]
    girth: float  # int, or INFINITY for forests
    diameter: float  # int, or INFINITY when disconnected

    def to_json(self) -> dict:
        def fin(x):
            return None if x == INFINITY else int(x)

        return {
            "vertex_count": self.vertex_count,
            "edge_count": self.edge_count,
            "degree_min": self.degree_min,
            "degree_max": self.degree_max,
            "is_regular": self.is_regular,
            "regularity_k": self.regularity_k,
            "girth": fin(self.girth),
            "diameter": fin(self.diameter),
        }

    def to_text(self) -> str:
        def fmt(x):
            return "infinity" if x == INFINITY else str(int(x))

        lines = [
            f"vertices: {self.vertex_count}",
            f"edges: {self.edge_count}",
            f"degree: {self.degree_min}..{self.degree_max}",
            f"regular: {'yes, k=' + str(self.regularity_k) if self.is_regular else 'no'}",
            f"girth: {fmt(self.girth)}",
            f"diameter: {fmt(self.diameter)}",
        ]
        return "\n".join(lines) + "\n"


# ---------------------------------------------------------------- analysis


def _bfs_dist(g: Graph, root: int) -> list[int]:
    dist = [-1] * g.vertex_count
    dist[root] = 0
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in g.neighbors[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def girth(g: Graph) -> float:
    """Length of a shortest cycle, or ``INFINITY`` for a forest.

    One BFS per root; a non-tree edge ``(u, w)`` closes a closed walk of
    length ``d(u) + d(w) + 1`` through the root, and the minimum over all
    roots is attained by a root on a shortest cycle.
    """
    best = INFINITY
    for root in range(g.vertex_count):
        dist = [-1] * g.vertex_count
        parent = [-1] * g.vertex_count
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] >= best:
                break
            for w in g.neighbors[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def analyze(g: Graph) -> GraphReport:
    degs = g.degrees
    k = g.regularity()
    diameter = 0
    for root in range(g.vertex_count):
        dist = _bfs_dist(g, root)
        if min(dist) < 0:
            diameter = INFINITY
            break
        diameter = max(diameter, max(dist))
    return GraphReport(
        vertex_count=g.vertex_count,
        edge_count=len(g.edges),
        degree_min=min(degs) if degs else 0,
        degree_max=max(degs) if degs else 0,
        is_regular=k is not None,
        regularity_k=k,
        girth=girth(g),
        diameter=diameter,
    )


# ---------------------------------------------------------------- parsers

_ADJ_LINE = re.compile(r"^\s*(\d+)\s*:\s*(.*)$")


def parse_adjlist(text: str) -> Graph:
    """Parse lines ``u: v1 v2 ...`` (0-based ids, ``#`` starts a comment).

    Each undirected edge may be listed from one or both ends; listing the
    same neighbour twice on one line is an error.
    """
    rows: dict[int, tuple[int, list[int]]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _ADJ_LINE.match(line)
        if not m:
            raise GraphParseError(f"expected 'u: v1 v2 ...', got {raw!r}", lineno)
        u = int(m.group(1))
        if u in rows:
            raise GraphParseError(f"vertex {u} listed twice", lineno)
        nbrs = []
        for tok in m.group(2).split():
            if not tok.isdigit():
                raise GraphParseError(f"bad vertex id {tok!r}", lineno)
            nbrs.append(int(tok))
        rows[u] = (lineno, nbrs)

    if not rows:
        raise GraphParseError("no vertices")
    n = max(rows) + 1
    for v in range(n):
        if v not in rows:
            raise GraphParseError(f"vertex id {v} has no line (ids must be 0..{n - 1})")
    edges: set[tuple[int, int]] = set()
    for u, (lineno, nbrs) in rows.items():
        seen = set()
        for v in nbrs:
            if v == u:
                raise GraphParseError(f"self-loop at vertex {u}", lineno)
            if v in seen:
                raise GraphParseError(f"duplicate edge {u}-{v}", lineno)
            if v not in rows:
                raise GraphParseError(f"dangling vertex id {v}", lineno)
            seen.add(v)
            edges.add((min(u, v), max(u, v)))
    return Graph.from_edges(n, edges)


def _graph6_n(data: bytes) -> tuple[int, int]:
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise GraphParseError("truncated graph6 header")
        n = 0
        for b in data[2:8]:
            n = (n << 6) | (b - 63)
        return n, 8
    if len(data) < 4:
        raise GraphParseError("truncated graph6 header")
    n = 0
    for b in data[1:4]:
        n = (n << 6) | (b - 63)
    return n, 4


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 string (optional ``>>graph6<<`` prefix)."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise GraphParseError("empty graph6 string")
    data = s.encode("ascii", errors="replace")
    for b in data:
        if not 63 <= b <= 126:
            raise GraphParseError(f"byte {b} outside graph6 range 63..126")
    n, offset = _graph6_n(data)
    body = data[offset:]
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise GraphParseError(
            f"graph6 body has {len(body)} bytes, expected {(nbits + 5) // 6} for n={n}"
        )
    bits = []
    for b in body:
        v = b - 63
        bits.extend((v >> s) & 1 for s in range(5, -1, -1))
    if any(bits[nbits:]):
        raise GraphParseError("nonzero padding bits")
    edges = []
    i = 0
    for j in range(1, n):
        for u in range(j):
            if bits[i]:
                edges.append((u, j))
            i += 1
    return Graph.from_edges(n, edges)


def encode_graph6(g: Graph) -> str:
    n = g.vertex_count
    if n <= 62:
        head = [n + 63]
    elif n <= 258047:
        head = [126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)]
    else:
        head = [126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)]
    present = set(g.edges)
    bits = [1 if (u, j) in present else 0 for j in range(1, n) for u in range(j)]
    bits.extend([0] * (-len(bits) % 6))
    body = []
    for i in range(0, len(bits), 6):
        v = 0
        for b in bits[i:i + 6]:
            v = (v << 1) | b
        body.append(v + 63)
    return bytes(head + body).decode("ascii")


_LCF = re.compile(r"^\s*\[\s*([-+\d\s,]+?)\s*\]\s*(?:\^\s*(\d+))?\s*$")


def parse_lcf(notation: str) -> Graph:
    """Build a cubic Hamiltonian graph from LCF notation like ``[5,-5]^7``."""
    m = _LCF.match(notation)
    if not m:
        raise GraphParseError(f"not LCF notation: {notation!r}")
    try:
        jumps = [int(t) for t in m.group(1).replace(",", " ").split()]
    except ValueError as exc:
        raise GraphParseError(f"bad LCF offset in {notation!r}") from exc
    reps = int(m.group(2)) if m.group(2) else 1
    if not jumps or reps < 1:
        raise GraphParseError("empty LCF specification")
    n = len(jumps) * reps
    if n % 2:
        raise GraphParseError(f"{n} vertices cannot carry a cubic graph (odd degree sum)")
    chord = [None] * n
    for i in range(n):
        j = jumps[i % len(jumps)] % n
        if j in (0, 1, n - 1):
            raise GraphParseError(f"LCF offset {jumps[i % len(jumps)]} at vertex {i} is degenerate")
        chord[i] = (i + j) % n
    for i in range(n):
        if chord[chord[i]] != i:
            raise GraphParseError(
                f"chord collision: {i} -> {chord[i]} but {chord[i]} -> {chord[chord[i]]}"
            )
    edges = {(min(i, (i + 1) % n), max(i, (i + 1) % n)) for i in range(n)}
    edges |= {(min(i, chord[i]), max(i, chord[i])) for i in range(n)}
    return Graph.from_edges(n, edges)


# ---------------------------------------------------------------- fixtures


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)], f"C{n}")


def complete(m: int) -> Graph:
    if m < 2:
        raise ValueError("complete graphs need at least 2 vertices")
    return Graph.from_edges(m, [(i, j) for i in range(m) for j in range(i + 1, m)], f"K{m}")


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)], f"P{n}")


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return Graph.from_edges(10, outer + inner + spokes, "petersen")


_LCF_FIXTURES = {
    "heawood": "[5,-5]^7",
    "mcgee": "[12,7,-7]^8",
    "tutte_coxeter": "[-13,-9,7,-7,9,13]^5",
}

# name -> (vertices, k, girth, diameter)
_EXPECTED = {
    "petersen": (10, 3, 5, 2),
    "heawood": (14, 3, 6, 3),
    "mcgee": (24, 3, 7, 4),
    "tutte_coxeter": (30, 3, 8, 4),
}

BUILTIN_NAMES = ("K4", "C{n}", "petersen", "heawood", "mcgee", "tutte_coxeter", "complete{m}")


def _check(g: Graph, n: int, k: int, gir: float, diam: float) -> Graph:
    rep = analyze(g)
    got = (rep.vertex_count, rep.regularity_k, rep.girth, rep.diameter)
    if got != (n, k, gir, diam):
        raise AssertionError(f"fixture {g.name!r} has report {got}, expected {(n, k, gir, diam)}")
    return g


def builtin(name: str) -> Graph:
    """Named fixture; its vertex count, degree, girth and diameter are asserted."""
    key = name.strip()
    low = key.lower()
    if low in _EXPECTED:
        if low == "petersen":
            g = petersen()
        else:
            g = parse_lcf(_LCF_FIXTURES[low])
            g = Graph(g.vertex_count, g.edges, low)
        return _check(g, *_EXPECTED[low])
    m = re.fullmatch(r"[Kk](\d+)|complete(\d+)", key)
    if m:
        size = int(m.group(1) or m.group(2))
        gir = 3 if size >= 3 else INFINITY
        return _check(complete(size), size, size - 1, gir, 1)
    m = re.fullmatch(r"[Cc](\d+)", key)
    if m:
        size = int(m.group(1))
        return _check(cycle(size), size, 2, size, size // 2)
    raise KeyError(f"unknown builtin graph {name!r}; known: {', '.join(BUILTIN_NAMES)}")


def load_graph(source: str) -> Graph:
    """Resolve ``builtin:NAME``, ``lcf:[...]^r``, ``g6:STRING`` or a file path.

    Files ending in ``.g6`` are graph6, ``.lcf`` LCF, anything else adjacency list.
    """
    if source.startswith("builtin:"):
        return builtin(source[len("builtin:"):])
    if source.startswith("lcf:"):
        return parse_lcf(source[len("lcf:"):])
    if source.startswith("g6:"):
        return parse_graph6(source[len("g6:"):])
    with open(source, encoding="ascii") as fh:
        text = fh.read()
    if source.endswith(".g6"):
        return parse_graph6(text.splitlines()[0] if text.strip() else "")
    if source.endswith(".lcf"):
        return parse_lcf(text)
    return parse_adjlist(text)

