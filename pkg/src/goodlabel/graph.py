"""Simple undirected graphs on vertices ``0..n-1``.

Edge-list text format::

    # optional comment lines
    n m
    u v
    ...

Edges are stored canonically as ``(u, v)`` with ``u < v``.
"""

from __future__ import annotations

import math
import random
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product


class GraphError(ValueError):
    """Raised for malformed graph documents or infeasible parameters."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class GenerationError(RuntimeError):
    pass


def edge_key(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        if n < 0:
            raise GraphError(f"vertex count must be nonnegative, got {n}")
        seen = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            e = edge_key(u, v)
            if e in seen:
                raise GraphError(f"duplicate edge {e}")
            seen.add(e)
        canon = tuple(sorted(seen))
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in canon:
            adj[u].append(v)
            adj[v].append(u)
        return cls(n, canon, tuple(tuple(sorted(a)) for a in adj))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return edge_key(u, v) in self.edge_set

    @property
    def edge_set(self) -> frozenset:
        # cached lazily; frozen dataclass forbids normal assignment
        try:
            return self.__dict__["_edge_set"]
        except KeyError:
            s = frozenset(self.edges)
            object.__setattr__(self, "_edge_set", s)
            return s


def parse_graph(text: str) -> Graph:
    header = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphError(f"expected two integers, got {line!r}", lineno)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphError(f"non-integer token in {line!r}", lineno) from None
        if header is None:
            if a < 0 or b < 0:
                raise GraphError("header values must be nonnegative", lineno)
            header = (a, b)
            continue
        n = header[0]
        if not (0 <= a < n and 0 <= b < n):
            raise GraphError(f"vertex id out of range [0, {n})", lineno)
        if a == b:
            raise GraphError(f"self-loop at vertex {a}", lineno)
        edges.append((a, b, lineno))
    if header is None:
        raise GraphError("missing 'n m' header")
    n, m = header
    if len(edges) != m:
        raise GraphError(f"header declares {m} edges, found {len(edges)}")
    seen = {}
    for a, b, lineno in edges:
        e = edge_key(a, b)
        if e in seen:
            raise GraphError(f"duplicate edge {e} (first on line {seen[e]})", lineno)
        seen[e] = lineno
    return Graph.from_edges(n, [(a, b) for a, b, _ in edges])


def write_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines)


# -- generators ---------------------------------------------------------------

def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    return Graph.from_edges(n, combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} with parts ``0..a-1`` and ``a..a+b-1``."""
    if a < 1 or b < 1:
        raise GraphError("complete_bipartite needs a, b >= 1")
    return Graph.from_edges(a + b, product(range(a), range(a, a + b)))


def hypercube(d: int) -> Graph:
    """Q_d; vertex ``x`` is adjacent to ``x ^ (1 << i)``."""
    if d < 0:
        raise GraphError("hypercube dimension must be >= 0")
    n = 1 << d
    return Graph.from_edges(n, [(x, x | (1 << i)) for x in range(n) for i in range(d) if not x >> i & 1])


def random_regular(n: int, d: int, seed: int | None = None, max_retries: int = 1000) -> Graph:
    """Uniform-ish random d-regular simple graph by stub pairing.

    Stubs are shuffled and paired; pairs that would create a loop or a
    repeated edge are returned to the pool and re-shuffled. If the
    leftover stubs admit no legal pair the attempt is discarded and a new
    one starts from scratch, at most ``max_retries`` times.
    """
    if n < 1 or d < 0 or d >= n or (n * d) % 2:
        raise GraphError(f"infeasible random_regular parameters n={n}, d={d}")
    rng = random.Random(seed)
    for _ in range(max_retries):
        edges = _pair_stubs(n, d, rng)
        if edges is not None:
            return Graph.from_edges(n, edges)
    raise GenerationError(f"random_regular({n}, {d}) failed after {max_retries} attempts")


def _pair_stubs(n: int, d: int, rng: random.Random):
    edges: set[tuple[int, int]] = set()
    stubs = [v for v in range(n) for _ in range(d)]
    while stubs:
        rng.shuffle(stubs)
        leftover = []
        it = iter(stubs)
        for s1, s2 in zip(it, it):
            e = edge_key(s1, s2)
            if s1 != s2 and e not in edges:
                edges.add(e)
            else:
                leftover += (s1, s2)
        if leftover and not _has_legal_pair(leftover, edges):
            return None
        stubs = leftover
    return edges


def _has_legal_pair(stubs, edges) -> bool:
    verts = sorted(set(stubs))
    return any(edge_key(a, b) not in edges for a, b in combinations(verts, 2))


def generate(family: str, seed: int | None = None, **params) -> Graph:
    builders = {
        "path": lambda: path(params["n"]),
        "cycle": lambda: cycle(params["n"]),
        "complete": lambda: complete(params["n"]),
        "complete_bipartite": lambda: complete_bipartite(params["a"], params["b"]),
        "hypercube": lambda: hypercube(params["d"]),
        "random_regular": lambda: random_regular(params["n"], params["d"], seed=seed),
    }
    if family not in builders:
        raise GraphError(f"unknown family {family!r}")
    try:
        return builders[family]()
    except KeyError as exc:
        raise GraphError(f"family {family!r} needs parameter {exc.args[0]!r}") from None


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


# -- statistics ---------------------------------------------------------------

def girth(g: Graph) -> int | float:
    """Length of a shortest cycle, or ``math.inf`` for forests.

    BFS from every root; a non-tree edge (x, y) met from root r closes a
    closed walk of length dist[x] + dist[y] + 1 through r, which contains
    a cycle no longer than that, and the minimum over roots is attained
    at a root lying on a shortest cycle.
    """
    best = math.inf
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            x = queue.popleft()
            if 2 * dist[x] + 1 >= best:
                break
            for y in g.adjacency[x]:
                if dist[y] < 0:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif y != parent[x]:
                    best = min(best, dist[x] + dist[y] + 1)
    return best


@dataclass(frozen=True)
class DegreeStats:
    max_degree: int
    avg_degree: Fraction
    edge_count: int


def degree_stats(g: Graph) -> DegreeStats:
    if g.n == 0:
        raise GraphError("degree_stats undefined for the empty graph")
    return DegreeStats(
        max_degree=max(g.degree(v) for v in range(g.n)),
        avg_degree=Fraction(2 * g.m, g.n),
        edge_count=g.m,
    )


@dataclass(frozen=True)
class ForbiddenScreen:
    contains_K3: bool
    contains_K23: bool

    @property
    def certainly_bad(self) -> bool:
        return self.contains_K3 or self.contains_K23


def forbidden_screen(g: Graph) -> ForbiddenScreen:
    nbrs = [set(a) for a in g.adjacency]
    k3 = any(nbrs[u] & nbrs[v] for u, v in g.edges)
    k23 = any(len(nbrs[u] & nbrs[v]) >= 3 for u, v in combinations(range(g.n), 2))
    return ForbiddenScreen(k3, k23)
