"""Nice walks, nondecreasing paths and goodness of an edge-labelling.

A *nice k-walk* ``v0 v1 ... vk`` follows edges, never immediately turns
back (``v[i-1] != v[i+1]``) and reads a nondecreasing label sequence.
Walks are directed objects: a walk and its reversal are counted apart.

A labelling is *good* when every ordered pair ``(u, v)``, ``u != v``, is
joined by at most one nondecreasing simple path.
"""

from __future__ import annotations

import numbers
from bisect import bisect_right
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import accumulate
from typing import Iterator, Mapping

from .graph import Graph, GraphError, edge_key


class LabellingError(ValueError):
    pass


class WalkBudgetExceeded(RuntimeError):
    pass


def parse_label(token: str) -> int | Fraction:
    try:
        x = Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise LabellingError(f"bad label {token!r}") from None
    return int(x) if x.denominator == 1 else x


def format_label(x) -> str:
    return str(Fraction(x))


class Labelling(Mapping):
    """Exact rational label per edge of ``graph``, keyed by ``(u, v)`` with u < v.

    Lookups accept either orientation.
    """

    def __init__(self, graph: Graph, labels: Mapping):
        table = {}
        for (u, v), x in labels.items():
            e = edge_key(u, v)
            if not graph.has_edge(*e):
                raise LabellingError(f"{e} is not an edge of the graph")
            if e in table:
                raise LabellingError(f"edge {e} labelled twice")
            if not isinstance(x, numbers.Rational):
                raise LabellingError(f"label {x!r} on {e} is not an exact rational")
            table[e] = x
        missing = graph.edge_set - table.keys()
        if missing:
            raise LabellingError(f"unlabelled edge {min(missing)}")
        self.graph = graph
        self._labels = table

    @classmethod
    def from_sequence(cls, graph: Graph, values) -> "Labelling":
        """Label ``graph.edges[i]`` with ``values[i]``."""
        values = list(values)
        if len(values) != graph.m:
            raise LabellingError(f"need {graph.m} labels, got {len(values)}")
        return cls(graph, dict(zip(graph.edges, values)))

    def __getitem__(self, e):
        return self._labels[edge_key(*e)]

    def __iter__(self):
        return iter(self._labels)

    def __len__(self):
        return len(self._labels)

    def __eq__(self, other):
        if isinstance(other, Labelling):
            return self.graph == other.graph and self._labels == other._labels
        return NotImplemented

    def __repr__(self):
        return f"Labelling({self._labels!r})"

    def values_in_edge_order(self) -> list:
        return [self._labels[e] for e in self.graph.edges]

    def labelled_adjacency(self) -> list[list[tuple[int, object]]]:
        adj = self.graph.adjacency
        return [[(w, self._labels[edge_key(v, w)]) for w in adj[v]] for v in range(self.graph.n)]


def parse_labelling(text: str, graph: Graph) -> Labelling:
    labels = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 3:
            raise LabellingError(f"line {lineno}: expected 'u v label', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise LabellingError(f"line {lineno}: non-integer vertex id") from None
        e = edge_key(u, v)
        if e in labels:
            raise LabellingError(f"line {lineno}: edge {e} labelled twice")
        try:
            labels[e] = parse_label(parts[2])
        except LabellingError as exc:
            raise LabellingError(f"line {lineno}: {exc}") from None
    return Labelling(graph, labels)


def write_labelling(phi: Labelling) -> str:
    return "\n".join(f"{u} {v} {format_label(phi[u, v])}" for u, v in phi.graph.edges)


def check_labelling(g: Graph, phi: Labelling) -> None:
    if phi.graph != g:
        raise LabellingError("labelling belongs to a different graph")


# -- counting -----------------------------------------------------------------

def count_nice_walks(g: Graph, phi: Labelling, k: int) -> int:
    """Number of directed nice k-walks, by dynamic programming over directed edges.

    ``W[(u, v)]`` counts nice walks of the current length ending with the
    step u -> v. A step v -> w extends every walk ending u -> v with
    ``phi(uv) <= phi(vw)`` and ``u != w``; sorting the in-edges at v by
    label turns this into a prefix sum minus the reversed edge's term.
    """
    if k < 1:
        raise GraphError("k must be >= 1")
    check_labelling(g, phi)
    ladj = phi.labelled_adjacency()
    W = {}
    for u, v in g.edges:
        W[u, v] = 1
        W[v, u] = 1
    for _ in range(k - 1):
        new = {}
        for v in range(g.n):
            incoming = sorted(ladj[v], key=lambda t: t[1])
            keys = [lab for _, lab in incoming]
            prefix = [0, *accumulate(W[u, v] for u, _ in incoming)]
            for w, lab in ladj[v]:
                new[v, w] = prefix[bisect_right(keys, lab)] - W[w, v]
        W = new
    return sum(W.values())


def iter_nice_walks(g: Graph, phi: Labelling, k: int, start: int | None = None) -> Iterator[tuple[int, ...]]:
    """Nice k-walks in lexicographic order of their vertex sequences."""
    ladj = phi.labelled_adjacency()
    starts = range(g.n) if start is None else [start]
    for s in starts:
        walk = [s]

        def extend(last_label, prev):
            v = walk[-1]
            for w, lab in ladj[v]:
                if w == prev or (last_label is not None and lab < last_label):
                    continue
                walk.append(w)
                if len(walk) == k + 1:
                    yield tuple(walk)
                else:
                    yield from extend(lab, v)
                walk.pop()

        yield from extend(None, None)


def find_duplicate_nice_walks(g: Graph, phi: Labelling, k: int, budget: int = 10**6):
    """Two distinct nice k-walks sharing ordered endpoints, or ``None``.

    Any such pair shows the labelling is not good. Walks are scanned in
    lexicographic order; the first collision is returned as
    ``(u, v, first_walk, second_walk)``. More than ``budget`` walks raises
    :class:`WalkBudgetExceeded`.
    """
    if k < 1:
        raise GraphError("k must be >= 1")
    check_labelling(g, phi)
    seen = 0
    for s in range(g.n):
        first = {}
        for walk in iter_nice_walks(g, phi, k, start=s):
            seen += 1
            if seen > budget:
                raise WalkBudgetExceeded(f"more than {budget} nice {k}-walks")
            end = walk[-1]
            if end in first:
                return s, end, list(first[end]), list(walk)
            first[end] = walk
    return None


# -- nondecreasing paths ------------------------------------------------------

def iter_nondecreasing_paths(ladj, source: int, max_length: int | None = None) -> Iterator[tuple[int, ...]]:
    """Simple nondecreasing paths of length >= 1 from ``source``, lexicographic order.

    ``ladj`` is the output of :meth:`Labelling.labelled_adjacency`.
    Extension stops at ``max_length`` edges when given.
    """
    path = [source]
    on_path = {source}
    stack = [(iter(ladj[source]), None)]
    while stack:
        it, last = stack[-1]
        for w, lab in it:
            if w in on_path or (last is not None and lab < last):
                continue
            path.append(w)
            yield tuple(path)
            if max_length is None or len(path) - 1 < max_length:
                on_path.add(w)
                stack.append((iter(ladj[w]), lab))
            else:
                path.pop()
            break
        else:
            stack.pop()
            on_path.discard(path.pop())


@dataclass
class PathEnumeration:
    source: int
    paths: dict[int, list[list[int]]]
    explored: int
    truncated: bool


def enumerate_nondecreasing_paths(g: Graph, phi: Labelling, u: int, cap: int | None = None) -> PathEnumeration:
    if not 0 <= u < g.n:
        raise GraphError(f"vertex {u} not in graph")
    check_labelling(g, phi)
    out: dict[int, list[list[int]]] = {}
    explored = 0
    for p in iter_nondecreasing_paths(phi.labelled_adjacency(), u):
        if cap is not None and explored >= cap:
            return PathEnumeration(u, out, explored, True)
        explored += 1
        out.setdefault(p[-1], []).append(list(p))
    return PathEnumeration(u, out, explored, False)


@dataclass(frozen=True)
class Witness:
    u: int
    v: int
    paths: tuple[tuple[int, ...], tuple[int, ...]]


@dataclass
class GoodnessVerdict:
    status: str  # "good" | "bad" | "inconclusive"
    witness: Witness | None = None
    paths_explored: int = 0
    cap_hit: bool = False

    @property
    def good(self) -> bool:
        return self.status == "good"

    @property
    def bad(self) -> bool:
        return self.status == "bad"


def _order_pair(p1, p2):
    return tuple(sorted((tuple(p1), tuple(p2)), key=lambda p: (len(p), p)))


def is_good(g: Graph, phi: Labelling, cap: int | None = None) -> GoodnessVerdict:
    """Decide whether ``phi`` is a good labelling of ``g``.

    Sources are scanned in increasing order and paths in lexicographic
    order, so the witness reported for a bad labelling is the first
    collision in that order. ``cap`` bounds the total number of paths
    explored; hitting it yields ``"inconclusive"``.
    """
    check_labelling(g, phi)
    ladj = phi.labelled_adjacency()
    explored = 0
    for s in range(g.n):
        first = {}
        for p in iter_nondecreasing_paths(ladj, s):
            if cap is not None and explored >= cap:
                return GoodnessVerdict("inconclusive", None, explored, True)
            explored += 1
            v = p[-1]
            if v in first:
                return GoodnessVerdict("bad", Witness(s, v, _order_pair(first[v], p)), explored)
            first[v] = p
    return GoodnessVerdict("good", None, explored)


def is_valid_witness(g: Graph, phi: Labelling, w: Witness) -> bool:
    """Independent check that ``w`` really certifies a bad labelling."""
    p1, p2 = w.paths
    if p1 == p2:
        return False
    for p in (p1, p2):
        if len(p) < 2 or p[0] != w.u or p[-1] != w.v or len(set(p)) != len(p):
            return False
        if not all(g.has_edge(a, b) for a, b in zip(p, p[1:])):
            return False
        labels = [phi[a, b] for a, b in zip(p, p[1:])]
        if any(x > y for x, y in zip(labels, labels[1:])):
            return False
    return True
