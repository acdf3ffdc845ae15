"""Constructing good labellings: random, hypercube, resampling and exhaustive search."""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations, permutations
from pathlib import Path

from .graph import Graph, GraphError, forbidden_screen, girth, hypercube, write_graph
from .walks import Labelling, is_good, iter_nondecreasing_paths, write_labelling


class PreconditionError(ValueError):
    pass


def random_labelling(g: Graph, seed=None) -> Labelling:
    """Injective labelling by a uniformly random permutation of ranks 1..m.

    Only the relative order of labels matters for nondecreasing paths, so
    this is equivalent to i.i.d. uniform real labels.
    """
    ranks = list(range(1, g.m + 1))
    random.Random(seed).shuffle(ranks)
    return Labelling.from_sequence(g, ranks)


def random_refinement(phi: Labelling, seed=None) -> Labelling:
    """Injective labelling whose strict order refines the weak order of ``phi``."""
    rng = random.Random(seed)
    keyed = sorted(phi.graph.edges, key=lambda e: (phi[e], rng.random()))
    return Labelling(phi.graph, {e: i for i, e in enumerate(keyed, start=1)})


def dense_ranks(graph: Graph, keys: dict) -> Labelling:
    """Replace arbitrary comparable keys by ranks 1, 2, ..., keeping ties."""
    order = {x: i for i, x in enumerate(sorted(set(keys.values())), start=1)}
    return Labelling(graph, {e: order[x] for e, x in keys.items()})


def hypercube_labelling(d: int) -> tuple[Graph, Labelling]:
    """Q_d with every edge labelled by the (1-based) coordinate it flips.

    The unique nondecreasing path between two vertices flips their
    differing coordinates in increasing order.
    """
    g = hypercube(d)
    return g, Labelling(g, {(u, v): (v ^ u).bit_length() for u, v in g.edges})


# -- resampling ----------------------------------------------------------------

@dataclass
class ResampleStats:
    rounds: int
    terminated: bool
    remaining: int


def first_nondecreasing_k_path(g: Graph, phi: Labelling, k: int):
    """Lexicographically smallest simple k-edge path with nondecreasing labels, or None.

    Both traversal directions of a path are scanned as separate vertex
    sequences.
    """
    ladj = phi.labelled_adjacency()
    for s in range(g.n):
        for p in iter_nondecreasing_paths(ladj, s, max_length=k):
            if len(p) == k + 1:
                return p
    return None


def count_nondecreasing_k_paths(g: Graph, phi: Labelling, k: int) -> int:
    ladj = phi.labelled_adjacency()
    return sum(
        1 for s in range(g.n) for p in iter_nondecreasing_paths(ladj, s, max_length=k) if len(p) == k + 1
    )


def mt_label(g: Graph, k: int, seed=None, max_rounds: int = 100_000, override: bool = False):
    """Resample labels until no simple k-edge path is nondecreasing.

    Each round finds the first offending path in lexicographic order and
    redraws the labels of its k edges. With girth at least 2k, a
    labelling without such paths is good: two nondecreasing paths with
    the same ends would either close a cycle shorter than 2k or contain
    a nondecreasing k-edge subpath.

    Returns ``(labelling, ResampleStats)``; labels are dense ranks.
    """
    if k < 1:
        raise GraphError("k must be >= 1")
    if max_rounds < 1:
        raise GraphError("max_rounds must be >= 1")
    if not override and girth(g) < 2 * k:
        raise PreconditionError(f"girth {girth(g)} < 2k = {2 * k}; pass override to run anyway")
    rng = random.Random(seed)
    keys = {e: rng.getrandbits(64) for e in g.edges}
    rounds = 0
    while True:
        phi = dense_ranks(g, keys)
        bad = first_nondecreasing_k_path(g, phi, k)
        if bad is None:
            return phi, ResampleStats(rounds, True, 0)
        if rounds >= max_rounds:
            return phi, ResampleStats(rounds, False, count_nondecreasing_k_paths(g, phi, k))
        for a, b in zip(bad, bad[1:]):
            keys[min(a, b), max(a, b)] = rng.getrandbits(64)
        rounds += 1


# -- exhaustive search ----------------------------------------------------------

@dataclass
class ExhaustiveResult:
    status: str  # "good" | "bad" | "budget_exceeded"
    labelling: Labelling | None
    orderings_checked: int


def exhaustive_decide_good(g: Graph, budget: int | None = None) -> ExhaustiveResult:
    """Decide goodness by trying every injective labelling.

    Every good labelling can be refined to an injective one that is still
    good, so the m! rank orderings are enough. They are tried in
    lexicographic order and the first good one is returned.
    """
    checked = 0
    for ranks in permutations(range(1, g.m + 1)):
        if budget is not None and checked >= budget:
            return ExhaustiveResult("budget_exceeded", None, checked)
        checked += 1
        phi = Labelling.from_sequence(g, ranks)
        if is_good(g, phi).good:
            return ExhaustiveResult("good", phi, checked)
    return ExhaustiveResult("bad", None, checked)


@dataclass
class GammaEntry:
    n: int
    gamma: int
    graph: Graph
    labelling: Labelling
    graphs_checked: int


GAMMA_CAP = 5


def _candidate_graphs(n: int, m: int):
    pairs = list(combinations(range(n), 2))
    for edges in combinations(pairs, m):
        g = Graph.from_edges(n, edges)
        if not forbidden_screen(g).certainly_bad:
            yield g


def _decide(g: Graph) -> ExhaustiveResult:
    return exhaustive_decide_good(g)


def gamma(n: int, cap: int = GAMMA_CAP, threads: int = 1) -> GammaEntry:
    """Maximum edge count of a good graph on n vertices, with a witness.

    Edge counts are tried from floor(n^2/4) downwards (anything denser
    contains a triangle). Graphs are labelled, not up to isomorphism, and
    those containing K_3 or K_{2,3} are skipped. The witness is the first
    good graph in lexicographic edge-set order, independent of ``threads``.
    """
    if n < 1 or n > cap:
        raise GraphError(f"gamma needs 1 <= n <= {cap}, got {n}")
    checked = 0
    for m in range(n * n // 4, -1, -1):
        candidates = list(_candidate_graphs(n, m))
        if threads > 1:
            with ProcessPoolExecutor(max_workers=threads) as pool:
                results = list(pool.map(_decide, candidates))
        else:
            results = map(_decide, candidates)
        for g, res in zip(candidates, results):
            checked += 1
            if res.status == "good":
                return GammaEntry(n, m, g, res.labelling, checked)
    raise AssertionError("the empty graph is always good")


def write_gamma_table(entries, directory) -> Path:
    """Write witness files plus ``gamma.tsv`` (n, gamma, graph file, labelling file)."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    rows = ["n\tgamma\tgraph_file\tlabelling_file"]
    for e in entries:
        gfile, lfile = f"gamma_{e.n}.graph", f"gamma_{e.n}.lab"
        (directory / gfile).write_text(write_graph(e.graph) + "\n")
        (directory / lfile).write_text(write_labelling(e.labelling) + "\n")
        rows.append(f"{e.n}\t{e.gamma}\t{gfile}\t{lfile}")
    table = directory / "gamma.tsv"
    table.write_text("\n".join(rows) + "\n")
    return table
