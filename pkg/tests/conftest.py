import random
import sys
from itertools import combinations
from pathlib import Path

from hypothesis import settings, strategies as st

from goodlabel.graph import Graph
from goodlabel.walks import Labelling

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", derandomize=True, deadline=None, max_examples=100)
settings.load_profile("default")


@st.composite
def small_graphs(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


@st.composite
def labelled_graphs(draw, min_n=1, max_n=7, max_label=None):
    """Graph plus a labelling; small label ranges produce ties."""
    g = draw(small_graphs(min_n, max_n))
    top = draw(st.integers(1, max(1, g.m))) if max_label is None else max_label
    labels = draw(st.lists(st.integers(1, top), min_size=g.m, max_size=g.m))
    return g, Labelling.from_sequence(g, labels)


def random_graph(n, p, seed):
    rng = random.Random(seed)
    return Graph.from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def random_labels(g, rng, ties):
    """Injective ranks, or integers from a small range when ``ties``."""
    if ties:
        return Labelling.from_sequence(g, [rng.randint(1, max(1, g.m // 2)) for _ in range(g.m)])
    ranks = list(range(1, g.m + 1))
    rng.shuffle(ranks)
    return Labelling.from_sequence(g, ranks)


def labels_dict(phi):
    return {e: phi[e] for e in phi.graph.edges}


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
