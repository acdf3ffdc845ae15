"""Brute-force oracles, deliberately independent of the package's algorithms.

Nothing here calls into ``goodlabel`` beyond reading a graph's edge list
and a labelling's values.
"""

from __future__ import annotations

from itertools import combinations, permutations

import sympy as sp


def non_backtracking_walks(n, edges, k):
    """All vertex sequences of length k+1 following edges without immediate reversal."""
    adj = {v: set() for v in range(n)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    walks = [(v,) for v in range(n)]
    for _ in range(k):
        walks = [w + (x,) for w in walks for x in adj[w[-1]] if len(w) < 2 or x != w[-2]]
    return walks


def label_of(labels, a, b):
    return labels[(a, b)] if (a, b) in labels else labels[(b, a)]


def is_nice(walk, labels):
    seq = [label_of(labels, a, b) for a, b in zip(walk, walk[1:])]
    return all(x <= y for x, y in zip(seq, seq[1:]))


def brute_count_nice_walks(n, edges, labels, k, walks=None):
    walks = non_backtracking_walks(n, edges, k) if walks is None else walks
    return sum(1 for w in walks if is_nice(w, labels))


def brute_nondecreasing_paths(n, edges, labels):
    """Map (u, v) -> sorted list of nondecreasing simple paths, by permutation enumeration."""
    es = {frozenset(e) for e in edges}
    out = {}
    for length in range(1, n):
        for seq in permutations(range(n), length + 1):
            if all(frozenset(p) in es for p in zip(seq, seq[1:])) and is_nice(seq, labels):
                out.setdefault((seq[0], seq[-1]), []).append(seq)
    return out


def brute_is_good(n, edges, labels):
    return all(len(ps) <= 1 for ps in brute_nondecreasing_paths(n, edges, labels).values())


def brute_contains_k3(n, edges):
    es = {frozenset(e) for e in edges}
    return any(all(frozenset(p) in es for p in combinations(t, 2)) for t in combinations(range(n), 3))


def brute_contains_k23(n, edges):
    """Look for K_{2,3} as a (not necessarily induced) subgraph on every 5-set."""
    es = {frozenset(e) for e in edges}
    for five in combinations(range(n), 5):
        for pair in combinations(five, 2):
            rest = [x for x in five if x not in pair]
            if all(frozenset((a, b)) in es for a in pair for b in rest):
                return True
    return False


# -- bound calculus, symbolically ----------------------------------------------

_q = sp.Symbol("q", positive=True)


def symbolic_ab(t):
    """a_k, b_k as sympy expressions in q, straight from the defining recursions."""
    p = 1 - _q
    a, b = [sp.Integer(1)], [sp.Integer(0)]
    for k in range(2, t + 1):
        a_prev, b_prev = a[-1], b[-1]
        a.append(_q * p ** (k - 2) * a_prev + 2 * _q**2 * p ** (k - 3))
        b.append(_q**2 * p ** (k - 2) * a_prev + _q * p ** (k - 1) * b_prev + _q**2 * p ** (k - 3))
    return a, b


def oracle_ab(t, q):
    a, b = symbolic_ab(t)
    qq = sp.Rational(str(q))
    return [sp.simplify(x.subs(_q, qq)) for x in a], [sp.simplify(x.subs(_q, qq)) for x in b]


def oracle_q_prime(t, c, limit=40):
    for qp in range(2, limit):
        a, b = oracle_ab(t, sp.Rational(1, 2**qp))
        if a[-1] - 4 * c * b[-1] > 0:
            return qp
    return None


def oracle_epsilon(t, c):
    qp = oracle_q_prime(t, c)
    a, b = oracle_ab(t, sp.Rational(1, 2**qp))
    alpha = a[-1] / 4 - c * b[-1]
    return qp, alpha, min(c ** (t - 1) * alpha, sp.Rational(1, 2 ** (qp * t * t)))
