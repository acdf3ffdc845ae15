"""Exact-rational lower-bound calculus for nice-walk counts.

Everything here is computed with :class:`fractions.Fraction`; no floats
are used in any decision.

Notation: ``q`` is the fraction of the maximum degree peeled off per
level (``q = 2**-q_prime``), ``p = 1 - q``. The sequences ``a_k``, ``b_k``
give the closed-form lower bound

    g_k(n, m, D) = a_k * m * D**(k-1) - b_k * n * D**k

on the number of nice k-walks in any graph with n vertices, at least m
edges and maximum degree at most D, provided ``q*D, q*p*D, ...,
q*p**(k-2)*D`` are positive integers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial

from sympy import isprime, perfect_power


class BoundsError(ValueError):
    pass


# 4e = 10.8731273138...; any rational at least this keeps lll_min_k sound.
FOUR_E_UPPER = Fraction(1087313, 100000)
PRIME_POWER_SEARCH_CAP = 2**64


@dataclass(frozen=True)
class BoundParams:
    t: int
    c: int
    q_prime: int

    def __post_init__(self):
        if self.q_prime < 2:
            raise BoundsError("q_prime must be >= 2 so that q < 1/2")

    @property
    def q(self) -> Fraction:
        return Fraction(1, 2**self.q_prime)

    @property
    def p(self) -> Fraction:
        return 1 - self.q


@dataclass(frozen=True)
class SeqTable:
    """``a[k-1]``, ``b[k-1]`` hold a_k, b_k."""

    q: Fraction
    a: tuple[Fraction, ...]
    b: tuple[Fraction, ...]

    def ak(self, k: int) -> Fraction:
        return self.a[k - 1]

    def bk(self, k: int) -> Fraction:
        return self.b[k - 1]


def _as_q(q) -> Fraction:
    if isinstance(q, BoundParams):
        return q.q
    q = Fraction(q)
    if not 0 < q < 1:
        raise BoundsError(f"q must lie in (0, 1), got {q}")
    return q


@lru_cache(maxsize=512)
def _ab(t: int, q: Fraction) -> SeqTable:
    p = 1 - q
    a, b = [Fraction(1)], [Fraction(0)]
    for k in range(2, t + 1):
        a_prev, b_prev = a[-1], b[-1]
        # p**(k-3) is 1/p at k = 2
        a.append(q * p ** (k - 2) * a_prev + 2 * q**2 * p ** (k - 3))
        b.append(q**2 * p ** (k - 2) * a_prev + q * p ** (k - 1) * b_prev + q**2 * p ** (k - 3))
    return SeqTable(q, tuple(a), tuple(b))


def ab_sequences(t: int, q) -> SeqTable:
    """Tables a_1..a_t and b_1..b_t for the given ``q`` (or :class:`BoundParams`)."""
    if t < 1:
        raise BoundsError("t must be >= 1")
    return _ab(t, _as_q(q))


def g_value(n, m, delta, k: int, q) -> Fraction:
    seq = ab_sequences(k, q)
    n, m, delta = Fraction(n), Fraction(m), Fraction(delta)
    return seq.ak(k) * m * delta ** (k - 1) - seq.bk(k) * n * delta**k


def recursion_identity_residual(n, m, delta, k: int, q) -> Fraction:
    """LHS - RHS of the one-level recursion that g_k satisfies; always 0."""
    if k < 2:
        raise BoundsError("the recursion identity needs k >= 2")
    q = _as_q(q)
    p = 1 - q
    n, m, delta = Fraction(n), Fraction(m), Fraction(delta)
    lhs = g_value(n, m, delta, k, q)
    rhs = q * delta * g_value(n, m - q * n * delta, p * delta, k - 1, q) - q**2 * p ** (k - 3) * delta ** (k - 1) * (
        n * delta - 2 * m
    )
    return lhs - rhs


def lemma1_lower(n: int, m: int, delta: int, a_schedule, k: int) -> Fraction:
    """Unrolled wealthy/beggared recursion with per-level thresholds ``a_schedule``.

    ``a_schedule[0]`` is used at level k, ``a_schedule[1]`` at level k-1,
    and so on. Each level's value is clamped below at 0.
    """
    a_schedule = list(a_schedule)
    if k < 1:
        raise BoundsError("k must be >= 1")
    if len(a_schedule) != k - 1:
        raise BoundsError(f"schedule must have {k - 1} entries, got {len(a_schedule)}")

    def f(level, m, delta, sched):
        if level == 1:
            return max(Fraction(m), Fraction(0))
        a = sched[0]
        if a < 1 or 2 * a > delta:
            raise BoundsError(f"threshold a={a} violates 1 <= a <= {delta}/2 at level {level}")
        inner = f(level - 1, m - a * n, delta - a, sched[1:])
        loss = Fraction(n * delta - 2 * m) * a * Fraction(delta - a) ** (level - 3)
        return max(a * (inner - loss), Fraction(0))

    return f(k, Fraction(m), Fraction(delta), a_schedule)


def _pmul(x, y):
    out = [0] * (len(x) + len(y) - 1)
    for i, a in enumerate(x):
        if a:
            for j, b in enumerate(y):
                out[i + j] += a * b
    return out


def _padd(*polys):
    out = [0] * max(len(x) for x in polys)
    for x in polys:
        for i, a in enumerate(x):
            out[i] += a
    return out


def _ppow(x, e):
    out = [1]
    for _ in range(e):
        out = _pmul(out, x)
    return out


@lru_cache(maxsize=64)
def condition_poly(t: int, c: int) -> tuple[int, ...]:
    """Integer coefficients (ascending in q) of p * (a_t - 4c*b_t).

    Multiplying by p clears the p**-1 at k = 2, so p*a_k and p*b_k are
    integer polynomials in q:
        p*a_k = q p^(k-2) (p*a_{k-1}) + 2 q^2 p^(k-2)
        p*b_k = q^2 p^(k-2) (p*a_{k-1}) + q p^(k-1) (p*b_{k-1}) + q^2 p^(k-2)
    """
    P = [1, -1]
    A, B = P, [0]
    for k in range(2, t + 1):
        pk2 = _ppow(P, k - 2)
        A, B = (
            _padd(_pmul([0, 1], _pmul(pk2, A)), _pmul([0, 0, 2], pk2)),
            _padd(_pmul([0, 0, 1], _pmul(pk2, A)), _pmul([0, 1], _pmul(_ppow(P, k - 1), B)), _pmul([0, 0, 1], pk2)),
        )
    return tuple(_padd(A, [-4 * c * x for x in B]))


def _sign_at_dyadic(poly, q_prime: int) -> int:
    # sign of sum poly[i] * 2**(-q' i), scaled by 2**(q' * deg)
    d = len(poly) - 1
    s = sum(a << (q_prime * (d - i)) for i, a in enumerate(poly) if a)
    return (s > 0) - (s < 0)


def find_q_prime(t: int, c: int, cap: int | None = None) -> BoundParams:
    """Smallest q' >= 2 with a_t - 4c*b_t > 0 at q = 2**-q'.

    Such a q' exists for t <= 2 only: for every t >= 3 and c >= 1 the
    difference is negative throughout 0 < q < 1/2 (a_t/b_t tends to 3 at
    t = 3 and to 2 beyond as q -> 0), so the search runs into ``cap``.
    """
    if t < 1 or c < 1:
        raise BoundsError("t and c must be positive")
    cap = 64 * t * t if cap is None else cap
    poly = condition_poly(t, c)
    for qp in range(2, cap + 1):
        if _sign_at_dyadic(poly, qp) > 0:
            seq = ab_sequences(t, Fraction(1, 2**qp))
            if not seq.ak(t) - 4 * c * seq.bk(t) > 0:
                raise AssertionError(f"polynomial screen disagrees with exact tables at q'={qp}")
            return BoundParams(t, c, qp)
    raise BoundsError(f"no q' <= {cap} with a_t - 4c*b_t > 0 for t={t}, c={c}")


@dataclass(frozen=True)
class EpsilonResult:
    params: BoundParams
    alpha: Fraction
    epsilon: Fraction

    @property
    def q_prime(self) -> int:
        return self.params.q_prime


@lru_cache(maxsize=128)
def epsilon(t: int, c: int) -> EpsilonResult:
    params = find_q_prime(t, c)
    seq = ab_sequences(t, params)
    alpha = seq.ak(t) / 4 - c * seq.bk(t)
    eps = min(c ** (t - 1) * alpha, Fraction(1, 2 ** (params.q_prime * t * t)))
    return EpsilonResult(params, alpha, eps)


def ceil_log2(x: Fraction) -> int:
    """Smallest integer r with 2**r >= x, for rational x > 0."""
    x = Fraction(x)
    if x <= 0:
        raise BoundsError("ceil_log2 needs x > 0")
    r = x.numerator.bit_length() - x.denominator.bit_length()
    while Fraction(2) ** r < x:
        r += 1
    while Fraction(2) ** (r - 1) >= x:
        r -= 1
    return r


@dataclass
class BadnessCertificate:
    applies: bool
    n: int
    dbar: Fraction
    delta: int
    t: int
    c: int
    degree_condition: bool
    density_condition: bool
    epsilon: EpsilonResult | None
    reason: str = ""
    r_prime: int | None = None
    r: Fraction | None = None
    r_exceeds_2_qt: bool | None = None
    step_degrees: list[Fraction] = field(default_factory=list)
    integrality: bool | None = None
    chain_holds: bool | None = None
    g_t: Fraction | None = None
    n_squared: int = 0
    g_exceeds_n_squared: bool | None = None


def theorem1_certify(n: int, dbar, delta: int, t: int, c: int) -> BadnessCertificate:
    """Arithmetic certificate that a graph is bad via counting nice t-walks.

    ``applies`` is true when Delta <= c*dbar and eps(t,c)*dbar**t > n and
    every step of the proof chain checks out exactly: then every
    labelling has more than n**2 nice t-walks, so two share endpoints.
    """
    dbar = Fraction(dbar)
    try:
        eps = epsilon(t, c)
    except BoundsError as exc:
        return BadnessCertificate(False, n, dbar, delta, t, c, delta <= c * dbar, False, None, str(exc), n_squared=n * n)
    params = eps.params
    cert = BadnessCertificate(
        applies=False,
        n=n,
        dbar=dbar,
        delta=delta,
        t=t,
        c=c,
        degree_condition=delta <= c * dbar,
        density_condition=eps.epsilon * dbar**t > n,
        epsilon=eps,
        n_squared=n * n,
    )
    if dbar <= 0:
        cert.reason = "average degree is 0"
        return cert
    q, p = params.q, params.p
    cert.r_prime = ceil_log2(dbar)
    cert.r = r = Fraction(2) ** cert.r_prime
    cert.r_exceeds_2_qt = r > 2 ** (params.q_prime * t)
    D = c * r
    cert.step_degrees = [q * p**i * D for i in range(t - 1)]
    cert.integrality = all(x.denominator == 1 and x > 0 for x in cert.step_degrees)
    cert.chain_holds = Fraction(1, 2 ** (params.q_prime * t * t)) * r**t >= eps.epsilon * dbar**t
    cert.g_t = g_value(n, n * r / 4, D, t, q)
    cert.g_exceeds_n_squared = cert.g_t > n * n
    cert.applies = (
        cert.degree_condition
        and cert.density_condition
        and cert.chain_holds
        and cert.r_exceeds_2_qt
        and cert.integrality
        and cert.g_exceeds_n_squared
    )
    if not cert.applies:
        failed = [
            name
            for name, ok in [
                ("max degree exceeds c * average degree", cert.degree_condition),
                ("eps * dbar**t <= n", cert.density_condition),
                ("2**(-q' t^2) r^t < eps dbar^t", cert.chain_holds),
                ("r <= 2**(q' t)", cert.r_exceeds_2_qt),
                ("peeled degrees not positive integers", cert.integrality),
                ("g_t <= n**2", cert.g_exceeds_n_squared),
            ]
            if not ok
        ]
        cert.reason = "; ".join(failed)
    return cert


def lll_inequality(delta: int, k: int, four_e: Fraction = FOUR_E_UPPER) -> bool:
    """``four_e * k**2 * (delta-1)**(k-1) < k!``."""
    return four_e * k * k * (delta - 1) ** (k - 1) < factorial(k)


@dataclass(frozen=True)
class LLLThreshold:
    delta: int
    k: int

    @property
    def girth_threshold(self) -> int:
        return 2 * self.k


def lll_min_k(delta: int) -> LLLThreshold:
    """Smallest k >= 2 such that max degree <= delta and girth >= 2k force goodness."""
    if delta < 1:
        raise BoundsError("delta must be >= 1")
    k = 2
    while not lll_inequality(delta, k):
        k += 1
    return LLLThreshold(delta, k)


def is_odd_prime_power(x: int) -> bool:
    if x < 3 or x % 2 == 0:
        return False
    if isprime(x):
        return True
    pp = perfect_power(x)
    return bool(pp) and isprime(int(pp[0]))


def smallest_odd_prime_power_above(threshold) -> int:
    x = int(Fraction(threshold).__floor__()) + 1
    if x % 2 == 0:
        x += 1
    x = max(x, 3)
    while not is_odd_prime_power(x):
        x += 2
    return x


@dataclass
class CorollaryParams:
    girth: int
    special_case: bool
    t: int | None = None
    threshold: Fraction | None = None
    d_min: int | str | None = None
    witness_inequality: bool | None = None
    reason: str = ""


def corollary_params(g: int) -> CorollaryParams:
    """Parameters for a bad graph of girth ``g`` from a dense regular cage-like family.

    For g in {3, 4}, K_3 and K_{2,3} already do it. Otherwise
    t = floor(3g/4) + 1, and a d-regular girth-g graph on at most
    2*d**(3g/4 - 1) vertices is bad once d is an odd prime power above
    2/eps(t, 1).
    """
    if g < 3:
        raise BoundsError("girth must be >= 3")
    if g <= 4:
        return CorollaryParams(g, True)
    t = 3 * g // 4 + 1
    try:
        eps = epsilon(t, 1).epsilon
    except BoundsError as exc:
        return CorollaryParams(g, False, t, reason=str(exc))
    threshold = 2 / eps
    out = CorollaryParams(g, False, t, threshold)
    if threshold >= PRIME_POWER_SEARCH_CAP:
        out.d_min = "above search cap"
        return out
    d = smallest_odd_prime_power_above(threshold)
    out.d_min = d
    # 2*d**((3g-4)/4) < eps*d**t, raised to the 4th power to stay integral
    out.witness_inequality = 16 * Fraction(d) ** (3 * g - 4) < eps**4 * Fraction(d) ** (4 * t)
    return out
