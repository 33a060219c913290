"""Closed-form reference bounds and the certified K_{t,t} edge-bound pipeline.

All logarithms are base 2. The bounds here are reference values that
experiments compare observations against; none of them is a promise about
what the heuristic algorithms achieve. The K_{t,t} certificate computes its
intermediate quantities in log2 space so that large parameter choices cannot
overflow doubles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator


@dataclass(frozen=True)
class ParamSet:
    """The configurable absolute constants shared by the bound formulas.

    d scales the separator-size bound, b the biclique-target exponent, and C
    the decomposition exponents. C defaults to max(8d, 6b + 1), the smallest
    value the decomposition analysis supports; explicit smaller values are
    rejected rather than silently producing vacuous bounds.
    """

    d: float = 1.0
    b: float = 1.0
    C: float | None = None
    base_case_n: int = 18

    def __post_init__(self) -> None:
        if not self.d >= 1:
            raise ValueError(f"d must be >= 1, got {self.d}")
        if not self.b >= 1:
            raise ValueError(f"b must be >= 1, got {self.b}")
        if not (isinstance(self.base_case_n, int) and self.base_case_n >= 1):
            raise ValueError(f"base_case_n must be a positive integer, got {self.base_case_n}")
        floor_c = max(8 * self.d, 6 * self.b + 1)
        if self.C is None:
            object.__setattr__(self, "C", floor_c)
        elif not self.C >= floor_c:
            raise ValueError(f"C must be >= max(8d, 6b+1) = {floor_c}, got {self.C}")


DEFAULT_PARAMS = ParamSet()


def separator_size_bound(m: int, params: ParamSet = DEFAULT_PARAMS) -> float:
    """Reference separator size d * sqrt(m) * log2(m) for a string graph
    with m edges."""
    if m < 2:
        raise ValueError(f"need m >= 2 (log2 degenerates), got {m}")
    return params.d * math.sqrt(m) * math.log2(m)


def independence_target(n: int, t: int, params: ParamSet = DEFAULT_PARAMS) -> float:
    """Reference independent-set size n * (log2 n)^(-C log2 t) for a
    K_t-free string graph on n vertices."""
    if n < 2 or t < 2:
        raise ValueError(f"need n >= 2 and t >= 2, got n={n}, t={t}")
    return n * math.log2(n) ** (-params.C * math.log2(t))


def chromatic_bound(n: int, t: int, params: ParamSet = DEFAULT_PARAMS) -> float:
    """Reference color count 4 * (log2 n)^(C log2 t + 1) for a K_t-free
    string graph on n vertices."""
    if n < 2 or t < 2:
        raise ValueError(f"need n >= 2 and t >= 2, got n={n}, t={t}")
    return 4 * math.log2(n) ** (params.C * math.log2(t) + 1)


def biclique_target_size(n: int, m: int, params: ParamSet = DEFAULT_PARAMS) -> float:
    """Reference balanced-biclique side size (m/n^2)^b * n / log2(n) at the
    given density."""
    if n < 3 or m < 1:
        raise ValueError(f"need n >= 3 and m >= 1, got n={n}, m={m}")
    density = m / (n * n)
    return density**params.b * n / math.log2(n)


def quasi_planar_edge_bound(n: int, t: int, params: ParamSet = DEFAULT_PARAMS) -> float:
    """Reference edge count 3n * (2 log2 n)^(C log2 t) for drawings with no
    t pairwise-crossing edges."""
    if n < 2 or t < 2:
        raise ValueError(f"need n >= 2 and t >= 2, got n={n}, t={t}")
    return 3 * n * (2 * math.log2(n)) ** (params.C * math.log2(t))


# --- certified infinite product ----------------------------------------------

PRODUCT_CUTOFF = 1e-12


def bracketed_product(
    fractions: Iterable[float],
    tail_factor: float,
    cutoff: float = PRODUCT_CUTOFF,
    max_terms: int = 1_000_000,
) -> tuple[float, float, int]:
    """Certified bracket for an infinite product prod_i (1 + f_i).

    Multiplies factors until the current fraction drops below `cutoff` (or
    the iterable ends). The discarded tail is bounded using
    sum_{j >= stop} f_j <= f_stop * tail_factor, which holds whenever the
    fractions decay at least geometrically with ratio r and
    tail_factor >= 1/(1 - r). Returns (lower, upper, terms_used); the true
    product lies in [lower, upper] up to double rounding.
    """
    if tail_factor < 0:
        raise ValueError("tail_factor must be nonnegative")
    lower = 1.0
    used = 0
    tail_head = 0.0
    it: Iterator[float] = iter(fractions)
    for f in it:
        if f < 0:
            raise ValueError(f"fractions must be nonnegative, got {f}")
        if f < cutoff:
            tail_head = f
            break
        lower *= 1.0 + f
        used += 1
        if used > max_terms:
            raise ValueError("product did not reach the cutoff; fractions too flat")
    upper = lower * math.exp(tail_head * tail_factor)
    return lower, upper, used


@dataclass(frozen=True)
class EdgeBoundCertificate:
    """Certified per-vertex edge bound for string graphs with no K_{t,t}.

    The pipeline fixes a threshold size n0 = x * t * (log2 t)^a with
    x = (2^8 d b)^(16 b) and a = 8 b, evaluates the per-scale loss fraction

        phi(n) = 2 d t^(1/(2b)) (log2 n)^(1 + 1/(2b)) n^(-1/(2b)),

    and brackets the infinite product q = prod_i (1 + phi((4/3)^i * n0)).
    Three hypothesis checks are certified at construction time:
    phi(n0) <= 1/12, the one-step decay ratio at n0 is <= 1 - 1/(12b), and
    q_upper <= e^b. The headline value is bound_per_vertex = q_upper * n0 / 2:
    a graph below it (times n) in edges is certified to be forced at scale n0.

    x and n0 are also stored as plain floats for reporting; they become inf
    when out of double range, in which case the log2 fields stay exact.
    """

    t: int
    d: float
    b: float
    a: float
    log2_x: float
    log2_n0: float
    x: float
    n0: float
    phi_at_n0: float
    ratio_at_n0: float
    ratio_limit: float
    q_lower: float
    q_upper: float
    q_limit: float
    factors_used: int
    bound_per_vertex: float

    def phi(self, n: float) -> float:
        """The loss fraction at size n (n must exceed 2 so log2 n > 1)."""
        return _phi_from_log2n(math.log2(n), self.t, self.d, self.b)

    @property
    def q(self) -> float:
        """The certified (upper) value of the infinite product."""
        return self.q_upper


def _log2_phi(log2_n: float, t: int, d: float, b: float) -> float:
    inv = 1.0 / (2.0 * b)
    return (
        1.0
        + math.log2(d)
        + inv * math.log2(t)
        + (1.0 + inv) * math.log2(log2_n)
        - inv * log2_n
    )


def _phi_from_log2n(log2_n: float, t: int, d: float, b: float) -> float:
    return 2.0 ** _log2_phi(log2_n, t, d, b)


def ktt_edge_bound(t: int, params: ParamSet = DEFAULT_PARAMS) -> EdgeBoundCertificate:
    """Build and verify the K_{t,t} edge-bound certificate for clique-side
    size t.

    Raises ValueError when any hypothesis check fails — that indicates
    invalid parameters, not an arithmetic problem.
    """
    if t < 2:
        raise ValueError(f"need t >= 2, got {t}")
    d, b = params.d, params.b
    a = 8.0 * b
    log2_x = 16.0 * b * (8.0 + math.log2(d * b))
    log2_t = math.log2(t)
    # n0 = x * t * (log2 t)^a; for t = 2 the last factor is 1^a = 1
    log2_n0 = log2_x + log2_t + (a * math.log2(log2_t) if log2_t > 1 else 0.0)

    phi_at_n0 = _phi_from_log2n(log2_n0, t, d, b)
    if not phi_at_n0 <= 1.0 / 12.0:
        raise ValueError(
            f"loss fraction at n0 is {phi_at_n0:.6g} > 1/12; parameters out of range"
        )

    step = math.log2(4.0 / 3.0)
    ratio_limit = 1.0 - 1.0 / (12.0 * b)
    ratio_at_n0 = 2.0 ** (
        _log2_phi(log2_n0 + step, t, d, b) - _log2_phi(log2_n0, t, d, b)
    )
    if not ratio_at_n0 <= ratio_limit:
        raise ValueError(
            f"decay ratio at n0 is {ratio_at_n0:.6g} > {ratio_limit:.6g}"
        )

    def fractions() -> Iterator[float]:
        cur = log2_n0
        while True:
            yield _phi_from_log2n(cur, t, d, b)
            cur += step

    # the ratio check certifies geometric decay, so the tail is at most
    # phi_stop * 1/(1 - ratio_limit) = phi_stop * 12b
    q_lower, q_upper, used = bracketed_product(fractions(), 12.0 * b)
    q_limit = math.exp(b)
    if not q_upper <= q_limit:
        raise ValueError(f"product upper bound {q_upper:.12g} exceeds e^b = {q_limit:.12g}")

    # 2.0**y raises OverflowError near the top of the double range
    x = 2.0**log2_x if log2_x < 1020 else math.inf
    n0 = 2.0**log2_n0 if log2_n0 < 1020 else math.inf
    return EdgeBoundCertificate(
        t=t,
        d=d,
        b=b,
        a=a,
        log2_x=log2_x,
        log2_n0=log2_n0,
        x=x,
        n0=n0,
        phi_at_n0=phi_at_n0,
        ratio_at_n0=ratio_at_n0,
        ratio_limit=ratio_limit,
        q_lower=q_lower,
        q_upper=q_upper,
        q_limit=q_limit,
        factors_used=used,
        bound_per_vertex=q_upper * n0 / 2.0,
    )
