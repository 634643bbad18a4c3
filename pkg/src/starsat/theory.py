"""Closed-form machinery for star saturation on G(n,p).

Everything here is a pure function of its arguments: the expected count of
sparse vertex subsets (in log space), the independence-number anchor
alpha_p(n), the two-point prediction for sat(G(n,p), K_{1,r}), and the
classical saturation formulas (Kaszonyi-Tuza for stars, Erdos-Hajnal-Moon
for cliques) used as solver ground truth.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

# Defaults for the slack parameters; only the ordering
# 0 < eps_prime < eps < delta is structurally required.  eps = 0.5 keeps the
# rounded alpha_p window two values wide at desk scale (see README).
DEFAULT_EPS = 0.5
DEFAULT_EPS_PRIME = 1e-3
DEFAULT_DELTA = 0.6

# Guard band for floor(alpha_p + eps): floats this close to an integer get a
# boundary warning instead of a silent floor.
_FLOOR_GUARD = 1e-9


def ceil_half(doubled: int) -> int:
    """Exact ceil(doubled / 2) in integer arithmetic."""
    return (doubled + 1) // 2


def log_binomial(n: int, k: int) -> float:
    """ln C(n, k) via log-gamma; requires 0 <= k <= n."""
    return math.lgamma(n + 1) - math.lgamma(k + 1) - math.lgamma(n - k + 1)


def log_phi(n: int, p: float, k: int, m: int) -> float | None:
    """ln of the expected number of k-vertex sets inducing exactly m edges.

    The expectation is C(n,k) * C(C(k,2), m) * p^m * (1-p)^(C(k,2)-m);
    values at realistic n underflow or overflow doubles, so everything is
    evaluated in log space.  Returns None when m > C(k,2) (the expectation
    is exactly zero).
    """
    if not (0.0 < p < 1.0):
        raise ValueError(f"p must lie strictly in (0,1), got {p}")
    if not (0 <= k <= n):
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    if m < 0:
        raise ValueError("m must be nonnegative")
    pairs = k * (k - 1) // 2
    if m > pairs:
        return None
    return (
        log_binomial(n, k)
        + log_binomial(pairs, m)
        + m * math.log(p)
        + (pairs - m) * math.log1p(-p)
    )


def alpha_p_value(n: int, p: float) -> float:
    """The independence-number anchor 2 log_b n - 2 log_b log_b n
    + 2 log_b(e/2) + 1 with b = 1/(1-p)."""
    if not (0.0 < p < 1.0):
        raise ValueError(f"p must lie strictly in (0,1), got {p}")
    if n < 3:
        raise ValueError("n must be at least 3")
    ln_b = -math.log1p(-p)
    log_b_n = math.log(n) / ln_b
    if log_b_n <= 1.0:
        raise ValueError(f"n={n} too small for this p: log_b n <= 1")
    return (
        2.0 * log_b_n
        - 2.0 * math.log(log_b_n) / ln_b
        + 2.0 * math.log(math.e / 2.0) / ln_b
        + 1.0
    )


@dataclass(frozen=True)
class TheoryParams:
    """Parameters of a prediction: host size n, edge probability p, star
    size r, and the slack parameters with 0 < eps_prime < eps < delta."""

    n: int
    p: float
    r: int
    eps: float = DEFAULT_EPS
    eps_prime: float = DEFAULT_EPS_PRIME
    delta: float = DEFAULT_DELTA

    def __post_init__(self):
        if not (0.0 < self.p < 1.0):
            raise ValueError(f"p must lie strictly in (0,1), got {self.p}")
        if self.r < 3:
            raise ValueError(f"star size r must be at least 3, got {self.r}")
        if not (0.0 < self.eps_prime < self.eps < self.delta):
            raise ValueError(
                "slack parameters must satisfy 0 < eps_prime < eps < delta, "
                f"got eps_prime={self.eps_prime}, eps={self.eps}, delta={self.delta}"
            )
        if self.n < 3:
            raise ValueError("n must be at least 3")


@dataclass(frozen=True)
class Prediction:
    """All quantities behind the predicted value set for sat(G(n,p), K_{1,r}).

    values holds one integer (one-point case) or two consecutive integers
    (two-point case).  warnings carries numeric-boundary diagnostics and is
    not part of the serialized field set.
    """

    b: float
    alpha_p: float
    x0: int
    r_prime: int
    mu: int
    case: str  # "one-point" | "two-point"
    base_term: int
    values: tuple[int, ...]
    warnings: tuple[str, ...] = field(default=(), compare=False)

    def to_dict(self) -> dict:
        return {
            "b": self.b,
            "alpha_p": self.alpha_p,
            "x0": self.x0,
            "r_prime": self.r_prime,
            "mu": self.mu,
            "case": self.case,
            "base_term": self.base_term,
            "values": list(self.values),
        }


def predict(params: TheoryParams) -> Prediction:
    """Evaluate the one-point/two-point prediction for the given parameters.

    x0 = floor(alpha_p + eps); r' = ceil((r-3)/2) minus 1 when n-x0 and r-1
    are both odd; the value set is base_term + mu (+1 in the two-point case)
    with base_term = ceil((r-1)(n-x0)/2).  All comparisons against eps_prime
    happen in log space.
    """
    n, p, r = params.n, params.p, params.r
    b = 1.0 / (1.0 - p)
    ap = alpha_p_value(n, p)
    warnings: list[str] = []

    anchor = ap + params.eps
    x0 = math.floor(anchor)
    if abs(anchor - round(anchor)) < _FLOOR_GUARD:
        warnings.append(
            f"alpha_p + eps = {anchor!r} is within {_FLOOR_GUARD} of an integer; "
            "x0 may be off by one"
        )

    both_odd = (n - x0) % 2 == 1 and (r - 1) % 2 == 1
    r_prime = -((r - 3) // -2) - (1 if both_odd else 0)
    if r_prime < 0:
        raise AssertionError("r_prime must be nonnegative for r >= 3")

    log_eps_prime = math.log(params.eps_prime)

    def lphi(m: int) -> float:
        val = log_phi(n, p, x0, m)
        return -math.inf if val is None else val

    # expected counts must grow steeply in m at prediction scale
    for m in range(r_prime + 1):
        if lphi(m + 1) - lphi(m) <= math.log(10.0):
            warnings.append(
                f"growth check failed at m={m}: successive expected counts "
                "are not a decade apart; the scale is too small for a "
                "reliable case split"
            )
            break

    if lphi(r_prime) < log_eps_prime:
        case = "one-point"
        mu = r_prime + 1
    else:
        case = "two-point"
        mu = next(m for m in range(r_prime + 1) if lphi(m) >= log_eps_prime)

    base = ceil_half((r - 1) * (n - x0))
    values = (base + mu,) if case == "one-point" else (base + mu, base + mu + 1)
    return Prediction(
        b=b,
        alpha_p=ap,
        x0=x0,
        r_prime=r_prime,
        mu=mu,
        case=case,
        base_term=base,
        values=values,
        warnings=tuple(warnings),
    )


def classic_star_sat(n: int, r: int) -> int:
    """Minimum edges of a K_{1,r}-saturated graph on n vertices
    (Kaszonyi-Tuza): C(r,2) + C(n-r,2) for r+1 <= n <= 3r/2, and
    ceil((r-1)n/2 - r^2/8) for n >= 3r/2."""
    if r < 2:
        raise ValueError("star size must be at least 2")
    if n <= r:
        raise ValueError(f"need n >= r+1, got n={n}, r={r}")
    small = math.comb(r, 2) + math.comb(n - r, 2)
    # ceil((r-1)n/2 - r^2/8) exactly: ceil((4(r-1)n - r^2) / 8)
    num = 4 * (r - 1) * n - r * r
    large = -(-num // 8)
    if 2 * n < 3 * r:
        return small
    if 2 * n == 3 * r:
        assert small == large, "branch mismatch at the n = 3r/2 boundary"
    return large


def classic_clique_sat(n: int, m: int) -> int:
    """Minimum edges of a K_m-saturated graph on n vertices
    (Erdos-Hajnal-Moon): (m-2)(n-m+2) + C(m-2,2)."""
    if m < 2:
        raise ValueError("clique size must be at least 2")
    if n < m:
        raise ValueError(f"need n >= m, got n={n}, m={m}")
    value = (m - 2) * (n - m + 2) + math.comb(m - 2, 2)
    alt = math.comb(n, 2) - math.comb(n - m + 2, 2)
    assert value == alt, "the two closed forms disagree"
    return value
