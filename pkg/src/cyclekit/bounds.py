"""Closed-form cycle-count bounds and the max-product partition quantity.

Bounds are exact rationals whenever the exponents are integral; otherwise
they are evaluated at >= 50 significant digits with the rounding directed so
that upper bounds are never reported below their true value and lower bounds
never above.  Comparisons against exact cycle counts are therefore sound.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .graphs import Multigraph, SimpleGraph, component_count, degree_stats
from .rounding import DOWN, UP, directed, equal_split_power, pow_fraction, three_pow


@dataclass(frozen=True)
class BoundParams:
    """Shared parameters: edge density split into integer part and remainder."""

    n: int
    m: int
    delta: int
    s: int
    alpha: Fraction

    @classmethod
    def make(cls, n: int, m: int, delta: int) -> "BoundParams":
        if n < 2:
            raise DomainError(f"bound parameters need n >= 2, got {n}")
        if m < 0 or delta < 0:
            raise DomainError("m and delta must be non-negative")
        ratio = Fraction(m, n - 1)
        s = ratio.numerator // ratio.denominator
        return cls(n, m, delta, s, ratio - s)

    @classmethod
    def from_graph(cls, g: SimpleGraph | Multigraph) -> "BoundParams":
        return cls.make(g.n, g.m, degree_stats(g).delta_max)

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.m, self.n - 1)


def ahrens(n: int, m: int, k: int) -> tuple[int, int]:
    """Cyclomatic sandwich (max(m-n+k, 0), 2**(m-n+k) - 1), upper clamped at 0."""
    if k < 1 or n < k:
        raise DomainError(f"need 1 <= k <= n, got k={k}, n={n}")
    r = m - n + k
    return (max(r, 0), (1 << r) - 1 if r > 0 else 0)


def aldred_thomassen(n: int, m: int) -> Fraction:
    """(15/16) * 2**(m-n+1); caller asserts connectivity (so m >= n-1)."""
    r = m - n + 1
    if r < 0:
        raise DomainError("connected graphs have m >= n - 1")
    return Fraction(15, 16) * (1 << r)


def new_bound(p: BoundParams):
    """Density-based upper bound on the cycle count of an (n, m) multigraph.

    (3/4)*delta*3**(m/3) below density 3, else
    (3/4)*delta*(s**(1-alpha)*(s+1)**alpha)**(n-1).  Exact Fraction when the
    exponent is integral, otherwise an upward-rounded 50+ digit value.
    """
    coeff = Fraction(3, 4) * p.delta
    if p.ratio < 3:
        return _scale(coeff, three_pow(p.m, UP), UP)
    return _scale(coeff, equal_split_power(p.s, p.alpha, p.n - 1, UP), UP)


def vertex_cycle_bound(p: BoundParams):
    """Upper bound on cycles through a fixed maximum-degree vertex."""
    if p.n < 3:
        raise DomainError(f"per-vertex bound needs n >= 3, got {p.n}")
    coeff = Fraction(p.delta, 2)
    if p.ratio < 3:
        return _scale(coeff, three_pow(p.m, UP), UP)
    return _scale(coeff, equal_split_power(p.s, p.alpha, p.n - 1, UP), UP)


@dataclass(frozen=True)
class CorollaryBound:
    """8.25 * 3**(m/3) together with the 1.443**m comparison outcome."""

    m: int
    value: object            # Fraction when 3 | m, else upward-rounded mpfr
    implies_pow_1443: bool   # certified: 8.25 * 3**(m/3) <= 1.443**m


def corollary_bound(m: int) -> CorollaryBound:
    if m < 0:
        raise DomainError("edge count must be non-negative")
    value = _scale(Fraction(33, 4), three_pow(m, UP), UP)
    return CorollaryBound(m, value, _corollary_implies_pow(m))


def _corollary_implies_pow(m: int) -> bool:
    base = Fraction(1443, 1000)
    up_cor = _scale(Fraction(33, 4), three_pow(m, UP), UP)
    lo_pow = pow_fraction(base, m, DOWN)
    if up_cor <= lo_pow:
        return True
    lo_cor = _scale(Fraction(33, 4), three_pow(m, DOWN), DOWN)
    up_pow = pow_fraction(base, m, UP)
    if lo_cor > up_pow:
        return False
    # 200 bits leave no gap at any integer m (the two curves never touch)
    raise ArithmeticError(f"comparison not certified at m={m}")


def max_product_partition(m: int, parts_max: int) -> tuple[int, tuple[int, ...]]:
    """Maximum product of positive integers with sum <= m, at most parts_max parts.

    For each part count the optimum splits the sum as equally as possible;
    with the cap not binding the optimum uses only 3s and at most two 2s.
    Returns (product, one optimal multiset sorted descending).
    """
    if m < 0 or parts_max < 1:
        raise DomainError("need m >= 0 and parts_max >= 1")
    if m == 0:
        return 1, ()
    best = 0
    best_parts: tuple[int, ...] = ()
    for t in range(1, min(parts_max, m) + 1):
        q, r = divmod(m, t)
        prod = (q + 1) ** r * q ** (t - r)
        if prod > best:
            best = prod
            best_parts = (q + 1,) * r + (q,) * (t - r)
    return best, best_parts


@dataclass(frozen=True)
class MultigraphBounds:
    """Certified lower/upper bounds for the maximum multigraph cycle count."""

    lo: object
    hi: object
    density_branch: str      # "high" (>=3), "low" (<3) or "boundary"


def multigraph_bounds(n: int, m: int, delta: int) -> MultigraphBounds:
    """Bounds for the maximum cycle count over multigraphs with n vertices and
    m edges; at density exactly 3 both branches are evaluated (the upper
    bounds agree exactly; the larger lower bound is reported)."""
    if m < 3:
        raise DomainError(f"multigraph bounds need m >= 3, got {m}")
    p = BoundParams.make(n, m, delta)
    hi = new_bound(p)
    if p.ratio > 3:
        lo = _scale(Fraction(8, 27) * p.s,
                    equal_split_power(p.s, p.alpha, p.n - 1, DOWN), DOWN)
        return MultigraphBounds(lo, hi, "high")
    lo_low = _scale(Fraction(4), three_pow(m - 4, DOWN), DOWN) if m >= 4 \
        else _scale(Fraction(4, 3), three_pow(m - 1, DOWN), DOWN)
    if p.ratio < 3:
        return MultigraphBounds(lo_low, hi, "low")
    lo_high = _scale(Fraction(8, 27) * p.s,
                     equal_split_power(p.s, p.alpha, p.n - 1, DOWN), DOWN)
    hi_low = _scale(Fraction(3, 4) * delta, three_pow(m, UP), UP)
    assert hi == hi_low  # both exact at the boundary: m = 3(n-1)
    return MultigraphBounds(max(lo_high, lo_low), hi, "boundary")


def equal_split_value(x: Fraction, rounding):
    """floor(x)**(1-frac(x)) * (floor(x)+1)**frac(x) for x >= 1 (density factor)."""
    if x < 1:
        raise DomainError("density factor defined for x >= 1")
    s = x.numerator // x.denominator
    return equal_split_power(s, x - s, 1, rounding)


@dataclass(frozen=True)
class BoundReport:
    """Every bound formula evaluated for one input graph, with applicability."""

    n: int
    m: int
    delta: int
    components: int
    is_multigraph: bool
    ahrens_lo: int | None
    ahrens_hi: int | None
    aldred_thomassen: Fraction | None   # present iff simple and connected
    new_bound: object | None            # None only when n < 2
    corollary: CorollaryBound


def bounds_report(g: SimpleGraph | Multigraph) -> BoundReport:
    multi = isinstance(g, Multigraph)
    k = component_count(g)
    delta = degree_stats(g).delta_max if g.n else 0
    a_lo = a_hi = None
    if not multi:
        a_lo, a_hi = ahrens(g.n, g.m, k) if g.n >= 1 else (0, 0)
    at = None
    if not multi and g.n >= 1 and k == 1:
        at = aldred_thomassen(g.n, g.m)
    nb = new_bound(BoundParams.make(g.n, g.m, delta)) if g.n >= 2 else None
    return BoundReport(g.n, g.m, delta, k, multi, a_lo, a_hi, at,
                       nb, corollary_bound(g.m))


def _scale(coeff: Fraction, factor, rounding):
    """coeff * factor: exact when factor is an int, else directed mpfr."""
    if isinstance(factor, int):
        return coeff * factor
    with directed(rounding):
        return coeff.numerator * factor / coeff.denominator
