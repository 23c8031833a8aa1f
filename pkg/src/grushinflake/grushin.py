"""The generalized Grushin plane as a metric object.

Metric values (fractional powers) are computed in double precision; exactness
is reserved for the lattice geometry elsewhere.  The explicit quasidistance is
the verification metric throughout; the true path metric is only bracketed by
the 3-leg path family in geodesic_upper_bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .exactgeom import parse_rat, rat_str


@dataclass(frozen=True)
class Alpha:
    """Exponent data: alpha in [N, N + (n-1)/n], with p = N + (n-1)/n."""

    value: Fraction
    N: int
    n: int

    def __post_init__(self):
        if self.N < 0 or self.n < 1:
            raise ValueError("need N >= 0, n >= 1")
        if not (self.N <= self.value <= self.p):
            raise ValueError(f"alpha={self.value} outside [{self.N}, {self.p}]")

    @property
    def p(self) -> Fraction:
        return Fraction(self.N) + Fraction(self.n - 1, self.n)

    @property
    def dim(self) -> int:
        """Ambient embedding dimension N + 2."""
        return self.N + 2

    @staticmethod
    def from_value(value, N: int | None = None, n: int | None = None) -> "Alpha":
        """Pick the smallest admissible (N, n) window containing alpha."""
        value = Fraction(value)
        if N is None:
            N = max(0, math.floor(value))
        if n is None:
            frac = value - N
            if frac == 0:
                n = 1
            else:
                # smallest n with (n-1)/n >= frac, i.e. n >= 1/(1-frac)
                n = math.ceil(1 / float(1 - frac))
                while Fraction(n - 1, n) < frac:
                    n += 1
        return Alpha(value, N, n)

    def to_json(self) -> dict:
        return {"alpha": rat_str(self.value), "N": self.N, "n": self.n}


@dataclass(frozen=True)
class GrushinPoint:
    x1: Fraction
    x2: Fraction

    @staticmethod
    def of(x1, x2) -> "GrushinPoint":
        return GrushinPoint(Fraction(x1), Fraction(x2))

    def to_json(self) -> list:
        return [rat_str(self.x1), rat_str(self.x2)]

    @staticmethod
    def from_json(v) -> "GrushinPoint":
        return GrushinPoint(parse_rat(v[0]), parse_rat(v[1]))


@dataclass
class MetricConstants:
    """Empirically measured comparability constants (both >= 1)."""

    C_m: float
    c_m: float


def quasidistance(a: Alpha, x: GrushinPoint, y: GrushinPoint) -> float:
    """|dx1| + min(|dx2|^(1/(1+alpha)), |dx2| / max(|x1|,|y1|)^alpha).

    Using the larger of |x1|, |y1| in the second branch makes the formula
    symmetric (the usual statement normalizes |x1| >= |y1| instead).
    """
    al = float(a.value)
    dx1 = abs(float(x.x1) - float(y.x1))
    dx2 = abs(float(x.x2) - float(y.x2))
    if dx2 == 0:
        return dx1
    snow = dx2 ** (1.0 / (1.0 + al))
    m = max(abs(float(x.x1)), abs(float(y.x1)))
    if m == 0:
        return dx1 + snow
    return dx1 + min(snow, dx2 / m ** al)


def dilate(a: Alpha, delta, p: GrushinPoint) -> GrushinPoint:
    """(x1, x2) -> (delta*x1, delta^(1+alpha)*x2); exact when the power is rational."""
    if delta <= 0:
        raise ValueError("delta must be positive")
    delta = Fraction(delta)
    expo = 1 + a.value
    scaled = _rat_power(delta, expo)
    return GrushinPoint(delta * p.x1, scaled * p.x2)


def _rat_power(base: Fraction, expo: Fraction):
    """base**expo as an exact Fraction when possible, else a float."""
    expo = Fraction(expo)
    num, den = expo.numerator, expo.denominator
    if den == 1:
        return base ** num
    pn = _iroot(base.numerator, den)
    pd = _iroot(base.denominator, den)
    if pn is not None and pd is not None:
        return Fraction(pn, pd) ** num
    return float(base) ** float(expo)


def _iroot(v: int, k: int):
    """Exact integer k-th root of v >= 0, or None."""
    if v < 0:
        return None
    r = round(v ** (1.0 / k))
    for c in (r - 1, r, r + 1):
        if c >= 0 and c ** k == v:
            return c
    return None


def h_alpha(a: Alpha, p: GrushinPoint) -> tuple:
    """The signed-power flattening (x1, x2) -> (x1|x1|^alpha, 0, ..., 0, x2)."""
    x1 = float(p.x1)
    first = math.copysign(abs(x1) ** (1.0 + float(a.value)), x1) if x1 != 0 else 0.0
    return (first,) + (0.0,) * a.N + (float(p.x2),)


def h_alpha_exact(a: Alpha, p: GrushinPoint) -> tuple | None:
    """Exact-rational h_alpha image when |x1|^(1+alpha) is rational, else None."""
    x1 = Fraction(p.x1)
    if x1 == 0:
        first = Fraction(0)
    else:
        v = _rat_power(abs(x1), 1 + a.value)
        if not isinstance(v, Fraction):
            return None
        first = v if x1 > 0 else -v
    return (first,) + (Fraction(0),) * a.N + (Fraction(p.x2),)


def geodesic_upper_bound(a: Alpha, x: GrushinPoint, y: GrushinPoint, grid: int = 64) -> float:
    """Length of the best path in the 3-leg family: horizontal to level s,
    vertical at level s, horizontal to the target.

    Candidate levels: a grid bracketing the analytic optimum, plus x1, y1 and
    the stationary point of the cost.  Always an upper bound for the true
    Grushin distance; tests record its ratio against quasidistance.
    """
    if grid < 1:
        raise ValueError("grid must be >= 1")
    al = float(a.value)
    x1, y1 = float(x.x1), float(y.x1)
    dx2 = abs(float(x.x2) - float(y.x2))
    if dx2 == 0:
        return abs(x1 - y1)

    def cost(s: float) -> float:
        if s == 0:
            return math.inf
        return abs(x1 - s) + abs(s - y1) + dx2 / abs(s) ** al

    cands = [x1, y1, -max(abs(x1), abs(y1))]
    if al > 0:
        s_star = (al * dx2 / 2.0) ** (1.0 / (1.0 + al))
        cands += [s_star, -s_star]
    w = dx2 ** (1.0 / (1.0 + al))
    lo, hi = -max(abs(x1), abs(y1), w) - w, max(abs(x1), abs(y1), w) + w
    cands += [lo + (hi - lo) * i / grid for i in range(grid + 1)]
    return min(cost(s) for s in cands)


def mean_value_ratio(al: float, u: float, v: float) -> float:
    """|u|u|^al - v|v|^al| / (|u|^al * |u - v|), for |u| >= |v|, u != v."""
    su = math.copysign(abs(u) ** (1.0 + al), u)
    sv = math.copysign(abs(v) ** (1.0 + al), v)
    return abs(su - sv) / (abs(u) ** al * abs(u - v))
