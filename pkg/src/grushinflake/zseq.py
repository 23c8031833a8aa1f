"""The alternating two-value sequence whose partial sums track k*alpha.

Each level of the embedding recursion picks a core thickness exponent z_k in
{0, p}; the greedy rule below keeps |z_1 + ... + z_k - k*alpha| <= p at every
k, which is what gives uniform control over the iterated construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactgeom import parse_rat, rat_str


@dataclass(frozen=True)
class ZSequence:
    a: int                 # number of high terms (value p) per period
    b: int                 # number of low terms (value 0) per period
    p: Fraction            # the high value
    alpha: Fraction        # mean value: (a+b)*alpha == a*p
    period: tuple          # the a+b period values

    @property
    def period_length(self) -> int:
        return self.a + self.b

    def z_at(self, k: int) -> Fraction:
        """k-th term (1-based), via periodic extension."""
        if k < 1:
            raise ValueError("k must be >= 1")
        return self.period[(k - 1) % self.period_length]

    def cumulative_sum(self, k: int) -> Fraction:
        """z_1 + ... + z_k in O(1) using the whole-period sum."""
        if k < 0:
            raise ValueError("k must be >= 0")
        full, rem = divmod(k, self.period_length)
        s = full * self.a * self.p
        s += sum(self.period[:rem], Fraction(0))
        return s

    def to_json(self) -> dict:
        return {
            "a": self.a,
            "b": self.b,
            "p": rat_str(self.p),
            "alpha": rat_str(self.alpha),
            "period": [rat_str(z) for z in self.period],
        }

    @staticmethod
    def from_json(d: dict) -> "ZSequence":
        return ZSequence(int(d["a"]), int(d["b"]), parse_rat(d["p"]),
                         parse_rat(d["alpha"]),
                         tuple(parse_rat(z) for z in d["period"]))


def _greedy(alpha, p, count, first_high: bool):
    """Greedy terms: z_{k+1} = 0 if the running sum already covers k*alpha,
    else p.  Ties go low (>= rule); the first term is forced high.

    Within one period of a reduced ratio a/(a+b) the running sum never ties
    k*alpha exactly, so the >= tie rule never actually fires there.
    """
    out = []
    s = Fraction(0)
    for k in range(count):
        if k == 0 and first_high:
            z = p
        else:
            z = Fraction(0) if s >= k * alpha else p
        out.append(z)
        s += z
    return out


def build_periodic(alpha: Fraction, p: Fraction) -> ZSequence:
    """Periodic sequence for rational alpha/p = a/(a+b), built greedily.

    Exact rational arithmetic throughout; the deviation bound
    |sum - k*alpha| <= p holds for every prefix (verified in tests).
    """
    alpha, p = Fraction(alpha), Fraction(p)
    if alpha < 0 or alpha > p:
        raise ValueError("need 0 <= alpha <= p")
    if p == 0:
        return ZSequence(0, 1, p, alpha, (Fraction(0),))
    ratio = alpha / p
    a, total = ratio.numerator, ratio.denominator
    b = total - a
    if b == 0:
        period = (p,) * a
    elif a == 0:
        period = (Fraction(0),) * b
    else:
        period = tuple(_greedy(alpha, p, a + b, first_high=True))
    seq = ZSequence(a, b, p, alpha, period)
    assert sum(1 for z in period if z == p) == a and sum(1 for z in period if z == 0) == b
    return seq


def build_real(alpha, p: Fraction, k_max: int) -> list:
    """Greedy prefix for arbitrary real alpha in [0, p], no periodic structure.

    The running sum is kept exact; alpha may be a float (Python compares it
    exactly against the rational sum) or a Fraction.  Exact ties send the next
    term high, which makes the prefix agree with the periodic extension of
    build_periodic whenever alpha is rational: a tie s == k*alpha happens
    exactly at period boundaries, where the periodic sequence restarts high.
    """
    p = Fraction(p)
    if alpha < 0 or alpha > p:
        raise ValueError("need 0 <= alpha <= p")
    out = []
    s = Fraction(0)
    for k in range(k_max):
        if alpha == 0:
            z = Fraction(0)
        elif k == 0:
            z = p
        else:
            z = Fraction(0) if s > k * alpha else p
        out.append(z)
        s += z
    return out
