"""Exact rational linear algebra and axis-aligned cube/flag/similarity primitives.

All coordinates are ``fractions.Fraction``; every predicate in this module is
exact (no tolerances).  The same arithmetic code also accepts floats, in which
case results degrade gracefully to floating point -- callers that need exact
answers simply pass Fractions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product
from typing import Iterable, Sequence

Rat = Fraction
Vec = tuple  # tuple of Fraction (or float)

ZERO = Fraction(0)
ONE = Fraction(1)
HALF = Fraction(1, 2)


def rat(p, q=1) -> Fraction:
    return Fraction(p, q)


def parse_rat(s: str) -> Fraction:
    """Parse the "p/q" wire format (plain integers also accepted)."""
    s = s.strip()
    if "/" in s:
        p, q = s.split("/")
        return Fraction(int(p), int(q))
    return Fraction(int(s))


def rat_str(x: Fraction) -> str:
    """Serialize a rational as "p/q" (q always present, always positive)."""
    f = Fraction(x)
    return f"{f.numerator}/{f.denominator}"


def vadd(a: Vec, b: Vec) -> Vec:
    return tuple(x + y for x, y in zip(a, b))


def vsub(a: Vec, b: Vec) -> Vec:
    return tuple(x - y for x, y in zip(a, b))


def vscale(c, a: Vec) -> Vec:
    return tuple(c * x for x in a)


def sup_norm(a: Vec):
    return max(abs(x) for x in a)


def axis_vec(dim: int, axis: int, value=ONE) -> Vec:
    v = [ZERO] * dim
    v[axis] = value
    return tuple(v)


@dataclass(frozen=True)
class Box:
    """Axis-aligned box; degenerate coordinates (lo == hi) represent faces."""

    intervals: tuple  # tuple of (lo, hi) pairs, lo <= hi

    def __post_init__(self):
        for lo, hi in self.intervals:
            if lo > hi:
                raise ValueError("box interval with lo > hi")

    @property
    def dim(self) -> int:
        return len(self.intervals)

    def nondegenerate_axes(self) -> list:
        return [i for i, (lo, hi) in enumerate(self.intervals) if lo != hi]

    def side_length(self):
        """Common edge length of the non-degenerate coordinates (0 for a point)."""
        lens = {hi - lo for lo, hi in self.intervals if lo != hi}
        if not lens:
            return ZERO
        if len(lens) != 1:
            raise ValueError("box is not a cube/cube-face")
        return lens.pop()

    def center(self) -> Vec:
        return tuple((lo + hi) / 2 for lo, hi in self.intervals)

    def contains(self, p: Vec) -> bool:
        return all(lo <= x <= hi for (lo, hi), x in zip(self.intervals, p))

    def contains_box(self, other: "Box") -> bool:
        return all(lo <= olo and ohi <= hi
                   for (lo, hi), (olo, ohi) in zip(self.intervals, other.intervals))

    def intersects(self, other: "Box") -> bool:
        """Closed-set intersection test (shared faces count as intersecting)."""
        return all(lo <= ohi and olo <= hi
                   for (lo, hi), (olo, ohi) in zip(self.intervals, other.intervals))

    def interiors_intersect(self, other: "Box") -> bool:
        return all(max(lo, olo) < min(hi, ohi)
                   for (lo, hi), (olo, ohi) in zip(self.intervals, other.intervals))

    def intersection(self, other: "Box"):
        if not self.intersects(other):
            return None
        return Box(tuple((max(lo, olo), min(hi, ohi))
                         for (lo, hi), (olo, ohi) in zip(self.intervals, other.intervals)))

    def translated(self, t: Vec) -> "Box":
        return Box(tuple((lo + dt, hi + dt) for (lo, hi), dt in zip(self.intervals, t)))

    def float_bounds(self):
        return tuple((float(lo), float(hi)) for lo, hi in self.intervals)


def cube(center: Vec, side) -> Box:
    """The cube C^d(x, r) of the construction: side r centered at x."""
    h = Fraction(side) / 2 if isinstance(side, (int, Fraction)) else side / 2
    return Box(tuple((c - h, c + h) for c in center))


def unit_cube(dim: int) -> Box:
    """The centered unit cube (side 1, centered at the origin)."""
    return cube((ZERO,) * dim, ONE)


@dataclass(frozen=True)
class Flag:
    """Nested face chain C^0 subset C^1 subset ... of a cube.

    ``faces[j]`` has exactly j non-degenerate coordinates.  The chain starts at
    the 0-face (vertex) in all uses here.
    """

    faces: tuple  # tuple of Box

    def __post_init__(self):
        prev = None
        for j, f in enumerate(self.faces):
            if len(f.nondegenerate_axes()) != j:
                raise ValueError(f"face {j} has wrong dimension")
            if prev is not None and not f.contains_box(prev):
                raise ValueError("flag faces are not nested")
            prev = f

    def __len__(self) -> int:
        return len(self.faces)

    def vertex(self) -> Vec:
        return tuple(lo for lo, _ in self.faces[0].intervals)

    def frame(self):
        """Return (vertex, [(axis, sign), ...]): the axis added at each level and
        the direction the face extends from the vertex along it."""
        v = self.vertex()
        out = []
        seen: set = set()
        for f in self.faces[1:]:
            ax = [a for a in f.nondegenerate_axes() if a not in seen]
            if len(ax) != 1:
                raise ValueError("flag face adds more than one axis")
            a = ax[0]
            seen.add(a)
            lo, hi = f.intervals[a]
            sign = 1 if v[a] == lo else -1
            out.append((a, sign))
        return v, out


def flag_from_frame(box: Box, vertex: Vec, axes: Sequence) -> Flag:
    """Build the flag of ``box`` starting at ``vertex`` and extending along the
    given (axis, sign) sequence."""
    faces = [Box(tuple((x, x) for x in vertex))]
    ivals = list(faces[0].intervals)
    for a, sign in axes:
        lo, hi = box.intervals[a]
        if sign > 0:
            ivals[a] = (vertex[a], hi)
        else:
            ivals[a] = (lo, vertex[a])
        faces.append(Box(tuple(ivals)))
    return Flag(tuple(faces))


@dataclass(frozen=True)
class Similarity:
    """scale * signed-permutation + translation.

    ``perm[j]`` is the image axis of source axis j and ``signs[j]`` its sign,
    i.e. e_j maps to signs[j] * e_perm[j].
    """

    scale: Fraction
    perm: tuple
    signs: tuple
    trans: Vec

    def __post_init__(self):
        if sorted(self.perm) != list(range(len(self.perm))):
            raise ValueError("linear part is not a permutation")
        if any(s not in (-1, 1) for s in self.signs):
            raise ValueError("signs must be +-1")
        if self.scale <= 0:
            raise ValueError("scale must be positive")

    @property
    def dim(self) -> int:
        return len(self.perm)

    @property
    def orientation(self) -> int:
        par = 1
        perm = list(self.perm)
        seen = [False] * len(perm)
        for i in range(len(perm)):
            if not seen[i]:
                j, ln = i, 0
                while not seen[j]:
                    seen[j] = True
                    j = perm[j]
                    ln += 1
                if ln % 2 == 0:
                    par = -par
        for s in self.signs:
            par *= s
        return par

    def apply(self, p: Vec) -> Vec:
        out = list(self.trans)
        for j, x in enumerate(p):
            out[self.perm[j]] = out[self.perm[j]] + self.scale * self.signs[j] * x
        return tuple(out)

    def apply_vector(self, v: Vec) -> Vec:
        """Apply the linear part only (no translation)."""
        out = [ZERO] * self.dim
        for j, x in enumerate(v):
            out[self.perm[j]] = self.scale * self.signs[j] * x
        return tuple(out)

    def apply_axis(self, axis: int, sign: int = 1):
        """Image of a signed axis under the linear part, as (axis, sign)."""
        return self.perm[axis], sign * self.signs[axis]

    def apply_box(self, b: Box) -> Box:
        lo = self.apply(tuple(l for l, _ in b.intervals))
        hi = self.apply(tuple(h for _, h in b.intervals))
        return Box(tuple((min(a, b_), max(a, b_)) for a, b_ in zip(lo, hi)))

    def apply_flag(self, f: Flag) -> Flag:
        return Flag(tuple(self.apply_box(face) for face in f.faces))

    def compose(self, other: "Similarity") -> "Similarity":
        """self after other: (self o other)(p) = self(other(p))."""
        perm = tuple(self.perm[other.perm[j]] for j in range(self.dim))
        signs = tuple(self.signs[other.perm[j]] * other.signs[j] for j in range(self.dim))
        return Similarity(self.scale * other.scale, perm, signs, self.apply(other.trans))

    def invert(self) -> "Similarity":
        inv_perm = [0] * self.dim
        inv_signs = [1] * self.dim
        for j in range(self.dim):
            inv_perm[self.perm[j]] = j
            inv_signs[self.perm[j]] = self.signs[j]
        inv = Similarity(1 / self.scale, tuple(inv_perm), tuple(inv_signs),
                         (ZERO,) * self.dim)
        return Similarity(inv.scale, inv.perm, inv.signs,
                          vscale(-1, inv.apply(self.trans)))

    @staticmethod
    def identity(dim: int) -> "Similarity":
        return Similarity(ONE, tuple(range(dim)), (1,) * dim, (ZERO,) * dim)


class FlagMatchError(ValueError):
    """No orientation-preserving signed-permutation solution (inconsistent flags)."""


def _axis_images_from_flags(src: Box, src_flag: Flag, dst: Box, dst_flag: Flag):
    """Pin axis images/signs from matched flag frames; returns partial maps."""
    sv, s_axes = src_flag.frame()
    dv, d_axes = dst_flag.frame()
    if len(s_axes) != len(d_axes):
        raise FlagMatchError("flag lengths differ")
    perm = {}
    signs = {}
    for (sa, ss), (da, ds) in zip(s_axes, d_axes):
        perm[sa] = da
        signs[sa] = ss * ds
    return sv, dv, perm, signs


def similarity_from_flags(src: Box, src_flag: Flag, dst: Box, dst_flag: Flag) -> Similarity:
    """The unique orientation-preserving similarity mapping (src, src_flag) onto
    (dst, dst_flag).

    Both boxes must be cubes of the same dimension.  The flags pin all but two
    axis images; the vertex correspondence pins every sign; orientation picks
    the surviving permutation.  Raises FlagMatchError when no solution exists.
    """
    d = src.dim
    if dst.dim != d:
        raise FlagMatchError("dimension mismatch")
    s_side, d_side = src.side_length(), dst.side_length()
    if s_side == 0 or d_side == 0:
        raise FlagMatchError("degenerate cube")
    scale = d_side / s_side
    if len(src_flag) == 0 and len(dst_flag) == 0:
        # Degenerate flag (N = 0 usage): nothing pins signs; uniqueness must
        # come from orientation alone (true only in dimension 1).
        sv = dv = None
        perm, signs = {}, {}
    else:
        sv, dv, perm, signs = _axis_images_from_flags(src, src_flag, dst, dst_flag)

    s_free = [a for a in range(d) if a not in perm]
    d_free = [a for a in range(d) if a not in perm.values()]
    s_cent, d_cent = src.center(), dst.center()

    solutions = []
    for assign in permutations(d_free):
        sign_choices: list = [dict(signs)]
        p = dict(perm)
        ok = True
        for sa, da in zip(s_free, assign):
            p[sa] = da
            if sv is None:
                sign_choices = [dict(g, **{sa: s}) for g in sign_choices for s in (1, -1)]
                continue
            # vertex correspondence forces the sign on every remaining axis
            su = sv[sa] - s_cent[sa]
            du = dv[da] - d_cent[da]
            if su == 0 or du == 0:
                ok = False  # flag vertex not a cube corner on this axis
                break
            for g in sign_choices:
                g[sa] = 1 if (su > 0) == (du > 0) else -1
        if not ok:
            continue
        for g in sign_choices:
            cand = Similarity(scale, tuple(p[j] for j in range(d)),
                              tuple(g[j] for j in range(d)), (ZERO,) * d)
            if cand.orientation != 1:
                continue
            anchor_s = sv if sv is not None else src.center()
            anchor_d = dv if dv is not None else dst.center()
            trans = vsub(anchor_d, cand.apply(anchor_s))
            cand = Similarity(scale, cand.perm, cand.signs, trans)
            if cand.apply_box(src) == dst and cand.apply_flag(src_flag).faces == dst_flag.faces:
                solutions.append(cand)
    if len(solutions) != 1:
        raise FlagMatchError(
            f"expected exactly one orientation-preserving solution, got {len(solutions)}")
    return solutions[0]


def orientation_preserving_cube_maps(dim: int):
    """All orientation-preserving signed permutations of R^dim (generator)."""
    for perm in permutations(range(dim)):
        for signs in product((1, -1), repeat=dim):
            s = Similarity(ONE, perm, signs, (ZERO,) * dim)
            if s.orientation == 1:
                yield s


@dataclass(frozen=True)
class CubicAnnulus:
    """Closure of R*cube minus r*cube (centered); parameters, not a point set."""

    inner: Fraction
    outer: Fraction
    dim: int

    def __post_init__(self):
        if not (0 < self.inner < self.outer):
            raise ValueError("need 0 < inner < outer")

    def contains(self, p: Vec) -> bool:
        s = sup_norm(p)
        return self.inner / 2 <= s <= self.outer / 2


def thicken(segments: Iterable, eps) -> list:
    """Cubic thickening of a labeled path, one box per straight leg.

    Each segment provides start/end (and corner for L-segments).  The
    thickening of a leg is the union of eps-cubes centered at leg points at
    distance >= eps/2 from the *segment's* endpoints; for an interior leg end
    (the corner) the box therefore extends eps/2 past it.  I-segments yield a
    single box, L-segments two boxes.
    """
    if eps <= 0:
        raise ValueError("eps must be positive")
    h = eps / 2
    boxes = []
    for seg in segments:
        legs = []
        if getattr(seg, "corner", None) is not None:
            legs.append((seg.start, seg.corner, False, True))
            legs.append((seg.corner, seg.end, True, False))
        else:
            legs.append((seg.start, seg.end, False, False))
        for a, b, past_a, past_b in legs:
            dim = len(a)
            axis = next(i for i in range(dim) if a[i] != b[i])
            lo_ax = min(a[axis], b[axis]) - (h if (past_a if a[axis] < b[axis] else past_b) else 0)
            hi_ax = max(a[axis], b[axis]) + (h if (past_b if a[axis] < b[axis] else past_a) else 0)
            ivals = []
            for i in range(dim):
                if i == axis:
                    ivals.append((lo_ax, hi_ax))
                else:
                    ivals.append((a[i] - h, a[i] + h))
            boxes.append(Box(tuple(ivals)))
    return boxes
