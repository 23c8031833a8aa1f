"""Generation and validation of the space-filling core paths.

A core path is a simple polygonal chain of M^(N+2-1/n) axis-parallel segments
of length 1/M inside the standard I- or L-block.  It is built from the straight
base path by N rounds of "swath" replacement (each marked pair of consecutive
I-segments becomes a staple-shaped detour into a fresh coordinate direction)
followed by a final round of variable-height staples whose heights k_m solve
the segment-count equation.

Paths support two access modes: full materialization (desk scale) and lazy
index->segment arithmetic that never builds the path (the default geometry
M = 9^(n(N+2)) is far beyond materialization).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Optional

from .exactgeom import Box, Vec, axis_vec, parse_rat, rat_str, thicken, vadd, vscale

ZERO = Fraction(0)


@dataclass(frozen=True)
class Segment:
    """One path segment: straight (I) or a right-angle elbow of half legs (L)."""

    start: Vec
    end: Vec
    label: str                    # "I" or "L"
    entry: tuple                  # (axis, sign) direction entering the segment
    exit: tuple                   # (axis, sign) direction leaving it
    corner: Optional[Vec] = None  # elbow point for L-segments

    def direction_points(self):
        pts = [self.start]
        if self.corner is not None:
            pts.append(self.corner)
        pts.append(self.end)
        return pts


@dataclass(frozen=True)
class PathSpec:
    N: int
    n: int
    M: int
    kind: str  # "I" or "L"


class AdmissibilityError(ValueError):
    """M fails an admissibility constraint; message names the constraint."""


class CapacityError(AdmissibilityError):
    """Swath-length equation infeasible under the per-term cap."""


def _iroot(v: int, k: int):
    if v < 0:
        return None
    r = round(v ** (1.0 / k)) if v > 0 else 0
    for c in (r - 1, r, r + 1, r + 2):
        if c >= 0 and c ** k == v:
            return c
    return None


def check_M_basic(M: int):
    if M < 9:
        raise AdmissibilityError(f"M={M}: need M >= 9")
    if M % 4 != 1:
        raise AdmissibilityError(f"M={M}: need M = 1 mod 4")


def default_M(N: int, n: int) -> int:
    return 9 ** (n * (N + 2))


def aux_counts(N: int, M: int) -> tuple:
    """(total segments, marked pairs) of the level-N auxiliary path.

    Base (M, (M-5)/2); each round adds (M-3) segments per pair and multiplies
    the pair count by (M-5)/2.  The recurrence is authoritative (the matching
    closed form requires denominator 2^N, not 2^(N+1)).
    """
    if N < 0:
        raise ValueError("N must be >= 0")
    check_M_basic(M)
    total, pairs = M, (M - 5) // 2
    for _ in range(N):
        total, pairs = total + pairs * (M - 3), pairs * ((M - 5) // 2)
    return total, pairs


def segment_target(N: int, n: int, M: int) -> int:
    """M^(N+2-1/n) as an exact integer; requires M to be an exact n-th power."""
    m0 = _iroot(M, n)
    if m0 is None:
        raise AdmissibilityError(f"M={M}: need M to be an exact {n}-th power")
    return m0 ** (n * (N + 2) - 1)


@dataclass(frozen=True)
class SwathAssignment:
    """Canonical mirror-symmetric staple heights for the final round."""

    count: int              # number of marked pairs M'
    half_sum: int           # sum of k_m over one mirror half
    base: int               # q in the balanced split
    extra: int              # first `extra` mirror ranks get base+1
    cap: int

    def k_at(self, j: int) -> int:
        """k for pair j (1-based, path order); mirror rank is min(j, count+1-j)."""
        r = min(j, self.count + 1 - j)
        return self.base + (1 if r <= self.extra else 0)

    def prefix(self, j: int) -> int:
        """Sum of k over pairs 1..j, closed form."""
        half = self.count // 2

        def s1(m: int) -> int:
            return (self.base + 1) * min(m, self.extra) + self.base * max(0, m - self.extra)

        if j <= half:
            return s1(j)
        return 2 * s1(half) - s1(self.count - j)

    def values(self) -> list:
        return [self.k_at(j) for j in range(1, self.count + 1)]


def solve_swath_lengths(N: int, n: int, M: int) -> SwathAssignment:
    """Solve the final-round segment-count equation for the staple heights.

    Rejections name the violated constraint: basic shape of M, integrality of
    the target, parity of the required sum, or capacity under the per-term cap
    (M-3)/2.  The assignment is balanced, mirror-symmetric, deterministic,
    with larger values at lower mirror ranks.
    """
    check_M_basic(M)
    total, pairs = aux_counts(N, M)
    target = segment_target(N, n, M)
    surplus = target - total
    if surplus < 0:
        raise AdmissibilityError(
            f"M={M}: auxiliary path already longer than target ({total} > {target})")
    if surplus % 2 != 0:
        raise AdmissibilityError(f"M={M}: target minus auxiliary count is odd")
    ksum = surplus // 2
    if ksum % 2 != 0:
        raise AdmissibilityError(
            f"M={M}: swath-length sum {ksum} is odd, mirror symmetry impossible")
    cap = (M - 3) // 2
    if ksum > cap * pairs:
        raise CapacityError(
            f"M={M}: swath-length sum {ksum} exceeds capacity {cap * pairs} "
            f"({pairs} pairs, per-term cap {cap})")
    half = pairs // 2
    base, extra = divmod(ksum // 2, half)
    return SwathAssignment(pairs, ksum // 2, base, extra, cap)


# ---------------------------------------------------------------------------
# geometry of base paths and staples


def _make_I(start: Vec, axis: int, sign: int, M: int) -> Segment:
    end = vadd(start, axis_vec(len(start), axis, Fraction(sign, M)))
    return Segment(start, end, "I", (axis, sign), (axis, sign))


def _make_L(start: Vec, entry: tuple, exit_: tuple, M: int) -> Segment:
    dim = len(start)
    corner = vadd(start, axis_vec(dim, entry[0], Fraction(entry[1], 2 * M)))
    end = vadd(corner, axis_vec(dim, exit_[0], Fraction(exit_[1], 2 * M)))
    return Segment(start, end, "L", entry, exit_, corner)


def staple_segments(A: Vec, d: tuple, e: tuple, n_side: int, M: int) -> list:
    """The out-and-back staple replacing two I-segments from A along d.

    Layout: L-turn into e, n_side I-segments out, L-turn back to d, L-turn
    into -e, n_side I-segments back, L-turn to d.  Displacement is 2/M along
    d; the excursion reaches (n_side+1)/M along e.
    """
    dim = len(A)
    da, ds = d
    ea, es = e
    anti = (ea, -es)
    u = Fraction(1, M)

    segs = [_make_L(A, d, e, M)]
    for _ in range(n_side):
        segs.append(_make_I(segs[-1].end, ea, es, M))
    segs.append(_make_L(segs[-1].end, e, d, M))
    segs.append(_make_L(segs[-1].end, d, anti, M))
    for _ in range(n_side):
        segs.append(_make_I(segs[-1].end, ea, -es, M))
    segs.append(_make_L(segs[-1].end, anti, d, M))

    want_end = vadd(A, axis_vec(dim, da, 2 * u * ds))
    assert segs[-1].end == want_end, "staple does not close up"
    return segs


def _base_segment(spec: PathSpec, i: int) -> Segment:
    """Segment i (1-based) of the subdivided base path."""
    N, M = spec.N, spec.M
    dim = N + 2
    base_axis = dim - 1
    u = Fraction(1, M)
    if spec.kind == "I":
        start = vscale((i - 1) * u, axis_vec(dim, base_axis))
        return _make_I(start, base_axis, 1, M)
    mid = (M + 1) // 2
    if i < mid:
        start = vscale((i - 1) * u, axis_vec(dim, base_axis))
        return _make_I(start, base_axis, 1, M)
    if i == mid:
        start = vscale((i - 1) * u, axis_vec(dim, base_axis))
        return _make_L(start, (base_axis, 1), (0, 1), M)
    # horizontal leg: arc position (i-1)/M maps to x_0 = (i-1)/M - 1/2
    x0 = (i - 1) * u - Fraction(1, 2)
    start = vadd(axis_vec(dim, 0, x0), axis_vec(dim, base_axis, Fraction(1, 2)))
    return _make_I(start, 0, 1, M)


def _base_pair_pos(M: int, j: int) -> int:
    """First-segment index of base marked pair j (1-based)."""
    c = (M - 5) // 4
    if j <= c:
        return 2 * j
    return (M + 5) // 2 + 2 * (j - c - 1)


def _excursion(spec: PathSpec, level: int, first: Segment) -> tuple:
    """Signed excursion axis for the staple replacing a pair at this level.

    Aux level L uses fresh axis L-1 (0-based) with alternating sign; the final
    level uses axis N.  The L-kind base path needs leg-dependent directions at
    the levels that act on the original legs, mirror images of each other
    under the path's diagonal symmetry.
    """
    N = spec.N
    d_axis, d_sign = first.entry
    base_axis = N + 1
    if spec.kind == "L" and (level == 1 if N >= 1 else level == N + 1):
        # staples on the original legs must point away from the elbow
        # quadrant, mirror images under the diagonal symmetry
        if d_axis == base_axis:
            return (0, -1)
        return (base_axis, 1)
    if level <= N:
        return (level - 1, -1 if level % 2 == 1 else 1)
    return (N, 1)


# ---------------------------------------------------------------------------
# the lazily indexable path


class LabeledPath:
    """A core or auxiliary path with exact lazy index->segment access.

    ``levels`` is the number of expansion rounds: N for auxiliary paths,
    N+1 for core paths (the last round uses the swath-length assignment).
    """

    def __init__(self, spec: PathSpec, rounds: int,
                 assignment: Optional[SwathAssignment], count: int):
        self.spec = spec
        self.rounds = rounds
        self.assignment = assignment
        self.count = count
        self._cache: dict = {}

    # -- structural arithmetic (all 1-based indices) --

    def _pairs_at(self, level: int) -> int:
        s = (self.spec.M - 5) // 2
        return s ** (level + 1)

    def _aux_size(self) -> int:
        return self.spec.M - 1

    def _pair_pos(self, level: int, j: int) -> int:
        """Position in the level-`level` path of pair j's first segment."""
        M = self.spec.M
        if level == 0:
            return _base_pair_pos(M, j)
        s = (M - 5) // 2
        n_side = (M - 5) // 2
        t, u = divmod(j - 1, s)
        t, u = t + 1, u + 1
        if u <= s // 2:
            off = 2 * u
        else:
            off = (n_side + 4) + 2 * (u - s // 2 - 1)
        return self._staple_start(level, t) + off - 1

    def _staple_start(self, level: int, t: int) -> int:
        """Position in the level-`level` path where staple t begins."""
        return self._pair_pos(level - 1, t) + (t - 1) * (self._aux_size() - 2)

    def _inserted_before(self, level: int, j: int) -> int:
        """Extra segments inserted by staples 1..j of round `level`."""
        if level <= self.spec.N:
            return j * (self._aux_size() - 2)
        return 2 * self.assignment.prefix(j)

    def _estart(self, level: int, j: int) -> int:
        """Expanded position of pair j's staple in the round-`level` output."""
        return self._pair_pos(level - 1, j) + self._inserted_before(level, j - 1)

    def _size(self, level: int, j: int) -> int:
        if level <= self.spec.N:
            return self._aux_size()
        return 2 * self.assignment.k_at(j) + 2

    def _count_at(self, level: int) -> int:
        M = self.spec.M
        c = M
        for lv in range(1, level + 1):
            if lv <= self.spec.N:
                c += self._pairs_at(lv - 1) * (self._aux_size() - 2)
            else:
                c += 2 * self.assignment.half_sum * 2
        return c

    def segment_at(self, i: int) -> Segment:
        if not (1 <= i <= self.count):
            raise IndexError(f"segment index {i} out of range 1..{self.count}")
        return self._segment(self.rounds, i)

    def _segment(self, level: int, i: int) -> Segment:
        if level == 0:
            return _base_segment(self.spec, i)
        npairs = self._pairs_at(level - 1)
        lo, hi = 0, npairs
        while lo < hi:  # largest j with estart(j) <= i
            mid = (lo + hi + 1) // 2
            if self._estart(level, mid) <= i:
                lo = mid
            else:
                hi = mid - 1
        j = lo
        if j >= 1:
            es = self._estart(level, j)
            size = self._size(level, j)
            if i < es + size:
                if size > 2:
                    first = self._segment(level - 1, self._pair_pos(level - 1, j))
                    e = _excursion(self.spec, level, first)
                    n_side = (size - 4) // 2
                    segs = staple_segments(first.start, first.entry, e, n_side,
                                           self.spec.M)
                    return segs[i - es]
                # k = 0: the pair passes through unchanged
            i = i - self._inserted_before(level, j)
        return self._segment(level - 1, i)

    def segments(self) -> Iterator[Segment]:
        """Materializing iterator (round by round; desk scale only)."""
        spec, M = self.spec, self.spec.M
        segs = [_base_segment(spec, i) for i in range(1, M + 1)]
        for level in range(1, self.rounds + 1):
            npairs = self._pairs_at(level - 1)
            positions = [self._pair_pos(level - 1, j) for j in range(1, npairs + 1)]
            out: list = []
            pi = 0
            i = 1
            while i <= len(segs):
                if pi < npairs and i == positions[pi]:
                    j = pi + 1
                    size = self._size(level, j)
                    if size > 2:
                        first = segs[i - 1]
                        e = _excursion(spec, level, first)
                        out.extend(staple_segments(first.start, first.entry, e,
                                                   (size - 4) // 2, M))
                    else:
                        out.extend(segs[i - 1:i + 1])
                    pi += 1
                    i += 2
                else:
                    out.append(segs[i - 1])
                    i += 1
            segs = out
        yield from segs

    def materialize(self) -> list:
        return list(self.segments())

    def symmetry(self) -> dict:
        """Descriptor of the path's reflection symmetry plane."""
        base_axis = self.spec.N + 1
        if self.spec.kind == "I":
            return {"type": "reflection", "axis": base_axis, "value": "1/2"}
        return {"type": "diagonal-reflection", "axes": [0, base_axis], "sum": "1/2"}

    def reflect_point(self, p: Vec) -> Vec:
        base = self.spec.N + 1
        q = list(p)
        if self.spec.kind == "I":
            q[base] = 1 - q[base]
        else:
            q0, qb = q[0], q[base]
            q[0] = Fraction(1, 2) - qb
            q[base] = Fraction(1, 2) - q0
        return tuple(q)


def aux_path(N: int, M: int, kind: str) -> LabeledPath:
    """The level-N auxiliary path (no final round)."""
    total, _ = aux_counts(N, M)
    spec = PathSpec(N, 0, M, kind)
    return LabeledPath(spec, N, None, total)


def core_path(N: int, n: int, M: int, kind: str) -> LabeledPath:
    """The full core path with M^(N+2-1/n) segments."""
    assignment = solve_swath_lengths(N, n, M)
    spec = PathSpec(N, n, M, kind)
    return LabeledPath(spec, N + 1, assignment, segment_target(N, n, M))


def segment_at(path: LabeledPath, index: int) -> Segment:
    return path.segment_at(index)


# ---------------------------------------------------------------------------
# blocks and validation


def block_boxes(seg: Segment, eps: Fraction) -> list:
    """The thickened block of one segment (1 box for I, 2 for L)."""
    return thicken([seg], eps)


def cross_face(seg: Segment, at_end: bool, eps: Fraction) -> Box:
    """Entrance (at_end=False) or exit (at_end=True) face of the block."""
    p = seg.end if at_end else seg.start
    axis = (seg.exit if at_end else seg.entry)[0]
    h = eps / 2
    return Box(tuple((p[i], p[i]) if i == axis else (p[i] - h, p[i] + h)
                     for i in range(len(p))))


@dataclass
class ValidationReport:
    checks_run: int = 0
    violations: list = field(default_factory=list)
    disjoint_pairs_tested: int = 0

    @property
    def ok(self) -> bool:
        return not self.violations

    def note(self, condition: bool, message: str):
        self.checks_run += 1
        if not condition:
            self.violations.append(message)


def standard_block_boxes(N: int, M: int, kind: str) -> list:
    """The containing standard block: eps = (M-2)/M thickening of the base path."""
    dim = N + 2
    eps = Fraction(M - 2, M)
    base_axis = dim - 1
    if kind == "I":
        seg = Segment(tuple([ZERO] * dim),
                      axis_vec(dim, base_axis, Fraction(1)), "I",
                      (base_axis, 1), (base_axis, 1))
        return thicken([seg], eps)
    corner = axis_vec(dim, base_axis, Fraction(1, 2))
    end = vadd(corner, axis_vec(dim, 0, Fraction(1, 2)))
    seg = Segment(tuple([ZERO] * dim), end, "L", (base_axis, 1), (0, 1), corner)
    return thicken([seg], eps)


def _inflate(b: Box, delta, clips=()) -> Box:
    """Grow b by delta on every side, clipped back at allowed boundary planes.

    clips holds (axis, value, 'lo'|'hi') triples marking faces of the ambient
    region the box is allowed to touch.
    """
    ivals = []
    for i, (lo, hi) in enumerate(b.intervals):
        lo2, hi2 = lo - delta, hi + delta
        for ax, val, side in clips:
            if ax == i:
                if side == "lo":
                    lo2 = max(lo2, val)
                else:
                    hi2 = min(hi2, val)
        ivals.append((lo2, hi2))
    return Box(tuple(ivals))


def _covered(w: Box, cover: list) -> bool:
    """Exact: is w contained in the closed union of the cover boxes?"""
    return not list(_subtract(w, cover))


def _subtract(b: Box, cover: list):
    """Yield sub-boxes of b not covered by the union (empty if covered)."""
    pieces = [b]
    for c in cover:
        nxt = []
        for p in pieces:
            if not p.intersects(c):
                nxt.append(p)
                continue
            ivals = list(p.intervals)
            rem = p
            for axis in range(p.dim):
                plo, phi = rem.intervals[axis]
                clo, chi = c.intervals[axis]
                if plo < clo:
                    left = list(rem.intervals)
                    left[axis] = (plo, clo)
                    nxt.append(Box(tuple(left)))
                    mid = list(rem.intervals)
                    mid[axis] = (clo, phi)
                    rem = Box(tuple(mid))
                if chi < phi:
                    right = list(rem.intervals)
                    right[axis] = (chi, phi)
                    nxt.append(Box(tuple(right)))
                    mid = list(rem.intervals)
                    mid[axis] = (rem.intervals[axis][0], chi)
                    rem = Box(tuple(mid))
        pieces = [q for q in nxt if all(lo < hi for lo, hi in q.intervals)]
        if not pieces:
            return
    yield from pieces


def validate_core_path(path: LabeledPath, expected_count: Optional[int] = None,
                       segments: Optional[list] = None) -> ValidationReport:
    """Exact validation of the chain/disjointness/boundary/symmetry properties.

    Pass ``segments`` to validate an explicit (possibly corrupted) list.
    """
    rep = ValidationReport()
    spec = path.spec
    M = spec.M
    u = Fraction(1, M)
    eps = Fraction(M - 2, M * M)
    segs = segments if segments is not None else path.materialize()
    n = len(segs)

    if expected_count is None and path.assignment is not None:
        expected_count = segment_target(spec.N, spec.n, M)
    if expected_count is not None:
        rep.note(n == expected_count, f"segment count {n} != expected {expected_count}")

    # segment geometry
    for i, s in enumerate(segs, 1):
        if s.label == "I":
            d = vsub_abs(s.end, s.start)
            rep.note(sum(1 for x in d if x != 0) == 1 and max(d) == u,
                     f"segment {i}: I-segment is not a straight 1/M step")
        else:
            d1 = vsub_abs(s.corner, s.start)
            d2 = vsub_abs(s.end, s.corner)
            ok = (sum(1 for x in d1 if x != 0) == 1 and max(d1) == u / 2
                  and sum(1 for x in d2 if x != 0) == 1 and max(d2) == u / 2
                  and s.entry[0] != s.exit[0])
            rep.note(ok, f"segment {i}: L-segment legs malformed")

    # chain continuity
    for i in range(n - 1):
        rep.note(segs[i].end == segs[i + 1].start,
                 f"adjacency violation at segment {i + 1}: chain break")
        rep.note(segs[i].exit == segs[i + 1].entry,
                 f"adjacency violation at segment {i + 1}: direction mismatch")

    # endpoint/kind properties
    dim = spec.N + 2
    origin = tuple([ZERO] * dim)
    base_axis = dim - 1
    rep.note(segs[0].start == origin, "path does not start at the origin")
    if spec.kind == "I":
        rep.note(segs[-1].end == axis_vec(dim, base_axis, Fraction(1)),
                 "I-path does not end at the block exit")
    else:
        want = vadd(axis_vec(dim, 0, Fraction(1, 2)),
                    axis_vec(dim, base_axis, Fraction(1, 2)))
        rep.note(segs[-1].end == want, "L-path does not end at the block exit")
    mid = segs[(n - 1) // 2]
    rep.note(segs[0].label == "I", "first segment is not an I-segment")
    rep.note(segs[-1].label == "I", "last segment is not an I-segment")
    if spec.kind == "I":
        rep.note(mid.label == "I", "middle segment of J_I is not an I-segment")
    else:
        rep.note(mid.label == "L", "middle segment of J_L is not an L-segment")

    # blocks: adjacency faces and pairwise disjointness (exact)
    blocks = [block_boxes(s, eps) for s in segs]
    for i in range(n - 1):
        f_exit = cross_face(segs[i], True, eps)
        f_en = cross_face(segs[i + 1], False, eps)
        rep.note(f_exit == f_en,
                 f"adjacency violation at segment {i + 1}: shared face mismatch")
        inter = _pairwise_intersections(blocks[i], blocks[i + 1])
        rep.note(all(f_exit.contains_box(w) for w in inter) and inter,
                 f"adjacency violation at segment {i + 1}: blocks overlap beyond face")

    bounds = [_block_bounds(b) for b in blocks]
    tested = 0
    for i in range(n):
        for j in range(i + 2, n):
            tested += 1
            if _bounds_disjoint(bounds[i], bounds[j]):
                continue
            if _pairwise_intersections(blocks[i], blocks[j]):
                rep.note(False, f"disjointness violation between blocks {i + 1},{j + 1}")
    rep.disjoint_pairs_tested = tested
    rep.checks_run += 1

    # containment in the standard block; only end blocks touch its boundary,
    # and only in their entrance/exit faces.  Inflation by a delta below the
    # smallest geometric margin (1/M^2) turns "strictly inside" into an exact
    # closed-containment test.
    outer = standard_block_boxes(spec.N, M, spec.kind)
    delta = Fraction(1, 2 * M ** 3)
    for i, bxs in enumerate(blocks):
        inside = all(_covered(w, outer) for w in bxs)
        rep.note(inside, f"block {i + 1} leaves the standard block")
        if not inside:
            continue
        clips = []
        if i == 0:
            ax, sg = segs[0].entry
            clips.append((ax, segs[0].start[ax], "lo" if sg > 0 else "hi"))
        if i == n - 1:
            ax, sg = segs[-1].exit
            clips.append((ax, segs[-1].end[ax], "hi" if sg > 0 else "lo"))
        if 0 < i < n - 1:
            interior = all(_covered(_inflate(w, delta), outer) for w in bxs)
            rep.note(interior, f"interior block {i + 1} touches the outer boundary")
        else:
            ok = all(_covered(_inflate(w, delta, clips), outer) for w in bxs)
            rep.note(ok, f"end block {i + 1} touches the boundary off its end face")

    # reflection symmetry: segment multiset invariant
    def canon(s: Segment):
        pts = tuple(sorted((s.start, s.end)))
        return (s.label, pts, s.corner)

    reflected = []
    for s in segs:
        st, en = path.reflect_point(s.start), path.reflect_point(s.end)
        co = path.reflect_point(s.corner) if s.corner is not None else None
        reflected.append((s.label, tuple(sorted((st, en))), co))
    rep.note(sorted(canon(s) for s in segs) == sorted(reflected),
             "path is not symmetric under its reflection")
    return rep


def vsub_abs(a: Vec, b: Vec) -> tuple:
    return tuple(abs(x - y) for x, y in zip(a, b))


def _pairwise_intersections(bxs1: list, bxs2: list) -> list:
    out = []
    for b1 in bxs1:
        for b2 in bxs2:
            w = b1.intersection(b2)
            if w is not None:
                out.append(w)
    return out


def _block_bounds(bxs: list):
    dim = bxs[0].dim
    lo = [min(float(b.intervals[i][0]) for b in bxs) for i in range(dim)]
    hi = [max(float(b.intervals[i][1]) for b in bxs) for i in range(dim)]
    return lo, hi


def _bounds_disjoint(a, b) -> bool:
    (alo, ahi), (blo, bhi) = a, b
    return any(ahi[i] < blo[i] or bhi[i] < alo[i] for i in range(len(alo)))


# ---------------------------------------------------------------------------
# JSON wire format


def path_to_json(path: LabeledPath, include_segments: bool = True) -> dict:
    d = {
        "spec": {"N": path.spec.N, "n": path.spec.n, "M": path.spec.M,
                 "kind": path.spec.kind},
        "count": path.count,
        "symmetry": path.symmetry(),
    }
    if include_segments:
        d["segments"] = [
            {
                "start": [rat_str(x) for x in s.start],
                "end": [rat_str(x) for x in s.end],
                "label": s.label,
                "entry": list(s.entry),
                "exit": list(s.exit),
                **({"corner": [rat_str(x) for x in s.corner]} if s.corner else {}),
            }
            for s in path.segments()
        ]
    return d


def segments_from_json(d: dict) -> list:
    segs = []
    for e in d.get("segments", []):
        segs.append(Segment(
            tuple(parse_rat(x) for x in e["start"]),
            tuple(parse_rat(x) for x in e["end"]),
            e["label"],
            tuple(e["entry"]),
            tuple(e["exit"]),
            tuple(parse_rat(x) for x in e["corner"]) if "corner" in e else None,
        ))
    return segs


def path_from_json(d: dict) -> tuple:
    s = d["spec"]
    if s["n"]:
        path = core_path(s["N"], s["n"], s["M"], s["kind"])
    else:
        path = aux_path(s["N"], s["M"], s["kind"])
    return path, segments_from_json(d)
