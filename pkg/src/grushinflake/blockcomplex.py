"""Blocks, cores, flag bookkeeping, and the child similarities of the recursion.

Flags are carried along a core path combinatorially: an I-segment leaves the
entrance flag unchanged, an L-segment turns it (the offset along the exit axis
re-enters as minus the offset along the entry axis).  Matching these marked
flags is the sole source of child orientations; no rotation tables are coded
by hand.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations, product

from .corepaths import (LabeledPath, PathSpec, Segment, _iroot, core_path,
                        segment_target)
from .exactgeom import (Box, CubicAnnulus, Flag, FlagMatchError, Similarity, Vec,
                        axis_vec, cube, flag_from_frame, similarity_from_flags,
                        unit_cube)

ZERO = Fraction(0)
HALF = Fraction(1, 2)


# ---------------------------------------------------------------------------
# flag frames on the standard cross-section cube


@dataclass(frozen=True)
class FlagFrame:
    """(N-1)-flag of the cross cube: a corner plus an ordered axis chain.

    vsigns has one +-1 entry per cross axis (None when N == 0, where the flag
    is empty); axes lists the N-1 cross axes added level by level.
    """

    vsigns: tuple | None
    axes: tuple

    def cross_dim(self) -> int:
        return 0 if self.vsigns is None else len(self.vsigns)


def standard_flag(N: int) -> FlagFrame:
    if N == 0:
        return FlagFrame(None, ())
    return FlagFrame((-1,) * (N + 1), tuple(range(N - 1)))


def all_flags(N: int) -> list:
    if N == 0:
        return [FlagFrame(None, ())]
    out = []
    for vs in product((-1, 1), repeat=N + 1):
        for axes in permutations(range(N + 1), N - 1):
            out.append(FlagFrame(vs, axes))
    return out


def frame_to_flag(frame: FlagFrame, side: Fraction) -> Flag:
    """Geometric flag of the centered cross cube of the given side."""
    dim = frame.cross_dim()
    box = cube((ZERO,) * dim, side)
    if dim == 0:
        return Flag(())
    h = side / 2
    vertex = tuple(s * h for s in frame.vsigns)
    return flag_from_frame(box, vertex, [(a, -frame.vsigns[a]) for a in frame.axes])


def rho_flag(frame: FlagFrame, N: int) -> Similarity:
    """The unique orientation-preserving cross rotation taking the standard
    flag onto ``frame``."""
    src = frame_to_flag(standard_flag(N), Fraction(1))
    dst = frame_to_flag(frame, Fraction(1))
    return similarity_from_flags(unit_cube(N + 1), src, unit_cube(N + 1), dst)


# ---------------------------------------------------------------------------
# ambient entrance flags, chained along a path


@dataclass(frozen=True)
class AmbientFlag:
    """Entrance flag of a block in ambient coordinates.

    entry is the face normal; vsigns has a slot per ambient axis (0 on the
    entry axis, None entirely when N == 0); axes are ambient axis indices.
    """

    entry: tuple
    vsigns: tuple | None
    axes: tuple


def ambient_from_frame(frame: FlagFrame, dim: int) -> AmbientFlag:
    """Top-of-block entrance flag (entry along the last axis, upward)."""
    entry = (dim - 1, 1)
    if frame.vsigns is None:
        return AmbientFlag(entry, None, ())
    vs = list(frame.vsigns) + [0]
    return AmbientFlag(entry, tuple(vs), frame.axes)


def transport_flag(amb: AmbientFlag, seg: Segment) -> AmbientFlag:
    """Push the entrance flag through one block to the next entrance."""
    if seg.label == "I":
        return amb
    da, ds = seg.entry
    ea, es = seg.exit
    if amb.vsigns is None:
        return AmbientFlag(seg.exit, None, ())
    vs = list(amb.vsigns)
    vs[da] = -ds * es * vs[ea]
    vs[ea] = 0
    axes = tuple(da if a == ea else a for a in amb.axes)
    return AmbientFlag(seg.exit, tuple(vs), axes)


# ---------------------------------------------------------------------------
# standard blocks


@dataclass(frozen=True)
class StandardBlock:
    kind: str            # "I", "L", or "Q" (the regular block)
    N: int
    M: int
    boxes: tuple         # solid region as a union of boxes
    entrance: Box
    exit: Box
    entry: tuple
    exit_dir: tuple

    @property
    def dim(self) -> int:
        return self.N + 2


def standard_block(kind: str, N: int, M: int) -> StandardBlock:
    dim = N + 2
    base = dim - 1
    if kind == "Q":
        b = Box(tuple([(-HALF, HALF)] * (dim - 1) + [(ZERO, Fraction(1))]))
        en = Box(tuple([(-HALF, HALF)] * (dim - 1) + [(ZERO, ZERO)]))
        ex = Box(tuple([(-HALF, HALF)] * (dim - 1) + [(Fraction(1), Fraction(1))]))
        return StandardBlock(kind, N, M, (b,), en, ex, (base, 1), (base, 1))
    eps = Fraction(M - 2, M)
    h = eps / 2
    if kind == "I":
        b = Box(tuple([(-h, h)] * (dim - 1) + [(ZERO, Fraction(1))]))
        en = Box(tuple([(-h, h)] * (dim - 1) + [(ZERO, ZERO)]))
        ex = Box(tuple([(-h, h)] * (dim - 1) + [(Fraction(1), Fraction(1))]))
        return StandardBlock(kind, N, M, (b,), en, ex, (base, 1), (base, 1))
    # L-block: vertical box plus elbow box, exit face at x_0 = 1/2
    vert = Box(tuple([(-h, h)] * (dim - 1) + [(ZERO, HALF + h)]))
    horiz = Box(tuple([(-h, HALF)] + [(-h, h)] * (dim - 2) + [(HALF - h, HALF + h)]))
    en = Box(tuple([(-h, h)] * (dim - 1) + [(ZERO, ZERO)]))
    ex = Box(tuple([(HALF, HALF)] + [(-h, h)] * (dim - 2) + [(HALF - h, HALF + h)]))
    return StandardBlock(kind, N, M, (vert, horiz), en, ex, (base, 1), (0, 1))


def tube_entrance_annulus(kind: str, N: int, M: int, z_exp) -> CubicAnnulus:
    """Parameters of the cubic annulus isometric to the tube's entrance."""
    if kind == "Q":
        return CubicAnnulus(_m_power(M, -1 - z_exp), Fraction(1), N + 1)
    return CubicAnnulus(Fraction(M - 2, M * M), Fraction(M - 2, M), N + 1)


def _m_power(M: int, e) -> Fraction:
    """M**e as an exact Fraction for rational e with M an adequate power."""
    e = Fraction(e)
    m0 = _iroot(M, e.denominator)
    if m0 is None:
        raise ValueError(f"M={M} is not an exact {e.denominator}-th power")
    return Fraction(m0) ** e.numerator


# ---------------------------------------------------------------------------
# child similarities


@dataclass(frozen=True)
class Child:
    index: int
    kind: str
    flag: FlagFrame
    sigma: Similarity
    seg: Segment
    entrance_flag: AmbientFlag


def child_similarity(seg: Segment, amb: AmbientFlag, N: int, M: int):
    """The similarity sending the standard block of seg's kind onto seg's block.

    Orientation-preserving, entry and (for L-children) exit directions match,
    and the marked entrance flag pulls back to the child's standard flag.
    For I-children the pullback is forced to be the standard flag.
    """
    dim = N + 2
    base = dim - 1
    da, ds = seg.entry
    perm = {base: da}
    signs = {base: ds}
    if seg.label == "L":
        ea, es = seg.exit
        perm[0] = ea
        signs[0] = es
        pinned_cross: list = [0]
    else:
        pinned_cross = []
        if amb.vsigns is not None:
            for a_std, a_amb in zip(range(N - 1), amb.axes):
                perm[a_std] = a_amb
                signs[a_std] = -amb.vsigns[a_amb]
                pinned_cross.append(a_std)

    free_std = [a for a in range(dim) if a not in perm]
    free_amb = [a for a in range(dim) if a not in perm.values()]
    if amb.vsigns is not None and seg.label == "I":
        # vertex pins the remaining signs; orientation picks the permutation
        sols = []
        for assign in permutations(free_amb):
            p = dict(perm)
            g = dict(signs)
            for a_std, a_amb in zip(free_std, assign):
                p[a_std] = a_amb
                g[a_std] = -amb.vsigns[a_amb]
            cand = Similarity(Fraction(1, M), tuple(p[j] for j in range(dim)),
                              tuple(g[j] for j in range(dim)), (ZERO,) * dim)
            if cand.orientation == 1:
                sols.append(cand)
        if len(sols) != 1:
            raise FlagMatchError(f"child {seg.label}: {len(sols)} flag-matched maps")
        lin = sols[0]
    else:
        # canonical completion: order-preserving, +1 signs, orientation fixed
        # on the last free axis (unique anyway when at most one axis is free)
        p = dict(perm)
        g = dict(signs)
        if seg.label == "L" and amb.vsigns is not None:
            for a_std, a_amb in zip(sorted(free_std), sorted(free_amb)):
                p[a_std] = a_amb
                g[a_std] = -amb.vsigns[a_amb]
        else:
            for a_std, a_amb in zip(sorted(free_std), sorted(free_amb)):
                p[a_std] = a_amb
                g[a_std] = 1
        cand = Similarity(Fraction(1, M), tuple(p[j] for j in range(dim)),
                          tuple(g[j] for j in range(dim)), (ZERO,) * dim)
        if cand.orientation != 1 and free_std:
            last = sorted(free_std)[-1]
            g[last] = -g[last]
            cand = Similarity(Fraction(1, M), tuple(p[j] for j in range(dim)),
                              tuple(g[j] for j in range(dim)), (ZERO,) * dim)
        if cand.orientation != 1 and not (N == 0 and seg.label == "L"):
            # in the plane an L-child of opposite chirality forces a
            # reflection; with N >= 1 a spare cross axis always absorbs it
            raise FlagMatchError("no orientation-preserving completion")
        lin = cand

    sigma = Similarity(lin.scale, lin.perm, lin.signs, seg.start)

    # pull the marked entrance flag back to the child's standard frame
    if amb.vsigns is None:
        child_frame = FlagFrame(None, ())
    else:
        inv_perm = {lin.perm[j]: j for j in range(dim)}
        vs = [0] * (N + 1)
        for a_amb in range(dim):
            s = amb.vsigns[a_amb]
            if s == 0:
                continue
            a_std = inv_perm[a_amb]
            vs[a_std] = lin.signs[a_std] * s
        child_frame = FlagFrame(tuple(vs), tuple(inv_perm[a] for a in amb.axes))
    if seg.label == "I" and child_frame != standard_flag(N):
        raise FlagMatchError("I-child entrance flag does not pull back to the standard flag")
    return sigma, child_frame


@dataclass
class ComplexConfig:
    """Shared geometry parameters plus caches for the block complex."""

    N: int
    n: int
    M: int
    _cores: dict = field(default_factory=dict)
    _paths: dict = field(default_factory=dict)

    def __post_init__(self):
        from .corepaths import check_M_basic
        check_M_basic(self.M)
        segment_target(self.N, self.n, self.M)  # raises if M is inadmissible

    @property
    def p(self) -> Fraction:
        return Fraction(self.N) + Fraction(self.n - 1, self.n)

    @property
    def dim(self) -> int:
        return self.N + 2

    def children_count(self, z) -> int:
        return self.M if z == 0 else segment_target(self.N, self.n, self.M)

    def scale_for(self, z) -> Fraction:
        """M^(-1-z), the regular-child scale."""
        return 1 / Fraction(self.M) / _m_power(self.M, Fraction(z))

    def core_segments(self, kind: str, z) -> list:
        key = (kind, z == 0)
        if key not in self._paths:
            if z == 0:
                spec = PathSpec(self.N, self.n, self.M, kind)
                path = LabeledPath(spec, 0, None, self.M)
            else:
                path = core_path(self.N, self.n, self.M, kind)
            self._paths[key] = (path, path.materialize())
        return self._paths[key][1]

    def core_children(self, kind: str, flag: FlagFrame, z) -> list:
        key = (kind, flag, z == 0)
        if key in self._cores:
            return self._cores[key]
        segs = self.core_segments(kind, z)
        amb = ambient_from_frame(flag, self.dim)
        children = []
        for m, seg in enumerate(segs, 1):
            sigma, child_frame = child_similarity(seg, amb, self.N, self.M)
            children.append(Child(m, seg.label, child_frame, sigma, seg, amb))
            amb = transport_flag(amb, seg)
        self._cores[key] = children
        return children

    def regular_children(self, z) -> list:
        """The stacked similarities onto the regular core's sub-blocks."""
        scale = self.scale_for(z)
        count = self.children_count(z)
        dim = self.dim
        out = []
        for m in range(1, count + 1):
            out.append(Similarity(scale, tuple(range(dim)), (1,) * dim,
                                  axis_vec(dim, dim - 1, (m - 1) * scale)))
        return out


def core_children(cfg: ComplexConfig, kind: str, flag: FlagFrame, z) -> list:
    return cfg.core_children(kind, flag, z)


def regular_children(cfg: ComplexConfig, z) -> list:
    return cfg.regular_children(z)


# ---------------------------------------------------------------------------
# classification in the regular block


def classify(point: Vec, z, cfg: ComplexConfig) -> tuple:
    """Locate a point of the regular block relative to the z-core.

    Returns ("tube",), ("child", m), ("axis",), or ("outside",).  The shared
    core surface counts as tube; shared child faces go to the lower index.
    """
    dim = cfg.dim
    cross = [abs(c) for c in point[:dim - 1]]
    if any(c > HALF for c in cross) or point[dim - 1] < 0 or point[dim - 1] > 1:
        return ("outside",)
    width = cfg.scale_for(z)
    mx = max(cross)
    if mx >= width / 2:
        return ("tube",)
    if mx == 0:
        return ("axis",)
    count = cfg.children_count(z)
    t = point[dim - 1] / width
    m = int(t) + 1
    if t == int(t) and t >= 1:
        m = int(t)  # shared face: lower index
    return ("child", min(m, count))


# ---------------------------------------------------------------------------
# flag edges (the marked 1-skeleton used by tests)


def flag_edge_vertex_fiber(kind: str, frame: FlagFrame, N: int, M: int) -> list:
    """Polyline of the flag-edge fiber through the flag vertex (exact points).

    For I/regular blocks this is the vertical edge over the scaled vertex; for
    L-blocks the two-leg fiber of the side fibration.  Returns [] when N == 0
    (empty flag).
    """
    if frame.vsigns is None:
        return []
    dim = N + 2
    eps = Fraction(M - 2, M) if kind != "Q" else Fraction(1)
    h = eps / 2
    v = tuple(s * h for s in frame.vsigns)
    start = v + (ZERO,)
    if kind in ("I", "Q"):
        return [start, v + (Fraction(1),)]
    turn = HALF - v[0]
    mid = v + (turn,)
    end = (HALF,) + v[1:] + (turn,)
    return [start, mid, end]
