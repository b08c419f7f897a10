"""Exact-rational model of the punctured disc and its half Dehn twists.

The disc has 2n punctures on the real axis at -n..-1, 1..n (positions are
numbered 1..2n left to right).  A half twist swapping two adjacent punctures
is realized as a piecewise-affine homeomorphism supported on a square box
around the pair: an inner square maps by point reflection through the centre,
and nested square rings between the inner square and the box boundary are
shifted along their perimeters by a fraction that decreases linearly to zero.
Square rings (not circles) keep every coordinate rational, so the whole
pipeline runs in exact arithmetic.

All maps are checked to be orientation-positive on every affine piece and to
permute the triangulation bijectively; the ring count is bumped automatically
if a configuration fails those assertions.
"""

from __future__ import annotations

import dataclasses
import functools
from fractions import Fraction
from typing import Iterable, Sequence

from .words import BRAID, TYPE_B, GroupWord, WordError, psi

Point = tuple[Fraction, Fraction]

UP = 1
DOWN = -1


class GeometryError(RuntimeError):
    """Degenerate geometry that the kernel refuses to resolve silently."""


def frac(x) -> Fraction:
    return Fraction(x)


def _cross(o: Point, a: Point, b: Point) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


@dataclasses.dataclass(frozen=True)
class DiscModel:
    """The 2n-punctured disc.  ``mode`` chooses the wall pattern: type-B has
    upward walls at the negative punctures and downward walls at the positive
    ones; braid mode points every wall upward."""

    n: int
    mode: str = TYPE_B

    def __post_init__(self):
        if self.n < 1:
            raise GeometryError("need n >= 1")
        if self.mode not in (TYPE_B, BRAID):
            raise GeometryError(f"unknown mode {self.mode!r}")

    @property
    def num_punctures(self) -> int:
        return 2 * self.n

    @property
    def boundary_radius(self) -> Fraction:
        return Fraction(self.n + 1)

    def puncture_x(self, pos: int) -> Fraction:
        """x-coordinate of the puncture at position ``pos`` (1..2n)."""
        if not 1 <= pos <= 2 * self.n:
            raise GeometryError(f"position {pos} out of range")
        if pos <= self.n:
            return Fraction(pos - self.n - 1)
        return Fraction(pos - self.n)

    def puncture_point(self, pos: int) -> Point:
        return (self.puncture_x(pos), Fraction(0))

    def position_of_x(self, x: Fraction) -> int | None:
        for pos in range(1, 2 * self.n + 1):
            if self.puncture_x(pos) == x:
                return pos
        return None

    def wall_dir(self, pos: int) -> int:
        """UP or DOWN: the direction the wall leaves its puncture."""
        if self.mode == BRAID:
            return UP
        return UP if pos <= self.n else DOWN

    def wall_name(self, pos: int) -> str:
        """Conventional wall label: W_i sits at p_i, W_{n+i} at q_i."""
        if self.mode == BRAID:
            return f"W{pos}"
        return f"W{self.n + 1 - pos}" if pos <= self.n else f"W{pos}"

    def puncture_name(self, pos: int) -> str:
        if self.mode == BRAID:
            return f"x{pos}"
        return f"p{self.n + 1 - pos}" if pos <= self.n else f"q{pos - self.n}"

    def r_position(self, pos: int) -> int:
        """Image of a puncture position under the half rotation z -> -z."""
        return 2 * self.n + 1 - pos


@dataclasses.dataclass(frozen=True)
class Polyline:
    """Oriented polygonal curve with puncture anchors.

    ``anchors`` lists (vertex index, puncture position) pairs for the
    vertices that sit exactly on punctures, in traversal order.
    ``ends_on_boundary`` distinguishes the completed diagram (running from
    boundary to boundary) from the braid-mode diagram whose last vertex is
    the final puncture.
    """

    vertices: tuple[Point, ...]
    anchors: tuple[tuple[int, int], ...]
    ends_on_boundary: bool = True

    def __post_init__(self):
        for i in range(len(self.vertices) - 1):
            if self.vertices[i] == self.vertices[i + 1]:
                raise GeometryError("repeated consecutive vertex")

    def anchor_positions(self) -> tuple[int, ...]:
        return tuple(pos for _, pos in self.anchors)


def base_diagram(model: DiscModel, completed: bool = True) -> Polyline:
    """The straight base diagram.

    Type-B: the real segment from the left boundary point through the
    punctures; the completed variant continues through all 2n punctures to
    the right boundary point, the plain variant stops at position n+1.
    Braid mode: from the left boundary point through all punctures, ending
    at the last one.
    """
    R = model.boundary_radius
    pts: list[Point] = [(-R, Fraction(0))]
    anchors: list[tuple[int, int]] = []
    if model.mode == BRAID:
        last = 2 * model.n
        boundary_end = False
    else:
        last = 2 * model.n if completed else model.n + 1
        boundary_end = completed
    for pos in range(1, last + 1):
        pts.append(model.puncture_point(pos))
        anchors.append((len(pts) - 1, pos))
    if boundary_end:
        pts.append((R, Fraction(0)))
    return Polyline(tuple(pts), tuple(anchors), ends_on_boundary=boundary_end)


# --- piecewise-affine homeomorphisms -------------------------------------

AffineMap = tuple[Fraction, Fraction, Fraction, Fraction, Fraction, Fraction]


def _apply_affine(m: AffineMap, p: Point) -> Point:
    a11, a12, a21, a22, b1, b2 = m
    return (a11 * p[0] + a12 * p[1] + b1, a21 * p[0] + a22 * p[1] + b2)


def _affine_from_triangles(src: tuple[Point, Point, Point],
                           dst: tuple[Point, Point, Point]) -> AffineMap:
    (p, q, r), (pp, qq, rr) = src, dst
    u1 = (q[0] - p[0], q[1] - p[1])
    u2 = (r[0] - p[0], r[1] - p[1])
    v1 = (qq[0] - pp[0], qq[1] - pp[1])
    v2 = (rr[0] - pp[0], rr[1] - pp[1])
    det = u1[0] * u2[1] - u1[1] * u2[0]
    if det == 0:
        raise GeometryError("degenerate source triangle")
    # A = [v1 v2] . [u1 u2]^{-1}
    a11 = (v1[0] * u2[1] - v2[0] * u1[1]) / det
    a12 = (v2[0] * u1[0] - v1[0] * u2[0]) / det
    a21 = (v1[1] * u2[1] - v2[1] * u1[1]) / det
    a22 = (v2[1] * u1[0] - v1[1] * u2[0]) / det
    b1 = pp[0] - (a11 * p[0] + a12 * p[1])
    b2 = pp[1] - (a21 * p[0] + a22 * p[1])
    return (a11, a12, a21, a22, b1, b2)


def _map_det(m: AffineMap) -> Fraction:
    return m[0] * m[3] - m[1] * m[2]


@dataclasses.dataclass(frozen=True)
class PLHomeo:
    """Piecewise-affine homeomorphism: identity outside ``support_box``
    (xmin, xmax, ymin, ymax), affine on each triangular piece inside."""

    pieces: tuple[tuple[tuple[Point, Point, Point], AffineMap], ...]
    support_box: tuple[Fraction, Fraction, Fraction, Fraction]

    def map_point(self, p: Point) -> Point:
        piece = self._locate(p)
        if piece is None:
            return p
        return _apply_affine(piece[1], p)

    def _locate(self, p: Point):
        xmin, xmax, ymin, ymax = self.support_box
        if not (xmin <= p[0] <= xmax and ymin <= p[1] <= ymax):
            return None
        for piece in self.pieces:
            if _point_in_triangle(p, piece[0]):
                return piece
        return None


def _point_in_triangle(p: Point, tri: tuple[Point, Point, Point]) -> bool:
    a, b, c = tri
    d1 = _cross(a, b, p)
    d2 = _cross(b, c, p)
    d3 = _cross(c, a, p)
    neg = (d1 < 0) or (d2 < 0) or (d3 < 0)
    pos = (d1 > 0) or (d2 > 0) or (d3 > 0)
    return not (neg and pos)


def _ring_point(c: Point, rho: Fraction, t: Fraction) -> Point:
    """Point at clockwise perimeter fraction t on the square ring of
    half-width rho centred at c, starting from the east edge midpoint."""
    t = t % 1
    offs = [
        (rho, Fraction(0)), (rho, -rho), (Fraction(0), -rho), (-rho, -rho),
        (-rho, Fraction(0)), (-rho, rho), (Fraction(0), rho), (rho, rho),
    ]
    u = t * 8
    k = int(u)
    lam = u - k
    a = offs[k % 8]
    b = offs[(k + 1) % 8]
    return (c[0] + a[0] + (b[0] - a[0]) * lam, c[1] + a[1] + (b[1] - a[1]) * lam)


# Support box / inner square half-widths for the two puncture spacings.
ADJACENT_SUPPORT = (Fraction(9, 8), Fraction(9, 16))
CENTRAL_SUPPORT = (Fraction(11, 8), Fraction(9, 8))


def _build_twist(center: Point, outer: Fraction, inner: Fraction,
                 rings: int, clockwise: bool) -> PLHomeo:
    """Square-ring twist: point reflection inside the inner square, perimeter
    shift decreasing linearly to zero over ``rings`` nested rings."""
    K = rings
    M = 8
    while M % (2 * K) != 0:
        M += 8
    radii = [inner + (outer - inner) * k / K for k in range(K + 1)]
    shifts = [Fraction(M * (K - k), 2 * K) for k in range(K + 1)]
    if any(sh != int(sh) for sh in shifts):
        raise GeometryError("ring shift not integral")
    shifts = [int(sh) for sh in shifts]

    def ring_vertices(rho: Fraction) -> list[Point]:
        return [_ring_point(center, rho, Fraction(j, M)) for j in range(M)]

    layer = [ring_vertices(r) for r in radii]
    sign = 1 if clockwise else -1

    pieces: list[tuple[tuple[Point, Point, Point], AffineMap]] = []
    # inner square: point reflection through the centre
    refl: AffineMap = (Fraction(-1), Fraction(0), Fraction(0), Fraction(-1),
                       2 * center[0], 2 * center[1])
    a = inner
    sq = [(center[0] - a, center[1] - a), (center[0] + a, center[1] - a),
          (center[0] + a, center[1] + a), (center[0] - a, center[1] + a)]
    pieces.append(((sq[0], sq[1], sq[2]), refl))
    pieces.append(((sq[0], sq[2], sq[3]), refl))

    for k in range(K):
        inner_ring, outer_ring = layer[k], layer[k + 1]
        si, so = sign * shifts[k], sign * shifts[k + 1]
        for j in range(M):
            j1 = (j + 1) % M
            # quad between adjacent radial spokes, source and image
            quad = (inner_ring[j], inner_ring[j1], outer_ring[j1], outer_ring[j])
            img = (inner_ring[(j + si) % M], inner_ring[(j1 + si) % M],
                   outer_ring[(j1 + so) % M], outer_ring[(j + so) % M])
            # split by whichever diagonal keeps both pieces orientation-positive
            for d1, d2 in (((0, 1, 3), (1, 2, 3)), ((0, 1, 2), (0, 2, 3))):
                tris = []
                ok = True
                for idxs in (d1, d2):
                    tri = tuple(quad[i] for i in idxs)
                    dst = tuple(img[i] for i in idxs)
                    m = _affine_from_triangles(tri, dst)
                    if _map_det(m) <= 0:
                        ok = False
                        break
                    tris.append((tri, m))
                if ok:
                    pieces.extend(tris)
                    break
            else:
                raise GeometryError("orientation flipped on both diagonals")

    box = (center[0] - outer, center[0] + outer, center[1] - outer, center[1] + outer)
    return PLHomeo(tuple(pieces), box)


def half_twist(model: DiscModel, j: int, clockwise: bool = True,
               rings: int = 2) -> PLHomeo:
    """Half Dehn twist swapping the punctures at positions j, j+1.

    ``clockwise=True`` is the left-handed twist of the positive generator.
    The support box is sized so that it stays inside the disc and clear of
    every other puncture and wall.
    """
    if not 1 <= j <= 2 * model.n - 1:
        raise GeometryError(f"twist position {j} out of range")
    x1, x2 = model.puncture_x(j), model.puncture_x(j + 1)
    center = ((x1 + x2) / 2, Fraction(0))
    gap = x2 - x1
    if gap == 1:
        outer, inner = ADJACENT_SUPPORT
    elif gap == 2:
        outer, inner = CENTRAL_SUPPORT
    else:
        raise GeometryError("unexpected puncture spacing")
    # support must avoid all other punctures (walls are vertical lines there)
    for pos in range(1, 2 * model.n + 1):
        if pos in (j, j + 1):
            continue
        if abs(model.puncture_x(pos) - center[0]) <= outer:
            raise GeometryError("support box touches another puncture")
    for K in (rings, rings + 1, rings + 2, rings + 4):
        try:
            return _build_twist(center, outer, inner, K, clockwise)
        except GeometryError:
            continue
    raise GeometryError("no valid ring count found")


@functools.cache
def _twist_cached(n: int, mode: str, j: int, clockwise: bool) -> PLHomeo:
    return half_twist(DiscModel(n, mode), j, clockwise)


# --- applying homeomorphisms to polylines ---------------------------------


def _segment_line_params(p: Point, q: Point, a: Point, b: Point) -> Fraction | None:
    """Parameter t on segment pq of its proper intersection with segment ab,
    or None.  Endpoint touches count (t in [0,1], s in [0,1])."""
    d1 = (q[0] - p[0], q[1] - p[1])
    d2 = (b[0] - a[0], b[1] - a[1])
    denom = d1[0] * d2[1] - d1[1] * d2[0]
    if denom == 0:
        return None
    rx, ry = a[0] - p[0], a[1] - p[1]
    t = (rx * d2[1] - ry * d2[0]) / denom
    s = (rx * d1[1] - ry * d1[0]) / denom
    if 0 <= t <= 1 and 0 <= s <= 1:
        return t
    return None


def apply_homeo(h: PLHomeo, c: Polyline) -> Polyline:
    """Image polyline: each segment is subdivided at piece boundaries and
    mapped affinely; anchors ride along with their vertices."""
    xmin, xmax, ymin, ymax = h.support_box
    edges: list[tuple[Point, Point]] = []
    for tri, _ in h.pieces:
        edges.append((tri[0], tri[1]))
        edges.append((tri[1], tri[2]))
        edges.append((tri[2], tri[0]))

    anchor_of_vertex = dict((i, pos) for i, pos in c.anchors)
    new_vertices: list[Point] = []
    new_anchors: list[tuple[int, int]] = []

    def push(pt: Point, anchor_pos: int | None):
        if new_vertices and new_vertices[-1] == pt:
            if anchor_pos is not None:
                new_anchors.append((len(new_vertices) - 1, anchor_pos))
            return
        new_vertices.append(pt)
        if anchor_pos is not None:
            new_anchors.append((len(new_vertices) - 1, anchor_pos))

    for i, v in enumerate(c.vertices[:-1]):
        w = c.vertices[i + 1]
        push(h.map_point(v), anchor_of_vertex.get(i))
        seg_out = (max(v[0], w[0]) < xmin or min(v[0], w[0]) > xmax or
                   max(v[1], w[1]) < ymin or min(v[1], w[1]) > ymax)
        if seg_out:
            continue
        ts = set()
        for a, b in edges:
            t = _segment_line_params(v, w, a, b)
            if t is not None and 0 < t < 1:
                ts.add(t)
        for t in sorted(ts):
            pt = (v[0] + (w[0] - v[0]) * t, v[1] + (w[1] - v[1]) * t)
            push(h.map_point(pt), None)
    last = len(c.vertices) - 1
    push(h.map_point(c.vertices[last]), anchor_of_vertex.get(last))

    return _prune(Polyline(tuple(new_vertices), tuple(new_anchors),
                           ends_on_boundary=c.ends_on_boundary))


def _prune(c: Polyline) -> Polyline:
    """Drop interior vertices that are collinear with their neighbours
    (never anchors)."""
    anchored = set(i for i, _ in c.anchors)
    keep = [True] * len(c.vertices)
    for i in range(1, len(c.vertices) - 1):
        if i in anchored:
            continue
        j = i - 1
        while not keep[j]:
            j -= 1
        a = c.vertices[j]
        b, d = c.vertices[i], c.vertices[i + 1]
        if _cross(a, b, d) == 0:
            dot = (b[0] - a[0]) * (d[0] - b[0]) + (b[1] - a[1]) * (d[1] - b[1])
            if dot >= 0:
                keep[i] = False
    remap: dict[int, int] = {}
    verts: list[Point] = []
    for i, v in enumerate(c.vertices):
        if keep[i]:
            remap[i] = len(verts)
            verts.append(v)
    anchors = tuple((remap[i], pos) for i, pos in c.anchors)
    return Polyline(tuple(verts), anchors, ends_on_boundary=c.ends_on_boundary)


def _refresh_anchors(c: Polyline, model: DiscModel) -> Polyline:
    """Anchor vertices ride along with their punctures under a twist; relabel
    each with the puncture now underneath it."""
    anchors = []
    for i, _ in c.anchors:
        v = c.vertices[i]
        if v[1] != 0:
            raise GeometryError("anchor left the real axis")
        pos = model.position_of_x(v[0])
        if pos is None:
            raise GeometryError("anchor is not on a puncture")
        anchors.append((i, pos))
    return Polyline(c.vertices, tuple(anchors), ends_on_boundary=c.ends_on_boundary)


def act(w: GroupWord, model: DiscModel, completed: bool = True) -> Polyline:
    """Image of the base diagram under the mapping class of ``w``.

    Rightmost letter acts first.  Type-B words are sent through psi and act
    on the type-B disc; braid words act on whichever disc ``model`` gives.
    Negative letters act by the mirrored (counterclockwise) twist, which is
    isotopic to the exact inverse map.
    """
    if w.tag.kind == TYPE_B:
        if model.mode != TYPE_B or model.n != w.tag.rank:
            raise WordError("model does not match type-B word")
        w = psi(w)
    else:
        if 2 * model.n != w.tag.rank:
            raise WordError("model does not match braid word rank")
    curve = base_diagram(model, completed=completed)
    for idx, sign in reversed(w.letters):
        h = _twist_cached(model.n, model.mode, idx, sign == 1)
        curve = _refresh_anchors(apply_homeo(h, curve), model)
    return curve


def polyline_json(c: Polyline) -> dict:
    """Debug dump: exact rational coordinates as numerator/denominator strings."""
    return {
        "vertices": [[f"{p[0].numerator}/{p[0].denominator}",
                      f"{p[1].numerator}/{p[1].denominator}"] for p in c.vertices],
        "anchors": [[i, pos] for i, pos in c.anchors],
        "ends_on_boundary": c.ends_on_boundary,
    }
