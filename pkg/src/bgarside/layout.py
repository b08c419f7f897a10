"""Canonical embedded drawings reconstructed from crossing words.

The disc cut along the vertical puncture lines falls into columns; the curve
is a chain of chords, each inside one column, with endpoints (*ports*) on the
lines: wall crossings, silent gap passages, puncture tips, and the two
boundary endpoints.  Drawing the word means ordering the ports on each line
so that the chords in every column are pairwise non-crossing.  The curve is
drawn incrementally: the running end sits on the boundary of exactly one face
of its column, so the admissible span for the next port is forced; the port
is placed at the midpoint of a free stretch of that span.

The along-line orders produced here are the nesting data used for rendering,
for the round-trip check, and for deciding which wall crossings hug a
puncture tip removably during tightening.
"""

from __future__ import annotations

import dataclasses
from fractions import Fraction

from .disc import UP, DiscModel, GeometryError, Polyline
from .crossings import PASS, TERMINAL, WALL, CrossingWord, E
from .labels import _events_of, route_strand


@dataclasses.dataclass
class PlacedPort:
    """A transversal passage of a line, placed at an exact height.

    ``strand`` is the index k of the strand (between letters k and k+1) the
    port belongs to; event ports also carry their letter index.
    """

    line: int
    kind: str       # 'wall', 'gap', 'tip', 'boundary'
    y: Fraction
    serial: int
    strand: int
    letter_index: int | None = None
    direction: str = ""


@dataclasses.dataclass
class Chord:
    a: PlacedPort
    b: PlacedPort
    column: int      # between line `column` and line `column + 1`


@dataclasses.dataclass
class CanonicalDrawing:
    """Embedded drawing of one crossing word."""

    word: CrossingWord
    ports: list[PlacedPort]
    chords: list[Chord]
    line_ports: dict[int, list[PlacedPort]]

    def tipward_order(self, line: int, kind: str) -> list[PlacedPort]:
        """Ports of one kind on a line, nearest the puncture first."""
        model = DiscModel(self.word.n, self.word.mode)
        up = model.wall_dir(line) == UP
        items = [p for p in self.line_ports.get(line, []) if p.kind == kind]
        if kind == "wall":
            return sorted(items, key=lambda p: p.y if up else -p.y)
        return sorted(items, key=lambda p: -p.y if up else p.y)


def layout(word: CrossingWord) -> CanonicalDrawing:
    """Draw a crossing word with exact rational port heights."""
    model = DiscModel(word.n, word.mode)
    events = _events_of(word)

    line_ports: dict[int, list[PlacedPort]] = {}
    chords_by_column: dict[int, list[Chord]] = {}
    all_ports: list[PlacedPort] = []
    all_chords: list[Chord] = []
    serial = 0

    def region_bounds(line: int, kind: str) -> tuple[Fraction, Fraction]:
        up = model.wall_dir(line) == UP
        if kind == "wall":
            return (Fraction(0), Fraction(1)) if up else (Fraction(-1), Fraction(0))
        if kind == "gap":
            return (Fraction(-1), Fraction(0)) if up else (Fraction(0), Fraction(1))
        return (Fraction(-1), Fraction(1))

    def new_port(line, kind, y, strand, letter_index, direction) -> PlacedPort:
        nonlocal serial
        p = PlacedPort(line, kind, y, serial, strand, letter_index, direction)
        serial += 1
        line_ports.setdefault(line, []).append(p)
        all_ports.append(p)
        return p

    def endpoint_on(ch: Chord, line: int) -> Fraction:
        if ch.a.line == line:
            return ch.a.y
        if ch.b.line == line:
            return ch.b.y
        raise GeometryError("chord endpoint lookup failed")

    def visible_span(column: int, a: PlacedPort, target_line: int):
        """(lo, hi, holes): the stretch of the target line lying in a's face,
        minus pocket intervals hidden behind same-line U-chords."""
        lo, hi = Fraction(-3, 2), Fraction(3, 2)
        holes: list[tuple[Fraction, Fraction]] = []
        for ch in chords_by_column.get(column, ()):
            if ch.a.line == ch.b.line:
                pocket_line = ch.a.line
                y1, y2 = sorted((ch.a.y, ch.b.y))
                if pocket_line == a.line and y1 < a.y < y2:
                    if pocket_line == target_line:
                        lo, hi = max(lo, y1), min(hi, y2)
                    else:
                        raise GeometryError("running end trapped in a pocket")
                elif pocket_line == target_line:
                    holes.append((y1, y2))
            else:
                my = endpoint_on(ch, a.line)
                ty = endpoint_on(ch, target_line)
                if a.y > my:
                    lo = max(lo, ty)
                elif a.y < my:
                    hi = min(hi, ty)
                else:
                    raise GeometryError("port collision")
        return lo, hi, holes

    def candidate_positions(a: PlacedPort, target_line: int, kind: str,
                            column: int) -> list[Fraction]:
        """Admissible heights for the next port, one per free stretch of the
        visible span (tips are pinned at height zero)."""
        lo, hi, holes = visible_span(column, a, target_line)
        rlo, rhi = region_bounds(target_line, kind)
        lo, hi = max(lo, rlo), min(hi, rhi)
        if kind in ("tip", "boundary"):
            y = Fraction(0)
            if lo <= y <= hi and not any(h1 < y < h2 for h1, h2 in holes):
                return [y]
            return []
        if lo >= hi:
            return []
        cuts = sorted({lo, hi, *(c for h in holes for c in h if lo < c < hi)})
        taken = {p.y for p in line_ports.get(target_line, [])}
        out = []
        for i in range(len(cuts) - 1):
            mid = (cuts[i] + cuts[i + 1]) / 2
            while mid in taken:
                mid = (mid + cuts[i + 1]) / 2
            if not any(h1 < mid < h2 for h1, h2 in holes):
                out.append(mid)
        return out

    # flatten the whole traversal into placement steps
    steps: list[tuple[int, str, int, int, int | None, str]] = []
    for k in range(len(events) - 1):
        e2 = events[k + 1]
        strand = route_strand(model, events[k], e2)
        ports = strand.ports
        for j in range(1, len(ports)):
            p, prev = ports[j], ports[j - 1]
            if p.line == prev.line:
                column = prev.line if prev.direction == E else prev.line - 1
            else:
                column = min(prev.line, p.line)
            if j == len(ports) - 1:
                if e2.kind in (PASS, TERMINAL):
                    kind = "tip"
                elif e2.kind == WALL:
                    kind = "wall"
                else:
                    kind = "boundary"
                steps.append((p.line, kind, column, k, k + 1, p.direction))
            else:
                steps.append((p.line, "gap", column, k, None, p.direction))

    start = new_port(0, "boundary", Fraction(0), 0, 0, E)

    def undo(n_ports: int, n_chords: int):
        while len(all_ports) > n_ports:
            p = all_ports.pop()
            line_ports[p.line].remove(p)
        while len(all_chords) > n_chords:
            ch = all_chords.pop()
            chords_by_column[ch.column].remove(ch)

    def place(idx: int, current: PlacedPort) -> bool:
        if idx == len(steps):
            return True
        line, kind, column, strandk, letter_index, direction = steps[idx]
        for y in candidate_positions(current, line, kind, column):
            mark_p, mark_c = len(all_ports), len(all_chords)
            b = new_port(line, kind, y, strandk, letter_index, direction)
            ch = Chord(current, b, column)
            chords_by_column.setdefault(column, []).append(ch)
            all_chords.append(ch)
            if place(idx + 1, b):
                return True
            undo(mark_p, mark_c)
        return False

    import sys
    old_limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old_limit, 4 * len(steps) + 100))
    try:
        ok = place(0, start)
    finally:
        sys.setrecursionlimit(old_limit)
    if not ok:
        raise GeometryError("word admits no embedded drawing")

    return CanonicalDrawing(word, all_ports, all_chords, line_ports)


def drawing_polyline(d: CanonicalDrawing) -> Polyline:
    """Realize the drawing as an embedded polyline in disc coordinates.

    Straight chords become straight segments (their endpoint orders agree on
    both lines, so they cannot cross); U-chords become three-segment hooks
    whose depth into the column is kept below every straight chord's safe
    clearance and nests with pocket depth.
    """
    model = DiscModel(d.word.n, d.word.mode)
    n2 = 2 * d.word.n

    def line_x(line: int) -> Fraction:
        if line == 0:
            return -model.boundary_radius
        if line == n2 + 1:
            return model.boundary_radius
        return model.puncture_x(line)

    scale = Fraction(3, 4)

    def port_xy(p: PlacedPort) -> tuple[Fraction, Fraction]:
        return (line_x(p.line), p.y * scale)

    # safe bulge per column: U-hooks must stay clear of straight chords
    bulge_limit: dict[int, Fraction] = {}
    for ch in d.chords:
        if ch.a.line == ch.b.line:
            continue
        col = ch.column
        w = line_x(col + 1) - line_x(col)
        ya, yb = ch.a.y * scale, ch.b.y * scale
        for other in d.chords:
            if other.a.line != other.b.line or other.column != col:
                continue
            bline = other.a.line
            y1, y2 = sorted((other.a.y * scale, other.b.y * scale))
            ys = ya if ch.a.line == bline else yb
            yo = yb if ch.a.line == bline else ya
            if y1 <= ys <= y2:
                raise GeometryError("straight chord endpoint inside a pocket")
            gap_y = min(abs(ys - y1), abs(ys - y2))
            slope = abs(yo - ys)
            if slope == 0:
                continue
            safe = w * gap_y / slope
            cur = bulge_limit.get(col, w)
            bulge_limit[col] = min(cur, safe)

    depth: dict[int, int] = {}
    max_depth = 1
    for i, ch in enumerate(d.chords):
        if ch.a.line != ch.b.line:
            continue
        y1, y2 = sorted((ch.a.y, ch.b.y))
        k = 1
        for other in d.chords:
            if other is ch or other.a.line != other.b.line:
                continue
            if other.column != ch.column or other.a.line != ch.a.line:
                continue
            o1, o2 = sorted((other.a.y, other.b.y))
            if o1 < y1 and y2 < o2:
                k += 1
        depth[i] = k
        max_depth = max(max_depth, k)

    pts: list[tuple[Fraction, Fraction]] = []
    anchors: list[tuple[int, int]] = []

    def push(x: Fraction, y: Fraction, anchor_pos: int | None = None):
        if pts and pts[-1] == (x, y):
            if anchor_pos is not None and (len(pts) - 1, anchor_pos) not in anchors:
                anchors.append((len(pts) - 1, anchor_pos))
            return
        pts.append((x, y))
        if anchor_pos is not None:
            anchors.append((len(pts) - 1, anchor_pos))

    for i, ch in enumerate(d.chords):
        ax, ay = port_xy(ch.a)
        bx, by = port_xy(ch.b)
        a_anchor = ch.a.line if ch.a.kind == "tip" else None
        b_anchor = ch.b.line if ch.b.kind == "tip" else None
        push(ax, ay, a_anchor)
        if ch.a.line == ch.b.line:
            col = ch.column
            w = line_x(col + 1) - line_x(col)
            limit = min(bulge_limit.get(col, w), w / 2)
            k = depth.get(i, 1)
            bulge = limit * (max_depth + 1 - k) / (max_depth + 1)
            x0 = line_x(ch.a.line)
            direction = 1 if ch.column == ch.a.line else -1
            xm = x0 + direction * bulge
            push(xm, ay)
            push(xm, by)
        push(bx, by, b_anchor)

    ends_on_boundary = d.word.letters[-1].kind != TERMINAL
    return Polyline(tuple(pts), tuple(anchors), ends_on_boundary=ends_on_boundary)
