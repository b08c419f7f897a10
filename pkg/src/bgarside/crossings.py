"""Symbolic tightening of curve diagrams.

The curve produced by the PL kernel is read against the vertical walls: each
transversal crossing becomes a signed wall letter, each puncture anchor a
passage letter with a travel direction.  Cutting the disc along all walls
leaves a single disc with every puncture on its boundary, so cancelling
adjacent inverse wall letters is exactly bigon removal, and the reduced word
of the completed diagram is a complete invariant of the group element.

A polyline vertex lying exactly on a wall line is treated as lying
infinitesimally to the wall's left; genuinely degenerate geometry (a curve
through a puncture away from an anchor) raises instead of being perturbed.
"""

from __future__ import annotations

import dataclasses
import functools
import hashlib
from fractions import Fraction

from .disc import UP, DiscModel, GeometryError, Polyline, act
from .words import TYPE_B, BRAID, GroupWord, free_reduce

E = "E"
W = "W"

START = "start"
END = "end"
TERMINAL = "terminal"
WALL = "wall"
PASS = "pass"


@dataclasses.dataclass(frozen=True)
class CrossingLetter:
    """One event along the curve: a signed wall crossing, a puncture passage
    with its horizontal travel direction, or one of the endpoint markers."""

    kind: str
    pos: int = 0          # puncture position 1..2n (wall/pass/terminal)
    direction: str = ""   # E (left to right) or W, for wall/pass

    def __str__(self) -> str:
        return self.kind + (f"({self.pos},{self.direction})" if self.pos else "")


@dataclasses.dataclass(frozen=True)
class CrossingWord:
    """Event sequence of one curve diagram, bracketed by start/end letters."""

    letters: tuple[CrossingLetter, ...]
    n: int
    mode: str
    completed: bool

    def core(self) -> tuple[CrossingLetter, ...]:
        return self.letters[1:-1]

    def dbeta_range(self) -> tuple[int, int]:
        """Letter indices bounding the diagram part whose labels matter:
        from the first puncture passage to the (n+1)-th in type-B mode, or to
        the final letter in braid mode."""
        passes = [i for i, l in enumerate(self.letters) if l.kind in (PASS, TERMINAL)]
        if not passes:
            raise GeometryError("word has no anchors")
        first = passes[0]
        if self.mode == BRAID:
            return first, len(self.letters) - 1
        return first, passes[self.n] if len(passes) > self.n else len(self.letters) - 1

    def pretty(self, model: DiscModel | None = None) -> str:
        model = model or DiscModel(self.n, self.mode)
        parts = []
        for l in self.letters:
            if l.kind == WALL:
                parts.append(model.wall_name(l.pos) + ("+" if l.direction == E else "-"))
            elif l.kind == PASS:
                arrow = "R" if l.direction == E else "L"
                parts.append(f"P({model.puncture_name(l.pos)},{arrow})")
            elif l.kind == TERMINAL:
                parts.append(f"T({model.puncture_name(l.pos)})")
        return " ".join(parts) if parts else "<empty>"


def _dir_key(x: Fraction, y: Fraction):
    """Sortable key for a germ direction, counterclockwise from east, with
    exactly-vertical germs nudged infinitesimally to the west."""
    if y == 0:
        if x == 0:
            raise GeometryError("zero direction vector")
        return (0, Fraction(0), 0) if x > 0 else (2, Fraction(0), 0)
    sector = 1 if y > 0 else 3
    bump = 0
    if x == 0:
        bump = 1 if y > 0 else -1
    return (sector, -x / y, bump)


def _ccw_order(a, b, c) -> bool:
    """True if going counterclockwise from direction-key a we meet b before c."""
    if b == a or c == a or b == c:
        raise GeometryError("coincident germ directions")
    rb = (0 if b > a else 1, b)
    rc = (0 if c > a else 1, c)
    return rb < rc


def _travel_at_anchor(u, v, wall_dir: int) -> str:
    """Travel direction through a puncture from the incoming/outgoing germ
    rays u, v (pointing away from the puncture) and its wall direction."""
    ku = _dir_key(*u)
    kv = _dir_key(*v)
    kw = (1, Fraction(0), 0) if wall_dir == UP else (3, Fraction(0), 0)
    if wall_dir == UP:
        return E if _ccw_order(ku, kv, kw) else W
    return E if _ccw_order(ku, kw, kv) else W


def extract(c: Polyline, model: DiscModel, detour_toward_wall: bool = False) -> CrossingWord:
    """Read the crossing word of a polyline.

    ``detour_toward_wall`` switches the puncture modification to the mirrored
    convention in which each passage also contributes one crossing of its own
    wall (the shipped convention contributes none).
    """
    n2 = model.num_punctures
    lines = [(pos, model.puncture_x(pos)) for pos in range(1, n2 + 1)]
    anchor_at = {i: pos for i, pos in c.anchors}

    def side(x: Fraction, cline: Fraction) -> int:
        if x == cline:
            return -1  # symbolic perturbation: on the wall line counts as west
        return 1 if x > cline else -1

    letters: list[CrossingLetter] = [CrossingLetter(START)]
    verts = c.vertices
    for i in range(len(verts) - 1):
        v, w = verts[i], verts[i + 1]
        if i in anchor_at and i != 0:
            pos = anchor_at[i]
            u_ray = (verts[i - 1][0] - v[0], verts[i - 1][1] - v[1])
            v_ray = (w[0] - v[0], w[1] - v[1])
            travel = _travel_at_anchor(u_ray, v_ray, model.wall_dir(pos))
            letters.append(CrossingLetter(PASS, pos, travel))
            if detour_toward_wall:
                letters.append(CrossingLetter(WALL, pos, travel))
        hits: list[tuple[Fraction, int, str, Fraction]] = []
        for pos, cline in lines:
            sv, sw = side(v[0], cline), side(w[0], cline)
            if sv == sw:
                continue
            t = (cline - v[0]) / (w[0] - v[0])
            y = v[1] + t * (w[1] - v[1])
            if y == 0:
                endpoint_anchor = (
                    (t == 0 and anchor_at.get(i) == pos)
                    or (t == 1 and anchor_at.get(i + 1) == pos)
                )
                if endpoint_anchor:
                    continue
                raise GeometryError(f"curve passes through puncture {pos} off-anchor")
            wall_side = y > 0 if model.wall_dir(pos) == UP else y < 0
            if not wall_side:
                continue  # through the gap, no letter
            hits.append((t, pos, E if sw > sv else W, y))
        hits.sort(key=lambda h: h[0])
        for _, pos, direction, _y in hits:
            letters.append(CrossingLetter(WALL, pos, direction))

    last = len(verts) - 1
    if last in anchor_at:
        letters.append(CrossingLetter(TERMINAL, anchor_at[last]))
    else:
        letters.append(CrossingLetter(END))
    return CrossingWord(tuple(letters), model.n, model.mode, c.ends_on_boundary)


def reduce_word(w: CrossingWord) -> CrossingWord:
    """Cancel adjacent inverse wall-letter pairs until none remain.  Puncture
    letters are never cancelled and block cancellation across them."""
    out: list[CrossingLetter] = []
    for letter in w.letters:
        if (
            letter.kind == WALL
            and out
            and out[-1].kind == WALL
            and out[-1].pos == letter.pos
            and out[-1].direction != letter.direction
        ):
            out.pop()
        else:
            out.append(letter)
    return CrossingWord(tuple(out), w.n, w.mode, w.completed)


def r_image_word(w: CrossingWord) -> CrossingWord:
    """The word of the half-rotated diagram: reversed order, positions mapped
    antipodally, travel and crossing directions preserved."""
    n2 = 2 * w.n
    core = []
    for l in reversed(w.core()):
        if l.kind in (WALL, PASS):
            core.append(CrossingLetter(l.kind, n2 + 1 - l.pos, l.direction))
        else:
            core.append(l)
    return CrossingWord(
        (w.letters[0],) + tuple(core) + (w.letters[-1],), w.n, w.mode, w.completed
    )


def is_r_symmetric(w: CrossingWord) -> bool:
    """Completed type-B words are palindromic under the antipodal letter map."""
    core = w.core()
    n2 = 2 * w.n
    m = len(core)
    for k in range(m):
        a, b = core[k], core[m - 1 - k]
        if a.kind != b.kind or a.pos != n2 + 1 - b.pos or a.direction != b.direction:
            return False
    return True


_KIND_BYTE = {START: 1, END: 2, TERMINAL: 3, WALL: 4, PASS: 5}


def serialize(w: CrossingWord) -> bytes:
    out = bytearray([w.n, 1 if w.mode == TYPE_B else 0, 1 if w.completed else 0])
    for l in w.letters:
        out.append(_KIND_BYTE[l.kind])
        if l.kind in (WALL, PASS, TERMINAL):
            out.append(l.pos)
            out.append(1 if l.direction == E else 0)
    return bytes(out)


@dataclasses.dataclass(frozen=True)
class CanonicalForm:
    """Reduced crossing word of the completed total diagram, serialized.
    Equal byte strings correspond to equal group elements."""

    data: bytes
    word: CrossingWord

    def digest(self) -> str:
        return hashlib.sha256(self.data).hexdigest()[:16]

    def __eq__(self, other) -> bool:
        return isinstance(other, CanonicalForm) and self.data == other.data

    def __hash__(self) -> int:
        return hash(self.data)


def _model_for(w: GroupWord) -> DiscModel:
    if w.tag.kind == TYPE_B:
        return DiscModel(w.tag.rank, TYPE_B)
    if w.tag.rank % 2 != 0:
        raise GeometryError("geometric engine needs an even braid strand count")
    return DiscModel(w.tag.rank // 2, BRAID)


@functools.lru_cache(maxsize=65536)
def _canonical_cached(tag, letters) -> CanonicalForm:
    from .tighten import tighten

    w = GroupWord(tag, letters)
    model = _model_for(w)
    curve = act(w, model)
    reduced = tighten(extract(curve, model))
    return CanonicalForm(serialize(reduced), reduced)


def canonical_form(w: GroupWord) -> CanonicalForm:
    """Canonical form via the geometric pipeline act -> extract -> reduce."""
    return _canonical_cached(w.tag, free_reduce(w).letters)


def elements_equal(a: GroupWord, b: GroupWord) -> bool:
    if a.tag != b.tag:
        raise ValueError("cannot compare words over different groups")
    return canonical_form(a) == canonical_form(b)


def is_identity(w: GroupWord) -> bool:
    from .words import identity

    return canonical_form(w) == canonical_form(identity(w.tag))
