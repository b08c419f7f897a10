"""Winding-number and wall-crossing labelings of a reduced crossing word.

Between consecutive events (wall crossings, puncture passages) the curve of a
minimal diagram runs through the corridors between walls, passing a forced
sequence of gaps, and it reverses horizontal direction only where the event
pattern forces it.  Each reversal is one vertical tangency and changes the
winding label by +1 (clockwise turn) or -1 (counterclockwise).  Which way a
forced turn goes is pinned down by where the wrapped line's free gap sits
relative to the event being wrapped: turning from eastbound to westbound
while descending passes through south, which is the +1 crossing in clockwise-
positive half-turn units, and mirror statements cover the other three cases.

That makes the minimal label walk unique and computable straight from the
word; the parity of every label is checked against its event's travel
direction, so any routing defect fails loudly instead of mislabeling.

The wall-crossing labeling is the running algebraic crossing sum, signed so
that eastbound crossings of upward walls count +1.
"""

from __future__ import annotations

import dataclasses

from .disc import DOWN, UP, DiscModel
from .words import BRAID, GroupWord
from .crossings import (
    END,
    PASS,
    START,
    TERMINAL,
    WALL,
    CanonicalForm,
    CrossingWord,
    E,
    W,
    canonical_form,
)


class AmbiguousMinimalWalk(RuntimeError):
    """A label violated its parity constraint: the routing rules failed to
    single out the minimal walk (never expected to fire)."""


@dataclasses.dataclass(frozen=True)
class Event:
    """One letter with its corridor data: line index 0..2n+1 (0 and 2n+1 are
    the boundary pseudo-lines), direction of travel at the event, and the
    coarse height of its port on the line (-1 below axis, 0 on it, +1 above)."""

    kind: str
    line: int
    direction: str | None
    height: int
    pos: int = 0


def _events_of(word: CrossingWord) -> list[Event]:
    model = DiscModel(word.n, word.mode)
    n2 = 2 * word.n
    events: list[Event] = []
    for letter in word.letters:
        if letter.kind == START:
            events.append(Event(START, 0, E, 0))
        elif letter.kind == END:
            events.append(Event(END, n2 + 1, E, 0))
        elif letter.kind == TERMINAL:
            events.append(Event(TERMINAL, letter.pos, None, 0, letter.pos))
        elif letter.kind == PASS:
            events.append(Event(PASS, letter.pos, letter.direction, 0, letter.pos))
        else:
            h = 1 if model.wall_dir(letter.pos) == UP else -1
            events.append(Event(WALL, letter.pos, letter.direction, h, letter.pos))
    return events


def _gap_height(model: DiscModel, pos: int) -> int:
    """The free side of a puncture line: below an upward wall, above a
    downward one."""
    return -1 if model.wall_dir(pos) == UP else 1


@dataclasses.dataclass(frozen=True)
class Port:
    """A transversal passage of a puncture line: an event port or a silent
    gap passage inserted by the router."""

    line: int
    kind: str          # 'event' or 'gap'
    direction: str     # travel direction through the line
    height: int        # coarse height class on the line


@dataclasses.dataclass(frozen=True)
class Strand:
    """Route between consecutive events: the port sequence (first and last
    are the event ports) and, for each consecutive same-line port pair, a
    U-turn with its winding step."""

    ports: tuple[Port, ...]
    turn_signs: tuple[int, ...]   # aligned with the same-line port pairs
    turn_after: tuple[int, ...]   # index i: turn between ports[i] and ports[i+1]


def _turn_sign(kind: str, h_from: int, h_to: int) -> int:
    """Winding step of a U-turn: eastbound-to-westbound turns gain +1 when
    they descend (through south); westbound-to-eastbound when they ascend."""
    if h_from == h_to:
        raise AmbiguousMinimalWalk("degenerate turn between equal heights")
    if kind == "EW":
        return 1 if h_to < h_from else -1
    return 1 if h_to > h_from else -1


def route_strand(model: DiscModel, e1: Event, e2: Event) -> Strand:
    """Minimal corridor route from one event to the next."""
    d1 = e1.direction
    l1, l2 = e1.line, e2.line
    d2 = e2.direction
    if d2 is None:  # terminal puncture: approach with fewest turns
        if d1 == E:
            d2 = E if l2 > l1 else W
        else:
            d2 = W if l2 < l1 else E

    def gap(line: int, direction: str) -> Port:
        return Port(line, "gap", direction, _gap_height(model, line))

    p1 = Port(l1, "event", d1, e1.height)
    p2 = Port(l2, "event", d2, e2.height)
    ports: list[Port] = [p1]
    if d1 == E and d2 == E:
        if l2 > l1:
            ports += [gap(k, E) for k in range(l1 + 1, l2)]
        else:
            ports += [gap(k, W) for k in range(l1, l2 - 1, -1)]
    elif d1 == W and d2 == W:
        if l2 < l1:
            ports += [gap(k, W) for k in range(l1 - 1, l2, -1)]
        else:
            ports += [gap(k, E) for k in range(l1, l2 + 1)]
    elif d1 == E and d2 == W:
        if l2 > l1:
            ports += [gap(k, E) for k in range(l1 + 1, l2 + 1)]
        elif l2 < l1:
            ports += [gap(k, W) for k in range(l1, l2, -1)]
    else:  # W then E
        if l2 < l1:
            ports += [gap(k, W) for k in range(l1 - 1, l2 - 1, -1)]
        elif l2 > l1:
            ports += [gap(k, E) for k in range(l1, l2)]
    ports.append(p2)

    signs: list[int] = []
    after: list[int] = []
    for i in range(len(ports) - 1):
        a, b = ports[i], ports[i + 1]
        if a.line == b.line:
            kind = "EW" if a.direction == E else "WE"
            if a.direction == b.direction:
                raise AmbiguousMinimalWalk("U-turn without direction reversal")
            signs.append(_turn_sign(kind, a.height, b.height))
            after.append(i)
    return Strand(tuple(ports), tuple(signs), tuple(after))


@dataclasses.dataclass(frozen=True)
class LabelWalk:
    """Per-segment labels along the completed diagram.

    ``gap_labels[k]`` lists the labels between letters k and k+1 (several
    entries when vertical tangencies sit inside that stretch); winding walks
    carry the total tangency count.
    """

    kind: str
    gap_labels: tuple[tuple[int, ...], ...]
    tangency_count: int
    word: CrossingWord

    def event_label(self, i: int) -> int:
        if i == 0:
            return self.gap_labels[0][0]
        return self.gap_labels[i - 1][-1]

    def dbeta_values(self) -> list[int]:
        i, j = self.word.dbeta_range()
        vals: list[int] = []
        for k in range(i, j):
            vals.extend(self.gap_labels[k])
        return vals

    def all_values(self) -> list[int]:
        return [v for seg in self.gap_labels for v in seg]


def win_labels(word: CrossingWord) -> LabelWalk:
    """Winding-number walk of a reduced word: the unique minimal-tangency
    labeling, anchored at 0 heading east at the boundary."""
    model = DiscModel(word.n, word.mode)
    events = _events_of(word)
    label = 0
    gaps: list[tuple[int, ...]] = []
    tangencies = 0
    for k in range(len(events) - 1):
        strand = route_strand(model, events[k], events[k + 1])
        seg = [label]
        for s in strand.turn_signs:
            label += s
            seg.append(label)
        tangencies += len(strand.turn_signs)
        gaps.append(tuple(seg))
        nxt = events[k + 1]
        if nxt.direction is not None and nxt.kind != END:
            even = label % 2 == 0
            if (nxt.direction == E) != even:
                raise AmbiguousMinimalWalk(
                    f"parity violation at letter {k + 1} ({nxt.kind} {nxt.pos})"
                )
    return LabelWalk("winding", tuple(gaps), tangencies, word)


def crossing_sign(model: DiscModel, pos: int, direction: str) -> int:
    """Algebraic sign of a wall crossing: the determinant of (curve
    direction, wall direction)."""
    d = 1 if direction == E else -1
    w = 1 if model.wall_dir(pos) == UP else -1
    return d * w


def wcr_labels(word: CrossingWord) -> LabelWalk:
    """Wall-crossing walk: running algebraic crossing sum."""
    model = DiscModel(word.n, word.mode)
    label = 0
    aligned: list[tuple[int, ...]] = []
    for letter in word.letters[:-1]:
        if letter.kind == WALL:
            label += crossing_sign(model, letter.pos, letter.direction)
        aligned.append((label,))
    return LabelWalk("wallcrossing", tuple(aligned), 0, word)


@dataclasses.dataclass(frozen=True)
class LabelSummary:
    lwin: int
    swin: int
    lwcr: int
    swcr: int
    tangencies: int = 0

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.lwin, self.swin, self.lwcr, self.swcr)

    def as_dict(self) -> dict:
        return {
            "lwin": self.lwin, "swin": self.swin,
            "lwcr": self.lwcr, "swcr": self.swcr,
            "tangencies": self.tangencies,
        }


def summary_of_form(form: CanonicalForm) -> LabelSummary:
    win = win_labels(form.word)
    wcr = wcr_labels(form.word)
    wv = win.dbeta_values()
    cv = wcr.dbeta_values()
    return LabelSummary(max(wv), min(wv), max(cv), min(cv), win.tangency_count)


def label_summary(beta: GroupWord) -> LabelSummary:
    """Extrema of both labelings over the curve diagram of ``beta``."""
    return summary_of_form(canonical_form(beta))
