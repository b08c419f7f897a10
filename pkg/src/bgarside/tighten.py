"""Full tightening of crossing words.

Adjacent inverse wall-letter pairs always cancel (their bigon is empty
because punctures sit at wall endpoints, never inside).  The remaining slack
left by the piecewise-affine kernel consists of crossings that hug a puncture
the curve itself passes through: a crossing of wall i adjacent to the passage
letter of puncture i is a loop pinned at that puncture, contractible exactly
when it is innermost — nothing else comes closer to the tip on either side of
its line, and removing it leaves an embeddable word.  Innermostness is read
off the canonical drawing's along-line orders; embeddability of the candidate
is certified by laying the shorter word out again.  Passage travel directions
survive contraction untouched.
"""

from __future__ import annotations

from .disc import GeometryError
from .crossings import PASS, TERMINAL, WALL, CrossingWord, reduce_word


def _local_strands(tip_index: int, cross_index: int) -> set[int]:
    return {tip_index - 1, tip_index, cross_index - 1, cross_index}


def _remove(word: CrossingWord, idxs: tuple[int, ...]) -> CrossingWord:
    letters = tuple(l for i, l in enumerate(word.letters) if i not in idxs)
    return reduce_word(CrossingWord(letters, word.n, word.mode, word.completed))


def _contract_once(word: CrossingWord) -> CrossingWord | None:
    """One innermost tip-hugging loop removed, or None if tight.

    Candidates are crossings of wall i word-adjacent to the passage (or
    terminal) letter of puncture i: full sandwiches contract both flanking
    crossings as one pinned loop; lone neighbours contract singly.  A
    candidate fires only if its crossings are the nearest to the tip on the
    wall side, the nearest gap passage belongs to the loop itself, and the
    shortened word still embeds.
    """
    from .layout import layout

    letters = word.letters
    candidates: list[tuple[int, tuple[int, ...]]] = []  # (tip letter, removals)
    for i in range(len(letters)):
        if letters[i].kind not in (PASS, TERMINAL):
            continue
        pos = letters[i].pos
        before = i - 1 if i > 0 and letters[i - 1].kind == WALL and letters[i - 1].pos == pos else None
        after = i + 1 if i + 1 < len(letters) and letters[i + 1].kind == WALL and letters[i + 1].pos == pos else None
        if before is not None and after is not None:
            candidates.append((i, (before, after)))
        if before is not None:
            candidates.append((i, (before,)))
        if after is not None:
            candidates.append((i, (after,)))
    if not candidates:
        return None
    # completed type-B diagrams are r-symmetric: contract in mirror pairs
    symmetric = word.mode == "typeB" and word.completed
    m = len(letters) - 1  # END index; mirror of letter i is m - i

    drawing = layout(word)
    for tip_idx, removals in candidates:
        line = letters[removals[0]].pos
        walls = drawing.tipward_order(line, "wall")
        if len(walls) < len(removals):
            continue
        nearest = {p.letter_index for p in walls[:len(removals)]}
        if nearest != set(removals):
            continue
        local = set()
        for r in removals:
            local |= _local_strands(tip_idx, r)
        gaps = drawing.tipward_order(line, "gap")
        if gaps and gaps[0].strand not in local:
            continue
        full_removals = set(removals)
        if symmetric:
            full_removals |= {m - r for r in removals}
        shorter = _remove(word, tuple(full_removals))
        try:
            layout(shorter)
        except GeometryError:
            continue
        return shorter
    return None


def tighten(word: CrossingWord) -> CrossingWord:
    """Reduce a crossing word to minimal position."""
    word = reduce_word(word)
    while True:
        shorter = _contract_once(word)
        if shorter is None:
            return word
        word = shorter
