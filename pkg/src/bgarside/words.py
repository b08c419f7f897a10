"""Words in the generators of A(B_n) and of the braid group B_m.

Two word flavours share one representation: a word is a sequence of signed
generator letters over a tagged group.  Type-B words use letters ``s1..sn``,
braid words use ``b1..b(m-1)`` (printed with the generator index, sign as
``^-1``).  The homomorphism into the braid group on 2n strands sends s1 to
the central half twist and s_i (i > 1) to the symmetric pair of half twists
at mirror positions.
"""

from __future__ import annotations

import dataclasses
import random
from typing import Iterable

TYPE_B = "typeB"
BRAID = "braid"


class WordError(ValueError):
    """Raised for malformed word text or out-of-range generator indices."""


@dataclasses.dataclass(frozen=True)
class GroupTag:
    """Which group a word lives in: type-B of rank n, or a braid group on
    ``rank`` strands (so braid generator indices run over 1..rank-1)."""

    kind: str
    rank: int

    def __post_init__(self):
        if self.kind not in (TYPE_B, BRAID):
            raise WordError(f"unknown group kind {self.kind!r}")
        if self.kind == TYPE_B and self.rank < 1:
            raise WordError("type-B rank must be >= 1")
        if self.kind == BRAID and self.rank < 2:
            raise WordError("braid rank (strand count) must be >= 2")

    @property
    def num_generators(self) -> int:
        return self.rank if self.kind == TYPE_B else self.rank - 1

    @property
    def letter_prefix(self) -> str:
        return "s" if self.kind == TYPE_B else "b"


def typeb(n: int) -> GroupTag:
    return GroupTag(TYPE_B, n)


def braid(m: int) -> GroupTag:
    return GroupTag(BRAID, m)


@dataclasses.dataclass(frozen=True)
class GroupWord:
    """A word in signed generators.  ``letters`` is a tuple of (index, sign)
    with sign in {+1, -1}; the empty tuple is the identity."""

    tag: GroupTag
    letters: tuple[tuple[int, int], ...]

    def __post_init__(self):
        for idx, sign in self.letters:
            if not 1 <= idx <= self.tag.num_generators:
                raise WordError(
                    f"generator index {idx} out of range for {self.tag.kind} rank {self.tag.rank}"
                )
            if sign not in (1, -1):
                raise WordError(f"bad sign {sign}")

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "GroupWord") -> "GroupWord":
        if self.tag != other.tag:
            raise WordError("cannot concatenate words over different groups")
        return GroupWord(self.tag, self.letters + other.letters)

    def __pow__(self, k: int) -> "GroupWord":
        base = self if k >= 0 else invert(self)
        return GroupWord(self.tag, base.letters * abs(k))

    def __str__(self) -> str:
        return format_word(self)


def word(tag: GroupTag, letters: Iterable[tuple[int, int]] = ()) -> GroupWord:
    return GroupWord(tag, tuple(letters))


def identity(tag: GroupTag) -> GroupWord:
    return GroupWord(tag, ())


def generator(tag: GroupTag, index: int, sign: int = 1) -> GroupWord:
    return GroupWord(tag, ((index, sign),))


def parse_word(text: str, tag: GroupTag) -> GroupWord:
    """Parse whitespace-separated tokens like ``s1 s2^-1`` (or ``b3`` for
    braid tags).  Round-trips with :func:`format_word`."""
    prefix = tag.letter_prefix
    letters = []
    for token in text.split():
        body, sign = token, 1
        if token.endswith("^-1"):
            body, sign = token[:-3], -1
        if not body.startswith(prefix) or not body[len(prefix):].isdigit():
            raise WordError(f"unknown token {token!r} for {tag.kind} word")
        idx = int(body[len(prefix):])
        if not 1 <= idx <= tag.num_generators:
            raise WordError(f"index out of range in token {token!r}")
        letters.append((idx, sign))
    return GroupWord(tag, tuple(letters))


def format_word(w: GroupWord) -> str:
    prefix = w.tag.letter_prefix
    if not w.letters:
        return "<id>"
    return " ".join(
        f"{prefix}{i}" if s == 1 else f"{prefix}{i}^-1" for i, s in w.letters
    )


def free_reduce(w: GroupWord) -> GroupWord:
    """Cancel adjacent inverse pairs until none remain."""
    out: list[tuple[int, int]] = []
    for letter in w.letters:
        if out and out[-1][0] == letter[0] and out[-1][1] == -letter[1]:
            out.pop()
        else:
            out.append(letter)
    return GroupWord(w.tag, tuple(out))


def invert(w: GroupWord) -> GroupWord:
    return GroupWord(w.tag, tuple((i, -s) for i, s in reversed(w.letters)))


def psi(w: GroupWord) -> GroupWord:
    """Embed a type-B word into the braid group on 2n strands, letterwise.

    s1 maps to the central twist b_n; s_i (i > 1) maps to b_{n+i-1} b_{n-i+1},
    the mirror-symmetric pair of half twists.  Inverse letters map to the
    reversed inverse pair.
    """
    if w.tag.kind != TYPE_B:
        raise WordError("psi expects a type-B word")
    n = w.tag.rank
    target = braid(2 * n)
    letters: list[tuple[int, int]] = []
    for i, s in w.letters:
        if i == 1:
            letters.append((n, s))
        elif s == 1:
            letters.append((n + i - 1, 1))
            letters.append((n - i + 1, 1))
        else:
            letters.append((n - i + 1, -1))
            letters.append((n + i - 1, -1))
    return GroupWord(target, tuple(letters))


def random_word(tag: GroupTag, length: int, rng: random.Random) -> GroupWord:
    """Uniform random freely reduced word of exactly the given length (the
    reduced length may drop below ``length`` only via the trivial word)."""
    letters: list[tuple[int, int]] = []
    alphabet = [(i, s) for i in range(1, tag.num_generators + 1) for s in (1, -1)]
    while len(letters) < length:
        cand = rng.choice(alphabet)
        if letters and letters[-1] == (cand[0], -cand[1]):
            continue
        letters.append(cand)
    return GroupWord(tag, tuple(letters))
