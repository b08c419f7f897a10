import random

import pytest

from bgarside.crossings import canonical_form
from bgarside.labels import label_summary, summary_of_form, wcr_labels, win_labels
from bgarside.words import braid, identity, parse_word, random_word, typeb


def tb(text, n):
    return parse_word(text, typeb(n))


def test_identity_summary_zero():
    for n in (1, 2, 3):
        s = label_summary(identity(typeb(n)))
        assert s.as_tuple() == (0, 0, 0, 0)
        assert s.tangencies == 0


def test_delta_n1():
    # s1 is the half rotation for n=1: every diagram label equals 1
    s = label_summary(tb("s1", 1))
    assert s.as_tuple() == (1, 1, 1, 1)


def test_delta_inverse_n1():
    s = label_summary(tb("s1^-1", 1))
    assert s.as_tuple() == (-1, -1, -1, -1)


def test_delta_squared_n1():
    s = label_summary(tb("s1 s1", 1))
    assert s.as_tuple() == (2, 2, 2, 2)


def test_powers_n1():
    for k in range(-3, 4):
        text = " ".join(["s1"] * k) if k >= 0 else " ".join(["s1^-1"] * (-k))
        s = label_summary(tb(text, 1))
        assert s.as_tuple() == (k, k, k, k), k


def test_s1_n2():
    s = label_summary(tb("s1", 2))
    assert s.as_tuple() == (1, 0, 1, 0)


def test_paper_example_labels():
    # the running example: beta = s1^-1 s2 s1 at n = 2
    s = label_summary(tb("s1^-1 s2 s1", 2))
    assert s.as_tuple() == (1, -1, 1, 0)


def test_delta_n2_all_ones():
    s = label_summary(tb("s1 s2 s1 s2", 2))
    assert s.as_tuple() == (1, 1, 2, 2)


def test_win_parity_sound():
    # every wall letter's winding label parity matches its direction
    rng = random.Random(5)
    from bgarside.crossings import WALL, E

    for _ in range(12):
        w = random_word(typeb(2), rng.randrange(1, 5), rng)
        form = canonical_form(w)
        walk = win_labels(form.word)
        for i, letter in enumerate(form.word.letters):
            if letter.kind == WALL:
                lab = walk.event_label(i)
                assert (lab % 2 == 0) == (letter.direction == E)


def test_labels_r_symmetric():
    # the two halves of the completed walk mirror each other
    rng = random.Random(9)
    for _ in range(10):
        w = random_word(typeb(2), rng.randrange(0, 5), rng)
        form = canonical_form(w)
        for walk in (win_labels(form.word), wcr_labels(form.word)):
            flat = [v for seg in walk.gap_labels for v in seg]
            assert flat == flat[::-1]


def test_braid_mode_generator_labels():
    # calibration: each braid generator has LWin = LWcr = 1, SWin = SWcr = 0
    for m, idx in ((4, 1), (4, 2), (4, 3)):
        s = label_summary(parse_word(f"b{idx}", braid(m)))
        assert s.lwin == 1 and s.lwcr == 1
        assert s.swin == 0 and s.swcr == 0
