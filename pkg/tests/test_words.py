import pytest

from bgarside.words import (
    WordError,
    braid,
    format_word,
    free_reduce,
    identity,
    invert,
    parse_word,
    psi,
    typeb,
    word,
)


def test_parse_basic():
    w = parse_word("s1 s2^-1", typeb(2))
    assert w.letters == ((1, 1), (2, -1))


def test_parse_empty_is_identity():
    assert parse_word("", typeb(2)) == identity(typeb(2))


def test_parse_out_of_range():
    with pytest.raises(WordError):
        parse_word("s4", typeb(3))
    with pytest.raises(WordError):
        parse_word("x1", typeb(2))


def test_roundtrip_with_printer():
    for text in ("s1 s2^-1 s1", "s2 s2 s1^-1", ""):
        w = parse_word(text, typeb(2))
        assert parse_word(format_word(w) if w.letters else "", typeb(2)) == w


def test_free_reduce():
    t = typeb(2)
    assert free_reduce(parse_word("s1 s1^-1 s2", t)) == parse_word("s2", t)
    assert free_reduce(parse_word("s1 s2", t)) == parse_word("s1 s2", t)
    assert free_reduce(parse_word("s1 s2 s2^-1 s1^-1", t)) == identity(t)


def test_free_reduce_idempotent_and_shrinking():
    t = typeb(3)
    import random

    rng = random.Random(7)
    from bgarside.words import random_word

    for _ in range(50):
        w = random_word(t, rng.randrange(0, 9), rng)
        r = free_reduce(w)
        assert free_reduce(r) == r
        assert len(r) <= len(w)


def test_invert():
    t = typeb(2)
    assert invert(parse_word("s1 s2", t)) == parse_word("s2^-1 s1^-1", t)
    assert invert(identity(t)) == identity(t)
    assert invert(parse_word("s1^-1", t)) == parse_word("s1", t)


def test_psi_images():
    assert psi(parse_word("s1", typeb(2))) == parse_word("b2", braid(4))
    assert psi(parse_word("s2", typeb(2))) == parse_word("b3 b1", braid(4))
    assert psi(parse_word("s2^-1", typeb(3))) == parse_word("b2^-1 b4^-1", braid(6))


def test_psi_is_letterwise_homomorphism():
    t = typeb(3)
    u = parse_word("s1 s3^-1", t)
    v = parse_word("s2 s2", t)
    assert psi(u * v).letters == psi(u).letters + psi(v).letters
