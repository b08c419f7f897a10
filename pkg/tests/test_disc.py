from fractions import Fraction

import pytest

from bgarside.disc import (
    DiscModel,
    act,
    apply_homeo,
    base_diagram,
    half_twist,
    _map_det,
)
from bgarside.words import BRAID, braid, parse_word, typeb


def test_base_diagram_n2():
    m = DiscModel(2)
    d = base_diagram(m, completed=False)
    assert d.vertices[0] == (Fraction(-3), Fraction(0))
    assert [m.puncture_x(p) for _, p in d.anchors] == [-2, -1, 1]
    assert len(d.anchors) == 3


def test_base_diagram_n1():
    d = base_diagram(DiscModel(1), completed=False)
    assert d.vertices[0] == (Fraction(-2), Fraction(0))
    assert len(d.anchors) == 2


def test_base_diagram_braid_mode():
    m = DiscModel(2, BRAID)
    d = base_diagram(m)
    assert len(d.anchors) == 4
    assert not d.ends_on_boundary


def test_half_twist_swaps_punctures():
    m = DiscModel(2)
    for j in (1, 2, 3):
        h = half_twist(m, j)
        a, b = m.puncture_point(j), m.puncture_point(j + 1)
        assert h.map_point(a) == b
        assert h.map_point(b) == a
        # all other punctures fixed
        for pos in range(1, 5):
            if pos not in (j, j + 1):
                p = m.puncture_point(pos)
                assert h.map_point(p) == p


def test_half_twist_identity_outside_support():
    m = DiscModel(2)
    h = half_twist(m, 2)
    far = (Fraction(5, 2), Fraction(1, 2))
    assert h.map_point(far) == far


def test_pieces_orientation_positive():
    h = half_twist(DiscModel(2), 2)
    for _, mp in h.pieces:
        assert _map_det(mp) > 0


def test_piece_edges_agree():
    # continuity: shared triangle edges map identically under both pieces
    h = half_twist(DiscModel(1), 1)
    from collections import defaultdict

    edge_maps = defaultdict(list)
    for tri, mp in h.pieces:
        for k in range(3):
            a, b = tri[k], tri[(k + 1) % 3]
            key = tuple(sorted((a, b)))
            edge_maps[key].append(mp)
    from bgarside.disc import _apply_affine

    for (a, b), maps in edge_maps.items():
        if len(maps) < 2:
            continue
        mid = ((a[0] + b[0]) / 2, (a[1] + b[1]) / 2)
        images = {(_apply_affine(mp, a), _apply_affine(mp, b), _apply_affine(mp, mid))
                  for mp in maps}
        assert len(images) == 1


def test_apply_identity_like():
    # a twist applied to a far-away segment leaves it alone
    m = DiscModel(2)
    h = half_twist(m, 1)
    d = base_diagram(m)
    out = apply_homeo(h, d)
    # the east half is untouched by the twist at the far west pair
    assert out.vertices[-1] == d.vertices[-1]


def test_act_identity_word():
    m = DiscModel(2)
    d = act(parse_word("", typeb(2)), m)
    assert d.anchor_positions() == (1, 2, 3, 4)


def test_act_preserves_anchor_count():
    m = DiscModel(2)
    d = act(parse_word("s1 s2^-1", typeb(2)), m)
    assert len(d.anchors) == 4
    # anchors stay on punctures
    for i, pos in d.anchors:
        assert d.vertices[i][1] == 0
        assert d.vertices[i][0] == m.puncture_x(pos)


def test_act_braid_word_in_braid_mode():
    m = DiscModel(2, BRAID)
    d = act(parse_word("b1 b3", braid(4)), m)
    assert len(d.anchors) == 4
