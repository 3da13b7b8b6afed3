import pytest

from digitop.core import (DigitalImage, DigitalMap, adjacent, check_continuity,
                          compose, diamond, interval, is_isomorphism,
                          isomorphism_inverse, neighbours, octagon, pair_maps,
                          product_image, product_projections, pt,
                          symmetric_interval)


def test_adjacency_is_max_metric():
    assert adjacent(pt(0, 0), pt(1, 1))
    assert adjacent(pt(0, 0), pt(0, 0))
    assert not adjacent(pt(0, 0), pt(2, 0))
    assert not adjacent(pt(0, 0, 0), pt(1, 1, 2))
    with pytest.raises(ValueError):
        adjacent(pt(0), pt(0, 0))


def test_diamond_and_octagon_shapes():
    d, c = diamond(), octagon()
    assert len(d) == 4 and len(c) == 8
    assert len(d.adjacent_pairs()) == 4
    assert len(c.adjacent_pairs()) == 8
    assert d.basepoint == pt(1, 0) and c.basepoint == pt(2, 0)


def test_image_canonicalization_and_membership():
    a = DigitalImage.of([pt(1), pt(0), pt(1)], pt(0))
    b = DigitalImage.of([pt(0), pt(1)], pt(0))
    assert a == b
    assert pt(1) in a and pt(2) not in a
    with pytest.raises(ValueError):
        DigitalImage.of([pt(0)], pt(5))
    with pytest.raises(ValueError):
        DigitalImage.of([])


def test_neighbours_include_self():
    i = interval(3)
    assert neighbours(i, pt(0)) == (pt(0), pt(1))
    assert neighbours(i, pt(1)) == (pt(0), pt(1), pt(2))


def test_map_totality_and_codomain_checked():
    i2 = interval(2)
    with pytest.raises(ValueError):
        DigitalMap.of(i2, i2, {pt(0): pt(0)})
    with pytest.raises(ValueError):
        DigitalMap.of(i2, i2, {pt(0): pt(9), pt(1): pt(0), pt(2): pt(0)})


def test_continuity_report_names_offending_pairs():
    i2 = interval(2)
    f = DigitalMap.of(i2, i2, {pt(0): pt(0), pt(1): pt(2), pt(2): pt(0)})
    bad = check_continuity(f)
    assert (pt(0), pt(1)) in bad and (pt(1), pt(2)) in bad


def test_compose_and_identity():
    i2 = interval(2)
    f = DigitalMap.of(i2, i2, {pt(0): pt(1), pt(1): pt(1), pt(2): pt(1)})
    assert compose(DigitalMap.identity(i2), f).table == f.table
    assert compose(f, DigitalMap.identity(i2)).table == f.table


def test_isomorphism_inverse():
    s = symmetric_interval(1)
    flip = DigitalMap.of(s, s, {p: pt(-p.coords[0]) for p in s})
    inv = isomorphism_inverse(flip)
    assert inv is not None and compose(inv, flip).table == DigitalMap.identity(s).table
    squash = DigitalMap.constant(s, s, pt(0))
    assert not is_isomorphism(squash)


def test_products_and_projections():
    prod = product_image(interval(1), interval(2))
    assert len(prod) == 6 and prod.basepoint == pt(0, 0)
    p1, p2 = product_projections(interval(1), interval(2))
    assert p1(pt(1, 2)) == pt(1) and p2(pt(1, 2)) == pt(2)
    paired = pair_maps(p1, p2)
    assert all(paired(p) == p for p in prod)
