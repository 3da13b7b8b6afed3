import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from digitop.core import DigitalImage, diamond, interval, product_image, pt
from digitop.subdivision import (block, block_centre, canonical_basepoint,
                                 floor_divide, rho_partial, subdivide)


def test_interval_subdivision_matches_closed_form():
    for n in range(4):
        for k in range(1, 5):
            sub = subdivide(interval(n), k, keep_origin_basepoint=True)
            assert sub.image.points == interval(n * k + k - 1).points
    assert subdivide(DigitalImage.of([pt(0)], pt(0)), 4,
                     keep_origin_basepoint=True).image.points == interval(3).points


def test_factor_one_is_identity():
    d = diamond()
    sub = subdivide(d, 1)
    assert sub.image == d
    assert sub.projection.table == tuple((p, p) for p in d)


@given(st.integers(min_value=1, max_value=4))
@settings(max_examples=10, deadline=None)
def test_cardinality_is_exact(k):
    square = product_image(interval(1), interval(2))
    assert len(subdivide(square, k).image) == (k ** 2) * len(square)


def test_block_and_centre():
    assert block(pt(2), 3) == {pt(6), pt(7), pt(8)}
    assert block_centre(pt(1, -1), 3) == pt(4, -2)
    with pytest.raises(ValueError):
        block_centre(pt(0), 2)


def test_canonical_basepoint_parity():
    assert canonical_basepoint(pt(1, 0), 3) == pt(4, 1)
    assert canonical_basepoint(pt(1, 0), 2) == pt(2, 0)
    assert canonical_basepoint(pt(0), 5) == pt(2)
    assert canonical_basepoint(pt(0), 4) == pt(1)


def test_projection_is_floor_divide():
    sub = subdivide(diamond(), 2)
    assert all(sub.projection(p) == floor_divide(p, 2) for p in sub.image)
    assert sub.image.basepoint == pt(2, 0)


def test_partial_projection_factors_the_full_one():
    for k in (3, 4):
        base = diamond()
        fine = subdivide(base, k)
        coarse = subdivide(base, k - 1)
        partial = rho_partial(base, k)
        for p in fine.image:
            assert coarse.projection(partial(p)) == fine.projection(p)
        assert partial(fine.image.basepoint) == coarse.image.basepoint


def test_partial_projection_needs_k_at_least_three():
    with pytest.raises(ValueError):
        rho_partial(diamond(), 2)
