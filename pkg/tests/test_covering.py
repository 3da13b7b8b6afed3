import pytest

from digitop.core import diamond, pt
from digitop.covering import (beta_loop, centre_path, centring, centring_iter,
                              cover_2d_edges, cover_coordinate,
                              homotopy_beta_vs_cover, homotopy_beta_vs_reparam,
                              homotopy_cover_vs_reparam, standard_cover)
from digitop.homotopy import reparam_homotopy, verify_grid
from digitop.paths import generator_loop, make_path, push, reparam
from digitop.subdivision import subdivide


def sub_loop():
    sub = subdivide(diamond(), 3)
    return make_path(sub.image, (pt(4, 1), pt(3, 2), pt(4, 1)))


def test_centring_moves_toward_the_centre():
    assert [centring(r, 2) for r in range(5)] == [1, 2, 2, 2, 3]
    assert centring_iter(0, 2, 2) == 2
    with pytest.raises(ValueError):
        centring(5, 2)


def test_centre_path_of_the_basepoint_is_constant():
    sub = subdivide(diamond(), 3)
    g = centre_path(pt(4, 1), 1, sub.image)
    assert g.steps == (pt(4, 1), pt(4, 1))
    g2 = centre_path(pt(3, 2), 1, sub.image)
    assert g2.steps == (pt(3, 2), pt(4, 1))


def test_beta_loop_frozen_example():
    beta = beta_loop(sub_loop(), 1)
    assert beta.steps == (
        pt(4, 1), pt(4, 1), pt(4, 1), pt(3, 2), pt(4, 1),
        pt(3, 2), pt(4, 1), pt(4, 1), pt(4, 1),
    )


def test_standard_cover_of_the_generator():
    sc = standard_cover(generator_loop(), 3)
    assert sc.cover.steps == (
        pt(4, 1), pt(4, 1), pt(3, 2), pt(2, 3), pt(1, 4), pt(0, 3),
        pt(-1, 2), pt(-2, 1), pt(-1, 0), pt(0, -1), pt(1, -2), pt(2, -1),
        pt(3, 0), pt(4, 1), pt(4, 1),
    )
    pushed = push(sc.subdivision.projection, sc.cover)
    assert pushed.steps == reparam(generator_loop(), 3).steps


def test_cover_coordinate_cases():
    assert [cover_coordinate(0, 1, 2, 0, s, 1) for s in range(4)] == [1, 2, 3, 4]
    assert [cover_coordinate(1, 0, 0, 2, s, 1) for s in range(4)] == [4, 3, 2, 1]
    assert [cover_coordinate(1, 1, 0, 0, s, 1) for s in range(4)] == [4, 4, 4, 4]
    with pytest.raises(ValueError):
        cover_coordinate(0, 2, 0, 0, 0, 1)


def test_cover_grids_verify_and_chain():
    a = sub_loop()
    h = homotopy_beta_vs_reparam(a, 1)
    g = homotopy_beta_vs_cover(a, 1)
    chain = homotopy_cover_vs_reparam(a, 1)
    for grid in (h, g, chain):
        assert not verify_grid(grid)
    assert chain.rows[0] == reparam(a, 3).steps
    assert chain.rows[-1] == g.rows[-1]


def test_cover_edges_of_a_grid():
    a = sub_loop()
    edges = cover_2d_edges(reparam_homotopy(a, 2), 3)
    assert edges.bottom.steps[0] == edges.left.steps[0]
    assert edges.top.steps[0] == edges.left.steps[-1]
