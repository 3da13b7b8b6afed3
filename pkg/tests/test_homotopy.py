import pytest

from digitop.core import DigitalMap, diamond, interval, pt
from digitop.fixtures import graph_product_contraction_grid
from digitop.homotopy import (EquivalenceWitness, HomotopyGrid, OF_BASED_LOOPS,
                              OF_MAPS, REL_ENDPOINTS, cube_contraction,
                              flip_vertical, inverse_homotopy, lengthen,
                              push_homotopy, pull_reparam, reparam_homotopy,
                              side_concat, stack, verify_grid, verify_witness,
                              whisker)
from digitop.paths import (concat, constant_loop, constant_path, generator_loop,
                           make_path, reparam, reverse)


def small_loop():
    return make_path(diamond(), (pt(1, 0), pt(0, 1), pt(1, 0)))


def test_grid_kind_rules():
    d = diamond()
    rows = ((pt(1, 0), pt(0, 1), pt(1, 0)),) * 2
    assert not verify_grid(HomotopyGrid(d, rows, OF_BASED_LOOPS))
    broken = ((pt(0, 1), pt(1, 0), pt(0, 1)),) * 2
    report = verify_grid(HomotopyGrid(d, broken, OF_BASED_LOOPS))
    assert any("basepoint" in line for line in report)


def test_joint_continuity_checks_diagonals():
    d = diamond()
    rows = (
        (pt(1, 0), pt(0, 1), pt(1, 0)),
        (pt(1, 0), pt(0, -1), pt(1, 0)),
    )
    report = verify_grid(HomotopyGrid(d, rows, OF_BASED_LOOPS))
    assert any("joint continuity" in line for line in report)


def test_graph_product_contraction_is_rejected():
    assert verify_grid(graph_product_contraction_grid())


def test_reparam_homotopy_rows():
    a = small_loop()
    grid = reparam_homotopy(a, 2)
    assert not verify_grid(grid)
    assert grid.rows[0] == reparam(a, 2).steps
    tail = constant_path(pt(1, 0), a.length, a.target)
    assert grid.rows[-1] == concat(a, tail).steps
    left = reparam_homotopy(a, 2, "left")
    assert not verify_grid(left)
    assert left.rows[-1] == concat(tail, a).steps


def test_inverse_homotopy_forms():
    g = make_path(interval(2), (pt(0), pt(1), pt(2)))
    dot = inverse_homotopy(g, "dot")
    star = inverse_homotopy(g, "star")
    assert (dot.width, dot.height) == (5, 2)
    assert (star.width, star.height) == (4, 2)
    for grid in (dot, star):
        assert grid.kind == REL_ENDPOINTS
        assert not verify_grid(grid)
        assert grid.rows[-1] == (pt(0),) * (grid.width + 1)


def test_cube_contraction_modes():
    zero_m = cube_contraction(3, "interval-0M")
    sym = cube_contraction(3, "interval-symmetric")
    assert zero_m.kind == OF_MAPS and sym.kind == OF_MAPS
    assert not verify_grid(zero_m) and not verify_grid(sym)
    assert zero_m.rows[-1] == (pt(0),) * 4
    assert sym.rows[-1] == (pt(0),) * 7


def test_stack_modes_and_errors():
    a = small_loop()
    h = reparam_homotopy(a, 2)
    seq = stack(h, flip_vertical(h), "sequential")
    assert seq.height == 2 * h.height
    with pytest.raises(ValueError):
        stack(h, flip_vertical(h), "shared-bottom")
    shared = stack(h, h, "shared-bottom")
    assert shared.rows[0] == h.rows[-1] and shared.rows[-1] == h.rows[-1]


def test_side_concat_lengthens_the_shorter_grid():
    a, g = small_loop(), generator_loop()
    h1 = reparam_homotopy(a, 2)
    h2 = reparam_homotopy(g, 2)
    joined = side_concat(h1, h2)
    assert joined.height == max(h1.height, h2.height)
    assert not verify_grid(joined)


def test_whisker_rebases_at_the_strip_start():
    d = diamond()
    shifted = d.with_basepoint(pt(0, 1))
    a = make_path(shifted, (pt(0, 1), pt(-1, 0), pt(0, 1)))
    h = reparam_homotopy(a, 2)
    gamma = make_path(d, (pt(1, 0), pt(0, 1)))
    out = whisker(gamma, h, reverse(gamma))
    assert out.kind == OF_BASED_LOOPS
    assert out.target.basepoint == pt(1, 0)
    assert not verify_grid(out)


def test_push_and_pull():
    a = small_loop()
    h = reparam_homotopy(a, 2)
    pushed = push_homotopy(DigitalMap.identity(a.target), h)
    assert pushed.rows == h.rows
    pulled = pull_reparam(h, 2)
    assert pulled.width == 2 * (h.width + 1) - 1
    assert not verify_grid(pulled)


def test_witness_verification_catches_bad_factors():
    a = small_loop()
    w = EquivalenceWitness(a, a, 1, 2, ())
    assert verify_witness(w)
    ok = EquivalenceWitness(a, a, 1, 1, ())
    assert not verify_witness(ok)


def test_witness_with_grid_round():
    a = small_loop()
    tail = constant_loop(a.target, a.length)
    w = EquivalenceWitness(concat(a, tail), a, 1, 2,
                           (flip_vertical(reparam_homotopy(a, 2)),))
    assert not verify_witness(w)
