import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from digitop.core import DigitalMap, diamond, interval, pt
from digitop.paths import (LatticeLoop, concat, constant_loop, cycle_point,
                           generator_loop, lift_loop_D, make_path, power_loop,
                           push, reparam, reverse, short_concat, winding,
                           winding_hom)


def test_path_validation():
    i2 = interval(2)
    with pytest.raises(ValueError):
        make_path(i2, (pt(0), pt(2)))
    with pytest.raises(ValueError):
        make_path(i2, (pt(0), pt(3)))
    with pytest.raises(ValueError):
        make_path(i2, ())


def test_loop_promotion():
    d = diamond()
    assert isinstance(make_path(d, (pt(1, 0), pt(0, 1), pt(1, 0))), LatticeLoop)
    open_path = make_path(d, (pt(1, 0), pt(0, 1)))
    assert not isinstance(open_path, LatticeLoop)


def test_concat_keeps_the_pause():
    d = diamond()
    g = generator_loop()
    both = concat(g, g)
    assert both.length == 9
    assert both.steps[4] == both.steps[5] == pt(1, 0)
    short = short_concat(g, g)
    assert short.length == 8


def test_reparam_repeats_each_point():
    i2 = interval(2)
    a = make_path(i2, (pt(0), pt(1), pt(2)))
    assert reparam(a, 2).steps == (pt(0), pt(0), pt(1), pt(1), pt(2), pt(2))
    assert reparam(a, 1).steps == a.steps


def test_push_through_map():
    d = diamond()
    rot = DigitalMap.of(d, d, {cycle_point(n): cycle_point(n + 1) for n in range(4)})
    pushed = push(rot, generator_loop())
    assert pushed.steps[0] == pt(0, 1)


def test_lift_and_winding_oracles():
    g = generator_loop()
    assert lift_loop_D(g).lift == (0, 1, 2, 3, 4)
    assert winding(g) == 4 and winding_hom(g) == 1
    assert winding(constant_loop(diamond(), 3)) == 0
    assert winding(concat(g, reverse(g))) == 0


def test_lift_independent_of_starting_sheet():
    g = generator_loop()
    assert lift_loop_D(g, 4).winding == lift_loop_D(g, 0).winding


def test_winding_rejects_foreign_targets():
    with pytest.raises(ValueError):
        winding(make_path(interval(1), (pt(0), pt(1))))


@given(st.integers(min_value=-3, max_value=3))
@settings(max_examples=7, deadline=None)
def test_power_loops_realize_every_integer(n):
    assert winding_hom(power_loop(n)) == n


def test_winding_negates_under_reversal():
    for n in (-2, 1, 3):
        a = power_loop(n)
        rev = reverse(a)
        assert isinstance(rev, LatticeLoop)
        assert winding_hom(rev) == -n
