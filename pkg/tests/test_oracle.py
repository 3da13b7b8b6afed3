import random

import pytest

from digitop.core import DigitalMap, diamond, interval, product_image, pt
from digitop.oracle import (EQUIVALENT, INCONCLUSIVE, SEPARATED,
                            build_class_table, decide_equivalence,
                            enumerate_based_loops, equivalent_bounded,
                            homotopy_step, induced_hom_check, product_join,
                            product_split, random_based_loop, rho_iso_evidence)
from digitop.paths import (constant_loop, cycle_point, generator_loop,
                           make_path, winding_hom)


def dip_loop():
    d = diamond()
    return make_path(d, (pt(1, 0), pt(0, 1), pt(1, 0), pt(0, -1), pt(1, 0)))


def test_homotopy_step_relation():
    d = diamond()
    a = dip_loop()
    b = make_path(d, (pt(1, 0), pt(1, 0), pt(1, 0), pt(0, -1), pt(1, 0)))
    assert homotopy_step(a, b)
    assert not homotopy_step(generator_loop(), constant_loop(d, 4))


def test_search_finds_null_homotopy_and_witness_verifies():
    d = diamond()
    w = equivalent_bounded(dip_loop(), constant_loop(d, 4), max_steps=4000)
    assert w is not None
    assert all(not g.height or g.height == 1 for g in w.grids)


def test_search_cannot_unwind_the_generator():
    d = diamond()
    assert equivalent_bounded(generator_loop(), constant_loop(d, 4),
                              max_factor=2, max_steps=3000) is None


def test_three_valued_verdicts():
    d = diamond()
    assert decide_equivalence(dip_loop(),
                              constant_loop(d, 4)).status == EQUIVALENT
    sep = decide_equivalence(generator_loop(), constant_loop(d, 4),
                             max_steps=100)
    assert sep.status == SEPARATED
    square = product_image(interval(2), interval(2))
    rng = random.Random(3)
    long_a = random_based_loop(square, 6, rng)
    verdict = decide_equivalence(long_a, constant_loop(square, 6), max_steps=1)
    assert verdict.status in (INCONCLUSIVE, EQUIVALENT)


def test_induced_hom_preserves_witnesses():
    d = diamond()
    w = equivalent_bounded(dip_loop(), constant_loop(d, 4), max_steps=4000)
    rot = DigitalMap.of(d, d, {cycle_point(n): cycle_point(n) for n in range(4)})
    assert not induced_hom_check(rot, [w])


def test_product_split_join_roundtrip():
    x, y = diamond(), interval(1)
    prod = product_image(x, y)
    rng = random.Random(5)
    a = random_based_loop(prod, 6, rng)
    ax, ay = product_split(a, x, y)
    assert product_join(ax, ay).steps == a.steps


def test_class_table_of_the_diamond():
    table = build_class_table(diamond(), 4, budget=3000)
    invariants = sorted(c.invariant for c in table.classes)
    assert invariants.count(1) == 1 and invariants.count(-1) == 1
    for cls in table.classes:
        assert all(winding_hom(m) == cls.invariant for m in cls.members)
    total = sum(len(c.members) for c in table.classes)
    assert total == len(enumerate_based_loops(diamond(), 4))


def test_rho_iso_evidence_is_conclusive_on_the_interval():
    report = rho_iso_evidence(interval(2), 2, n_samples=2, seed=3)
    assert report.all_conclusive()
    assert {s.direction for s in report.samples} == {"surjectivity",
                                                     "injectivity"}


def test_rho_iso_rejects_trivial_factor():
    with pytest.raises(ValueError):
        rho_iso_evidence(interval(2), 1)
