"""Named verification suites shared by the CLI and the acceptance tests.

Each check returns a list of failure strings; an empty list is a pass.
"""

from __future__ import annotations

import random
from typing import Callable, Dict, List, Optional, Tuple

from .core import (DigitalImage, DigitalMap, Point, check_continuity,
                   compose, diamond, interval, neighbours, product_image, pt)
from .covering import (cover_coordinate, homotopy_beta_vs_cover,
                       homotopy_beta_vs_reparam, homotopy_cover_vs_reparam,
                       standard_cover)
from .fixtures import (arc_contraction, graph_product_contraction_grid,
                       census_based_maps_d_to_c, dc_equivalence_data,
                       map_f, map_g, map_gprime)
from .homotopy import (EquivalenceWitness, OF_BASED_LOOPS, cube_contraction,
                       flip_vertical, inverse_homotopy, lengthen,
                       reparam_homotopy, side_concat, stack,
                       verify_grid, verify_map_homotopy,
                       verify_subdivision_equivalence, verify_witness, whisker)
from .oracle import (SEPARATED, decide_equivalence, product_join,
                     product_split, random_based_loop, rho_iso_evidence)
from .paths import (LatticeLoop, LatticePath, concat, constant_loop,
                    constant_path, make_path, power_loop, reparam, reverse,
                    winding, winding_hom)
from .subdivision import canonical_basepoint, rho_partial, subdivide

Check = Callable[[], List[str]]


def _random_image(rng: random.Random, dim: int, size: int = 10) -> DigitalImage:
    """A small connected random image grown by an adjacency walk from the origin."""

    origin = Point((0,) * dim)
    points = {origin}
    cur = origin
    for _ in range(size):
        cur = Point(tuple(c + rng.randint(-1, 1) for c in cur.coords))
        points.add(cur)
        if rng.random() < 0.3:
            cur = rng.choice(sorted(points))
    return DigitalImage.of(points, origin)


def _random_path(rng: random.Random, image: DigitalImage,
                 length: int) -> LatticePath:
    steps = [rng.choice(image.points)]
    for _ in range(length):
        steps.append(rng.choice(neighbours(image, steps[-1])))
    return make_path(image, tuple(steps))


def check_winding_homomorphism() -> List[str]:
    rng = random.Random(101)
    d = diamond()
    bad = []
    for i in range(200):
        a = random_based_loop(d, rng.randint(2, 8), rng)
        b = random_based_loop(d, rng.randint(2, 8), rng)
        if winding_hom(concat(a, b)) != winding_hom(a) + winding_hom(b):
            bad.append(f"pair {i}: h not additive")
    return bad


def check_winding_powers() -> List[str]:
    return [
        f"power {n}: h = {winding_hom(power_loop(n))}"
        for n in range(-3, 4)
        if winding_hom(power_loop(n)) != n
    ]


def check_winding_step_invariance() -> List[str]:
    rng = random.Random(102)
    d = diamond()
    bad = []
    trace: List[Tuple[Tuple[Point, ...], Tuple[Point, ...]]] = []
    dip = make_path(d, (pt(1, 0), pt(0, 1), pt(1, 0), pt(0, -1), pt(1, 0)))
    assert isinstance(dip, LatticeLoop)
    decide_equivalence(dip, constant_loop(d, 4), max_factor=1,
                       max_steps=1500, trace=trace)
    for _ in range(6):
        a = random_based_loop(d, 4, rng)
        b = random_based_loop(d, 4, rng)
        decide_equivalence(a, b, max_factor=1, max_steps=1500, trace=trace)
    if not trace:
        return ["no search steps were exercised"]
    for s1, s2 in trace:
        w1 = winding(make_path(d, s1))
        w2 = winding(make_path(d, s2))
        if w1 != w2:
            bad.append(f"step changed winding: {w1} -> {w2}")
    return bad


def check_winding_separates_generator() -> List[str]:
    d = diamond()
    gen = power_loop(1)
    const = constant_loop(d, 4)
    bad = []
    if winding(gen) != 4 or winding(const) != 0:
        bad.append("generator/constant windings are not 4 and 0")
    verdict = decide_equivalence(gen, const, max_factor=2, max_steps=4000)
    if verdict.status != SEPARATED:
        bad.append(f"expected separation by winding, got {verdict.status}")
    return bad


def _loop_in(rng: random.Random, image: DigitalImage,
             max_len: int) -> LatticeLoop:
    return random_based_loop(image, rng.randint(2, max_len), rng)


def check_reparam_homotopy() -> List[str]:
    rng = random.Random(201)
    bad = []
    for i in range(100):
        image = _random_image(rng, rng.randint(1, 3))
        a = _loop_in(rng, image, 12)
        k = rng.randint(2, 4)
        side = rng.choice(["right", "left"])
        grid = reparam_homotopy(a, k, side)
        bad.extend(f"case {i}: {v}" for v in verify_grid(grid))
        coarse = reparam(a, k - 1)
        tail = constant_path(image.require_based(), a.length, image)
        want = (concat(coarse, tail) if side == "right"
                else concat(tail, coarse)).steps
        if grid.rows[-1] != want:
            bad.append(f"case {i}: top row mismatch ({side})")
        if grid.rows[0] != reparam(a, k).steps:
            bad.append(f"case {i}: bottom row mismatch")
    return bad


def check_inverse_homotopy() -> List[str]:
    rng = random.Random(202)
    bad = []
    for i in range(100):
        image = _random_image(rng, rng.randint(1, 3))
        g = _random_path(rng, image, rng.randint(0, 12))
        for form in ("dot", "star"):
            grid = inverse_homotopy(g, form)
            bad.extend(f"case {i} {form}: {v}" for v in verify_grid(grid))
            if grid.rows[-1] != (g.start,) * (grid.width + 1):
                bad.append(f"case {i} {form}: top row not constant")
    return bad


def check_cube_contraction() -> List[str]:
    bad = []
    for m in range(50):
        for mode in ("interval-0M", "interval-symmetric"):
            grid = cube_contraction(m, mode)
            bad.extend(f"M={m} {mode}: {v}" for v in verify_grid(grid))
            col0 = grid.width // 2 if mode == "interval-symmetric" else 0
            if any(row[col0] != pt(0) for row in grid.rows):
                bad.append(f"M={m} {mode}: contraction moves the basepoint")
            if grid.rows[-1] != (pt(0),) * (grid.width + 1):
                bad.append(f"M={m} {mode}: top row not constant at 0")
    return bad


def check_whisker() -> List[str]:
    rng = random.Random(203)
    bad = []
    for i in range(100):
        image = _random_image(rng, rng.randint(1, 3))
        walk = _random_path(rng, image, rng.randint(0, 4))
        y0, y0p = walk.start, walk.end
        based = image.with_basepoint(y0)
        shifted = image.with_basepoint(y0p)
        gamma = make_path(based, walk.steps)
        a = random_based_loop(shifted, rng.randint(2, 8), rng)
        h = reparam_homotopy(a, rng.randint(2, 3))
        grid = whisker(gamma, h, reverse(gamma))
        bad.extend(f"case {i}: {v}" for v in verify_grid(grid))
        if grid.target.basepoint != y0 or grid.kind != OF_BASED_LOOPS:
            bad.append(f"case {i}: result not a based-loop homotopy at {y0}")
    return bad


def check_side_concat() -> List[str]:
    rng = random.Random(204)
    bad = []
    for i in range(100):
        image = _random_image(rng, rng.randint(1, 3))
        a = _loop_in(rng, image, 8)
        b = _loop_in(rng, image, 8)
        h = reparam_homotopy(a, rng.randint(2, 4))
        g = reparam_homotopy(b, rng.randint(2, 4))
        joined = side_concat(h, g)
        bad.extend(f"case {i}: {v}" for v in verify_grid(joined))
        top = max(h.height, g.height)
        if joined.rows[0] != lengthen(h, top).rows[0] + lengthen(g, top).rows[0]:
            bad.append(f"case {i}: bottom row is not the rowwise concatenation")
    return bad


def check_stack() -> List[str]:
    rng = random.Random(205)
    bad = []
    for i in range(100):
        image = _random_image(rng, rng.randint(1, 3))
        a = _loop_in(rng, image, 8)
        h = reparam_homotopy(a, rng.randint(2, 4))
        up_down = stack(h, flip_vertical(h), "sequential")
        bad.extend(f"case {i} seq: {v}" for v in verify_grid(up_down))
        if up_down.rows[0] != up_down.rows[-1]:
            bad.append(f"case {i}: round trip should return to the bottom row")
        vee = stack(h, h, "shared-bottom")
        bad.extend(f"case {i} shared: {v}" for v in verify_grid(vee))
        if vee.rows[0] != h.rows[-1] or vee.rows[-1] != h.rows[-1]:
            bad.append(f"case {i}: shared-bottom ends are not both tops")
    return bad


def _subdivision_loop(rng: random.Random, kappa: int,
                      max_len: int = 8) -> LatticeLoop:
    base = _random_image(rng, rng.randint(1, 2), size=6)
    sub = subdivide(base, 2 * kappa + 1)
    return random_based_loop(sub.image, rng.randint(2, max_len), rng)


def check_beta_vs_reparam() -> List[str]:
    rng = random.Random(206)
    bad = []
    for i in range(100):
        kappa = rng.choice([1, 2])
        a = _subdivision_loop(rng, kappa)
        grid = homotopy_beta_vs_reparam(a, kappa)
        bad.extend(f"case {i}: {v}" for v in verify_grid(grid))
    return bad


def check_beta_vs_cover() -> List[str]:
    rng = random.Random(207)
    bad = []
    for i in range(100):
        kappa = rng.choice([1, 2])
        a = _subdivision_loop(rng, kappa)
        grid = homotopy_beta_vs_cover(a, kappa)
        bad.extend(f"case {i}: {v}" for v in verify_grid(grid))
    return bad


def check_cover_vs_reparam() -> List[str]:
    rng = random.Random(208)
    bad = []
    for i in range(100):
        kappa = rng.choice([1, 2])
        a = _subdivision_loop(rng, kappa)
        grid = homotopy_cover_vs_reparam(a, kappa)
        bad.extend(f"case {i}: {v}" for v in verify_grid(grid))
        if grid.rows[0] != reparam(a, 2 * kappa + 1).steps:
            bad.append(f"case {i}: bottom is not the reparametrized loop")
    return bad


def check_algebra_laws() -> List[str]:
    rng = random.Random(301)
    bad = []
    for i in range(50):
        image = _random_image(rng, rng.randint(1, 3))
        a = _loop_in(rng, image, 8)
        b = _loop_in(rng, image, 8)
        c = _loop_in(rng, image, 8)
        k = rng.randint(1, 4)
        if reparam(concat(a, b), k).steps != concat(reparam(a, k), reparam(b, k)).steps:
            bad.append(f"case {i}: reparam does not distribute over concat")
        if concat(concat(a, b), c).steps != concat(a, concat(b, c)).steps:
            bad.append(f"case {i}: concatenation not associative")
    for i in range(20):
        image = _random_image(rng, rng.randint(1, 3), size=6)
        p, q = rng.randint(1, 3), rng.randint(1, 3)
        fine = subdivide(image, p * q)
        mid = subdivide(image, q)
        rho_pq = dict(fine.projection.table)
        two_step = {
            x: mid.projection(Point(tuple(c // p for c in x.coords)))
            for x in fine.image
        }
        if rho_pq != two_step:
            bad.append(f"case {i}: rho_pq != rho_p after rho_q")
    for k in range(3, 7):
        for i in range(5):
            image = _random_image(rng, rng.randint(1, 3), size=5)
            fine = subdivide(image, k)
            partial = rho_partial(image, k)
            coarse = subdivide(image, k - 1)
            left = {x: fine.projection.mapping[x] for x in fine.image}
            right = {
                x: coarse.projection.mapping[partial.mapping[x]]
                for x in fine.image
            }
            if left != right:
                bad.append(f"k={k} case {i}: rho_k != rho_(k-1) after partial")
            y0 = canonical_basepoint(image.require_based(), k)
            if partial.mapping[y0] != canonical_basepoint(image.require_based(), k - 1):
                bad.append(f"k={k}: partial projection moves the basepoint")
    for m in range(0, 6):
        for n in range(0, 6):
            cm = constant_loop(interval(0), m)
            cn = constant_loop(interval(0), n)
            big = constant_loop(interval(0), m * n + m + n)
            if reparam(cm, n + 1).steps != big.steps or \
                    reparam(cn, m + 1).steps != big.steps:
                bad.append(f"constant loops: M={m}, N={n} reparametrization")
    return bad


def check_cover_square() -> List[str]:
    rng = random.Random(401)
    bad = []
    for i in range(200):
        image = _random_image(rng, rng.randint(1, 3), size=6)
        path = _random_path(rng, image, rng.randint(0, 8))
        odd = rng.choice([3, 5])
        sc = standard_cover(path, odd)
        if (tuple(sc.subdivision.projection(p) for p in sc.cover.steps)
                != reparam(path, odd).steps):
            bad.append(f"case {i}: cover square fails")
        k = odd // 2
        for gap in range(path.length):
            x, x2 = path.steps[gap], path.steps[gap + 1]
            for s in range(odd + 1):
                got = sc.cover.steps[odd * gap + k + s]
                want = Point(tuple(
                    cover_coordinate(x.coords[j], x2.coords[j], 0, 0, s, k)
                    for j in range(image.dim)))
                if got != want:
                    bad.append(f"case {i}: closed form differs at gap {gap}, s={s}")
                    break
    for i in range(20):
        base = _random_image(rng, rng.randint(1, 2), size=6)
        odd = rng.choice([3, 5])
        k = odd // 2
        sub = subdivide(base, odd)
        loop = random_based_loop(sub.image, rng.randint(2, 6), rng)
        if loop.start != sub.image.basepoint:
            bad.append(f"loop case {i}: cover-source loop not centred")
        cov = standard_cover(loop, odd)
        if cov.cover.steps[0] != cov.subdivision.image.basepoint:
            bad.append(f"loop case {i}: cover not based at the centre")
        for gap in range(loop.length):
            p, p2 = loop.steps[gap], loop.steps[gap + 1]
            for j in range(p.dim):
                x, x2 = p.coords[j] // odd, p2.coords[j] // odd
                r, r2 = p.coords[j] - odd * x, p2.coords[j] - odd * x2
                if x2 - x == 1 and (r, r2) != (2 * k, 0):
                    bad.append(f"loop case {i}: +1 residues not forced")
                if x2 - x == -1 and (r, r2) != (0, 2 * k):
                    bad.append(f"loop case {i}: -1 residues not forced")
    return bad


def check_dc_example() -> List[str]:
    bad = []
    f, g, gp = map_f(), map_g(), map_gprime()
    for name, h in (("f", f), ("g", g), ("g'", gp)):
        if check_continuity(h):
            bad.append(f"{name} is not continuous")
    octagon = f.codomain
    if compose(f, gp).table != DigitalMap.identity(octagon).table:
        bad.append("f after g' is not the identity")
    rho2 = subdivide(g.codomain, 2).projection
    if compose(g, f).table != rho2.table:
        bad.append("g after f is not the halving projection")
    data = dc_equivalence_data()
    report = verify_subdivision_equivalence(*data[:4], *data[4:])
    bad.extend(f"equivalence data: {v}" for v in report)
    census = census_based_maps_d_to_c()
    if not census:
        bad.append("census found no continuous based maps")
    for f_dc in census:
        if any(f_dc(p).coords[0] < 0 for p in f_dc.domain):
            bad.append("a based map escapes the right half")
            break
    contraction = arc_contraction()
    bad.extend(f"arc contraction: {v}" for v in verify_map_homotopy(contraction))
    final = contraction.rows[-1]
    if any(final(p) != contraction.codomain.basepoint for p in contraction.domain):
        bad.append("arc contraction does not end at the basepoint")
    return bad


def check_graph_product_contrast() -> List[str]:
    grid = graph_product_contraction_grid()
    if not verify_grid(grid):
        return ["graph-product contraction unexpectedly passed joint continuity"]
    return []


def check_group_law_witnesses() -> List[str]:
    rng = random.Random(501)
    bad = []
    targets = [diamond(), product_image(interval(2), interval(2))]
    for image in targets:
        for i in range(50):
            a = _loop_in(rng, image, 8)
            m = a.length
            tail = constant_loop(image, m)
            identity_w = EquivalenceWitness(
                _as_loop(concat(a, tail)), a, 1, 2,
                (flip_vertical(reparam_homotopy(a, 2)),))
            bad.extend(f"identity {i}: {v}" for v in verify_witness(identity_w))
            inverse_w = EquivalenceWitness(
                _as_loop(concat(a, reverse(a))),
                constant_loop(image, 2 * m + 1), 1, 1,
                (inverse_homotopy(a, "dot"),))
            bad.extend(f"inverse {i}: {v}" for v in verify_witness(inverse_w))
    prod = product_image(diamond(), interval(1))
    x, y = diamond(), interval(1)
    for i in range(50):
        a = random_based_loop(prod, rng.randint(2, 8), rng)
        ax, ay = product_split(a, x, y)
        if product_join(ax, ay).steps != a.steps:
            bad.append(f"split/join {i}: round trip failed")
        bx = random_based_loop(x, 4, rng)
        by = random_based_loop(y, 4, rng)
        joined = product_join(bx, by)
        jx, jy = product_split(joined, x, y)
        if jx.steps != bx.steps or jy.steps != by.steps:
            bad.append(f"join/split {i}: round trip failed")
    return bad


def _as_loop(p: LatticePath) -> LatticeLoop:
    assert isinstance(p, LatticeLoop)
    return p


def check_rho_iso_evidence() -> List[str]:
    bad = []
    spaces = [
        ("diamond", diamond()),
        ("interval", interval(2)),
        ("square", product_image(interval(2), interval(2))),
    ]
    for name, image in spaces:
        for k in (2, 3):
            report = rho_iso_evidence(image, k, n_samples=3, seed=11)
            directions = {s.direction for s in report.samples}
            if directions != {"surjectivity", "injectivity"}:
                bad.append(f"{name} k={k}: missing evidence direction")
            for s in report.samples:
                if s.verdict not in ("conclusive", SEPARATED):
                    bad.append(
                        f"{name} k={k} {s.direction}: verdict {s.verdict}"
                        f" ({s.detail})")
    return bad


CHECKS: Dict[str, Check] = {
    "winding-homomorphism": check_winding_homomorphism,
    "winding-generator-powers": check_winding_powers,
    "winding-step-invariance": check_winding_step_invariance,
    "winding-separates-generator": check_winding_separates_generator,
    "constructor-reparam-homotopy": check_reparam_homotopy,
    "constructor-inverse-homotopy": check_inverse_homotopy,
    "constructor-cube-contraction": check_cube_contraction,
    "constructor-whisker": check_whisker,
    "constructor-side-concat": check_side_concat,
    "constructor-stack": check_stack,
    "constructor-beta-vs-reparam": check_beta_vs_reparam,
    "constructor-beta-vs-cover": check_beta_vs_cover,
    "constructor-cover-vs-reparam": check_cover_vs_reparam,
    "algebra-laws": check_algebra_laws,
    "cover-square": check_cover_square,
    "dc-example": check_dc_example,
    "graph-product-contrast": check_graph_product_contrast,
    "group-law-witnesses": check_group_law_witnesses,
    "rho-iso-evidence": check_rho_iso_evidence,
}


def run_suite(only: Optional[str] = None) -> Dict[str, List[str]]:
    results: Dict[str, List[str]] = {}
    for name, fn in CHECKS.items():
        if only is not None and only not in name:
            continue
        results[name] = fn()
    return results
