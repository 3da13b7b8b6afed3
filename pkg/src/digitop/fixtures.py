"""Shipped fixtures: the two digital circles, the maps between them, and the
worked comparison data."""

from __future__ import annotations

from itertools import product as iter_product
from pathlib import Path as FsPath
from typing import Dict, List, Tuple

from .core import (DigitalImage, DigitalMap, Point, check_continuity, compose,
                   pt)
from .fileio import load_image, load_loop, load_map
from .homotopy import (HomotopyGrid, MapEquivalenceWitness, MapHomotopy,
                       OF_BASED_LOOPS)
from .paths import LatticeLoop
from .subdivision import subdivide

DATA_DIR = FsPath(__file__).parent / "data"


def fixture_path(name: str) -> FsPath:
    return DATA_DIR / name


def diamond_image() -> DigitalImage:
    return load_image(fixture_path("D.img"))


def octagon_image() -> DigitalImage:
    return load_image(fixture_path("C.img"))


def subdivided_diamond_image() -> DigitalImage:
    return load_image(fixture_path("SD2.img"))


def map_f() -> DigitalMap:
    """The fold-down map from the subdivided Diamond onto the octagon circle."""

    return load_map(fixture_path("f.map"))


def map_g() -> DigitalMap:
    """The projection of the octagon circle onto the Diamond."""

    return load_map(fixture_path("g.map"))


def map_gprime() -> DigitalMap:
    """The section of map_f embedding the octagon into the subdivided Diamond.

    The shipped table sends (-1,-1) to (-1,0); with the obvious alternative
    (0,-1) the map would be discontinuous and f after it would miss the
    identity, so this entry is forced.
    """

    return load_map(fixture_path("gprime.map"))


def generator_fixture() -> LatticeLoop:
    loop = load_loop(fixture_path("generator.loop"))
    assert isinstance(loop, LatticeLoop)
    return loop


def graph_product_contraction_grid() -> HomotopyGrid:
    """The rotate-and-collapse contraction of the Diamond read along the
    generator loop.

    Each row is a continuous self-map and consecutive rows agree up to
    adjacency pointwise, so this is a homotopy in the graph-product sense;
    it fails joint continuity.
    """

    d = diamond_image()
    rows = (
        (pt(1, 0), pt(0, 1), pt(-1, 0), pt(0, -1), pt(1, 0)),
        (pt(1, 0), pt(0, 1), pt(0, 1), pt(1, 0), pt(1, 0)),
        (pt(1, 0), pt(1, 0), pt(1, 0), pt(1, 0), pt(1, 0)),
    )
    return HomotopyGrid(d, rows, OF_BASED_LOOPS)


def arc_image() -> DigitalImage:
    """The right half of the octagon circle: the five points with x >= 0."""

    c = octagon_image()
    return DigitalImage.of([p for p in c if p.coords[0] >= 0], c.basepoint)


def lambda_centring(x: int) -> int:
    """One step of the coordinate-centring used to contract the arc."""

    if x in (-2, -1):
        return x + 1
    if x == 0:
        return 0
    if x in (1, 2):
        return x - 1
    raise ValueError(f"{x} outside [-2, 2]")


def arc_contraction() -> MapHomotopy:
    """Contraction of the arc onto its basepoint (2,0).

    Points of the arc are parametrized by their second coordinate s in
    [-2, 2] via s -> (2 - |s|, s); the contraction clamps s into the
    shrinking window [-2+t, 2-t], which drives every point to s = 0 while
    fixing the basepoint throughout.
    """

    u = arc_image()
    rows = []
    for t in range(3):
        mapping: Dict[Point, Point] = {}
        for p in u:
            s = p.coords[1]
            clamped = max(-(2 - t), min(2 - t, s))
            mapping[p] = pt(2 - abs(clamped), clamped)
        rows.append(DigitalMap.of(u, u, mapping))
    return MapHomotopy(u, u, tuple(rows))


def census_based_maps_d_to_c() -> List[DigitalMap]:
    """Every continuous based map from the Diamond to the octagon circle."""

    d, c = diamond_image(), octagon_image()
    free = [p for p in d if p != d.basepoint]
    out: List[DigitalMap] = []
    for values in iter_product(list(c), repeat=len(free)):
        mapping = {d.basepoint: c.basepoint}
        mapping.update(dict(zip(free, values)))
        f = DigitalMap.of(d, c, mapping)
        if not check_continuity(f):
            out.append(f)
    return out


def dc_equivalence_data() -> Tuple[DigitalImage, DigitalImage, int, int,
                                   DigitalMap, DigitalMap, DigitalMap,
                                   DigitalMap, MapEquivalenceWitness,
                                   MapEquivalenceWitness]:
    """The full subdivision-equivalence package comparing the two circles.

    Returns (X, Y, k, l, f, g, cover_f, cover_g, witness_fg, witness_gf)
    with X the Diamond, Y the octagon, k=2, l=1.
    """

    d, c = diamond_image(), octagon_image()
    f, g, gp = map_f(), map_g(), map_gprime()
    sc2 = subdivide(c, 2)
    cover_f = f
    cover_g = compose(gp, sc2.projection)
    fg_left = compose(f, cover_g)
    witness_fg = MapEquivalenceWitness(
        fg_left, DigitalMap.identity(c), 1, 2,
        MapHomotopy(sc2.image, c, (fg_left,)))
    gf_left = compose(g, cover_f)
    witness_gf = MapEquivalenceWitness(
        gf_left, DigitalMap.identity(d), 1, 2,
        MapHomotopy(f.domain, d, (gf_left,)))
    return d, c, 2, 1, f, g, cover_f, cover_g, witness_fg, witness_gf
