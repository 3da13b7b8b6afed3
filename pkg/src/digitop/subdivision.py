"""k-fold subdivision of digital images and the projection family."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iter_product
from typing import Optional, Set, Tuple

from .core import DigitalImage, DigitalMap, Point


def block(x: Point, k: int) -> Set[Point]:
    """The k^n points obtained by scaling x by k and adding offsets 0..k-1."""

    if k < 1:
        raise ValueError("factor must be at least 1")
    return {
        Point(tuple(k * c + r for c, r in zip(x.coords, offsets)))
        for offsets in iter_product(range(k), repeat=x.dim)
    }


def block_centre(x: Point, odd: int) -> Point:
    """The centre of the block of x under an odd factor."""

    if odd < 1 or odd % 2 == 0:
        raise ValueError("centre needs an odd factor")
    half = odd // 2
    return Point(tuple(odd * c + half for c in x.coords))


def canonical_basepoint(y0: Point, k: int) -> Point:
    """The distinguished basepoint inside the block of y0, for k >= 2.

    Odd factors pick the block centre; even factors pick the point one
    step below the centre in each coordinate.
    """

    if k < 2:
        raise ValueError("canonical basepoint needs k >= 2")
    offset = k // 2 if k % 2 == 1 else k // 2 - 1
    return Point(tuple(k * c + offset for c in y0.coords))


def floor_divide(p: Point, k: int) -> Point:
    return Point(tuple(c // k for c in p.coords))


@dataclass(frozen=True)
class Subdivision:
    """A subdivided image together with its projection back to the base."""

    base: DigitalImage
    factor: int
    image: DigitalImage
    projection: DigitalMap


def subdivide(x: DigitalImage, k: int,
              keep_origin_basepoint: bool = False) -> Subdivision:
    """Blow each point up into its k-block; project by coordinate floor-divide.

    keep_origin_basepoint applies the interval convention: the subdivided
    basepoint is k * basepoint (so 0 stays 0 for intervals based at the
    origin) instead of the canonical in-block point.
    """

    if k < 1:
        raise ValueError("factor must be at least 1")
    if k == 1:
        return Subdivision(x, 1, x, DigitalMap.identity(x))
    pts = [q for p in x for q in block(p, k)]
    base_pt: Optional[Point] = None
    if x.basepoint is not None:
        if keep_origin_basepoint:
            base_pt = Point(tuple(k * c for c in x.basepoint.coords))
        else:
            base_pt = canonical_basepoint(x.basepoint, k)
    image = DigitalImage.of(pts, base_pt)
    projection = DigitalMap.of(image, x, {p: floor_divide(p, k) for p in image})
    return Subdivision(x, k, image, projection)


def _partial_coord(c: int, k: int) -> int:
    """The one-level partial projection on a single coordinate."""

    x, j = divmod(c, k)
    return (k - 1) * x + (j if j <= k // 2 - 1 else j - 1)


def rho_partial(x: DigitalImage, k: int,
                keep_origin_basepoint: bool = False) -> DigitalMap:
    """The partial projection from the k-subdivision onto the (k-1)-subdivision."""

    if k < 3:
        raise ValueError("partial projection needs k >= 3")
    fine = subdivide(x, k, keep_origin_basepoint).image
    coarse = subdivide(x, k - 1, keep_origin_basepoint).image
    return DigitalMap.of(
        fine, coarse,
        {p: Point(tuple(_partial_coord(c, k) for c in p.coords)) for p in fine},
    )
