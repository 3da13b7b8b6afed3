"""Digital images on the integer lattice: points, adjacency, maps, products."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, product as iter_product
from typing import Dict, Iterable, Iterator, List, Optional, Tuple

Coords = Tuple[int, ...]


@dataclass(frozen=True, order=True)
class Point:
    """A lattice point with at least one integer coordinate."""

    coords: Coords

    def __post_init__(self) -> None:
        if len(self.coords) < 1:
            raise ValueError("point needs at least one coordinate")
        if not all(isinstance(c, int) for c in self.coords):
            raise ValueError("coordinates must be integers")

    @property
    def dim(self) -> int:
        return len(self.coords)

    def __repr__(self) -> str:
        return f"P{self.coords}"


def pt(*coords: int) -> Point:
    """Shorthand constructor used throughout tests and fixtures."""

    return Point(tuple(coords))


def adjacent(p: Point, q: Point) -> bool:
    """Max-metric adjacency; reflexive, so a point is adjacent to itself."""

    if p.dim != q.dim:
        raise ValueError(f"dimension mismatch: {p.dim} vs {q.dim}")
    return all(abs(a - b) <= 1 for a, b in zip(p.coords, q.coords))


@dataclass(frozen=True)
class DigitalImage:
    """A finite point set in Z^n with an optional basepoint.

    Points are kept in a canonical sorted tuple so equality is structural.
    """

    dim: int
    points: Tuple[Point, ...]
    basepoint: Optional[Point] = None

    @staticmethod
    def of(points: Iterable[Point], basepoint: Optional[Point] = None) -> "DigitalImage":
        pts = tuple(sorted(set(points)))
        if not pts:
            raise ValueError("digital image must be nonempty")
        dim = pts[0].dim
        if any(p.dim != dim for p in pts):
            raise ValueError("all points must share a dimension")
        if basepoint is not None and basepoint not in pts:
            raise ValueError(f"basepoint {basepoint} not a member of the image")
        return DigitalImage(dim, pts, basepoint)

    def __contains__(self, p: Point) -> bool:
        return p in set(self.points)

    def __iter__(self) -> Iterator[Point]:
        return iter(self.points)

    def __len__(self) -> int:
        return len(self.points)

    def with_basepoint(self, p: Point) -> "DigitalImage":
        if p not in self.points:
            raise ValueError(f"{p} not in image")
        return DigitalImage(self.dim, self.points, p)

    def require_based(self) -> Point:
        if self.basepoint is None:
            raise ValueError("image has no basepoint")
        return self.basepoint

    def adjacent_pairs(self) -> Tuple[Tuple[Point, Point], ...]:
        """All unordered pairs of distinct adjacent points."""

        return _adjacent_pairs(self.points)


@lru_cache(maxsize=None)
def _adjacent_pairs(points: Tuple[Point, ...]) -> Tuple[Tuple[Point, Point], ...]:
    return tuple(
        (p, q) for p, q in combinations(points, 2) if adjacent(p, q)
    )


@lru_cache(maxsize=None)
def _neighbour_table(points: Tuple[Point, ...]) -> Dict[Point, Tuple[Point, ...]]:
    table: Dict[Point, List[Point]] = {p: [p] for p in points}
    for p, q in _adjacent_pairs(points):
        table[p].append(q)
        table[q].append(p)
    return {p: tuple(sorted(ns)) for p, ns in table.items()}


def neighbours(image: DigitalImage, p: Point) -> Tuple[Point, ...]:
    """All points of the image adjacent to p, including p itself."""

    return _neighbour_table(image.points)[p]


@dataclass(frozen=True)
class DigitalMap:
    """A total table-driven function between digital images."""

    domain: DigitalImage
    codomain: DigitalImage
    table: Tuple[Tuple[Point, Point], ...]

    @staticmethod
    def of(domain: DigitalImage, codomain: DigitalImage,
           mapping: Dict[Point, Point]) -> "DigitalMap":
        dom_pts = set(domain.points)
        if set(mapping) != dom_pts:
            missing = dom_pts - set(mapping)
            extra = set(mapping) - dom_pts
            raise ValueError(f"table not total: missing={missing}, extra={extra}")
        cod_pts = set(codomain.points)
        bad = [v for v in mapping.values() if v not in cod_pts]
        if bad:
            raise ValueError(f"values outside codomain: {sorted(set(bad))}")
        return DigitalMap(domain, codomain,
                          tuple(sorted(mapping.items())))

    @staticmethod
    def identity(image: DigitalImage) -> "DigitalMap":
        return DigitalMap.of(image, image, {p: p for p in image})

    @staticmethod
    def constant(domain: DigitalImage, codomain: DigitalImage,
                 value: Point) -> "DigitalMap":
        return DigitalMap.of(domain, codomain, {p: value for p in domain})

    @property
    def mapping(self) -> Dict[Point, Point]:
        return dict(self.table)

    def __call__(self, p: Point) -> Point:
        try:
            return self.mapping[p]
        except KeyError:
            raise ValueError(f"{p} outside domain") from None

    def is_based(self) -> bool:
        x0 = self.domain.basepoint
        y0 = self.codomain.basepoint
        return x0 is not None and y0 is not None and self(x0) == y0


def check_continuity(f: DigitalMap) -> List[Tuple[Point, Point]]:
    """Every adjacent domain pair whose images fail adjacency; empty iff continuous."""

    m = f.mapping
    return [
        (p, q)
        for p, q in f.domain.adjacent_pairs()
        if not adjacent(m[p], m[q])
    ]


def is_continuous(f: DigitalMap) -> bool:
    return not check_continuity(f)


def compose(g: DigitalMap, f: DigitalMap) -> DigitalMap:
    """g after f."""

    if f.codomain.points != g.domain.points:
        raise ValueError("codomain of f does not match domain of g")
    fm, gm = f.mapping, g.mapping
    return DigitalMap.of(f.domain, g.codomain, {p: gm[fm[p]] for p in f.domain})


def isomorphism_inverse(f: DigitalMap) -> Optional[DigitalMap]:
    """The continuous inverse of f, or None when f is not an isomorphism."""

    if check_continuity(f):
        return None
    m = f.mapping
    values = list(m.values())
    if len(set(values)) != len(values) or set(values) != set(f.codomain.points):
        return None
    inv = DigitalMap.of(f.codomain, f.domain, {v: k for k, v in m.items()})
    if check_continuity(inv):
        return None
    return inv


def is_isomorphism(f: DigitalMap) -> bool:
    return isomorphism_inverse(f) is not None


def _concat_coords(p: Point, q: Point) -> Point:
    return Point(p.coords + q.coords)


def product_image(x: DigitalImage, y: DigitalImage) -> DigitalImage:
    """Cartesian product with concatenated coordinates and joint adjacency."""

    pts = [_concat_coords(p, q) for p in x for q in y]
    base = None
    if x.basepoint is not None and y.basepoint is not None:
        base = _concat_coords(x.basepoint, y.basepoint)
    return DigitalImage.of(pts, base)


def product_projections(x: DigitalImage, y: DigitalImage) -> Tuple[DigitalMap, DigitalMap]:
    prod = product_image(x, y)
    p1 = DigitalMap.of(prod, x, {p: Point(p.coords[:x.dim]) for p in prod})
    p2 = DigitalMap.of(prod, y, {p: Point(p.coords[x.dim:]) for p in prod})
    return p1, p2


def product_map(fs: List[DigitalMap]) -> DigitalMap:
    """Coordinate-block-wise product of maps between product images."""

    if not fs:
        raise ValueError("need at least one factor")
    domain = fs[0].domain
    codomain = fs[0].codomain
    for f in fs[1:]:
        domain = product_image(domain, f.domain)
        codomain = product_image(codomain, f.codomain)
    dims = [f.domain.dim for f in fs]
    mapping: Dict[Point, Point] = {}
    for p in domain:
        out: Tuple[int, ...] = ()
        at = 0
        for f, d in zip(fs, dims):
            out += f(Point(p.coords[at:at + d])).coords
            at += d
        mapping[p] = Point(out)
    return DigitalMap.of(domain, codomain, mapping)


def pair_maps(f: DigitalMap, g: DigitalMap) -> DigitalMap:
    """The unique map a -> (f(a), g(a)) into the product of the codomains."""

    if f.domain.points != g.domain.points:
        raise ValueError("pair_maps needs a shared domain")
    prod = product_image(f.codomain, g.codomain)
    return DigitalMap.of(f.domain, prod,
                         {p: _concat_coords(f(p), g(p)) for p in f.domain})


def interval(n: int) -> DigitalImage:
    """The digital interval I_n = {0..n}, based at 0."""

    if n < 0:
        raise ValueError("interval length must be nonnegative")
    return DigitalImage.of([pt(i) for i in range(n + 1)], pt(0))


def symmetric_interval(m: int) -> DigitalImage:
    """The interval {-m..m}, based at 0."""

    if m < 0:
        raise ValueError("half-width must be nonnegative")
    return DigitalImage.of([pt(i) for i in range(-m, m + 1)], pt(0))


def diamond() -> DigitalImage:
    """The four-point digital circle, based at (1,0)."""

    return DigitalImage.of([pt(1, 0), pt(0, 1), pt(-1, 0), pt(0, -1)], pt(1, 0))


def octagon() -> DigitalImage:
    """The eight-point digital circle of radius two, based at (2,0)."""

    pts = [pt(2, 0), pt(1, 1), pt(0, 2), pt(-1, 1),
           pt(-2, 0), pt(-1, -1), pt(0, -2), pt(1, -1)]
    return DigitalImage.of(pts, pt(2, 0))
