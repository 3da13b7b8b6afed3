"""Standard covers of paths in odd subdivisions and the homotopies relating
them to reparametrized loops."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Tuple

from .core import DigitalImage, Point
from .homotopy import HomotopyGrid, OF_BASED_LOOPS, inverse_homotopy, stack
from .paths import LatticeLoop, LatticePath, make_path, push, reparam
from .subdivision import Subdivision, block_centre, floor_divide, subdivide


def centring(r: int, k: int) -> int:
    """Move a residue in [0, 2k] one step toward the centre k."""

    if not 0 <= r <= 2 * k:
        raise ValueError(f"residue {r} outside [0, {2 * k}]")
    if r < k:
        return r + 1
    if r > k:
        return r - 1
    return k


def centring_iter(r: int, k: int, times: int) -> int:
    for _ in range(times):
        r = centring(r, k)
    return r


def centre_path(y: Point, k: int, target: DigitalImage) -> LatticePath:
    """The length-k path walking y coordinate-wise to its block centre."""

    odd = 2 * k + 1
    base = floor_divide(y, odd)
    residues = [c - odd * b for c, b in zip(y.coords, base.coords)]
    steps = [
        Point(tuple(odd * b + centring_iter(r, k, t)
                    for b, r in zip(base.coords, residues)))
        for t in range(k + 1)
    ]
    return make_path(target, steps)


def beta_loop(a: LatticeLoop, k: int) -> LatticeLoop:
    """The loop pausing at each block centre and dipping to the sample points.

    On each stretch between consecutive centres it runs the reverse of one
    centring path followed by the next; it is constant at the basepoint on
    both end segments.
    """

    odd = 2 * k + 1
    m = a.length
    y0 = a.target.require_based()
    if block_centre(floor_divide(y0, odd), odd) != y0:
        raise ValueError("beta needs the centre basepoint convention")
    gammas = [centre_path(p, k, a.target) for p in a.steps]
    centre_of = lambda i: odd * i + k  # noqa: E731 - index of the i-th centre
    width = odd * m + 2 * k
    steps: List[Point] = []
    for j in range(width + 1):
        if j <= centre_of(0) or j >= centre_of(m):
            steps.append(y0)
            continue
        i, s = divmod(j - centre_of(0), odd)
        if s <= k:
            steps.append(gammas[i].steps[k - s])
        else:
            steps.append(gammas[i + 1].steps[s - (k + 1)])
    out = make_path(a.target, steps)
    assert isinstance(out, LatticeLoop)
    return out


@dataclass(frozen=True)
class StandardCover:
    """A path together with its canonical lift into an odd subdivision."""

    base_path: LatticePath
    odd: int
    subdivision: Subdivision
    cover: LatticePath


def standard_cover(a: LatticePath, odd: int) -> StandardCover:
    """The canonical lift of a path, flat at block centres at both ends."""

    if odd < 3 or odd % 2 == 0:
        raise ValueError("standard cover needs an odd factor >= 3")
    k = odd // 2
    n = a.length
    sub = subdivide(a.target, odd)
    centre_of = lambda i: odd * i + k  # noqa: E731
    width = odd * n + 2 * k

    def at(j: int) -> Point:
        values = []
        if j < centre_of(0):
            values.append(block_centre(a.steps[0], odd))
        if centre_of(0) <= j <= centre_of(n):
            i, t = divmod(j - centre_of(0), odd)
            if i <= n - 1:
                here = block_centre(a.steps[i], odd)
                step = a.steps[i + 1]
                values.append(Point(tuple(
                    c + t * (nc - oc)
                    for c, oc, nc in zip(here.coords, a.steps[i].coords, step.coords))))
            else:
                values.append(block_centre(a.steps[n], odd))
        if j > centre_of(n):
            values.append(block_centre(a.steps[n], odd))
        first = values[0]
        if any(v != first for v in values[1:]):
            raise AssertionError(f"cover branches disagree at {j}: {values}")
        return first

    cover = make_path(sub.image, tuple(at(j) for j in range(width + 1)))
    return StandardCover(a, odd, sub, cover)


def cover_coordinate(x: int, x2: int, r: int, r2: int, s: int, k: int) -> int:
    """The closed form for one coordinate of the standard cover across a block
    gap: x, x2 are consecutive base coordinates, r, r2 their sampled residues,
    s runs over [0, 2k+1]."""

    if abs(x2 - x) > 1:
        raise ValueError("base coordinates must be adjacent")
    odd = 2 * k + 1
    if s <= k:
        return odd * x + centring_iter(k + k * (x2 - x), k, k - s)
    return odd * x2 + centring_iter(k - k * (x2 - x), k, s - (k + 1))


def homotopy_beta_vs_reparam(a: LatticeLoop, k: int) -> HomotopyGrid:
    """Height-k grid from beta up to the reparametrized loop, assembled from
    blockwise inverse homotopies of the centring paths."""

    odd = 2 * k + 1
    m = a.length
    gammas = [centre_path(p, k, a.target) for p in a.steps]
    blocks = [inverse_homotopy(g, "star") for g in gammas]
    rows = tuple(
        tuple(blocks[j // odd].rows[t][j % odd] for j in range(odd * m + 2 * k + 1))
        for t in range(k + 1)
    )
    grid = HomotopyGrid(a.target, rows, OF_BASED_LOOPS)
    if grid.rows[-1] != reparam(a, odd).steps:
        raise AssertionError("beta homotopy top row is not the reparametrized loop")
    if grid.rows[0] != beta_loop(a, k).steps:
        raise AssertionError("beta homotopy bottom row is not beta")
    return grid


def subdivide_projection(sub_image: DigitalImage, odd: int):
    """Projection map from an odd-subdivision image back to its base."""

    from .core import DigitalMap

    base_pts = {floor_divide(p, odd) for p in sub_image}
    base_bp = None
    if sub_image.basepoint is not None:
        base_bp = floor_divide(sub_image.basepoint, odd)
    base = DigitalImage.of(base_pts, base_bp)
    return DigitalMap.of(sub_image, base,
                         {p: floor_divide(p, odd) for p in sub_image})


def homotopy_beta_vs_cover(a: LatticeLoop, k: int) -> HomotopyGrid:
    """Height-k grid from beta to the standard cover of the projected loop,
    built coordinate-by-coordinate across each block gap."""

    odd = 2 * k + 1
    m = a.length
    y0 = a.target.require_based()
    proj = subdivide_projection(a.target, odd)
    projected = push(proj, a)
    cover = standard_cover(projected, odd).cover
    beta = beta_loop(a, k)
    centre_of = lambda i: odd * i + k  # noqa: E731

    def gap_value(i: int, s: int, t: int) -> Point:
        """Value at column centre_of(i)+s, 0 <= s <= odd, on row t."""

        x, x2 = projected.steps[i], projected.steps[i + 1]
        p, p2 = a.steps[i], a.steps[i + 1]
        out: List[int] = []
        for j in range(a.target.dim):
            xj, x2j = x.coords[j], x2.coords[j]
            rj, r2j = p.coords[j] - odd * xj, p2.coords[j] - odd * x2j
            out.append(_gap_coordinate(xj, x2j, rj, r2j, s, t, k))
        return Point(tuple(out))

    width = odd * m + 2 * k
    rows = []
    for t in range(k + 1):
        row: List[Point] = []
        for col in range(width + 1):
            if col <= centre_of(0) or col >= centre_of(m):
                row.append(y0)
                continue
            i, s = divmod(col - centre_of(0), odd)
            value = gap_value(i, s, t)
            if s == 0:
                other = value if i == 0 else gap_value(i - 1, odd, t)
                if other != value:
                    raise AssertionError(
                        f"gap seam disagrees at column {col}: {other} vs {value}")
            row.append(value)
        rows.append(tuple(row))
    grid = HomotopyGrid(a.target, tuple(rows), OF_BASED_LOOPS)
    if grid.rows[0] != beta.steps:
        raise AssertionError("cover homotopy bottom row is not beta")
    if grid.rows[-1] != cover.steps:
        raise AssertionError("cover homotopy top row is not the standard cover")
    return grid


def _gap_coordinate(x: int, x2: int, r: int, r2: int, s: int, t: int, k: int) -> int:
    """One coordinate of the beta-to-cover homotopy across a block gap.

    Dispatches on whether the base coordinate moves, and otherwise on which
    sampled residue is the further from the centre.
    """

    odd = 2 * k + 1
    if x2 - x == 1:
        if r != 2 * k or r2 != 0:
            raise AssertionError(
                f"adjacent blocks force residues 2k,0; got {r},{r2}")
        return cover_coordinate(x, x2, r, r2, s, k)
    if x2 - x == -1:
        if r != 0 or r2 != 2 * k:
            raise AssertionError(
                f"adjacent blocks force residues 0,2k; got {r},{r2}")
        return cover_coordinate(x, x2, r, r2, s, k)
    if x2 != x:
        raise AssertionError("base coordinates not adjacent")

    def balanced(res: int, s_: int, t_: int) -> int:
        # The symmetric dip-and-return profile around the centre column.
        if s_ < k - t_:
            return odd * x + centring_iter(res, k, k - s_)
        if s_ <= k + 1 + t_:
            return odd * x + centring_iter(res, k, t_)
        return odd * x + centring_iter(res, k, s_ - (k + 1))

    if r == r2:
        return balanced(r, s, t)
    if centring(r, k) == r2:
        # The right-hand sample sits one step closer to the centre.
        if s <= k:
            return balanced(r, s, t)
        if s <= 2 * k:
            return balanced(r, s + 1, t)
        return odd * x + centring_iter(r2, k, k)
    if centring(r2, k) == r:
        # The left-hand sample is the closer one; mirror the shift.
        if s == 0:
            return odd * x + centring_iter(r, k, k)
        if s <= k:
            return balanced(r2, s - 1, t)
        return balanced(r2, s, t)
    raise AssertionError(f"residues {r},{r2} differ by more than one step")


def homotopy_cover_vs_reparam(a: LatticeLoop, k: int) -> HomotopyGrid:
    """Stack the flipped beta-vs-reparam grid over the beta-vs-cover grid:
    bottom is the reparametrized loop, top the standard cover of its
    projection."""

    h = homotopy_beta_vs_reparam(a, k)
    g = homotopy_beta_vs_cover(a, k)
    return stack(h, g, mode="shared-bottom")


@dataclass(frozen=True)
class CoverEdges:
    """The four boundary paths of the would-be lifted homotopy square."""

    bottom: LatticePath
    top: LatticePath
    left: LatticePath
    right: LatticePath


def cover_2d_edges(h: HomotopyGrid, odd: int) -> CoverEdges:
    """Standard covers of a verified grid's boundary rows and columns."""

    bottom = standard_cover(h.bottom(), odd).cover
    top = standard_cover(h.top(), odd).cover
    left = standard_cover(
        make_path(h.target, tuple(row[0] for row in h.rows)), odd).cover
    right = standard_cover(
        make_path(h.target, tuple(row[-1] for row in h.rows)), odd).cover
    return CoverEdges(bottom, top, left, right)
