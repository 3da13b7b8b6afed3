"""Homotopy grids with joint continuity, and the explicit grid constructors."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence, Tuple

from .core import (DigitalImage, DigitalMap, Point, adjacent, check_continuity,
                   compose, interval, symmetric_interval, pt)
from .paths import (LatticePath, LatticeLoop, concat, constant_path, make_path,
                    reparam, reverse)
from .subdivision import floor_divide, subdivide

OF_MAPS = "of-maps"
OF_BASED_LOOPS = "of-based-loops"
REL_ENDPOINTS = "rel-endpoints"
KINDS = (OF_MAPS, OF_BASED_LOOPS, REL_ENDPOINTS)


@dataclass(frozen=True)
class HomotopyGrid:
    """An (M+1) x (N+1) array of target points; rows are the time slices."""

    target: DigitalImage
    rows: Tuple[Tuple[Point, ...], ...]
    kind: str

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown grid kind {self.kind!r}")
        if not self.rows or not self.rows[0]:
            raise ValueError("grid must have at least one cell")
        w = len(self.rows[0])
        if any(len(r) != w for r in self.rows):
            raise ValueError("ragged grid rows")

    @property
    def width(self) -> int:
        return len(self.rows[0]) - 1

    @property
    def height(self) -> int:
        return len(self.rows) - 1

    def value(self, s: int, t: int) -> Point:
        return self.rows[t][s]

    def bottom(self) -> LatticePath:
        return make_path(self.target, self.rows[0])

    def top(self) -> LatticePath:
        return make_path(self.target, self.rows[-1])


def grid_from_fn(target: DigitalImage, width: int, height: int,
                 fn: Callable[[int, int], Point], kind: str) -> HomotopyGrid:
    rows = tuple(
        tuple(fn(s, t) for s in range(width + 1)) for t in range(height + 1)
    )
    return HomotopyGrid(target, rows, kind)


def verify_grid(h: HomotopyGrid) -> List[str]:
    """All violations of joint continuity and of the declared kind's boundary rule."""

    report: List[str] = []
    members = set(h.target.points)
    for t, row in enumerate(h.rows):
        for s, p in enumerate(row):
            if p not in members:
                report.append(f"cell ({s},{t}) value {p} outside target")
    if report:
        return report
    w, ht = h.width, h.height
    # Offsets covering each unordered jointly-adjacent cell pair exactly once.
    offsets = ((1, 0), (0, 1), (1, 1), (1, -1))
    for t in range(ht + 1):
        for s in range(w + 1):
            a = h.rows[t][s]
            for ds, dt in offsets:
                s2, t2 = s + ds, t + dt
                if 0 <= s2 <= w and 0 <= t2 <= ht:
                    b = h.rows[t2][s2]
                    if not adjacent(a, b):
                        report.append(
                            f"joint continuity: ({s},{t})={a} vs ({s2},{t2})={b}")
    if h.kind == OF_BASED_LOOPS:
        y0 = h.target.basepoint
        if y0 is None:
            report.append("of-based-loops grid over an unbased image")
        else:
            for t in range(ht + 1):
                for s in (0, w):
                    if h.rows[t][s] != y0:
                        report.append(
                            f"boundary column: ({s},{t})={h.rows[t][s]} != basepoint {y0}")
    elif h.kind == REL_ENDPOINTS:
        for s in (0, w):
            column = {h.rows[t][s] for t in range(ht + 1)}
            if len(column) != 1:
                report.append(f"endpoint column {s} not constant: {sorted(column)}")
    return report


def _assert_verified(h: HomotopyGrid, label: str) -> HomotopyGrid:
    bad = verify_grid(h)
    if bad:
        raise AssertionError(f"{label} failed verification: {bad[:3]}")
    return h


class _Piecewise:
    """Piecewise cell evaluation; overlapping branches must agree."""

    def __init__(self, branches: Sequence[Tuple[Callable[[int, int], bool],
                                                Callable[[int, int], Point]]]):
        self.branches = branches

    def __call__(self, s: int, t: int) -> Point:
        values = [fn(s, t) for cond, fn in self.branches if cond(s, t)]
        if not values:
            raise AssertionError(f"no branch covers cell ({s},{t})")
        first = values[0]
        if any(v != first for v in values[1:]):
            raise AssertionError(f"branches disagree at ({s},{t}): {values}")
        return first


def lengthen(h: HomotopyGrid, t_new: int) -> HomotopyGrid:
    """Extend a grid upward by repeating its final row."""

    if t_new < h.height:
        raise ValueError("lengthen cannot shrink a grid")
    extra = (h.rows[-1],) * (t_new - h.height)
    return HomotopyGrid(h.target, h.rows + extra, h.kind)


def side_concat(h: HomotopyGrid, g: HomotopyGrid) -> HomotopyGrid:
    """Horizontal composite of two based-loop homotopies, rowwise concatenation."""

    if h.target.points != g.target.points:
        raise ValueError("side_concat needs a common target")
    if h.kind != OF_BASED_LOOPS or g.kind != OF_BASED_LOOPS:
        raise ValueError("side_concat is defined for based-loop homotopies")
    top = max(h.height, g.height)
    h, g = lengthen(h, top), lengthen(g, top)
    rows = tuple(hr + gr for hr, gr in zip(h.rows, g.rows))
    return HomotopyGrid(h.target, rows, OF_BASED_LOOPS)


def flip_vertical(h: HomotopyGrid) -> HomotopyGrid:
    return HomotopyGrid(h.target, tuple(reversed(h.rows)), h.kind)


def stack(h: HomotopyGrid, g: HomotopyGrid, mode: str = "sequential") -> HomotopyGrid:
    """Vertical composite.

    sequential: h's top row equals g's bottom row; the shared row appears once.
    shared-bottom: both grids start from the same bottom row; h is flipped and
    stacked above g with the middle rows duplicated.
    """

    if h.target.points != g.target.points or h.width != g.width:
        raise ValueError("stack needs matching targets and widths")
    if h.kind != g.kind:
        raise ValueError("stack needs grids of one kind")
    if mode == "sequential":
        if h.rows[-1] != g.rows[0]:
            raise ValueError("sequential stack needs h.top == g.bottom")
        rows = h.rows + g.rows[1:]
    elif mode == "shared-bottom":
        if h.rows[0] != g.rows[0]:
            raise ValueError("shared-bottom stack needs equal bottom rows")
        rows = tuple(reversed(h.rows)) + g.rows
    else:
        raise ValueError(f"unknown stack mode {mode!r}")
    return HomotopyGrid(h.target, rows, h.kind)


def reparam_homotopy(a: LatticeLoop, k: int, side: str = "right") -> HomotopyGrid:
    """The grid joining reparam(a,k) to reparam(a,k-1) padded by a constant tail.

    Right side pads after the loop; left side is the mirrored variant padding
    before it.
    """

    if k < 2:
        raise ValueError("reparametrization homotopy needs k >= 2")
    if side == "left":
        mirrored = reparam_homotopy(_as_loop(reverse(a)), k, "right")
        rows = tuple(tuple(reversed(r)) for r in mirrored.rows)
        return HomotopyGrid(mirrored.target, rows, OF_BASED_LOOPS)
    if side != "right":
        raise ValueError(f"unknown side {side!r}")
    m = a.length
    y0 = a.target.require_based()
    coarse = reparam(a, k - 1)
    width, height = k * m + k - 1, m + 1
    fn = _Piecewise([
        (lambda s, t: s <= t * (k - 1) - 1, lambda s, t: coarse.steps[s]),
        (lambda s, t: t * (k - 1) <= s <= k * m + k - 1 - t,
         lambda s, t: a.steps[(s + t) // k]),
        (lambda s, t: s >= k * m + k - t, lambda s, t: y0),
    ])
    return grid_from_fn(a.target, width, height, fn, OF_BASED_LOOPS)


def _as_loop(p: LatticePath) -> LatticeLoop:
    if not isinstance(p, LatticeLoop):
        raise ValueError("expected a based loop")
    return p


def inverse_homotopy(g: LatticePath, form: str = "dot") -> HomotopyGrid:
    """The grid contracting a path concatenated with its reverse to a constant."""

    m = g.length
    if form == "dot":
        width = 2 * m + 1
        fn = _Piecewise([
            (lambda s, t: s <= m - t, lambda s, t: g.steps[s]),
            (lambda s, t: m - t <= s <= m + 1 + t, lambda s, t: g.steps[m - t]),
            (lambda s, t: s >= m + 1 + t, lambda s, t: g.steps[2 * m + 1 - s]),
        ])
    elif form == "star":
        width = 2 * m
        fn = _Piecewise([
            (lambda s, t: s <= m - t, lambda s, t: g.steps[s]),
            (lambda s, t: m - t <= s <= m + t, lambda s, t: g.steps[m - t]),
            (lambda s, t: s >= m + t, lambda s, t: g.steps[2 * m - s]),
        ])
    else:
        raise ValueError(f"unknown form {form!r}")
    return grid_from_fn(g.target, width, m, fn, REL_ENDPOINTS)


def cube_contraction(m: int, mode: str = "interval-0M") -> HomotopyGrid:
    """Contraction of an interval to its basepoint 0."""

    if m < 0:
        raise ValueError("interval half-width must be nonnegative")
    if mode == "interval-0M":
        fn = _Piecewise([
            (lambda s, t: s <= m - t, lambda s, t: pt(s)),
            (lambda s, t: s > m - t, lambda s, t: pt(m - t)),
        ])
        return grid_from_fn(interval(m), m, m, fn, OF_MAPS)
    if mode == "interval-symmetric":
        fn = _Piecewise([
            (lambda c, t: c - m <= -m + t, lambda c, t: pt(-m + t)),
            (lambda c, t: -m + t <= c - m <= m - t, lambda c, t: pt(c - m)),
            (lambda c, t: c - m >= m - t, lambda c, t: pt(m - t)),
        ])
        return grid_from_fn(symmetric_interval(m), 2 * m, m, fn, OF_MAPS)
    raise ValueError(f"unknown mode {mode!r}")


def whisker(gamma_left: LatticePath, h: HomotopyGrid,
            gamma_right: LatticePath) -> HomotopyGrid:
    """Conjugate a loop homotopy by constant side strips along a basepoint change.

    gamma_left runs from the new basepoint to the old one, gamma_right back;
    both must land on the grid's constant boundary columns.
    """

    if gamma_left.target.points != h.target.points:
        raise ValueError("whisker needs paths in the grid's target")
    left_col = {row[0] for row in h.rows}
    right_col = {row[-1] for row in h.rows}
    if len(left_col) != 1 or len(right_col) != 1 or left_col != right_col:
        raise ValueError("whisker needs constant equal boundary columns")
    y0_old = next(iter(left_col))
    if gamma_left.end != y0_old or gamma_right.start != y0_old:
        raise ValueError(f"side strips must meet the grid at {y0_old}")
    rows = tuple(gamma_left.steps + row + gamma_right.steps for row in h.rows)
    if gamma_left.start == gamma_right.end:
        target = h.target.with_basepoint(gamma_left.start)
        kind = OF_BASED_LOOPS
    else:
        target, kind = h.target, REL_ENDPOINTS
    return HomotopyGrid(target, rows, kind)


def push_homotopy(f: DigitalMap, h: HomotopyGrid) -> HomotopyGrid:
    """Apply a continuous map to every cell."""

    if f.domain.points != h.target.points:
        raise ValueError("grid target does not match the map's domain")
    if check_continuity(f):
        raise ValueError("push_homotopy needs a continuous map")
    rows = tuple(tuple(f(p) for p in row) for row in h.rows)
    return HomotopyGrid(f.codomain, rows, h.kind)


def pull_reparam(h: HomotopyGrid, k: int) -> HomotopyGrid:
    """Reparametrize the space axis: each column repeated k times."""

    if k < 1:
        raise ValueError("factor must be at least 1")
    rows = tuple(
        tuple(row[s // k] for s in range(k * len(row))) for row in h.rows
    )
    return HomotopyGrid(h.target, rows, h.kind)


@dataclass(frozen=True)
class EquivalenceWitness:
    """A replayable certificate that two based loops are subdivision-homotopic."""

    left: LatticeLoop
    right: LatticeLoop
    left_factor: int
    right_factor: int
    grids: Tuple[HomotopyGrid, ...]


def verify_witness(w: EquivalenceWitness) -> List[str]:
    report: List[str] = []
    m, n = w.left.length, w.right.length
    if w.left_factor * (m + 1) != w.right_factor * (n + 1):
        report.append(
            f"factor equation fails: {w.left_factor}*{m + 1} != {w.right_factor}*{n + 1}")
        return report
    bottom = reparam(w.left, w.left_factor).steps
    top = reparam(w.right, w.right_factor).steps
    if not w.grids:
        if bottom != top:
            report.append("empty witness but reparametrized loops differ")
        return report
    if w.grids[0].rows[0] != bottom:
        report.append("first grid bottom row != reparametrized left loop")
    if w.grids[-1].rows[-1] != top:
        report.append("last grid top row != reparametrized right loop")
    for i, g in enumerate(w.grids):
        if g.target.points != w.left.target.points:
            report.append(f"grid {i} target mismatch")
            continue
        y0 = w.left.target.basepoint
        for t, row in enumerate(g.rows):
            if row[0] != y0 or row[-1] != y0:
                report.append(f"grid {i} row {t} not pinned to basepoint")
                break
        report.extend(f"grid {i}: {v}" for v in verify_grid(g))
    for i in range(len(w.grids) - 1):
        if w.grids[i].rows[-1] != w.grids[i + 1].rows[0]:
            report.append(f"grids {i},{i + 1} do not share a boundary row")
    return report


@dataclass(frozen=True)
class MapHomotopy:
    """A homotopy of maps presented as its time slices."""

    domain: DigitalImage
    codomain: DigitalImage
    rows: Tuple[DigitalMap, ...]


def verify_map_homotopy(h: MapHomotopy, based: bool = True) -> List[str]:
    report: List[str] = []
    if not h.rows:
        return ["map homotopy needs at least one row"]
    for t, f in enumerate(h.rows):
        if f.domain.points != h.domain.points or f.codomain.points != h.codomain.points:
            report.append(f"row {t} domain/codomain mismatch")
    if report:
        return report
    pairs = list(h.domain.adjacent_pairs()) + [(p, p) for p in h.domain]
    for t in range(len(h.rows)):
        rows_here = [h.rows[t]] if t + 1 >= len(h.rows) else [h.rows[t], h.rows[t + 1]]
        f = h.rows[t]
        for x, x2 in pairs:
            for g in rows_here:
                if not adjacent(f(x), g(x2)) or not adjacent(f(x2), g(x)):
                    report.append(
                        f"joint continuity: rows {t} pair {x},{x2}")
                    break
    if based:
        x0 = h.domain.basepoint
        y0 = h.codomain.basepoint
        if x0 is None or y0 is None:
            report.append("based map homotopy over unbased images")
        else:
            for t, f in enumerate(h.rows):
                if f(x0) != y0:
                    report.append(f"row {t} not based: {f(x0)} != {y0}")
    return report


@dataclass(frozen=True)
class MapEquivalenceWitness:
    """Certificate that two maps out of subdivisions of one image agree up to
    reparametrization and a based homotopy."""

    left: DigitalMap
    right: DigitalMap
    left_factor: int
    right_factor: int
    homotopy: MapHomotopy


def _refine_map(f: DigitalMap, factor: int, fine: DigitalImage) -> DigitalMap:
    """Precompose f with the floor-divide projection from a finer subdivision."""

    return DigitalMap.of(fine, f.codomain,
                         {p: f(floor_divide(p, factor)) for p in fine})


def verify_map_witness(w: MapEquivalenceWitness) -> List[str]:
    report: List[str] = []
    fine = w.homotopy.domain
    try:
        left_re = _refine_map(w.left, w.left_factor, fine)
        right_re = _refine_map(w.right, w.right_factor, fine)
    except ValueError as exc:
        return [f"reparametrized maps undefined: {exc}"]
    if w.homotopy.rows[0].table != left_re.table:
        report.append("homotopy bottom row != reparametrized left map")
    if w.homotopy.rows[-1].table != right_re.table:
        report.append("homotopy top row != reparametrized right map")
    report.extend(verify_map_homotopy(w.homotopy))
    return report


def verify_subdivision_equivalence(
        x: DigitalImage, y: DigitalImage, k: int, l: int,
        f: DigitalMap, g: DigitalMap, cover_f: DigitalMap, cover_g: DigitalMap,
        witness_fg: MapEquivalenceWitness,
        witness_gf: MapEquivalenceWitness) -> List[str]:
    """Check the covering squares and both map-level homotopy witnesses.

    f: S(X,k) -> Y and g: S(Y,l) -> X; cover_f covers f over S(X,kl) -> S(Y,l)
    and cover_g covers g over S(Y,kl) -> S(X,k).
    """

    report: List[str] = []
    for name, h in (("f", f), ("g", g), ("cover_f", cover_f), ("cover_g", cover_g)):
        bad = check_continuity(h)
        if bad:
            report.append(f"{name} discontinuous at {bad[:3]}")
        if not h.is_based():
            report.append(f"{name} not based")
    for p in cover_f.domain:
        if floor_divide(cover_f(p), l) != f(floor_divide(p, l)):
            report.append(f"covering square for f fails at {p}")
            break
    for p in cover_g.domain:
        if floor_divide(cover_g(p), k) != g(floor_divide(p, k)):
            report.append(f"covering square for g fails at {p}")
            break
    fg = compose(f, cover_g)
    if witness_fg.left.table != fg.table:
        report.append("witness_fg left map is not f after cover_g")
    if witness_fg.right.table != DigitalMap.identity(y).table:
        report.append("witness_fg right map is not the identity")
    gf = compose(g, cover_f)
    if witness_gf.left.table != gf.table:
        report.append("witness_gf left map is not g after cover_f")
    if witness_gf.right.table != DigitalMap.identity(x).table:
        report.append("witness_gf right map is not the identity")
    report.extend(f"fg witness: {v}" for v in verify_map_witness(witness_fg))
    report.extend(f"gf witness: {v}" for v in verify_map_witness(witness_gf))
    return report
