"""Paths and based loops over digital intervals, plus winding numbers on the Diamond."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from .core import DigitalImage, DigitalMap, Point, adjacent, diamond, pt


@dataclass(frozen=True)
class LatticePath:
    """An adjacency-respecting point sequence; length N means N+1 entries."""

    target: DigitalImage
    steps: Tuple[Point, ...]

    def __post_init__(self) -> None:
        if not self.steps:
            raise ValueError("path needs at least one point")
        members = set(self.target.points)
        for p in self.steps:
            if p not in members:
                raise ValueError(f"{p} outside the target image")
        for a, b in zip(self.steps, self.steps[1:]):
            if not adjacent(a, b):
                raise ValueError(f"consecutive points not adjacent: {a}, {b}")

    @property
    def length(self) -> int:
        return len(self.steps) - 1

    @property
    def start(self) -> Point:
        return self.steps[0]

    @property
    def end(self) -> Point:
        return self.steps[-1]

    def __call__(self, i: int) -> Point:
        return self.steps[i]

    def is_loop(self) -> bool:
        y0 = self.target.basepoint
        return y0 is not None and self.start == y0 and self.end == y0


class LatticeLoop(LatticePath):
    """A path pinned to the target's basepoint at both ends."""

    def __post_init__(self) -> None:
        super().__post_init__()
        y0 = self.target.require_based()
        if self.start != y0 or self.end != y0:
            raise ValueError("loop endpoints must equal the basepoint")


def make_path(target: DigitalImage, steps: Sequence[Point]) -> LatticePath:
    """Build a path, promoting it to a loop when the endpoints allow."""

    steps = tuple(steps)
    y0 = target.basepoint
    if y0 is not None and steps and steps[0] == y0 and steps[-1] == y0:
        return LatticeLoop(target, steps)
    return LatticePath(target, steps)


def concat(a: LatticePath, b: LatticePath) -> LatticePath:
    """The product with a unit pause: juxtaposition of both full sequences."""

    if a.target.points != b.target.points:
        raise ValueError("concat requires a common target")
    if not adjacent(a.end, b.start):
        raise ValueError(f"junction not adjacent: {a.end}, {b.start}")
    return make_path(a.target, a.steps + b.steps)


def short_concat(a: LatticePath, b: LatticePath) -> LatticePath:
    """Concatenation dropping the duplicated junction point."""

    if a.target.points != b.target.points:
        raise ValueError("short_concat requires a common target")
    if a.end != b.start:
        raise ValueError(f"short_concat needs equal endpoints: {a.end}, {b.start}")
    return make_path(a.target, a.steps + b.steps[1:])


def reverse(a: LatticePath) -> LatticePath:
    return make_path(a.target, tuple(reversed(a.steps)))


def constant_path(y: Point, n: int, target: DigitalImage) -> LatticePath:
    if y not in target:
        raise ValueError(f"{y} outside the target image")
    return make_path(target, (y,) * (n + 1))


def constant_loop(target: DigitalImage, n: int) -> LatticeLoop:
    loop = constant_path(target.require_based(), n, target)
    assert isinstance(loop, LatticeLoop)
    return loop


def reparam(a: LatticePath, k: int) -> LatticePath:
    """Precompose with the subdivision projection: each point repeated k times."""

    if k < 1:
        raise ValueError("reparametrization factor must be at least 1")
    return make_path(a.target, tuple(a.steps[s // k] for s in range(k * len(a.steps))))


def push(f: DigitalMap, a: LatticePath) -> LatticePath:
    """The pointwise image of a path under a continuous map."""

    if a.target.points != f.domain.points:
        raise ValueError("path target does not match the map's domain")
    return make_path(f.codomain, tuple(f(p) for p in a.steps))


_CYCLE = (pt(1, 0), pt(0, 1), pt(-1, 0), pt(0, -1))


def cycle_point(n: int) -> Point:
    """The n-th point of the Diamond's four-cycle, starting at (1,0)."""

    return _CYCLE[n % 4]


@dataclass(frozen=True)
class WindingLift:
    """The unique integer lift of a Diamond loop through the four-cycle."""

    loop: LatticePath
    lift: Tuple[int, ...]

    @property
    def winding(self) -> int:
        return self.lift[-1] - self.lift[0]


def lift_loop_D(a: LatticePath, n0: int = 0) -> WindingLift:
    """Lift a Diamond loop to the integers, stepping by at most one per index."""

    d = diamond()
    if set(a.target.points) != set(d.points) or a.target.basepoint != d.basepoint:
        raise ValueError("winding lift is defined on the Diamond only")
    if cycle_point(n0) != a.steps[0]:
        raise ValueError(f"n0={n0} does not project to the first loop point")
    lift: List[int] = [n0]
    for q in a.steps[1:]:
        candidates = [lift[-1] + d_ for d_ in (-1, 0, 1) if cycle_point(lift[-1] + d_) == q]
        if len(candidates) != 1:
            raise AssertionError(f"lift step not unique at {q}: {candidates}")
        lift.append(candidates[0])
    return WindingLift(a, tuple(lift))


def winding(a: LatticePath) -> int:
    w = lift_loop_D(a).winding
    if a.is_loop() and w % 4 != 0:
        raise AssertionError(f"loop winding {w} not a multiple of 4")
    return w


def winding_hom(a: LatticeLoop) -> int:
    """The quarter-winding integer realizing the Diamond's fundamental group."""

    return winding(a) // 4


def generator_loop() -> LatticeLoop:
    """The basic length-four loop once around the Diamond."""

    d = diamond()
    loop = make_path(d, tuple(cycle_point(n) for n in range(5)))
    assert isinstance(loop, LatticeLoop)
    return loop


def power_loop(n: int) -> LatticeLoop:
    """The |n|-fold concatenation of the generator, reversed for negative n."""

    d = diamond()
    if n == 0:
        return constant_loop(d, 0)
    base = generator_loop() if n > 0 else reverse(generator_loop())
    out: LatticePath = base
    for _ in range(abs(n) - 1):
        out = concat(out, base)
    assert isinstance(out, LatticeLoop)
    return out
