"""Bounded search for loop homotopies, equivalence verdicts, and desk-scale
fundamental-group evidence."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from .core import (DigitalImage, DigitalMap, Point, adjacent, check_continuity,
                   diamond, neighbours, product_image)
from .covering import homotopy_cover_vs_reparam, standard_cover, subdivide_projection
from .homotopy import (EquivalenceWitness, HomotopyGrid, OF_BASED_LOOPS,
                       push_homotopy, verify_grid, verify_witness)
from .paths import (LatticeLoop, LatticePath, concat, constant_loop, make_path,
                    push, reparam, winding_hom)
from .subdivision import floor_divide, subdivide
from .subdivision import rho_partial as make_rho_partial

State = Tuple[Point, ...]


def homotopy_step(a: LatticePath, b: LatticePath) -> bool:
    """True iff stacking the two loops as adjacent grid rows is jointly continuous."""

    if a.target.points != b.target.points or a.target.basepoint != b.target.basepoint:
        raise ValueError("homotopy_step needs one based target")
    if a.length != b.length:
        raise ValueError("homotopy_step needs equal lengths")
    grid = HomotopyGrid(a.target, (a.steps, b.steps), OF_BASED_LOOPS)
    return not verify_grid(grid)


def _successors(image: DigitalImage, state: State, budget: List[int]) -> List[State]:
    """All rows one jointly-continuous step above the given row, sorted."""

    y0 = image.require_based()
    m = len(state) - 1
    candidate_sets: List[Tuple[Point, ...]] = []
    for s in range(1, m):
        allowed: Optional[Set[Point]] = None
        for q in (state[s - 1], state[s], state[s + 1]):
            ns = set(neighbours(image, q))
            allowed = ns if allowed is None else allowed & ns
        candidate_sets.append(tuple(sorted(allowed or ())))
    out: List[State] = []

    def extend(prefix: List[Point], idx: int) -> None:
        if budget[0] <= 0:
            return
        if idx == m:
            if adjacent(prefix[-1], y0):
                budget[0] -= 1
                out.append(tuple(prefix) + (y0,))
            return
        for q in candidate_sets[idx - 1]:
            if adjacent(prefix[-1], q):
                extend(prefix + [q], idx + 1)

    if m == 0:
        return [state]
    extend([y0], 1)
    return out


def _bfs(image: DigitalImage, start: State, goal: State, max_steps: int,
         trace: Optional[List[Tuple[State, State]]] = None
         ) -> Optional[List[State]]:
    """Breadth-first search under the step relation; returns the row chain."""

    if start == goal:
        return [start]
    budget = [max_steps]
    visited: Dict[State, Optional[State]] = {start: None}
    frontier: List[State] = [start]
    while frontier and budget[0] > 0:
        next_frontier: List[State] = []
        for state in frontier:
            for succ in _successors(image, state, budget):
                if trace is not None:
                    trace.append((state, succ))
                if succ in visited:
                    continue
                visited[succ] = state
                if succ == goal:
                    chain = [succ]
                    cur: Optional[State] = state
                    while cur is not None:
                        chain.append(cur)
                        cur = visited[cur]
                    chain.reverse()
                    return chain
                next_frontier.append(succ)
            if budget[0] <= 0:
                break
        frontier = next_frontier
    return None


def _chain_witness(a: LatticeLoop, b: LatticeLoop, k: int, l: int,
                   chain: Sequence[State]) -> EquivalenceWitness:
    image = a.target
    grids = tuple(
        HomotopyGrid(image, (chain[i], chain[i + 1]), OF_BASED_LOOPS)
        for i in range(len(chain) - 1)
    )
    return EquivalenceWitness(a, b, k, l, grids)


def equivalent_bounded(a: LatticeLoop, b: LatticeLoop, max_factor: int = 3,
                       max_steps: int = 20000,
                       trace: Optional[List[Tuple[State, State]]] = None
                       ) -> Optional[EquivalenceWitness]:
    """Search for a homotopy witness across all compatible factor pairs.

    None is not a proof of inequivalence; callers must consult invariants.
    """

    if a.target.points != b.target.points or a.target.basepoint != b.target.basepoint:
        raise ValueError("loops must share a based target")
    m, n = a.length + 1, b.length + 1
    pairs = sorted(
        (k * m, k, l)
        for k in range(1, max_factor + 1)
        for l in range(1, max_factor + 1)
        if k * m == l * n
    )
    for _, k, l in pairs:
        start = tuple(reparam(a, k).steps)
        goal = tuple(reparam(b, l).steps)
        chain = _bfs(a.target, start, goal, max_steps, trace)
        if chain is not None:
            w = _chain_witness(a, b, k, l, chain)
            bad = verify_witness(w)
            if bad:
                raise AssertionError(f"search produced an invalid witness: {bad[:3]}")
            return w
    return None


EQUIVALENT = "equivalent"
SEPARATED = "separated-by-invariant"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class Verdict:
    status: str
    witness: Optional[EquivalenceWitness] = None
    detail: str = ""


def _is_diamond(image: DigitalImage) -> bool:
    d = diamond()
    return set(image.points) == set(d.points) and image.basepoint == d.basepoint


def decide_equivalence(a: LatticeLoop, b: LatticeLoop, max_factor: int = 3,
                       max_steps: int = 20000,
                       trace: Optional[List[Tuple[State, State]]] = None) -> Verdict:
    """Three-valued equivalence verdict: witness, separating invariant, or neither."""

    if _is_diamond(a.target):
        ha, hb = winding_hom(a), winding_hom(b)
        if ha != hb:
            return Verdict(SEPARATED, detail=f"winding {ha} != {hb}")
    w = equivalent_bounded(a, b, max_factor, max_steps, trace)
    if w is not None:
        return Verdict(EQUIVALENT, witness=w)
    return Verdict(INCONCLUSIVE, detail="budget exhausted without a witness")


def induced_hom_check(f: DigitalMap,
                      witnesses: Iterable[EquivalenceWitness]) -> List[str]:
    """Push witnessed loop equivalences through a based map and re-verify."""

    report: List[str] = []
    if check_continuity(f):
        report.append("map is not continuous")
        return report
    if not f.is_based():
        report.append("map is not based")
        return report
    for i, w in enumerate(witnesses):
        left = push(f, w.left)
        right = push(f, w.right)
        if not isinstance(left, LatticeLoop) or not isinstance(right, LatticeLoop):
            report.append(f"witness {i}: pushed loops are not based loops")
            continue
        pushed = EquivalenceWitness(
            left, right, w.left_factor, w.right_factor,
            tuple(push_homotopy(f, g) for g in w.grids))
        report.extend(f"witness {i}: {v}" for v in verify_witness(pushed))
    return report


def product_split(a: LatticePath, x: DigitalImage,
                  y: DigitalImage) -> Tuple[LatticePath, LatticePath]:
    """Project a path in a product image onto its two factors."""

    prod = product_image(x, y)
    if set(a.target.points) != set(prod.points):
        raise ValueError("path does not live in the given product")
    ax = make_path(x, tuple(Point(p.coords[:x.dim]) for p in a.steps))
    ay = make_path(y, tuple(Point(p.coords[x.dim:]) for p in a.steps))
    return ax, ay


def product_join(ax: LatticePath, ay: LatticePath) -> LatticePath:
    """Pair two equal-length paths into a path in the product image."""

    if ax.length != ay.length:
        raise ValueError("product_join needs equal lengths")
    prod = product_image(ax.target, ay.target)
    return make_path(prod, tuple(
        Point(p.coords + q.coords) for p, q in zip(ax.steps, ay.steps)))


CONCLUSIVE = "conclusive"


@dataclass(frozen=True)
class EvidenceSample:
    direction: str          # surjectivity | injectivity
    loop: LatticePath
    verdict: str            # conclusive | separated-by-invariant | inconclusive
    detail: str = ""


@dataclass(frozen=True)
class RhoIsoReport:
    image: DigitalImage
    factor: int
    samples: Tuple[EvidenceSample, ...]

    def verdicts(self) -> List[str]:
        return [s.verdict for s in self.samples]

    def all_conclusive(self) -> bool:
        return all(s.verdict in (CONCLUSIVE, SEPARATED) for s in self.samples)


def random_based_loop(image: DigitalImage, length: int,
                      rng: random.Random) -> LatticeLoop:
    """A random based loop found by retrying random adjacent walks."""

    y0 = image.require_based()
    while True:
        steps = [y0]
        for _ in range(length - 1):
            steps.append(rng.choice(neighbours(image, steps[-1])))
        if adjacent(steps[-1], y0):
            steps.append(y0)
            loop = make_path(image, tuple(steps))
            assert isinstance(loop, LatticeLoop)
            return loop


def _surjectivity_sample(x: DigitalImage, k: int, loop: LatticeLoop) -> EvidenceSample:
    if k % 2 == 1:
        sc = standard_cover(loop, k)
        pushed = push(sc.subdivision.projection, sc.cover)
        if pushed.steps == reparam(loop, k).steps:
            return EvidenceSample(
                "surjectivity", loop, CONCLUSIVE,
                f"projection of the factor-{k} cover equals the reparametrized loop")
        return EvidenceSample("surjectivity", loop, INCONCLUSIVE,
                              "cover square failed")
    odd = k + 1
    sc = standard_cover(loop, odd)
    partial = make_rho_partial(x, odd)
    dropped = push(partial, sc.cover)
    proj_k = subdivide(x, k).projection
    if push(proj_k, dropped).steps == reparam(loop, odd).steps:
        return EvidenceSample(
            "surjectivity", loop, CONCLUSIVE,
            f"factor-{odd} cover dropped through the partial projection "
            f"projects to the reparametrized loop")
    return EvidenceSample("surjectivity", loop, INCONCLUSIVE,
                          "partial-projection route failed")


def _injectivity_sample(x: DigitalImage, k: int, loop: LatticeLoop,
                        max_steps: int) -> Optional[EvidenceSample]:
    """Evidence for one loop in S(X,k); None when its projection is not
    demonstrably null-homotopic."""

    sub = subdivide(x, k)
    projected = push(sub.projection, loop)
    assert isinstance(projected, LatticeLoop)
    proj_null = decide_equivalence(
        projected, constant_loop(x, projected.length), max_steps=max_steps)
    if proj_null.status != EQUIVALENT:
        return None
    notes = ["projection null-homotopic by search"]
    if k % 2 == 1 and k >= 3:
        chain = homotopy_cover_vs_reparam(loop, k // 2)
        if verify_grid(chain):
            return EvidenceSample("injectivity", loop, INCONCLUSIVE,
                                  "cover-vs-reparam chain failed to verify")
        notes.append("cover-vs-reparam chain verified")
    verdict = decide_equivalence(
        loop, constant_loop(loop.target, loop.length), max_steps=max_steps)
    if verdict.status == EQUIVALENT:
        notes.append("loop null-homotopic by search")
        return EvidenceSample("injectivity", loop, CONCLUSIVE, "; ".join(notes))
    return EvidenceSample("injectivity", loop, verdict.status,
                          "; ".join(notes + [verdict.detail]))


def rho_iso_evidence(x: DigitalImage, k: int, n_samples: int = 5,
                     seed: int = 7, max_steps: int = 20000,
                     loop_length: Optional[int] = None) -> RhoIsoReport:
    """Desk-scale evidence that the subdivision projection induces a
    fundamental-group isomorphism."""

    if k < 2:
        raise ValueError("evidence is for factors k >= 2")
    rng = random.Random(seed)
    samples: List[EvidenceSample] = []
    surj_len = loop_length or 4
    for _ in range(n_samples):
        loop = random_based_loop(x, surj_len, rng)
        samples.append(_surjectivity_sample(x, k, loop))
    sub_image = subdivide(x, k).image
    inj_len = loop_length or (4 if sub_image.dim == 1 else 2)
    found = 0
    attempts = 0
    while found < n_samples and attempts < 20 * n_samples:
        attempts += 1
        loop = random_based_loop(sub_image, inj_len, rng)
        sample = _injectivity_sample(x, k, loop, max_steps)
        if sample is not None:
            samples.append(sample)
            found += 1
    return RhoIsoReport(x, k, tuple(samples))


@dataclass
class LoopClass:
    representative: LatticeLoop
    members: List[LatticeLoop] = field(default_factory=list)
    invariant: Optional[int] = None
    unresolved: bool = False


@dataclass
class ClassTable:
    image: DigitalImage
    max_length: int
    budget: int
    classes: List[LoopClass] = field(default_factory=list)


def enumerate_based_loops(image: DigitalImage, max_length: int) -> List[LatticeLoop]:
    y0 = image.require_based()
    out: List[LatticeLoop] = []

    def walk(steps: List[Point], remaining: int) -> None:
        if steps[-1] == y0 and len(steps) > 1:
            loop = make_path(image, tuple(steps))
            assert isinstance(loop, LatticeLoop)
            out.append(loop)
        if remaining == 0:
            return
        for q in neighbours(image, steps[-1]):
            walk(steps + [q], remaining - 1)

    out.append(constant_loop(image, 0))
    walk([y0], max_length)
    return out


def build_class_table(image: DigitalImage, max_length: int,
                      budget: int = 20000, max_factor: int = 2) -> ClassTable:
    """Partition the enumerated based loops by bounded equivalence search."""

    table = ClassTable(image, max_length, budget)
    on_diamond = _is_diamond(image)
    for loop in enumerate_based_loops(image, max_length):
        invariant = winding_hom(loop) if on_diamond else None
        placed = False
        for cls in table.classes:
            if on_diamond and cls.invariant != invariant:
                continue
            verdict = decide_equivalence(loop, cls.representative,
                                         max_factor=max_factor, max_steps=budget)
            if verdict.status == EQUIVALENT:
                cls.members.append(loop)
                placed = True
                break
            if verdict.status == INCONCLUSIVE and on_diamond:
                # Same winding but no witness at this budget: keep separate,
                # flagged, rather than merging on the invariant alone.
                continue
        if not placed:
            table.classes.append(LoopClass(loop, [loop], invariant))
    return table
