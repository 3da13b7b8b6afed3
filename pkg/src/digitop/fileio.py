"""Line-oriented text formats for images, maps, loops, grids, and witnesses."""

from __future__ import annotations

import os
from pathlib import Path as FsPath
from typing import Callable, Dict, List, Optional, Tuple

from .core import DigitalImage, DigitalMap, Point
from .homotopy import EquivalenceWitness, HomotopyGrid, KINDS
from .paths import LatticeLoop, LatticePath, make_path

FIXTURE_ENV = "DIGITOP_FIXTURES"


class ParseError(ValueError):
    """Raised for malformed input files."""


def format_point(p: Point) -> str:
    return ",".join(str(c) for c in p.coords)


def parse_point(text: str) -> Point:
    try:
        return Point(tuple(int(c) for c in text.strip().split(",")))
    except ValueError as exc:
        raise ParseError(f"bad point {text!r}") from exc


def serialize_image(image: DigitalImage) -> str:
    lines = [f"dim={image.dim}"]
    if image.basepoint is not None:
        lines.append(f"basepoint={format_point(image.basepoint)}")
    lines.extend(format_point(p) for p in image.points)
    return "\n".join(lines) + "\n"


def parse_image(text: str) -> DigitalImage:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("dim="):
        raise ParseError("image file must start with dim=<n>")
    try:
        dim = int(lines[0][4:])
    except ValueError as exc:
        raise ParseError("bad dim header") from exc
    basepoint: Optional[Point] = None
    body = lines[1:]
    if body and body[0].startswith("basepoint="):
        basepoint = parse_point(body[0][len("basepoint="):])
        body = body[1:]
    points = [parse_point(ln) for ln in body]
    if any(p.dim != dim for p in points):
        raise ParseError("point dimension disagrees with header")
    try:
        return DigitalImage.of(points, basepoint)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def _fixture_dir() -> Optional[FsPath]:
    env = os.environ.get(FIXTURE_ENV)
    if env:
        return FsPath(env)
    here = FsPath(__file__).parent / "data"
    return here if here.is_dir() else None


def resolve_reference(ref: str, relative_to: Optional[FsPath]) -> FsPath:
    """Find a referenced file next to the referring file or in the fixture dir."""

    candidates = []
    if relative_to is not None:
        candidates.append(relative_to / ref)
    fixtures = _fixture_dir()
    if fixtures is not None:
        candidates.append(fixtures / ref)
    candidates.append(FsPath(ref))
    for c in candidates:
        if c.is_file():
            return c
    raise ParseError(f"cannot resolve reference {ref!r}")


def load_image(path: FsPath) -> DigitalImage:
    return parse_image(FsPath(path).read_text())


def serialize_map(f: DigitalMap, domain_ref: str, codomain_ref: str) -> str:
    lines = [f"domain={domain_ref}", f"codomain={codomain_ref}"]
    for p, q in f.table:
        lines.append(f"{format_point(p)} -> {format_point(q)}")
    return "\n".join(lines) + "\n"


def parse_map(text: str, relative_to: Optional[FsPath] = None) -> DigitalMap:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if len(lines) < 2 or not lines[0].startswith("domain=") \
            or not lines[1].startswith("codomain="):
        raise ParseError("map file needs domain= and codomain= headers")
    domain = load_image(resolve_reference(lines[0][len("domain="):], relative_to))
    codomain = load_image(resolve_reference(lines[1][len("codomain="):], relative_to))
    mapping: Dict[Point, Point] = {}
    for ln in lines[2:]:
        if "->" not in ln:
            raise ParseError(f"bad map line {ln!r}")
        lhs, rhs = ln.split("->", 1)
        mapping[parse_point(lhs)] = parse_point(rhs)
    try:
        return DigitalMap.of(domain, codomain, mapping)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def load_map(path: FsPath) -> DigitalMap:
    path = FsPath(path)
    return parse_map(path.read_text(), path.parent)


def serialize_loop(a: LatticePath, image_ref: str) -> str:
    lines = [f"image={image_ref}"]
    lines.extend(format_point(p) for p in a.steps)
    return "\n".join(lines) + "\n"


def parse_loop(text: str, relative_to: Optional[FsPath] = None) -> LatticePath:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("image="):
        raise ParseError("loop file needs an image= header")
    image = load_image(resolve_reference(lines[0][len("image="):], relative_to))
    steps = [parse_point(ln) for ln in lines[1:]]
    try:
        return make_path(image, tuple(steps))
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def load_loop(path: FsPath) -> LatticePath:
    path = FsPath(path)
    return parse_loop(path.read_text(), path.parent)


def _format_row(row: Tuple[Point, ...]) -> str:
    return ";".join(format_point(p) for p in row)


def _parse_row(text: str) -> Tuple[Point, ...]:
    return tuple(parse_point(part) for part in text.split(";"))


def serialize_grid(h: HomotopyGrid, image_ref: str) -> str:
    lines = [
        f"image={image_ref}",
        f"width={h.width}",
        f"height={h.height}",
        f"kind={h.kind}",
    ]
    lines.extend(_format_row(row) for row in h.rows)
    return "\n".join(lines) + "\n"


def parse_grid(text: str, relative_to: Optional[FsPath] = None) -> HomotopyGrid:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    headers: Dict[str, str] = {}
    body: List[str] = []
    for ln in lines:
        if "=" in ln and ";" not in ln and not body:
            key, value = ln.split("=", 1)
            headers[key] = value
        else:
            body.append(ln)
    for key in ("image", "width", "height", "kind"):
        if key not in headers:
            raise ParseError(f"grid file missing {key}= header")
    if headers["kind"] not in KINDS:
        raise ParseError(f"unknown grid kind {headers['kind']!r}")
    image = load_image(resolve_reference(headers["image"], relative_to))
    rows = tuple(_parse_row(ln) for ln in body)
    try:
        grid = HomotopyGrid(image, rows, headers["kind"])
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    if grid.width != int(headers["width"]) or grid.height != int(headers["height"]):
        raise ParseError("grid dimensions disagree with headers")
    return grid


def load_grid(path: FsPath) -> HomotopyGrid:
    path = FsPath(path)
    return parse_grid(path.read_text(), path.parent)


def serialize_witness(w: EquivalenceWitness, image_ref: str) -> str:
    lines = [
        f"image={image_ref}",
        f"left_factor={w.left_factor}",
        f"right_factor={w.right_factor}",
        f"left={_format_row(w.left.steps)}",
        f"right={_format_row(w.right.steps)}",
    ]
    for g in w.grids:
        lines.append("grid")
        lines.extend(_format_row(row) for row in g.rows)
        lines.append("end")
    return "\n".join(lines) + "\n"


def parse_witness(text: str,
                  relative_to: Optional[FsPath] = None) -> EquivalenceWitness:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    headers: Dict[str, str] = {}
    idx = 0
    while idx < len(lines) and lines[idx] != "grid":
        if "=" not in lines[idx]:
            raise ParseError(f"bad witness header {lines[idx]!r}")
        key, value = lines[idx].split("=", 1)
        headers[key] = value
        idx += 1
    for key in ("image", "left_factor", "right_factor", "left", "right"):
        if key not in headers:
            raise ParseError(f"witness file missing {key}= header")
    image = load_image(resolve_reference(headers["image"], relative_to))
    left = make_path(image, _parse_row(headers["left"]))
    right = make_path(image, _parse_row(headers["right"]))
    if not isinstance(left, LatticeLoop) or not isinstance(right, LatticeLoop):
        raise ParseError("witness endpoints must be based loops")
    grids: List[HomotopyGrid] = []
    while idx < len(lines):
        if lines[idx] != "grid":
            raise ParseError(f"expected grid block, got {lines[idx]!r}")
        idx += 1
        rows: List[Tuple[Point, ...]] = []
        while idx < len(lines) and lines[idx] != "end":
            rows.append(_parse_row(lines[idx]))
            idx += 1
        if idx == len(lines):
            raise ParseError("unterminated grid block")
        idx += 1
        grids.append(HomotopyGrid(image, tuple(rows), "of-based-loops"))
    return EquivalenceWitness(left, right, int(headers["left_factor"]),
                              int(headers["right_factor"]), tuple(grids))


def load_witness(path: FsPath) -> EquivalenceWitness:
    path = FsPath(path)
    return parse_witness(path.read_text(), path.parent)
