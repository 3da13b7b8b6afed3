"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import sys
from pathlib import Path as FsPath
from typing import Callable, Optional

import click

from .core import check_continuity
from .covering import homotopy_beta_vs_cover, homotopy_beta_vs_reparam, \
    homotopy_cover_vs_reparam, standard_cover
from .fileio import (ParseError, load_grid, load_image, load_loop, load_map,
                     parse_grid, parse_image, parse_loop, serialize_grid,
                     serialize_image, serialize_loop, serialize_map,
                     serialize_witness)
from .homotopy import (cube_contraction, inverse_homotopy, reparam_homotopy,
                       verify_grid)
from .oracle import (EQUIVALENT, build_class_table, decide_equivalence)
from .paths import LatticeLoop, winding, winding_hom
from .subdivision import subdivide
from .suite import CHECKS, run_suite
from .svg import render_grid_svg, render_image_svg, render_path_svg


def _load(loader: Callable, path: str):
    try:
        return loader(FsPath(path))
    except (ParseError, OSError, ValueError) as exc:
        raise click.UsageError(f"{path}: {exc}")


def _write(text: str, out: Optional[str]) -> None:
    if out is None:
        click.echo(text, nl=False)
    else:
        FsPath(out).write_text(text)


@click.group()
def main() -> None:
    """Digital-image homotopy toolkit."""


@main.command("check-map")
@click.argument("map_file")
def cmd_check_map(map_file: str) -> None:
    """Check a map file for adjacency preservation."""

    f = _load(load_map, map_file)
    bad = check_continuity(f)
    if bad:
        for p, q in bad:
            click.echo(f"continuity fails on pair {p} ~ {q}")
        sys.exit(1)
    click.echo("continuous")


@main.command("subdivide")
@click.argument("image_file")
@click.argument("k", type=int)
@click.option("--out", default=None, help="Output basename (default: input stem).")
def cmd_subdivide(image_file: str, k: int, out: Optional[str]) -> None:
    """Emit the k-subdivision of an image and its projection map."""

    image = _load(load_image, image_file)
    if k < 1:
        raise click.UsageError("k must be at least 1")
    sub = subdivide(image, k)
    base = FsPath(out) if out else FsPath(image_file).with_suffix("")
    img_path = base.parent / f"{base.name}.sub{k}.img"
    map_path = base.parent / f"{base.name}.sub{k}.map"
    img_path.write_text(serialize_image(sub.image))
    map_path.write_text(serialize_map(sub.projection, img_path.name,
                                      FsPath(image_file).name))
    click.echo(f"wrote {img_path} and {map_path}")


@main.command("cover")
@click.argument("path_file")
@click.argument("odd", type=int)
@click.option("--out", default=None, help="Output basename (default: input stem).")
def cmd_cover(path_file: str, odd: int, out: Optional[str]) -> None:
    """Emit the standard cover of a path in the odd subdivision."""

    path = _load(load_loop, path_file)
    try:
        sc = standard_cover(path, odd)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    base = FsPath(out) if out else FsPath(path_file).with_suffix("")
    img_path = base.parent / f"{base.name}.cover{odd}.img"
    loop_path = base.parent / f"{base.name}.cover{odd}.loop"
    img_path.write_text(serialize_image(sc.subdivision.image))
    loop_path.write_text(serialize_loop(sc.cover, img_path.name))
    click.echo(f"wrote {img_path} and {loop_path}")


def _emit_grid(grid, base: FsPath, label: str) -> None:
    img_path = base.parent / f"{base.name}.{label}.img"
    grid_path = base.parent / f"{base.name}.{label}.grid"
    img_path.write_text(serialize_image(grid.target))
    grid_path.write_text(serialize_grid(grid, img_path.name))
    click.echo(f"wrote {img_path} and {grid_path}")


@main.command("cover-homotopy")
@click.argument("loop_file")
@click.argument("odd", type=int)
@click.option("--out", default=None, help="Output basename (default: input stem).")
def cmd_cover_homotopy(loop_file: str, odd: int, out: Optional[str]) -> None:
    """Emit the grid joining a reparametrized loop to its standard cover."""

    loop = _load(load_loop, loop_file)
    if odd < 3 or odd % 2 == 0:
        raise click.UsageError("factor must be odd and at least 3")
    if not isinstance(loop, LatticeLoop):
        raise click.UsageError("cover homotopies need a based loop")
    try:
        grid = homotopy_cover_vs_reparam(loop, odd // 2)
    except (ValueError, AssertionError) as exc:
        raise click.UsageError(str(exc))
    base = FsPath(out) if out else FsPath(loop_file).with_suffix("")
    _emit_grid(grid, base, f"coverhom{odd}")


@main.command("make-homotopy")
@click.argument("constructor",
                type=click.Choice(["reparam", "inverse", "cube",
                                   "beta-vs-reparam", "beta-vs-cover",
                                   "cover-vs-reparam"]))
@click.argument("args", nargs=-1)
@click.option("--out", default=None, help="Output basename (default: constructor name).")
def cmd_make_homotopy(constructor: str, args, out: Optional[str]) -> None:
    """Build a named homotopy grid and emit it as files.

    \b
    reparam LOOP_FILE K [right|left]
    inverse PATH_FILE [dot|star]
    cube M [interval-0M|interval-symmetric]
    beta-vs-reparam LOOP_FILE K
    beta-vs-cover LOOP_FILE K
    cover-vs-reparam LOOP_FILE K
    """

    try:
        if constructor == "reparam":
            loop = _load(load_loop, args[0])
            side = args[2] if len(args) > 2 else "right"
            grid = reparam_homotopy(loop, int(args[1]), side)
        elif constructor == "inverse":
            path = _load(load_loop, args[0])
            grid = inverse_homotopy(path, args[1] if len(args) > 1 else "dot")
        elif constructor == "cube":
            grid = cube_contraction(int(args[0]),
                                    args[1] if len(args) > 1 else "interval-0M")
        else:
            loop = _load(load_loop, args[0])
            k = int(args[1])
            fn = {
                "beta-vs-reparam": homotopy_beta_vs_reparam,
                "beta-vs-cover": homotopy_beta_vs_cover,
                "cover-vs-reparam": homotopy_cover_vs_reparam,
            }[constructor]
            grid = fn(loop, k)
    except (IndexError, ValueError, AssertionError) as exc:
        raise click.UsageError(f"bad arguments for {constructor}: {exc}")
    base = FsPath(out) if out else FsPath(constructor)
    _emit_grid(grid, base, "made")


@main.command("verify-grid")
@click.argument("grid_file")
def cmd_verify_grid(grid_file: str) -> None:
    """Replay joint-continuity and boundary verification of a grid file."""

    grid = _load(load_grid, grid_file)
    bad = verify_grid(grid)
    if bad:
        for line in bad:
            click.echo(line)
        sys.exit(1)
    click.echo(f"verified: {grid.width + 1} x {grid.height + 1} {grid.kind}")


@main.command("winding")
@click.argument("loop_file")
def cmd_winding(loop_file: str) -> None:
    """Print the winding number of a Diamond loop and its quarter value."""

    loop = _load(load_loop, loop_file)
    try:
        w = winding(loop)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    if isinstance(loop, LatticeLoop):
        click.echo(f"w = {w}, h = {winding_hom(loop)}")
    else:
        click.echo(f"w = {w} (open path)")


@main.command("equiv")
@click.argument("loop_a")
@click.argument("loop_b")
@click.option("--budget", default=20000, show_default=True,
              help="Search-state budget.")
@click.option("--max-len", "max_factor", default=3, show_default=True,
              help="Largest reparametrization factor tried.")
@click.option("--out", default=None, help="Witness file to write on success.")
def cmd_equiv(loop_a: str, loop_b: str, budget: int, max_factor: int,
              out: Optional[str]) -> None:
    """Decide loop equivalence: witness, separating invariant, or inconclusive."""

    a = _load(load_loop, loop_a)
    b = _load(load_loop, loop_b)
    if not isinstance(a, LatticeLoop) or not isinstance(b, LatticeLoop):
        raise click.UsageError("equiv needs based loops")
    try:
        verdict = decide_equivalence(a, b, max_factor=max_factor,
                                     max_steps=budget)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    click.echo(verdict.status + (f": {verdict.detail}" if verdict.detail else ""))
    if verdict.status == EQUIVALENT:
        if out is not None and verdict.witness is not None:
            FsPath(out).write_text(
                serialize_witness(verdict.witness, FsPath(loop_a).name))
            click.echo(f"wrote {out}")
        return
    sys.exit(1)


@main.command("pi1")
@click.argument("image_file")
@click.option("--max-len", default=4, show_default=True,
              help="Longest loop enumerated.")
@click.option("--budget", default=20000, show_default=True,
              help="Search-state budget per comparison.")
def cmd_pi1(image_file: str, max_len: int, budget: int) -> None:
    """Print the bounded loop-class table of a based image."""

    image = _load(load_image, image_file)
    try:
        table = build_class_table(image, max_len, budget)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    click.echo(f"{len(table.classes)} classes among loops of length <= {max_len}")
    for i, cls in enumerate(table.classes):
        inv = "" if cls.invariant is None else f" h={cls.invariant}"
        rep = " ".join(str(p.coords) for p in cls.representative.steps)
        click.echo(f"class {i}:{inv} {len(cls.members)} members, rep {rep}")


@main.command("dc-example")
def cmd_dc_example() -> None:
    """Replay the worked equivalence of the two digital circles."""

    failures = CHECKS["dc-example"]()
    for line in failures:
        click.echo(f"FAIL {line}")
    if failures:
        sys.exit(1)
    click.echo("subdivision equivalence data accepted")
    click.echo("every continuous based map into the octagon lands in x >= 0")
    click.echo("the right-arc contraction verifies as a homotopy of maps")


@main.command("verify-paper-suite")
@click.option("--only", default=None,
              help="Run only checks whose name contains this substring.")
def cmd_verify_paper_suite(only: Optional[str]) -> None:
    """Run every named verification suite."""

    results = run_suite(only)
    if not results:
        raise click.UsageError(f"no check matches {only!r}")
    failed = False
    for name, bad in results.items():
        status = "ok" if not bad else "FAIL"
        click.echo(f"{status:4} {name}")
        for line in bad[:5]:
            click.echo(f"     {line}")
        failed = failed or bool(bad)
    if failed:
        sys.exit(1)


@main.command("render")
@click.argument("object_file")
@click.option("--out", default=None, help="SVG file (default: stdout).")
def cmd_render(object_file: str, out: Optional[str]) -> None:
    """Render an image, loop, or grid file as SVG."""

    path = FsPath(object_file)
    try:
        text = path.read_text()
    except OSError as exc:
        raise click.UsageError(str(exc))
    first = next((ln for ln in text.splitlines() if ln.strip()), "")
    try:
        if first.startswith("dim="):
            svg = render_image_svg(parse_image(text))
        elif any(ln.strip().startswith("width=") for ln in text.splitlines()):
            svg = render_grid_svg(parse_grid(text, path.parent))
        elif first.startswith("image="):
            svg = render_path_svg(parse_loop(text, path.parent))
        else:
            raise click.UsageError(f"unrecognized object file {object_file}")
    except ParseError as exc:
        raise click.UsageError(str(exc))
    _write(svg, out)


if __name__ == "__main__":
    main()
