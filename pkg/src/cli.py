"""
Command-line front end.

    python -m src.cli normalize --space quadric:5 "(z1*m[2])^2"
    python -m src.cli basis --space quadric:3 --coset 2
    python -m src.cli lines27 --trace
"""

from __future__ import annotations

import argparse
import logging
import sys
from typing import Callable

from . import diagram, grassmann, identities, markdown_report, projspace, quadric, restrict
from .config import OUTPUT_FORMATS, Settings, get_settings, with_overrides
from .errors import EngineError, UsageError
from .expr_parser import evaluate
from .grading import coset, fixed_dims, parse_grading, rank
from .ring import RingElem, Space, mono_grading, parse_space, render_mono
from .schema import (
    GradingInfoModel,
    IdentityResultModel,
    IdentitySuiteModel,
    ImageModel,
    LinesReportModel,
    basis_model,
    burnside_model,
    element_model,
    grading_model,
)
from .table_cache import TableCache

log = logging.getLogger("eqquad.cli")


class Context:
    """Resolved settings plus the product table for the active space."""

    def __init__(self, args: argparse.Namespace, settings: Settings):
        self.args = args
        self.settings = settings
        self.space = parse_space(args.space or settings.default_space)
        self.table: TableCache | None = None
        if self.space.is_quadric and settings.use_cache:
            self.table = TableCache.for_space(self.space, settings.cache_dir, settings.cache_check_seed)

    @property
    def json(self) -> bool:
        return self.settings.output_format == "json"

    def read_expr(self, text: str) -> str:
        if text == "-":
            text = sys.stdin.read().strip()
        if not text:
            raise UsageError("empty expression")
        return text

    def evaluate(self, text: str) -> RingElem | restrict.NoneqQElem:
        return evaluate(self.read_expr(text), self.space, self.args.strategy, self.table)

    def ring_elem(self, text: str) -> RingElem:
        x = self.evaluate(text)
        if not isinstance(x, RingElem):
            raise UsageError(f"this command needs an equivariant space, not {self.space}")
        return x

    def close(self) -> None:
        if self.table is not None:
            log.debug("product table: %d hits, %d misses", self.table.hits, self.table.misses)
            self.table.save()


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _emit_element(ctx: Context, x: RingElem | restrict.NoneqQElem) -> None:
    if isinstance(x, restrict.NoneqQElem):
        if ctx.json:
            degrees = x.degrees()
            degree = next(iter(degrees)) if len(degrees) == 1 else None
            _emit(ImageModel(space=ctx.space.tag, map="noneq", text=x.render(), degree=degree).model_dump_json(indent=2))
        else:
            _emit(x.render())
        return
    _emit(element_model(x).model_dump_json(indent=2) if ctx.json else x.render())


# ── commands ───────────────────────────────────────────────────────────────────
def cmd_normalize(ctx: Context) -> None:
    _emit_element(ctx, ctx.evaluate(ctx.args.expr))


def cmd_mul(ctx: Context) -> None:
    x, y = ctx.evaluate(ctx.args.left), ctx.evaluate(ctx.args.right)
    if isinstance(x, restrict.NoneqQElem):
        _emit_element(ctx, x * y)
    elif ctx.space.is_quadric:
        _emit_element(ctx, quadric.mul(x, y, table=ctx.table))
    else:
        _emit_element(ctx, projspace.mul(x, y))


def _basis(space: Space, n: int) -> list:
    if space.is_quadric:
        return quadric.basis(space.p, n)
    if space.kind == "proj":
        return projspace.basis(space.p, space.q, n)
    raise UsageError(f"{space} has no finite basis")


def cmd_basis(ctx: Context) -> None:
    n = ctx.args.coset if ctx.args.coset is not None else 0
    space = ctx.space
    p = space.p if space.is_quadric else None
    entries = [(mono, mono_grading(mono, p)) for mono in _basis(space, n)]
    if ctx.json:
        _emit(basis_model(space.tag, entries, n, space).model_dump_json(indent=2))
        return
    width = max(len(render_mono(mono, space)) for mono, _ in entries)
    _emit("\n".join(f"{render_mono(mono, space):<{width}}  {g}" for mono, g in entries))


def cmd_ro2_basis(ctx: Context) -> None:
    p = ctx.args.p if ctx.args.p is not None else ctx.space.p
    if p is None:
        raise UsageError("ro2-basis needs p or a quadric space")
    entries = [(mono, mono_grading(mono, p)) for mono, _ in quadric.ro2_basis(p)]
    if ctx.json:
        _emit(basis_model(f"quadric:{p}", entries, 0).model_dump_json(indent=2))
        return
    width = max(len(render_mono(mono)) for mono, _ in entries)
    _emit("\n".join(f"{render_mono(mono):<{width}}  ({g.u},{g.s})  {g}" for mono, g in entries))


def cmd_grading(ctx: Context) -> None:
    if ctx.args.literal:
        g = parse_grading(ctx.read_expr(ctx.args.expr))
    else:
        g = ctx.ring_elem(ctx.args.expr).grading
    if g is None:
        info = GradingInfoModel(text="zero element, no grading")
    else:
        info = GradingInfoModel(
            grading=grading_model(g), text=str(g), rank=rank(g), fixed_dims=list(fixed_dims(g)), coset=coset(g)[0]
        )
    if ctx.json:
        _emit(info.model_dump_json(indent=2))
    elif g is None:
        _emit(info.text)
    else:
        _emit(f"{g}\nrank {info.rank}, fixed dims {tuple(info.fixed_dims)}, coset {info.coset}")


def cmd_restrict(ctx: Context) -> None:
    x = ctx.ring_elem(ctx.args.expr)
    image = restrict.rho_quadric(x)
    if ctx.json:
        model = ImageModel(space=ctx.space.tag, map="rho", text=image.render(), degree=restrict.noneq_degree(x))
        _emit(model.model_dump_json(indent=2))
    else:
        _emit(image.render())


def cmd_fixed(ctx: Context) -> None:
    image = restrict.fixed_quadric(ctx.ring_elem(ctx.args.expr))
    if ctx.json:
        tags = list(image.tags) if image.tags is not None else None
        _emit(ImageModel(space=ctx.space.tag, map="fixed", text=image.render(), tags=tags).model_dump_json(indent=2))
    else:
        _emit(image.render())


def cmd_divide(ctx: Context) -> None:
    x = ctx.ring_elem(ctx.args.expr)
    which = 0 if ctx.args.by == "z0" else 1
    if ctx.space.is_quadric:
        y = quadric.divide(x, which, ctx.args.power)
    else:
        y = projspace.divide(x, which, ctx.args.power)
    _emit_element(ctx, y)


def cmd_check_identities(ctx: Context) -> int:
    trace: list[str] = []
    checks = identities.run_suite(ctx.args.max_p, trace)
    failed = [chk for chk in checks if not chk.holds]
    if ctx.args.report:
        markdown_report.write_identity_report(checks, ctx.args.report)
    if ctx.json:
        model = IdentitySuiteModel(
            results=[IdentityResultModel(name=chk.name, holds=chk.holds) for chk in checks],
            passed=len(checks) - len(failed),
            failed=len(failed),
        )
        _emit(model.model_dump_json(indent=2))
    else:
        if ctx.args.trace:
            _emit("\n".join(trace))
        for chk in failed:
            _emit(f"FAILED {chk.name}: {chk.detail}")
        _emit(f"{len(checks) - len(failed)}/{len(checks)} identities hold")
    return 0 if not failed else 3


def cmd_lines27(ctx: Context) -> None:
    report = grassmann.lines_report()
    if ctx.args.report:
        markdown_report.write_lines_report(report, ctx.args.report)
    if ctx.json:
        model = LinesReportModel(
            euler=report.euler,
            coefficient=burnside_model(report.alpha),
            counts=report.counts,
            line_types=grassmann.LINE_TYPES,
            c2_set=report.c2_set,
            total=report.total,
            representatives=report.representatives,
            trace=report.trace if ctx.args.trace else [],
        )
        _emit(model.model_dump_json(indent=2))
        return
    lines = [report.euler, ""]
    if ctx.args.trace:
        lines += [f"  {step}" for step in report.trace] + [""]
    for key, count in report.counts.items():
        lines.append(f"type {key:<3} {grassmann.LINE_TYPES[key]}: {count}")
    lines += [f"as a C2-set: {report.c2_set}", f"total: {report.total}", ""]
    lines += [f"{name} = {rep}" for name, rep in report.representatives.items()]
    _emit("\n".join(lines))


def cmd_diagram(ctx: Context) -> None:
    if ctx.args.kind == "ro2-basis":
        p = ctx.args.p if ctx.args.p is not None else ctx.space.p
        if p is None:
            raise UsageError("diagram ro2-basis needs p")
        chart = diagram.ro2_chart(p)
    else:
        chart = diagram.hpoint_chart(ctx.args.radius)
    out = diagram.render_svg(chart) if ctx.settings.output_format == "svg" else diagram.render_text(chart)
    if ctx.args.output:
        from pathlib import Path

        path = Path(ctx.args.output)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(out, encoding="utf-8")
    else:
        _emit(out)


COMMANDS: dict[str, Callable[[Context], int | None]] = {
    "normalize": cmd_normalize,
    "mul": cmd_mul,
    "basis": cmd_basis,
    "ro2-basis": cmd_ro2_basis,
    "grading": cmd_grading,
    "restrict": cmd_restrict,
    "fixed": cmd_fixed,
    "divide": cmd_divide,
    "check-identities": cmd_check_identities,
    "lines27": cmd_lines27,
    "diagram": cmd_diagram,
}


# ── argument parsing ───────────────────────────────────────────────────────────
def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--space", help="proj:p|q, quadric:p, grass:2|3+1, noneq:p, bu1 or point")
    common.add_argument("--coset", type=int, help="coset index n for basis")
    common.add_argument("--format", choices=OUTPUT_FORMATS, dest="output_format")
    common.add_argument("--no-cache", action="store_true", help="neither read nor write product tables")
    common.add_argument("--trace", action="store_true", help="print derivation traces")
    common.add_argument("--report", help="write a markdown report to this path")
    common.add_argument("--strategy", choices=("eager", "lazy"), default="eager")
    common.add_argument("--log-level")

    ap = argparse.ArgumentParser(prog="eqquad", description="Equivariant cohomology of antisymmetric quadrics.")
    sp = ap.add_subparsers(dest="cmd", required=True)

    sp.add_parser("normalize", parents=[common]).add_argument("expr")
    mul = sp.add_parser("mul", parents=[common])
    mul.add_argument("left")
    mul.add_argument("right")
    sp.add_parser("basis", parents=[common])
    sp.add_parser("ro2-basis", parents=[common]).add_argument("p", type=int, nargs="?")
    grading = sp.add_parser("grading", parents=[common])
    grading.add_argument("expr")
    grading.add_argument("--literal", action="store_true", help="read EXPR as a grading such as '2O1 + 8'")
    sp.add_parser("restrict", parents=[common]).add_argument("expr")
    sp.add_parser("fixed", parents=[common]).add_argument("expr")
    div = sp.add_parser("divide", parents=[common])
    div.add_argument("expr")
    div.add_argument("--by", choices=("z0", "z1"), default="z0")
    div.add_argument("--power", type=int, default=1)
    sp.add_parser("check-identities", parents=[common]).add_argument("--max-p", type=int, default=6)
    sp.add_parser("lines27", parents=[common])
    dia = sp.add_parser("diagram", parents=[common])
    dia.add_argument("kind", choices=("ro2-basis", "hpoint-chart", "hpoint"))
    dia.add_argument("p", type=int, nargs="?")
    dia.add_argument("--radius", type=int, default=8)
    dia.add_argument("--output")
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else UsageError.exit_code

    ctx: Context | None = None
    try:
        settings = with_overrides(
            get_settings(),
            output_format=args.output_format,
            log_level=args.log_level.upper() if args.log_level else None,
            use_cache=False if args.no_cache else None,
        )
        logging.basicConfig(
            level=getattr(logging, settings.log_level, logging.WARNING),
            format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        )
        if settings.output_format == "svg" and args.cmd != "diagram":
            raise UsageError("--format svg is only available for diagram")
        ctx = Context(args, settings)
        code = COMMANDS[args.cmd](ctx) or 0
        ctx.close()
        return code
    except EngineError as exc:
        log.debug("command failed", exc_info=True)
        sys.stderr.write(f"error: {exc}\n")
        return exc.exit_code
    except RuntimeError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return UsageError.exit_code


if __name__ == "__main__":
    sys.exit(main())
