"""Command line front end.

Subcommands:

    transform  evaluate the left/right Laplace transform of a JSON-described
               time function on a probe grid
    regprod    star-multiply two series and emit the product coefficients
    eval       evaluate a series on a probe grid
    verify     run a named property suite (algebra | regularity | laplace | all)
    table      tabulate a built-in slice regular function on a probe grid

Probe files are JSON: {"points": [[w,x,y,z], ...]} or
{"grid": {"re": [start, stop, n], "units": ["i", "j", [0,x,y,z]],
"im": [start, stop, n]}}; grids expand in canonical order (real part
ascending, units as declared, imaginary part ascending).  Exit codes: 0 ok,
1 accuracy or property failure, 2 usage error.
"""

from __future__ import annotations

import json
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Callable, Optional

import click

from .errors import AccuracyError, DomainError, SliceRegularError, UsageError
from .laplace import QuadratureConfig, exp_transform_closed_form, laplace_left, laplace_right
from .quaternion import I, J, K, Quaternion, quat_from_list, slice_embed, unit_imaginary
from .series import RegularSeries, Side
from .slicefn import cauchy_kernel, cauchy_kernel_right, exp_function
from .suites import run_suite
from .timefunctions import time_function_from_json

_UNIT_NAMES = {"i": I, "j": J, "k": K}


def _load_spec(value: Optional[str], what: str):
    if value is None:
        raise UsageError(f"missing --input for {what}")
    text = value
    if not value.lstrip().startswith(("{", "[")):
        path = Path(value)
        if not path.exists():
            raise UsageError(f"{what} file {value!r} does not exist")
        text = path.read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(
            f"malformed JSON for {what} at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc


def _parse_unit(u) -> Quaternion:
    if isinstance(u, str):
        if u in _UNIT_NAMES:
            return _UNIT_NAMES[u]
        raise UsageError(f"unknown unit name {u!r}; use i, j, k or a component list")
    q = quat_from_list(u)
    if abs(q.w) > 1e-12:
        raise UsageError("probe units must be purely imaginary")
    return unit_imaginary(q.x, q.y, q.z)


def _expand_axis(spec, field: str) -> list[float]:
    try:
        start, stop, count = float(spec[0]), float(spec[1]), int(spec[2])
    except (TypeError, ValueError, IndexError) as exc:
        raise UsageError(f"grid field {field!r} must be [start, stop, count]: {exc}") from exc
    if count < 1:
        raise UsageError(f"grid field {field!r} needs count >= 1")
    if count == 1:
        return [start]
    return [start + (stop - start) * k / (count - 1) for k in range(count)]


def _parse_probes(value: Optional[str]) -> list[Quaternion]:
    if value is None:
        raise UsageError("missing --probes")
    data = _load_spec(value, "probes")
    if isinstance(data, list):
        return [quat_from_list(p) for p in data]
    if "points" in data:
        return [quat_from_list(p) for p in data["points"]]
    if "grid" in data:
        g = data["grid"]
        try:
            res = sorted(_expand_axis(g["re"], "re"))
            ims = sorted(_expand_axis(g["im"], "im"))
            units = [_parse_unit(u) for u in g["units"]]
        except KeyError as exc:
            raise UsageError(f"grid descriptor is missing field {exc}") from exc
        return [slice_embed(x, y, u) for x in res for u in units for y in ims]
    raise UsageError("probes must contain 'points' or 'grid'")


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _flatten(record: dict) -> dict[str, str]:
    flat: dict[str, str] = {}
    for key, value in record.items():
        if isinstance(value, (list, tuple)) and len(value) == 4:
            for suffix, comp in zip("wxyz", value):
                flat[f"{key}_{suffix}"] = _fmt(comp)
        elif isinstance(value, bool):
            flat[key] = "true" if value else "false"
        elif isinstance(value, float):
            flat[key] = _fmt(value)
        elif isinstance(value, int):
            flat[key] = str(value)
        elif value is None:
            flat[key] = ""
        else:
            flat[key] = str(value)
    return flat


def _emit(records: list[dict], fmt: str, out: Optional[str],
          preamble: Optional[dict] = None) -> None:
    if fmt == "json":
        payload = dict(preamble or {})
        payload["records"] = records
        text = json.dumps(payload, indent=2) + "\n"
    else:
        flats = [_flatten(r) for r in records]
        fieldnames: list[str] = []
        for flat in flats:
            for key in flat:
                if key not in fieldnames:
                    fieldnames.append(key)
        lines = [",".join(fieldnames)]
        for flat in flats:
            lines.append(",".join(flat.get(k, "") for k in fieldnames))
        text = "\n".join(lines) + "\n"
    if out:
        Path(out).write_text(text)
    else:
        click.echo(text, nl=False)


def _map_probes(worker: Callable[[Quaternion], dict], probes: list[Quaternion]) -> list[dict]:
    """Evaluate probes concurrently, assembling output in canonical order."""
    if len(probes) <= 1:
        return [worker(s) for s in probes]
    with ThreadPoolExecutor(max_workers=min(8, len(probes))) as pool:
        return list(pool.map(worker, probes))


def _io_options(fn):
    for option in reversed([
        click.option("--input", "input_", metavar="FILE|JSON", default=None,
                     help="input spec, as a file path or inline JSON"),
        click.option("--probes", metavar="FILE|JSON", default=None,
                     help="probe points or grid, as a file path or inline JSON"),
        click.option("--tol", type=float, default=None, help="accuracy target"),
        click.option("--format", "fmt", type=click.Choice(["json", "csv"]),
                     default="json", help="output format"),
        click.option("--seed", type=int, default=0,
                     help="seed for randomized property suites"),
        click.option("--out", type=click.Path(), default=None,
                     help="output file (default: stdout)"),
    ]):
        fn = option(fn)
    return fn


@click.group()
def cli():
    """Slice regular function calculus and quaternionic Laplace transforms."""


@cli.command()
@_io_options
def transform(input_, probes, tol, fmt, seed, out):
    """Evaluate the Laplace transform of a time function at probe points.

    The input JSON describes the time function ({"kind": "exp", "b": [...]},
    "poly", "heaviside_shift", "sum", "scale"); an optional top-level
    "side": "left"|"right" selects the transform (default left).
    """
    try:
        spec = _load_spec(input_, "transform")
        if not isinstance(spec, dict):
            raise UsageError("transform input must be a JSON object")
        side_name = spec.pop("side", "left")
        try:
            side = Side(side_name)
        except ValueError as exc:
            raise UsageError(f"side must be 'left' or 'right', got {side_name!r}") from exc
        fn = time_function_from_json(spec)
        cfg = QuadratureConfig(abs_tol=tol) if tol else QuadratureConfig()
        result = laplace_left(fn, cfg) if side is Side.LEFT else laplace_right(fn, cfg)
        points = _parse_probes(probes)

        def worker(s: Quaternion) -> dict:
            try:
                value, err = result.evaluate_with_error(s)
                return {"s": s.to_list(), "value": value.to_list(), "est_error": err}
            except (DomainError, AccuracyError) as exc:
                return {"s": s.to_list(), "error": str(exc)}

        records = _map_probes(worker, points)
        _emit(records, fmt, out)
        if any("error" in r for r in records):
            sys.exit(1)
    except UsageError as exc:
        raise click.UsageError(str(exc)) from exc
    except SliceRegularError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)


@cli.command()
@_io_options
def regprod(input_, probes, tol, fmt, seed, out):
    """Star-multiply two series: input JSON {"f": <series>, "g": <series>}.

    A series is {"side": "left"|"right", "coeffs": [[w,x,y,z], ...]}.  Emits
    the product coefficients; with --probes, an evaluation table instead
    (JSON output always carries the coefficients).
    """
    try:
        spec = _load_spec(input_, "regprod")
        try:
            f = RegularSeries.from_json_dict(spec["f"])
            g = RegularSeries.from_json_dict(spec["g"])
        except (KeyError, TypeError) as exc:
            raise UsageError(f"regprod input needs series fields 'f' and 'g': {exc}") from exc
        product = f.star(g)
        preamble = {"side": product.side.value,
                    "coeffs": [c.to_list() for c in product.coeffs]}
        if probes is not None:
            points = _parse_probes(probes)
            records = _map_probes(
                lambda q: {"q": q.to_list(), "value": product(q).to_list()}, points)
        else:
            records = [{"n": n, "coeff": c.to_list()} for n, c in enumerate(product.coeffs)]
        _emit(records, fmt, out, preamble if fmt == "json" else None)
    except UsageError as exc:
        raise click.UsageError(str(exc)) from exc
    except SliceRegularError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)


@cli.command("eval")
@_io_options
def eval_series(input_, probes, tol, fmt, seed, out):
    """Evaluate a series (side-aware Horner) at probe points."""
    try:
        spec = _load_spec(input_, "eval")
        if not isinstance(spec, dict):
            raise UsageError("eval input must be a series object")
        series = RegularSeries.from_json_dict(spec)
        points = _parse_probes(probes)

        def worker(q: Quaternion) -> dict:
            report = series.evaluate(q)
            return {"q": q.to_list(), "value": report.value.to_list(),
                    "terms_used": report.terms_used, "trunc_bound": report.trunc_bound}

        _emit(_map_probes(worker, points), fmt, out)
    except UsageError as exc:
        raise click.UsageError(str(exc)) from exc
    except SliceRegularError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)


@cli.command()
@click.argument("suite", type=str)
@_io_options
def verify(suite, input_, probes, tol, fmt, seed, out):
    """Run a named property suite; exit 0 iff every property passes."""
    try:
        if tol is not None and tol <= 0:
            raise UsageError("--tol must be positive")
        checks = run_suite(suite, seed=seed, tol=tol)
    except UsageError as exc:
        raise click.UsageError(str(exc)) from exc
    records = [c.to_json_dict() for c in checks]
    _emit(records, fmt, out, {"suite": suite, "seed": seed})
    failures = [c for c in checks if not c.passed]
    for c in failures:
        click.echo(
            f"FAIL [{c.suite}] {c.name}: residual {c.residual:.3e} vs "
            f"threshold {c.threshold:.1e} ({c.mode})", err=True)
    if failures:
        sys.exit(1)


_TABLE_BUILTINS = ("exp", "cauchy_kernel", "cauchy_kernel_right", "exp_transform")


@cli.command()
@_io_options
def table(input_, probes, tol, fmt, seed, out):
    """Tabulate a built-in function on a probe grid.

    Inputs: {"function": "exp"} | {"function": "cauchy_kernel", "s": [...]}
    | {"function": "cauchy_kernel_right", "q": [...]} |
    {"function": "exp_transform", "b": [...], "side": "left"|"right"}.
    """
    try:
        spec = _load_spec(input_, "table")
        if not isinstance(spec, dict) or "function" not in spec:
            raise UsageError("table input must name a 'function'")
        name = spec["function"]
        try:
            if name == "exp":
                fn = exp_function()
            elif name == "cauchy_kernel":
                fn = cauchy_kernel(quat_from_list(spec["s"]))
            elif name == "cauchy_kernel_right":
                fn = cauchy_kernel_right(quat_from_list(spec["q"]))
            elif name == "exp_transform":
                fn = exp_transform_closed_form(
                    quat_from_list(spec["b"]), Side(spec.get("side", "left"))).fn
            else:
                raise UsageError(
                    f"unknown function {name!r}; expected one of {', '.join(_TABLE_BUILTINS)}")
        except (KeyError, TypeError, ValueError) as exc:
            raise UsageError(f"malformed table spec: {exc}") from exc
        points = _parse_probes(probes)

        def worker(q: Quaternion) -> dict:
            try:
                return {"q": q.to_list(), "value": fn.evaluate(q).to_list()}
            except DomainError as exc:
                return {"q": q.to_list(), "error": str(exc)}

        records = _map_probes(worker, points)
        _emit(records, fmt, out)
        if any("error" in r for r in records):
            sys.exit(1)
    except UsageError as exc:
        raise click.UsageError(str(exc)) from exc
    except SliceRegularError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)


main = cli

if __name__ == "__main__":
    main()
