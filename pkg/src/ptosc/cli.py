"""Command line interface.

Commands
--------
spectrum   diagnose one (family, parameters, frequency) configuration
table1     recompute the momentum-shift reference table and compare
table2     recompute the coordinate-shift reference table and compare
sweep      diagnose along a one-parameter grid, one output row per point
converge   compare two basis sizes and report the stable leading run
check      run the bundled consistency checks

Output formats
--------------
Every command takes ``--format {text,csv,json}`` (default text).  Text
is for reading; CSV and JSON carry identical row payloads, with numbers
printed at 10 significant digits, so the two round-trip to the same
values.  Output is deterministic: no timestamps, no environment state.
CSV starts with ``#``-prefixed metadata lines (command, version, the
options that are not row columns) followed by the column header.  JSON
is a single object ``{"header": {...}, "data": {"rows": [...], ...}}``
whose rows mirror the CSV columns field for field.

CSV schemas
-----------
spectrum   family,W,L,R,strategy,w,N,index,re,im,class,verdict
           (conjugate pairs share a ``pair:<k>`` tag in ``class``)
table1/2   table,block,family,W,L,R,strategy,w,N,kind,label,
           reference_re,reference_im,computed_re,computed_im,
           abs_error,tol,status
sweep      family,W,L,R,strategy,w,N,point,axis,value,verdict,
           reals,pairs,strays,status
converge   family,W,L,R,strategy,w,N_small,N_large,index,
           small_re,small_im,large_re,large_im,drift,stable
check      name,status,detail

Exit status
-----------
0  success (a broken-reality verdict is a result, not a failure)
1  numerical failure, or a reference comparison that did not pass
2  usage error (bad flags, inadmissible parameters or strategy)
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

import numpy as np

from ptosc import __version__
from ptosc.analysis import (
    converged_subset,
    diagnose,
    sweep as run_sweep,
)
from ptosc.eigen import EigenConvergenceError
from ptosc.errors import DomainError
from ptosc.fock import hamiltonian_direct, write_matrix_csv
from ptosc.model import (
    Family,
    FrequencyLabel,
    OscillatorSpec,
    resolve_frequency,
)
from ptosc.reference import run_table
from ptosc.selfcheck import run_all

__all__ = ["main", "build_parser"]

_STRATEGIES = ("sum", "diff", "negdiff", "variational", "manual")

SPECTRUM_COLUMNS = (
    "family", "W", "L", "R", "strategy", "w", "N",
    "index", "re", "im", "class", "verdict",
)
TABLE_COLUMNS = (
    "table", "block", "family", "W", "L", "R", "strategy", "w", "N",
    "kind", "label", "reference_re", "reference_im",
    "computed_re", "computed_im", "abs_error", "tol", "status",
)
SWEEP_COLUMNS = (
    "family", "W", "L", "R", "strategy", "w", "N", "point", "axis",
    "value", "verdict", "reals", "pairs", "strays", "status",
)
CONVERGE_COLUMNS = (
    "family", "W", "L", "R", "strategy", "w", "N_small", "N_large",
    "index", "small_re", "small_im", "large_re", "large_im",
    "drift", "stable",
)
CHECK_COLUMNS = ("name", "status", "detail")

_FLOAT_FIELDS = {
    "W", "L", "R", "w", "re", "im", "value",
    "reference_re", "reference_im", "computed_re", "computed_im",
    "abs_error", "tol", "small_re", "small_im", "large_re", "large_im",
    "drift",
}
_INT_FIELDS = {
    "N", "index", "block", "point", "reals", "pairs", "strays",
    "N_small", "N_large",
}


def _fnum(x) -> str:
    """Cell text for a number: 10 significant digits, empty for None."""
    if x is None:
        return ""
    return format(x, ".10g")


def _row_to_json(row: dict) -> dict:
    out = {}
    for key, cell in row.items():
        if key in _FLOAT_FIELDS:
            out[key] = float(cell) if cell != "" else None
        elif key in _INT_FIELDS:
            out[key] = int(cell) if cell != "" else None
        else:
            out[key] = cell
    return out


def _emit_csv(meta: dict, columns, rows) -> None:
    for key, value in meta.items():
        sys.stdout.write("# %s: %s\n" % (key, value))
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([row[c] for c in columns])


def _emit_json(meta: dict, rows, extra: dict | None = None) -> None:
    data = {"rows": [_row_to_json(r) for r in rows]}
    if extra:
        data.update(extra)
    payload = {"header": dict(meta), "data": data}
    json.dump(payload, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _family(args) -> Family:
    return Family(args.family)


def _build_spec(args) -> OscillatorSpec:
    family = _family(args)
    if family is Family.MOMENTUM_SHIFT:
        if args.W is None:
            raise DomainError("momentum family requires --W")
        if args.R is not None:
            raise DomainError("momentum family does not take --R")
        return OscillatorSpec.momentum_shift(
            W=args.W, L=args.L if args.L is not None else 0.0
        )
    if args.W is not None:
        raise DomainError("coordinate family does not take --W")
    if args.L is None:
        raise DomainError("coordinate family requires --L")
    return OscillatorSpec.coordinate_shift(
        L=args.L, R=args.R if args.R is not None else 0.0
    )


def _param_cells(spec: OscillatorSpec) -> dict:
    if spec.family is Family.MOMENTUM_SHIFT:
        return {
            "family": "momentum",
            "W": _fnum(spec.W),
            "L": _fnum(spec.L),
            "R": "",
        }
    return {
        "family": "coordinate",
        "W": "",
        "L": _fnum(spec.L),
        "R": _fnum(spec.R),
    }


def _describe_params(spec: OscillatorSpec) -> str:
    if spec.family is Family.MOMENTUM_SHIFT:
        return "momentum (W = %s, L = %s)" % (_fnum(spec.W), _fnum(spec.L))
    return "coordinate (L = %s, R = %s)" % (_fnum(spec.L), _fnum(spec.R))


def _cmd_spectrum(args) -> int:
    spec = _build_spec(args)
    choice = resolve_frequency(spec, args.strategy, args.w)
    diag = diagnose(
        spec,
        choice,
        basis_size=args.N,
        examined_count=args.count,
        tol_real=args.tol_real,
    )
    if args.dump_matrix:
        write_matrix_csv(
            hamiltonian_direct(spec, choice.w, args.N), args.dump_matrix
        )
    values = np.array(diag.evidence.values)
    kinds = list(diag.classification.kinds)
    if args.sort == "real":
        order = np.lexsort((values.imag, values.real))
        values = values[order]
        kinds = [kinds[i] for i in order]
    base = _param_cells(spec)
    base.update(
        strategy=choice.label.value, w=_fnum(choice.w), N=str(args.N),
        verdict=diag.verdict.value,
    )
    rows = []
    for index, (value, kind) in enumerate(zip(values, kinds)):
        row = dict(base)
        row.update(
            index=str(index),
            re=_fnum(value.real),
            im=_fnum(value.imag),
        )
        row["class"] = kind
        rows.append(row)
    meta = {
        "command": "spectrum",
        "version": __version__,
        "count": str(args.count),
        "tol_real": _fnum(args.tol_real),
        "sort": args.sort,
    }
    cls = diag.classification
    if args.format == "csv":
        _emit_csv(meta, SPECTRUM_COLUMNS, rows)
    elif args.format == "json":
        _emit_json(
            meta,
            rows,
            extra={
                "verdict": diag.verdict.value,
                "real_count": len(cls.reals),
                "pair_count": len(cls.pairs),
                "stray_count": len(cls.strays),
            },
        )
    else:
        print("family: %s" % _describe_params(spec))
        print("strategy: %s (w = %s)" % (choice.label.value, _fnum(choice.w)))
        print(
            "basis size: %d, examined: %d leading by %s, reality tol: %s"
            % (args.N, args.count, args.sort, _fnum(args.tol_real))
        )
        print(
            "verdict: %s (%d real, %d pairs, %d strays)"
            % (diag.verdict.value, len(cls.reals), len(cls.pairs),
               len(cls.strays))
        )
        print("%6s  %18s  %18s  %s" % ("index", "re", "im", "class"))
        for row in rows:
            print(
                "%6s  %18s  %18s  %s"
                % (row["index"], row["re"], row["im"], row["class"])
            )
    return 0


def _table_rows(results) -> list[dict]:
    rows = []
    for res in results:
        block = res.block
        base = _param_cells(block.spec())
        base.update(
            table=block.table,
            block=str(block.block),
            strategy=block.strategy.value,
            w=_fnum(res.w),
            N="100",
        )
        for row_res in res.rows:
            row = dict(base)
            row.update(
                kind=row_res.kind,
                label=row_res.label,
                reference_re=_fnum(row_res.reference_re),
                reference_im=_fnum(row_res.reference_im),
                computed_re=_fnum(row_res.computed_re),
                computed_im=_fnum(row_res.computed_im),
                abs_error=_fnum(row_res.abs_error),
                tol=_fnum(row_res.tol),
                status="pass" if row_res.passed else "fail",
            )
            rows.append(row)
    return rows


def _cmd_table(args, table: str) -> int:
    results = run_table(table)
    rows = _table_rows(results)
    all_pass = all(res.passed for res in results)
    meta = {"command": table, "version": __version__}
    if args.format == "csv":
        _emit_csv(meta, TABLE_COLUMNS, rows)
    elif args.format == "json":
        _emit_json(meta, rows, extra={"all_pass": all_pass})
    else:
        for res in results:
            block = res.block
            print(
                "%s block %d: %s, strategy %s (w = %s)"
                % (table, block.block, _describe_params(block.spec()),
                   block.strategy.value, _fnum(res.w))
            )
            for row_res in res.rows:
                status = "PASS" if row_res.passed else "FAIL"
                if row_res.kind == "verdict":
                    print(
                        "  verdict %-22s %s"
                        % (row_res.label, status)
                    )
                elif row_res.computed_re is None:
                    print(
                        "  %-5s %-22s no matching value         %s"
                        % (row_res.kind, row_res.label, status)
                    )
                else:
                    if row_res.kind == "pair":
                        computed = "%.2f +/- %.2fi" % (
                            row_res.computed_re, row_res.computed_im
                        )
                    else:
                        computed = "%.10g" % row_res.computed_re
                    print(
                        "  %-5s %-22s computed %-22s err %-10.3g tol %-8g %s"
                        % (row_res.kind, row_res.label, computed,
                           row_res.abs_error, row_res.tol, status)
                    )
            print("  block: %s" % ("PASS" if res.passed else "FAIL"))
        passed = sum(1 for r in results if r.passed)
        print("%s: %d/%d blocks pass" % (table, passed, len(results)))
    return 0 if all_pass else 1


_SWEEP_AXES = {
    Family.MOMENTUM_SHIFT: ("W", "L"),
    Family.COORDINATE_SHIFT: ("L", "R"),
}


def _sweep_fixed(args, family: Family) -> dict:
    axes = _SWEEP_AXES[family]
    if args.axis not in axes:
        raise DomainError(
            "axis %s not valid for %s family (choose from %s)"
            % (args.axis, args.family, "/".join(axes))
        )
    if getattr(args, args.axis) is not None:
        raise DomainError(
            "--%s conflicts with --axis %s; the axis takes its values "
            "from --values" % (args.axis, args.axis)
        )
    fixed = {}
    for name in axes:
        if name == args.axis:
            continue
        value = getattr(args, name)
        required = (family is Family.MOMENTUM_SHIFT and name == "W") or (
            family is Family.COORDINATE_SHIFT and name == "L"
        )
        if value is None:
            if required:
                raise DomainError(
                    "%s family requires --%s when sweeping %s"
                    % (args.family, name, args.axis)
                )
            value = 0.0
        fixed[name] = value
    forbidden = "R" if family is Family.MOMENTUM_SHIFT else "W"
    if getattr(args, forbidden) is not None:
        raise DomainError(
            "%s family does not take --%s" % (args.family, forbidden)
        )
    return fixed


def _parse_values(text: str) -> list[float]:
    tokens = [t.strip() for t in text.split(",") if t.strip()]
    if not tokens:
        raise DomainError("--values must list at least one number")
    try:
        return [float(t) for t in tokens]
    except ValueError as exc:
        raise DomainError("bad --values entry: %s" % exc) from None


def _cmd_sweep(args) -> int:
    family = _family(args)
    fixed = _sweep_fixed(args, family)
    values = _parse_values(args.values)
    points = run_sweep(
        family,
        fixed,
        args.axis,
        values,
        args.strategy,
        basis_size=args.N,
        examined_count=args.count,
        tol_real=args.tol_real,
        manual_w=args.w,
    )
    rows = []
    for point in points:
        params = dict(point.params)
        if family is Family.MOMENTUM_SHIFT:
            spec_cells = {
                "family": "momentum",
                "W": _fnum(params["W"]),
                "L": _fnum(params.get("L", 0.0)),
                "R": "",
            }
        else:
            spec_cells = {
                "family": "coordinate",
                "W": "",
                "L": _fnum(params["L"]),
                "R": _fnum(params.get("R", 0.0)),
            }
        row = dict(spec_cells)
        row.update(
            strategy=args.strategy,
            w=_fnum(point.choice.w) if point.choice else "",
            N=str(args.N),
            point=str(point.index),
            axis=args.axis,
            value=_fnum(params[args.axis]),
        )
        if point.diagnosis is not None:
            cls = point.diagnosis.classification
            row.update(
                verdict=point.diagnosis.verdict.value,
                reals=str(len(cls.reals)),
                pairs=str(len(cls.pairs)),
                strays=str(len(cls.strays)),
                status="ok",
            )
        elif point.rejection is not None:
            row.update(
                verdict="", reals="", pairs="", strays="",
                status="rejected: %s" % point.rejection,
            )
        else:
            row.update(
                verdict="", reals="", pairs="", strays="",
                status="error: %s" % point.error,
            )
        rows.append(row)
    meta = {
        "command": "sweep",
        "version": __version__,
        "count": str(args.count),
        "tol_real": _fnum(args.tol_real),
    }
    if args.format == "csv":
        _emit_csv(meta, SWEEP_COLUMNS, rows)
    elif args.format == "json":
        _emit_json(meta, rows)
    else:
        print(
            "sweep %s over %s (%d points), strategy %s, N = %d"
            % (args.family, args.axis, len(rows), args.strategy, args.N)
        )
        print(
            "%6s  %12s  %14s  %-18s  %5s %5s %6s  %s"
            % ("point", args.axis, "w", "verdict", "reals", "pairs",
               "strays", "status")
        )
        for row in rows:
            print(
                "%6s  %12s  %14s  %-18s  %5s %5s %6s  %s"
                % (row["point"], row["value"], row["w"] or "-",
                   row["verdict"] or "-", row["reals"] or "-",
                   row["pairs"] or "-", row["strays"] or "-", row["status"])
            )
    return 0


def _cmd_converge(args) -> int:
    spec = _build_spec(args)
    choice = resolve_frequency(spec, args.strategy, args.w)
    report = converged_subset(
        spec,
        choice,
        size_small=args.N1,
        size_large=args.N2,
        drift_tol=args.drift_tol,
    )
    base = _param_cells(spec)
    base.update(
        strategy=choice.label.value,
        w=_fnum(choice.w),
        N_small=str(report.size_small),
        N_large=str(report.size_large),
    )
    rows = []
    for index, record in enumerate(report.records):
        row = dict(base)
        row.update(
            index=str(index),
            small_re=_fnum(record.value_small.real),
            small_im=_fnum(record.value_small.imag),
            large_re=_fnum(record.value_large.real),
            large_im=_fnum(record.value_large.imag),
            drift=_fnum(record.drift),
            stable="yes" if index < report.stable_count else "no",
        )
        rows.append(row)
    meta = {
        "command": "converge",
        "version": __version__,
        "drift_tol": _fnum(args.drift_tol),
    }
    if args.format == "csv":
        _emit_csv(meta, CONVERGE_COLUMNS, rows)
    elif args.format == "json":
        _emit_json(meta, rows, extra={"stable_count": report.stable_count})
    else:
        print("family: %s" % _describe_params(spec))
        print("strategy: %s (w = %s)" % (choice.label.value, _fnum(choice.w)))
        print(
            "basis sizes: %d vs %d, drift tol: %s"
            % (report.size_small, report.size_large, _fnum(args.drift_tol))
        )
        print(
            "stable leading run: %d of %d"
            % (report.stable_count, len(report.records))
        )
        print(
            "%6s  %18s  %18s  %12s  %s"
            % ("index", "re (small)", "re (large)", "drift", "stable")
        )
        for row in rows:
            print(
                "%6s  %18s  %18s  %12s  %s"
                % (row["index"], row["small_re"], row["large_re"],
                   row["drift"], row["stable"])
            )
    return 0


def _cmd_check(args) -> int:
    results = run_all()
    rows = [
        {
            "name": res.name,
            "status": "pass" if res.passed else "fail",
            "detail": res.detail,
        }
        for res in results
    ]
    passed = sum(1 for res in results if res.passed)
    meta = {"command": "check", "version": __version__}
    if args.format == "csv":
        _emit_csv(meta, CHECK_COLUMNS, rows)
    elif args.format == "json":
        _emit_json(
            meta, rows,
            extra={"passed": passed, "total": len(results)},
        )
    else:
        for row in rows:
            print(
                "%-26s %-4s  %s"
                % (row["name"], row["status"].upper(), row["detail"])
            )
        print("%d/%d checks pass" % (passed, len(results)))
    return 0 if passed == len(results) else 1


def _add_family_args(sp) -> None:
    sp.add_argument(
        "--family", required=True, choices=["momentum", "coordinate"],
        help="which oscillator family to build",
    )
    sp.add_argument(
        "--W", type=float, default=None,
        help="well frequency (momentum family only)",
    )
    sp.add_argument(
        "--L", type=float, default=None,
        help="shift strength (momentum, default 0) or kinetic weight "
        "(coordinate, required)",
    )
    sp.add_argument(
        "--R", type=float, default=None,
        help="shift strength (coordinate family only, default 0)",
    )


def _add_strategy_args(sp) -> None:
    sp.add_argument(
        "--strategy", required=True, choices=list(_STRATEGIES),
        help="auxiliary-frequency selection rule",
    )
    sp.add_argument(
        "--w", type=float, default=None,
        help="explicit auxiliary frequency (manual strategy only)",
    )


def _add_numeric_args(sp) -> None:
    sp.add_argument(
        "--N", type=int, default=100, help="basis size (default 100)"
    )
    sp.add_argument(
        "--count", type=int, default=40,
        help="how many leading eigenvalues to examine (default 40)",
    )
    sp.add_argument(
        "--tol-real", dest="tol_real", type=float, default=1e-6,
        help="relative imaginary-part tolerance for calling a value real",
    )


def _add_format_arg(sp) -> None:
    sp.add_argument(
        "--format", choices=["text", "csv", "json"], default="text",
        help="output format (default text)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ptosc",
        description="Truncated ladder-basis spectra of shifted "
        "complex harmonic oscillators.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser(
        "spectrum", help="diagnose one configuration's leading spectrum"
    )
    _add_family_args(sp)
    _add_strategy_args(sp)
    _add_numeric_args(sp)
    sp.add_argument(
        "--sort", choices=["magnitude", "real"], default="magnitude",
        help="display order of the examined eigenvalues (default magnitude)",
    )
    _add_format_arg(sp)
    sp.add_argument(
        "--dump-matrix", dest="dump_matrix", default=None, metavar="PATH",
        help="also write the assembled matrix's nonzero entries as CSV",
    )

    for name, help_text in (
        ("table1", "recompute the momentum-shift reference table"),
        ("table2", "recompute the coordinate-shift reference table"),
    ):
        sp = sub.add_parser(name, help=help_text)
        _add_format_arg(sp)

    sp = sub.add_parser(
        "sweep", help="diagnose along a grid of one parameter"
    )
    _add_family_args(sp)
    _add_strategy_args(sp)
    _add_numeric_args(sp)
    sp.add_argument(
        "--axis", required=True, choices=["W", "L", "R"],
        help="which parameter the grid varies",
    )
    sp.add_argument(
        "--values", required=True,
        help="comma-separated grid values for the axis parameter",
    )
    _add_format_arg(sp)

    sp = sub.add_parser(
        "converge", help="compare spectra at two basis sizes"
    )
    _add_family_args(sp)
    _add_strategy_args(sp)
    sp.add_argument(
        "--N1", type=int, default=50, help="smaller basis size (default 50)"
    )
    sp.add_argument(
        "--N2", type=int, default=100, help="larger basis size (default 100)"
    )
    sp.add_argument(
        "--drift-tol", dest="drift_tol", type=float, default=1e-6,
        help="relative drift tolerance for the stable run (default 1e-6)",
    )
    _add_format_arg(sp)

    sp = sub.add_parser("check", help="run the bundled consistency checks")
    _add_format_arg(sp)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    try:
        if args.command == "spectrum":
            return _cmd_spectrum(args)
        if args.command == "table1":
            return _cmd_table(args, "table1")
        if args.command == "table2":
            return _cmd_table(args, "table2")
        if args.command == "sweep":
            return _cmd_sweep(args)
        if args.command == "converge":
            return _cmd_converge(args)
        return _cmd_check(args)
    except DomainError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except EigenConvergenceError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
