"""Command-line surface.

Exit codes: 0 = pass/success, 1 = verdict failure, 2 = input error.
All diagnostics go to stderr; results and reports go to stdout.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace
from fractions import Fraction
from pathlib import Path

from .algebras import (
    associated_novikov,
    check_novikov,
    check_pre_novikov,
    check_quasi_frobenius,
    derived_ops,
)
from .bialgebra import check_bialgebra, check_coalgebra
from .core import InputError, RefusalError, flip, scalar_str, t3_is_zero
from .io import (
    Bundle,
    bundle_to_objects,
    coalgebra_bundle,
    form_bundle,
    novikov_bundle,
    parse_bundle,
    pre_novikov_bundle,
    render_report,
    serialize_bundle,
    tensor2_bundle,
    _encode,
)
from .matched_double import double_from_bialgebra
from .report import default_labels
from .representations import (
    adjoint_reps,
    check_novikov_rep,
    check_pre_novikov_rep,
    dual_novikov_rep,
    dual_pre_novikov_rep,
)
from .yang_baxter import (
    check_o_operator_novikov,
    check_o_operator_pre_novikov,
    co2_equivalence,
    coboundary_diagnostics,
    coboundary_maps,
    lift_o_operator,
    search_symmetric_ybe,
    ybe_residual,
)


def _load(path: str) -> Bundle:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"{path}: {exc}") from None
    try:
        return parse_bundle(text)
    except InputError as exc:
        raise InputError(f"{path}: {exc}") from None


def _emit(out, text: str) -> None:
    out.write(text if text.endswith("\n") else text + "\n")


def _cmd_check(args, out) -> int:
    bundle = _load(args.bundle)
    basis = bundle.data.get("basis")
    obj = bundle_to_objects(bundle)
    kind = bundle.kind
    if kind == "novikov":
        report = check_novikov(obj.op, basis=basis)
    elif kind == "pre_novikov":
        report = check_pre_novikov(obj.lhd, obj.rhd, basis=basis)
    elif kind == "coalgebra":
        report = check_coalgebra(obj, basis=basis)
    elif kind == "bialgebra":
        report = check_bialgebra(obj.algebra, obj.coalgebra, basis=basis)
    elif kind == "form":
        alg, w = obj
        report = check_quasi_frobenius(alg.op, w, basis=basis)
    elif kind == "rep":
        alg, rep = obj
        if bundle.data["flavor"] == "novikov":
            report = check_novikov_rep(alg, rep, basis=basis,
                                       module_basis=bundle.data.get("module_basis"))
        else:
            report = check_pre_novikov_rep(alg, rep, basis=basis,
                                           module_basis=bundle.data.get("module_basis"))
    elif kind == "o_operator":
        alg, rep, t = obj
        if bundle.data["flavor"] == "novikov":
            report = check_o_operator_novikov(alg, rep, t,
                                              module_basis=bundle.data.get("module_basis"))
        else:
            report = check_o_operator_pre_novikov(alg, rep, t,
                                                  module_basis=bundle.data.get("module_basis"))
    else:
        raise InputError(f"no verifier for bundle kind {kind!r}")
    _emit(out, render_report(report, args.format))
    return 0 if report.passed else 1


def _cmd_derive(args, out) -> int:
    bundle = _load(args.bundle)
    if bundle.kind == "pre_novikov":
        alg = bundle_to_objects(bundle)
        report = check_pre_novikov(alg.lhd, alg.rhd, basis=bundle.data.get("basis"))
        if not report.passed:
            _emit(out, render_report(report, args.format))
            return 1
        nov = associated_novikov(alg)
        odot, star = derived_ops(alg)
        nov_rep, pre_rep = adjoint_reps(alg)
        parts = {
            "associated": json.loads(serialize_bundle(novikov_bundle(nov, bundle.data.get("basis")))),
            "odot": _encode(odot.c),
            "star": _encode(star.c),
            "adjoint_novikov_rep": {
                "l": _encode(nov_rep.l),
                "r": _encode(nov_rep.r),
            },
            "adjoint_pre_novikov_rep": {
                "l_rhd": _encode(pre_rep.l_rhd),
                "r_rhd": _encode(pre_rep.r_rhd),
                "l_lhd": _encode(pre_rep.l_lhd),
                "r_lhd": _encode(pre_rep.r_lhd),
            },
            "dual_novikov_rep": _dual_maps_doc(dual_novikov_rep(nov_rep)),
            "dual_pre_novikov_rep": _dual_pre_maps_doc(dual_pre_novikov_rep(pre_rep)),
        }
        _emit(out, json.dumps({"kind": "derived", "parts": parts}, sort_keys=True, indent=2))
        return 0
    if bundle.kind == "rep":
        alg, rep = bundle_to_objects(bundle)
        if bundle.data["flavor"] == "novikov":
            report = check_novikov_rep(alg, rep)
            if not report.passed:
                _emit(out, render_report(report, args.format))
                return 1
            dual = dual_novikov_rep(replace(rep, verified=True))
            doc = _dual_maps_doc(dual)
        else:
            report = check_pre_novikov_rep(alg, rep)
            if not report.passed:
                _emit(out, render_report(report, args.format))
                return 1
            dual = dual_pre_novikov_rep(replace(rep, verified=True))
            doc = _dual_pre_maps_doc(dual)
        _emit(out, json.dumps({"kind": "derived", "parts": {"dual_rep": doc}},
                              sort_keys=True, indent=2))
        return 0
    raise InputError(f"derive expects a pre_novikov or rep bundle, got {bundle.kind!r}")


def _dual_maps_doc(rep) -> dict:
    return {"l": _encode(rep.l), "r": _encode(rep.r)}


def _dual_pre_maps_doc(rep) -> dict:
    return {
        "l_rhd": _encode(rep.l_rhd),
        "r_rhd": _encode(rep.r_rhd),
        "l_lhd": _encode(rep.l_lhd),
        "r_lhd": _encode(rep.r_lhd),
    }


def _cmd_double(args, out) -> int:
    bundle = _load(args.bundle)
    if bundle.kind != "bialgebra":
        raise InputError(f"double expects a bialgebra bundle, got {bundle.kind!r}")
    bialg = bundle_to_objects(bundle)
    try:
        double = double_from_bialgebra(bialg)
    except RefusalError as exc:
        if exc.report is not None:
            _emit(out, render_report(exc.report, args.format))
        print(f"double construction refused: {exc}", file=sys.stderr)
        return 1
    out_bundle = form_bundle(double.algebra.op, double.form, basis=double.labels)
    _emit(out, serialize_bundle(out_bundle))
    qf = check_quasi_frobenius(double.algebra.op, double.form, basis=double.labels)
    _emit(out, render_report(qf, args.format))
    return 0


def _cmd_coboundary(args, out) -> int:
    alg_bundle = _load(args.algebra)
    r_bundle = _load(args.tensor)
    if alg_bundle.kind != "pre_novikov" or r_bundle.kind != "tensor2":
        raise InputError("coboundary expects a pre_novikov bundle and a tensor2 bundle")
    alg = bundle_to_objects(alg_bundle)
    r = bundle_to_objects(r_bundle)
    if len(r) != alg.dim:
        raise InputError("tensor dimension does not match the algebra")
    co = coboundary_maps(alg, r)
    _emit(out, serialize_bundle(coalgebra_bundle(co, basis=alg_bundle.data.get("basis"))))
    symmetric = flip(r) == r
    residual_zero = t3_is_zero(ybe_residual(alg, r))
    bi = check_bialgebra(alg, co, basis=alg_bundle.data.get("basis"))
    _emit(out, render_report(bi, args.format))
    _emit(out, f"symmetric: {'yes' if symmetric else 'no'}")
    _emit(out, f"residual zero: {'yes' if residual_zero else 'no'}")
    return 0 if (symmetric and residual_zero and bi.passed) else 1


def _cmd_ybe(args, out) -> int:
    alg_bundle = _load(args.algebra)
    r_bundle = _load(args.tensor)
    if alg_bundle.kind != "pre_novikov" or r_bundle.kind != "tensor2":
        raise InputError("ybe expects a pre_novikov bundle and a tensor2 bundle")
    alg = bundle_to_objects(alg_bundle)
    r = bundle_to_objects(r_bundle)
    if len(r) != alg.dim:
        raise InputError("tensor dimension does not match the algebra")
    residual = ybe_residual(alg, r)
    zero = t3_is_zero(residual)
    if args.format == "machine":
        doc = {
            "kind": "ybe",
            "residual_zero": zero,
            "residual": _encode(residual),
        }
        if flip(r) == r:
            doc["equivalent_verdicts"] = list(co2_equivalence(alg, r))
        _emit(out, json.dumps(doc, sort_keys=True, indent=2))
    else:
        _emit(out, f"residual zero: {'yes' if zero else 'no'}")
        if not zero:
            nonzero = [
                f"  [{i},{j},{k}] = {scalar_str(v)}"
                for i, plane in enumerate(residual)
                for j, row in enumerate(plane)
                for k, v in enumerate(row)
                if v
            ]
            _emit(out, "\n".join(nonzero[:32]))
        if flip(r) == r:
            a, b, c = co2_equivalence(alg, r)
            _emit(out, f"equivalent verdicts: residual={a} novikov_operator={b} pre_novikov_operator={c}")
        else:
            _emit(out, "r is not symmetric; operator-form verdicts skipped")
    return 0 if zero else 1


def _cmd_oper(args, out) -> int:
    alg_bundle = _load(args.algebra)
    rep_bundle = _load(args.rep)
    t_bundle = _load(args.linmap)
    if rep_bundle.kind != "rep":
        raise InputError(f"oper expects a rep bundle, got {rep_bundle.kind!r}")
    if t_bundle.kind != "linmap":
        raise InputError(f"oper expects a linmap bundle, got {t_bundle.kind!r}")
    rep_alg, rep = bundle_to_objects(rep_bundle)
    T = bundle_to_objects(t_bundle)
    flavor = rep_bundle.data["flavor"]
    if flavor == "novikov":
        if alg_bundle.kind != "novikov":
            raise InputError("algebra bundle must be kind novikov for a novikov rep")
        alg = bundle_to_objects(alg_bundle)
        if alg.op != rep_alg.op:
            raise InputError("rep bundle algebra differs from the algebra bundle")
        report = check_o_operator_novikov(alg, rep, T,
                                          module_basis=rep_bundle.data.get("module_basis"))
        _emit(out, render_report(report, args.format))
        if args.lift:
            raise InputError("--lift applies to pre_novikov flavor only")
        return 0 if report.passed else 1
    if alg_bundle.kind != "pre_novikov":
        raise InputError("algebra bundle must be kind pre_novikov for a pre_novikov rep")
    alg = bundle_to_objects(alg_bundle)
    if alg != rep_alg:
        raise InputError("rep bundle algebra differs from the algebra bundle")
    report = check_o_operator_pre_novikov(alg, rep, T,
                                          module_basis=rep_bundle.data.get("module_basis"))
    _emit(out, render_report(report, args.format))
    if args.lift:
        semi, r = lift_o_operator(alg, rep, T)
        lab = tuple(default_labels(alg.dim)) + tuple(
            f"{x}*" for x in (rep_bundle.data.get("module_basis") or default_labels(rep.module_dim, "v"))
        )
        _emit(out, serialize_bundle(pre_novikov_bundle(semi, basis=lab)))
        _emit(out, serialize_bundle(tensor2_bundle(r, basis=lab)))
        _emit(out, f"lifted residual zero: {'yes' if t3_is_zero(ybe_residual(semi, r)) else 'no'}")
    return 0 if report.passed else 1


def _cmd_search(args, out) -> int:
    alg_bundle = _load(args.algebra)
    if alg_bundle.kind != "pre_novikov":
        raise InputError(f"search expects a pre_novikov bundle, got {alg_bundle.kind!r}")
    alg = bundle_to_objects(alg_bundle)
    try:
        values = [Fraction(v.strip()) for v in args.values.split(",") if v.strip()]
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad value set {args.values!r}: {exc}") from None
    solutions = search_symmetric_ybe(alg, values, max_candidates=args.max_candidates)
    doc = {
        "kind": "search_results",
        "dim": alg.dim,
        "count": len(solutions),
        "solutions": [json.loads(serialize_bundle(tensor2_bundle(r))) for r in solutions],
    }
    _emit(out, json.dumps(doc, sort_keys=True, indent=2))
    return 0


def _cmd_diag(args, out) -> int:
    alg_bundle = _load(args.algebra)
    r_bundle = _load(args.tensor)
    if alg_bundle.kind != "pre_novikov" or r_bundle.kind != "tensor2":
        raise InputError("diag expects a pre_novikov bundle and a tensor2 bundle")
    alg = bundle_to_objects(alg_bundle)
    r = bundle_to_objects(r_bundle)
    if len(r) != alg.dim:
        raise InputError("tensor dimension does not match the algebra")
    diag = coboundary_diagnostics(alg, r)
    if args.format == "machine":
        doc = {
            "kind": "diagnostics",
            "condition_residuals": {k: _encode(v) for k, v in diag.condition_residuals.items()},
            "r_tensors": {k: _encode(v) for k, v in diag.r_tensors.items()},
            "equation_residuals": {k: _encode(v) for k, v in diag.equation_residuals.items()},
        }
        _emit(out, json.dumps(doc, sort_keys=True, indent=2))
    else:
        _emit(out, f"operator conditions all zero: {'yes' if diag.conditions_zero() else 'no'}")
        for code, grid in sorted(diag.condition_residuals.items()):
            bad = [
                (i, j)
                for i, row in enumerate(grid)
                for j, t in enumerate(row)
                if any(v for rr in t for v in rr)
            ]
            if bad:
                _emit(out, f"  Eq ({code}) nonzero at pairs: {bad}")
        for name, tensor in sorted(diag.r_tensors.items()):
            _emit(out, f"{name}: {'zero' if t3_is_zero(tensor) else 'nonzero'}")
        _emit(out, f"equation residuals all zero: {'yes' if diag.equations_zero() else 'no'}")
        for code, series in sorted(diag.equation_residuals.items()):
            bad = [i for i, t in enumerate(series) if not t3_is_zero(t)]
            if bad:
                _emit(out, f"  Eq ({code}) nonzero at basis indices: {bad}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="prenovikov",
        description="Exact verification workbench for Novikov-type algebra structures",
    )
    parser.add_argument("--format", choices=("text", "machine"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="run the verifier matching a bundle's kind")
    p.add_argument("bundle")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("derive", help="associated/derived products, adjoint and dual actions")
    p.add_argument("bundle")
    p.set_defaults(func=_cmd_derive)

    p = sub.add_parser("double", help="double construction from a bialgebra bundle")
    p.add_argument("bundle")
    p.set_defaults(func=_cmd_double)

    p = sub.add_parser("coboundary", help="co-operations from a tensor, with the full pipeline report")
    p.add_argument("algebra")
    p.add_argument("tensor")
    p.set_defaults(func=_cmd_coboundary)

    p = sub.add_parser("ybe", help="residual of the quadratic tensor equation, plus operator verdicts")
    p.add_argument("algebra")
    p.add_argument("tensor")
    p.set_defaults(func=_cmd_ybe)

    p = sub.add_parser("oper", help="operator identity report, optionally lifted")
    p.add_argument("algebra")
    p.add_argument("rep")
    p.add_argument("linmap")
    p.add_argument("--lift", action="store_true")
    p.set_defaults(func=_cmd_oper)

    p = sub.add_parser("search", help="exhaustive symmetric-solution search")
    p.add_argument("algebra")
    p.add_argument("--values", default="-1,0,1")
    p.add_argument("--max-candidates", type=int, default=2_000_000)
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("diag", help="coboundary diagnostics dump")
    p.add_argument("algebra")
    p.add_argument("tensor")
    p.set_defaults(func=_cmd_diag)
    return parser


def run_command(argv, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args, out)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except RefusalError as exc:
        if exc.report is not None:
            _emit(out, render_report(exc.report, args.format))
        print(f"refused: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))
