"""Command-line entry point.

Every command builds a report of ``results`` plus a list of ``assertions``;
the exit status is 0 exactly when every assertion passed.  ``--format json``
(default) emits ``{command, config, results, assertions, version}``,
``--format csv`` emits sample rows for ``sample`` and the assertion table
otherwise, ``--format text`` is for people.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

import numpy as np

from . import __version__
from .bound_search import face_edge_values, scan_cuboid, verify_bound
from .caratheodory import HerglotzMeasure
from .extremal import extremal_witness
from .functionals import SchlichtCoefficients, inverse_from_direct
from .invariance import BOUND, measure_h3, sample_campaign
from .series import TruncatedSeries, compose, revert

COMMANDS = ("verify-bound", "scan", "extremal", "sample", "revert", "cases")
FORMATS = ("json", "csv", "text")


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    grid_step: float = 0.01
    samples: int = 1000
    seed: int | None = None
    atoms: int = 4
    output_format: str = "json"
    exact: bool = False
    tolerance: float | None = None
    workers: int = 1
    refine: bool = False
    coeffs: tuple = ()
    output: str | None = None

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ConfigError(f"unknown command {self.command!r}")
        if not (0 < self.grid_step <= 0.05):
            raise ConfigError(f"grid step must lie in (0, 0.05], got {self.grid_step}")
        if self.samples < 1:
            raise ConfigError("samples must be >= 1")
        if not (1 <= self.atoms <= 64):
            raise ConfigError("atoms must lie in [1, 64]")
        if self.seed is not None and self.seed < 0:
            raise ConfigError("seed must be a nonnegative integer")
        if self.output_format not in FORMATS:
            raise ConfigError(f"format must be one of {FORMATS}")
        if self.tolerance is not None and not self.tolerance >= 0:
            raise ConfigError("tolerance must be >= 0")
        if self.workers < 1:
            raise ConfigError("workers must be >= 1")
        if self.command == "sample" and self.seed is None:
            raise ConfigError("sample needs an explicit --seed")
        if self.command == "revert" and len(self.coeffs) != 4:
            raise ConfigError("revert needs --coeffs a2,a3,a4,a5")

    def public(self) -> dict:
        # workers and output do not change results, so they stay out of reports
        keys = ("command", "grid_step", "samples", "seed", "atoms", "output_format",
                "exact", "tolerance", "refine", "coeffs")
        return {k: getattr(self, k) for k in keys}


# -- serialization --------------------------------------------------------------

def _num(v: float) -> str:
    if math.isnan(v) or math.isinf(v):
        return json.dumps(str(v))
    return f"{v:.17g}"


def to_plain(v: Any) -> Any:
    """Scalars and containers in JSON-ready form (floats are kept as floats)."""
    if isinstance(v, (bool, np.bool_)):
        return bool(v)
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    if isinstance(v, (int, np.integer)):
        return int(v)
    if isinstance(v, (float, np.floating)):
        return float(v)
    if isinstance(v, (complex, np.complexfloating)):
        return {"re": float(v.real), "im": float(v.imag)}
    if isinstance(v, dict):
        return {str(k): to_plain(x) for k, x in v.items()}
    if isinstance(v, (list, tuple, np.ndarray)):
        return [to_plain(x) for x in v]
    if isinstance(v, TruncatedSeries):
        return to_plain(v.coeffs)
    if v is None or isinstance(v, str):
        return v
    raise TypeError(f"cannot serialize {type(v).__name__}")


def dumps(v: Any, indent: int = 2, _level: int = 0) -> str:
    """JSON text with every float written to 17 significant digits."""
    v = to_plain(v)
    pad, inner = " " * (indent * _level), " " * (indent * (_level + 1))
    if isinstance(v, float):
        return _num(v)
    if isinstance(v, dict):
        if not v:
            return "{}"
        items = [f"{inner}{json.dumps(k)}: {dumps(x, indent, _level + 1)}" for k, x in v.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(v, list):
        if not v:
            return "[]"
        if all(not isinstance(x, (dict, list)) for x in v):
            return "[" + ", ".join(dumps(x, indent, _level + 1) for x in v) + "]"
        return "[\n" + ",\n".join(inner + dumps(x, indent, _level + 1) for x in v) + "\n" + pad + "]"
    return json.dumps(v)


def csv_cell(v: Any) -> str:
    if isinstance(v, (list, tuple, np.ndarray)):
        return ";".join(csv_cell(x) for x in v)
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    if isinstance(v, (complex, np.complexfloating)):
        return f"{v.real:.17g}{v.imag:+.17g}j"
    if isinstance(v, (float, np.floating)):
        return _num(float(v))
    return str(v)


# -- assertions -----------------------------------------------------------------

class Assertions(list):
    def check(self, name: str, ok: bool, lhs=None, rhs=None, tolerance=None) -> bool:
        self.append({"name": name, "status": "pass" if ok else "fail",
                     "lhs": lhs, "rhs": rhs, "tolerance": tolerance})
        return ok

    @property
    def passed(self) -> bool:
        return all(a["status"] == "pass" for a in self)


def _cert_dict(cert) -> dict:
    return {
        "sup_m": cert.sup_m, "argmax": cert.argmax, "observed_max": cert.observed_max,
        "grid_step": cert.grid_step, "lipschitz_slack": cert.lipschitz_slack,
        "induced_h3_bound": cert.induced_h3_bound, "method": cert.method,
        "reading": cert.reading, "gradient_bound": cert.gradient_bound,
        "region": cert.region.intervals(), "refined_cells": cert.refined_cells,
        "unresolved_cells": cert.unresolved_cells, "evaluated_points": cert.evaluated_points,
    }


def _cert_checks(out: Assertions, cert) -> None:
    out.check("observed_max <= sup_m", cert.observed_max <= cert.sup_m,
              cert.observed_max, cert.sup_m, 0.0)
    recon = cert.observed_max + cert.lipschitz_slack * cert.grid_step
    out.check("sup_m = observed_max + lipschitz_slack * grid_step",
              abs(recon - cert.sup_m) <= 1e-9 * cert.sup_m, recon, cert.sup_m, 1e-9)
    out.check("induced_h3_bound = sup_m / 9216", cert.induced_h3_bound == cert.sup_m / 9216,
              cert.induced_h3_bound, cert.sup_m / 9216, 0.0)


# -- commands -------------------------------------------------------------------

def run_verify_bound(cfg: RunConfig):
    tol = 1e-12 if cfg.tolerance is None else cfg.tolerance
    rep = verify_bound(grid_step=cfg.grid_step, exact=cfg.exact, witness_tolerance=tol,
                       workers=cfg.workers)
    witness = rep.witness if cfg.exact else float(rep.witness)
    out = Assertions()
    out.check("certified bound <= 1/9 + 1.2e-4", rep.bound <= 1 / 9 + 1.2e-4, rep.bound, 1 / 9, 1.2e-4)
    out.check("witness attains 1/9", abs(rep.witness - Fraction(1, 9)) <= (0 if cfg.exact else tol),
              witness, Fraction(1, 9) if cfg.exact else 1 / 9, 0.0 if cfg.exact else tol)
    out.check("case analysis", rep.cases.passed)
    for face, ex in rep.exclusion.items():
        out.check(f"no critical point on {face}", ex.passed,
                  len(ex.common_zero_cells) + len(ex.undecided_cells), 0, 0)
    d = rep.dominance
    out.check("dominance chain", d.passed, d.triangle_violations + d.majorant_violations, 0, d.tolerance)
    _cert_checks(out, rep.certificate)
    results = {
        "bound": rep.bound, "witness": witness, "status": rep.status, "claimed": rep.claimed,
        "certificate": _cert_dict(rep.certificate),
        "lipschitz_slack": rep.certificate.lipschitz_slack,
        "dominance": {"samples": d.samples, "seed": d.seed,
                      "worst_triangle_margin": d.worst_triangle_margin,
                      "worst_majorant_margin": d.worst_majorant_margin},
        "mismatched_case_forms": rep.cases.mismatched_forms,
        "failures": rep.failures,
    }
    return results, out


def run_scan(cfg: RunConfig):
    cert = scan_cuboid(cfg.grid_step, refine=cfg.refine, workers=cfg.workers)
    out = Assertions()
    _cert_checks(out, cert)
    out.check("unresolved cells", cert.unresolved_cells == 0, cert.unresolved_cells, 0, 0)
    return _cert_dict(cert), out


def run_extremal(cfg: RunConfig):
    rep = extremal_witness(order=8, exact=cfg.exact)
    tol = (0 if cfg.exact else 1e-12) if cfg.tolerance is None else cfg.tolerance
    ninth = Fraction(1, 9) if cfg.exact else 1 / 9
    out = Assertions()
    out.check("binomial and recurrence constructions agree", rep.routes_agree)
    out.check("inverse by formula, reversion and closed form agree", rep.inverse_routes_agree)
    out.check("f0(f0^-1(w)) = w", rep.round_trip)
    out.check("a4 = 1/3", abs(rep.a.a4 - Fraction(1, 3)) <= tol, rep.a.a4, Fraction(1, 3), tol)
    out.check("a7 = 2/9", abs(rep.a7 - Fraction(2, 9)) <= tol, rep.a7, Fraction(2, 9), tol)
    out.check("|H3(1)(f0)| = 1/9", abs(abs(rep.h3_direct) - ninth) <= tol, abs(rep.h3_direct), ninth, tol)
    out.check("|H3(1)(f0^-1)| = 1/9", abs(abs(rep.h3_inverse) - ninth) <= tol,
              abs(rep.h3_inverse), ninth, tol)
    results = {
        "f0": rep.f_binomial, "f0_recurrence": rep.f_recurrence,
        "a": dict(rep.a._asdict()), "a7": rep.a7,
        "A_formula": dict(rep.A_formula._asdict()), "A_revert": dict(rep.A_revert._asdict()),
        "inverse_closed_form": rep.inverse_closed,
        "h3_direct": rep.h3_direct, "h3_inverse": rep.h3_inverse,
    }
    return results, out


SAMPLE_COLUMNS = ("seed", "sample", "weights", "angles", "a2", "a3", "a4", "a5",
                  "A2", "A3", "A4", "A5", "h3_direct", "h3_inverse")


def run_sample(cfg: RunConfig):
    tol = 1e-9 if cfg.tolerance is None else cfg.tolerance
    rep = sample_campaign(cfg.samples, cfg.atoms, cfg.seed, tol, cfg.workers,
                          keep_blocks=cfg.output_format == "csv")
    w_dir, w_inv = measure_h3(HerglotzMeasure.roots_of_unity(3))
    s_dir, s_inv = measure_h3(HerglotzMeasure(((1.0, 1 + 0j),)))
    out = Assertions()
    out.check("max |H3(1)(f)| <= 1/9", rep.max_h3_direct <= BOUND + tol, rep.max_h3_direct, BOUND, tol)
    out.check("max |H3(1)(f^-1)| <= 1/9", rep.max_h3_inverse <= BOUND + tol,
              rep.max_h3_inverse, BOUND, tol)
    out.check("cube roots of unity: |H3(1)(f)| = 1/9", abs(w_dir - BOUND) <= 1e-12, w_dir, BOUND, 1e-12)
    out.check("cube roots of unity: |H3(1)(f^-1)| = 1/9", abs(w_inv - BOUND) <= 1e-12, w_inv, BOUND, 1e-12)
    results = {
        "samples": rep.samples, "atoms": rep.atoms, "seed": rep.seed,
        "max_h3_direct": rep.max_h3_direct, "max_h3_inverse": rep.max_h3_inverse,
        "argmax_direct": rep.argmax_direct, "argmax_inverse": rep.argmax_inverse,
        "offending_samples": rep.offending_samples,
        "roots_of_unity_witness": {"h3_direct": w_dir, "h3_inverse": w_inv},
        "single_atom": {"h3_direct": s_dir, "h3_inverse": s_inv},
    }
    rows = (row for b in rep.blocks for row in b.rows())
    return results, out, rows


def _parse_coeff(text: str, exact: bool):
    try:
        return Fraction(text) if exact else complex(Fraction(text))
    except ValueError:
        pass
    try:
        if not exact:
            return complex(text)
    except ValueError:
        pass
    raise ConfigError(f"cannot parse coefficient {text!r}" + ("" if not exact else " as a rational"))


def run_revert(cfg: RunConfig):
    a = SchlichtCoefficients(*(_parse_coeff(t, cfg.exact) for t in cfg.coeffs))
    f = a.series(exact=cfg.exact)
    g = revert(f)
    A = inverse_from_direct(a)
    tol = (0 if cfg.exact else 1e-9) if cfg.tolerance is None else cfg.tolerance
    out = Assertions()
    err = max(abs(x - y) for x, y in zip(g.coeffs[2:], A))
    out.check("reversion matches the inverse-coefficient formulas", err <= tol, err, 0, tol)
    ident = TruncatedSeries.identity(f.order, cfg.exact)
    err = max(abs(x - y) for x, y in zip(compose(f, g).coeffs, ident.coeffs))
    out.check("f(f^-1(w)) = w", err <= tol, err, 0, tol)
    return {"a": dict(a._asdict()), "inverse": g, "A": dict(A._asdict())}, out


def run_cases(cfg: RunConfig):
    rep = face_edge_values()
    out = Assertions()
    rows = []
    for r in rep.rows:
        rows.append({
            "case": r.case, "region": r.region, "printed": r.printed,
            "claimed_bound": r.claimed_bound, "observed_max": r.observed_max,
            "observed_argmax": r.observed_argmax, "printed_form_max": r.observed_form_max,
            "form_deviation": r.form_deviation, "form_matches": r.form_matches,
            "claim_holds": r.claim_holds, "note": r.note,
        })
        out.check(f"case {r.case} ({r.region}) bound", r.claim_holds, r.observed_max,
                  r.claimed_bound, 1e-9)
    for name, (ok, lhs, rhs, _) in rep.checks.items():
        out.check(name, ok, lhs, rhs, 1e-9)
    return {"reading": rep.reading, "rows": rows, "mismatched_forms": rep.mismatched_forms}, out


# -- output ---------------------------------------------------------------------

def _text(command: str, results: dict, assertions: Assertions) -> str:
    lines = [f"{command}"]
    if command == "cases":
        lines.append(f"{'case':<5} {'region':<10} {'claimed':>10} {'observed':>12}  form  bound")
        for r in results["rows"]:
            lines.append(f"{r['case']:<5} {r['region']:<10} {r['claimed_bound']:>10.4f} "
                         f"{r['observed_max']:>12.6f}  {'ok' if r['form_matches'] else 'DIFF':<4}  "
                         f"{'ok' if r['claim_holds'] else 'FAIL'}  {r['note']}")
    else:
        for k, v in results.items():
            lines.append(f"  {k}: {json.dumps(to_plain(v))}")
    lines.append("assertions:")
    for a in assertions:
        lines.append(f"  {a['status'].upper():<4} {a['name']}")
    return "\n".join(lines) + "\n"


def _assertion_csv(assertions: Assertions) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["name", "status", "lhs", "rhs", "tolerance"])
    for a in assertions:
        w.writerow([a["name"], a["status"]] + [csv_cell(a[k]) if a[k] is not None else ""
                                              for k in ("lhs", "rhs", "tolerance")])
    return buf.getvalue()


def _write_rows(stream, rows) -> None:
    w = csv.writer(stream, lineterminator="\n")
    w.writerow(SAMPLE_COLUMNS)
    for row in rows:
        w.writerow([csv_cell(row[k]) for k in SAMPLE_COLUMNS])


RUNNERS = {
    "verify-bound": run_verify_bound,
    "scan": run_scan,
    "extremal": run_extremal,
    "sample": run_sample,
    "revert": run_revert,
    "cases": run_cases,
}


def execute(cfg: RunConfig, stream) -> int:
    """Run ``cfg`` and write the report to ``stream``; returns the exit status."""
    res = RUNNERS[cfg.command](cfg)
    results, assertions = res[0], res[1]
    if cfg.output_format == "json":
        report = {"command": cfg.command, "config": cfg.public(), "results": results,
                  "assertions": assertions, "version": __version__}
        stream.write(dumps(report) + "\n")
    elif cfg.output_format == "csv":
        if cfg.command == "sample":
            _write_rows(stream, res[2])
            for a in assertions:
                print(f"{a['status'].upper()} {a['name']}", file=sys.stderr)
        else:
            stream.write(_assertion_csv(assertions))
    else:
        stream.write(_text(cfg.command, results, assertions))
    if not assertions.passed:
        failed = [a["name"] for a in assertions if a["status"] != "pass"]
        print("failed: " + "; ".join(failed), file=sys.stderr)
        if cfg.command == "sample" and results["offending_samples"]:
            print(f"offending samples (seed {cfg.seed}): {results['offending_samples'][:50]}",
                  file=sys.stderr)
    return 0 if assertions.passed else 1


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="output_format", choices=FORMATS, default="json")
    common.add_argument("--exact", action="store_true", help="exact rational arithmetic where supported")
    common.add_argument("--tolerance", type=float, default=None)
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("--output", default=None, help="write the report here instead of stdout")

    parser = argparse.ArgumentParser(prog="invhankel",
                                     description="Verify |H_3(1)(f^-1)| <= 1/9 for starlike functions of order 1/2.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify-bound", parents=[common], help="run every check and report the bound")
    p.add_argument("--grid-step", type=float, default=0.01)
    p = sub.add_parser("scan", parents=[common], help="certified maximum of the majorant")
    p.add_argument("--grid-step", type=float, required=True)
    p.add_argument("--refine", action="store_true", help="second-order per-cell refinement")
    sub.add_parser("extremal", parents=[common], help="the extremal function and its inverse")
    p = sub.add_parser("sample", parents=[common], help="random Herglotz measures")
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--atoms", type=int, default=4)
    p.add_argument("--seed", type=int, required=True)
    p = sub.add_parser("revert", parents=[common], help="inverse coefficients of z + a2 z^2 + ... + a5 z^5")
    p.add_argument("--coeffs", required=True, help="a2,a3,a4,a5 (rationals like 1/3 with --exact)")
    sub.add_parser("cases", parents=[common], help="case-by-case table of edge, face and vertex values")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _parser()
    ns = parser.parse_args(argv)
    kwargs = {k: v for k, v in vars(ns).items() if v is not None}
    if "coeffs" in kwargs:
        kwargs["coeffs"] = tuple(t.strip() for t in kwargs["coeffs"].split(","))
    try:
        cfg = RunConfig(**kwargs)
    except ConfigError as err:
        parser.error(str(err))
    try:
        if cfg.output:
            with open(cfg.output, "w", newline="") as fh:
                return execute(cfg, fh)
        return execute(cfg, sys.stdout)
    except ConfigError as err:
        parser.error(str(err))


if __name__ == "__main__":
    sys.exit(main())
