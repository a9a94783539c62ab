"""Command-line interface: verification suites, fusion tables, S-matrices,
and monodromy scalars, with deterministic machine-readable reports.

Exit codes: 0 all checks pass, 1 validation failure, 2 parse/structural
error, 3 internal numerical inconsistency.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import branchcut, fusionring
from .cocycle import AbelianCocycle, build_cyclic
from .errors import (
    CocycleError,
    ConsistencyError,
    DomainError,
    GradingError,
    RepresentationError,
    StructuralError,
)
from .modcat import TwistedCategory
from .specio import CategorySpec, load_spec

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_PARSE = 2
EXIT_INCONSISTENT = 3

REPORT_SCHEMA_VERSION = 1


@dataclass
class Report:
    """Suite verdicts plus emitted tables; renders identically for humans
    and machines, byte-identical across runs for a fixed spec and seed."""

    spec_name: str
    spec_digest: str
    seed: int
    verdicts: list[dict] = field(default_factory=list)
    tables: dict = field(default_factory=dict)

    def add(self, check: str, passed: bool, detail: str = "") -> None:
        self.verdicts.append(
            {"check": check, "status": "pass" if passed else "fail", "detail": detail}
        )

    @property
    def passed(self) -> bool:
        return all(v["status"] == "pass" for v in self.verdicts)

    def to_json(self) -> str:
        payload = {
            "schema_version": REPORT_SCHEMA_VERSION,
            "spec": self.spec_name,
            "spec_digest": self.spec_digest,
            "seed": self.seed,
            "verdicts": self.verdicts,
            "tables": self.tables,
        }
        return json.dumps(payload, sort_keys=True, indent=2) + "\n"

    def render_human(self) -> str:
        lines = [f"spec {self.spec_name} (sha256 {self.spec_digest[:12]}, seed {self.seed})"]
        for v in self.verdicts:
            mark = "PASS" if v["status"] == "pass" else "FAIL"
            line = f"  {mark}  {v['check']}"
            if v["detail"]:
                line += f": {v['detail']}"
            lines.append(line)
        n_fail = sum(1 for v in self.verdicts if v["status"] == "fail")
        total = len(self.verdicts)
        lines.append(
            f"{total} checks, all passed" if n_fail == 0 else f"{total} checks, {n_fail} FAILED"
        )
        return "\n".join(lines)


def _digest(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


def _integral_matrix(values: np.ndarray, tol: float) -> list[list[int]]:
    rounded = np.round(values.real).astype(np.int64)
    err = float(np.abs(values - rounded).max())
    if err > tol:
        raise ConsistencyError(f"matrix entries deviate from integers by {err:.2e}")
    return [[int(x) for x in row] for row in rounded]


def _fusion_tables(cat: TwistedCategory, tol: float) -> dict:
    table = fusionring.fusion_table(cat)
    smatrix = np.array(
        [[cat.s_entry(m, n) for n in cat.catalog] for m in cat.catalog], dtype=np.complex128
    )
    return {
        "fusion": {
            "labels": list(table.labels),
            "dims": list(table.dims),
            "coefficients": table.to_dict(),
        },
        "smatrix": {
            "labels": [m.label for m in cat.catalog],
            "entries": _integral_matrix(smatrix, tol),
        },
    }


def _verify_monodromy(cocycle: AbelianCocycle, report: Report, seed: int) -> None:
    rng = np.random.default_rng(seed)
    grades = list(cocycle.group.elements())
    n_pairs, bad = 200, 0
    for _ in range(n_pairs):
        r1 = float(rng.uniform(0.1, 10.0))
        r2 = float(rng.uniform(0.5 * r1, r1))
        if branchcut.p_int(r1, r2) != 0 or branchcut.p_int(r2, r2 - r1) != 0:
            bad += 1
            continue
        for a1 in grades:
            for a2 in grades:
                for a3 in grades:
                    want = cocycle.f(a1, a2, a3).inverse()
                    if branchcut.assoc_scalar(cocycle, r1, r2, a1, a2, a3) != want:
                        bad += 1
    report.add(
        "monodromy-positive-reals",
        bad == 0,
        f"{n_pairs} seeded admissible pairs: p = 0 and scalar = F^-1 exactly",
    )
    loop = branchcut.clockwise_unit_loop()
    loop_bad = []
    for a1 in grades:
        for a2 in grades:
            transport = branchcut.transport_scalar(cocycle, loop, a1, a2)
            double = cocycle.omega(a1, a2).inverse() * cocycle.omega(a2, a1).inverse()
            if transport != double:
                loop_bad.append((a1, a2))
    report.add(
        "monodromy-loop-identity",
        not loop_bad,
        "clockwise unit loop transport equals the composed braiding scalars "
        f"for all {len(grades) ** 2} grade pairs",
    )


def _verify_finite(spec: CategorySpec, report: Report, seed: int, tol: float) -> None:
    try:
        cocycle = spec.build_cocycle()
    except CocycleError as exc:
        detail = "; ".join(c.describe() for c in exc.report.failures()) if exc.report else str(exc)
        report.add("cocycle-axioms", False, detail)
        return
    counts = f"|A| = {cocycle.group.order}, pentagon tuples = {cocycle.group.order ** 4}"
    report.add("cocycle-axioms", True, counts)

    try:
        cat = spec.build_category()
    except (RepresentationError, GradingError, StructuralError) as exc:
        report.add("irreps-valid", False, str(exc))
        return
    report.add(
        "irreps-valid",
        True,
        f"{len(cat.catalog)} irreps validated and graded; sum of dim^2 = {cat.group.order}",
    )

    suite = cat.coherence_suite(tol=tol, seed=seed)
    for check in suite.checks:
        detail = f"{check.checked} tuples, max deviation {check.max_error:.2e}"
        if check.witness is not None:
            detail += f", witness {check.witness}"
        report.add(f"coherence:{check.axiom}", check.passed, detail)

    try:
        order = fusionring.group_order_identity(cat)
        report.add(
            "group-order-identity", order == cat.group.order,
            f"sum (dim)(dim*) = {order}, |G| = {cat.group.order}",
        )
    except ConsistencyError as exc:
        report.add("group-order-identity", False, str(exc))

    dims_ok = all(abs(cat.cat_dim(m) - m.dim) <= tol for m in cat.catalog)
    report.add(
        "categorical-dimensions", dims_ok,
        "categorical trace of the identity equals the vector-space dimension",
    )

    _verify_monodromy(cocycle, report, seed)
    report.tables.update(_fusion_tables(cat, tol))


def _verify_su2(spec: CategorySpec, report: Report, seed: int, tol: float) -> None:
    try:
        cocycle = spec.build_cocycle()
    except CocycleError as exc:
        detail = "; ".join(c.describe() for c in exc.report.failures()) if exc.report else str(exc)
        report.add("cocycle-axioms", False, detail)
        return
    report.add("cocycle-axioms", True, f"|A| = {cocycle.group.order}")

    max_spin = spec.max_spin
    smatrix = fusionring.su2_smatrix(max_spin, cocycle)
    sym = bool(np.array_equal(smatrix, smatrix.T))
    mags = all(
        abs(int(smatrix[m, n])) == (m + 1) * (n + 1)
        for m in range(max_spin + 1)
        for n in range(max_spin + 1)
    )
    report.add("smatrix-symmetric", sym, f"spins up to {max_spin}")
    report.add("smatrix-magnitude", mags, "|S_mn| = (m+1)(n+1) for all entries")

    fusion_ok = all(
        fusionring.su2_tensor(m, n).dim == (m + 1) * (n + 1)
        for m in range(max_spin + 1)
        for n in range(max_spin + 1)
    )
    report.add("fusion-dimension-rule", fusion_ok, "Clebsch-Gordan dimensions add up")

    dim_ok = all(fusionring.su2_cat_dim_scalar(n, cocycle) == 0 for n in (0, 1))
    report.add(
        "categorical-dimensions", dim_ok,
        "dimension prefactor is exactly 1 on both grades",
    )

    _verify_monodromy(cocycle, report, seed)
    report.tables["smatrix"] = {
        "labels": [f"V({n})" for n in range(max_spin + 1)],
        "entries": [[int(x) for x in row] for row in smatrix],
    }
    report.tables["fusion"] = {
        f"V({m})xV({n})": [f"V({k})" for k in fusionring.su2_tensor(m, n).spins]
        for m in range(min(max_spin, 6) + 1)
        for n in range(m + 1)
    }


def cmd_verify(args) -> int:
    spec = load_spec(args.spec)
    report = Report(spec.name, _digest(spec.path), args.seed)
    if spec.mode == "su2":
        _verify_su2(spec, report, args.seed, args.tolerance)
    else:
        _verify_finite(spec, report, args.seed, args.tolerance)
    _emit(report, args)
    return EXIT_OK if report.passed else EXIT_VALIDATION


def cmd_fusion(args) -> int:
    spec = load_spec(args.spec)
    report = Report(spec.name, _digest(spec.path), args.seed)
    if spec.mode == "su2":
        report.tables["fusion"] = {
            f"V({m})xV({n})": [f"V({k})" for k in fusionring.su2_tensor(m, n).spins]
            for m in range(spec.max_spin + 1)
            for n in range(spec.max_spin + 1)
        }
        report.add("fusion-table", True, f"Clebsch-Gordan up to spin {spec.max_spin}")
    else:
        cat = spec.build_category()
        table = fusionring.fusion_table(cat)
        report.tables["fusion"] = {
            "labels": list(table.labels),
            "dims": list(table.dims),
            "coefficients": table.to_dict(),
        }
        report.add(
            "fusion-table", True,
            f"{len(table.labels)}^3 character-sum coefficients, invariants verified",
        )
    _emit(report, args)
    return EXIT_OK


def cmd_smatrix(args) -> int:
    if args.spec is None:
        if args.max_spin is None:
            raise StructuralError("smatrix needs --spec or --su2 with --max-spin")
        cocycle = build_cyclic(2, args.cocycle_param)
        smatrix = fusionring.su2_smatrix(args.max_spin, cocycle)
        report = Report(f"su2(s={args.cocycle_param})", "-", args.seed)
        report.tables["smatrix"] = {
            "labels": [f"V({n})" for n in range(args.max_spin + 1)],
            "entries": [[int(x) for x in row] for row in smatrix],
        }
        report.add("smatrix", True, f"exact integer entries up to spin {args.max_spin}")
        _emit(report, args)
        return EXIT_OK
    spec = load_spec(args.spec)
    report = Report(spec.name, _digest(spec.path), args.seed)
    if spec.mode == "su2":
        cocycle = spec.build_cocycle()
        max_spin = args.max_spin if args.max_spin is not None else spec.max_spin
        smatrix = fusionring.su2_smatrix(max_spin, cocycle)
        report.tables["smatrix"] = {
            "labels": [f"V({n})" for n in range(max_spin + 1)],
            "entries": [[int(x) for x in row] for row in smatrix],
        }
        report.add("smatrix", True, f"exact integer entries up to spin {max_spin}")
    else:
        cat = spec.build_category()
        values = np.array(
            [[cat.s_entry(m, n) for n in cat.catalog] for m in cat.catalog]
        )
        report.tables["smatrix"] = {
            "labels": [m.label for m in cat.catalog],
            "entries": _integral_matrix(values, args.tolerance),
        }
        report.add("smatrix", True, "double-braiding traces, integral within tolerance")
    _emit(report, args)
    return EXIT_OK


def _parse_complex(text: str) -> complex:
    parts = text.split(",")
    if len(parts) != 2:
        raise StructuralError(f"expected 're,im', got {text!r}")
    return complex(float(parts[0]), float(parts[1]))


def _parse_grades(text: str, spec: CategorySpec, count: int):
    parts = text.split("|")
    if len(parts) != count:
        raise StructuralError(f"expected {count} grades joined by '|', got {text!r}")
    return tuple(spec.grading.element([int(x) for x in p.split(",")]) for p in parts)


def cmd_monodromy(args) -> int:
    spec = load_spec(args.spec)
    cocycle = spec.build_cocycle()
    report = Report(spec.name, _digest(spec.path), args.seed)
    try:
        if args.path:
            waypoints = tuple(
                _parse_complex(p) for p in args.path.replace(";", " ").split()
            )
            path = branchcut.PathPolyline(waypoints)
            grades = _parse_grades(args.grades, spec, 2)
            p = branchcut.winding(path)
            scalar = branchcut.transport_scalar(cocycle, path, *grades)
            report.tables["monodromy"] = {
                "winding": p,
                "transport_exponent": str(scalar),
                "transport_value": repr(scalar.to_complex()),
            }
            report.add("monodromy", True, f"winding {p}, transport exponent {scalar}")
        else:
            if args.z1 is None or args.z2 is None:
                raise StructuralError("monodromy needs --z1/--z2 or --path")
            z1, z2 = _parse_complex(args.z1), _parse_complex(args.z2)
            grades = _parse_grades(args.grades, spec, 3)
            p12 = branchcut.p_int(z1, z2)
            p2 = branchcut.p_int(z2, z2 - z1)
            scalar = branchcut.assoc_scalar(cocycle, z1, z2, *grades)
            report.tables["monodromy"] = {
                "p_z1_z2": p12,
                "p_z2_z2-z1": p2,
                "assoc_exponent": str(scalar),
                "assoc_value": repr(scalar.to_complex()),
            }
            report.add(
                "monodromy", True,
                f"p_z1_z2 = {p12}, p_z2_z2-z1 = {p2}, scalar exponent {scalar}",
            )
    except DomainError as exc:
        report.add("monodromy", False, str(exc))
        _emit(report, args)
        return EXIT_VALIDATION
    _emit(report, args)
    return EXIT_OK


def _emit(report: Report, args) -> None:
    print(report.render_human())
    if args.out:
        Path(args.out).write_text(report.to_json(), encoding="utf-8")


def _add_common(parser: argparse.ArgumentParser, *, spec_required: bool = True) -> None:
    parser.add_argument(
        "--spec", required=spec_required, default=None,
        help="spec file path or bundled fixture name",
    )
    parser.add_argument("--out", default=None, help="write machine-readable JSON report here")
    parser.add_argument("--seed", type=int, default=0, help="seed for randomized spot checks")
    parser.add_argument(
        "--tolerance", type=float, default=1e-9, help="tolerance for matrix-level checks"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twistcat",
        description="cocycle-twisted categories of finite-group representations",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run all verification suites on a spec")
    _add_common(p_verify)
    p_verify.set_defaults(func=cmd_verify)

    p_fusion = sub.add_parser("fusion", help="emit the fusion table")
    _add_common(p_fusion)
    p_fusion.set_defaults(func=cmd_fusion)

    p_smatrix = sub.add_parser("smatrix", help="emit the S-matrix")
    _add_common(p_smatrix, spec_required=False)
    p_smatrix.add_argument("--su2", action="store_true", help="symbolic graded SU(2) mode")
    p_smatrix.add_argument("--max-spin", type=int, default=None)
    p_smatrix.add_argument(
        "--cocycle-param", type=int, default=3,
        help="twist parameter s of the Z/2 cocycle in --su2 mode",
    )
    p_smatrix.set_defaults(func=cmd_smatrix)

    p_mono = sub.add_parser("monodromy", help="branch integers and transport scalars")
    _add_common(p_mono)
    p_mono.add_argument("--z1", default=None, help="first insertion point as 're,im'")
    p_mono.add_argument("--z2", default=None, help="second insertion point as 're,im'")
    p_mono.add_argument(
        "--path", default=None,
        help="polyline waypoints 're,im' separated by spaces or ';', as one argument",
    )
    p_mono.add_argument(
        "--grades", required=True,
        help="grades joined by '|' (three for --z1/--z2, two for --path)",
    )
    p_mono.set_defaults(func=cmd_monodromy)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (StructuralError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (CocycleError, RepresentationError, GradingError, DomainError) as exc:
        print(f"validation failure: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except ConsistencyError as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT


if __name__ == "__main__":
    sys.exit(main())
