"""Command-line front end: build sets, search tight arrays, check the table."""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from pathlib import Path

from flatsets.bounds import DomainError, TensorRankError, evaluate_bounds, tensor_rank_check
from flatsets.codes import CodeError, KasamiParams
from flatsets.construction import (
    FlatVectorSet,
    angle_set,
    format_vectors,
    godsil_roy,
    is_real,
    norms_squared,
)
from flatsets.families import FAMILIES, Setup, get_setup
from flatsets.graphs import ActionError, VerificationError, format_adjacency, verify_distance_regular
from flatsets.optimality import analyse, search_tight
from flatsets.spectra import SpectralMismatchError, spectrum_from_array, verify_spectral_identity

SCHEMA = 1
# Sets above this size skip the tensor rank check unless --deep is given.
TENSOR_DEFAULT_LIMIT = 512

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2

TABLE1 = (
    {"graph": "4-cube", "k": 4, "c2": 2, "c3": 3, "alpha": "1/4", "n": 8, "space": "R^4"},
    {"graph": "folded-8-cube", "k": 8, "c2": 2, "c3": 3, "alpha": "1/4", "n": 64, "space": "R^8"},
    {"graph": "golay", "k": 24, "c2": 2, "c3": 3, "alpha": "1/9", "n": 2048, "space": "R^24"},
    {"graph": "8-cycle", "k": 2, "c2": 1, "c3": 1, "alpha": "1/2", "n": 4, "space": "C^2"},
)
TABLE1_CELLS = ("k", "c2", "c3", "alpha", "n", "space")


class UsageError(ValueError):
    pass


def rational(x: Fraction | int) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_kasami(text: str) -> KasamiParams:
    """Parse ``q=<q>,variant=<i|ii>[,j=<j>,m=<m>]``."""
    fields: dict[str, str] = {}
    for part in text.split(","):
        key, sep, value = part.partition("=")
        if not sep or key.strip() not in {"q", "variant", "j", "m"}:
            raise UsageError(f"bad kasami field {part!r}")
        fields[key.strip()] = value.strip()
    if "q" not in fields or "variant" not in fields:
        raise UsageError("kasami parameters need q and variant")
    try:
        ints = {key: int(fields[key]) for key in ("q", "j", "m") if key in fields}
    except ValueError as exc:
        raise UsageError(f"kasami parameters must be integers: {exc}") from None
    try:
        return KasamiParams(ints["q"], fields["variant"], ints.get("j"), ints.get("m"))
    except CodeError as exc:
        raise UsageError(str(exc)) from None


def _load_setup(name: str, kasami: str | None) -> Setup:
    if name == "kasami" and kasami is None:
        raise UsageError("the kasami graph needs --kasami q=..,variant=..")
    params = parse_kasami(kasami) if kasami is not None else None
    if params is not None and name != "kasami":
        raise UsageError("--kasami only applies to the kasami graph")
    try:
        return get_setup(name, params)
    except CodeError as exc:
        raise UsageError(str(exc)) from None


def build_report(setup: Setup, deep: bool = False) -> tuple[dict, FlatVectorSet | None]:
    """Run every check on one family; returns the report body and the vector set."""
    checks: dict[str, str] = {}
    body: dict = {"graph": {"name": setup.name, "vertices": setup.graph.vertex_count}}
    try:
        ia = verify_distance_regular(setup.graph)
    except VerificationError as exc:
        checks["distance_regular"] = f"fail: {exc}"
        return {**body, "verifications": checks}, None
    checks["distance_regular"] = "pass"
    if ia != setup.expected:
        checks["intersection_array"] = f"fail: found {ia.triple}, expected {setup.expected.triple}"
    else:
        checks["intersection_array"] = "pass"
    spectrum = spectrum_from_array(ia)
    body["graph"].update(k=ia.k, c2=ia.c2, c3=ia.c3, theta1_squared=spectrum.theta1_squared,
                         eigenvalues=list(spectrum.eigenvalues()), shells=list(ia.shells))
    if spectrum.theta1_squared != setup.expected_theta1_squared:
        checks["theta1"] = f"fail: theta1^2 = {spectrum.theta1_squared}"
    else:
        checks["theta1"] = "pass"
    checks["spectral_identity"] = "pass" if verify_spectral_identity(setup.graph, spectrum) else "fail"
    try:
        s = godsil_roy(setup.graph, setup.group, setup.action, setup.y, setup.z, spectrum)
    except ActionError as exc:
        checks["regular_action"] = f"fail: {exc}"
        return {**body, "verifications": checks}, None
    checks["regular_action"] = "pass"
    angles = angle_set(s)
    real = is_real(s)
    body["set"] = {
        "n": s.n, "k": s.dimension, "e": s.root_order, "alpha": rational(s.alpha),
        "field": "real" if real else "complex",
        "angles": [rational(a) for a in sorted(angles)],
    }
    checks["unit_norm"] = "pass" if all(x == 1 for x in norms_squared(s)) else "fail"
    checks["angle_set"] = "pass" if angles <= {Fraction(0), s.alpha} else "fail"
    bounds = evaluate_bounds(s.dimension, s.n, real)
    body["bounds"] = bounds.as_dict()
    body["tight"] = bounds.tight_against in ("flat_real", "flat_complex")
    body["tightness"] = analyse(ia.k, ia.c2, ia.c3, "real" if real else "complex").as_dict()
    if s.n <= TENSOR_DEFAULT_LIMIT or deep:
        try:
            rank, cap = tensor_rank_check(s)
            body["tensor"] = {"rank": rank, "cap": cap}
            checks["tensor_rank"] = "pass"
        except (TensorRankError, DomainError) as exc:
            checks["tensor_rank"] = f"fail: {exc}"
    else:
        checks["tensor_rank"] = "skipped (use --deep)"
    body["verifications"] = checks
    return body, s


def _passed(checks: dict[str, str]) -> bool:
    return not any(v.startswith("fail") for v in checks.values())


def _emit(report: dict, started: float, stream) -> None:
    report["timing"] = {"seconds": round(time.perf_counter() - started, 3)}
    stream.write(json.dumps(report, indent=2, sort_keys=True) + "\n")


def _write_outputs(out: Path, report: dict, setup: Setup, s: FlatVectorSet | None) -> None:
    out.mkdir(parents=True, exist_ok=True)
    (out / "adjacency.txt").write_text(format_adjacency(setup.graph))
    if s is not None:
        (out / "vectors.txt").write_text(format_vectors(s))
    (out / "report.json").write_text(json.dumps(report, indent=2, sort_keys=True) + "\n")


def cmd_build(args, stream) -> int:
    started = time.perf_counter()
    setup = _load_setup(args.graph, args.kasami)
    body, s = build_report(setup, deep=args.deep)
    ok = _passed(body["verifications"])
    report = {"schema": SCHEMA, "command": "build", "ok": ok,
              "parameters": {"graph": args.graph, "kasami": args.kasami, "deep": args.deep}, **body}
    if args.out is not None:
        _write_outputs(Path(args.out), report, setup, s)
    _emit(report, started, stream)
    return EXIT_OK if ok else EXIT_FAILED


def cmd_search(args, stream) -> int:
    started = time.perf_counter()
    if args.max_k < 2:
        raise UsageError("--max-k must be at least 2")
    reports = search_tight(args.max_k, args.field)
    report = {
        "schema": SCHEMA, "command": "search", "ok": True,
        "parameters": {"max_k": args.max_k, "field": args.field},
        "count": len(reports),
        "triples": [r.as_dict() for r in reports],
    }
    _emit(report, started, stream)
    return EXIT_OK


def run_table1(expected=TABLE1, deep: bool = False) -> dict:
    """Build each table graph and compare every cell; mismatches name the cell."""
    rows, mismatches = [], []
    for row in expected:
        body, s = build_report(get_setup(row["graph"]), deep=deep)
        got: dict = {"graph": row["graph"]}
        if s is not None:
            g = body["graph"]
            got.update(k=g["k"], c2=g["c2"], c3=g["c3"], alpha=rational(s.alpha), n=s.n,
                       space=f"{'R' if body['set']['field'] == 'real' else 'C'}^{s.dimension}")
        for cell in TABLE1_CELLS:
            if got.get(cell) != row[cell]:
                mismatches.append(f"{row['graph']}.{cell}: expected {row[cell]}, got {got.get(cell)}")
        if not body.get("tight"):
            mismatches.append(f"{row['graph']}.bound: set does not meet a flat bound")
        if not _passed(body["verifications"]):
            mismatches.append(f"{row['graph']}.verifications: {body['verifications']}")
        got["tight_against"] = body.get("bounds", {}).get("tight_against")
        got["verifications"] = body["verifications"]
        rows.append(got)
    cells = len(expected) * len(TABLE1_CELLS)
    return {"schema": SCHEMA, "command": "table1", "ok": not mismatches, "parameters": {"deep": deep},
            "cells": cells, "rows": rows, "mismatches": mismatches}


def cmd_table1(args, stream) -> int:
    started = time.perf_counter()
    report = run_table1(deep=args.deep)
    _emit(report, started, stream)
    return EXIT_OK if report["ok"] else EXIT_FAILED


def cmd_export(args, stream) -> int:
    started = time.perf_counter()
    setup = _load_setup(args.graph, args.kasami)
    spectrum = spectrum_from_array(verify_distance_regular(setup.graph))
    s = godsil_roy(setup.graph, setup.group, setup.action, setup.y, setup.z, spectrum)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    (out / "adjacency.txt").write_text(format_adjacency(setup.graph))
    (out / "vectors.txt").write_text(format_vectors(s))
    report = {"schema": SCHEMA, "command": "export", "ok": True,
              "parameters": {"graph": args.graph, "kasami": args.kasami},
              "files": ["adjacency.txt", "vectors.txt"]}
    _emit(report, started, stream)
    return EXIT_OK


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="flatsets", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    build = sub.add_parser("build", help="build a graph, its vector set, and verify both")
    build.add_argument("graph", choices=FAMILIES)
    build.add_argument("--kasami", help="q=<q>,variant=<i|ii>[,j=<j>,m=<m>]")
    build.add_argument("--deep", action="store_true", help="run the tensor rank check on large sets")
    build.add_argument("--out", help="directory for report.json, vectors.txt, adjacency.txt")
    build.set_defaults(func=cmd_build)

    search = sub.add_parser("search", help="search intersection arrays meeting a flat bound")
    search.add_argument("--max-k", type=int, default=200)
    search.add_argument("--field", choices=("real", "complex"), default="real")
    search.set_defaults(func=cmd_search)

    table = sub.add_parser("table1", help="rebuild the four extremal sets and check every cell")
    table.add_argument("--deep", action="store_true")
    table.set_defaults(func=cmd_table1)

    export = sub.add_parser("export", help="write vectors.txt and adjacency.txt")
    export.add_argument("graph", choices=FAMILIES)
    export.add_argument("--kasami")
    export.add_argument("--out", required=True)
    export.set_defaults(func=cmd_export)
    return parser


def main(argv: list[str] | None = None, stream=None) -> int:
    stream = sys.stdout if stream is None else stream
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args, stream)
    except UsageError as exc:
        print(f"flatsets: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
