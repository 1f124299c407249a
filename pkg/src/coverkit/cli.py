"""Command-line front end with machine-readable JSON input and output.

Every reply is a single JSON envelope on standard output:

    {"status": "ok"|"error", "result": ..., "provenance": [...]}

with byte-for-byte deterministic output for identical inputs.  Exit codes:
0 success, 2 validation failure, 3 enumeration budget exceeded.  Payloads
are read from --input or standard input; counts are serialized as decimal
strings so consumers need no 64-bit assumptions.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import covers, harrison, ringlab, rotation
from .harrison import AdeleClass, BudgetExceededError, CurveCtx, SigmaClass
from .arith import PrimeCtx


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coverkit",
        description="classify, test, count and annotate p-cyclic covers of curves",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_: str, g: bool = False, payload: bool = False):
        cmd = sub.add_parser(name, help=help_)
        cmd.add_argument("--p", type=int, required=True, help="prime cover degree")
        if g:
            cmd.add_argument("--g", type=int, default=0, help="genus (default 0)")
        if payload:
            cmd.add_argument(
                "--input", help="file with the JSON payload (default: stdin)"
            )
        cmd.add_argument(
            "--table", action="store_true", help="human-readable output"
        )
        return cmd

    add("exists", "does an adelic class come from the function field", g=True,
        payload=True)
    add("equivalent", "do two function-field classes agree adelically", g=True,
        payload=True)
    add("classify", "canonical cover representative and branch data", g=True,
        payload=True)
    add("ramification", "ramification locus and profile of an adelic class",
        payload=True)

    count = add("count", "closed-form cover counts", g=True)
    which = count.add_mutually_exclusive_group(required=True)
    which.add_argument("--unramified", action="store_true",
                       help="nontrivial unramified covers")
    which.add_argument("--r-contained", type=int, metavar="R",
                       help="ramification inside an R-point set")
    which.add_argument("--r-exact", type=int, metavar="R",
                       help="ramification exactly an R-point set")

    add("strata", "filtration and stratum sizes for a point set", payload=True)
    add("rotation", "rotation numbers of a superelliptic cover", payload=True)
    add("ring-check", "Galois test for a structure-constant algebra over F_q",
        payload=True)
    add("ring-product", "Harrison product of two Galois algebras over F_q",
        payload=True)

    census = add("census", "count table with a brute-force oracle column", g=True)
    census.add_argument("--max-r", type=int, required=True,
                        help="largest branch-set size to tabulate")
    return parser


def _read_payload(args) -> dict:
    if getattr(args, "input", None):
        with open(args.input, "r", encoding="utf-8") as fh:
            raw = fh.read()
    else:
        raw = sys.stdin.read()
    try:
        payload = json.loads(raw)
    except json.JSONDecodeError as e:
        raise ValueError(f"payload is not valid JSON: {e}") from None
    if not isinstance(payload, dict):
        raise ValueError("payload must be a JSON object")
    return payload


# -- command handlers; each returns (result, provenance) --------------------


def _cmd_exists(args):
    ctx = CurveCtx(args.p, args.g)
    a = AdeleClass.from_json(ctx, _read_payload(args))
    witness = harrison.rational_witness(a)
    result = {"exists": witness is not None}
    if witness is not None:
        result["witness"] = witness.to_json()
    return result, ["zero-sum-criterion"]


def _cmd_equivalent(args):
    ctx = CurveCtx(args.p, args.g)
    payload = _read_payload(args)
    for key in ("s1", "s2"):
        if key not in payload:
            raise ValueError(f'payload needs "{key}"')
    s1 = SigmaClass.from_json(ctx, payload["s1"])
    s2 = SigmaClass.from_json(ctx, payload["s2"])
    return (
        {"equivalent": harrison.adelically_equivalent(s1, s2)},
        ["valuation-vector-equality", "jacobian-torsion-kernel"],
    )


def _cmd_classify(args):
    ctx = CurveCtx(args.p, args.g)
    s = SigmaClass.from_json(ctx, _read_payload(args))
    cover = covers.cover_from_sigma(s)
    pair = covers.cornalba_pair_of(cover)
    locus, profile = harrison.ramification(harrison.tensor_to_adeles(cover.rep))
    result = {
        "representative": cover.to_json(),
        "cornalba": pair.to_json(),
        "ramification": {"locus": sorted(locus), "profile": profile},
    }
    return result, ["scaling-orbit-normal-form", "branch-divisor-pair"]


def _cmd_ramification(args):
    ctx = CurveCtx(args.p, 0)
    a = AdeleClass.from_json(ctx, _read_payload(args))
    locus, profile = harrison.ramification(a)
    return (
        {"locus": sorted(locus), "profile": profile},
        ["valuation-support", "ramification-index"],
    )


def _cmd_count(args):
    if args.g < 0:
        raise ValueError("genus must be nonnegative")
    if args.unramified:
        n = covers.count_unramified_nontrivial(args.p, args.g)
        tag = "unramified"
    elif args.r_contained is not None:
        n = covers.count_ram_contained(args.p, args.g, args.r_contained)
        tag = "ramification-contained"
    else:
        n = covers.count_ram_exact(args.p, args.g, args.r_exact)
        tag = "ramification-exact"
    return {"count": str(n)}, ["orbit-count-closed-form", tag]


def _cmd_strata(args):
    payload = _read_payload(args)
    points = payload.get("points")
    if not isinstance(points, list) or not all(isinstance(x, str) for x in points):
        raise ValueError('payload needs "points": a list of labels')
    if len(set(points)) != len(points):
        raise ValueError("points must be distinct")
    return (
        {
            "filtration_size": str(harrison.filtration_size(points, args.p)),
            "stratum_size": str(harrison.stratum_size(points, args.p)),
        },
        ["filtration-size", "stratum-size"],
    )


def _cmd_rotation(args):
    data = rotation.SuperellipticData.from_json(_read_payload(args), p=args.p)
    result = {"rotation": rotation.rotation_data(data)}
    if len(data.branch) >= 2:
        result["genus"] = rotation.cover_genus(data)
    result["irreducible"] = data.is_irreducible()
    return result, ["local-kummer-pairing", "riemann-hurwitz"]


def _cmd_ring_check(args):
    payload = _read_payload(args)
    S, act = ringlab.algebra_from_json(payload, args.p)
    PrimeCtx(args.p, S.gf.q)  # enforces q = 1 mod p
    galois = ringlab.is_galois(S, act)
    return {"galois": galois}, ["fixed-subring", "tensor-splitting-rank"]


def _cmd_ring_product(args):
    payload = _read_payload(args)
    for key in ("a1", "a2"):
        if key not in payload:
            raise ValueError(f'payload needs "{key}"')
    S1, act1 = ringlab.algebra_from_json(payload["a1"], args.p)
    S2, act2 = ringlab.algebra_from_json(payload["a2"], args.p)
    if S1.gf.q != S2.gf.q:
        raise ValueError("the factors must share the same base field")
    ctx = PrimeCtx(args.p, S1.gf.q)
    S, act = ringlab.harrison_product(ctx, S1, act1, S2, act2)
    return ringlab.algebra_to_json(S, act), ["eigenspace-tensor-product"]


def _cmd_census(args):
    if args.g < 0 or args.max_r < 0:
        raise ValueError("genus and --max-r must be nonnegative")
    rows = []
    for r in range(args.max_r + 1):
        contained = covers.count_ram_contained(args.p, args.g, r)
        exact = covers.count_ram_exact(args.p, args.g, r)
        try:
            oracle = covers.bruteforce_cover_count(args.p, args.g, r, exact=True)
        except BudgetExceededError:
            return (
                {"rows": rows, "truncated_at_r": r},
                ["orbit-count-closed-form", "exhaustive-orbit-oracle"],
                "budget",
            )
        rows.append(
            {
                "r": r,
                "contained": str(contained),
                "exact": str(exact),
                "oracle": str(oracle),
            }
        )
        if oracle != exact:
            return (
                {"rows": rows, "mismatch_at_r": r},
                ["orbit-count-closed-form", "exhaustive-orbit-oracle"],
                "mismatch",
            )
    return (
        {"rows": rows},
        ["orbit-count-closed-form", "exhaustive-orbit-oracle"],
        None,
    )


_HANDLERS = {
    "exists": _cmd_exists,
    "equivalent": _cmd_equivalent,
    "classify": _cmd_classify,
    "ramification": _cmd_ramification,
    "count": _cmd_count,
    "strata": _cmd_strata,
    "rotation": _cmd_rotation,
    "ring-check": _cmd_ring_check,
    "ring-product": _cmd_ring_product,
}


def _emit(envelope: dict, table: bool) -> None:
    if table:
        _emit_table(envelope)
    else:
        sys.stdout.write(
            json.dumps(envelope, sort_keys=True, separators=(",", ":")) + "\n"
        )


def _emit_table(envelope: dict) -> None:
    out = sys.stdout
    out.write(f"status: {envelope['status']}\n")
    result = envelope.get("result")
    if isinstance(result, dict) and "rows" in result:
        rows = result["rows"]
        header = ("r", "contained", "exact", "oracle")
        widths = [
            max(len(h), *(len(str(row[h])) for row in rows)) if rows else len(h)
            for h in header
        ]
        out.write("  ".join(h.rjust(w) for h, w in zip(header, widths)) + "\n")
        for row in rows:
            out.write(
                "  ".join(str(row[h]).rjust(w) for h, w in zip(header, widths))
                + "\n"
            )
        for key in sorted(result):
            if key != "rows":
                out.write(f"{key}: {result[key]}\n")
    elif isinstance(result, dict):
        for key in sorted(result):
            out.write(f"{key}: {json.dumps(result[key], sort_keys=True)}\n")
    if envelope["status"] == "error":
        out.write(f"error: {envelope['code']}: {envelope['message']}\n")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    table = getattr(args, "table", False)
    try:
        if args.command == "census":
            result, provenance, failure = _cmd_census(args)
            if failure == "budget":
                _emit(
                    {
                        "status": "error",
                        "code": "budget-exceeded",
                        "message": "enumeration budget exceeded; table truncated",
                        "result": result,
                        "provenance": provenance,
                    },
                    table,
                )
                return 3
            if failure == "mismatch":
                _emit(
                    {
                        "status": "error",
                        "code": "oracle-mismatch",
                        "message": "closed form disagrees with the oracle",
                        "result": result,
                        "provenance": provenance,
                    },
                    table,
                )
                return 1
        else:
            result, provenance = _HANDLERS[args.command](args)
    except BudgetExceededError as e:
        _emit(
            {
                "status": "error",
                "code": "budget-exceeded",
                "message": str(e),
                "result": None,
                "provenance": [],
            },
            table,
        )
        return 3
    except (ValueError, OSError) as e:
        _emit(
            {
                "status": "error",
                "code": "validation-error",
                "message": str(e),
                "result": None,
                "provenance": [],
            },
            table,
        )
        return 2

    _emit({"status": "ok", "result": result, "provenance": provenance}, table)
    return 0


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
