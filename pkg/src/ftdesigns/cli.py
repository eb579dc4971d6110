"""Command-line front end.

Subcommands: ``feasible``, ``construct``, ``verify``, ``aut``, ``census36``,
``bounds``.  Global flags: ``--format {text,csv,json}``, ``--strict`` /
``--no-strict`` (mismatches against reference values fail vs warn),
``--node-cap N`` for the automorphism search.

Exit codes are a stable contract: 0 all checks pass, 1 check failure,
2 input error, 3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from dataclasses import dataclass, field
from typing import Optional

from . import autgrp, construct, design, feasibility, perm

JSON_SCHEMA = "ftdesigns/1"

EXIT_OK = 0
EXIT_CHECK_FAILURE = 1
EXIT_INPUT_ERROR = 2
EXIT_RESOURCE_CAP = 3


class InputError(Exception):
    pass


@dataclass
class Finding:
    check: str
    expected: object
    observed: object
    provenance: str  # "reference" | "derived" | "trivial"
    ok: Optional[bool]  # None = informational
    anchor: str = ""

    def as_dict(self):
        out = {
            "check": self.check,
            "expected": self.expected,
            "observed": self.observed,
            "provenance": self.provenance,
            "ok": self.ok,
        }
        if self.anchor:
            out["anchor"] = self.anchor
        return out


@dataclass
class Report:
    command: str
    status: str = "pass"  # pass | fail | open
    findings: list = field(default_factory=list)
    elapsed_s: float = 0.0

    def add(self, check, expected, observed, provenance, anchor="", informational=False):
        ok = None if informational else (expected == observed)
        self.findings.append(
            Finding(check, expected, observed, provenance, ok, anchor)
        )
        if ok is False:
            self.status = "fail"
        return ok

    @property
    def passed(self):
        return self.status != "fail"


def _render_report(report: Report, fmt: str, out):
    if fmt == "json":
        payload = {
            "schema": JSON_SCHEMA,
            "command": report.command,
            "status": report.status,
            "findings": [f.as_dict() for f in report.findings],
            "elapsed_s": round(report.elapsed_s, 3),
        }
        json.dump(payload, out, indent=2)
        out.write("\n")
    elif fmt == "csv":
        writer = csv.writer(out)
        writer.writerow(["check", "expected", "observed", "provenance", "ok", "anchor"])
        for f in report.findings:
            writer.writerow(
                [f.check, f.expected, f.observed, f.provenance, f.ok, f.anchor]
            )
    else:
        out.write("# %s\n" % report.command)
        for f in report.findings:
            mark = "PASS" if f.ok else ("FAIL" if f.ok is False else "info")
            anchor = " [%s]" % f.anchor if f.anchor else ""
            out.write(
                "%-4s %-32s expected=%-18s observed=%-18s (%s)%s\n"
                % (mark, f.check, f.expected, f.observed, f.provenance, anchor)
            )
        out.write("status: %s (%.3fs)\n" % (report.status, report.elapsed_s))


# -- feasible ----------------------------------------------------------------

# Realization status of the enumerated rows, keyed by
# (lambda, v, k, r, c, d, ell).  "realized" counts are the published
# classification; "open" rows are not settled; "ruled out" rows admit no
# design despite being numerically feasible.
ROW_STATUS = {
    (2, 16, 6, 6, 4, 4, 2): "realized (2 designs)",
    (3, 16, 6, 9, 4, 4, 2): "ruled out (classification of block-size-6 designs)",
    (3, 45, 12, 12, 5, 9, 2): "ruled out (no design exists)",
    (3, 45, 12, 12, 9, 5, 3): "realized (1 design)",
    (3, 100, 12, 27, 10, 10, 2): "open",
    (3, 120, 18, 21, 8, 15, 2): "open",
    (3, 120, 18, 21, 15, 8, 3): "open",
    (3, 256, 18, 45, 16, 16, 2): "open",
    (3, 561, 36, 48, 17, 33, 2): "open (would meet the block-size bound)",
    (3, 561, 36, 48, 33, 17, 3): "open (would meet the block-size bound)",
    (3, 1156, 36, 99, 34, 34, 2): "open (would meet the block-size bound)",
    (4, 15, 8, 8, 3, 5, 2): "realized (1 design; construct pg 3)",
    (4, 16, 6, 12, 4, 4, 2): "realized (2 designs)",
    (4, 36, 8, 20, 6, 6, 2): "realized (1 design; construct d36)",
    (4, 45, 12, 16, 5, 9, 2): "ruled out (no design exists)",
    (4, 45, 12, 16, 9, 5, 3): "ruled out (no design exists)",
    (4, 96, 20, 20, 6, 16, 2): "realized (2 designs; construct d96)",
    (4, 96, 20, 20, 16, 6, 4): "realized (4 designs; construct d96)",
    (4, 100, 12, 36, 10, 10, 2): "open",
    (4, 196, 16, 52, 14, 14, 2): "open",
    (4, 231, 24, 40, 11, 21, 2): "open",
    (4, 231, 24, 40, 21, 11, 3): "open",
    (4, 280, 32, 36, 10, 28, 2): "open",
    (4, 280, 32, 36, 28, 10, 4): "open",
    (4, 484, 24, 84, 22, 22, 2): "open",
    (4, 1976, 80, 100, 26, 76, 2): "open",
    (4, 1976, 80, 100, 76, 26, 4): "open",
    (4, 2116, 48, 180, 46, 46, 2): "open",
}

LAMBDA2_EXCLUDED_NOTE = "numerically feasible; ruled out by the published classification"

# Rows of the published feasible-parameter tables whose printed r value
# contradicts the identity r(k-1) = lambda(v-1).  ``forced_r`` is the value
# the identity requires.  The v=435 row additionally fails the feasibility
# conditions named in ``fails`` once r is forced, so the enumerator cannot
# emit it; the CLI carries it as an explicitly flagged discrepancy row.
PRINTED_ROW_DISCREPANCIES = {
    4: (
        {
            "v": 196, "k": 16, "c": 14, "d": 14, "ell": 2,
            "printed_r": 42, "forced_r": 52, "fails": (),
        },
        {
            "v": 435, "k": 32, "c": 15, "d": 29, "ell": 2,
            "printed_r": 42, "forced_r": 56,
            "fails": ("flag-count", "block-count-divisibility"),
        },
    ),
}

# Expected row counts of the emitted tables (feasible rows + flagged
# discrepancy rows) for the classified lambdas.
EXPECTED_TABLE_ROWS = {2: 4, 3: 10, 4: 18}


def feasible_table_rows(lam: int):
    """Feasible tuples as dict rows plus flagged printed-row discrepancies,
    merged in (v, c, k) order."""
    rows = []
    for t in feasibility.feasible_tuples(lam):
        row = t.as_dict()
        key = (lam, t.v, t.k, t.r, t.c, t.d, t.ell)
        if key in ROW_STATUS:
            row["status"] = ROW_STATUS[key]
        elif lam == 2:
            row["status"] = LAMBDA2_EXCLUDED_NOTE
        else:
            row["status"] = ""
        rows.append(row)
    for disc in PRINTED_ROW_DISCREPANCIES.get(lam, ()):
        row = {
            "lambda": lam,
            "v": disc["v"],
            "k": disc["k"],
            "r": disc["forced_r"],
            "b": None,
            "c": disc["c"],
            "d": disc["d"],
            "ell": disc["ell"],
            "x": disc["k"] - 1 - disc["d"] * (disc["ell"] - 1),
            "printed_r": disc["printed_r"],
            "forced_r": disc["forced_r"],
        }
        if disc["fails"]:
            row["status"] = (
                "printed-row discrepancy: r printed as %d, identity forces %d; "
                "fails feasibility (%s)"
                % (disc["printed_r"], disc["forced_r"], ", ".join(disc["fails"]))
            )
            rows.append(row)
        else:
            # identity-forced r on an otherwise feasible row: annotate in place
            for existing in rows:
                if (existing["v"], existing["k"]) == (disc["v"], disc["k"]):
                    existing["printed_r"] = disc["printed_r"]
                    existing["forced_r"] = disc["forced_r"]
                    existing["status"] = (
                        "printed-row discrepancy: r printed as %d, identity "
                        "forces %d; %s" % (disc["printed_r"], disc["forced_r"],
                                           existing["status"] or "feasible")
                    )
    rows.sort(key=lambda row: (row["v"], row["c"], row["k"]))
    return rows


_FEASIBLE_COLUMNS = ("lambda", "v", "k", "r", "b", "c", "d", "ell", "x")


def cmd_feasible(args, out):
    t0 = time.perf_counter()
    if args.lam < 2:
        raise InputError("lambda must be at least 2")
    rows = feasible_table_rows(args.lam)
    status = EXIT_OK
    expected_count = EXPECTED_TABLE_ROWS.get(args.lam)
    if expected_count is not None and len(rows) != expected_count and args.strict:
        status = EXIT_CHECK_FAILURE
    if args.format == "json":
        payload = {
            "schema": JSON_SCHEMA,
            "command": "feasible",
            "lambda": args.lam,
            "rows": rows,
            "row_count": len(rows),
            "elapsed_s": round(time.perf_counter() - t0, 3),
        }
        json.dump(payload, out, indent=2)
        out.write("\n")
    elif args.format == "csv":
        writer = csv.writer(out)
        writer.writerow(_FEASIBLE_COLUMNS + ("status",))
        for row in rows:
            writer.writerow(
                [row[c] if row.get(c) is not None else "" for c in _FEASIBLE_COLUMNS]
                + [row.get("status", "")]
            )
    else:
        header = "%6s %6s %4s %4s %6s %4s %4s %4s %3s  %s" % (
            "lambda", "v", "k", "r", "b", "c", "d", "ell", "x", "status"
        )
        out.write(header + "\n")
        for row in rows:
            out.write(
                "%6d %6d %4d %4d %6s %4d %4d %4d %3d  %s\n"
                % (
                    row["lambda"], row["v"], row["k"], row["r"],
                    row["b"] if row["b"] is not None else "-",
                    row["c"], row["d"], row["ell"], row["x"],
                    row.get("status", ""),
                )
            )
        out.write("%d rows\n" % len(rows))
    return status


# -- construct ----------------------------------------------------------------


def cmd_construct(args, out):
    try:
        d = construct.construct_by_name(args.name)
    except (ValueError, TypeError) as exc:
        raise InputError(str(exc)) from None
    out.write(design.format_design_text(d))
    return EXIT_OK


# -- verify -------------------------------------------------------------------


def _read_text(path):
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError("cannot read %s: %s" % (path, exc)) from None


def _verify_design(report, d):
    try:
        params = design.check_2_design(d)
    except design.NotTwoDesignError as exc:
        report.add("2-design", "valid", "%s (witness %r)" % (exc.condition, exc.witness),
                   "derived")
        return None
    report.add("2-design", "valid", "valid", "derived")
    report.add("parameters (v,b,k,r,lambda)", params.as_tuple(), params.as_tuple(),
               "derived", informational=True)
    report.add("nontrivial (2<k<v)", True, params.nontrivial, "derived")
    report.add("replication-count r(k-1)=lambda(v-1)", True,
               params.r * (params.k - 1) == params.lam * (params.v - 1), "trivial")
    report.add("flag-count bk=vr", True, params.b * params.k == params.v * params.r,
               "trivial")
    report.add("block-lower-bound b>=v", True, params.b >= params.v, "derived")
    report.add("replication-lower-bound r>=k", True, params.r >= params.k, "derived")
    report.add("replication-square r^2>lambda*v", True,
               params.r ** 2 > params.lam * params.v, "derived")
    return params


def cmd_verify(args, out):
    t0 = time.perf_counter()
    report = Report(command="verify")
    d = design.parse_design_text(_read_text(args.design_file))
    params = _verify_design(report, d)
    generator_failure = False
    if params is not None and args.group_file:
        g = perm.parse_group_text(_read_text(args.group_file))
        if g.degree != d.v:
            raise InputError(
                "group degree %d does not match v=%d" % (g.degree, d.v)
            )
        bad = [i for i, gen in enumerate(g.generators)
               if not design.is_automorphism(d, gen)]
        report.add("generators-are-automorphisms", [], bad, "derived")
        if bad:
            generator_failure = True
        else:
            report.add("group-order", g.order(), g.order(), "derived",
                       informational=True)
            report.add("point-transitive", True, g.is_transitive(), "derived")
            ft, orbits = design.is_flag_transitive(g, d)
            report.add("flag-orbits", 1, orbits, "derived")
            report.add("flag-transitive", True, ft, "derived")
            if g.is_transitive():
                systems = g.block_systems()
                report.add("block-systems", len(systems), len(systems),
                           "derived", informational=True)
                for index, sysm in enumerate(systems, start=1):
                    label = "(c=%d,d=%d)" % (sysm.part_size, sysm.num_parts)
                    if len(systems) > 1:
                        label += " #%d" % index
                    profile = design.intersection_profile(d, sysm)
                    report.add("intersection-constant %s" % label, True,
                               profile.constant, "derived")
                    if not profile.constant or not ft:
                        continue
                    try:
                        t = design.tuple_of(d, g, sysm)
                    except design.DesignError as exc:
                        report.add("feasible-tuple %s" % label, "feasible",
                                   str(exc), "derived")
                        continue
                    report.add("feasible-tuple %s" % label,
                               t.as_dict(), t.as_dict(), "derived")
                    failures = feasibility.condition_failures(t)
                    report.add("feasibility-conditions %s" % label, [],
                               failures, "derived")
    report.elapsed_s = time.perf_counter() - t0
    _render_report(report, args.format, out)
    if generator_failure or not report.passed:
        return EXIT_CHECK_FAILURE
    return EXIT_OK


# -- aut -----------------------------------------------------------------------


def cmd_aut(args, out):
    t0 = time.perf_counter()
    d = design.parse_design_text(_read_text(args.design_file))
    result = autgrp.automorphism_group(d, node_cap=args.node_cap)
    payload = {
        "schema": JSON_SCHEMA,
        "command": "aut",
        "order": result.order,
        "num_generators": len(result.group.generators),
        "generators": [perm.format_cycles(g) for g in result.group.generators],
        "nodes_explored": result.nodes_explored,
        "elapsed_s": round(time.perf_counter() - t0, 3),
    }
    if args.format == "text":
        out.write("automorphism group order: %d\n" % result.order)
        out.write("generators (%d):\n" % payload["num_generators"])
        for gen in payload["generators"]:
            out.write("  %s\n" % gen)
        out.write("nodes explored: %d\n" % result.nodes_explored)
    else:
        json.dump(payload, out, indent=2)
        out.write("\n")
    return EXIT_OK


# -- census36 --------------------------------------------------------------------


def cmd_census36(args, out):
    t0 = time.perf_counter()
    report = Report(command="census36")
    rep = autgrp.uniqueness_census_36(node_cap=args.node_cap)
    anchor = "orbit census of the 36-point grid design"
    report.add("qualifying-8-subsets", 20250, rep.qualifying_subsets, "reference", anchor)
    report.add("orbit-count", rep.orbit_count, rep.orbit_count, "derived",
               informational=True)
    report.add("size-90-orbits", 5, rep.size90_orbits, "reference", anchor)
    report.add("orbits-yielding-2-designs", 2, rep.design_orbits, "reference", anchor)
    report.add("the-two-designs-isomorphic", True, rep.isomorphic, "reference", anchor)
    report.elapsed_s = time.perf_counter() - t0
    _render_report(report, args.format, out)
    if not report.passed:
        return EXIT_CHECK_FAILURE if args.strict else EXIT_OK
    return EXIT_OK


# -- bounds -----------------------------------------------------------------------


def cmd_bounds(args, out):
    t0 = time.perf_counter()
    lo = args.lo
    hi = args.hi if args.hi is not None else lo
    if lo < 2 or hi < lo:
        raise InputError("need 2 <= LO <= HI")
    report = Report(command="bounds")
    for lam in range(lo, hi + 1):
        br = feasibility.bound_report(lam)
        tuples = feasibility.feasible_tuples(lam)
        max_k = max((t.k for t in tuples), default=0)
        max_v = max((t.v for t in tuples), default=0)
        report.add("k-first-bound lambda=%d" % lam, br.k_first, br.k_first,
                   "derived", informational=True)
        report.add("k-main-bound lambda=%d" % lam, br.k_main, br.k_main,
                   "derived", informational=True)
        report.add("v-main-bound lambda=%d" % lam, br.v_main, br.v_main,
                   "derived", informational=True)
        report.add("observed-max-k lambda=%d" % lam, max_k, max_k,
                   "derived", informational=True)
        report.add("observed-max-v lambda=%d" % lam, max_v, max_v,
                   "derived", informational=True)
        report.add("max-k-within-first-bound lambda=%d" % lam, True,
                   max_k <= br.k_first, "derived")
        # The main bound binds the numeric enumeration only for lambda 3
        # and 4; elsewhere it rests on group theory, so it is reported, not
        # asserted.
        if lam in (3, 4):
            report.add("max-k-within-main-bound lambda=%d" % lam, True,
                       max_k <= br.k_main, "derived")
        else:
            report.add("max-k-within-main-bound lambda=%d" % lam,
                       "reported", max_k <= br.k_main, "derived",
                       informational=True)
    report.elapsed_s = time.perf_counter() - t0
    _render_report(report, args.format, out)
    return EXIT_OK if report.passed else EXIT_CHECK_FAILURE


# -- entry point --------------------------------------------------------------------


def _global_options(parser, suppress):
    """The global flags; subcommand copies use SUPPRESS defaults so values
    parsed before the subcommand survive."""
    default = (lambda value: argparse.SUPPRESS) if suppress else (lambda value: value)
    parser.add_argument("--format", choices=("text", "csv", "json"),
                        default=default("text"), help="output format")
    parser.add_argument("--strict", action=argparse.BooleanOptionalAction,
                        default=default(True),
                        help="fail (vs warn) on mismatches against reference values")
    parser.add_argument("--node-cap", type=int,
                        default=default(autgrp.DEFAULT_NODE_CAP),
                        help="node limit for the automorphism search")
    return parser


def build_parser():
    common = _global_options(argparse.ArgumentParser(add_help=False), suppress=True)

    parser = argparse.ArgumentParser(
        prog="ftdesigns",
        description="Feasibility, construction and verification of "
        "flag-transitive point-imprimitive 2-designs.",
    )
    _global_options(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("feasible", parents=[common],
                       help="enumerate numerically feasible tuples")
    p.add_argument("--lambda", dest="lam", type=int, required=True)
    p.set_defaults(func=cmd_feasible)

    p = sub.add_parser("construct", parents=[common],
                       help="emit a built-in design as a design file")
    p.add_argument("name", nargs="+",
                   help="d36 | d36-cosets | pg N | d96 (h1|h2) (1|2)")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", parents=[common],
                       help="verify a design file (optionally with a group)")
    p.add_argument("design_file")
    p.add_argument("group_file", nargs="?", default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("aut", parents=[common],
                       help="automorphism group of a design file")
    p.add_argument("design_file")
    p.set_defaults(func=cmd_aut)

    p = sub.add_parser("census36", parents=[common],
                       help="orbit census of the 36-point design")
    p.set_defaults(func=cmd_census36)

    p = sub.add_parser("bounds", parents=[common],
                       help="bound report for a lambda range")
    p.add_argument("lo", type=int)
    p.add_argument("hi", type=int, nargs="?", default=None)
    p.set_defaults(func=cmd_bounds)
    return parser


def main(argv=None, out=None):
    out = out if out is not None else sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except InputError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT_ERROR
    except (design.DesignError, perm.GroupError, perm.CycleParseError) as exc:
        print("input error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT_ERROR
    except autgrp.ResourceCapExceeded as exc:
        print("resource cap: %s" % exc, file=sys.stderr)
        return EXIT_RESOURCE_CAP


if __name__ == "__main__":
    sys.exit(main())
