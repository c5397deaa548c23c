"""Command-line surface: coefficient queries, saturation scans, decomposition
reports, crystal graph export and the cross-check harness.

All numeric output is exact; every subcommand exits 0 only when the
assertions it ran all passed, and mirrors its report as JSON on request.
"""

from __future__ import annotations

import argparse
import json
import sys

from .core import (
    all_flags,
    as_partition,
    parse_int_tuple,
    scale,
    validate_flag,
    weight,
)
from .crystal import (
    coefficient_by_tableaux,
    crystal_graph_dot,
    decompose,
    tableau_word_set,
)
from .hives import (
    ScaleExceededError,
    enumerate_skew_hive_points,
    enumerate_tri_hive_points,
    lift_tilde,
    psi,
    psi_inverse,
)
from .polynomials import (
    coefficient_table_by_demazure,
    flagged_skew_schur,
    key_polynomial,
)
from .tableaux import reading_word
from .burge import insertion_decomposition

DEFAULT_LIMIT = 10**6


def _partitions_up_to(n, max_weight):
    """All partitions of ambient n with weight at most max_weight."""
    out = []

    def rec(prefix, remaining, cap):
        if len(prefix) == n:
            out.append(tuple(prefix))
            return
        for p in range(min(cap, remaining), -1, -1):
            rec(prefix + [p], remaining - p, p)

    rec([], max_weight, max_weight)
    return out


def _subpartitions(mu):
    out = []

    def rec(prefix):
        i = len(prefix)
        if i == len(mu):
            out.append(tuple(prefix))
            return
        hi = mu[i]
        if i > 0:
            hi = min(hi, prefix[i - 1])
        for p in range(hi, -1, -1):
            rec(prefix + [p])

    rec([])
    return out


def _nu_candidates(lam, mu, gam, n):
    total = weight(lam) + weight(mu) - weight(gam)
    return [nu for nu in _partitions_up_to(n, total) if weight(nu) == total]


# ---------------------------------------------------------------------------
# operations behind the subcommands
# ---------------------------------------------------------------------------

def hive_count(lam, mu, gam, nu, phi, limit=None) -> int:
    return len(enumerate_skew_hive_points(lam, mu, gam, nu, phi, limit=limit))


def run_coefficient(lam, mu, gam, nu, phi, method="all", limit=None):
    """Coefficient (or full table when nu is None) per requested method."""
    n = len(mu)
    validate_flag(phi, n)
    methods = ("tableau", "hive", "demazure") if method == "all" else (method,)
    report = {"query": _query_dict(lam, mu, gam, nu, phi, method), "methods": {}}
    if nu is not None:
        for m in methods:
            report["methods"][m] = _single_coefficient(lam, mu, gam, nu, phi, m, limit)
        values = set(report["methods"].values())
        report["agree"] = len(values) == 1
        if report["agree"]:
            report["value"] = values.pop()
    else:
        tables = {m: _coefficient_table(lam, mu, gam, phi, m, limit) for m in methods}
        keys = sorted({k for t in tables.values() for k in t})
        report["methods"] = {
            m: {_fmt(k): t.get(k, 0) for k in keys} for m, t in tables.items()
        }
        report["agree"] = all(
            len({t.get(k, 0) for t in tables.values()}) == 1 for k in keys
        )
        if report["agree"]:
            report["table"] = {_fmt(k): tables[methods[0]].get(k, 0) for k in keys}
    return report


def _single_coefficient(lam, mu, gam, nu, phi, method, limit):
    if method == "tableau":
        return coefficient_by_tableaux(lam, mu, gam, nu, phi)
    if method == "hive":
        if weight(lam) + weight(mu) != weight(gam) + weight(nu):
            return 0
        return hive_count(lam, mu, gam, nu, phi, limit)
    if method == "demazure":
        return coefficient_table_by_demazure(lam, mu, gam, phi).get(tuple(nu), 0)
    raise ValueError(f"unknown method {method!r}")


def _coefficient_table(lam, mu, gam, phi, method, limit):
    n = len(mu)
    if method == "demazure":
        return coefficient_table_by_demazure(lam, mu, gam, phi)
    table = {}
    for nu in _nu_candidates(lam, mu, gam, n):
        c = _single_coefficient(lam, mu, gam, nu, phi, method, limit)
        if c:
            table[nu] = c
    return table


def saturation_scan(lam, mu, gam, nu, phi, k_max, limit=None):
    """Coefficients of the k-fold dilations, with both saturation directions
    asserted: positivity for some k forces k = 1, and positivity at k = 1
    dilates to every k."""
    if k_max < 1:
        raise ValueError("k_max must be at least 1")
    values = []
    for k in range(1, k_max + 1):
        values.append(
            _single_coefficient(
                scale(k, lam), scale(k, mu), scale(k, gam), scale(k, nu), phi,
                "hive", limit,
            )
        )
    positive = [v > 0 for v in values]
    saturation_ok = any(positive) == positive[0]
    dilation_ok = (not positive[0]) or all(positive)
    return {
        "query": _query_dict(lam, mu, gam, nu, phi, "hive"),
        "k_max": k_max,
        "values": values,
        "saturation_holds": saturation_ok,
        "dilation_holds": dilation_ok,
        "ok": saturation_ok and dilation_ok,
    }


def decomposition_report(mu, gam, phi):
    """Demazure components of the flagged crystal next to the insertion
    classes; the two partitions of the tableau set must agree."""
    n = len(mu)
    words = tableau_word_set(mu, gam, phi)
    components = decompose(words, n)
    classes = insertion_decomposition(mu, gam, phi)
    class_blocks = {
        frozenset(reading_word(t) for t in cls.members): cls for cls in classes
    }
    pairs = []
    agree = len(class_blocks) == len(components)
    for comp in components:
        cls = class_blocks.get(comp.members)
        if cls is None:
            agree = False
            pairs.append({"component": _component_dict(comp), "class": None})
            continue
        betas_match = tuple(sorted(cls.beta, reverse=True)) == comp.highest_weight
        agree = agree and betas_match
        pairs.append(
            {
                "component": _component_dict(comp),
                "class": {
                    "recording": [list(r) for r in cls.recording.rows],
                    "beta": list(cls.beta),
                },
                "beta_sorts_to_highest_weight": betas_match,
            }
        )
    char_sum = sum(
        (key_polynomial(c.key_weight) for c in components),
        start=flagged_skew_schur(mu, gam, phi) * 0,
    )
    char_ok = char_sum == flagged_skew_schur(mu, gam, phi)
    return {
        "mu": list(mu),
        "gam": list(gam),
        "phi": list(phi),
        "components": pairs,
        "character_sum_matches": char_ok,
        "ok": agree and char_ok,
    }


def hive_iso_report(lam, mu, gam, nu, phi, limit=None):
    """Counts on both sides of the doubling map plus the exact roundtrip."""
    skew_points = enumerate_skew_hive_points(lam, mu, gam, nu, phi, limit=limit)
    lam_t, mu_t, nu_t, phi_t = lift_tilde(lam, mu, gam, nu, phi)
    tri_points = enumerate_tri_hive_points(lam_t, mu_t, nu_t, phi_t, limit=limit)
    roundtrip = all(psi_inverse(psi(h)) == h for h in skew_points)
    images = {psi(h).rows for h in skew_points}
    image_ok = images <= {t.rows for t in tri_points}
    return {
        "query": _query_dict(lam, mu, gam, nu, phi, "hive"),
        "lifted": {
            "lam": list(lam_t),
            "mu": list(mu_t),
            "nu": list(nu_t),
            "phi": list(phi_t),
        },
        "skew_count": len(skew_points),
        "tri_count": len(tri_points),
        "roundtrip_identity": roundtrip,
        "ok": len(skew_points) == len(tri_points) and roundtrip and image_ok,
    }


def cross_check(n, max_mu, flags=None, limit=DEFAULT_LIMIT, verbose=False, echo=None):
    """Grid harness: three-way counts, the hive isomorphism and the
    decomposition character identity over every tuple at desk scale.

    Stops at the first failing tuple and returns its reproduction data."""
    flags = [validate_flag(f, n) for f in (flags or all_flags(n))]
    checked = {"tuples": 0, "decompositions": 0}
    for mu in _partitions_up_to(n, max_mu):
        for gam in _subpartitions(mu):
            for phi in flags:
                words = tableau_word_set(mu, gam, phi)
                components = decompose(words, n)
                char_sum = sum(
                    (key_polynomial(c.key_weight) for c in components),
                    start=flagged_skew_schur(mu, gam, phi) * 0,
                )
                if char_sum != flagged_skew_schur(mu, gam, phi):
                    return {
                        "ok": False,
                        "failure": "decomposition character sum",
                        "tuple": {"mu": mu, "gam": gam, "phi": phi},
                        "checked": checked,
                    }
                checked["decompositions"] += 1
                for lam in _subpartitions(mu):
                    demazure_table = coefficient_table_by_demazure(lam, mu, gam, phi)
                    for nu in _nu_candidates(lam, mu, gam, n):
                        got = {
                            "tableau": coefficient_by_tableaux(lam, mu, gam, nu, phi),
                            "hive": hive_count(lam, mu, gam, nu, phi, limit),
                            "demazure": demazure_table.get(nu, 0),
                        }
                        if len(set(got.values())) != 1:
                            return {
                                "ok": False,
                                "failure": "three-way coefficient mismatch",
                                "tuple": _query_dict(lam, mu, gam, nu, phi, "all"),
                                "counts": got,
                                "checked": checked,
                            }
                        if all(a <= b for a, b in zip(lam, nu)):
                            iso = hive_iso_report(lam, mu, gam, nu, phi, limit)
                            if not iso["ok"]:
                                return {
                                    "ok": False,
                                    "failure": "hive isomorphism mismatch",
                                    "tuple": _query_dict(lam, mu, gam, nu, phi, "all"),
                                    "report": iso,
                                    "checked": checked,
                                }
                        checked["tuples"] += 1
                        if echo is not None and checked["tuples"] % 200 == 0:
                            print(f"... {checked['tuples']} tuples", file=echo)
    return {"ok": True, "checked": checked}


# ---------------------------------------------------------------------------
# argument plumbing
# ---------------------------------------------------------------------------

def _fmt(t):
    return ",".join(map(str, t))


def _query_dict(lam, mu, gam, nu, phi, method):
    return {
        "lam": list(lam),
        "mu": list(mu),
        "gam": list(gam),
        "nu": None if nu is None else list(nu),
        "phi": list(phi),
        "method": method,
    }


def _component_dict(comp):
    return {
        "head": list(comp.head),
        "size": len(comp.members),
        "highest_weight": list(comp.highest_weight),
        "key_weight": list(comp.key_weight),
    }


def _add_boundary_args(p, with_nu=True, with_lam=True):
    if with_lam:
        p.add_argument("--lam", default="", help="partition, comma separated")
    p.add_argument("--mu", default="", help="partition, comma separated")
    p.add_argument("--gam", default="", help="partition, comma separated")
    if with_nu:
        p.add_argument("--nu", default=None, help="partition, comma separated")
    p.add_argument("--phi", default=None, help="flag, comma separated; default n,..,n")


def _parse_boundary(args, n, with_nu=True, with_lam=True):
    lam = as_partition(parse_int_tuple(args.lam, n)) if with_lam else None
    mu = as_partition(parse_int_tuple(args.mu, n))
    gam = as_partition(parse_int_tuple(args.gam, n))
    nu = None
    if with_nu and args.nu is not None:
        nu = as_partition(parse_int_tuple(args.nu, n))
    phi = validate_flag(
        parse_int_tuple(args.phi) if args.phi else (n,) * n, n
    )
    return lam, mu, gam, nu, phi


def build_parser() -> argparse.ArgumentParser:
    # global flags are accepted on both sides of the subcommand; the
    # SUPPRESS defaults keep the subparser from clobbering values given
    # before it
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--n", type=int, default=argparse.SUPPRESS, help="ambient length"
    )
    common.add_argument(
        "--json",
        action="store_true",
        default=argparse.SUPPRESS,
        help="emit JSON reports",
    )
    common.add_argument(
        "--limit",
        type=int,
        default=argparse.SUPPRESS,
        help="enumeration ceiling per polytope (visited nodes)",
    )
    parser = argparse.ArgumentParser(
        prog="flagged-lr",
        description="Flagged skew Littlewood-Richardson coefficients, three ways.",
    )
    parser.add_argument("--n", type=int, default=None, help="ambient length")
    parser.add_argument("--json", action="store_true", help="emit JSON reports")
    parser.add_argument(
        "--limit",
        type=int,
        default=DEFAULT_LIMIT,
        help="enumeration ceiling per polytope (visited nodes)",
    )
    sub_parsers = parser.add_subparsers(dest="command", required=True)

    def add_parser(name, **kwargs):
        return sub_parsers.add_parser(name, parents=[common], **kwargs)

    p = add_parser("coeff", help="one coefficient by any route")
    _add_boundary_args(p)
    p.add_argument("--method", choices=["tableau", "hive", "demazure", "all"],
                   default="all")

    p = add_parser("table", help="full coefficient table over nu")
    _add_boundary_args(p, with_nu=False)
    p.add_argument("--method", choices=["tableau", "hive", "demazure", "all"],
                   default="all")

    p = add_parser("saturate", help="dilation scan k = 1..k_max")
    _add_boundary_args(p)
    p.add_argument("--k-max", type=int, default=3)

    p = add_parser("decompose", help="Demazure components and classes")
    _add_boundary_args(p, with_nu=False, with_lam=False)

    p = add_parser("crystal-graph", help="DOT export of the crystal")
    _add_boundary_args(p, with_nu=False, with_lam=False)
    p.add_argument("--out", default="-", help="output path, - for stdout")

    p = add_parser("hive-count", help="lattice points of the skew hive")
    _add_boundary_args(p)

    p = add_parser("hive-iso", help="doubling isomorphism check")
    _add_boundary_args(p)

    p = add_parser("verify", help="cross-check harness over a grid")
    p.add_argument("--max-mu", type=int, default=4)
    p.add_argument(
        "--flags",
        default="all",
        help="'all', or semicolon-separated flags like 1,2;2,2",
    )
    return parser


def _emit(report, as_json: bool) -> None:
    if as_json:
        print(json.dumps(report, indent=2, default=str))
        return
    _pretty(report)


def _scalar_list(v):
    return isinstance(v, (list, tuple)) and all(
        isinstance(x, (int, str, bool)) for x in v
    )


def _pretty(report, indent=0):
    pad = "  " * indent
    if isinstance(report, dict):
        for k, v in report.items():
            if _scalar_list(v):
                print(f"{pad}{k}: [{', '.join(map(str, v))}]")
            elif isinstance(v, (dict, list)) and v:
                print(f"{pad}{k}:")
                _pretty(v, indent + 1)
            else:
                print(f"{pad}{k}: {v}")
    elif isinstance(report, list):
        for v in report:
            if isinstance(v, (dict, list)):
                _pretty(v, indent)
            else:
                print(f"{pad}{v}")
    else:
        print(f"{pad}{report}")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.n is None:
        parser.error("--n is required")
    n = args.n
    try:
        if args.command == "coeff":
            lam, mu, gam, nu, phi = _parse_boundary(args, n)
            report = run_coefficient(lam, mu, gam, nu, phi, args.method, args.limit)
            ok = report["agree"]
        elif args.command == "table":
            lam, mu, gam, _, phi = _parse_boundary(args, n, with_nu=False)
            report = run_coefficient(lam, mu, gam, None, phi, args.method, args.limit)
            ok = report["agree"]
        elif args.command == "saturate":
            lam, mu, gam, nu, phi = _parse_boundary(args, n)
            if nu is None:
                raise ValueError("saturate requires --nu")
            report = saturation_scan(lam, mu, gam, nu, phi, args.k_max, args.limit)
            ok = report["ok"]
        elif args.command == "decompose":
            _, mu, gam, _, phi = _parse_boundary(args, n, with_nu=False, with_lam=False)
            report = decomposition_report(mu, gam, phi)
            ok = report["ok"]
        elif args.command == "crystal-graph":
            _, mu, gam, _, phi = _parse_boundary(args, n, with_nu=False, with_lam=False)
            dot = crystal_graph_dot(tableau_word_set(mu, gam, phi), n)
            if args.out == "-":
                print(dot)
            else:
                with open(args.out, "w") as fh:
                    fh.write(dot + "\n")
            return 0
        elif args.command == "hive-count":
            lam, mu, gam, nu, phi = _parse_boundary(args, n)
            if nu is None:
                raise ValueError("hive-count requires --nu")
            report = {
                "query": _query_dict(lam, mu, gam, nu, phi, "hive"),
                "count": hive_count(lam, mu, gam, nu, phi, args.limit),
            }
            ok = True
        elif args.command == "hive-iso":
            lam, mu, gam, nu, phi = _parse_boundary(args, n)
            if nu is None:
                raise ValueError("hive-iso requires --nu")
            report = hive_iso_report(lam, mu, gam, nu, phi, args.limit)
            ok = report["ok"]
        else:
            flags = None
            if args.flags != "all":
                flags = [parse_int_tuple(part) for part in args.flags.split(";")]
            report = cross_check(
                n, args.max_mu, flags, args.limit, echo=sys.stderr
            )
            ok = report["ok"]
    except (ValueError, ScaleExceededError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(report, args.json)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
