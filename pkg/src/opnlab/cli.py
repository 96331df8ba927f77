"""Command-line front door.

Subcommands: audit, constants, bracket, theorem5, theorem6, scan-t4,
scan-t6, scan-ratio, sieve, chain.  Results go to stdout, diagnostics to
stderr.  Exit codes: 0 completed, 1 completed with reported violations
under --strict, 2 usage or invalid input, 3 resource budget exhausted.

Big integers serialize as decimal strings (JSON numbers lose precision),
rationals as "a/b" strings; any *_preview field is a decimal approximation
and is never authoritative.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from fractions import Fraction
from pathlib import Path

from .arith import DEFAULT_EFFORT, FactorBudgetError
from .eulerian import (
    CandidateError,
    Check,
    classify_case,
    corollary_bounds,
    lemma3_bracket,
    lemma_sums,
    remark_chains,
    theorem1_vector,
    theorem5_analyze,
    theorem6_admissible,
    validate,
)
from .radicals import BoundExpr, PrecisionBudgetError, paper_constants
from .search import (
    MemoryBudgetError,
    ScanConfig,
    ScanInvariantError,
    iter_theorem4_scan,
    iter_theorem6_scan,
    abundancy_ratio_solutions,
    load_checkpoint,
    save_checkpoint,
    sieve_scan,
    sigma_chain,
)

__all__ = ["main", "run"]

EFFORT_ENV = "OPNLAB_EFFORT"
FORMATS = ("table", "json", "jsonl", "csv")

_INT_RE = re.compile(r"[0-9][0-9_]*")


def _int_arg(s: str) -> int:
    if not _INT_RE.fullmatch(s):
        raise argparse.ArgumentTypeError(
            f"expected a plain decimal integer, got {s!r} (floats are not accepted)"
        )
    return int(s)


def _fraction_arg(s: str) -> Fraction:
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as e:
        raise argparse.ArgumentTypeError(f"expected a rational like 13/9 or 1.25: {e}")


def _shard_arg(s: str) -> tuple[int, int]:
    m = re.fullmatch(r"([0-9]+)/([0-9]+)", s)
    if not m:
        raise argparse.ArgumentTypeError(f"expected INDEX/COUNT, got {s!r}")
    idx, count = int(m.group(1)), int(m.group(2))
    if count < 1 or idx >= count:
        raise argparse.ArgumentTypeError(f"shard index must satisfy 0 <= index < count")
    return idx, count


def _exponents_arg(s: str) -> tuple[int, ...]:
    try:
        exps = tuple(int(x) for x in s.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {s!r}")
    if not exps or any(e < 2 or e % 2 for e in exps):
        raise argparse.ArgumentTypeError("exponents must be even integers >= 2")
    return exps


def _effort() -> int:
    raw = os.environ.get(EFFORT_ENV)
    if raw is None:
        return DEFAULT_EFFORT
    if not _INT_RE.fullmatch(raw):
        raise ValueError(f"{EFFORT_ENV} must be a decimal integer, got {raw!r}")
    return int(raw)


# ---------------------------------------------------------------- rendering


def _frac_str(x: Fraction) -> str:
    return str(x)


def _decimal_preview(x: Fraction, digits: int = 12) -> str:
    """Fixed-point decimal of a rational by integer division (half-even),
    for human orientation only."""
    sign = "-" if x < 0 else ""
    num, den = abs(x.numerator), x.denominator
    ipart, rem = divmod(num, den)
    frac, r2 = divmod(rem * 10**digits, den)
    if 2 * r2 > den or (2 * r2 == den and frac % 2 == 1):
        frac += 1
        if frac == 10**digits:
            ipart += 1
            frac = 0
    return f"{sign}{ipart}.{str(frac).zfill(digits)}"


def _rational_payload(x: Fraction) -> dict:
    return {"frac": _frac_str(x), "preview_nonauthoritative": _decimal_preview(x)}


def _expr_payload(e: BoundExpr) -> dict:
    return {
        "terms": [
            {"coeff": _frac_str(t.coefficient), "base": _frac_str(t.base), "root": t.root_index}
            for t in e.terms
        ],
        "display": str(e),
    }


def _side_payload(x) -> dict:
    return _expr_payload(x) if isinstance(x, BoundExpr) else _rational_payload(x)


def _side_str(x) -> str:
    return str(x) if isinstance(x, BoundExpr) else _frac_str(x)


def _check_payload(c: Check) -> dict:
    return {
        "id": c.check_id,
        "lhs": _side_payload(c.lhs),
        "rhs": _side_payload(c.rhs),
        "verdict": c.verdict.value,
        "claimed": c.claimed,
        "holds": c.holds,
    }


def _check_row(c: Check, section: str) -> list[str]:
    return [section, c.check_id, _side_str(c.lhs), _side_str(c.rhs),
            c.verdict.value, c.claimed, str(c.holds).lower()]


def _emit_json(obj) -> None:
    print(json.dumps(obj, indent=2))


def _emit_csv(header: list[str], rows) -> None:
    import csv

    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow(row)


def _check_table_lines(checks, section: str) -> list[str]:
    lines = []
    for c in checks:
        mark = "ok " if c.holds else "VIOLATED"
        lines.append(
            f"  [{mark:8s}] {c.check_id:38s} {_side_str(c.lhs)} {c.verdict.symbol} "
            f"{_side_str(c.rhs)}   (claimed {c.claimed})"
        )
    return lines


# ------------------------------------------------------------------- audit


_AUDIT_SECTIONS = ("theorem1", "chains", "case", "corollaries", "lemmas")


def _cmd_audit(args) -> bool:
    c = validate(args.q, args.k, args.n, factor_budget=_effort())
    only = args.only or _AUDIT_SECTIONS
    sections: dict[str, tuple[Check, ...]] = {}
    payload: dict = {
        "candidate": {"q": str(c.q), "k": str(c.k), "n": str(c.n)},
        "flags": list(c.warnings),
    }
    if "theorem1" in only:
        r = theorem1_vector(c)
        sections["theorem1"] = r.checks + (r.hypothesis,)
        payload["theorem1"] = {
            "checks": [_check_payload(x) for x in r.checks],
            "hypothesis": _check_payload(r.hypothesis),
            "condition_verdicts": list(r.condition_verdicts),
            "conditions_agree": r.conditions_agree,
        }
    if "chains" in only:
        r = remark_chains(c)
        sections["chains"] = r.checks + r.identities
        payload["chains"] = {
            "chain_id": r.chain_id,
            "checks": [_check_payload(x) for x in r.checks],
            "identities": [_check_payload(x) for x in r.identities],
        }
    if "case" in only:
        r = classify_case(c)
        sections["case"] = r.chain_checks
        payload["case"] = {
            "sorli_k_equals_1": r.sorli_k_equals_1,
            "size_order": r.size_order,
            "theorem2_case": r.theorem2_case,
            "chain_checks": [_check_payload(x) for x in r.chain_checks],
            "magnitude_flags": list(r.magnitude_flags),
        }
    if "corollaries" in only:
        r = corollary_bounds(c)
        all_checks = r.checks + (r.remark3,) + r.remark3_bounds
        sections["corollaries"] = all_checks
        payload["corollaries"] = [_check_payload(x) for x in all_checks]
        payload["conjecture"] = {
            "q_divides_sigma_n": r.conjecture.q_divides_sigma_n,
            "sigma_n_over_q": r.conjecture.sigma_n_over_q,
            "sigma_n_ratio_in_2_3": r.conjecture.sigma_n_ratio_in_2_3,
            "n_divides_sigma_qk": r.conjecture.n_divides_sigma_qk,
            "sigma_qk_over_n": r.conjecture.sigma_qk_over_n,
            "sigma_qk_ratio_is_2": r.conjecture.sigma_qk_ratio_is_2,
            "notes": list(r.notes),
        }
    if "lemmas" in only:
        r = lemma_sums(c)
        sections["lemmas"] = r.checks
        payload["lemmas"] = [_check_payload(x) for x in r.checks]
        payload["sums"] = {
            "s1_cross_sum": _rational_payload(r.cross_sum),
            "s2_component_sum": _rational_payload(r.component_sum),
            "geometric_mean": _expr_payload(r.geometric_mean),
            "notes": list(r.notes),
        }
    violations = any(not ch.holds for chs in sections.values() for ch in chs)
    if args.format == "json":
        _emit_json(payload)
    elif args.format == "jsonl":
        for name, chs in sections.items():
            for ch in chs:
                line = {"candidate": payload["candidate"], "section": name}
                line.update(_check_payload(ch))
                print(json.dumps(line))
    elif args.format == "csv":
        header = ["q", "k", "n", "section", "check_id", "lhs", "rhs", "verdict", "claimed", "holds"]
        rows = []
        for name, chs in sections.items():
            for ch in chs:
                rows.append([str(c.q), str(c.k), str(c.n)] + _check_row(ch, name))
        _emit_csv(header, rows)
    else:
        print(f"candidate q={c.q} k={c.k} n={c.n}  (q^k = {c.qk}, "
              f"sigma(q^k) = {c.sigma_qk}, sigma(n) = {c.sigma_n})")
        if c.warnings:
            print(f"flags: {', '.join(c.warnings)}")
        for name, chs in sections.items():
            print(f"{name}:")
            print("\n".join(_check_table_lines(chs, name)))
    return violations


# --------------------------------------------------------------- constants


def _cmd_constants(args) -> bool:
    records = paper_constants()
    violations = any(not r.verified for r in records)
    if args.format == "json":
        _emit_json([
            {
                "name": r.name,
                "terms": _expr_payload(r.expr)["terms"],
                "printed": r.printed,
                "enclosure": [_frac_str(r.enclosure.lo), _frac_str(r.enclosure.hi)],
                "verified": r.verified,
            }
            for r in records
        ])
    elif args.format == "jsonl":
        for r in records:
            print(json.dumps({
                "name": r.name,
                "terms": _expr_payload(r.expr)["terms"],
                "printed": r.printed,
                "enclosure": [_frac_str(r.enclosure.lo), _frac_str(r.enclosure.hi)],
                "verified": r.verified,
            }))
    elif args.format == "csv":
        _emit_csv(
            ["name", "expr", "printed", "lo", "hi", "verified"],
            [[r.name, str(r.expr), r.printed, _frac_str(r.enclosure.lo),
              _frac_str(r.enclosure.hi), str(r.verified).lower()] for r in records],
        )
    else:
        for r in records:
            mark = "ok" if r.verified else "FAIL"
            print(f"[{mark:4s}] {r.name:24s} {str(r.expr):48s} printed {r.printed}")
    return violations


# ----------------------------------------------------------------- bracket


def _cmd_bracket(args) -> bool:
    b = lemma3_bracket(args.Q)
    payload = {
        "q_cap": str(b.q_cap),
        "iq_lower": _rational_payload(b.iq_lower),
        "iqk_upper": _rational_payload(b.iqk_upper),
        "in_lower": _expr_payload(b.in_lower),
        "in_upper": _rational_payload(b.in_upper),
        "in_upper_infimum": _rational_payload(b.in_upper_infimum),
        "in_upper_supremum": _rational_payload(b.in_upper_supremum),
        "endpoint_checks": [_check_payload(c) for c in b.endpoint_checks],
    }
    if args.format in ("json", "jsonl"):
        _emit_json(payload)
    elif args.format == "csv":
        _emit_csv(
            ["anchor", "value"],
            [["iq_lower", _frac_str(b.iq_lower)], ["iqk_upper", _frac_str(b.iqk_upper)],
             ["in_lower", str(b.in_lower)], ["in_upper", _frac_str(b.in_upper)],
             ["in_upper_supremum", _frac_str(b.in_upper_supremum)]],
        )
    else:
        print(f"Euler prime cap Q = {b.q_cap}:")
        print(f"  {b.iq_lower} <= I(q) <= I(q^k) < q/(q-1) <= {b.iqk_upper} "
              f"< {b.in_lower} < I(n) < 2q/(q+1) <= {b.in_upper}")
        print(f"  upper endpoint: >= {b.in_upper_infimum} (equality iff Q = 5), "
              f"< {b.in_upper_supremum} always")
    return any(not c.holds for c in b.endpoint_checks)


# ---------------------------------------------------------------- theorem5


def _cmd_theorem5(args) -> bool:
    t = theorem5_analyze(args.Q)
    rows = [
        {
            "q": str(r.q),
            "case_a": _frac_str(r.case_a),
            "case_b": _frac_str(r.case_b),
            "case_c": _frac_str(r.case_c),
            "case_d": _frac_str(r.case_d),
            "case_b_consistency": _check_payload(r.case_b_consistency),
        }
        for r in t.rows
    ]
    payload = {
        "q_cap": None if t.q_cap is None else str(t.q_cap),
        "case_a_low_branch_primes": [str(q) for q in t.case_a_low_branch_primes],
        "case_a_q_limit": str(t.case_a_q_limit),
        "case_a_in_square_upper": _frac_str(t.case_a_in_square_upper),
        "case_a_iqk_lower": _frac_str(t.case_a_iqk_lower),
        "rows": rows,
    }
    if t.q_cap is not None:
        payload["case_a_high_floor"] = _frac_str(t.case_a_high_floor)
        payload["case_b_upper"] = _frac_str(t.case_b_upper)
        payload["case_c_high_floor_capped"] = _frac_str(t.case_c_high_floor_capped)
    if args.format == "json":
        _emit_json(payload)
    elif args.format == "jsonl":
        for row in rows:
            print(json.dumps(row))
    elif args.format == "csv":
        _emit_csv(
            ["q", "case_a", "case_b", "case_c", "case_d"],
            [[row["q"], row["case_a"], row["case_b"], row["case_c"], row["case_d"]]
             for row in rows],
        )
    else:
        primes = ", ".join(str(q) for q in t.case_a_low_branch_primes)
        print(f"case A low branch (I(n) < (q+2)/q <= 7/5) forces q in {{{primes}}}")
        print(f"{'q':>6s} {'(q+2)/q':>10s} {'(2q-1)/q':>10s} {'(3q+1)/2q':>10s} {'(3q-1)/2q':>10s}")
        for r in t.rows:
            print(f"{r.q:>6d} {str(r.case_a):>10s} {str(r.case_b):>10s} "
                  f"{str(r.case_c):>10s} {str(r.case_d):>10s}")
    return any(not r.case_b_consistency.holds for r in t.rows)


# ---------------------------------------------------------------- theorem6


def _cmd_theorem6(args) -> bool:
    a = theorem6_admissible(args.q)
    message = (
        f"q = {a.q} excluded under Theorem 6 hypothesis"
        if a.contradictory
        else f"q = {a.q} admits {len(a.shifts)} shift(s)"
    )
    payload = {
        "q": str(a.q),
        "shifts": [str(s) for s in a.shifts],
        "bracket": [_frac_str(a.bracket_lo), _frac_str(a.bracket_hi)],
        "contradictory": a.contradictory,
        "message": message,
    }
    if args.format in ("json", "jsonl"):
        _emit_json(payload)
    elif args.format == "csv":
        _emit_csv(["q", "shifts", "bracket_lo", "bracket_hi", "contradictory"],
                  [[str(a.q), " ".join(str(s) for s in a.shifts),
                    _frac_str(a.bracket_lo), _frac_str(a.bracket_hi),
                    str(a.contradictory).lower()]])
    else:
        print(message)
        if a.shifts:
            print(f"  s in {list(a.shifts)}; I(n) bracket "
                  f"[{a.bracket_lo}, {a.bracket_hi}]")
        else:
            print(f"  no admissible s; bracket ({a.bracket_lo}, {a.bracket_hi}) inverted"
                  if a.contradictory else "  no admissible s")
    return False


# ------------------------------------------------------------------- scans


def _solution_payload(sol) -> dict:
    return {"n": str(sol.n), "q": str(sol.q), "param": str(sol.parameter),
            "lhs": str(sol.lhs), "rhs": str(sol.rhs)}


def _run_equation_scan(args, iter_fn) -> bool:
    cfg = ScanConfig(
        n_bound=args.n_bound,
        q_bound=args.q_bound,
        parity=args.parity,
        coprime_only=not args.no_coprime,
        exclude_n_equals_1=not args.include_n_1,
        shard=args.shard,
    )
    start_after = 0
    if args.checkpoint and args.resume and Path(args.checkpoint).exists():
        shard, n_done = load_checkpoint(args.checkpoint)
        if shard == cfg.shard:
            start_after = n_done
        else:
            print(f"checkpoint shard {shard} does not match {cfg.shard}; ignoring",
                  file=sys.stderr)
    stream = args.format in ("jsonl", "csv")
    collected = []
    if args.format == "csv":
        print("n,q,param,lhs,rhs")
    for kind, ev in iter_fn(cfg, start_after):
        if kind == "solution":
            if args.format == "jsonl":
                print(json.dumps(_solution_payload(ev)))
            elif args.format == "csv":
                print(f"{ev.n},{ev.q},{ev.parameter},{ev.lhs},{ev.rhs}")
            else:
                collected.append(ev)
        elif kind == "progress" and args.checkpoint:
            save_checkpoint(args.checkpoint, cfg.shard, ev)
    if not stream:
        collected.sort(key=lambda s: s.sort_key())
        if args.format == "json":
            _emit_json([_solution_payload(s) for s in collected])
        else:
            if not collected:
                print("no solutions")
            for s in collected:
                print(f"n={s.n} q={s.q} param={s.parameter}  ({s.lhs} = {s.rhs})")
    return False


def _cmd_scan_ratio(args) -> bool:
    filters = ScanConfig(
        n_bound=args.bound,
        parity=args.parity,
        coprime_only=False,
        exclude_n_equals_1=not args.include_n_1,
        shard=args.shard,
    )
    hits = abundancy_ratio_solutions(args.target, args.bound, filters)
    if args.format == "json":
        _emit_json({"target": _frac_str(args.target), "solutions": [str(n) for n in hits]})
    elif args.format == "jsonl":
        for n in hits:
            print(json.dumps({"target": _frac_str(args.target), "n": str(n)}))
    elif args.format == "csv":
        _emit_csv(["target", "n"], [[_frac_str(args.target), str(n)] for n in hits])
    else:
        print(f"I(n) = {args.target}: {hits if hits else 'no solutions'}")
    return False


# ------------------------------------------------------------------- sieve


def _cmd_sieve(args) -> bool:
    r = sieve_scan(
        args.bound,
        allow_large=args.allow_large,
        samples=args.samples,
        seed=args.seed,
        factor_budget=_effort(),
    )
    payload = {
        "bound": str(r.bound),
        "perfect": [str(n) for n in r.perfect],
        "odd_perfect_count": r.odd_perfect_count,
        "census": {
            "deficient": str(r.census.deficient),
            "perfect": str(r.census.perfect),
            "abundant": str(r.census.abundant),
        },
        "samples_checked": r.samples_checked,
    }
    if args.format in ("json", "jsonl"):
        _emit_json(payload)
    elif args.format == "csv":
        _emit_csv(["bound", "perfect", "odd_perfect_count", "deficient", "abundant",
                   "samples_checked"],
                  [[str(r.bound), " ".join(str(n) for n in r.perfect),
                    str(r.odd_perfect_count), str(r.census.deficient),
                    str(r.census.abundant), str(r.samples_checked)]])
    else:
        print(f"n <= {r.bound}: perfect numbers {list(r.perfect)}")
        print(f"odd perfect: {r.odd_perfect_count}")
        print(f"census: {r.census.deficient} deficient / {r.census.perfect} perfect / "
              f"{r.census.abundant} abundant; {r.samples_checked} sigma samples "
              "cross-checked against factorization")
    return False


# ------------------------------------------------------------------- chain


def _chain_payload(node) -> dict:
    return {
        "prime": str(node.prime),
        "exponent": node.exponent,
        "sigma": str(node.sigma_value),
        "status": node.status,
        "abundancy_product": _frac_str(node.abundancy_product),
        "children": [_chain_payload(ch) for ch in node.children],
    }


def _cmd_chain(args) -> bool:
    root = sigma_chain(
        args.q, args.k, args.depth, args.bound,
        exponent_set=args.exponents,
        factor_budget=_effort(),
    )
    if args.format == "json":
        _emit_json(_chain_payload(root))
    elif args.format == "jsonl":
        stack = [(root, f"{root.prime}^{root.exponent}")]
        while stack:
            node, path = stack.pop()
            line = {
                "path": path,
                "prime": str(node.prime),
                "exponent": node.exponent,
                "sigma": str(node.sigma_value),
                "status": node.status,
                "abundancy_product": _frac_str(node.abundancy_product),
            }
            print(json.dumps(line))
            stack.extend(
                (ch, f"{path}>{ch.prime}^{ch.exponent}") for ch in reversed(node.children)
            )
    elif args.format == "csv":
        rows = []
        stack = [(root, f"{root.prime}^{root.exponent}")]
        while stack:
            node, path = stack.pop()
            rows.append([path, str(node.prime), str(node.exponent), str(node.sigma_value),
                         node.status, _frac_str(node.abundancy_product)])
            stack.extend(
                (ch, f"{path}>{ch.prime}^{ch.exponent}") for ch in reversed(node.children)
            )
        _emit_csv(["path", "prime", "exponent", "sigma", "status", "abundancy_product"], rows)
    else:
        for depth, node in root.walk():
            print(f"{'  ' * depth}{node.prime}^{node.exponent} sigma={node.sigma_value} "
                  f"[{node.status}] I-product={node.abundancy_product}")
    return any(node.status == "contradiction" for _, node in root.walk())


# ------------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="opnlab",
        description="Exact-arithmetic audits of the Eulerian-form constraint "
        "system for odd perfect numbers.",
    )
    sub = p.add_subparsers(dest="command", metavar="command")

    def add_common(sp):
        sp.add_argument("--format", choices=FORMATS, default="table")
        sp.add_argument("--strict", action="store_true",
                        help="exit 1 when any reported check is violated")

    sp = sub.add_parser("audit", help="run every per-candidate predicate on (q, k, n)")
    sp.add_argument("q", type=_int_arg)
    sp.add_argument("k", type=_int_arg)
    sp.add_argument("n", type=_int_arg)
    sp.add_argument("--only", choices=_AUDIT_SECTIONS, action="append",
                    help="restrict to one section (repeatable)")
    add_common(sp)
    sp.set_defaults(handler=_cmd_audit)

    sp = sub.add_parser("constants", help="verify the printed radical constants")
    add_common(sp)
    sp.set_defaults(handler=_cmd_constants)

    sp = sub.add_parser("bracket", help="abundancy bracket anchors under an Euler prime cap")
    sp.add_argument("--Q", type=_int_arg, required=True)
    add_common(sp)
    sp.set_defaults(handler=_cmd_bracket)

    sp = sub.add_parser("theorem5", help="abundancy exclusion anchors per Euler prime")
    sp.add_argument("--Q", type=_int_arg, default=None)
    add_common(sp)
    sp.set_defaults(handler=_cmd_theorem5)

    sp = sub.add_parser("theorem6", help="admissible shifts for I(n) = (q+s)/(q-1)")
    sp.add_argument("--q", type=_int_arg, required=True)
    add_common(sp)
    sp.set_defaults(handler=_cmd_theorem6)

    def add_scan_flags(sp):
        sp.add_argument("--n-bound", type=_int_arg, required=True)
        sp.add_argument("--q-bound", type=_int_arg, required=True)
        sp.add_argument("--parity", choices=("odd", "all"), default="odd")
        sp.add_argument("--no-coprime", action="store_true",
                        help="drop the gcd(q, n) = 1 filter")
        sp.add_argument("--include-n-1", action="store_true")
        sp.add_argument("--shard", type=_shard_arg, default=None, metavar="INDEX/COUNT")
        sp.add_argument("--checkpoint", metavar="PATH",
                        help="write JSON {shard, n_done} progress to PATH")
        sp.add_argument("--resume", action="store_true",
                        help="skip n already covered by the checkpoint file")
        add_common(sp)

    sp = sub.add_parser("scan-t4", help="scan q*sigma(n) = (q+r)*n, 0 <= r <= q")
    add_scan_flags(sp)
    sp.set_defaults(handler=lambda a: _run_equation_scan(a, iter_theorem4_scan))

    sp = sub.add_parser("scan-t6", help="scan (q-1)*sigma(n) = n*(q+s), -1 <= s <= q-2")
    add_scan_flags(sp)
    sp.set_defaults(handler=lambda a: _run_equation_scan(a, iter_theorem6_scan))

    sp = sub.add_parser("scan-ratio", help="find all n with I(n) equal to a target rational")
    sp.add_argument("--target", type=_fraction_arg, required=True)
    sp.add_argument("--bound", type=_int_arg, required=True)
    sp.add_argument("--parity", choices=("odd", "all"), default="all")
    sp.add_argument("--include-n-1", action="store_true")
    sp.add_argument("--shard", type=_shard_arg, default=None, metavar="INDEX/COUNT")
    add_common(sp)
    sp.set_defaults(handler=_cmd_scan_ratio)

    sp = sub.add_parser("sieve", help="divisor-sum sieve: perfect numbers and census")
    sp.add_argument("--bound", type=_int_arg, required=True)
    sp.add_argument("--allow-large", action="store_true",
                    help="permit bounds beyond 10^9")
    sp.add_argument("--samples", type=_int_arg, default=10_000)
    sp.add_argument("--seed", type=_int_arg, default=0)
    add_common(sp)
    sp.set_defaults(handler=_cmd_sieve)

    sp = sub.add_parser("chain", help="sigma-chain constraint tree from the Euler factor")
    sp.add_argument("--q", type=_int_arg, required=True)
    sp.add_argument("--k", type=_int_arg, required=True)
    sp.add_argument("--depth", type=_int_arg, required=True)
    sp.add_argument("--bound", type=_int_arg, required=True,
                    help="magnitude bound closing nodes whose prime power exceeds it")
    sp.add_argument("--exponents", type=_exponents_arg, default=(2, 4),
                    help="trial exponents for non-root primes (default 2,4)")
    add_common(sp)
    sp.set_defaults(handler=_cmd_chain)

    return p


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    if not getattr(args, "handler", None):
        parser.print_usage(sys.stderr)
        return 2
    try:
        violations = args.handler(args)
    except (FactorBudgetError, MemoryBudgetError, PrecisionBudgetError) as e:
        print(f"error: resource budget: {e}", file=sys.stderr)
        return 3
    except ScanInvariantError as e:
        print(f"error: invariant violation: {e}", file=sys.stderr)
        return 1
    except CandidateError as e:
        print(f"error: invalid candidate: {e}", file=sys.stderr)
        return 2
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    if violations and args.strict:
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
