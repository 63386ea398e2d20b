"""Command-line front end: ``harmonic-renyi <command> [options]``.

Exit codes: 0 success, 1 verification failure, 2 usage or precondition error.
All arithmetic is delegated to the library; this module only parses,
dispatches and formats.
"""

from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

import mpmath as mp

from .exactnum import ExactLogSum, format_digits, logsum_eval
from .lauricella import DEFAULT_BUDGET
from .renyi import (
    HarmonicState,
    NotApplicable,
    check_uncertainty,
    energy,
    entropic_moment_momentum,
    entropic_moment_position,
    entropy_sum,
    entropy_sum_real,
    ground_state_limit,
    renyi,
    renyi_ground_state,
    renyi_real_q,
)
from .verify import CONJECTURE_TOL, verify_conjecture, verify_exact

SCHEMA = "harmonic-renyi/1"
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
DEFAULT_TABLE_BUDGET = 100_000
CONJECTURE_BANNER = "# conjecture mode: non-integer q for an excited state uses the conjectured real-q extension"
REAL_Q_BANNER = "# real-q mode: ground-state closed form (exact for every q > 0)"


class UsageError(Exception):
    pass


def parse_int_list(text: str) -> list[int]:
    """``"2"``, ``"1,2,3"``, ``"0..3"`` or a mix like ``"0..2,5"``."""
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if ".." in part:
            lo, hi = part.split("..", 1)
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(part))
    if any(x < 0 for x in out):
        raise UsageError("quantum numbers must be nonnegative")
    return out


def parse_order(text: str):
    text = text.strip()
    if text.lower() in ("inf", "infinity"):
        return "inf"
    try:
        q = Fraction(text)
    except ValueError:
        raise UsageError(f"cannot parse order {text!r}") from None
    if q < 0:
        raise UsageError("orders must be nonnegative")
    if q == 1:
        raise UsageError("q = 1 (Shannon limit) is not covered")
    return q


def parse_orders(text: str) -> list:
    out = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if ".." in part:
            out.extend(Fraction(x) for x in parse_int_list(part))
        else:
            out.append(parse_order(part))
    return out


def parse_alpha(text: str) -> Fraction:
    try:
        a = Fraction(text.strip())
    except ValueError:
        raise UsageError(f"cannot parse alpha {text!r}") from None
    if a <= 0:
        raise UsageError("alpha must be positive")
    return a


def _is_exact(q) -> bool:
    return isinstance(q, Fraction) and q.denominator == 1 and q >= 2


def _q_str(q) -> str:
    return str(q)


def _spaces(space: str) -> list[str]:
    return {"pos": ["position"], "mom": ["momentum"], "both": ["position", "momentum"]}[space]


def _ground_form(D: int, q, space: str) -> ExactLogSum:
    if q == "inf":
        form = ground_state_limit(D, "inf")
    else:
        form = renyi_ground_state(D, q)
    if space == "momentum":
        form = ExactLogSum(form.terms, form.pi_weight, -form.alpha_weight)
    return form


def entropy_record(state: HarmonicState, q, space: str, digits: int, conjecture: bool) -> dict:
    """One entropy evaluation; raises UsageError on unsupported requests."""
    rec = {
        "D": state.D,
        "n": list(state.n),
        "q": _q_str(q),
        "space": space,
        "alpha": str(state.alpha),
        "mode": "exact",
        "exact": None,
        "value": None,
        "energy": str(energy(state)),
    }
    if _is_exact(q):
        form = renyi(state, int(q), space)
        rec["exact"] = form.render()
        rec["value"] = logsum_eval(form, state.alpha, digits)
        return rec
    if q == 0 or q == "inf":
        if not state.is_ground():
            raise UsageError("q = 0 and q = inf are available for the ground state only")
        rec["mode"] = "ground-limit"
        if q == 0:
            rec["exact"] = "inf"
            rec["value"] = "inf"
        else:
            form = _ground_form(state.D, q, space)
            rec["exact"] = form.render()
            rec["value"] = logsum_eval(form, state.alpha, digits)
        return rec
    if state.is_ground():
        form = _ground_form(state.D, q, space)
        rec["mode"] = "real-q-ground"
        rec["exact"] = form.render()
        rec["value"] = logsum_eval(form, state.alpha, digits)
        return rec
    if not conjecture:
        raise UsageError(f"q = {q} is not an integer >= 2; pass --conjecture for the real-q extension")
    rec["mode"] = "conjecture"
    with mp.workdps(digits + 20):
        val = renyi_real_q(state, q, digits + 20, space)
        rec["value"] = format_digits(val, digits)
    return rec


def _state_from_args(args) -> HarmonicState:
    n = parse_int_list(args.n)
    if args.dim is not None and len(n) != args.dim:
        if len(n) == 1:
            n = n * args.dim
        else:
            raise UsageError(f"--dim {args.dim} but {len(n)} quantum numbers given")
    if not n:
        raise UsageError("no quantum numbers given")
    return HarmonicState(tuple(n), parse_alpha(args.alpha))


def _emit(records: list[dict], fmt: str, command: str, out, banner: Optional[str] = None, key="results"):
    if fmt == "json":
        json.dump({"schema": SCHEMA, "command": command, key: records}, out, ensure_ascii=False, indent=2)
        out.write("\n")
        return
    if fmt == "csv":
        if not records:
            return
        w = csv.DictWriter(out, fieldnames=list(records[0]), lineterminator="\n")
        w.writeheader()
        for r in records:
            w.writerow({k: _csv_cell(v) for k, v in r.items()})
        return
    if banner:
        out.write(banner + "\n")
    for r in records:
        out.write(_human(r) + "\n")


def _csv_cell(v):
    if isinstance(v, list):
        return " ".join(str(x) for x in v)
    if isinstance(v, bool):
        return str(v).lower()
    return "" if v is None else v


def _human(r: dict) -> str:
    head = ", ".join(f"{k}={_csv_cell(r[k])}" for k in ("D", "n", "q", "space", "alpha") if k in r)
    lines = [head]
    for k, v in r.items():
        if k in ("D", "n", "q", "space", "alpha"):
            continue
        if v is not None:
            lines.append(f"  {k}: {_csv_cell(v)}")
    return "\n".join(lines)


def cmd_entropy(args, out) -> int:
    state = _state_from_args(args)
    q = parse_order(args.q)
    recs = [entropy_record(state, q, sp, args.digits, args.conjecture) for sp in _spaces(args.space)]
    banner = None
    if any(r["mode"] == "conjecture" for r in recs):
        banner = CONJECTURE_BANNER
    elif any(r["mode"].startswith("real-q") for r in recs):
        banner = REAL_Q_BANNER
    _emit(recs, args.format, "entropy", out, banner)
    return EXIT_OK


def cmd_moment(args, out) -> int:
    state = _state_from_args(args)
    q = parse_order(args.q)
    if not _is_exact(q):
        raise UsageError("entropic moments are exact for integer q >= 2 only")
    recs = []
    for sp in _spaces(args.space):
        w = entropic_moment_position(state, int(q)) if sp == "position" else entropic_moment_momentum(state, int(q))
        with mp.workdps(args.digits + 20):
            val = format_digits(w.evaluate(state.alpha), args.digits)
        recs.append(
            {"D": state.D, "n": list(state.n), "q": _q_str(q), "space": sp, "alpha": str(state.alpha),
             "exact": str(w), "value": val}
        )
    _emit(recs, args.format, "moment", out)
    return EXIT_OK


def cmd_sum(args, out) -> int:
    state = _state_from_args(args)
    q = parse_order(args.q)
    qt = parse_order(args.qt) if args.qt else q
    rec = {"D": state.D, "n": list(state.n), "q": _q_str(q), "qt": _q_str(qt), "alpha": str(state.alpha)}
    banner = None
    if _is_exact(q) and _is_exact(qt):
        form = entropy_sum(state, int(q), int(qt))
        rec.update(mode="exact", exact=form.render(), value=logsum_eval(form, None, args.digits))
    elif "inf" in (q, qt) or 0 in (q, qt):
        raise UsageError("q = 0 and q = inf are not supported in entropy sums")
    else:
        if not state.is_ground() and not args.conjecture:
            raise UsageError("non-integer orders for excited states need --conjecture")
        banner = REAL_Q_BANNER if state.is_ground() else CONJECTURE_BANNER
        val = entropy_sum_real(state, q, qt, args.digits + 20)
        rec.update(mode="real-q", exact=None, value=format_digits(val, args.digits))
    _emit([rec], args.format, "sum", out, banner)
    return EXIT_OK


def cmd_check(args, out) -> int:
    state = _state_from_args(args)
    q = parse_order(args.q)
    qt = parse_order(args.qt) if args.qt else None
    if q == "inf" or qt == "inf":
        raise UsageError("q = inf is not supported here")
    try:
        rep = check_uncertainty(state, q, qt, args.regime, args.digits + 20)
    except NotApplicable as exc:
        raise UsageError(f"not applicable: {exc}") from None
    d = args.digits
    rec = {
        "D": state.D, "n": list(state.n), "q": _q_str(rep.q), "qt": _q_str(rep.qt),
        "regime": rep.regime,
        "sum": format_digits(rep.sum_value, d),
        "bound": format_digits(rep.bound_value, d),
        "margin": mp.nstr(rep.margin, d),
        "satisfied": rep.satisfied,
    }
    banner = None if state.is_ground() or (_is_exact(rep.q) and _is_exact(rep.qt)) else CONJECTURE_BANNER
    _emit([rec], args.format, "check-uncertainty", out, banner)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    if args.conjecture:
        ns = parse_int_list(args.n or "0..4")
        qs = parse_orders(args.q or "2/3,3/4,3/2,5/2")
        rows = verify_conjecture(ns, qs, parse_alpha(args.alpha), CONJECTURE_TOL, max(args.digits, 50))
        recs = [
            {"n": r.n, "q": _q_str(r.q), "closed_form": format_digits(r.closed, args.digits),
             "oracle": format_digits(r.oracle, args.digits), "diff": mp.nstr(r.diff, 3), "ok": r.ok}
            for r in rows
        ]
        ok = all(r.ok for r in rows)
        _emit(recs, args.format, "verify", out, f"# real-q closed form vs quadrature, tol {CONJECTURE_TOL:g}")
        if args.format == "human":
            out.write(("PASS" if ok else "FAIL") + f": {len(rows)} comparisons\n")
        return EXIT_OK if ok else EXIT_FAIL
    ns = parse_int_list(args.n or "0..8")
    qs = [int(q) for q in parse_orders(args.q or "2,3,4") if _is_exact(q)]
    if not qs:
        raise UsageError("exact verification needs integer orders >= 2")
    fault = None
    if args.inject_fault:
        fn, fq = (int(x) for x in args.inject_fault.split(","))
        fault = (fn, fq)
    res = verify_exact(ns, qs, args.dim or 3, fault, args.budget)
    if args.format == "json":
        json.dump(
            {"schema": SCHEMA, "command": "verify", "checks": res.checks, "ok": res.ok,
             "mismatches": [vars(m) | {"n": list(m.n), "q": str(m.q)} for m in res.mismatches]},
            out, ensure_ascii=False, indent=2,
        )
        out.write("\n")
    else:
        for m in res.mismatches:
            out.write("MISMATCH " + m.describe() + "\n")
        out.write(("PASS" if res.ok else "FAIL") + f": {res.checks} checks, {len(res.mismatches)} mismatches\n")
    return EXIT_OK if res.ok else EXIT_FAIL


def cmd_table(args, out) -> int:
    D = args.dim or 1
    values = parse_int_list(args.n or "0..3")
    qs = parse_orders(args.q or "2,3")
    spaces = _spaces(args.space)
    alpha = parse_alpha(args.alpha)
    count = len(values) ** D * len(qs) * len(spaces) if values else 0
    if count > args.budget:
        raise UsageError(f"table would have {count} rows, above --budget {args.budget}")
    rows = []
    for n in itertools.product(sorted(values), repeat=D):
        state = HarmonicState(n, alpha)
        for q in qs:
            for sp in spaces:
                r = entropy_record(state, q, sp, args.digits, args.conjecture)
                rows.append({k: r[k] for k in ("D", "n", "q", "space", "mode", "exact", "value", "energy")})
    if args.format == "csv" and not rows:
        out.write("D,n,q,space,mode,exact,value,energy\n")
        return EXIT_OK
    _emit(rows, args.format, "table", out, key="rows")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="harmonic-renyi",
        description="Exact Renyi entropies of D-dimensional harmonic oscillator states.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, n_default=None, q_default=None):
        sp.add_argument("--dim", type=int, default=None, help="dimension D")
        sp.add_argument("--n", default=n_default, help="quantum numbers: '2', '1,2,3' or range '0..3'")
        sp.add_argument("--q", default=q_default, help="Renyi order (integer, rational like 2/3, decimal, inf)")
        sp.add_argument("--qt", default=None, help="momentum-space order")
        sp.add_argument("--alpha", default="1", help="oscillator parameter, rational or decimal")
        sp.add_argument("--space", choices=["pos", "mom", "both"], default="pos")
        sp.add_argument("--format", choices=["human", "csv", "json"], default="human")
        sp.add_argument("--digits", type=int, default=15)
        sp.add_argument("--conjecture", action="store_true", help="allow real-q mode for excited states")
        sp.add_argument("--budget", type=int, default=None)

    for name, helptext in [
        ("entropy", "Renyi entropy of one state"),
        ("moment", "entropic moment W_q of one state"),
        ("sum", "position + momentum entropy sum"),
        ("check-uncertainty", "compare the entropy sum with its lower bound"),
        ("verify", "closed forms against the oracles"),
        ("table", "sweep a grid of states and orders"),
    ]:
        sp = sub.add_parser(name, help=helptext)
        common(sp)
        if name == "check-uncertainty":
            sp.add_argument("--regime", choices=["conjugated", "zpv"], default="conjugated")
        if name == "verify":
            sp.add_argument("--inject-fault", default=None, help=argparse.SUPPRESS)
    return p


COMMANDS = {
    "entropy": cmd_entropy,
    "moment": cmd_moment,
    "sum": cmd_sum,
    "check-uncertainty": cmd_check,
    "verify": cmd_verify,
    "table": cmd_table,
}


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.digits < 1:
        parser.error("--digits must be positive")
    if args.budget is None:
        args.budget = DEFAULT_BUDGET if args.command == "verify" else DEFAULT_TABLE_BUDGET
    if args.command in ("entropy", "moment", "sum", "check-uncertainty"):
        if args.n is None or args.q is None:
            parser.error(f"{args.command} needs --n and --q")
    try:
        return COMMANDS[args.command](args, out)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
