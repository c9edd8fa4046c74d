"""Command-line front end.

Exit codes: 0 when a verdict was computed (negative verdicts included),
1 for input errors, 2 when an implication that must hold was violated.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from .errors import BudgetExceeded, DseqError, PropertyViolation
from .hilbert import e_invariants, multiplicity, verify_cor43, verify_thm41
from .ideals import Ideal
from .modules import is_system_of_parameters
from .oracle import GroebnerEngine, oracle_diff, task_corpus
from .problem import ProblemSpec, load_problem
from .rees import check_independence, verify_assoc_graded, verify_rees_sym
from .sequences import SequenceContext, check_as_condition_v, classify
from .corpus import sample_sops

COMMANDS = ("classify", "hs", "einv", "indep", "rees", "graded", "cor43", "oracle-diff", "sample-sop")


def _pair(text: str):
    try:
        a, b = (int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected two integers 'a,b', got {text!r}")
    return a, b


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dseq",
        description="Classify sequences in S/J and tabulate their Hilbert-Samuel invariants.",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("problem", nargs="?", help="problem file (key = value lines)")
    parser.add_argument("--n-max", type=int, default=None)
    parser.add_argument("--d-max", type=int, default=None)
    parser.add_argument("--bounds", type=_pair, default=None, help="m,n bounds for condition (vi)")
    parser.add_argument("--window", type=_pair, default=None, help="lo,hi window for the superficial check")
    parser.add_argument("--seed", type=int, default=None)
    parser.add_argument("--count", type=int, default=None, help="number of random tasks or samples")
    parser.add_argument("--verify", action="store_true", help="cross-check (iv) and (vi) against (v)")
    parser.add_argument("--force", action="store_true", help="run diagnostics despite failed preconditions")
    parser.add_argument("--json", action="store_true", help="machine-readable report")
    return parser


def _opt(args_value, spec_value, default):
    if args_value is not None:
        return args_value
    if spec_value is not None:
        return spec_value
    return default


def _colon_name(i: int) -> str:
    return "J" if i == 1 else f"(J+q_{i - 1})"


def _fmt(ideal: Ideal) -> str:
    return str(ideal.reduced())


def _header(ctx: SequenceContext, lengths: bool = False) -> List[str]:
    lines = [
        f"field: F_{ctx.ring.characteristic}",
        f"module: {ctx.module}",
        f"sequence: ({', '.join(str(a) for a in ctx.elements)})",
    ]
    if not ctx.module.homogeneous or not all(a.is_homogeneous() for a in ctx.elements):
        lines.append("note: non-homogeneous input, polynomial-ring semantics only")
        if lengths:
            lines.append("note: lengths unverified (non-homogeneous)")
    return lines


def _yes(flag) -> str:
    return "n/a" if flag is None else ("YES" if flag else "NO")


# ---------------------------------------------------------------------------


def cmd_classify(spec: ProblemSpec, args):
    ctx = spec.context()
    bounds = _opt(args.bounds, spec.bounds, (3, 3))
    window = _opt(args.window, spec.window, None)
    a = spec.ideal_a(ctx.ring)
    superficial = None if window is None else (1, 1, window[0], window[1])
    rep = classify(ctx, verify=args.verify, a=a, bounds=bounds, superficial=superficial)
    data = {"command": "classify", "context": _context_dict(ctx), "report": rep.to_dict()}
    lines = _header(ctx)
    v = rep.checks["v"]
    if rep.as_sequence:
        lines.append("absolutely superficial: YES (condition v)")
    else:
        i = v.index
        name = _colon_name(i)
        lines.append(f"absolutely superficial: NO, witness at i={i}: {name}:a_{i}^2 != {name}:q")
        lines.append(f"  {name}:a_{i}^2 = {_fmt(v.witnesses['colon_by_square'])}")
        lines.append(f"  {name}:q = {_fmt(v.witnesses['colon_by_q'])}")
    if args.verify:
        iv, vi = rep.checks["iv"], rep.checks["vi"]
        lines.append(f"  condition iv: {_yes(iv.holds)}")
        lines.append(f"  condition vi (m <= {bounds[0]}, n <= {bounds[1]}): {_yes(vi.holds)}")
    aname = "m" if spec.a is None else "a"
    lines.append(f"regular: {_yes(rep.regular)}")
    lines.append(f"filter-regular ({aname}): {_yes(rep.filter_regular)}")
    lines.append(f"weak ({aname}): {_yes(rep.weak)}")
    if superficial is not None:
        lines.append(f"superficial (c=1, d=1, n in [{window[0]}, {window[1]}]): {_yes(rep.superficial)}")
    return data, lines


def _context_dict(ctx: SequenceContext) -> dict:
    return {
        "characteristic": ctx.ring.characteristic,
        "variables": list(ctx.ring.variables),
        "ideal": [str(g) for g in ctx.J.generators],
        "sequence": [str(a) for a in ctx.elements],
    }


def cmd_hs(spec: ProblemSpec, args):
    ctx = spec.context()
    n_max = _opt(args.n_max, spec.n_max, 6)
    rep = verify_thm41(ctx, n_max)
    data = {
        "command": "hs",
        "context": _context_dict(ctx),
        "table": rep.table.to_dict(),
        "bound_holds": rep.bound_holds,
        "equality_all_n": rep.equality_all_n,
        "as_sequence": rep.as_sequence,
        "note": rep.note,
    }
    lines = _header(ctx, lengths=True)
    lines.append(f"e = ({', '.join(str(x) for x in rep.table.e.e)})")
    lines.append(f"{'n':>3}  {'l(M/q^(n+1)M)':>14}  {'bound':>8}  equal")
    for n, v, b, eq in rep.table.rows():
        lines.append(f"{n:>3}  {v:>14}  {b:>8}  {'yes' if eq else 'no'}")
    lines.append(f"bound holds: {_yes(rep.bound_holds)}; equality for n <= {n_max}: {_yes(rep.equality_all_n)}")
    lines.append(f"absolutely superficial: {_yes(rep.as_sequence)}")
    if rep.note:
        lines.append(f"note: {rep.note}")
    return data, lines


def cmd_einv(spec: ProblemSpec, args):
    ctx = spec.context()
    e = e_invariants(ctx)
    try:
        mult = multiplicity(ctx)
    except BudgetExceeded:
        mult = None
    data = {
        "command": "einv",
        "context": _context_dict(ctx),
        "e": list(e.e),
        "colon_lengths": list(e.colon_lengths),
        "length_M_mod_qM": e.base_length,
        "multiplicity": mult,
    }
    lines = _header(ctx, lengths=True)
    lines.append(f"e = ({', '.join(str(x) for x in e.e)})")
    lines.append(f"colon lengths L_1..L_r = ({', '.join(str(x) for x in e.colon_lengths)})")
    lines.append(f"l(M/qM) = {e.base_length}")
    lines.append(f"multiplicity e(q;M) = {'not stabilized' if mult is None else mult} (e_0 = {e.e[0]})")
    return data, lines


def cmd_indep(spec: ProblemSpec, args):
    ctx = spec.context()
    N = spec.submodule_N(ctx.module)
    if N is None:
        raise DseqError("indep needs an 'N' entry in the problem file")
    n_max = _opt(args.n_max, spec.n_max, 2)
    colon_mode = check_independence(ctx, N, "colon")
    data = {"command": "indep", "context": _context_dict(ctx), "colon": colon_mode, "length": {}}
    lines = _header(ctx, lengths=True)
    lines.append(f"N = {_fmt(N.carrier)}")
    lines.append(f"colon criterion (all orderings): {_yes(colon_mode)}")
    if is_system_of_parameters(ctx.module, ctx.elements):
        for n in range(1, n_max + 1):
            ok = check_independence(ctx, N, "length", n)
            data["length"][n] = ok
            lines.append(f"length criterion n={n}: {_yes(ok)}")
            if ok != colon_mode:
                raise PropertyViolation(f"colon and length criteria disagree at n={n}")
    else:
        lines.append("length criterion: skipped (not a system of parameters)")
    return data, lines


def cmd_rees(spec: ProblemSpec, args):
    ctx = spec.context()
    d_max = _opt(args.d_max, spec.d_max, 3)
    rep = verify_rees_sym(ctx, d_max)
    data = {"command": "rees", "context": _context_dict(ctx), "report": rep.to_dict()}
    lines = _header(ctx)
    if rep.holds:
        lines.append(f"Rees = Sym: YES up to degree {d_max}, truncation K={rep.K} (re-run at K+2)")
    else:
        lines.append(
            f"Rees = Sym: NO, first failure in degree {rep.first_failing_degree} "
            f"(internal degree {rep.failing_internal_degree})"
        )
        lines.append(f"  witness: {rep.witness}")
    if not rep.stable:
        lines.append("note: verdicts differ between K and K+2")
    return data, lines


def cmd_graded(spec: ProblemSpec, args):
    ctx = spec.context()
    n_max = _opt(args.n_max, spec.n_max, 4)
    results = [verify_assoc_graded(ctx, i, n_max, force=args.force) for i in range(1, ctx.r + 1)]
    data = {"command": "graded", "context": _context_dict(ctx), "results": [r.to_dict() for r in results]}
    lines = _header(ctx, lengths=True)
    for r in results:
        lines.append(f"i={r.i}: {_yes(r.holds)}  G_q(M/q_iM): {r.quotient_side}  G_q(M)/Q_iG: {r.reduced_side}")
    if args.force:
        lines.append("note: diagnostic run, the a.s. precondition was not enforced")
    return data, lines


def cmd_cor43(spec: ProblemSpec, args):
    ctx = spec.context()
    a = spec.ideal_a(ctx.ring) or ctx.m
    n_max = _opt(args.n_max, spec.n_max, 4)
    rep = verify_cor43(ctx, a, n_max)
    data = {"command": "cor43", "context": _context_dict(ctx), "report": rep.to_dict()}
    lines = _header(ctx, lengths=True)
    lines.append(f"a = {_fmt(a)}")
    lines.append(f"{'n':>3}  {'l(M/a^(n+1)M)':>14}  {'bound':>8}  equal")
    for n, (l, b) in enumerate(zip(rep.lhs, rep.rhs)):
        lines.append(f"{n:>3}  {l:>14}  {b:>8}  {'yes' if l == b else 'no'}")
    t = rep.condition_triple
    lines.append(f"(i) reduction q^n a = a^(n+1): {_yes(t[0])}"
                 + (f" at n={rep.reduction_exponent}" if rep.reduction_exponent else ""))
    lines.append(f"(ii) absolutely superficial: {_yes(t[1])}")
    lines.append(f"(iii) permuted colons inside aM + H: {_yes(t[2])}")
    if rep.note:
        lines.append(f"note: {rep.note}")
    return data, lines


def cmd_oracle_diff(spec: Optional[ProblemSpec], args):
    seed = _opt(args.seed, spec.seed if spec else None, 2024)
    count = args.count if args.count is not None else 500
    reports = [oracle_diff(t, GroebnerEngine()) for t in task_corpus(seed, count)]
    bad = [r for r in reports if not r.agree]
    data = {
        "command": "oracle-diff",
        "seed": seed,
        "tasks": len(reports),
        "disagreements": [r.to_dict() for r in bad],
    }
    lines = [f"oracle-diff: {len(reports) - len(bad)}/{len(reports)} tasks agree (seed {seed})"]
    for r in bad:
        lines.append(f"  DISAGREE {r.task.describe()}")
        lines.append(f"    shrunk to {r.shrunk.describe()}")
    if bad:
        raise PropertyViolation("\n".join(lines))
    return data, lines


def cmd_sample_sop(spec: ProblemSpec, args):
    module = spec.module()
    seed = _opt(args.seed, spec.seed, 0)
    count = args.count if args.count is not None else 10
    samples = sample_sops(module, count, seed)
    rows = []
    for elems in samples:
        ctx = SequenceContext(module, elems)
        rows.append({"sequence": [str(a) for a in elems], "as_sequence": check_as_condition_v(ctx).holds})
    yes = sum(r["as_sequence"] for r in rows)
    data = {"command": "sample-sop", "seed": seed, "samples": rows, "as_count": yes}
    lines = [f"module: {module}", f"sampled {len(rows)} systems of parameters (seed {seed})"]
    for r in rows:
        lines.append(f"  ({', '.join(r['sequence'])}): {'a.s.' if r['as_sequence'] else 'not a.s.'}")
    lines.append(f"{yes}/{len(rows)} absolutely superficial; sampling evidence only, not a certificate")
    return data, lines


HANDLERS = {
    "classify": cmd_classify,
    "hs": cmd_hs,
    "einv": cmd_einv,
    "indep": cmd_indep,
    "rees": cmd_rees,
    "graded": cmd_graded,
    "cor43": cmd_cor43,
    "oracle-diff": cmd_oracle_diff,
    "sample-sop": cmd_sample_sop,
}


def main(argv: Optional[List[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code else 0
    try:
        spec = None
        if args.problem is not None:
            spec = load_problem(args.problem)
        elif args.command != "oracle-diff":
            raise DseqError(f"{args.command} needs a problem file")
        data, lines = HANDLERS[args.command](spec, args)
    except PropertyViolation as exc:
        print(f"property violation: {exc}", file=sys.stderr)
        return 2
    except (DseqError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.json:
        print(json.dumps(data, indent=2, sort_keys=True, default=str), file=out)
    else:
        print("\n".join(lines), file=out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
