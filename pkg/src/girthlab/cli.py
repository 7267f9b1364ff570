"""Command-line front end: ``girthlab <command> ...``.

Exit codes: 0 success, 1 an expectation failed (cycle found, mismatch),
2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .bounds import bound_girth10, bound_girth12, bound_legacy, bound_me_girth6
from .core import ExponentMatrix, FormatError, format_matrix, read_matrix
from .diffmat import build_D, build_DD, format_D, format_DD
from .girth_me import check_me_4cycles, check_me_6cycles, detect_inevitable_cycles
from .girth_se import check_4cycles, check_6cycles, check_8cycles, check_10cycles, girth
from .oracle import bfs_girth_of, count_fossorier_equations, fossorier_girth

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=False))
    else:
        print(text)


def _load(path: str) -> ExponentMatrix:
    try:
        return read_matrix(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def cmd_diff(args) -> int:
    B = _load(args.file)
    D, DD = build_D(B), build_DD(B)
    payload = {"N": B.N, "single_edge": D.single_edge, "D": D.rows_as_lists(), "DD": DD.rows_as_lists()}
    _emit(args, payload, f"D (mod {B.N}):\n{format_D(D)}\n\nDD (mod {B.N}):\n{format_DD(DD)}")
    return EXIT_OK


def cmd_girth(args) -> int:
    B = _load(args.file)
    rep = girth(B, budget=args.budget)
    payload = rep.to_json()
    if args.bfs:
        payload["bfs_girth"] = bfs_girth_of(B)
    text = f"girth {rep.label} (decided by {rep.detected_by})"
    if args.bfs:
        text += f"; BFS girth {payload['bfs_girth']}"
    _emit(args, payload, text)
    if args.expect is not None and rep.girth != args.expect:
        return EXIT_FAIL
    return EXIT_OK


def cmd_check(args) -> int:
    B = _load(args.file)
    L = args.length
    if B.is_single_edge:
        D = build_D(B)
        fns = {4: lambda: check_4cycles(D), 6: lambda: check_6cycles(D),
               8: lambda: check_8cycles(D, build_DD(B), exact=not args.literal),
               10: lambda: check_10cycles(B, D)}
    else:
        fns = {4: lambda: check_me_4cycles(B), 6: lambda: check_me_6cycles(B)}
    if L not in fns:
        raise UsageError(f"no condition check for length {L} on this matrix; try oracle-girth")
    v = fns[L]()
    payload = {"length": L, "free": v is None, "violation": None if v is None else v.to_json()}
    if v is None:
        _emit(args, payload, f"no {L}-cycles")
    else:
        print(json.dumps(payload, indent=2))
    return EXIT_OK if v is None else EXIT_FAIL


def cmd_oracle_girth(args) -> int:
    B = _load(args.file)
    g, res = fossorier_girth(B, max_length=12, budget=args.budget)
    payload = {"fossorier_girth": g, "outcome": res.outcome.value if res else None,
               "witness": res.witness.to_json() if res and res.witness else None}
    text = f"walk enumeration: {'no cycle up to 12' if g is None else g}"
    if args.bfs:
        payload["bfs_girth"] = bfs_girth_of(B, all_roots=args.all_roots)
        text += f"; BFS girth {payload['bfs_girth']}"
    _emit(args, payload, text)
    return EXIT_OK


def cmd_inevitable(args) -> int:
    B = _load(args.file)
    rep = detect_inevitable_cycles(B, max_length=args.max_length)
    text = "no inevitable cycles found" if not rep.present else (
        f"inevitable {rep.length}-cycle ({rep.pattern}) on rows {list(rep.rows)}, cols {list(rep.cols)}")
    _emit(args, rep.to_json(), text)
    return EXIT_FAIL if rep.present else EXIT_OK


def cmd_bound(args) -> int:
    g = args.girth
    if g in ("10", "6", "8"):
        if args.m is None or args.n is None:
            if not args.file:
                raise UsageError("give --m and --n or a matrix file")
            B = _load(args.file)
            m, n = B.m, B.n
        else:
            m, n = args.m, args.n
        rep = bound_girth10(m, n) if g == "10" else bound_legacy(int(g), m, n)
    else:
        if not args.file:
            raise UsageError(f"--girth {g} needs a matrix file")
        B = _load(args.file)
        try:
            rep = bound_girth12(B) if g == "12" else bound_me_girth6(B)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    _emit(args, rep.to_json(), f"{rep.kind}: N >= {rep.bound}")
    return EXIT_OK


def cmd_count_eqs(args) -> int:
    try:
        rep = count_fossorier_equations(args.girth, args.m, args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    payload = rep.to_json()
    lines = [f"{k}: {v}" for k, v in rep.shapes.items()] + [f"total: {rep.total}"]
    if rep.closed_form_total is not None:
        lines.append(f"closed form: {rep.closed_form_total}")
    if args.parity and rep.girth_target == 8:
        payload["dd_computations"] = getattr(rep, f"dd_computations_{args.parity}")
        lines.append(f"computations: {rep.fossorier_computations} with walk equations, "
                     f"{payload['dd_computations']} with DD ({args.parity} N)")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def _weights(text: str | None, m: int, n: int):
    if text is None:
        return None
    vals = [int(x) for x in text.split(",")]
    if len(vals) != m * n:
        raise UsageError(f"--weights needs {m * n} comma-separated values")
    return tuple(tuple(vals[i * n:(i + 1) * n]) for i in range(m))


def cmd_search(args) -> int:
    from .search import SearchConfig, search_min_N
    try:
        cfg = SearchConfig(args.m, args.n, args.girth, weights=_weights(args.weights, args.m, args.n),
                           N_lo=args.N_lo, N_hi=args.N_hi, threads=args.threads,
                           node_budget=args.budget, time_limit=args.time_limit, prune=not args.no_prune)
        res = search_min_N(cfg, resume=args.resume)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.out_dir and res.representatives:
        os.makedirs(args.out_dir, exist_ok=True)
        for k, R in enumerate(res.representatives):
            path = os.path.join(args.out_dir, f"class-{k:04d}.txt")
            with open(path, "w", encoding="utf-8") as fh:
                fh.write(format_matrix(R))
    text = (f"minimal N: {res.minimal_N if res.minimal_N is not None else 'not found in range'}; "
            f"classes: {res.class_count}{' (partial)' if res.partial else ''}")
    _emit(args, res.to_json(), text)
    return EXIT_OK if res.minimal_N is not None else EXIT_FAIL


def cmd_ni_count(args) -> int:
    from .search import ni_count
    res = ni_count(args.m, args.n, args.girth, args.N, threads=args.threads,
                   node_budget=args.budget, time_limit=args.time_limit)
    text = f"classes at N={args.N}: {res.class_count}{' (partial)' if res.partial else ''} [{res.group}]"
    _emit(args, res.to_json(), text)
    return EXIT_OK


def cmd_mindist(args) -> int:
    from .mindist import min_distance
    B = _load(args.file)
    try:
        res = min_distance(B, budget=args.budget, time_limit=args.time_limit)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if res.exact:
        text = f"d_min = {res.value} (exact, {res.method}, k={res.dimension})"
    else:
        text = f"{res.lower_bound} <= d_min <= {res.value} (budget exhausted, k={res.dimension})"
    _emit(args, res.to_json(), text)
    return EXIT_OK


def cmd_verify_corpus(args) -> int:
    from .corpus import verify_corpus
    try:
        checks = verify_corpus(args.scope, dmin=not args.no_dmin, dmin_time=args.dmin_time)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    hard_fail = [c for c in checks if not c.passed and c.hard]
    payload = {"checks": [c.to_json() for c in checks], "hard_failures": len(hard_fail),
               "warnings": sum(1 for c in checks if not c.passed and not c.hard)}
    lines = []
    for c in checks:
        status = "PASS" if c.passed else ("FAIL" if c.hard else "WARN")
        note = f"  ({c.note})" if c.note else ""
        got = c.got if not isinstance(c.got, list) else "..."
        lines.append(f"{status}  {c.entry:<20} {c.name:<17} got {got}  [{c.seconds * 1000:.1f} ms]{note}")
    _emit(args, payload, "\n".join(lines))
    return EXIT_FAIL if hard_fail else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="girthlab", description="Girth analysis and search for QC-LDPC exponent matrices.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text, file=True):
        sp = sub.add_parser(name, help=help_text)
        if file:
            sp.add_argument("file", help="matrix file ('m n N' header, then m rows)")
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.set_defaults(func=fn)
        return sp

    add("diff", cmd_diff, "print the difference matrices D and DD")
    sp = add("girth", cmd_girth, "girth via the difference-matrix conditions")
    sp.add_argument("--budget", type=int, default=3_000_000)
    sp.add_argument("--bfs", action="store_true", help="also report the BFS girth of the lift")
    sp.add_argument("--expect", type=int, help="exit 1 unless the girth equals this value")
    sp = add("check", cmd_check, "test one cycle length's condition")
    sp.add_argument("--length", "--girth", dest="length", type=int, required=True, choices=(4, 6, 8, 10),
                    help="cycle length to rule out")
    sp.add_argument("--literal", action="store_true", help="8-cycles: flag every DD repetition")
    sp = add("oracle-girth", cmd_oracle_girth, "girth by walk enumeration (and BFS)")
    sp.add_argument("--budget", type=int)
    sp.add_argument("--bfs", action="store_true")
    sp.add_argument("--all-roots", action="store_true", help="BFS from every vertex")
    sp = add("inevitable", cmd_inevitable, "detect cycles present at every lifting degree")
    sp.add_argument("--max-length", type=int, default=10)
    sp = add("bound", cmd_bound, "lower bound on the lifting degree", file=False)
    sp.add_argument("file", nargs="?")
    sp.add_argument("--girth", required=True, choices=("6", "8", "10", "12", "6me"))
    sp.add_argument("--m", type=int)
    sp.add_argument("--n", type=int)
    sp = add("count-eqs", cmd_count_eqs, "count cycle equations per submatrix shape", file=False)
    sp.add_argument("--girth", type=int, required=True, choices=(8, 10))
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--parity", choices=("odd", "even"), help="parity of N for the DD computation count")

    threads_default = os.environ.get("GIRTHLAB_THREADS")
    sp = add("search", cmd_search, "smallest lifting degree reaching a girth", file=False)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--girth", type=int, required=True, choices=(6, 8, 10, 12))
    sp.add_argument("--weights", help="row-major comma-separated entry weights (multiple-edge)")
    sp.add_argument("--N-lo", type=int, dest="N_lo")
    sp.add_argument("--N-hi", type=int, dest="N_hi")
    sp.add_argument("--budget", type=int, help="node budget")
    sp.add_argument("--time-limit", type=float)
    sp.add_argument("--threads", type=int, default=int(threads_default) if threads_default else None)
    sp.add_argument("--resume", help="state file to persist and restore progress")
    sp.add_argument("--out-dir", help="write one matrix file per class here")
    sp.add_argument("--no-prune", action="store_true", help="filter complete matrices only")
    sp = add("ni-count", cmd_ni_count, "number of classes at a given N", file=False)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--girth", type=int, required=True, choices=(6, 8, 10, 12))
    sp.add_argument("--N", type=int, required=True)
    sp.add_argument("--budget", type=int)
    sp.add_argument("--time-limit", type=float)
    sp.add_argument("--threads", type=int, default=int(threads_default) if threads_default else None)
    sp = add("mindist", cmd_mindist, "minimum distance of the lifted code")
    sp.add_argument("--budget", type=int, help="codeword budget for the information-set search")
    sp.add_argument("--time-limit", type=float)
    sp = add("verify-corpus", cmd_verify_corpus, "check the built-in matrices against their recorded properties",
             file=False)
    sp.add_argument("scope", nargs="?", default="all", help="'all', a group name or an entry id")
    sp.add_argument("--no-dmin", action="store_true")
    sp.add_argument("--dmin-time", type=float, default=30.0)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, FormatError) as exc:
        print(f"girthlab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
