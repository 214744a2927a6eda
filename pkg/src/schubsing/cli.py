"""
Batch command-line front end.

    schubsing smooth  W... [--corpus FILE] [--json]
    schubsing maxsing W... [--corpus FILE] [--json] [--jobs K]
    schubsing count   W... [--corpus FILE] [--json] [--jobs K]
    schubsing kl X W [--json] [--oracle-bound N]
    schubsing diagram X W [--svg PATH] [--annotate]
    schubsing sweep N --mode {maxsing,ew,kl,patterns} [--oracle-bound N] [--jobs K] [--json]
    schubsing bench [--sizes LIST] [--trials T] [--seed S] [--json]

Permutations are given in one-line notation ("2,4,5,3,1" or "[2 4 5 3 1]").
Corpus files hold one permutation per line; '#' starts a comment.  The
environment variable SCHUBSING_ORACLE_BOUND overrides the default size cap
of the exponential oracles.

Exit codes: 0 ok, 2 parse error, 3 capability exceeded, 4 precondition
violated, 5 sweep mismatch.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import statistics
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import kl as klmod
from . import maxsing_fast as msmod
from . import oracle
from .bruhat import bruhat_leq
from .diagram import diagram_ascii, diagram_svg
from .perm import Perm, avoids_pattern, length, parse_one_line, pattern_occurrences

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_CAPABILITY = 3
EXIT_PRECONDITION = 4
EXIT_MISMATCH = 5

ENV_BOUND = "SCHUBSING_ORACLE_BOUND"


def _env_bound(default: int) -> int:
    raw = os.environ.get(ENV_BOUND)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        return default


def _resolve_bound(args: argparse.Namespace, default: int) -> int:
    if getattr(args, "oracle_bound", None) is not None:
        return args.oracle_bound
    return _env_bound(default)


def _perm_list(v: Perm) -> list[int]:
    return list(v)


def _first_occurrence(w: Perm, p: Perm) -> list[int] | None:
    occ = pattern_occurrences(w, p)
    return list(occ[0]) if occ else None


def smooth_record(w: Perm) -> dict:
    witnesses = []
    for name, pat in (("4231", msmod.PATTERN_4231), ("3412", msmod.PATTERN_3412)):
        hit = _first_occurrence(w, pat)
        if hit is not None:
            witnesses.append({"pattern": name, "positions": hit})
    return {"w": _perm_list(w), "smooth": not witnesses, "witnesses": witnesses}


def maxsing_record(w: Perm) -> dict:
    comps = msmod.enumerate_components(w)
    return {
        "w": _perm_list(w),
        "count": len(comps),
        "components": [
            {
                "case": c.case,
                "alphas": list(c.alphas),
                "betas": list(c.betas),
                "x": _perm_list(c.x),
            }
            for c in comps
        ],
    }


def count_record(w: Perm) -> dict:
    useful = msmod.useful_pattern_count(w)
    ncomp = len(msmod.maxsing(w))
    return {
        "w": _perm_list(w),
        "useful_patterns": useful,
        "components": ncomp,
        "agree": useful == ncomp,
    }


_RECORD_FN = {"smooth": smooth_record, "maxsing": maxsing_record, "count": count_record}


def _emit(args: argparse.Namespace, records: list[dict], single: bool, text_fn) -> None:
    if args.json:
        payload = records[0] if (single and len(records) == 1) else records
        print(json.dumps(payload))
    else:
        for rec in records:
            print(text_fn(rec))


def _read_corpus(path: str) -> list[Perm]:
    perms = []
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.split("#", 1)[0].strip()
            if line:
                perms.append(parse_one_line(line))
    return perms


def _collect_inputs(args: argparse.Namespace) -> list[Perm]:
    if args.corpus:
        perms = _read_corpus(args.corpus)
        if not perms:
            raise ValueError(f"corpus file {args.corpus!r} holds no permutations")
        return perms
    if not args.perms:
        raise ValueError("no permutations given (positional arguments or --corpus)")
    return [parse_one_line(s) for s in args.perms]


def _map_jobs(fn, items, jobs: int):
    if jobs <= 1 or len(items) <= 1:
        return [fn(it) for it in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))


def _smooth_text(rec: dict) -> str:
    base = f"w={_fmt(rec['w'])} smooth={str(rec['smooth']).lower()}"
    for wit in rec["witnesses"]:
        base += f" {wit['pattern']}@{tuple(wit['positions'])}"
    return base


def _maxsing_text(rec: dict) -> str:
    lines = [f"w={_fmt(rec['w'])} components={rec['count']}"]
    for c in rec["components"]:
        lines.append(
            f"  case={c['case']} alphas={tuple(c['alphas'])} "
            f"betas={tuple(c['betas'])} x={_fmt(c['x'])}"
        )
    return "\n".join(lines)


def _count_text(rec: dict) -> str:
    return (
        f"w={_fmt(rec['w'])} useful_patterns={rec['useful_patterns']} "
        f"components={rec['components']} agree={str(rec['agree']).lower()}"
    )


def _fmt(values) -> str:
    return "[" + ",".join(str(v) for v in values) + "]"


_TEXT_FN = {"smooth": _smooth_text, "maxsing": _maxsing_text, "count": _count_text}


def cmd_batch(args: argparse.Namespace) -> int:
    perms = _collect_inputs(args)
    fn = _RECORD_FN[args.command]
    jobs = getattr(args, "jobs", 1)
    records = _map_jobs(fn, perms, jobs)
    _emit(args, records, single=not args.corpus, text_fn=_TEXT_FN[args.command])
    return EXIT_OK


def cmd_kl(args: argparse.Namespace) -> int:
    x = parse_one_line(args.x)
    w = parse_one_line(args.w)
    if len(x) != len(w):
        raise ValueError("x and w must have the same size")
    bound = _resolve_bound(args, klmod.DEFAULT_BOUND)
    coeffs: tuple[int, ...]
    if not bruhat_leq(x, w):
        coeffs, method = (), "closed_form"
    else:
        try:
            coeffs, method = klmod.kl_at_msp(x, w), "closed_form"
        except ValueError:
            if length(w) - length(x) <= 2:
                coeffs, method = (1,), "closed_form"
            elif len(w) <= bound:
                coeffs, method = klmod.kl_recursive(x, w, bound=bound), "recursion"
            else:
                print(
                    f"error: n={len(w)} exceeds the recursion bound {bound} and the "
                    "point is not a maximal singular point (no closed form applies)",
                    file=sys.stderr,
                )
                return EXIT_CAPABILITY
    rec = {
        "x": _perm_list(x),
        "w": _perm_list(w),
        "poly": klmod.format_poly(coeffs),
        "coeffs": list(coeffs),
        "method": method,
    }
    if args.json:
        print(json.dumps(rec))
    else:
        print(f"P = {rec['poly']} ({method})")
    return EXIT_OK


def cmd_diagram(args: argparse.Namespace) -> int:
    x = parse_one_line(args.x)
    w = parse_one_line(args.w)
    if len(x) != len(w) or not bruhat_leq(x, w):
        print("error: need x <= w in Bruhat order for a shaded picture", file=sys.stderr)
        return EXIT_PRECONDITION
    if args.svg:
        text = diagram_svg(x, w, annotate=args.annotate)
        if args.svg == "-":
            print(text)
        else:
            with open(args.svg, "w", encoding="utf-8") as fh:
                fh.write(text + "\n")
    else:
        print(diagram_ascii(x, w, annotate=args.annotate))
    return EXIT_OK


def _sweep_maxsing(w: Perm) -> bool:
    return msmod.maxsing(w) == oracle.maxsing_bruteforce(w, bound=len(w))


def _sweep_ew(w: Perm) -> bool:
    return oracle.ew_maximal(w, bound=len(w)) == msmod.maxsing(w)


def _sweep_kl(w: Perm) -> bool:
    cache = klmod.KLCache()
    for x in msmod.maxsing(w):
        if klmod.kl_at_msp(x, w) != klmod.kl_recursive(x, w, bound=len(w), cache=cache):
            return False
    return True


def _sweep_patterns(w: Perm) -> bool:
    return msmod.useful_pattern_count(w) == len(msmod.maxsing(w))


_SWEEP_FN = {
    "maxsing": _sweep_maxsing,
    "ew": _sweep_ew,
    "kl": _sweep_kl,
    "patterns": _sweep_patterns,
}


def cmd_sweep(args: argparse.Namespace) -> int:
    n = args.n
    bound = _resolve_bound(args, oracle.DEFAULT_BOUND)
    if n > bound:
        print(f"error: sweep over S_{n} exceeds oracle bound {bound}", file=sys.stderr)
        return EXIT_CAPABILITY
    from .perm import all_perms

    perms = list(all_perms(n))
    results = _map_jobs(_SWEEP_FN[args.mode], perms, args.jobs)
    mismatches = [w for w, ok in zip(perms, results) if not ok]
    rec = {
        "n": n,
        "mode": args.mode,
        "checked": len(perms),
        "ok": not mismatches,
        "mismatches": [_perm_list(w) for w in mismatches[:10]],
    }
    if args.json:
        print(json.dumps(rec))
    elif mismatches:
        print(f"sweep n={n} mode={args.mode}: {len(mismatches)} mismatches, first at "
              f"{_fmt(list(mismatches[0]))}")
    else:
        print(f"sweep n={n} mode={args.mode}: all agree ({len(perms)} permutations)")
    return EXIT_OK if not mismatches else EXIT_MISMATCH


def cmd_bench(args: argparse.Namespace) -> int:
    sizes = [int(tok) for tok in args.sizes.split(",") if tok.strip()]
    rng = random.Random(args.seed)
    results = []
    for n in sizes:
        times = []
        for _ in range(args.trials):
            w = list(range(1, n + 1))
            rng.shuffle(w)
            t0 = time.perf_counter()
            msmod.maxsing(tuple(w))
            times.append(time.perf_counter() - t0)
        results.append(
            {
                "n": n,
                "trials": args.trials,
                "median_seconds": statistics.median(times),
                "times": times,
            }
        )
    if args.json:
        print(json.dumps({"seed": args.seed, "results": results}))
    else:
        for rec in results:
            print(f"n={rec['n']} trials={rec['trials']} median={rec['median_seconds']:.4f}s")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schubsing",
        description="Singular loci of Schubert varieties: smoothness, components, "
        "Kazhdan-Lusztig polynomials, diagrams, oracle sweeps, benchmarks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for name, doc in (
        ("smooth", "pattern-based smoothness test with witnesses"),
        ("maxsing", "irreducible components of the singular locus"),
        ("count", "useful-pattern count vs component count"),
    ):
        sp = sub.add_parser(name, help=doc)
        sp.add_argument("perms", nargs="*", help="permutations in one-line notation")
        sp.add_argument("--corpus", help="file with one permutation per line")
        sp.add_argument("--json", action="store_true")
        sp.add_argument("--jobs", type=int, default=1)
        sp.set_defaults(func=cmd_batch)

    sp = sub.add_parser("kl", help="Kazhdan-Lusztig polynomial P_{x,w}")
    sp.add_argument("x")
    sp.add_argument("w")
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--oracle-bound", type=int, default=None)
    sp.set_defaults(func=cmd_kl)

    sp = sub.add_parser("diagram", help="Bruhat picture for a pair x <= w")
    sp.add_argument("x")
    sp.add_argument("w")
    sp.add_argument("--svg", help="write SVG to this path ('-' for stdout)")
    sp.add_argument("--annotate", action="store_true", help="print every table value")
    sp.set_defaults(func=cmd_diagram)

    sp = sub.add_parser("sweep", help="exhaustive agreement sweep over S_n")
    sp.add_argument("n", type=int)
    sp.add_argument("--mode", choices=sorted(_SWEEP_FN), required=True)
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--oracle-bound", type=int, default=None)
    sp.set_defaults(func=cmd_sweep)

    sp = sub.add_parser("bench", help="median runtime of the component enumeration")
    sp.add_argument("--sizes", default="50,100")
    sp.add_argument("--trials", type=int, default=5)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
