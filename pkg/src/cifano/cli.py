"""Command-line entry point: ``cifano <subcommand> ...`` or ``python -m cifano``.

Exit codes: 0 success, 2 usage or parameter error, 3 regime refusal,
4 cap refusal, 5 verification mismatch.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import certify
from .errors import (CapExceededError, CifanoError, ParameterError, RegimeError,
                     VerificationError)
from .fano import DEFAULT_CAP, enumerate_planes, plane_count
from .invariants import Parameters, classify, delta_h, dim_formulas, lemma_scan
from .rigidity import ROW_ORDER, ROW_ORDERS, symbolic_det_leading
from .singular import DEFAULT_PRIMES

OUT_ENV = "CIFANO_OUT"


def _params(args) -> Parameters:
    if not args.d:
        raise ParameterError("at least one degree -d is required")
    return Parameters(args.m, args.k, tuple(args.d))


def _emit(args, data, lines):
    if args.json:
        print(json.dumps(certify.canonical(data), sort_keys=True, indent=2))
    else:
        print("\n".join(lines))


def cmd_invariants(args):
    params = _params(args)
    report = classify(params)
    hs = range(-1, params.k)
    deltas = {h: delta_h(params, h) for h in hs}
    dims = {h: dim_formulas(params, h) for h in hs}
    data = {"params": params, "regime": report,
            "delta": {str(h): v for h, v in deltas.items()},
            "dimensions": {str(h): v for h, v in dims.items()}}
    lines = [f"m={params.m} k={params.k} d={list(params.d)}",
             f"t = {report.t}",
             f"codim W = {report.w_codim}",
             f"expected Fano dim = {report.expected_fano_dim}",
             f"expected singular dim = {report.expected_sing_dim}",
             f"smooth possible = {report.smooth_possible}",
             f"dim S* = {dims[-1].dim_S_star}   dim J = {dims[-1].dim_J}"]
    for h in hs:
        lines.append(f"h={h:>2}  delta_h = {deltas[h]:>6}   dim G2_h = {dims[h].dim_G2h:>5}"
                     f"   dim T_h = {dims[h].dim_Th}")
    _emit(args, data, lines)
    return 0


def _trial(job):
    params, seed, p, q, primes, out = job
    certs = [certify.make_certificate("rigidity", params, p, seed),
             certify.make_certificate("fano", params, q, seed),
             certify.make_certificate("singular", params, primes[0], seed,
                                      {"primes": list(primes)})]
    if out is not None:
        for cert in certs:
            certify.write_certificate(
                cert, Path(out) / f"{cert.kind}-m{params.m}k{params.k}"
                f"d{'-'.join(map(str, params.d))}-s{seed}{certify.SUFFIX}")
    rig, fano, sing = (c.payload for c in certs)
    return {"seed": seed, "rank": rig["rank"], "is_rigid": rig["is_rigid"],
            "fano_count": fano["count"], "contains_standard": fano["contains_standard"],
            "sing_estimate": sing["estimate"], "sing_status": sing["status"],
            "sing_match": sing["match"]}


def cmd_verify(args):
    params = _params(args)
    report = classify(params)
    if report.t <= 0:
        raise RegimeError(
            f"t = {report.t} <= 0: every complete intersection contains k-planes "
            f"(expected Fano dimension {report.expected_fano_dim}); nothing to verify")
    plane_total = plane_count(params.m, params.k, args.q)
    if plane_total > args.cap:
        raise CapExceededError(f"{plane_total} planes over F_{args.q} exceed cap {args.cap}",
                               size=plane_total, cap=args.cap)
    out = args.out or os.environ.get(OUT_ENV)
    jobs = [(params, args.seed + n, args.p, args.q, tuple(args.primes), out)
            for n in range(args.trials)]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            rows = list(pool.map(_trial, jobs))
    else:
        rows = [_trial(job) for job in jobs]
    n = len(rows)
    rigid = sum(r["is_rigid"] for r in rows)
    unique = sum(r["fano_count"] == 1 for r in rows)
    std = sum(r["contains_standard"] for r in rows)
    matches = sum(r["sing_match"] for r in rows)
    summary = {"params": params, "regime": report, "seeds": [args.seed, args.seed + n - 1],
               "p": args.p, "q": args.q, "primes": list(args.primes), "trials": n,
               "rigid": rigid, "unique_plane": unique, "contains_standard": std,
               "sing_dim_matches": matches, "expected_sing_dim": report.expected_sing_dim,
               "rows": rows}
    lines = [f"{'seed':>6} {'rank':>5} {'rigid':>6} {'planes':>7} {'sing':>5}"]
    for r in rows:
        est = "?" if r["sing_estimate"] is None else r["sing_estimate"]
        lines.append(f"{r['seed']:>6} {r['rank']:>5} {str(r['is_rigid']):>6} "
                     f"{r['fano_count']:>7} {est!s:>5}")
    lines += [f"trials: {n}  (seeds {args.seed}..{args.seed + n - 1})",
              f"rigid (p={args.p}): {rigid}/{n} = {100 * rigid / n:.1f}%",
              f"unique plane (q={args.q}): {unique}/{n} = {100 * unique / n:.1f}%",
              f"standard plane found: {std}/{n}",
              f"singular dim estimate = {report.expected_sing_dim}: {matches}/{n}"]
    _emit(args, summary, lines)
    return 0


def cmd_lemma_scan(args):
    found = lemma_scan(args.m_max, args.s_max, args.d_max)
    data = {"counterexamples": [{"params": p, "h": h} for p, h in found]}
    lines = [f"{len(found)} counterexamples"]
    lines += [f"  m={p.m} k={p.k} d={list(p.d)} h={h}" for p, h in found]
    _emit(args, data, lines)
    return 0 if not found else 5


def cmd_detcheck(args):
    params = _params(args)
    rep = symbolic_det_leading(params, args.row_order)
    data = {"params": params, "row_order": args.row_order, "det_is_nonzero_poly": rep.det_is_nonzero_poly,
            "leading_coeff": rep.leading_coeff, "num_terms": rep.num_terms,
            "size": rep.size,
            "leading_monomial": [[list((h, i, list(mu))), e]
                                 for (h, i, mu), e in rep.leading_monomial]}
    mono = " * ".join(f"c[h={h},i={i},mu={mu}]^{e}" for (h, i, mu), e in rep.leading_monomial)
    if rep.det_is_nonzero_poly:
        lines = [f"det != 0 ({rep.size}x{rep.size}, {rep.num_terms} monomials), "
                 f"leading coeff {rep.leading_coeff:+d}", f"leading monomial: {mono}"]
    else:
        lines = ["det == 0 identically"]
    _emit(args, data, lines)
    return 0 if rep.det_is_nonzero_poly and abs(rep.leading_coeff) == 1 else 5


def cmd_enumerate(args):
    total = plane_count(args.m, args.k, args.q)
    if args.count_only:
        count = sum(1 for _ in enumerate_planes(args.m, args.k, args.q, args.cap))
        _emit(args, {"count": count, "expected": total}, [str(count)])
        return 0
    planes = [pl.to_json() for pl in enumerate_planes(args.m, args.k, args.q, args.cap)]
    lines = [" ".join("".join(map(str, row)) for row in pl) for pl in planes]
    _emit(args, {"count": len(planes), "planes": planes}, lines)
    return 0


def cmd_replay(args):
    bad = 0
    results = []
    for path in args.paths:
        res = certify.verify_certificate(path)
        results.append({"path": str(path), "valid": res.valid, "mismatches": res.mismatches})
        bad += not res.valid
    lines = [f"{'OK ' if r['valid'] else 'BAD'} {r['path']}"
             + ("" if r["valid"] else "  " + ", ".join(r["mismatches"][:10]))
             for r in results]
    _emit(args, {"results": results}, lines)
    if bad:
        raise VerificationError(f"{bad} certificate(s) failed replay")
    return 0


def _primes(text):
    return [int(x) for x in text.split(",") if x]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cifano", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def with_params(p):
        p.add_argument("-m", type=int, required=True, help="ambient dimension")
        p.add_argument("-k", type=int, required=True, help="plane dimension")
        p.add_argument("-d", type=int, action="append", help="degree (repeat for each equation)")
        return p

    def with_json(p):
        p.add_argument("--json", action="store_true", help="print JSON instead of a table")
        return p

    p = with_json(with_params(sub.add_parser("invariants", help="t, delta_h, dimensions")))
    p.set_defaults(func=cmd_invariants)

    p = with_json(with_params(sub.add_parser("verify", help="rigidity/Fano/singular batch")))
    p.add_argument("--q", type=int, default=7, help="enumeration field")
    p.add_argument("--p", type=int, default=1009, help="rank-certificate field")
    p.add_argument("--primes", type=_primes, default=list(DEFAULT_PRIMES))
    p.add_argument("--trials", type=int, default=50)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", help=f"certificate directory (default ${OUT_ENV})")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.set_defaults(func=cmd_verify)

    p = with_json(sub.add_parser("lemma-scan", help="search for delta_h <= 0 < t"))
    p.add_argument("--m-max", type=int, default=10)
    p.add_argument("--s-max", type=int, default=4)
    p.add_argument("--d-max", type=int, default=6)
    p.set_defaults(func=cmd_lemma_scan)

    p = with_json(with_params(sub.add_parser("detcheck", help="symbolic det of the leading block")))
    p.add_argument("--row-order", choices=ROW_ORDERS, default=ROW_ORDER)
    p.set_defaults(func=cmd_detcheck)

    p = with_json(sub.add_parser("enumerate", help="list k-planes of P^m(F_q)"))
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.set_defaults(func=cmd_enumerate)

    p = with_json(sub.add_parser("replay", help="re-derive certificates and compare"))
    p.add_argument("paths", nargs="+", type=Path)
    p.set_defaults(func=cmd_replay)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CifanoError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
