"""Benchmark command line.

Three subcommands drive the library end to end:

``urv bench``
    generate (or load) a matrix, factor it, and write the per-rank
    error/reveal profile as CSV plus a JSON run manifest
``urv lemma``
    print the PowerURV/RSVD projector discrepancy for one configuration
``urv timing``
    median wall-clock times of the factorization kernels over a size
    sweep (informational; never part of acceptance gating)

Exit codes: 0 success, 1 invalid arguments, 2 numerical failure.

Every CSV is accompanied by a manifest carrying the matrix spec, the
algorithm parameters, the seed, and the library version: that tuple is
enough to reproduce the CSV bit for bit (timing files excepted).
"""

from __future__ import annotations

import argparse
import json
import sys
import time

import numpy as np

from . import __version__
from .core import cpqr, householder_qr
from .diagnostics import (
    error_profile,
    lemma_check,
    reference_singular_values,
    reveal_profile,
    write_profile_csv,
)
from .factorizations import (
    Provenance,
    RankCollapseError,
    UrvFactorization,
    ddh_urv,
    power_urv,
    qlp,
    rsvd,
)
from .io import load_matrix
from .matrices import (
    DEFAULT_BIE_N,
    DEFAULT_KAHAN_N,
    DEFAULT_KAHAN_THETA,
    DEFAULT_M,
    DEFAULT_N,
    MatrixSpec,
    from_spec,
)
from .random import RngSeed, gaussian_matrix

ALGORITHMS = ("ddh", "powerurv", "qlp", "rsvd", "cpqr")
TIMING_ALGS = ("qr", "cpqr", "ddh", "powerurv", "qlp")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with code 2 on bad flags; the CLI contract reserves
    # 2 for numerical failures, so reroute to exit code 1.
    def error(self, message):
        raise UsageError(message)


def _build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="urv", description="Rank-revealing URV factorization benchmarks")
    sub = p.add_subparsers(dest="command", required=True)

    def add_matrix_flags(sp):
        sp.add_argument("--matrix", required=True,
                        help="fast|slow|sshape|bie|kahan or file:<path>")
        sp.add_argument("--m", type=int, default=None, help="row count override")
        sp.add_argument("--n", type=int, default=None, help="column count override")
        sp.add_argument("--seed", type=int, default=0, help="base seed (u64)")
        sp.add_argument("--literal-decay", action="store_true",
                        help="use the literal fast-decay diagonal (underflows past k=17)")
        sp.add_argument("--theta", type=float, default=DEFAULT_KAHAN_THETA,
                        help="kahan matrix angle")

    b = sub.add_parser("bench", help="factor a matrix and write profile CSV + manifest")
    add_matrix_flags(b)
    b.add_argument("--alg", required=True, choices=ALGORITHMS)
    b.add_argument("--q", type=int, default=1, help="power iteration steps")
    b.add_argument("--no-reorth", action="store_true",
                   help="skip reorthonormalization between power steps")
    b.add_argument("--ell", type=int, default=None, help="rsvd sample size")
    b.add_argument("--out", default=None, help="output CSV path")

    l = sub.add_parser("lemma", help="PowerURV/RSVD projector discrepancy")
    add_matrix_flags(l)
    l.add_argument("--ell", type=int, required=True)
    l.add_argument("--q", type=int, default=1)
    l.add_argument("--no-reorth", action="store_true")

    t = sub.add_parser("timing", help="wall-clock sweep of the kernels")
    t.add_argument("--sizes", default="256,512", help="comma-separated n values")
    t.add_argument("--reps", type=int, default=3)
    t.add_argument("--algs", default="qr,cpqr",
                   help=f"comma-separated from {','.join(TIMING_ALGS)}")
    t.add_argument("--q", type=int, default=1)
    t.add_argument("--seed", type=int, default=0)
    t.add_argument("--out", default="timing.csv")
    return p


def _resolve_matrix(args):
    """Build (spec, matrix) from CLI flags; spec is None for file input."""
    name = args.matrix
    if name.startswith("file:"):
        return None, load_matrix(name[len("file:"):])
    if name in ("fast", "slow", "sshape"):
        m = args.m if args.m is not None else DEFAULT_M
        n = args.n if args.n is not None else DEFAULT_N
        params = {}
        if name == "fast" and args.literal_decay:
            params["literal"] = True
        spec = MatrixSpec(name, m, n, RngSeed(args.seed), params)
    elif name == "bie":
        n = args.n if args.n is not None else DEFAULT_BIE_N
        spec = MatrixSpec("bie", n, n, RngSeed(args.seed))
    elif name == "kahan":
        n = args.n if args.n is not None else DEFAULT_KAHAN_N
        spec = MatrixSpec("kahan", n, n, RngSeed(args.seed), {"theta": args.theta})
    else:
        raise UsageError(f"unknown matrix {name!r}")
    a, _ = from_spec(spec)
    return spec, a


def _cpqr_as_urv(a) -> UrvFactorization:
    res = cpqr(a)
    n = a.shape[1]
    v = np.eye(n)[:, res.perm]
    return UrvFactorization(res.q, res.r, v, Provenance("cpqr", seed=None))


def _run_bench(args) -> int:
    spec, a = _resolve_matrix(args)
    reorth = not args.no_reorth
    seed = RngSeed(args.seed)
    t0 = time.perf_counter()
    if args.alg == "ddh":
        fac = ddh_urv(a, seed)
    elif args.alg == "powerurv":
        fac = power_urv(a, q=args.q, reorth=reorth, seed=seed)
    elif args.alg == "qlp":
        fac = qlp(a)
    elif args.alg == "cpqr":
        fac = _cpqr_as_urv(a)
    else:
        if args.ell is None:
            raise UsageError("--alg rsvd requires --ell")
        fac = rsvd(a, args.ell, q=args.q, reorth=reorth, seed=seed)
    wall = time.perf_counter() - t0

    sigma_ref = reference_singular_values(a)
    err = error_profile(a, fac, sigma_ref)
    rev = reveal_profile(fac, sigma_ref=sigma_ref)
    out = args.out or f"{args.matrix.replace(':', '_')}_{args.alg}.csv"
    write_profile_csv(out, err, rev)

    manifest = {
        "spec": json.loads(spec.to_json()) if spec else {"file": args.matrix},
        "algorithm": {
            "name": args.alg,
            "q": args.q if args.alg in ("powerurv", "rsvd") else None,
            "reorth": reorth if args.alg in ("powerurv", "rsvd") else None,
            "ell": args.ell if args.alg == "rsvd" else None,
        },
        "seed": {"seed": seed.seed, "stream": seed.stream},
        "streams": {
            "matrix_u": list(seed.spawn(1)),
            "matrix_v": list(seed.spawn(2)),
            "sketch": list(seed),
        },
        "wall_time_s": wall,
        "library_version": __version__,
        "outputs": [str(out)],
    }
    warnings = getattr(fac.provenance, "warnings", ())
    if warnings:
        manifest["warnings"] = list(warnings)
        print("\n".join(warnings), file=sys.stderr)
    manifest_path = str(out).rsplit(".", 1)[0] + ".json"
    with open(manifest_path, "w") as fh:
        json.dump(manifest, fh, indent=2, sort_keys=True)
        fh.write("\n")
    print(f"wrote {out} and {manifest_path} ({wall:.3f}s)")
    return 0


def _run_lemma(args) -> int:
    spec, a = _resolve_matrix(args)
    d = lemma_check(a, args.ell, q=args.q, seed=RngSeed(args.seed),
                    reorth=not args.no_reorth)
    print(f"lemma discrepancy: {d:.17g}")
    return 0


def _timing_once(alg, a, q, seed):
    if alg == "qr":
        householder_qr(a)
    elif alg == "cpqr":
        cpqr(a)
    elif alg == "ddh":
        ddh_urv(a, seed)
    elif alg == "powerurv":
        power_urv(a, q=q, seed=seed)
    elif alg == "qlp":
        qlp(a)
    else:
        raise UsageError(f"unknown timing algorithm {alg!r}")


def _run_timing(args) -> int:
    try:
        sizes = [int(s) for s in args.sizes.split(",") if s]
    except ValueError as exc:
        raise UsageError(f"bad --sizes: {exc}") from exc
    algs = [s.strip() for s in args.algs.split(",") if s.strip()]
    for alg in algs:
        if alg not in TIMING_ALGS:
            raise UsageError(f"unknown timing algorithm {alg!r}")
    rows = []
    for n in sizes:
        a = gaussian_matrix(n, n, RngSeed(args.seed))
        for alg in algs:
            times = []
            for _ in range(max(1, args.reps)):
                t0 = time.perf_counter()
                _timing_once(alg, a, args.q, RngSeed(args.seed))
                times.append(time.perf_counter() - t0)
            med = float(np.median(times))
            rows.append((alg, n, med))
            print(f"{alg:10s} n={n:6d} median {med:.4f}s over {args.reps} reps")
    with open(args.out, "w", newline="\n") as fh:
        fh.write("alg,n,median_seconds,reps\n")
        for alg, n, med in rows:
            fh.write(f"{alg},{n},{med:.17g},{args.reps}\n")
    print(f"wrote {args.out}")
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "bench":
            return _run_bench(args)
        if args.command == "lemma":
            return _run_lemma(args)
        return _run_timing(args)
    except UsageError as exc:
        print(f"urv: error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"urv: error: {exc}", file=sys.stderr)
        return 1
    except (RankCollapseError, np.linalg.LinAlgError) as exc:
        print(f"urv: numerical failure: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
