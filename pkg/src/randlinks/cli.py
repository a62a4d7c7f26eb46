"""Command-line harness: ``randlinks {exact,verify,simulate,converge}``."""

from __future__ import annotations

import argparse
import datetime as _dt
import json
import sys
from pathlib import Path

from randlinks import __version__, kernels
from randlinks.config import DEFAULT_CAPS, ENV_PREFIX
from randlinks.errors import ResourceLimitError
from randlinks.exact import (
    ERDOS_MIN_N,
    component_distribution,
    erdos_from_mode,
    expected_components_exact,
    format_rational,
    hammersley_from_mode,
    harmonic,
    iter_modes,
    most_expected_components,
    stirling_row,
)
from randlinks.partition import conjugacy_class_size, scan_max_class, verify_lemma
from randlinks.walk import (
    KINDS,
    MU_C,
    WalkConfig,
    _simulate,
    _to_empirical,
    convergence_curve,
    format_curve_csv,
    iter_walks,
    tv_distance_components,
)

SCHEMA = 1

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_CAP = 3
EXIT_IO = 4

EPILOG = f"""\
exit codes: 0 ok/pass, 1 verification failure, 2 usage error, 3 resource cap, 4 I/O error.
caps (override with environment variables): {", ".join(f"{ENV_PREFIX}{k}={v}" for k, v in DEFAULT_CAPS.items())}.
set RANDLINKS_DISABLE_NUMBA=1 to force the numpy kernels.
"""

# parameters that change how a run executes but not what it computes
_EXECUTION_ONLY = {"threads", "out", "dump_walks", "func", "command"}


class UsageError(Exception):
    pass


def manifest(args: argparse.Namespace, master_seed: int | None = None) -> dict:
    params = {k: v for k, v in sorted(vars(args).items()) if k not in _EXECUTION_ONLY}
    return {
        "command": args.command,
        "params": params,
        "master_seed": master_seed,
        "version": __version__,
        "timestamp": _dt.datetime.now(_dt.timezone.utc).isoformat(timespec="seconds"),
    }


def _emit(obj: dict) -> None:
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def _write(path: str, text: str) -> None:
    try:
        Path(path).write_text(text)
    except OSError as exc:
        raise _IOFailure(f"cannot write {path}: {exc}") from exc


class _IOFailure(Exception):
    pass


def _n_range(args) -> range:
    if args.n is not None:
        if args.start is not None or args.stop is not None:
            raise UsageError("use either --n or --from/--to")
        return range(args.n, args.n + 1)
    if args.start is None or args.stop is None:
        raise UsageError("give --n or both --from and --to")
    if args.stop < args.start:
        raise UsageError("--to must not be smaller than --from")
    return range(args.start, args.stop + 1)


# -- exact ---------------------------------------------------------------


def cmd_exact(args) -> int:
    n = args.n
    if n < 1:
        raise UsageError("--n must be positive")
    out = {"schema": SCHEMA, "manifest": manifest(args), "n": n, "what": args.what}
    if args.what == "stirling":
        out["values"] = [str(v) for v in stirling_row(n).values]
    elif args.what == "distribution":
        out["values"] = [format_rational(x) for x in component_distribution(n)]
    elif args.what == "mode":
        K, unique = most_expected_components(n)
        out.update(K=K, unique=unique)
    elif args.what == "harmonic":
        out["value"] = format_rational(harmonic(n))
    elif args.what == "expected":
        out["value"] = format_rational(expected_components_exact(n))
    _emit(out)
    return EXIT_OK


# -- verify --------------------------------------------------------------


def _verify_partition(ns):
    for n in ns:
        if n < 3:
            raise UsageError("partition verification needs n >= 3")
    results = []
    for n in ns:
        scan = scan_max_class(n)
        rec = conjugacy_class_size(scan.best)
        expected = (n - 1, 1)
        ok = scan.unique and scan.best.parts == expected and rec.probability.denominator == n - 1 \
            and rec.probability.numerator == 1
        results.append(
            {
                "n": n,
                "argmax": list(scan.best.parts),
                "class_size": str(rec.class_size),
                "probability": format_rational(rec.probability),
                "unique": scan.unique,
                "maximizers": [list(p.parts) for p in scan.maximizers],
                "pass": ok,
            }
        )
    return results


def _verify_lemma(ns):
    for n in ns:
        if not 3 <= n:
            raise UsageError("lemma verification needs 3 <= n")
    return [verify_lemma(n).to_json() for n in ns]


def _verify_erdos(ns):
    if ns.start < ERDOS_MIN_N:
        raise UsageError(f"erdos verification needs n >= {ERDOS_MIN_N}")
    results = []
    for n, K, unique in iter_modes(ns.start, ns.stop - 1):
        v = erdos_from_mode(n, K)
        shifted = erdos_from_mode(n, K - 1)
        results.append(
            {
                "n": n,
                "K": K,
                "unique": unique,
                "lower": v.lower,
                "upper": v.upper,
                "pass": v.passed,
                "strict_pass": v.strict_passed,
                # Hammersley's index: exponent of x in (x+1)...(x+n-1), i.e. K - 1
                "shifted_index": K - 1,
                "shifted_pass": shifted.passed,
            }
        )
    return results


def _verify_hammersley(ns):
    if ns.start < 3:
        raise UsageError("hammersley verification needs n >= 3")
    results = []
    for n, K, unique in iter_modes(ns.start, ns.stop - 1):
        est = hammersley_from_mode(n, K)
        shifted = hammersley_from_mode(n, K - 1)
        asserted = n >= ERDOS_MIN_N
        results.append(
            {
                "n": n,
                "K": K,
                "unique": unique,
                "h_low": est.h_low,
                "h_high": est.h_high,
                "h_mid": est.h_mid,
                "meets_bounds": est.meets_bounds,
                "asserted": asserted,
                "pass": est.meets_bounds or not asserted,
                "shifted_index": K - 1,
                "shifted_h_low": shifted.h_low,
                "shifted_h_high": shifted.h_high,
                "shifted_meets_bounds": shifted.meets_bounds,
            }
        )
    return results


_VERIFIERS = {
    "partition": _verify_partition,
    "lemma": _verify_lemma,
    "erdos": _verify_erdos,
    "hammersley": _verify_hammersley,
}


def cmd_verify(args) -> int:
    ns = _n_range(args)
    results = _VERIFIERS[args.target](ns)
    failed = [r["n"] for r in results if not r["pass"]]
    _emit(
        {
            "schema": SCHEMA,
            "manifest": manifest(args),
            "target": args.target,
            "results": results,
            "failed": failed,
            "pass": not failed,
        }
    )
    if failed:
        print(f"verify {args.target}: {len(failed)} of {len(results)} values of n FAILED", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


# -- simulate / converge -------------------------------------------------


def _config(args, k: int) -> WalkConfig:
    return WalkConfig(n=args.n, k=k, walks=args.walks, master_seed=args.seed, kind=args.dist)


def cmd_simulate(args) -> int:
    config = _config(args, args.k)
    tally = _simulate(config, threads=args.threads)
    emp = _to_empirical(config, tally)
    emp.check_invariants()
    tv = tv_distance_components(emp, component_distribution(config.n))
    summary = {
        "mean_components": emp.mean_components,
        "mode": emp.mode,
        "type_mode": list(emp.type_mode.parts),
        "tv_components": tv,
    }
    payload = {"schema": SCHEMA, "manifest": manifest(args, config.master_seed), **emp.to_json(), "summary": summary}
    if args.dump_walks:
        if config.kind != MU_C:
            raise UsageError("--dump-walks needs --dist mu_c")
        _write(args.dump_walks, "".join(json.dumps(w.to_json()) + "\n" for w in iter_walks(config)))
    if args.out:
        _write(args.out, json.dumps(payload, indent=2) + "\n")
        _emit({"schema": SCHEMA, "out": args.out, **summary})
    else:
        _emit(payload)
    print(
        f"n={config.n} k={config.k} walks={config.walks}: mean={emp.mean_components:.4f} "
        f"mode={emp.mode} tv={tv:.4g} [{kernels.BACKEND}]",
        file=sys.stderr,
    )
    return EXIT_OK


def _parse_steps(text: str) -> list[int]:
    try:
        steps = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"--steps must be a comma-separated list of integers, got {text!r}") from None
    if not steps:
        raise UsageError("--steps is empty")
    return steps


def cmd_converge(args) -> int:
    steps = _parse_steps(args.steps)
    config = _config(args, max(steps))
    rows = convergence_curve(config, steps, threads=args.threads)
    csv_text = format_curve_csv(rows)
    man = manifest(args, config.master_seed)
    if args.out:
        _write(args.out, csv_text)
        _write(args.out + ".manifest.json", json.dumps({"schema": SCHEMA, "manifest": man}, indent=2) + "\n")
    else:
        sys.stdout.write(csv_text)
        print(json.dumps({"schema": SCHEMA, "manifest": man}), file=sys.stderr)
    return EXIT_OK


# -- parser --------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="randlinks",
        description="Component counts and strand partitions of random braid closures.",
        epilog=EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("exact", help="exact Stirling rows, distributions, modes and H_n", epilog=EPILOG)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--what", choices=["stirling", "distribution", "mode", "harmonic", "expected"], required=True)
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("verify", help="check a claim over a range of n; exit 1 on any failure", epilog=EPILOG)
    p.add_argument("--target", choices=sorted(_VERIFIERS), required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--from", dest="start", type=int)
    p.add_argument("--to", dest="stop", type=int)
    p.set_defaults(func=cmd_verify)

    def walk_args(p):
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--walks", type=int, required=True)
        p.add_argument("--seed", type=int, required=True)
        p.add_argument("--dist", choices=KINDS, default=MU_C)
        p.add_argument("--out")
        p.add_argument("--threads", type=int, default=1)

    p = sub.add_parser("simulate", help="Monte Carlo histogram of closures of k-step walks", epilog=EPILOG)
    walk_args(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--dump-walks", help="also write every trajectory as JSON lines (mu_c only)")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("converge", help="CSV convergence table over a list of step counts", epilog=EPILOG)
    walk_args(p)
    p.add_argument("--steps", required=True, help="comma-separated step counts, e.g. 0,1,2,5,10,50")
    p.set_defaults(func=cmd_converge)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ResourceLimitError as exc:
        print(f"randlinks: {exc}", file=sys.stderr)
        return EXIT_CAP
    except _IOFailure as exc:
        print(f"randlinks: {exc}", file=sys.stderr)
        return EXIT_IO
    except (UsageError, ValueError, IndexError) as exc:
        print(f"randlinks: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
