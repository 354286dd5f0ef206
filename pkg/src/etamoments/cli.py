"""Command-line entry point for the verification workflows.

Commands::

    sieve-cache     build/refresh the prime-table cache file for --x-limit
    verify-lemma1   zeta-side closed form vs truncated eta+delta integrals
    verify-residue  residue drift of (s - 1/2) * Delta(s) toward 1
    theorem-scan    lambda_n convergence report (CSV/JSON rows)
    cross-validate  contour-derivative route vs integral route, n <= 10
    dump-steps      serialize theta/psi/delta as "abscissa,cumulative_value"

Exit codes: 0 PASS, 1 FAIL (checks ran, criterion missed), 2 IO error,
3 precondition violation, 4 disk validation failure.

Reports embed run metadata (flags, sieve limit, precision tier, wall time);
CSV and JSON emissions of the same run carry identical numeric values.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

from . import __version__
from .chebyshev import build_delta, build_psi, build_theta
from .closedform import delta_closed, e_derivs_closed
from .convergence import scan_convergence, validate_disk
from .errors import (
    DiskValidationError,
    DomainError,
    EtamomentsError,
    InvalidArgumentError,
    PoleError,
)
from .mellin import delta_n_integral, e_n_integral, eta_moments_scan
from .primes import cache_path, load_primes, mangoldt_jumps, read_prime_cache, write_prime_cache
from .zeta import lemma1_lhs

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_IO = 2
EXIT_PRECONDITION = 3
EXIT_DISK = 4

THEOREM_SCAN_HEADER = "n,e_re,e_im,target_re,target_im,lambda,ratio_re,ratio_im,noise"


@dataclass
class RunConfig:
    command: str
    s0: complex = 3.0 + 0.0j
    h: float = 2.55
    x_limit: int = 10**6
    n_max: int = 80
    radius: float = 2.2
    samples: int = 512
    precision: str = "double"
    cache_dir: Path = Path("cache")
    format: str = "csv"
    out: Path | None = None
    function: str = "theta"
    extra_flags: dict = field(default_factory=dict)


def parse_s0(text: str) -> complex:
    """Parse "re" or "re,im" into a complex number."""
    parts = text.split(",")
    if len(parts) == 1:
        return complex(float(parts[0]), 0.0)
    if len(parts) == 2:
        return complex(float(parts[0]), float(parts[1]))
    raise InvalidArgumentError(f"cannot parse complex s0 from {text!r}")


def _fmt(x: float) -> str:
    return repr(float(x))


def _metadata(cfg: RunConfig, started: float, sieve_limit: int | None) -> dict:
    return {
        "tool": f"etamoments {__version__}",
        "command": cfg.command,
        "s0": [cfg.s0.real, cfg.s0.imag],
        "h": cfg.h,
        "x_limit": cfg.x_limit,
        "n_max": cfg.n_max,
        "radius": cfg.radius,
        "samples": cfg.samples,
        "precision": cfg.precision,
        "sieve_limit": sieve_limit,
        "wall_time_s": time.perf_counter() - started,
    }


def _emit(cfg: RunConfig, payload: dict, csv_lines: list[str]) -> None:
    """Write the report as JSON or commented CSV to --out or stdout."""
    if cfg.format == "json":
        text = json.dumps(payload, indent=2, default=float)
    else:
        meta = payload["metadata"]
        header = [f"# {k}={v}" for k, v in meta.items()]
        text = "\n".join(header + csv_lines)
    if cfg.out is None:
        print(text)
    else:
        Path(cfg.out).write_text(text + "\n")


def _step_functions(cfg: RunConfig):
    table = load_primes(cfg.x_limit, cfg.cache_dir if cfg.cache_dir.exists() else None)
    theta = build_theta(table)
    psi = build_psi(mangoldt_jumps(cfg.x_limit), cfg.x_limit)
    delta = build_delta(psi, theta)
    return table, theta, psi, delta


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def cmd_sieve_cache(cfg: RunConfig) -> int:
    """Write the prime cache file for x_limit; idempotent."""
    try:
        try:
            read_prime_cache(cfg.x_limit, cfg.cache_dir)
            print(f"cache hit: {cache_path(cfg.cache_dir, cfg.x_limit)}")
            return EXIT_PASS
        except EtamomentsError:
            pass
        table = load_primes(cfg.x_limit)
        path = write_prime_cache(table, cfg.cache_dir)
    except OSError as exc:
        print(f"IO error: {exc}", file=sys.stderr)
        return EXIT_IO
    print(f"wrote {path} ({len(table)} primes <= {cfg.x_limit})")
    return EXIT_PASS


def cmd_verify_lemma1(cfg: RunConfig) -> int:
    """Residual of the closed form against truncated integrals, with tail budget."""
    started = time.perf_counter()
    if cfg.s0.real <= 1.0:
        print(f"precondition: integral route needs Re(s0) > 1, got {cfg.s0.real}",
              file=sys.stderr)
        return EXIT_PRECONDITION
    _, theta, _, delta = _step_functions(cfg)
    X = float(cfg.x_limit)
    lhs = lemma1_lhs(cfg.s0)
    emom = e_n_integral(theta, 0, cfg.s0, X)
    dmom = delta_n_integral(delta, 0, cfg.s0, X)
    rhs = emom.value + dmom.value
    residual = abs(lhs - rhs)
    # doubled because the empirical envelopes are measured on a finite sample
    budget = 2.0 * (emom.tail_empirical + dmom.tail_empirical) + 1e-12
    passed = residual <= budget
    payload = {
        "command": cfg.command,
        "metadata": _metadata(cfg, started, cfg.x_limit),
        "lhs": [lhs.real, lhs.imag],
        "rhs": [rhs.real, rhs.imag],
        "residual": residual,
        "budget": budget,
        "pass": passed,
    }
    csv_lines = [
        "lhs_re,lhs_im,rhs_re,rhs_im,residual,budget,pass",
        ",".join([_fmt(lhs.real), _fmt(lhs.imag), _fmt(rhs.real), _fmt(rhs.imag),
                  _fmt(residual), _fmt(budget), str(passed)]),
    ]
    _emit(cfg, payload, csv_lines)
    print(f"lemma1 identity at s0={cfg.s0}: residual {residual:.3e} "
          f"budget {budget:.3e} -> {'PASS' if passed else 'FAIL'}")
    return EXIT_PASS if passed else EXIT_FAIL


RESIDUE_PROBES = (0.60, 0.55, 0.52)


def cmd_residue(cfg: RunConfig) -> int:
    """Drift of g(s) = (s - 1/2) Delta(s) toward the unit residue at s = 1/2."""
    started = time.perf_counter()
    rows = []
    for s in RESIDUE_PROBES:
        g = (s - 0.5) * delta_closed(s)
        rows.append((s, g))
    drifts = [abs(g - 1.0) for _, g in rows]
    monotone = all(a > b for a, b in zip(drifts, drifts[1:]))
    passed = monotone and drifts[-1] < 0.2
    payload = {
        "command": cfg.command,
        "metadata": _metadata(cfg, started, None),
        "rows": [{"s": s, "g_re": g.real, "g_im": g.imag, "drift": abs(g - 1.0)}
                 for s, g in rows],
        "monotone": monotone,
        "pass": passed,
    }
    csv_lines = ["s,g_re,g_im,drift"]
    for s, g in rows:
        csv_lines.append(",".join([_fmt(s), _fmt(g.real), _fmt(g.imag), _fmt(abs(g - 1.0))]))
    _emit(cfg, payload, csv_lines)
    print(f"residue drift {['%.4f' % d for d in drifts]} monotone={monotone} "
          f"-> {'PASS' if passed else 'FAIL'}")
    return EXIT_PASS if passed else EXIT_FAIL


def cmd_theorem_scan(cfg: RunConfig) -> int:
    """Convergence report rows for n = 0..n_max at the configured disk."""
    started = time.perf_counter()
    disk = validate_disk(cfg.s0, cfg.h)
    report = scan_convergence(
        disk, cfg.n_max, cfg.radius, cfg.samples,
        route="closed", accumulation=cfg.precision,
    )
    rate = report.fitted_rate
    payload = {
        "command": cfg.command,
        "metadata": _metadata(cfg, started, None),
        "fitted_rate": None if math.isnan(rate) else rate,
        "trusted_nmax": report.trusted_nmax,
        "failures": report.failures,
        "pass": report.passed,
        "rows": [
            {
                "n": r.n,
                "e_re": r.e_n.real, "e_im": r.e_n.imag,
                "target_re": r.target.real, "target_im": r.target.imag,
                "lambda": r.lam,
                "ratio_re": r.ratio.real, "ratio_im": r.ratio.imag,
                "noise": r.noise,
            }
            for r in report.rows
        ],
    }
    csv_lines = [THEOREM_SCAN_HEADER]
    for r in report.rows:
        csv_lines.append(",".join([
            str(r.n), _fmt(r.e_n.real), _fmt(r.e_n.imag),
            _fmt(r.target.real), _fmt(r.target.imag), _fmt(r.lam),
            _fmt(r.ratio.real), _fmt(r.ratio.imag), _fmt(r.noise),
        ]))
    _emit(cfg, payload, csv_lines)
    print(f"theorem scan: fitted_rate={report.fitted_rate:.4f} "
          f"trusted_nmax={report.trusted_nmax} -> "
          f"{'PASS' if report.passed else 'FAIL ' + ','.join(report.failures)}")
    return EXIT_PASS if report.passed else EXIT_FAIL


def cmd_cross_validate(cfg: RunConfig) -> int:
    """Contour-derivative route vs integral route for n <= min(n_max, 10)."""
    started = time.perf_counter()
    if cfg.s0.real <= 1.0:
        print(f"precondition: integral route needs Re(s0) > 1, got {cfg.s0.real}",
              file=sys.stderr)
        return EXIT_PRECONDITION
    _, theta, _, _ = _step_functions(cfg)
    nmax = min(cfg.n_max, 10)
    moments = eta_moments_scan(theta, nmax, cfg.s0, float(cfg.x_limit))
    values, noise = e_derivs_closed(
        cfg.s0, nmax, cfg.radius, cfg.samples, accumulation=cfg.precision
    )
    rows, all_ok = [], True
    for n in range(nmax + 1):
        ei, ec = moments[n].value, complex(values[n])
        gap = float(abs(ei - ec))
        rel_gap = gap / abs(ec) if ec != 0 else float("inf")
        rel_budget = float(moments[n].tail_empirical + noise[n]) / abs(ec) if ec != 0 else float("inf")
        ok = rel_gap <= 1e-5 + rel_budget
        all_ok = all_ok and ok
        rows.append((n, ei, ec, gap, rel_gap, rel_budget, ok))
        if rel_budget > 1e-4:  # the comparison is budget-limited, not tolerance-limited
            print(f"warning: integral tail budget dominates at n={n} "
                  f"(relative budget {rel_budget:.2e})", file=sys.stderr)
    payload = {
        "command": cfg.command,
        "metadata": _metadata(cfg, started, cfg.x_limit),
        "pass": all_ok,
        "rows": [
            {"n": n, "e_integral_re": ei.real, "e_integral_im": ei.imag,
             "e_closed_re": ec.real, "e_closed_im": ec.imag,
             "gap": gap, "rel_gap": rg, "rel_budget": rb, "pass": ok}
            for n, ei, ec, gap, rg, rb, ok in rows
        ],
    }
    csv_lines = ["n,e_integral_re,e_integral_im,e_closed_re,e_closed_im,gap,rel_gap,rel_budget,pass"]
    for n, ei, ec, gap, rg, rb, ok in rows:
        csv_lines.append(",".join([
            str(n), _fmt(ei.real), _fmt(ei.imag), _fmt(ec.real), _fmt(ec.imag),
            _fmt(gap), _fmt(rg), _fmt(rb), str(ok),
        ]))
    _emit(cfg, payload, csv_lines)
    print(f"cross-validate n<=({nmax}): {'PASS' if all_ok else 'FAIL'}")
    return EXIT_PASS if all_ok else EXIT_FAIL


def cmd_dump_steps(cfg: RunConfig) -> int:
    """Serialize one step function as CSV "abscissa,cumulative_value"."""
    _, theta, psi, delta = _step_functions(cfg)
    f = {"theta": theta, "psi": psi, "delta": delta}[cfg.function]
    lines = ["abscissa,cumulative_value"]
    for x, v in zip(f.abscissas, f.cumulative):
        lines.append(f"{int(x)},{_fmt(v)}")
    text = "\n".join(lines)
    if cfg.out is None:
        print(text)
    else:
        Path(cfg.out).write_text(text + "\n")
    return EXIT_PASS


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

_COMMANDS = {
    "sieve-cache": cmd_sieve_cache,
    "verify-lemma1": cmd_verify_lemma1,
    "verify-residue": cmd_residue,
    "theorem-scan": cmd_theorem_scan,
    "cross-validate": cmd_cross_validate,
    "dump-steps": cmd_dump_steps,
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="etamoments", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)
    for name in _COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--s0", type=str, default="3",
                       help='complex center as "re" or "re,im"')
        p.add_argument("--h", type=float, default=2.55, help="disk radius")
        p.add_argument("--x-limit", type=int, default=10**6, help="sieve/truncation limit")
        p.add_argument("--n-max", type=int, default=80 if name == "theorem-scan" else 10)
        p.add_argument("--radius", type=float, default=2.2, help="sampling contour radius")
        p.add_argument("--samples", type=int, default=512,
                       help="contour sample count (power of two)")
        p.add_argument("--precision", choices=["double", "double-double"], default="double")
        p.add_argument("--cache-dir", type=Path, default=Path("cache"))
        p.add_argument("--format", choices=["csv", "json"], default="csv")
        p.add_argument("--out", type=Path, default=None)
        if name == "dump-steps":
            p.add_argument("--function", choices=["theta", "psi", "delta"], default="theta")
    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    s0 = parse_s0(args.s0)
    if args.x_limit < 2:
        raise InvalidArgumentError(f"--x-limit must be >= 2, got {args.x_limit}")
    if args.n_max < 0:
        raise InvalidArgumentError(f"--n-max must be >= 0, got {args.n_max}")
    if args.samples < 4 or args.samples & (args.samples - 1):
        raise InvalidArgumentError(f"--samples must be a power of two >= 4, got {args.samples}")
    if args.radius <= 0 or args.h <= 0:
        raise InvalidArgumentError("--radius and --h must be positive")
    return RunConfig(
        command=args.command,
        s0=s0,
        h=args.h,
        x_limit=args.x_limit,
        n_max=args.n_max,
        radius=args.radius,
        samples=args.samples,
        precision=args.precision,
        cache_dir=args.cache_dir,
        format=args.format,
        out=args.out,
        function=getattr(args, "function", "theta"),
    )


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        cfg = _config_from_args(args)
        return _COMMANDS[args.command](cfg)
    except DiskValidationError as exc:
        print(f"disk validation failed: {exc.condition}: {exc}", file=sys.stderr)
        return EXIT_DISK
    except (DomainError, PoleError, InvalidArgumentError) as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except OSError as exc:
        print(f"IO error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
