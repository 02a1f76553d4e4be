"""Command-line front end: spectral data and certificates as JSON/CSV.

Exit codes: 0 on success with all checks passing, 1 when a requested check
fails (a JSON report of the failing margins is emitted), 2 on usage or
input errors.
"""
from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from dataclasses import dataclass, field

import numpy as np

from .majorization import check_majorization, convex_report, matrix_A, matrix_B, matrix_C
from .orthopoly import DEFAULT_SEED, gauss_quadrature, gauss_rule
from .recurrence import Family, RecurrenceScheme, classical_scheme, from_sequences
from .spectra import scheme_spectral
from .verification import Tolerances, verify_scheme

__all__ = ["RunConfig", "UsageError", "run", "load_custom_scheme", "main"]

FAMILY_CHOICES = [f.value for f in Family if f is not Family.CUSTOM]
CONVEX_TAGS = ("square", "abs", "exp")


class UsageError(ValueError):
    """Invalid flag combination or malformed input file (exit code 2)."""


@dataclass
class RunConfig:
    """Validated invocation: one command plus its source scheme and knobs."""

    command: str
    family: str | None = None
    custom_path: str | None = None
    alpha: float | None = None
    beta: float | None = None
    n: int | None = None
    n_max: int | None = None
    theorem: str | None = None
    k: int | None = None
    route: str = "eigvec"
    degree: int | None = None
    coeffs: tuple[float, ...] | None = None
    fmt: str = "json"
    out: str | None = None
    tol: float = 1e-10
    tol_stochastic: float | None = None
    tol_relation: float | None = None
    seed: int | None = None
    extras: dict = field(default_factory=dict)


def load_custom_scheme(path: str) -> RecurrenceScheme:
    """Read a custom scheme from a UTF-8 JSON file with keys "a" and "b"."""
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed JSON in {path}: {exc}") from exc
    if not isinstance(data, dict) or "a" not in data or "b" not in data:
        raise UsageError(f'{path}: expected a JSON object with keys "a" and "b"')
    a, b = data["a"], data["b"]
    if not isinstance(a, list) or not isinstance(b, list) or not all(
        isinstance(v, (int, float)) and not isinstance(v, bool) for v in a + b
    ):
        raise UsageError(f'{path}: "a" and "b" must be arrays of numbers')
    try:
        return from_sequences(a, b)
    except ValueError as exc:
        raise UsageError(f"{path}: {exc}") from exc


def _build_scheme(config: RunConfig, depth: int) -> tuple[RecurrenceScheme, str, dict]:
    """Resolve the scheme plus (family tag, params metadata) for outputs."""
    if config.custom_path is not None:
        scheme = load_custom_scheme(config.custom_path)
        if depth > scheme.max_index + 1:
            raise UsageError(
                f"custom scheme depth {scheme.max_index} supports orders up to "
                f"{scheme.max_index + 1}; requested {depth}"
            )
        return scheme, "custom", {"source_file": config.custom_path}
    family = Family(config.family)
    params: dict = {}
    if family is Family.JACOBI:
        if config.alpha is None or config.beta is None:
            raise UsageError("jacobi requires --alpha and --beta")
        params = {"alpha": config.alpha, "beta": config.beta}
    elif family is Family.LAGUERRE:
        alpha = 0.0 if config.alpha is None else config.alpha
        params = {"alpha": alpha}
    elif config.alpha is not None or config.beta is not None:
        raise UsageError(f"{family.value} takes no shape parameters")
    try:
        scheme = classical_scheme(
            family, max(depth, 1), alpha=config.alpha, beta=config.beta
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    return scheme, family.value, params


def _emit(text: str, out: str | None):
    if out is None:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _matrix_csv(entries: np.ndarray) -> str:
    import io

    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow([f"j={j}" for j in range(1, entries.shape[1] + 1)])
    for row in entries:
        writer.writerow([repr(float(v)) for v in row])
    return buf.getvalue()


def _row_csv(header: list[str], rows: list[list[float]]) -> str:
    import io

    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(header)
    for row in rows:
        writer.writerow([repr(float(v)) for v in row])
    return buf.getvalue()


def _cmd_matrix(config: RunConfig) -> int:
    if config.theorem == "C":
        if config.k is None:
            raise UsageError("--k is required for theorem C")
        if not 1 <= config.k <= config.n:
            raise UsageError(f"--k must satisfy 1 <= k <= n = {config.n}")
    elif config.k is not None:
        raise UsageError("--k is only valid with --theorem C")
    depth = config.n + 1 if config.route == "literal" else config.n
    scheme, family, params = _build_scheme(config, depth)
    if config.theorem == "A":
        result = matrix_A(scheme, config.n, route=config.route)
    elif config.theorem == "B":
        result = matrix_B(scheme, config.n, route=config.route)
    else:
        result = matrix_C(scheme, config.n, config.k, route=config.route)
    tol_stoch = config.tol_stochastic if config.tol_stochastic is not None else config.tol
    tol_rel = config.tol_relation if config.tol_relation is not None else 1e-9
    diameter = max(float(result.source[-1] - result.source[0]), 1.0)
    cert = check_majorization(result.target, result.source, config.tol)
    payload = {
        "theorem": result.theorem,
        "family": family,
        "params": params,
        "n": result.n,
        "k": result.k,
        "source_zeros": [float(v) for v in result.source],
        "target": [float(v) for v in result.target],
        "matrix": [[float(v) for v in row] for row in result.entries],
        "row_sum_max_err": result.row_sum_err,
        "col_sum_max_err": result.col_sum_err,
        "relation_max_err": result.relation_err,
        "majorization": {"holds": cert.holds, "min_margin": cert.min_margin},
        "convex": [
            {"f": f, "margin": convex_report(result, f).margin} for f in CONVEX_TAGS
        ],
    }
    if config.fmt == "csv":
        _emit(_matrix_csv(result.entries), config.out)
    else:
        _emit(json.dumps(payload, indent=2), config.out)
    failures = []
    if result.row_sum_err > tol_stoch or result.col_sum_err > tol_stoch:
        failures.append({"case": "stochasticity", "metric": max(result.row_sum_err, result.col_sum_err), "limit": tol_stoch})
    if float(result.entries.min()) < -tol_stoch:
        failures.append({"case": "nonnegativity", "metric": float(result.entries.min()), "limit": -tol_stoch})
    if result.relation_err > tol_rel * diameter:
        failures.append({"case": "relation", "metric": result.relation_err, "limit": tol_rel * diameter})
    if not cert.holds:
        failures.append({"case": "majorization", "metric": cert.min_margin, "limit": -config.tol})
    if failures:
        sys.stderr.write(json.dumps({"failures": failures}, indent=2) + "\n")
        return 1
    return 0


def _cmd_zeros(config: RunConfig) -> int:
    scheme, family, params = _build_scheme(config, config.n)
    zeros = scheme_spectral(scheme, config.n).eigenvalues
    if config.fmt == "csv":
        header = [f"j={j}" for j in range(1, config.n + 1)]
        _emit(_row_csv(header, [list(zeros)]), config.out)
    else:
        payload = {
            "family": family,
            "params": params,
            "n": config.n,
            "zeros": [float(v) for v in zeros],
        }
        _emit(json.dumps(payload, indent=2), config.out)
    return 0


def _cmd_weights(config: RunConfig) -> int:
    scheme, family, params = _build_scheme(config, config.n)
    rule = gauss_rule(scheme, config.n)
    if config.fmt == "csv":
        header = [f"j={j}" for j in range(1, config.n + 1)]
        _emit(_row_csv(header, [list(rule.nodes), list(rule.weights)]), config.out)
    else:
        payload = {
            "family": family,
            "params": params,
            "n": config.n,
            "nodes": [float(v) for v in rule.nodes],
            "weights": [float(v) for v in rule.weights],
        }
        _emit(json.dumps(payload, indent=2), config.out)
    return 0


def _cmd_quad(config: RunConfig) -> int:
    if (config.degree is None) == (config.coeffs is None):
        raise UsageError("quad needs exactly one of --degree or --coeffs")
    scheme, family, params = _build_scheme(config, config.n)
    rule = gauss_rule(scheme, config.n)
    if config.degree is not None:
        if config.degree < 0:
            raise UsageError("--degree must be nonnegative")
        value = gauss_quadrature(rule, lambda x: x**config.degree)
        integrand = {"degree": config.degree}
    else:
        coeffs = np.asarray(config.coeffs, dtype=float)
        value = gauss_quadrature(
            rule, lambda x: float(np.polynomial.polynomial.polyval(x, coeffs))
        )
        integrand = {"coeffs": list(map(float, coeffs))}
    payload = {
        "family": family,
        "params": params,
        "n": config.n,
        **integrand,
        "value": value,
    }
    _emit(json.dumps(payload, indent=2), config.out)
    return 0


def _cmd_verify(config: RunConfig) -> int:
    depth = config.n_max + 2
    if config.custom_path is not None:
        scheme, family, params = _build_scheme(config, config.n_max)
    else:
        scheme, family, params = _build_scheme(config, depth)
    tol = Tolerances(
        stochastic=config.tol_stochastic if config.tol_stochastic is not None else config.tol,
        relation=config.tol_relation if config.tol_relation is not None else 1e-9,
        majorization=config.tol,
        trace=config.tol,
    )
    seed = config.seed if config.seed is not None else DEFAULT_SEED
    results = verify_scheme(scheme, config.n_max, tol=tol, seed=seed)
    failures = [r for r in results if not r.passed]
    payload = {
        "family": family,
        "params": params,
        "n_max": config.n_max,
        "cases": len(results),
        "failures": [
            {"case": r.case, "metric": r.metric, "limit": r.limit} for r in failures
        ],
    }
    _emit(json.dumps(payload, indent=2), config.out)
    return 1 if failures else 0


def run(config: RunConfig) -> int:
    """Dispatch a validated configuration; returns the process exit code."""
    for name in ("tol", "tol_stochastic", "tol_relation"):
        value = getattr(config, name)
        if value is not None and not value > 0.0:
            raise UsageError(f"--{name.replace('_', '-')} must be positive")
    if (config.family is None) == (config.custom_path is None):
        raise UsageError("exactly one of --family or --custom is required")
    handlers = {
        "matrix": _cmd_matrix,
        "zeros": _cmd_zeros,
        "weights": _cmd_weights,
        "quad": _cmd_quad,
        "verify": _cmd_verify,
    }
    try:
        handler = handlers[config.command]
    except KeyError:
        raise UsageError(f"unknown command {config.command!r}") from None
    return handler(config)


def _add_scheme_args(parser: argparse.ArgumentParser):
    src = parser.add_argument_group("measure")
    src.add_argument("--family", choices=FAMILY_CHOICES, help="classical family")
    src.add_argument(
        "--custom", metavar="PATH", help='JSON file with keys "a" and "b"'
    )
    src.add_argument("--alpha", type=float, help="jacobi/laguerre exponent")
    src.add_argument("--beta", type=float, help="second jacobi exponent")


def _add_output_args(parser: argparse.ArgumentParser):
    parser.add_argument("--format", choices=["json", "csv"], default="json")
    parser.add_argument("--out", metavar="PATH", help="write to file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="opmaj",
        description=(
            "Zeros and Christoffel numbers of orthogonal polynomials, and the "
            "doubly stochastic matrices linking consecutive, associated, and "
            "row/column-deleted spectra."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("zeros", help="zeros of p_n (Jacobi matrix eigenvalues)")
    _add_scheme_args(p)
    p.add_argument("--n", type=int, required=True)
    _add_output_args(p)

    p = sub.add_parser("weights", help="Gaussian nodes and Christoffel numbers")
    _add_scheme_args(p)
    p.add_argument("--n", type=int, required=True)
    _add_output_args(p)

    p = sub.add_parser("matrix", help="stochastic matrix certificate for A, B or C")
    _add_scheme_args(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--theorem", choices=["A", "B", "C"], required=True)
    p.add_argument("--k", type=int, help="deleted row/column (theorem C only)")
    p.add_argument(
        "--route",
        choices=["eigvec", "literal"],
        default="eigvec",
        help="entry computation route (literal = polynomial evaluation)",
    )
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--tol-stochastic", type=float, dest="tol_stochastic")
    p.add_argument("--tol-relation", type=float, dest="tol_relation")
    _add_output_args(p)

    p = sub.add_parser("quad", help="Gaussian quadrature of a polynomial")
    _add_scheme_args(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--degree", type=int, help="integrate the monomial x^degree")
    p.add_argument(
        "--coeffs",
        help="comma-separated polynomial coefficients, ascending degree",
    )
    _add_output_args(p)

    p = sub.add_parser("verify", help="run the certificate sweep; exit 1 on failure")
    _add_scheme_args(p)
    p.add_argument("--n-max", type=int, required=True, dest="n_max")
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--tol-stochastic", type=float, dest="tol_stochastic")
    p.add_argument("--tol-relation", type=float, dest="tol_relation")
    p.add_argument("--seed", type=int, help="spot-check RNG seed (or OPMAJ_SEED)")
    _add_output_args(p)

    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    coeffs = None
    if getattr(args, "coeffs", None):
        try:
            coeffs = tuple(float(v) for v in args.coeffs.split(","))
        except ValueError as exc:
            raise UsageError(f"--coeffs must be comma-separated numbers: {exc}") from exc
    seed = getattr(args, "seed", None)
    if seed is None and os.environ.get("OPMAJ_SEED"):
        try:
            seed = int(os.environ["OPMAJ_SEED"])
        except ValueError as exc:
            raise UsageError(f"OPMAJ_SEED must be an integer: {exc}") from exc
    n = getattr(args, "n", None)
    if n is not None and n < 1:
        raise UsageError("--n must be >= 1")
    n_max = getattr(args, "n_max", None)
    if n_max is not None and n_max < 2:
        raise UsageError("--n-max must be >= 2")
    return RunConfig(
        command=args.command,
        family=args.family,
        custom_path=args.custom,
        alpha=args.alpha,
        beta=args.beta,
        n=n,
        n_max=n_max,
        theorem=getattr(args, "theorem", None),
        k=getattr(args, "k", None),
        route=getattr(args, "route", "eigvec"),
        degree=getattr(args, "degree", None),
        coeffs=coeffs,
        fmt=getattr(args, "format", "json"),
        out=getattr(args, "out", None),
        tol=getattr(args, "tol", 1e-10),
        tol_stochastic=getattr(args, "tol_stochastic", None),
        tol_relation=getattr(args, "tol_relation", None),
        seed=seed,
    )


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return run(_config_from_args(args))
    except UsageError as exc:
        sys.stderr.write(f"opmaj: error: {exc}\n")
        return 2
    except ValueError as exc:
        sys.stderr.write(f"opmaj: error: {exc}\n")
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
