"""Certificate sweeps over (n, k) grids with machine-checkable results.

Each check yields a CheckResult with a sortable case key, the measured
metric, and the limit it was held to.  ``verify_scheme`` runs the whole
battery for one scheme; the CLI turns the outcome into exit codes.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .majorization import (
    check_doubly_stochastic,
    check_majorization,
    convex_report,
    matrix_A,
    matrix_B,
    matrix_C,
    trace_identities,
)
from .orthopoly import (
    DEFAULT_SEED,
    associated_spectral,
    christoffel_numbers_formula,
    eval_all,
    gauss_rule,
    jacobi_power_moment,
    spectral_spot_points,
)
from .recurrence import RecurrenceScheme, shifted
from .spectra import scheme_spectral

__all__ = ["Tolerances", "CheckResult", "verify_scheme"]

CONVEX_TAGS = ("square", "abs", "exp")


@dataclass(frozen=True)
class Tolerances:
    """Limits for the verification sweep; mirror the library defaults."""

    stochastic: float = 1e-10
    relation: float = 1e-9  # relative to the spectral diameter
    majorization: float = 1e-10
    trace: float = 1e-10  # scaled by 1 + sum |b_i|
    reduction: float = 1e-10
    identity: float = 1e-8  # relative, polynomial-identity spot checks
    quadrature: float = 1e-8  # relative to the absolute-moment scale

    def __post_init__(self):
        for name, value in self.__dict__.items():
            if not value > 0.0:
                raise ValueError(f"tolerance {name} must be positive, got {value}")


@dataclass(frozen=True)
class CheckResult:
    case: str
    metric: float
    limit: float
    passed: bool


@dataclass
class _Collector:
    results: list[CheckResult] = field(default_factory=list)

    def add(self, case: str, metric: float, limit: float, strict: bool = False):
        metric = float(metric)
        passed = metric < limit if strict else metric <= limit
        self.results.append(CheckResult(case, metric, float(limit), bool(passed)))


def _rel_err(lhs: float, rhs: float) -> float:
    scale = max(abs(lhs), abs(rhs), np.finfo(float).tiny)
    return abs(lhs - rhs) / scale


def _min_interlace_margin(inner: np.ndarray, outer: np.ndarray) -> float:
    """Smallest gap of the strict pattern outer_j < inner_j < outer_{j+1}."""
    return float(min((inner - outer[:-1]).min(), (outer[1:] - inner).min()))


def _certificate_checks(out: _Collector, result, diameter: float, tol: Tolerances):
    tag = f"n={result.n} {result.theorem}"
    if result.theorem == "C":
        tag += f" k={result.k}"
    stoch = check_doubly_stochastic(result, tol.stochastic)
    out.add(f"{tag} row-sums", stoch.max_row_err, tol.stochastic)
    out.add(f"{tag} col-sums", stoch.max_col_err, tol.stochastic)
    out.add(f"{tag} nonnegative", -stoch.min_entry, tol.stochastic)
    out.add(f"{tag} relation", result.relation_err, tol.relation * max(diameter, 1.0))
    cert = check_majorization(result.target, result.source, tol.majorization)
    out.add(f"{tag} majorization-margin", -cert.min_margin, tol.majorization)
    out.add(f"{tag} majorization-total", cert.total_residual, tol.majorization)
    for f in CONVEX_TAGS:
        out.add(f"{tag} convex-{f}", -convex_report(result, f).margin, tol.majorization)


def _identity_checks(out: _Collector, scheme, n: int, points, tol: Tolerances):
    """Polynomial-identity spot checks: Wronskian, Christoffel-Darboux,
    the associated-polynomial factorization, and the column-sum identities
    of the stochastic matrices against independently evaluated right sides.

    The first two difference identities are checked relative to the size of
    their terms (backward error): inside the spectral interval of measures
    with unbounded support the products reach the reciprocal square root of
    the smallest Christoffel number, so a residual relative to the O(1)
    result is not resolvable in doubles while a formula error would still
    surface at full term scale."""
    shift1 = shifted(scheme, 1)
    for x in points:
        base = eval_all(scheme, n + 1, x, derivatives=True)
        assoc = eval_all(shift1, n, x)
        p, dp, q = base.values, base.derivative_values, assoc.values
        # a_{n+1} (p_n q_n - p_{n+1} q_{n-1}) = a_1
        a1 = scheme.a(1)
        t1 = scheme.a(n + 1) * p[n] * q[n]
        t2 = scheme.a(n + 1) * p[n + 1] * q[n - 1]
        metric = abs(t1 - t2 - a1) / (abs(t1) + abs(t2) + a1)
        out.add(f"n={n} wronskian x={x:.6g}", metric, tol.identity)
        # sum_{j<=n} p_j^2 = a_{n+1} (p_{n+1}' p_n - p_{n+1} p_n')
        lhs = float(np.dot(p[: n + 1], p[: n + 1]))
        rhs = scheme.a(n + 1) * (dp[n + 1] * p[n] - p[n + 1] * dp[n])
        out.add(f"n={n} christoffel-darboux x={x:.6g}", _rel_err(lhs, rhs), tol.identity)
        # a_1 p^(k)_{n-k} = a_k (p_{k-1} q_{n-1} - p_n q_{k-2}), 2 <= k <= n-1
        for k in range(2, n):
            r = eval_all(shifted(scheme, k), n - k, x).values
            lhs = a1 * r[n - k]
            u1 = scheme.a(k) * p[k - 1] * q[n - 1]
            u2 = scheme.a(k) * p[n] * q[k - 2]
            metric = abs(u1 - u2 - lhs) / (abs(u1) + abs(u2) + abs(lhs))
            out.add(f"n={n} k={k} assoc-factorization x={x:.6g}", metric, tol.identity)
    # column sums of the deleted-row bands against literal right sides
    lam = christoffel_numbers_formula(scheme, n)
    x_nodes = scheme_spectral(scheme, n).eigenvalues
    p_nm1_sq = np.array(
        [eval_all(scheme, n - 1, xj).values[n - 1] ** 2 for xj in x_nodes]
    )
    partial_a = matrix_A(scheme, n).entries[: n - 1].sum(axis=0)
    partial_b = matrix_B(scheme, n).entries[: n - 1].sum(axis=0)
    err_a = max(_rel_err(sa, 1.0 - lj * pj) for sa, lj, pj in zip(partial_a, lam, p_nm1_sq))
    err_b = max(_rel_err(sb, 1.0 - lj) for sb, lj in zip(partial_b, lam))
    out.add(f"n={n} column-sum-identity A", err_a, tol.identity)
    out.add(f"n={n} column-sum-identity B", err_b, tol.identity)


def _quadrature_checks(out: _Collector, scheme, n: int, moments, tol: Tolerances):
    rule = gauss_rule(scheme, n)
    worst = 0.0
    for m in range(1, 2 * n):
        quad = float(np.dot(rule.weights, rule.nodes**m))
        scale = float(np.dot(rule.weights, np.abs(rule.nodes) ** m))
        worst = max(worst, abs(quad - moments[m]) / max(scale, np.finfo(float).tiny))
    out.add(f"n={n} quadrature-exactness", worst, tol.quadrature)


def verify_scheme(
    scheme: RecurrenceScheme,
    n_max: int,
    tol: Tolerances = Tolerances(),
    seed: int = DEFAULT_SEED,
    identity_n_cap: int = 15,
    quadrature_n_cap: int = 30,
) -> list[CheckResult]:
    """Run the full certificate battery for 2 <= n <= n_max.

    Per order: strict interlacing, trace identities, stochasticity/relation/
    majorization/convex checks for A, B and every C(k), the k = 1 and k = n
    reduction identities, and (depth permitting) polynomial-identity spot
    checks at deterministic random points and quadrature exactness against
    the operator-power moment oracle.  Results are sorted by case key.
    """
    if n_max < 2:
        raise ValueError(f"n_max must be >= 2, got {n_max}")
    if n_max > scheme.max_index + 1:
        raise ValueError(
            f"n_max {n_max} exceeds the scheme's usable order "
            f"{scheme.max_index + 1}"
        )
    out = _Collector()
    b_scale = 1.0 + sum(abs(scheme.b(i)) for i in range(min(n_max, scheme.max_index + 1)))
    moment_cap = min(quadrature_n_cap, n_max)
    moments = [jacobi_power_moment(scheme, m) for m in range(2 * moment_cap)]
    for n in range(2, n_max + 1):
        sd = scheme_spectral(scheme, n)
        x = sd.eigenvalues
        diameter = sd.diameter
        prev = scheme_spectral(scheme, n - 1).eigenvalues
        out.add(
            f"n={n} interlacing-consecutive",
            -_min_interlace_margin(prev, x),
            0.0,
            strict=True,
        )
        assoc = associated_spectral(scheme, 1, n - 1).eigenvalues
        out.add(
            f"n={n} interlacing-associated",
            -_min_interlace_margin(assoc, x),
            0.0,
            strict=True,
        )
        res_a = matrix_A(scheme, n)
        res_b = matrix_B(scheme, n)
        _certificate_checks(out, res_a, diameter, tol)
        _certificate_checks(out, res_b, diameter, tol)
        for k in range(1, n + 1):
            res_c = matrix_C(scheme, n, k)
            _certificate_checks(out, res_c, diameter, tol)
            traces = trace_identities(scheme, n, k)
            for name, residual in traces.items():
                out.add(f"n={n} k={k} trace-{name}", residual, tol.trace * b_scale)
            if k == 1:
                diff = float(np.max(np.abs(res_c.entries - res_b.entries)))
                out.add(f"n={n} reduction-C1-vs-B", diff, tol.reduction)
            if k == n:
                diff = float(np.max(np.abs(res_c.entries - res_a.entries)))
                out.add(f"n={n} reduction-Cn-vs-A", diff, tol.reduction)
        if n <= identity_n_cap and n + 1 <= scheme.max_index:
            points = spectral_spot_points(scheme, n, count=20, seed=seed)
            _identity_checks(out, scheme, n, points, tol)
        if n <= moment_cap:
            _quadrature_checks(out, scheme, n, moments, tol)
    out.results.sort(key=lambda r: r.case)
    return out.results
