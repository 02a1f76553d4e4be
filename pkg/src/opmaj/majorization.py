"""Doubly stochastic matrices linking zeros of orthogonal polynomials.

Three constructions are provided, tagged by which row/column of the order-n
Jacobi matrix is deleted to produce the target spectrum:

* theorem "A": delete the last row/column.  Target = zeros of p_{n-1}
  followed by the diagonal coefficient b_{n-1}.
* theorem "B": delete the first row/column.  Target = zeros of the first
  associated polynomial of degree n-1 followed by b_0.
* theorem "C": delete row/column k (1 <= k <= n).  Target = zeros of
  p_{k-1}, then zeros of the order-k associated polynomial of degree n-k,
  then b_{k-1}.  k = n reduces to "A" and k = 1 to "B".

In every case target = entries @ source with source the ascending zeros of
p_n and entries doubly stochastic, so the target is majorized by the source
and sums of convex functions can only decrease from source to target.

The default route (``route="eigvec"``) computes each of the first n-1 rows
as squared inner products between an eigenvector of a deleted-matrix block
and an eigenvector of the full Jacobi matrix restricted to the surviving
coordinates; the last row is the squared k-th eigenvector component row.
Row sums, column sums, and the linear relation are then exact up to the
orthonormality of the computed eigenbases (~n * eps), with no error
amplification from clustered zeros.  This is the same matrix as the closed
formula

    a_k^2 lambda_{j,n} lambda_i p_{k-1}^2(x_{j,n}) [p-factor] / (z_i - x_{j,n})^2

wherever that formula is defined: multiplying the full-matrix eigenvector
equation by a block eigenvector turns the inner product into exactly that
quotient when z_i != x_{j,n}.  When a block zero collides with a zero of
p_n (possible for 2 <= k <= n-1, e.g. 0 is a zero of every odd-degree
polynomial of a symmetric measure) the quotient degenerates to 0/0, while
the inner product stays well defined and keeps the matrix doubly
stochastic; entries may then be exactly zero rather than strictly positive.

The literal quotient formulas, with Christoffel numbers by reciprocal sums
and polynomial values by forward recurrence, are retained behind
``route="literal"`` for cross-validation at small order on configurations
with well-separated zeros.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .orthopoly import (
    associated_spectral,
    christoffel_numbers_formula,
    eval_all,
)
from .recurrence import RecurrenceScheme, shifted
from .spectra import readonly, scheme_spectral

__all__ = [
    "StochasticMatrixResult",
    "StochasticCheck",
    "MajorizationCertificate",
    "ConvexReport",
    "CONVEX_FUNCTIONS",
    "ROUTES",
    "matrix_A",
    "matrix_B",
    "matrix_C",
    "check_doubly_stochastic",
    "check_majorization",
    "convex_report",
    "trace_identities",
]

ROUTES = ("eigvec", "literal")

CONVEX_FUNCTIONS = {
    "square": np.square,
    "abs": np.abs,
    "exp": np.exp,
}


@dataclass(frozen=True, eq=False)
class StochasticMatrixResult:
    """A constructed stochastic matrix with its zero vectors and residuals.

    ``target`` is assembled in ascending-zero block order with the
    recurrence coefficient term last; ``relation_err`` is the max absolute
    residual of target - entries @ source.
    """

    theorem: str
    n: int
    k: int
    entries: np.ndarray
    source: np.ndarray
    target: np.ndarray
    row_sum_err: float
    col_sum_err: float
    relation_err: float


@dataclass(frozen=True)
class StochasticCheck:
    ok: bool
    max_row_err: float
    max_col_err: float
    min_entry: float


@dataclass(frozen=True, eq=False)
class MajorizationCertificate:
    """Partial-sum evidence that x is majorized by y (descending sorts)."""

    x_sorted_desc: np.ndarray
    y_sorted_desc: np.ndarray
    partial_margins: np.ndarray
    total_residual: float
    tol: float
    holds: bool

    @property
    def min_margin(self) -> float:
        return float(self.partial_margins.min()) if self.partial_margins.size else 0.0


@dataclass(frozen=True)
class ConvexReport:
    """Sums of a convex function over target (lhs) and source (rhs)."""

    f: str
    lhs: float
    rhs: float

    @property
    def margin(self) -> float:
        return self.rhs - self.lhs


def _check_route(route: str) -> None:
    if route not in ROUTES:
        raise ValueError(f"route must be one of {ROUTES}, got {route!r}")


def _result(theorem, n, k, entries, source, target) -> StochasticMatrixResult:
    entries = np.asarray(entries, dtype=float)
    source = np.asarray(source, dtype=float)
    target = np.asarray(target, dtype=float)
    row_err = float(np.max(np.abs(entries.sum(axis=1) - 1.0)))
    col_err = float(np.max(np.abs(entries.sum(axis=0) - 1.0)))
    rel_err = float(np.max(np.abs(target - entries @ source)))
    return StochasticMatrixResult(
        theorem=theorem,
        n=n,
        k=k,
        entries=readonly(entries),
        source=readonly(source),
        target=readonly(target),
        row_sum_err=row_err,
        col_sum_err=col_err,
        relation_err=rel_err,
    )


def matrix_A(scheme: RecurrenceScheme, n: int, route: str = "eigvec") -> StochasticMatrixResult:
    """Stochastic matrix mapping the zeros of p_n onto (zeros of p_{n-1}, b_{n-1}).

    Default route: rows 1..n-1 are squared overlaps between the eigenvectors
    of J_{n-1} and the leading n-1 components of those of J_n; row n is the
    squared last component row of J_n, i.e. lambda_{j,n} p_{n-1}^2(x_{j,n}).
    The literal route evaluates the closed formula
    a_n^2 lambda_{j,n} p_{n-1}^2(x_{j,n}) lambda_{i,n-1} p_n^2(x_{i,n-1})
    / (x_{j,n} - x_{i,n-1})^2 from reciprocal-sum Christoffel numbers and
    forward-recurrence polynomial values.
    """
    _check_route(route)
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    sd_n = scheme_spectral(scheme, n)
    x = sd_n.eigenvalues
    if n == 1:
        return _result("A", 1, 1, np.ones((1, 1)), x, [scheme.b(0)])
    sd_m = scheme_spectral(scheme, n - 1)
    t = sd_m.eigenvalues
    target = np.append(t, scheme.b(n - 1))
    entries = np.empty((n, n))
    if route == "eigvec":
        entries[: n - 1] = (sd_m.components.T @ sd_n.components[: n - 1]) ** 2
        entries[n - 1] = sd_n.comp_sq[n - 1]
    else:
        lam_n = christoffel_numbers_formula(scheme, n)
        lam_m = christoffel_numbers_formula(scheme, n - 1)
        p_nm1 = np.array([eval_all(scheme, n - 1, xj).values[n - 1] for xj in x])
        p_n = np.array([eval_all(scheme, n, ti).values[n] for ti in t])
        v = lam_n * p_nm1**2
        u = lam_m * p_n**2
        gaps = x[None, :] - t[:, None]
        entries[: n - 1] = scheme.a(n) ** 2 * u[:, None] * v[None, :] / gaps**2
        entries[n - 1] = v
    return _result("A", n, n, entries, x, target)


def matrix_B(scheme: RecurrenceScheme, n: int, route: str = "eigvec") -> StochasticMatrixResult:
    """Stochastic matrix mapping the zeros of p_n onto (associated zeros, b_0).

    Default route: rows 1..n-1 are squared overlaps between the eigenvectors
    of the once-shifted Jacobi matrix of order n-1 and the trailing n-1
    components of those of J_n; row n holds the Christoffel numbers
    lambda_{j,n}.  The literal route evaluates
    a_1^2 lambda_{j,n} lambda^(1)_{i,n-1} / (y_{i,n-1} - x_{j,n})^2 with
    both Christoffel vectors from the reciprocal-sum formula.
    """
    _check_route(route)
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    sd_n = scheme_spectral(scheme, n)
    x = sd_n.eigenvalues
    if n == 1:
        return _result("B", 1, 1, np.ones((1, 1)), x, [scheme.b(0)])
    asd = associated_spectral(scheme, 1, n - 1)
    y = asd.eigenvalues
    target = np.append(y, scheme.b(0))
    entries = np.empty((n, n))
    if route == "eigvec":
        entries[: n - 1] = (asd.components.T @ sd_n.components[1:]) ** 2
        entries[n - 1] = sd_n.christoffel
    else:
        lam = christoffel_numbers_formula(scheme, n)
        lam1 = christoffel_numbers_formula(shifted(scheme, 1), n - 1)
        gaps = y[:, None] - x[None, :]
        entries[: n - 1] = scheme.a(1) ** 2 * lam1[:, None] * lam[None, :] / gaps**2
        entries[n - 1] = lam
    return _result("B", n, 1, entries, x, target)


def matrix_C(
    scheme: RecurrenceScheme, n: int, k: int, route: str = "eigvec"
) -> StochasticMatrixResult:
    """Stochastic matrix for deleting row/column k of the order-n Jacobi matrix.

    The target stacks the zeros of p_{k-1}, the zeros of the order-k
    associated polynomial of degree n-k, and b_{k-1}.  Default route: the
    deleted matrix splits into two decoupled blocks, and rows 1..n-1 are
    squared overlaps between each block's eigenvectors and the matching
    component slice of the J_n eigenvectors; row n is comp_sq row k of J_n,
    i.e. W_j = lambda_{j,n} p_{k-1}^2(x_{j,n}).  The literal route uses the
    closed quotients

    * rows i < k:   a_k^2 lambda_{i,k-1} p_k^2(x_{i,k-1}) W_j
      / (x_{i,k-1} - x_{j,n})^2,
    * rows k..n-1:  a_k^2 lambda^(k)_{i,n-k} W_j / (y_{i,n-k} - x_{j,n})^2.
    """
    _check_route(route)
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if not 1 <= k <= n:
        raise ValueError(f"k must satisfy 1 <= k <= {n}, got {k}")
    sd_n = scheme_spectral(scheme, n)
    x = sd_n.eigenvalues
    if n == 1:
        return _result("C", 1, 1, np.ones((1, 1)), x, [scheme.b(0)])
    entries = np.empty((n, n))
    target = np.empty(n)
    if route == "eigvec":
        w = sd_n.comp_sq[k - 1]
    else:
        lam_n = christoffel_numbers_formula(scheme, n)
        p_km1 = np.array([eval_all(scheme, k - 1, xj).values[k - 1] for xj in x])
        w = lam_n * p_km1**2
    if k >= 2:
        sd_top = scheme_spectral(scheme, k - 1)
        t = sd_top.eigenvalues
        target[: k - 1] = t
        if route == "eigvec":
            entries[: k - 1] = (sd_top.components.T @ sd_n.components[: k - 1]) ** 2
        else:
            lam_top = christoffel_numbers_formula(scheme, k - 1)
            p_k = np.array([eval_all(scheme, k, ti).values[k] for ti in t])
            u = lam_top * p_k**2
            gaps = t[:, None] - x[None, :]
            entries[: k - 1] = scheme.a(k) ** 2 * u[:, None] * w[None, :] / gaps**2
    if k <= n - 1:
        asd = associated_spectral(scheme, k, n - k)
        y = asd.eigenvalues
        target[k - 1 : n - 1] = y
        if route == "eigvec":
            entries[k - 1 : n - 1] = (asd.components.T @ sd_n.components[k:]) ** 2
        else:
            lam_k = christoffel_numbers_formula(shifted(scheme, k), n - k)
            gaps = y[:, None] - x[None, :]
            entries[k - 1 : n - 1] = (
                scheme.a(k) ** 2 * lam_k[:, None] * w[None, :] / gaps**2
            )
    entries[n - 1] = w
    target[n - 1] = scheme.b(k - 1)
    return _result("C", n, k, entries, x, target)


def check_doubly_stochastic(matrix, tol: float) -> StochasticCheck:
    """True iff all entries >= -tol and every row/column sum is within tol of 1.

    Accepts a StochasticMatrixResult or any square array-like; sums are
    recomputed here rather than trusted from the result.
    """
    if tol < 0.0:
        raise ValueError(f"tolerance must be nonnegative, got {tol}")
    if isinstance(matrix, StochasticMatrixResult):
        m = matrix.entries
    else:
        m = np.asarray(matrix, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"matrix must be square, got shape {m.shape}")
    row_err = float(np.max(np.abs(m.sum(axis=1) - 1.0)))
    col_err = float(np.max(np.abs(m.sum(axis=0) - 1.0)))
    min_entry = float(m.min())
    ok = min_entry >= -tol and row_err <= tol and col_err <= tol
    return StochasticCheck(ok, row_err, col_err, min_entry)


def check_majorization(x, y, tol: float = 1e-10) -> MajorizationCertificate:
    """Certificate that x is majorized by y.

    Holds iff every descending partial sum of y dominates that of x within
    tol and the totals agree within tol.
    """
    x = np.sort(np.asarray(x, dtype=float))[::-1]
    y = np.sort(np.asarray(y, dtype=float))[::-1]
    if x.shape != y.shape:
        raise ValueError(f"length mismatch: {x.size} vs {y.size}")
    margins = np.cumsum(y)[:-1] - np.cumsum(x)[:-1]
    residual = float(abs(x.sum() - y.sum()))
    holds = bool(np.all(margins >= -tol)) and residual <= tol
    return MajorizationCertificate(
        readonly(x), readonly(y), readonly(margins), residual, tol, holds
    )


def convex_report(result: StochasticMatrixResult, f: str = "square") -> ConvexReport:
    """Compare sums of a convex function over target and source zeros.

    The stochastic relation makes each target point a convex combination of
    the source zeros, so the margin rhs - lhs is nonnegative up to rounding
    for any convex f.
    """
    try:
        fn = CONVEX_FUNCTIONS[f]
    except KeyError:
        raise ValueError(
            f"f must be one of {tuple(CONVEX_FUNCTIONS)}, got {f!r}"
        ) from None
    lhs = float(fn(result.target).sum())
    rhs = float(fn(result.source).sum())
    return ConvexReport(f, lhs, rhs)


def trace_identities(scheme: RecurrenceScheme, n: int, k: int) -> dict[str, float]:
    """Absolute residuals |sum(target) - sum(source zeros)| for A, B and C(k).

    All three vanish exactly: each target completes a partial trace of J_n
    with the complementary recurrence coefficient.
    """
    if not 1 <= k <= n:
        raise ValueError(f"k must satisfy 1 <= k <= {n}, got {k}")
    x_sum = float(scheme_spectral(scheme, n).eigenvalues.sum())
    a_sum = scheme.b(n - 1) + (
        float(scheme_spectral(scheme, n - 1).eigenvalues.sum()) if n > 1 else 0.0
    )
    b_sum = scheme.b(0) + (
        float(associated_spectral(scheme, 1, n - 1).eigenvalues.sum()) if n > 1 else 0.0
    )
    c_sum = scheme.b(k - 1)
    if k >= 2:
        c_sum += float(scheme_spectral(scheme, k - 1).eigenvalues.sum())
    if k <= n - 1:
        c_sum += float(associated_spectral(scheme, k, n - k).eigenvalues.sum())
    return {
        "A": abs(a_sum - x_sum),
        "B": abs(b_sum - x_sum),
        "C": abs(c_sum - x_sum),
    }
