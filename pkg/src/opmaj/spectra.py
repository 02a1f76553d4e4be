"""Jacobi matrices, row/column deletion, and tridiagonal spectral data.

The spectral data of J_n carries the Golub-Welsch payload: its eigenvalues
are the zeros of p_n, and the squared components of the unit eigenvectors
encode the Christoffel numbers (row 0) and, more generally, the products
lambda_{j,n} * p_i(x_{j,n})^2 (row i).  Storing squares removes any
eigenvector sign convention; no downstream formula needs the signs.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.linalg import LinAlgError, eigh_tridiagonal

from .recurrence import DepthError, RecurrenceScheme

__all__ = [
    "JacobiMatrix",
    "SpectralData",
    "ConvergenceError",
    "jacobi_matrix",
    "delete_row_col",
    "eigen_decompose",
    "scheme_spectral",
]


class ConvergenceError(RuntimeError):
    """The tridiagonal eigensolver failed; treat as a defect, not a fallback."""


def readonly(values) -> np.ndarray:
    """Copy into a float array with the write flag cleared."""
    out = np.array(values, dtype=float)
    out.setflags(write=False)
    return out


@dataclass(frozen=True, eq=False)
class JacobiMatrix:
    """Symmetric tridiagonal matrix: diagonal b_0..b_{n-1}, off-diagonal a_1..a_{n-1}.

    Order 0 (empty) is allowed so that row/column deletion can return empty
    blocks; decomposition requires order >= 1.
    """

    diag: np.ndarray
    offdiag: np.ndarray

    def __post_init__(self):
        diag = readonly(self.diag)
        offdiag = readonly(self.offdiag)
        expected = max(diag.size - 1, 0)
        if offdiag.size != expected:
            raise ValueError(
                f"offdiag must have length {expected} for order {diag.size}, "
                f"got {offdiag.size}"
            )
        if offdiag.size and not np.all(offdiag > 0.0):
            raise ValueError("off-diagonal entries must be strictly positive")
        object.__setattr__(self, "diag", diag)
        object.__setattr__(self, "offdiag", offdiag)

    @property
    def order(self) -> int:
        return self.diag.size

    def dense(self) -> np.ndarray:
        """Dense symmetric copy."""
        n = self.order
        out = np.zeros((n, n))
        np.fill_diagonal(out, self.diag)
        idx = np.arange(n - 1)
        out[idx, idx + 1] = self.offdiag
        out[idx + 1, idx] = self.offdiag
        return out


@dataclass(frozen=True, eq=False)
class SpectralData:
    """Strictly ascending eigenvalues plus unit-eigenvector components.

    ``components[:, j]`` is the unit eigenvector for ``eigenvalues[j]`` (its
    overall sign carries no meaning) and ``comp_sq`` holds its squares.  For
    the Jacobi matrix of a probability-measure scheme, comp_sq row 0 holds
    the Christoffel numbers and row i holds lambda_{j,n} * p_i(x_{j,n})^2.
    The signed components exist so that inner products between eigenbases of
    related matrices can be formed; every single-matrix formula uses only
    the squares.
    """

    eigenvalues: np.ndarray
    comp_sq: np.ndarray
    components: np.ndarray

    @property
    def order(self) -> int:
        return self.eigenvalues.size

    @property
    def christoffel(self) -> np.ndarray:
        """Gaussian quadrature weights at the zeros (first-component squares)."""
        return self.comp_sq[0]

    @property
    def diameter(self) -> float:
        """Spread x_max - x_min of the spectrum."""
        return float(self.eigenvalues[-1] - self.eigenvalues[0])


def jacobi_matrix(scheme: RecurrenceScheme, n: int) -> JacobiMatrix:
    """Truncated Jacobi matrix J_n of the scheme (needs depth >= n - 1)."""
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    if n > scheme.max_index + 1:
        raise DepthError(
            f"J_{n} needs coefficients up to index {n - 1}; "
            f"scheme depth is {scheme.max_index}"
        )
    diag = np.array([scheme.b(i) for i in range(n)])
    offdiag = np.array([scheme.a(i) for i in range(1, n)])
    return JacobiMatrix(diag, offdiag)


def delete_row_col(J: JacobiMatrix, k: int) -> tuple[JacobiMatrix, JacobiMatrix]:
    """Split J after deleting its k-th row and column (1-based).

    Deletion decouples the matrix into two diagonal blocks: the leading
    (k-1) x (k-1) Jacobi matrix and the trailing (n-k) x (n-k) block whose
    coefficients are the original ones shifted past index k.  Either block
    may be empty (k = 1 or k = n).  The union of the block spectra is the
    spectrum of the deleted matrix, n - 1 points in total.
    """
    n = J.order
    if not 1 <= k <= n:
        raise ValueError(f"k must satisfy 1 <= k <= {n}, got {k}")
    top = JacobiMatrix(J.diag[: k - 1], J.offdiag[: max(k - 2, 0)])
    bottom = JacobiMatrix(J.diag[k:], J.offdiag[k:])
    return top, bottom


def eigen_decompose(J: JacobiMatrix) -> SpectralData:
    """Full spectral decomposition of a Jacobi matrix.

    Uses the implicit-shift QL/QR driver with full eigenvector accumulation:
    unlike the faster MRRR driver it preserves the relative accuracy of
    exponentially small eigenvector components, on which the Christoffel
    numbers at extreme nodes of unbounded-support measures depend.

    Eigenvalues are sorted ascending with eigenvector columns permuted in
    lockstep.  Positive off-diagonals guarantee simple eigenvalues, so a
    nonincreasing pair in the computed spectrum is reported as a
    ConvergenceError rather than silently accepted, as is a solver failure.
    """
    if J.order < 1:
        raise ValueError("cannot decompose an empty Jacobi matrix")
    try:
        eigvals, vecs = eigh_tridiagonal(J.diag, J.offdiag, lapack_driver="stev")
    except LinAlgError as exc:
        raise ConvergenceError(f"tridiagonal eigensolver failed: {exc}") from exc
    order = np.argsort(eigvals, kind="stable")
    eigvals = eigvals[order]
    vecs = vecs[:, order]
    gaps = np.diff(eigvals)
    if gaps.size and not np.all(gaps > 0.0):
        j = int(np.argmin(gaps))
        raise ConvergenceError(
            f"eigenvalues {j + 1} and {j + 2} are not strictly increasing"
        )
    return SpectralData(readonly(eigvals), readonly(vecs**2), readonly(vecs))


@lru_cache(maxsize=None)
def scheme_spectral(scheme: RecurrenceScheme, n: int) -> SpectralData:
    """Cached spectral data of ``jacobi_matrix(scheme, n)``.

    Safe to share: schemes are immutable and the returned arrays are
    read-only.
    """
    return eigen_decompose(jacobi_matrix(scheme, n))
