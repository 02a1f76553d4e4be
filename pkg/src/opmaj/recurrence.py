"""Three-term recurrence coefficients for orthonormal polynomial families.

Every scheme uses the probability-measure convention: the underlying measure
has total mass 1 and the polynomials are orthonormal with p_0 = 1.  In that
normalization the recurrence reads

    x p_n(x) = a_{n+1} p_{n+1}(x) + b_n p_n(x) + a_n p_{n-1}(x),

with a_n > 0 for n >= 1 and b_n real.  Rescaling a measure leaves (a_n, b_n)
unchanged, so the classical coefficient tables apply verbatim; the
normalization only fixes p_0 and the total quadrature mass.

Coefficients of the classical families are evaluated lazily from closed
forms, so a scheme is a cheap immutable value object even for large depths.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, replace
from enum import Enum

__all__ = [
    "Family",
    "RecurrenceScheme",
    "DepthError",
    "classical_scheme",
    "from_sequences",
    "shifted",
]


class Family(str, Enum):
    CHEBYSHEV_U = "chebyshev-u"
    CHEBYSHEV_T = "chebyshev-t"
    LEGENDRE = "legendre"
    JACOBI = "jacobi"
    LAGUERRE = "laguerre"
    HERMITE = "hermite"
    CUSTOM = "custom"


class DepthError(ValueError):
    """A coefficient index beyond the scheme's available depth was requested."""


def _jacobi_a(n: int, alpha: float, beta: float) -> float:
    if n == 1:
        s = alpha + beta + 2.0
        return math.sqrt(4.0 * (alpha + 1.0) * (beta + 1.0) / (s * s * (s + 1.0)))
    s = 2.0 * n + alpha + beta
    return math.sqrt(
        4.0 * n * (n + alpha) * (n + beta) * (n + alpha + beta)
        / (s * s * (s + 1.0) * (s - 1.0))
    )


def _jacobi_b(n: int, alpha: float, beta: float) -> float:
    if n == 0:
        return (beta - alpha) / (alpha + beta + 2.0)
    s = 2.0 * n + alpha + beta
    return (beta * beta - alpha * alpha) / (s * (s + 2.0))


@dataclass(frozen=True)
class RecurrenceScheme:
    """Supplier of recurrence coefficients (a_n, b_n) up to ``max_index``.

    ``a(n)`` is defined for 1 <= n <= max_index, ``b(n)`` for
    0 <= n <= max_index.  A nonzero ``shift`` indexes into the tail of the
    base coefficient sequences; such schemes generate the associated
    polynomials of the base measure.

    Instances are immutable and hashable, safe to share across threads and
    to use as cache keys.
    """

    kind: Family
    max_index: int
    params: tuple[float, ...] = ()
    shift: int = 0
    a_seq: tuple[float, ...] = ()
    b_seq: tuple[float, ...] = ()

    def a(self, n: int) -> float:
        """Off-diagonal coefficient a_n (strictly positive)."""
        if not 1 <= n <= self.max_index:
            raise DepthError(f"a_{n} unavailable: scheme depth is {self.max_index}")
        return self._a(n + self.shift)

    def b(self, n: int) -> float:
        """Diagonal coefficient b_n."""
        if not 0 <= n <= self.max_index:
            raise DepthError(f"b_{n} unavailable: scheme depth is {self.max_index}")
        return self._b(n + self.shift)

    def _a(self, n: int) -> float:
        kind = self.kind
        if kind is Family.CHEBYSHEV_U:
            return 0.5
        if kind is Family.CHEBYSHEV_T:
            return math.sqrt(0.5) if n == 1 else 0.5
        if kind is Family.LEGENDRE:
            return n / math.sqrt(4.0 * n * n - 1.0)
        if kind is Family.JACOBI:
            return _jacobi_a(n, self.params[0], self.params[1])
        if kind is Family.LAGUERRE:
            return math.sqrt(n * (n + self.params[0]))
        if kind is Family.HERMITE:
            return math.sqrt(0.5 * n)
        return self.a_seq[n - 1]

    def _b(self, n: int) -> float:
        kind = self.kind
        if kind is Family.JACOBI:
            return _jacobi_b(n, self.params[0], self.params[1])
        if kind is Family.LAGUERRE:
            return 2.0 * n + self.params[0] + 1.0
        if kind is Family.CUSTOM:
            return self.b_seq[n]
        return 0.0


def classical_scheme(
    family: Family | str,
    max_index: int,
    *,
    alpha: float | None = None,
    beta: float | None = None,
) -> RecurrenceScheme:
    """Closed-form scheme for one of the classical families.

    ``alpha`` is the Jacobi or Laguerre exponent (Laguerre defaults to 0),
    ``beta`` the second Jacobi exponent; both must exceed -1.
    """
    family = Family(family)
    if family is Family.CUSTOM:
        raise ValueError("use from_sequences for custom coefficient schemes")
    if max_index < 1:
        raise ValueError(f"max_index must be >= 1, got {max_index}")
    params: tuple[float, ...] = ()
    if family is Family.JACOBI:
        if alpha is None or beta is None:
            raise ValueError("jacobi requires both alpha and beta")
        if alpha <= -1.0 or beta <= -1.0:
            raise ValueError(
                f"jacobi parameters must exceed -1, got alpha={alpha}, beta={beta}"
            )
        params = (float(alpha), float(beta))
    elif family is Family.LAGUERRE:
        if beta is not None:
            raise ValueError("laguerre takes a single parameter alpha")
        alpha = 0.0 if alpha is None else float(alpha)
        if alpha <= -1.0:
            raise ValueError(f"laguerre parameter must exceed -1, got alpha={alpha}")
        params = (alpha,)
    elif alpha is not None or beta is not None:
        raise ValueError(f"{family.value} takes no shape parameters")
    return RecurrenceScheme(kind=family, max_index=int(max_index), params=params)


def from_sequences(a, b) -> RecurrenceScheme:
    """Scheme wrapping explicit sequences (a_1, a_2, ...) and (b_0, b_1, ...).

    Accepts len(a) == len(b) or len(b) == len(a) + 1; the usable depth is
    len(b) - 1 either way.  Off-diagonal entries must be strictly positive
    (positive a_n make the Jacobi matrix eigenvalues simple); the offending
    1-based index is reported otherwise.
    """
    a = tuple(float(v) for v in a)
    b = tuple(float(v) for v in b)
    if len(b) not in (len(a), len(a) + 1):
        raise ValueError(
            f"length mismatch: got {len(a)} off-diagonal and {len(b)} diagonal "
            "coefficients; need len(b) == len(a) or len(a) + 1"
        )
    if not b:
        raise ValueError("need at least one diagonal coefficient b_0")
    for i, v in enumerate(a, start=1):
        if not v > 0.0:
            raise ValueError(f"a[{i}] must be positive, got {v}")
        if not math.isfinite(v):
            raise ValueError(f"a[{i}] must be finite, got {v}")
    for i, v in enumerate(b):
        if not math.isfinite(v):
            raise ValueError(f"b[{i}] must be finite, got {v}")
    return RecurrenceScheme(
        kind=Family.CUSTOM, max_index=len(b) - 1, a_seq=a, b_seq=b
    )


def shifted(scheme: RecurrenceScheme, k: int) -> RecurrenceScheme:
    """Scheme of the k-fold associated polynomials: a'_n = a_{n+k}, b'_n = b_{n+k}.

    The orthonormal polynomials of the result are the associated polynomials
    of order k, orthonormal for the k-th associated measure.
    """
    if k < 0:
        raise ValueError(f"shift must be nonnegative, got {k}")
    if k == 0:
        return scheme
    if k > scheme.max_index:
        raise DepthError(f"shift {k} exceeds scheme depth {scheme.max_index}")
    return replace(scheme, shift=scheme.shift + k, max_index=scheme.max_index - k)
