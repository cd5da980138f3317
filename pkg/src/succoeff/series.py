"""Truncated complex power-series (jet) arithmetic on the unit disk.

A :class:`TruncatedSeries` stores the Taylor coefficients a_0..a_N of an
analytic function.  Products are Cauchy products truncated at order N
(coefficients above N are silently dropped — standard jet arithmetic).
exp/log/complex powers use the usual first-order ODE recurrences and the
principal branch; the preconditions f(0)=0 for exp arguments and f(0)=1
for log/pow arguments remove any branch ambiguity by construction.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .errors import DomainError, OrderMismatchError

__all__ = ["TruncatedSeries", "zero", "one", "monomial"]

_Scalar = (int, float, complex, np.integer, np.floating, np.complexfloating)


class TruncatedSeries:
    """Coefficients a_0..a_N of an analytic function, truncated at order N."""

    __slots__ = ("_coeffs",)

    # Make numpy scalars defer to __rmul__ instead of iterating the series.
    __array_priority__ = 1000

    def __init__(self, coeffs: Sequence[complex] | np.ndarray):
        arr = np.asarray(coeffs, dtype=complex)
        if arr.ndim != 1 or arr.size < 1:
            raise DomainError("coefficients must be a nonempty 1-d sequence")
        if not np.all(np.isfinite(arr.view(float))):
            raise DomainError("coefficients must be finite")
        self._coeffs = arr.copy()
        self._coeffs.flags.writeable = False

    @property
    def coeffs(self) -> np.ndarray:
        return self._coeffs

    @property
    def order(self) -> int:
        return self._coeffs.size - 1

    def __len__(self) -> int:
        return self._coeffs.size

    def __getitem__(self, k: int) -> complex:
        return complex(self._coeffs[k])

    def __repr__(self) -> str:
        return f"TruncatedSeries(order={self.order}, coeffs={np.array2string(self._coeffs, precision=6)})"

    # -- ring operations ---------------------------------------------------

    def _check_order(self, other: "TruncatedSeries") -> None:
        if self.order != other.order:
            raise OrderMismatchError(
                f"truncation orders differ: {self.order} != {other.order}"
            )

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check_order(other)
        return TruncatedSeries(self._coeffs + other._coeffs)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check_order(other)
        return TruncatedSeries(self._coeffs - other._coeffs)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(-self._coeffs)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            self._check_order(other)
            # Cauchy product truncated at order N.
            prod = np.convolve(self._coeffs, other._coeffs)[: self.order + 1]
            return TruncatedSeries(prod)
        if isinstance(other, _Scalar):
            return TruncatedSeries(self._coeffs * complex(other))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, _Scalar):
            return TruncatedSeries(self._coeffs * complex(other))
        return NotImplemented

    # -- analytic operations -----------------------------------------------

    def exp(self) -> "TruncatedSeries":
        """Series of exp(f); requires f(0) = 0."""
        f = self._coeffs
        if abs(f[0]) > 1e-14:
            raise DomainError("exp requires a series with zero constant term")
        n = self.order
        g = np.zeros(n + 1, dtype=complex)
        g[0] = 1.0
        # (exp f)' = f' exp f  =>  k g_k = sum_{j=1}^{k} j f_j g_{k-j}
        for k in range(1, n + 1):
            j = np.arange(1, k + 1)
            g[k] = np.sum(j * f[1 : k + 1] * g[k - 1 :: -1][: k]) / k
        return TruncatedSeries(g)

    def log(self) -> "TruncatedSeries":
        """Series of log(f) with log(1) = 0; requires f(0) = 1."""
        f = self._coeffs
        if abs(f[0] - 1.0) > 1e-14:
            raise DomainError("log requires constant term 1 (principal branch)")
        n = self.order
        h = np.zeros(n + 1, dtype=complex)
        # (log f)' = f'/f  =>  k h_k = k f_k - sum_{j=1}^{k-1} j h_j f_{k-j}
        for k in range(1, n + 1):
            acc = k * f[k]
            if k > 1:
                j = np.arange(1, k)
                acc -= np.sum(j * h[1:k] * f[k - 1 : 0 : -1])
            h[k] = acc / k
        return TruncatedSeries(h)

    def cpow(self, w: complex) -> "TruncatedSeries":
        """Principal-branch f**w = exp(w log f); requires f(0) = 1."""
        return (complex(w) * self.log()).exp()

    def integrate_kernel(self) -> "TruncatedSeries":
        """Series of the Herglotz transport integral of p: c_k/k at z^k.

        For p = 1 + c_1 z + c_2 z^2 + ... this is the antiderivative of
        (p(t) - 1)/t, i.e. sum_k (c_k/k) z^k with zero constant term.
        Requires p(0) = 1.
        """
        p = self._coeffs
        if abs(p[0] - 1.0) > 1e-14:
            raise DomainError("kernel integral requires constant term 1")
        out = np.zeros_like(p)
        k = np.arange(1, self.order + 1)
        out[1:] = p[1:] / k
        return TruncatedSeries(out)

    def antiderivative(self) -> "TruncatedSeries":
        """Termwise antiderivative with value 0 at the origin (same order)."""
        out = np.zeros_like(self._coeffs)
        k = np.arange(1, self.order + 1)
        out[1:] = self._coeffs[:-1] / k
        return TruncatedSeries(out)

    def derivative(self) -> "TruncatedSeries":
        """Termwise derivative, zero-padded to keep the order (top is lost)."""
        out = np.zeros_like(self._coeffs)
        k = np.arange(1, self.order + 1)
        out[:-1] = self._coeffs[1:] * k
        return TruncatedSeries(out)

    def shift_up(self) -> "TruncatedSeries":
        """Multiply by z, dropping the overflowing top coefficient."""
        out = np.zeros_like(self._coeffs)
        out[1:] = self._coeffs[:-1]
        return TruncatedSeries(out)

    def eval(self, z):
        """Horner evaluation of the truncated polynomial at z (scalar or array)."""
        return np.polyval(self._coeffs[::-1], z)


def zero(order: int) -> TruncatedSeries:
    return TruncatedSeries(np.zeros(order + 1, dtype=complex))


def one(order: int) -> TruncatedSeries:
    c = np.zeros(order + 1, dtype=complex)
    c[0] = 1.0
    return TruncatedSeries(c)


def monomial(k: int, order: int, value: complex = 1.0) -> TruncatedSeries:
    """value * z**k as a truncated series."""
    if not 0 <= k <= order:
        raise DomainError(f"monomial degree {k} outside order {order}")
    c = np.zeros(order + 1, dtype=complex)
    c[k] = value
    return TruncatedSeries(c)
