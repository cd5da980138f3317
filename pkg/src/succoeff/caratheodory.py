"""Carathéodory-class functions as atomic Herglotz measures.

A function p with p(0)=1 and positive real part on the disk is represented
here as a finite convex combination of Herglotz kernels (1+eps z)/(1-eps z)
with unimodular eps.  The module provides the coefficient parametrization
of (c2, c3) in terms of (c1, x, y), moment extraction, and the boundary
two-atom reconstruction used by the extremal functions.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.optimize import least_squares

from . import config
from .errors import DegenerateError, DomainError, InfeasibleError
from .series import TruncatedSeries

__all__ = [
    "AtomicHerglotzRep",
    "LZParams",
    "lz_c2",
    "lz_c3",
    "moments",
    "to_series",
    "solve_two_atom",
    "random_rep",
]


@dataclass(frozen=True)
class AtomicHerglotzRep:
    """Convex combination sum_j w_j (1+eps_j z)/(1-eps_j z), |eps_j| = 1."""

    weights: np.ndarray
    points: np.ndarray

    def __post_init__(self):
        w = np.asarray(self.weights, dtype=float)
        e = np.asarray(self.points, dtype=complex)
        if w.size == 0 or w.shape != e.shape:
            raise DomainError("need matching, nonempty weight/point arrays")
        if np.any(w <= 0) or np.any(w > 1 + config.REP_ATOL):
            raise DomainError("weights must lie in (0, 1]")
        if abs(w.sum() - 1.0) > config.REP_ATOL:
            raise DomainError("weights must sum to 1")
        if np.any(np.abs(np.abs(e) - 1.0) > config.REP_ATOL):
            raise DomainError("atom points must lie on the unit circle")
        object.__setattr__(self, "weights", w)
        object.__setattr__(self, "points", e)

    @classmethod
    def from_atoms(cls, atoms) -> "AtomicHerglotzRep":
        w, e = zip(*atoms)
        return cls(np.array(w, dtype=float), np.array(e, dtype=complex))

    @property
    def n_atoms(self) -> int:
        return self.weights.size

    def atoms(self):
        return list(zip(self.weights.tolist(), self.points.tolist()))


@dataclass(frozen=True)
class LZParams:
    """Disk parameters (c, x, y) for the (c2, c3) coefficient map."""

    c: float
    x: complex
    y: complex = 0j

    def __post_init__(self):
        if not 0.0 <= self.c <= 2.0:
            raise DomainError(f"c must lie in [0, 2], got {self.c}")
        if abs(self.x) > 1 + config.REP_ATOL:
            raise DomainError("|x| must be <= 1")
        if abs(self.y) > 1 + config.REP_ATOL:
            raise DomainError("|y| must be <= 1")


def _check_cx(c: float, x: complex, y: complex = 0j) -> None:
    LZParams(c, x, y)


def lz_c2(c: float, x: complex) -> complex:
    """c2 of a Carathéodory function with c1 = c >= 0 and disk parameter x.

    2 c2 = c^2 + (4 - c^2) x.
    """
    _check_cx(c, x)
    return (c * c + (4.0 - c * c) * x) / 2.0


def lz_c3(c: float, x: complex, y: complex) -> complex:
    """c3 in terms of (c, x, y).

    4 c3 = c^3 + 2 (4 - c^2) c x - (4 - c^2) c x^2 + 2 (4 - c^2)(1 - |x|^2) y.
    The middle term is linear in x; see the validating moment oracle in the
    test suite.
    """
    _check_cx(c, x, y)
    b = 4.0 - c * c
    return (c**3 + 2.0 * b * c * x - b * c * x * x + 2.0 * b * (1.0 - abs(x) ** 2) * y) / 4.0


def moments(rep: AtomicHerglotzRep, k_max: int) -> np.ndarray:
    """Taylor coefficients c_1..c_kmax of p; c_k = 2 sum_j w_j eps_j^k."""
    if k_max < 1:
        raise DomainError("k_max must be >= 1")
    k = np.arange(1, k_max + 1)
    return 2.0 * (rep.weights[None, :] * rep.points[None, :] ** k[:, None]).sum(axis=1)


def to_series(rep: AtomicHerglotzRep, order: int) -> TruncatedSeries:
    """p as a truncated series 1 + c_1 z + ... + c_order z^order."""
    c = np.empty(order + 1, dtype=complex)
    c[0] = 1.0
    if order >= 1:
        c[1:] = moments(rep, order)
    return TruncatedSeries(c)


def _sorted_atoms(weights, points) -> AtomicHerglotzRep:
    # Deterministic output: atoms ordered by argument in [0, 2pi).
    args = np.mod(np.angle(points), 2.0 * np.pi)
    idx = np.argsort(args, kind="stable")
    return AtomicHerglotzRep(weights[idx], points[idx])


def solve_two_atom(c: float, x: complex) -> AtomicHerglotzRep:
    """Reconstruct the boundary two-atom measure with prescribed moments.

    Finds weights g1 + g2 = 1 (both positive) and distinct unimodular
    eps1, eps2 with

        g1 eps1 + g2 eps2   = c / 2,
        g1 eps1^2 + g2 eps2^2 = (c^2 + (4 - c^2) x) / 4.

    A solution exists exactly on the degenerate boundary |x| = 1 with
    0 <= c < 2.  The four real equations in the three unknowns
    (theta1, theta2, g1) are solved by damped least squares from a fixed
    fan of starts; a result is accepted only if the final residual is
    below config.MOMENT_RESIDUAL_TOL.
    """
    if not 0.0 <= c <= 2.0:
        raise DomainError(f"c must lie in [0, 2], got {c}")
    if c >= 2.0 - config.DEGENERATE_C_TOL:
        raise DegenerateError("c = 2 collapses the measure to a single atom at 1")
    if abs(x) > 1 + 1e-9:
        raise DomainError("|x| must be <= 1")

    m1 = c / 2.0
    m2 = (c * c + (4.0 - c * c) * x) / 4.0

    def residuals(v):
        t1, t2, w = v
        e1 = np.exp(1j * t1)
        e2 = np.exp(1j * t2)
        r1 = w * e1 + (1.0 - w) * e2 - m1
        r2 = w * e1 * e1 + (1.0 - w) * e2 * e2 - m2
        return np.array([r1.real, r1.imag, r2.real, r2.imag])

    starts = []
    for i in range(6):
        for j in range(i + 1, 7):
            starts.append((2.0 * np.pi * i / 7.0 + 0.05, 2.0 * np.pi * j / 7.0 + 0.05, 0.5))

    for start in starts:
        sol = least_squares(residuals, start, method="lm", xtol=1e-15, ftol=1e-15, max_nfev=400)
        t1, t2, w = sol.x
        if not 1e-9 < w < 1.0 - 1e-9:
            continue
        e1 = np.exp(1j * t1)
        e2 = np.exp(1j * t2)
        if abs(e1 - e2) < 1e-8:
            continue
        weights = np.array([w, 1.0 - w])
        points = np.array([e1, e2])
        # Residual re-checked on the cleaned (exactly unimodular) atoms.
        r1 = weights @ points - m1
        r2 = weights @ points**2 - m2
        if max(abs(r1), abs(r2)) < config.MOMENT_RESIDUAL_TOL:
            return _sorted_atoms(weights, points)
    raise InfeasibleError(
        f"no two-atom measure matches (c={c}, x={x}) within "
        f"{config.MOMENT_RESIDUAL_TOL:g}; the pair must satisfy |x| = 1"
    )


def _random_rep(rng: np.random.Generator, n_atoms: int) -> AtomicHerglotzRep:
    if n_atoms < 1:
        raise DomainError("n_atoms must be >= 1")
    # Weights bounded away from zero so invariants hold after normalization.
    w = rng.uniform(0.05, 1.0, size=n_atoms)
    w /= w.sum()
    e = np.exp(2j * np.pi * rng.random(n_atoms))
    return AtomicHerglotzRep(w, e)


def random_rep(n_atoms: int, seed: int) -> AtomicHerglotzRep:
    """Reproducible pseudo-random atomic representation."""
    return _random_rep(np.random.default_rng(seed), n_atoms)
