"""Sharp two-sided bounds for |a2|-|a1| and |a3|-|a2|, with extremals.

For each family the interval endpoints are closed-form in the class
parameters; every endpoint is attained by a catalog function that can be
reconstructed as a truncated series (see :func:`extremal_series`), which
is how the package cross-checks each bound against an explicit member.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np

from . import config
from .caratheodory import AtomicHerglotzRep, solve_two_atom
from .errors import DomainError
from .families import ClassParams, Family, alexander_inverse, mu
from .series import TruncatedSeries, monomial, one

__all__ = [
    "Which",
    "ExtremalName",
    "ExtremalDescriptor",
    "BoundInterval",
    "t_factor",
    "two_atom_parameters",
    "bound_d1",
    "bound_d2",
    "extremal_series",
    "attainment",
    "extremal_targets",
]


class Which(str, Enum):
    """Which successive-coefficient functional: |a2|-|a1| or |a3|-|a2|."""

    D1 = "d1"
    D2 = "d2"


class ExtremalName(str, Enum):
    K = "K"                  # spirallike, upper d1
    H = "H"                  # spirallike, lower d1 / upper d2
    L = "L"                  # convex, upper d1
    Q = "Q"                  # convex, lower d1 / upper d2
    F_SPIRAL = "F_SPIRAL"    # spirallike, lower d2 (two-atom)
    G_CONVEX = "G_CONVEX"    # convex, lower d2 (two-atom)
    G_OZAKI = "G_OZAKI"      # ozaki, upper d1
    H_OZAKI = "H_OZAKI"      # ozaki, lower d1 / upper d2
    F_OZAKI = "F_OZAKI"      # ozaki, lower d2 (two-atom, single atom at lam >= 1/2)


_TWO_ATOM_NAMES = frozenset({ExtremalName.F_SPIRAL, ExtremalName.G_CONVEX, ExtremalName.F_OZAKI})


@dataclass(frozen=True)
class ExtremalDescriptor:
    name: ExtremalName
    params: ClassParams
    rep: Optional[AtomicHerglotzRep] = None

    def __post_init__(self):
        if (self.rep is not None) != (self.name in _TWO_ATOM_NAMES):
            raise DomainError(f"extremal {self.name.value} "
                              f"{'requires' if self.name in _TWO_ATOM_NAMES else 'does not take'} a rep")


@dataclass(frozen=True)
class BoundInterval:
    lower: float
    upper: float
    lower_extremal: ExtremalDescriptor
    upper_extremal: ExtremalDescriptor

    def __post_init__(self):
        if not self.lower <= self.upper:
            raise DomainError(f"empty interval [{self.lower}, {self.upper}]")

    def contains(self, value: float, slack: float = 0.0) -> bool:
        return self.lower - slack <= value <= self.upper + slack


def t_factor(alpha: float, gamma: float) -> float:
    """sqrt(1 + 4 (1-alpha)(2-alpha) cos^2 gamma), in (1, 3]."""
    ClassParams.spirallike(alpha, gamma)
    return math.sqrt(1.0 + 4.0 * (1.0 - alpha) * (2.0 - alpha) * math.cos(gamma) ** 2)


def two_atom_parameters(params: ClassParams) -> tuple[float, complex]:
    """(c, x) generating the lower-endpoint extremal of |a3|-|a2|.

    spirallike/convex: c = 2/sqrt(T+1), x = -(1 + 2(1-a)cos^2 g + i(1-a)sin 2g)/T
    ozaki:             x = -1, c = 3/(2-lam) for lam <= 1/2, c = 2 above.
    """
    if params.family is Family.OZAKI_G:
        lam = params.lam
        c = 3.0 / (2.0 - lam) if lam <= 0.5 else 2.0
        return c, -1.0 + 0j
    a, g = params.alpha, params.gamma
    t = t_factor(a, g)
    c = 2.0 / math.sqrt(t + 1.0)
    x = -(1.0 + 2.0 * (1.0 - a) * math.cos(g) ** 2 + 1j * (1.0 - a) * math.sin(2.0 * g)) / t
    return c, x


def _lower_rep(params: ClassParams) -> AtomicHerglotzRep:
    c, x = two_atom_parameters(params)
    if c >= 2.0 - config.DEGENERATE_C_TOL:
        # Measure degenerates to the point mass at 1 (Koebe-type kernel).
        return AtomicHerglotzRep(np.array([1.0]), np.array([1.0 + 0j]))
    return solve_two_atom(c, x)


def bound_d1(params: ClassParams) -> BoundInterval:
    """Sharp interval for |a2| - |a1|; the lower endpoint is always -1."""
    if params.family is Family.SPIRALLIKE:
        upper = 2.0 * (1.0 - params.alpha) * math.cos(params.gamma) - 1.0
        lo, hi = ExtremalName.H, ExtremalName.K
    elif params.family is Family.CONVEX_GAMMA:
        upper = (1.0 - params.alpha) * math.cos(params.gamma) - 1.0
        lo, hi = ExtremalName.Q, ExtremalName.L
    else:
        upper = params.lam / 2.0 - 1.0
        lo, hi = ExtremalName.H_OZAKI, ExtremalName.G_OZAKI
    return BoundInterval(
        lower=-1.0,
        upper=upper,
        lower_extremal=ExtremalDescriptor(lo, params),
        upper_extremal=ExtremalDescriptor(hi, params),
    )


def ozaki_lower_d2(lam: float) -> float:
    """Branch formula for the ozaki lower endpoint of |a3| - |a2|.

    The two branches agree at lam = 1/2 (both give -5/24).
    """
    if lam <= 0.5:
        return lam * (4.0 * lam - 17.0) / (24.0 * (2.0 - lam))
    return -lam * (lam + 2.0) / 6.0


def bound_d2(params: ClassParams) -> BoundInterval:
    """Sharp interval for |a3| - |a2|, with two-atom lower extremals."""
    if params.family is Family.OZAKI_G:
        lower = ozaki_lower_d2(params.lam)
        upper = params.lam / 6.0
        lo, hi = ExtremalName.F_OZAKI, ExtremalName.H_OZAKI
    else:
        a, g = params.alpha, params.gamma
        t = t_factor(a, g)
        cosg = math.cos(g)
        if params.family is Family.SPIRALLIKE:
            lower = -2.0 * (1.0 - a) * cosg / math.sqrt(1.0 + t)
            upper = (1.0 - a) * cosg
            lo, hi = ExtremalName.F_SPIRAL, ExtremalName.H
        else:
            lower = -(1.0 - a) * cosg / math.sqrt(1.0 + t)
            upper = (1.0 - a) * cosg / 3.0
            lo, hi = ExtremalName.G_CONVEX, ExtremalName.Q
    return BoundInterval(
        lower=lower,
        upper=upper,
        lower_extremal=ExtremalDescriptor(lo, params, rep=_lower_rep(params)),
        upper_extremal=ExtremalDescriptor(hi, params),
    )


def _one_minus(eps: complex, order: int) -> TruncatedSeries:
    """The linear factor 1 - eps*z."""
    return one(order) + monomial(1, order, -eps)


def _atom_product_pow(rep: AtomicHerglotzRep, w: complex, order: int) -> TruncatedSeries:
    """prod_j (1 - eps_j z)^(w * g_j), all factors on the principal branch."""
    acc = None
    for g, eps in rep.atoms():
        term = complex(w * g) * _one_minus(eps, order).log()
        acc = term if acc is None else acc + term
    return acc.exp()


def extremal_series(desc: ExtremalDescriptor, order: int) -> TruncatedSeries:
    """Taylor series (to ``order``) of a catalog extremal function.

    The convex-family extremals are produced through the Alexander-type
    relation from their spirallike counterparts (z l' = k, z q' = h,
    z g' = f), keeping a single construction path.
    """
    if order < 4:
        raise DomainError("order must be >= 4 to expose a2 and a3")
    p = desc.params
    name = desc.name
    if name in (ExtremalName.K, ExtremalName.L):
        w = -2.0 * (1.0 - p.alpha) * mu(p.gamma)
        k = _one_minus(1.0, order).cpow(w).shift_up()
        return k if name is ExtremalName.K else alexander_inverse(k)
    if name in (ExtremalName.H, ExtremalName.Q):
        w = -(1.0 - p.alpha) * mu(p.gamma)
        sq = one(order) + monomial(2, order, -1.0)
        h = sq.cpow(w).shift_up()
        return h if name is ExtremalName.H else alexander_inverse(h)
    if name in (ExtremalName.F_SPIRAL, ExtremalName.G_CONVEX):
        w = -2.0 * (1.0 - p.alpha) * mu(p.gamma)
        f = _atom_product_pow(desc.rep, w, order).shift_up()
        return f if name is ExtremalName.F_SPIRAL else alexander_inverse(f)
    if name is ExtremalName.G_OZAKI:
        lam = p.lam
        g = _one_minus(-1.0, order).cpow(1.0 + lam) - one(order)
        return (1.0 / (1.0 + lam)) * g
    if name is ExtremalName.H_OZAKI:
        sq = one(order) + monomial(2, order, -1.0)
        return sq.cpow(p.lam / 2.0).antiderivative()
    if name is ExtremalName.F_OZAKI:
        return _atom_product_pow(desc.rep, p.lam, order).antiderivative()
    raise DomainError(f"unknown extremal {name}")  # pragma: no cover


def attainment(desc: ExtremalDescriptor, which: Which, order: int = 8) -> float:
    """|a2|-|a1| (resp. |a3|-|a2|) of the reconstructed extremal."""
    f = extremal_series(desc, order)
    a2, a3 = f[2], f[3]
    if which is Which.D1:
        return abs(a2) - abs(f[1])
    return abs(a3) - abs(a2)


def extremal_targets(params: ClassParams) -> list[tuple[ExtremalDescriptor, Which, float]]:
    """Catalog of (extremal, functional, attained endpoint) for a family."""
    d1 = bound_d1(params)
    d2 = bound_d2(params)
    return [
        (d1.upper_extremal, Which.D1, d1.upper),
        (d1.lower_extremal, Which.D1, d1.lower),
        (d2.upper_extremal, Which.D2, d2.upper),
        (d2.lower_extremal, Which.D2, d2.lower),
    ]
