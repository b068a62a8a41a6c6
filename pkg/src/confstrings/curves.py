"""Quasi-periodic critical curves of the conformal arclength functional.

A critical curve with non-constant periodic curvature is classified by the
pair (a, b) of roots of its first-integral polynomial (a > b, a > 0,
b != 0).  This module evaluates the curvature functions, their common
minimal period ("wavelength"), the spectral constants mu > nu derived from
(a, b), and the membership predicates for the parameter regions used by the
period map.
"""
import math
from dataclasses import dataclass

import numpy as np

from .elliptic import jacobi_cn_dn_sn
from ._kernels import ellip_k
from .errors import DomainError

__all__ = [
    "Parameters",
    "SpectralConstants",
    "curvature_k",
    "curvature_k_deriv",
    "second_curvature",
    "el_residual",
    "wavelength_omega",
    "spectral_constants",
    "DomainFlags",
    "domain_predicates",
    "in_S",
    "in_sigma",
    "in_sigma_prime",
    "in_omega_tilde",
    "in_omega",
]

_INV_SQRT2 = 1.0 / math.sqrt(2.0)


@dataclass(frozen=True)
class Parameters:
    """Roots (a, b) of the first-integral polynomial, ordered a > b.

    Derived integration constants: c1 = (a + b)/2, c2 = -ab.
    """

    a: float
    b: float

    def __post_init__(self):
        if not (self.a > 0.0 and self.a > self.b and self.b != 0.0):
            raise DomainError(
                f"parameters require a > 0, a > b, b != 0; got (a, b) = "
                f"({self.a!r}, {self.b!r})")

    @property
    def c1(self) -> float:
        return 0.5 * (self.a + self.b)

    @property
    def c2(self) -> float:
        return -self.a * self.b

    @property
    def in_sigma(self) -> bool:
        """True when the curve can close: ab > 1."""
        return self.a * self.b > 1.0


@dataclass(frozen=True)
class SpectralConstants:
    """Constants mu > nu > 0 splitting the momentum spectrum for ab > 1.

    mu^2 + nu^2 = a + b and mu^2 nu^2 = ab - 1; zeta = sqrt(4 + (a-b)^2).
    """

    mu: float
    nu: float
    zeta: float


def _as_params(p) -> Parameters:
    if isinstance(p, Parameters):
        return p
    return Parameters(*p)


def curvature_k(p, t):
    """First conformal curvature k_(a,b)(t); scalar or array t.

    cn-branch for b < 0, dn-branch for b > 0; in both cases k(0) = sqrt(a).
    """
    p = _as_params(p)
    a, b = p.a, p.b
    if b < 0.0:
        m = a / (a - b)
        cn, _, _ = jacobi_cn_dn_sn(np.multiply(math.sqrt(a - b), t), m)
        return math.sqrt(a) * cn
    m = (a - b) / a
    _, dn, _ = jacobi_cn_dn_sn(np.multiply(math.sqrt(a), t), m)
    return math.sqrt(a) * dn


def curvature_k_deriv(p, t):
    """Analytic derivative k'(t) of the first curvature."""
    p = _as_params(p)
    a, b = p.a, p.b
    if b < 0.0:
        m = a / (a - b)
        u = np.multiply(math.sqrt(a - b), t)
        _, dn, sn = jacobi_cn_dn_sn(u, m)
        return -math.sqrt(a * (a - b)) * sn * dn
    m = (a - b) / a
    u = np.multiply(math.sqrt(a), t)
    cn, _, sn = jacobi_cn_dn_sn(u, m)
    return -a * m * sn * cn


def second_curvature(p, t):
    """Second conformal curvature k2 = -(3/2) k^2 + (a + b)/2."""
    p = _as_params(p)
    k = curvature_k(p, t)
    return -1.5 * k * k + p.c1


def el_residual(p, t):
    """Residual of the first-integral identity (k')^2 + (k^2 - a)(k^2 - b).

    Vanishes identically for the elliptic-function solutions; the numerical
    contract is |residual| < 1e-9 * max(1, a^2).
    """
    p = _as_params(p)
    k = curvature_k(p, t)
    kp = curvature_k_deriv(p, t)
    k2 = k * k
    return kp * kp + (k2 - p.a) * (k2 - p.b)


def wavelength_omega(p) -> float:
    """Minimal period of the curvature functions.

    b < 0: 4 K(a/(a-b)) / sqrt(a-b); b > 0: 2 K((a-b)/a) / sqrt(a), the
    period of the dn-branch.  (The dn parameter is (a-b)/a; the minimal-
    period property is asserted by the tests.)
    """
    p = _as_params(p)
    a, b = p.a, p.b
    if b < 0.0:
        return 4.0 * ellip_k(a / (a - b)) / math.sqrt(a - b)
    return 2.0 * ellip_k((a - b) / a) / math.sqrt(a)


def spectral_constants(p) -> SpectralConstants:
    """Constants (mu, nu) with mu^2, nu^2 the roots of x^2-(a+b)x+(ab-1).

    nu is computed as sqrt((ab-1)/mu^2) to avoid cancellation when
    zeta approaches a + b.
    """
    p = _as_params(p)
    a, b = p.a, p.b
    ab1 = a * b - 1.0
    if ab1 < 0.0:
        raise DomainError(f"spectral constants require ab >= 1, got ab = {a * b!r}")
    zeta = math.hypot(2.0, a - b)
    mu2 = 0.5 * (a + b + zeta)
    return SpectralConstants(mu=math.sqrt(mu2), nu=math.sqrt(ab1 / mu2), zeta=zeta)


def in_S(a: float, b: float) -> bool:
    return a > 0.0 and a > b and b != 0.0


def in_sigma(a: float, b: float) -> bool:
    return in_S(a, b) and a * b > 1.0


def in_sigma_prime(a: float, b: float) -> bool:
    return a > 1.0 and a * b > 1.0 and b <= a


def in_omega_tilde(x: float, y: float) -> bool:
    """Image domain of the period map: the mirrored (x < 0) moduli region."""
    return -_INV_SQRT2 < x < -0.5 and y > 0.0 and x * x + y * y < 0.5


def in_omega(q1: float, q2: float) -> bool:
    """Moduli region: 1/2 < q1 < 1/sqrt(2), q2 > 0, q1^2 + q2^2 < 1/2."""
    return 0.5 < q1 < _INV_SQRT2 and q2 > 0.0 and q1 * q1 + q2 * q2 < 0.5


@dataclass(frozen=True)
class DomainFlags:
    in_S: bool
    in_Sigma: bool
    in_SigmaPrime: bool
    in_OmegaTilde: bool
    in_Omega: bool


def domain_predicates(x: float, y: float) -> DomainFlags:
    """All region memberships of a point, read either as (a, b) or (q1, q2)."""
    return DomainFlags(
        in_S=in_S(x, y),
        in_Sigma=in_sigma(x, y),
        in_SigmaPrime=in_sigma_prime(x, y),
        in_OmegaTilde=in_omega_tilde(x, y),
        in_Omega=in_omega(x, y),
    )
