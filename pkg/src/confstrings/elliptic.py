"""Complete elliptic integrals and Jacobi elliptic functions.

Everything uses the *parameter* convention: ``m`` multiplies ``sin^2`` under
the square root, so ``K(m) = int_0^{pi/2} (1 - m sin^2 t)^{-1/2} dt``.  The
modulus-k convention is never used in this package.

Evaluation is quadrature-free: K and E by the arithmetic-geometric mean, the
third-kind integral via Carlson symmetric forms (which natively handle
negative characteristics), and the Jacobi functions by descending Landen
transformation.  The heavy lifting lives in :mod:`confstrings._kernels`,
which transparently selects the compiled or pure backend.
"""
import numbers

import numpy as np

from . import _kernels
from .errors import DomainError

__all__ = ["complete_K", "complete_E", "complete_Pi", "jacobi_cn_dn_sn", "BACKEND"]

BACKEND = _kernels.BACKEND


def complete_K(m: float) -> float:
    """Complete elliptic integral of the first kind.

    Parameters
    ----------
    m : float
        Parameter, ``0 <= m < 1``.

    Returns
    -------
    float
        ``int_0^{pi/2} dt / sqrt(1 - m sin^2 t)``, strictly increasing in m.
    """
    if not 0.0 <= m < 1.0:
        raise DomainError(f"complete_K requires 0 <= m < 1, got m={m!r}")
    return _kernels.ellip_k(float(m))


def complete_E(m: float) -> float:
    """Complete elliptic integral of the second kind, ``0 <= m <= 1``."""
    if not 0.0 <= m <= 1.0:
        raise DomainError(f"complete_E requires 0 <= m <= 1, got m={m!r}")
    return _kernels.ellip_e(float(m))


def complete_Pi(n: float, m: float) -> float:
    """Complete elliptic integral of the third kind.

    Parameters
    ----------
    n : float
        Characteristic, ``n < 1``.  Negative values (of any magnitude) are
        supported; they arise routinely from the period-map closed form.
    m : float
        Parameter under the square root, ``0 <= m < 1``.

    Notes
    -----
    ``complete_Pi(0, m)`` returns ``complete_K(m)`` exactly: the n = 0 branch
    routes to the same AGM evaluation.
    """
    if not n < 1.0:
        raise DomainError(f"complete_Pi requires characteristic n < 1, got n={n!r}")
    if not 0.0 <= m < 1.0:
        raise DomainError(f"complete_Pi requires 0 <= m < 1, got m={m!r}")
    return _kernels.ellip_pi(float(n), float(m))


def jacobi_cn_dn_sn(u, m: float):
    """Jacobi elliptic functions ``(cn, dn, sn)`` at argument ``u``.

    ``u`` may be a scalar or an ndarray (the parameter is shared); the array
    path is the building block for vectorised curve sampling.  Satisfies
    ``sn^2 + cn^2 = 1`` and ``dn^2 + m sn^2 = 1`` to machine precision.
    """
    if not 0.0 <= m < 1.0:
        raise DomainError(f"jacobi_cn_dn_sn requires 0 <= m < 1, got m={m!r}")
    if isinstance(u, numbers.Real):
        return _kernels.jacobi_cn_dn_sn(float(u), float(m))
    return _kernels.jacobi_cn_dn_sn_arr(np.asarray(u, dtype=float), float(m))
