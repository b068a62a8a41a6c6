"""Pure-python/numpy backend for the elliptic kernels.

Same call surface as the compiled backend in ``_core.pyx``.  All functions
assume pre-validated arguments (the public wrappers in
:mod:`confstrings.elliptic` own domain checking): ``0 <= m < 1`` throughout,
characteristic ``n < 1`` for the third-kind integral.
"""
import math

import numpy as np

_EPS = 2.220446049250313e-16


def ellip_ke(m):
    """K(m) and E(m) together from one arithmetic-geometric-mean run.

    K = pi / (2 agm(1, sqrt(1-m))); E follows from the accumulated
    c_j = (a_j - b_j)/2 sequence: E = K (1 - sum 2^{j-1} c_j^2).
    """
    if m == 0.0:
        return math.pi / 2.0, math.pi / 2.0
    a = 1.0
    b = math.sqrt(1.0 - m)
    c = math.sqrt(m)
    csum = 0.5 * c * c
    pow2 = 0.5
    while abs(c) > 0.5 * _EPS * a:
        a, b, c = 0.5 * (a + b), math.sqrt(a * b), 0.5 * (a - b)
        pow2 *= 2.0
        csum += pow2 * c * c
    K = math.pi / (2.0 * a)
    return K, K * (1.0 - csum)


def ellip_k(m):
    return ellip_ke(m)[0]


def ellip_e(m):
    if m == 1.0:
        return 1.0
    return ellip_ke(m)[1]


def carlson_rf(x, y, z):
    """Carlson symmetric integral R_F by duplication."""
    A = (x + y + z) / 3.0
    Q = (3.0 * _EPS) ** (-1.0 / 6.0) * max(abs(A - x), abs(A - y), abs(A - z))
    f = 1.0
    while Q >= f * abs(A):
        sx, sy, sz = math.sqrt(x), math.sqrt(y), math.sqrt(z)
        lam = sx * sy + sy * sz + sz * sx
        x, y, z = 0.25 * (x + lam), 0.25 * (y + lam), 0.25 * (z + lam)
        A = 0.25 * (A + lam)
        f *= 4.0
    X = 1.0 - x / A
    Y = 1.0 - y / A
    Z = -X - Y
    E2 = X * Y - Z * Z
    E3 = X * Y * Z
    return (1.0 - E2 / 10.0 + E3 / 14.0 + E2 * E2 / 24.0 - 3.0 * E2 * E3 / 44.0) / math.sqrt(A)


def carlson_rc(x, y):
    """R_C(x, y) for x >= 0, y > 0.  Degenerate R_F; elementary closed forms."""
    d = y - x
    if abs(d) < 1e-8 * y:
        e = d / y
        return (1.0 + e * (1.0 / 6.0 + e * (3.0 / 40.0 + e * 5.0 / 112.0))) / math.sqrt(y)
    if x < y:
        if x == 0.0:
            return (math.pi / 2.0) / math.sqrt(d)
        return math.atan(math.sqrt(d / x)) / math.sqrt(d)
    return math.atanh(math.sqrt(-d / x)) / math.sqrt(-d)


def carlson_rj(x, y, z, p):
    """Carlson R_J by duplication, for nonnegative x, y, z and p > 0."""
    A = (x + y + z + 2.0 * p) / 5.0
    Q = (0.25 * _EPS) ** (-1.0 / 6.0) * max(abs(A - x), abs(A - y), abs(A - z), abs(A - p))
    fac = 1.0
    rcsum = 0.0
    while Q >= abs(A) / fac:
        sx, sy, sz, sp = math.sqrt(x), math.sqrt(y), math.sqrt(z), math.sqrt(p)
        lam = sx * sy + sy * sz + sz * sx
        alpha = (p * (sx + sy + sz) + sx * sy * sz) ** 2
        beta = p * (p + lam) ** 2
        rcsum += fac * carlson_rc(alpha, beta)
        fac *= 0.25
        x, y, z, p = 0.25 * (x + lam), 0.25 * (y + lam), 0.25 * (z + lam), 0.25 * (p + lam)
        A = 0.25 * (A + lam)
    X = 1.0 - x / A
    Y = 1.0 - y / A
    Z = 1.0 - z / A
    P = -(X + Y + Z) / 2.0
    E2 = X * Y + X * Z + Y * Z - 3.0 * P * P
    E3 = X * Y * Z + 2.0 * E2 * P + 4.0 * P ** 3
    E4 = (2.0 * X * Y * Z + E2 * P + 3.0 * P ** 3) * P
    E5 = X * Y * Z * P * P
    series = (1.0 - 3.0 * E2 / 14.0 + E3 / 6.0 + 9.0 * E2 * E2 / 88.0
              - 3.0 * E4 / 22.0 - 9.0 * E2 * E3 / 52.0 + 3.0 * E5 / 26.0)
    return 3.0 * rcsum + fac * series / (A * math.sqrt(A))


def ellip_pi(n, m):
    """Complete third-kind integral with characteristic n (sign convention:
    1 - n sin^2 in the denominator).  Reduces to R_F + n/3 R_J."""
    if n == 0.0:
        return ellip_ke(m)[0]
    y = 1.0 - m
    return carlson_rf(0.0, y, 1.0) + (n / 3.0) * carlson_rj(0.0, y, 1.0, 1.0 - n)


def _landen_scales(m):
    # descending Landen / AGM scale tables shared by the scalar and array paths
    a = [1.0]
    c = [math.sqrt(m)]
    b = math.sqrt(1.0 - m)
    j = 0
    while abs(c[j]) > _EPS * a[j] and j < 24:
        a.append(0.5 * (a[j] + b))
        c.append(0.5 * (a[j] - b))
        b = math.sqrt(a[j] * b)
        j += 1
    return a, c, j


def jacobi_cn_dn_sn(u, m):
    """Jacobi cn, dn, sn at real argument u, parameter m in [0, 1)."""
    if m == 0.0:
        return math.cos(u), 1.0, math.sin(u)
    a, c, j = _landen_scales(m)
    phi = (2.0 ** j) * a[j] * u
    for i in range(j, 0, -1):
        s = c[i] / a[i] * math.sin(phi)
        s = 1.0 if s > 1.0 else (-1.0 if s < -1.0 else s)
        phi = 0.5 * (phi + math.asin(s))
    sn = math.sin(phi)
    cn = math.cos(phi)
    dn = math.sqrt(1.0 - m * sn * sn)
    return cn, dn, sn


def jacobi_cn_dn_sn_arr(u, m):
    """Vectorised cn, dn, sn over an array of arguments (shared parameter)."""
    u = np.asarray(u, dtype=float)
    if m == 0.0:
        return np.cos(u), np.ones_like(u), np.sin(u)
    a, c, j = _landen_scales(m)
    phi = (2.0 ** j) * a[j] * u
    for i in range(j, 0, -1):
        s = np.clip(c[i] / a[i] * np.sin(phi), -1.0, 1.0)
        phi = 0.5 * (phi + np.arcsin(s))
    sn = np.sin(phi)
    cn = np.cos(phi)
    dn = np.sqrt(1.0 - m * sn * sn)
    return cn, dn, sn
