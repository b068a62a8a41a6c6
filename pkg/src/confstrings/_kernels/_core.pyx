# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled backend for the elliptic kernels.

Mirrors ``_pure.py``.  Scalar hot loops in C; the array Jacobi evaluator is a
tight C loop over a memoryview.  Arguments are pre-validated by the callers.
"""
from libc.math cimport sqrt, sin, cos, asin, atan, atanh, fabs, pi

import numpy as np

cdef double _EPS = 2.220446049250313e-16


cdef inline double _max4(double a, double b, double c, double d):
    cdef double m = a
    if b > m: m = b
    if c > m: m = c
    if d > m: m = d
    return m


cdef (double, double) _ke(double m):
    cdef double a = 1.0, b, c, csum, pow2, K
    if m == 0.0:
        return pi / 2.0, pi / 2.0
    b = sqrt(1.0 - m)
    c = sqrt(m)
    csum = 0.5 * c * c
    pow2 = 0.5
    while fabs(c) > 0.5 * _EPS * a:
        a, b, c = 0.5 * (a + b), sqrt(a * b), 0.5 * (a - b)
        pow2 *= 2.0
        csum += pow2 * c * c
    K = pi / (2.0 * a)
    return K, K * (1.0 - csum)


def ellip_ke(double m):
    cdef double K, E
    K, E = _ke(m)
    return K, E


def ellip_k(double m):
    return _ke(m)[0]


def ellip_e(double m):
    if m == 1.0:
        return 1.0
    return _ke(m)[1]


cdef double _rf(double x, double y, double z):
    cdef double A = (x + y + z) / 3.0
    cdef double Q, f = 1.0, sx, sy, sz, lam, X, Y, Z, E2, E3
    Q = (3.0 * _EPS) ** (-1.0 / 6.0) * _max4(fabs(A - x), fabs(A - y), fabs(A - z), 0.0)
    while Q >= f * fabs(A):
        sx = sqrt(x); sy = sqrt(y); sz = sqrt(z)
        lam = sx * sy + sy * sz + sz * sx
        x = 0.25 * (x + lam); y = 0.25 * (y + lam); z = 0.25 * (z + lam)
        A = 0.25 * (A + lam)
        f *= 4.0
    X = 1.0 - x / A
    Y = 1.0 - y / A
    Z = -X - Y
    E2 = X * Y - Z * Z
    E3 = X * Y * Z
    return (1.0 - E2 / 10.0 + E3 / 14.0 + E2 * E2 / 24.0 - 3.0 * E2 * E3 / 44.0) / sqrt(A)


cdef double _rc(double x, double y):
    cdef double d = y - x, e
    if fabs(d) < 1e-8 * y:
        e = d / y
        return (1.0 + e * (1.0 / 6.0 + e * (3.0 / 40.0 + e * 5.0 / 112.0))) / sqrt(y)
    if x < y:
        if x == 0.0:
            return (pi / 2.0) / sqrt(d)
        return atan(sqrt(d / x)) / sqrt(d)
    return atanh(sqrt(-d / x)) / sqrt(-d)


cdef double _rj(double x, double y, double z, double p):
    cdef double A = (x + y + z + 2.0 * p) / 5.0
    cdef double Q, fac = 1.0, rcsum = 0.0
    cdef double sx, sy, sz, sp, lam, alpha, beta
    cdef double X, Y, Z, P, E2, E3, E4, E5, series
    Q = (0.25 * _EPS) ** (-1.0 / 6.0) * _max4(fabs(A - x), fabs(A - y), fabs(A - z), fabs(A - p))
    while Q >= fabs(A) / fac:
        sx = sqrt(x); sy = sqrt(y); sz = sqrt(z); sp = sqrt(p)
        lam = sx * sy + sy * sz + sz * sx
        alpha = (p * (sx + sy + sz) + sx * sy * sz) ** 2
        beta = p * (p + lam) ** 2
        rcsum += fac * _rc(alpha, beta)
        fac *= 0.25
        x = 0.25 * (x + lam); y = 0.25 * (y + lam); z = 0.25 * (z + lam); p = 0.25 * (p + lam)
        A = 0.25 * (A + lam)
    X = 1.0 - x / A
    Y = 1.0 - y / A
    Z = 1.0 - z / A
    P = -(X + Y + Z) / 2.0
    E2 = X * Y + X * Z + Y * Z - 3.0 * P * P
    E3 = X * Y * Z + 2.0 * E2 * P + 4.0 * P * P * P
    E4 = (2.0 * X * Y * Z + E2 * P + 3.0 * P * P * P) * P
    E5 = X * Y * Z * P * P
    series = (1.0 - 3.0 * E2 / 14.0 + E3 / 6.0 + 9.0 * E2 * E2 / 88.0
              - 3.0 * E4 / 22.0 - 9.0 * E2 * E3 / 52.0 + 3.0 * E5 / 26.0)
    return 3.0 * rcsum + fac * series / (A * sqrt(A))


def carlson_rf(double x, double y, double z):
    return _rf(x, y, z)


def carlson_rc(double x, double y):
    return _rc(x, y)


def carlson_rj(double x, double y, double z, double p):
    return _rj(x, y, z, p)


def ellip_pi(double n, double m):
    cdef double y
    if n == 0.0:
        return _ke(m)[0]
    y = 1.0 - m
    return _rf(0.0, y, 1.0) + (n / 3.0) * _rj(0.0, y, 1.0, 1.0 - n)


cdef int _landen(double m, double *a, double *c):
    cdef double b = sqrt(1.0 - m)
    cdef int j = 0
    a[0] = 1.0
    c[0] = sqrt(m)
    while fabs(c[j]) > _EPS * a[j] and j < 24:
        a[j + 1] = 0.5 * (a[j] + b)
        c[j + 1] = 0.5 * (a[j] - b)
        b = sqrt(a[j] * b)
        j += 1
    return j


cdef inline double _phi0(double u, double m, double *a, double *c, int j):
    cdef double phi = (2.0 ** j) * a[j] * u
    cdef double s
    cdef int i
    for i in range(j, 0, -1):
        s = c[i] / a[i] * sin(phi)
        if s > 1.0: s = 1.0
        elif s < -1.0: s = -1.0
        phi = 0.5 * (phi + asin(s))
    return phi


def jacobi_cn_dn_sn(double u, double m):
    cdef double a[25]
    cdef double c[25]
    cdef int j
    cdef double phi, sn, cn, dn
    if m == 0.0:
        return cos(u), 1.0, sin(u)
    j = _landen(m, a, c)
    phi = _phi0(u, m, a, c, j)
    sn = sin(phi)
    cn = cos(phi)
    dn = sqrt(1.0 - m * sn * sn)
    return cn, dn, sn


def jacobi_cn_dn_sn_arr(u, double m):
    cdef double a[25]
    cdef double c[25]
    cdef int j, i, nn
    cdef double phi, sn
    u = np.ascontiguousarray(u, dtype=np.float64)
    out_cn = np.empty_like(u)
    out_dn = np.empty_like(u)
    out_sn = np.empty_like(u)
    cdef double[::1] uv = u.ravel()
    cdef double[::1] cnv = out_cn.ravel()
    cdef double[::1] dnv = out_dn.ravel()
    cdef double[::1] snv = out_sn.ravel()
    nn = uv.shape[0]
    if m == 0.0:
        for i in range(nn):
            cnv[i] = cos(uv[i]); dnv[i] = 1.0; snv[i] = sin(uv[i])
        return out_cn, out_dn, out_sn
    j = _landen(m, a, c)
    for i in range(nn):
        phi = _phi0(uv[i], m, a, c, j)
        sn = sin(phi)
        snv[i] = sn
        cnv[i] = cos(phi)
        dnv[i] = sqrt(1.0 - m * sn * sn)
    return out_cn, out_dn, out_sn
