# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels. Same signatures and semantics as ``_pykernels``."""

import numpy as np

from libc.math cimport M_PI, atan, cos, fabs, hypot, pow, sin

cdef double TWO_PI = 2.0 * M_PI
cdef double SCAN_STEP = M_PI / 256.0


cdef inline double _cam_v(double psi, double p, double eta, double a4) nogil:
    cdef double k = TWO_PI * eta - 1.0
    cdef double x = psi - M_PI
    cdef double b2 = p / TWO_PI
    cdef double b3 = b2 * hypot(k, x)
    cdef double delta = atan(x / k)
    return -b2 * sin(psi) + (b3 - a4) * sin(delta - psi)


def cam_v(double psi, double p, double eta, double a4):
    return _cam_v(psi, p, eta, a4)


def extended_angle(double p, double eta, double a4, double res_tol, double width_tol):
    cdef double hi = 0.0
    cdef double f_hi = _cam_v(hi, p, eta, a4)
    cdef double lo = hi
    cdef double f_lo = f_hi
    cdef double mid, f_mid
    cdef bint found = False
    while lo > -M_PI:
        hi = lo
        f_hi = f_lo
        lo = hi - SCAN_STEP
        if lo < -M_PI:
            lo = -M_PI
        f_lo = _cam_v(lo, p, eta, a4)
        if f_lo == 0.0:
            return lo
        if (f_lo < 0.0) != (f_hi < 0.0):
            found = True
            break
    if not found:
        raise ValueError("v_c has no sign change on (-pi, 0)")
    while True:
        mid = 0.5 * (lo + hi)
        f_mid = _cam_v(mid, p, eta, a4)
        if fabs(f_mid) <= res_tol or (hi - lo) <= width_tol:
            return mid
        if (f_mid < 0.0) == (f_lo < 0.0):
            lo = mid
            f_lo = f_mid
        else:
            hi = mid
            f_hi = f_mid


def cam_curve(psi, double p, double eta, double a4):
    cdef const double[::1] t = np.ascontiguousarray(psi, dtype=np.float64).ravel()
    cdef Py_ssize_t n = t.shape[0], i
    u_arr = np.empty(n)
    v_arr = np.empty(n)
    cdef double[::1] u = u_arr
    cdef double[::1] v = v_arr
    cdef double k = TWO_PI * eta - 1.0
    cdef double b2 = p / TWO_PI
    cdef double x, r, d
    with nogil:
        for i in range(n):
            x = t[i] - M_PI
            r = b2 * hypot(k, x) - a4
            d = atan(x / k)
            u[i] = b2 * cos(t[i]) + r * cos(d - t[i])
            v[i] = -b2 * sin(t[i]) + r * sin(d - t[i])
    shape = np.shape(psi)
    return u_arr.reshape(shape), v_arr.reshape(shape)


def pitch_curve(psi, double p, double eta):
    cdef const double[::1] t = np.ascontiguousarray(psi, dtype=np.float64).ravel()
    cdef Py_ssize_t n = t.shape[0], i
    u_arr = np.empty(n)
    v_arr = np.empty(n)
    cdef double[::1] u = u_arr
    cdef double[::1] v = v_arr
    cdef double e = eta * p
    cdef double s, c, sn
    with nogil:
        for i in range(n):
            s = p * t[i] / TWO_PI - 0.5 * p
            c = cos(t[i])
            sn = sin(t[i])
            u[i] = e * c + s * sn
            v[i] = -e * sn + s * c
    shape = np.shape(psi)
    return u_arr.reshape(shape), v_arr.reshape(shape)


def kappa_pitch(psi, double p, double eta):
    cdef const double[::1] t = np.ascontiguousarray(psi, dtype=np.float64).ravel()
    cdef Py_ssize_t n = t.shape[0], i
    out_arr = np.empty(n)
    cdef double[::1] out = out_arr
    cdef double k = TWO_PI * eta - 1.0
    cdef double c0 = 2.0 * k * (M_PI * eta - 1.0)
    cdef double k2 = k * k
    cdef double x2
    with nogil:
        for i in range(n):
            x2 = (t[i] - M_PI) * (t[i] - M_PI)
            out[i] = (TWO_PI / p) * (x2 + c0) / pow(x2 + k2, 1.5)
    return out_arr.reshape(np.shape(psi))


def abs_pressure_angle(psi, double eta):
    cdef const double[::1] t = np.ascontiguousarray(psi, dtype=np.float64).ravel()
    cdef Py_ssize_t n = t.shape[0], i
    out_arr = np.empty(n)
    cdef double[::1] out = out_arr
    cdef double k = TWO_PI * eta - 1.0
    with nogil:
        for i in range(n):
            out[i] = fabs(atan(-k / (t[i] - M_PI)))
    return out_arr.reshape(np.shape(psi))


def fraction_within(double lo, double hi, double eta, double limit, Py_ssize_t n):
    cdef Py_ssize_t i, hits = 0
    cdef double k = TWO_PI * eta - 1.0
    cdef double step = (hi - lo) / (n - 1) if n > 1 else 0.0
    cdef double psi
    with nogil:
        for i in range(n):
            psi = hi if i == n - 1 else lo + i * step
            if fabs(atan(-k / (psi - M_PI))) <= limit:
                hits += 1
    return <double>hits / n
