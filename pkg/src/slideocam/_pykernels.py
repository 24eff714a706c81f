"""Pure NumPy implementation of the hot kernels.

Mirrors ``_ckernels.pyx`` function for function; used when the compiled
extension is missing or ``SLIDEOCAM_PURE=1`` is set.
"""

import math

import numpy as np

TWO_PI = 2.0 * math.pi
SCAN_STEP = math.pi / 256.0


def cam_v(psi, p, eta, a4):
    """v-coordinate of the contact point at a single cam angle."""
    k = TWO_PI * eta - 1.0
    x = psi - math.pi
    b2 = p / TWO_PI
    b3 = b2 * math.hypot(k, x)
    delta = math.atan(x / k)
    return -b2 * math.sin(psi) + (b3 - a4) * math.sin(delta - psi)


def extended_angle(p, eta, a4, res_tol, width_tol):
    """Largest negative root of v_c on (-pi, 0).

    Steps down from 0 until v_c changes sign, then bisects. Raises
    ValueError when no sign change exists on (-pi, 0).
    """
    hi = 0.0
    f_hi = cam_v(hi, p, eta, a4)
    lo = hi
    f_lo = f_hi
    found = False
    while lo > -math.pi:
        hi, f_hi = lo, f_lo
        lo = max(hi - SCAN_STEP, -math.pi)
        f_lo = cam_v(lo, p, eta, a4)
        if f_lo == 0.0:
            return lo
        if (f_lo < 0.0) != (f_hi < 0.0):
            found = True
            break
    if not found:
        raise ValueError("v_c has no sign change on (-pi, 0)")
    while True:
        mid = 0.5 * (lo + hi)
        f_mid = cam_v(mid, p, eta, a4)
        if abs(f_mid) <= res_tol or (hi - lo) <= width_tol:
            return mid
        if (f_mid < 0.0) == (f_lo < 0.0):
            lo, f_lo = mid, f_mid
        else:
            hi, f_hi = mid, f_mid


def cam_curve(psi, p, eta, a4):
    psi = np.asarray(psi, dtype=float)
    k = TWO_PI * eta - 1.0
    x = psi - math.pi
    b2 = p / TWO_PI
    r = b2 * np.hypot(k, x) - a4
    delta = np.arctan(x / k)
    u = b2 * np.cos(psi) + r * np.cos(delta - psi)
    v = -b2 * np.sin(psi) + r * np.sin(delta - psi)
    return u, v


def pitch_curve(psi, p, eta):
    psi = np.asarray(psi, dtype=float)
    e = eta * p
    s = p * psi / TWO_PI - 0.5 * p
    c = np.cos(psi)
    sn = np.sin(psi)
    return e * c + s * sn, -e * sn + s * c


def kappa_pitch(psi, p, eta):
    psi = np.asarray(psi, dtype=float)
    k = TWO_PI * eta - 1.0
    x2 = (psi - math.pi) ** 2
    return (TWO_PI / p) * (x2 + 2.0 * k * (math.pi * eta - 1.0)) / (x2 + k * k) ** 1.5


def abs_pressure_angle(psi, eta):
    psi = np.asarray(psi, dtype=float)
    k = TWO_PI * eta - 1.0
    return np.abs(np.arctan(-k / (psi - math.pi)))


def fraction_within(lo, hi, eta, limit, n):
    """Share of an n-point uniform grid on [lo, hi] with |mu| <= limit."""
    psi = np.linspace(lo, hi, n)
    return float(np.count_nonzero(abs_pressure_angle(psi, eta) <= limit)) / n
