"""Pitch-curve and cam-profile curvature, and the location of the pitch-curve maximum."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional, Tuple

import numpy as np

from ._backend import kernels
from .params import ETA_CONVEX, ETA_MERGE, TWO_PI, DesignParams, SingularityError

NONCONVEX = "nonconvex"
TWO_MAXIMA = "two-maxima"
BOUNDARY = "boundary"
SINGLE_MAXIMUM = "single-maximum"


def curvature_parametric(du, dv, d2u, d2v):
    """Signed curvature of a planar parametric curve from its derivatives.

    Positive means convex under the (v' u'' - u' v'') orientation used
    throughout this package.
    """
    du, dv, d2u, d2v = (np.asarray(a, dtype=float) for a in (du, dv, d2u, d2v))
    speed2 = du * du + dv * dv
    if np.any(speed2 == 0.0):
        raise SingularityError("curvature undefined at a stationary point")
    kappa = (dv * d2u - du * d2v) / speed2**1.5
    return float(kappa) if kappa.ndim == 0 else kappa


def kappa_pitch(psi, params: DesignParams):
    """Closed-form pitch-curve curvature; scalar in, scalar out."""
    out = kernels.kappa_pitch(np.atleast_1d(np.asarray(psi, dtype=float)), params.p, params.eta)
    return float(out[0]) if np.ndim(psi) == 0 else out.reshape(np.shape(psi))


def kappa_cam(psi, params: DesignParams):
    """Cam-profile curvature from the pitch curvature (rho_p = rho_c + a4)."""
    kp = np.asarray(kappa_pitch(psi, params), dtype=float)
    denom = 1.0 - params.a4 * kp
    if np.any(denom == 0.0):
        raise SingularityError("a4 * kappa_p = 1: the profile has a cusp (undercutting)")
    kc = kp / denom
    return float(kc) if kc.ndim == 0 else kc


def kappa_max_two_peaks(eta: float, p: float) -> float:
    """Peak value when eta lies in [1/pi, 2/pi]."""
    return 4.0 * math.pi / (3.0 * p * math.sqrt(6.0 * eta * math.pi - 3.0))


def kappa_max_centre(eta: float, p: float) -> float:
    """Curvature at psi = pi, the peak when eta >= 2/pi."""
    ep = eta * math.pi
    return (4.0 * math.pi / p) * (2.0 * ep * ep - 3.0 * ep + 1.0) / (4.0 * ep * ep - 4.0 * ep + 1.0) ** 1.5


def regime(eta: float) -> str:
    if eta < ETA_CONVEX:
        return NONCONVEX
    if eta < ETA_MERGE:
        return TWO_MAXIMA
    if eta == ETA_MERGE:
        return BOUNDARY
    return SINGLE_MAXIMUM


@dataclass(frozen=True)
class CurvatureReport:
    eta_regime: str
    kappa_p_max: Optional[float]
    extremum_psis: Tuple[float, ...] = field(default_factory=tuple)
    undercut_bound_a4: Optional[float] = None

    @property
    def convex(self) -> bool:
        return self.eta_regime != NONCONVEX


def kappa_pitch_max(params: DesignParams) -> CurvatureReport:
    """Classify the eta regime and return the pitch-curvature maximum.

    Below 1/pi the pitch curve has concave stretches; the report then
    carries the regime flag and no bound.
    """
    eta, p = params.eta, params.p
    r = regime(eta)
    if r == NONCONVEX:
        return CurvatureReport(eta_regime=r, kappa_p_max=None)
    if r == TWO_MAXIMA:
        root = math.sqrt(-4.0 * eta**2 * math.pi**2 + 10.0 * eta * math.pi - 4.0)
        kmax = kappa_max_two_peaks(eta, p)
        psis = (math.pi, math.pi + root, math.pi - root)
    else:
        # at eta = 2/pi the triple root at pi is a maximum
        kmax = kappa_max_centre(eta, p)
        psis = (math.pi,)
    return CurvatureReport(eta_regime=r, kappa_p_max=kmax, extremum_psis=psis, undercut_bound_a4=1.0 / kmax)


def kappa_pitch_second_derivative_at_pi(eta: float, p: float) -> float:
    """kappa_p'' at psi = pi: positive -> local minimum, negative -> maximum."""
    k = TWO_PI * eta - 1.0
    return 4.0 * math.pi * (2.0 - eta * math.pi) / (p * k**4)


def kappa_pitch_second_derivative_at_peaks(eta: float, p: float) -> float:
    """kappa_p'' at the two off-centre extrema (two-maxima regime only)."""
    k = TWO_PI * eta - 1.0
    return 8.0 * math.pi * (eta * math.pi - 2.0) / (9.0 * p * k * math.sqrt(6.0 * eta * math.pi - 3.0))
