"""Pressure angle, service factor, transmitted force and roller-pin deflection."""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from ._backend import kernels
from .cam import coefficients, extended_angle
from .params import TWO_PI, DesignParams, SingularityError

SERVICE_LIMIT = math.radians(30.0)
MM_TO_UM = 1000.0


class BoundaryValueWarning(UserWarning):
    """Raised (as a warning) when a quantity is evaluated at its pole psi = pi."""


def pressure_angle(psi: float, eta: float, side: int = 1) -> float:
    """Signed pressure angle in rad.

    At psi = pi the formula is singular; the one-sided limit is returned
    (``side=+1`` approaches from above, the driving side) together with a
    :class:`BoundaryValueWarning`.
    """
    k = TWO_PI * eta - 1.0
    x = psi - math.pi
    if x == 0.0:
        warnings.warn("pressure angle evaluated at psi = pi", BoundaryValueWarning, stacklevel=2)
        return math.copysign(math.pi / 2.0, -k * side)
    return math.atan(-k / x)


def abs_pressure_angle(psi, eta: float) -> np.ndarray:
    return kernels.abs_pressure_angle(np.asarray(psi, dtype=float), eta)


def _start_offset(cams: int) -> float:
    # with three cams, cam 3 of the previous cycle takes over until 4 pi/3 - delta
    return math.pi if cams == 2 else 4.0 * math.pi / 3.0


def driving_interval(params: DesignParams, delta: Optional[float] = None) -> Tuple[float, float]:
    """Cam angles over which this cam actually drives the follower."""
    if delta is None:
        delta = extended_angle(params)
    return _start_offset(params.cams) - delta, TWO_PI - delta


def overlap_interval(params: DesignParams, delta: Optional[float] = None) -> Tuple[float, float]:
    """Range where this cam and the preceding one could both drive.

    The preceding cam has the lower |mu| there and takes the load.
    """
    if delta is None:
        delta = extended_angle(params)
    return math.pi, _start_offset(params.cams) - delta


def service_angle(eta: float) -> float:
    """Cam angle above pi beyond which |mu| <= 30 deg."""
    return math.pi + (TWO_PI * eta - 1.0) / math.tan(SERVICE_LIMIT)


def service_factor(params: DesignParams, delta: Optional[float] = None) -> float:
    """Percentage of the driving interval with |mu| <= 30 deg.

    |mu| falls monotonically for psi > pi, so the share is set by a single
    crossing angle.
    """
    lo, hi = driving_interval(params, delta)
    share = (hi - max(lo, service_angle(params.eta))) / (hi - lo)
    return 100.0 * min(max(share, 0.0), 1.0)


def service_factor_grid(params: DesignParams, n: int = 100_000, delta: Optional[float] = None) -> float:
    """Brute-force service factor counted on an n-point grid."""
    lo, hi = driving_interval(params, delta)
    return 100.0 * kernels.fraction_within(lo, hi, params.eta, SERVICE_LIMIT, n)


def force_amplitude(params: DesignParams) -> float:
    """Constant follower-direction force F0 = 2 pi tau / p, in N."""
    return TWO_PI * params.tau / params.p


def transmitted_force(psi: float, params: DesignParams) -> Tuple[float, float]:
    """(f_x, f_y) in N exerted by the cam on the roller."""
    _, _, delta = coefficients(psi, params)
    if delta == 0.0:
        raise SingularityError("f_x is unbounded at psi = pi (outside any driving interval)")
    f0 = force_amplitude(params)
    return f0 / math.tan(delta), f0


def moment_arm(psi: float, params: DesignParams) -> float:
    b2, _, delta = coefficients(psi, params)
    return b2 * math.sin(delta)


def cos2_offset_angle(psi: float, eta: float) -> float:
    k = TWO_PI * eta - 1.0
    return k * k / (k * k + (psi - math.pi) ** 2)


def pin_compliance(params: DesignParams) -> float:
    """beta = 4 L^3 / (3 E pi), in mm^5/N."""
    return 4.0 * params.L**3 / (3.0 * params.E * math.pi)


def pin_deflection_max(params: DesignParams, delta: Optional[float] = None) -> float:
    """Worst-case tip deflection of the roller pin, in micrometres.

    The pin is a cantilever loaded at its free end; the worst load occurs
    at the start of the driving interval.
    """
    a5 = params.pin_radius
    if a5 <= 0:
        raise SingularityError("pin radius must be positive")
    psi_i, _ = driving_interval(params, delta)
    k = TWO_PI * params.eta - 1.0
    x = psi_i - math.pi
    v_mm = pin_compliance(params) * force_amplitude(params) / a5**4 * math.hypot(k, x) / abs(x)
    return v_mm * MM_TO_UM


def objective_z(params: DesignParams, delta: Optional[float] = None) -> float:
    """cos^2(delta_i) / (a5/p)^4, the quantity the optimizer minimizes."""
    alpha5 = params.pin_radius / params.p
    if alpha5 <= 0:
        raise SingularityError("pin radius must be positive")
    psi_i, _ = driving_interval(params, delta)
    return cos2_offset_angle(psi_i, params.eta) / alpha5**4


@dataclass(frozen=True)
class KinetostaticReport:
    cams: int
    delta: float
    psi_interval: Tuple[float, float]
    mu_min_abs: float  # deg
    mu_max_abs: float  # deg
    service_factor: float  # percent
    F0: float  # N
    f_x_max: float  # N
    v_L_max: float  # um
    z: float


def analyze(params: DesignParams) -> KinetostaticReport:
    delta = extended_angle(params)
    lo, hi = driving_interval(params, delta)
    mu_lo, mu_hi = (abs(pressure_angle(x, params.eta)) for x in (lo, hi))
    fx, f0 = transmitted_force(lo, params)
    return KinetostaticReport(
        cams=params.cams,
        delta=delta,
        psi_interval=(lo, hi),
        mu_min_abs=math.degrees(min(mu_lo, mu_hi)),
        mu_max_abs=math.degrees(max(mu_lo, mu_hi)),
        service_factor=service_factor(params, delta),
        F0=f0,
        f_x_max=abs(fx),
        v_L_max=pin_deflection_max(params, delta),
        z=objective_z(params, delta),
    )


def pressure_angle_branches(params: DesignParams, n: int = 256) -> List[Tuple[str, np.ndarray, np.ndarray]]:
    """Pressure-angle curves (label, psi, mu in deg) of every cam over one turn of cam 1.

    Each cam is shown over the range where it can drive, phase-shifted by
    its mounting angle; with three cams the previous-cycle branch of cam 3
    is included as ``3'``.
    """
    delta = extended_angle(params)
    step = TWO_PI / params.cams
    shifts = [("1", 0.0)] + [(str(j + 1), j * step) for j in range(1, params.cams)]
    shifts.append((f"{params.cams}'", -step))
    out = []
    k = TWO_PI * params.eta - 1.0
    for label, shift in shifts:
        local = np.linspace(math.pi, TWO_PI - delta, n)
        # skip the pole at psi = pi
        local[0] = np.nextafter(math.pi, 4.0)
        mu = np.degrees(np.arctan(-k / (local - math.pi)))
        out.append((label, local + shift, mu))
    return out
