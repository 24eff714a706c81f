"""Closed-form cam geometry: input-output law, profile, pitch curve, extended angle."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal, Tuple

import numpy as np

from ._backend import kernels
from .params import TWO_PI, DesignParams, InfeasibleDesignError, SingularityError

CurveKind = Literal["cam", "pitch"]

#: bisection stopping rules for the extended angle
ROOT_RESIDUAL = 1e-12  # times p
ROOT_WIDTH = 1e-12  # rad


def displacement(psi, p: float):
    """Follower displacement s(psi); one cam turn moves the follower by p."""
    if p <= 0:
        raise ValueError(f"pitch must be positive, got {p!r}")
    if np.ndim(psi):
        psi = np.asarray(psi, dtype=float)
    return p * psi / TWO_PI - 0.5 * p


def displacement_derivatives(p: float) -> Tuple[float, float]:
    """(s', s''), both constant."""
    if p <= 0:
        raise ValueError(f"pitch must be positive, got {p!r}")
    return p / TWO_PI, 0.0


def coefficients(psi: float, params: DesignParams) -> Tuple[float, float, float]:
    """Return (b2, b3, delta) at cam angle ``psi``.

    ``delta`` uses single-branch arctan; this is only valid because
    ``DesignParams`` enforces eta > 1/(2 pi).
    """
    k = TWO_PI * params.eta - 1.0
    if k == 0.0:
        raise SingularityError("eta = 1/(2 pi) makes delta undefined")
    b2 = params.p / TWO_PI
    x = psi - math.pi
    b3 = b2 * math.hypot(k, x)
    delta = math.atan(x / k)
    return b2, b3, delta


def cam_point(psi, params: DesignParams):
    """Contact point (u_c, v_c) in the cam frame. Accepts scalars or arrays."""
    u, v = kernels.cam_curve(np.atleast_1d(np.asarray(psi, dtype=float)), params.p, params.eta, params.a4)
    if np.ndim(psi) == 0:
        return float(u[0]), float(v[0])
    return u.reshape(np.shape(psi)), v.reshape(np.shape(psi))


def pitch_point(psi, params: DesignParams):
    """Roller-centre position (u_p, v_p) in the cam frame."""
    u, v = kernels.pitch_curve(np.atleast_1d(np.asarray(psi, dtype=float)), params.p, params.eta)
    if np.ndim(psi) == 0:
        return float(u[0]), float(v[0])
    return u.reshape(np.shape(psi)), v.reshape(np.shape(psi))


def extended_angle(params: DesignParams) -> float:
    """Negative cam angle at which the profile closes on the u-axis.

    This is the largest root of v_c on (-pi, 0). A coarse downward scan
    brackets it and bisection refines it until |v_c| <= 1e-12 p or the
    bracket is narrower than 1e-12 rad.
    """
    try:
        return kernels.extended_angle(
            params.p, params.eta, params.a4, ROOT_RESIDUAL * params.p, ROOT_WIDTH
        )
    except ValueError as exc:
        raise InfeasibleDesignError(
            f"profile does not close for eta={params.eta}, a4={params.a4}: {exc}"
        ) from None


@dataclass(frozen=True)
class CamProfile:
    """Sampled closed curve over psi in [delta, 2 pi - delta]."""

    delta: float
    psi: np.ndarray
    u: np.ndarray
    v: np.ndarray
    curve_kind: str = "cam"

    def __len__(self) -> int:
        return len(self.psi)

    @property
    def samples(self):
        return list(zip(self.psi.tolist(), self.u.tolist(), self.v.tolist()))


def sample_profile(params: DesignParams, n: int = 1024, curve_kind: CurveKind = "cam") -> CamProfile:
    """Sample the cam surface or the pitch curve on a uniform psi grid."""
    if n < 2:
        raise ValueError(f"need at least 2 samples, got {n}")
    if curve_kind not in ("cam", "pitch"):
        raise ValueError(f"curve_kind must be 'cam' or 'pitch', got {curve_kind!r}")
    delta = extended_angle(params)
    psi = np.linspace(delta, TWO_PI - delta, n)
    if curve_kind == "cam":
        u, v = kernels.cam_curve(psi, params.p, params.eta, params.a4)
    else:
        u, v = kernels.pitch_curve(psi, params.p, params.eta)
    for arr in (psi, u, v):
        arr.setflags(write=False)
    return CamProfile(delta=delta, psi=psi, u=u, v=v, curve_kind=curve_kind)
