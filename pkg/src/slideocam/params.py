"""Design point of a Slide-o-Cam transmission and the errors raised on bad input."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, replace
from typing import Optional

TWO_PI = 2.0 * math.pi

#: eta below (or at) this value makes the offset angle singular and v_c(0) > 0
ETA_SINGULAR = 1.0 / TWO_PI
#: smallest eta giving a convex pitch curve
ETA_CONVEX = 1.0 / math.pi
#: eta at which the two curvature maxima merge at psi = pi
ETA_MERGE = 2.0 / math.pi

#: angle between cam axis and follower direction; fixed for this mechanism
ALPHA1 = -math.pi / 2.0

# Orthoglide defaults (mm, N.mm, MPa)
DEFAULT_P = 50.0
DEFAULT_B = 9.5
DEFAULT_L = 10.0
DEFAULT_TAU = 1200.0
DEFAULT_E = 2.0e5


class SlideOCamError(ValueError):
    """Base class for every error raised by this package."""


class InvalidParamsError(SlideOCamError):
    pass


class InfeasibleDesignError(SlideOCamError):
    """The geometry exists but violates a convexity/assembly constraint."""


class SingularityError(SlideOCamError):
    """A formula was evaluated exactly at one of its poles."""


@dataclass(frozen=True)
class DesignParams:
    """Full design point.

    Lengths in mm, torque in N.mm, Young modulus in MPa. ``a5`` may be left
    as ``None``; it is then taken from the series-2 bearing fit
    (see :func:`slideocam.optimizer.pin_radius_from_roller`).
    """

    eta: float
    a4: float
    p: float = DEFAULT_P
    a5: Optional[float] = None
    b: float = DEFAULT_B
    L: float = DEFAULT_L
    tau: float = DEFAULT_TAU
    E: float = DEFAULT_E
    cams: int = 2

    def __post_init__(self):
        for name in ("p", "a4", "L", "tau", "E"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                raise InvalidParamsError(f"{name} must be a positive number, got {value!r}")
        if not (math.isfinite(self.b) and self.b >= 0):
            raise InvalidParamsError(f"b must be non-negative, got {self.b!r}")
        if self.a5 is not None and not (math.isfinite(self.a5) and self.a5 > 0):
            raise InvalidParamsError(f"a5 must be positive, got {self.a5!r}")
        if not math.isfinite(self.eta) or self.eta <= ETA_SINGULAR:
            raise InvalidParamsError(
                f"eta must exceed 1/(2*pi) = {ETA_SINGULAR:.6f}, got {self.eta!r}"
            )
        if self.cams not in (2, 3):
            raise InvalidParamsError(f"cams must be 2 or 3, got {self.cams!r}")

    @property
    def e(self) -> float:
        """Cam-axis to roller-line distance."""
        return self.eta * self.p

    @property
    def pin_radius(self) -> float:
        if self.a5 is not None:
            return self.a5
        # local import: optimizer depends on this module
        from .optimizer import pin_radius_from_roller

        return pin_radius_from_roller(self.a4, self.p)

    def with_(self, **changes) -> "DesignParams":
        return replace(self, **changes)

    def as_dict(self) -> dict:
        return asdict(self)
