"""Synthesis and optimum design of Slide-o-Cam roller-follower transmissions."""

__version__ = "0.1.0"

from ._backend import BACKEND
from .cam import (
    CamProfile,
    cam_point,
    coefficients,
    displacement,
    displacement_derivatives,
    extended_angle,
    pitch_point,
    sample_profile,
)
from .curvature import CurvatureReport, curvature_parametric, kappa_cam, kappa_pitch, kappa_pitch_max
from .feasibility import ConstraintReport, a4_admissible_bound, check_constraints
from .kinetostatics import (
    KinetostaticReport,
    analyze,
    driving_interval,
    objective_z,
    pin_deflection_max,
    pressure_angle,
    service_factor,
    transmitted_force,
)
from .optimizer import (
    BearingModel,
    SweepTable,
    minimize_z,
    pin_radius_from_roller,
    select_compromise,
    sweep,
    three_cam_offsets,
)
from .params import (
    DesignParams,
    InfeasibleDesignError,
    InvalidParamsError,
    SingularityError,
    SlideOCamError,
)
