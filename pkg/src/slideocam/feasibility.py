"""Assembly, convexity and undercutting constraints on a design point."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, Tuple

from .curvature import kappa_max_centre, kappa_max_two_peaks, kappa_pitch_max
from .params import ETA_CONVEX, ETA_MERGE, DesignParams, InfeasibleDesignError

ACTIVE_TOL = 1e-6
# round-off allowance on the non-strict constraints (g1, g4)
EQ_TOL = 1e-12

CONSTRAINT_NAMES = ("g1", "g2", "g3", "g4", "g5")
STRICT = {"g1": False, "g2": True, "g3": True, "g4": False, "g5": True}
DESCRIPTIONS = {
    "g1": "pitch curve convexity: eta >= 1/pi",
    "g2": "neighbouring rollers: a4/p < 1/2",
    "g3": "undercutting: a4 < 1/kappa_p_max",
    "g4": "camshaft clearance: a4 + b <= eta p",
    "g5": "neighbouring pins: a5/p < 1/4",
}


def _peak_pitch_curvature(eta: float, p: float) -> float:
    # the two-peak expression also holds on ]1/(2 pi), 1/pi[
    if eta < ETA_MERGE:
        return kappa_max_two_peaks(eta, p)
    return kappa_max_centre(eta, p)


@dataclass(frozen=True)
class ConstraintReport:
    g1: float
    g2: float
    g3: float
    g4: float
    g5: float
    a4_upper_bound: float
    convex: bool
    undercut_free: bool
    feasible: bool
    active_constraints: Tuple[str, ...]
    violated_constraints: Tuple[str, ...]

    @property
    def slacks(self) -> Dict[str, float]:
        return {name: getattr(self, name) for name in CONSTRAINT_NAMES}


def _satisfied(name: str, g: float) -> bool:
    return g < 0.0 if STRICT[name] else g <= EQ_TOL


def check_constraints(params: DesignParams, active_tol: float = ACTIVE_TOL) -> ConstraintReport:
    """Evaluate g1..g5 (all nondimensional, <= 0 / < 0 when satisfied)."""
    p, eta = params.p, params.eta
    alpha4 = params.a4 / p
    try:
        alpha5 = params.pin_radius / p
    except InfeasibleDesignError:
        # no bearing fits this roller: g5 cannot be satisfied
        alpha5 = math.nan
    kmax = _peak_pitch_curvature(eta, p)
    g = {
        "g1": 1.0 / math.pi - eta,
        "g2": alpha4 - 0.5,
        "g3": alpha4 - 1.0 / (p * kmax),
        "g4": alpha4 - eta + params.b / p,
        "g5": alpha5 - 0.25,
    }
    violated = tuple(n for n in CONSTRAINT_NAMES if not _satisfied(n, g[n]))
    active = tuple(n for n in CONSTRAINT_NAMES if abs(g[n]) <= active_tol)
    return ConstraintReport(
        **g,
        a4_upper_bound=min(1.0 / kmax, 0.5 * p, eta * p - params.b),
        convex=_satisfied("g1", g["g1"]),
        undercut_free=_satisfied("g3", g["g3"]),
        feasible=not violated,
        active_constraints=active,
        violated_constraints=violated,
    )


def a4_admissible_bound(params: DesignParams) -> float:
    """Largest admissible roller radius (exclusive for the strict caps)."""
    if params.eta < ETA_CONVEX:
        raise InfeasibleDesignError(
            f"eta={params.eta} < 1/pi: the pitch curve is not convex, no roller bound exists"
        )
    kmax = kappa_pitch_max(params).kappa_p_max
    return min(1.0 / kmax, 0.5 * params.p, params.eta * params.p - params.b)


def require_feasible(params: DesignParams) -> ConstraintReport:
    """Return the constraint report, raising if any constraint is violated."""
    report = check_constraints(params)
    if not report.feasible:
        reasons = "; ".join(
            f"{n} = {getattr(report, n):.6g} ({DESCRIPTIONS[n]})" for n in report.violated_constraints
        )
        raise InfeasibleDesignError(f"infeasible design: {reasons}")
    return report
