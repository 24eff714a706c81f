"""Bearing coupling, eta sweeps, minimization of the pin objective, compromise pick.

With a4 pinned to its largest admissible value and a5 tied to a4 by the
bearing catalogue fit, the design problem reduces to a single variable,
eta. It is solved by a dense grid scan followed by golden-section
refinement.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Sequence, Tuple

from .cam import extended_angle
from .curvature import kappa_max_centre, kappa_max_two_peaks
from .feasibility import CONSTRAINT_NAMES, check_constraints
from .kinetostatics import analyze, objective_z
from .params import ETA_CONVEX, ETA_MERGE, DesignParams, InfeasibleDesignError, SlideOCamError

#: back-off from strict bounds, as a fraction of p
BACKOFF = 1e-4
GRID_STEP = 1e-3
GOLDEN_TOL = 1e-10


@dataclass(frozen=True)
class BearingModel:
    """Linear fit D ~ 1.6 d + 10 (mm) of one rolling-bearing series, in radius form."""

    slope: float = 1.6
    intercept: float = 5.0
    valid_load_range: Tuple[float, float] = (844.0, 7020.0)
    series: int = 2

    def pin_radius(self, a4: float) -> float:
        if a4 <= self.intercept:
            raise InfeasibleDesignError(
                f"no series-{self.series} bearing with outer radius a4={a4} mm (needs a4 > {self.intercept} mm)"
            )
        return (a4 - self.intercept) / self.slope

    def roller_radius(self, a5: float) -> float:
        return self.slope * a5 + self.intercept


SERIES_2 = BearingModel()


def bearing_model(series: int = 2) -> BearingModel:
    if series != 2:
        raise SlideOCamError(f"only bearing series 2 is modelled, got series {series}")
    return SERIES_2


def pin_radius_from_roller(a4: float, p: float = 50.0) -> float:
    """Pin radius a5 matching roller radius a4 in mm.

    Equivalent to alpha5 = (5/8) alpha4 - 25/(8 p) in nondimensional form.
    """
    return SERIES_2.pin_radius(a4)


def three_cam_offsets(p: float) -> Tuple[float, float]:
    """Axial distances (y12, y13) between cam 1 and cams 2 and 3."""
    if p <= 0:
        raise ValueError(f"pitch must be positive, got {p!r}")
    return 4.0 * p / 3.0, 8.0 * p / 3.0


THREE_CAM_ROTATIONS = (2.0 * math.pi / 3.0, 4.0 * math.pi / 3.0)


def largest_roller(eta: float, base: DesignParams) -> float:
    """a4 for a given eta: shaft clearance made active, kept inside the strict caps."""
    p = base.p
    eps = BACKOFF * p
    kmax = kappa_max_two_peaks(eta, p) if eta < ETA_MERGE else kappa_max_centre(eta, p)
    return min(eta * p - base.b, 0.5 * p - eps, 1.0 / kmax - eps)


def design_for(eta: float, base: DesignParams) -> DesignParams:
    a4 = largest_roller(eta, base)
    a5 = min(pin_radius_from_roller(a4, base.p), 0.25 * base.p - BACKOFF * base.p)
    return base.with_(eta=eta, a4=a4, a5=a5)


@dataclass(frozen=True)
class SweepRow:
    eta: float
    a4: float
    a5: float
    z: float
    v_L_max: float
    mu_min_abs: float
    mu_max_abs: float
    service_factor: float
    feasible: bool = True
    note: str = ""

    COLUMNS = ("eta", "a4", "a5", "z", "v_L_max", "mu_min_abs", "mu_max_abs", "service_factor")

    def as_dict(self) -> dict:
        return {name: getattr(self, name) for name in self.COLUMNS + ("feasible", "note")}


@dataclass(frozen=True)
class SweepTable:
    cams: int
    rows: Tuple[SweepRow, ...] = field(default_factory=tuple)

    def __len__(self) -> int:
        return len(self.rows)

    def __iter__(self):
        return iter(self.rows)


def _row(eta: float, base: DesignParams) -> SweepRow:
    nan = float("nan")
    try:
        params = design_for(eta, base)
        report = check_constraints(params)
        if not report.feasible:
            raise InfeasibleDesignError("violates " + ", ".join(report.violated_constraints))
        kin = analyze(params)
    except SlideOCamError as exc:
        return SweepRow(eta, nan, nan, nan, nan, nan, nan, nan, feasible=False, note=str(exc))
    return SweepRow(
        eta=eta,
        a4=params.a4,
        a5=params.a5,
        z=kin.z,
        v_L_max=kin.v_L_max,
        mu_min_abs=kin.mu_min_abs,
        mu_max_abs=kin.mu_max_abs,
        service_factor=kin.service_factor,
    )


def sweep(eta_list: Iterable[float], base: DesignParams, cams: Optional[int] = None) -> SweepTable:
    """One table row per eta, sorted by descending eta.

    Infeasible etas are kept as flagged rows rather than dropped.
    """
    if cams is not None:
        base = base.with_(cams=cams)
    rows = [_row(float(eta), base) for eta in sorted(set(eta_list), reverse=True)]
    return SweepTable(cams=base.cams, rows=tuple(rows))


def _z_of_eta(eta: float, base: DesignParams) -> float:
    try:
        params = design_for(eta, base)
        if not check_constraints(params).feasible:
            return math.inf
        return objective_z(params, extended_angle(params))
    except SlideOCamError:
        return math.inf


def golden_section(f, a: float, b: float, tol: float = GOLDEN_TOL) -> Tuple[float, float]:
    """Minimize a unimodal f on [a, b]; returns (x, f(x))."""
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    c = b - invphi * (b - a)
    d = a + invphi * (b - a)
    fc, fd = f(c), f(d)
    while b - a > tol:
        if fc <= fd:
            b, d, fd = d, c, fc
            c = b - invphi * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + invphi * (b - a)
            fd = f(d)
    x = 0.5 * (a + b)
    return x, f(x)


@dataclass(frozen=True)
class OptimumResult:
    eta: float
    a4: float
    a5: float
    z: float
    active_constraints: Tuple[str, ...]
    params: DesignParams


def minimize_z(base: DesignParams, eta_bounds: Tuple[float, float]) -> OptimumResult:
    """Minimize the pin objective over eta within ``eta_bounds``.

    Constraints held at their back-off distance count as active, so the
    reported active set uses a tolerance of one back-off step.
    """
    lo, hi = map(float, eta_bounds)
    if lo > hi:
        raise ValueError(f"empty eta interval {eta_bounds}")
    if lo < ETA_CONVEX - 1e-12:
        raise InfeasibleDesignError(f"eta lower bound {lo} is below the convexity limit 1/pi")
    lo = max(lo, ETA_CONVEX)

    def f(eta):
        return _z_of_eta(eta, base)

    n = max(int(math.ceil((hi - lo) / GRID_STEP)), 1)
    grid = [lo + (hi - lo) * i / n for i in range(n + 1)] if hi > lo else [lo]
    values = [f(x) for x in grid]
    best = min(range(len(grid)), key=values.__getitem__)
    if not math.isfinite(values[best]):
        raise InfeasibleDesignError(f"no feasible design for eta in [{lo}, {hi}]")
    eta, z = grid[best], values[best]
    if len(grid) > 1:
        a = grid[max(best - 1, 0)]
        b = grid[min(best + 1, len(grid) - 1)]
        x, fx = golden_section(f, a, b)
        if fx < z:
            eta, z = x, fx
    params = design_for(eta, base)
    report = check_constraints(params, active_tol=BACKOFF + 1e-9)
    return OptimumResult(
        eta=eta,
        a4=params.a4,
        a5=params.a5,
        z=z,
        active_constraints=tuple(n for n in CONSTRAINT_NAMES if n in report.active_constraints),
        params=params,
    )


def select_compromise(
    table: SweepTable, max_deflection: float = math.inf, min_service_factor: float = 0.0
) -> Optional[SweepRow]:
    """Highest-eta feasible row meeting both the deflection and service-factor limits."""
    candidates = [
        r
        for r in table.rows
        if r.feasible and r.v_L_max <= max_deflection and r.service_factor >= min_service_factor
    ]
    if not candidates:
        return None
    return max(candidates, key=lambda r: r.eta)


TWO_CAM_ETAS: Sequence[float] = (0.69, 0.5, 0.4, 0.39, 0.38, 0.37, 0.36, 0.35, 0.34, 0.33, 1.0 / math.pi)
THREE_CAM_ETAS: Sequence[float] = TWO_CAM_ETAS[1:]
