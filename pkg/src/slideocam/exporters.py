"""Deterministic CSV, JSON and SVG writers."""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import asdict, fields, is_dataclass
from pathlib import Path
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from . import __version__
from .cam import CamProfile
from .feasibility import CONSTRAINT_NAMES, ConstraintReport
from .kinetostatics import KinetostaticReport
from .optimizer import SweepTable
from .params import DesignParams, SlideOCamError

CSV_HEADER = ("psi_rad", "u_mm", "v_mm")


def _g9(x: float) -> str:
    s = f"{x:.9g}"
    return "0" if s == "-0" else s


def _write_text(path, text: str) -> None:
    Path(path).write_text(text, encoding="utf-8", newline="\n")


# ---------------------------------------------------------------- CSV


def profile_csv(profile: CamProfile) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for psi, u, v in zip(profile.psi, profile.u, profile.v):
        w.writerow((_g9(psi), _g9(u), _g9(v)))
    return buf.getvalue()


def export_profile_csv(profile: CamProfile, path) -> None:
    """Write ``psi_rad,u_mm,v_mm``, one row per sample, 9 significant digits."""
    _write_text(path, profile_csv(profile))


def read_profile_csv(path, curve_kind: str = "cam") -> CamProfile:
    with open(path, newline="", encoding="utf-8") as fh:
        rows = list(csv.reader(fh))
    if not rows or tuple(rows[0]) != CSV_HEADER:
        raise ValueError(f"{path}: not a profile CSV (header {rows[0] if rows else None!r})")
    data = np.array([[float(x) for x in r] for r in rows[1:]], dtype=float).reshape(-1, 3)
    psi, u, v = data.T.copy()
    return CamProfile(delta=float(psi[0]) if len(psi) else math.nan, psi=psi, u=u, v=v, curve_kind=curve_kind)


# ---------------------------------------------------------------- JSON


def _clean(value):
    if isinstance(value, float):
        return value if math.isfinite(value) else None
    if isinstance(value, (list, tuple)):
        return [_clean(v) for v in value]
    if isinstance(value, dict):
        return {k: _clean(v) for k, v in value.items()}
    if isinstance(value, np.generic):
        return _clean(value.item())
    return value


def _params_echo(params: Optional[DesignParams]):
    if params is None:
        return None
    try:
        a5 = params.pin_radius
    except SlideOCamError:
        a5 = None  # placeholder roller with no matching bearing
    return {
        "p_mm": params.p,
        "eta": params.eta,
        "a4_mm": params.a4,
        "a5_mm": a5,
        "b_mm": params.b,
        "L_mm": params.L,
        "tau_Nm": params.tau / 1000.0,
        "E_MPa": params.E,
        "cams": params.cams,
    }


def _kinetostatic_doc(report: KinetostaticReport) -> dict:
    lo, hi = report.psi_interval
    return {
        "kind": "kinetostatic",
        "cams": report.cams,
        "extended_angle_deg": math.degrees(report.delta),
        "driving_interval_deg": [math.degrees(lo), math.degrees(hi)],
        "mu_min_abs_deg": report.mu_min_abs,
        "mu_max_abs_deg": report.mu_max_abs,
        "service_factor_pct": report.service_factor,
        "F0_N": report.F0,
        "f_x_max_N": report.f_x_max,
        "v_L_max_um": report.v_L_max,
        "z": report.z,
    }


def _constraint_doc(report: ConstraintReport) -> dict:
    doc = {"kind": "constraints"}
    doc.update({name: getattr(report, name) for name in CONSTRAINT_NAMES})
    doc.update(
        {
            "a4_upper_bound_mm": report.a4_upper_bound,
            "convex": report.convex,
            "undercut_free": report.undercut_free,
            "feasible": report.feasible,
            "active_constraints": list(report.active_constraints),
            "violated_constraints": list(report.violated_constraints),
        }
    )
    return doc


SWEEP_COLUMNS = (
    ("eta", "eta"),
    ("a4_mm", "a4"),
    ("a5_mm", "a5"),
    ("z", "z"),
    ("v_L_max_um", "v_L_max"),
    ("mu_min_abs_deg", "mu_min_abs"),
    ("mu_max_abs_deg", "mu_max_abs"),
    ("service_factor_pct", "service_factor"),
)


def sweep_columns(cams: int) -> List[Tuple[str, str]]:
    # the three-cam table is reported without the objective column
    return [c for c in SWEEP_COLUMNS if not (cams == 3 and c[0] == "z")]


def _sweep_doc(table: SweepTable) -> dict:
    cols = sweep_columns(table.cams)
    rows = []
    for row in table.rows:
        entry = {key: getattr(row, attr) for key, attr in cols}
        entry["feasible"] = row.feasible
        if row.note:
            entry["note"] = row.note
        rows.append(entry)
    return {"kind": "sweep", "cams": table.cams, "columns": [k for k, _ in cols], "rows": rows}


def report_document(report, params: Optional[DesignParams] = None) -> dict:
    if isinstance(report, KinetostaticReport):
        body = _kinetostatic_doc(report)
    elif isinstance(report, ConstraintReport):
        body = _constraint_doc(report)
    elif isinstance(report, SweepTable):
        body = _sweep_doc(report)
    elif is_dataclass(report):
        body = {"kind": type(report).__name__, **asdict(report)}
    else:
        raise TypeError(f"cannot export {type(report).__name__}")
    doc = {"tool": "slideocam", "version": __version__, "params": _params_echo(params)}
    doc.update(body)
    return _clean(doc)


def report_json(report, params: Optional[DesignParams] = None) -> str:
    return json.dumps(report_document(report, params), indent=2, allow_nan=False) + "\n"


def export_report_json(report, path, params: Optional[DesignParams] = None) -> None:
    """Write a report as JSON; angles in degrees, deflection in um, forces in N."""
    _write_text(path, report_json(report, params))


# ---------------------------------------------------------------- SVG

_W, _H, _M = 640, 480, 48


class _Frame:
    def __init__(self, xmin, xmax, ymin, ymax, equal=False):
        if xmax == xmin:
            xmin, xmax = xmin - 1, xmax + 1
        if ymax == ymin:
            ymin, ymax = ymin - 1, ymax + 1
        sx = (_W - 2 * _M) / (xmax - xmin)
        sy = (_H - 2 * _M) / (ymax - ymin)
        if equal:
            sx = sy = min(sx, sy)
        self.sx, self.sy = sx, sy
        self.x0 = _M + 0.5 * ((_W - 2 * _M) - sx * (xmax - xmin)) - sx * xmin
        self.y0 = _H - _M - 0.5 * ((_H - 2 * _M) - sy * (ymax - ymin)) + sy * ymin
        self.bounds = (xmin, xmax, ymin, ymax)

    def xy(self, x, y):
        return self.x0 + self.sx * x, self.y0 - self.sy * y


def _polyline(frame: _Frame, x, y, stroke, close=False, dash=None) -> str:
    pts = " ".join(f"{px:.2f},{py:.2f}" for px, py in (frame.xy(a, b) for a, b in zip(x, y)))
    tag = "polygon" if close else "polyline"
    extra = f' stroke-dasharray="{dash}"' if dash else ""
    return f'<{tag} fill="none" stroke="{stroke}" stroke-width="1.5"{extra} points="{pts}"/>'


def _axes(frame: _Frame, xlabel: str, ylabel: str) -> List[str]:
    xmin, xmax, ymin, ymax = frame.bounds
    out = []
    ax_y = min(max(0.0, ymin), ymax)
    ax_x = min(max(0.0, xmin), xmax)
    (x1, y1), (x2, y2) = frame.xy(xmin, ax_y), frame.xy(xmax, ax_y)
    out.append(f'<line x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" y2="{y2:.2f}" stroke="black"/>')
    (x1, y1), (x2, y2) = frame.xy(ax_x, ymin), frame.xy(ax_x, ymax)
    out.append(f'<line x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" y2="{y2:.2f}" stroke="black"/>')
    out.append(f'<text x="{_W - _M:.0f}" y="{_H - 12:.0f}" text-anchor="end" font-size="12">{xlabel}</text>')
    out.append(f'<text x="12" y="{_M - 16:.0f}" font-size="12">{ylabel}</text>')
    out.append(
        f'<text x="{_M:.0f}" y="{_H - 12:.0f}" font-size="10">'
        f"x: [{xmin:.4g}, {xmax:.4g}]  y: [{ymin:.4g}, {ymax:.4g}]</text>"
    )
    return out


def _svg(body: Sequence[str], title: str) -> str:
    head = (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_W}" height="{_H}" viewBox="0 0 {_W} {_H}">\n'
        f"<title>{title}</title>\n"
        f'<rect width="{_W}" height="{_H}" fill="white"/>\n'
    )
    return head + "\n".join(body) + "\n</svg>\n"


def profile_svg(profile: CamProfile) -> str:
    if len(profile) == 0:
        raise ValueError("cannot plot an empty profile")
    u, v = np.asarray(profile.u), np.asarray(profile.v)
    frame = _Frame(min(u.min(), 0.0), max(u.max(), 0.0), min(v.min(), 0.0), max(v.max(), 0.0), equal=True)
    body = _axes(frame, "u (mm)", "v (mm)")
    body.append(_polyline(frame, u, v, "#1f77b4", close=True))
    return _svg(body, f"{profile.curve_kind} profile")


PressureSeries = Iterable[Tuple[str, np.ndarray, np.ndarray]]


def pressure_angle_svg(series: PressureSeries, limit_deg: float = 30.0) -> str:
    series = [(lab, np.asarray(x), np.asarray(y)) for lab, x, y in series]
    if not series or any(len(x) == 0 for _, x, _ in series):
        raise ValueError("cannot plot an empty pressure-angle series")
    xs = np.concatenate([x for _, x, _ in series])
    ys = np.concatenate([y for _, _, y in series])
    frame = _Frame(xs.min(), xs.max(), min(ys.min(), -limit_deg), max(ys.max(), limit_deg))
    body = _axes(frame, "psi (rad)", "mu (deg)")
    colors = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#8c564b")
    for sign in (1.0, -1.0):
        body.append(
            _polyline(frame, [xs.min(), xs.max()], [sign * limit_deg] * 2, "#7f7f7f", dash="6,4")
        )
    for i, (label, x, y) in enumerate(series):
        body.append(_polyline(frame, x, y, colors[i % len(colors)]))
        lx, ly = frame.xy(x[-1], y[-1])
        body.append(f'<text x="{lx + 4:.2f}" y="{ly:.2f}" font-size="11">{label}</text>')
    return _svg(body, "pressure angle")


def plot_svg(data, path) -> None:
    """Render a CamProfile or a pressure-angle series to SVG.

    Nothing is written when the data is empty.
    """
    text = profile_svg(data) if isinstance(data, CamProfile) else pressure_angle_svg(data)
    _write_text(path, text)
