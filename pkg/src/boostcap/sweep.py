"""Parameter sweeps over spread and rapidity, with deterministic outputs.

A sweep evaluates the channel and its capacity bounds on a uniform grid
along one axis (inverse spread at fixed rapidity, or rapidity at fixed
inverse spread).  Rows are emitted in grid order regardless of worker
completion order, numeric cells carry 17 significant digits, and a manifest
(tool version, quadrature settings, resolved conventions) accompanies every
data file; identical manifests imply byte-identical CSV output.
"""

from __future__ import annotations

import csv
import hashlib
import io
import json
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from datetime import datetime, timezone

from . import __version__
from .capacity import capacity_report
from .channel import PacketFrame, lambda_numeric, lambda_probs
from .errors import BoostcapError, DomainError
from .quadrature import QuadratureConfig, SWEEP_CONFIG

AXES = ("inv_gamma", "zeta")

# numerical conventions resolved against the quadrature oracles; recorded in
# every manifest so data files are self-describing
CONVENTIONS = {
    "elliptic_argument": "parameter m (not modulus k)",
    "lambda2_sign": "+1 in the zero-spread limit (identity channel)",
    "normalization_closed_form": "pi^(3/2) * Gamma * erfcx(1/Gamma)",
    "lambda3_integration_constant": "-4*pi*(euler_gamma + 1 + log 4)",
    "rapidity_sign": "negative rapidity = approaching observers",
    "measure_prefactor": "constant momentum-measure prefactor dropped throughout",
}

COLUMNS = (
    "index", "inv_gamma", "zeta", "l1", "l2", "l3",
    "p0", "p1", "p2", "p3",
    "classical_capacity", "hashing_raw", "hashing", "cerf",
    "cerf_zero_capacity", "entanglement_breaking", "status",
)

_FLOAT_COLUMNS = frozenset(COLUMNS[1:14])


@dataclass(frozen=True)
class SweepSpec:
    """One-axis grid: ``axis`` runs from start to stop; ``fixed`` is the other."""

    axis: str
    start: float
    stop: float
    steps: int
    fixed: float

    def __post_init__(self):
        if self.axis not in AXES:
            raise DomainError(f"axis must be one of {AXES}, got {self.axis!r}")
        if not (self.start < self.stop):
            raise DomainError("sweep range is empty (start must be < stop)")
        if self.steps < 2:
            raise DomainError("a sweep needs at least 2 steps")
        if self.axis == "inv_gamma" and self.start <= 0:
            raise DomainError("inverse spread must be positive")
        if self.axis == "zeta" and self.fixed <= 0:
            raise DomainError("fixed inverse spread must be positive")

    def grid(self) -> list[float]:
        h = (self.stop - self.start) / (self.steps - 1)
        return [self.start + i * h for i in range(self.steps)]


@dataclass(frozen=True)
class RunManifest:
    """Everything needed to reproduce a data file, plus its identity hash."""

    tool: str
    version: str
    spec: dict
    quadrature: dict
    method: str
    conventions: dict
    manifest_id: str
    timestamp: str
    data_files: dict = field(default_factory=dict)


def make_manifest(spec: SweepSpec, cfg: QuadratureConfig, method: str) -> RunManifest:
    payload = {
        "tool": "boostcap",
        "version": __version__,
        "spec": asdict(spec),
        "quadrature": {"abs_tol": cfg.abs_tol, "rel_tol": cfg.rel_tol,
                       "max_subdivisions": cfg.max_subdivisions},
        "method": method,
        "conventions": CONVENTIONS,
    }
    digest = hashlib.sha256(
        json.dumps(payload, sort_keys=True, separators=(",", ":")).encode()).hexdigest()
    return RunManifest(manifest_id=digest,
                       timestamp=datetime.now(timezone.utc).isoformat(),
                       **payload)


def _eval_point(args: tuple) -> dict:
    index, inv_gamma, zeta, cfg_tuple, method = args
    row = {"index": index, "inv_gamma": inv_gamma, "zeta": zeta, "status": "ok"}
    try:
        cfg = QuadratureConfig(*cfg_tuple)
        lam = lambda_numeric(PacketFrame(1.0 / inv_gamma, zeta), cfg, method)
        rep = capacity_report(lam)
        p = lambda_probs(lam)
        row.update(l1=lam.l1, l2=lam.l2, l3=lam.l3,
                   p0=p.p0, p1=p.p1, p2=p.p2, p3=p.p3,
                   classical_capacity=rep.classical, hashing_raw=rep.hashing_raw,
                   hashing=rep.hashing, cerf=rep.cerf,
                   cerf_zero_capacity=rep.cerf_zero_capacity,
                   entanglement_breaking=rep.entanglement_breaking)
    except BoostcapError as exc:
        row["status"] = f"error:{type(exc).__name__}"
    return row


def run_sweep(spec: SweepSpec, cfg: QuadratureConfig = SWEEP_CONFIG,
              method: str = "closed_profile", jobs: int | None = None) -> list[dict]:
    """Evaluate the sweep grid; failed points are flagged rows, not run failures."""
    cfg_tuple = (cfg.abs_tol, cfg.rel_tol, cfg.max_subdivisions)
    tasks = []
    for i, x in enumerate(spec.grid()):
        inv_gamma, zeta = (x, spec.fixed) if spec.axis == "inv_gamma" else (spec.fixed, x)
        tasks.append((i, inv_gamma, zeta, cfg_tuple, method))
    if jobs is None:
        jobs = os.cpu_count() or 1
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_eval_point, tasks, chunksize=1))
    else:
        rows = [_eval_point(t) for t in tasks]
    return rows


def _format_cell(column: str, value) -> str:
    if value is None:
        return ""
    if column in _FLOAT_COLUMNS:
        return format(float(value), ".17g")
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def render_csv(rows: list[dict]) -> bytes:
    """RFC-4180 CSV ('.' decimal separator, 17 significant digits)."""
    buf = io.StringIO()
    writer = csv.writer(buf, quoting=csv.QUOTE_MINIMAL, lineterminator="\r\n")
    writer.writerow(COLUMNS)
    for row in rows:
        writer.writerow([_format_cell(c, row.get(c)) for c in COLUMNS])
    return buf.getvalue().encode()


def write_csv(path: str, rows: list[dict], manifest: RunManifest) -> None:
    """Write the data file plus its side-car ``<path>.manifest.json``.

    The manifest records the data file's name and SHA-256, tying each data
    file to exactly one manifest.
    """
    payload = render_csv(rows)
    with open(path, "wb") as fh:
        fh.write(payload)
    doc = asdict(manifest)
    doc["data_files"] = {os.path.basename(path): hashlib.sha256(payload).hexdigest()}
    with open(path + ".manifest.json", "w") as fh:
        json.dump(doc, fh, indent=2, sort_keys=True)
        fh.write("\n")


def render_json(rows: list[dict], manifest: RunManifest) -> str:
    doc = {"manifest": asdict(manifest), "rows": rows}
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def write_json(path: str, rows: list[dict], manifest: RunManifest) -> None:
    with open(path, "w") as fh:
        fh.write(render_json(rows, manifest))


def _cerf_crossing(rows: list[dict], axis: str) -> float | None:
    prev = None
    for row in rows:
        if row["status"] != "ok":
            continue
        x, margin = row[axis], row["cerf"] - 0.5
        if prev is not None:
            x0, m0 = prev
            if m0 > 0.0 >= margin or m0 >= 0.0 > margin or margin > 0.0 >= m0:
                return x0 + (x - x0) * m0 / (m0 - margin)
        prev = (x, margin)
    return None


def render_svg(rows: list[dict], spec: SweepSpec) -> str:
    """Static two-curve plot (classical capacity and clamped hashing bound)
    against the sweep axis, with a vertical rule at the zero-capacity
    boundary when it is crossed."""
    width, height, pad = 640.0, 440.0, 56.0
    ok = [r for r in rows if r["status"] == "ok"]
    xs = [r[spec.axis] for r in ok]
    if not xs:
        raise DomainError("no successful rows to plot")
    x0, x1 = min(xs), max(xs)
    span = (x1 - x0) or 1.0

    def sx(x: float) -> float:
        return pad + (x - x0) / span * (width - 2 * pad)

    def sy(y: float) -> float:
        return height - pad - max(0.0, min(1.0, y)) * (height - 2 * pad)

    def path(column: str) -> str:
        pts = [f"{sx(r[spec.axis]):.2f},{sy(r[column]):.2f}" for r in ok]
        return " ".join(pts)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0f}" height="{height:.0f}">',
        f'<rect width="{width:.0f}" height="{height:.0f}" fill="white"/>',
        f'<rect x="{pad:.0f}" y="{pad:.0f}" width="{width - 2 * pad:.0f}" '
        f'height="{height - 2 * pad:.0f}" fill="none" stroke="black"/>',
    ]
    crossing = _cerf_crossing(rows, spec.axis)
    if crossing is not None and x0 <= crossing <= x1:
        parts.append(f'<line x1="{sx(crossing):.2f}" y1="{pad:.0f}" '
                     f'x2="{sx(crossing):.2f}" y2="{height - pad:.0f}" '
                     'stroke="gray" stroke-dasharray="3,3"/>')
    parts.append(f'<polyline points="{path("classical_capacity")}" fill="none" '
                 'stroke="steelblue" stroke-dasharray="6,3" stroke-width="1.5"/>')
    parts.append(f'<polyline points="{path("hashing")}" fill="none" '
                 'stroke="firebrick" stroke-width="1.5"/>')
    parts.append(f'<text x="{width / 2:.0f}" y="{height - 14:.0f}" '
                 f'text-anchor="middle" font-size="14">{spec.axis}</text>')
    parts.append(f'<text x="16" y="{height / 2:.0f}" font-size="14" '
                 f'transform="rotate(-90 16 {height / 2:.0f})" '
                 'text-anchor="middle">bits per channel</text>')
    parts.append(f'<text x="{pad:.0f}" y="{pad - 10:.0f}" font-size="12">'
                 f'C dashed blue, Q lower bound red; axis {x0:.6g} to {x1:.6g}, '
                 f'fixed {spec.fixed:.6g}</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def write_svg(path: str, rows: list[dict], spec: SweepSpec) -> None:
    with open(path, "w") as fh:
        fh.write(render_svg(rows, spec))


def load_config_file(path: str) -> dict:
    """key = value lines; '#' starts a comment; unknown keys rejected."""
    known = {"abs_tol": float, "rel_tol": float, "max_subdivisions": int}
    out: dict = {}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise DomainError(f"{path}:{lineno}: expected 'key = value'")
            key, _, value = line.partition("=")
            key = key.strip()
            if key not in known:
                raise DomainError(f"{path}:{lineno}: unknown config key {key!r}")
            try:
                out[key] = known[key](value.strip())
            except ValueError as exc:
                raise DomainError(f"{path}:{lineno}: bad value for {key!r}") from exc
    return out


def resolve_quadrature_config(file_values: dict, abs_tol: float | None,
                              rel_tol: float | None,
                              max_subdivisions: int | None) -> QuadratureConfig:
    """Flags override file values override sweep defaults."""
    base = {"abs_tol": SWEEP_CONFIG.abs_tol, "rel_tol": SWEEP_CONFIG.rel_tol,
            "max_subdivisions": SWEEP_CONFIG.max_subdivisions}
    base.update(file_values)
    if abs_tol is not None:
        base["abs_tol"] = abs_tol
    if rel_tol is not None:
        base["rel_tol"] = rel_tol
    if max_subdivisions is not None:
        base["max_subdivisions"] = max_subdivisions
    return QuadratureConfig(**base)


def check_no_nan(rows: list[dict]) -> None:
    """Outputs must be finite or explicitly flagged; NaN never leaks."""
    for row in rows:
        for col in _FLOAT_COLUMNS:
            v = row.get(col)
            if v is not None and not math.isfinite(float(v)):
                raise DomainError(f"non-finite value {v!r} in column {col} "
                                  f"of row {row['index']}")
