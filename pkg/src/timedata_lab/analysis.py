"""Spreadsheet pipeline: builds link-model sheets, serializes them to CSV
with typed error sentinels, and renders the radar chart as standalone SVG.
"""

from __future__ import annotations

import csv
import hashlib
import math
import time
import warnings
from dataclasses import dataclass, field

from . import linkmodel
from .errors import (ChartError, CsvParseError, DivergenceSignal,
                     DivisionByZeroSignal, DomainError)
from .linkmodel import Target, Timestamp

DIV0 = "#Div/0!"
DIVERGES = "#Inf!"
_SENTINELS = (DIV0, DIVERGES)

CSV_HEADER = "target,progress_pct,f_xy,t,epsilon_lm,delta_t_s,nu_dw_hz,nu_dw_x_hz"

# Numeric CSV cells carry 6 significant digits.
_FMT = "{:.6g}"


@dataclass(frozen=True)
class LinkRecord:
    target_name: str
    progress_pct: float
    f_xy_label: str
    t_stamp: Timestamp
    epsilon_lm: float
    delta_t_s: float
    nu_delta_omega_hz: float | str
    nu_displaced_hz: float | str


@dataclass
class Sheet:
    records: list[LinkRecord]
    source_digest: str = ""
    generated_at: float = field(default=0.0, compare=False)


def _digest(targets, progress_list, base_time) -> str:
    text = repr([(t.name, t.distance_km, t.range_lm) for t in targets]) + \
        repr(list(progress_list)) + str(base_time)
    return hashlib.sha256(text.encode()).hexdigest()[:16]


def build_sheet(targets: list[Target], progress_list: list[float],
                base_time: Timestamp) -> Sheet:
    """One record per (target, progress) in declared order.

    Division-by-zero and divergence signals from the link model are
    captured as typed sentinel cells, never raised to the caller.
    """
    if not targets or not progress_list:
        raise DomainError("need at least one target and one progress value")
    records = []
    for target in targets:
        for progress in progress_list:
            eps = linkmodel.epsilon_from_progress(progress, target.range_lm)
            stamp = linkmodel.shift_timestamp(base_time, eps)
            delta_t = float(round(eps * 60.0))
            try:
                nu = linkmodel.frequency_resolution(target.distance_km, progress)
            except DivisionByZeroSignal:
                nu = DIV0
            try:
                nu_x = linkmodel.displaced_frequency_resolution(
                    target.distance_km, progress)
            except DivergenceSignal:
                nu_x = DIVERGES
            records.append(LinkRecord(
                target_name=target.name,
                progress_pct=progress,
                f_xy_label=f"f(x,y)|{target.name}",
                t_stamp=stamp,
                epsilon_lm=eps,
                delta_t_s=delta_t,
                nu_delta_omega_hz=nu,
                nu_displaced_hz=nu_x,
            ))
    return Sheet(records=records,
                 source_digest=_digest(targets, progress_list, base_time),
                 generated_at=time.time())


def _cell(value) -> str:
    if isinstance(value, str):
        return value
    return _FMT.format(value)


def emit_csv(sheet: Sheet, path) -> None:
    """Write the sheet as UTF-8 CSV with LF line endings.

    The f(x,y) label cell is quoted by the csv writer; all other cells
    are comma-free.
    """
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(CSV_HEADER.split(","))
        for r in sheet.records:
            writer.writerow([
                r.target_name,
                _cell(r.progress_pct),
                r.f_xy_label,
                str(r.t_stamp),
                _cell(r.epsilon_lm),
                _cell(r.delta_t_s),
                _cell(r.nu_delta_omega_hz),
                _cell(r.nu_displaced_hz),
            ])


def _parse_cell(text: str, line_number: int) -> float | str:
    if text in _SENTINELS:
        return text
    if text.startswith("#"):
        raise CsvParseError(f"unknown sentinel {text!r}", line_number)
    try:
        return float(text)
    except ValueError:
        raise CsvParseError(f"bad numeric cell {text!r}", line_number) from None


def parse_csv(path) -> Sheet:
    """Inverse of emit_csv, up to 6-significant-digit rounding."""
    with open(path, encoding="utf-8", newline="") as fh:
        rows = list(csv.reader(fh))
    if not rows or rows[0] != CSV_HEADER.split(","):
        raise CsvParseError("missing or wrong header row", 1)
    records = []
    for i, parts in enumerate(rows[1:], start=2):
        if len(parts) != 8:
            raise CsvParseError(f"expected 8 columns, got {len(parts)}", i)
        try:
            stamp = Timestamp.parse(parts[3])
        except (DomainError, ValueError):
            raise CsvParseError(f"bad timestamp {parts[3]!r}", i) from None
        records.append(LinkRecord(
            target_name=parts[0],
            progress_pct=float(parts[1]),
            f_xy_label=parts[2],
            t_stamp=stamp,
            epsilon_lm=float(parts[4]),
            delta_t_s=float(parts[5]),
            nu_delta_omega_hz=_parse_cell(parts[6], i),
            nu_displaced_hz=_parse_cell(parts[7], i),
        ))
    return Sheet(records=records)


# Radar chart layout constants.
_SIZE = 640
_CENTER = _SIZE / 2
_RADIUS = 240
_COLORS = ("#1f77b4", "#ff7f0e", "#2ca02c", "#d62728")

_ATTRIBUTES = (
    ("epsilon_lm", "epsilon (Lm)"),
    ("delta_t_s", "delta t (s)"),
    ("nu_delta_omega_hz", "nu_dw (Hz)"),
    ("nu_displaced_hz", "nu_dw_x (Hz)"),
)


def _normalize(values):
    numeric = [v for v in values if not isinstance(v, str)]
    if not numeric:
        return None
    lo, hi = min(numeric), max(numeric)
    span = hi - lo
    out = []
    for v in values:
        if isinstance(v, str):
            out.append((0.0, True))
        elif span == 0:
            out.append((1.0, False))
        else:
            out.append(((v - lo) / span, False))
    return out


def render_radar_chart(sheet: Sheet, path) -> None:
    """Render one spoke per record and one closed polyline per attribute.

    Per-attribute min-max normalization to radius [0, 1]; sentinel cells
    sit at radius 0 with a marker. Output bytes are deterministic.
    """
    n = len(sheet.records)
    if n < 3:
        raise ChartError(f"radar chart needs >= 3 records, got {n}")

    def spoke_xy(index, radius_frac):
        angle = -math.pi / 2 + 2 * math.pi * index / n
        return (_CENTER + _RADIUS * radius_frac * math.cos(angle),
                _CENTER + _RADIUS * radius_frac * math.sin(angle))

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_SIZE}" '
        f'height="{_SIZE}" viewBox="0 0 {_SIZE} {_SIZE}" version="1.1">',
        f'<rect width="{_SIZE}" height="{_SIZE}" fill="white"/>',
    ]
    # Spokes and record labels.
    for i, record in enumerate(sheet.records):
        x, y = spoke_xy(i, 1.0)
        parts.append(
            f'<line x1="{_CENTER}" y1="{_CENTER}" x2="{x:.2f}" y2="{y:.2f}" '
            'stroke="#cccccc" stroke-width="1"/>')
        lx, ly = spoke_xy(i, 1.08)
        parts.append(
            f'<text x="{lx:.2f}" y="{ly:.2f}" font-size="11" '
            f'text-anchor="middle">{record.target_name} '
            f'{_cell(record.progress_pct)}%</text>')

    legend_y = 20
    for color_index, (attr, label) in enumerate(_ATTRIBUTES):
        normalized = _normalize([getattr(r, attr) for r in sheet.records])
        if normalized is None:
            warnings.warn(f"attribute {attr} is all sentinels; omitted",
                          stacklevel=2)
            continue
        color = _COLORS[color_index % len(_COLORS)]
        points = [spoke_xy(i, frac) for i, (frac, _) in enumerate(normalized)]
        points.append(points[0])  # close the loop
        point_text = " ".join(f"{x:.2f},{y:.2f}" for x, y in points)
        parts.append(
            f'<polyline points="{point_text}" fill="none" stroke="{color}" '
            'stroke-width="2"/>')
        for i, (frac, is_sentinel) in enumerate(normalized):
            if is_sentinel:
                x, y = spoke_xy(i, frac)
                parts.append(
                    f'<circle cx="{x:.2f}" cy="{y:.2f}" r="4" fill="{color}" '
                    'class="sentinel"/>')
        parts.append(
            f'<rect x="16" y="{legend_y - 10}" width="12" height="12" '
            f'fill="{color}"/>')
        parts.append(
            f'<text x="34" y="{legend_y}" font-size="12">{label}</text>')
        legend_y += 18

    parts.append("</svg>")
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(parts) + "\n")
