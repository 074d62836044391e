"""CSV, JSON and SVG emitters with fixed number formatting."""

from __future__ import annotations

import csv
import io
import json
import math
from typing import Iterable, Sequence
from xml.sax.saxutils import escape

import numpy as np

DIGITS = 12
SVG_DIGITS = 6


def fmt(x) -> str:
    if isinstance(x, (bool, np.bool_)):
        return "true" if x else "false"
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    if isinstance(x, (float, np.floating)):
        return f"{float(x):.{DIGITS}g}"
    if isinstance(x, complex):
        return f"{x.real:.{DIGITS}g}{x.imag:+.{DIGITS}g}i"
    return str(x)


def to_csv(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([fmt(x) for x in row])
    return buf.getvalue()


def _round(obj):
    if isinstance(obj, dict):
        return {k: _round(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round(v) for v in obj]
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (float, np.floating)):
        x = float(obj)
        return float(f"{x:.{DIGITS}g}") if math.isfinite(x) else None
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, complex):
        return [_round(obj.real), _round(obj.imag)]
    return obj


def to_json(obj) -> str:
    return json.dumps(_round(obj), sort_keys=True, indent=2) + "\n"


class Svg:
    """Minimal SVG canvas on the square ``[-1.05, 1.05]^2`` with y pointing up."""

    def __init__(self, title: str = ""):
        self.items: list[str] = []
        self.title = title
        self.circle(0j, 1.0, stroke="#000000", width=0.004)

    @staticmethod
    def _xy(z: complex) -> tuple[str, str]:
        return f"{z.real + 0.0:.{SVG_DIGITS}g}", f"{0.0 - z.imag:.{SVG_DIGITS}g}"

    def circle(self, center: complex, radius: float, stroke: str = "#000000",
               width: float = 0.004, fill: str = "none", dash: bool = False) -> None:
        x, y = self._xy(complex(center))
        extra = ' stroke-dasharray="0.02,0.02"' if dash else ""
        self.items.append(
            f'<circle cx="{x}" cy="{y}" r="{radius:.{SVG_DIGITS}g}" fill="{fill}" '
            f'stroke="{stroke}" stroke-width="{width}"{extra}/>')

    def polyline(self, points, stroke: str = "#1f77b4", width: float = 0.006,
                 closed: bool = False) -> None:
        pts = np.asarray(points, dtype=complex)
        if pts.size == 0:
            return
        coords = " ".join(",".join(self._xy(z)) for z in pts)
        tag = "polygon" if closed else "polyline"
        self.items.append(f'<{tag} points="{coords}" fill="none" stroke="{stroke}" '
                          f'stroke-width="{width}"/>')

    def point(self, z: complex, color: str = "#d62728", radius: float = 0.012) -> None:
        self.circle(z, radius, stroke=color, fill=color, width=0.002)

    def render(self) -> str:
        head = ('<?xml version="1.0" encoding="UTF-8"?>\n'
                '<svg xmlns="http://www.w3.org/2000/svg" viewBox="-1.05 -1.05 2.1 2.1" '
                'width="600" height="600">\n')
        title = f"<title>{escape(self.title)}</title>\n" if self.title else ""
        return head + title + "\n".join(self.items) + "\n</svg>\n"
