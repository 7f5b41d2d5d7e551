"""Deterministic SVG and PPM rendering of a (transformed) star field.

Byte-identical output for identical inputs: all coordinates are emitted
with fixed formatting and the raster path uses integer arithmetic only
after a single rounding step.  Stars are discs; radius follows a linear
ramp in magnitude (6.0 mag -> 1 px, 0.0 mag -> 6 px, clamped) and fill
color comes from a fixed 16-entry blackbody table with linear
interpolation.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass
from typing import IO, Sequence

import numpy as np

from .starfield import TransformedStar

_MARGIN = 8
_PROJECTIONS = ("stereographic", "orthographic")
_FORMATS = ("svg", "ppm")
_HEMISPHERES = ("north", "south", "both")

_BACKGROUND = (0, 0, 0)

# Blackbody temperature -> sRGB, sampled once and frozen; linearly
# interpolated and clamped at the ends.
_BLACKBODY_RGB = (
    (1000.0, (255, 68, 0)),
    (3000.0, (255, 177, 110)),
    (5000.0, (255, 228, 206)),
    (7000.0, (243, 242, 255)),
    (9000.0, (210, 223, 255)),
    (11000.0, (196, 214, 255)),
    (13000.0, (187, 209, 255)),
    (15000.0, (181, 205, 255)),
    (17000.0, (176, 202, 255)),
    (19000.0, (172, 199, 255)),
    (21000.0, (169, 197, 255)),
    (23000.0, (166, 195, 255)),
    (25000.0, (164, 194, 255)),
    (27000.0, (162, 192, 255)),
    (29000.0, (160, 191, 255)),
    (31000.0, (158, 190, 255)),
)


@dataclass(frozen=True)
class RenderSpec:
    """Image parameters; width and height in pixels, at least 16 each."""

    projection: str = "stereographic"
    width: int = 800
    height: int = 800
    format: str = "svg"
    hemisphere: str = "north"

    def __post_init__(self):
        if self.projection not in _PROJECTIONS:
            raise ValueError(f"projection must be one of {_PROJECTIONS}")
        if self.format not in _FORMATS:
            raise ValueError(f"format must be one of {_FORMATS}")
        if self.hemisphere not in _HEMISPHERES:
            raise ValueError(f"hemisphere must be one of {_HEMISPHERES}")
        if self.width < 16 or self.height < 16:
            raise ValueError("width and height must be at least 16 pixels")


def blackbody_rgb(temp_k: float) -> tuple[int, int, int]:
    """Interpolated disc color for a blackbody of the given temperature."""
    table = _BLACKBODY_RGB
    if temp_k <= table[0][0]:
        return table[0][1]
    if temp_k >= table[-1][0]:
        return table[-1][1]
    for (t0, c0), (t1, c1) in zip(table, table[1:]):
        if t0 <= temp_k <= t1:
            frac = (temp_k - t0) / (t1 - t0)
            return tuple(int(round(a + frac * (b - a))) for a, b in zip(c0, c1))
    raise AssertionError("unreachable")  # pragma: no cover


def disc_radius_px(vmag: float) -> float:
    """Linear ramp 6.0 mag -> 1 px, 0.0 mag -> 6 px, clamped to [1, 6]."""
    return min(6.0, max(1.0, 1.0 + (6.0 - vmag) * (5.0 / 6.0)))


def _project_to_panel(star: TransformedStar, projection: str,
                      hemisphere: str) -> tuple[float, float] | None:
    """Unit-disc coordinates (u, v) of the star, or None when not drawable.

    Stereographic views project through the pole opposite the hemisphere;
    a star exactly at the excluded pole has no image at all and is
    reported by the caller as dropped.  Orthographic views simply cull the
    far hemisphere.
    """
    q = star.q_after
    if projection == "stereographic":
        if hemisphere == "north":
            if q.is_infinity:
                return None
            w = q.z1 / q.z2
        else:
            if abs(q.z1) <= 1e-14:
                return None
            w = (q.z2 / q.z1).conjugate()
        if abs(w) > 1.0:
            return None  # beyond the equator: outside this panel's disc
        return w.real, w.imag
    # Orthographic: (x1, x2)/r with the rear hemisphere culled; the south
    # view is seen from below, mirroring the second axis.
    w = 2.0 * q.z1 * q.z2.conjugate()
    x3 = abs(q.z2) ** 2 - abs(q.z1) ** 2
    if hemisphere == "north":
        if x3 < 0.0:
            return None
        return w.real, w.imag
    if x3 > 0.0:
        return None
    return w.real, -w.imag


def _panels(spec: RenderSpec) -> list[tuple[str, float, float, float]]:
    """(hemisphere, center_x, center_y, scale) for each drawn panel."""
    if spec.hemisphere == "both":
        half = spec.width / 2.0
        radius = min(half, spec.height) / 2.0 - _MARGIN
        return [("north", half / 2.0, spec.height / 2.0, radius),
                ("south", half + half / 2.0, spec.height / 2.0, radius)]
    radius = min(spec.width, spec.height) / 2.0 - _MARGIN
    return [(spec.hemisphere, spec.width / 2.0, spec.height / 2.0, radius)]


def _placements(stars: Sequence[TransformedStar], spec: RenderSpec
                ) -> tuple[list[tuple[float, float, float, tuple[int, int, int]]], int]:
    """Pixel placements (x, y, radius, rgb) in draw order, plus dropped count."""
    placed = []
    dropped = 0
    for star in stars:
        seen = False
        for hemi, cx, cy, scale in _panels(spec):
            uv = _project_to_panel(star, spec.projection, hemi)
            if uv is None:
                continue
            seen = True
            placed.append((cx + scale * uv[0], cy - scale * uv[1],
                           disc_radius_px(star.vmag_after),
                           blackbody_rgb(star.temp_after)))
        if not seen:
            dropped += 1
    return placed, dropped


def render(stars: Sequence[TransformedStar], spec: RenderSpec,
           diagnostics: IO[str] | None = None) -> bytes:
    """Render the star field to image bytes (SVG text or binary PPM).

    Stars that cannot be represented (at an excluded pole, or outside the
    visible hemisphere) are dropped; their count goes to ``diagnostics``
    (stderr by default) when non-zero.
    """
    placed, dropped = _placements(stars, spec)
    if dropped:
        out = diagnostics if diagnostics is not None else sys.stderr
        print(f"dropped {dropped} star(s) not representable in this projection",
              file=out)
    if spec.format == "svg":
        return _render_svg(placed, spec)
    return _render_ppm(placed, spec)


def _render_svg(placed, spec: RenderSpec) -> bytes:
    bg = "#{:02x}{:02x}{:02x}".format(*_BACKGROUND)
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{spec.width}" '
        f'height="{spec.height}" viewBox="0 0 {spec.width} {spec.height}">',
        f'<rect width="{spec.width}" height="{spec.height}" fill="{bg}"/>',
    ]
    for _, cx, cy, radius in _panels(spec):
        lines.append(f'<circle cx="{cx:.3f}" cy="{cy:.3f}" r="{radius:.3f}" '
                     'fill="none" stroke="#303030" stroke-width="1"/>')
    for x, y, rad, rgb in placed:
        color = "#{:02x}{:02x}{:02x}".format(*rgb)
        lines.append(f'<circle cx="{x:.3f}" cy="{y:.3f}" r="{rad:.3f}" fill="{color}"/>')
    lines.append("</svg>")
    return ("\n".join(lines) + "\n").encode("ascii")


def _render_ppm(placed, spec: RenderSpec) -> bytes:
    img = np.zeros((spec.height, spec.width, 3), dtype=np.uint8)
    img[:, :] = _BACKGROUND
    for x, y, rad, rgb in placed:
        x0 = max(0, int(math.floor(x - rad - 1)))
        x1 = min(spec.width - 1, int(math.ceil(x + rad + 1)))
        y0 = max(0, int(math.floor(y - rad - 1)))
        y1 = min(spec.height - 1, int(math.ceil(y + rad + 1)))
        if x1 < x0 or y1 < y0:
            continue
        ys, xs = np.mgrid[y0:y1 + 1, x0:x1 + 1]
        mask = (xs + 0.5 - x) ** 2 + (ys + 0.5 - y) ** 2 <= rad * rad
        img[y0:y1 + 1, x0:x1 + 1][mask] = rgb
    header = f"P6\n{spec.width} {spec.height}\n255\n".encode("ascii")
    return header + img.tobytes()
