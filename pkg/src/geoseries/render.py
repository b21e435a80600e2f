"""Deterministic SVG output: same scene and options, same bytes, always.

No binary floating point anywhere: layout runs in exact rationals and
coordinates are printed through format_coordinate, which expands the
decimal digits from integers with half-away-from-zero rounding.  The
equilateral look for layered scenes is a cosmetic y-stretch by a fixed
rational stand-in for sqrt(3); the audit never sees these coordinates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from xml.sax.saxutils import escape

from .geometry import ROLE_OUTLINE, Point, Scene
from .rational import ONE, Rational

# 18 correct digits of sqrt(3); cosmetic stretch only, never audited.
SQRT3 = Fraction(1_732_050_807_568_877_293, 10**18)


@dataclass(frozen=True)
class RenderOptions:
    canvas_width_px: int = 600
    color_fill: str = "#00ffff"
    stroke_color: str = "#000000"
    decimal_places: int = 6
    show_labels: bool = True
    show_layer_annotations: bool = True
    equilateral_look: bool = True

    def __post_init__(self) -> None:
        if self.canvas_width_px < 1:
            raise ValueError(f"canvas width must be positive, got {self.canvas_width_px}")
        if not 1 <= self.decimal_places <= 12:
            raise ValueError(
                f"decimal_places must lie in [1, 12], got {self.decimal_places}"
            )


def format_coordinate(q: Rational, decimal_places: int) -> str:
    """Fixed-point decimal, exactly decimal_places digits, half away from zero.

    Never uses exponent notation; a value that rounds to zero loses its
    sign ("-0.000000" is printed as "0.000000").
    """
    if decimal_places < 0:
        raise ValueError(f"decimal_places must be >= 0, got {decimal_places}")
    scaled = abs(q) * 10**decimal_places
    num, den = scaled.numerator, scaled.denominator
    units = (2 * num + den) // (2 * den)
    if decimal_places == 0:
        text = str(units)
    else:
        digits = str(units).rjust(decimal_places + 1, "0")
        text = f"{digits[:-decimal_places]}.{digits[-decimal_places:]}"
    if q < 0 and units != 0:
        text = "-" + text
    return text


@dataclass(frozen=True)
class Layout:
    """Exact scene-to-pixel transform; area_scale converts exact areas to px^2."""

    scale: Fraction
    y_stretch: Fraction
    x_min: Fraction
    y_max: Fraction
    margin: Fraction
    width_px: int
    height_px: int

    @property
    def area_scale(self) -> Fraction:
        return self.scale * self.scale * self.y_stretch

    def to_px(self, pt: Point) -> tuple[Fraction, Fraction]:
        sy = pt.y * self.y_stretch
        return (
            (pt.x - self.x_min + self.margin) * self.scale,
            (self.y_max + self.margin - sy) * self.scale,
        )


def layout(scene: Scene, opts: RenderOptions) -> Layout:
    """Bounding box over polygon vertices plus a 10% margin, scaled to the canvas."""
    stretch = (
        SQRT3 if scene.construction_kind == "layered" and opts.equilateral_look else ONE
    )
    xs = [v.x for poly in scene.polygons for v in poly.vertices]
    ys = [v.y * stretch for poly in scene.polygons for v in poly.vertices]
    x_min, x_max = min(xs), max(xs)
    y_min, y_max = min(ys), max(ys)
    width = x_max - x_min
    height = y_max - y_min
    margin = max(width, height) / 10
    scale = Fraction(opts.canvas_width_px) / (width + 2 * margin)
    height_px = math.ceil((height + 2 * margin) * scale)
    return Layout(
        scale=scale,
        y_stretch=stretch,
        x_min=x_min,
        y_max=y_max,
        margin=margin,
        width_px=opts.canvas_width_px,
        height_px=height_px,
    )


def _points_attr(poly, lay: Layout, dp: int) -> str:
    pairs = []
    for v in poly.vertices:
        px, py = lay.to_px(v)
        pairs.append(f"{format_coordinate(px, dp)},{format_coordinate(py, dp)}")
    return " ".join(pairs)


def render(scene: Scene, opts: RenderOptions | None = None) -> str:
    """Serialize a scene to SVG 1.1 text, byte-deterministic.

    Element order is fixed: outline, then polygons by (layer_index,
    emission order), then text labels.
    """
    opts = opts or RenderOptions()
    lay = layout(scene, opts)
    dp = opts.decimal_places
    font_px = max(opts.canvas_width_px // 40, 8)

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="0 0 {lay.width_px} {lay.height_px}" '
        f'width="{lay.width_px}" height="{lay.height_px}">',
    ]
    outlines = [poly for poly in scene.polygons if poly.role == ROLE_OUTLINE]
    filled = [poly for poly in scene.polygons if poly.role != ROLE_OUTLINE]
    filled.sort(key=lambda poly: poly.layer_index)  # stable: emission order kept
    for poly in outlines:
        lines.append(
            f'<polygon points="{_points_attr(poly, lay, dp)}" fill="none" '
            f'stroke="{opts.stroke_color}" stroke-width="1"/>'
        )
    for poly in filled:
        fill = opts.color_fill if poly.role == "colored" else "#ffffff"
        lines.append(
            f'<polygon points="{_points_attr(poly, lay, dp)}" fill="{fill}" '
            f'stroke="{opts.stroke_color}" stroke-width="1"/>'
        )
    for pt, text in scene.labels:
        is_annotation = text.startswith("layer ")
        if is_annotation and not opts.show_layer_annotations:
            continue
        if not is_annotation and not opts.show_labels:
            continue
        px, py = lay.to_px(pt)
        anchor = "start" if is_annotation else "middle"
        lines.append(
            f'<text x="{format_coordinate(px, dp)}" y="{format_coordinate(py, dp)}" '
            f'font-family="sans-serif" font-size="{font_px}" '
            f'text-anchor="{anchor}">{escape(text)}</text>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
