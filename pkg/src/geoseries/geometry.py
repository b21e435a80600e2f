"""Exact-rational coordinate realizations of both pictures, plus the area audit.

The layered master triangle is isoceles with vertices C=(-1,0), B=(1,0),
A=(0,1): area exactly 1 and every coordinate rational.  Affine shape does
not change any area ratio; the renderer applies a cosmetic stretch for an
equilateral look, but the audit always runs on these coordinates.

The staircase triangle is A=(0,h), B=(h,0), C=(h-1,0) with h = 1/(1-s);
colored piece k is the right triangle (R_k, W_{k-1}, W_k) with legs
s^(k-1), where W_0 = B, R_k = W_{k-1} - (s^(k-1), 0) and
W_k = R_k + (0, s^(k-1)).  Every W_k lies on AB and every R_k on AC.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .construction import (
    LayeredParams,
    StaircaseParams,
    layer_area,
    staircase_layer_area,
    staircase_piece_area,
    staircase_total_area,
    triangle_area,
)
from .rational import ONE, ZERO, Rational, fmt, parse

ROLE_COLORED = "colored"
ROLE_BLANK = "blank"
ROLE_OUTLINE = "outline"


@dataclass(frozen=True)
class Point:
    x: Rational
    y: Rational


@dataclass(frozen=True)
class Polygon:
    """Simple polygon with distinct vertices in counterclockwise order."""

    vertices: tuple[Point, ...]
    role: str
    layer_index: int | None = None
    label: str | None = None

    def __post_init__(self) -> None:
        if len(self.vertices) < 3:
            raise ValueError(f"polygon needs >= 3 vertices, got {len(self.vertices)}")
        if self.role not in (ROLE_COLORED, ROLE_BLANK, ROLE_OUTLINE):
            raise ValueError(f"unknown polygon role {self.role!r}")
        if signed_area_twice(self.vertices) <= 0:
            raise ValueError("polygon must be counterclockwise with nonzero area")


@dataclass(frozen=True)
class Scene:
    """A fully built picture: polygons, text labels, and parameter echo."""

    polygons: tuple[Polygon, ...]
    labels: tuple[tuple[Point, str], ...]
    construction_kind: str  # "layered" | "staircase"
    params_echo: dict[str, str]
    layers_rendered: int


def signed_area_twice(vertices: tuple[Point, ...]) -> Rational:
    total = ZERO
    m = len(vertices)
    for i in range(m):
        p, q = vertices[i], vertices[(i + 1) % m]
        total += p.x * q.y - q.x * p.y
    return total


def shoelace_area(polygon: Polygon) -> Rational:
    """Exact positive area of a polygon via the shoelace formula."""
    doubled = signed_area_twice(polygon.vertices)
    if doubled == 0:
        raise ValueError("degenerate polygon: zero signed area")
    return abs(doubled) / 2


def build_layered_scene(
    p: LayeredParams, layers: int, colored_per_layer: int | None = None
) -> Scene:
    """Tessellated layered picture for r = 1/m, n = 2m-1.

    colored_per_layer overrides p.a (used for the clamped infeasible
    rendering); it may equal n but not exceed it.
    """
    if layers < 1:
        raise ValueError(f"need at least one layer, got {layers}")
    if p.r.numerator != 1:
        raise ValueError(
            f"layered tessellation requires a unit fraction r, got r = {fmt(p.r)}"
        )
    m = p.r.denominator
    if p.n != 2 * m - 1:
        raise ValueError(f"r = 1/{m} forces n = {2 * m - 1} triangles per layer, got n = {p.n}")
    colored = p.a if colored_per_layer is None else colored_per_layer
    if not 1 <= colored <= p.n:
        raise ValueError(f"colored count must lie in [1, {p.n}], got {colored}")

    a_pt = Point(ZERO, ONE)
    b_pt = Point(ONE, ZERO)
    c_pt = Point(-ONE, ZERO)
    polygons = [Polygon((c_pt, b_pt, a_pt), ROLE_OUTLINE)]

    shrink = ONE - p.r
    for k in range(1, layers + 1):
        t = shrink ** (k - 1)
        step = p.r * t  # half-base of each small triangle
        x0 = -t
        y_bot = ONE - t
        y_top = ONE - t * shrink
        downs = []
        for j in range(m - 1):
            left = x0 + (2 * j + 1) * step
            downs.append(
                (
                    Point(left + step, y_bot),
                    Point(left + 2 * step, y_top),
                    Point(left, y_top),
                )
            )
        ups = []
        for i in range(m):
            left = x0 + 2 * i * step
            ups.append(
                (
                    Point(left, y_bot),
                    Point(left + 2 * step, y_bot),
                    Point(left + step, y_top),
                )
            )
        # coloring order: downward triangles left to right, then upward
        for idx, verts in enumerate(downs + ups):
            role = ROLE_COLORED if idx < colored else ROLE_BLANK
            polygons.append(Polygon(verts, role, layer_index=k))

    labels = [
        (Point(ZERO, ONE + Fraction(1, 20)), "A"),
        (Point(ONE + Fraction(1, 20), -Fraction(1, 20)), "B"),
        (Point(-ONE - Fraction(1, 20), -Fraction(1, 20)), "C"),
        (Point(shrink + Fraction(1, 20), p.r), "D"),
        (Point(-shrink - Fraction(1, 20), p.r), "E"),
    ]
    for k in range(1, layers + 1):
        t = shrink ** (k - 1)
        mid_x = (t + t * shrink) / 2 + Fraction(1, 4)
        mid_y = ONE - (t + t * shrink) / 2
        labels.append((Point(mid_x, mid_y), f"layer {k}"))

    return Scene(
        polygons=tuple(polygons),
        labels=tuple(labels),
        construction_kind="layered",
        params_echo={
            "n": str(p.n),
            "a": str(p.a),
            "r": fmt(p.r),
            "m": str(m),
            "colored_per_layer": str(colored),
        },
        layers_rendered=layers,
    )


def build_staircase_scene(q: StaircaseParams, layers: int) -> Scene:
    """Repositioned staircase picture with L colored pieces and blank remainders."""
    if layers < 1:
        raise ValueError(f"need at least one layer, got {layers}")
    h = ONE / (ONE - q.s)
    a_pt = Point(ZERO, h)
    b_pt = Point(h, ZERO)
    c_pt = Point(h - 1, ZERO)
    polygons = [Polygon((c_pt, b_pt, a_pt), ROLE_OUTLINE)]

    w_prev = b_pt
    for k in range(1, layers + 1):
        leg = q.s ** (k - 1)
        r_k = Point(w_prev.x - leg, w_prev.y)
        w_k = Point(r_k.x, r_k.y + leg)
        r_next = Point(w_k.x - q.s**k, w_k.y)
        polygons.append(Polygon((r_k, w_prev, w_k), ROLE_COLORED, layer_index=k))
        polygons.append(Polygon((r_k, w_k, r_next), ROLE_BLANK, layer_index=k))
        w_prev = w_k

    labels = [
        (Point(ZERO, h + h / 20), "A"),
        (Point(h + h / 20, -h / 20), "B"),
        (Point(h - 1, -h / 20), "C"),
    ]
    w_prev = b_pt
    for k in range(1, layers + 1):
        leg = q.s ** (k - 1)
        w_k = Point(w_prev.x - leg, w_prev.y + leg)
        labels.append(
            (Point((w_prev.x + w_k.x) / 2 + h / 10, (w_prev.y + w_k.y) / 2), f"layer {k}")
        )
        w_prev = w_k

    return Scene(
        polygons=tuple(polygons),
        labels=tuple(labels),
        construction_kind="staircase",
        params_echo={"s": fmt(q.s), "r": fmt(q.ratio)},
        layers_rendered=layers,
    )


@dataclass(frozen=True)
class LayerAudit:
    layer_index: int
    polygon_count: int
    colored_count: int
    colored_area: Rational
    total_area: Rational
    colored_fraction: Rational
    expected_colored_area: Rational
    expected_total_area: Rational
    ok: bool

    def as_dict(self) -> dict:
        return {
            "layer": self.layer_index,
            "polygons": self.polygon_count,
            "colored": self.colored_count,
            "colored_area": fmt(self.colored_area),
            "layer_area": fmt(self.total_area),
            "colored_fraction": fmt(self.colored_fraction),
            "expected_colored_area": fmt(self.expected_colored_area),
            "expected_layer_area": fmt(self.expected_total_area),
            "ok": self.ok,
        }


@dataclass(frozen=True)
class AuditReport:
    """Per-layer exact tallies of a scene against the analytic formulas."""

    construction_kind: str
    params: dict[str, str]
    layers: tuple[LayerAudit, ...]
    tiled_area: Rational
    apex_remainder: Rational
    figure_area: Rational
    ok: bool
    mismatches: tuple[str, ...] = field(default=())

    def as_dict(self) -> dict:
        return {
            "schema": 1,
            "construction": self.construction_kind,
            "params": dict(self.params),
            "layers": [layer.as_dict() for layer in self.layers],
            "tiled_area": fmt(self.tiled_area),
            "apex_remainder": fmt(self.apex_remainder),
            "figure_area": fmt(self.figure_area),
            "check": "pass" if self.ok else "fail",
            "mismatches": list(self.mismatches),
        }


def _audit_layers(scene, expected_counts, expected_colored, expected_total):
    """Shared per-layer tally loop; expectation callbacks take the layer index."""
    layers = []
    mismatches = []
    tiled = ZERO
    by_layer: dict[int, list[Polygon]] = {k: [] for k in range(1, scene.layers_rendered + 1)}
    for poly in scene.polygons:
        if poly.role == ROLE_OUTLINE:
            continue
        if poly.layer_index is None or not 1 <= poly.layer_index <= scene.layers_rendered:
            raise ValueError("non-outline polygon without a valid layer index")
        by_layer[poly.layer_index].append(poly)
    for k in range(1, scene.layers_rendered + 1):
        polys = by_layer[k]
        colored = [poly for poly in polys if poly.role == ROLE_COLORED]
        colored_area = sum((shoelace_area(poly) for poly in colored), ZERO)
        total_area = sum((shoelace_area(poly) for poly in polys), ZERO)
        tiled += total_area
        want_count, want_colored_count = expected_counts(k)
        want_colored = expected_colored(k)
        want_total = expected_total(k)
        ok = True
        if len(polys) != want_count or len(colored) != want_colored_count:
            ok = False
            mismatches.append(
                f"layer {k}: polygon counts ({len(polys)}, {len(colored)} colored) "
                f"!= expected ({want_count}, {want_colored_count} colored)"
            )
        if colored_area != want_colored:
            ok = False
            mismatches.append(
                f"layer {k}: colored area {fmt(colored_area)} != "
                f"expected {fmt(want_colored)} (per-layer colored formula)"
            )
        if total_area != want_total:
            ok = False
            mismatches.append(
                f"layer {k}: layer area {fmt(total_area)} != "
                f"expected {fmt(want_total)} (layer area formula)"
            )
        layers.append(
            LayerAudit(
                layer_index=k,
                polygon_count=len(polys),
                colored_count=len(colored),
                colored_area=colored_area,
                total_area=total_area,
                colored_fraction=colored_area / total_area,
                expected_colored_area=want_colored,
                expected_total_area=want_total,
                ok=ok,
            )
        )
    return layers, mismatches, tiled


def audit_scene(scene: Scene) -> AuditReport:
    """Check every polygon area against the construction formulas, exactly.

    Never raises on mismatch: failures come back as a report with
    ok=False and one message per broken equality.
    """
    L = scene.layers_rendered
    if scene.construction_kind == "layered":
        p = LayeredParams(
            n=int(scene.params_echo["n"]),
            a=int(scene.params_echo["a"]),
            r=parse(scene.params_echo["r"]),
        )
        colored_n = int(scene.params_echo.get("colored_per_layer", str(p.a)))
        layers, mismatches, tiled = _audit_layers(
            scene,
            expected_counts=lambda k: (p.n, colored_n),
            expected_colored=lambda k: colored_n * triangle_area(p, k),
            expected_total=lambda k: layer_area(p, k),
        )
        remainder = (ONE - p.r) ** (2 * L)
        figure = ONE
    elif scene.construction_kind == "staircase":
        q = StaircaseParams(s=parse(scene.params_echo["s"]))
        layers, mismatches, tiled = _audit_layers(
            scene,
            expected_counts=lambda k: (2, 1),
            expected_colored=lambda k: staircase_piece_area(q, k),
            expected_total=lambda k: staircase_layer_area(q, k),
        )
        figure = staircase_total_area(q)
        remainder = q.s ** (2 * L) * figure
    else:
        raise ValueError(f"unknown construction kind {scene.construction_kind!r}")

    if tiled + remainder != figure:
        mismatches.append(
            f"tiling: layers {fmt(tiled)} + apex remainder {fmt(remainder)} "
            f"!= figure area {fmt(figure)}"
        )
    return AuditReport(
        construction_kind=scene.construction_kind,
        params=dict(scene.params_echo),
        layers=tuple(layers),
        tiled_area=tiled,
        apex_remainder=remainder,
        figure_area=figure,
        ok=not mismatches,
        mismatches=tuple(mismatches),
    )


def scene_to_json(scene: Scene) -> dict:
    """JSON-ready document; every coordinate is a canonical "p/q" string."""
    return {
        "schema": 1,
        "construction_kind": scene.construction_kind,
        "params": dict(scene.params_echo),
        "layers_rendered": scene.layers_rendered,
        "polygons": [
            {
                "vertices": [[fmt(v.x), fmt(v.y)] for v in poly.vertices],
                "role": poly.role,
                "layer_index": poly.layer_index,
                "label": poly.label,
            }
            for poly in scene.polygons
        ],
        "labels": [
            {"x": fmt(pt.x), "y": fmt(pt.y), "text": text} for pt, text in scene.labels
        ],
    }


def scene_from_json(doc: dict) -> Scene:
    """Inverse of scene_to_json; validates the schema version."""
    if doc.get("schema") != 1:
        raise ValueError(f"unsupported scene schema: {doc.get('schema')!r}")
    polygons = tuple(
        Polygon(
            vertices=tuple(Point(parse(x), parse(y)) for x, y in entry["vertices"]),
            role=entry["role"],
            layer_index=entry.get("layer_index"),
            label=entry.get("label"),
        )
        for entry in doc["polygons"]
    )
    labels = tuple(
        (Point(parse(entry["x"]), parse(entry["y"])), entry["text"])
        for entry in doc.get("labels", [])
    )
    return Scene(
        polygons=polygons,
        labels=labels,
        construction_kind=doc["construction_kind"],
        params_echo={k: str(v) for k, v in doc["params"].items()},
        layers_rendered=int(doc["layers_rendered"]),
    )
