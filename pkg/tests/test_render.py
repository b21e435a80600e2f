import xml.etree.ElementTree as ET
from fractions import Fraction

import pytest

from geoseries.construction import LayeredParams, StaircaseParams
from geoseries.geometry import build_layered_scene, build_staircase_scene, shoelace_area
from geoseries.render import RenderOptions, format_coordinate, layout, render

SVG_NS = "{http://www.w3.org/2000/svg}"

MABRY = LayeredParams(3, 1, Fraction(1, 2))


def polygons_of(svg_text):
    root = ET.fromstring(svg_text)
    return root.findall(f"{SVG_NS}polygon")


def parse_points(poly_el):
    return [
        tuple(float(c) for c in pair.split(","))
        for pair in poly_el.get("points").split()
    ]


def float_shoelace(points):
    total = 0.0
    for i in range(len(points)):
        x1, y1 = points[i]
        x2, y2 = points[(i + 1) % len(points)]
        total += x1 * y2 - x2 * y1
    return abs(total) / 2


class TestFormatCoordinate:
    @pytest.mark.parametrize(
        "q, places, expected",
        [
            (Fraction(1, 3), 6, "0.333333"),
            (Fraction(5, 2), 2, "2.50"),
            (Fraction(-1, 800000), 6, "-0.000001"),
            (Fraction(0), 6, "0.000000"),
            (Fraction(-1, 10**9), 6, "0.000000"),  # "-0" never printed
            (Fraction(1, 200), 2, "0.01"),  # half rounds away from zero
            (Fraction(-1, 200), 2, "-0.01"),
            (Fraction(10**15), 3, "1000000000000000.000"),  # no exponent form
        ],
    )
    def test_examples(self, q, places, expected):
        assert format_coordinate(q, places) == expected


class TestRenderOptions:
    def test_rejects_bad_decimal_places(self):
        for places in (0, 13):
            with pytest.raises(ValueError):
                RenderOptions(decimal_places=places)

    def test_rejects_bad_width(self):
        with pytest.raises(ValueError):
            RenderOptions(canvas_width_px=0)


class TestRender:
    def test_byte_deterministic(self):
        scene = build_layered_scene(MABRY, 4)
        opts = RenderOptions()
        assert render(scene, opts).encode() == render(scene, opts).encode()

    def test_well_formed_xml(self):
        svg = render(build_staircase_scene(StaircaseParams(Fraction(3, 5)), 3))
        root = ET.fromstring(svg)
        assert root.tag == f"{SVG_NS}svg"
        assert root.get("version") == "1.1"

    def test_colored_polygon_count_matches_scene(self):
        scene = build_layered_scene(MABRY, 4)
        svg = render(scene, RenderOptions())
        colored = [p for p in polygons_of(svg) if p.get("fill") == "#00ffff"]
        assert len(colored) == sum(p.role == "colored" for p in scene.polygons)

    def test_all_points_inside_viewbox(self):
        scene = build_staircase_scene(StaircaseParams(Fraction(2, 3)), 5)
        svg = render(scene, RenderOptions())
        root = ET.fromstring(svg)
        _, _, width, height = (float(v) for v in root.get("viewBox").split())
        for poly in polygons_of(svg):
            for x, y in parse_points(poly):
                assert -1e-6 <= x <= width + 1e-6
                assert -1e-6 <= y <= height + 1e-6

    @pytest.mark.parametrize(
        "scene",
        [
            build_layered_scene(MABRY, 3),
            build_staircase_scene(StaircaseParams(Fraction(3, 5)), 3),
        ],
    )
    def test_reparsed_areas_match_exact_within_print_tolerance(self, scene):
        opts = RenderOptions()
        svg = render(scene, opts)
        scale = float(layout(scene, opts).area_scale)
        exact = sorted(
            float(shoelace_area(p)) for p in scene.polygons if p.role == "colored"
        )
        printed = sorted(
            float_shoelace(parse_points(p)) / scale
            for p in polygons_of(svg)
            if p.get("fill") == opts.color_fill
        )
        tol = 10.0 ** (1 - opts.decimal_places)
        for got, want in zip(printed, exact):
            assert abs(got - want) <= tol * want

    def test_label_flags_toggle_text_elements(self):
        scene = build_layered_scene(MABRY, 2)
        base = RenderOptions()
        no_text = RenderOptions(show_labels=False, show_layer_annotations=False)
        only_vertices = RenderOptions(show_layer_annotations=False)
        texts = lambda o: ET.fromstring(render(scene, o)).findall(f"{SVG_NS}text")
        assert len(texts(no_text)) == 0
        assert len(texts(only_vertices)) == 5  # A B C D E
        assert len(texts(base)) == 7  # plus two layer annotations
        # geometry elements are unaffected by text flags
        assert len(polygons_of(render(scene, no_text))) == len(
            polygons_of(render(scene, base))
        )

    def test_equilateral_stretch_is_cosmetic_only(self):
        scene = build_layered_scene(MABRY, 2)
        plain = render(scene, RenderOptions(equilateral_look=False))
        stretched = render(scene, RenderOptions(equilateral_look=True))
        assert plain != stretched
        # staircase scenes are never stretched
        stairs = build_staircase_scene(StaircaseParams(Fraction(1, 2)), 2)
        assert render(stairs, RenderOptions(equilateral_look=False)) == render(
            stairs, RenderOptions(equilateral_look=True)
        )


class TestGoldenFiles:
    @pytest.mark.parametrize(
        "name, scene",
        [
            ("mabry_L4.svg", build_layered_scene(MABRY, 4)),
            ("edgar_L3.svg", build_layered_scene(LayeredParams(5, 4, Fraction(1, 3)), 3)),
            (
                "staircase_3_5_L3.svg",
                build_staircase_scene(StaircaseParams(Fraction(3, 5)), 3),
            ),
        ],
    )
    def test_matches_frozen_golden(self, fixtures_dir, name, scene):
        golden = (fixtures_dir / name).read_bytes()
        assert render(scene, RenderOptions()).encode("utf-8") == golden
