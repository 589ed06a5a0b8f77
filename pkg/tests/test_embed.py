import json

import pytest

from masseylink.diagram import parse_pd
from masseylink.drawing import draw_diagram, point_in_polygon
from masseylink.embed import (
    boundary_torus,
    build_embedding,
    meridian,
    pushoff_cycle,
    seifert_circles,
)
from masseylink.errors import NonRealizable, TubeTooLarge
from masseylink.fixtures import load_fixture
from masseylink.plgeom import curve_surface_count


def _euler(surface):
    V = len({v for t in surface.triangles for v in t})
    E = len(
        {
            tuple(sorted((t[i], t[(i + 1) % 3])))
            for t in surface.triangles
            for i in range(3)
        }
    )
    return V - E + len(surface.triangles)


# -- drawing -----------------------------------------------------------------


def test_drawing_realizes_slot_rotation(borromean):
    dr = draw_diagram(borromean)
    assert len(dr.crossing_geo) == 6
    for g in dr.crossing_geo:
        # the chords cross at an interior point of both passages
        assert g.point != g.under_chord[0] and g.point != g.under_chord[1]
        assert g.point != g.over_chord[0] and g.point != g.over_chord[1]


def test_drawing_rejects_nonplanar_gauss():
    # the standard non-realizable Gauss sequence 1 2 3 1 2 3 on one component
    from masseylink.diagram import parse_gauss

    with pytest.raises(NonRealizable):
        d = parse_gauss("O1+ O2+ O3+ U1+ U2+ U3+")
        draw_diagram(d)


def test_split_pieces_have_disjoint_bands():
    d = load_fixture("hopf_split")
    dr = draw_diagram(d)
    xs3 = [p[0] for p in dr.arc_paths[d.component_arcs(3)[0]]]
    xs12 = [
        p[0]
        for arc in d.component_arcs(1) + d.component_arcs(2)
        for p in dr.arc_paths[arc]
    ]
    assert min(xs3) > max(xs12) or min(xs12) > max(xs3)


# -- Seifert structure -------------------------------------------------------


def test_hopf_whole_diagram_smoothing(hopf):
    st = seifert_circles(hopf)
    assert len(st.circles) == 2
    assert len(st.bands) == 2
    assert sorted(c.depth for c in st.circles) == [0, 1]


def test_unknot_structure():
    d = load_fixture("unknot0")
    st = seifert_circles(d)
    assert len(st.circles) == 1 and len(st.bands) == 0


def test_trefoil_euler_characteristic(trefoil):
    st = seifert_circles(trefoil, component=1)
    assert len(st.circles) == 2
    assert len(st.bands) == 3
    assert st.euler_characteristic(1) == -1  # genus-one Seifert surface


def test_borromean_components_are_disks(borromean):
    for i in (1, 2, 3):
        st = seifert_circles(borromean, component=i)
        assert st.euler_characteristic(i) == 1


def test_bands_join_same_component_circles(trefoil, borromean):
    for d in (trefoil, borromean):
        for i in range(1, d.n_components + 1):
            st = seifert_circles(d, component=i)
            circles = {c.index: c for c in st.circles}
            for b in st.bands_of(i):
                assert circles[b.joins[0]].component == i
                assert circles[b.joins[1]].component == i


def test_nesting_forest_consistent(hopf):
    st = seifert_circles(hopf)
    for c in st.circles:
        if c.parent >= 0:
            parent = st.circles[c.parent]
            assert parent.depth == c.depth - 1
            assert point_in_polygon(parent.footprint, c.footprint[0])


# -- embeddings --------------------------------------------------------------


def test_embedding_boundary_is_curve(e_borromean):
    for i in (1, 2, 3):
        loops = e_borromean.surfaces[i].boundary_curves()
        assert len(loops) == 1
    # verify_embedding already ran inside build_embedding


def test_embedding_with_bands(e_trefoil):
    surf = e_trefoil.surfaces[1]
    assert _euler(surf) == -1
    tags = e_trefoil.provenance[1]
    assert sum(1 for t in tags if t.startswith("band")) == 30  # 3 bands x 10


def test_embedding_is_deterministic(borromean):
    e1 = build_embedding(borromean)
    e2 = build_embedding(borromean)
    for i in (1, 2, 3):
        assert e1.curves[i].vertices == e2.curves[i].vertices
        assert e1.surfaces[i].triangles == e2.surfaces[i].triangles


def test_unknot_embedding_is_disk():
    e = build_embedding(load_fixture("unknot0"))
    assert _euler(e.surfaces[1]) == 1


def test_grid_scale_scales_coordinates(hopf):
    e1 = build_embedding(hopf, grid_scale=1)
    e2 = build_embedding(hopf, grid_scale=3)
    v1 = e1.curves[1].vertices[0]
    v2 = e2.curves[1].vertices[0]
    assert [3 * c for c in v1] == list(v2)


def test_pairwise_surfaces_generic(e_borromean):
    # normal position: every intersection component is an arc or circle
    from masseylink.trace import surface_intersection

    for (a, b) in ((1, 2), (2, 3), (1, 3)):
        curves = surface_intersection(
            e_borromean.surfaces[a],
            e_borromean.surfaces[b],
            pair=(a, b),
            index_b=e_borromean.surface_index(b),
        )
        for c in curves:
            assert c.kind in ("arc", "circle")
            assert len(c.points) >= 2


# -- tubes, meridians, pushoffs ----------------------------------------------


def test_square_unknot_torus_chi_zero():
    e = build_embedding(load_fixture("unknot0"))
    T = boundary_torus(e, 1)
    assert T.validate() == []  # closed
    assert _euler(T) == 0


def test_meridian_links_once(e_borromean):
    for i in (1, 2, 3):
        mu = meridian(e_borromean, i)
        assert (
            curve_surface_count(
                mu, e_borromean.surfaces[i], e_borromean.surface_index(i)
            )
            == 1
        )


def test_tube_too_large_raises():
    e = build_embedding(load_fixture("unknot0"))
    with pytest.raises(TubeTooLarge):
        boundary_torus(e, 1, radius=100 * e.unit)


def test_tube_must_clear_other_components(e_hopf):
    with pytest.raises(TubeTooLarge):
        boundary_torus(e_hopf, 1, radius=40 * e_hopf.unit)


def test_pushoff_cycle_links_like_the_curve(e_hopf):
    # blackboard pushoff of K_1 still links K_2 once
    po = pushoff_cycle(e_hopf.curves[1], e_hopf.tube_radius)
    assert (
        curve_surface_count(po, e_hopf.surfaces[2], e_hopf.surface_index(2))
        == 1
    )
