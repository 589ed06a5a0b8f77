"""PL embeddings of diagrams: curves, Seifert surfaces, tubes, pushoffs.

Geometry scheme (all exact rationals, built on a verified plane drawing):

* the diagram lives in the z = 0 plane; at every crossing the under-strand
  dips to z = -DIP in a flat-bottomed vee whose flat part crosses under the
  over-strand, which stays in the plane;
* each Seifert circle bounds a horizontal polygon hung at a negative level
  determined by its nesting depth and component, joined to the circle by a
  vertical skirt wall whose top rim is the circle (following the curve's
  dips where the circle runs along the link);
* at a self-crossing a ruled twisted band connects the two smoothing
  bypasses, absorbing the strand dips, so disks plus bands have boundary
  exactly the component curve.

Deeper-nested circles hang higher than their ancestors so skirts never
pierce sibling polygons; distinct components use distinct levels so
horizontal polygons of different surfaces are never coplanar.
"""

from dataclasses import dataclass

from . import plgeom
from .drawing import draw_diagram, orient2, point_in_polygon, polygon_area2
from .errors import NotGeneric, TubeTooLarge
from .plgeom import PLCurve, PLSurface, v_add, v_cross, v_sub
from .rational import Q


# ---------------------------------------------------------------------------
# Seifert circles (combinatorial smoothing + geometric nesting)


@dataclass(frozen=True)
class SeifertCircle:
    index: int
    component: int
    pieces: tuple          # ("arc", a) | ("pass", xi, role) | ("bypass", xi, role)
    footprint: tuple       # closed 2D polyline (projection of the rim)
    depth: int
    parent: int            # index of the innermost containing circle, -1 at top


@dataclass(frozen=True)
class SeifertBand:
    crossing: int
    sign: int
    joins: tuple           # (circle_index, circle_index)
    component: int


@dataclass(frozen=True)
class SeifertStructure:
    scope: object          # "diagram" or component id
    circles: tuple
    bands: tuple

    def circles_of(self, i):
        return [c for c in self.circles if c.component == i]

    def bands_of(self, i):
        return [b for b in self.bands if b.component == i]

    def euler_characteristic(self, i):
        """chi of the banded surface of component i: circles - bands."""
        return len(self.circles_of(i)) - len(self.bands_of(i))


def _arc_end_roles(d):
    """arc -> (crossing index, 'U'/'O') where the arc terminates."""
    ends = {}
    for idx, x in enumerate(d.crossings):
        ends[x.under_in] = (idx, "U")
        ends[x.over_in] = (idx, "O")
    return ends


def _smoothed_walk(d, arcs, smoothed):
    """Cycles of the arc successor map with reconnection at smoothed
    crossings; yields lists of pieces."""
    ends = _arc_end_roles(d)
    by_crossing = {i: x for i, x in enumerate(d.crossings)}
    todo = set(arcs)
    cycles = []
    while todo:
        a0 = min(todo)
        pieces = []
        a = a0
        while True:
            todo.discard(a)
            pieces.append(("arc", a))
            if a not in ends:
                break  # crossingless unknot component
            xi, role = ends[a]
            x = by_crossing[xi]
            if xi in smoothed:
                pieces.append(("bypass", xi, role))
                a = x.over_out if role == "U" else x.under_out
            else:
                pieces.append(("pass", xi, role))
                a = x.under_out if role == "U" else x.over_out
            if a == a0:
                break
        cycles.append(pieces)
    return cycles


def seifert_circles(d, component=None, drawing=None):
    """Orientation-respecting smoothing with geometric nesting.

    With component=None every crossing is smoothed (the classical whole
    diagram structure); with a component id only that component's arcs and
    self-crossings enter, which is the per-surface structure used by
    build_embedding.
    """
    if drawing is None:
        drawing = draw_diagram(d)
    if component is None:
        scope_arcs = [a for arcs in d.components for a in arcs]
        smoothed = set(range(len(d.crossings)))
        scope = "diagram"
    else:
        scope_arcs = list(d.component_arcs(component))
        smoothed = {
            i for i, x in enumerate(d.crossings)
            if x.under_component == component and x.over_component == component
        }
        scope = component
    cycles = _smoothed_walk(d, scope_arcs, smoothed)

    circles = []
    for ci, pieces in enumerate(cycles):
        comp = d.arc_component(pieces[0][1])
        fp = _circle_footprint(d, drawing, pieces)
        circles.append((comp, pieces, fp))

    # nesting by exact containment among circles of the same scope;
    # footprints in one scope are pairwise disjoint
    n = len(circles)
    contains = [[False] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            if component is None or circles[i][0] == circles[j][0]:
                contains[i][j] = point_in_polygon(circles[i][2], circles[j][2][0])
    out = []
    for j in range(n):
        containing = [i for i in range(n) if contains[i][j]]
        depth = len(containing)
        parent = -1
        if containing:
            parent = max(containing, key=lambda i: sum(contains[k][i] for k in range(n)))
        comp, pieces, fp = circles[j]
        out.append(
            SeifertCircle(
                index=j, component=comp, pieces=tuple(pieces),
                footprint=tuple(fp), depth=depth, parent=parent,
            )
        )

    circle_of_arc = {}
    for c in out:
        for p in c.pieces:
            if p[0] == "arc":
                circle_of_arc[p[1]] = c.index
    bands = []
    for xi in sorted(smoothed):
        x = d.crossings[xi]
        bands.append(
            SeifertBand(
                crossing=xi,
                sign=x.sign,
                joins=(circle_of_arc[x.under_in], circle_of_arc[x.over_in]),
                component=x.under_component,
            )
        )
    return SeifertStructure(scope=scope, circles=tuple(out), bands=tuple(bands))


# ---------------------------------------------------------------------------
# per-crossing local geometry in the plane


def _chord_point(chord, t):
    a, b = chord
    return (a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1]))


def _chord_param(chord, p):
    a, b = chord
    dx, dy = b[0] - a[0], b[1] - a[1]
    if abs(dx) >= abs(dy):
        return Q(p[0] - a[0], dx)
    return Q(p[1] - a[1], dy)


class _XLocal:
    """Named points of one crossing: dip stations and smoothing stations."""

    def __init__(self, geo):
        self.geo = geo
        Y = geo.point
        tU = _chord_param(geo.under_chord, Y)
        tO = _chord_param(geo.over_chord, Y)
        lam = min(tU, 1 - tU) / 4
        u = geo.under_chord
        self.Y = Y
        self.u_m_in = _chord_point(u, tU / 2)
        self.u_m_out = _chord_point(u, (1 + tU) / 2)
        self.u_A = _chord_point(u, tU - lam)
        self.u_D1 = _chord_point(u, tU - lam / 2)
        self.u_D2 = _chord_point(u, tU + lam / 2)
        self.u_B = _chord_point(u, tU + lam)
        o = geo.over_chord
        self.o_m_in = _chord_point(o, tO / 2)
        self.o_m_out = _chord_point(o, (1 + tO) / 2)
        self.o_P = [
            _chord_point(o, 3 * tO / 4),
            _chord_point(o, 7 * tO / 8),
            _chord_point(o, tO + (1 - tO) / 8),
            _chord_point(o, tO + (1 - tO) / 4),
        ]


def _passage_points(loc, role, smoothed):
    """2D waypoints of a full strand passage through a crossing."""
    g = loc.geo
    if role == "U":
        path = g.under_path
        mid = [loc.u_A, loc.u_D1, loc.u_D2, loc.u_B]
        if smoothed:
            mid = [loc.u_m_in] + mid + [loc.u_m_out]
    else:
        path = g.over_path
        mid = []
        if smoothed:
            mid = [loc.o_m_in] + loc.o_P + [loc.o_m_out]
    return [path[0], path[1]] + mid + [path[2], path[3]]


def _passage_heights(loc, role, pts, dip):
    """z for each waypoint: under passages dip between the D stations."""
    if role != "U":
        return [Q(0)] * len(pts)
    zs = []
    for p in pts:
        zs.append(dip if p in (loc.u_D1, loc.u_D2) else Q(0))
    return zs


def _bypass_entry(loc, role):
    """Waypoints from the passage entry to the smoothing bypass and on to
    the other strand's exit (all at z=0)."""
    g = loc.geo
    if role == "U":
        return (
            [g.under_path[0], g.under_path[1], loc.u_m_in],
            [loc.o_m_out, g.over_path[2], g.over_path[3]],
        )
    return (
        [g.over_path[0], g.over_path[1], loc.o_m_in],
        [loc.u_m_out, g.under_path[2], g.under_path[3]],
    )


def _circle_footprint(d, drawing, pieces):
    """Closed 2D polyline of a smoothing circle (z = 0 projection)."""
    locs = _locals_cache(drawing)
    pts = []

    def push(ps):
        for p in ps:
            if not pts or pts[-1] != p:
                pts.append(p)

    for piece in pieces:
        if piece[0] == "arc":
            push(drawing.arc_paths[piece[1]])
        elif piece[0] == "pass":
            _, xi, role = piece
            push(_passage_points(locs[xi], role, smoothed=False))
        else:
            _, xi, role = piece
            enter, leave = _bypass_entry(locs[xi], role)
            push(enter)
            push(leave)
    if pts and pts[0] == pts[-1]:
        pts.pop()
    return pts


def _locals_cache(drawing):
    cache = getattr(drawing, "_xlocals", None)
    if cache is None:
        cache = {i: _XLocal(g) for i, g in enumerate(drawing.crossing_geo)}
        object.__setattr__(drawing, "_xlocals", cache)
    return cache


# ---------------------------------------------------------------------------
# polygon triangulation (exact ear clipping, collinear vertices kept)


def _ear_clip(poly2, orient):
    """Triangulate a simple polygon given with its traversal orientation.

    Emitted triangles are wound in traversal order, so their induced
    boundary runs forward along the polygon.
    """
    idx = list(range(len(poly2)))
    tris = []
    guard = 0
    while len(idx) > 3:
        guard += 1
        if guard > 4 * len(poly2) * len(poly2):
            raise NotGeneric("ear clipping stalled")
        n = len(idx)
        clipped = False
        for k in range(n):
            i0, i1, i2 = idx[(k - 1) % n], idx[k], idx[(k + 1) % n]
            a, b, c = poly2[i0], poly2[i1], poly2[i2]
            if orient2(a, b, c) != orient:
                continue
            ok = True
            for j in idx:
                if j in (i0, i1, i2):
                    continue
                if _in_closed_tri2(a, b, c, poly2[j], orient):
                    ok = False
                    break
            if ok:
                tris.append((i0, i1, i2))
                idx.pop(k)
                clipped = True
                break
        if not clipped:
            raise NotGeneric("no clippable ear found")
    i0, i1, i2 = idx
    if orient2(poly2[i0], poly2[i1], poly2[i2]) == orient:
        tris.append((i0, i1, i2))
    elif orient2(poly2[i0], poly2[i1], poly2[i2]) != 0:
        raise NotGeneric("final triangle has reversed orientation")
    return tris


def _in_closed_tri2(a, b, c, p, orient):
    s1 = orient2(a, b, p) * orient
    s2 = orient2(b, c, p) * orient
    s3 = orient2(c, a, p) * orient
    return s1 >= 0 and s2 >= 0 and s3 >= 0


# ---------------------------------------------------------------------------
# the embedding


@dataclass(frozen=True)
class EmbeddedLink:
    diagram: object
    drawing: object
    structures: dict              # component -> per-component SeifertStructure
    curves: dict                  # component -> closed PLCurve
    surfaces: dict                # component -> PLSurface
    provenance: dict              # component -> list of per-triangle tags
    levels: dict                  # (component, circle index) -> polygon level
    tube_radius: object
    unit: object
    grid_scale: int = 1
    perturb_index: int = 0

    def surface_index(self, i):
        key = "_sidx%d" % i
        cache = self.__dict__.setdefault("_caches", {})
        if key not in cache:
            cache[key] = plgeom.BoxIndex(self.surfaces[i].triangles)
        return cache[key]


def _rim_points(d, drawing, locs, circle, dip, zshift):
    """Closed 3D rim of one circle: the circle at z=0 with strand dips."""
    pts = []

    def push(ps, zs):
        for p, z in zip(ps, zs):
            v = (p[0], p[1], z + zshift)
            if not pts or pts[-1] != v:
                pts.append(v)

    for piece in circle.pieces:
        if piece[0] == "arc":
            ps = drawing.arc_paths[piece[1]]
            push(ps, [Q(0)] * len(ps))
        elif piece[0] == "pass":
            _, xi, role = piece
            ps = _passage_points(locs[xi], role, smoothed=False)
            push(ps, _passage_heights(locs[xi], role, ps, dip))
        else:
            _, xi, role = piece
            enter, leave = _bypass_entry(locs[xi], role)
            push(enter, [Q(0)] * len(enter))
            push(leave, [Q(0)] * len(leave))
    if pts and pts[0] == pts[-1]:
        pts.pop()
    return pts


def _wall_and_polygon(rim, level):
    """Skirt wall from the rim down to `level` plus the horizontal polygon."""
    tris = []
    tags = []
    n = len(rim)
    for k in range(n):
        p, q = rim[k], rim[(k + 1) % n]
        pb = (p[0], p[1], level)
        qb = (q[0], q[1], level)
        if (p[0], p[1]) == (q[0], q[1]):
            raise NotGeneric("vertical rim edge")
        tris.append((p, q, qb))
        tags.append("wall")
        if pb != qb:
            tris.append((p, qb, pb))
            tags.append("wall")
    poly2 = []
    for p in rim:
        xy = (p[0], p[1])
        if not poly2 or poly2[-1] != xy:
            poly2.append(xy)
    if poly2[0] == poly2[-1]:
        poly2.pop()
    area = polygon_area2(poly2)
    if area == 0:
        raise NotGeneric("degenerate circle footprint")
    orient = 1 if area > 0 else -1
    for (i0, i1, i2) in _ear_clip(poly2, orient):
        a, b, c = poly2[i0], poly2[i1], poly2[i2]
        tris.append(((a[0], a[1], level), (b[0], b[1], level), (c[0], c[1], level)))
        tags.append("disk")
    return tris, tags


def _band_triangles(loc, dip, zshift):
    """Twisted strip absorbing a self-crossing: rules from the dipping
    under-path to the reversed flat over-path."""
    z0 = zshift
    U = [
        (p[0], p[1], z0) for p in (loc.u_m_in, loc.u_A)
    ] + [
        (loc.u_D1[0], loc.u_D1[1], dip + zshift),
        (loc.u_D2[0], loc.u_D2[1], dip + zshift),
    ] + [
        (p[0], p[1], z0) for p in (loc.u_B, loc.u_m_out)
    ]
    O = [(p[0], p[1], z0) for p in [loc.o_m_in] + loc.o_P + [loc.o_m_out]]
    tris = []
    for j in range(5):
        a, b = U[j], U[j + 1]
        c, d_ = O[4 - j], O[5 - j]
        tris.append((a, b, c))
        tris.append((a, c, d_))
    return tris


def _component_curve(d, drawing, locs, i, dip, zshift, self_smoothed):
    pts = []

    def push(ps, zs):
        for p, z in zip(ps, zs):
            v = (p[0], p[1], z + zshift)
            if not pts or pts[-1] != v:
                pts.append(v)

    for step in drawing.footprints[i]:
        if step[0] == "arc":
            ps = drawing.arc_paths[step[1]]
            push(ps, [Q(0)] * len(ps))
        else:
            _, xi, role = step
            ps = _passage_points(locs[xi], role, smoothed=xi in self_smoothed)
            push(ps, _passage_heights(locs[xi], role, ps, dip))
    if pts and pts[0] == pts[-1]:
        pts.pop()
    return PLCurve(pts, closed=True)


def _dist2_point_line(p, a, b):
    dx, dy = b[0] - a[0], b[1] - a[1]
    cr = dx * (p[1] - a[1]) - dy * (p[0] - a[0])
    return Q(cr * cr, dx * dx + dy * dy)


def _tube_radius(unit, locs):
    """Largest safe framing offset: a parallel of either strand within this
    distance still crosses the other strand inside its dip interval at
    every crossing, so pushoffs pierce walls exactly where their curves do."""
    r = unit / 8
    for loc in locs.values():
        o = loc.geo.over_chord
        d2 = min(
            _dist2_point_line(loc.u_A, o[0], o[1]),
            _dist2_point_line(loc.u_B, o[0], o[1]),
        )
        guard = 0
        while r * r * 8 > d2:
            r = r / 2
            guard += 1
            if guard > 80:
                raise NotGeneric("no usable tube radius at a crossing")
    return r


def build_embedding(d, grid_scale=1, perturb_index=0, check=True):
    """Embed the link with one Seifert surface per component."""
    drawing = draw_diagram(d, grid_scale)
    unit = drawing.scale
    locs = _locals_cache(drawing)
    H = 24 * unit
    dip = -H / 3
    m = d.n_components

    structures = {}
    curves = {}
    surfaces = {}
    provenance = {}
    levels = {}
    for i in range(1, m + 1):
        st = seifert_circles(d, component=i, drawing=drawing)
        structures[i] = st
        zshift = Q(i * perturb_index, 4096) * unit
        maxdepth = max((c.depth for c in st.circles), default=0)
        self_sm = {b.crossing for b in st.bands}
        curves[i] = _component_curve(d, drawing, locs, i, dip, zshift, self_sm)
        tris = []
        tags = []
        for c in st.circles:
            level = -H * (2 + (maxdepth - c.depth) + Q(i, m + 1)) + zshift
            levels[(i, c.index)] = level
            rim = _rim_points(d, drawing, locs, c, dip, zshift)
            t, g = _wall_and_polygon(rim, level)
            tris.extend(t)
            tags.extend("%s:%d" % (tag, c.index) for tag in g)
        for b in st.bands:
            bt = _band_triangles(locs[b.crossing], dip, zshift)
            tris.extend(bt)
            tags.extend(["band:%d" % b.crossing] * len(bt))
        surf = PLSurface(tris)
        surfaces[i] = surf
        provenance[i] = tags

    e = EmbeddedLink(
        diagram=d,
        drawing=drawing,
        structures=structures,
        curves=curves,
        surfaces=surfaces,
        provenance=provenance,
        levels=levels,
        tube_radius=_tube_radius(unit, locs) if locs else unit / 8,
        unit=unit,
        grid_scale=grid_scale,
        perturb_index=perturb_index,
    )
    if check:
        verify_embedding(e)
    return e


def verify_embedding(e):
    """Boundary and embeddedness checks for every component surface."""
    for i, surf in e.surfaces.items():
        loops = surf.boundary_curves()
        if len(loops) != 1:
            raise NotGeneric("surface %d has %d boundary loops" % (i, len(loops)))
        if not _same_cycle(loops[0], e.curves[i]):
            raise NotGeneric("boundary of surface %d is not its curve" % i)
        surf.check_embedded()


def _same_cycle(c1, c2):
    """Equality of closed curves as oriented cycles (up to start vertex
    and collinear subdivision)."""
    a = _essential_vertices(c1.vertices)
    b = _essential_vertices(c2.vertices)
    if len(a) != len(b):
        return False
    if not a:
        return True
    try:
        k = b.index(a[0])
    except ValueError:
        return False
    return a == b[k:] + b[:k]


def _essential_vertices(vs):
    out = []
    n = len(vs)
    for i in range(n):
        p, q, r = vs[(i - 1) % n], vs[i], vs[(i + 1) % n]
        if v_cross(v_sub(q, p), v_sub(r, q)) != (0, 0, 0):
            out.append(q)
    return out


# ---------------------------------------------------------------------------
# tubes, meridians, pushoffs


def _segment_frame(a, b):
    v = v_sub(b, a)
    if v[0] == 0 and v[1] == 0:
        u1 = (Q(1), Q(0), Q(0))
    else:
        u1 = (-v[1], v[0], Q(0))
    u2 = v_cross(v, u1)
    return u1, u2


def _scaled(u, r):
    l1 = abs(u[0]) + abs(u[1]) + abs(u[2])
    t = Q(r, l1)
    return (u[0] * t, u[1] * t, u[2] * t)


def _ring(p, u1, u2, r):
    a = _scaled(u1, r)
    b = _scaled(u2, r)
    return [v_add(p, a), v_add(p, b), v_sub(p, a), v_sub(p, b)]


def boundary_torus(e, i, radius=None):
    """Triangulated torus around component i, oriented outward.

    Raises TubeTooLarge when the requested radius exceeds the clearance
    (detected by exact self-intersection or contact checks).
    """
    r = e.tube_radius if radius is None else radius
    curve = e.curves[i]
    segs = curve.segments()
    rings = []
    for (a, b) in segs:
        u1, u2 = _segment_frame(a, b)
        d8 = v_sub(b, a)
        p_in = v_add(a, _scale_vec(d8, Q(1, 8)))
        p_out = v_add(a, _scale_vec(d8, Q(7, 8)))
        rings.append(_ring(p_in, u1, u2, r))
        rings.append(_ring(p_out, u1, u2, r))
    tris = []
    nr = len(rings)
    for k in range(nr):
        r1, r2 = rings[k], rings[(k + 1) % nr]
        for c in range(4):
            a, b = r1[c], r1[(c + 1) % 4]
            c2, d2 = r2[(c + 1) % 4], r2[c]
            tris.append((a, b, c2))
            tris.append((a, c2, d2))
    torus = PLSurface(tris)
    if torus.validate():
        raise TubeTooLarge("tube mesh is not closed")
    try:
        torus.check_embedded()
    except NotGeneric:
        raise TubeTooLarge("tube of radius %s self-intersects" % r)
    # the tube must also clear every other curve of the link
    idx = plgeom.BoxIndex(torus.triangles)
    for j, other in e.curves.items():
        if j == i:
            continue
        for seg in other.segments():
            for ti in idx.query(plgeom._bbox(list(seg))):
                hit = plgeom.segment_triangle(seg, torus.triangles[ti])
                if hit[0] != "empty":
                    raise TubeTooLarge("tube of radius %s meets component %d" % (r, j))
    return torus


def _scale_vec(v, t):
    return (v[0] * t, v[1] * t, v[2] * t)


def _arc_interior_position(e, i):
    """A position on a long horizontal stretch of component i."""
    curve = e.curves[i]
    best = None
    for k, (a, b) in enumerate(curve.segments()):
        if a[2] != b[2]:
            continue
        d2 = sum((b[t] - a[t]) ** 2 for t in range(3))
        if best is None or d2 > best[0]:
            best = (d2, k)
    if best is None:
        raise NotGeneric("component %d has no flat stretch" % i)
    return Q(best[1]) + Q(1, 2)


def meridian(e, i, pos=None, radius=None, reverse=False):
    """Small square meridian of component i with lk(K_i, meridian) = +1."""
    r = e.tube_radius if radius is None else radius
    curve = e.curves[i]
    if pos is None:
        pos = _arc_interior_position(e, i)
    k = int(pos)
    a, b = curve.segments()[k % len(curve.segments())]
    p = curve.point_at(pos)
    u1, u2 = _segment_frame(a, b)  # u1 = left normal, u2 completes the frame
    ua, ub = _scaled(u1, r), _scaled(u2, r)
    ring = [
        v_add(v_add(p, ua), _neg(ub)),
        v_add(v_add(p, ua), ub),
        v_add(v_sub(p, ua), ub),
        v_sub(v_sub(p, ua), ub),
    ]
    if reverse:
        ring.reverse()
    return PLCurve(ring, closed=True)


def _neg(v):
    return (-v[0], -v[1], -v[2])


def left_offset(a, b, r):
    """Horizontal blackboard-framing offset for segment a->b."""
    dx, dy = b[0] - a[0], b[1] - a[1]
    l1 = abs(dx) + abs(dy)
    if l1 == 0:
        raise NotGeneric("vertical curve segment has no blackboard offset")
    t = Q(r, l1)
    return (-dy * t, dx * t, Q(0))


def pushoff_points(curve, pos0, pos1, r):
    """Open pushoff of the subarc pos0->pos1: radial joins at the ends,
    each segment offset by its horizontal left normal."""
    sub = curve.subarc(pos0, pos1)
    out = [sub[0]]
    for k in range(len(sub) - 1):
        a, b = sub[k], sub[k + 1]
        n = left_offset(a, b, r)
        for p in (v_add(a, n), v_add(b, n)):
            if out[-1] != p:
                out.append(p)
    if out[-1] != sub[-1]:
        out.append(sub[-1])
    return out


def pushoff_cycle(curve, r):
    """Closed full-curve pushoff in the blackboard framing."""
    vs = curve.vertices
    n = len(vs)
    out = []
    for k in range(n):
        a, b = vs[k], vs[(k + 1) % n]
        off = left_offset(a, b, r)
        for p in (v_add(a, off), v_add(b, off)):
            if not out or out[-1] != p:
                out.append(p)
    if out[0] == out[-1]:
        out.pop()
    return PLCurve(out, closed=True)
