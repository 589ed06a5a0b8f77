"""Exact piecewise-linear geometry kernel in Q^3.

Points are plain tuples of rationals.  Every predicate is exact: there
are no tolerances anywhere, degeneracies are reported (NotGeneric) or
returned as explicit result kinds, never absorbed.  Callers that need a
degeneracy resolved are expected to perturb their input and retry.

Intersection results are tagged tuples:
  ("empty",)
  ("point", p)            p in Q^3
  ("segment", (p, q))
  ("polygon", [p0, ...])  coplanar overlap with positive area
"""

import json

import numpy as np

from .errors import NotGeneric
from .rational import Q, qstr, sign

EMPTY = ("empty",)


# ---------------------------------------------------------------------------
# vector helpers


def v_add(a, b):
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2])


def v_sub(a, b):
    return (a[0] - b[0], a[1] - b[1], a[2] - b[2])


def v_scale(a, t):
    return (a[0] * t, a[1] * t, a[2] * t)


def v_dot(a, b):
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def v_cross(a, b):
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def v_lerp(a, b, t):
    return v_add(a, v_scale(v_sub(b, a), t))


def qpoint(x, y, z):
    return (Q(x), Q(y), Q(z))


def orient3(p, q, r, s):
    """Sign of det(q-p, r-p, s-p): +1 for a right-handed frame, 0 coplanar."""
    return sign(v_dot(v_cross(v_sub(q, p), v_sub(r, p)), v_sub(s, p)))


def tri_normal(tri):
    a, b, c = tri
    return v_cross(v_sub(b, a), v_sub(c, a))


def plane_side(tri, p):
    """Sign of p against the oriented plane of tri (+1 on the normal side)."""
    return sign(v_dot(tri_normal(tri), v_sub(p, tri[0])))


# ---------------------------------------------------------------------------
# 2D sub-kernel (used after projecting coplanar configurations)


def _drop_axis(n):
    # axis with the largest |component| of the normal; projection along it
    # is affinely faithful on the plane
    ax, best = 0, abs(n[0])
    for i in (1, 2):
        if abs(n[i]) > best:
            ax, best = i, abs(n[i])
    return ax


def _proj(p, ax):
    return tuple(p[i] for i in range(3) if i != ax)


def orient2(a, b, c):
    return sign((b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]))


def _seg_point_param(a, b, p):
    """Parameter t with p = a + t(b-a) if p lies on segment ab, else None."""
    d = v_sub(b, a)
    e = v_sub(p, a)
    if v_cross(d, e) != (0, 0, 0):
        return None
    dd = v_dot(d, d)
    if dd == 0:
        return Q(0) if e == (0, 0, 0) else None
    t = Q(v_dot(e, d), dd)
    if t < 0 or t > 1:
        return None
    return t


def point_on_segment(a, b, p):
    return _seg_point_param(a, b, p) is not None


def point_in_triangle(tri, p):
    """Classify p against tri assuming p lies in tri's plane.

    Returns one of "interior", "edge", "vertex", "outside".
    """
    a, b, c = tri
    n = tri_normal(tri)
    s1 = sign(v_dot(n, v_cross(v_sub(b, a), v_sub(p, a))))
    s2 = sign(v_dot(n, v_cross(v_sub(c, b), v_sub(p, b))))
    s3 = sign(v_dot(n, v_cross(v_sub(a, c), v_sub(p, c))))
    ss = (s1, s2, s3)
    if any(s < 0 for s in ss):
        return "outside"
    zeros = ss.count(0)
    if zeros == 0:
        return "interior"
    if zeros == 1:
        return "edge"
    return "vertex"


# ---------------------------------------------------------------------------
# segment / triangle


def segment_triangle(seg, tri):
    """Exact intersection of a closed segment with a closed triangle."""
    p0, p1 = seg
    n = tri_normal(tri)
    d0 = v_dot(n, v_sub(p0, tri[0]))
    d1 = v_dot(n, v_sub(p1, tri[0]))
    s0, s1 = sign(d0), sign(d1)

    if s0 == 0 and s1 == 0:
        return _coplanar_segment_triangle(seg, tri, n)
    if s0 == s1:
        return EMPTY
    if s0 == 0:
        return _on_plane_point(p0, tri)
    if s1 == 0:
        return _on_plane_point(p1, tri)
    # proper crossing of the plane
    t = Q(d0, d0 - d1)
    x = v_lerp(p0, p1, t)
    if point_in_triangle(tri, x) == "outside":
        return EMPTY
    return ("point", x)


def _on_plane_point(p, tri):
    if point_in_triangle(tri, p) == "outside":
        return EMPTY
    return ("point", p)


def _coplanar_segment_triangle(seg, tri, n):
    ax = _drop_axis(n)
    a2, b2 = _proj(seg[0], ax), _proj(seg[1], ax)
    t2 = [_proj(v, ax) for v in tri]
    if orient2(*t2) < 0:
        t2.reverse()
    # clip the segment parameter interval against the three half-planes
    lo, hi = Q(0), Q(1)
    d = (b2[0] - a2[0], b2[1] - a2[1])
    for i in range(3):
        e0, e1 = t2[i], t2[(i + 1) % 3]
        # inward normal: inside means orient2(e0, e1, x) >= 0
        nx, ny = e0[1] - e1[1], e1[0] - e0[0]
        num = nx * (a2[0] - e0[0]) + ny * (a2[1] - e0[1])
        den = nx * d[0] + ny * d[1]
        if den == 0:
            if num < 0:
                return EMPTY
            continue
        t = Q(-num, den)
        if den > 0:
            lo = max(lo, t)
        else:
            hi = min(hi, t)
        if lo > hi:
            return EMPTY
    if lo == hi:
        return ("point", v_lerp(seg[0], seg[1], lo))
    return ("segment", (v_lerp(seg[0], seg[1], lo), v_lerp(seg[0], seg[1], hi)))


# ---------------------------------------------------------------------------
# triangle / triangle


def triangle_triangle(t1, t2):
    """Exact intersection of two closed triangles."""
    n1 = tri_normal(t1)
    n2 = tri_normal(t2)
    d2 = [sign(v_dot(n1, v_sub(v, t1[0]))) for v in t2]
    if all(s > 0 for s in d2) or all(s < 0 for s in d2):
        return EMPTY
    d1 = [sign(v_dot(n2, v_sub(v, t2[0]))) for v in t1]
    if all(s > 0 for s in d1) or all(s < 0 for s in d1):
        return EMPTY
    if all(s == 0 for s in d2):
        return _coplanar_triangle_triangle(t1, t2, n1)

    pts = []
    for i in range(3):
        for (ta, tb) in ((t1, t2), (t2, t1)):
            r = segment_triangle((ta[i], ta[(i + 1) % 3]), tb)
            if r[0] == "point":
                pts.append(r[1])
            elif r[0] == "segment":
                pts.extend(r[1])
    if not pts:
        return EMPTY
    # all hits lie on the common line; order them along it
    axis = v_cross(n1, n2)
    if axis == (0, 0, 0):
        # parallel planes but contact detected: only possible when an edge
        # lies in the other plane; order along that edge instead
        axis = v_sub(pts[-1], pts[0])
        if axis == (0, 0, 0):
            return ("point", pts[0])
    keyed = sorted((v_dot(axis, p), p) for p in pts)
    lo, hi = keyed[0], keyed[-1]
    if lo[1] == hi[1]:
        return ("point", lo[1])
    return ("segment", (lo[1], hi[1]))


def _coplanar_triangle_triangle(t1, t2, n):
    ax = _drop_axis(n)
    p1 = [_proj(v, ax) for v in t1]
    p2 = [_proj(v, ax) for v in t2]
    lift = {pp: v for pp, v in zip(p1, t1)}
    if orient2(*p2) < 0:
        p2 = list(reversed(p2))
    poly = p1 if orient2(*p1) > 0 else list(reversed(p1))
    # Sutherland-Hodgman clip of t1 by t2, exact
    for i in range(3):
        e0, e1 = p2[i], p2[(i + 1) % 3]
        out = []
        m = len(poly)
        for j in range(m):
            cur, nxt = poly[j], poly[(j + 1) % m]
            sc = orient2(e0, e1, cur)
            sn = orient2(e0, e1, nxt)
            if sc >= 0:
                out.append(cur)
            if sc * sn < 0:
                # exact edge crossing
                nx, ny = e1[1] - e0[1], e0[0] - e1[0]
                num = nx * (cur[0] - e0[0]) + ny * (cur[1] - e0[1])
                den = nx * (nxt[0] - cur[0]) + ny * (nxt[1] - cur[1])
                t = Q(-num, den)
                out.append(
                    (cur[0] + t * (nxt[0] - cur[0]), cur[1] + t * (nxt[1] - cur[1]))
                )
        poly = out
        if not poly:
            return EMPTY
    uniq = []
    for p in poly:
        if p not in uniq:
            uniq.append(p)
    lifted = [_unproject(p, ax, t1, n) for p in uniq]
    if len(uniq) == 1:
        return ("point", lifted[0])
    if len(uniq) == 2:
        return ("segment", (lifted[0], lifted[1]))
    # check for zero area (collinear ring)
    if all(orient2(uniq[0], uniq[i], uniq[i + 1]) == 0 for i in range(1, len(uniq) - 1)):
        keyed = sorted(uniq)
        return ("segment", (_unproject(keyed[0], ax, t1, n), _unproject(keyed[-1], ax, t1, n)))
    return ("polygon", lifted)


def _unproject(p2, ax, tri, n):
    # recover the dropped coordinate from the plane equation
    keep = [i for i in range(3) if i != ax]
    rhs = v_dot(n, tri[0]) - n[keep[0]] * p2[0] - n[keep[1]] * p2[1]
    missing = Q(rhs, n[ax])
    out = [Q(0)] * 3
    out[keep[0]], out[keep[1]], out[ax] = p2[0], p2[1], missing
    return tuple(out)


# ---------------------------------------------------------------------------
# curves and surfaces


class PLCurve:
    """Oriented polyline; closed curves do not repeat the first vertex."""

    def __init__(self, vertices, closed=True):
        self.vertices = [tuple(Q(c) for c in v) for v in vertices]
        self.closed = closed
        if closed and len(self.vertices) < 3:
            raise ValueError("closed curve needs at least 3 vertices")
        for a, b in zip(self.vertices, self.vertices[1:]):
            if a == b:
                raise ValueError("repeated consecutive vertex")
        if closed and self.vertices[0] == self.vertices[-1]:
            raise ValueError("closed curve must not repeat its first vertex")

    def __len__(self):
        return len(self.vertices)

    def segments(self):
        vs = self.vertices
        n = len(vs)
        m = n if self.closed else n - 1
        return [(vs[i], vs[(i + 1) % n]) for i in range(m)]

    def reversed(self):
        return PLCurve(list(reversed(self.vertices)), self.closed)

    def locate(self, p):
        """Position (seg_index + t in [0,1)) of p on the curve, or None."""
        for i, (a, b) in enumerate(self.segments()):
            t = _seg_point_param(a, b, p)
            if t is not None and t < 1:
                return Q(i) + t
        # closed curve: p may equal the final wrap vertex handled above;
        # open curve: allow the very last vertex
        if not self.closed and p == self.vertices[-1]:
            return Q(len(self.vertices) - 1)
        return None

    def point_at(self, pos):
        i = int(pos)
        t = pos - i
        segs = self.segments()
        a, b = segs[i % len(segs)]
        return v_lerp(a, b, t)

    def subarc(self, pos0, pos1):
        """Vertices of the forward sub-arc from pos0 to pos1 (cyclic).

        pos0 and pos1 must be distinct positions on a closed curve.
        """
        if not self.closed:
            raise ValueError("subarc only on closed curves")
        if pos0 == pos1:
            raise ValueError("subarc endpoints coincide")
        n = len(self.segments())
        i = int(pos0) % n
        i1 = int(pos1) % n
        frac0 = pos0 - int(pos0)
        frac1 = pos1 - int(pos1)
        out = [self.point_at(pos0)]
        if i1 == i and frac1 > frac0:
            out.append(self.point_at(pos1))
            return out
        while True:
            i = (i + 1) % n
            v = self.vertices[i]
            if v != out[-1]:
                out.append(v)
            if i == i1:
                if frac1 > 0:
                    out.append(self.point_at(pos1))
                return out

    def bbox(self):
        return _bbox(self.vertices)


class PLSurface:
    """Oriented triangulated surface with exact vertices.

    Triangles are ordered vertex triples; the winding defines the
    orientation.  Interior edges must be shared by exactly two triangles
    with opposite induced directions.
    """

    def __init__(self, triangles):
        self.triangles = [tuple(tuple(Q(c) for c in v) for v in t) for t in triangles]

    def __len__(self):
        return len(self.triangles)

    def validate(self):
        """Check edge pairing; returns the list of boundary (directed) edges."""
        count = {}
        for t in self.triangles:
            for i in range(3):
                e = (t[i], t[(i + 1) % 3])
                if e in count:
                    raise ValueError("repeated directed edge %r" % (e,))
                count[e] = True
        boundary = []
        for e in count:
            if (e[1], e[0]) not in count:
                boundary.append(e)
        return boundary

    def boundary_curves(self):
        """Boundary as oriented closed PLCurves (induced orientation)."""
        edges = self.validate()
        nxt = {}
        for a, b in edges:
            if a in nxt:
                raise NotGeneric("boundary is not a disjoint union of circles")
            nxt[a] = b
        curves = []
        seen = set()
        for start in sorted(nxt):
            if start in seen:
                continue
            loop = [start]
            seen.add(start)
            cur = nxt[start]
            while cur != start:
                loop.append(cur)
                seen.add(cur)
                cur = nxt[cur]
            # drop collinear interior vertices? keep exact: fine as is
            curves.append(PLCurve(loop, closed=True))
        return curves

    def bbox(self):
        return _bbox([v for t in self.triangles for v in t])

    def check_embedded(self):
        """Exact self-intersection check.

        Triangles may share vertices/edges (mesh adjacency); any other
        contact raises NotGeneric.
        """
        idx = BoxIndex([t for t in self.triangles])
        for i, t1 in enumerate(self.triangles):
            for j in idx.query(_bbox(t1)):
                if j <= i:
                    continue
                t2 = self.triangles[j]
                shared = set(t1) & set(t2)
                r = triangle_triangle(t1, t2)
                if r[0] == "empty":
                    continue
                if r[0] == "point" and len(shared) >= 1 and r[1] in shared:
                    continue
                if r[0] == "segment" and len(shared) == 2:
                    a, b = sorted(shared)
                    if tuple(sorted(r[1])) == (a, b):
                        continue
                raise NotGeneric("surface self-intersection between %d and %d" % (i, j))


def _bbox(points):
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    zs = [p[2] for p in points]
    return (min(xs), min(ys), min(zs), max(xs), max(ys), max(zs))


_PAD = 1e-3


class BoxIndex:
    """Float bounding-box prefilter over a list of triangles or segments.

    Boxes are padded so float rounding can never cause a false miss; all
    candidate pairs are still confirmed with exact arithmetic by callers.
    """

    def __init__(self, items):
        boxes = [_bbox(list(it)) for it in items]
        arr = np.empty((len(boxes), 6), dtype=float)
        for i, b in enumerate(boxes):
            arr[i] = [float(c) for c in b]
        arr[:, :3] -= _PAD
        arr[:, 3:] += _PAD
        self.arr = arr

    def query(self, box):
        b = np.array([float(c) for c in box], dtype=float)
        a = self.arr
        if len(a) == 0:
            return []
        mask = (
            (a[:, 0] <= b[3] + _PAD)
            & (a[:, 3] >= b[0] - _PAD)
            & (a[:, 1] <= b[4] + _PAD)
            & (a[:, 4] >= b[1] - _PAD)
            & (a[:, 2] <= b[5] + _PAD)
            & (a[:, 5] >= b[2] - _PAD)
        )
        return np.nonzero(mask)[0].tolist()


# ---------------------------------------------------------------------------
# signed curve-surface intersection counts


def _segment_crossings(seg, surface, index):
    """Yield (t, point, sign, tri_index) for transversal pierces of one
    segment."""
    p0, p1 = seg
    for ti in index.query(_bbox([p0, p1])):
        tri = surface.triangles[ti]
        n = tri_normal(tri)
        d0 = v_dot(n, v_sub(p0, tri[0]))
        d1 = v_dot(n, v_sub(p1, tri[0]))
        s0, s1 = sign(d0), sign(d1)
        if s0 == 0 or s1 == 0:
            # an endpoint lies on the plane: harmless when outside the
            # triangle, degenerate when touching it
            for p, s in ((p0, s0), (p1, s1)):
                if s == 0 and point_in_triangle(tri, p) != "outside":
                    raise NotGeneric("curve vertex on surface")
            continue
        if s0 == s1:
            continue
        t = Q(d0, d0 - d1)
        x = v_lerp(p0, p1, t)
        where = point_in_triangle(tri, x)
        if where == "outside":
            continue
        if where != "interior":
            raise NotGeneric("curve crosses a triangle edge of the surface")
        yield t, x, (1 if s0 < 0 else -1), ti


def curve_surface_crossings(curve, surface, index=None):
    """All transversal pierce events of a PLCurve through a PLSurface,
    as (position, point, sign, triangle index) sorted along the curve."""
    if index is None:
        index = BoxIndex(surface.triangles)
    events = []
    for si, seg in enumerate(curve.segments()):
        for t, x, s, ti in _segment_crossings(seg, surface, index):
            if x == seg[0] or x == seg[1]:
                raise NotGeneric("pierce at a curve vertex")
            events.append((Q(si) + t, x, s, ti))
    events.sort(key=lambda ev: ev[0])
    return events


def curve_surface_count(curve, surface, index=None):
    """Signed count of pierces; +1 per negative-to-positive-side crossing."""
    return sum(s for _, _, s, _ in curve_surface_crossings(curve, surface, index))


# ---------------------------------------------------------------------------
# debug geometry dump


def geometry_json(curves=(), surfaces=(), labels=None):
    """Documented JSON form of curves and surfaces for offline plotting."""
    doc = {"schema_version": 1, "curves": [], "surfaces": []}
    for i, c in enumerate(curves):
        doc["curves"].append(
            {
                "closed": c.closed,
                "points": [[qstr(x) for x in v] for v in c.vertices],
            }
        )
    for s in surfaces:
        doc["surfaces"].append(
            {"triangles": [[[qstr(x) for x in v] for v in t] for t in s.triangles]}
        )
    if labels:
        doc["labels"] = list(labels)
    return doc


def dump_geometry(path, **kw):
    with open(path, "w") as fh:
        json.dump(geometry_json(**kw), fh, indent=1, sort_keys=True)
        fh.write("\n")
