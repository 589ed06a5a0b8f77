"""Oriented intersection curves of two Seifert surfaces and the derived
boundary they generate.

For an ordered surface pair (F_a, F_b) the intersection curves are
oriented so that the frame (normal of F_a, normal of F_b, tangent) is
right-handed.  With that convention every arc leaves the +1 pierce points
of K_a through F_b and enters the -1 ones, so the closed 1-cycle bounding
the "next level" surface can be traced deterministically: travel along
K_a from a -1 pierce to the first unconsumed +1, follow its arc, travel
along K_b whenever the arc lands there, skip arcs that cannot be followed,
and close up at the start.  Circles of the intersection join the result
as standalone loops.
"""

from dataclasses import dataclass

from .errors import NonzeroLinking, NotGeneric, StuckTrace
from .plgeom import (
    BoxIndex,
    PLCurve,
    curve_surface_crossings,
    tri_normal,
    triangle_triangle,
    v_cross,
    v_dot,
    v_sub,
    _bbox,
)
from .rational import sign


@dataclass(frozen=True)
class PiercePoint:
    location: tuple
    label: int            # +1 / -1, local crossing sign of K_a through F_b
    component: int        # a
    position: object      # parameter along K_a
    triangle: int         # pierced triangle of F_b


@dataclass(frozen=True)
class IntersectionCurve:
    points: tuple         # oriented polyline; circles omit the repeat
    kind: str             # "arc" | "circle"
    ends: tuple           # per endpoint ("a", position) / ("b", position); () for circles
    pair: tuple           # (a, b)

    def curve(self):
        return PLCurve(list(self.points), closed=self.kind == "circle")


@dataclass(frozen=True)
class BoundaryPiece:
    kind: str             # "interior" | "along" | "circle"
    component: object     # component id for "along", else None
    points: tuple         # oriented polyline of the piece


@dataclass(frozen=True)
class DerivedBoundary:
    pair: tuple
    loops: tuple          # tuple of tuples of BoundaryPiece
    pierce_points: tuple

    def loop_curves(self):
        """Each loop as a closed PLCurve."""
        out = []
        for loop in self.loops:
            pts = []
            for piece in loop:
                for p in piece.points:
                    if not pts or pts[-1] != p:
                        pts.append(p)
            if pts[0] == pts[-1]:
                pts.pop()
            out.append(PLCurve(pts, closed=True))
        return out


# ---------------------------------------------------------------------------
# surface-surface intersection curves


def surface_intersection(F_a, F_b, pair=(0, 0), index_b=None):
    """Connected oriented components of the point set F_a meet F_b."""
    if index_b is None:
        index_b = BoxIndex(F_b.triangles)
    raw = {}
    for ia, ta in enumerate(F_a.triangles):
        for ib in index_b.query(_bbox(list(ta))):
            tb = F_b.triangles[ib]
            r = triangle_triangle(ta, tb)
            if r[0] == "empty":
                continue
            if r[0] == "polygon":
                raise NotGeneric("overlapping coplanar triangles")
            if r[0] == "point":
                # tolerated only when a curve endpoint lands on a triangle
                # corner of the *other* pair member; real isolated contact
                # shows up as an unmatched key below
                key = (r[1], r[1])
                raw.setdefault(key, []).append((ia, ib, None))
                continue
            p, q = r[1]
            key = (p, q) if (p < q) else (q, p)
            raw.setdefault(key, []).append((ia, ib, (p, q)))

    oriented = {}
    for key, wits in raw.items():
        if key[0] == key[1]:
            continue  # point contacts are re-validated at stitch time
        dirs = set()
        for ia, ib, _seg in wits:
            na = tri_normal(F_a.triangles[ia])
            nb = tri_normal(F_b.triangles[ib])
            s = sign(v_dot(v_cross(na, nb), v_sub(key[1], key[0])))
            if s == 0:
                raise NotGeneric("tangential surface contact")
            dirs.add(s)
        if len(dirs) != 1:
            raise NotGeneric("inconsistent orientation along intersection")
        p, q = key if dirs.pop() > 0 else (key[1], key[0])
        oriented[(p, q)] = True

    # stitch oriented segments into chains
    nxt = {}
    prv = {}
    for (p, q) in oriented:
        if p in nxt or q in prv:
            raise NotGeneric("branching intersection set")
        nxt[p] = q
        prv[q] = p
    for key in raw:
        if key[0] == key[1] and key[0] not in nxt and key[0] not in prv:
            raise NotGeneric("isolated surface contact point")

    curves = []
    starts = sorted(p for p in nxt if p not in prv)
    seen = set()
    for p in starts:
        chain = [p]
        while p in nxt:
            seen.add(p)
            p = nxt[p]
            chain.append(p)
        seen.add(p)
        curves.append(("arc", chain))
    for p in sorted(nxt):
        if p in seen:
            continue
        chain = [p]
        cur = nxt[p]
        seen.add(p)
        while cur != p:
            chain.append(cur)
            seen.add(cur)
            cur = nxt[cur]
        curves.append(("circle", chain))
    out = []
    for kind, chain in curves:
        out.append(
            IntersectionCurve(points=tuple(chain), kind=kind, ends=(), pair=pair)
        )
    return out


# ---------------------------------------------------------------------------
# pierce points


def pierce_points(K_a, F_b, component=0, index_b=None):
    """Transversal pierces of K_a through F_b with exact labels."""
    events = curve_surface_crossings(K_a, F_b, index_b)
    return [
        PiercePoint(location=x, label=s, component=component, position=pos, triangle=ti)
        for pos, x, s, ti in events
    ]


# ---------------------------------------------------------------------------
# the derived boundary tracer


def trace_pair(K_a, K_b, F_a, F_b, pair=(0, 0), index_a=None, index_b=None):
    """Derived boundary of the ordered pair, on explicit curves/surfaces."""
    a_id, b_id = pair
    pierces = pierce_points(K_a, F_b, component=a_id, index_b=index_b)
    if sum(p.label for p in pierces) != 0:
        raise NonzeroLinking(
            "pierce labels of pair %r sum to %d"
            % (pair, sum(p.label for p in pierces))
        )
    curves = surface_intersection(F_a, F_b, pair=pair, index_b=index_b)

    pierce_at = {p.location: p for p in pierces}
    arcs = []
    circles = []
    for c in curves:
        if c.kind == "circle":
            circles.append(c)
            continue
        ends = []
        for endpoint in (c.points[0], c.points[-1]):
            if endpoint in pierce_at:
                ends.append(("a", pierce_at[endpoint].position))
            else:
                pos = K_b.locate(endpoint)
                if pos is None:
                    raise NotGeneric("intersection arc endpoint off both curves")
                ends.append(("b", pos))
        arcs.append(
            IntersectionCurve(points=c.points, kind="arc", ends=tuple(ends), pair=pair)
        )

    # orientation convention: arcs leave +1 pierces and enter -1 pierces
    out_arc = {}
    in_arc = {}
    departs_b = {}
    arrives_b = {}
    for k, c in enumerate(arcs):
        side0, pos0 = c.ends[0]
        side1, pos1 = c.ends[1]
        if side0 == "a":
            p = pierce_at[c.points[0]]
            if p.label != 1 or p.position in out_arc:
                raise StuckTrace("arc does not leave a fresh +1 pierce")
            out_arc[p.position] = k
        else:
            if pos0 in departs_b:
                raise NotGeneric("two arcs depart one attachment point")
            departs_b[pos0] = k
        if side1 == "a":
            p = pierce_at[c.points[-1]]
            if p.label != -1 or p.position in in_arc:
                raise StuckTrace("arc does not enter a fresh -1 pierce")
            in_arc[p.position] = k
        else:
            if pos1 in arrives_b:
                raise NotGeneric("two arcs arrive at one attachment point")
            arrives_b[pos1] = k

    plus = sorted(p.position for p in pierces if p.label == 1)
    minus = sorted(p.position for p in pierces if p.label == -1)
    if len(out_arc) != len(plus) or len(in_arc) != len(minus):
        raise StuckTrace("pierce/arc incidence mismatch")

    b_positions = sorted(departs_b)
    a_positions = sorted(p.position for p in pierces)
    used = set()
    consumed_minus = set()
    loops = []

    def next_plus(pos):
        """First +1 pierce with an unused arc, strictly after pos (cyclic)."""
        order = sorted(a_positions)
        k0 = 0
        while k0 < len(order) and order[k0] <= pos:
            k0 += 1
        for step in range(len(order)):
            q = order[(k0 + step) % len(order)]
            pk = out_arc.get(q)
            if pk is not None and pk not in used:
                return q
        raise StuckTrace("no reachable +1 pierce from position %s" % pos)

    def next_departure(pos):
        k0 = 0
        while k0 < len(b_positions) and b_positions[k0] <= pos:
            k0 += 1
        for step in range(len(b_positions)):
            q = b_positions[(k0 + step) % len(b_positions)]
            if departs_b[q] not in used:
                return q
        raise StuckTrace("no reachable departure on the second component")

    for start in minus:
        if start in consumed_minus:
            continue
        loop = []
        cur = start
        while True:
            q = next_plus(cur)
            loop.append(
                BoundaryPiece(
                    kind="along", component=a_id,
                    points=tuple(K_a.subarc(cur, q)),
                )
            )
            arc = arcs[out_arc[q]]
            used.add(out_arc[q])
            loop.append(BoundaryPiece(kind="interior", component=None, points=arc.points))
            side, pos = arc.ends[1]
            while side == "b":
                dep = next_departure(pos)
                loop.append(
                    BoundaryPiece(
                        kind="along", component=b_id,
                        points=tuple(K_b.subarc(pos, dep)),
                    )
                )
                arc = arcs[departs_b[dep]]
                used.add(departs_b[dep])
                loop.append(
                    BoundaryPiece(kind="interior", component=None, points=arc.points)
                )
                side, pos = arc.ends[1]
            # landed on a -1 pierce of K_a
            consumed_minus.add(pos)
            if pos == start:
                break
            cur = pos
        loops.append(tuple(loop))

    # arcs attached to the second component at both ends can close into
    # loops that never meet a pierce of K_a; start each from any unused
    # departure and follow the same travel rule
    while True:
        remaining = [q for q in b_positions if departs_b[q] not in used]
        if not remaining:
            break
        start_q = remaining[0]
        loop = []
        k = departs_b[start_q]
        while True:
            used.add(k)
            arc = arcs[k]
            loop.append(BoundaryPiece(kind="interior", component=None, points=arc.points))
            side, pos = arc.ends[1]
            if side != "b":
                raise StuckTrace("second-component loop escaped to a pierce")
            k0 = 0
            while k0 < len(b_positions) and b_positions[k0] <= pos:
                k0 += 1
            q = None
            for step in range(len(b_positions)):
                cand = b_positions[(k0 + step) % len(b_positions)]
                if cand == start_q or departs_b[cand] not in used:
                    q = cand
                    break
            if q is None:
                raise StuckTrace("no departure to continue a second-component loop")
            loop.append(
                BoundaryPiece(
                    kind="along", component=b_id,
                    points=tuple(K_b.subarc(pos, q)),
                )
            )
            if q == start_q:
                break
            k = departs_b[q]
        loops.append(tuple(loop))

    if len(used) != len(arcs):
        raise StuckTrace("%d intersection arcs left untraced" % (len(arcs) - len(used)))
    for c in circles:
        loops.append(
            (BoundaryPiece(kind="circle", component=None, points=c.points),)
        )
    db = DerivedBoundary(pair=pair, loops=tuple(loops), pierce_points=tuple(pierces))
    _check_closed(db)
    return db


def _check_closed(db):
    for loop in db.loops:
        if len(loop) == 1 and loop[0].kind == "circle":
            continue
        for k, piece in enumerate(loop):
            nxt = loop[(k + 1) % len(loop)]
            if piece.points[-1] != nxt.points[0]:
                raise StuckTrace("derived boundary loop fails to close")


def trace_derived_boundary(e, a, b):
    """Derived boundary of an embedded pair; requires lk(a, b) = 0."""
    if e.diagram.linking_number(a, b) != 0:
        raise NonzeroLinking(
            "lk(%d,%d) = %d" % (a, b, e.diagram.linking_number(a, b))
        )
    return trace_pair(
        e.curves[a], e.curves[b], e.surfaces[a], e.surfaces[b],
        pair=(a, b), index_b=e.surface_index(b),
    )
