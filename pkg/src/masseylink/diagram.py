"""Oriented link diagrams: PD and Gauss code parsing, signs, linking numbers.

Conventions (documented in the README and relied on by every module
downstream):

* PD tuple X(a,b,c,d): slot 1 (= a) is the incoming under-strand and the
  slots proceed counterclockwise around the crossing, so the under-strand
  runs a -> c and the over-strand occupies b and d.
* Orientation is encoded by arc numbering: labels increase along each
  component and wrap at that component's largest label.
* Crossing sign: +1 when the over-strand direction is the under-strand
  direction rotated a quarter turn clockwise (the table convention); with
  the slot rule above this means the over-strand runs d -> b at a positive
  crossing and b -> d at a negative one.
"""

import json
import re
from dataclasses import dataclass, field

from .errors import InconsistentDiagram, MalformedCode, UnknownComponent


@dataclass(frozen=True)
class Crossing:
    slots: tuple          # (a, b, c, d) in PD order
    sign: int             # +1 or -1
    over_in: int          # incoming over-strand arc (d if sign>0 else b)
    over_out: int
    under_component: int  # 1-based component ids
    over_component: int

    @property
    def under_in(self):
        return self.slots[0]

    @property
    def under_out(self):
        return self.slots[2]


@dataclass(frozen=True)
class LinkDiagram:
    components: tuple     # tuple of tuples: arcs of each component in cyclic order
    crossings: tuple      # tuple of Crossing
    comment: str = ""
    _arc_comp: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        m = {}
        for ci, arcs in enumerate(self.components):
            for a in arcs:
                m[a] = ci + 1
        object.__setattr__(self, "_arc_comp", m)

    # -- basic queries ----------------------------------------------------

    @property
    def n_components(self):
        return len(self.components)

    def component_arcs(self, i):
        self._check_component(i)
        return self.components[i - 1]

    def arc_component(self, arc):
        return self._arc_comp[arc]

    def next_arc(self, arc):
        arcs = self.components[self.arc_component(arc) - 1]
        k = arcs.index(arc)
        return arcs[(k + 1) % len(arcs)]

    def self_crossings(self, i):
        self._check_component(i)
        return [
            x for x in self.crossings
            if x.under_component == i and x.over_component == i
        ]

    def crossings_between(self, i, j):
        self._check_component(i)
        self._check_component(j)
        return [
            x for x in self.crossings
            if {x.under_component, x.over_component} == {i, j}
        ]

    def writhe(self, i):
        return sum(x.sign for x in self.self_crossings(i))

    def _check_component(self, i):
        if not (1 <= i <= self.n_components):
            raise UnknownComponent("no component %r" % (i,))

    # -- linking numbers --------------------------------------------------

    def linking_number(self, a, b):
        """Half the signed crossing count between components a and b."""
        if a == b:
            raise UnknownComponent("linking number needs two distinct components")
        total = sum(x.sign for x in self.crossings_between(a, b))
        if total % 2:
            raise InconsistentDiagram("odd signed crossing total between components")
        return total // 2

    def linking_number_under(self, a, b):
        """Signed count of crossings where a passes under b (equal value)."""
        if a == b:
            raise UnknownComponent("linking number needs two distinct components")
        return sum(
            x.sign for x in self.crossings
            if x.under_component == a and x.over_component == b
        )

    def linking_matrix(self):
        n = self.n_components
        mat = [[0] * n for _ in range(n)]
        for a in range(1, n + 1):
            for b in range(a + 1, n + 1):
                v = self.linking_number(a, b)
                mat[a - 1][b - 1] = mat[b - 1][a - 1] = v
        return mat

    # -- serialisation ----------------------------------------------------

    def to_json(self):
        return {
            "components": self.n_components,
            "crossings": [list(x.slots) for x in self.crossings],
            "comment": self.comment,
        }

    def normalized_pd(self):
        """Canonical PD tuples, invariant under arc relabeling.

        Arcs are renumbered sequentially along each component; the lexical
        minimum over all choices of starting arc is returned, so two
        diagrams differing only by labels normalize identically.
        """
        import itertools

        rotations = []
        for arcs in self.components:
            k = len(arcs)
            rotations.append([arcs[i:] + arcs[:i] for i in range(max(k, 1))])
        best = None
        for choice in itertools.product(*rotations):
            relabel = {}
            nxt = 1
            for order in choice:
                for a in order:
                    relabel[a] = nxt
                    nxt += 1
            cand = sorted(tuple(relabel[s] for s in x.slots) for x in self.crossings)
            if best is None or cand < best:
                best = cand
        return best


# ---------------------------------------------------------------------------
# PD parsing


_X_RE = re.compile(r"[Xx]\s*\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)")


def parse_pd(text):
    """Parse a PD code, either X(a,b,c,d) tuples or the JSON form."""
    text = text.strip()
    if not text:
        raise MalformedCode("empty PD code")
    if text.startswith("{"):
        try:
            doc = json.loads(text)
        except ValueError as e:
            raise MalformedCode("bad JSON: %s" % e)
        return diagram_from_json(doc)
    tuples = [tuple(int(g) for g in m.groups()) for m in _X_RE.finditer(text)]
    leftover = _X_RE.sub("", text).replace(",", "").strip()
    if leftover or not tuples:
        raise MalformedCode("PD code must be X(a,b,c,d) tuples")
    return build_diagram(tuples)


def diagram_from_json(doc):
    if not isinstance(doc, dict) or "crossings" not in doc:
        raise MalformedCode("JSON diagram needs a 'crossings' field")
    tuples = []
    for row in doc["crossings"]:
        if len(row) != 4 or not all(isinstance(v, int) and v > 0 for v in row):
            raise MalformedCode("each crossing must be 4 positive integers")
        tuples.append(tuple(row))
    return build_diagram(
        tuples,
        declared_components=doc.get("components"),
        comment=doc.get("comment", ""),
    )


def build_diagram(tuples, declared_components=None, comment=""):
    """Validate raw PD tuples and build a LinkDiagram."""
    counts = {}
    for t in tuples:
        for s in t:
            counts[s] = counts.get(s, 0) + 1
    bad = [s for s, c in counts.items() if c != 2]
    if bad:
        raise InconsistentDiagram("arc labels used != 2 times: %s" % sorted(bad))

    # component partition: under and over pairs stay on one component
    parent = {s: s for s in counts}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        parent[find(x)] = find(y)

    for a, b, c, d in tuples:
        union(a, c)
        union(b, d)

    groups = {}
    for s in counts:
        groups.setdefault(find(s), []).append(s)
    comps = sorted((sorted(g) for g in groups.values()), key=lambda g: g[0])

    def nxt(arc):
        g = groups[find(arc)]
        bigger = [s for s in g if s > arc]
        return min(bigger) if bigger else min(g)

    # under-strand transitions must follow the numbering
    for a, b, c, d in tuples:
        if nxt(a) != c:
            raise InconsistentDiagram(
                "under-strand at X%s does not follow arc numbering" % ((a, b, c, d),)
            )

    # orient the over-strands; each arc is incoming exactly once globally
    incoming_used = {a for a, b, c, d in tuples}  # under-in slots
    if len(incoming_used) != len(tuples):
        raise InconsistentDiagram("an arc is the incoming under-strand twice")
    over_dir = {}
    pending = []
    for t in tuples:
        a, b, c, d = t
        b_ok = nxt(b) == d
        d_ok = nxt(d) == b
        if b_ok and not d_ok:
            over_dir[t] = (b, d)
        elif d_ok and not b_ok:
            over_dir[t] = (d, b)
        elif b_ok and d_ok:
            pending.append(t)
        else:
            raise InconsistentDiagram("over-strand at X%s closes no cycle" % (t,))
    for t, (oin, oout) in over_dir.items():
        if oin in incoming_used:
            raise InconsistentDiagram("arc %d is incoming at two crossings" % oin)
        incoming_used.add(oin)
    # two-arc components passing over twice: settle by global consistency;
    # residual ties (a component that never goes under) default to the
    # over-strand entering at slot 4, the positive-crossing pattern
    for t in pending:
        a, b, c, d = t
        if b in incoming_used and d in incoming_used:
            raise InconsistentDiagram("over-strand arcs at X%s both consumed" % (t,))
        if d in incoming_used:
            over_dir[t] = (b, d)
        else:
            over_dir[t] = (d, b)
        incoming_used.add(over_dir[t][0])

    comp_of = {}
    for i, g in enumerate(comps):
        for s in g:
            comp_of[s] = i + 1

    crossings = []
    for t in tuples:
        a, b, c, d = t
        oin, oout = over_dir[t]
        sign = 1 if oin == d else -1
        crossings.append(
            Crossing(
                slots=t,
                sign=sign,
                over_in=oin,
                over_out=oout,
                under_component=comp_of[a],
                over_component=comp_of[b],
            )
        )

    components = [tuple(g) for g in comps]
    if declared_components is not None:
        if declared_components < len(components):
            raise InconsistentDiagram(
                "declared %d components but crossings span %d"
                % (declared_components, len(components))
            )
        # extra declared components are crossingless split unknots; give
        # each one a fresh arc label so it has an identity
        label = (max(counts) if counts else 0) + 1
        for _ in range(declared_components - len(components)):
            components.append((label,))
            label += 1
    return LinkDiagram(tuple(components), tuple(crossings), comment=comment)


# ---------------------------------------------------------------------------
# Gauss codes


_G_RE = re.compile(r"([OoUu])\s*(\d+)\s*([+-])")


def parse_gauss(text):
    """Parse an oriented Gauss code: per-component O/U tokens with signs.

    Components are separated by ';' or newlines, e.g.
    "O1+ U2+ ; U1+ O2+".
    """
    chunks = [c for c in re.split(r"[;\n]", text) if c.strip()]
    if not chunks:
        raise MalformedCode("empty Gauss code")
    visits = []  # per component: list of (OU, label, sign)
    for chunk in chunks:
        toks = _G_RE.findall(chunk)
        leftover = _G_RE.sub("", chunk).replace(",", "").strip()
        if leftover or not toks:
            raise MalformedCode("bad Gauss tokens in %r" % chunk)
        visits.append([(ou.upper(), int(lbl), 1 if s == "+" else -1) for ou, lbl, s in toks])

    seen = {}
    for comp in visits:
        for ou, lbl, s in comp:
            seen.setdefault(lbl, []).append((ou, s))
    for lbl, occ in seen.items():
        if sorted(ou for ou, _ in occ) != ["O", "U"] or occ[0][1] != occ[1][1]:
            raise InconsistentDiagram(
                "crossing %d needs one O and one U visit with equal sign" % lbl
            )

    # assign arc labels sequentially along each component; the arc after
    # visit j carries the j-th label so numbering increases with travel
    arc = 1
    at = {}  # crossing label -> {"O": (in_arc, out_arc), "U": (...)}
    for comp in visits:
        k = len(comp)
        first = arc
        for j, (ou, lbl, s) in enumerate(comp):
            inc = first + (j - 1) % k
            out = first + j
            at.setdefault(lbl, {})[ou] = (inc, out)
        arc += k
    tuples = []
    for lbl in sorted(at):
        (ui, uo) = at[lbl]["U"]
        (oi, oo) = at[lbl]["O"]
        s = seen[lbl][0][1]
        if s > 0:
            tuples.append((ui, oo, uo, oi))
        else:
            tuples.append((ui, oi, uo, oo))
    d = build_diagram(tuples)
    # cross-check: the declared signs must match the rebuilt ones
    for lbl, x in zip(sorted(at), d.crossings):
        if x.sign != seen[lbl][0][1]:
            raise InconsistentDiagram("sign of crossing %d is inconsistent" % lbl)
    return d


def export_gauss(d):
    """Gauss code of a diagram; inverse of parse_gauss up to relabeling."""
    # map arc -> (crossing index, role) at which the arc ends
    ends = {}
    for idx, x in enumerate(d.crossings):
        ends[x.under_in] = (idx, "U")
        ends[x.over_in] = (idx, "O")
    chunks = []
    for arcs in d.components:
        toks = []
        for a in arcs:
            if a in ends:
                idx, role = ends[a]
                s = "+" if d.crossings[idx].sign > 0 else "-"
                toks.append("%s%d%s" % (role, idx + 1, s))
        chunks.append(" ".join(toks))
    return " ; ".join(chunks)
