"""Bundled diagram fixtures and the braid-closure generator behind them.

Fixture files live in masseylink/fixtures/*.json in the documented JSON
diagram form; each carries a "comment" field naming its source diagram.
The directory can be overridden with the MASSEYLINK_FIXTURES environment
variable.
"""

import json
import os

from .diagram import build_diagram, diagram_from_json
from .errors import InputError

_HERE = os.path.join(os.path.dirname(__file__), "fixtures")


def fixture_dir():
    return os.environ.get("MASSEYLINK_FIXTURES", _HERE)


def fixture_names():
    return sorted(
        f[:-5] for f in os.listdir(fixture_dir()) if f.endswith(".json")
    )


def load_fixture(name):
    path = os.path.join(fixture_dir(), name + ".json")
    if not os.path.exists(path):
        raise InputError("no fixture %r (have: %s)" % (name, ", ".join(fixture_names())))
    with open(path) as fh:
        return diagram_from_json(json.load(fh))


# ---------------------------------------------------------------------------
# braid closures


def braid_closure_pd(word, strands):
    """PD tuples of the closure of a braid word.

    word: sequence of nonzero ints, +i for the positive generator on
    positions (i, i+1), -i for its inverse.  A positive generator is the
    crossing whose over-strand runs from position i+1 to position i, which
    parses back with sign +1 under the package's conventions.
    """
    k = len(word)
    for g in word:
        if g == 0 or abs(g) >= strands:
            raise ValueError("bad braid letter %r" % (g,))

    # total permutation: top position -> bottom position of the same strand
    perm = list(range(strands))  # perm[top] = bottom position, 0-based
    for g in word:
        i = abs(g) - 1
        for t in range(strands):
            if perm[t] == i:
                perm[t] = i + 1
            elif perm[t] == i + 1:
                perm[t] = i

    # orbits of the closure, ordered by smallest top position
    seen = [False] * strands
    orbits = []
    for s in range(strands):
        if seen[s]:
            continue
        orbit = []
        cur = s
        while not seen[cur]:
            seen[cur] = True
            orbit.append(cur)
            cur = perm[cur]
        orbits.append(orbit)

    # walk each component, collecting crossing passages in travel order
    visits_by_comp = []
    for orbit in orbits:
        visits = []
        for top in orbit:
            pos = top
            for t, g in enumerate(word):
                i = abs(g) - 1
                if pos not in (i, i + 1):
                    continue
                if g > 0:
                    role = "O" if pos == i + 1 else "U"
                else:
                    role = "O" if pos == i else "U"
                visits.append((t, role))
                pos = i if pos == i + 1 else i + 1
        visits_by_comp.append(visits)

    # number arcs sequentially along each component and fill crossing slots
    at = {}
    arc = 1
    for visits in visits_by_comp:
        m = len(visits)
        first = arc
        for j, (t, role) in enumerate(visits):
            inc = first + (j - 1) % m
            out = first + j
            at.setdefault(t, {})[role] = (inc, out)
        arc += m

    tuples = []
    for t, g in enumerate(word):
        ui, uo = at[t]["U"]
        oi, oo = at[t]["O"]
        if g > 0:
            tuples.append((ui, oo, uo, oi))
        else:
            tuples.append((ui, oi, uo, oo))
    return tuples


def braid_closure(word, strands, comment=""):
    return build_diagram(braid_closure_pd(word, strands), comment=comment)


def clasp_family(k):
    """Three-component Brunnian braid closure with k commutator blocks.

    k = 1 is the Borromean rings; pairwise linking numbers vanish for
    every k and the triple Milnor invariant has magnitude k.
    """
    return braid_closure((1, -2) * (3 * k), 3,
                         comment="closure of (s1 s2^-1)^%d on 3 strands" % (3 * k))
