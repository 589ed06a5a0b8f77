"""Milnor triple invariants via Wirtinger presentations and Magnus expansion.

This module is the independent oracle for the geometric pipeline: it never
touches any geometry, only the diagram combinatorics.  Arc generators are
expanded into noncommutative power series over one symbol per component
(arc = conjugate of its component's base meridian, conjugators resolved
iteratively up to the truncation degree), and the triple invariant is read
off a longitude's degree-two coefficient.
"""

from dataclasses import dataclass

from .errors import PairwiseLinkingNonzero


class TruncatedSeries:
    """Integer power series in noncommuting symbols, truncated by word length.

    Words are tuples of symbols (ints); multiplication silently drops any
    product word longer than the truncation degree.
    """

    __slots__ = ("degree", "coeffs")

    def __init__(self, degree, coeffs=None):
        self.degree = degree
        self.coeffs = {}
        if coeffs:
            for w, c in coeffs.items():
                if c and len(w) <= degree:
                    self.coeffs[tuple(w)] = c

    @classmethod
    def one(cls, degree):
        return cls(degree, {(): 1})

    @classmethod
    def generator(cls, degree, sym, power=1):
        """Magnus image of a meridian power: (1 + X)^power, truncated."""
        out = cls.one(degree)
        base = cls(degree, {(): 1, (sym,): 1})
        if power >= 0:
            for _ in range(power):
                out = out * base
        else:
            inv = base.inverse()
            for _ in range(-power):
                out = out * inv
        return out

    def coefficient(self, word):
        return self.coeffs.get(tuple(word), 0)

    def __add__(self, other):
        out = dict(self.coeffs)
        for w, c in other.coeffs.items():
            out[w] = out.get(w, 0) + c
        return TruncatedSeries(self.degree, out)

    def __sub__(self, other):
        out = dict(self.coeffs)
        for w, c in other.coeffs.items():
            out[w] = out.get(w, 0) - c
        return TruncatedSeries(self.degree, out)

    def __mul__(self, other):
        deg = self.degree
        out = {}
        for w1, c1 in self.coeffs.items():
            room = deg - len(w1)
            for w2, c2 in other.coeffs.items():
                if len(w2) > room:
                    continue
                w = w1 + w2
                out[w] = out.get(w, 0) + c1 * c2
        return TruncatedSeries(deg, out)

    def inverse(self):
        """Inverse of a series with constant term 1."""
        if self.coefficient(()) != 1:
            raise ValueError("only series with constant term 1 are invertible")
        p = self - TruncatedSeries.one(self.degree)
        out = TruncatedSeries.one(self.degree)
        term = TruncatedSeries.one(self.degree)
        for _ in range(self.degree):
            term = term * p
            if not term.coeffs:
                break
            out = out + term if _ % 2 else out - term
        return out

    def __eq__(self, other):
        return self.degree == other.degree and self._clean() == other._clean()

    def _clean(self):
        return {w: c for w, c in self.coeffs.items() if c}

    def __repr__(self):
        terms = sorted(self._clean().items(), key=lambda t: (len(t[0]), t[0]))
        return "Series(%s)" % ", ".join("%r:%d" % (w, c) for w, c in terms)


@dataclass(frozen=True)
class WirtingerPresentation:
    generators: tuple        # arc labels
    relations: tuple         # (under_out, over_in, sign, under_in) per crossing
    component_map: dict      # arc -> component id


def wirtinger(d):
    """Wirtinger presentation on the diagram's arcs.

    Each crossing contributes the relation
    under_out = over^{-sign} under_in over^{sign}; the two over-strand
    arcs at a crossing represent the same group element.
    """
    gens = tuple(a for arcs in d.components for a in arcs)
    rels = tuple(
        (x.under_out, x.over_in, x.sign, x.under_in) for x in d.crossings
    )
    comp = {a: d.arc_component(a) for a in gens}
    return WirtingerPresentation(gens, rels, comp)


def longitude_word(d, i):
    """Longitude of component i as a list of (arc_generator, exponent).

    The word collects the signed over-arcs at every underpass along the
    component and ends with the base arc raised to minus the self-writhe,
    so the longitude carries zero framing.
    """
    arcs = d.component_arcs(i)
    under_at = {x.under_in: x for x in d.crossings}
    word = []
    for a in arcs:
        x = under_at.get(a)
        if x is not None:
            word.append((x.over_in, x.sign))
    w = d.writhe(i)
    if w:
        word.append((arcs[0], -w))
    return word


def _arc_expansions(d, degree, iterations=None):
    """Magnus series of every arc generator, resolved to the given degree."""
    over_pairs = {x.over_out: x.over_in for x in d.crossings}
    exp = {}
    for ci, arcs in enumerate(d.components):
        for a in arcs:
            exp[a] = TruncatedSeries.generator(degree, ci + 1)
    if iterations is None:
        iterations = max(degree - 1, 1)
    under_at = {x.under_in: x for x in d.crossings}
    for _ in range(iterations):
        new = {}
        for ci, arcs in enumerate(d.components):
            base = TruncatedSeries.generator(degree, ci + 1)
            conj = TruncatedSeries.one(degree)
            for a in arcs:
                new[a] = conj.inverse() * base * conj
                x = under_at.get(a)
                if x is not None:
                    g = exp[x.over_in]
                    if x.sign > 0:
                        conj = conj * g
                    else:
                        conj = conj * g.inverse()
        # over-strand arcs are literally the same generator
        for out_arc, in_arc in over_pairs.items():
            new[out_arc] = new[in_arc]
        exp = new
    return exp


def longitude_series(d, i, degree=3):
    exp = _arc_expansions(d, degree)
    out = TruncatedSeries.one(degree)
    for g, e in longitude_word(d, i):
        s = exp[g]
        if e < 0:
            s = s.inverse()
            e = -e
        for _ in range(e):
            out = out * s
    return out


def milnor_mu(d, indices, degree=3):
    """Triple Milnor invariant mu-bar(i j k) for distinct components.

    Defined when the three pairwise linking numbers vanish; the value is
    the coefficient of X_i X_j in the truncated Magnus expansion of the
    k-th longitude.
    """
    i, j, k = indices
    if len({i, j, k}) != 3:
        raise ValueError("indices must be distinct")
    for a, b in ((i, j), (j, k), (i, k)):
        if d.linking_number(a, b) != 0:
            raise PairwiseLinkingNonzero(
                "lk(%d,%d) = %d != 0" % (a, b, d.linking_number(a, b))
            )
    return longitude_series(d, k, degree).coefficient((i, j))
