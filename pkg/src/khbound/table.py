"""Bundled knot table.

Torus knots and links come from braid closures; two-bridge knots from
their continued-fraction tangles; the two named non-alternating knots
beyond torus knots (9_42, 10_132) from Montesinos tangle sums.  All
entries are validated on first use (component count, reduced-alternating
flag, determinant where recorded).

A small unoriented tangle calculus builds the rational diagrams: tuples
are stored counterclockwise with the under-strand at positions 0 and 2,
and a final pass rotates each 4-tuple so that position 0 is the incoming
under-strand of a consistent orientation.
"""

from __future__ import annotations

from .links import DiagramError, LinkDiagram, braid_closure, mirror


class _Tangle:
    """Four-ended tangle: corners nw, ne, sw, se hold open strand labels."""

    def __init__(self, counter):
        self.crossings = []
        self.counter = counter
        self.nw = self.ne = self.sw = self.se = None

    def fresh(self):
        self.counter += 1
        return self.counter

    @classmethod
    def zero(cls, counter):
        """Two horizontal strands: nw-ne and sw-se."""
        t = cls(counter)
        top = t.fresh()
        bottom = t.fresh()
        t.nw = t.ne = top
        t.sw = t.se = bottom
        return t

    @classmethod
    def infinity(cls, counter):
        """Two vertical strands: nw-sw and ne-se."""
        t = cls(counter)
        left = t.fresh()
        right = t.fresh()
        t.nw = t.sw = left
        t.ne = t.se = right
        return t

    def twist_right(self, sign):
        """Cross the two right-hand ends once."""
        ne2 = self.fresh()
        se2 = self.fresh()
        if sign > 0:
            # under-strand sw->ne diagonal: CCW from SW corner
            self.crossings.append((self.se, se2, ne2, self.ne))
        else:
            self.crossings.append((self.ne, self.se, se2, ne2))
        self.ne, self.se = ne2, se2
        return self

    def twist_bottom(self, sign):
        """Cross the two bottom ends once."""
        sw2 = self.fresh()
        se2 = self.fresh()
        if sign > 0:
            self.crossings.append((sw2, se2, self.se, self.sw))
        else:
            self.crossings.append((se2, self.se, self.sw, sw2))
        self.sw, self.se = sw2, se2
        return self


def _rational_tangle(cf, counter=0):
    """Tangle of the continued fraction [a1, a2, ...] = a1 + 1/(a2 + ...).

    Built tail-first: the last entry twists horizontally, alternating
    with vertical twists while unwinding the fraction.
    """
    # the outermost entry must twist horizontally, so the innermost op is
    # horizontal for odd-length fractions (acting on the 0-tangle) and
    # vertical for even length (acting on the infinity tangle)
    parity = (len(cf) - 1) % 2
    t = _Tangle.zero(counter) if parity == 0 else _Tangle.infinity(counter)
    for k, a in enumerate(reversed(cf)):
        for _ in range(abs(a)):
            if k % 2 == parity:
                t.twist_right(1 if a > 0 else -1)
            else:
                t.twist_bottom(1 if a > 0 else -1)
    return t


def _tangle_sum(t1, t2):
    """Glue t2 to the right of t1 (ne-nw and se-sw)."""
    subs = {t2.nw: t1.ne, t2.sw: t1.se}
    out = _Tangle(max(t1.counter, t2.counter))
    out.crossings = list(t1.crossings) + [
        tuple(subs.get(x, x) for x in c) for c in t2.crossings
    ]
    out.nw, out.sw = t1.nw, t1.sw
    out.ne = subs.get(t2.ne, t2.ne)
    out.se = subs.get(t2.se, t2.se)
    return out


def _numerator_closure(t):
    """Close nw-ne and sw-se; returns the unoriented crossing list."""
    subs = {}
    if t.nw != t.ne:
        subs[max(t.nw, t.ne)] = min(t.nw, t.ne)
    if t.sw != t.se:
        a, b = subs.get(t.sw, t.sw), subs.get(t.se, t.se)
        if a != b:
            subs[max(a, b)] = min(a, b)

    def resolve(x):
        while x in subs:
            x = subs[x]
        return x

    return [tuple(resolve(x) for x in c) for c in t.crossings]


def orient_pd(tuples):
    """LinkDiagram from unoriented 4-tuples (CCW, under-strand at 0/2).

    Each tuple is rotated by two positions when the traversal runs the
    under-strand backwards, making position 0 the incoming under-strand.
    """
    occurrences = {}
    for t, c in enumerate(tuples):
        if len(c) != 4:
            raise DiagramError("crossing must be a 4-tuple")
        for p, e in enumerate(c):
            occurrences.setdefault(e, []).append((t, p))
    for e, occ in occurrences.items():
        if len(occ) != 2:
            raise DiagramError(f"label {e} appears {len(occ)} times")

    def other(e, here):
        a, b = occurrences[e]
        return b if a == here else a

    visited = set()
    rotate = set()
    for e0 in sorted(occurrences):
        start = occurrences[e0][0]
        if (e0, start) in visited:
            continue
        edge, occ = e0, start
        while (edge, occ) not in visited:
            visited.add((edge, occ))
            t, p = occ
            if p == 2:
                rotate.add(t)
            p_exit = p ^ 2
            edge = tuples[t][p_exit]
            visited.add((edge, (t, p_exit)))
            occ = other(edge, (t, p_exit))
    out = []
    for t, c in enumerate(tuples):
        out.append((c[2], c[3], c[0], c[1]) if t in rotate else c)
    return LinkDiagram.from_crossings(out)


def rational_knot(cf):
    """Knot or link of the continued fraction (numerator closure)."""
    return orient_pd(_numerator_closure(_rational_tangle(list(cf))))


def montesinos(*fractions):
    """Numerator closure of a sum of rational tangles, each given as a
    continued fraction list."""
    total = None
    counter = 0
    for cf in fractions:
        t = _rational_tangle(list(cf), counter)
        counter = t.counter
        total = t if total is None else _tangle_sum(total, t)
    return orient_pd(_numerator_closure(total))


# name -> (builder kind, data, expected determinant or None, alternating?)
_SPECS = {
    # torus knots and the named braid closures
    "3_1": ("braid", [-1, -1, -1], 3, True),
    "5_1": ("braid", [-1] * 5, 5, True),
    "7_1": ("braid", [-1] * 7, 7, True),
    "9_1": ("braid", [-1] * 9, 9, True),
    "10_124": ("braid", [1, 2] * 5, 1, False),       # T(3,5)
    # two-bridge knots from continued fractions
    "4_1": ("rational", [2, 2], 5, True),
    "5_2": ("rational", [3, 2], 7, True),
    "6_1": ("rational", [4, 2], 9, True),
    "6_2": ("rational", [3, 1, 2], 11, True),
    "6_3": ("rational", [2, 1, 1, 2], 13, True),
    "7_2": ("rational", [5, 2], 11, True),
    "7_3": ("rational", [3, 4], 13, True),
    "7_4": ("rational", [3, 1, 3], 15, True),
    "7_5": ("rational", [3, 2, 2], 17, True),
    "7_6": ("rational", [2, 1, 2, 2], 19, True),
    "7_7": ("rational", [2, 1, 1, 1, 2], 21, True),
    "8_1": ("rational", [6, 2], 13, True),
    "8_2": ("rational", [5, 1, 2], 17, True),
    "8_3": ("rational", [4, 4], 17, True),
    "8_4": ("rational", [4, 1, 3], 19, True),
    "8_6": ("rational", [3, 3, 2], 23, True),
    "8_7": ("rational", [4, 1, 1, 2], 23, True),
    "8_8": ("rational", [2, 3, 1, 2], 25, True),
    "9_2": ("rational", [7, 2], 15, True),
    "9_3": ("rational", [3, 6], 19, True),
    "9_4": ("rational", [4, 5], 21, True),
    "9_5": ("rational", [5, 1, 3], 23, True),
    # Montesinos presentations of the named non-alternating knots
    "9_42": ("montesinos", [[0, -3], [0, -2, -2], [0, 2]], 7, False),
    "10_132": ("montesinos", [[0, -2], [0, -3], [0, 1, 2, 2]], 5, False),
}


_cache = {}


def knot_names():
    base = sorted(_SPECS)
    return base + ["m" + n for n in base]


def lookup(name):
    """Diagram for a bundled name; the prefix m mirrors the entry."""
    if name in _cache:
        return _cache[name]
    base = name[1:] if name.startswith("m") else name
    if base not in _SPECS:
        raise DiagramError(f"unknown knot table entry: {name!r}")
    kind, data, _det, _alt = _SPECS[base]
    if kind == "braid":
        d = braid_closure(data)
    elif kind == "rational":
        d = rational_knot(data)
    else:
        d = montesinos(*data)
    if name.startswith("m"):
        d = mirror(d)
    _cache[name] = d
    return d


def entry_metadata(name):
    base = name[1:] if name.startswith("m") else name
    kind, data, det, alt = _SPECS[base]
    return {"kind": kind, "data": data, "determinant": det, "alternating": alt}


def alternating_names():
    return [n for n in sorted(_SPECS) if _SPECS[n][3]]
