"""Legendrian fronts with exact rational geometry.

A front is a set of x-monotone polylines (arcs) whose endpoints meet in
pairs at cusps: two left endpoints meeting make a left cusp, two right
endpoints a right cusp.  Crossings are transverse double points interior
to segments; at a crossing the strand of more negative slope becomes the
over-strand of the desingularized diagram.  All coordinates are
Fractions, so every incidence test is exact and there is no epsilon
tuning anywhere.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .links import LinkDiagram, writhe as diagram_writhe


class FrontError(ValueError):
    """Raised for invalid front diagrams."""


def _frac(v):
    if isinstance(v, Fraction):
        return v
    if isinstance(v, (list, tuple)) and len(v) == 2:
        return Fraction(int(v[0]), int(v[1]))
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        return Fraction(v)
    raise FrontError(f"cannot interpret {v!r} as an exact rational")


def _seg_intersection(p1, p2, q1, q2):
    """Intersection of two open segments, or None when they miss, touch
    only at endpoints, or are parallel."""
    (x1, y1), (x2, y2) = p1, p2
    (x3, y3), (x4, y4) = q1, q2
    dx1, dy1 = x2 - x1, y2 - y1
    dx2, dy2 = x4 - x3, y4 - y3
    denom = dx1 * dy2 - dy1 * dx2
    if denom == 0:
        return None
    s = ((x3 - x1) * dy2 - (y3 - y1) * dx2) / denom
    u = ((x3 - x1) * dy1 - (y3 - y1) * dx1) / denom
    if 0 < s < 1 and 0 < u < 1:
        return (x1 + s * dx1, y1 + s * dy1)
    return None


def _segments_overlap(p1, p2, q1, q2):
    (x1, y1), (x2, y2) = p1, p2
    (x3, y3), (x4, y4) = q1, q2
    dx1, dy1 = x2 - x1, y2 - y1
    if dx1 * (y4 - y3) != dy1 * (x4 - x3):
        return False
    if dx1 * (y3 - y1) != dy1 * (x3 - x1):
        return False
    return max(x1, x3) < min(x2, x4)


def _point_in_open_segment(pt, p1, p2):
    (x, y) = pt
    (x1, y1), (x2, y2) = p1, p2
    if not (x1 < x < x2):
        return False
    return (x2 - x1) * (y - y1) == (y2 - y1) * (x - x1)


@dataclass(frozen=True)
class ZeroResolutionReport:
    """Components of the all-0 resolution of a front."""

    component_count: int
    cusps_per_component: dict
    crossing_assignment: tuple


class FrontDiagram:
    """Immutable Legendrian front: a tuple of x-monotone rational arcs."""

    def __init__(self, arcs):
        self.arcs = tuple(
            tuple((_frac(p[0]), _frac(p[1])) for p in arc) for arc in arcs
        )
        self._cache = None

    @classmethod
    def from_json(cls, obj):
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls(obj["arcs"])

    def to_json(self):
        def enc(v):
            return [v.numerator, v.denominator]

        return {"arcs": [[[enc(x), enc(y)] for (x, y) in arc] for arc in self.arcs]}

    @classmethod
    def from_pieces(cls, pieces):
        """Assemble arcs from polyline pieces, concatenating wherever a
        right endpoint meets a left endpoint, so that the resulting arcs
        end only at cusps."""
        pieces = [[(_frac(p[0]), _frac(p[1])) for p in piece] for piece in pieces]
        by_left = {}
        for idx, piece in enumerate(pieces):
            by_left.setdefault(piece[0], []).append(idx)
        right_ends = {piece[-1] for piece in pieces}
        starts = [idx for idx, piece in enumerate(pieces) if piece[0] not in right_ends]
        consumed = [False] * len(pieces)
        arcs = []
        for idx in starts + list(range(len(pieces))):
            if consumed[idx]:
                continue
            chain = list(pieces[idx])
            consumed[idx] = True
            while True:
                candidates = [k for k in by_left.get(chain[-1], ()) if not consumed[k]]
                if not candidates:
                    break
                k = candidates[0]
                consumed[k] = True
                chain.extend(pieces[k][1:])
            arcs.append(chain)
        return cls(arcs)

    # -- validation ------------------------------------------------------

    def diagnostics(self):
        """All invariant violations, as human-readable strings."""
        problems = []
        for a, arc in enumerate(self.arcs):
            if len(arc) < 2:
                problems.append(f"arc {a} has fewer than 2 points")
                continue
            for k in range(len(arc) - 1):
                if arc[k + 1][0] <= arc[k][0]:
                    kind = "vertical tangency" if arc[k + 1][0] == arc[k][0] else "not x-monotone"
                    problems.append(f"arc {a}, segment {k}: {kind}")
        if problems:
            return problems

        ends = {}
        for a, arc in enumerate(self.arcs):
            ends.setdefault(arc[0], []).append((a, "L"))
            ends.setdefault(arc[-1], []).append((a, "R"))
        cusp_points = []
        for pt, incident in sorted(ends.items()):
            if len(incident) != 2:
                problems.append(f"{len(incident)} arc ends meet at {pt}; expected 2")
            elif incident[0][1] != incident[1][1]:
                problems.append(f"non-cusp junction at {pt}")
            else:
                (a1, s1), (a2, s2) = incident
                if self._end_slope(a1, s1) == self._end_slope(a2, s2):
                    problems.append(f"degenerate cusp at {pt}: tangent branches")
                cusp_points.append(pt)

        crossings = {}
        for a in range(len(self.arcs)):
            for b in range(a, len(self.arcs)):
                for i in range(len(self.arcs[a]) - 1):
                    for k in range(len(self.arcs[b]) - 1):
                        if a == b and k <= i + 1:
                            continue
                        p1, p2 = self.arcs[a][i], self.arcs[a][i + 1]
                        q1, q2 = self.arcs[b][k], self.arcs[b][k + 1]
                        if _segments_overlap(p1, p2, q1, q2):
                            problems.append(f"arcs {a} and {b} overlap along a segment")
                            continue
                        pt = _seg_intersection(p1, p2, q1, q2)
                        if pt is not None:
                            crossings.setdefault(pt, []).append((a, i, b, k))
                        for e in (q1, q2):
                            if e not in (p1, p2) and _point_in_open_segment(e, p1, p2):
                                problems.append(f"arc endpoint or bend of arc {b} touches arc {a} at {e}")
                        for e in (p1, p2):
                            if e not in (q1, q2) and _point_in_open_segment(e, q1, q2):
                                problems.append(f"arc endpoint or bend of arc {a} touches arc {b} at {e}")
        for pt, hits in sorted(crossings.items()):
            if len(hits) > 1:
                problems.append(f"more than two strands meet at {pt}")

        events = {}
        for pt in cusp_points:
            events.setdefault(pt[0], []).append("cusp")
        for pt in crossings:
            events.setdefault(pt[0], []).append("crossing")
        for x, kinds in sorted(events.items()):
            if len(kinds) > 1:
                problems.append(f"non-generic: {' and '.join(kinds)} share x = {x}")
        return problems

    def require_valid(self):
        problems = self.diagnostics()
        if problems:
            raise FrontError("; ".join(problems))

    # -- basic geometry ----------------------------------------------------

    def _end_slope(self, a, side):
        arc = self.arcs[a]
        if side == "L":
            (x1, y1), (x2, y2) = arc[0], arc[1]
        else:
            (x1, y1), (x2, y2) = arc[-2], arc[-1]
        return (y2 - y1) / (x2 - x1)

    def _segment_slope(self, a, seg):
        (x1, y1), (x2, y2) = self.arcs[a][seg], self.arcs[a][seg + 1]
        return (y2 - y1) / (x2 - x1)

    # -- derived structure ---------------------------------------------------

    def _analyze(self):
        if self._cache is not None:
            return self._cache
        self.require_valid()
        ends = {}
        for a, arc in enumerate(self.arcs):
            ends.setdefault(arc[0], []).append((a, "L"))
            ends.setdefault(arc[-1], []).append((a, "R"))
        cusps = dict(sorted(ends.items()))

        crossings = []
        seen = {}
        for a in range(len(self.arcs)):
            for b in range(a, len(self.arcs)):
                for i in range(len(self.arcs[a]) - 1):
                    for k in range(len(self.arcs[b]) - 1):
                        if a == b and k <= i + 1:
                            continue
                        pt = _seg_intersection(
                            self.arcs[a][i], self.arcs[a][i + 1],
                            self.arcs[b][k], self.arcs[b][k + 1],
                        )
                        if pt is not None and pt not in seen:
                            seen[pt] = len(crossings)
                            crossings.append({"point": pt, "hits": ((a, i), (b, k))})

        # passages along each arc, ordered by position: (segment, x, cid)
        per_arc = {a: [] for a in range(len(self.arcs))}
        for cid, data in enumerate(crossings):
            for (a, seg) in data["hits"]:
                per_arc[a].append((seg, data["point"][0], cid))
        for a in per_arc:
            per_arc[a].sort()

        partner = {}
        for pt, incident in cusps.items():
            (a1, s1), (a2, s2) = incident
            partner[(a1, s1)] = (a2, s2)
            partner[(a2, s2)] = (a1, s1)

        comp_of_arc = {}
        components = []
        for pt in sorted(cusps):
            incident = cusps[pt]
            if incident[0][1] != "L" or incident[0][0] in comp_of_arc:
                continue
            (a1, _), (a2, _) = incident
            upper = a1 if self._end_slope(a1, "L") > self._end_slope(a2, "L") else a2
            walk = []
            arc, direction = upper, +1
            while True:
                walk.append((arc, direction))
                comp_of_arc[arc] = len(components)
                side = "R" if direction > 0 else "L"
                nxt_arc, nxt_side = partner[(arc, side)]
                arc = nxt_arc
                direction = +1 if nxt_side == "L" else -1
                if arc == upper and direction == +1:
                    break
            components.append(walk)
        if len(comp_of_arc) != len(self.arcs):
            raise FrontError("inconsistent cusp pairing: arc unreachable from left cusps")

        self._cache = {
            "cusps": cusps,
            "crossings": crossings,
            "per_arc": per_arc,
            "components": components,
        }
        return self._cache

    @property
    def cusp_count(self):
        return len(self._analyze()["cusps"])

    @property
    def crossing_count(self):
        return len(self._analyze()["crossings"])

    def component_count(self):
        return len(self._analyze()["components"])

    def walks(self, reverse=()):
        """Component walks (lists of (arc, direction)) under the default
        orientation, with the components listed in ``reverse`` reversed."""
        info = self._analyze()
        out = []
        for ci, walk in enumerate(info["components"]):
            if reverse is True or ci in reverse:
                out.append([(arc, -direction) for (arc, direction) in reversed(walk)])
            else:
                out.append(list(walk))
        return out

    def traversal(self, reverse=()):
        """Ordered crossing passages per component under the default
        orientation (leftmost cusp, upper branch first); components in
        ``reverse`` are traversed backwards.

        Each passage is (cid, heading_east, role, segment)."""
        info = self._analyze()
        out = []
        for walk in self.walks(reverse):
            passages = []
            for (arc, direction) in walk:
                hits = info["per_arc"][arc]
                ordered = hits if direction > 0 else list(reversed(hits))
                for (seg, _x, cid) in ordered:
                    data = info["crossings"][cid]
                    (a1, s1), (a2, s2) = data["hits"]
                    if (arc, seg) == (a1, s1):
                        other_slope = self._segment_slope(a2, s2)
                    else:
                        other_slope = self._segment_slope(a1, s1)
                    my_slope = self._segment_slope(arc, seg)
                    role = "over" if my_slope < other_slope else "under"
                    passages.append((cid, direction > 0, role, seg))
            out.append(passages)
        return out


def validate_front(front):
    """Diagnostics list; empty means every front invariant holds."""
    return front.diagnostics()


def desingularize(front, reverse=()):
    """Front -> link diagram: cusps smoothed, double points to crossings
    with the more negative slope passing over.  ``reverse`` lists
    component indices to traverse with the opposite orientation."""
    info = front._analyze()
    traversals = front.traversal(reverse)
    unknots = sum(1 for t in traversals if not t)

    label = 1
    crossing_rays = {}
    for passages in traversals:
        if not passages:
            continue
        m = len(passages)
        start = label
        for idx, (cid, east, role, _seg) in enumerate(passages):
            e_in = start + idx
            e_out = start + (idx + 1) % m
            rays = crossing_rays.setdefault(cid, {})
            if east:
                rays[(role, "W")] = e_in
                rays[(role, "E")] = e_out
            else:
                rays[(role, "E")] = e_in
                rays[(role, "W")] = e_out
            rays[(role, "in")] = "W" if east else "E"
        label += m

    crossings = []
    over_in = []
    # counterclockwise ray order around a crossing: over-E, under-E, over-W,
    # under-W (over = more negative slope)
    cyc = [("over", "E"), ("under", "E"), ("over", "W"), ("under", "W")]
    for cid in range(len(info["crossings"])):
        rays = crossing_rays[cid]
        start = cyc.index(("under", rays[("under", "in")]))
        crossings.append(tuple(rays[cyc[(start + k) % 4]] for k in range(4)))
        over_in.append((cyc.index(("over", rays[("over", "in")])) - start) % 4)
    return LinkDiagram.from_crossings(crossings, unknot_components=unknots, over_in=over_in)


def tb(front, reverse=()):
    """Thurston-Bennequin number: writhe of the desingularization minus
    half the number of cusps."""
    return diagram_writhe(desingularize(front, reverse)) - front.cusp_count // 2


def rotation_number(front, reverse=()):
    """Half of (down-cusps - up-cusps); ``reverse`` flips the listed
    components' orientations (negating their contribution)."""
    info = front._analyze()
    down = up = 0
    for walk in front.walks(reverse):
        for (arc, direction) in walk:
            side = "R" if direction > 0 else "L"
            pt = front.arcs[arc][-1] if side == "R" else front.arcs[arc][0]
            (a1, _), (a2, _) = info["cusps"][pt]
            other = a2 if a1 == arc else a1
            if side == "R":
                arriving_upper = front._end_slope(arc, "R") < front._end_slope(other, "R")
            else:
                arriving_upper = front._end_slope(arc, "L") > front._end_slope(other, "L")
            if arriving_upper:
                down += 1
            else:
                up += 1
    if (down - up) % 2:
        raise FrontError("cusp traversal parity violation")
    return (down - up) // 2


def zero_resolution(front):
    """Components of the front after 0-resolving every double point."""
    info = front._analyze()

    # pieces: (arc, k) between consecutive passages along the arc
    npieces = {a: len(info["per_arc"][a]) + 1 for a in range(len(front.arcs))}
    parent = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[ry] = rx

    for a, count in npieces.items():
        for k in range(count):
            parent[(a, k)] = (a, k)

    position = {}
    for a, hits in info["per_arc"].items():
        for k, (seg, _x, cid) in enumerate(hits):
            position[(a, seg, cid)] = k

    assignment = []
    for cid, data in enumerate(info["crossings"]):
        (a1, s1), (a2, s2) = data["hits"]
        k1 = position[(a1, s1, cid)]
        k2 = position[(a2, s2, cid)]
        w1, e1 = (a1, k1), (a1, k1 + 1)
        w2, e2 = (a2, k2), (a2, k2 + 1)
        # west of the crossing, the more negative slope strand is on top;
        # the 0-resolution joins west-upper to east-upper and west-lower
        # to east-lower
        if front._segment_slope(a1, s1) < front._segment_slope(a2, s2):
            upper_pair, lower_pair = (w1, e2), (w2, e1)
        else:
            upper_pair, lower_pair = (w2, e1), (w1, e2)
        union(*upper_pair)
        union(*lower_pair)
        assignment.append((upper_pair[0], lower_pair[0]))

    for pt, incident in info["cusps"].items():
        (b1, side1), (b2, side2) = incident
        p1 = (b1, 0) if side1 == "L" else (b1, npieces[b1] - 1)
        p2 = (b2, 0) if side2 == "L" else (b2, npieces[b2] - 1)
        union(p1, p2)

    roots = sorted({find(p) for p in parent})
    comp_id = {r: k for k, r in enumerate(roots)}
    cusp_counts = {k: 0 for k in range(len(roots))}
    for pt, incident in info["cusps"].items():
        (b1, side1), _ = incident
        p1 = (b1, 0) if side1 == "L" else (b1, npieces[b1] - 1)
        cusp_counts[comp_id[find(p1)]] += 1
    crossing_assignment = tuple(
        (comp_id[find(u)], comp_id[find(l)]) for (u, l) in assignment
    )
    return ZeroResolutionReport(len(roots), cusp_counts, crossing_assignment)


def is_admissible(front):
    """True when every 0-resolution component has exactly two cusps and
    both resolution arcs at each crossing lie in different components."""
    report = zero_resolution(front)
    if any(c != 2 for c in report.cusps_per_component.values()):
        return False
    return all(u != l for (u, l) in report.crossing_assignment)


# -- stock fronts ------------------------------------------------------


def lips(x0=0, x1=4, y=0, height=1):
    """The two-cusp crossingless unknot front."""
    x0, x1, y, height = (Fraction(v) for v in (x0, x1, y, height))
    mid = (x0 + x1) / 2
    return FrontDiagram(
        [
            [(x0, y), (mid, y + height), (x1, y)],
            [(x0, y), (mid, y - height), (x1, y)],
        ]
    )


def stabilized_unknot(zigzags=1, downward=True):
    """Unknot front whose upper branch carries the given number of zigzag
    stabilizations; tb = -1 - zigzags."""
    z = zigzags
    if z == 0:
        return lips()
    arcs = []
    arcs.append([(0, 0), (1, 2), (3, 2)])
    for k in range(z):
        rc_x, lc_x = 3 * k + 3, 3 * k + 2
        level = 2 - 2 * k
        arcs.append([(lc_x, level - 1), (rc_x, level)])
        if k < z - 1:
            arcs.append([(lc_x, level - 1), (3 * k + 6, level - 2)])
        else:
            arcs.append([(lc_x, level - 1), (3 * z + 4, 0)])
    arcs.append([(0, 0), (1, -2 * z - 2), (3 * z + 3, -2 * z - 2), (3 * z + 4, 0)])
    front = FrontDiagram(arcs)
    if not downward:
        front = FrontDiagram(
            [[(x, -y) for (x, y) in arc] for arc in front.arcs]
        )
    return front


def fish():
    """One-crossing unknot front whose right strands meet at a right cusp;
    desingularizes to an unknot with one negative kink (tb = -2)."""
    a = [(0, 0), (1, 1), (5, -1), (6, 0)]
    b = [(0, 0), (3, -1), (5, 1), (6, 0)]
    return FrontDiagram([a, b])


def unlink_front(k=2):
    """k disjoint lips."""
    arcs = []
    for m in range(k):
        piece = lips(x0=5 * m, x1=5 * m + 4 - Fraction(1, 2 + m), y=3 * m)
        arcs.extend(piece.arcs)
    return FrontDiagram(arcs)
