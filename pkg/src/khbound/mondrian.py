"""Mondrian diagrams: disjoint horizontal segments joined by verticals.

Contracting the horizontals to points yields a planar multigraph.  The
construction going the other way (graph to diagram) follows the
staircase / enhanced-cycle / treelike-join / interior-vertex pipeline
and maintains strongness of every bounded complementary region.

A bounded complement component F is *strong* when R = int(closure(F))
admits a spine: a horizontal segment met by every nonempty vertical
slice of R, the slices all being connected.  Passing to the interior of
the closure absorbs horizontal end-stubs that poke into F, which is what
makes staircase shapes strong.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .planar import GraphError, PlanarGraph


class MondrianError(ValueError):
    """Raised for invalid Mondrian diagrams or failed constructions."""


def _frac(v):
    if isinstance(v, Fraction):
        return v
    if isinstance(v, (list, tuple)) and len(v) == 2:
        return Fraction(int(v[0]), int(v[1]))
    if isinstance(v, (int, str)):
        return Fraction(v)
    raise MondrianError(f"cannot interpret {v!r} as an exact rational")


@dataclass(frozen=True)
class MondrianDiagram:
    """Horizontal segments (y, x1, x2) and vertical segments (x, y1, y2),
    all coordinates exact rationals, y1 < y2 and x1 < x2."""

    horizontals: tuple
    verticals: tuple

    @classmethod
    def build(cls, horizontals, verticals):
        hs = tuple(
            (_frac(y), _frac(x1), _frac(x2)) for (y, x1, x2) in horizontals
        )
        vs = tuple((_frac(x), _frac(y1), _frac(y2)) for (x, y1, y2) in verticals)
        m = cls(hs, vs)
        m.validate()
        return m

    def validate(self):
        for (y, x1, x2) in self.horizontals:
            if x1 >= x2:
                raise MondrianError(f"degenerate horizontal at y={y}")
        for (x, y1, y2) in self.verticals:
            if y1 >= y2:
                raise MondrianError(f"degenerate vertical at x={x}")
        hs = self.horizontals
        for a in range(len(hs)):
            for b in range(a + 1, len(hs)):
                if hs[a][0] == hs[b][0] and hs[a][1] < hs[b][2] and hs[b][1] < hs[a][2]:
                    raise MondrianError("horizontals overlap")
        vs = self.verticals
        for a in range(len(vs)):
            for b in range(a + 1, len(vs)):
                if vs[a][0] == vs[b][0] and vs[a][1] < vs[b][2] and vs[b][1] < vs[a][2]:
                    raise MondrianError("verticals overlap")
        for vi, (x, y1, y2) in enumerate(vs):
            for yy in (y1, y2):
                if self._horizontal_at(x, yy) is None:
                    raise MondrianError(
                        f"vertical {vi} endpoint ({x},{yy}) not interior to a horizontal"
                    )
            for hi, (y, hx1, hx2) in enumerate(hs):
                if y1 < y < y2 and hx1 <= x <= hx2:
                    raise MondrianError(
                        f"vertical {vi} crosses horizontal {hi}"
                    )

    def _horizontal_at(self, x, y):
        for hi, (hy, x1, x2) in enumerate(self.horizontals):
            if hy == y and x1 < x < x2:
                return hi
        return None

    def to_json(self):
        def enc(v):
            return [v.numerator, v.denominator]

        return {
            "horizontals": [[enc(y), enc(x1), enc(x2)] for (y, x1, x2) in self.horizontals],
            "verticals": [[enc(x), enc(y1), enc(y2)] for (x, y1, y2) in self.verticals],
        }

    @classmethod
    def from_json(cls, obj):
        return cls.build(obj["horizontals"], obj["verticals"])


@dataclass(frozen=True)
class EnhancedCycle:
    """A cycle 1..n (clockwise) with noncrossing chords {i, j}, i < j.

    Chords may repeat (parallel edges); (i, j) pairs must be pairwise
    noninterleaved: no i1 < i2 < j1 < j2.
    """

    length: int
    chords: tuple = ()

    def validate(self):
        n = self.length
        if n < 2:
            raise MondrianError("cycle length must be at least 2")
        chords = [tuple(c) for c in self.chords]
        for (i, j) in chords:
            if not (1 <= i < j <= n):
                raise MondrianError(f"chord {(i, j)} out of range")
        for a in range(len(chords)):
            for b in range(len(chords)):
                i1, j1 = chords[a]
                i2, j2 = chords[b]
                if i1 < i2 < j1 < j2:
                    raise MondrianError(
                        f"chords {(i1, j1)} and {(i2, j2)} interleave (not planar)"
                    )


def vertical_feet(m, hi):
    """(above, below): verticals attached to horizontal hi from above and
    below, each as sorted lists of (x, vertical index)."""
    y, x1, x2 = m.horizontals[hi]
    above = []
    below = []
    for vi, (x, y1, y2) in enumerate(m.verticals):
        if x1 < x < x2:
            if y1 == y:
                above.append((x, vi))
            elif y2 == y:
                below.append((x, vi))
    return sorted(above), sorted(below)


def contract(m):
    """Contract horizontals to vertices: one edge per vertical, with the
    rotation induced by foot order (counterclockwise: feet on top read
    east to west, then feet below west to east)."""
    m.validate()
    edges = []
    for vi, (x, y1, y2) in enumerate(m.verticals):
        bottom_h = m._horizontal_at(x, y1)
        top_h = m._horizontal_at(x, y2)
        edges.append((bottom_h, top_h))
    rotation = []
    for hi in range(len(m.horizontals)):
        above, below = vertical_feet(m, hi)
        rot = []
        for (_x, vi) in reversed(above):
            rot.append((vi, 0))  # this horizontal is the bottom end
        for (_x, vi) in below:
            rot.append((vi, 1))
        rotation.append(rot)
    return PlanarGraph(len(m.horizontals), edges, rotation)


class RegionAnalysis:
    """Slab decomposition of the complement of a Mondrian diagram.

    Cells are open boxes (slab x-interval) x (y-interval between
    consecutive horizontals active in the slab); regions are unions of
    cells glued across slab boundaries wherever verticals leave a gap.
    """

    def __init__(self, m):
        m.validate()
        self.m = m
        xs = set()
        for (_y, x1, x2) in m.horizontals:
            xs.update((x1, x2))
        for (x, _y1, _y2) in m.verticals:
            xs.add(x)
        self.xs = sorted(xs)
        # finite slabs only; everything outside is trivially outer
        self.slabs = [
            (self.xs[k], self.xs[k + 1]) for k in range(len(self.xs) - 1)
        ]
        self.active = []  # per slab: sorted list of (y, horizontal index)
        for (xa, xb) in self.slabs:
            act = sorted(
                (y, hi)
                for hi, (y, x1, x2) in enumerate(m.horizontals)
                if x1 <= xa and x2 >= xb
            )
            self.active.append(act)
        # cells[(slab, i)] spans between active[i-1] and active[i];
        # i ranges 0..len(act): 0 is the bottom-unbounded cell
        self.parent = {}
        for s in range(len(self.slabs)):
            for i in range(len(self.active[s]) + 1):
                self.parent[(s, i)] = (s, i)
        self._outer = ("outer",)
        self.parent[self._outer] = self._outer
        self._glue()

    def _find(self, x):
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def _union(self, a, b):
        ra, rb = self._find(a), self._find(b)
        if ra != rb:
            if rb == self._outer:
                ra, rb = rb, ra
            self.parent[rb] = ra

    def cell_interval(self, s, i):
        act = self.active[s]
        lo = act[i - 1][0] if i > 0 else None
        hi = act[i][0] if i < len(act) else None
        return lo, hi

    def _glue(self):
        nslab = len(self.slabs)
        for s in range(nslab):
            act = self.active[s]
            # unbounded top and bottom cells are outer
            self._union((s, 0), self._outer)
            self._union((s, len(act)), self._outer)
        verticals_at = {}
        for (x, y1, y2) in self.m.verticals:
            verticals_at.setdefault(x, []).append((y1, y2))
        for s in range(nslab - 1):
            e = self.slabs[s][1]
            blocks = sorted(verticals_at.get(e, []))
            for i in range(len(self.active[s]) + 1):
                lo1, hi1 = self.cell_interval(s, i)
                for k in range(len(self.active[s + 1]) + 1):
                    lo2, hi2 = self.cell_interval(s + 1, k)
                    lo = max(
                        (v for v in (lo1, lo2) if v is not None), default=None
                    )
                    hi = min(
                        (v for v in (hi1, hi2) if v is not None), default=None
                    )
                    if lo is not None and hi is not None and lo >= hi:
                        continue
                    if not _interval_covered(lo, hi, blocks):
                        self._union((s, i), (s + 1, k))
        # glue the extreme slabs to the unbounded left and right expanses
        for s, e in ((0, self.xs[0]), (nslab - 1, self.xs[-1])):
            blocks = sorted(verticals_at.get(e, []))
            for i in range(len(self.active[s]) + 1):
                lo, hi = self.cell_interval(s, i)
                if not _interval_covered(lo, hi, blocks):
                    self._union((s, i), self._outer)

    def region_of_cell(self, cell):
        return self._find(cell)

    def locate(self, x, y):
        """Region root of the open cell containing the point."""
        for s, (xa, xb) in enumerate(self.slabs):
            if xa < x < xb:
                act = self.active[s]
                i = 0
                while i < len(act) and act[i][0] < y:
                    i += 1
                if i < len(act) and act[i][0] == y:
                    raise MondrianError("sample point lies on a horizontal")
                return self._find((s, i))
        return self._outer

    def bounded_regions(self):
        roots = {}
        for s in range(len(self.slabs)):
            for i in range(len(self.active[s]) + 1):
                r = self._find((s, i))
                if r != self._outer:
                    roots.setdefault(r, []).append((s, i))
        return roots

    # -- strongness ------------------------------------------------------

    def region_slices(self, root):
        """Per-slab merged slice data for a bounded region.

        Returns None when some slice is disconnected; otherwise a dict
        {slab: (lo, hi, cells)} of merged open intervals, where stub
        absorption merges cells stacked directly on top of each other.
        """
        cells = {}
        for s in range(len(self.slabs)):
            for i in range(len(self.active[s]) + 1):
                if self._find((s, i)) == root:
                    cells.setdefault(s, []).append(i)
        out = {}
        for s, idxs in cells.items():
            idxs.sort()
            # cells must be consecutive in the vertical stack: anything
            # in between belongs to another region and cuts the slice
            if idxs[-1] - idxs[0] != len(idxs) - 1:
                return None
            lo = self.cell_interval(s, idxs[0])[0]
            hi = self.cell_interval(s, idxs[-1])[1]
            if lo is None or hi is None:
                return None
            out[s] = (lo, hi, idxs)
        return out

    def strong_data(self, root):
        """Spine of a bounded region, or None when the region fails the
        strongness test.  Returns (y0, x_left, x_right, slices)."""
        slices = self.region_slices(root)
        if slices is None:
            return None
        slabs = sorted(slices)
        if slabs != list(range(slabs[0], slabs[-1] + 1)):
            return None
        lo_star = max(slices[s][0] for s in slabs)
        hi_star = min(slices[s][1] for s in slabs)
        if lo_star >= hi_star:
            return None
        # slab-boundary slices: the interval must survive the verticals
        # sitting at each internal boundary, staying connected around the
        # candidate band
        verticals_at = {}
        for (x, y1, y2) in self.m.verticals:
            verticals_at.setdefault(x, []).append((y1, y2))
        for k in range(len(slabs) - 1):
            s1, s2 = slabs[k], slabs[k + 1]
            e = self.slabs[s1][1]
            lo = max(slices[s1][0], slices[s2][0])
            hi = min(slices[s1][1], slices[s2][1])
            if lo >= hi:
                return None
            pieces = _interval_minus(lo, hi, verticals_at.get(e, []))
            pieces = [p for p in pieces if p[0] < p[1]]
            if len(pieces) != 1:
                return None
            lo_star = max(lo_star, pieces[0][0])
            hi_star = min(hi_star, pieces[0][1])
            if lo_star >= hi_star:
                return None
        # deterministic spine level: lowest midpoint of consecutive global
        # y-levels inside the admissible band
        levels = sorted({y for (y, _x1, _x2) in self.m.horizontals})
        y0 = None
        for k in range(len(levels) - 1):
            mid = (levels[k] + levels[k + 1]) / 2
            if lo_star < mid < hi_star:
                y0 = mid
                break
        if y0 is None:
            y0 = (lo_star + hi_star) / 2
        x_left = self.slabs[slabs[0]][0]
        x_right = self.slabs[slabs[-1]][1]
        return (y0, x_left, x_right, slices)


def _interval_covered(lo, hi, blocks):
    """Is the open interval (lo, hi) (None = unbounded) fully covered by
    the closed blocks?"""
    if lo is None or hi is None:
        return False
    return not _interval_minus(lo, hi, blocks)


def _interval_minus(lo, hi, blocks):
    """Open interval minus closed blocks, as a list of open intervals."""
    pieces = [(lo, hi)]
    for (b1, b2) in sorted(blocks):
        nxt = []
        for (a1, a2) in pieces:
            if b2 <= a1 or b1 >= a2:
                nxt.append((a1, a2))
                continue
            if a1 < b1:
                nxt.append((a1, b1))
            if b2 < a2:
                nxt.append((b2, a2))
        pieces = nxt
    return [p for p in pieces if p[0] < p[1]]


def is_strong(m):
    """Every bounded complementary region admits a spine."""
    analysis = RegionAnalysis(m)
    return all(
        analysis.strong_data(root) is not None
        for root in analysis.bounded_regions()
    )


# -- geometric boundary walks ------------------------------------------


def boundary_walks(m):
    """Face boundary walks of the diagram, by wall-following.

    Returns a list of walks; each walk is a list of elements
    ("H", hi, side, x_from, x_to) or ("V", vi, side), traversed with the
    face kept on the left (bounded faces come out counterclockwise).
    """
    feet = {hi: vertical_feet(m, hi) for hi in range(len(m.horizontals))}
    vx = {vi: v[0] for vi, v in enumerate(m.verticals)}

    def h_pieces(hi, side):
        y, x1, x2 = m.horizontals[hi]
        cuts = [x for (x, _vi) in (feet[hi][0] if side == "top" else feet[hi][1])]
        xs = [x1] + cuts + [x2]
        return [(xs[k], xs[k + 1]) for k in range(len(xs) - 1)]

    darts = []
    for hi in range(len(m.horizontals)):
        for side in ("top", "bot"):
            for piece in h_pieces(hi, side):
                darts.append(("H", hi, side, piece))
    for vi in range(len(m.verticals)):
        darts.append(("V", vi, "left"))
        darts.append(("V", vi, "right"))

    def step(d):
        if d[0] == "H":
            _kind, hi, side, (xa, xb) = d
            y, x1, x2 = m.horizontals[hi]
            above, below = feet[hi]
            if side == "top":
                # traveling east; either a rising vertical or the right end
                for (x, vi) in above:
                    if x == xb:
                        return ("V", vi, "left")
                return ("H", hi, "bot", h_pieces(hi, "bot")[-1])
            # bottom side, traveling west
            for (x, vi) in below:
                if x == xa:
                    return ("V", vi, "right")
            return ("H", hi, "top", h_pieces(hi, "top")[0])
        _kind, vi, side = d
        x, y1, y2 = m.verticals[vi]
        if side == "left":
            # traveling up; land on the bottom side of the top horizontal
            ht = m._horizontal_at(x, y2)
            for piece in h_pieces(ht, "bot"):
                if piece[1] == x:
                    return ("H", ht, "bot", piece)
            raise AssertionError("vertical top foot piece not found")
        hb = m._horizontal_at(x, y1)
        for piece in h_pieces(hb, "top"):
            if piece[0] == x:
                return ("H", hb, "top", piece)
        raise AssertionError("vertical bottom foot piece not found")

    seen = set()
    walks = []
    for d0 in darts:
        if d0 in seen:
            continue
        walk = []
        d = d0
        while d not in seen:
            seen.add(d)
            walk.append(d)
            d = step(d)
        walks.append(walk)
    return walks


def walk_region(m, analysis, walk):
    """Region root a boundary walk traces around."""
    for d in walk:
        if d[0] != "H":
            continue
        _kind, hi, side, (xa, xb) = d
        y = m.horizontals[hi][0]
        for s, (sa, sb) in enumerate(analysis.slabs):
            lo, hi_ = max(sa, xa), min(sb, xb)
            if lo >= hi_:
                continue
            act = analysis.active[s]
            i = 0
            while i < len(act) and act[i][0] < y:
                i += 1
            idx = i + 1 if side == "top" else i
            return analysis._find((s, idx))
    raise MondrianError("walk has no horizontal pieces")


# -- constructions -------------------------------------------------------


def mondrian_cycle(n):
    """Staircase Mondrian diagram whose contraction is the n-cycle."""
    return mondrian_enhanced_cycle(EnhancedCycle(n))


def mondrian_enhanced_cycle(ec):
    """Strong Mondrian diagram contracting to an enhanced cycle."""
    m, _info = _enhanced_cycle_with_info(ec)
    return m


def _enhanced_cycle_with_info(ec):
    """Strong Mondrian diagram contracting to an enhanced cycle.

    Step s (0-based, cycle vertex s+1) sits at y = -4s spanning
    [4s, 4s+6].  Every chord (i, j), i < j, and the closing boundary
    edge (1, n) hangs from the left shelf (4(i-1), 4(i-1)+4) of its
    source step down to the level of step j-1, which extends leftward to
    catch the feet; chords sharing a shelf are placed longest (largest j)
    leftmost.  Noninterleaving of the chords guarantees that no
    perpendicular or leftward extension crosses anything, and the area
    right of every step stays clear for treelike joins.

    Returns (diagram, info) where info[v] tags vertical v as
    ("boundary", k), ("closing",) or ("chord", t).
    """
    ec.validate()
    n = ec.length
    hs = []
    for k in range(n):
        hs.append([Fraction(-4 * k), Fraction(4 * k), Fraction(4 * k + 6)])
    vs = []
    info = []
    for k in range(n - 1):
        vs.append((Fraction(4 * k + 5), Fraction(-4 * (k + 1)), Fraction(-4 * k)))
        info.append(("boundary", k))
    hangers = [(1, n, None)] + [(i, j, t) for t, (i, j) in enumerate(ec.chords)]
    shelves = {}
    for (i, j, t) in hangers:
        shelves.setdefault(i, []).append((j, t))
    max_count = max(len(v) for v in shelves.values())
    eps = Fraction(1, 2 * (max_count + 1))
    extend_to = {}
    for i, items in sorted(shelves.items()):
        # longest first; ties keep input order, which already reflects
        # the nesting order of parallel chords.  Feet hug the east end of
        # the shelf so that leftward extensions stay short, leaving room
        # for the perpendiculars of later interior-vertex insertions
        ordered = sorted(range(len(items)), key=lambda k: -items[k][0])
        count = len(items)
        for rank, k in enumerate(ordered):
            j, t = items[k]
            x = Fraction(4 * (i - 1) + 2) + Fraction(2 * (rank + 1), count + 1)
            vs.append((x, Fraction(-4 * (j - 1)), Fraction(-4 * (i - 1))))
            info.append(("closing",) if t is None else ("chord", t))
            cur = extend_to.get(j)
            if cur is None or x < cur:
                extend_to[j] = x
    for j, x in extend_to.items():
        hs[j - 1][1] = min(hs[j - 1][1], x - eps)
    m = MondrianDiagram.build(hs, vs)
    return m, tuple(info)


def _translate(m, dx, dy):
    hs = [(y + dy, x1 + dx, x2 + dx) for (y, x1, x2) in m.horizontals]
    vs = [(x + dx, y1 + dy, y2 + dy) for (x, y1, y2) in m.verticals]
    return MondrianDiagram(tuple(hs), tuple(vs))


def _span(m):
    xs = [x for (_y, x1, x2) in m.horizontals for x in (x1, x2)]
    return min(xs), max(xs)


def join_at(host, host_h, child, margin=4):
    """Fuse the child diagram's base horizontal (index 0) into horizontal
    ``host_h`` of the host: the child is translated to the right of all
    host content with its base at the host level, the host horizontal is
    extended rightward over the base span, and the base disappears.

    Returns (diagram, h_map, v_offset): h_map maps child horizontal
    indices to new indices; child vertical k becomes len(host.verticals)+k.
    """
    hy = host.horizontals[host_h][0]
    base_y = child.horizontals[0][0]
    _cx1, _cx2 = _span(child)
    host_xmax = _span(host)[1]
    dx = host_xmax + margin - _cx1
    moved = _translate(child, dx, hy - base_y)
    hs = list(host.horizontals)
    y, x1, x2 = hs[host_h]
    hs[host_h] = (y, x1, max(x2, moved.horizontals[0][2]))
    h_map = {0: host_h}
    for k in range(1, len(moved.horizontals)):
        h_map[k] = len(hs)
        hs.append(moved.horizontals[k])
    vs = list(host.verticals) + list(moved.verticals)
    out = MondrianDiagram(tuple(hs), tuple(vs))
    out.validate()
    return out, h_map, len(host.verticals)


def join_treelike(parts):
    """Join Mondrian diagrams at shared vertices in tree fashion.

    ``parts`` is a sequence whose first entry is (diagram, None) and each
    later entry is (diagram, (part_index, host_horizontal)) attaching the
    diagram's base horizontal 0 onto the given horizontal of the given
    earlier part.  Returns (diagram, maps) with maps[k] the horizontal
    index map of part k into the result.
    """
    if not parts:
        raise MondrianError("nothing to join")
    diagram, anchor = parts[0]
    if anchor is not None:
        raise MondrianError("first part cannot have an attachment")
    maps = [{k: k for k in range(len(diagram.horizontals))}]
    for idx in range(1, len(parts)):
        child, attach = parts[idx]
        if attach is None:
            raise MondrianError("non-root parts need an attachment")
        part_idx, host_vertex = attach
        if part_idx >= idx:
            raise MondrianError("attachments must form a tree (earlier parts only)")
        host_h = maps[part_idx][host_vertex]
        diagram, h_map, _voff = join_at(diagram, host_h, _fit_band(diagram, host_h, child))
        maps.append(h_map)
    diagram.validate()
    return diagram, maps


def _fit_band(host, host_h, child):
    """Squash the child into a y-band hugging the attachment level, so it
    clears every existing level below and later rightward extensions at
    those levels never cross it."""
    level = host.horizontals[host_h][0]
    below = [y for (y, _x1, _x2) in host.horizontals if y < level]
    gap = min((level - y for y in below), default=Fraction(8))
    top = max(y for (y, _a, _b) in child.horizontals)
    bottom = min(y for (y, _a, _b) in child.horizontals)
    height = top - bottom
    if height == 0:
        return child
    return _scale_y(child, gap / (2 * (height + 4)), anchor=child.horizontals[0][0])


def region_stretches(m, walk):
    """Split a boundary walk into vertex visits.

    Returns a list of stretches in walk order: (h_index, pieces,
    prev_vertical, next_vertical) where pieces are the ("H", hi, side,
    (xa, xb)) elements traversed during the visit.
    """
    k0 = next((k for k, d in enumerate(walk) if d[0] == "V"), None)
    if k0 is None:
        raise MondrianError("region walk contains no verticals")
    rotated = walk[k0:] + walk[:k0]
    stretches = []
    current = None
    prev_v = rotated[0][1]
    first_v = prev_v
    for d in rotated[1:]:
        if d[0] == "V":
            stretches.append((current[0], current[1], prev_v, d[1]))
            prev_v = d[1]
            current = None
        else:
            if current is None:
                current = (d[1], [])
            current[1].append(d)
    if current is not None:
        stretches.append((current[0], current[1], prev_v, first_v))
    return stretches


def _perpendicular_clear(m, x, y_from, y_to, forbidden_x):
    lo, hi = min(y_from, y_to), max(y_from, y_to)
    if x in forbidden_x:
        return False
    for (y, x1, x2) in m.horizontals:
        if lo < y < hi and x1 <= x <= x2:
            return False
    for (vx, vy1, vy2) in m.verticals:
        if vx == x and vy1 < hi and lo < vy2:
            return False
    return True


def _scan_candidates(a, b, depth=6):
    """Deterministic dyadic scan of the open interval (a, b)."""
    seen = set()
    for level in range(1, depth + 1):
        steps = 1 << level
        for k in range(1, steps):
            x = a + (b - a) * Fraction(k, steps)
            if x not in seen:
                seen.add(x)
                yield x


def insert_interior_vertex(m, region_root, attachments, analysis=None, walks=None):
    """Step-4 insertion: drop perpendiculars from the listed stretches of
    a strong region onto its spine; the spine sub-segment spanned by the
    feet becomes the new horizontal.

    ``attachments`` is a list of stretch indices (into region_stretches
    of the region's walk, repeats allowed) in walk order.  Returns
    (diagram, new_h_index, new_vertical_indices) with one new vertical
    per attachment, in the same order.
    """
    if analysis is None:
        analysis = RegionAnalysis(m)
    data = analysis.strong_data(region_root)
    if data is None:
        raise MondrianError("region is not strong; no spine available")
    y0, _xl, _xr, _slices = data
    if walks is None:
        walks = boundary_walks(m)
    walk = next(
        w for w in walks if walk_region(m, analysis, w) == region_root
    )
    stretches = region_stretches(m, walk)

    forbidden = {x for (x, _y1, _y2) in m.verticals}
    feet = []  # (x, h_index) per attachment, in attachment order
    last_bottom = None
    last_top = None
    for s_idx in attachments:
        h_idx, pieces, _pv, _nv = stretches[s_idx]
        hy = m.horizontals[h_idx][0]
        want_side = "top" if hy < y0 else "bot"
        usable = [d for d in pieces if d[2] == want_side]
        other = [d[3] for d in pieces if d[2] != want_side]
        # prefer positions clear of the stretch's wrapped stub pieces on
        # the far side; a foot under such a piece can strand a fragment
        # of the old region and disconnect a slice of an end region
        windows = []
        for d in usable:
            for w in _interval_minus(d[3][0], d[3][1], other):
                windows.append(w)
        for d in usable:
            windows.append(d[3])
        placed = None
        for (xa, xb) in windows:
            lo, hi = xa, xb
            if want_side == "top":
                if last_bottom is not None:
                    lo = max(lo, last_bottom)
            else:
                if last_top is not None:
                    hi = min(hi, last_top)
            if lo >= hi:
                continue
            for x in _scan_candidates(lo, hi):
                if _perpendicular_clear(m, x, hy, y0, forbidden):
                    placed = x
                    break
            if placed is not None:
                break
        if placed is None:
            raise MondrianError(
                f"no valid perpendicular from horizontal {h_idx} to the spine"
            )
        forbidden.add(placed)
        feet.append((placed, h_idx))
        if want_side == "top":
            last_bottom = placed
        else:
            last_top = placed

    fxs = [x for (x, _h) in feet]
    fx1, fx2 = min(fxs), max(fxs)
    block_left = [x for x in forbidden if x < fx1 and x not in fxs]
    block_right = [x for x in forbidden if x > fx2 and x not in fxs]
    lo_wall = max((x for x in block_left), default=fx1 - 2)
    hi_wall = min((x for x in block_right), default=fx2 + 2)
    delta = min(fx1 - lo_wall, hi_wall - fx2, Fraction(2)) / 2
    if delta <= 0:
        raise MondrianError("no room to lay down the new horizontal")
    hs = list(m.horizontals) + [(y0, fx1 - delta, fx2 + delta)]
    vs = list(m.verticals)
    new_vids = []
    for (x, h_idx) in feet:
        hy = m.horizontals[h_idx][0]
        vy1, vy2 = (y0, hy) if hy > y0 else (hy, y0)
        new_vids.append(len(vs))
        vs.append((x, vy1, vy2))
    out = MondrianDiagram(tuple(hs), tuple(vs))
    out.validate()
    return out, len(hs) - 1, new_vids


def add_interior_vertex(m, region_point, attachments):
    """Public Step-4 operation: ``region_point`` is any point inside the
    target strong region, ``attachments`` a list of horizontal indices
    (repeats allowed) to connect the new vertex to.  Stretches are
    resolved automatically and must be unambiguous."""
    analysis = RegionAnalysis(m)
    root = analysis.locate(_frac(region_point[0]), _frac(region_point[1]))
    if root == analysis._outer:
        raise MondrianError("sample point lies in the unbounded region")
    walks = boundary_walks(m)
    walk = next(w for w in walks if walk_region(m, analysis, w) == root)
    stretches = region_stretches(m, walk)
    if len(attachments) < 1:
        raise MondrianError("need at least one attachment")
    resolved = []
    for h_idx in attachments:
        hits = [k for k, (h, _p, _a, _b) in enumerate(stretches) if h == h_idx]
        if not hits:
            raise MondrianError(f"horizontal {h_idx} is not on the region boundary")
        if len(hits) > 1:
            raise MondrianError(
                f"horizontal {h_idx} bounds the region along several stretches; "
                "use insert_interior_vertex with explicit stretch indices"
            )
        resolved.append(hits[0])
    order = sorted(range(len(resolved)), key=lambda k: resolved[k])
    m2, h_new, vids = insert_interior_vertex(
        m, root, [resolved[k] for k in order], analysis=analysis, walks=walks
    )
    inverse = [0] * len(vids)
    for pos, k in enumerate(order):
        inverse[k] = vids[pos]
    return m2, h_new, inverse


def _scale_y(m, factor, anchor=Fraction(0)):
    hs = [(anchor + (y - anchor) * factor, x1, x2) for (y, x1, x2) in m.horizontals]
    vs = [
        (x, anchor + (y1 - anchor) * factor, anchor + (y2 - anchor) * factor)
        for (x, y1, y2) in m.verticals
    ]
    return MondrianDiagram(tuple(hs), tuple(vs))


def _outer_face(g):
    """Deterministic outer-face pick: longest walk, then smallest edge
    sequence under cyclic rotation."""
    faces = g.faces()

    def key(face):
        seq = tuple(e for (e, _end) in face)
        best = min(tuple(seq[k:] + seq[:k]) for k in range(len(seq)))
        return (-len(face), best)

    return min(faces, key=key)


def _walk_cycles(g, outer):
    """Decompose the outer face walk into simple cycles.

    Returns a list of records {vertices, edges, base, parent} in pop
    order; the last record is the root (parent None, base = its first
    vertex).  ``vertices`` starts at the base; edges[k] joins
    vertices[k] to vertices[k+1] (cyclically).
    """
    seq = []
    for dart in outer:
        seq.append((g.dart_vertex(dart), dart[0]))
    cycles = []
    stack = []  # (vertex, outgoing edge id)
    pending = {}  # stack depth -> cycle indices awaiting their parent
    for step, (v, e) in enumerate(seq + [seq[0]]):
        depth_of = {vv: k for k, (vv, _e) in enumerate(stack)}
        if v in depth_of:
            k = depth_of[v]
            verts = [vv for (vv, _e) in stack[k:]]
            edges = [ee for (_vv, ee) in stack[k:]]
            idx = len(cycles)
            cycles.append({
                "vertices": verts,
                "edges": edges,
                "base": v,
                "parent": None,
                "children": [],
            })
            for d in range(k + 1, len(stack)):
                for child in pending.pop(d, ()):
                    cycles[child]["parent"] = idx
                    cycles[idx]["children"].append(child)
            pending.setdefault(k, []).append(idx)
            stack = stack[: k]
            if step < len(seq):
                stack.append((v, e))
        else:
            stack.append((v, e))
    if stack:
        raise GraphError("outer walk failed to close into cycles")
    root = len(cycles) - 1
    for d, kids in pending.items():
        for child in kids:
            if child != root and cycles[child]["parent"] is None:
                cycles[child]["parent"] = root
                cycles[root]["children"].append(child)
    return cycles


def _chords_of_cycles(g, cycles, boundary_vertices):
    """Assign non-walk edges between boundary vertices to their cycles.

    Uses the block decomposition of the induced boundary subgraph: each
    block contains exactly one walk cycle plus its interior chords.
    """
    walk_edges = set()
    cycle_of_edge = {}
    for k, c in enumerate(cycles):
        for e in c["edges"]:
            walk_edges.add(e)
            cycle_of_edge[e] = k
    boundary = set(boundary_vertices)
    sub_edges = [
        e
        for e, (u, v) in enumerate(g.edges)
        if u in boundary and v in boundary
    ]
    chords = [e for e in sub_edges if e not in walk_edges]
    if not chords:
        return {k: [] for k in range(len(cycles))}

    # block decomposition (iterative Tarjan) of the boundary subgraph
    adj = {}
    for e in sub_edges:
        u, v = g.edges[e]
        adj.setdefault(u, []).append((e, v))
        adj.setdefault(v, []).append((e, u))
    disc = {}
    low = {}
    timer = [0]
    estack = []
    blocks = []

    def dfs(start):
        stack = [(start, None, iter(adj.get(start, ())))]
        disc[start] = low[start] = timer[0]
        timer[0] += 1
        while stack:
            u, pe, it = stack[-1]
            advanced = False
            for (e, w) in it:
                if e == pe:
                    continue
                if w not in disc:
                    estack.append(e)
                    disc[w] = low[w] = timer[0]
                    timer[0] += 1
                    stack.append((w, e, iter(adj.get(w, ()))))
                    advanced = True
                    break
                elif disc[w] < disc[u]:
                    estack.append(e)
                    low[u] = min(low[u], disc[w])
            if advanced:
                continue
            stack.pop()
            if stack:
                parent = stack[-1][0]
                low[parent] = min(low[parent], low[u])
                if low[u] >= disc[parent]:
                    blk = []
                    while estack:
                        e = estack.pop()
                        blk.append(e)
                        if e == pe:
                            break
                    if blk:
                        blocks.append(blk)

    for v in sorted(boundary):
        if v not in disc:
            dfs(v)
    out = {k: [] for k in range(len(cycles))}
    for blk in blocks:
        owners = {cycle_of_edge[e] for e in blk if e in cycle_of_edge}
        if len(owners) != 1:
            raise GraphError("boundary block does not match a single cycle")
        k = owners.pop()
        for e in blk:
            if e not in walk_edges:
                out[k].append(e)
    assigned = sum(len(v) for v in out.values())
    if assigned != len(chords):
        raise GraphError("some chords were not assigned to a cycle")
    return out


def _parallel_rotation_order(g, u, edge_ids, anchor_edge):
    """Order parallel edge ids by rotation at u, read counterclockwise
    starting just after the anchor (the cycle edge preceding the chords),
    which lists nested parallels outermost first."""
    rot = g.rotation[u]
    start = next(k for k, (e, _end) in enumerate(rot) if e == anchor_edge)
    out = []
    for off in range(1, len(rot) + 1):
        e = rot[(start + off) % len(rot)][0]
        if e in edge_ids and e not in out:
            out.append(e)
    return out


def _build_cycle_part(g, cyc, chord_edges):
    """Enhanced-cycle Mondrian for one walk cycle.

    Returns (diagram, vertex_of_h, edge_of_v) mapping horizontals to g
    vertices and verticals to g edge ids.
    """
    verts = cyc["vertices"]
    n = len(verts)
    pos = {v: k + 1 for k, v in enumerate(verts)}
    groups = {}
    for e in chord_edges:
        u, w = g.edges[e]
        i, j = sorted((pos[u], pos[w]))
        groups.setdefault((i, j), []).append(e)
    chords = []
    chord_edge_of = []
    for (i, j), es in sorted(groups.items()):
        if len(es) > 1:
            anchor = cyc["edges"][i - 2] if i >= 2 else cyc["edges"][n - 1]
            es = _parallel_rotation_order(g, verts[i - 1], es, anchor)
        for e in es:
            chords.append((i, j))
            chord_edge_of.append(e)
    m, info = _enhanced_cycle_with_info(EnhancedCycle(n, tuple(chords)))
    # mondrian_enhanced_cycle emits: n-1 boundary verticals (k+1,k+2),
    # then column verticals in column order, with info listing the
    # (i, j) pair of every vertical and the chord index when applicable
    edge_of_v = {}
    seen_pairs = {}
    for vi, tag in enumerate(info):
        if tag[0] == "boundary":
            k = tag[1]
            edge_of_v[vi] = cyc["edges"][k]
        elif tag[0] == "closing":
            edge_of_v[vi] = cyc["edges"][n - 1]
        else:
            edge_of_v[vi] = chord_edge_of[tag[1]]
    vertex_of_h = {k: verts[k] for k in range(n)}
    return m, vertex_of_h, edge_of_v


def mondrian_from_graph(g, verify=True, verify_steps=False):
    """Strong Mondrian diagram contracting to the reduced planar graph g.

    Returns (diagram, h_of_vertex, v_of_edge).  Raises GraphError or
    MondrianError when g is not reduced or a construction step cannot be
    realized.  ``verify_steps`` re-checks strongness after every
    interior-vertex insertion instead of only at the end.
    """
    from .planar import is_reduced_graph, is_embedded_isomorphic

    if g.n == 1 and g.edge_count == 0:
        m = MondrianDiagram.build([(0, 0, 4)], [])
        return m, {0: 0}, {}
    if not is_reduced_graph(g):
        raise GraphError("input graph is not reduced (connected, loopless, bridgeless)")

    outer = _outer_face(g)
    boundary_vertices = {g.dart_vertex(d) for d in outer}
    cycles = _walk_cycles(g, outer)
    chords = _chords_of_cycles(g, cycles, boundary_vertices)

    # build and join the enhanced cycles (root last in pop order)
    root = len(cycles) - 1
    order = [root]
    queue = [root]
    while queue:
        k = queue.pop(0)
        for child in cycles[k]["children"]:
            order.append(child)
            queue.append(child)

    diagram = None
    h_of_vertex = {}
    v_of_edge = {}
    for k in order:
        part, vmap_local, emap_local = _build_cycle_part(g, cycles[k], chords[k])
        if diagram is None:
            diagram = part
            for hk, v in vmap_local.items():
                h_of_vertex[v] = hk
            for vk, e in emap_local.items():
                v_of_edge[e] = vk
            continue
        base_vertex = cycles[k]["base"]
        host_h = h_of_vertex[base_vertex]
        part = _fit_band(diagram, host_h, part)
        diagram, h_map, v_off = join_at(diagram, host_h, part)
        for hk, v in vmap_local.items():
            if hk == 0:
                continue
            h_of_vertex[v] = h_map[hk]
        for vk, e in emap_local.items():
            v_of_edge[e] = v_off + vk

    # interior vertices by BFS from the boundary
    placed = set(boundary_vertices)
    layer = sorted(boundary_vertices)
    bfs_order = []
    frontier = list(layer)
    seen = set(placed)
    while frontier:
        nxt = set()
        for u in frontier:
            for (e, end) in g.rotation[u]:
                w = g.edges[e][1 - end]
                if w not in seen:
                    nxt.add(w)
        frontier = sorted(nxt)
        seen.update(nxt)
        bfs_order.extend(frontier)

    twins = []
    for v_new in bfs_order:
        new_edges = [
            (e, end)
            for (e, end) in g.rotation[v_new]
            if g.edges[e][1 - end] in placed
        ]
        if not new_edges:
            raise GraphError("BFS order broke connectivity")
        result = _insert_vertex_geometric(
            g, diagram, h_of_vertex, v_of_edge, v_new, new_edges, twins
        )
        diagram, h_of_vertex, v_of_edge, twins = result
        placed.add(v_new)
        if verify_steps and not is_strong(diagram):
            raise MondrianError(
                f"strongness lost after inserting vertex {v_new}"
            )

    # drop the doubled-edge twins
    if twins:
        keep = [k for k in range(len(diagram.verticals)) if k not in set(twins)]
        renumber = {old: new for new, old in enumerate(keep)}
        diagram = MondrianDiagram(
            diagram.horizontals,
            tuple(diagram.verticals[k] for k in keep),
        )
        diagram.validate()
        v_of_edge = {e: renumber[v] for e, v in v_of_edge.items()}

    if verify:
        got = contract(diagram)
        if not is_embedded_isomorphic(got, g):
            raise MondrianError("construction failed to reproduce the input embedding")
        if not is_strong(diagram):
            raise MondrianError("construction lost strongness")
    return diagram, h_of_vertex, v_of_edge


def _insert_vertex_geometric(g, diagram, h_of_vertex, v_of_edge, v_new, new_edges, twins):
    """Insert one interior vertex: locate the geometric region whose
    boundary realizes the corners of the new edges, drop perpendiculars,
    and extend the bookkeeping maps."""
    analysis = RegionAnalysis(diagram)
    walks = boundary_walks(diagram)
    twin_set = set(twins)
    v_to_edge = {}
    for e, vi in v_of_edge.items():
        v_to_edge[vi] = e

    regions = []
    for w in walks:
        root = walk_region(diagram, analysis, w)
        if root == analysis._outer:
            continue
        regions.append((root, w, region_stretches(diagram, w)))

    # corner of each new edge: the flanking placed darts at its far end
    corners = []
    doubling = len(new_edges) == 1
    work_edges = list(new_edges) + (list(new_edges) if doubling else [])
    for (e, end) in work_edges:
        u = g.edges[e][1 - end]
        rot = g.rotation[u]
        placed_darts = [
            (k, d) for k, d in enumerate(rot) if d[0] in v_of_edge and d[0] != e
        ]
        if not placed_darts:
            # u has no other placed edges: every stretch of h_u qualifies
            corners.append((u, None, None, 0))
            continue
        p = next(k for k, d in enumerate(rot) if d == (e, 1 - end) or d == (e, end))
        deg = len(rot)
        before = after = None
        p_after = None
        for off in range(1, deg):
            d = rot[(p - off) % deg]
            if d[0] in v_of_edge and d[0] != e:
                before = d[0]
                break
        for off in range(1, deg):
            d = rot[(p + off) % deg]
            if d[0] in v_of_edge and d[0] != e:
                after = d[0]
                p_after = (p + off) % deg
                break
        # the walk crosses the corner gap from the after-flank toward the
        # before-flank, so parallel new edges are ordered by their
        # clockwise offset from the after dart
        cw_off = (p_after - p) % deg
        corners.append((u, v_of_edge[before], v_of_edge[after], cw_off))

    # find the region whose walk realizes every corner
    best = None
    for (root, w, stretches) in regions:
        assign = _match_corners(diagram, stretches, h_of_vertex, corners, twin_set)
        if assign is not None:
            best = (root, w, stretches, assign)
            break
    if best is None:
        raise MondrianError(f"no region realizes the corners of vertex {v_new}")
    root, w, stretches, assign = best

    # attachments in walk order; rotate so bottom-side feet come first
    analysis_data = analysis.strong_data(root)
    if analysis_data is None:
        raise MondrianError("target region is not strong")
    y0 = analysis_data[0]
    items = sorted(range(len(work_edges)), key=lambda k: (assign[k], corners[k][3]))
    sides = []
    for k in items:
        h_idx = stretches[assign[k]][0]
        sides.append("bottom" if diagram.horizontals[h_idx][0] < y0 else "top")
    rot_at = 0
    for idx in range(len(items)):
        if sides[idx] == "bottom" and sides[idx - 1] == "top":
            rot_at = idx
            break
    items = items[rot_at:] + items[:rot_at]

    # the rotation at the new vertex is cyclic, so any rotation of the
    # walk-ordered attachment list is geometrically equivalent; try them
    # until the feet can be placed
    last_exc = None
    for shift in range(len(items)):
        rotated = items[shift:] + items[:shift]
        try:
            m2, h_new, vids = insert_interior_vertex(
                diagram, root, [assign[k] for k in rotated],
                analysis=analysis, walks=walks,
            )
            items = rotated
            last_exc = None
            break
        except MondrianError as exc:
            last_exc = exc
    if last_exc is not None:
        raise last_exc
    h_of_vertex = dict(h_of_vertex)
    h_of_vertex[v_new] = h_new
    v_of_edge = dict(v_of_edge)
    twins = list(twins)
    used = set()
    for pos, k in enumerate(items):
        if doubling and k >= len(new_edges):
            twins.append(vids[pos])
        else:
            e = work_edges[k][0]
            v_of_edge[e] = vids[pos]
    return m2, h_of_vertex, v_of_edge, twins


def _match_corners(diagram, stretches, h_of_vertex, corners, twin_set):
    """Map each corner to a stretch index of this region, or None."""
    nstretch = len(stretches)
    assign = []
    for (u, v_before, v_after, _p) in corners:
        h_u = h_of_vertex[u]
        candidates = []
        for s, (h_idx, _pieces, prev_v, next_v) in enumerate(stretches):
            if h_idx != h_u:
                continue
            if v_before is None:
                candidates.append(s)
                continue
            # walk backwards over twin verticals to find the real flank
            pv, k = prev_v, s
            while pv in twin_set:
                k = (k - 1) % nstretch
                pv = stretches[k][2]
            nv, k = next_v, s
            while nv in twin_set:
                k = (k + 1) % nstretch
                nv = stretches[k][3]
            # the counterclockwise walk enters a stretch from the vertical
            # that is rotation-CCW-after the corner and leaves by the one
            # before it
            if pv == v_after and nv == v_before:
                candidates.append(s)
        if len(candidates) != 1:
            return None
        assign.append(candidates[0])
    return assign


def front_from_mondrian(m):
    """Realize a strong Mondrian diagram as a Legendrian front.

    Each horizontal becomes a pair of lips; each vertical becomes a
    transverse crossing (an X) between the upper arc of its bottom lips
    and the lower arc of its top lips.  All coordinates stay on a
    refinement of the diagram's rational grid, chosen so every cusp and
    crossing gets a distinct x-coordinate.
    """
    from math import gcd

    from .fronts import FrontDiagram

    m.validate()
    H = len(m.horizontals)
    V = len(m.verticals)
    if H == 0:
        raise MondrianError("empty Mondrian diagram")

    denom = 1
    xs_all = []
    for (_y, x1, x2) in m.horizontals:
        xs_all.extend((x1, x2))
    for (x, _y1, _y2) in m.verticals:
        xs_all.append(x)
    for v in xs_all:
        denom = denom * v.denominator // gcd(denom, v.denominator)
    unit = Fraction(1, denom)

    levels = sorted({y for (y, _x1, _x2) in m.horizontals})
    gap = min(
        (levels[k + 1] - levels[k] for k in range(len(levels) - 1)),
        default=Fraction(4),
    )
    eps = gap / 4
    delta = unit / 8
    bend = unit / 32
    mu = unit / (16 * (V + 1))
    mu_h = unit / (8 * (H + 1))

    # cuts per horizontal side
    upper_cuts = {hi: [] for hi in range(H)}
    lower_cuts = {hi: [] for hi in range(H)}
    for t, (x, y1, y2) in enumerate(m.verticals):
        lo_h = m._horizontal_at(x, y1)
        hi_h = m._horizontal_at(x, y2)
        sigma = (t + 1) * mu
        upper_cuts[lo_h].append((x - delta, x + delta, t))
        lower_cuts[hi_h].append((x - delta + sigma, x + delta + sigma, t))

    pieces = []
    for hi, (y, x1, x2) in enumerate(m.horizontals):
        xl = x1 - unit / 4 - hi * mu_h
        xr = x2 + unit / 4 + hi * mu_h
        for (cuts, sgn) in ((upper_cuts[hi], 1), (lower_cuts[hi], -1)):
            flat = y + sgn * eps
            points = [(xl, y), (xl + bend, flat)]
            for (ca, cb, _t) in sorted(cuts):
                points.append((ca, flat))
                pieces.append(points)
                points = [(cb, flat)]
            points.extend([(xr - bend, flat), (xr, y)])
            pieces.append(points)

    for t, (x, y1, y2) in enumerate(m.verticals):
        sigma = (t + 1) * mu
        lo_flat = y1 + eps
        hi_flat = y2 - eps
        pieces.append([(x - delta, lo_flat), (x + delta + sigma, hi_flat)])
        pieces.append([(x - delta + sigma, hi_flat), (x + delta, lo_flat)])

    front = FrontDiagram.from_pieces(pieces)
    front.require_valid()
    return front


def build_max_tb_front(diagram):
    """Front realizing the maximal Thurston-Bennequin number of a reduced
    alternating diagram, via checkerboard graph -> Mondrian -> front.

    Both checkerboard colorings are tried; the one whose front
    desingularizes to the correct topological type (equal unreduced Jones
    polynomial) wins.  Raises DiagramError/MondrianError on failure.
    """
    from .classical import is_reduced_alternating, jones_hat
    from .fronts import desingularize
    from .links import DiagramError
    from .planar import checkerboard_graph

    if not is_reduced_alternating(diagram):
        raise DiagramError("input is not a reduced alternating diagram")
    if not diagram.is_connected():
        raise DiagramError("input diagram is split")
    if not diagram.crossings:
        return front_from_mondrian(MondrianDiagram.build([(0, 0, 4)], []))
    target = jones_hat(diagram)
    last_error = None
    for color in (0, 1):
        try:
            g = checkerboard_graph(diagram, color=color)
            mondrian, _hv, _ve = mondrian_from_graph(g)
            front = front_from_mondrian(mondrian)
            if jones_hat(desingularize(front)) == target:
                return front
            last_error = DiagramError(
                f"coloring {color} produced the wrong topological type"
            )
        except (MondrianError, GraphError) as exc:
            last_error = exc
    raise DiagramError(f"front construction failed for both colorings: {last_error}")
