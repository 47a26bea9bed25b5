"""Link diagrams in PD notation, orientations, smoothings and regions.

A crossing is a 4-tuple of edge labels listed counterclockwise starting
at the incoming under-strand.  Orientation is inferred from label
succession when a diagram is parsed, and carried explicitly afterwards:
for every crossing we record at which of the two over positions (1 or 3)
the over-strand enters.  A crossing is positive exactly when the
over-strand enters at position 3.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field


class DiagramError(ValueError):
    """Raised for malformed PD codes, braids or diagram inputs."""


def _other_occurrence(occurrences, edge, here):
    a, b = occurrences[edge]
    return b if a == here else a


@dataclass(frozen=True)
class LinkDiagram:
    """Oriented link diagram: PD crossings plus split unknot components."""

    crossings: tuple
    unknot_components: int = 0
    over_in: tuple = field(default=(), compare=False)
    components: tuple = field(default=(), compare=False)

    @staticmethod
    def from_crossings(crossings, unknot_components=0, over_in=None):
        crossings = tuple(tuple(c) for c in crossings)
        occurrences = _occurrence_map(crossings)
        components, inferred = _trace_and_orient(crossings, occurrences, over_in)
        return LinkDiagram(crossings, unknot_components, tuple(inferred), tuple(components))

    # -- basic counts ------------------------------------------------

    @property
    def crossing_count(self):
        return len(self.crossings)

    @property
    def component_count(self):
        return len(self.components) + self.unknot_components

    def sign(self, t):
        """+1 when the over-strand enters crossing t at position 3."""
        return 1 if self.over_in[t] == 3 else -1

    def signs(self):
        return tuple(self.sign(t) for t in range(len(self.crossings)))

    @property
    def n_plus(self):
        return sum(1 for t in range(len(self.crossings)) if self.sign(t) > 0)

    @property
    def n_minus(self):
        return len(self.crossings) - self.n_plus

    def edges(self):
        out = set()
        for c in self.crossings:
            out.update(c)
        return out

    # -- regions (faces of the underlying 4-valent plane graph) -------

    def regions(self):
        """Faces of the diagram, each as a list of corners (t, q).

        Corner (t, q) is the quadrant between positions q and q+1 of
        crossing t.  Raises DiagramError when the diagram with crossings
        is not connected (the face count then fails Euler's relation).
        """
        n = len(self.crossings)
        if n == 0:
            raise DiagramError("0-crossing diagram has no region structure")
        occurrences = _occurrence_map(self.crossings)
        seen = set()
        faces = []
        for t0 in range(n):
            for p0 in range(4):
                if (t0, p0) in seen:
                    continue
                face = []
                t, p = t0, p0
                while (t, p) not in seen:
                    seen.add((t, p))
                    face.append((t, (p - 1) % 4))
                    q = (p - 1) % 4
                    edge = self.crossings[t][q]
                    t, p = _other_occurrence(occurrences, edge, (t, q))
                faces.append(face)
        if len(faces) != n + 2:
            raise DiagramError(
                f"diagram is not connected: {len(faces)} regions for {n} crossings"
            )
        return faces

    def corner_region_map(self):
        faces = self.regions()
        corner_to_face = {}
        for fid, face in enumerate(faces):
            for corner in face:
                corner_to_face[corner] = fid
        return faces, corner_to_face

    def checkerboard_colors(self):
        """Two-coloring of regions; regions sharing an edge get opposite colors.

        Returns (faces, corner_to_face, colors) where colors[fid] is 0 or 1
        and the region containing corner (0, 1) has color 0.
        """
        faces, corner_to_face = self.corner_region_map()
        colors = {}
        stack = [(corner_to_face[(0, 1)], 0)]
        while stack:
            fid, col = stack.pop()
            if fid in colors:
                if colors[fid] != col:
                    raise DiagramError("diagram regions are not checkerboard colorable")
                continue
            colors[fid] = col
            for (t, q) in faces[fid]:
                stack.append((corner_to_face[(t, (q + 1) % 4)], 1 - col))
                stack.append((corner_to_face[(t, (q - 1) % 4)], 1 - col))
        if len(colors) != len(faces):
            raise DiagramError("region adjacency is not connected")
        return faces, corner_to_face, colors

    def is_connected(self):
        """True when the crossing-incidence graph is connected and there are
        no extra split unknot components (0-crossing diagrams count as
        connected exactly when they are a single unknot)."""
        if self.unknot_components and self.crossings:
            return False
        if not self.crossings:
            return self.unknot_components == 1
        occurrences = _occurrence_map(self.crossings)
        seen = {0}
        stack = [0]
        while stack:
            t = stack.pop()
            for edge in self.crossings[t]:
                for (t2, _p) in occurrences[edge]:
                    if t2 not in seen:
                        seen.add(t2)
                        stack.append(t2)
        return len(seen) == len(self.crossings)

    def to_json(self):
        return {
            "pd": [list(c) for c in self.crossings],
            "unknot_components": self.unknot_components,
        }


class ResolutionState(tuple):
    """Per-crossing 0/1 smoothing choices."""

    @staticmethod
    def from_int(bits, n):
        return ResolutionState((bits >> k) & 1 for k in range(n))


@dataclass(frozen=True)
class SmoothingDiagram:
    """Circles obtained by resolving every crossing of a diagram."""

    circle_count: int
    circle_membership: dict
    crossing_arcs: tuple


def _occurrence_map(crossings):
    occurrences = {}
    for t, c in enumerate(crossings):
        if len(c) != 4:
            raise DiagramError(f"crossing {t} is not a 4-tuple: {c!r}")
        for p, edge in enumerate(c):
            occurrences.setdefault(edge, []).append((t, p))
    for edge, occ in occurrences.items():
        if len(occ) != 2:
            raise DiagramError(f"edge label {edge} appears {len(occ)} times, expected 2")
    return {e: tuple(v) for e, v in occurrences.items()}


def _trace_and_orient(crossings, occurrences, over_in=None):
    """Trace components and fix the over-strand entry position per crossing.

    Components that pass under somewhere are oriented by the PD convention
    (position 0 is the incoming under-strand); components that only ever
    pass over fall back to label succession.
    """
    n = len(crossings)
    inferred = [0] * n
    visited_occ = set()
    components = []
    for start_edge in sorted(occurrences, key=_label_key):
        occ0 = occurrences[start_edge][0]
        if (start_edge, occ0) in visited_occ:
            continue
        # walk the unoriented strand: edge -> crossing passage -> edge ...
        cycle_edges = []
        passages = []  # (t, p_enter) in walk direction
        edge, occ = start_edge, occ0
        while (edge, occ) not in visited_occ:
            visited_occ.add((edge, occ))
            t, p = occ
            cycle_edges.append(edge)
            passages.append((t, p))
            p_exit = p ^ 2
            edge = crossings[t][p_exit]
            visited_occ.add((edge, (t, p_exit)))
            occ = _other_occurrence(occurrences, edge, (t, p_exit))
        # decide traversal direction
        under_entries = [p for (_t, p) in passages if p in (0, 2)]
        if under_entries:
            forward_ok = all(p == 0 for p in under_entries)
            backward_ok = all(p == 2 for p in under_entries)
            if not (forward_ok or backward_ok):
                raise DiagramError(
                    "inconsistent under-strand directions along a component"
                )
            reverse = not forward_ok
        else:
            fwd = _succession_score(cycle_edges)
            bwd = _succession_score(list(reversed(cycle_edges)))
            reverse = bwd > fwd
        if reverse:
            cycle_edges = [cycle_edges[0]] + list(reversed(cycle_edges[1:]))
            passages = [(t, p ^ 2) for (t, p) in reversed(passages)]
        for (t, p) in passages:
            if p in (1, 3):
                inferred[t] = p
        components.append(tuple(cycle_edges))
    if over_in is not None:
        over_in = list(over_in)
        if len(over_in) != n or any(p not in (1, 3) for p in over_in):
            raise DiagramError("over_in must assign position 1 or 3 per crossing")
        inferred = over_in
    for t in range(n):
        if inferred[t] not in (1, 3):
            raise DiagramError(f"could not orient over-strand at crossing {t}")
    return components, inferred


def _label_key(edge):
    return (0, edge) if isinstance(edge, int) else (1, str(edge))


def _succession_score(cycle_edges):
    score = 0
    k = len(cycle_edges)
    for i in range(k):
        a, b = cycle_edges[i], cycle_edges[(i + 1) % k]
        if isinstance(a, int) and isinstance(b, int) and b == a + 1:
            score += 1
    return score


def parse_pd(text):
    """Parse a PD-code string like "[[1,4,2,5],[3,6,4,1],[5,2,6,3]]".

    The empty list denotes a single 0-crossing unknot.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DiagramError(f"malformed PD code: {exc}") from exc
    if not isinstance(data, list):
        raise DiagramError("PD code must be a list of 4-tuples")
    if not data:
        return LinkDiagram.from_crossings((), unknot_components=1)
    for c in data:
        if not (isinstance(c, list) and len(c) == 4 and all(isinstance(x, int) and x > 0 for x in c)):
            raise DiagramError(f"crossing must be a 4-tuple of positive integers: {c!r}")
    return LinkDiagram.from_crossings(data)


def diagram_from_json(obj):
    """Accept {"pd": [...], "unknot_components": k} or {"braid": [...], "strands": n}."""
    if "pd" in obj:
        extra = int(obj.get("unknot_components", 0))
        data = obj["pd"]
        if not data:
            return LinkDiagram.from_crossings((), unknot_components=max(extra, 1))
        d = LinkDiagram.from_crossings(data, unknot_components=extra)
        return d
    if "braid" in obj:
        return braid_closure(obj["braid"], strands=obj.get("strands"))
    raise DiagramError("expected a 'pd' or 'braid' entry")


def braid_closure(word, strands=None):
    """Diagram of the closure of a braid word.

    Letters are nonzero integers: +i is the generator where the strand at
    position i passes over the strand at position i+1 (a positive
    crossing); -i is its inverse.
    """
    word = list(word)
    if strands is None:
        if not word:
            raise DiagramError("empty braid word needs an explicit strand count")
        strands = max(abs(x) for x in word) + 1
    if any(x == 0 or abs(x) >= strands for x in word):
        raise DiagramError("braid letter out of range for strand count")
    if not word:
        return LinkDiagram.from_crossings((), unknot_components=strands)

    current = list(range(strands))  # open edge id per position
    first = list(range(strands))
    next_id = strands
    crossings = []
    over_in = []
    touched = [False] * strands
    for letter in word:
        i = abs(letter) - 1
        u_in, v_in = current[i], current[i + 1]
        u_out, v_out = next_id, next_id + 1
        next_id += 2
        if letter > 0:
            # counterclockwise from the incoming under-strand (bottom-right)
            crossings.append((v_in, u_out, v_out, u_in))
            over_in.append(3)
        else:
            crossings.append((u_in, v_in, u_out, v_out))
            over_in.append(1)
        current[i], current[i + 1] = v_out, u_out
        touched[i] = touched[i + 1] = True

    # plat the braid shut: identify the final open edge at each position
    # with the initial one
    subs = {}
    for p in range(strands):
        if current[p] != first[p]:
            subs[current[p]] = first[p]

    def resolve(e):
        while e in subs:
            e = subs[e]
        return e

    crossings = [tuple(resolve(e) for e in c) for c in crossings]
    unknots = sum(1 for p in range(strands) if not touched[p])
    d = LinkDiagram.from_crossings(crossings, unknot_components=unknots, over_in=over_in)
    return relabel(d)


def relabel(d):
    """Renumber edges 1..2n consecutively along each component."""
    if not d.crossings:
        return d
    new = {}
    label = 1
    for comp in d.components:
        for e in comp:
            new[e] = label
            label += 1
    crossings = [tuple(new[e] for e in c) for c in d.crossings]
    return LinkDiagram.from_crossings(crossings, d.unknot_components, over_in=d.over_in)


def mirror(d):
    """Switch every crossing; writhe negates, the plane picture is kept."""
    crossings = []
    over_in = []
    for t, (a, b, c, dd) in enumerate(d.crossings):
        if d.over_in[t] == 3:
            crossings.append((dd, a, b, c))
            over_in.append(1)
        else:
            crossings.append((b, c, dd, a))
            over_in.append(3)
    return LinkDiagram.from_crossings(crossings, d.unknot_components, over_in=over_in)


def writhe(d):
    return sum(d.signs())


def smooth(d, state):
    """Circles of the diagram after resolving every crossing per state.

    State bit 0 at crossing (a,b,c,d) joins a-b and c-d; bit 1 joins
    a-d and b-c.
    """
    if len(state) != len(d.crossings):
        raise DiagramError(
            f"state length {len(state)} != crossing count {len(d.crossings)}"
        )
    parent = {}

    def find(x):
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[max(rx, ry, key=_label_key)] = min(rx, ry, key=_label_key)

    for e in sorted(d.edges(), key=_label_key):
        parent[e] = e
    for t, (a, b, c, dd) in enumerate(d.crossings):
        if state[t] == 0:
            union(a, b)
            union(c, dd)
        else:
            union(a, dd)
            union(b, c)

    roots = sorted({find(e) for e in parent}, key=_label_key)
    index = {r: i for i, r in enumerate(roots)}
    membership = {e: index[find(e)] for e in parent}
    arcs = []
    for t, (a, b, c, dd) in enumerate(d.crossings):
        if state[t] == 0:
            arcs.append((membership[a], membership[c]))
        else:
            arcs.append((membership[a], membership[b]))
    k = len(roots)
    for j in range(d.unknot_components):
        membership[("unknot", j)] = k + j
    return SmoothingDiagram(k + d.unknot_components, membership, tuple(arcs))
