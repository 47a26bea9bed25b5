"""Planar multigraphs with rotation systems.

Vertices are 0..n-1; an edge is an unordered pair with an id, loops
forbidden, parallel edges allowed.  The embedding is a rotation system:
the counterclockwise cyclic order of darts around each vertex.  Faces
come from the usual face-tracing permutation; embedded isomorphism is
decided by canonical forms over all starting darts and both global
orientations.
"""

from __future__ import annotations


class GraphError(ValueError):
    """Raised for malformed graphs or embeddings."""


class PlanarGraph:
    """Embedded multigraph.

    ``edges[e]`` is the pair (u, v); ``rotation[u]`` is the
    counterclockwise tuple of darts at u, a dart being (edge_id, end)
    with end 0 at edges[e][0] and end 1 at edges[e][1].
    """

    def __init__(self, n, edges, rotation):
        self.n = n
        self.edges = tuple((int(u), int(v)) for (u, v) in edges)
        self.rotation = tuple(tuple(map(tuple, r)) for r in rotation)
        self._validate()

    def _validate(self):
        if len(self.rotation) != self.n:
            raise GraphError("rotation must list every vertex")
        for e, (u, v) in enumerate(self.edges):
            if u == v:
                raise GraphError(f"loop edge {e} at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge {e} endpoint out of range")
        seen = {}
        for u, rot in enumerate(self.rotation):
            for (e, end) in rot:
                if not (0 <= e < len(self.edges)) or end not in (0, 1):
                    raise GraphError(f"bad dart ({e},{end}) at vertex {u}")
                if self.edges[e][end] != u:
                    raise GraphError(f"dart ({e},{end}) does not belong to vertex {u}")
                if (e, end) in seen:
                    raise GraphError(f"dart ({e},{end}) appears twice")
                seen[(e, end)] = u
        if len(seen) != 2 * len(self.edges):
            raise GraphError("every edge needs both darts placed")

    @property
    def edge_count(self):
        return len(self.edges)

    def dart_vertex(self, dart):
        e, end = dart
        return self.edges[e][end]

    def other_end(self, dart):
        e, end = dart
        return (e, 1 - end)

    def to_json(self):
        return {
            "vertices": self.n,
            "rotation": [[e for (e, _end) in rot] for rot in self.rotation],
        }

    @classmethod
    def from_json(cls, obj):
        n = int(obj["vertices"])
        rot_ids = obj["rotation"]
        if len(rot_ids) != n:
            raise GraphError("rotation must list every vertex")
        where = {}
        for u, ids in enumerate(rot_ids):
            for k, e in enumerate(ids):
                where.setdefault(e, []).append((u, k))
        edges = {}
        for e, occ in where.items():
            if len(occ) != 2:
                raise GraphError(f"edge id {e} appears {len(occ)} times")
            edges[e] = (occ[0][0], occ[1][0])
        if sorted(edges) != list(range(len(edges))):
            raise GraphError("edge ids must be 0..E-1")
        edge_list = [edges[e] for e in range(len(edges))]
        rotation = []
        used = set()
        for u, ids in enumerate(rot_ids):
            rot = []
            for e in ids:
                end = 0 if (e, 0) not in used else 1
                if edge_list[e][end] != u:
                    end = 1 - end
                if (e, end) in used or edge_list[e][end] != u:
                    raise GraphError(f"cannot place dart for edge {e} at vertex {u}")
                used.add((e, end))
                rot.append((e, end))
            rotation.append(rot)
        return cls(n, edge_list, rotation)

    # -- connectivity -----------------------------------------------------

    def is_connected(self):
        if self.n == 0:
            return False
        seen = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for (e, end) in self.rotation[u]:
                w = self.edges[e][1 - end]
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    def bridges(self):
        """Edge ids whose removal disconnects the graph (Tarjan)."""
        low = {}
        disc = {}
        out = []
        timer = [0]

        def dfs(u, parent_edge):
            disc[u] = low[u] = timer[0]
            timer[0] += 1
            for (e, end) in self.rotation[u]:
                if e == parent_edge:
                    continue
                w = self.edges[e][1 - end]
                if w not in disc:
                    dfs(w, e)
                    low[u] = min(low[u], low[w])
                    if low[w] > disc[u]:
                        out.append(e)
                else:
                    low[u] = min(low[u], disc[w])
        for u in range(self.n):
            if u not in disc:
                dfs(u, None)
        return out

    # -- faces ------------------------------------------------------------

    def next_dart(self, dart):
        """Face-tracing step: cross the edge, then take the next dart
        clockwise (i.e. previous in the counterclockwise rotation)."""
        e, end = self.other_end(dart)
        u = self.edges[e][end]
        rot = self.rotation[u]
        k = rot.index((e, end))
        return rot[(k - 1) % len(rot)]

    def faces(self):
        """Faces as dart cycles.

        Each face is the cyclic list of darts (e, end) it traverses; the
        walk visits vertex(dart) then crosses edge e.  With rotations
        counterclockwise, each finite face is walked counterclockwise.
        """
        seen = set()
        out = []
        for u in range(self.n):
            for d in self.rotation[u]:
                if d in seen:
                    continue
                face = []
                cur = d
                while cur not in seen:
                    seen.add(cur)
                    face.append(cur)
                    cur = self.next_dart(cur)
                out.append(face)
        return out

    def euler_check(self):
        if not self.is_connected():
            raise GraphError("Euler check needs a connected graph")
        f = len(self.faces())
        return self.n - len(self.edges) + f == 2

    # -- canonical form / isomorphism --------------------------------------

    def _canon_from(self, start, flip):
        rot = self.rotation
        if flip:
            rot = tuple(tuple(reversed(r)) for r in rot)
        vertex_ids = {}
        edge_ids = {}
        order = []
        start_vertex = self.dart_vertex(start)
        vertex_ids[start_vertex] = 0
        # rotate each visited vertex's rotation to start at its discovery dart
        signature = []
        queue = [(start_vertex, start)]
        seenv = {start_vertex}
        while queue:
            u, dart0 = queue.pop(0)
            r = rot[u]
            k = r.index(dart0)
            spun = r[k:] + r[:k]
            row = []
            for (e, end) in spun:
                if e not in edge_ids:
                    edge_ids[e] = len(edge_ids)
                w = self.edges[e][1 - end]
                if w not in vertex_ids:
                    vertex_ids[w] = len(vertex_ids)
                    seenv.add(w)
                    queue.append((w, (e, 1 - end)))
                row.append((edge_ids[e], vertex_ids[w]))
            signature.append(tuple(row))
        if len(vertex_ids) != self.n:
            raise GraphError("canonical form needs a connected graph")
        return tuple(signature)

    def canonical_form(self, include_reflection=True):
        best = None
        for u in range(self.n):
            for d in self.rotation[u]:
                for flip in ((False, True) if include_reflection else (False,)):
                    sig = self._canon_from(d, flip)
                    if best is None or sig < best:
                        best = sig
        return best

    def degree_sequence(self):
        return sorted(len(r) for r in self.rotation)


def is_reduced_graph(g):
    """Connected, loopless, bridgeless (the reduced-planar-graph test)."""
    if g.n == 0:
        return False
    for (u, v) in g.edges:
        if u == v:
            return False
    if not g.is_connected():
        return False
    return not g.bridges()


def is_embedded_isomorphic(g1, g2, include_reflection=True):
    """Isomorphism of embedded multigraphs (sphere homeomorphism, with or
    without reflections)."""
    if g1.n != g2.n or g1.edge_count != g2.edge_count:
        return False
    if g1.n == 0:
        return True
    if g1.degree_sequence() != g2.degree_sequence():
        return False
    if g1.edge_count == 0:
        return g1.n == 1 and g2.n == 1
    return g1.canonical_form(include_reflection) == g2.canonical_form(include_reflection)


def is_abstract_isomorphic(g1, g2):
    """Brute-force abstract multigraph isomorphism (small graphs only);
    serves as an independent oracle for the embedded test."""
    if g1.n != g2.n or g1.edge_count != g2.edge_count:
        return False
    from itertools import permutations

    def multiset(g):
        out = {}
        for (u, v) in g.edges:
            key = (min(u, v), max(u, v))
            out[key] = out.get(key, 0) + 1
        return out

    m2 = multiset(g2)
    degrees1 = [len(r) for r in g1.rotation]
    degrees2 = [len(r) for r in g2.rotation]
    if sorted(degrees1) != sorted(degrees2):
        return False
    for perm in permutations(range(g1.n)):
        if any(degrees1[u] != degrees2[perm[u]] for u in range(g1.n)):
            continue
        out = {}
        for (u, v) in g1.edges:
            a, b = perm[u], perm[v]
            key = (min(a, b), max(a, b))
            out[key] = out.get(key, 0) + 1
        if out == m2:
            return True
    return False


def checkerboard_graph(diagram, color=0):
    """Checkerboard multigraph of a connected link diagram.

    Vertices are the regions of the chosen color; each crossing becomes
    the edge joining the two same-colored regions at its opposite
    quadrants.  The rotation system comes from the region walks, so the
    embedding of the diagram is preserved.  Raises GraphError when a
    crossing joins a region to itself (nugatory crossing).
    """
    faces, corner_to_face, colors = diagram.checkerboard_colors()
    mine = sorted(f for f in range(len(faces)) if colors[f] == color)
    vid = {f: k for k, f in enumerate(mine)}
    n = len(mine)
    edge_pairs = {}
    for t in range(len(diagram.crossings)):
        if colors[corner_to_face[(t, 1)]] == color:
            f1, f2 = corner_to_face[(t, 1)], corner_to_face[(t, 3)]
        else:
            f1, f2 = corner_to_face[(t, 0)], corner_to_face[(t, 2)]
        if f1 == f2:
            raise GraphError(f"crossing {t} joins a region to itself (nugatory)")
        edge_pairs[t] = (vid[f1], vid[f2])
    edges = [edge_pairs[t] for t in range(len(diagram.crossings))]
    used = set()
    rotation = []
    for f in mine:
        rot = []
        for (t, _q) in faces[f]:
            end = 0 if (t, 0) not in used else 1
            if edges[t][end] != vid[f]:
                end = 1 - end
            used.add((t, end))
            rot.append((t, end))
        rotation.append(rot)
    return PlanarGraph(n, edges, rotation)
