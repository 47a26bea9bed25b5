import random
from math import atan2

import pytest

from khbound.planar import PlanarGraph


def graph_from_coords(coords, edge_list):
    """Rotation system induced by straight-line plane coordinates."""
    n = len(coords)
    rot = [[] for _ in range(n)]
    for e, (u, v) in enumerate(edge_list):
        rot[u].append((e, 0))
        rot[v].append((e, 1))

    def angle(u, d):
        e, end = d
        w = edge_list[e][1 - end]
        return atan2(coords[w][1] - coords[u][1], coords[w][0] - coords[u][0])

    for u in range(n):
        rot[u].sort(key=lambda d: angle(u, d))
    return PlanarGraph(n, edge_list, rot)


def cycle_graph(n):
    edges = [(k, (k + 1) % n) for k in range(n)]
    if n == 2:
        edges = [(0, 1), (0, 1)]
        return PlanarGraph(2, edges, [[(0, 0), (1, 0)], [(1, 1), (0, 1)]])
    rot = []
    for u in range(n):
        darts = []
        for e, (a, b) in enumerate(edges):
            if a == u:
                darts.append((e, 0))
            elif b == u:
                darts.append((e, 1))
        rot.append(darts)
    return PlanarGraph(n, edges, rot)


def random_reduced_graph(rng, steps=6):
    """Random connected bridgeless loopless planar multigraph with a
    valid rotation system, grown from a small cycle by doubling edges and
    planting vertices inside faces."""
    g = cycle_graph(rng.randint(2, 4))
    for _ in range(steps):
        if rng.random() < 0.35:
            e = rng.randrange(g.edge_count)
            u, v = g.edges[e]
            E = g.edge_count
            edges = list(g.edges) + [(u, v)]
            rot = [list(r) for r in g.rotation]
            rot[u].insert(rot[u].index((e, 0)) + 1, (E, 0))
            rot[v].insert(rot[v].index((e, 1)), (E, 1))
            g = PlanarGraph(g.n, edges, rot)
        else:
            faces = g.faces()
            face = faces[rng.randrange(len(faces))]
            if len(face) < 2:
                continue
            npick = rng.randint(2, min(4, len(face)))
            positions = sorted(rng.sample(range(len(face)), npick))
            w = g.n
            edges = list(g.edges)
            rot = [list(r) for r in g.rotation]
            new_rot_w = []
            inserts = []
            for p in positions:
                d_p = face[p]
                E = len(edges)
                edges.append((g.dart_vertex(d_p), w))
                new_rot_w.append((E, 1))
                inserts.append((g.dart_vertex(d_p), d_p, E))
            for (u, d_p, E) in inserts:
                rot[u].insert(rot[u].index(d_p) + 1, (E, 0))
            rot.append(new_rot_w)
            g = PlanarGraph(g.n + 1, edges, rot)
    return g


def brute_circle_count(diagram, state):
    """Independent circle counter: walk arc identifications directly."""
    joins = []
    for t, (a, b, c, d) in enumerate(diagram.crossings):
        if state[t] == 0:
            joins.append((a, b))
            joins.append((c, d))
        else:
            joins.append((a, d))
            joins.append((b, c))
    neighbors = {}
    for (x, y) in joins:
        neighbors.setdefault(x, []).append(y)
        neighbors.setdefault(y, []).append(x)
    seen = set()
    circles = 0
    for start in sorted(neighbors, key=repr):
        if start in seen:
            continue
        circles += 1
        stack = [start]
        while stack:
            cur = stack.pop()
            if cur in seen:
                continue
            seen.add(cur)
            stack.extend(neighbors[cur])
    return circles + diagram.unknot_components


@pytest.fixture
def rng():
    return random.Random(987654321)
