"""Integral Khovanov homology over the resolution cube.

Generators of the chain complex are pairs (state, sign assignment of the
smoothing circles); the differential is assembled from merge and split
maps with alternating edge signs.  Gradings follow Khovanov's original
convention, pinned by the graded Euler characteristic:

    j = |s| - n_minus                       (homological)
    i = p(v) + |s| + n_plus - 2 n_minus     (quantum)

The differential preserves i, so homology is computed one quantum degree
at a time: unit-pivot elimination first, Smith normal form on whatever
core survives.  Distinct quantum degrees can run in parallel processes.
"""

from __future__ import annotations

from itertools import combinations

from .intmat import SparseIntMatrix, eliminate_all_units, smith_invariants
from .laurent import Laurent, Laurent2
from .links import smooth


class ResourceLimit(RuntimeError):
    """Raised when a diagram exceeds the configured crossing cap."""


def _popcount(x):
    return bin(x).count("1")


class BigradedGroup:
    """Map (quantum, homological) bidegree -> (free rank, invariant factors)."""

    __slots__ = ("groups",)

    def __init__(self, groups):
        self.groups = {
            key: (rank, tuple(tor))
            for key, (rank, tor) in sorted(groups.items())
            if rank or tor
        }

    def rank(self, i, j):
        return self.groups.get((i, j), (0, ()))[0]

    def torsion(self, i, j):
        return self.groups.get((i, j), (0, ()))[1]

    def support(self):
        return sorted(self.groups)

    def total_rank(self):
        return sum(r for r, _t in self.groups.values())

    def to_json(self):
        return [
            {"i": i, "j": j, "rank": r, "torsion": list(t)}
            for (i, j), (r, t) in sorted(self.groups.items())
        ]

    def __eq__(self, other):
        return isinstance(other, BigradedGroup) and self.groups == other.groups

    def __repr__(self):
        return f"BigradedGroup({self.groups!r})"


class CubeComplex:
    """The Khovanov cube of a diagram, sliced by quantum degree on demand."""

    def __init__(self, diagram, max_crossings=16):
        n = diagram.crossing_count
        if n > max_crossings:
            raise ResourceLimit(
                f"{n} crossings exceeds the cap of {max_crossings}; "
                "raise max_crossings explicitly to proceed"
            )
        self.diagram = diagram
        self.n = n
        self.n_plus = diagram.n_plus
        self.n_minus = diagram.n_minus
        self.unknots = diagram.unknot_components
        edges = sorted(
            diagram.edges(), key=lambda e: (0, e) if isinstance(e, int) else (1, str(e))
        )
        self._edge_index = {e: k for k, e in enumerate(edges)}
        self._membership = []
        self._nreal = []
        self._arc_pairs = []
        for s in range(1 << n):
            sm = smooth(diagram, [(s >> t) & 1 for t in range(n)])
            self._membership.append(bytes(sm.circle_membership[e] for e in edges))
            self._nreal.append(sm.circle_count - self.unknots)
            self._arc_pairs.append(sm.crossing_arcs)

    # -- gradings ------------------------------------------------------

    def homological_degree(self, state):
        return _popcount(state) - self.n_minus

    def quantum_base(self, state):
        return _popcount(state) + self.n_plus - 2 * self.n_minus

    def circle_count(self, state):
        return self._nreal[state] + self.unknots

    def quantum_degrees(self):
        degrees = set()
        for s in range(1 << self.n):
            k = self.circle_count(s)
            base = self.quantum_base(s)
            degrees.update(base + 2 * ones - k for ones in range(k + 1))
        return sorted(degrees)

    def total_generators(self):
        return sum(1 << self.circle_count(s) for s in range(1 << self.n))

    def generators(self, i):
        """Generators of quantum degree i per homological degree.

        Returns {j: {(state, mask): local_index}} with a deterministic
        enumeration (states ascending, masks ascending); mask bit c set
        means v_+ on circle c.
        """
        out = {}
        for s in range(1 << self.n):
            k = self.circle_count(s)
            ones2 = i - self.quantum_base(s) + k
            if ones2 < 0 or ones2 > 2 * k or ones2 % 2:
                continue
            ones = ones2 // 2
            bucket = out.setdefault(self.homological_degree(s), {})
            for combo in combinations(range(k), ones):
                mask = 0
                for c in combo:
                    mask |= 1 << c
                bucket[(s, mask)] = len(bucket)
        return out

    def edge_maps(self, state, t):
        """Circle bookkeeping across the cube edge flipping crossing t.

        Returns ("merge", c1, c2, cm, corr) or ("split", c, ca, cb, corr);
        corr maps every untouched circle of the source state (unknot
        circles included) to the matching circle of the target state.
        """
        target = state | (1 << t)
        member_s = self._membership[state]
        member_t = self._membership[target]
        c1, c2 = self._arc_pairs[state][t]
        k_s = self._nreal[state]
        k_t = self._nreal[target]
        rep = [-1] * k_s
        for pos, circ in enumerate(member_s):
            if rep[circ] < 0:
                rep[circ] = pos
        corr = {}
        for m in range(self.unknots):
            corr[k_s + m] = k_t + m
        if c1 != c2:
            for c in range(k_s):
                if c != c1 and c != c2:
                    corr[c] = member_t[rep[c]]
            return ("merge", c1, c2, member_t[rep[c1]], corr)
        a, b, _c, _d = self.diagram.crossings[t]
        ca = member_t[self._edge_index[a]]
        cb = member_t[self._edge_index[b]]
        for c in range(k_s):
            if c != c1:
                corr[c] = member_t[rep[c]]
        return ("split", c1, ca, cb, corr)

    def degree_slice(self, i):
        """Chain groups and differentials of one quantum degree.

        Returns (dims, mats): dims = {j: dimension}, mats = {j: matrix of
        d_j from degree j to j+1; rows are degree-(j+1) generators,
        columns degree-j generators}.
        """
        gens = self.generators(i)
        dims = {j: len(bucket) for j, bucket in gens.items()}
        mats = {}
        cache = {}
        for j in sorted(gens):
            dst = gens.get(j + 1)
            if not dst:
                continue
            mat = SparseIntMatrix()
            for (s, mask), col in gens[j].items():
                for t in range(self.n):
                    if (s >> t) & 1:
                        continue
                    key = (s, t)
                    maps = cache.get(key)
                    if maps is None:
                        maps = cache[key] = self.edge_maps(s, t)
                    kind, cx, ca, cb, corr = maps
                    sign = -1 if _popcount(s & ((1 << t) - 1)) & 1 else 1
                    s2 = s | (1 << t)
                    base = 0
                    for c, c2 in corr.items():
                        if (mask >> c) & 1:
                            base |= 1 << c2
                    if kind == "merge":
                        bits = ((mask >> cx) & 1) + ((mask >> ca) & 1)
                        if bits == 0:
                            continue
                        if bits == 2:
                            base |= 1 << cb
                        mat.add(dst[(s2, base)], col, sign)
                    else:
                        if (mask >> cx) & 1:
                            mat.add(dst[(s2, base | (1 << ca))], col, sign)
                            mat.add(dst[(s2, base | (1 << cb))], col, sign)
                        else:
                            mat.add(dst[(s2, base)], col, sign)
            mats[j] = mat
        return dims, mats


def build_cube(diagram, max_crossings=16):
    """Khovanov cube of a diagram; raises ResourceLimit above the cap."""
    return CubeComplex(diagram, max_crossings=max_crossings)


def reduce_complex_slice(mats):
    """Gaussian elimination on a whole quantum-degree slice of the complex.

    Cancels +-1 pivots in ascending homological order; each cancellation
    removes one generator from C_j and C_{j+1} and restricts the two
    neighbouring differentials (which never creates new unit entries in
    differentials already processed).  Returns {j: cancelled count}.
    """
    cancelled = {}
    for j in sorted(mats):
        below = mats.get(j - 1)
        above = mats.get(j + 1)

        def on_pivot(y, x, below=below, above=above):
            if below is not None:
                below.delete_row(x)
            if above is not None:
                above.delete_col(y)

        cancelled[j] = eliminate_all_units(mats[j], on_pivot=on_pivot)
    return cancelled


def homology_of_slice(dims, mats, reduce_first=False):
    """Homology groups {j: (rank, torsion)} of one quantum-degree slice.

    Torsion is indexed by the source degree of the differential carrying
    it (the convention of the published tables this library is checked
    against): the invariant factors of d_j are reported at degree j.
    """
    cancelled = reduce_complex_slice(mats) if reduce_first else {}
    ranks = {}
    torsions = {}
    for j, mat in mats.items():
        r, factors = smith_invariants(mat)
        ranks[j] = r + cancelled.get(j, 0)
        torsions[j] = tuple(factors)
    out = {}
    for j in set(dims) | set(torsions):
        free = dims.get(j, 0) - ranks.get(j, 0) - ranks.get(j - 1, 0)
        tor = torsions.get(j, ())
        if free or tor:
            out[j] = (free, tor)
    return out


def _degree_job(args):
    crossings, over_in, unknots, i, reduce_first, cap = args
    from .links import LinkDiagram

    d = LinkDiagram.from_crossings(crossings, unknots, over_in=over_in)
    cube = CubeComplex(d, max_crossings=cap)
    dims, mats = cube.degree_slice(i)
    return i, homology_of_slice(dims, mats, reduce_first=reduce_first)


def integer_homology(cube, reduce_first=False, parallel=None):
    """Integral Khovanov homology of a cube complex.

    ``reduce_first`` switches on complex-level Gaussian pre-reduction
    (identical output, cheaper on large diagrams).  ``parallel`` runs
    that many worker processes over quantum degrees; results are merged
    in degree order either way.
    """
    degrees = cube.quantum_degrees()
    groups = {}
    if parallel and parallel > 1 and len(degrees) > 1:
        from concurrent.futures import ProcessPoolExecutor

        d = cube.diagram
        jobs = [
            (d.crossings, d.over_in, d.unknot_components, i, reduce_first, max(cube.n, 1))
            for i in degrees
        ]
        with ProcessPoolExecutor(max_workers=parallel) as pool:
            for i, slice_groups in pool.map(_degree_job, jobs):
                for j, group in slice_groups.items():
                    groups[(i, j)] = group
    else:
        for i in degrees:
            dims, mats = cube.degree_slice(i)
            for j, group in homology_of_slice(dims, mats, reduce_first=reduce_first).items():
                groups[(i, j)] = group
    return BigradedGroup(groups)


def khovanov_homology(diagram, max_crossings=16, reduce_first=False, parallel=None):
    """Convenience wrapper: diagram -> BigradedGroup."""
    return integer_homology(
        build_cube(diagram, max_crossings=max_crossings),
        reduce_first=reduce_first,
        parallel=parallel,
    )


def strong_bound(homology):
    """min { i - j : HKh^{i,j} nonzero }, torsion included."""
    diagonals = [i - j for (i, j), (r, t) in homology.groups.items() if r or t]
    if not diagonals:
        raise ValueError("homology is zero; no bound exists")
    return min(diagonals)


def weak_bound(homology):
    """min { i - j : HKh^{i,j} has positive free rank }."""
    diagonals = [i - j for (i, j), (r, _t) in homology.groups.items() if r]
    if not diagonals:
        raise ValueError("free part of homology is zero; no bound exists")
    return min(diagonals)


def graded_euler(homology):
    """sum (-1)^j rank(i,j) q^i as a one-variable Laurent polynomial."""
    terms = []
    for (i, j), (r, _t) in homology.groups.items():
        if r:
            terms.append((i, -r if j & 1 else r))
    return Laurent(terms)


def poincare_polynomial(homology):
    """sum rank(i,j) q^i t^j as a two-variable Laurent polynomial."""
    return Laurent2({(i, j): r for (i, j), (r, _t) in homology.groups.items() if r})
