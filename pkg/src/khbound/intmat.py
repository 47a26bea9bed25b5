"""Sparse exact integer linear algebra for chain-complex homology.

The workhorse is unit-pivot elimination: entries equal to +-1 are
eliminated with unimodular row and column operations, which is cheap and
covers almost everything in a Khovanov differential.  Whatever survives
is handed to a dense textbook Smith normal form.
"""

from __future__ import annotations

import heapq
from math import gcd


class SparseIntMatrix:
    """Integer matrix as dict-of-rows with a column index.

    Row keys are targets, column keys are sources (the matrix of a map
    acting on column vectors).  Keys need not be contiguous.
    """

    __slots__ = ("rows", "cols")

    def __init__(self):
        self.rows = {}
        self.cols = {}

    @classmethod
    def from_entries(cls, entries):
        m = cls()
        for r, c, v in entries:
            m.add(r, c, v)
        return m

    def add(self, r, c, v):
        if not v:
            return
        row = self.rows.get(r)
        if row is None:
            row = self.rows[r] = {}
        nv = row.get(c, 0) + v
        if nv:
            row[c] = nv
            col = self.cols.get(c)
            if col is None:
                col = self.cols[c] = set()
            col.add(r)
        else:
            del row[c]
            if not row:
                del self.rows[r]
            self.cols[c].discard(r)
            if not self.cols[c]:
                del self.cols[c]

    def get(self, r, c):
        return self.rows.get(r, {}).get(c, 0)

    def nnz(self):
        return sum(len(row) for row in self.rows.values())

    def copy(self):
        m = SparseIntMatrix()
        m.rows = {r: dict(row) for r, row in self.rows.items()}
        m.cols = {c: set(col) for c, col in self.cols.items()}
        return m

    def delete_row(self, r):
        row = self.rows.pop(r, None)
        if row:
            for c in row:
                col = self.cols[c]
                col.discard(r)
                if not col:
                    del self.cols[c]

    def delete_col(self, c):
        col = self.cols.pop(c, None)
        if col:
            for r in col:
                row = self.rows[r]
                del row[c]
                if not row:
                    del self.rows[r]

    def eliminate_unit(self, y, x):
        """Cancel a +-1 pivot at (y, x) by unimodular row/col operations,
        then drop row y and column x.  Other entries pick up the usual
        correction term."""
        pivot = self.rows[y][x]
        col_rows = [r for r in self.cols[x] if r != y]
        row_cols = [(c, v) for c, v in self.rows[y].items() if c != x]
        coeffs = [(r, self.rows[r][x]) for r in col_rows]
        self.delete_row(y)
        self.delete_col(x)
        if coeffs and row_cols:
            for r, a in coeffs:
                factor = -a * pivot  # pivot == 1/pivot for units
                for c, b in row_cols:
                    self.add(r, c, factor * b)


def _unit_entries(m):
    for r, row in m.rows.items():
        for c, v in row.items():
            if v == 1 or v == -1:
                yield r, c


def eliminate_all_units(m, on_pivot=None):
    """Unit-pivot elimination until no +-1 entries remain.

    Returns the number of pivots eliminated.  Pivots are chosen by a lazy
    Markowitz rule (least fill first), with deterministic tie-breaking.
    ``on_pivot(row, col)`` is called after each elimination, letting a
    chain-complex caller restrict the neighbouring differentials.
    """
    rank = 0
    heap = []
    for r, c in _unit_entries(m):
        cost = (len(m.rows[r]) - 1) * (len(m.cols[c]) - 1)
        heap.append((cost, r, c))
    heapq.heapify(heap)
    while heap:
        cost, r, c = heapq.heappop(heap)
        v = m.rows.get(r, {}).get(c, 0)
        if v not in (1, -1):
            continue
        actual = (len(m.rows[r]) - 1) * (len(m.cols[c]) - 1)
        if actual > cost:
            heapq.heappush(heap, (actual, r, c))
            continue
        touched_rows = [rr for rr in m.cols[c] if rr != r]
        m.eliminate_unit(r, c)
        rank += 1
        if on_pivot is not None:
            on_pivot(r, c)
        for rr in touched_rows:
            row = m.rows.get(rr)
            if not row:
                continue
            for cc, vv in row.items():
                if vv in (1, -1):
                    cost2 = (len(row) - 1) * (len(m.cols[cc]) - 1)
                    heapq.heappush(heap, (cost2, rr, cc))
    return rank


def dense_smith(rows):
    """Invariant factors of a dense integer matrix (list of lists).

    Returns the full list of nonzero invariant factors in divisibility
    order.  Textbook algorithm; intended for the small cores left over
    after unit-pivot elimination.
    """
    a = [list(row) for row in rows]
    n = len(a)
    m = len(a[0]) if n else 0
    factors = []
    t = 0
    while True:
        pr = pc = best = None
        for i in range(t, n):
            for j in range(t, m):
                v = abs(a[i][j])
                if v and (best is None or v < best):
                    best, pr, pc = v, i, j
        if pr is None:
            break
        a[t], a[pr] = a[pr], a[t]
        for row in a:
            row[t], row[pc] = row[pc], row[t]
        while True:
            clean = True
            for i in range(t + 1, n):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    if q:
                        a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                    if a[i][t]:
                        a[t], a[i] = a[i], a[t]
                        clean = False
            if not clean:
                continue
            for j in range(t + 1, m):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    if q:
                        for row in a:
                            row[j] -= q * row[t]
                    if a[t][j]:
                        for row in a:
                            row[t], row[j] = row[j], row[t]
                        clean = False
            if not clean:
                continue
            p = a[t][t]
            bad = None
            for i in range(t + 1, n):
                for j in range(t + 1, m):
                    if a[i][j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            a[t] = [x + y for x, y in zip(a[t], a[bad])]
        factors.append(abs(a[t][t]))
        t += 1
    # normalize into divisibility order
    for i in range(len(factors) - 1):
        for j in range(i + 1, len(factors)):
            g = gcd(factors[i], factors[j])
            if g != factors[i]:
                factors[i], factors[j] = g, factors[i] // g * factors[j]
    return factors


def smith_invariants(m):
    """(rank, invariant factors > 1) of a SparseIntMatrix, destructively."""
    rank = eliminate_all_units(m)
    if not m.rows:
        return rank, []
    row_keys = sorted(m.rows)
    col_keys = sorted(m.cols)
    cindex = {c: j for j, c in enumerate(col_keys)}
    dense = [[0] * len(col_keys) for _ in row_keys]
    for i, r in enumerate(row_keys):
        for c, v in m.rows[r].items():
            dense[i][cindex[c]] = v
    factors = dense_smith(dense)
    rank += len(factors)
    return rank, [f for f in factors if f != 1]


def rank_mod2(m):
    """Rank of the matrix over GF(2); independent of the Smith route."""
    rows = []
    for r in sorted(m.rows):
        bits = 0
        for c, v in m.rows[r].items():
            if v & 1:
                bits |= 1 << c
        if bits:
            rows.append(bits)
    rank = 0
    basis = {}
    for bits in rows:
        while bits:
            low = bits & -bits
            if low in basis:
                bits ^= basis[low]
            else:
                basis[low] = bits
                rank += 1
                break
    return rank


def rank_over_q(m):
    """Rank over the rationals by fraction-free (Bareiss-style) elimination."""
    rows = [dict(row) for row in m.rows.values()]
    rank = 0
    while rows:
        pivot_row = None
        for row in rows:
            if row:
                pivot_row = row
                break
        if pivot_row is None:
            break
        c = min(pivot_row)
        pv = pivot_row[c]
        rank += 1
        rest = []
        for row in rows:
            if row is pivot_row:
                continue
            a = row.get(c)
            if a:
                new = {}
                for k in set(row) | set(pivot_row):
                    v = row.get(k, 0) * pv - pivot_row.get(k, 0) * a
                    if v:
                        new[k] = v
                g = 0
                for v in new.values():
                    g = gcd(g, abs(v))
                if g > 1:
                    new = {k: v // g for k, v in new.items()}
                row = new
            if row:
                rest.append(row)
        rows = rest
    return rank
