"""Exact matrix ranks over GF(2), GF(p), and the rationals.

Matrices arrive as sparse columns (dict of row index -> integer entry).
GF(2) uses bit-packed elimination.  For odd primes the elimination runs
mod p.  Over the rationals rows are kept integral the whole way: a pivot
step replaces row_j by pivot*row_j - a*row_pivot followed by a gcd
normalization, so no fractions and no floating point ever appear.  Pivots
prefer entries of absolute value 1 with low fill-in, which keeps the
growth negligible on boundary matrices.
"""

from __future__ import annotations

from math import gcd


def rank_gf2(columns: list[dict[int, int]]) -> int:
    """Rank over GF(2); each column becomes one bitmask row to eliminate."""
    rows = []
    for col in columns:
        m = 0
        for r, v in col.items():
            if v & 1:
                m |= 1 << r
        if m:
            rows.append(m)
    rank = 0
    pivots: list[int] = []
    for m in rows:
        for p in pivots:
            low = p & -p
            if m & low:
                m ^= p
        if m:
            pivots.append(m)
            rank += 1
    return rank


def rank_mod_p(columns: list[dict[int, int]], p: int) -> int:
    """Rank over GF(p) by sparse elimination (columns treated as vectors)."""
    if p == 2:
        return rank_gf2(columns)
    rows: list[dict[int, int]] = []
    for col in columns:
        r = {i: v % p for i, v in col.items() if v % p}
        if r:
            rows.append(r)
    rank = 0
    pivots: list[tuple[int, int, dict[int, int]]] = []  # (col, inv(val), row)
    for row in rows:
        for c, inv, prow in pivots:
            v = row.get(c)
            if v is None:
                continue
            f = v * inv % p
            for j, w in prow.items():
                nv = (row.get(j, 0) - f * w) % p
                if nv:
                    row[j] = nv
                elif j in row:
                    del row[j]
        if row:
            c = min(row)
            pivots.append((c, pow(row[c], -1, p), row))
            rank += 1
    return rank


def rank_rational(columns: list[dict[int, int]]) -> int:
    """Exact rank over Q by fraction-free integer elimination."""
    rows: list[dict[int, int]] = []
    cols: dict[int, set[int]] = {}
    for col in columns:
        r = {i: v for i, v in col.items() if v}
        if r:
            idx = len(rows)
            rows.append(r)
            for i in r:
                cols.setdefault(i, set()).add(idx)
    alive = set(range(len(rows)))
    rank = 0
    while True:
        # pivot: unit entry if possible, in the sparsest column, sparsest row
        best = None
        for c, members in cols.items():
            live = [i for i in members if i in alive]
            if not live:
                continue
            for i in live:
                v = rows[i][c]
                key = (0 if abs(v) == 1 else 1, len(live), len(rows[i]), abs(v))
                if best is None or key < best[0]:
                    best = (key, i, c)
        if best is None:
            break
        _, pi, pc = best
        rank += 1
        prow = rows[pi]
        pval = prow[pc]
        alive.discard(pi)
        for i in [j for j in cols.get(pc, ()) if j in alive]:
            row = rows[i]
            a = row[pc]
            if pval != 1:
                for j in row:
                    row[j] *= pval
            for j, w in prow.items():
                nv = row.get(j, 0) - a * w
                if nv:
                    row[j] = nv
                    cols.setdefault(j, set()).add(i)
                elif j in row:
                    del row[j]
                    cols[j].discard(i)
            if row:
                g = 0
                for w in row.values():
                    g = gcd(g, w)
                    if g == 1:
                        break
                if g > 1:
                    for j in row:
                        row[j] //= g
            else:
                alive.discard(i)
        for i in list(cols.get(pc, ())):
            if i in alive and pc in rows[i]:
                # should have been eliminated
                raise AssertionError("pivot column not cleared")
    return rank


def rank_over(columns: list[dict[int, int]], characteristic: int) -> int:
    if characteristic == 0:
        return rank_rational(columns)
    if characteristic == 2:
        return rank_gf2(columns)
    return rank_mod_p(columns, characteristic)
