"""Canonical forms for small graphs by pruned permutation search.

The canonical code of a graph is the lexicographically smallest adjacency
bitstring over all vertex orderings: placing vertices one at a time, the
k-th placed vertex contributes a k-bit row recording adjacency to the
already placed vertices (earlier placement = higher bit).  Two graphs are
isomorphic iff their codes agree.  The search is exact; a branch is cut
when its row prefix already exceeds the best known code, and unplaced
"twin" vertices (swappable by an automorphism) are explored only once.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BudgetExceeded
from .graphs import Graph

CANON_MAX_N = 10

_code_cache: dict[tuple[int, tuple[int, ...]], "CanonicalCode"] = {}
_CODE_CACHE_MAX = 200_000


@dataclass(frozen=True, order=True)
class CanonicalCode:
    n: int
    code: int


def _pack(rows: list[int]) -> int:
    code = 0
    for k, row in enumerate(rows):
        code = (code << k) | row
    return code


def canonical_code(g: Graph, max_n: int = CANON_MAX_N) -> CanonicalCode:
    """Canonical code of g; raises BudgetExceeded above the size bound."""
    if g.n > max_n:
        raise BudgetExceeded(f"canonical form limited to {max_n} vertices, got {g.n}")
    key = (g.n, g.adj)
    hit = _code_cache.get(key)
    if hit is not None:
        return hit
    n, adj = g.n, g.adj
    if n <= 1:
        result = CanonicalCode(n, 0)
        _code_cache[key] = result
        return result

    best: list[int] | None = None

    def search(order: list[int], placed_mask: int, rows: list[int], tight: bool):
        nonlocal best
        k = len(order)
        if k == n:
            if best is None or rows < best:
                best = list(rows)
            return
        cands = []
        for u in range(n):
            if placed_mask >> u & 1:
                continue
            skip = False
            for v, _ in cands:
                # twins: swapping u,v is an automorphism, explore one only
                if adj[u] & ~(1 << v) == adj[v] & ~(1 << u):
                    skip = True
                    break
            if skip:
                continue
            row = 0
            for pos, w in enumerate(order):
                row |= (adj[u] >> w & 1) << (k - 1 - pos)
            cands.append((u, row))
        cands.sort(key=lambda t: t[1])
        for u, row in cands:
            if tight and best is not None:
                if row > best[k]:
                    break  # sorted, everything after is worse
                now_tight = row == best[k]
            else:
                # either no best yet (this path will set it), or the prefix
                # already beats best strictly: no pruning is sound below
                now_tight = tight and best is None
            rows.append(row)
            search(order + [u], placed_mask | (1 << u), rows, now_tight)
            rows.pop()

    search([], 0, [], True)
    assert best is not None
    result = CanonicalCode(n, _pack(best))
    if len(_code_cache) >= _CODE_CACHE_MAX:
        _code_cache.clear()
    _code_cache[key] = result
    return result


def is_isomorphic(g: Graph, h: Graph, max_n: int = CANON_MAX_N) -> bool:
    if g.n != h.n or g.edge_count() != h.edge_count():
        return False
    if sorted(g.degree(v) for v in range(g.n)) != sorted(h.degree(v) for v in range(h.n)):
        return False
    return canonical_code(g, max_n) == canonical_code(h, max_n)


def canonical_graph(g: Graph, max_n: int = CANON_MAX_N) -> Graph:
    """The relabeled representative realizing the canonical code."""
    code = canonical_code(g, max_n).code
    n = g.n
    adj = [0] * n
    shift = n * (n - 1) // 2
    for k in range(1, n):
        shift -= k
        row = (code >> shift) & ((1 << k) - 1)
        for pos in range(k):
            if row >> (k - 1 - pos) & 1:
                adj[k] |= 1 << pos
                adj[pos] |= 1 << k
    return Graph(n, tuple(adj))
