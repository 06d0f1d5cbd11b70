"""Maximal independent sets, minimal vertex covers, and derived invariants.

Enumeration runs over bitmasks: maximal independent sets of G are the
maximal cliques of the complement, found by Bron-Kerbosch with pivoting.
A plain 2^n filter (`brute_force_mis`) serves as the cross-check oracle in
the tests.  Everything downstream (well-coveredness, ht/bight, the three
forms of 2-purity at a vertex, matching numbers) reduces to these
enumerations.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BudgetExceeded, ValidationError
from .graphs import Graph, _bits, add_pendant, delete_vertex

ENUM_MAX_N = 24
INDUCED_MATCHING_MAX_EDGES = 30


def _check_enum_bound(g: Graph, max_n: int = ENUM_MAX_N):
    if g.n > max_n:
        raise BudgetExceeded(f"enumeration limited to {max_n} vertices, got {g.n}")


def maximal_independent_set_masks(g: Graph, max_n: int = ENUM_MAX_N) -> list[int]:
    """Bitmasks of all inclusion-maximal independent sets, ascending."""
    _check_enum_bound(g, max_n)
    n = g.n
    if n == 0:
        return [0]
    full = (1 << n) - 1
    nonadj = [full & ~g.adj[v] & ~(1 << v) for v in range(n)]
    out: list[int] = []

    def expand(r: int, p: int, x: int):
        if p == 0 and x == 0:
            out.append(r)
            return
        # pivot maximizing candidates removed
        pool = p | x
        pivot = -1
        best = -1
        m = pool
        while m:
            u = (m & -m).bit_length() - 1
            m &= m - 1
            cnt = (p & nonadj[u]).bit_count()
            if cnt > best:
                best = cnt
                pivot = u
        ext = p & ~nonadj[pivot]
        while ext:
            v = (ext & -ext).bit_length() - 1
            ext &= ext - 1
            bit = 1 << v
            expand(r | bit, p & nonadj[v], x & nonadj[v])
            p &= ~bit
            x |= bit

    expand(0, full, 0)
    out.sort()
    return out


def brute_force_mis(g: Graph, max_n: int = 16) -> list[int]:
    """Oracle: filter all 2^n subsets for maximal independent sets."""
    _check_enum_bound(g, max_n)
    n = g.n
    independent = []
    for s in range(1 << n):
        ok = True
        m = s
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            if g.adj[v] & s:
                ok = False
                break
        if ok:
            independent.append(s)
    ind_set = set(independent)
    out = []
    for s in independent:
        if all((s | (1 << v)) not in ind_set for v in range(n) if not s >> v & 1):
            out.append(s)
    return sorted(out)


def _mask_to_sorted(mask: int) -> tuple[int, ...]:
    return tuple(_bits(mask))


def maximal_independent_sets(g: Graph, max_n: int = ENUM_MAX_N) -> list[tuple[int, ...]]:
    sets = [_mask_to_sorted(m) for m in maximal_independent_set_masks(g, max_n)]
    sets.sort()
    return sets


def minimal_vertex_covers(g: Graph, max_n: int = ENUM_MAX_N) -> list[tuple[int, ...]]:
    """Complements of the maximal independent sets."""
    full = (1 << g.n) - 1
    covers = [_mask_to_sorted(full & ~m) for m in maximal_independent_set_masks(g, max_n)]
    covers.sort()
    return covers


def independence_number(g: Graph, max_n: int = ENUM_MAX_N) -> int:
    return max(m.bit_count() for m in maximal_independent_set_masks(g, max_n))


def is_well_covered(g: Graph, max_n: int = ENUM_MAX_N) -> bool:
    sizes = {m.bit_count() for m in maximal_independent_set_masks(g, max_n)}
    return len(sizes) <= 1


@dataclass(frozen=True)
class CoverReport:
    alpha: int
    ht: int
    bight: int
    well_covered: bool
    mis_count: int

    def to_json(self) -> dict:
        return {
            "alpha": self.alpha,
            "ht": self.ht,
            "bight": self.bight,
            "well_covered": self.well_covered,
            "mis_count": self.mis_count,
        }


def cover_report(g: Graph, max_n: int = ENUM_MAX_N) -> CoverReport:
    masks = maximal_independent_set_masks(g, max_n)
    sizes = [m.bit_count() for m in masks]
    alpha = max(sizes)
    return CoverReport(
        alpha=alpha,
        ht=g.n - alpha,
        bight=g.n - min(sizes),
        well_covered=min(sizes) == alpha,
        mis_count=len(masks),
    )


# -- 2-purity at a vertex ----------------------------------------------------

TWO_PURE_METHODS = ("definition", "mis_extension", "pendant_cover")


def is_two_pure_at(g: Graph, x: int, method: str = "definition",
                   max_n: int = ENUM_MAX_N) -> bool:
    """Is G 2-pure with respect to x?

    definition      G pure, G-x pure, alpha unchanged (total: isolated x gives
                    False since alpha always drops there).
    mis_extension   G pure and every maximal independent set through x stays
                    extendable after removing x: some maximal independent set
                    B avoiding x contains A - x.
    pendant_cover   G pure and every minimal vertex cover of G + pendant at x
                    meets V(G) in exactly ht(I(G)) vertices.

    The last two require x non-isolated; all three agree there.
    """
    if not 0 <= x < g.n:
        raise ValidationError(f"vertex {x} out of range")
    if method == "definition":
        masks = maximal_independent_set_masks(g, max_n)
        sizes = {m.bit_count() for m in masks}
        if len(sizes) > 1:
            return False
        gx = delete_vertex(g, x)
        masks_x = maximal_independent_set_masks(gx, max_n)
        sizes_x = {m.bit_count() for m in masks_x}
        return len(sizes_x) <= 1 and max(sizes) == (max(sizes_x) if sizes_x else 0)
    if g.adj[x] == 0:
        raise ValidationError(f"vertex {x} is isolated; method {method} needs a neighbor")
    if method == "mis_extension":
        masks = maximal_independent_set_masks(g, max_n)
        if len({m.bit_count() for m in masks}) > 1:
            return False
        bit = 1 << x
        without_x = [m for m in masks if not m & bit]
        for a in masks:
            if not a & bit:
                continue
            rest = a & ~bit
            if not any(b & rest == rest for b in without_x):
                return False
        return True
    if method == "pendant_cover":
        masks = maximal_independent_set_masks(g, max_n)
        sizes = {m.bit_count() for m in masks}
        if len(sizes) > 1:
            return False
        ht = g.n - max(sizes)
        gp = add_pendant(g, x)
        in_g = (1 << g.n) - 1
        for m in maximal_independent_set_masks(gp, max_n):
            cover = ((1 << gp.n) - 1) & ~m
            if (cover & in_g).bit_count() != ht:
                return False
        return True
    raise ValidationError(f"unknown method {method!r}")


def u_set(g: Graph, max_n: int = ENUM_MAX_N) -> tuple[int, ...]:
    """Vertices x such that G is 2-pure with respect to x."""
    return tuple(x for x in range(g.n) if is_two_pure_at(g, x, "definition", max_n))


# -- matchings ---------------------------------------------------------------

def matching_number(g: Graph) -> int:
    """Maximum matching size by branch-and-memo over vertex masks."""
    memo: dict[int, int] = {}

    def best(mask: int) -> int:
        if mask == 0:
            return 0
        hit = memo.get(mask)
        if hit is not None:
            return hit
        v = (mask & -mask).bit_length() - 1
        res = best(mask & ~(1 << v))
        avail = g.adj[v] & mask
        while avail:
            u = (avail & -avail).bit_length() - 1
            avail &= avail - 1
            res = max(res, 1 + best(mask & ~(1 << v) & ~(1 << u)))
        memo[mask] = res
        return res

    return best((1 << g.n) - 1)


def induced_matching_number(g: Graph,
                            max_edges: int = INDUCED_MATCHING_MAX_EDGES) -> int:
    """Maximum induced matching size (matched endpoints induce no extra edge)."""
    if g.edge_count() > max_edges:
        raise BudgetExceeded(
            f"induced matching search limited to {max_edges} edges, got {g.edge_count()}")
    memo: dict[int, int] = {}

    def best(mask: int) -> int:
        if mask == 0:
            return 0
        hit = memo.get(mask)
        if hit is not None:
            return hit
        v = (mask & -mask).bit_length() - 1
        res = best(mask & ~(1 << v))
        avail = g.adj[v] & mask
        while avail:
            u = (avail & -avail).bit_length() - 1
            avail &= avail - 1
            # taking edge uv removes both closed neighborhoods
            res = max(res, 1 + best(mask & ~g.closed_neighborhood_mask(v)
                                    & ~g.closed_neighborhood_mask(u)))
        memo[mask] = res
        return res

    return best((1 << g.n) - 1)
