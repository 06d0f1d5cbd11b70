"""Vertex decomposability, shedding vertices, and the pure-VD test.

A complex is vertex decomposable if it is void, the empty complex, or a
single simplex, or some vertex x has vertex decomposable link and deletion
with every facet of the deletion still a facet of the whole complex.  The
recursion memoizes on the facet list after a dense relabeling of the
support, which is what actually recurs when graphs are carved up.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import SimplicialComplex, deletion, independence_complex, is_pure, link
from .errors import BudgetExceeded
from .graphs import Graph
from .homology import _normalized_facets
from .utils import LRUCache

VD_MAX_GROUND = 16

_vd_cache = LRUCache(200_000)


def _shedding_candidates(cx: SimplicialComplex) -> list[int]:
    """Vertices whose deletion keeps every facet a facet of cx, ascending."""
    facet_set = set(cx.facets)
    out = []
    for x in cx.vertices():
        bit = 1 << x
        ok = True
        for f in cx.facets:
            if f & bit:
                # f loses x; it must stay inside some untouched facet
                if not any(f & ~bit & h == f & ~bit for h in facet_set if not h & bit):
                    ok = False
                    break
        if ok:
            out.append(x)
    return out


def is_vertex_decomposable(cx: SimplicialComplex,
                           max_ground: int = VD_MAX_GROUND) -> bool:
    """Recursive shedding-vertex search with memoization."""
    if cx.ground > max_ground:
        raise BudgetExceeded(
            f"vertex decomposability limited to {max_ground} vertices, got {cx.ground}")
    if len(cx.facets) <= 1:
        return True  # void, {0}, or a simplex
    key = _normalized_facets(cx)
    hit = _vd_cache.get(key)
    if hit is not None:
        return hit
    result = False
    for x in _shedding_candidates(cx):
        if (is_vertex_decomposable(link(cx, 1 << x), max_ground)
                and is_vertex_decomposable(deletion(cx, x), max_ground)):
            result = True
            break
    _vd_cache.put(key, result)
    return result


def shedding_vertices(g: Graph, max_ground: int = VD_MAX_GROUND) -> tuple[int, ...]:
    """Shed(G): empty when G is not vertex decomposable, else the vertices x
    with vertex decomposable Delta(G - x) and Delta(G - N[x]) such that every
    maximal independent set of G - x stays maximal in G."""
    cx = independence_complex(g)
    if not is_vertex_decomposable(cx, max_ground):
        return ()
    out = []
    for x in _shedding_candidates(cx):
        if (is_vertex_decomposable(link(cx, 1 << x), max_ground)
                and is_vertex_decomposable(deletion(cx, x), max_ground)):
            out.append(x)
    return tuple(out)


def is_pure_vertex_decomposable(g: Graph, max_ground: int = VD_MAX_GROUND) -> bool:
    cx = independence_complex(g)
    return is_pure(cx) and is_vertex_decomposable(cx, max_ground)


@dataclass(frozen=True)
class ShedReport:
    vd: bool
    pure_vd: bool
    shedding: tuple[int, ...]

    def to_json(self) -> dict:
        return {"vd": self.vd, "pure_vd": self.pure_vd, "shedding": list(self.shedding)}


def shed_report(g: Graph, max_ground: int = VD_MAX_GROUND) -> ShedReport:
    cx = independence_complex(g)
    vd = is_vertex_decomposable(cx, max_ground)
    return ShedReport(
        vd=vd,
        pure_vd=vd and is_pure(cx),
        shedding=shedding_vertices(g, max_ground) if vd else (),
    )
