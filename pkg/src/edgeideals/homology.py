"""Reduced simplicial homology over a field, and the ring conditions built
on it: Reisner's Cohen-Macaulay criterion, Serre's condition (S_r), the
Serre index, 2-CM / 2-(S_r) at a vertex, and the sequential-CM skeleton
check.

Homology dimensions come from exact ranks of boundary matrices of the
augmented chain complex (the empty face is a generator in degree -1), so

    dim H~_i = f_i - rank d_i - rank d_{i+1}.

`reduced_homology` computes this directly from the facet list and is the
reference path.  `graph_homology` evaluates the same numbers for an
independence complex by first shrinking the graph: an isolated vertex
cones the complex (all reduced homology vanishes); a vertex w dominated
openly (N(v) <= N(w), v != w) can be deleted without changing any H~_i;
a vertex w dominated closedly (N[v] <= N[w]) splits the dimensions as
deletion plus shifted link.  The two domination rules are Mayer-Vietoris
rank identities over a field, and the fast path is tested against the
direct one.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import (
    SimplicialComplex,
    independence_complex,
    link,
    pure_skeleton,
)
from .covers import independence_number
from .errors import BudgetExceeded, ValidationError
from .graphs import Graph, _bits, delete_closed_neighborhood, delete_vertex, induced_subgraph_mask
from .linalg import rank_over
from .utils import LRUCache

HOMOLOGY_MAX_GROUND = 20


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: prime characteristic p, or 0 for the rationals."""

    characteristic: int = 2

    def __post_init__(self):
        if self.characteristic != 0 and not _is_prime(self.characteristic):
            raise ValidationError(f"characteristic {self.characteristic} is not prime")

    @property
    def name(self) -> str:
        if self.characteristic == 0:
            return "q"
        if self.characteristic == 2:
            return "gf2"
        return f"gf:{self.characteristic}"

    @staticmethod
    def parse(text: str) -> "FieldSpec":
        text = text.strip().lower()
        if text in ("q", "qq", "0", "rational", "rationals"):
            return FieldSpec(0)
        if text == "gf2":
            return FieldSpec(2)
        if text.startswith("gf:"):
            return FieldSpec(int(text[3:]))
        if text.startswith("gf"):
            return FieldSpec(int(text[2:]))
        raise ValidationError(f"cannot parse field {text!r}")


GF2 = FieldSpec(2)
RATIONALS = FieldSpec(0)
DEFAULT_FIELDS = (GF2, RATIONALS)


@dataclass(frozen=True)
class HomologyProfile:
    """Map degree -> dim H~_degree; degrees with zero homology are absent."""

    dims: tuple[tuple[int, int], ...]

    def dim(self, i: int) -> int:
        for d, v in self.dims:
            if d == i:
                return v
        return 0

    def as_dict(self) -> dict[int, int]:
        return dict(self.dims)

    def total(self) -> int:
        return sum(v for _, v in self.dims)

    def is_zero(self) -> bool:
        return not self.dims


def _profile(dims: dict[int, int]) -> HomologyProfile:
    return HomologyProfile(tuple(sorted((d, v) for d, v in dims.items() if v)))


_hom_cache = LRUCache(200_000)


def _normalized_facets(cx: SimplicialComplex) -> tuple[int, ...]:
    support = cx.support()
    pos = {v: i for i, v in enumerate(_bits(support))}
    out = []
    for f in cx.facets:
        m = 0
        for v in _bits(f):
            m |= 1 << pos[v]
        out.append(m)
    return tuple(sorted(out))


def _boundary_columns(faces_lower: list[int], faces_upper: list[int]) -> list[dict[int, int]]:
    index = {f: i for i, f in enumerate(faces_lower)}
    cols = []
    for f in faces_upper:
        col: dict[int, int] = {}
        sign = 1
        for v in _bits(f):
            col[index[f ^ (1 << v)]] = sign
            sign = -sign
        cols.append(col)
    return cols


def reduced_homology(cx: SimplicialComplex, field: FieldSpec = GF2,
                     max_ground: int = HOMOLOGY_MAX_GROUND) -> HomologyProfile:
    """Reduced homology dimensions of cx over the given field."""
    if cx.ground > max_ground:
        raise BudgetExceeded(
            f"homology limited to {max_ground} ground vertices, got {cx.ground}")
    if cx.is_void:
        return _profile({})
    key = ("H", _normalized_facets(cx), field.characteristic)
    hit = _hom_cache.get(key)
    if hit is not None:
        return hit
    by_dim = cx.faces_by_dim()
    top = max(by_dim)
    # rank of the augmentation map C_0 -> C_{-1} is 1 whenever a vertex exists
    ranks = {0: 1 if 0 in by_dim else 0}
    for i in range(1, top + 1):
        cols = _boundary_columns(by_dim[i - 1], by_dim[i])
        ranks[i] = rank_over(cols, field.characteristic)
    dims: dict[int, int] = {}
    dims[-1] = 1 - ranks[0]
    for i in range(0, top + 1):
        f_i = len(by_dim.get(i, ()))
        dims[i] = f_i - ranks.get(i, 0) - ranks.get(i + 1, 0)
    result = _profile(dims)
    _hom_cache.put(key, result)
    return result


# -- fast homology of independence complexes ---------------------------------

def _convolve(p1: HomologyProfile, p2: HomologyProfile) -> HomologyProfile:
    """Kunneth rule for the join: degrees add plus one."""
    dims: dict[int, int] = {}
    for i, a in p1.dims:
        for j, b in p2.dims:
            k = i + j + 1
            dims[k] = dims.get(k, 0) + a * b
    return _profile(dims)


def _shift(p: HomologyProfile, by: int) -> HomologyProfile:
    return HomologyProfile(tuple((d + by, v) for d, v in p.dims))


def _add(p1: HomologyProfile, p2: HomologyProfile) -> HomologyProfile:
    dims = dict(p1.dims)
    for d, v in p2.dims:
        dims[d] = dims.get(d, 0) + v
    return _profile(dims)


def _find_domination(g: Graph):
    """Return ('open'|'closed', w) for a dominated vertex w, or None."""
    closed = None
    for v in range(g.n):
        nv = g.adj[v]
        cv = nv | (1 << v)
        for w in range(g.n):
            if w == v:
                continue
            if nv & ~g.adj[w] == 0:
                return ("open", w)
            if closed is None and cv & ~(g.adj[w] | (1 << w)) == 0:
                closed = ("closed", w)
    return closed


def graph_homology(g: Graph, field: FieldSpec = GF2,
                   max_ground: int = HOMOLOGY_MAX_GROUND) -> HomologyProfile:
    """Reduced homology of the independence complex of g."""
    if g.n == 0:
        return _profile({-1: 1})
    if any(g.adj[v] == 0 for v in range(g.n)):
        return _profile({})
    key = ("G", g.n, g.adj, field.characteristic)
    hit = _hom_cache.get(key)
    if hit is not None:
        return hit
    comps = g.components()
    if len(comps) > 1:
        result = _profile({-1: 1})
        for comp in comps:
            result = _convolve(result, graph_homology(induced_subgraph_mask(g, comp),
                                                      field, max_ground))
    else:
        dom = _find_domination(g)
        if dom is not None:
            kind, w = dom
            del_part = graph_homology(delete_vertex(g, w), field, max_ground)
            if kind == "open":
                result = del_part
            else:
                lk = graph_homology(delete_closed_neighborhood(g, w), field, max_ground)
                result = _add(del_part, _shift(lk, 1))
        else:
            result = reduced_homology(independence_complex(g), field, max_ground)
    _hom_cache.put(key, result)
    return result


# -- ring conditions ----------------------------------------------------------

def is_cohen_macaulay(cx: SimplicialComplex, field: FieldSpec = GF2,
                      max_ground: int = HOMOLOGY_MAX_GROUND) -> bool:
    """Reisner's criterion: every link vanishes strictly below its dimension."""
    if cx.is_void:
        return True
    key = ("CM", _normalized_facets(cx), field.characteristic)
    hit = _hom_cache.get(key)
    if hit is not None:
        return hit
    result = True
    for face in sorted(cx.faces(), key=lambda f: f.bit_count()):
        lk = link(cx, face)
        profile = reduced_homology(lk, field, max_ground)
        if any(d < lk.dim for d, _ in profile.dims):
            result = False
            break
    _hom_cache.put(key, result)
    return result


def satisfies_serre(cx: SimplicialComplex, r: int, field: FieldSpec = GF2,
                    max_ground: int = HOMOLOGY_MAX_GROUND) -> bool:
    """Serre's condition (S_r) for the Stanley-Reisner ring of cx.

    For r >= 2 this is the link-vanishing criterion: with d = dim cx + 1,
    H~_i(link F) = 0 for every i <= r - 2 and every face F with
    |F| <= d - i - 2.  The i = -1 cases force purity.  (S_1) always holds,
    and r beyond d is clamped to the r = d condition, which is exactly
    Cohen-Macaulayness.
    """
    if r < 1:
        raise ValidationError("Serre condition needs r >= 1")
    if r == 1 or cx.is_void:
        return True
    d = cx.dim + 1
    reff = min(r, d) if d >= 2 else d
    key = ("S", reff, _normalized_facets(cx), field.characteristic)
    hit = _hom_cache.get(key)
    if hit is not None:
        return hit
    result = True
    for face in sorted(cx.faces(), key=lambda f: f.bit_count()):
        imax = min(reff - 2, d - face.bit_count() - 2)
        if imax < -1:
            continue
        profile = reduced_homology(link(cx, face), field, max_ground)
        if any(i <= imax and v for i, v in profile.dims):
            result = False
            break
    _hom_cache.put(key, result)
    return result


def serre_index(cx: SimplicialComplex, field: FieldSpec = GF2,
                max_ground: int = HOMOLOGY_MAX_GROUND) -> int:
    """Largest r <= dim+1 with (S_r); equals dim+1 iff Cohen-Macaulay."""
    d = max(cx.dim + 1, 0)
    best = 0
    for r in range(1, d + 1):
        if satisfies_serre(cx, r, field, max_ground):
            best = r
        else:
            break
    return best if d >= 1 else d


def is_2serre_at(g: Graph, x: int, r: int, field: FieldSpec = GF2,
                 max_ground: int = HOMOLOGY_MAX_GROUND) -> bool:
    """2-Serre's condition (S_r) with respect to x: G and G - x both satisfy
    (S_r) and the independence number does not drop."""
    if not 0 <= x < g.n:
        raise ValidationError(f"vertex {x} out of range")
    cx = independence_complex(g)
    if not satisfies_serre(cx, r, field, max_ground):
        return False
    gx = delete_vertex(g, x)
    if independence_number(g) != (independence_number(gx) if gx.n else 0):
        return False
    return satisfies_serre(independence_complex(gx), r, field, max_ground)


def is_2serre_at_via_links(g: Graph, x: int, r: int, field: FieldSpec = GF2,
                           max_ground: int = HOMOLOGY_MAX_GROUND) -> bool:
    """Equivalent route: G - x and G - N[x] satisfy (S_r) with
    alpha(G - x) = alpha(G - N[x]) + 1.  Used as a cross-check."""
    if not 0 <= x < g.n:
        raise ValidationError(f"vertex {x} out of range")
    gx = delete_vertex(g, x)
    gnx = delete_closed_neighborhood(g, x)
    ax = independence_number(gx) if gx.n else 0
    anx = independence_number(gnx) if gnx.n else 0
    if ax != anx + 1:
        return False
    return (satisfies_serre(independence_complex(gx), r, field, max_ground)
            and satisfies_serre(independence_complex(gnx), r, field, max_ground))


def is_2cm_at(g: Graph, x: int, field: FieldSpec = GF2,
              max_ground: int = HOMOLOGY_MAX_GROUND) -> bool:
    """2-Cohen-Macaulay with respect to x: G and G - x Cohen-Macaulay with
    the independence number unchanged."""
    if not 0 <= x < g.n:
        raise ValidationError(f"vertex {x} out of range")
    if not is_cohen_macaulay(independence_complex(g), field, max_ground):
        return False
    gx = delete_vertex(g, x)
    if independence_number(g) != (independence_number(gx) if gx.n else 0):
        return False
    return is_cohen_macaulay(independence_complex(gx), field, max_ground)


def is_sequentially_cm(cx: SimplicialComplex, field: FieldSpec = GF2,
                       max_ground: int = HOMOLOGY_MAX_GROUND) -> bool:
    """Sequentially Cohen-Macaulay via the pure-skeleton criterion."""
    if cx.is_void:
        return True
    return all(is_cohen_macaulay(pure_skeleton(cx, i), field, max_ground)
               for i in range(0, cx.dim + 1))


def homology_report(g: Graph, field: FieldSpec = GF2,
                    max_ground: int = HOMOLOGY_MAX_GROUND) -> dict:
    """JSON-ready summary for the independence complex of g."""
    cx = independence_complex(g)
    profile = reduced_homology(cx, field, max_ground)
    return {
        "field": field.name,
        "cm": is_cohen_macaulay(cx, field, max_ground),
        "serre_index": serre_index(cx, field, max_ground),
        "seq_cm": is_sequentially_cm(cx, field, max_ground),
        "homology": {str(d): v for d, v in profile.dims},
    }
