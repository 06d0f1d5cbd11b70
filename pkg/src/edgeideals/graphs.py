"""Finite simple graphs and the graph constructions used throughout.

Vertices are dense 0-based indices; adjacency is stored as one bitmask per
vertex (bit u of ``adj[v]`` set iff uv is an edge).  Optional labels keep
track of 1-based names from figures and of original indices after surgery.
All operations return new graphs; nothing mutates.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import ValidationError


def _bits(mask: int):
    """Yield the set bit positions of mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1 with bitmask adjacency."""

    n: int
    adj: tuple[int, ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.n < 0:
            raise ValidationError("negative vertex count")
        if len(self.adj) != self.n:
            raise ValidationError("adjacency length != n")
        full = (1 << self.n) - 1
        for v, m in enumerate(self.adj):
            if m & ~full:
                raise ValidationError(f"neighbor index out of range at vertex {v}")
            if m >> v & 1:
                raise ValidationError(f"loop at vertex {v}")
        for v in range(self.n):
            for u in _bits(self.adj[v]):
                if not self.adj[u] >> v & 1:
                    raise ValidationError(f"asymmetric adjacency {v},{u}")
        if self.labels is not None and len(self.labels) != self.n:
            raise ValidationError("labels length != n")

    # -- elementary queries ------------------------------------------------

    def neighbors(self, v: int) -> set[int]:
        return set(_bits(self.adj[v]))

    def closed_neighborhood_mask(self, v: int) -> int:
        return self.adj[v] | (1 << v)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self.adj[u]) if u < v]

    def edge_count(self) -> int:
        return sum(self.degree(v) for v in range(self.n)) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= self.adj[v]
            frontier = nxt & ~seen
            seen |= frontier
        return seen == (1 << self.n) - 1

    def components(self) -> list[int]:
        """Vertex masks of the connected components, sorted by lowest vertex."""
        rem = (1 << self.n) - 1
        out = []
        while rem:
            v = (rem & -rem).bit_length() - 1
            comp = 1 << v
            frontier = comp
            while frontier:
                nxt = 0
                for u in _bits(frontier):
                    nxt |= self.adj[u]
                frontier = nxt & rem & ~comp
                comp |= frontier
            out.append(comp)
            rem &= ~comp
        return out


def new_graph(n: int, edges, labels=None) -> Graph:
    """Build a graph from an edge list; duplicate edges collapse."""
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValidationError(f"edge ({u},{v}) out of range for n={n}")
        if u == v:
            raise ValidationError(f"loop edge ({u},{v})")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj), tuple(labels) if labels is not None else None)


def _surgery_labels(g: Graph, kept: list[int]) -> tuple[str, ...]:
    # keep original labels when present, else record the original index
    return tuple(g.label(v) for v in kept)


def induced_subgraph(g: Graph, vertices) -> Graph:
    """Induced subgraph on the given vertex set, reindexed densely."""
    kept = sorted(set(vertices))
    for v in kept:
        if not 0 <= v < g.n:
            raise ValidationError(f"vertex {v} out of range")
    pos = {v: i for i, v in enumerate(kept)}
    keep_mask = mask_of(kept)
    adj = []
    for v in kept:
        m = 0
        for u in _bits(g.adj[v] & keep_mask):
            m |= 1 << pos[u]
        adj.append(m)
    return Graph(len(kept), tuple(adj), _surgery_labels(g, kept))


def induced_subgraph_mask(g: Graph, keep_mask: int) -> Graph:
    return induced_subgraph(g, _bits(keep_mask))


def delete_vertex(g: Graph, v: int) -> Graph:
    if not 0 <= v < g.n:
        raise ValidationError(f"vertex {v} out of range")
    return induced_subgraph(g, (u for u in range(g.n) if u != v))


def delete_closed_neighborhood(g: Graph, v: int) -> Graph:
    if not 0 <= v < g.n:
        raise ValidationError(f"vertex {v} out of range")
    closed = g.closed_neighborhood_mask(v)
    return induced_subgraph(g, (u for u in range(g.n) if not closed >> u & 1))


def add_pendant(g: Graph, v: int) -> Graph:
    """Attach one new degree-1 vertex to v (new vertex gets index n)."""
    if not 0 <= v < g.n:
        raise ValidationError(f"vertex {v} out of range")
    adj = list(g.adj) + [1 << v]
    adj[v] |= 1 << g.n
    labels = None
    if g.labels is not None:
        labels = g.labels + (f"{g.label(v)}'",)
    return Graph(g.n + 1, tuple(adj), labels)


def whisker_graph(g: Graph) -> Graph:
    """Attach one pendant vertex to every vertex of g."""
    out = g
    for v in range(g.n):
        out = add_pendant(out, v)
    return out


def disjoint_union(g: Graph, h: Graph) -> Graph:
    adj = list(g.adj) + [m << g.n for m in h.adj]
    labels = None
    if g.labels is not None or h.labels is not None:
        labels = tuple(g.label(v) for v in range(g.n)) + tuple(
            h.label(v) for v in range(h.n)
        )
    return Graph(g.n + h.n, tuple(adj), labels)


def cone(g: Graph) -> Graph:
    """New apex vertex 0 joined to every vertex of g (old v becomes v+1)."""
    adj = [((1 << g.n) - 1) << 1]
    for v in range(g.n):
        adj.append((g.adj[v] << 1) | 1)
    return Graph(g.n + 1, tuple(adj))


# -- standard small graphs -------------------------------------------------

def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def path_graph(n: int) -> Graph:
    return new_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValidationError("cycle needs at least 3 vertices")
    return new_graph(n, [(i, (i + 1) % n) for i in range(n)])


# -- rooted products and coronas -------------------------------------------

@dataclass(frozen=True)
class RootedFamily:
    """Base graph on m root vertices plus one rooted graph per root."""

    base: Graph
    attached: tuple[Graph, ...]
    roots: tuple[int, ...]
    star_condition: bool = False

    def __post_init__(self):
        if len(self.attached) != self.base.n or len(self.roots) != self.base.n:
            raise ValidationError("need one attached graph and root per base vertex")
        for h, r in zip(self.attached, self.roots):
            if not 0 <= r < h.n:
                raise ValidationError(f"root {r} out of range")


def rooted_product(fam: RootedFamily) -> Graph:
    """Glue each attached graph onto the base by identifying its root.

    The vertex set is the disjoint union of the attached graphs; base edges
    run between the identified roots.  When ``star_condition`` is set the
    result must come from >= 2 connected pieces and contain an edge.
    """
    m = fam.base.n
    if fam.star_condition:
        if m < 2:
            raise ValidationError("star condition: need at least 2 roots")
        for i, h in enumerate(fam.attached):
            if not h.is_connected():
                raise ValidationError(f"star condition: attached graph {i} disconnected")
    offsets = []
    total = 0
    for h in fam.attached:
        offsets.append(total)
        total += h.n
    edges = []
    labels = [""] * total
    for i, h in enumerate(fam.attached):
        off = offsets[i]
        for u, v in h.edges():
            edges.append((off + u, off + v))
        for v in range(h.n):
            if v == fam.roots[i]:
                labels[off + v] = f"x{i + 1}"
            else:
                labels[off + v] = f"h{i + 1}_{h.label(v)}"
    for i, j in fam.base.edges():
        edges.append((offsets[i] + fam.roots[i], offsets[j] + fam.roots[j]))
    out = new_graph(total, edges, labels)
    if fam.star_condition and out.edge_count() == 0:
        raise ValidationError("star condition: rooted product has no edges")
    return out


def corona(base: Graph, attached) -> Graph:
    """Corona of base with the given graphs: each base vertex is fully
    joined to its own attached graph.  Realized as the rooted product of
    the cones over the attached graphs."""
    attached = tuple(attached)
    if len(attached) != base.n:
        raise ValidationError("need one attached graph per base vertex")
    for h in attached:
        if h.n == 0:
            raise ValidationError("attached graphs must be nonempty")
    fam = RootedFamily(base, tuple(cone(h) for h in attached), (0,) * base.n)
    return rooted_product(fam)


@dataclass(frozen=True)
class CoronaSpec:
    """Multi-clique corona data: base graph plus clique sizes per vertex."""

    base: Graph
    cliques: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.cliques) != self.base.n:
            raise ValidationError("need one clique list per base vertex")
        for sizes in self.cliques:
            if len(sizes) == 0:
                raise ValidationError("every vertex needs at least one clique")
            if any(m < 1 for m in sizes):
                raise ValidationError("clique sizes must be positive")

    def total_vertices(self) -> int:
        return self.base.n + sum(sum(sizes) for sizes in self.cliques)

    def transform_vertices(self) -> int:
        return self.base.n + sum(2 * m - 1 for sizes in self.cliques for m in sizes)


def multi_clique_corona(spec: CoronaSpec) -> Graph:
    """Join each base vertex x_i to its cliques K_{m_{i,1}}, ..., K_{m_{i,n_i}}.

    Vertex layout: base vertices first, then clique vertices in (i, j, k)
    lexicographic order, labeled y{i}_{j}_{k} with 1-based i, j, k.
    """
    h = spec.base.n
    edges = list(spec.base.edges())
    labels = [f"x{i + 1}" for i in range(h)]
    nxt = h
    for i, sizes in enumerate(spec.cliques):
        for j, m in enumerate(sizes):
            block = list(range(nxt, nxt + m))
            nxt += m
            for k, v in enumerate(block):
                labels.append(f"y{i + 1}_{j + 1}_{k + 1}")
                edges.append((i, v))
            for u, v in itertools.combinations(block, 2):
                edges.append((u, v))
    return new_graph(nxt, edges, labels)


def multi_whisker_transform(spec: CoronaSpec) -> Graph:
    """The multi-whisker graph sharing all graded Betti numbers with the corona.

    From the corona, the last vertex of every clique is removed; each
    surviving clique vertex y{i}_{j}_{k} gets one whisker z{i}_{j}_{k} and
    each clique contributes one whisker z{i}_{j}_0 at its base vertex.
    """
    h = spec.base.n
    edges = list(spec.base.edges())
    labels = [f"x{i + 1}" for i in range(h)]
    nxt = h
    for i, sizes in enumerate(spec.cliques):
        for j, m in enumerate(sizes):
            ys = list(range(nxt, nxt + m - 1))
            nxt += m - 1
            for k, v in enumerate(ys):
                labels.append(f"y{i + 1}_{j + 1}_{k + 1}")
                edges.append((i, v))
            for u, v in itertools.combinations(ys, 2):
                edges.append((u, v))
            z0 = nxt
            nxt += m
            labels.append(f"z{i + 1}_{j + 1}_0")
            edges.append((i, z0))
            for k, v in enumerate(ys):
                labels.append(f"z{i + 1}_{j + 1}_{k + 1}")
                edges.append((v, z0 + 1 + k))
    return new_graph(nxt, edges, labels)


# -- JSON ------------------------------------------------------------------

def graph_to_json(g: Graph) -> dict:
    out = {"n": g.n, "edges": [[u, v] for u, v in g.edges()]}
    if g.labels is not None:
        out["labels"] = list(g.labels)
    return out


def graph_from_json(data: dict) -> Graph:
    try:
        n = int(data["n"])
        edges = [(int(u), int(v)) for u, v in data.get("edges", [])]
        labels = data.get("labels")
    except (KeyError, TypeError, ValueError) as exc:
        raise ValidationError(f"malformed graph JSON: {exc}") from exc
    return new_graph(n, edges, labels)


def corona_spec_to_json(spec: CoronaSpec) -> dict:
    return {
        "base": graph_to_json(spec.base),
        "cliques": [list(sizes) for sizes in spec.cliques],
    }


def corona_spec_from_json(data: dict) -> CoronaSpec:
    try:
        base = graph_from_json(data["base"])
        cliques = tuple(tuple(int(m) for m in sizes) for sizes in data["cliques"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ValidationError(f"malformed corona spec JSON: {exc}") from exc
    return CoronaSpec(base, cliques)


def rooted_family_to_json(fam: RootedFamily) -> dict:
    return {
        "base": graph_to_json(fam.base),
        "attached": [graph_to_json(h) for h in fam.attached],
        "roots": list(fam.roots),
    }


def rooted_family_from_json(data: dict) -> RootedFamily:
    try:
        base = graph_from_json(data["base"])
        attached = tuple(graph_from_json(h) for h in data["attached"])
        roots = tuple(int(r) for r in data["roots"])
        star = bool(data.get("star_condition", False))
    except (KeyError, TypeError, ValueError) as exc:
        raise ValidationError(f"malformed rooted family JSON: {exc}") from exc
    return RootedFamily(base, attached, roots, star)
