"""Simplicial complexes as antichains of facet bitmasks.

Two degenerate complexes are distinct values here: the void complex (no
faces at all, empty facet tuple) and the empty complex {0} whose single
facet is the empty face.  Reduced homology and decomposability conventions
differ between them, so collapsing the two would corrupt join identities.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ValidationError
from .graphs import Graph, _bits
from .covers import maximal_independent_set_masks

VOID_FACETS: tuple[int, ...] = ()


def _antichain_max(masks) -> tuple[int, ...]:
    """Inclusion-maximal masks, ascending."""
    masks = sorted(set(masks), key=lambda m: (m.bit_count(), m), reverse=True)
    out: list[int] = []
    for m in masks:
        if not any(m & km == m for km in out):
            out.append(m)
    return tuple(sorted(out))


@dataclass(frozen=True)
class SimplicialComplex:
    ground: int
    facets: tuple[int, ...]

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def dim(self) -> int:
        """Max facet dimension; -1 for both {0} and the void complex."""
        if not self.facets:
            return -1
        return max(m.bit_count() for m in self.facets) - 1

    def support(self) -> int:
        m = 0
        for f in self.facets:
            m |= f
        return m

    def vertices(self) -> list[int]:
        return list(_bits(self.support()))

    def has_face(self, mask: int) -> bool:
        return any(mask & f == mask for f in self.facets)

    def faces(self) -> set[int]:
        """All faces as bitmasks (includes 0 unless void)."""
        seen: set[int] = set()
        stack = list(self.facets)
        while stack:
            f = stack.pop()
            if f in seen:
                continue
            seen.add(f)
            m = f
            while m:
                low = m & -m
                m ^= low
                sub = f ^ low
                if sub not in seen:
                    stack.append(sub)
        return seen

    def faces_by_dim(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for f in self.faces():
            out.setdefault(f.bit_count() - 1, []).append(f)
        for lst in out.values():
            lst.sort()
        return out

    def f_vector(self) -> dict[int, int]:
        return {d: len(fs) for d, fs in self.faces_by_dim().items()}


def make_complex(ground: int, face_masks) -> SimplicialComplex:
    """Complex generated by the given faces (maximalized)."""
    full = (1 << ground) - 1
    masks = list(face_masks)
    for m in masks:
        if m & ~full:
            raise ValidationError("face outside ground set")
    return SimplicialComplex(ground, _antichain_max(masks))


def void_complex(ground: int = 0) -> SimplicialComplex:
    return SimplicialComplex(ground, VOID_FACETS)


def empty_complex(ground: int = 0) -> SimplicialComplex:
    return SimplicialComplex(ground, (0,))


def full_simplex(n: int) -> SimplicialComplex:
    return SimplicialComplex(n, ((1 << n) - 1,))


def complex_from_faces(ground: int, faces) -> SimplicialComplex:
    masks = []
    for f in faces:
        m = 0
        for v in f:
            if not 0 <= v < ground:
                raise ValidationError(f"vertex {v} outside ground set")
            m |= 1 << v
        masks.append(m)
    return make_complex(ground, masks)


def independence_complex(g: Graph) -> SimplicialComplex:
    """Facets are the maximal independent sets of g."""
    return SimplicialComplex(g.n, tuple(sorted(maximal_independent_set_masks(g))))


def link(cx: SimplicialComplex, face_mask: int) -> SimplicialComplex:
    """Faces disjoint from F whose union with F lies in the complex."""
    if not cx.has_face(face_mask):
        raise ValidationError("link of a non-face")
    return make_complex(
        cx.ground, (f & ~face_mask for f in cx.facets if f & face_mask == face_mask))


def deletion(cx: SimplicialComplex, v: int) -> SimplicialComplex:
    """Faces avoiding the vertex v."""
    bit = 1 << v
    return make_complex(cx.ground, (f & ~bit for f in cx.facets))


def join(cx1: SimplicialComplex, cx2: SimplicialComplex) -> SimplicialComplex:
    """Join after shifting the second ground set past the first.

    {0} is the identity; a void factor gives the void complex.
    """
    ground = cx1.ground + cx2.ground
    facets = tuple(sorted(f1 | (f2 << cx1.ground)
                          for f1 in cx1.facets for f2 in cx2.facets))
    return SimplicialComplex(ground, facets)


def is_pure(cx: SimplicialComplex) -> bool:
    return len({f.bit_count() for f in cx.facets}) <= 1


def pure_skeleton(cx: SimplicialComplex, i: int) -> SimplicialComplex:
    """Complex generated by all i-dimensional faces."""
    if not -1 <= i <= cx.dim:
        raise ValidationError(f"skeleton dimension {i} out of range")
    if i == -1:
        return empty_complex(cx.ground)
    want = i + 1
    faces = {f for f in cx.faces() if f.bit_count() == want}
    return SimplicialComplex(cx.ground, tuple(sorted(faces)))


def reduced_euler_characteristic(cx: SimplicialComplex) -> int:
    """Sum of (-1)^dim over all faces, the empty face contributing -1."""
    total = 0
    for f in cx.faces():
        total += -1 if f.bit_count() % 2 == 0 else 1
    return total


# -- JSON --------------------------------------------------------------------

def complex_to_json(cx: SimplicialComplex) -> dict:
    return {
        "ground": cx.ground,
        "facets": [] if cx.is_void else [list(_bits(f)) for f in cx.facets],
        "void": cx.is_void,
    }


def complex_from_json(data: dict) -> SimplicialComplex:
    try:
        ground = int(data["ground"])
        if data.get("void", False):
            return void_complex(ground)
        return complex_from_faces(ground, data["facets"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ValidationError(f"malformed complex JSON: {exc}") from exc
