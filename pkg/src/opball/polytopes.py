"""Origin-symmetric polytopes with paired vertex and facet descriptions.

A SymmetricPolytope stores one canonical representative per {v, -v} pair, for
both vertices and facet functionals; a functional f encodes the slab
-1 <= f.x <= 1. Conversion between the two descriptions is exact vertex
enumeration by the double description method on the homogenization cone,
run over primitive integer vectors.

The polar swap (vertices of the dual ball are the facet functionals of the
primal and vice versa) turns facet enumeration of a convex hull into vertex
enumeration, so one core routine serves both directions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .linalg import (
    DimensionMismatchError,
    Vec,
    canonical_sign,
    dot,
    is_zero_vec,
    rank,
    vneg,
)


class NotFullDimensionalError(ValueError):
    """Generators do not span; the gauge of their hull is not a norm."""


def _primitive(entries: Sequence[Fraction]) -> tuple[int, ...]:
    """Scale a rational vector by a positive rational into a primitive integer
    vector (content 1). Direction is preserved."""
    den = 1
    for e in entries:
        d = e.denominator
        den = den // gcd(den, d) * d
    ints = [int(e * den) for e in entries]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    return tuple(ints)


def _dedupe_pairs(vectors: Iterable[Vec]) -> list[Vec]:
    seen = set()
    out = []
    for v in vectors:
        if is_zero_vec(v):
            continue
        c = canonical_sign(v)
        if c not in seen:
            seen.add(c)
            out.append(c)
    out.sort()
    return out


def enumerate_vertices(facet_reps: Sequence[Vec], dim: int) -> tuple[Vec, ...]:
    """Vertex representatives of {x : |f.x| <= 1 for every f in facet_reps}.

    Double description on the cone {(x, t) : +-f.x - t <= 0}: start from a
    simplicial subcone picked greedily in sorted row order, then insert the
    remaining halfspaces one at a time, keeping ray adjacency exact via
    zero-set bitmasks. Raises NotFullDimensionalError when the functionals do
    not span (the region would be unbounded).
    """
    reps = _dedupe_pairs(facet_reps)
    if rank(reps) != dim:
        raise NotFullDimensionalError("facet functionals do not span; region unbounded")
    rows: list[tuple[int, ...]] = []
    for f in reps:
        rows.append(_primitive(tuple(f) + (Fraction(-1),)))
        rows.append(_primitive(tuple(-x for x in f) + (Fraction(-1),)))
    rows.sort()
    d = dim + 1
    m = len(rows)

    # Greedy initial independent subset in sorted order.
    base_idx: list[int] = []
    taken: list[Vec] = []
    for i, r in enumerate(rows):
        cand = taken + [tuple(Fraction(x) for x in r)]
        if rank(cand) > len(taken):
            taken = cand
            base_idx.append(i)
            if len(base_idx) == d:
                break
    assert len(base_idx) == d  # guaranteed by the span check above

    # Initial rays: columns of -inverse(base rows), each tight on all base
    # rows but one.
    from .linalg import invert, mat

    inv = invert(mat([rows[i] for i in base_idx]))
    rays: list[tuple[int, ...]] = []
    for j in range(d):
        col = tuple(-inv[i][j] for i in range(d))
        rays.append(_primitive(col))

    def idot(a: tuple[int, ...], r: tuple[int, ...]) -> int:
        return sum(x * y for x, y in zip(a, r))

    base_set = set(base_idx)
    processed = list(base_idx)

    def zero_mask(r: tuple[int, ...]) -> int:
        mask = 0
        for i in processed:
            if idot(rows[i], r) == 0:
                mask |= 1 << i
        return mask

    masks = [zero_mask(r) for r in rays]

    for k in range(m):
        if k in base_set:
            continue
        a = rows[k]
        vals = [idot(a, r) for r in rays]
        plus = [i for i, v in enumerate(vals) if v > 0]
        if not plus:
            processed.append(k)
            bit = 1 << k
            for i, v in enumerate(vals):
                if v == 0:
                    masks[i] |= bit
            continue
        minus = [i for i, v in enumerate(vals) if v < 0]
        keep = [i for i, v in enumerate(vals) if v <= 0]
        new_rays: list[tuple[int, ...]] = []
        for p in plus:
            zp = masks[p]
            for q in minus:
                inter = zp & masks[q]
                if inter.bit_count() < d - 2:
                    continue
                adjacent = True
                for w in range(len(rays)):
                    if w != p and w != q and inter & ~masks[w] == 0:
                        adjacent = False
                        break
                if adjacent:
                    combo = tuple(
                        vals[p] * rays[q][j] - vals[q] * rays[p][j] for j in range(d)
                    )
                    new_rays.append(_primitive(combo))
        processed.append(k)
        bit = 1 << k
        rays = [rays[i] for i in keep] + new_rays
        kept_masks = []
        for i in keep:
            kept_masks.append(masks[i] | bit if vals[i] == 0 else masks[i])
        masks = kept_masks + [zero_mask(r) for r in new_rays]

    verts = []
    for r in rays:
        t = r[dim]
        assert t > 0  # bounded region: every extreme ray meets t = 1
        verts.append(tuple(Fraction(x, t) for x in r[:dim]))
    return tuple(_dedupe_pairs(verts))


def enumerate_facets(vertex_reps: Sequence[Vec], dim: int) -> tuple[Vec, ...]:
    """Facet functional representatives of conv(+-vertex_reps), via polarity:
    they are the vertices of {f : |f.v| <= 1 for all v}."""
    return enumerate_vertices(vertex_reps, dim)


@dataclass(frozen=True)
class SymmetricPolytope:
    """Full-dimensional origin-symmetric polytope.

    vertices and facets each hold the lexicographically larger member of every
    +- pair, sorted; together they form a consistent double description.
    """

    dim: int
    vertices: tuple[Vec, ...]
    facets: tuple[Vec, ...]

    def signed_vertices(self) -> tuple[Vec, ...]:
        return tuple(self.vertices) + tuple(vneg(v) for v in self.vertices)

    def signed_facets(self) -> tuple[Vec, ...]:
        return tuple(self.facets) + tuple(vneg(f) for f in self.facets)

    def is_vertex(self, x: Vec) -> bool:
        """Exact extreme-point membership: x or -x is a stored vertex."""
        if len(x) != self.dim:
            raise DimensionMismatchError("point dimension differs from polytope")
        if is_zero_vec(x):
            return False
        return canonical_sign(x) in set(self.vertices)

    def contains(self, x: Vec) -> bool:
        return all(abs(dot(f, x)) <= 1 for f in self.facets)

    def polar(self) -> "SymmetricPolytope":
        return SymmetricPolytope(self.dim, self.facets, self.vertices)

    def check_consistency(self) -> None:
        """Assert the double-description invariants: every vertex is on the
        boundary with a spanning active facet set, and dually for facets."""
        for v in self.vertices:
            active = [f for f in self.signed_facets() if dot(f, v) == 1]
            assert all(abs(dot(f, v)) <= 1 for f in self.facets), "vertex outside ball"
            assert rank(active) == self.dim, "vertex with non-spanning active facets"
        for f in self.facets:
            tight = [v for v in self.signed_vertices() if dot(f, v) == 1]
            assert rank(tight) == self.dim, "non-facet functional stored as facet"


def from_vertices(points: Sequence[Vec]) -> SymmetricPolytope:
    """Convex hull of points and their negatives, as a SymmetricPolytope.

    Duplicates and non-extreme generators are silently dropped. Raises
    NotFullDimensionalError when the symmetrized set does not span.
    """
    if not points:
        raise NotFullDimensionalError("no generator points")
    dim = len(points[0])
    if any(len(p) != dim for p in points):
        raise DimensionMismatchError("generator points of mixed dimensions")
    gens = _dedupe_pairs(points)
    if rank(gens) != dim:
        raise NotFullDimensionalError("generators are rank-deficient")
    facets = enumerate_facets(gens, dim)
    signed = tuple(facets) + tuple(vneg(f) for f in facets)
    verts = []
    for p in gens:
        active = [f for f in signed if dot(f, p) == 1]
        if rank(active) == dim:
            verts.append(p)
    return SymmetricPolytope(dim, tuple(sorted(verts)), facets)


def from_facets(functionals: Sequence[Vec]) -> SymmetricPolytope:
    """Polytope {x : |f.x| <= 1} from facet functionals (redundant ones dropped)."""
    if not functionals:
        raise NotFullDimensionalError("no facet functionals")
    dim = len(functionals[0])
    if any(len(f) != dim for f in functionals):
        raise DimensionMismatchError("functionals of mixed dimensions")
    verts = enumerate_vertices(functionals, dim)
    signed = tuple(verts) + tuple(vneg(v) for v in verts)
    facets = []
    for f in _dedupe_pairs(functionals):
        tight = [v for v in signed if dot(f, v) == 1]
        if rank(tight) == dim:
            facets.append(f)
    return SymmetricPolytope(dim, verts, tuple(sorted(facets)))


def to_facets(vertex_reps: Sequence[Vec], dim: int) -> tuple[Vec, ...]:
    return enumerate_facets(vertex_reps, dim)


def to_vertices(facet_reps: Sequence[Vec], dim: int) -> tuple[Vec, ...]:
    return enumerate_vertices(facet_reps, dim)
