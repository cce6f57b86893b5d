"""Order complexes of finite lattices and their facet-level combinatorics.

A complex is stored by its facets only; lower faces are enumerated on
demand. For order complexes the facets are the maximal chains, which stay
tiny for book lattices even though face counts grow combinatorially.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidParamsError, NotPureError
from .lattice import FiniteLattice, book_lattice, maximal_chains
from .realization import BarycentricForm, RealizationPoint, to_function

__all__ = [
    "SimplicialComplex",
    "RidgeReport",
    "BookAnatomy",
    "order_complex",
    "f_vector",
    "dimension",
    "nonmanifold_ridges",
    "book_anatomy",
]


@dataclass(frozen=True)
class SimplicialComplex:
    """An abstract simplicial complex given by vertices and maximal faces."""

    vertices: tuple[str, ...]
    facets: tuple[frozenset[int], ...]

    def __post_init__(self):
        n = len(self.vertices)
        if not self.facets:
            raise InvalidParamsError("a complex needs at least one facet")
        covered = set()
        for fac in self.facets:
            if not fac:
                raise InvalidParamsError("facets must be nonempty")
            if any(v < 0 or v >= n for v in fac):
                raise InvalidParamsError("facet vertex index out of range")
            covered |= fac
        if covered != set(range(n)):
            raise InvalidParamsError("every vertex must appear in some facet")
        for f, g in itertools.combinations(self.facets, 2):
            if f <= g or g <= f:
                raise InvalidParamsError("facets must be pairwise non-nested")

    def to_json_dict(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "facets": sorted(sorted(fac) for fac in self.facets),
        }

    @classmethod
    def from_json_dict(cls, obj) -> "SimplicialComplex":
        if not isinstance(obj, dict) or "vertices" not in obj or "facets" not in obj:
            raise InvalidParamsError('complex JSON must have "vertices" and "facets" keys')
        return cls(
            vertices=tuple(obj["vertices"]),
            facets=tuple(frozenset(fac) for fac in obj["facets"]),
        )

    def __repr__(self) -> str:
        return f"SimplicialComplex({len(self.vertices)} vertices, {len(self.facets)} facets)"


@dataclass(frozen=True)
class RidgeReport:
    """A codimension-1 face together with the number of facets containing it."""

    ridge: frozenset[int]
    degree: int


@dataclass(frozen=True)
class BookAnatomy:
    """Spine, pages and spine barycenter of a book complex."""

    spine: frozenset[int]
    pages: tuple[frozenset[int], ...]
    spine_barycenter: RealizationPoint


def order_complex(L: FiniteLattice) -> SimplicialComplex:
    """The complex whose simplices are the chains of ``L``.

    Facets are the maximal chains; vertex indices coincide with lattice
    element indices.
    """
    return SimplicialComplex(
        vertices=L.elements,
        facets=tuple(frozenset(chain) for chain in maximal_chains(L)),
    )


def f_vector(K: SimplicialComplex) -> tuple[int, ...]:
    """Face counts (f_0, ..., f_dim), by enumerating facet subsets with dedup."""
    faces = set()
    for fac in K.facets:
        vs = sorted(fac)
        for r in range(1, len(vs) + 1):
            faces.update(itertools.combinations(vs, r))
    counts = [0] * (dimension(K) + 1)
    for face in faces:
        counts[len(face) - 1] += 1
    return tuple(counts)


def dimension(K: SimplicialComplex) -> int:
    return max(len(fac) for fac in K.facets) - 1


def nonmanifold_ridges(K: SimplicialComplex) -> tuple[RidgeReport, ...]:
    """All codimension-1 faces lying in three or more facets.

    Defined for pure complexes only; raises ``NotPureError`` otherwise.
    Such a ridge is a pinch: locally the complex is a fan of three or more
    sheets glued along it, which no manifold point allows.
    """
    sizes = {len(fac) for fac in K.facets}
    if len(sizes) > 1:
        raise NotPureError(sizes)
    size = sizes.pop()
    if size < 2:
        return ()
    ridges = set()
    for fac in K.facets:
        for v in fac:
            ridges.add(fac - {v})
    reports = []
    for ridge in sorted(ridges, key=sorted):
        degree = sum(1 for fac in K.facets if ridge <= fac)
        if degree >= 3:
            reports.append(RidgeReport(ridge, degree))
    return tuple(reports)


def book_anatomy(d: int, n: int) -> BookAnatomy:
    """Spine/pages decomposition of the (d, n) book complex.

    The spine is the chain of the n-independent elements (bottom, the b_j,
    top); each of the n pages is a maximal chain adding one atom. The spine
    barycenter puts weight 1/d on each of the d spine vertices.
    """
    if d < 2 or n < 1:
        raise InvalidParamsError(f"book anatomy needs d >= 2 and n >= 1, got d={d}, n={n}")
    L = book_lattice(d, n)
    K = order_complex(L)
    atom_set = set(L.atoms())
    spine_chain = tuple(x for x in range(L.size) if x not in atom_set)
    barycenter = to_function(
        BarycentricForm(L, spine_chain, (Fraction(1, d),) * len(spine_chain))
    )
    return BookAnatomy(
        spine=frozenset(spine_chain),
        pages=K.facets,
        spine_barycenter=barycenter,
    )
