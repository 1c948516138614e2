"""PL Morse theory on finite abstract simplicial complexes.

Every vertex of a complex with an injective height function is treated as a
singular point.  Its radial index is ``1 - chi(lower link)``: the lower link
plays the part of the negative Milnor fibre of the height at that vertex.
Summing these indices over all vertices recovers the Euler characteristic.
"""

from __future__ import annotations

import random
from collections.abc import Hashable, Iterable, Mapping
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations

from radial_index.errors import DomainError, StructureError

Vertex = Hashable
Simplex = frozenset


@dataclass(frozen=True)
class SimplicialComplex:
    vertices: tuple[Vertex, ...]
    simplices: frozenset[Simplex] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "simplices", frozenset(frozenset(s) for s in self.simplices))

    @classmethod
    def from_maximal(cls, maximal: Iterable[Iterable[Vertex]], vertices: Iterable[Vertex] | None = None) -> SimplicialComplex:
        """Face closure of the given simplices."""
        faces: set[Simplex] = set()
        order: list[Vertex] = [] if vertices is None else list(vertices)
        seen = set(order)
        for top in maximal:
            top = list(top)
            if len(set(top)) != len(top):
                raise StructureError(f"simplex {top!r} repeats a vertex")
            if not top:
                continue
            for v in top:
                if v not in seen:
                    seen.add(v)
                    order.append(v)
            for k in range(1, len(top) + 1):
                faces.update(frozenset(c) for c in combinations(top, k))
        faces.update(frozenset([v]) for v in order)
        return cls(tuple(order), frozenset(faces))

    @property
    def dimension(self) -> int:
        return max((len(s) - 1 for s in self.simplices), default=-1)

    def violations(self) -> list[str]:
        found = []
        known = set(self.vertices)
        for v in self.vertices:
            if frozenset([v]) not in self.simplices:
                found.append(f"vertex {v!r} is not a simplex")
        for s in self.simplices:
            if not s:
                found.append("the empty set is listed as a simplex")
                continue
            if not s <= known:
                found.append(f"simplex {sorted(s, key=repr)!r} uses unlisted vertices")
            for v in s:
                face = s - {v}
                if face and face not in self.simplices:
                    found.append(f"face {sorted(face, key=repr)!r} of {sorted(s, key=repr)!r} is missing")
        return sorted(set(found))

    def require_valid(self) -> None:
        problems = self.violations()
        if problems:
            raise StructureError("invalid simplicial complex: " + "; ".join(problems))

    def f_vector(self) -> list[int]:
        counts = [0] * (self.dimension + 1)
        for s in self.simplices:
            counts[len(s) - 1] += 1
        return counts


EMPTY = SimplicialComplex((), frozenset())


def euler_characteristic(K: SimplicialComplex) -> int:
    K.require_valid()
    return sum(-1 if len(s) % 2 == 0 else 1 for s in K.simplices)


@dataclass(frozen=True)
class HeightAssignment:
    height: Mapping[Vertex, Fraction]

    def __post_init__(self) -> None:
        values = {v: Fraction(h) for v, h in self.height.items()}
        if len(set(values.values())) != len(values):
            raise DomainError("heights must be injective on vertices")
        object.__setattr__(self, "height", values)

    def __getitem__(self, v: Vertex) -> Fraction:
        return self.height[v]

    def negated(self) -> HeightAssignment:
        return HeightAssignment({v: -h for v, h in self.height.items()})

    @classmethod
    def from_seed(cls, vertices: Iterable[Vertex], seed: int) -> HeightAssignment:
        """Deterministic injective heights: a seeded shuffle of ``0..n-1`` over ``n``."""
        vertices = list(vertices)
        rng = random.Random(seed)
        ranks = list(range(len(vertices)))
        rng.shuffle(ranks)
        return cls({v: Fraction(r, max(len(vertices), 1)) for v, r in zip(vertices, ranks)})


def _require_heights(K: SimplicialComplex, h: HeightAssignment) -> None:
    missing = [v for v in K.vertices if v not in h.height]
    if missing:
        raise DomainError(f"no height for vertices {missing!r}")


def link(K: SimplicialComplex, v: Vertex) -> SimplicialComplex:
    if v not in K.vertices:
        raise DomainError(f"unknown vertex {v!r}")
    faces = {s - {v} for s in K.simplices if v in s and len(s) > 1}
    verts = [w for w in K.vertices if frozenset([w]) in faces]
    return SimplicialComplex(tuple(verts), frozenset(faces))


def lower_link(K: SimplicialComplex, v: Vertex, h: HeightAssignment) -> SimplicialComplex:
    """Part of the link of ``v`` spanned by strictly lower vertices."""
    if v not in K.vertices:
        raise DomainError(f"unknown vertex {v!r}")
    _require_heights(K, h)
    level = h[v]
    faces = {s - {v} for s in K.simplices if v in s and len(s) > 1 and all(h[w] < level for w in s - {v})}
    verts = [w for w in K.vertices if frozenset([w]) in faces]
    return SimplicialComplex(tuple(verts), frozenset(faces))


def pl_radial_index(K: SimplicialComplex, v: Vertex, h: HeightAssignment) -> int:
    return 1 - euler_characteristic(lower_link(K, v, h))


@dataclass(frozen=True)
class PoincareHopfReport:
    indices: Mapping[Vertex, int]
    sum_of_indices: int
    chi: int

    @property
    def equal(self) -> bool:
        return self.sum_of_indices == self.chi

    def line(self) -> str:
        return f"sum={self.sum_of_indices} chi={self.chi} {'OK' if self.equal else 'FAIL'}"


def poincare_hopf_check(K: SimplicialComplex, h: HeightAssignment) -> PoincareHopfReport:
    K.require_valid()
    _require_heights(K, h)
    indices = {v: pl_radial_index(K, v, h) for v in K.vertices}
    return PoincareHopfReport(indices, sum(indices.values()), euler_characteristic(K))


@dataclass(frozen=True)
class SuspensionReport:
    chi_link: int
    index_min: int
    index_max: int
    sum_of_indices: int
    chi_suspension: int

    @property
    def equal(self) -> bool:
        return self.sum_of_indices == self.chi_suspension


def suspension_check(chi_Y: int) -> SuspensionReport:
    """Index bookkeeping for the height on a suspension with poles at the extremes.

    The lower link of the south pole is empty and that of the north pole is the
    whole of ``Y``; every other vertex has a contractible lower link (a cone)
    and contributes nothing.
    """
    index_min = 1 - 0
    index_max = 1 - chi_Y
    return SuspensionReport(chi_Y, index_min, index_max, index_min + index_max, 2 - chi_Y)


# constructions used by fixtures and property tests


def cone(K: SimplicialComplex, apex: Vertex = "apex") -> SimplicialComplex:
    if apex in K.vertices:
        raise DomainError(f"apex {apex!r} is already a vertex")
    simplices = set(K.simplices) | {s | {apex} for s in K.simplices} | {frozenset([apex])}
    return SimplicialComplex(K.vertices + (apex,), frozenset(simplices))


def suspension(K: SimplicialComplex, poles: tuple[Vertex, Vertex] = ("south", "north")) -> SimplicialComplex:
    simplices = set(K.simplices)
    for p in poles:
        if p in K.vertices:
            raise DomainError(f"pole {p!r} is already a vertex")
        simplices |= {s | {p} for s in K.simplices} | {frozenset([p])}
    return SimplicialComplex(K.vertices + tuple(poles), frozenset(simplices))


def barycentric_subdivision(K: SimplicialComplex) -> SimplicialComplex:
    """Vertices are the simplices of ``K``; simplices are chains under inclusion."""
    K.require_valid()
    ordered = sorted(K.simplices, key=lambda s: (len(s), sorted(map(repr, s))))
    faces: set[frozenset] = set()
    for top in (s for s in ordered if not any(s < t for t in K.simplices)):
        for perm in permutations(sorted(top, key=repr)):
            flag = [frozenset(perm[: k + 1]) for k in range(len(perm))]
            for r in range(1, len(flag) + 1):
                faces.update(frozenset(c) for c in combinations(flag, r))
    return SimplicialComplex(tuple(ordered), frozenset(faces))


def disjoint_union(*complexes: SimplicialComplex) -> SimplicialComplex:
    vertices: list = []
    simplices: set = set()
    for k, K in enumerate(complexes):
        vertices.extend((k, v) for v in K.vertices)
        simplices.update(frozenset((k, v) for v in s) for s in K.simplices)
    return SimplicialComplex(tuple(vertices), frozenset(simplices))


def glue(K: SimplicialComplex, identify: Mapping[Vertex, Vertex]) -> SimplicialComplex:
    """Quotient by a vertex map; collapsed simplices drop to their images."""
    vertices = []
    for v in K.vertices:
        if identify.get(v, v) not in vertices:
            vertices.append(identify.get(v, v))
    images = ({identify.get(v, v) for v in s} for s in K.simplices)
    return SimplicialComplex.from_maximal(images, vertices)

