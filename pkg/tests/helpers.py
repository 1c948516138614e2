"""Random generators shared by the property and acceptance tests."""

from __future__ import annotations

import random
from fractions import Fraction

from radial_index.germ import IndexKind, IndexVector, StratifiedGermModel
from radial_index.plmorse import HeightAssignment, SimplicialComplex
from radial_index.poset import IncidenceTable, StratumPoset, transitive_closure


def random_poset(rng: random.Random, max_strata: int = 8, unique_top: bool = True) -> StratumPoset:
    """A dimension-graded poset with a zero-dimensional bottom ``s0``.

    With ``unique_top`` the last stratum lies above everything else.
    """
    size = rng.randint(1, max_strata)
    strata = [f"s{k}" for k in range(size)]
    dims = {"s0": 0}
    for s in strata[1:]:
        dims[s] = rng.randint(1, 4)
    if unique_top and size > 1:
        dims[strata[-1]] = 5
    pairs = set()
    for i in strata:
        for j in strata:
            if dims[i] < dims[j] and rng.random() < 0.5:
                pairs.add((i, j))
    for s in strata[1:]:
        pairs.add(("s0", s))
        if unique_top and s != strata[-1]:
            pairs.add((s, strata[-1]))
    ordered = transitive_closure(pairs)
    rng.shuffle(strata)
    return StratumPoset(strata, dims, ordered)


def random_table(rng: random.Random, poset: StratumPoset, low: int = -5, high: int = 5) -> IncidenceTable:
    return IncidenceTable(
        {(i, j): 1 if i == j else rng.randint(low, high) for i, j in poset.comparable_pairs()}
    )


def random_germ(rng: random.Random, max_strata: int = 8) -> StratifiedGermModel:
    poset = random_poset(rng, max_strata)
    return StratifiedGermModel(poset, random_table(rng, poset), label="random")


def random_vector(rng: random.Random, germ: StratifiedGermModel, kind: IndexKind, bound: int = 20) -> IndexVector:
    values = {}
    for s in germ.poset.strata:
        values[s] = 1 if germ.poset.dim[s] == 0 else rng.randint(-bound, bound)
    return IndexVector(kind, values)


def random_complex(rng: random.Random, max_vertices: int = 12, max_dim: int = 3) -> SimplicialComplex:
    n = rng.randint(1, max_vertices)
    vertices = list(range(n))
    maximal = [rng.sample(vertices, rng.randint(1, min(max_dim + 1, n))) for _ in range(rng.randint(0, 2 * n))]
    return SimplicialComplex.from_maximal(maximal, vertices)


def random_heights(rng: random.Random, vertices) -> HeightAssignment:
    vertices = list(vertices)
    values = rng.sample(range(-50 * len(vertices) - 50, 50 * len(vertices) + 50), len(vertices))
    return HeightAssignment({v: Fraction(x, 7) for v, x in zip(vertices, values)})


def matmul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))] for i in range(len(a))]


def identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]
