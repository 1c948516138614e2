"""Closed-form relations between radial indices, Euler obstructions and Milnor fibres.

Every function here is a pure integer function of supplied Euler
characteristics.  Sign conventions all go through :func:`parity`.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass

from radial_index.errors import DomainError, checked
from radial_index.germ import IndexKind, IndexVector, StratifiedGermModel, parity, slice_reduced_chi
from radial_index.poset import StratumId, invert_incidence, strict_chains

__all__ = [
    "LocalSingularPointDatum",
    "ResolutionDatum",
    "aggregate_radial_index",
    "complex_from_real_index",
    "complex_index_of_df",
    "eu_df_full_expansion",
    "eu_of_df",
    "euler_obstruction_via_corollary",
    "index_obstruction_gap",
    "index_vector_of_df",
    "parity",
    "radial_index_via_theorem4",
    "real_index_of_df",
    "resolution_obstruction",
]


@dataclass(frozen=True)
class LocalSingularPointDatum:
    """A zero of the radial-at-origin perturbation away from the origin."""

    stratum_dim: int
    local_index: int

    def __post_init__(self) -> None:
        if self.stratum_dim < 1:
            raise DomainError("listed singular points lie on strata of positive dimension")


@dataclass(frozen=True)
class ResolutionDatum:
    n: int
    chi_D: int


def aggregate_radial_index(points: Iterable[LocalSingularPointDatum]) -> int:
    """Radial index as 1 (the radial origin) plus the indices of the remaining zeros."""
    total = 1
    for point in points:
        total = checked(total + point.local_index)
    return total


def complex_from_real_index(n: int, real_index: int) -> int:
    return parity(n) * real_index


def real_index_of_df(chi_negative_fibre: int) -> int:
    """Index of ``df`` on a real germ from the negative Milnor fibre."""
    return -(chi_negative_fibre - 1)


def complex_index_of_df(n: int, chi_fibre: int) -> int:
    """Complex index of ``df`` on a pure ``n``-dimensional germ from ``chi(M_f)``."""
    return parity(n - 1) * (chi_fibre - 1)


def index_obstruction_gap(n: int, chi_generic_linear: int) -> int:
    """``ind - Eu``, the same for every 1-form on an isolated singularity."""
    return parity(n - 1) * (chi_generic_linear - 1)


def eu_of_df(n: int, chi_generic_linear: int, chi_fibre: int) -> int:
    return parity(n) * (chi_generic_linear - chi_fibre)


def _require_kind(vector: IndexVector, kind: IndexKind) -> None:
    if vector.kind != kind:
        raise DomainError(f"expected a {kind.value} vector, got {vector.kind.value}")


def _require_complete(germ: StratifiedGermModel, vector: IndexVector) -> None:
    missing = [s for s in germ.poset.strata if s not in vector.values]
    if missing:
        raise DomainError(f"no value for strata {', '.join(map(repr, missing))}")


def radial_index_via_theorem4(germ: StratifiedGermModel, eu: IndexVector) -> IndexVector:
    """``ind`` on each closure: ``ind_j = sum_{i<=j} n[i,j] * Eu_i``."""
    _require_kind(eu, IndexKind.EULER_OBSTRUCTION)
    _require_complete(germ, eu)
    poset = germ.poset
    poset.require_order()
    values = {}
    for j in poset.strata:
        total = 0
        for i in poset.below(j):
            total = checked(total + checked(germ.nij[i, j] * eu[i]))
        values[j] = total
    return IndexVector(IndexKind.RADIAL_INDEX, values)


def euler_obstruction_via_corollary(germ: StratifiedGermModel, ind: IndexVector) -> IndexVector:
    """``Eu`` on each closure: ``Eu_j = sum_{i<=j} m[i,j] * ind_i`` with ``m`` the inverse of ``n``."""
    _require_kind(ind, IndexKind.RADIAL_INDEX)
    _require_complete(germ, ind)
    poset = germ.poset
    poset.top()
    m = invert_incidence(poset, germ.nij)
    values = {}
    for j in poset.strata:
        total = 0
        for i in poset.below(j):
            total = checked(total + checked(m[i, j] * ind[i]))
        values[j] = total
    return IndexVector(IndexKind.EULER_OBSTRUCTION, values)


def index_vector_of_df(germ: StratifiedGermModel, chi_f_on_closures: Mapping[StratumId, int]) -> IndexVector:
    """Complex index of ``df`` on every closure, from ``chi(M_{f|closure})``.

    The zero-dimensional stratum carries an empty fibre (``chi = 0``), which
    gives index 1 there; a missing entry for it is filled in.
    """
    chis = _closure_chis(germ, chi_f_on_closures)
    return IndexVector(
        IndexKind.RADIAL_INDEX,
        {s: complex_index_of_df(germ.poset.dim[s], chis[s]) for s in germ.poset.strata},
    )


def _closure_chis(germ: StratifiedGermModel, chi_f_on_closures: Mapping[StratumId, int]) -> dict:
    chis = dict(chi_f_on_closures)
    for s in germ.poset.strata:
        if germ.poset.dim[s] == 0:
            value = chis.setdefault(s, 0)
            if value != 0:
                raise DomainError(f"a function on the point {s!r} has an empty Milnor fibre, chi = 0, not {value}")
        elif s not in chis:
            raise DomainError(f"no Milnor fibre Euler characteristic for the closure of {s!r}")
    return chis


def eu_df_full_expansion(germ: StratifiedGermModel, chi_f_on_closures: Mapping[StratumId, int]) -> int:
    """``Eu_X df`` from Milnor fibres on closures and generic-linear slice data.

    Evaluates ``(-1)^(dim X - 1) * sum_i rchi(f|closure_i) * C(i, q)`` where
    ``C(i, q)`` sums over strict chains ``i = k0 < ... < kr = q`` the products
    of the slice reduced Euler characteristics (``C(q, q) = 1``).
    """
    poset = germ.poset
    q = poset.top()
    poset.require_order()
    chis = _closure_chis(germ, chi_f_on_closures)
    total = 0
    for i in poset.below(q):
        chain_total = 0
        for chain in strict_chains(poset, i, q):
            term = 1
            for a, b in zip(chain, chain[1:]):
                term = checked(term * slice_reduced_chi(germ.slice_dim(a, b), germ.nij[a, b]))
            chain_total = checked(chain_total + term)
        total = checked(total + checked((chis[i] - 1) * chain_total))
    return checked(parity(poset.dim[q] - 1) * total)


def resolution_obstruction(datum: ResolutionDatum, ind: int) -> int:
    """Obstruction on a resolution: ``ind + (-1)^n (chi(D) - 1)``."""
    return ind + parity(datum.n) * (datum.chi_D - 1)
