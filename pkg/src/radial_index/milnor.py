"""Milnor numbers computed independently of the index formulas.

Two routes: the closed form for quasihomogeneous germs, and the dimension of
the local algebra modulo the Jacobian ideal, computed with exact rational
elimination on truncated monomial spaces.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement

from radial_index.errors import DomainError, NonIsolatedError
from radial_index.germ import parity
from radial_index.polynomial import Exponent, PolynomialGerm

DEFAULT_MAX_TRUNCATION = 40


@dataclass(frozen=True)
class QuasihomogeneousData:
    weights: tuple[int, ...]
    degree: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "weights", tuple(self.weights))
        if not self.weights or any(w <= 0 for w in self.weights) or self.degree <= 0:
            raise DomainError("weights and degree must be positive integers")

    def fits(self, f: PolynomialGerm) -> bool:
        """True when every monomial of ``f`` has weighted degree ``degree``."""
        if len(f.variables) != len(self.weights):
            return False
        return all(sum(w * a for w, a in zip(self.weights, e)) == self.degree for e in f.terms)


def milnor_quasihomogeneous(q: QuasihomogeneousData) -> int:
    """``prod(d / w_i - 1)`` as an exact integer."""
    product = Fraction(1)
    for w in q.weights:
        factor = Fraction(q.degree, w) - 1
        if factor < 0:
            raise DomainError("not an isolated quasihomogeneous singularity for these weights")
        product *= factor
    if product.denominator != 1:
        raise DomainError("not an isolated quasihomogeneous singularity for these weights")
    return int(product)


def monomials_below(nvars: int, t: int) -> list[Exponent]:
    """Exponent vectors of total degree ``< t`` in graded-lexicographic order."""
    result = []
    for deg in range(t):
        layer = []
        for combo in combinations_with_replacement(range(nvars), deg):
            e = [0] * nvars
            for v in combo:
                e[v] += 1
            layer.append(tuple(e))
        layer.sort(reverse=True)
        result.extend(layer)
    return result


def _rank(rows, column: dict[Exponent, int]) -> int:
    # incremental echelon form keyed on the lowest-order column of each row
    pivots: dict[int, dict[int, Fraction]] = {}
    for raw in rows:
        row = {column[e]: c for e, c in raw.items()}
        while row:
            lead = min(row)
            pivot = pivots.get(lead)
            if pivot is None:
                scale = row[lead]
                pivots[lead] = {k: v / scale for k, v in row.items()}
                break
            factor = row[lead]
            for k, v in pivot.items():
                new = row.get(k, 0) - factor * v
                if new:
                    row[k] = new
                else:
                    row.pop(k, None)
    return len(pivots)


def local_algebra_dimension(f: PolynomialGerm, t: int) -> int:
    """``dim Q[x] / (J(f) + m^t)`` for the Jacobian ideal ``J(f)``."""
    n = len(f.variables)
    basis = monomials_below(n, t)
    column = {e: k for k, e in enumerate(basis)}
    gradients = [f.partial(i) for i in range(n)]

    def rows():
        for u in basis:
            du = sum(u)
            for g in gradients:
                row = {}
                for e, c in g.items():
                    if du + sum(e) < t:
                        row[tuple(a + b for a, b in zip(u, e))] = c
                if row:
                    yield row

    return len(basis) - _rank(rows(), column)


def milnor_jacobian(f: PolynomialGerm, max_truncation: int = DEFAULT_MAX_TRUNCATION) -> int:
    """Milnor number of ``f`` at the origin.

    Truncations start at ``2 * deg f`` and grow by ``deg f``; the first
    dimension that repeats at two successive truncations is returned.
    """
    if not f.variables:
        raise DomainError("the germ needs at least one variable")
    deg = f.degree
    if deg == 0:
        raise NonIsolatedError("the zero germ has a non-isolated critical point")
    if max_truncation < 2 * deg:
        raise DomainError(f"max_truncation must be at least 2 * deg(f) = {2 * deg}")
    previous = None
    t = 2 * deg
    while t <= max_truncation:
        dim = local_algebra_dimension(f, t)
        if dim == previous:
            return dim
        previous = dim
        t += deg
    raise NonIsolatedError(
        f"non-isolated or truncation too small: dimension still changing at t = {t - deg} "
        f"(last value {previous})"
    )


def chi_hypersurface_fibre(n: int, mu: int) -> int:
    """Euler characteristic of the Milnor fibre of an isolated hypersurface germ on ``C^n``."""
    if n < 1 or mu < 0:
        raise DomainError("need n >= 1 and mu >= 0")
    return 1 + parity(n - 1) * mu

