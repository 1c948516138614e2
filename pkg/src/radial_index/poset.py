"""Finite posets of strata and inversion of unit-diagonal incidence functions.

A stratum poset records the strata of a stratified germ together with their
dimensions and the strict order ``i < j`` (``V_i`` lies in the closure of
``V_j``).  Incidence functions are integer tables on the comparable pairs
``i <= j``; a table with ones on the diagonal is invertible in the incidence
algebra, and the inverse is computed two ways: by recursion along a linear
extension and by the alternating sum over strictly increasing chains.
"""

from __future__ import annotations

from collections.abc import Hashable, Iterable, Mapping
from dataclasses import dataclass, field
from graphlib import CycleError, TopologicalSorter

from radial_index.errors import DomainError, StructureError, checked

StratumId = Hashable
Pair = tuple[StratumId, StratumId]


def transitive_closure(pairs: Iterable[Pair]) -> frozenset[Pair]:
    closure = set(pairs)
    successors: dict[StratumId, set[StratumId]] = {}
    for i, j in closure:
        successors.setdefault(i, set()).add(j)
    for start in list(successors):
        stack = list(successors[start])
        seen: set[StratumId] = set()
        while stack:
            k = stack.pop()
            if k in seen:
                continue
            seen.add(k)
            closure.add((start, k))
            stack.extend(successors.get(k, ()))
    return frozenset(closure)


@dataclass(frozen=True)
class StratumPoset:
    """Strata, their (complex) dimensions and the strict order ``i < j``.

    The constructor stores exactly what it is given so that malformed input
    can still be reported by validation.  Use :meth:`from_covers` to build a
    poset from covering relations; it closes the order transitively and
    rejects cycles.
    """

    strata: tuple[StratumId, ...]
    dim: Mapping[StratumId, int]
    order: frozenset[Pair] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        object.__setattr__(self, "strata", tuple(self.strata))
        object.__setattr__(self, "dim", dict(self.dim))
        object.__setattr__(self, "order", frozenset(self.order))

    @classmethod
    def from_covers(
        cls,
        strata: Iterable[StratumId],
        dim: Mapping[StratumId, int],
        covers: Iterable[Pair] = (),
    ) -> StratumPoset:
        strata = tuple(strata)
        known = set(strata)
        covers = list(covers)
        for i, j in covers:
            if i not in known or j not in known:
                raise StructureError(f"cover ({i!r}, {j!r}) names an unknown stratum")
        order = transitive_closure(covers)
        cyclic = sorted((repr(i) for i, j in order if i == j))
        if cyclic:
            raise StructureError(f"order contains a cycle through {', '.join(cyclic)}")
        return cls(strata, dim, order)

    def __len__(self) -> int:
        return len(self.strata)

    def precedes(self, i: StratumId, j: StratumId) -> bool:
        return (i, j) in self.order

    def preceq(self, i: StratumId, j: StratumId) -> bool:
        return i == j or (i, j) in self.order

    def comparable_pairs(self) -> list[Pair]:
        """All pairs ``i <= j`` in the order of ``strata``."""
        return [(i, j) for i in self.strata for j in self.strata if self.preceq(i, j)]

    def below(self, j: StratumId) -> list[StratumId]:
        return [i for i in self.strata if self.preceq(i, j)]

    def between(self, i: StratumId, k: StratumId) -> list[StratumId]:
        """Strata ``j`` with ``i < j < k``."""
        return [j for j in self.strata if self.precedes(i, j) and self.precedes(j, k)]

    def minimal(self) -> list[StratumId]:
        return [j for j in self.strata if not any(self.precedes(i, j) for i in self.strata)]

    def maximal(self) -> list[StratumId]:
        return [i for i in self.strata if not any(self.precedes(i, j) for j in self.strata)]

    def top(self) -> StratumId:
        tops = self.maximal()
        if len(tops) != 1:
            raise StructureError(f"expected a unique maximal stratum, found {len(tops)}")
        return tops[0]

    def order_violations(self) -> list[tuple[str, str, Pair | None]]:
        """Violations of irreflexivity, antisymmetry and transitivity."""
        found = []
        known = set(self.strata)
        for i, j in sorted(self.order, key=repr):
            if i not in known or j not in known:
                found.append(("unknown stratum", f"order pair ({i!r}, {j!r}) names an unknown stratum", (i, j)))
            elif i == j:
                found.append(("irreflexivity", f"stratum {i!r} precedes itself", (i, j)))
            elif (j, i) in self.order:
                found.append(("antisymmetry", f"strata {i!r} and {j!r} precede each other", (i, j)))
        for i, j in sorted(self.order, key=repr):
            for j2, k in sorted(self.order, key=repr):
                if j == j2 and i != k and (i, k) not in self.order:
                    found.append(
                        ("transitivity", f"{i!r} < {j!r} < {k!r} but {i!r} < {k!r} is missing", (i, k))
                    )
        return found

    def require_order(self) -> None:
        violations = self.order_violations()
        if violations:
            raise StructureError("malformed order: " + "; ".join(f"{code}: {msg}" for code, msg, _ in violations))

    def linear_extension(self) -> list[StratumId]:
        """Strata sorted so that ``i < j`` implies ``i`` comes first."""
        sorter = TopologicalSorter({j: [] for j in self.strata})
        for i, j in self.order:
            sorter.add(j, i)
        try:
            sorter.prepare()
        except CycleError as exc:
            raise StructureError(f"order contains a cycle: {exc.args[1]!r}") from None
        position = {s: p for p, s in enumerate(self.strata)}
        result = []
        while sorter.is_active():
            ready = sorted(sorter.get_ready(), key=position.__getitem__)
            result.extend(ready)
            sorter.done(*ready)
        return result


@dataclass(frozen=True)
class IncidenceTable:
    """Integer function on the comparable pairs ``i <= j`` of a poset."""

    entries: Mapping[Pair, int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", dict(self.entries))

    def __getitem__(self, pair: Pair) -> int:
        return self.entries[pair]

    def get(self, i: StratumId, j: StratumId, default: int = 0) -> int:
        return self.entries.get((i, j), default)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IncidenceTable):
            return NotImplemented
        return self.entries == other.entries

    __hash__ = None  # type: ignore[assignment]

    def violations(self, poset: StratumPoset) -> list[tuple[str, str, Pair | None]]:
        found = []
        for i in poset.strata:
            if (i, i) not in self.entries:
                found.append(("diagonal entry absent", f"n[{i!r},{i!r}] is absent", (i, i)))
            elif self.entries[i, i] != 1:
                found.append(
                    ("diagonal entry not one", f"n[{i!r},{i!r}] = {self.entries[i, i]}, expected 1", (i, i))
                )
        for i, j in poset.comparable_pairs():
            if i != j and (i, j) not in self.entries:
                found.append(("entry absent", f"n[{i!r},{j!r}] is absent for comparable strata", (i, j)))
        for (i, j), value in self.entries.items():
            if not poset.preceq(i, j):
                found.append(("entry off the order", f"n[{i!r},{j!r}] given but {i!r} is not <= {j!r}", (i, j)))
            if not isinstance(value, int) or isinstance(value, bool):
                found.append(("non-integer entry", f"n[{i!r},{j!r}] = {value!r} is not an integer", (i, j)))
        return found


class InverseTable(IncidenceTable):
    """The incidence-algebra inverse ``m`` of an :class:`IncidenceTable`."""


def _require_table(poset: StratumPoset, n: IncidenceTable) -> None:
    problems = n.violations(poset)
    if problems:
        raise StructureError("invalid incidence table: " + "; ".join(f"{code}: {msg}" for code, msg, _ in problems))


def invert_incidence(poset: StratumPoset, n: IncidenceTable) -> InverseTable:
    """Solve ``sum_{i<=j<=k} n[i,j] m[j,k] = delta[i,k]`` for ``m``.

    ``m[k,k] = 1`` and, working downwards from ``k`` along a linear extension,
    ``m[i,k] = -sum_{i<j<=k} n[i,j] m[j,k]``.
    """
    poset.require_order()
    _require_table(poset, n)
    ext = poset.linear_extension()
    m: dict[Pair, int] = {}
    for k in ext:
        m[k, k] = 1
        for i in reversed(ext):
            if not poset.precedes(i, k):
                continue
            total = 0
            for j in poset.strata:
                if poset.precedes(i, j) and poset.preceq(j, k):
                    total = checked(total + checked(n[i, j] * m[j, k]))
            m[i, k] = checked(-total)
    return InverseTable(m)


def strict_chains(poset: StratumPoset, i: StratumId, j: StratumId) -> list[tuple[StratumId, ...]]:
    """Every strictly increasing chain ``i = k0 < k1 < ... < kr = j``, saturated or not."""
    if i == j:
        return [(i,)]
    chains: list[tuple[StratumId, ...]] = []

    def extend(path: tuple[StratumId, ...]) -> None:
        last = path[-1]
        for k in poset.strata:
            if k == j and poset.precedes(last, j):
                chains.append(path + (j,))
            elif poset.precedes(last, k) and poset.precedes(k, j):
                extend(path + (k,))

    extend((i,))
    return chains


def chain_sum_inverse(poset: StratumPoset, n: IncidenceTable, i: StratumId, j: StratumId) -> int:
    """``m[i,j]`` as the alternating sum of ``n`` along all chains from ``i`` to ``j``."""
    poset.require_order()
    if not poset.preceq(i, j):
        raise DomainError(f"{i!r} is not <= {j!r}")
    total = 0
    for chain in strict_chains(poset, i, j):
        r = len(chain) - 1
        term = -1 if r % 2 else 1
        for a, b in zip(chain, chain[1:]):
            term = checked(term * n[a, b])
        total = checked(total + term)
    return total


def incidence_matrix(poset: StratumPoset, table: IncidenceTable, order: list[StratumId] | None = None) -> list[list[int]]:
    """Upper-triangular matrix of ``table`` in a linear extension (zeros off the order)."""
    order = poset.linear_extension() if order is None else order
    return [[table.get(a, b) if poset.preceq(a, b) else 0 for b in order] for a in order]
