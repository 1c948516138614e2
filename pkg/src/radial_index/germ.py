"""Combinatorial model of a stratified germ (X, 0).

The model keeps only integers: the stratum poset with dimensions and the
normal-slice table ``n[i,j]``, the signed reduced Euler characteristic of the
Milnor fibre of a generic linear form on the normal slice of the closure of
``V_j`` at a point of ``V_i``.  Geometry never enters; each stored value's
derivation lives in the ``notes`` field.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field
from enum import Enum

from radial_index.errors import DomainError
from radial_index.poset import IncidenceTable, Pair, StratumId, StratumPoset


def parity(n: int) -> int:
    """``(-1)**n`` for any integer ``n``, negative included."""
    return -1 if n % 2 else 1


def slice_index(slice_dim: int, chi_generic_linear: int) -> int:
    """Index of a generic linear form on a normal slice of dimension ``slice_dim``."""
    return parity(slice_dim - 1) * (chi_generic_linear - 1)


def slice_reduced_chi(slice_dim: int, n_ij: int) -> int:
    """Reduced Euler characteristic recovered from a stored ``n[i,j]``."""
    return parity(slice_dim - 1) * n_ij


@dataclass(frozen=True)
class Violation:
    code: str
    message: str
    pair: Pair | None = None

    def __str__(self) -> str:
        return f"{self.code}: {self.message}"


@dataclass
class ValidationReport:
    label: str
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def lines(self) -> list[str]:
        if self.ok:
            return [f"{self.label}: valid"]
        return [f"{self.label}: {len(self.violations)} violation(s)"] + [f"  {v}" for v in self.violations]


@dataclass(frozen=True)
class StratifiedGermModel:
    poset: StratumPoset
    nij: IncidenceTable
    label: str = ""
    notes: str = ""

    @property
    def dimension(self) -> int:
        return max(self.poset.dim[s] for s in self.poset.strata)

    def slice_dim(self, i: StratumId, j: StratumId) -> int:
        return self.poset.dim[j] - self.poset.dim[i]

    def n(self, i: StratumId) -> int:
        """``n_i`` for the whole germ, i.e. ``n[i, top]``; needs a unique top stratum."""
        return self.nij[i, self.poset.top()]


class IndexKind(str, Enum):
    RADIAL_INDEX = "RadialIndex"
    EULER_OBSTRUCTION = "EulerObstruction"


@dataclass(frozen=True)
class IndexVector:
    """Values of ``ind`` or ``Eu`` of one 1-form on each stratum closure at 0."""

    kind: IndexKind
    values: Mapping[StratumId, int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", dict(self.values))

    def __getitem__(self, stratum: StratumId) -> int:
        return self.values[stratum]

    def as_tuple(self, poset: StratumPoset) -> tuple[int, ...]:
        return tuple(self.values[s] for s in poset.strata)

    @classmethod
    def from_sequence(cls, kind: IndexKind, poset: StratumPoset, values) -> IndexVector:
        values = list(values)
        if len(values) != len(poset):
            raise DomainError(f"expected {len(poset)} values, got {len(values)}")
        return cls(kind, dict(zip(poset.strata, values)))


class FibreKind(str, Enum):
    COMPLEX = "M_f"
    REAL_POSITIVE = "M_f+"
    REAL_NEGATIVE = "M_f-"
    GENERIC_LINEAR = "M_l"


@dataclass(frozen=True)
class MilnorData:
    chi: int
    fibre_kind: FibreKind
    ambient_dim: int

    @property
    def reduced(self) -> int:
        return self.chi - 1


def validate_germ(model: StratifiedGermModel) -> ValidationReport:
    """Check every invariant of the model; never raises."""
    report = ValidationReport(model.label or "germ")
    add = report.violations.append
    poset = model.poset
    known = set(poset.strata)

    if len(known) != len(poset.strata):
        add(Violation("duplicate stratum", "stratum ids are not distinct"))
    for s in poset.strata:
        d = poset.dim.get(s)
        if d is None:
            add(Violation("dimension absent", f"stratum {s!r} has no dimension", (s, s)))
        elif not isinstance(d, int) or isinstance(d, bool) or d < 0:
            add(Violation("dimension invalid", f"stratum {s!r} has dimension {d!r}", (s, s)))
    for code, message, pair in poset.order_violations():
        add(Violation(code, message, pair))
    for i, j in sorted(poset.order, key=repr):
        di, dj = poset.dim.get(i), poset.dim.get(j)
        if isinstance(di, int) and isinstance(dj, int) and di >= dj:
            add(Violation("dimension monotonicity", f"{i!r} < {j!r} but dim {di} >= dim {dj}", (i, j)))

    minimal = [s for s in poset.minimal() if s in known]
    if len(minimal) != 1:
        add(Violation("minimal stratum", f"expected exactly one minimal stratum, found {len(minimal)}"))
    elif poset.dim.get(minimal[0]) != 0:
        add(Violation("minimal stratum", f"minimal stratum {minimal[0]!r} is not zero-dimensional"))

    for code, message, pair in model.nij.violations(poset):
        add(Violation(code, message, pair))
    return report


def germ_k_lines(k: int) -> StratifiedGermModel:
    """``k`` lines through the origin of the plane: the point below the punctured lines."""
    if k < 1:
        raise DomainError("k must be at least 1")
    # generic linear form meets the k lines in k points
    n01 = slice_index(1, k)
    poset = StratumPoset.from_covers(["V0", "V1"], {"V0": 0, "V1": 1}, [("V0", "V1")])
    table = IncidenceTable({("V0", "V0"): 1, ("V1", "V1"): 1, ("V0", "V1"): n01})
    return StratifiedGermModel(
        poset,
        table,
        label=f"{k}-lines",
        notes=f"n[V0,V1] = (-1)^0 * (chi(k points) - 1) = {n01}; open stratum has {k} components",
    )


def germ_smooth(n: int) -> StratifiedGermModel:
    """Smooth ``C^n`` stratified as the origin below its complement."""
    if n < 1:
        raise DomainError("n must be at least 1")
    poset = StratumPoset.from_covers(["V0", "V1"], {"V0": 0, "V1": n}, [("V0", "V1")])
    table = IncidenceTable({("V0", "V0"): 1, ("V1", "V1"): 1, ("V0", "V1"): slice_index(n, 1)})
    return StratifiedGermModel(
        poset, table, label=f"smooth-C{n}", notes="generic linear fibre on C^n is a ball, chi = 1"
    )
