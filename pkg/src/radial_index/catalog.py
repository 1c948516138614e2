"""Built-in fixtures: stratified germs with Milnor data, and small complexes.

Every expected value carries a provenance note naming the oracle or the
source it was checked against.  ``verify_catalog`` recomputes each one.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field
from functools import cache

from radial_index.calculus import (
    eu_df_full_expansion,
    eu_of_df,
    euler_obstruction_via_corollary,
    index_vector_of_df,
    radial_index_via_theorem4,
)
from radial_index.germ import (
    StratifiedGermModel,
    germ_k_lines,
    germ_smooth,
    slice_index,
    validate_germ,
)
from radial_index.milnor import QuasihomogeneousData, chi_hypersurface_fibre, milnor_jacobian, milnor_quasihomogeneous
from radial_index.plmorse import (
    HeightAssignment,
    SimplicialComplex,
    cone,
    euler_characteristic,
    glue,
    poincare_hopf_check,
)
from radial_index.polynomial import PolynomialGerm
from radial_index.poset import IncidenceTable, StratumPoset

PH_SEEDS = (0, 1, 2)


@dataclass(frozen=True)
class Expectation:
    name: str
    value: int
    provenance: str


@dataclass(frozen=True)
class GermFunction:
    """A function germ on a catalog germ and what is known about it.

    ``chi`` gives ``chi(M_{f|closure})`` per stratum; when ``poly`` is set on a
    smooth germ the top value is computed by the Jacobian oracle instead.
    """

    label: str
    expected_eu: Expectation
    chi: Mapping[str, int] = field(default_factory=dict)
    poly: str | None = None
    weights: QuasihomogeneousData | None = None


@dataclass(frozen=True)
class GermEntry:
    label: str
    germ: StratifiedGermModel
    functions: tuple[GermFunction, ...] = ()
    expected: tuple[Expectation, ...] = ()
    chi_generic_linear: int | None = None
    notes: str = ""


@dataclass(frozen=True)
class ComplexEntry:
    label: str
    complex: SimplicialComplex
    expected_chi: Expectation
    notes: str = ""


# complexes


def circle() -> SimplicialComplex:
    return SimplicialComplex.from_maximal([["0", "1"], ["1", "2"], ["0", "2"]])


def octahedron() -> SimplicialComplex:
    tops = [[x, y, z] for x in ("+x", "-x") for y in ("+y", "-y") for z in ("+z", "-z")]
    return SimplicialComplex.from_maximal(tops)


def torus() -> SimplicialComplex:
    def v(i, j):
        return f"t{i % 3}{j % 3}"

    tops = []
    for i in range(3):
        for j in range(3):
            tops.append([v(i, j), v(i + 1, j), v(i + 1, j + 1)])
            tops.append([v(i, j), v(i, j + 1), v(i + 1, j + 1)])
    return SimplicialComplex.from_maximal(tops)


def wedge_of_two_circles() -> SimplicialComplex:
    return SimplicialComplex.from_maximal([["0", "1"], ["1", "2"], ["0", "2"], ["0", "3"], ["3", "4"], ["0", "4"]])


def two_points() -> SimplicialComplex:
    return SimplicialComplex.from_maximal([["a"], ["b"]])


def disc(name: str, sides: int = 6) -> SimplicialComplex:
    """Cone over a polygon: apex ``name:c``, boundary ``name:0 .. name:(sides-1)``."""
    rim = [f"{name}:{k}" for k in range(sides)]
    return SimplicialComplex.from_maximal(
        [[f"{name}:c", rim[k], rim[(k + 1) % sides]] for k in range(sides)]
    )


def four_lines_generic_slice() -> SimplicialComplex:
    """PL model of the generic linear Milnor fibre of ``xy(x-y)(x+zy) = 0`` at 0.

    The components ``x=0``, ``y=0``, ``x=y`` and ``x=-zy`` each cut a disc.
    All four discs meet at the point on the z-axis; ``x=0`` and ``x=-zy``
    meet again at the point on the y-axis.
    """
    pieces = [disc(name) for name in ("P1", "P2", "P3", "S")]
    simplices = set().union(*(p.simplices for p in pieces))
    vertices = tuple(v for p in pieces for v in p.vertices)
    union = SimplicialComplex(vertices, frozenset(simplices))
    # on S both marked points sit on the rim, opposite each other, so that no
    # edge joins them and the two discs share exactly two isolated points
    identify = {"P1:c": "p", "P2:c": "p", "P3:c": "p", "S:0": "p", "S:3": "P1:0"}
    return glue(union, identify)


# germs


def cone_over_plane_curve(d: int) -> StratifiedGermModel:
    """Cone in C^3 over a smooth plane curve of degree ``d``."""
    chi_l = 2 * d - d * d
    poset = StratumPoset.from_covers(["V0", "V1"], {"V0": 0, "V1": 2}, [("V0", "V1")])
    table = IncidenceTable({("V0", "V0"): 1, ("V1", "V1"): 1, ("V0", "V1"): slice_index(2, chi_l)})
    return StratifiedGermModel(
        poset,
        table,
        label=f"cone-degree-{d}",
        notes=(
            f"generic hyperplane slice = smooth curve of degree {d} minus its {d} points at infinity: "
            f"chi = (3d - d^2) - d = {chi_l}"
        ),
    )


def four_lines_surface() -> StratifiedGermModel:
    """The surface ``xy(x-y)(x+zy) = 0`` in C^3.

    The singular locus is the z-axis (four lines with moving cross ratio)
    together with the y-axis, where ``x = 0`` and ``x = -zy`` cross.
    """
    chi_slice = euler_characteristic(four_lines_generic_slice())
    strata = ["V0", "Vz", "Vy", "V2"]
    dims = {"V0": 0, "Vz": 1, "Vy": 1, "V2": 2}
    covers = [("V0", "Vz"), ("V0", "Vy"), ("Vz", "V2"), ("Vy", "V2")]
    entries = {(s, s): 1 for s in strata}
    entries.update(
        {
            ("V0", "Vz"): slice_index(1, 1),
            ("V0", "Vy"): slice_index(1, 1),
            ("Vz", "V2"): slice_index(1, 4),
            ("Vy", "V2"): slice_index(1, 2),
            ("V0", "V2"): slice_index(2, chi_slice),
        }
    )
    notes = (
        "n[V0,Vz] = n[V0,Vy] = 0: both axes are smooth lines. "
        "n[Vz,V2] = 3: transversal slice is four lines, M_l = 4 points. "
        "n[Vy,V2] = 1: transversal slice is two lines, M_l = 2 points. "
        f"n[V0,V2] = -(chi - 1) with chi = {chi_slice}, the Euler characteristic of the PL model "
        "four_lines_generic_slice(): four discs sharing the z-axis point, two of them also "
        "sharing the y-axis point."
    )
    return StratifiedGermModel(StratumPoset.from_covers(strata, dims, covers), IncidenceTable(entries), "four-lines-surface", notes)


def _linear_function(chi: Mapping[str, int]) -> GermFunction:
    return GermFunction(
        "l (generic linear)",
        Expectation("Eu_X dl", 0, "Euler obstruction of a generic linear form vanishes"),
        chi=chi,
    )


def _smooth_function(poly: str, weights: tuple[int, ...], degree: int) -> GermFunction:
    q = QuasihomogeneousData(weights, degree)
    return GermFunction(
        poly,
        Expectation(
            "Eu_X df",
            milnor_quasihomogeneous(q),
            f"Eu df = mu_f on a smooth germ; mu from prod(d/w - 1) with weights {weights}, d = {degree}",
        ),
        poly=poly,
        weights=q,
    )


@cache
def germ_entries() -> tuple[GermEntry, ...]:
    entries = [
        GermEntry(
            "smooth-C1",
            germ_smooth(1),
            (_smooth_function("x^2", (1,), 2), _smooth_function("x^3", (1,), 3), _smooth_function("x^5", (1,), 5)),
            (Expectation("n[V0,V1]", 0, "generic linear fibre on C^1 is one point"),),
            chi_generic_linear=1,
        ),
        GermEntry(
            "smooth-C2",
            germ_smooth(2),
            (_smooth_function("x^2+y^2", (1, 1), 2), _smooth_function("x^3+y^3", (1, 1), 3), _smooth_function("x^3+y^4", (4, 3), 12))
            + tuple(_smooth_function(f"x^{k + 1}+y^2", (2, k + 1), 2 * (k + 1)) for k in range(1, 7)),
            (Expectation("n[V0,V1]", 0, "generic linear fibre on C^2 is a disc"),),
            chi_generic_linear=1,
            notes="quadric and A_k germs (k = 1..6) on smooth C^2",
        ),
        GermEntry(
            "smooth-C3",
            germ_smooth(3),
            (_smooth_function("x^2+y^2+z^2", (1, 1, 1), 2), _smooth_function("x^3+y^3+z^3", (1, 1, 1), 3)),
            (Expectation("n[V0,V1]", 0, "generic linear fibre on C^3 is a ball"),),
            chi_generic_linear=1,
        ),
    ]
    for k in range(2, 7):
        entries.append(
            GermEntry(
                f"{k}-lines",
                germ_k_lines(k),
                (
                    _linear_function({"V1": k}),
                    GermFunction(
                        "x^2",
                        Expectation(
                            "Eu_X d(x^2)",
                            k,
                            "Nash transform of transverse smooth branches is their normalisation: "
                            "k discs with f = t^2, each contributing mu(t^2) = 1",
                        ),
                        chi={"V1": 2 * k},
                    ),
                ),
                (Expectation("n[V0,V1]", k - 1, f"generic linear fibre = {k} points, reduced chi {k - 1}"),),
                chi_generic_linear=k,
                notes="x^2 has 2 roots on each of the k generic lines",
            )
        )
    for d in (2, 3):
        chi_l = 2 * d - d * d
        entries.append(
            GermEntry(
                f"cone-degree-{d}",
                cone_over_plane_curve(d),
                (_linear_function({"V1": chi_l}),),
                (Expectation("n[V0,V1]", (d - 1) ** 2, "slice index -(chi(M_l) - 1) with chi(M_l) = 2d - d^2"),),
                chi_generic_linear=chi_l,
                notes="d = 2 is the quadric cone x^2 + y^2 + z^2 = 0",
            )
        )
    entries.append(
        GermEntry(
            "four-lines-surface",
            four_lines_surface(),
            (_linear_function({"Vz": 1, "Vy": 1, "V2": euler_characteristic(four_lines_generic_slice())}),),
            (
                Expectation("n[Vz,V2]", 3, "four lines in the transversal plane, M_l = 4 points"),
                Expectation("n[Vy,V2]", 1, "two transverse planes along the y-axis, M_l = 2 points"),
                Expectation(
                    "n[V0,V2]",
                    1,
                    "chi of the generic slice = 4 discs - 3 (z-axis point) - 1 (y-axis point) = 0, "
                    "checked against the PL model four_lines_generic_slice",
                ),
            ),
            notes="surface of lines with varying cross ratio; not an isolated singularity",
        )
    )
    return tuple(entries)


@cache
def complex_entries() -> tuple[ComplexEntry, ...]:
    base = [
        ("circle", circle(), 0, "boundary of a triangle: 3 - 3"),
        ("sphere", octahedron(), 2, "octahedron: 6 - 12 + 8"),
        ("torus", torus(), 0, "3x3 grid torus: 9 - 27 + 18"),
        ("wedge-two-circles", wedge_of_two_circles(), -1, "two triangles sharing a vertex: 5 - 6"),
        ("two-points", two_points(), 2, "two vertices"),
    ]
    entries = [ComplexEntry(label, K, Expectation("chi", chi, note)) for label, K, chi, note in base]
    for label, K, _, _ in base:
        entries.append(ComplexEntry(f"cone-{label}", cone(K), Expectation("chi", 1, "cones are contractible")))
    entries.append(
        ComplexEntry(
            "four-lines-slice",
            four_lines_generic_slice(),
            Expectation("chi", 0, "4 discs glued: 4 - (4 - 1) - (2 - 1) = 0"),
            notes="generic linear Milnor fibre of the four-lines surface",
        )
    )
    return tuple(entries)


def find_entry(label: str) -> GermEntry | ComplexEntry | None:
    for entry in germ_entries() + complex_entries():
        if entry.label == label:
            return entry
    return None


def closure_chis(entry: GermEntry, fn: GermFunction) -> dict[str, int]:
    """``chi(M_{f|closure})`` per stratum; the Jacobian oracle fills smooth tops."""
    chis = dict(fn.chi)
    if fn.poly is not None:
        top = entry.germ.poset.top()
        n = entry.germ.poset.dim[top]
        chis[top] = chi_hypersurface_fibre(n, milnor_jacobian(PolynomialGerm.parse(fn.poly)))
    return chis


@dataclass
class Check:
    subject: str
    name: str
    ok: bool
    detail: str

    def line(self) -> str:
        return f"[{'OK' if self.ok else 'FAIL'}] {self.subject}: {self.name} {self.detail}"


def verify_germ_entry(entry: GermEntry) -> list[Check]:
    germ = entry.germ
    poset = germ.poset
    report = validate_germ(germ)
    checks = [Check(entry.label, "valid", report.ok, "; ".join(map(str, report.violations)))]
    if not report.ok:
        return checks
    top = poset.top()
    n = poset.dim[top]
    for exp in entry.expected:
        i, j = exp.name[2:-1].split(",")
        got = germ.nij[i, j]
        checks.append(Check(entry.label, exp.name, got == exp.value, f"= {got} (expected {exp.value})"))
    isolated = entry.chi_generic_linear is not None and len(poset) == 2
    if isolated:
        bottom = poset.minimal()[0]
        built = slice_index(n, entry.chi_generic_linear)
        checks.append(
            Check(entry.label, "slice sign convention", built == germ.nij[bottom, top], f"n = {built} from chi(M_l) = {entry.chi_generic_linear}")
        )
    for fn in entry.functions:
        chis = closure_chis(entry, fn)
        ind = index_vector_of_df(germ, chis)
        eu = euler_obstruction_via_corollary(germ, ind)
        expansion = eu_df_full_expansion(germ, chis)
        values = [expansion, eu[top]]
        detail = f"expansion {expansion}, corollary {eu[top]}"
        if isolated:
            closed = eu_of_df(n, entry.chi_generic_linear, chis[top])
            values.append(closed)
            detail += f", closed form {closed}"
        if fn.weights is not None:
            mu = milnor_jacobian(PolynomialGerm.parse(fn.poly))
            values.append(mu)
            detail += f", mu {mu}"
        ok = all(v == fn.expected_eu.value for v in values)
        checks.append(Check(entry.label, f"f={fn.label}", ok, f"Eu = {fn.expected_eu.value} ({detail})"))
        back = radial_index_via_theorem4(germ, eu)
        checks.append(Check(entry.label, f"f={fn.label} round trip", back == ind, f"ind = {back.as_tuple(poset)}"))
    return checks


def verify_complex_entry(entry: ComplexEntry) -> list[Check]:
    K = entry.complex
    problems = K.violations()
    checks = [Check(entry.label, "valid", not problems, "; ".join(problems))]
    if problems:
        return checks
    chi = euler_characteristic(K)
    checks.append(Check(entry.label, "chi", chi == entry.expected_chi.value, f"= {chi} (expected {entry.expected_chi.value})"))
    sums = []
    for seed in PH_SEEDS:
        report = poincare_hopf_check(K, HeightAssignment.from_seed(K.vertices, seed))
        sums.append(report.sum_of_indices)
        checks.append(Check(entry.label, f"poincare-hopf seed={seed}", report.equal, report.line()))
    checks.append(Check(entry.label, "height independence", len(set(sums)) == 1, f"sums {sums}"))
    return checks


def verify_catalog() -> list[Check]:
    checks = []
    for entry in germ_entries():
        checks.extend(verify_germ_entry(entry))
    for entry in complex_entries():
        checks.extend(verify_complex_entry(entry))
    return checks
