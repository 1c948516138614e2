"""One test per acceptance criterion; all comparisons are exact integers."""

import random
import subprocess
import sys
import time
from fractions import Fraction

import pytest

from helpers import identity, matmul, random_complex, random_germ, random_heights, random_vector
from radial_index.calculus import (
    ResolutionDatum,
    complex_from_real_index,
    complex_index_of_df,
    eu_df_full_expansion,
    eu_of_df,
    euler_obstruction_via_corollary,
    index_vector_of_df,
    radial_index_via_theorem4,
    resolution_obstruction,
)
from radial_index.catalog import circle, closure_chis, complex_entries, germ_entries, octahedron, torus, wedge_of_two_circles
from radial_index.errors import NonIsolatedError
from radial_index.germ import IndexKind, IndexVector, germ_k_lines
from radial_index.milnor import QuasihomogeneousData, chi_hypersurface_fibre, milnor_jacobian, milnor_quasihomogeneous
from radial_index.plmorse import (
    HeightAssignment,
    SimplicialComplex,
    cone,
    disjoint_union,
    euler_characteristic,
    glue,
    pl_radial_index,
    poincare_hopf_check,
    suspension,
    suspension_check,
)
from radial_index.polynomial import PolynomialGerm
from radial_index.poset import chain_sum_inverse, incidence_matrix, invert_incidence

SEED = 20240601


def test_ac01_mobius_inversion_soundness():
    rng = random.Random(SEED)
    start = time.perf_counter()
    for _ in range(200):
        germ = random_germ(rng, max_strata=8)
        poset, n = germ.poset, germ.nij
        m = invert_incidence(poset, n)
        for i, j in poset.comparable_pairs():
            assert chain_sum_inverse(poset, n, i, j) == m[i, j]
        order = poset.linear_extension()
        N, M = incidence_matrix(poset, n, order), incidence_matrix(poset, m, order)
        assert matmul(N, M) == identity(len(order)) == matmul(M, N)
    assert time.perf_counter() - start < 5


def test_ac02_round_trip():
    rng = random.Random(SEED + 1)
    for _ in range(200):
        germ = random_germ(rng)
        eu = random_vector(rng, germ, IndexKind.EULER_OBSTRUCTION)
        assert euler_obstruction_via_corollary(germ, radial_index_via_theorem4(germ, eu)) == eu


def test_ac03_k_lines():
    for k in range(2, 7):
        germ = germ_k_lines(k)
        ind = radial_index_via_theorem4(germ, IndexVector(IndexKind.EULER_OBSTRUCTION, {"V0": 1, "V1": 0}))
        assert ind["V1"] == k - 1
        eu = euler_obstruction_via_corollary(germ, IndexVector(IndexKind.RADIAL_INDEX, {"V0": 1, "V1": k - 1}))
        assert eu["V1"] == 0


def test_ac04_milnor_oracles_agree():
    cases = [
        ("x^2+y^2", (1, 1), 2, 1),
        ("x^3+y^3", (1, 1), 3, 4),
        ("x^3+y^3+z^3", (1, 1, 1), 3, 8),
        ("x^3+y^4", (4, 3), 12, 6),
    ] + [(f"x^{k + 1}+y^2", (2, k + 1), 2 * (k + 1), k) for k in range(1, 7)]
    start = time.perf_counter()
    for poly, weights, degree, mu in cases:
        assert milnor_jacobian(PolynomialGerm.parse(poly)) == milnor_quasihomogeneous(QuasihomogeneousData(weights, degree)) == mu
    with pytest.raises(NonIsolatedError):
        milnor_jacobian(PolynomialGerm.parse("x^2*y"))
    assert time.perf_counter() - start < 10


def test_ac05_index_recovers_milnor_number():
    for n in range(1, 5):
        for mu in range(0, 21):
            assert complex_index_of_df(n, chi_hypersurface_fibre(n, mu)) == mu
    for n in range(1, 7):
        assert complex_from_real_index(n, (-1) ** n) == 1


def test_ac06_two_path_equality_on_catalog():
    checked = 0
    for entry in germ_entries():
        germ = entry.germ
        top = germ.poset.top()
        n = germ.poset.dim[top]
        for fn in entry.functions:
            chis = closure_chis(entry, fn)
            via_corollary = euler_obstruction_via_corollary(germ, index_vector_of_df(germ, chis))[top]
            assert eu_df_full_expansion(germ, chis) == via_corollary == fn.expected_eu.value
            if entry.chi_generic_linear is not None and len(germ.poset) == 2:
                assert eu_of_df(n, entry.chi_generic_linear, chis[top]) == via_corollary
            checked += 1
    assert checked >= 20


def test_ac07_poincare_hopf():
    start = time.perf_counter()
    fixtures = [(circle(), 0), (octahedron(), 2), (torus(), 0), (wedge_of_two_circles(), -1)]
    for K, chi in fixtures + [(cone(K), 1) for K, _ in fixtures]:
        for seed in range(3):
            report = poincare_hopf_check(K, HeightAssignment.from_seed(K.vertices, seed))
            assert report.equal and report.chi == chi
    for entry in complex_entries():
        assert poincare_hopf_check(entry.complex, HeightAssignment.from_seed(entry.complex.vertices, 0)).equal
    rng = random.Random(SEED + 7)
    for _ in range(100):
        K = random_complex(rng, max_vertices=12)
        chi = euler_characteristic(K)
        sums = {poincare_hopf_check(K, random_heights(rng, K.vertices)).sum_of_indices for _ in range(3)}
        assert sums == {chi}
    assert time.perf_counter() - start < 10


def _wedge_of_circles(k: int) -> SimplicialComplex:
    circles = [SimplicialComplex.from_maximal([["0", "1"], ["1", "2"], ["0", "2"]]) for _ in range(k)]
    U = disjoint_union(*circles)
    return glue(U, {(c, "0"): (0, "0") for c in range(1, k)})


def test_ac08_suspension_identity():
    for chi_Y in range(-4, 5):
        report = suspension_check(chi_Y)
        assert report.equal
        assert (report.index_min, report.index_max, report.sum_of_indices) == (1, 1 - chi_Y, 2 - chi_Y)
    links = [_wedge_of_circles(k) for k in range(1, 6)]
    links += [SimplicialComplex.from_maximal([[str(p)] for p in range(k)]) for k in range(1, 5)]
    for Y in links:
        chi_Y = euler_characteristic(Y)
        S = suspension(Y)
        h = {v: Fraction(k + 1) for k, v in enumerate(Y.vertices)}
        h = HeightAssignment(h | {"south": Fraction(-1), "north": Fraction(len(h) + 1)})
        report = suspension_check(chi_Y)
        assert pl_radial_index(S, "south", h) == report.index_min
        assert pl_radial_index(S, "north", h) == report.index_max
        assert poincare_hopf_check(S, h).sum_of_indices == report.sum_of_indices == euler_characteristic(S)
    assert {euler_characteristic(Y) for Y in links} == {-4, -3, -2, -1, 0, 1, 2, 3, 4}


def test_ac09_resolution_relation():
    for n in (1, 2, 3):
        for ind in (-5, 0, 1, 7):
            assert resolution_obstruction(ResolutionDatum(n, 1), ind) == ind
            for chi_d in range(-3, 4):
                step = resolution_obstruction(ResolutionDatum(n, chi_d + 1), ind) - resolution_obstruction(
                    ResolutionDatum(n, chi_d), ind
                )
                assert step == (-1) ** n


def test_ac10_cli_determinism():
    argv = [sys.executable, "-m", "radial_index", "catalog", "verify"]
    first = subprocess.run(argv, capture_output=True, check=False)
    second = subprocess.run(argv, capture_output=True, check=False)
    assert first.returncode == second.returncode == 0
    assert first.stdout == second.stdout
    assert first.stdout
