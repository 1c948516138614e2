import json
import random
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import random_complex, random_germ, random_heights
from radial_index.catalog import four_lines_surface, octahedron
from radial_index.documents import (
    DocumentError,
    complex_to_document,
    germ_to_document,
    load_complex,
    load_germ,
    parse_complex_document,
    parse_germ_document,
)
from radial_index.errors import StructureError
from radial_index.germ import germ_k_lines, validate_germ
from radial_index.plmorse import HeightAssignment

FIXTURES = Path(__file__).parent.parent / "fixtures"


def test_k4_fixture():
    doc = load_germ(FIXTURES / "k4.germ")
    assert doc.complex_context
    assert doc.model.nij == germ_k_lines(4).nij
    assert validate_germ(doc.model).ok


def test_four_lines_fixture_matches_catalog():
    model = load_germ(FIXTURES / "four-lines-surface.germ").model
    assert model.nij == four_lines_surface().nij
    assert model.poset.order == four_lines_surface().poset.order


def test_diagonal_defaults_to_one():
    doc = parse_germ_document(
        {"strata": [{"id": "a", "dim": 0}, {"id": "b", "dim": 1}], "covers": [["a", "b"]], "nij": [["a", "b", 2]]}
    )
    assert doc.model.nij["a", "a"] == doc.model.nij["b", "b"] == 1


def test_covers_are_closed_transitively():
    doc = parse_germ_document(
        {
            "strata": [{"id": s, "dim": d} for s, d in (("a", 0), ("b", 1), ("c", 2))],
            "covers": [["a", "b"], ["b", "c"]],
            "nij": [["a", "b", 0], ["b", "c", 0], ["a", "c", 0]],
        }
    )
    assert doc.model.poset.precedes("a", "c")
    assert germ_to_document(doc.model)["covers"] == [["a", "b"], ["b", "c"]]


@pytest.mark.parametrize(
    "data",
    [
        [],
        {},
        {"strata": [{"id": "a"}]},
        {"strata": [{"id": "a", "dim": 1.5}]},
        {"strata": [{"id": "a", "dim": True}]},
        {"strata": [{"id": "a", "dim": 0}], "covers": [["a"]]},
        {"strata": [{"id": "a", "dim": 0}], "nij": [["a", "a"]]},
        {"strata": [{"id": "a", "dim": 0}], "nij": [["a", "a", "1"]]},
        {"strata": [{"id": "a", "dim": 0}], "complex": "yes"},
    ],
)
def test_germ_schema_errors(data):
    with pytest.raises(DocumentError):
        parse_germ_document(data)


def test_cyclic_covers_rejected():
    with pytest.raises(StructureError, match="cycle"):
        parse_germ_document(
            {"strata": [{"id": "a", "dim": 0}, {"id": "b", "dim": 0}], "covers": [["a", "b"], ["b", "a"]]}
        )


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**32))
def test_germ_round_trip(seed):
    germ = random_germ(random.Random(seed))
    text = json.dumps(germ_to_document(germ, complex_context=False))
    doc = parse_germ_document(json.loads(text))
    assert not doc.complex_context
    assert doc.model.poset.order == germ.poset.order
    assert doc.model.poset.dim == germ.poset.dim
    assert doc.model.nij == germ.nij


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**32))
def test_complex_round_trip(seed):
    rng = random.Random(seed)
    K = random_complex(rng)
    K = type(K)(tuple(str(v) for v in K.vertices), frozenset(frozenset(map(str, s)) for s in K.simplices))
    h = random_heights(rng, K.vertices)
    doc = parse_complex_document(json.loads(json.dumps(complex_to_document("r", K, h))))
    assert doc.complex.simplices == K.simplices
    assert set(doc.complex.vertices) == set(K.vertices)
    assert doc.heights == h


def test_octahedron_fixture():
    doc = load_complex(FIXTURES / "octahedron.cplx")
    assert doc.complex.simplices == octahedron().simplices
    assert doc.heights is None


def test_rational_heights():
    doc = parse_complex_document({"simplices": [[0, 1]], "heights": {"0": "1/3", "1": 2}})
    assert doc.heights == HeightAssignment({"0": Fraction(1, 3), "1": 2})


@pytest.mark.parametrize(
    "data",
    [
        {},
        {"simplices": [[]]},
        {"simplices": ["ab"]},
        {"simplices": [[0, 1]], "heights": [0, 1]},
        {"simplices": [[0, 1]], "heights": {"0": 0.5, "1": 1}},
        {"simplices": [[0, 1]], "heights": {"0": "1/0", "1": 1}},
        {"simplices": [[0, 1]], "heights": {"0": "x", "1": 1}},
    ],
)
def test_complex_schema_errors(data):
    with pytest.raises(DocumentError):
        parse_complex_document(data)


def test_invalid_json(tmp_path):
    path = tmp_path / "bad.germ"
    path.write_text("{not json")
    with pytest.raises(DocumentError, match="invalid JSON"):
        load_germ(path)
