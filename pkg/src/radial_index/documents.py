"""JSON document formats for germ models and simplicial complexes.

Germ document::

    {"label": "4-lines", "complex": true, "notes": "...",
     "strata": [{"id": "V0", "dim": 0}, {"id": "V1", "dim": 1}],
     "covers": [["V0", "V1"]],
     "nij": [["V0", "V0", 1], ["V1", "V1", 1], ["V0", "V1", 3]]}

Complex document::

    {"label": "circle", "simplices": [[0, 1], [1, 2], [0, 2]],
     "heights": {"0": "0", "1": "1/2", "2": "1"}}

Integers appear only in value positions; rationals are strings ``"p/q"``.
Diagonal ``nij`` entries may be omitted, in which case they are 1.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any

from radial_index.errors import StructureError
from radial_index.germ import StratifiedGermModel
from radial_index.plmorse import HeightAssignment, SimplicialComplex
from radial_index.poset import IncidenceTable, StratumPoset


class DocumentError(StructureError):
    """A document does not follow its schema."""


def _require_int(value: Any, where: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise DocumentError(f"{where}: expected an integer, got {value!r}")
    return value


def _rational(value: Any, where: str) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise DocumentError(f"{where}: expected an integer or a 'p/q' string, got {value!r}")
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError):
        raise DocumentError(f"{where}: {value!r} is not a rational") from None


@dataclass(frozen=True)
class GermDocument:
    model: StratifiedGermModel
    complex_context: bool = True


def parse_germ_document(data: dict) -> GermDocument:
    if not isinstance(data, dict):
        raise DocumentError("germ document must be a JSON object")
    try:
        strata_raw = data["strata"]
    except KeyError:
        raise DocumentError("germ document needs 'strata'") from None
    strata, dims = [], {}
    for k, entry in enumerate(strata_raw):
        if not isinstance(entry, dict) or "id" not in entry or "dim" not in entry:
            raise DocumentError(f"strata[{k}]: expected an object with 'id' and 'dim'")
        sid = str(entry["id"])
        strata.append(sid)
        dims[sid] = _require_int(entry["dim"], f"strata[{k}].dim")
    covers = []
    for k, pair in enumerate(data.get("covers", [])):
        if not isinstance(pair, list) or len(pair) != 2:
            raise DocumentError(f"covers[{k}]: expected a pair of stratum ids")
        covers.append((str(pair[0]), str(pair[1])))
    entries = {(s, s): 1 for s in strata}
    for k, triple in enumerate(data.get("nij", [])):
        if not isinstance(triple, list) or len(triple) != 3:
            raise DocumentError(f"nij[{k}]: expected [i, j, value]")
        entries[str(triple[0]), str(triple[1])] = _require_int(triple[2], f"nij[{k}] value")
    complex_context = data.get("complex", True)
    if not isinstance(complex_context, bool):
        raise DocumentError("'complex' must be a boolean")
    poset = StratumPoset.from_covers(strata, dims, covers)
    model = StratifiedGermModel(
        poset, IncidenceTable(entries), label=str(data.get("label", "")), notes=str(data.get("notes", ""))
    )
    return GermDocument(model, complex_context)


def germ_to_document(model: StratifiedGermModel, complex_context: bool = True) -> dict:
    poset = model.poset
    covers = [
        [i, j]
        for i, j in poset.comparable_pairs()
        if i != j and not poset.between(i, j)
    ]
    nij = [[i, j, model.nij[i, j]] for i, j in poset.comparable_pairs() if (i, j) in model.nij.entries]
    return {
        "label": model.label,
        "complex": complex_context,
        "notes": model.notes,
        "strata": [{"id": s, "dim": poset.dim[s]} for s in poset.strata],
        "covers": covers,
        "nij": nij,
    }


@dataclass(frozen=True)
class ComplexDocument:
    label: str
    complex: SimplicialComplex
    heights: HeightAssignment | None = None


def parse_complex_document(data: dict) -> ComplexDocument:
    if not isinstance(data, dict) or "simplices" not in data:
        raise DocumentError("complex document must be an object with 'simplices'")
    maximal = []
    for k, simplex in enumerate(data["simplices"]):
        if not isinstance(simplex, list) or not simplex:
            raise DocumentError(f"simplices[{k}]: expected a nonempty array of vertex ids")
        maximal.append([str(v) for v in simplex])
    K = SimplicialComplex.from_maximal(maximal)
    heights = None
    if data.get("heights") is not None:
        raw = data["heights"]
        if not isinstance(raw, dict):
            raise DocumentError("'heights' must map vertex ids to rationals")
        heights = HeightAssignment({str(v): _rational(h, f"heights[{v!r}]") for v, h in raw.items()})
    return ComplexDocument(str(data.get("label", "")), K, heights)


def _maximal_simplices(K: SimplicialComplex) -> list[list]:
    position = {v: p for p, v in enumerate(K.vertices)}
    tops = [s for s in K.simplices if not any(s < t for t in K.simplices)]
    rows = [sorted(s, key=position.__getitem__) for s in tops]
    return sorted(rows, key=lambda r: [position[v] for v in r])


def complex_to_document(label: str, K: SimplicialComplex, heights: HeightAssignment | None = None) -> dict:
    doc: dict[str, Any] = {"label": label, "simplices": [[str(v) for v in s] for s in _maximal_simplices(K)]}
    if heights is not None:
        doc["heights"] = {str(v): str(heights[v]) for v in K.vertices}
    return doc


def load_json(path: str | Path) -> dict:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None


def load_germ(path: str | Path) -> GermDocument:
    return parse_germ_document(load_json(path))


def load_complex(path: str | Path) -> ComplexDocument:
    return parse_complex_document(load_json(path))
