"""Command-line interface.

Exit status is 0 on success, 1 when a check or validation fails (or the input
is rejected), and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence

from radial_index import catalog
from radial_index.calculus import (
    ResolutionDatum,
    euler_obstruction_via_corollary,
    index_obstruction_gap,
    radial_index_via_theorem4,
    resolution_obstruction,
)
from radial_index.documents import complex_to_document, germ_to_document, load_complex, load_germ
from radial_index.errors import RadialIndexError
from radial_index.germ import IndexKind, IndexVector, parity, validate_germ
from radial_index.milnor import (
    DEFAULT_MAX_TRUNCATION,
    QuasihomogeneousData,
    chi_hypersurface_fibre,
    milnor_jacobian,
    milnor_quasihomogeneous,
)
from radial_index.plmorse import HeightAssignment, poincare_hopf_check, suspension_check
from radial_index.polynomial import PolynomialGerm


def _int_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _fmt(values: Sequence[int]) -> str:
    return "(" + ", ".join(str(v) for v in values) + ")"


class Output:
    """Collects report fields so text and JSON output stay field-for-field identical."""

    def __init__(self, as_json: bool):
        self.as_json = as_json
        self.fields: dict = {}
        self.text: list[str] = []

    def add(self, key: str, value, text: str | None = "") -> None:
        """Record a field; ``text=None`` keeps it out of the text report."""
        self.fields[key] = value
        if text is not None:
            self.text.append(text or f"{key} = {value}")

    def emit(self) -> None:
        if self.as_json:
            print(json.dumps(self.fields, indent=2, sort_keys=False))
        else:
            print("\n".join(self.text))


def _load_valid_germ(path: str):
    doc = load_germ(path)
    report = validate_germ(doc.model)
    if not report.ok:
        raise RadialIndexError("\n".join(report.lines()))
    return doc.model


def cmd_germ_validate(args: argparse.Namespace) -> int:
    report = validate_germ(load_germ(args.file).model)
    out = Output(args.json)
    out.add("germ", report.label)
    out.add("valid", report.ok)
    out.add("violations", [str(v) for v in report.violations], "\n".join(f"violation: {v}" for v in report.violations) or "violations: none")
    out.emit()
    return 0 if report.ok else 1


def cmd_germ_eval(args: argparse.Namespace) -> int:
    model = _load_valid_germ(args.file)
    eu = IndexVector.from_sequence(IndexKind.EULER_OBSTRUCTION, model.poset, args.eu)
    ind = radial_index_via_theorem4(model, eu)
    out = Output(args.json)
    out.add("germ", model.label)
    out.add("strata", list(model.poset.strata), "strata = " + _fmt(model.poset.strata).replace("'", ""))
    out.add("eu", list(eu.as_tuple(model.poset)), f"Eu = {_fmt(eu.as_tuple(model.poset))}")
    out.add("ind", list(ind.as_tuple(model.poset)), f"ind = {_fmt(ind.as_tuple(model.poset))}")
    out.emit()
    return 0


def cmd_germ_invert(args: argparse.Namespace) -> int:
    model = _load_valid_germ(args.file)
    ind = IndexVector.from_sequence(IndexKind.RADIAL_INDEX, model.poset, args.ind)
    eu = euler_obstruction_via_corollary(model, ind)
    out = Output(args.json)
    out.add("germ", model.label)
    out.add("strata", list(model.poset.strata), "strata = " + _fmt(model.poset.strata).replace("'", ""))
    out.add("ind", list(ind.as_tuple(model.poset)), f"ind = {_fmt(ind.as_tuple(model.poset))}")
    out.add("eu", list(eu.as_tuple(model.poset)), f"Eu = {_fmt(eu.as_tuple(model.poset))}")
    out.emit()
    return 0


def cmd_germ_gap(args: argparse.Namespace) -> int:
    out = Output(args.json)
    if args.file:
        model = _load_valid_germ(args.file)
        if len(model.poset) != 2:
            raise RadialIndexError("germ gap needs an isolated singularity: exactly two strata")
        top = model.poset.top()
        n = model.poset.dim[top]
        bottom = model.poset.minimal()[0]
        chi_l = 1 + parity(n - 1) * model.nij[bottom, top]
        out.add("germ", model.label)
    elif args.n is not None and args.chi_l is not None:
        n, chi_l = args.n, args.chi_l
    else:
        raise RadialIndexError("germ gap needs --file or both --n and --chi-l")
    out.add("n", n)
    out.add("chi_l", chi_l, f"chi(M_l) = {chi_l}")
    out.add("gap", index_obstruction_gap(n, chi_l), f"ind - Eu = {index_obstruction_gap(n, chi_l)}")
    out.emit()
    return 0


def cmd_milnor(args: argparse.Namespace) -> int:
    f = PolynomialGerm.parse(args.poly)
    mu = milnor_jacobian(f, args.max_truncation)
    n = len(f.variables)
    out = Output(args.json)
    out.add("poly", str(f), f"f = {f}")
    out.add("variables", list(f.variables), "variables = " + ", ".join(f.variables))
    out.add("mu", mu, f"mu = {mu}")
    out.add("chi_fibre", chi_hypersurface_fibre(n, mu), f"chi(M_f) = {chi_hypersurface_fibre(n, mu)}")
    status = 0
    if args.weights is not None:
        if args.degree is None:
            raise RadialIndexError("--weights needs --degree")
        q = QuasihomogeneousData(tuple(args.weights), args.degree)
        if not q.fits(f):
            raise RadialIndexError(f"{f} is not quasihomogeneous for weights {args.weights}, degree {args.degree}")
        mu_q = milnor_quasihomogeneous(q)
        out.add("mu_weighted", mu_q, f"mu (weighted closed form) = {mu_q}")
        out.add("agree", mu_q == mu, f"agree = {'yes' if mu_q == mu else 'NO'}")
        status = 0 if mu_q == mu else 1
    out.emit()
    return status


def cmd_plmorse_check(args: argparse.Namespace) -> int:
    doc = load_complex(args.file)
    K = doc.complex
    if args.seed is not None or doc.heights is None:
        seed = 0 if args.seed is None else args.seed
        heights = HeightAssignment.from_seed(K.vertices, seed)
    else:
        seed = None
        heights = doc.heights
    report = poincare_hopf_check(K, heights)
    out = Output(args.json)
    out.add("complex", doc.label)
    out.add("seed", seed, f"heights = seed {seed}" if seed is not None else "heights = from file")
    out.add(
        "indices",
        {str(v): i for v, i in report.indices.items()},
        "indices: " + " ".join(f"{v}={i}" for v, i in report.indices.items()),
    )
    out.add("sum", report.sum_of_indices, None)
    out.add("chi", report.chi, None)
    out.add("ok", report.equal, report.line())
    out.emit()
    return 0 if report.equal else 1


def cmd_suspension(args: argparse.Namespace) -> int:
    report = suspension_check(args.chi)
    out = Output(args.json)
    out.add("chi_link", report.chi_link, f"chi(Y) = {report.chi_link}")
    out.add("index_min", report.index_min, f"index(min) = {report.index_min}")
    out.add("index_max", report.index_max, f"index(max) = {report.index_max}")
    out.add("sum", report.sum_of_indices, f"sum = {report.sum_of_indices}")
    out.add("chi_suspension", report.chi_suspension, f"chi(SY) = {report.chi_suspension}")
    out.add("ok", report.equal, "OK" if report.equal else "FAIL")
    out.emit()
    return 0 if report.equal else 1


def cmd_resolution(args: argparse.Namespace) -> int:
    obst = resolution_obstruction(ResolutionDatum(args.n, args.chi_d), args.ind)
    out = Output(args.json)
    out.add("n", args.n)
    out.add("chi_D", args.chi_d, f"chi(D) = {args.chi_d}")
    out.add("ind", args.ind)
    out.add("obst", obst, f"Obst = {obst}")
    out.emit()
    return 0


def cmd_catalog_list(args: argparse.Namespace) -> int:
    out = Output(args.json)
    germs = [e.label for e in catalog.germ_entries()]
    complexes = [e.label for e in catalog.complex_entries()]
    out.add("germs", germs, "germs:\n" + "\n".join(f"  {g}" for g in germs))
    out.add("complexes", complexes, "complexes:\n" + "\n".join(f"  {c}" for c in complexes))
    out.emit()
    return 0


def _entry_document(entry) -> dict:
    if isinstance(entry, catalog.GermEntry):
        doc = germ_to_document(entry.germ)
        doc["expected"] = [vars(e) for e in entry.expected]
        doc["functions"] = [
            {
                "label": fn.label,
                "poly": fn.poly,
                "chi_on_closures": dict(fn.chi),
                "expected": vars(fn.expected_eu),
            }
            for fn in entry.functions
        ]
        if entry.chi_generic_linear is not None:
            doc["chi_generic_linear"] = entry.chi_generic_linear
        return doc
    doc = complex_to_document(entry.label, entry.complex)
    doc["expected"] = vars(entry.expected_chi)
    return doc


def cmd_catalog_show(args: argparse.Namespace) -> int:
    entry = catalog.find_entry(args.name)
    if entry is None:
        raise RadialIndexError(f"no catalog entry named {args.name!r}")
    print(json.dumps(_entry_document(entry), indent=2))
    return 0


def cmd_catalog_verify(args: argparse.Namespace) -> int:
    checks = catalog.verify_catalog()
    failed = [c for c in checks if not c.ok]
    if args.json:
        payload = {
            "checks": [{"subject": c.subject, "name": c.name, "ok": c.ok, "detail": c.detail} for c in checks],
            "total": len(checks),
            "failed": len(failed),
        }
        print(json.dumps(payload, indent=2))
    else:
        for c in checks:
            print(c.line())
        print(f"{len(checks)} checks, {len(failed)} failed")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="radial-index", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    germ = sub.add_parser("germ", help="transforms on stratified germ documents")
    germ_sub = germ.add_subparsers(dest="germ_command", required=True)
    p = germ_sub.add_parser("eval", parents=[common], help="Euler obstructions -> radial indices")
    p.add_argument("--file", required=True)
    p.add_argument("--eu", required=True, type=_int_list, help="comma-separated, in stratum order")
    p.set_defaults(func=cmd_germ_eval)
    p = germ_sub.add_parser("invert", parents=[common], help="radial indices -> Euler obstructions")
    p.add_argument("--file", required=True)
    p.add_argument("--ind", required=True, type=_int_list, help="comma-separated, in stratum order")
    p.set_defaults(func=cmd_germ_invert)
    p = germ_sub.add_parser("gap", parents=[common], help="ind - Eu on an isolated singularity")
    p.add_argument("--file")
    p.add_argument("--n", type=int)
    p.add_argument("--chi-l", type=int, dest="chi_l")
    p.set_defaults(func=cmd_germ_gap)
    p = germ_sub.add_parser("validate", parents=[common], help="check a germ document")
    p.add_argument("--file", required=True)
    p.set_defaults(func=cmd_germ_validate)

    p = sub.add_parser("milnor", parents=[common], help="Milnor number of a polynomial germ")
    p.add_argument("--poly", required=True)
    p.add_argument("--max-truncation", type=int, default=DEFAULT_MAX_TRUNCATION, dest="max_truncation")
    p.add_argument("--weights", type=_int_list)
    p.add_argument("--degree", type=int)
    p.set_defaults(func=cmd_milnor)

    plm = sub.add_parser("plmorse", help="PL Morse checks on complex documents")
    plm_sub = plm.add_subparsers(dest="plmorse_command", required=True)
    p = plm_sub.add_parser("check", parents=[common], help="Poincare-Hopf sum versus Euler characteristic")
    p.add_argument("--file", required=True)
    p.add_argument("--seed", type=int)
    p.set_defaults(func=cmd_plmorse_check)

    p = sub.add_parser("suspension", parents=[common], help="index bookkeeping on a suspension")
    p.add_argument("--chi", type=int, required=True)
    p.set_defaults(func=cmd_suspension)

    p = sub.add_parser("resolution", parents=[common], help="obstruction on a resolution")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--chi-d", type=int, required=True, dest="chi_d")
    p.add_argument("--ind", type=int, required=True)
    p.set_defaults(func=cmd_resolution)

    cat = sub.add_parser("catalog", help="built-in fixtures")
    cat_sub = cat.add_subparsers(dest="catalog_command", required=True)
    p = cat_sub.add_parser("list", parents=[common])
    p.set_defaults(func=cmd_catalog_list)
    p = cat_sub.add_parser("show")
    p.add_argument("name")
    p.set_defaults(func=cmd_catalog_show)
    p = cat_sub.add_parser("verify", parents=[common])
    p.set_defaults(func=cmd_catalog_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (RadialIndexError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
