"""Canonical JSON formats for scalars, matrices, algebras, modules,
bimodules, complexes and reports.

Serialization is canonical: fixed key order, two-space indent, scalar
strings in reduced "p" / "p/q" form, trailing newline.  Parsing rejects
non-canonical scalars and reports errors with a JSON-path-like position.
"""

from __future__ import annotations

import json

from .algebra import Bimodule, FinDimAlgebra
from .deloop import AlgebraDelReport, DelReport, SddelReport
from .linalg import Matrix, ScalarFormatError, parse_scalar, scalar_to_str
from .modules import Representation
from .tilting import ProjComplex


class ParseError(ValueError):
    """Malformed file content, with the offending position in .path."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


def dumps_canonical(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def loads_json(text: str, path: str = "<input>"):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(path, f"malformed JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from exc


def _scalar_in(value, path: str):
    if not isinstance(value, str):
        raise ParseError(path, f"scalar must be a canonical string, got {type(value).__name__}")
    try:
        return parse_scalar(value)
    except ScalarFormatError as exc:
        raise ParseError(path, str(exc)) from exc


def _vector_in(value, length: int, path: str):
    if not isinstance(value, list):
        raise ParseError(path, "expected a list of scalar strings")
    if len(value) != length:
        raise ParseError(path, f"expected {length} entries, got {len(value)}")
    return [_scalar_in(x, f"{path}[{k}]") for k, x in enumerate(value)]


def matrix_to_lists(m: Matrix):
    return [[scalar_to_str(x) for x in row] for row in m.data]


def matrix_from_lists(value, rows: int | None, cols: int | None, path: str) -> Matrix:
    if not isinstance(value, list):
        raise ParseError(path, "expected a row-major list of rows")
    if rows is not None and len(value) != rows:
        raise ParseError(path, f"expected {rows} rows, got {len(value)}")
    out = []
    width = cols
    for i, row in enumerate(value):
        if not isinstance(row, list):
            raise ParseError(f"{path}[{i}]", "expected a list of scalar strings")
        if width is None:
            width = len(row)
        if len(row) != width:
            raise ParseError(f"{path}[{i}]", f"expected {width} entries, got {len(row)}")
        out.extend(_scalar_in(x, f"{path}[{i}][{j}]") for j, x in enumerate(row))
    if width is None:
        width = 0
    return Matrix(len(value), width, out)


# -- algebras --------------------------------------------------------------


def algebra_to_dict(a: FinDimAlgebra) -> dict:
    return {
        "name": a.name,
        "dim": a.dim,
        "basis": list(a.basis_labels),
        "unit": [scalar_to_str(x) for x in a.unit],
        "table": [
            [[scalar_to_str(x) for x in a.table[i][j]] for j in range(a.dim)]
            for i in range(a.dim)
        ],
    }


def algebra_from_dict(d, path: str = "algebra") -> FinDimAlgebra:
    if not isinstance(d, dict):
        raise ParseError(path, "expected an object")
    for key in ("name", "dim", "basis", "unit", "table"):
        if key not in d:
            raise ParseError(path, f"missing key {key!r}")
    dim = d["dim"]
    if not isinstance(dim, int) or dim < 0:
        raise ParseError(f"{path}.dim", "expected a nonnegative integer")
    basis = d["basis"]
    if not isinstance(basis, list) or len(basis) != dim:
        raise ParseError(f"{path}.basis", f"expected {dim} labels")
    unit = _vector_in(d["unit"], dim, f"{path}.unit")
    table_in = d["table"]
    if not isinstance(table_in, list) or len(table_in) != dim:
        raise ParseError(f"{path}.table", f"expected {dim} rows")
    table = []
    for i, row in enumerate(table_in):
        if not isinstance(row, list) or len(row) != dim:
            raise ParseError(f"{path}.table[{i}]", f"expected {dim} entries")
        table.append([_vector_in(v, dim, f"{path}.table[{i}][{j}]") for j, v in enumerate(row)])
    return FinDimAlgebra(d["name"], basis, unit, table)


# -- bimodules --------------------------------------------------------------


def bimodule_to_dict(n: Bimodule, left_ref: str, right_ref: str) -> dict:
    return {
        "left_algebra": left_ref,
        "right_algebra": right_ref,
        "dim": n.dim,
        "left_action": [matrix_to_lists(m) for m in n.left_action],
        "right_action": [matrix_to_lists(m) for m in n.right_action],
    }


def bimodule_from_dict(d, resolver, path: str = "bimodule") -> Bimodule:
    if not isinstance(d, dict):
        raise ParseError(path, "expected an object")
    for key in ("left_algebra", "right_algebra", "dim", "left_action", "right_action"):
        if key not in d:
            raise ParseError(path, f"missing key {key!r}")
    left = resolver(d["left_algebra"])
    right = resolver(d["right_algebra"])
    dim = d["dim"]
    if not isinstance(dim, int) or dim < 0:
        raise ParseError(f"{path}.dim", "expected a nonnegative integer")
    la = d["left_action"]
    ra = d["right_action"]
    if not isinstance(la, list) or len(la) != left.dim:
        raise ParseError(f"{path}.left_action", f"expected {left.dim} matrices")
    if not isinstance(ra, list) or len(ra) != right.dim:
        raise ParseError(f"{path}.right_action", f"expected {right.dim} matrices")
    return Bimodule(
        left, right, dim,
        [matrix_from_lists(m, dim, dim, f"{path}.left_action[{i}]") for i, m in enumerate(la)],
        [matrix_from_lists(m, dim, dim, f"{path}.right_action[{i}]") for i, m in enumerate(ra)],
    )


# -- modules ----------------------------------------------------------------


def module_to_dict(rep: Representation, algebra_ref: str | None = None) -> dict:
    return {
        "algebra": algebra_ref if algebra_ref is not None else rep.algebra.name,
        "dim": rep.dim,
        "action": [matrix_to_lists(m) for m in rep.action],
    }


def module_from_dict(d, resolver, path: str = "module") -> Representation:
    if not isinstance(d, dict):
        raise ParseError(path, "expected an object")
    for key in ("algebra", "dim", "action"):
        if key not in d:
            raise ParseError(path, f"missing key {key!r}")
    algebra = resolver(d["algebra"])
    dim = d["dim"]
    if not isinstance(dim, int) or dim < 0:
        raise ParseError(f"{path}.dim", "expected a nonnegative integer")
    action = d["action"]
    if not isinstance(action, list) or len(action) != algebra.dim:
        raise ParseError(f"{path}.action", f"expected {algebra.dim} matrices")
    mats = [
        matrix_from_lists(m, dim, dim, f"{path}.action[{i}]") for i, m in enumerate(action)
    ]
    return Representation(algebra, dim, mats)


# -- complexes ---------------------------------------------------------------


def complex_to_dict(t: ProjComplex, algebra_ref: str | None = None) -> dict:
    ref = algebra_ref if algebra_ref is not None else t.algebra.name
    return {
        "algebra": ref,
        "terms": {str(i): module_to_dict(t.terms[i], ref) for i in t.support()},
        "differentials": {str(i): matrix_to_lists(d) for i, d in sorted(t.differentials.items())},
    }


def complex_from_dict(d, resolver, path: str = "complex") -> ProjComplex:
    if not isinstance(d, dict):
        raise ParseError(path, "expected an object")
    for key in ("algebra", "terms", "differentials"):
        if key not in d:
            raise ParseError(path, f"missing key {key!r}")
    algebra = resolver(d["algebra"])
    terms_in = d["terms"]
    if not isinstance(terms_in, dict):
        raise ParseError(f"{path}.terms", "expected an object keyed by degree")
    terms = {}
    for key, val in terms_in.items():
        try:
            deg = int(key)
        except ValueError:
            raise ParseError(f"{path}.terms.{key}", "degree keys must be decimal integers") from None
        terms[deg] = module_from_dict(val, resolver, f"{path}.terms.{key}")
    diffs_in = d["differentials"]
    if not isinstance(diffs_in, dict):
        raise ParseError(f"{path}.differentials", "expected an object keyed by degree")
    diffs = {}
    for key, val in diffs_in.items():
        try:
            deg = int(key)
        except ValueError:
            raise ParseError(f"{path}.differentials.{key}", "degree keys must be decimal integers") from None
        if deg not in terms or (deg + 1) not in terms:
            raise ParseError(f"{path}.differentials.{key}", "differential outside the term support")
        diffs[deg] = matrix_from_lists(val, terms[deg + 1].dim, terms[deg].dim, f"{path}.differentials.{key}")
    return ProjComplex(algebra, terms, diffs)


# -- reports -----------------------------------------------------------------


def del_report_to_dict(r: DelReport) -> dict:
    levels = []
    for st in r.levels:
        entry = {"level": st.level, "status": st.status, "reason": st.reason}
        if st.witness_name is not None:
            entry["witness_name"] = st.witness_name
        if st.witness is not None:
            entry["witness"] = module_to_dict(st.witness)
        levels.append(entry)
    return {
        "algebra": r.algebra_name,
        "module": r.module_name,
        "n_max": r.n_max,
        "levels": levels,
        "lower_bound": r.lower_bound,
        "upper_bound": r.upper_bound,
        "bracket": r.bracket(),
    }


def algebra_del_report_to_dict(r: AlgebraDelReport) -> dict:
    return {
        "algebra": r.algebra_name,
        "per_simple": [del_report_to_dict(x) for x in r.per_simple],
        "lower_bound": r.lower_bound,
        "upper_bound": r.upper_bound,
        "bracket": r.bracket(),
    }


def sddel_report_to_dict(r: SddelReport) -> dict:
    entries = []
    for e in r.entries:
        entry = {
            "overmodule": e.overmodule_name,
            "overmodule_module": module_to_dict(e.overmodule),
            "embedding_found": e.embedding_found,
            "search": e.search_note,
        }
        if e.del_report is not None:
            entry["del_report"] = del_report_to_dict(e.del_report)
        entries.append(entry)
    return {
        "algebra": r.algebra_name,
        "module": r.module_name,
        "n_max": r.n_max,
        "seed": r.seed,
        "entries": entries,
        "upper_bound": r.upper_bound,
        "bracket": r.bracket(),
        "note": r.note,
    }


# -- files -------------------------------------------------------------------


def load_algebra_file(path: str) -> FinDimAlgebra:
    with open(path, encoding="utf-8") as fh:
        return algebra_from_dict(loads_json(fh.read(), path), path)


def make_file_resolver(base_path: str, known=None):
    """Resolve algebra references: known names first, then file paths."""
    import os

    known = dict(known or {})

    def resolver(ref):
        if not isinstance(ref, str):
            raise ParseError("algebra", "algebra reference must be a string")
        if ref in known:
            return known[ref]
        candidate = ref
        if not os.path.isabs(candidate):
            candidate = os.path.join(os.path.dirname(base_path) or ".", ref)
        if os.path.exists(candidate):
            alg = load_algebra_file(candidate)
            known[ref] = alg
            return alg
        raise ParseError("algebra", f"unknown algebra reference {ref!r}")

    return resolver


def load_module_file(path: str, resolver=None) -> Representation:
    with open(path, encoding="utf-8") as fh:
        data = loads_json(fh.read(), path)
    if resolver is None:
        resolver = make_file_resolver(path)
    return module_from_dict(data, resolver, path)


def load_complex_file(path: str, resolver=None) -> ProjComplex:
    with open(path, encoding="utf-8") as fh:
        data = loads_json(fh.read(), path)
    if resolver is None:
        resolver = make_file_resolver(path)
    return complex_from_dict(data, resolver, path)
