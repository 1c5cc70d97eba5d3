"""JSON encoding and decoding for every file format the tools read or write.

Decoders take already-parsed JSON values and raise InputFormatError on schema
problems; scalar literals that fail the grammar raise ScalarParseError.
"""

import json
from fractions import Fraction
from typing import Any, Dict, List, Mapping, Sequence, Tuple

import sympy

from ..core.calculus import RelationSet, validate_cartan
from ..core.errors import CartanDataError, DimensionMismatchError, InputFormatError
from ..core.free_algebra import FreeElement, TensorElement
from ..core.lie import (
    CheckReport,
    LieAlgebra,
    LieBialgebra,
    Representation,
    Tensor2,
    cobracket_from_r,
    from_sympy,
    to_sympy,
)
from ..core.scalars import RationalFunctionQ, parse_scalar
from ..core.tensor_ops import RMatrix, from_bilinear_form


def dumps(payload: Any) -> str:
    """Canonical text: sorted keys, fixed indentation, trailing newline."""
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def _require(data: Any, key: str, kind: type = object) -> Any:
    if not isinstance(data, dict):
        raise InputFormatError("expected a JSON object")
    if key not in data:
        raise InputFormatError(f"missing required key '{key}'")
    value = data[key]
    if not isinstance(value, kind):
        raise InputFormatError(f"key '{key}' has the wrong type")
    return value


def _int(value: Any, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InputFormatError(f"{what} must be an integer")
    return value


def scalar_to_json(value: RationalFunctionQ) -> str:
    return str(value)


def scalar_from_json(value: Any) -> RationalFunctionQ:
    if isinstance(value, bool):
        raise InputFormatError("scalars must be strings or integers")
    if isinstance(value, int):
        return RationalFunctionQ(value)
    if not isinstance(value, str):
        raise InputFormatError("scalars must be strings or integers")
    return parse_scalar(value)


def rational_to_json(value: Fraction) -> str:
    return str(Fraction(value))


def rational_from_json(value: Any) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise InputFormatError(f"not a rational literal: {value!r}")
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputFormatError(f"not a rational literal: {value!r}") from exc


def rmatrix_to_json(R: RMatrix) -> Dict[str, Any]:
    return {
        "dim": R.dim,
        "entries": [[scalar_to_json(v) for v in row] for row in R.entries],
    }


def rmatrix_from_json(data: Any) -> RMatrix:
    """Read either an entries file or a bilinear-form file.

    Entries files give an unchecked R; bilinear forms give a checked diagonal R.

    Raises:
        InputFormatError: If neither layout matches or sizes disagree
    """
    if isinstance(data, dict) and "beta" in data:
        beta = _require(data, "beta", list)
        try:
            return from_bilinear_form([[_int(v, "beta entry") for v in row] for row in beta])
        except (DimensionMismatchError, TypeError) as exc:
            raise InputFormatError(f"bad bilinear form: {exc}") from exc
    dim = _int(_require(data, "dim"), "dim")
    rows = _require(data, "entries", list)
    if any(not isinstance(row, list) for row in rows):
        raise InputFormatError("entries must be a list of rows")
    try:
        return RMatrix.from_rows(dim, [[scalar_from_json(v) for v in row] for row in rows])
    except DimensionMismatchError as exc:
        raise InputFormatError(str(exc)) from exc


def bilinear_to_json(beta: Sequence[Sequence[int]]) -> Dict[str, Any]:
    return {"beta": [list(row) for row in beta]}


def cartan_to_json(cartan: Sequence[Sequence[int]], symmetrizers: Sequence[int]) -> Dict[str, Any]:
    return {"cartan": [list(row) for row in cartan], "symmetrizers": list(symmetrizers)}


def cartan_from_json(data: Any) -> Tuple[List[List[int]], List[int]]:
    """Raises InputFormatError on malformed or non-symmetrizable Cartan data."""
    cartan = [[_int(v, "Cartan entry") for v in row] for row in _require(data, "cartan", list)]
    symmetrizers = data.get("symmetrizers")
    if symmetrizers is None:
        symmetrizers = [1] * len(cartan)
    symmetrizers = [_int(v, "symmetrizer") for v in symmetrizers]
    try:
        validate_cartan(cartan, symmetrizers)
    except CartanDataError as exc:
        raise InputFormatError(str(exc)) from exc
    return cartan, symmetrizers


def element_to_json(element: FreeElement) -> Dict[str, Any]:
    terms = [
        {"word": list(word), "coeff": scalar_to_json(coeff)}
        for word, coeff in sorted(element.terms.items(), key=lambda item: (len(item[0]), item[0]))
    ]
    payload: Dict[str, Any] = {"dim": element.dim, "terms": terms}
    if element.dual:
        payload["dual"] = True
    return payload


def element_from_json(data: Any) -> FreeElement:
    dim = _int(_require(data, "dim"), "dim")
    terms: Dict[Tuple[int, ...], RationalFunctionQ] = {}
    for term in _require(data, "terms", list):
        word = tuple(_int(v, "letter") for v in _require(term, "word", list))
        if word in terms:
            raise InputFormatError(f"word {list(word)} listed twice")
        terms[word] = scalar_from_json(_require(term, "coeff"))
    try:
        return FreeElement.from_terms(dim, terms, bool(data.get("dual", False)))
    except DimensionMismatchError as exc:
        raise InputFormatError(str(exc)) from exc


def tensor_element_to_json(element: TensorElement) -> Dict[str, Any]:
    ordered = sorted(
        element.terms.items(),
        key=lambda item: (len(item[0][0]) + len(item[0][1]), item[0]),
    )
    return {
        "dim": element.dim,
        "left_dual": element.left_dual,
        "right_dual": element.right_dual,
        "terms": [
            {"left": list(left), "right": list(right), "coeff": scalar_to_json(coeff)}
            for (left, right), coeff in ordered
        ],
    }


def tensor_element_from_json(data: Any) -> TensorElement:
    dim = _int(_require(data, "dim"), "dim")
    terms = {}
    for term in _require(data, "terms", list):
        left = tuple(_int(v, "letter") for v in _require(term, "left", list))
        right = tuple(_int(v, "letter") for v in _require(term, "right", list))
        terms[(left, right)] = scalar_from_json(_require(term, "coeff"))
    return TensorElement.from_terms(
        dim, terms, bool(data.get("left_dual", False)), bool(data.get("right_dual", False))
    )


def relation_set_to_json(relations: RelationSet, ranks: Sequence[int] = ()) -> Dict[str, Any]:
    payload: Dict[str, Any] = {
        "degree": relations.degree,
        "rank": relations.rank,
        "kernel_dim": relations.kernel_dim,
        "generators": [element_to_json(g) for g in relations.generators],
        "ranks_by_degree": list(ranks),
    }
    if relations.multidegrees and any(relations.multidegrees):
        payload["multidegrees"] = [list(m) for m in relations.multidegrees]
    return payload


def relation_set_from_json(data: Any) -> RelationSet:
    generators = [element_from_json(g) for g in _require(data, "generators", list)]
    return RelationSet(
        _int(_require(data, "degree"), "degree"),
        generators,
        _int(_require(data, "rank"), "rank"),
        _int(_require(data, "kernel_dim"), "kernel_dim"),
        [tuple(m) for m in data.get("multidegrees", [])],
    )


def _tensor_rows(tensor: Mapping[Tuple[int, int], Fraction]) -> List[List[Any]]:
    return [[a, b, rational_to_json(v)] for (a, b), v in sorted(tensor.items())]


def lie_bialgebra_to_json(bialgebra: LieBialgebra) -> Dict[str, Any]:
    """0-based structure constants, cobracket rows [i, j, k, c] for c e_j (x) e_k in delta(e_i)."""
    algebra = bialgebra.algebra
    payload: Dict[str, Any] = {
        "dim": algebra.dim,
        "basis": list(algebra.labels),
        "bracket": [[i, j, k, rational_to_json(c)] for i, j, k, c in algebra.bracket_entries()],
        "cobracket": [
            [i, a, b, rational_to_json(v)]
            for i in sorted(bialgebra.cobracket)
            for (a, b), v in sorted(bialgebra.cobracket[i].items())
        ],
    }
    if bialgebra.r is not None:
        payload["r"] = _tensor_rows(bialgebra.r)
    if bialgebra.metadata:
        payload["metadata"] = {k: _plain(v) for k, v in bialgebra.metadata.items()}
    return payload


def _plain(value: Any) -> Any:
    if isinstance(value, Fraction):
        return rational_to_json(value)
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    return value


def _index(value: Any, dim: int) -> int:
    index = _int(value, "basis index")
    if not 0 <= index < dim:
        raise InputFormatError(f"basis index {index} out of range 0..{dim - 1}")
    return index


def lie_bialgebra_from_json(data: Any) -> LieBialgebra:
    """Decode a Lie bialgebra file; a missing cobracket is computed as ad(r).

    Raises:
        InputFormatError: On malformed rows, bad indices or no cobracket and no r
    """
    dim = _int(_require(data, "dim"), "dim")
    labels = data.get("basis") or [f"e{k}" for k in range(dim)]
    if len(labels) != dim or len(set(labels)) != dim:
        raise InputFormatError("basis must list dim distinct labels")
    entries = []
    for row in _require(data, "bracket", list):
        if not isinstance(row, list) or len(row) != 4:
            raise InputFormatError("bracket rows are [i, j, k, c]")
        entries.append((_index(row[0], dim), _index(row[1], dim), _index(row[2], dim),
                        rational_from_json(row[3])))
    try:
        algebra = LieAlgebra.from_brackets(dim, entries, labels)
    except ValueError as exc:
        raise InputFormatError(str(exc)) from exc

    r = None
    if "r" in data:
        r = {}
        for row in _require(data, "r", list):
            if not isinstance(row, list) or len(row) != 3:
                raise InputFormatError("r rows are [i, j, c]")
            key = (_index(row[0], dim), _index(row[1], dim))
            r[key] = r.get(key, Fraction(0)) + rational_from_json(row[2])
        r = {k: v for k, v in r.items() if v}

    if "cobracket" in data:
        cobracket: Dict[int, Tensor2] = {}
        for row in _require(data, "cobracket", list):
            if not isinstance(row, list) or len(row) != 4:
                raise InputFormatError("cobracket rows are [i, j, k, c]")
            i, a, b = (_index(v, dim) for v in row[:3])
            value = cobracket.setdefault(i, {})
            value[(a, b)] = value.get((a, b), Fraction(0)) + rational_from_json(row[3])
        cobracket = {i: {k: v for k, v in t.items() if v} for i, t in cobracket.items()}
        cobracket = {i: t for i, t in cobracket.items() if t}
    elif r is not None:
        cobracket = cobracket_from_r(algebra, r)
    else:
        raise InputFormatError("need a cobracket or an r-matrix")
    return LieBialgebra(algebra, cobracket, r, dict(data.get("metadata", {})))


def representation_to_json(rep: Representation, labels: Sequence[str]) -> Dict[str, Any]:
    return {
        "carrier_dim": rep.carrier_dim,
        "action": {
            label: [[rational_to_json(from_sympy(v)) for v in matrix.tolist()[i]]
                    for i in range(rep.carrier_dim)]
            for label, matrix in zip(labels, rep.matrices)
        },
    }


def representation_from_json(data: Any, algebra: LieAlgebra) -> Representation:
    """Decode action matrices, one per basis label of the algebra.

    Raises:
        InputFormatError: On unknown or missing labels or wrongly sized matrices
    """
    size = _int(_require(data, "carrier_dim"), "carrier_dim")
    action = _require(data, "action", dict)
    unknown = set(action) - set(algebra.labels)
    if unknown:
        raise InputFormatError(f"action given for unknown basis labels {sorted(unknown)}")
    matrices = []
    for label in algebra.labels:
        if label not in action:
            raise InputFormatError(f"no action matrix for basis element '{label}'")
        rows = action[label]
        if len(rows) != size or any(not isinstance(row, list) or len(row) != size for row in rows):
            raise InputFormatError(f"action of '{label}' must be {size}x{size}")
        matrices.append(sympy.Matrix(size, size, [to_sympy(rational_from_json(v))
                                                  for row in rows for v in row]))
    return Representation(size, matrices)


def report_to_json(report: CheckReport) -> Dict[str, Any]:
    return {
        "title": report.title,
        "passed": report.passed,
        "checks": {item.name: {"passed": item.passed, "detail": item.detail} for item in report.items},
    }
