"""Certificate JSON documents: emission and independent re-verification."""

from __future__ import annotations

import json
from typing import Iterable

from .criterion import InternalInconsistency, criterion_scan, dense_first_row_powers
from .graphs import DEFAULT_RADIUS_CAP, GraphError, RadiusExceeded, distance, graph_from_spec, weights_from_spec
from .operators import OperatorError, affine_reduce, build_laplacian, power_entry
from .scalars import FIELDS, ScalarError, format_scalar, parse_scalar

__all__ = ["build_instance", "dumps", "emit_certificate", "verify_certificate"]


def build_instance(graph="ray", weights="uniform", alpha="0", beta="1", field="rational"):
    """Graph and splitting of ``alpha Id + beta Laplacian``.

    Scalars may be given as literals or exact numbers.
    """
    if field not in FIELDS:
        raise ScalarError(f"unknown field {field!r}")
    g = graph_from_spec(graph)
    w = weights_from_spec(weights)
    if isinstance(alpha, str):
        alpha = parse_scalar(alpha, field)
    if isinstance(beta, str):
        beta = parse_scalar(beta, field)
    _, pair = build_laplacian(g, w, field)
    return g, affine_reduce(alpha, beta, pair)


def emit_certificate(g, pair, m_range: Iterable[int]) -> dict:
    """Certificate rows for each ``m``, cross-checked against dense sections."""
    rows = criterion_scan(g, pair, 1, list(m_range))
    if not rows:
        raise ValueError("empty m range")
    N = max(c.l + c.k for c in rows) + 1
    powers = dense_first_row_powers(pair, N, max(c.k for c in rows))
    for c in rows:
        if powers[c.k][c.l - 1] != c.value:
            raise InternalInconsistency(
                f"m={c.m}: dense section of size {N} gives {format_scalar(powers[c.k][c.l - 1])}")
    desc = pair.descriptor
    return {
        "operator": {
            "graph": desc["graph"],
            "weights": desc["weights"],
            "alpha": desc["alpha"],
            "beta": desc["beta"],
            "field": desc["field"],
        },
        "n": 1,
        "rows": [c.row_json() for c in rows],
        "verified": True,
        "oracle_section": N,
    }


def dumps(doc) -> str:
    return json.dumps(doc, indent=2) + "\n"


def _int_field(row, key):
    value = row.get(key)
    if not isinstance(value, int) or isinstance(value, bool):
        raise ValueError(f"'{key}' must be an integer, got {value!r}")
    return value


def verify_certificate(doc, radius_cap: int = DEFAULT_RADIUS_CAP) -> list[str]:
    """Recheck a certificate document from scratch.

    Returns a list of human-readable problems; an empty list means the
    certificate is valid. Witnesses must use the canonical column
    ``l = m + 1`` and ``oracle_section`` must be ``max(l + k) + 1``.
    """
    if not isinstance(doc, dict):
        return ["certificate must be a JSON object"]
    problems = []
    expected_keys = {"operator", "n", "rows", "verified", "oracle_section"}
    if set(doc) != expected_keys:
        problems.append(f"top-level keys {sorted(doc)} != {sorted(expected_keys)}")
    if doc.get("n") != 1 or isinstance(doc.get("n"), bool):
        problems.append(f"n must be 1, got {doc.get('n')!r}")
    if doc.get("verified") is not True:
        problems.append(f"verified must be true, got {doc.get('verified')!r}")
    op = doc.get("operator")
    try:
        if not isinstance(op, dict):
            raise ValueError("missing operator descriptor")
        field = op.get("field", "rational")
        g, pair = build_instance(op["graph"], op["weights"], op["alpha"], op["beta"], field)
    except (KeyError, ValueError, TypeError, GraphError, OperatorError, ScalarError) as exc:
        problems.append(f"operator: {exc}")
        return problems
    rows = doc.get("rows")
    if not isinstance(rows, list) or not rows:
        problems.append("rows must be a nonempty list")
        return problems

    checked = []
    for idx, row in enumerate(rows):
        where = f"row {idx}"
        try:
            if not isinstance(row, dict) or set(row) != {"m", "l", "k", "value", "cross_check"}:
                raise ValueError("row must have exactly m, l, k, value, cross_check")
            m, l, k = (_int_field(row, key) for key in ("m", "l", "k"))
            where = f"row {idx} (m={m})"
            if m < 1:
                raise ValueError(f"m={m} is not positive")
            if l != m + 1:
                raise ValueError(f"l={l} is not the canonical witness m+1={m + 1}")
            d = distance(g, 1, l, radius_cap)
            if k != d:
                raise ValueError(f"k={k} but d(v_1, v_{l}) = {d}")
            value = parse_scalar(row["value"], field)
            cross = parse_scalar(row["cross_check"], field)
            if row["value"] != format_scalar(value) or row["cross_check"] != format_scalar(cross):
                raise ValueError("scalars are not in canonical form")
            actual = power_entry(pair, k, 1, l)
            b_k = power_entry(pair.B, k, 1, l)
            expected_cross = -b_k if k % 2 else b_k
            if value != actual:
                raise ValueError(f"value {row['value']} != recomputed {format_scalar(actual)}")
            if cross != expected_cross:
                raise ValueError(f"cross_check {row['cross_check']} != recomputed {format_scalar(expected_cross)}")
            if value != cross:
                raise ValueError("value and cross_check differ")
            if not value:
                raise ValueError("witness value is zero")
            checked.append((l, k, value))
        except (ValueError, TypeError, ScalarError, GraphError, RadiusExceeded) as exc:
            problems.append(f"{where}: {exc}")

    if checked and len(checked) == len(rows):
        N = max(l + k for l, k, _ in checked) + 1
        section = doc.get("oracle_section")
        if section != N or isinstance(section, bool):
            problems.append(f"oracle_section must be {N}, got {section!r}")
        powers = dense_first_row_powers(pair, N, max(k for _, k, _ in checked))
        for idx, (l, k, value) in enumerate(checked):
            if powers[k][l - 1] != value:
                problems.append(f"row {idx}: dense section disagrees ({format_scalar(powers[k][l - 1])})")
    return problems
