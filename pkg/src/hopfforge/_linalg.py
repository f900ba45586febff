"""Sparse exact Gauss-Jordan elimination over Q or F_p.

Rows are ``{column: value}`` dicts holding normalized field elements.  The
reduced row echelon form is unique, so the results below do not depend on
the elimination order.
"""

from __future__ import annotations

from typing import Sequence

from ._exact import ExactMatrix
from .field import FieldSpec

Row = dict


def _axpy(field: FieldSpec, target: Row, coeff, source: Row) -> None:
    """``target -= coeff * source`` in place, dropping zeros."""
    p = field.p
    for c, v in source.items():
        w = target.get(c)
        if p is None:
            nv = (w or 0) - coeff * v
        else:
            nv = ((w or 0) - coeff * v) % p
        if nv:
            target[c] = nv
        elif w is not None:
            del target[c]


def _scaled(field: FieldSpec, row: Row, coeff) -> Row:
    if field.p is None:
        return {c: v * coeff for c, v in row.items()}
    return {c: v * coeff % field.p for c, v in row.items()}


def echelon_rows(field: FieldSpec, rows: Sequence[Row]) -> dict[int, Row]:
    """Echelon basis of the row span, keyed by pivot column (pivot entry 1)."""
    pivots: dict[int, Row] = {}
    for row in rows:
        v = dict(row)
        while v:
            c = min(v)
            piv = pivots.get(c)
            if piv is None:
                pivots[c] = _scaled(field, v, field.inv(v[c]))
                break
            _axpy(field, v, v[c], piv)
    return pivots


def rref_rows(field: FieldSpec, rows: Sequence[Row], ncols: int | None = None):
    """Reduced row echelon form: ``(list of rows, list of pivot columns)``."""
    pivots = echelon_rows(field, rows)
    cols = sorted(pivots)
    for c in reversed(cols):
        piv = pivots[c]
        for c2 in cols:
            if c2 < c:
                other = pivots[c2]
                coeff = other.get(c)
                if coeff:
                    _axpy(field, other, coeff, piv)
    return [pivots[c] for c in cols], cols


def nullspace(field: FieldSpec, mat: ExactMatrix) -> list[Row]:
    """Basis of ``{x : mat x = 0}`` in reduced echelon form (as rows)."""
    n = mat.shape[1]
    rref, pivots = rref_rows(field, mat.row_dicts(), n)
    pivot_set = set(pivots)
    basis = []
    for f in range(n):
        if f in pivot_set:
            continue
        vec = {f: field.one}
        for row, pc in zip(rref, pivots):
            v = row.get(f)
            if v:
                vec[pc] = field.neg(v)
        basis.append(vec)
    reduced, _ = rref_rows(field, basis, n)
    return reduced


def rows_to_matrix(field: FieldSpec, rows: Sequence[Row], ncols: int) -> ExactMatrix:
    entries = [(r, c, v) for r, row in enumerate(rows) for c, v in row.items()]
    return ExactMatrix.from_entries(field, len(rows), ncols, entries)


def solve(field: FieldSpec, a: ExactMatrix, b: ExactMatrix):
    """Solve ``a @ x = b``.

    Returns ``(x, unique)`` with the particular solution whose free variables
    vanish, or ``None`` when the system is inconsistent.
    """
    m, n = a.shape
    if b.shape[0] != m:
        raise ValueError("right-hand side has the wrong number of rows")
    k = b.shape[1]
    arows = a.row_dicts()
    brows = b.row_dicts()
    aug = []
    for ar, br in zip(arows, brows):
        row = dict(ar)
        for c, v in br.items():
            row[n + c] = v
        aug.append(row)
    rref, pivots = rref_rows(field, aug, n + k)
    if pivots and pivots[-1] >= n:
        return None
    entries = []
    for row, pc in zip(rref, pivots):
        for c, v in row.items():
            if c >= n:
                entries.append((pc, c - n, v))
    x = ExactMatrix.from_entries(field, n, k, entries)
    return x, len(pivots) == n
