"""Exact dense linear algebra over a coefficient field.

Matrices are lists of row lists holding field elements.  Everything here is
Gauss-Jordan with exact arithmetic; no floating point anywhere.
"""

from __future__ import annotations

from typing import List, Optional, Sequence, Tuple

__all__ = ["row_reduce", "rank", "solve_column"]


def row_reduce(rows: Sequence[Sequence], field) -> Tuple[List[list], List[int]]:
    """Reduced row echelon form.

    Returns (nonzero rows, pivot column indices); zero rows are dropped.
    """
    mat = [list(r) for r in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    for r in mat:
        if len(r) != ncols:
            raise ValueError("ragged matrix")
    pivots: List[int] = []
    zero, one = field.zero, field.one
    lead = 0
    for col in range(ncols):
        piv = None
        for i in range(lead, len(mat)):
            if mat[i][col] != zero:
                piv = i
                break
        if piv is None:
            continue
        mat[lead], mat[piv] = mat[piv], mat[lead]
        inv = field.inv(mat[lead][col])
        if mat[lead][col] != one:
            mat[lead] = [field.mul(inv, v) for v in mat[lead]]
        for i in range(len(mat)):
            if i != lead and mat[i][col] != zero:
                c = mat[i][col]
                mat[i] = [
                    field.sub(a, field.mul(c, b)) for a, b in zip(mat[i], mat[lead])
                ]
        pivots.append(col)
        lead += 1
        if lead == len(mat):
            break
    return mat[:lead], pivots


def rank(rows: Sequence[Sequence], field) -> int:
    return len(row_reduce(rows, field)[0])


def solve_column(columns: Sequence[Sequence], target: Sequence, field) -> Optional[list]:
    """Coefficients expressing ``target`` as a combination of ``columns``.

    Solves A x = target where A's columns are given; returns None when the
    system is inconsistent.  Free variables, if any, are set to zero.
    """
    n = len(target)
    for c in columns:
        if len(c) != n:
            raise ValueError("column length mismatch")
    k = len(columns)
    aug = [[columns[j][i] for j in range(k)] + [target[i]] for i in range(n)]
    reduced, pivots = row_reduce(aug, field)
    if k in pivots:
        return None  # pivot in the augmented column
    x = [field.zero] * k
    for r, col in zip(reduced, pivots):
        x[col] = r[k]
    return x
