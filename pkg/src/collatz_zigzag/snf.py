"""Smith normal form of small dense integer matrices.

This is a correctness oracle, not a production path, so it uses the classic
elimination: pick the nonzero entry of smallest magnitude as pivot, reduce
its row and column by division with remainder, repair any divisibility
violation in the trailing block, and move on to the next diagonal position.
Exact arithmetic throughout, with a hard cap on the dimensions.
"""

from __future__ import annotations

from typing import Sequence

DEFAULT_MAX_DIM = 32


def smith_normal_form(
    matrix: Sequence[Sequence[int]], *, max_dim: int = DEFAULT_MAX_DIM
) -> tuple[int, ...]:
    """Invariant factors d_1 | d_2 | ... of an integer matrix.

    Returns min(rows, cols) nonnegative integers, zero-padded past the rank,
    each dividing the next nonzero one.
    """
    a = [[int(v) for v in row] for row in matrix]
    nrows = len(a)
    if nrows == 0 or len(a[0]) == 0:
        raise ValueError("matrix must have at least one row and one column")
    ncols = len(a[0])
    if any(len(row) != ncols for row in a):
        raise ValueError("matrix rows must all have the same length")
    if nrows > max_dim or ncols > max_dim:
        raise ValueError(
            f"matrix is {nrows}x{ncols}; this oracle is capped at {max_dim}x{max_dim}"
        )

    size = min(nrows, ncols)
    factors: list[int] = []
    for t in range(size):
        if _min_abs_nonzero(a, t, nrows, ncols) is None:
            break
        while True:
            i0, j0 = _min_abs_nonzero(a, t, nrows, ncols)
            a[t], a[i0] = a[i0], a[t]
            if j0 != t:
                for row in a:
                    row[t], row[j0] = row[j0], row[t]
            pivot = a[t][t]
            dirty = False
            for i in range(t + 1, nrows):
                if a[i][t]:
                    q = a[i][t] // pivot
                    if q:
                        for j in range(t, ncols):
                            a[i][j] -= q * a[t][j]
                    if a[i][t]:
                        dirty = True
            for j in range(t + 1, ncols):
                if a[t][j]:
                    q = a[t][j] // pivot
                    if q:
                        for i in range(t, nrows):
                            a[i][j] -= q * a[i][t]
                    if a[t][j]:
                        dirty = True
            if dirty:
                continue
            offender = _non_multiple(a, t, nrows, ncols, pivot)
            if offender is None:
                break
            # folding the offending row into the pivot row re-exposes the
            # violation in the pivot's own row, where the reduction fixes it
            for j in range(t, ncols):
                a[t][j] += a[offender][j]
        factors.append(abs(a[t][t]))
    factors.extend([0] * (size - len(factors)))
    return tuple(factors)


def _min_abs_nonzero(a, t, nrows, ncols):
    best = None
    best_val = None
    for i in range(t, nrows):
        for j in range(t, ncols):
            v = a[i][j]
            if v and (best_val is None or abs(v) < best_val):
                best, best_val = (i, j), abs(v)
    return best


def _non_multiple(a, t, nrows, ncols, pivot):
    for i in range(t + 1, nrows):
        for j in range(t + 1, ncols):
            if a[i][j] % pivot:
                return i
    return None
