"""Vectors and matrices over GF(q).

Vectors and matrices are integer numpy arrays of field encodings.  The
canonical ordering of F_q^m is base-q integer order with the first
coordinate most significant; every codeword in the package lists its
coordinates in this order.
"""

from __future__ import annotations

import os
from typing import Iterator, Optional, Sequence

import numpy as np

from .errors import CapExceeded, DimensionMismatch, LengthMismatch
from .gf import FieldContext

DEFAULT_CAP = 10**7


def enumeration_cap(cap: Optional[int] = None) -> int:
    """Resolve the enumeration cap: explicit value, then $MINCODE_CAP, then default."""
    if cap is not None:
        return int(cap)
    env = os.environ.get("MINCODE_CAP")
    return int(env) if env else DEFAULT_CAP


def check_cap(count: int, cap: Optional[int] = None, what: str = "items") -> None:
    limit = enumeration_cap(cap)
    if count > limit:
        raise CapExceeded(f"{count} {what} exceeds the enumeration cap {limit}")


def position_index(ctx: FieldContext, x: Sequence[int]) -> int:
    idx = 0
    for c in x:
        idx = idx * ctx.q + int(c)
    return idx


def index_to_vector(ctx: FieldContext, idx: int, m: int) -> tuple[int, ...]:
    out = [0] * m
    for j in range(m - 1, -1, -1):
        idx, out[j] = divmod(idx, ctx.q)
    return tuple(out)


def vectors_array(ctx: FieldContext, m: int, start: int = 0, stop: Optional[int] = None) -> np.ndarray:
    """Rows are the vectors with position index in ``[start, stop)``."""
    if stop is None:
        stop = ctx.q**m
    idx = np.arange(start, stop, dtype=np.int64)
    out = np.empty((idx.size, m), dtype=np.int64)
    for j in range(m - 1, -1, -1):
        idx, out[:, j] = np.divmod(idx, ctx.q)
    return out


def nonzero_vectors(ctx: FieldContext, m: int, cap: Optional[int] = None) -> np.ndarray:
    """All of F_q^m minus the zero vector, as a ``(q^m - 1, m)`` array."""
    check_cap(ctx.q**m - 1, cap, "vectors")
    return vectors_array(ctx, m, 1)


def enumerate_nonzero(ctx: FieldContext, m: int, cap: Optional[int] = None) -> Iterator[tuple[int, ...]]:
    """Yield the nonzero vectors of F_q^m in increasing position index."""
    check_cap(ctx.q**m - 1, cap, "vectors")
    for idx in range(1, ctx.q**m):
        yield index_to_vector(ctx, idx, m)


def weight(x) -> int:
    return int(np.count_nonzero(np.asarray(x)))


def dot(ctx: FieldContext, v, x) -> int:
    v = np.asarray(v, dtype=np.int64)
    x = np.asarray(x, dtype=np.int64)
    if v.shape != x.shape:
        raise LengthMismatch(f"lengths {v.shape} and {x.shape} differ")
    acc = 0
    for term in ctx.vmul(v, x).tolist():
        acc = ctx.add(acc, term)
    return acc


def matmul(ctx: FieldContext, A, B) -> np.ndarray:
    """Field matrix product ``A @ B``."""
    A = np.atleast_2d(np.asarray(A, dtype=np.int64))
    B = np.atleast_2d(np.asarray(B, dtype=np.int64))
    if A.shape[1] != B.shape[0]:
        raise DimensionMismatch(f"cannot multiply {A.shape} by {B.shape}")
    if ctx.h == 1:
        # chunk the inner dimension so partial sums stay below 2^63
        out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
        step = max(1, (2**62) // max(1, (ctx.p - 1) ** 2))
        for s in range(0, A.shape[1], step):
            out = (out + A[:, s:s + step] @ B[s:s + step, :]) % ctx.p
        return out
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    for t in range(A.shape[1]):
        out = ctx.vadd(out, ctx.vmul(A[:, t:t + 1], B[t:t + 1, :]))
    return out


def rref(ctx: FieldContext, M) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot columns.

    Pivots are the first nonzero entry at or below the current row,
    scanning columns left to right.
    """
    R = np.array(M, dtype=np.int64, copy=True, ndmin=2)
    rows, cols = R.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(R[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            R[[r, piv]] = R[[piv, r]]
        R[r] = ctx.vmul(R[r], ctx.inv(int(R[r, c])))
        factors = R[:, c].copy()
        factors[r] = 0
        hit = np.flatnonzero(factors)
        if hit.size:
            R[hit] = ctx.vsub(R[hit], ctx.vmul(factors[hit, None], R[r][None, :]))
        pivots.append(c)
        r += 1
    return R, pivots


def rank(ctx: FieldContext, M) -> int:
    M = np.asarray(M)
    if M.size == 0:
        return 0
    return len(rref(ctx, M)[1])


def null_space(ctx: FieldContext, M) -> np.ndarray:
    """Basis (as rows) of ``{b : M b^T = 0}``."""
    M = np.atleast_2d(np.asarray(M, dtype=np.int64))
    cols = M.shape[1]
    if M.shape[0] == 0:
        return np.eye(cols, dtype=np.int64)
    R, pivots = rref(ctx, M)
    free = [c for c in range(cols) if c not in set(pivots)]
    B = np.zeros((len(free), cols), dtype=np.int64)
    for i, f in enumerate(free):
        B[i, f] = 1
        for r, pc in enumerate(pivots):
            B[i, pc] = ctx.neg(int(R[r, f]))
    return B


def solve_in_span(ctx: FieldContext, columns, target) -> Optional[list[int]]:
    """Coefficients ``lam`` with ``sum(lam[j] * columns[j]) == target``, or None.

    ``columns`` is a sequence of equal-length vectors (or a 2-D array whose
    rows are those vectors).
    """
    target = np.asarray(target, dtype=np.int64).reshape(-1)
    cols = [np.asarray(c, dtype=np.int64).reshape(-1) for c in columns]
    for c in cols:
        if c.shape != target.shape:
            raise DimensionMismatch(f"column length {c.size} != target length {target.size}")
    if not cols:
        return [] if not np.any(target) else None
    aug = np.column_stack(cols + [target])
    R, pivots = rref(ctx, aug)
    ncols = len(cols)
    if pivots and pivots[-1] == ncols:
        return None
    lam = [0] * ncols
    for r, pc in enumerate(pivots):
        lam[pc] = int(R[r, ncols])
    return lam


def in_row_space(ctx: FieldContext, M, b) -> bool:
    """True iff some ``u`` satisfies ``u M = b`` (rank comparison)."""
    M = np.atleast_2d(np.asarray(M, dtype=np.int64))
    b = np.asarray(b, dtype=np.int64).reshape(1, -1)
    if M.shape[1] != b.shape[1]:
        raise DimensionMismatch(f"row length {M.shape[1]} != {b.shape[1]}")
    return rank(ctx, M) == rank(ctx, np.vstack([M, b]))


def combine(ctx: FieldContext, coeffs: Sequence[int], rows) -> np.ndarray:
    """``sum(coeffs[i] * rows[i])`` over the field."""
    rows = np.atleast_2d(np.asarray(rows, dtype=np.int64))
    return matmul(ctx, np.asarray(coeffs, dtype=np.int64).reshape(1, -1), rows)[0]
