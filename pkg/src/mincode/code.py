"""Generic linear codes over GF(q).

A :class:`LinearCode` is held as a generator matrix.  Codewords are produced
in blocks (``message @ basis``) so weight distributions and the minimality
scan never hold the whole code in memory at once.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Sequence

import numpy as np

from . import linalg
from .errors import DimensionMismatch, ZeroCode
from .gf import FieldContext

BLOCK_ENTRIES = 1 << 21


class LinearCode:
    """Code spanned by the rows of ``G``.

    ``basis`` keeps the rows of ``G`` that are linearly independent (all of
    them when ``G`` has full row rank), so messages index codewords
    bijectively: message ``a`` maps to ``a @ basis``.
    """

    def __init__(self, ctx: FieldContext, G):
        G = np.asarray(G, dtype=np.int64)
        if G.ndim != 2:
            raise DimensionMismatch("generator matrix must be 2-D")
        self.ctx = ctx
        self.G = G
        if G.shape[0] == 0:
            self.basis = G
        else:
            _, pivots = linalg.rref(ctx, G.T)
            self.basis = G[pivots]
        self.G.setflags(write=False)
        self.basis.setflags(write=False)

    @property
    def n(self) -> int:
        return self.G.shape[1]

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    @property
    def size(self) -> int:
        return self.ctx.q**self.dim

    def __repr__(self):
        return f"LinearCode([{self.n}, {self.dim}]_{self.ctx.q})"

    def zero_columns(self) -> list[int]:
        return [int(j) for j in np.flatnonzero(~np.any(self.G, axis=0))]

    def encode(self, message: Sequence[int]) -> np.ndarray:
        return linalg.combine(self.ctx, message, self.basis) if self.dim else np.zeros(self.n, dtype=np.int64)

    def message(self, index: int) -> tuple[int, ...]:
        return linalg.index_to_vector(self.ctx, index, self.dim)

    def _suffix_table(self, s: int) -> np.ndarray:
        """Every combination of the last ``s`` basis rows, in message order."""
        ctx = self.ctx
        table = np.zeros((1, self.n), dtype=np.int64)
        scalars = np.arange(ctx.q, dtype=np.int64)[:, None]
        for row in self.basis[self.dim - s:][::-1]:
            multiples = ctx.vmul(scalars, row[None, :])
            table = ctx.vadd(multiples[:, None, :], table[None, :, :]).reshape(-1, self.n)
        return table

    def blocks(self, start: int = 0, stop: Optional[int] = None) -> Iterator[tuple[int, np.ndarray]]:
        """Yield ``(first_message_index, codewords)`` over ``[start, stop)``.

        Messages sharing a prefix form one block: the prefix combination is
        added to a precomputed table of all suffix combinations.
        """
        if stop is None:
            stop = self.size
        if start >= stop:
            return
        if self.dim == 0:
            yield 0, np.zeros((1, self.n), dtype=np.int64)
            return
        q = self.ctx.q
        s = 1
        while s < self.dim and q ** (s + 1) * self.n <= BLOCK_ENTRIES:
            s += 1
        suffix = self._suffix_table(s)
        width = q**s
        for prefix in range(start // width, (stop - 1) // width + 1):
            head = linalg.index_to_vector(self.ctx, prefix, self.dim - s)
            base = linalg.combine(self.ctx, head, self.basis[:self.dim - s]) if self.dim > s else None
            block = suffix if base is None else self.ctx.vadd(base[None, :], suffix)
            lo = max(start, prefix * width)
            hi = min(stop, (prefix + 1) * width)
            yield lo, block[lo - prefix * width:hi - prefix * width]


@dataclass(frozen=True)
class Codeword:
    entries: tuple[int, ...]

    @property
    def support(self) -> frozenset[int]:
        return frozenset(i for i, c in enumerate(self.entries) if c)

    @property
    def weight(self) -> int:
        return len(self.support)


def _support(c) -> frozenset[int]:
    if isinstance(c, Codeword):
        return c.support
    return frozenset(int(i) for i in np.flatnonzero(np.asarray(c)))


def covers(c1, c2) -> bool:
    """True iff Supp(c2) is contained in Supp(c1)."""
    return _support(c2) <= _support(c1)


def enumerate_codewords(code: LinearCode, cap: Optional[int] = None) -> Iterator[tuple[tuple[int, ...], Codeword]]:
    """Yield ``(message, codeword)`` pairs in canonical message order."""
    linalg.check_cap(code.size, cap, "codewords")
    for start, block in code.blocks():
        for offset, row in enumerate(block):
            yield code.message(start + offset), Codeword(tuple(int(c) for c in row))


# --- weights -----------------------------------------------------------------

def _weights_range(code: LinearCode, start: int, stop: int) -> np.ndarray:
    out = [np.count_nonzero(block, axis=1) for _, block in code.blocks(start, stop)]
    return np.concatenate(out) if out else np.zeros(0, dtype=np.int64)


def _split(total: int, parts: int) -> list[tuple[int, int]]:
    parts = max(1, min(parts, total))
    edges = [total * i // parts for i in range(parts + 1)]
    return [(a, b) for a, b in zip(edges, edges[1:]) if a < b]


def codeword_weights(code: LinearCode, cap: Optional[int] = None, workers: int = 1) -> np.ndarray:
    """Hamming weight of every codeword, indexed by message index."""
    linalg.check_cap(code.size, cap, "codewords")
    if workers <= 1 or code.size < 2 * workers:
        return _weights_range(code, 0, code.size)
    ranges = _split(code.size, workers)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = pool.map(_weights_range, [code] * len(ranges), *zip(*ranges))
        return np.concatenate(list(parts))


def weight_distribution(code: LinearCode, cap: Optional[int] = None, workers: int = 1) -> dict[int, int]:
    counts = np.bincount(codeword_weights(code, cap, workers), minlength=code.n + 1)
    return {int(w): int(c) for w, c in enumerate(counts) if c}


def weight_csv(distribution: dict[int, int]) -> str:
    lines = ["weight,count"] + [f"{w},{c}" for w, c in sorted(distribution.items())]
    return "\n".join(lines) + "\n"


# --- minimality --------------------------------------------------------------

@dataclass(frozen=True)
class MinimalityVerdict:
    minimal: bool
    covering: Optional[tuple[int, ...]] = None
    covered: Optional[tuple[int, ...]] = None

    def to_json(self) -> dict:
        cex = None
        if not self.minimal:
            cex = {"covering": list(self.covering), "covered": list(self.covered)}
        return {"minimal": self.minimal, "counterexample": cex}


def _mask(row: np.ndarray) -> int:
    return int.from_bytes(np.packbits(row != 0).tobytes(), "big")


def _representatives(code: LinearCode, start: int, stop: int) -> list[tuple[int, int, int]]:
    """(weight, support mask, message index) for codewords whose first nonzero entry is 1."""
    out = []
    for s, block in code.blocks(start, stop):
        nz = block != 0
        has = nz.any(axis=1)
        lead = block[np.arange(block.shape[0]), nz.argmax(axis=1)]
        for i in np.flatnonzero(has & (lead == 1)):
            out.append((int(nz[i].sum()), _mask(block[i]), s + int(i)))
    return out


def _scan_covers(reps: list[tuple[int, int, int]], lo: int, hi: int) -> Optional[tuple[int, int]]:
    """First (covering, covered) message pair among covered indices [lo, hi).

    ``reps`` is sorted by weight, so only heavier-or-equal entries can cover.
    """
    weights = [r[0] for r in reps]
    first_at = {}
    for i, w in enumerate(weights):
        first_at.setdefault(w, i)
    for j in range(lo, hi):
        wj, mj, msg_j = reps[j]
        for i in range(first_at[wj], len(reps)):
            if i != j and reps[i][1] & mj == mj:
                return reps[i][2], msg_j
    return None


def is_minimal_code(code: LinearCode, cap: Optional[int] = None, workers: int = 1) -> MinimalityVerdict:
    """Brute-force minimality test over projective representatives.

    One codeword per scalar class (leading nonzero entry equal to 1) is
    kept.  Distinct representatives are never proportional, so any support
    containment between two of them, equality included, refutes minimality.
    """
    linalg.check_cap(code.size, cap, "codewords")
    reps = sorted(_representatives(code, 0, code.size))
    if workers <= 1 or len(reps) < 2 * workers:
        found = _scan_covers(reps, 0, len(reps))
    else:
        ranges = _split(len(reps), workers)
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_scan_covers, [reps] * len(ranges), *zip(*ranges)))
        found = next((r for r in results if r is not None), None)
    if found is None:
        return MinimalityVerdict(True)
    covering, covered = (tuple(int(c) for c in code.encode(code.message(i))) for i in found)
    return MinimalityVerdict(False, covering, covered)


def naive_is_minimal(code: LinearCode) -> MinimalityVerdict:
    """All-pairs minimality test straight from the definition (tiny codes only).

    Codewords come from every combination of the rows of ``G`` using scalar
    field arithmetic, independently of :meth:`LinearCode.blocks`.
    """
    ctx = code.ctx
    rows = code.G.tolist()
    words = set()
    for coeffs in itertools.product(ctx.elements(), repeat=len(rows)):
        w = [0] * code.n
        for c, row in zip(coeffs, rows):
            if c:
                w = [ctx.add(a, ctx.mul(c, b)) for a, b in zip(w, row)]
        if any(w):
            words.add(tuple(w))
    words = sorted(words)
    supports = [frozenset(i for i, x in enumerate(w) if x) for w in words]
    for a, wa in enumerate(words):
        multiples = {tuple(ctx.mul(lam, x) for x in wa) for lam in ctx.elements()}
        for b, wb in enumerate(words):
            if supports[b] <= supports[a] and wb not in multiples:
                return MinimalityVerdict(False, wa, wb)
    return MinimalityVerdict(True)


# --- Ashikhmin-Barg ----------------------------------------------------------

@dataclass(frozen=True)
class ABCheck:
    w_min: int
    w_max: int
    ratio: Fraction
    threshold: Fraction
    holds: bool


def ab_sufficient(code: LinearCode, distribution: Optional[dict[int, int]] = None, cap: Optional[int] = None) -> ABCheck:
    """Evaluate the Ashikhmin-Barg condition ``w_min / w_max > (q-1)/q`` exactly."""
    if distribution is None:
        distribution = weight_distribution(code, cap)
    nonzero = [w for w in distribution if w > 0]
    if not nonzero:
        raise ZeroCode("code has no nonzero codeword")
    w_min, w_max = min(nonzero), max(nonzero)
    ratio = Fraction(w_min, w_max)
    threshold = Fraction(code.ctx.q - 1, code.ctx.q)
    return ABCheck(w_min, w_max, ratio, threshold, ratio > threshold)


def dual(code: LinearCode) -> LinearCode:
    return LinearCode(code.ctx, linalg.null_space(code.ctx, code.G))
