"""The code C_f and its predicted parameters.

For ``x`` in F_q^m minus zero, ``f(x) = alpha[w(x)]`` when ``w(x) <= k`` and
``0`` otherwise.  The codeword of message ``(u, v)`` has entry
``u f(x) + v.x`` at coordinate ``x``; coordinates follow the canonical
order of :mod:`mincode.linalg`.
"""

from __future__ import annotations

import warnings
from dataclasses import asdict, dataclass, field
from math import comb
from typing import Any, Optional, Sequence

import numpy as np

from . import code as code_core
from . import linalg
from .errors import (ClaimFailed, CompositeP, EvenP, InvalidDescriptor, SameHyperplane, ZeroColumn, ZeroMessage,
                     ZeroVector)
from .gf import FieldContext, is_prime, make_field, split_prime_power

FORMAT_VERSION = 1


@dataclass(frozen=True)
class CodeDescriptor:
    p: int
    h: int
    m: int
    k: int
    alpha: tuple[int, ...] = ()
    irreducible: Optional[tuple[int, ...]] = None

    def __post_init__(self):
        if not is_prime(self.p):
            raise CompositeP(f"p={self.p} is not prime")
        if self.p == 2:
            raise EvenP("characteristic 2 is not supported; p must be odd")
        if self.h < 1:
            raise InvalidDescriptor(f"h={self.h} must be >= 1")
        if self.m <= 3:
            raise InvalidDescriptor(f"m={self.m} must be greater than 3")
        if not 1 <= self.k <= self.m - 2:
            raise InvalidDescriptor(f"k={self.k} must lie in [1, m-2] = [1, {self.m - 2}]")
        if self.k == 1:
            warnings.warn("k=1 lies outside the family's stated range k >= 2", stacklevel=3)
        alpha = tuple(int(a) for a in self.alpha) if self.alpha else (1,) * self.k
        if len(alpha) != self.k:
            raise InvalidDescriptor(f"alpha has {len(alpha)} entries, expected k={self.k}")
        if any(not 0 < a < self.q for a in alpha):
            raise InvalidDescriptor(f"alpha entries must be nonzero field elements in [1, {self.q - 1}]")
        object.__setattr__(self, "alpha", alpha)
        if self.irreducible is not None:
            object.__setattr__(self, "irreducible", tuple(int(c) for c in self.irreducible))

    @property
    def q(self) -> int:
        return self.p**self.h

    @property
    def field(self) -> FieldContext:
        return make_field(self.p, self.h, self.irreducible)

    @classmethod
    def from_q(cls, q: int, m: int, k: int, alpha: Sequence[int] = ()) -> "CodeDescriptor":
        p, h = split_prime_power(q)
        return cls(p, h, m, k, tuple(alpha))

    @classmethod
    def from_json(cls, data: dict) -> "CodeDescriptor":
        try:
            return cls(int(data["p"]), int(data.get("h", 1)), int(data["m"]), int(data["k"]),
                       tuple(data.get("alpha") or ()), data.get("irreducible"))
        except KeyError as exc:
            raise InvalidDescriptor(f"descriptor is missing {exc.args[0]!r}") from None

    def to_json(self) -> dict:
        out: dict[str, Any] = {"p": self.p, "h": self.h}
        if self.h > 1:
            out["irreducible"] = list(self.field.irreducible)
        out.update(m=self.m, k=self.k, alpha=list(self.alpha))
        return out


# --- f and the code ----------------------------------------------------------

def _alpha_table(d: CodeDescriptor) -> np.ndarray:
    table = np.zeros(d.m + 1, dtype=np.int64)
    table[1:d.k + 1] = d.alpha
    return table


def eval_f(d: CodeDescriptor, x: Sequence[int]) -> int:
    w = linalg.weight(x)
    if w == 0:
        raise ZeroVector("f is undefined at the zero vector")
    return d.alpha[w - 1] if w <= d.k else 0


def f_values(d: CodeDescriptor, X: np.ndarray) -> np.ndarray:
    return _alpha_table(d)[np.count_nonzero(X, axis=1)]


def build_code(d: CodeDescriptor, cap: Optional[int] = None) -> code_core.LinearCode:
    """Generator matrix with rows c(1, 0), c(0, e_1), ..., c(0, e_m)."""
    ctx = d.field
    X = linalg.nonzero_vectors(ctx, d.m, cap)
    G = np.vstack([f_values(d, X), X.T])
    code = code_core.LinearCode(ctx, G)
    if code.zero_columns():
        raise ZeroColumn(f"zero columns at {code.zero_columns()}")
    return code


def codeword(d: CodeDescriptor, u: int, v: Sequence[int], cap: Optional[int] = None) -> np.ndarray:
    """c(u, v) evaluated pointwise, without a generator matrix."""
    ctx = d.field
    X = linalg.nonzero_vectors(ctx, d.m, cap)
    inner = linalg.matmul(ctx, X, np.asarray(v, dtype=np.int64).reshape(-1, 1))[:, 0]
    return ctx.vadd(ctx.vmul(u, f_values(d, X)), inner)


def support_complement(d: CodeDescriptor, u: int, v: Sequence[int], cap: Optional[int] = None):
    """Zero coordinates of c(u, v), split into H-bar and the k sets L-bar_i.

    H-bar = {y : v.y = 0, w(y) > k};  L-bar_i = {y : v.y = -alpha_i u, w(y) = i}.
    """
    v = np.asarray(v, dtype=np.int64)
    if u == 0 and not v.any():
        raise ZeroMessage("(u, v) must not be the zero message")
    ctx = d.field
    X = linalg.nonzero_vectors(ctx, d.m, cap)
    inner = linalg.matmul(ctx, X, v.reshape(-1, 1))[:, 0]
    w = np.count_nonzero(X, axis=1)

    def points(mask):
        return frozenset(map(tuple, X[mask].tolist()))

    hbar = points((inner == 0) & (w > d.k))
    lbar = [points((inner == ctx.neg(ctx.mul(a, u))) & (w == i)) for i, a in enumerate(d.alpha, start=1)]
    return hbar, lbar


# --- hyperplanes -------------------------------------------------------------

def proportional(ctx: FieldContext, v, w) -> bool:
    return linalg.rank(ctx, np.vstack([v, w])) <= 1


def hyperplane_classes(ctx: FieldContext, m: int) -> np.ndarray:
    """One normal vector per hyperplane through the origin (leading entry 1)."""
    X = linalg.nonzero_vectors(ctx, m)
    lead = X[np.arange(len(X)), (X != 0).argmax(axis=1)]
    return X[lead == 1]


def verify_hyperplane_separation(d: CodeDescriptor, v, v2, cap: Optional[int] = None):
    """Find A in H(v) \\ H(v2) and B in H(v2) \\ H(v), both of weight > k."""
    ctx = d.field
    v = np.asarray(v, dtype=np.int64)
    v2 = np.asarray(v2, dtype=np.int64)
    if not v.any() or not v2.any():
        raise ZeroVector("hyperplane normals must be nonzero")
    if proportional(ctx, v, v2):
        raise SameHyperplane(f"{v.tolist()} and {v2.tolist()} define the same hyperplane")
    X = linalg.nonzero_vectors(ctx, d.m, cap)
    X = X[np.count_nonzero(X, axis=1) > d.k]
    a = linalg.matmul(ctx, X, v.reshape(-1, 1))[:, 0]
    b = linalg.matmul(ctx, X, v2.reshape(-1, 1))[:, 0]
    in_a = np.flatnonzero((a == 0) & (b != 0))
    in_b = np.flatnonzero((b == 0) & (a != 0))
    if in_a.size == 0 or in_b.size == 0:
        raise ClaimFailed(Claim("hyperplane separation witnesses exist", True, False, False))
    return tuple(X[in_a[0]].tolist()), tuple(X[in_b[0]].tolist())


# --- predicted parameters ----------------------------------------------------

def low_weight_count(q: int, m: int, k: int) -> int:
    """Number of nonzero vectors of F_q^m with weight at most k."""
    return sum(comb(m, i) * (q - 1) ** i for i in range(1, k + 1))


def constraint1(q: int, m: int, k: int) -> bool:
    lhs = (q**m - 1
           - sum(comb(m - 1, i) * (q - 1) ** i for i in range(1, m))
           - sum(comb(m - 1, i) * (q - 1) ** i for i in range(1, k + 1)))
    return lhs >= low_weight_count(q, m, k)


def constraint2(q: int, m: int, k: int) -> bool:
    lhs = sum(comb(m, i) * (q - 1) ** (i - 1) for i in range(1, k + 1))
    return lhs <= q ** (m - 1) - q ** (m - 2)


def corollary_region(q: int, m: int, k: int) -> bool:
    # k <= (m-1)/2 read over the rationals
    return q >= 5 and 2 < m <= q - 1 and 2 * k <= m - 1


@dataclass(frozen=True)
class PredictedParams:
    q: int
    m: int
    k: int
    n: int
    dim: int
    w_min_formula: int
    w_max_lower: int
    constraint1: bool
    constraint2: bool
    corollary_region: bool

    def to_json(self) -> dict:
        return asdict(self)


def predict(q: int, m: int, k: int) -> PredictedParams:
    return PredictedParams(
        q=q, m=m, k=k,
        n=q**m - 1,
        dim=m + 1,
        w_min_formula=low_weight_count(q, m, k),
        w_max_lower=q**m - q ** (m - 1),
        constraint1=constraint1(q, m, k),
        constraint2=constraint2(q, m, k),
        corollary_region=corollary_region(q, m, k),
    )


def predict_params(d: CodeDescriptor) -> PredictedParams:
    return predict(d.q, d.m, d.k)


# --- verification ------------------------------------------------------------

@dataclass(frozen=True)
class Claim:
    claim: str
    predicted: Any
    observed: Any
    passed: bool

    def to_json(self) -> dict:
        return {"claim": self.claim, "predicted": self.predicted, "observed": self.observed, "pass": self.passed}


@dataclass
class VerificationReport:
    descriptor: Optional[CodeDescriptor]
    predicted: Optional[PredictedParams]
    claims: list[Claim]
    verdict: code_core.MinimalityVerdict
    ab: Optional[code_core.ABCheck]
    distribution: dict[int, int] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.claims)

    def failures(self) -> list[Claim]:
        return [c for c in self.claims if not c.passed]

    def to_json(self) -> dict:
        out: dict[str, Any] = {"format_version": FORMAT_VERSION}
        if self.descriptor is not None:
            out["descriptor"] = self.descriptor.to_json()
        if self.predicted is not None:
            out["predicted"] = self.predicted.to_json()
        out["claims"] = [c.to_json() for c in self.claims]
        out.update(self.verdict.to_json())
        if self.ab is not None:
            out["w_min"] = self.ab.w_min
            out["w_max"] = self.ab.w_max
            out["ab_ratio"] = str(self.ab.ratio)
            out["ab_holds"] = self.ab.holds
        out["all_pass"] = self.passed
        return out


def _distinct(values) -> list[int]:
    return sorted({int(x) for x in values})


def verify_instance(d: CodeDescriptor, cap: Optional[int] = None, workers: int = 1,
                    strict: bool = False) -> VerificationReport:
    """Build C_f, enumerate it, and check every predicted property.

    With ``strict=True`` the first failing claim is raised as ClaimFailed.
    """
    pred = predict_params(d)
    q, m = d.q, d.m
    code = build_code(d, cap)
    weights = code_core.codeword_weights(code, cap, workers)
    counts = np.bincount(weights, minlength=code.n + 1)
    distribution = {int(w): int(c) for w, c in enumerate(counts) if c}
    verdict = code_core.is_minimal_code(code, cap, workers)
    ab = code_core.ab_sufficient(code, distribution)

    claims = [
        Claim("length = q^m - 1", pred.n, code.n, code.n == pred.n),
    ]
    dim = linalg.rank(code.ctx, code.G)
    claims.append(Claim("dimension = m + 1", pred.dim, dim, dim == pred.dim))
    if d.k >= 2:
        # k = 1 is outside the family; its verdict is reported but not claimed
        claims.append(Claim("code is minimal", True, verdict.minimal, verdict.minimal))
    if dim == pred.dim:
        # message index of (u, v) is u*q^m + index(v)
        scalar = _distinct(weights[q**m * np.arange(1, q)])
        linear = _distinct(weights[1:q**m])
        claims.append(Claim("w(c(u,0)) = sum_{i<=k} C(m,i)(q-1)^i for u != 0",
                            pred.w_min_formula, scalar, scalar == [pred.w_min_formula]))
        claims.append(Claim("w(c(0,v)) = q^m - q^(m-1) for v != 0",
                            pred.w_max_lower, linear, linear == [pred.w_max_lower]))
    if pred.constraint1:
        claims.append(Claim("w_min = formula (constraint 1 holds)", pred.w_min_formula, ab.w_min,
                            ab.w_min == pred.w_min_formula))
    else:
        claims.append(Claim("w_min <= formula (constraint 1 fails)", pred.w_min_formula, ab.w_min,
                            ab.w_min <= pred.w_min_formula))
    claims.append(Claim("w_max >= q^m - q^(m-1)", pred.w_max_lower, ab.w_max, ab.w_max >= pred.w_max_lower))
    if pred.constraint2:
        claims.append(Claim("w_min/w_max <= (q-1)/q (constraint 2 holds)", str(ab.threshold), str(ab.ratio),
                            ab.ratio <= ab.threshold))

    report = VerificationReport(d, pred, claims, verdict, ab, distribution)
    if strict and not report.passed:
        raise ClaimFailed(report.failures()[0])
    return report


def verify_generic(code: code_core.LinearCode, cap: Optional[int] = None, workers: int = 1) -> VerificationReport:
    """Minimality and Ashikhmin-Barg report for an arbitrary code."""
    distribution = code_core.weight_distribution(code, cap, workers)
    verdict = code_core.is_minimal_code(code, cap, workers)
    ab = code_core.ab_sufficient(code, distribution) if len(distribution) > 1 else None
    claims = [Claim("code is minimal", True, verdict.minimal, verdict.minimal)]
    return VerificationReport(None, None, claims, verdict, ab, distribution)
