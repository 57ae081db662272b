"""Massey secret sharing on the dual of C_f.

The sharing code is ``D = C_f^perp`` with generator columns ``G_1 .. G_n``.
The secret sits at coordinate 1 and participant ``P_i`` (``i >= 2``) holds
coordinate ``i``.  A set of participants recovers the secret exactly when
``G_1`` lies in the span of its columns, and the minimal such sets are the
supports (minus coordinate 1) of codewords of ``D^perp = C_f`` whose first
entry is 1.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional

import numpy as np

from . import code as code_core
from . import linalg
from .construction import CodeDescriptor, build_code
from .errors import (AuthorizedSet, InputError, MissingShare, NotAuthorized, NotMinimal, UnknownParticipant,
                     ZeroColumn)


@dataclass(frozen=True)
class AccessSet:
    members: frozenset

    @classmethod
    def of(cls, members: Iterable[int]) -> "AccessSet":
        return cls(frozenset(int(i) for i in members))

    def __iter__(self):
        return iter(sorted(self.members))

    def __len__(self):
        return len(self.members)

    def without(self, i: int) -> "AccessSet":
        return AccessSet(self.members - {i})

    def to_json(self) -> list[int]:
        return sorted(self.members)


@dataclass(frozen=True)
class ShareBundle:
    shares: dict
    secret: Optional[int]
    seed: Optional[int]

    def restrict(self, A: Iterable[int]) -> dict:
        return {i: self.shares[i] for i in A if i in self.shares}

    def to_json(self) -> dict:
        return {
            "secret_omitted": True,
            "shares": {str(i): int(self.shares[i]) for i in sorted(self.shares)},
            "seed": self.seed,
        }

    @classmethod
    def from_json(cls, data: dict) -> "ShareBundle":
        try:
            shares = {int(i): int(e) for i, e in data["shares"].items()}
        except (KeyError, AttributeError, ValueError) as exc:
            raise InputError(f"malformed share bundle: {exc}") from None
        return cls(shares, data.get("secret"), data.get("seed"))


class SSSInstance:
    def __init__(self, descriptor: CodeDescriptor, base_code: code_core.LinearCode,
                 sharing_code: code_core.LinearCode):
        self.descriptor = descriptor
        self.base_code = base_code
        self.sharing_code = sharing_code
        self.ctx = base_code.ctx

    @property
    def G(self) -> np.ndarray:
        return self.sharing_code.G

    @property
    def n(self) -> int:
        return self.sharing_code.n

    @property
    def participants(self) -> range:
        return range(2, self.n + 1)

    def column(self, i: int) -> np.ndarray:
        return self.G[:, i - 1]

    def check_members(self, A: Iterable[int]) -> list[int]:
        members = sorted(A)
        bad = [i for i in members if i not in self.participants]
        if bad:
            raise UnknownParticipant(f"unknown participants {bad}; valid range is 2..{self.n}")
        return members


def make_instance(d: CodeDescriptor, cap: Optional[int] = None) -> SSSInstance:
    base = build_code(d, cap)
    sharing = code_core.dual(base)
    ctx = base.ctx
    if np.any(linalg.matmul(ctx, sharing.G, base.G.T)):
        raise AssertionError("sharing code is not orthogonal to C_f")
    zero = sharing.zero_columns()
    if zero:
        raise ZeroColumn(f"sharing generator has zero columns at coordinates {[j + 1 for j in zero]}")
    return SSSInstance(d, base, sharing)


def deal(inst: SSSInstance, secret: int, seed: Optional[int] = None) -> ShareBundle:
    """Share ``secret``.  ``seed=None`` draws the dealer's randomness from the OS."""
    ctx = inst.ctx
    rng = random.SystemRandom() if seed is None else random.Random(seed)
    g1 = inst.column(1)
    u = [rng.randrange(ctx.q) for _ in range(inst.G.shape[0])]
    t = int(np.flatnonzero(g1)[0])
    rest = 0
    for j, (uj, gj) in enumerate(zip(u, g1.tolist())):
        if j != t:
            rest = ctx.add(rest, ctx.mul(uj, gj))
    u[t] = ctx.div(ctx.sub(secret, rest), int(g1[t]))
    full = linalg.combine(ctx, u, inst.G)
    assert int(full[0]) == secret
    shares = {i: int(full[i - 1]) for i in inst.participants}
    return ShareBundle(shares, secret, seed)


def reconstruction_coefficients(inst: SSSInstance, A: Iterable[int]) -> dict[int, int]:
    """``lambda`` with ``G_1 = sum lambda_i G_i`` over the members of A."""
    members = inst.check_members(A)
    lam = linalg.solve_in_span(inst.ctx, [inst.column(i) for i in members], inst.column(1))
    if lam is None:
        raise NotAuthorized(f"set of {len(members)} participants cannot recover the secret")
    return dict(zip(members, lam))


def is_authorized(inst: SSSInstance, A: Iterable[int]) -> bool:
    members = inst.check_members(A)
    return linalg.solve_in_span(inst.ctx, [inst.column(i) for i in members], inst.column(1)) is not None


def reconstruct(inst: SSSInstance, A: Iterable[int], shares: Mapping[int, int]) -> int:
    lam = reconstruction_coefficients(inst, A)
    missing = [i for i in lam if i not in shares]
    if missing:
        raise MissingShare(f"no share for participants {missing}")
    ctx = inst.ctx
    s = 0
    for i, c in lam.items():
        s = ctx.add(s, ctx.mul(c, int(shares[i])))
    return s


def enumerate_minimal_access_sets(inst: SSSInstance, cap: Optional[int] = None,
                                  check_minimal: bool = True) -> list[AccessSet]:
    """Minimal authorized sets, one per codeword of C_f with first entry 1.

    The list is complete and every set minimal only because C_f is a minimal
    code, which is re-checked first unless ``check_minimal`` is off.
    """
    code = inst.base_code
    if check_minimal:
        verdict = code_core.is_minimal_code(code, cap)
        if not verdict.minimal:
            raise NotMinimal("C_f failed the minimality check; access sets would be incomplete")
    linalg.check_cap(code.size, cap, "codewords")
    out = []
    for _, block in code.blocks():
        for row in block[block[:, 0] == 1]:
            out.append(AccessSet.of(int(j) + 1 for j in np.flatnonzero(row) if j > 0))
    return out


def perfectness_check(inst: SSSInstance, A: Iterable[int], shares: Optional[Mapping[int, int]] = None) -> bool:
    """True iff the shares of an unauthorized A are consistent with every secret.

    Without explicit ``shares`` a reference bundle (secret 0, seed 0) is used.
    """
    members = inst.check_members(A)
    if is_authorized(inst, members):
        raise AuthorizedSet("perfectness is vacuous for an authorized set")
    if shares is None:
        shares = deal(inst, 0, seed=0).shares
    missing = [i for i in members if i not in shares]
    if missing:
        raise MissingShare(f"no share for participants {missing}")
    ctx = inst.ctx
    M = inst.G[:, [0] + [i - 1 for i in members]]
    observed = [int(shares[i]) for i in members]
    base_rank = linalg.rank(ctx, M)
    for s in ctx.elements():
        b = np.array([[s] + observed], dtype=np.int64)
        if linalg.rank(ctx, np.vstack([M, b])) != base_rank:
            return False
    return True
