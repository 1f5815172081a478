"""Decisions for stable parallelizability, parallelizability and the
unoriented bordism class of P(m; n_1, ..., n_r).

Every verdict names the rule that produced it.  OPEN is returned only where
the known criteria are silent (or a computation cap was hit).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Any

from . import numeric
from .dold import DoldDescriptor, sw_number_P
from .flags import SEARCH_CAP, FlagDescriptor, nonzero_sw_witness, x_bordism_nonzero
from .numeric import adams_phi, hurwitz_radon, multinomial_parity, nu2
from .verdict import State, Verdict, fails, holds, open_

CITE_NOT_STABLE_X = (
    "a flag manifold with some n_j > 1 is not stably parallelizable, and P(m,X) "
    "stably parallelizable forces X stably parallelizable"
)
CITE_ADAMS = (
    "P(m; 1,...,1) is stably parallelizable iff 2^phi(m) divides m + 1 + C(n,2) "
    "(order of [zeta]-1 in KO(RP^m), Adams)"
)
CITE_NOT_STABLE = "not even stably parallelizable"
CITE_M_EVEN = (
    "m even: a stably parallelizable even-dimensional P is parallelizable iff "
    "chi(X) = 0 (Bredon-Kosinski, Hopf), and chi(Flag(C^n)) = n! != 0"
)
CITE_BK = (
    "rho(m+1) > rho(m+1+n(n-1)): span P >= span RP^m exceeds the span of the sphere of "
    "dimension dim P (Bredon-Kosinski)"
)
CITE_RSPAN = (
    "m+1 = (2c+1)2^r and d = 2^s(2k+1) with s < r-1 give rho(m+1) > rho(m+2d+1) "
    "(Bredon-Kosinski)"
)
CITE_PAR_OPEN = "m odd and rho(m+1) <= rho(m+1+n(n-1)): no criterion decides parallelizability"

CITE_R1 = (
    "nu2(n) > nu2(n_j) for some block: the Clifford (Z/2)^2p action on C^n induces a "
    "stationary-point-free action on P(m,X), so [P] = 0 (Conner-Floyd)"
)
CITE_R2 = (
    "n_i = n_j for some i != j: swapping the two blocks commutes with conjugation and "
    "gives a free involution of P(m,X), so [P] = 0"
)
CITE_R3 = (
    "m, d even and chi(X) = n!/(n_1!...n_r!) odd: chi(P) is odd, so [P] != 0"
)
CITE_R4 = (
    "m = d mod 2 and [X] != 0: w_1(P) = x and w_(1^m.2I)[P] = w_2I[X] != 0"
)
CITE_R5 = (
    "m = 1 and [X] = 0: every nonzero w_J[P(1,X)] is some w_2I[X], all of which vanish"
)
CITE_R6 = (
    "m odd with nu2(k) >= nu2(n) (or more generally m != d mod 2 with no vanishing "
    "rule) is not decided by the known criteria"
)
CITE_CAPPED = (
    f"[X] could not be decided: Stiefel-Whitney number search capped at dim_C X <= {SEARCH_CAP}"
)


def _require_r2(X: FlagDescriptor) -> None:
    if X.r < 2:
        raise numeric.DomainError("stable parallelizability needs r >= 2 blocks")


def stably_parallelizable(m: int, X: FlagDescriptor) -> Verdict:
    _require_r2(X)
    P = DoldDescriptor(m, X)
    if not X.is_full_flag:
        return fails("stable-X-not-stable", CITE_NOT_STABLE_X, parts=list(X.parts))
    n = X.n
    phi = adams_phi(P.m)
    value = m + 1 + comb(n, 2)
    witness = {"phi": phi, "modulus": 2**phi, "value": value}
    if value % 2**phi == 0:
        return holds("stable-adams", CITE_ADAMS, **witness)
    return fails("stable-adams", CITE_ADAMS, **witness)


def parallelizable(m: int, X: FlagDescriptor) -> Verdict:
    stable = stably_parallelizable(m, X)
    if not stable.holds:
        return fails("par-not-stable", CITE_NOT_STABLE, stable_rule=stable.rule)
    n, d = X.n, X.d
    if m % 2 == 0:
        return fails("par-m-even", CITE_M_EVEN, chi=X.chi)
    r, s = nu2(m + 1), nu2(d) if d else None
    if s is not None and s < r - 1:
        return holds("R-span", CITE_RSPAN, r=r, s=s)
    lhs, rhs = hurwitz_radon(m + 1), hurwitz_radon(m + 1 + n * (n - 1))
    witness = {"rho_m_plus_1": lhs, "rho_dim_plus_1": rhs}
    if lhs > rhs:
        return holds("par-bredon-kosinski", CITE_BK, **witness)
    return open_("par-open", CITE_PAR_OPEN, **witness)


def _witness_I(X: FlagDescriptor, known: list[int] | None = None) -> dict[str, Any]:
    if known is not None:
        return {"I": list(known)}
    if X.d <= SEARCH_CAP:
        I = nonzero_sw_witness(X)
        if I is not None:
            return {"I": list(I)}
    return {}


def cobordism_verdict(m: int, X: FlagDescriptor) -> Verdict:
    """HOLDS means [P(m, X)] != 0, FAILS means [P(m, X)] = 0."""
    P = DoldDescriptor(m, X)
    n, d = X.n, X.d
    if any(nu2(p) < nu2(n) for p in X.parts):
        return fails("R1", CITE_R1, n=n)
    if X.has_repeated_blocks:
        return fails("R2", CITE_R2)
    same_parity = m % 2 == d % 2
    if same_parity and m % 2 == 0 and multinomial_parity(X.parts):
        return holds("R3", CITE_R3, **_witness_I(X, [d] if d else []))
    xb = None
    if same_parity or m == 1:
        xb = x_bordism_nonzero(X)
    if same_parity and xb.holds:
        return holds("R4", CITE_R4, x_rule=xb.rule, **_witness_I(X, xb.witness.get("I")))
    if m == 1 and xb.fails:
        return fails("R5", CITE_R5, x_rule=xb.rule)
    if xb is not None and xb.is_open and xb.rule == "search-capped":
        return open_("search-capped", CITE_CAPPED, d=d)
    return open_("R6", CITE_R6)


def verify_witness(m: int, X: FlagDescriptor, verdict: Verdict) -> bool:
    """Re-evaluate w_(1^m.2I)[P] for a HOLDS verdict carrying a partition I."""
    I = verdict.witness.get("I")
    if verdict.state is not State.HOLDS or I is None:
        return False
    J = [1] * m + [2 * i for i in I]
    return sw_number_P(DoldDescriptor(m, X), J) == 1


@dataclass(frozen=True)
class SpanBounds:
    lower: int
    upper: int | None
    branches: dict[str, Any] = field(default_factory=dict)

    def to_json(self) -> dict[str, Any]:
        return {"lower": self.lower, "upper": self.upper, "branches": dict(self.branches)}


def span_bounds(m: int, X: FlagDescriptor) -> SpanBounds:
    """span P >= span RP^m and stable span P <= min(d + span((m+d+1) zeta), m + stable span X)."""
    P = DoldDescriptor(m, X)
    lower = hurwitz_radon(m + 1) - 1
    # a stably parallelizable manifold has stable span equal to its dimension
    x_branch = m + 2 * P.d if X.is_full_flag else None
    branches = {
        "m_plus_stable_span_X": {"available": x_branch is not None, "value": x_branch},
        "d_plus_span_multiple_of_hopf": {"available": False, "value": None},
    }
    return SpanBounds(lower, x_branch, branches)
