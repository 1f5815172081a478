"""Complex flag manifolds CG(n_1, ..., n_r): tangent Chern classes mod 2,
Stiefel-Whitney numbers, spin, and unoriented bordism of X itself.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterator, Sequence

from . import numeric
from .coinvariant import CoinvariantRing, block_variables, fiber_class, ring_for
from .gf2poly import Gf2Poly
from .verdict import Verdict, fails, holds, open_

# largest complex dimension for which all SW numbers of X are enumerated
SEARCH_CAP = 12


@dataclass(frozen=True)
class FlagDescriptor:
    """CG(n_1, ..., n_r) = U(n) / (U(n_1) x ... x U(n_r)), blocks in user order."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        parts = tuple(self.parts)
        if not parts:
            raise numeric.DomainError("a flag manifold needs at least one block")
        for p in parts:
            if not isinstance(p, int) or isinstance(p, bool) or p < 1:
                raise numeric.DomainError(f"block sizes must be positive integers, got {p!r}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> "FlagDescriptor":
        try:
            parts = tuple(int(s) for s in text.split(","))
        except ValueError:
            raise numeric.DomainError(f"cannot parse block sizes {text!r}") from None
        return cls(parts)

    @classmethod
    def grassmannian(cls, n: int, k: int) -> "FlagDescriptor":
        return cls((k, n - k))

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def r(self) -> int:
        return len(self.parts)

    @property
    def d(self) -> int:
        return numeric.complex_dim(self.parts)

    @property
    def chi(self) -> int:
        return numeric.euler_char_flag(self.parts)

    @property
    def is_full_flag(self) -> bool:
        return all(p == 1 for p in self.parts)

    @property
    def is_grassmannian(self) -> bool:
        return self.r == 2

    @property
    def has_repeated_blocks(self) -> bool:
        return len(set(self.parts)) < self.r

    def label(self) -> str:
        return ",".join(map(str, self.parts))

    def __str__(self) -> str:
        return f"CG({self.label()})"


def complex_dim(X: FlagDescriptor) -> int:
    return X.d


@dataclass(frozen=True)
class ChernData:
    """Total tangent Chern class mod 2, reduced in the n-variable coinvariant ring."""

    parts: tuple[int, ...]
    ring: CoinvariantRing
    total_class: Gf2Poly

    @cached_property
    def graded(self) -> dict[int, Gf2Poly]:
        d = numeric.complex_dim(self.parts)
        return {j: self.total_class.component(j) for j in range(d + 1)}

    def c(self, j: int) -> Gf2Poly:
        if j < 0:
            raise ValueError("negative degree")
        return self.graded.get(j, Gf2Poly.zero(self.ring.n))


@lru_cache(maxsize=64)
def _tangent_chern(parts: tuple[int, ...]) -> ChernData:
    n = sum(parts)
    ring = ring_for(n)
    blocks = block_variables(parts)
    total = Gf2Poly.one(n)
    one = Gf2Poly.one(n)
    # T X = sum_{i<j} conj(gamma_i) (x) gamma_j; mod 2 each root is x_a + x_b
    for i in range(len(blocks)):
        for j in range(i + 1, len(blocks)):
            for a in blocks[i]:
                for b in blocks[j]:
                    factor = one + Gf2Poly.var(n, a) + Gf2Poly.var(n, b)
                    total = ring.mul(total, factor)
    return ChernData(parts, ring, total)


def tangent_chern_total(X: FlagDescriptor) -> ChernData:
    return _tangent_chern(X.parts)


def is_spin_X(X: FlagDescriptor) -> bool:
    """Simply connected, so spin iff w_2 = c_1 mod 2 vanishes."""
    return tangent_chern_total(X).c(1).is_zero()


class _ChernNumbers:
    """Memoized prod_t c_{i_t}(X) * fiber class, for repeated SW-number queries."""

    def __init__(self, X: FlagDescriptor):
        self.X = X
        self.data = tangent_chern_total(X)
        self.ring = self.data.ring
        self.phi = fiber_class(X.parts)
        self._cache: dict[tuple[int, ...], Gf2Poly] = {(): self.phi}

    def weighted(self, I: tuple[int, ...]) -> Gf2Poly:
        # I sorted descending; prefix products shared between partitions
        hit = self._cache.get(I)
        if hit is None:
            hit = self.ring.mul(self.weighted(I[:-1]), self.data.c(I[-1]))
            self._cache[I] = hit
        return hit

    def number(self, I: Sequence[int]) -> int:
        key = tuple(sorted(I, reverse=True))
        return self.ring.integrate(self.weighted(key))


@lru_cache(maxsize=64)
def _numbers(X: FlagDescriptor) -> _ChernNumbers:
    return _ChernNumbers(X)


def sw_number_X(X: FlagDescriptor, I: Sequence[int]) -> int:
    """w_{2I}[X] = prod_t c_{i_t}(X) [X] mod 2."""
    I = tuple(I)
    if any((not isinstance(i, int)) or i < 1 for i in I):
        raise numeric.DomainError(f"partition entries must be positive, got {I}")
    if sum(I) != X.d:
        raise numeric.DomainError(f"|I| = {sum(I)} but dim_C {X} = {X.d}")
    return _numbers(X).number(I)


def partitions(d: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of d in reverse-lex order: (d), (d-1, 1), ..."""
    if largest is None:
        largest = d
    if d == 0:
        yield ()
        return
    for first in range(min(d, largest), 0, -1):
        for rest in partitions(d - first, first):
            yield (first,) + rest


def nonzero_sw_witness(X: FlagDescriptor) -> tuple[int, ...] | None:
    """First partition I (reverse-lex) with w_{2I}[X] = 1, or None."""
    for I in partitions(X.d):
        if sw_number_X(X, I):
            return I
    return None


CITE_GRASSMANN = (
    "[CG_{n,k}] != 0 iff nu2(k) >= nu2(n) (mod 2 bordism of complex Grassmannians; "
    "the nu2(k) < nu2(n) direction via a stationary-point-free Clifford (Z/2)^2p action "
    "and Conner-Floyd)"
)
CITE_NU2 = (
    "nu2(n) > nu2(n_j) for some block: stationary-point-free Clifford (Z/2)^2p action, "
    "so the class bounds (Conner-Floyd)"
)
CITE_SWAP = "repeated block sizes n_i = n_j: swapping the two blocks is a free involution"
CITE_THOM = "all Stiefel-Whitney numbers vanish, so the manifold bounds (Thom)"
CITE_SWNUM = "a nonzero Stiefel-Whitney number w_2I[X] (Thom)"
CITE_CAP = f"Stiefel-Whitney number search is capped at dim_C X <= {SEARCH_CAP}"
CITE_OPEN_FLAGS = "which complex flag manifolds bound is not known in general"


def x_bordism_nonzero(X: FlagDescriptor) -> Verdict:
    """Whether [X] != 0 in the unoriented bordism ring."""
    n = X.n
    if X.is_grassmannian:
        k = min(X.parts)
        if numeric.nu2(k) < numeric.nu2(n):
            return fails("X-grassmann-nu2", CITE_GRASSMANN, n=n, k=k)
        witness = {}
        if X.d <= SEARCH_CAP:
            I = nonzero_sw_witness(X)
            # the 2-adic theorem guarantees a witness exists
            assert I is not None, f"no nonzero SW number found for {X}"
            witness["I"] = list(I)
        return holds("X-grassmann-nu2", CITE_GRASSMANN, n=n, k=k, **witness)
    if any(numeric.nu2(p) < numeric.nu2(n) for p in X.parts):
        return fails("X-nu2", CITE_NU2, n=n)
    if X.has_repeated_blocks:
        return fails("X-swap", CITE_SWAP)
    if X.d > SEARCH_CAP:
        return open_("search-capped", CITE_CAP, d=X.d)
    I = nonzero_sw_witness(X)
    if I is None:
        return fails("X-sw-numbers-vanish", CITE_THOM)
    return holds("X-sw-number", CITE_SWNUM, I=list(I))
