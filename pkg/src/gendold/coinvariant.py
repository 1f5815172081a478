"""Mod 2 cohomology of complex flag manifolds via the coinvariant algebra.

H*(Flag(C^n); Z/2) = GF(2)[x_1..x_n] / (e_1, ..., e_n).  The polynomials
g_i = h_{n-i+1}(x_1, ..., x_i) form a Groebner basis with leading terms
x_i^(n-i+1), so the standard monomials are x^a with a_i <= n - i.  The top
degree is C(n, 2), spanned by the staircase x_1^(n-1) x_2^(n-2) ... x_(n-1).

Partial flag manifolds CG(n_1, ..., n_r) are handled by pulling classes back
to the full flag manifold and integrating against a fiber class.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations_with_replacement
from math import comb
from typing import Sequence

from .gf2poly import Exponent, Gf2Poly

_EMPTY: frozenset[Exponent] = frozenset()


@lru_cache(maxsize=None)
def _h_exponents(nvars: int, degree: int) -> tuple[Exponent, ...]:
    """Exponents of the monomials of h_degree in nvars variables."""
    if nvars == 0:
        return ((),) if degree == 0 else ()
    out = []
    for combo in combinations_with_replacement(range(nvars), degree):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return tuple(out)


class CoinvariantRing:
    """GF(2)[x_1..x_n] / (e_1..e_n) with cached monomial normal forms."""

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("n must be >= 1")
        self.n = n
        self.top_degree = comb(n, 2)
        self.staircase: Exponent = tuple(n - 1 - i for i in range(n))
        self._nf: dict[Exponent, frozenset[Exponent]] = {}

    def __repr__(self) -> str:
        return f"CoinvariantRing({self.n})"

    def groebner(self) -> list[Gf2Poly]:
        """The reduction rules h_{n-i+1}(x_1..x_i), i = 1..n."""
        from .gf2poly import complete_homogeneous

        return [
            complete_homogeneous(self.n, range(1, i + 1), self.n - i + 1)
            for i in range(1, self.n + 1)
        ]

    def is_standard(self, e: Exponent) -> bool:
        return all(a <= self.n - 1 - i for i, a in enumerate(e))

    def basis(self, degree: int | None = None) -> list[Exponent]:
        """Standard monomials, optionally of a single degree, descending lex."""
        out: list[Exponent] = []

        def rec(prefix: list[int], i: int, left: int | None) -> None:
            if i == self.n:
                if left is None or left == 0:
                    out.append(tuple(prefix))
                return
            hi = self.n - 1 - i
            for a in range(hi, -1, -1):
                if left is not None and a > left:
                    continue
                prefix.append(a)
                rec(prefix, i + 1, None if left is None else left - a)
                prefix.pop()

        rec([], 0, degree)
        return sorted(out, reverse=True)

    def _reduce_monomial(self, e: Exponent) -> frozenset[Exponent]:
        if sum(e) > self.top_degree:
            return _EMPTY
        hit = self._nf.get(e)
        if hit is not None:
            return hit
        n = self.n
        viol = -1
        for i in range(n - 1, -1, -1):
            if e[i] > n - 1 - i:
                viol = i
                break
        if viol < 0:
            out = frozenset([e])
        else:
            # x_i^k = sum_{t<k} x_i^t h_{k-t}(x_1..x_{i-1})  with k = n - i (0-based i)
            i = viol
            k = n - i
            base = list(e)
            base[i] -= k
            acc: set[Exponent] = set()
            for t in range(k):
                for h in _h_exponents(i, k - t):
                    f = list(base)
                    f[i] += t
                    for j, a in enumerate(h):
                        f[j] += a
                    for r in self._reduce_monomial(tuple(f)):
                        if r in acc:
                            acc.remove(r)
                        else:
                            acc.add(r)
            out = frozenset(acc)
        self._nf[e] = out
        return out

    def _check(self, p: Gf2Poly) -> None:
        if p.n != self.n:
            raise ValueError(f"polynomial has {p.n} variables, ring has {self.n}")

    def normal_form(self, p: Gf2Poly) -> Gf2Poly:
        self._check(p)
        acc: set[Exponent] = set()
        for t in p.terms:
            for r in self._reduce_monomial(t):
                if r in acc:
                    acc.remove(r)
                else:
                    acc.add(r)
        return Gf2Poly._raw(self.n, frozenset(acc))

    def mul(self, a: Gf2Poly, b: Gf2Poly) -> Gf2Poly:
        """Reduced product; inputs need not be reduced."""
        self._check(a)
        self._check(b)
        acc: set[Exponent] = set()
        top = self.top_degree
        for s in a.terms:
            ds = sum(s)
            for t in b.terms:
                if ds + sum(t) > top:
                    continue
                for r in self._reduce_monomial(tuple(x + y for x, y in zip(s, t))):
                    if r in acc:
                        acc.remove(r)
                    else:
                        acc.add(r)
        return Gf2Poly._raw(self.n, frozenset(acc))

    def product(self, factors: Sequence[Gf2Poly]) -> Gf2Poly:
        out = Gf2Poly.one(self.n)
        for f in factors:
            out = self.mul(out, f)
        return out

    def integrate(self, p: Gf2Poly) -> int:
        """Pairing with the fundamental class: staircase coefficient of the top part."""
        self._check(p)
        top = p.component(self.top_degree)
        return int(self.staircase in self.normal_form(top).terms)


def integrate_full_flag(ring: CoinvariantRing, p: Gf2Poly) -> int:
    return ring.integrate(p)


def normal_form(ring: CoinvariantRing, p: Gf2Poly) -> Gf2Poly:
    return ring.normal_form(p)


def _check_parts(parts: Sequence[int]) -> None:
    if len(parts) == 0 or any((not isinstance(p, int)) or p < 1 for p in parts):
        raise ValueError(f"invalid block sizes {list(parts)!r}")


def block_variables(parts: Sequence[int]) -> list[list[int]]:
    """1-based variable indices of each block, in the given block order."""
    _check_parts(parts)
    out, start = [], 1
    for p in parts:
        out.append(list(range(start, start + p)))
        start += p
    return out


def fiber_class(parts: Sequence[int]) -> Gf2Poly:
    """Class on Flag(C^n) restricting to the top class of every fiber of
    Flag(C^n) -> CG(parts): the product of the per-block staircase monomials.
    """
    n = sum(parts)
    e = [0] * n
    for block in block_variables(parts):
        s = len(block)
        for pos, i in enumerate(block):
            e[i - 1] = s - 1 - pos
    return Gf2Poly.monomial(e)


@lru_cache(maxsize=16)
def ring_for(n: int) -> CoinvariantRing:
    """Shared ring instance per n (reuses the monomial normal-form cache)."""
    return CoinvariantRing(n)


def is_block_symmetric(parts: Sequence[int], p: Gf2Poly) -> bool:
    """True if p is invariant under permutations inside each block."""
    for block in block_variables(parts):
        for a, b in zip(block, block[1:]):
            swapped = Gf2Poly(
                p.n,
                (_swap(t, a - 1, b - 1) for t in p.terms),
            )
            if swapped != p:
                return False
    return True


def _swap(t: Exponent, i: int, j: int) -> Exponent:
    lst = list(t)
    lst[i], lst[j] = lst[j], lst[i]
    return tuple(lst)


def integrate_partial_flag(parts: Sequence[int], p: Gf2Poly, check: bool = False) -> int:
    """Integrate a pulled-back class over CG(parts).

    ``p`` must be symmetric within each block (pass ``check=True`` to verify).
    """
    _check_parts(parts)
    n = sum(parts)
    if p.n != n:
        raise ValueError(f"polynomial has {p.n} variables, expected {n}")
    if check and not is_block_symmetric(parts, p):
        raise ValueError("class is not symmetric within blocks")
    ring = ring_for(n)
    phi = fiber_class(parts)
    d = ring.top_degree - phi.degree()
    return ring.integrate(ring.mul(p.component(d), phi))
