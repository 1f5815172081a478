"""Integer invariants: 2-adic valuation, Adams' phi, Hurwitz-Radon rho, parities."""
from __future__ import annotations

from math import comb, factorial
from typing import Iterable, Sequence

# n! for n above this is refused by euler_char_flag; parity queries go through
# multinomial_parity instead.
MAX_EXACT_N = 4096


class DomainError(ValueError):
    """An argument lies outside the domain of an integer invariant."""


def _positive(name: str, value: int) -> None:
    if not isinstance(value, int) or isinstance(value, bool):
        raise DomainError(f"{name} must be an integer, got {value!r}")
    if value < 1:
        raise DomainError(f"{name} must be >= 1, got {value}")


def nu2(n: int) -> int:
    """Exponent of the largest power of 2 dividing ``n``."""
    _positive("n", n)
    return (n & -n).bit_length() - 1


def adams_phi(m: int) -> int:
    """Number of j in 1..m with j = 0, 1, 2 or 4 (mod 8).

    2**adams_phi(m) is the order of [zeta] - 1 in KO(RP^m).
    """
    _positive("m", m)
    full, rest = divmod(m, 8)
    return 4 * full + sum(1 for j in (1, 2, 4) if j <= rest)


def hurwitz_radon(N: int) -> int:
    """rho(2^(4a+b) * odd) = 8a + 2^b with 0 <= b < 4."""
    _positive("N", N)
    a, b = divmod(nu2(N), 4)
    return 8 * a + 2**b


def sphere_span(N: int) -> int:
    """Maximal number of independent vector fields on S^N."""
    _positive("N", N)
    return hurwitz_radon(N + 1) - 1


def binom_parity(a: int, b: int) -> int:
    """C(a, b) mod 2 by Lucas: odd iff the bits of b are a submask of a."""
    if a < 0 or b < 0:
        raise DomainError("binom_parity needs nonnegative arguments")
    if b > a:
        return 0
    return int(b & (a - b) == 0)


def _check_parts(parts: Sequence[int]) -> None:
    if len(parts) == 0:
        raise DomainError("parts must be nonempty")
    for p in parts:
        _positive("part", p)


def multinomial_parity(parts: Sequence[int]) -> int:
    """Parity of (sum parts)! / prod(part!).

    Kummer: the multinomial is odd iff adding the parts in binary never
    carries, i.e. the parts have pairwise disjoint bit patterns.
    """
    _check_parts(parts)
    seen = 0
    for p in parts:
        if seen & p:
            return 0
        seen |= p
    return 1


def euler_char_flag(parts: Sequence[int]) -> int:
    """Euler characteristic n!/(n_1!...n_r!) of the complex flag manifold."""
    _check_parts(parts)
    n = sum(parts)
    if n > MAX_EXACT_N:
        raise OverflowError(f"n = {n} exceeds the exact range (<= {MAX_EXACT_N})")
    out = factorial(n)
    for p in parts:
        out //= factorial(p)
    return out


def complex_dim(parts: Iterable[int]) -> int:
    """sum_{i<j} n_i n_j."""
    parts = list(parts)
    n = sum(parts)
    return (n * n - sum(p * p for p in parts)) // 2


def choose2(n: int) -> int:
    return comb(n, 2)
