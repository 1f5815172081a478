"""Generalized Dold manifolds P(m, X) = S^m x X / (v, x) ~ (-v, sigma(x)).

Cohomology classes are written in the generator x of H^1 (x^(m+1) = 0) and
formal symbols c~_j lifting the Chern classes c_j(X) mod 2.  No relations
among products of the c~_j are imposed.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence

from . import numeric
from .flags import FlagDescriptor, is_spin_X, sw_number_X

CMono = tuple[int, ...]  # sorted multiset of c~ indices
Term = tuple[int, CMono]  # (x exponent, c~ monomial)


class SWClass:
    """A mod 2 class sum x^a c~_I, truncated at x^(m+1)."""

    __slots__ = ("m", "terms")

    def __init__(self, m: int, terms: Iterable[Term] = ()):
        acc: set[Term] = set()
        for a, mono in terms:
            if a > m:
                continue
            t = (a, tuple(sorted(mono)))
            if t in acc:
                acc.remove(t)
            else:
                acc.add(t)
        self.m = m
        self.terms = frozenset(acc)

    @classmethod
    def zero(cls, m: int) -> "SWClass":
        return cls(m)

    @classmethod
    def one(cls, m: int) -> "SWClass":
        return cls(m, [(0, ())])

    @classmethod
    def x(cls, m: int, power: int = 1) -> "SWClass":
        return cls(m, [(power, ())])

    @classmethod
    def c(cls, m: int, j: int) -> "SWClass":
        return cls(m, [(0, (j,))] if j else [(0, ())])

    @staticmethod
    def term_degree(t: Term) -> int:
        return t[0] + 2 * sum(t[1])

    def _check(self, other: "SWClass") -> None:
        if self.m != other.m:
            raise ValueError(f"truncation mismatch: x^{self.m + 1} vs x^{other.m + 1}")

    def __add__(self, other: "SWClass") -> "SWClass":
        self._check(other)
        out = SWClass.__new__(SWClass)
        out.m = self.m
        out.terms = self.terms ^ other.terms
        return out

    def __mul__(self, other: "SWClass") -> "SWClass":
        self._check(other)
        acc: list[Term] = []
        for a, s in self.terms:
            for b, t in other.terms:
                acc.append((a + b, s + t))
        return SWClass(self.m, acc)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SWClass):
            return NotImplemented
        return self.m == other.m and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.m, self.terms))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, a: int, mono: Sequence[int] = ()) -> int:
        return int((a, tuple(sorted(mono))) in self.terms)

    def component(self, k: int) -> "SWClass":
        return SWClass(self.m, (t for t in self.terms if self.term_degree(t) == k))

    def degrees(self) -> set[int]:
        return {self.term_degree(t) for t in self.terms}

    def restrict_fiber(self) -> "SWClass":
        """Set x = 0 (restriction to a fiber X)."""
        return SWClass(self.m, (t for t in self.terms if t[0] == 0))

    def restrict_section(self) -> "SWClass":
        """Set every c~_j = 0 (pullback along the section RP^m)."""
        return SWClass(self.m, (t for t in self.terms if not t[1]))

    def _sort_key(self, t: Term):
        return (self.term_degree(t), -t[0], t[1])

    def to_text(self) -> str:
        """Terms ordered by (degree, descending x power, c~ indices)."""
        if not self.terms:
            return "0"
        out = []
        for a, mono in sorted(self.terms, key=self._sort_key):
            factors = []
            if a == 1:
                factors.append("x")
            elif a > 1:
                factors.append(f"x^{a}")
            for j in sorted(set(mono)):
                e = mono.count(j)
                factors.append(f"c~{j}" if e == 1 else f"c~{j}^{e}")
            out.append("*".join(factors) or "1")
        return " + ".join(out)

    __str__ = to_text

    def __repr__(self) -> str:
        return f"SWClass(m={self.m}, {self.to_text()!r})"


Series = list[SWClass]  # graded components, index = degree


def _series_mul(a: Series, b: Series, top: int) -> Series:
    m = a[0].m
    out = [SWClass.zero(m) for _ in range(top + 1)]
    for i, u in enumerate(a):
        if u.is_zero():
            continue
        for j, v in enumerate(b):
            if i + j > top:
                break
            if not v.is_zero():
                out[i + j] = out[i + j] + u * v
    return out


def _one_plus_x(m: int, power: int, top: int) -> Series:
    """(1 + x t)^power as a graded series."""
    base = [SWClass.one(m)] + [SWClass.zero(m) for _ in range(top)]
    step = [SWClass.one(m), SWClass.x(m)] + [SWClass.zero(m) for _ in range(top - 1)]
    out = base
    for _ in range(power):
        out = _series_mul(out, step[: top + 1], top)
    return out


def sw_hat_bundle(r: int, m: int, up_to_degree: int) -> Series:
    """w(omega^; t) = sum_{0<=j<=r} (1 + x t)^(r-j) c~_j t^(2j) for a rank-r
    conjugate bundle, as components w_0..w_D.  The c~_j are formal.
    """
    if r < 1 or m < 1:
        raise numeric.DomainError("need rank r >= 1 and m >= 1")
    if up_to_degree < 0:
        raise numeric.DomainError("degree cap must be >= 0")
    D = up_to_degree
    total = [SWClass.zero(m) for _ in range(D + 1)]
    for j in range(r + 1):
        if 2 * j > D:
            break
        shift = [SWClass.zero(m) for _ in range(2 * j)] + [SWClass.c(m, j)]
        shift += [SWClass.zero(m) for _ in range(D + 1 - len(shift))]
        part = _series_mul(_one_plus_x(m, r - j, D), shift, D)
        total = [u + v for u, v in zip(total, part)]
    return total


@dataclass(frozen=True)
class DoldDescriptor:
    m: int
    X: FlagDescriptor

    def __post_init__(self) -> None:
        if not isinstance(self.m, int) or isinstance(self.m, bool) or self.m < 1:
            raise numeric.DomainError(f"m must be a positive integer, got {self.m!r}")

    @classmethod
    def of(cls, m: int, parts: Sequence[int]) -> "DoldDescriptor":
        return cls(m, FlagDescriptor(tuple(parts)))

    @property
    def d(self) -> int:
        return self.X.d

    @property
    def dim(self) -> int:
        return self.m + 2 * self.d

    def __str__(self) -> str:
        return f"P({self.m}; {self.X.label()})"


def sw_total_P(P: DoldDescriptor, up_to_degree: int | None = None, formal: bool = False) -> Series:
    """w(P(m, X); t) = (1 + x t)^(m+1) * sum_j (1 + x t)^(d-j) c~_j(X) t^(2j).

    Components beyond dim P vanish on the manifold; asking for them needs
    ``formal=True``.
    """
    D = P.dim if up_to_degree is None else up_to_degree
    if D > P.dim and not formal:
        raise numeric.DomainError(
            f"degree {D} exceeds dim P = {P.dim}; pass formal=True for the formal series"
        )
    if D < 0:
        raise numeric.DomainError("degree cap must be >= 0")
    m, d = P.m, P.d
    fiber = sw_hat_bundle(d, m, D) if d else [SWClass.one(m)] + [SWClass.zero(m)] * D
    return _series_mul(_one_plus_x(m, m + 1, D), fiber, D)


def w(P: DoldDescriptor, k: int) -> SWClass:
    if k > P.dim:
        return SWClass.zero(P.m)
    return sw_total_P(P, k)[k]


def is_orientable_P(P: DoldDescriptor) -> bool:
    """Orientable iff m + d is odd; checked against the symbolic w_1."""
    parity = (P.m + P.d) % 2 == 1
    assert parity == w(P, 1).is_zero(), f"w_1 disagrees with parity for {P}"
    return parity


def _low_class_vanishes(cls: SWClass, X: FlagDescriptor) -> bool:
    """Decide vanishing of a class of degree <= 2 in H*(P; Z/2).

    H^1 = Z/2 x and H^2 = Z/2 x^2 (+) {c~_1}, where c~_1 = 0 iff c_1(X) = 0.
    """
    if cls.degrees() - {0, 1, 2}:
        raise ValueError("only classes of degree <= 2 are decided here")
    for a, mono in cls.terms:
        if mono == (1,) and a == 0:
            if not is_spin_X(X):
                return False
        else:
            return False
    return True


def is_spin_P(P: DoldDescriptor) -> bool:
    """w_1 = w_2 = 0 computed from the total class (not the congruence form)."""
    series = sw_total_P(P, min(2, P.dim))
    return all(_low_class_vanishes(series[k], P.X) for k in range(1, len(series)))


def spin_by_congruence(P: DoldDescriptor) -> bool:
    """The alternative reading: X spin, m + d odd and, for m > 1, m + 1 = d mod 4."""
    if not is_spin_X(P.X) or (P.m + P.d) % 2 == 0:
        return False
    return P.m == 1 or (P.m + 1 - P.d) % 4 == 0


def euler_char_P(P: DoldDescriptor) -> int:
    """chi(RP^m) * chi(X)."""
    return P.X.chi if P.m % 2 == 0 else 0


class Unsupported(Exception):
    """The requested Stiefel-Whitney number is not determined by the available data."""

    citation = (
        "only w_J with more than m odd entries, J = 1^m.2I on non-orientable P, "
        "J containing 1 on orientable P, or m = 1 are determined without the "
        "ring structure of H*(P(m,X); Z/2)"
    )


def sw_number_P(P: DoldDescriptor, J: Sequence[int]) -> int:
    """w_J[P(m, X)] in the cases fixed by x^(m+1) = 0 and [X] = x^m.

    Raises ``Unsupported`` otherwise.
    """
    J = tuple(sorted(J))
    if any((not isinstance(j, int)) or j < 1 for j in J):
        raise numeric.DomainError(f"entries of J must be positive, got {J}")
    if sum(J) != P.dim:
        raise numeric.DomainError(f"|J| = {sum(J)} but dim {P} = {P.dim}")
    m, d = P.m, P.d
    odd = [j for j in J if j % 2]
    if len(odd) > m:
        return 0
    ones = J.count(1)
    if ones == m and len(odd) == m and m % 2 == d % 2:
        # w_1 = x and w_J = x^m c~_I
        return sw_number_X(P.X, [j // 2 for j in J if j % 2 == 0])
    if ones and (m + d) % 2 == 1:
        return 0
    if m == 1:
        # w_2j = c~_j and w_(2j+1) = (d - j) x c~_j once x^2 = 0
        (odd_entry,) = odd
        s = (odd_entry - 1) // 2
        if (d - s) % 2 == 0:
            return 0
        I = [j // 2 for j in J if j % 2 == 0] + ([s] if s else [])
        return sw_number_X(P.X, I)
    raise Unsupported(f"w_{list(J)}[{P}] is not determined")
