"""Multivariate polynomials over GF(2).

A polynomial is the set of exponent vectors whose coefficient is 1.
"""
from __future__ import annotations

from itertools import combinations, combinations_with_replacement
from typing import Iterable, Iterator, Sequence

Exponent = tuple[int, ...]


class Gf2Poly:
    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Iterable[Exponent] = ()):
        # repeated exponents cancel in pairs
        acc: set[Exponent] = set()
        for t in terms:
            t = tuple(t)
            if len(t) != n:
                raise ValueError(f"exponent {t} does not have length {n}")
            if t in acc:
                acc.remove(t)
            else:
                acc.add(t)
        self.n = n
        self.terms = frozenset(acc)

    @classmethod
    def _raw(cls, n: int, terms: frozenset[Exponent]) -> "Gf2Poly":
        obj = cls.__new__(cls)
        obj.n = n
        obj.terms = terms
        return obj

    @classmethod
    def zero(cls, n: int) -> "Gf2Poly":
        return cls._raw(n, frozenset())

    @classmethod
    def one(cls, n: int) -> "Gf2Poly":
        return cls._raw(n, frozenset([(0,) * n]))

    @classmethod
    def var(cls, n: int, i: int) -> "Gf2Poly":
        """The variable x_i, 1-based."""
        if not 1 <= i <= n:
            raise ValueError(f"variable index {i} out of range 1..{n}")
        e = [0] * n
        e[i - 1] = 1
        return cls._raw(n, frozenset([tuple(e)]))

    @classmethod
    def monomial(cls, exponent: Sequence[int]) -> "Gf2Poly":
        return cls._raw(len(exponent), frozenset([tuple(exponent)]))

    def _check(self, other: "Gf2Poly") -> None:
        if self.n != other.n:
            raise ValueError(f"variable count mismatch: {self.n} vs {other.n}")

    def __add__(self, other: "Gf2Poly") -> "Gf2Poly":
        self._check(other)
        return Gf2Poly._raw(self.n, self.terms ^ other.terms)

    __sub__ = __add__
    __radd__ = __add__

    def __mul__(self, other: "Gf2Poly") -> "Gf2Poly":
        self._check(other)
        acc: set[Exponent] = set()
        for a in self.terms:
            for b in other.terms:
                c = tuple(x + y for x, y in zip(a, b))
                if c in acc:
                    acc.remove(c)
                else:
                    acc.add(c)
        return Gf2Poly._raw(self.n, frozenset(acc))

    def __pow__(self, k: int) -> "Gf2Poly":
        if k < 0:
            raise ValueError("negative power")
        out = Gf2Poly.one(self.n)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Gf2Poly):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.n, self.terms))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[Exponent]:
        return iter(sorted(self.terms, reverse=True))

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Largest total degree of a term; -1 for the zero polynomial."""
        return max((sum(t) for t in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(t) for t in self.terms}) <= 1

    def component(self, k: int) -> "Gf2Poly":
        """Homogeneous component of degree k."""
        return Gf2Poly._raw(self.n, frozenset(t for t in self.terms if sum(t) == k))

    def extend(self, n: int, offset: int = 0) -> "Gf2Poly":
        """Embed into n variables, shifting variable i to i + offset."""
        if offset + self.n > n:
            raise ValueError("target ring too small")
        pad_r = n - self.n - offset
        return Gf2Poly._raw(
            n, frozenset((0,) * offset + t + (0,) * pad_r for t in self.terms)
        )

    def to_text(self) -> str:
        """Canonical rendering: terms in descending lex order, e.g. 'x1^2*x2 + x3'."""
        if not self.terms:
            return "0"
        return " + ".join(_monomial_text(t) for t in self)

    __str__ = to_text

    def __repr__(self) -> str:
        return f"Gf2Poly({self.n}, {self.to_text()!r})"


def _monomial_text(e: Exponent) -> str:
    parts = []
    for i, a in enumerate(e, start=1):
        if a == 1:
            parts.append(f"x{i}")
        elif a > 1:
            parts.append(f"x{i}^{a}")
    return "*".join(parts) or "1"


def parse_poly(n: int, text: str) -> Gf2Poly:
    """Inverse of ``Gf2Poly.to_text``."""
    text = text.strip()
    if text == "0":
        return Gf2Poly.zero(n)
    terms = []
    for chunk in text.split("+"):
        e = [0] * n
        chunk = chunk.strip()
        if chunk != "1":
            for factor in chunk.split("*"):
                name, _, power = factor.strip().partition("^")
                if not name.startswith("x"):
                    raise ValueError(f"bad factor {factor!r}")
                e[int(name[1:]) - 1] += int(power) if power else 1
        terms.append(tuple(e))
    return Gf2Poly(n, terms)


def _index_set(n: int, variables: Iterable[int] | None) -> list[int]:
    idx = list(range(1, n + 1)) if variables is None else list(variables)
    for i in idx:
        if not 1 <= i <= n:
            raise ValueError(f"variable index {i} out of range 1..{n}")
    return idx


def elementary_symmetric(n: int, j: int, variables: Iterable[int] | None = None) -> Gf2Poly:
    """e_j in the given 1-based variables (default: all n)."""
    if j < 0:
        raise ValueError("degree must be >= 0")
    idx = _index_set(n, variables)
    terms = []
    for combo in combinations(idx, j):
        e = [0] * n
        for i in combo:
            e[i - 1] = 1
        terms.append(tuple(e))
    return Gf2Poly(n, terms)


def complete_homogeneous(n: int, variables: Iterable[int] | None, j: int) -> Gf2Poly:
    """h_j in the given 1-based variables."""
    if j < 0:
        raise ValueError("degree must be >= 0")
    idx = _index_set(n, variables)
    if not idx:
        return Gf2Poly.one(n) if j == 0 else Gf2Poly.zero(n)
    terms = []
    for combo in combinations_with_replacement(idx, j):
        e = [0] * n
        for i in combo:
            e[i - 1] += 1
        terms.append(tuple(e))
    return Gf2Poly(n, terms)
