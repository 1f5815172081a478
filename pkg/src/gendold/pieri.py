"""Schubert calculus mod 2 on the Grassmannian G(k, n) by the Pieri rule.

Kept separate from the coinvariant engine so it can serve as an oracle:
classes are maps partition -> bit, and multiplication by c_j(gamma) =
sigma_(1^j) adds vertical strips of j boxes inside the k x (n-k) box.
"""
from __future__ import annotations

from itertools import combinations
from typing import Iterable, Sequence

Partition = tuple[int, ...]


def _clean(lam: Iterable[int]) -> Partition:
    return tuple(p for p in lam if p > 0)


def vertical_strips(lam: Partition, j: int, k: int, width: int) -> list[Partition]:
    """Partitions mu inside the k x width box with mu/lam a vertical j-strip."""
    rows = list(lam) + [0] * (k - len(lam))
    if len(rows) > k:
        return []
    out = []
    for chosen in combinations(range(k), j):
        mu = list(rows)
        for r in chosen:
            mu[r] += 1
        if mu[0] > width:
            continue
        if all(mu[i] >= mu[i + 1] for i in range(k - 1)):
            out.append(_clean(mu))
    return out


def _column_size(factor: int | Sequence[int]) -> int:
    if isinstance(factor, int):
        return factor
    parts = _clean(factor)
    if any(p != 1 for p in parts):
        raise ValueError(f"{tuple(factor)} is not a column partition")
    return len(parts)


def pieri_oracle_product(
    n: int, k: int, factors: Iterable[int | Sequence[int]]
) -> dict[Partition, int]:
    """Product of sigma_(1^j) classes in H*(G(k, n); Z/2), as {partition: 1}.

    A factor is either j or the column partition (1,)*j.  Absent keys are 0.
    """
    if not 0 <= k <= n:
        raise ValueError(f"bad Grassmannian G({k}, {n})")
    width = n - k
    state: dict[Partition, int] = {(): 1}
    for f in factors:
        j = _column_size(f)
        if j < 0 or j > k:
            raise ValueError(f"factor (1^{j}) outside the {k} x {width} box")
        nxt: dict[Partition, int] = {}
        for lam in state:
            for mu in vertical_strips(lam, j, k, width):
                nxt[mu] = nxt.get(mu, 0) ^ 1
        state = {lam: 1 for lam, bit in nxt.items() if bit}
    return state


def box(n: int, k: int) -> Partition:
    return _clean((n - k,) * k)


def column_integral(n: int, k: int, columns: Sequence[int]) -> int:
    """Integral over G(k, n) of prod c_j(gamma) for j in columns."""
    if sum(columns) != k * (n - k):
        return 0
    return pieri_oracle_product(n, k, columns).get(box(n, k), 0)


# -- symmetric reduction (independent of the coinvariant engine) ------------

Poly = set  # set of exponent tuples over GF(2)


def _toggle(acc: set, t: tuple) -> None:
    if t in acc:
        acc.remove(t)
    else:
        acc.add(t)


def _mul(a: Iterable[tuple], b: Iterable[tuple]) -> set:
    b = list(b)
    acc: set = set()
    for s in a:
        for t in b:
            _toggle(acc, tuple(x + y for x, y in zip(s, t)))
    return acc


def _elementary(s: int, j: int) -> set:
    acc = set()
    for combo in combinations(range(s), j):
        e = [0] * s
        for i in combo:
            e[i] = 1
        acc.add(tuple(e))
    return acc


def symmetric_to_elementary(poly: Iterable[tuple], s: int) -> set:
    """Rewrite a symmetric GF(2) polynomial in s variables via e_1..e_s.

    Returns the set of exponent tuples (a_1..a_s) meaning prod e_i^a_i.
    """
    rest = set(poly)
    out: set = set()
    elem = [None] + [_elementary(s, j) for j in range(1, s + 1)]
    while rest:
        lead = max(rest)
        if any(lead[i] < lead[i + 1] for i in range(s - 1)):
            raise ValueError("polynomial is not symmetric")
        a = tuple(lead[i] - (lead[i + 1] if i + 1 < s else 0) for i in range(s))
        expanded = {(0,) * s}
        for j, power in enumerate(a, start=1):
            for _ in range(power):
                expanded = _mul(expanded, elem[j])
        rest ^= expanded
        _toggle(out, a)
    return out


def _weight(e: tuple) -> int:
    return sum(i * a for i, a in enumerate(e, start=1))


def _truncate(p: set, limit: int) -> set:
    return {t for t in p if _weight(t) <= limit}


def grassmann_tangent_chern(n: int, k: int) -> list[set]:
    """c_i(T G(k, n)) mod 2, i = 0..k(n-k), as polynomials in c_j(gamma).

    T = Hom(gamma, beta) with beta = gamma^perp; mod 2, c(T) is the product
    of (1 + y_a + z_b) over Chern roots y of gamma and z of beta.  The roots
    are eliminated by symmetric reduction and c(beta) = c(gamma)^-1.
    """
    l = n - k
    d = k * l
    nv = k + l
    total = {(0,) * nv}
    for a in range(k):
        for b in range(l):
            f = {(0,) * nv}
            for idx in (a, k + b):
                e = [0] * nv
                e[idx] = 1
                f.add(tuple(e))
            total = _mul(total, f)

    # eliminate z: group by y-part, reduce the z-coefficient
    by_y: dict[tuple, set] = {}
    for t in total:
        by_y.setdefault(t[:k], set()).add(t[k:])
    stage1: set = set()  # (y-exp, f-exp)
    for yexp, zpoly in by_y.items():
        for fexp in symmetric_to_elementary(zpoly, l) if l else {()}:
            _toggle(stage1, yexp + fexp)

    by_f: dict[tuple, set] = {}
    for t in stage1:
        by_f.setdefault(t[k:], set()).add(t[:k])
    stage2: set = set()  # (e-exp, f-exp)
    for fexp, ypoly in by_f.items():
        for eexp in symmetric_to_elementary(ypoly, k) if k else {()}:
            _toggle(stage2, eexp + fexp)

    # c(beta) = c(gamma)^-1 = sum_t (e_1 + ... + e_k)^t mod 2
    ones = {(0,) * k}
    c_gamma = {tuple(int(i == j) for i in range(k)) for j in range(k)}
    inverse = set(ones)
    power = set(ones)
    for _ in range(l):
        power = _truncate(_mul(power, c_gamma), l)
        inverse ^= power
    beta = [set() for _ in range(l + 1)]
    for t in inverse:
        beta[_weight(t)].add(t)

    out = [set() for _ in range(d + 1)]
    for t in stage2:
        eexp, fexp = t[:k], t[k:]
        term = {eexp}
        for j, power_j in enumerate(fexp, start=1):
            for _ in range(power_j):
                term = _truncate(_mul(term, beta[j]), d)
        for u in term:
            if _weight(u) <= d:
                _toggle(out[_weight(u)], u)
    return out


def grassmann_chern_number(n: int, k: int, I: Sequence[int]) -> int:
    """prod_t c_{i_t}(T G(k, n)) [G(k, n)] mod 2, computed entirely by Pieri."""
    d = k * (n - k)
    if sum(I) != d:
        raise ValueError(f"partition {tuple(I)} does not have weight {d}")
    classes = grassmann_tangent_chern(n, k)
    prod = {(0,) * k}
    for i in I:
        prod = _truncate(_mul(prod, classes[i]), d)
    total = 0
    for eexp in prod:
        if _weight(eexp) != d:
            continue
        cols = [j for j, a in enumerate(eexp, start=1) for _ in range(a)]
        total ^= column_integral(n, k, cols)
    return total
