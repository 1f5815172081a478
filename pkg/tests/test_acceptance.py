"""Acceptance criteria 1-9, each timed at its stated limit.

Run under pytest (a summary line per criterion is printed at the end) or
directly with ``python3 tests/test_acceptance.py``.
"""
from __future__ import annotations

import contextlib
import io
import time
from itertools import combinations_with_replacement
from math import comb, factorial, prod

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gendold import cli
from gendold.clifford import algebra_dimension, build_generators, expected_square_signs, verify_relations
from gendold.coinvariant import block_variables, integrate_partial_flag
from gendold.dold import (
    DoldDescriptor,
    SWClass,
    euler_char_P,
    is_orientable_P,
    is_spin_P,
    sw_total_P,
    w,
)
from gendold.flags import FlagDescriptor, is_spin_X
from gendold.gf2poly import Gf2Poly, elementary_symmetric
from gendold.numeric import multinomial_parity, nu2
from gendold.pieri import column_integral
from gendold.verdicts import (
    cobordism_verdict,
    parallelizable,
    stably_parallelizable,
    verify_witness,
)

RESULTS: dict[int, str] = {}


def compositions(n: int):
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first,) + rest


def run(number: int, func, limit: float | None):
    start = time.perf_counter()
    try:
        detail = func()
    except Exception as exc:
        RESULTS[number] = f"FAIL  criterion {number}: {type(exc).__name__}: {exc}"
        raise
    elapsed = time.perf_counter() - start
    ok = limit is None or elapsed < limit
    bound = f" (limit {limit:g} s)" if limit is not None else ""
    RESULTS[number] = f"{'PASS' if ok else 'FAIL'}  criterion {number}: {detail}; {elapsed:.2f} s{bound}"
    assert ok, RESULTS[number]


# 1 -------------------------------------------------------------------------
def criterion_1() -> str:
    checked = 0
    for n in range(1, 6):
        for parts in compositions(n):
            P = DoldDescriptor.of(1, parts)
            series = sw_total_P(P)
            d = P.d
            for j in range(d + 1):
                assert series[2 * j] == SWClass.c(1, j), (parts, j)
                if 2 * j + 1 <= P.dim:
                    expect = SWClass(1, [(1, (j,) if j else ())] if (d - j) % 2 else [])
                    assert series[2 * j + 1] == expect, (parts, j)
                checked += 1
    return f"m=1 specialization verified on {checked} (flag, j) pairs, n <= 5"


# 2 -------------------------------------------------------------------------
def _truncated_power(base: dict, power: int, m: int, n: int) -> dict:
    out = {(0, 0): 1}
    for _ in range(power):
        nxt: dict = {}
        for (a, b), _c in out.items():
            for (c, e), _d in base.items():
                key = (a + c, b + e)
                if key[0] <= m and key[1] <= n:
                    nxt[key] = nxt.get(key, 0) ^ 1
        out = {k: 1 for k, v in nxt.items() if v}
    return out


def _mul2(p: dict, q: dict, m: int, n: int) -> dict:
    out: dict = {}
    for (a, b) in p:
        for (c, e) in q:
            key = (a + c, b + e)
            if key[0] <= m and key[1] <= n:
                out[key] = out.get(key, 0) ^ 1
    return {k for k, v in out.items() if v}


def criterion_2() -> str:
    for n in range(1, 6):
        for m in range(1, 7):
            P = DoldDescriptor.of(m, (1, n))
            # c~_j restricts to c_j(CP^n) = C(n+1, j) y^j
            got = set()
            for cls in sw_total_P(P):
                for a, mono in cls.terms:
                    b = sum(mono)
                    coeff = prod(comb(n + 1, j) for j in mono) % 2
                    if coeff and b <= n:
                        got ^= {(a, b)}
            lhs = _truncated_power({(0, 0): 1, (1, 0): 1}, m, m, n)
            rhs = _truncated_power({(0, 0): 1, (1, 0): 1, (0, 1): 1}, n + 1, m, n)
            assert got == _mul2(lhs, rhs, m, n), (m, n)
    assert is_spin_P(DoldDescriptor.of(2, (1, 1)))
    return "total class equals (1+x)^m (1+x+y)^(n+1) for CP^n, n <= 5, m <= 6; P(2,1) spin"


# 3 -------------------------------------------------------------------------
def criterion_3() -> str:
    for d in range(0, 11):
        parts = (1, d) if d else (1,)
        for m in range(1, 9):
            P = DoldDescriptor.of(m, parts)
            series = sw_total_P(P)
            for j in range(d + 1):
                if 2 * j + 1 > P.dim:
                    continue
                assert series[2 * j + 1].coefficient(1, (j,) if j else ()) == (m + 1 + d - j) % 2
    return "coefficient of x c~_j in w_(2j+1) is m+1+d-j mod 2, m <= 8, d <= 10"


# 4 -------------------------------------------------------------------------
def _phi(m: int) -> int:
    return sum(1 for j in range(1, m + 1) if j % 8 in (0, 1, 2, 4))


def criterion_4() -> str:
    for n in range(2, 17):
        X = FlagDescriptor((1,) * n)
        for m in range(1, 11):
            expect = (m + 1 + comb(n, 2)) % 2 ** _phi(m) == 0
            assert stably_parallelizable(m, X).holds == expect, (n, m)
    X16 = FlagDescriptor((1,) * 16)
    assert {m for m in range(1, 11) if stably_parallelizable(m, X16).holds} == {1, 3, 7}
    X6 = FlagDescriptor((1,) * 6)
    assert not any(parallelizable(m, X6).holds for m in range(1, 65))
    return "stable verdict = 2^phi(m) | m+1+C(n,2) for n <= 16; n=16 gives {1,3,7}; n=6 never parallelizable"


# 5 -------------------------------------------------------------------------
def criterion_5() -> str:
    witnesses = 0
    for n in range(2, 9):
        for k in range(1, n // 2 + 1):
            X = FlagDescriptor.grassmannian(n, k)
            for m in (2, 4, 6):
                v = cobordism_verdict(m, X)
                assert not v.is_open, (n, k, m)
                assert v.holds == (nu2(k) >= nu2(n)), (n, k, m, v.rule)
                if v.holds and X.d <= 12:
                    assert "I" in v.witness, (n, k, m)
                    assert verify_witness(m, X, v), (n, k, m)
                    witnesses += 1
    return f"CG(n,k) verdicts follow nu2(k) >= nu2(n), n <= 8; {witnesses} witnesses re-verified"


# 6 -------------------------------------------------------------------------
def criterion_6() -> str:
    count = 0
    for n in range(2, 7):
        for k in range(1, n // 2 + 1):
            d = k * (n - k)
            first = block_variables((k, n - k))[0]
            chern = {j: elementary_symmetric(n, j, first) for j in range(1, k + 1)}
            for size in range(1, d + 1):
                for cols in combinations_with_replacement(range(1, k + 1), size):
                    if sum(cols) != d:
                        continue
                    p = Gf2Poly.one(n)
                    for j in cols:
                        p = p * chern[j]
                    assert integrate_partial_flag((k, n - k), p) == column_integral(n, k, cols), (n, k, cols)
                    count += 1
    return f"{count} top-degree monomials in c_j(gamma) agree with the Pieri oracle, n <= 6"


# 7 -------------------------------------------------------------------------
def criterion_7() -> str:
    for r in (2, 4, 6, 8, 10, 12):
        rep = build_generators(r)
        report = verify_relations(rep)
        assert report.ok, report.violations
        assert list(rep.square_signs) == expected_square_signs(r)
        assert all(set(m.flatten().tolist()) <= {-1, 0, 1} for m in rep.matrices)
        assert algebra_dimension(rep) == 4 ** (r // 2), r
    return "relations, square signs, entries and algebra dim 4^(r/2) for r = 2..12"


# 8 -------------------------------------------------------------------------
def criterion_8() -> str:
    total = 0
    for n in range(1, 17):
        for parts in compositions(n):
            exact = factorial(n) // prod(factorial(p) for p in parts)
            assert multinomial_parity(parts) == exact % 2, parts
            total += 1
    for n in range(1, 9):
        assert FlagDescriptor((1,) * n).chi == factorial(n)
    for n in range(1, 7):
        for parts in compositions(n):
            X = FlagDescriptor(parts)
            for m in range(1, 9):
                P = DoldDescriptor(m, X)
                assert euler_char_P(P) == (1 if m % 2 == 0 else 0) * X.chi
                # w_top[P] = chi(P) mod 2 through the x^m c~_d coefficient
                top = w(P, P.dim).coefficient(m, (X.d,) if X.d else ())
                assert top * (X.chi % 2) == euler_char_P(P) % 2
    return f"multinomial parity on {total} compositions; chi(Flag(C^n)) = n!; chi(P) = chi(RP^m) chi(X)"


# 9 -------------------------------------------------------------------------
descriptors = st.tuples(
    st.integers(min_value=1, max_value=8),
    st.integers(min_value=1, max_value=6).flatmap(
        lambda n: st.sampled_from(list(compositions(n)))
    ),
)


@settings(max_examples=60, deadline=None, derandomize=True)
@given(descriptors)
def _prop_orientable_and_spin(desc):
    m, parts = desc
    P = DoldDescriptor.of(m, parts)
    w1, w2 = w(P, 1), w(P, 2)
    assert is_orientable_P(P) == w1.is_zero()
    c1_vanishes = is_spin_X(P.X)
    w2_zero = all(mono == (1,) and a == 0 and c1_vanishes for a, mono in w2.terms)
    assert is_spin_P(P) == (w1.is_zero() and w2_zero)


@settings(max_examples=60, deadline=None, derandomize=True)
@given(descriptors)
def _prop_restrictions(desc):
    m, parts = desc
    P = DoldDescriptor.of(m, parts)
    for k, cls in enumerate(sw_total_P(P)):
        fiber = cls.restrict_fiber()
        expect_fiber = SWClass.c(m, k // 2) if k % 2 == 0 and k // 2 <= P.d else SWClass.zero(m)
        assert fiber == expect_fiber
        section = cls.restrict_section()
        expect = SWClass.x(m, k) if k <= m and comb(m + 1 + P.d, k) % 2 else SWClass.zero(m)
        assert section == expect


@settings(max_examples=40, deadline=None, derandomize=True)
@given(descriptors, st.randoms(use_true_random=False))
def _prop_permutation_invariance(desc, rnd):
    m, parts = desc
    shuffled = list(parts)
    rnd.shuffle(shuffled)
    X, Y = FlagDescriptor(parts), FlagDescriptor(tuple(shuffled))
    pairs = [(cobordism_verdict(m, X), cobordism_verdict(m, Y))]
    if X.r >= 2:
        pairs += [(stably_parallelizable(m, X), stably_parallelizable(m, Y)),
                  (parallelizable(m, X), parallelizable(m, Y))]
    for a, b in pairs:
        assert (a.state, a.rule) == (b.state, b.rule)


def _cli_output(argv) -> bytes:
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        cli.main(argv)
    return buf.getvalue().encode()


@settings(max_examples=15, deadline=None, derandomize=True)
@given(descriptors)
def _prop_cli_determinism(desc):
    m, parts = desc
    argv = ["analyze", "--m", str(m), "--parts", ",".join(map(str, parts)), "--json"]
    assert _cli_output(argv) == _cli_output(argv)


def criterion_9() -> str:
    _prop_orientable_and_spin()
    _prop_restrictions()
    _prop_permutation_invariance()
    _prop_cli_determinism()
    table = ["table", "--m-range", "1..4", "--n-max", "5", "--what", "all"]
    assert _cli_output(table) == _cli_output(table)
    return "orientability, spin, restriction, permutation-invariance and CLI determinism properties"


CRITERIA = [
    (1, criterion_1, 1.0),
    (2, criterion_2, 5.0),
    (3, criterion_3, None),
    (4, criterion_4, 1.0),
    (5, criterion_5, 60.0),
    (6, criterion_6, 30.0),
    (7, criterion_7, 10.0),
    (8, criterion_8, None),
    (9, criterion_9, None),
]


@pytest.mark.parametrize("number,func,limit", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(number, func, limit):
    run(number, func, limit)


if __name__ == "__main__":
    failed = 0
    for number, func, limit in CRITERIA:
        try:
            run(number, func, limit)
        except Exception:
            failed += 1
        print(RESULTS[number])
    raise SystemExit(1 if failed else 0)
