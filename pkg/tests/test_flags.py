import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gendold.flags import (
    FlagDescriptor,
    is_spin_X,
    nonzero_sw_witness,
    partitions,
    sw_number_X,
    tangent_chern_total,
    x_bordism_nonzero,
)
from gendold.gf2poly import Gf2Poly
from gendold.numeric import DomainError, nu2


def test_descriptor_fields():
    X = FlagDescriptor.parse("2,2")
    assert (X.n, X.r, X.d, X.chi) == (4, 2, 4, 6)
    assert X.is_grassmannian and X.has_repeated_blocks
    assert FlagDescriptor((1, 1, 1)).d == 3
    assert FlagDescriptor((5,)).d == 0


@pytest.mark.parametrize("text", ["", "1,x", "0,2", "-1,3"])
def test_descriptor_rejects(text):
    with pytest.raises(DomainError):
        FlagDescriptor.parse(text)


def test_tangent_chern_low_degree():
    assert tangent_chern_total(FlagDescriptor((1, 1))).c(1).is_zero()
    # c_1(CP^2) = 3h is odd
    assert not tangent_chern_total(FlagDescriptor((1, 2))).c(1).is_zero()
    assert tangent_chern_total(FlagDescriptor((3,))).total_class == Gf2Poly.one(3)


def test_sw_numbers_projective():
    CP2, CP1 = FlagDescriptor((1, 2)), FlagDescriptor((1, 1))
    assert sw_number_X(CP2, (2,)) == 1
    assert sw_number_X(CP2, (1, 1)) == 1
    assert sw_number_X(CP1, (1,)) == 0
    with pytest.raises(DomainError):
        sw_number_X(CP2, (1,))


def test_spin_examples():
    assert is_spin_X(FlagDescriptor((1, 1)))
    assert not is_spin_X(FlagDescriptor((1, 2)))
    assert is_spin_X(FlagDescriptor((2, 2)))


@pytest.mark.parametrize("n,k", [(n, k) for n in range(2, 9) for k in range(1, n // 2 + 1)])
def test_grassmannian_spin_iff_n_even(n, k):
    assert is_spin_X(FlagDescriptor.grassmannian(n, k)) == (n % 2 == 0)


@pytest.mark.parametrize("n", range(2, 6))
def test_full_flags_are_spin(n):
    assert is_spin_X(FlagDescriptor((1,) * n))


small_flags = st.lists(st.integers(min_value=1, max_value=3), min_size=1, max_size=4).filter(
    lambda p: sum(p) <= 6
)


@settings(max_examples=40, deadline=None)
@given(small_flags)
def test_gauss_bonnet_parity(parts):
    X = FlagDescriptor(tuple(parts))
    if X.d:
        assert sw_number_X(X, (X.d,)) == X.chi % 2


def test_partitions_order():
    assert list(partitions(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert list(partitions(0)) == [()]


def test_x_bordism_grassmannians():
    assert x_bordism_nonzero(FlagDescriptor((2, 2))).fails
    v = x_bordism_nonzero(FlagDescriptor((2, 4)))
    assert v.holds and v.rule == "X-grassmann-nu2"
    assert sw_number_X(FlagDescriptor((2, 4)), v.witness["I"]) == 1


@pytest.mark.parametrize("n,k", [(n, k) for n in range(2, 8) for k in range(1, n // 2 + 1)])
def test_grassmann_rule_agrees_with_sw_search(n, k):
    X = FlagDescriptor.grassmannian(n, k)
    assert (nonzero_sw_witness(X) is not None) == (nu2(k) >= nu2(n))


def test_x_bordism_other_rules():
    assert x_bordism_nonzero(FlagDescriptor((2, 2, 1))).rule in ("X-nu2", "X-swap")
    assert x_bordism_nonzero(FlagDescriptor((1, 1, 2))).rule == "X-nu2"
    # smallest flag with three distinct blocks and no nu2 obstruction: d = 14
    v = x_bordism_nonzero(FlagDescriptor((1, 2, 4)))
    assert v.is_open and v.rule == "search-capped"
