import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import t_power
from knormal import build_tower
from knormal.errors import (
    CoercionFailure,
    DegreeMismatch,
    DivisionByZero,
    DNotDividingN,
    NonPrimeP,
    ParseError,
    ReducibleModulus,
    ZeroElement,
)
from knormal.field_core import (
    BaseField,
    determinant,
    field_arithmetic,
    format_element,
    parse_element,
    prime_field,
    rank,
    solve,
)

TOWERS = [(2, 1, 3), (3, 1, 4), (2, 2, 3), (5, 1, 3), (3, 2, 2), (2, 1, 8), (2, 1, 15)]


def has_root_or_factor(coeffs, p):
    """Brute force: does the F_p polynomial factor (degree <= 3 only needs roots)."""
    return any(sum(c * x ** i for i, c in enumerate(coeffs)) % p == 0 for x in range(p))


def test_default_modulus_is_smallest_irreducible_cubic():
    T = build_tower(2, 1, 3)
    assert T.modulus == (1, 1, 0, 1)
    # oracle: z^3 + 1 has the root 1, so z^3 + z + 1 is the first irreducible cubic
    cubics = [(c0, c1, c2, 1) for c2, c1, c0 in itertools.product(range(2), repeat=3)]
    first = next(c for c in cubics if not has_root_or_factor(c, 2))
    assert first == T.modulus


def test_degree_one_tower():
    T = build_tower(2, 1, 1)
    assert T.modulus == (0, 1)
    assert T.Q == 2


def test_non_prime_p():
    with pytest.raises(NonPrimeP):
        build_tower(4, 1, 3)


def test_reducible_moduli():
    with pytest.raises(ReducibleModulus):
        build_tower(2, 1, 3, modulus_Q=[1, 0, 0, 1])
    with pytest.raises(ReducibleModulus):
        BaseField(2, 2, (1, 0, 1))


def test_bad_modulus_degree():
    with pytest.raises(DegreeMismatch):
        build_tower(2, 1, 3, modulus_Q=[1, 1, 1])


def test_explicit_modulus_gives_a_different_field():
    T = build_tower(2, 1, 3, modulus_Q=[1, 0, 1, 1])
    t = t_power(T, 1)
    # t^3 = t^2 + 1 under this modulus
    assert T.pow(t, 3) == (1, 0, 1)


def test_multiplication_examples(f8):
    t = t_power(f8, 1)
    assert f8.mul(t, f8.mul(t, t)) == (1, 1, 0)
    assert f8.mul(t, f8.inv(t)) == f8.one
    assert f8.pow(t, 7) == f8.one


def test_inverse_of_zero(f8):
    with pytest.raises(DivisionByZero):
        f8.inv(f8.zero)
    with pytest.raises(ZeroDivisionError):
        f8.div(f8.one, f8.zero)


@pytest.mark.parametrize("pmn", TOWERS)
def test_group_order(pmn):
    T = build_tower(*pmn)
    g = T.primitive_element
    assert T.pow(g, T.Q - 1) == T.one
    assert all(T.pow(g, (T.Q - 1) // r) != T.one for r in (2, 3, 5, 7, 17, 31) if (T.Q - 1) % r == 0)


@pytest.mark.parametrize("pmn", [(2, 1, 15), (3, 1, 9)])
def test_large_fields_agree_with_log_free_path(pmn):
    # Q > 2^14: no log tables, convolution and xgcd only
    T = build_tower(*pmn)
    assert T._log is None
    a = T.primitive_element
    assert T.mul(a, T.inv(a)) == T.one
    assert T.frobenius(a, 1) == T.pow(a, T.q)


def test_frobenius_examples(f8):
    t = t_power(f8, 1)
    assert f8.frobenius(t, 1) == f8.mul(t, t)
    assert f8.frobenius(t, 2) == (0, 1, 1)
    for a in f8.elements():
        assert f8.frobenius(a, 3) == a


def test_trace_examples(f8):
    assert f8.trace(t_power(f8, 1)) == 0
    assert f8.trace(f8.one) == 1
    a = (1, 1, 0)
    assert f8.trace_to_subfield(a, 3) == a


def test_trace_to_subfield_errors():
    T = build_tower(2, 1, 6)
    with pytest.raises(DNotDividingN):
        T.trace_to_subfield(T.one, 4)
    # trace to F_{q^2} lands in the fixed field of the q^2 Frobenius
    a = T.primitive_element
    assert T.is_fixed(T.trace_to_subfield(a, 2), 2)


def test_conjugate_span_rank(f8):
    assert f8.conjugate_span_rank(f8.one) == 1
    assert f8.conjugate_span_rank((0, 1, 0)) == 2
    assert f8.conjugate_span_rank((1, 1, 0)) == 3
    with pytest.raises(ZeroElement):
        f8.conjugate_span_rank(f8.zero)


def test_coerce(f8):
    assert f8.coerce((1, 0, 0)) == 1
    with pytest.raises(CoercionFailure):
        f8.coerce((0, 1, 0))


def test_field_arithmetic_dispatch(f8):
    t = (0, 1, 0)
    assert field_arithmetic(f8, t, t, "add") == f8.zero
    assert field_arithmetic(f8, t, t, "mul") == (0, 0, 1)
    assert field_arithmetic(f8, t, None, "inv") == f8.inv(t)
    assert field_arithmetic(f8, t, 7, "pow") == f8.one
    with pytest.raises(ValueError):
        field_arithmetic(f8, t, t, "xor")


@pytest.mark.parametrize("pmn", [(2, 1, 3), (3, 1, 2), (2, 2, 2)])
def test_field_axioms_exhaustive(pmn):
    T = build_tower(*pmn)
    els = list(T.elements())
    for a in els:
        for b in els:
            assert T.mul(a, b) == T.mul(b, a)
            assert T.sub(T.add(a, b), b) == a
        if a != T.zero:
            assert T.mul(a, T.inv(a)) == T.one


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 80), st.integers(0, 80), st.integers(0, 80))
def test_distributive_and_frobenius_is_additive(i, j, k):
    T = build_tower(3, 1, 4)
    a, b, c = T.element(i), T.element(j), T.element(k)
    assert T.mul(a, T.add(b, c)) == T.add(T.mul(a, b), T.mul(a, c))
    assert T.frobenius(T.add(a, b), 1) == T.add(T.frobenius(a, 1), T.frobenius(b, 1))
    assert T.frobenius(T.mul(a, b), 1) == T.mul(T.frobenius(a, 1), T.frobenius(b, 1))


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 63))
def test_trace_lies_in_base_field(i):
    T = build_tower(2, 2, 3)
    a = T.element(i)
    tr = T.trace(a)
    assert T.is_fixed(T.embed(tr), 1)


def test_base_field_with_extension_degree():
    F4 = BaseField(2, 2)
    assert F4.modulus == (1, 1, 1)
    u = 2
    assert F4.mul(u, u) == 3  # u^2 = u + 1
    assert F4.pow(u, 3) == 1
    assert F4.primitive_element == 2


def test_element_text_round_trip():
    T = build_tower(2, 2, 3)
    a = T.element(37)
    text = format_element(T, a)
    assert text.count("[") == 3
    assert parse_element(T, text) == a


def test_parse_element_errors(f8):
    with pytest.raises(ParseError):
        parse_element(f8, "0,1")
    with pytest.raises(ParseError):
        parse_element(f8, "a,b,c")
    with pytest.raises(ParseError):
        parse_element(f8, "0,2,0")
    with pytest.raises(ParseError):
        parse_element(f8, "g^x")


def test_generator_power_notation(f8):
    g = f8.primitive_element
    assert parse_element(f8, "g^3") == f8.pow(g, 3)


def test_linear_algebra_helpers():
    F = prime_field(5)
    M = [[1, 2], [3, 4]]
    assert determinant(F, M) == (1 * 4 - 2 * 3) % 5
    X = solve(F, M, [[1], [0]])
    # check M X = e_1
    assert [sum(M[i][k] * X[k][0] for k in range(2)) % 5 for i in range(2)] == [1, 0]
    assert solve(F, [[1, 2], [2, 4]], [[1], [0]]) is None
    assert rank(F, [[1, 2], [2, 4]]) == 1


def test_towers_hash_by_value():
    assert build_tower(2, 1, 3) is build_tower(2, 1, 3)
    assert build_tower(2, 1, 3) != build_tower(2, 1, 3, modulus_Q=[1, 0, 1, 1])
