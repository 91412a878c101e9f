import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qtau.arith import omega, triangular_coeff
from qtau.config import config
from qtau.errors import DomainError, LimitExceededError, ModulusMismatchError, NonUnitError, SpecParseError
from qtau.series import (EtaProductSpec, IntSeries, ModSeries, add, coeff, eta_factor, eta_multiply, eta_product,
                         invert, make_mod_series, make_series, mul, negate, one, power, reduce_mod, series_from_json,
                         series_to_json, sub, truncate)

small_ints = st.integers(min_value=-50, max_value=50)


@st.composite
def int_series(draw, order=None):
    order = draw(st.integers(min_value=0, max_value=10)) if order is None else order
    return make_series(draw(st.lists(small_ints, min_size=order + 1, max_size=order + 1)), order)


@st.composite
def series_pairs(draw):
    order = draw(st.integers(min_value=0, max_value=10))
    return draw(int_series(order)), draw(int_series(order))


@st.composite
def unit_series(draw):
    f = draw(int_series())
    return make_series((draw(st.sampled_from((1, -1))),) + f.coeffs[1:], f.order)


def naive_product(factors, order):
    """prod (1 - q^(cm))^e expanded with dense mul and power only."""
    result = one(order)
    for c, e in factors:
        base = one(order)
        for m in range(1, order // c + 1):
            binomial = [0] * (order + 1)
            binomial[0], binomial[c * m] = 1, -1
            base = mul(make_series(binomial, order), base)
        result = mul(result, power(base, e))
    return result


def test_make_series_pads_and_rejects_overflow():
    assert make_series([1, 2], 4).coeffs == (1, 2, 0, 0, 0)
    with pytest.raises(DomainError):
        make_series([1, 2, 3], 1)
    with pytest.raises(DomainError):
        make_series([], -1)


def test_mod_series_requires_canonical_residues():
    with pytest.raises(DomainError):
        ModSeries((0, 5), 1, 5)
    with pytest.raises(DomainError):
        ModSeries((0, -1), 1, 5)
    assert make_mod_series([7, -1], 1, 5).coeffs == (2, 4)


def test_order_mismatch_truncates_to_smaller():
    f = make_series([1, 1, 1, 1], 3)
    g = make_series([1, 1], 1)
    assert add(f, g) == make_series([2, 2], 1)
    assert mul(f, g).order == 1


def test_mixing_exact_and_modular_is_rejected():
    with pytest.raises(DomainError):
        add(make_series([1], 0), make_mod_series([1], 0, 3))


def test_modulus_mismatch():
    with pytest.raises(ModulusMismatchError):
        mul(make_mod_series([1, 2], 1, 3), make_mod_series([1, 2], 1, 5))


def test_invert_requires_unit_constant():
    with pytest.raises(NonUnitError):
        invert(make_series([2, 1], 3))
    with pytest.raises(NonUnitError):
        invert(make_mod_series([3, 1], 3, 6))
    inverse = invert(make_mod_series([2, 1], 3, 5))
    assert mul(inverse, make_mod_series([2, 1], 3, 5)) == one(3, 5)


def test_geometric_series_inverse():
    assert invert(make_series([1, -1], 5)) == make_series([1] * 6, 5)


def test_negative_power_goes_through_invert():
    f = make_series([1, -1], 4)
    assert power(f, -2) == make_series([1, 2, 3, 4, 5], 4)
    assert power(f, 0) == one(4)


def test_coeff_out_of_range():
    f = make_series([1, 2, 3], 2)
    assert coeff(f, 2) == 3
    assert f[1] == 2
    with pytest.raises(DomainError):
        coeff(f, 3)
    with pytest.raises(DomainError):
        coeff(f, -1)


def test_truncate():
    f = make_series(range(6), 5)
    assert truncate(f, 2) == make_series([0, 1, 2], 2)
    with pytest.raises(DomainError):
        truncate(f, 6)


def test_reduce_mod_rejects_tiny_and_non_divisor_moduli():
    with pytest.raises(DomainError):
        reduce_mod(make_series([1], 0), 1)
    f = make_mod_series([5, 7], 1, 12)
    assert reduce_mod(f, 4) == make_mod_series([1, 3], 1, 4)
    with pytest.raises(ModulusMismatchError):
        reduce_mod(f, 5)


@given(series_pairs())
def test_ring_laws(pair):
    f, g = pair
    assert add(f, g) == add(g, f)
    assert mul(f, g) == mul(g, f)
    assert sub(add(f, g), g) == f
    assert add(f, negate(f)) == make_series([], f.order)
    assert mul(f, one(f.order)) == f


@given(st.integers(min_value=0, max_value=8).flatmap(lambda n: st.tuples(int_series(n), int_series(n), int_series(n))))
def test_associative_and_distributive(triple):
    f, g, h = triple
    assert mul(mul(f, g), h) == mul(f, mul(g, h))
    assert mul(f, add(g, h)) == add(mul(f, g), mul(f, h))


@given(unit_series())
def test_invert_is_a_two_sided_inverse(f):
    assert mul(f, invert(f)) == one(f.order)
    assert invert(invert(f)) == f


@pytest.mark.slow
@settings(max_examples=10_000, deadline=None)
@given(series_pairs(), st.integers(min_value=2, max_value=40), st.integers(min_value=0, max_value=4))
def test_reduce_mod_is_a_ring_homomorphism(pair, m, e):
    f, g = pair
    assert reduce_mod(add(f, g), m) == add(reduce_mod(f, m), reduce_mod(g, m))
    assert reduce_mod(sub(f, g), m) == sub(reduce_mod(f, m), reduce_mod(g, m))
    assert reduce_mod(mul(f, g), m) == mul(reduce_mod(f, m), reduce_mod(g, m))
    assert reduce_mod(negate(f), m) == negate(reduce_mod(f, m))
    assert reduce_mod(power(f, e), m) == power(reduce_mod(f, m), e)


@given(unit_series(), st.integers(min_value=2, max_value=40))
def test_reduce_mod_commutes_with_invert(f, m):
    assert reduce_mod(invert(f), m) == invert(reduce_mod(f, m))


def test_eta_factor_matches_omega():
    f = eta_factor(1, 10000)
    assert all(f.coeffs[n] == omega(n) for n in range(10001))
    assert eta_factor(1, 8).coeffs == (1, -1, -1, 0, 0, 1, 0, 1, 0)


def test_eta_factor_scaled():
    f = eta_factor(3, 15)
    assert f.coeffs[3] == -1 and f.coeffs[6] == -1 and f.coeffs[15] == 1
    assert f.coeffs[1] == 0
    with pytest.raises(DomainError):
        eta_factor(0, 5)


def test_cube_matches_triangular_closed_form():
    cube = eta_product(EtaProductSpec(0, ((1, 3),)), 5000)
    assert all(cube.coeffs[n] == triangular_coeff(n) for n in range(5001))


@pytest.mark.parametrize('factors', [((1, 24),), ((1, -1),), ((2, 1), (1, -1)), ((4, 1), (1, -1)), ((1, 5), (5, -1)),
                                     ((3, -2), (2, 3))])
def test_sparse_expansion_agrees_with_dense_arithmetic(factors):
    assert eta_product(EtaProductSpec(0, factors), 200) == naive_product(factors, 200)


def test_delta_function():
    delta = eta_product(EtaProductSpec.eta_power(24), 10)
    assert delta.coeffs == (0, 1, -24, 252, -1472, 4830, -6048, -16744, 84480, -113643, -115920)


def test_partition_generating_function():
    assert eta_product(EtaProductSpec(0, ((1, -1),)), 9).coeffs == (1, 1, 2, 3, 5, 7, 11, 15, 22, 30)


def test_delta_beyond_order_gives_zero_series():
    assert eta_product(EtaProductSpec(5, ((1, 1),)), 3).coeffs == (0, 0, 0, 0)


@settings(max_examples=40)
@given(st.lists(st.tuples(st.integers(min_value=1, max_value=5), st.integers(min_value=-6, max_value=6)), max_size=3),
       st.integers(min_value=0, max_value=3), st.integers(min_value=2, max_value=30))
def test_modular_expansion_equals_reduced_exact_expansion(factors, delta, m):
    spec = EtaProductSpec(delta, tuple(factors))
    assert eta_product(spec, 60, m) == reduce_mod(eta_product(spec, 60), m)


def test_eta_multiply_walks_exponents():
    base = eta_product(EtaProductSpec(1), 50)
    assert eta_multiply(eta_multiply(base, 1, 10), 1, 14) == eta_product(EtaProductSpec.eta_power(24), 50)
    assert eta_multiply(eta_multiply(base, 2, 3), 2, -3) == base


def test_eta_product_rejects_bad_orders():
    with pytest.raises(DomainError):
        eta_product(EtaProductSpec(), -1)
    config['max_order'] = 100
    with pytest.raises(LimitExceededError):
        eta_product(EtaProductSpec(), 101)
    with pytest.raises(DomainError):
        eta_product(EtaProductSpec(), 10, 1)


def test_spec_normalizes_factors():
    assert EtaProductSpec(0, ((2, 1), (1, 3), (2, -1))) == EtaProductSpec(0, ((1, 3),))
    assert EtaProductSpec(0, ((3, 1), (1, 2))).factors == ((1, 2), (3, 1))
    with pytest.raises(DomainError):
        EtaProductSpec(-1)
    with pytest.raises(DomainError):
        EtaProductSpec(0, ((0, 2),))


def test_spec_parse_and_format():
    spec = EtaProductSpec.parse("1; 1^24")
    assert spec == EtaProductSpec.eta_power(24)
    assert str(spec) == "1; 1^24"
    assert EtaProductSpec.parse("0;4^1   1^-1") == EtaProductSpec(0, ((4, 1), (1, -1)))
    assert EtaProductSpec.parse(str(EtaProductSpec(2, ((3, -2), (5, 7))))) == EtaProductSpec(2, ((3, -2), (5, 7)))


@pytest.mark.parametrize('text, column', [("1 1^24", 6), ("x; 1^2", 0), ("0; 1^2 two", 7), ("0; 0^2", 3),
                                          ("0; 1^", 3)])
def test_spec_parse_errors_carry_columns(text, column):
    with pytest.raises(SpecParseError) as info:
        EtaProductSpec.parse(text)
    assert info.value.column == column
    assert f"column {column + 1}" in str(info.value)


def test_json_round_trip():
    exact = eta_product(EtaProductSpec.eta_power(24), 30)
    assert series_from_json(series_to_json(exact)) == exact
    assert series_to_json(exact)['coeffs'][2] == '-24'
    modular = eta_product(EtaProductSpec.eta_power(24), 30, 691)
    assert series_from_json(series_to_json(modular)) == modular


def test_checksum_is_stable_and_sensitive():
    f = eta_product(EtaProductSpec.eta_power(24), 100)
    assert f.checksum() == eta_product(EtaProductSpec.eta_power(24), 100).checksum()
    assert 0 <= f.checksum() < 2 ** 64
    assert f.checksum() != eta_product(EtaProductSpec.eta_power(23), 100).checksum()


def test_int_series_validates_length():
    with pytest.raises(DomainError):
        IntSeries((1, 2), 2)
