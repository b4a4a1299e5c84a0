import json

import pytest
from hypothesis import given, settings, strategies as st

from signed_partitions.catalog import CATALOG, IdentityId
from signed_partitions.qseries import (
    LaurentTerm, ProductNotStated, Sign, TruncatedSeries, inverse_even_pochhammer,
    pochhammer_series, product_side, series_mul,
    staircase_exponent, sum_side, term_series,
)
from oracles import ORDINARY, count_residue_partitions, partitions

# p(0..10), brute-force
PARTITION_NUMBERS = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


def test_series_mul_geometric_telescopes():
    one_minus_q = TruncatedSeries([1, -1, 0, 0, 0, 0])
    geometric = TruncatedSeries([1] * 6)
    assert list(series_mul(one_minus_q, geometric)) == [1, 0, 0, 0, 0, 0]


def test_series_mul_hand_expansion():
    a = TruncatedSeries([1, -1, 0, 0, 0, 0])
    b = TruncatedSeries([1, 0, -1, 0, 0, 0])
    assert list(a * b) == [1, -1, -1, 1, 0, 0]


def test_series_mul_identity():
    s = TruncatedSeries([3, -2, 7, 0, 11])
    assert s * TruncatedSeries.one(4) == s


def test_series_mul_rejects_mismatched_orders():
    with pytest.raises(ValueError):
        series_mul(TruncatedSeries([1, 2]), TruncatedSeries([1, 2, 3]))


def test_pochhammer_positive_exponents():
    s = pochhammer_series(1, 1, 2, Sign.MINUS, 5)
    assert isinstance(s, TruncatedSeries)
    assert list(s) == [1, -1, -1, 1, 0, 0]


def test_pochhammer_negative_exponents_give_laurent_term():
    t = pochhammer_series(-1, -2, 2, Sign.PLUS, 10)
    assert isinstance(t, LaurentTerm)
    assert t.min_exponent == -4
    assert t.as_dict() == {-4: 1, -3: 1, -1: 1, 0: 1}


def test_pochhammer_negative_exponents_minus_sign():
    t = pochhammer_series(-1, -2, 2, Sign.MINUS, 10)
    assert t.as_dict() == {-4: 1, -3: -1, -1: -1, 0: 1}


@given(st.integers(-6, 6), st.integers(-4, 4), st.integers(0, 7),
       st.sampled_from(list(Sign)), st.integers(-30, 30))
def test_capped_laurent_expansion_is_a_prefix_of_the_full_one(first, step, count, sign, cap):
    full = pochhammer_series(first, step, count, sign, 0)
    capped = pochhammer_series(first, step, count, sign, 0, max_exponent=cap)
    if isinstance(full, TruncatedSeries):
        return
    assert capped.min_exponent == full.min_exponent
    assert {e: c for e, c in full.as_dict().items() if e <= cap} == capped.as_dict()


def test_pochhammer_empty_product():
    assert list(pochhammer_series(3, 2, 0, Sign.PLUS, 4)) == [1, 0, 0, 0, 0]


def test_laurent_term_refuses_negative_exponents_on_truncation():
    with pytest.raises(ValueError):
        LaurentTerm(-1, (1, 1)).to_series(5)
    assert list(LaurentTerm(-1, (1, 1)).shift(1).to_series(3)) == [1, 1, 0, 0]


def test_inverse_even_pochhammer():
    assert list(inverse_even_pochhammer(0, 4)) == [1, 0, 0, 0, 0]
    assert list(inverse_even_pochhammer(1, 6)) == [1, 0, 1, 0, 1, 0, 1]
    # 4 = 4 = 2+2 with parts in {2, 4}
    assert inverse_even_pochhammer(2, 6)[4] == 2


_SMALL_PARTITIONS = [list(partitions(n)) for n in range(25)]


@given(st.integers(0, 8), st.integers(0, 24))
def test_inverse_even_pochhammer_counts_bounded_even_partitions(count, order):
    s = inverse_even_pochhammer(count, order)
    for n in range(order + 1):
        expected = sum(all(x % 2 == 0 and x <= 2 * count for x in p)
                       for p in _SMALL_PARTITIONS[n])
        assert s[n] == expected


@pytest.mark.parametrize("ident, n, expected", [
    (IdentityId.RR1_SIGNED, 3, 2 + 5 + 8),
    (IdentityId.GG2_3WAY, 2, 4 + 8),
    (IdentityId.P_SIGNED, 3, 2 + 3 + 4),
    (IdentityId.D_SIGNED, 3, 2 + 4 + 6),
    (IdentityId.RR2_SIGNED, 3, 3 + 6 + 9),
    (IdentityId.GG1_PRIME, 3, 2 + 6 + 10),
    (IdentityId.LG2_3WAY, 3, 3 + 7 + 11),
    (IdentityId.LG1_SHIFT, 2, 1 + 5 + 9),
    (IdentityId.LG1_PRIME, 2, 0 + 2 + 4 + 6),
])
def test_staircase_exponent(ident, n, expected):
    assert staircase_exponent(ident, n) == expected


@pytest.mark.parametrize("ident", list(IdentityId))
def test_staircase_of_zero_terms(ident):
    assert staircase_exponent(ident, 0) == (1 if ident is IdentityId.LG1_SHIFT else 0)


def test_staircase_rejects_unknown_identity():
    with pytest.raises(KeyError):
        staircase_exponent("NOPE", 1)


def test_sum_side_examples():
    assert list(sum_side("RR1_SIGNED", 6)) == [1, 1, 1, 1, 2, 2, 3]
    assert list(sum_side("P_SIGNED", 10)) == PARTITION_NUMBERS


@pytest.mark.parametrize("ident", [i for i in IdentityId if i is not IdentityId.GG_DIFF])
def test_sum_side_at_order_zero(ident):
    assert list(sum_side(ident, 0)) == [1]


@pytest.mark.parametrize("ident", list(IdentityId))
def test_sum_side_matches_brute_force_ordinary_counts(ident):
    predicate = ORDINARY[CATALOG[ident].ordinary.value]
    s = sum_side(ident, 22)
    assert list(s) == [sum(map(predicate, partitions(n))) for n in range(23)]


@pytest.mark.parametrize("ident", list(IdentityId))
def test_sum_side_coefficients_nonnegative(ident):
    assert min(sum_side(ident, 120)) >= 0


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(list(IdentityId)), st.integers(0, 40), st.integers(0, 40))
def test_truncation_is_monotone(ident, order, extra):
    assert sum_side(ident, order + extra).truncate(order) == sum_side(ident, order)


def test_every_term_is_a_power_series():
    for ident in IdentityId:
        for n in range(8):
            term = term_series(ident, n, 80)
            assert min(term) >= 0


def test_product_side_examples():
    assert list(product_side("RR1", 6)) == [1, 1, 1, 1, 2, 2, 3]
    assert product_side("GG1", 8)[8] == 4
    assert list(product_side("GG1_PRIME", 0)) == [1]


@pytest.mark.parametrize("ident, modulus, residues", [
    ("RR1", 5, {1, 4}), ("GG1", 8, {1, 4, 7}), ("GG2", 8, {3, 4, 5}),
])
def test_product_side_counts_residue_partitions(ident, modulus, residues):
    s = product_side(ident, 25)
    assert list(s) == [count_residue_partitions(n, modulus, residues) for n in range(26)]


@pytest.mark.parametrize("ident", ["RR2", "P", "D", "LG1_E", "LG2_H", "GG_DIFF", "LG1_SHIFT"])
def test_product_side_not_stated(ident):
    with pytest.raises(ProductNotStated):
        product_side(ident, 10)


@pytest.mark.parametrize("ident", ["RR1", "GG1_ANDREWS", "GG1_PRIME", "GG2_3WAY"])
def test_sum_equals_product_to_200(ident):
    assert sum_side(ident, 200) == product_side(ident, 200)


def _classical_sum(order, exponent, pochhammer, denominator):
    # sum_n q^exponent(n) * pochhammer(n) / denominator(n), built term by term
    total = TruncatedSeries.zero(order)
    n = 0
    while exponent(n) <= order:
        term = [0] * (order + 1)
        term[exponent(n)] = 1
        term = TruncatedSeries(term) * pochhammer(n) * denominator(n)
        total = total + term
        n += 1
    return total


def _inv_q_pochhammer(n, order):
    # 1/(q;q)_n
    out = [1] + [0] * order
    for k in range(1, n + 1):
        for j in range(k, order + 1):
            out[j] += out[j - k]
    return TruncatedSeries(out)


def test_rr1_sum_side_matches_the_ordinary_series():
    order = 40
    classical = _classical_sum(order, lambda n: n * n,
                               lambda n: TruncatedSeries.one(order),
                               lambda n: _inv_q_pochhammer(n, order))
    assert classical == sum_side("RR1", order)


def test_lg1_series_two_forms_agree():
    # sum q^{n(n+1)} (-q;q^2)_{n+1} / (q^2;q^2)_n, the second displayed form
    order = 60
    alt = _classical_sum(order, lambda n: n * (n + 1),
                         lambda n: pochhammer_series(1, 2, n + 1, Sign.PLUS, order),
                         lambda n: inverse_even_pochhammer(n, order))
    assert alt == sum_side("LG1_E", order)
    assert alt == sum_side("LG1_SHIFT", order)
    assert alt == sum_side("LG1_PRIME", order)


def test_gg_difference_series():
    order = 80
    diff = sum_side("GG1", order) - sum_side("GG2", order)
    assert diff == sum_side("GG_DIFF", order)
    assert min(diff) >= 0


def test_csv_and_json_output():
    s = TruncatedSeries([1, 1, 2])
    assert s.to_csv() == "n,coefficient\n0,1\n1,1\n2,2\n"
    big = sum_side("P", 450)
    values = json.loads(big.to_json())
    assert all(isinstance(v, str) for v in values)
    assert int(values[450]) == big[450]
    assert big[450] > 2**63
