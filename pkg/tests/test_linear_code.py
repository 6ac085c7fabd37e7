import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from griesmer.constructions import hexacode, repetition, simplex
from griesmer.finite_field import field_of_order
from griesmer.linear_code import (
    CodeError,
    GuardExceeded,
    LinearCode,
    agreement_profile,
    ceil_div,
    griesmer_bound,
    lift_min_weight,
    preimages,
    projected,
    residual,
    shortened,
    supplementary_subcode,
    weight,
)

from .conftest import brute_force_distribution


@pytest.mark.parametrize("q,k,d,expected", [(2, 3, 4, 7), (4, 3, 4, 6), (4, 3, 6, 9), (3, 1, 5, 5)])
def test_griesmer_bound(q, k, d, expected):
    assert griesmer_bound(q, k, d) == expected


def test_weight_distributions():
    assert hexacode().weight_distribution == {0: 1, 4: 45, 6: 18}
    assert simplex(2, 3).weight_distribution == {0: 1, 4: 7}
    assert repetition(3, 5).weight_distribution == {0: 1, 5: 2}


def test_minimum_distance():
    assert hexacode().d == 4
    assert simplex(3, 3).d == 9
    assert repetition(2, 6).d == 6


def test_distribution_matches_brute_force_on_corpus(codes):
    for code in codes:
        if code.q ** code.k <= 1024:
            assert code.weight_distribution == brute_force_distribution(code), code


def test_is_griesmer():
    assert hexacode().is_griesmer()
    f2 = field_of_order(2)
    assert not LinearCode(f2, [[1, 0, 0], [0, 1, 0]], allow_zero_columns=True).is_griesmer()


def test_full_length_is_required_by_default():
    f2 = field_of_order(2)
    with pytest.raises(CodeError):
        LinearCode(f2, [[1, 0, 0], [0, 1, 0]])
    with pytest.raises(CodeError):
        LinearCode(f2, [[1, 1], [1, 1]])


def test_divisor_and_exponent():
    assert hexacode().divisor_and_exponent() == (2, 1)
    assert simplex(2, 3).divisor_and_exponent() == (4, 2)


def test_enumeration_guard(monkeypatch):
    monkeypatch.setenv("GRIESMER_GUARD", "100")
    code = LinearCode(field_of_order(4), np.eye(4, dtype=np.int64))
    with pytest.raises(GuardExceeded):
        code.weight_distribution
    monkeypatch.setenv("GRIESMER_GUARD", "256")
    assert LinearCode(field_of_order(4), np.eye(4, dtype=np.int64)).d == 1


def test_residual_examples():
    s = simplex(2, 3)
    for a in s.words_of_weight(4):
        r = residual(s, a)
        assert (r.n, r.k, r.d) == (3, 2, 2)
    h = hexacode()
    r = residual(h, h.min_weight_codeword())
    assert (r.n, r.k, r.d) == (2, 2, 1)
    rep = repetition(2, 4)
    with pytest.raises(CodeError):
        residual(rep, np.ones(4, dtype=np.int64))


def test_projected_examples():
    h = hexacode()
    full = h.words_of_weight(6)[0]
    p = projected(h, full)
    assert p.n == 6 and p.weight_distribution == h.weight_distribution
    s = simplex(2, 3)
    p = projected(s, s.words_of_weight(4)[0])
    assert (p.n, p.k) == (4, 3)
    with pytest.raises(CodeError):
        projected(h, np.zeros(6, dtype=np.int64))


def test_shortened_examples():
    s = simplex(2, 3)
    for j in range(s.n):
        sh = shortened(s, s.gen[:, j])
        assert (sh.n, sh.k, sh.d) == (6, 2, 4) and sh.is_griesmer()
    h = hexacode()
    for j in range(h.n):
        sh = shortened(h, h.gen[:, j])
        assert (sh.n, sh.k, sh.d) == (5, 2, 4)
    with pytest.raises(CodeError):
        shortened(h, [1, 0, 1])


def test_residual_origin_points_back_to_parent_columns():
    h = hexacode()
    a = h.min_weight_codeword()
    r = residual(h, a)
    assert all(a[c] == 0 for c in r.origin)


def test_agreement_profile_examples():
    f = field_of_order(4)
    prof = agreement_profile(f, [1, 2, 0], [1, 1, 1])
    assert prof.counts == {1: 1, 2: 1, 3: 0}
    a = np.array([1, 3, 2, 0])
    assert agreement_profile(f, a, a).counts == {1: 3, 2: 0, 3: 0}
    assert agreement_profile(f, [1, 1, 0, 0], [0, 0, 2, 3]).total() == 0


def test_agreement_profile_predicts_combination_weights():
    # b + lambda*a vanishes on supp(a) & supp(b) exactly where a_i = (-1/lambda) b_i
    code = hexacode()
    f = code.field
    a = code.min_weight_codeword()
    for b in code.codewords[1:40]:
        prof = agreement_profile(f, a, b)
        both = int(np.count_nonzero((a != 0) & (b != 0)))
        for lam in f.nonzero():
            c = f.vadd(b, f.vmul(np.full(code.n, lam), a))
            alpha = f.inv(f.neg(lam))
            assert weight(c) == weight(a) + weight(b) - both - prof.counts[alpha]


def test_lift_min_weight_on_simplex():
    s = simplex(2, 3)
    for a in s.words_of_weight(4):
        res = residual(s, a)
        for t in res.words_of_weight(res.d):
            pre = preimages(s, a, t, res)
            assert len(pre) == 2
            assert weight(lift_min_weight(s, a, t, res)) == 4


def test_supplementary_subcode_examples():
    s = simplex(2, 3)
    rows = supplementary_subcode(s, s.min_weight_codeword())
    sub = LinearCode(s.field, rows, allow_zero_columns=True)
    assert sub.k == 2 and sub.weights == [4] and sub.effective_length() == 6
    h = hexacode()
    rows = supplementary_subcode(h, h.min_weight_codeword())
    sub = LinearCode(h.field, rows, allow_zero_columns=True)
    assert sub.k == 2 and sub.effective_length() == 5 and sub.d == 4


def test_supplementary_subcode_rejects_non_griesmer():
    f = field_of_order(2)
    code = LinearCode(f, [[1, 1, 1, 0], [0, 1, 1, 1]])
    assert not code.is_griesmer()
    with pytest.raises(CodeError):
        supplementary_subcode(code, code.min_weight_codeword())


def test_min_weight_codeword_is_deterministic():
    assert repetition(2, 4).min_weight_codeword().tolist() == [1, 1, 1, 1]
    assert hexacode().min_weight_codeword().tolist() == hexacode().min_weight_codeword().tolist()


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 60), st.sampled_from([2, 3, 4, 5, 7, 8, 9]), st.integers(1, 5))
def test_griesmer_bound_recursion(d, q, k):
    # g_q(k, d) = d + g_q(k-1, ceil(d/q))
    if k > 1:
        assert griesmer_bound(q, k, d) == d + griesmer_bound(q, k - 1, ceil_div(d, q))
    assert griesmer_bound(q, k, d) >= d + k - 1


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([2, 3, 4, 5]), st.integers(1, 3), st.integers(1, 6), st.data())
def test_random_codes_match_brute_force(q, k, n, data):
    f = field_of_order(q)
    gen = data.draw(st.lists(st.lists(st.integers(0, q - 1), min_size=n, max_size=n),
                             min_size=k, max_size=k))
    try:
        code = LinearCode(f, gen, allow_zero_columns=True)
    except CodeError:
        return
    assert code.weight_distribution == brute_force_distribution(code)
    assert griesmer_bound(q, k, code.d) <= code.effective_length()
