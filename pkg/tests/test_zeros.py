import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from moranspec import MoranMeasure
from moranspec.freq import Frequency, ZeroWitness, from_zero_form
from moranspec.zeros import all_witnesses, enumerate_zeros, level_bound, zero_membership
from oracles import brute_witnesses


def test_membership_examples(cantor3):
    r = cantor3.ratio
    assert zero_membership(cantor3, Frequency.rational(r, F(2, 3))) == ZeroWitness(1, 1, 3)
    assert zero_membership(cantor3, Frequency.rational(r, F(1, 3))) is None
    assert zero_membership(cantor3, Frequency.zero(r)) is None


def test_membership_examples_match_brute_force(cantor3):
    got = brute_witnesses(1, 2, 1, (), (3,), [(F(2, 3),), (F(1, 3),)], 5, 10)
    assert got == {(F(2, 3),): (1, 1, 3), (F(1, 3),): None}


def test_ratio_mismatch(cantor3, sqrt23):
    with pytest.raises(ValueError):
        zero_membership(cantor3, Frequency.zero(sqrt23.ratio))


def test_two_branches_rejected(sqrt23):
    f = from_zero_form(sqrt23, 1, 1) + from_zero_form(sqrt23, 2, 1)
    assert f.support == (0, 1)
    assert zero_membership(sqrt23, f) is None


def test_smallest_level_returned():
    # constant digits: 4/3 = 2**2 * 1/3 (level 2) but also 2 * 2/3 (level 1)
    m = MoranMeasure.build(1, 2, 1, period=[3])
    assert zero_membership(m, Frequency.rational(m.ratio, F(4, 3))) == ZeroWitness(1, 2, 3)
    ws = all_witnesses(m, Frequency.rational(m.ratio, F(4, 3)))
    assert ws == [ZeroWitness(1, 2, 3), ZeroWitness(2, 1, 3)]


def test_level_bound(cantor3, p5q7):
    assert level_bound(cantor3, 1) == 1  # 2**1 <= 3 < 2**2
    assert level_bound(p5q7, 7**10) == 10


def test_enumerate_examples(cantor3):
    r = cantor3.ratio
    assert enumerate_zeros(cantor3, 1, 2) == [Frequency.rational(r, F(x, 3)) for x in (-4, -2, 2, 4)]
    assert enumerate_zeros(cantor3, 2, 1) == [Frequency.rational(r, F(x, 3)) for x in (-4, -2, 2, 4)]
    assert enumerate_zeros(MoranMeasure.build(1, 2, 1, period=[2]), 1, 1)


def test_enumerate_is_deduplicated_and_sorted(sqrt23):
    zs = enumerate_zeros(sqrt23, 5, 12)
    assert len(zs) == len(set(zs))
    assert zs == sorted(zs, key=Frequency.sort_key)


@pytest.mark.parametrize(
    "p, q, r, pre, per",
    [(1, 2, 1, (), (3,)), (2, 3, 2, (), (5, 7)), (2, 5, 1, (), (3,)), (1, 2, 1, (2,), (3,)), (5, 7, 1, (), (5,)),
     (3, 5, 3, (), (2,))],
)
def test_soundness_and_brute_force_agreement(p, q, r, pre, per):
    m = MoranMeasure.build(p, q, r, period=per, preperiod=pre)
    zs = enumerate_zeros(m, 4, 8)
    brute = brute_witnesses(p, q, r, pre, per, [f.coefficients for f in zs], 4, 8)
    for f in zs:
        w = zero_membership(m, f)
        assert w is not None
        assert from_zero_form(m, w.level, w.numerator) == f
        assert (w.level, w.numerator, w.digit) == brute[f.coefficients]


def test_non_members_rejected(sqrt23):
    rng = random.Random(7)
    for _ in range(100):
        n = rng.randint(1, 8)
        N = sqrt23.digit(n)
        a = rng.choice([x for x in range(-30, 31) if x % N])
        assert zero_membership(sqrt23, from_zero_form(sqrt23, n, a).scale(N)) is None


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 12), st.integers(-200, 200), st.sampled_from([(1, 2, 1, (3, 5)), (2, 3, 2, (5, 7)), (5, 7, 1, (5,))]))
def test_symmetry(n, a, params):
    p, q, r, per = params
    m = MoranMeasure.build(p, q, r, period=per)
    f = Frequency.rational(m.ratio, 0) + from_zero_form(m, n, a) if a % m.digit(n) else None
    if f is None:
        return
    for g in (f, f.scale(F(1, 2)), f.scale(3)):
        assert (zero_membership(m, g) is None) == (zero_membership(m, -g) is None)


def test_huge_frequency(p5q7):
    f = from_zero_form(p5q7, 120, 7**50 + 2)
    w = zero_membership(p5q7, f)
    assert w is not None and from_zero_form(p5q7, w.level, w.numerator) == f
