import io
from fractions import Fraction as F

import gmpy2
import mpmath
import pytest
from gmpy2 import mpfr
from hypothesis import given, settings, strategies as st

from moranspec import MoranMeasure
from moranspec.fourier import (
    PrecisionError,
    ft_eval,
    mask_value,
    max_precision_bits,
    sample_ft,
    tail_bound,
    write_csv,
)
from moranspec.freq import from_zero_form, to_real
from oracles import mp_ft


def close(a, b, tol):
    return abs(complex(a) - complex(b)) <= tol


def test_mask_examples():
    assert close(mask_value(3, 0), 1, 1e-30)
    assert close(mask_value(3, F(1, 3)), 0, 1e-15)
    assert close(mask_value(2, F(1, 2)), 0, 1e-15)
    assert close(mask_value(2, F(1, 4)), (1 - 1j) / 2, 1e-15)
    # integer shifts do not change the value
    assert close(mask_value(5, F(10**30 + 1, 7)), mask_value(5, F(2, 7)), 1e-15)
    with pytest.raises(ValueError):
        mask_value(1, 0)


def test_ft_at_zero(cantor3, sqrt23):
    for m in (cantor3, sqrt23):
        v = ft_eval(m, 0)
        assert abs(v.value - 1) <= 1e-12 and v.error_bound <= 1e-12


def test_ft_examples(cantor3):
    z = ft_eval(cantor3, F(2, 3), 1e-12)
    assert abs(z) <= 1e-10
    nz = ft_eval(cantor3, F(1, 3), 1e-12)
    assert abs(nz) > 1e-3 > nz.error_bound


def test_ft_matches_mpmath_oracle(sqrt23):
    mpmath.mp.prec = 200
    for xi in (F(1, 7), F(13, 5), F(-40, 3), F(1234, 11)):
        v = ft_eval(sqrt23, xi, 1e-20)
        ref = mp_ft(2, 3, 2, (), (5, 7), mpmath.mpf(xi.numerator) / xi.denominator, v.terms + 120)
        assert abs(complex(v.value) - complex(ref)) <= 1e-18


def test_ft_at_irrational_zero(sqrt23):
    for n, a in [(1, 1), (2, 3), (5, -4), (9, 11)]:
        xi = to_real(from_zero_form(sqrt23, n, a), 256)
        assert abs(ft_eval(sqrt23, xi, 1e-14)) <= 1e-12


@settings(max_examples=30, deadline=None)
@given(st.fractions(min_value=-200, max_value=200, max_denominator=50))
def test_conjugate_symmetry_and_bound(xi):
    m = MoranMeasure.build(2, 3, 2, period=[5, 7])
    a = ft_eval(m, xi, 1e-12)
    b = ft_eval(m, -xi, 1e-12)
    assert abs(a.re - b.re) <= a.error_bound + b.error_bound
    assert abs(a.im + b.im) <= a.error_bound + b.error_bound
    assert abs(a) <= 1 + a.error_bound


def test_tail_bound_monotone(cantor3):
    vals = [tail_bound(cantor3, 100, K) for K in range(0, 60, 3)]
    assert all(x >= y for x, y in zip(vals, vals[1:]))
    assert vals[-1] < 1e-10
    assert tail_bound(cantor3, 0, 0) == 0


def test_precision_cap(monkeypatch, cantor3):
    assert max_precision_bits() == 4096
    monkeypatch.setenv("MORAN_MAX_PRECISION_BITS", "100")
    with pytest.raises(PrecisionError):
        ft_eval(cantor3, F(1, 3), 1e-12)
    monkeypatch.setenv("MORAN_MAX_PRECISION_BITS", "bogus")
    with pytest.raises(ValueError):
        max_precision_bits()
    monkeypatch.delenv("MORAN_MAX_PRECISION_BITS")
    with pytest.raises(PrecisionError):
        ft_eval(cantor3, mpfr(2) ** 5000, 1e-12)


def test_bad_arguments(cantor3):
    with pytest.raises(ValueError):
        ft_eval(cantor3, 1, 0)
    with pytest.raises(ValueError):
        ft_eval(cantor3, float("inf"))
    with pytest.raises(ValueError):
        sample_ft(cantor3, 1, 0, 5)


def test_sample_and_csv(cantor3, tmp_path):
    rows = sample_ft(cantor3, -1, 1, 5)
    assert [r["xi"] for r in rows] == [F(-1), F(-1, 2), F(0), F(1, 2), F(1)]
    text = write_csv(rows)
    lines = text.split("\n")
    assert lines[0] == "xi,re,im,abs,err" and lines[-1] == ""
    assert lines[3].startswith("0.0000000000000000e+00,1.0000000000000000e+00,")
    for line in lines[1:-1]:
        for cell in line.split(","):
            mant = cell.lstrip("-").split("e")[0]
            assert len(mant.replace(".", "")) == 17
    out = tmp_path / "ft.csv"
    write_csv(rows, out)
    assert out.read_bytes() == text.encode()
    buf = io.StringIO()
    write_csv(rows, buf)
    assert buf.getvalue() == text


def test_sample_records_failures(monkeypatch, cantor3):
    monkeypatch.setenv("MORAN_MAX_PRECISION_BITS", "100")
    rows = sample_ft(cantor3, 0, 1, 3)
    assert all("error" in r for r in rows[1:])
    assert ",nan,nan,nan,nan" in write_csv(rows)


def test_to_real_precision_guard(sqrt23):
    f = from_zero_form(sqrt23, 40, 3)
    hi = to_real(f, 400)
    lo = to_real(f, 128)
    with gmpy2.context(gmpy2.get_context(), precision=400):
        assert abs(hi - lo) <= abs(hi) * mpfr(2) ** -120
