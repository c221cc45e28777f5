"""Truncated q-series layer and the monomial-offset wrapper."""

from fractions import Fraction

from vwpt.errors import GridError, TruncationError
from vwpt.qseries import PINF, MonoSeries, QSeries
from vwpt.rationals import QQ, QQ0
from vwpt.tpoly import TPoly


def qs(d, order2=20):
    return QSeries({k: QQ(v) for k, v in d.items()}, order2, QQ0)


def test_truncation_bookkeeping():
    f = qs({0: 1, 2: -1}, order2=8)
    assert f.known(7) and not f.known(8)
    try:
        f.coeff(8)
        assert False
    except TruncationError:
        pass


def test_mul_order_rule():
    # orders: known below 8 and 6; lowest terms at 2 and 0
    a = qs({2: 1}, order2=8)
    b = qs({0: 1, 2: 5}, order2=6)
    c = a * b
    assert c.order2 == 8  # min(8+0, 6+2)
    assert c.coeff(4) == QQ(5)


def test_mul_exact_stays_exact():
    a = qs({0: 1, 2: -1}, order2=PINF)
    b = a * a
    assert b.order2 == PINF
    assert b.coeff(2) == QQ(-2) and b.coeff(4) == QQ(1)


def test_geometric_inverse():
    f = qs({0: 1, 2: -1}, order2=14)
    g = f.inv()
    assert g.order2 == 14
    assert all(g.coeff(2 * k) == 1 for k in range(7))
    assert (f * g).agrees(qs({0: 1}, PINF))


def test_inverse_with_lowest_shift():
    # q^(-1) * unit: inverse starts at q^(+1)
    f = qs({-2: 1, 0: 3}, order2=6)
    g = f.inv()
    assert g.lo2() == 2
    assert (f * g).first_disagreement(qs({0: 1}, PINF)) is None


def test_adams():
    f = qs({1: 2, 2: 3}, order2=5)
    g = f.adams(2)
    assert g.coeff(2) == QQ(2) and g.coeff(4) == QQ(3)
    assert g.order2 == 10
    # coefficient-level substitution rides along
    h = QSeries({2: TPoly.mono(1)}, 8, TPoly.zero()).adams(3)
    assert h.coeff(6) == TPoly.mono(3)


def test_shift_and_truncate():
    f = qs({0: 1, 4: 7}, order2=10)
    g = f.shift(2)
    assert g.coeff(2) == QQ(1) and g.coeff(6) == QQ(7) and g.order2 == 12
    h = g.truncate(6)
    assert h.known(5) and not h.known(6)


def test_mono_series_offsets_cancel():
    base = qs({0: 1, 2: -1}, order2=10)
    a = MonoSeries(Fraction(1, 24), 0, 0, base)
    prod = a
    for _ in range(23):
        prod = prod * a
    assert prod.qe == 1
    m = prod.materialize()
    assert m.lo2() == 2
    assert m.coeff(2) == QQ(1) and m.coeff(4) == QQ(-24)


def test_mono_series_off_grid_raises():
    a = MonoSeries(Fraction(1, 24), 0, 0, qs({0: 1}))
    try:
        a.materialize()
        assert False
    except GridError:
        pass


def test_mono_series_add_aligns():
    a = MonoSeries(Fraction(1, 2), 0, 0, qs({0: 1}, 6))
    b = MonoSeries(Fraction(3, 2), 0, 0, qs({0: 5}, 6))
    s = (a + b).materialize()
    assert s.coeff(1) == QQ(1) and s.coeff(3) == QQ(5)


def test_mono_series_eq():
    a = MonoSeries(1, 0, 0, qs({0: 1}, 6))
    b = MonoSeries(0, 0, 0, qs({2: 1}, 8).truncate(8))
    assert a == b
