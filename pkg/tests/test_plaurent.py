"""p-Laurent layer: support bounds, validity intervals, inversion."""

from vwpt.errors import TruncationError
from vwpt.plaurent import NINF, PINF, PLaurent
from vwpt.tpoly import TPoly, qint

Z = TPoly.zero()


def pl(d, **kw):
    return PLaurent({k: TPoly.mono(0, v) if isinstance(v, int) else v for k, v in d.items()}, Z, **kw)


def test_exact_roundtrip():
    f = pl({-2: 3, 0: 1, 5: -2})
    assert f.fully_valid()
    assert f.coeff(-2) == TPoly.mono(0, 3)
    assert f.coeff(3) == Z
    assert f.coeff(100) == Z


def test_add_mul_exact():
    f = pl({0: 1, 1: 2})
    g = pl({-1: 1, 0: -1})
    assert (f + g).as_exact_dict() == pl({-1: 1, 1: 2}).as_exact_dict()
    h = f * g
    assert h.coeff(-1) == TPoly.one()
    assert h.coeff(0) == TPoly.mono(0, 1)
    assert h.coeff(1) == TPoly.mono(0, -2)


def test_validity_propagation_mul():
    # truncated object: support [0, inf), known through p^3
    f = PLaurent({0: TPoly.one(), 1: TPoly.one()}, Z, slo=0, shi=PINF, vlo=NINF, vhi=3)
    g = pl({-1: 1, 2: 1})  # exact, support [-1, 2]
    h = f * g
    # unknown-high region of f starts at 4; products with g's lowest (-1)
    # contaminate everything above 3 - 1 = ... vhi = vhi_f + slo_g = 3 - 1 = 2
    assert h.vhi == 2
    assert h.known(2) and not h.known(3)
    # below the support everything is still known zero
    assert h.known(-100) and h.coeff(-100) == Z


def test_validity_propagation_add():
    f = PLaurent({0: TPoly.one()}, Z, slo=0, shi=PINF, vhi=5)
    g = pl({1: 7})
    h = f + g
    assert h.vhi == 5
    assert h.coeff(1) == TPoly.mono(0, 7)
    try:
        h.coeff(6)
        assert False
    except TruncationError:
        pass


def test_invert_monomial():
    f = pl({3: 2})
    g = f.invert_up(10)
    assert g.fully_valid()
    assert (g * f).as_exact_dict() == {0: TPoly.one()}


def test_invert_up_and_verify():
    f = PLaurent({-1: TPoly.one(), 0: qint(2), 1: TPoly.one()}, Z)
    g = f.invert_up(6)
    assert g.vhi == 6
    prod = g * f
    for e in range(-3, 6):
        if prod.known(e):
            want = TPoly.one() if e == 0 else Z
            assert prod.coeff(e) == want


def test_invert_down_matches_flip():
    f = pl({0: -1, 1: 1})
    up = f.invert_up(5)
    down = f.flip().invert_down(-5).flip()
    assert up.agrees(down, -2, 5)


def test_adams_keys_and_validity():
    f = PLaurent({1: qint(3)}, Z, slo=0, shi=PINF, vhi=4)
    g = f.adams(2)
    assert sorted(g.c) == [2]
    assert g.coeff(2) == qint(3).adams(2)
    # odd exponents between known multiples stay known
    assert g.known(9) and not g.known(10)


def test_clip_narrows_validity():
    f = pl({-3: 1, 0: 2, 3: 1})
    g = f.clip(-1, 1)
    assert g.known(0) and g.coeff(0) == TPoly.mono(0, 2)
    assert not g.known(3)
    assert g.known(100)  # beyond the (unchanged) support bound: still zero


def test_flip_palindromic():
    f = pl({-1: 1, 0: 2, 1: 1})
    assert f.is_palindromic()
    g = PLaurent({-1: TPoly.mono(1), 1: TPoly.mono(-1), 0: qint(2)}, Z)
    assert g.is_palindromic()
