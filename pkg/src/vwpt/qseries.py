"""Truncated formal Laurent series in one variable on the half-integer grid.

A QSeries stores coefficients keyed by doubled exponents (key e stands for
q^(e/2)) together with order2: every coefficient with doubled exponent
< order2 is exactly known, everything above is unknown.  Exact objects
(finite Laurent polynomials) use order2 = +inf.  Coefficient values are
duck-typed: rationals, TPoly, TRat, PLaurent or nested QSeries all work.

MonoSeries decorates a QSeries with a formal monomial prefactor
q^qe * t^te * p^pe with Fraction exponents, so eta-like objects with
q^(1/24) offsets and theta prefactors off the half-grid stay exact until
the offsets cancel.
"""

from fractions import Fraction

from vwpt.errors import GridError, TruncationError
from vwpt.kernels import dict_mul, dict_mul_bounded
from vwpt.plaurent import ring_inv

NINF = float("-inf")
PINF = float("inf")


class QSeries:
    __slots__ = ("c", "order2", "zero")

    def __init__(self, c, order2, zero):
        self.c = {k: v for k, v in c.items() if v and k < order2}
        self.order2 = order2
        self.zero = zero

    @classmethod
    def zero_series(cls, order2, zero):
        return cls({}, order2, zero)

    @classmethod
    def exact(cls, c, zero):
        return cls(c, PINF, zero)

    @classmethod
    def mono(cls, e2, coeff, zero, order2=PINF):
        return cls({e2: coeff}, order2, zero)

    def known(self, e2):
        return e2 < self.order2

    def coeff(self, e2):
        if e2 >= self.order2:
            raise TruncationError(f"q^({e2}/2) coefficient not known")
        return self.c.get(e2, self.zero)

    def lo2(self):
        """Lowest possibly-nonzero doubled exponent (order2 if no terms)."""
        return min(self.c) if self.c else self.order2

    def is_exact_zero(self):
        return not self.c and self.order2 == PINF

    def __bool__(self):
        return not self.is_exact_zero()

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        order2 = min(self.order2, other.order2)
        out = {}
        for k in set(self.c) | set(other.c):
            if k < order2:
                v = self.c.get(k, self.zero) + other.c.get(k, self.zero)
                if v:
                    out[k] = v
        return QSeries(out, order2, self.zero)

    def __neg__(self):
        r = QSeries.__new__(QSeries)
        r.c = {k: -v for k, v in self.c.items()}
        r.order2 = self.order2
        r.zero = self.zero
        return r

    def __sub__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, QSeries):
            return self.map_coeffs(lambda v: v * other)
        la, lb = self.lo2(), other.lo2()
        order2 = min(self.order2 + lb, other.order2 + la)
        if not self.c or not other.c:
            return QSeries({}, order2, self.zero)
        if order2 == PINF:
            raw = dict_mul(self.c, other.c)
        else:
            raw = dict_mul_bounded(self.c, other.c, la + lb, order2 - 1)
        return QSeries(raw, order2, self.zero)

    __rmul__ = __mul__

    def __pow__(self, n):
        assert n >= 0
        out = None
        base = self
        while n:
            if n & 1:
                out = base if out is None else out * base
            n >>= 1
            if n:
                base = base * base
        if out is None:
            raise ValueError("q**0 needs an explicit unit; use mono()")
        return out

    def map_coeffs(self, fn):
        return QSeries({k: fn(v) for k, v in self.c.items()}, self.order2, self.zero)

    def scale(self, scalar):
        return self.map_coeffs(lambda v: v * scalar)

    def shift(self, e2):
        """Multiply by q^(e2/2)."""
        return QSeries(
            {k + e2: v for k, v in self.c.items()}, self.order2 + e2, self.zero
        )

    def truncate(self, order2):
        order2 = min(order2, self.order2)
        return QSeries({k: v for k, v in self.c.items() if k < order2}, order2, self.zero)

    def adams(self, k):
        """Substitute q -> q^k, pushing the substitution into coefficients."""
        assert k >= 1
        if k == 1 :
            return self.map_coeffs(lambda v: _coeff_adams(v, 1))
        return QSeries(
            {k * e: _coeff_adams(v, k) for e, v in self.c.items()},
            self.order2 * k,
            self.zero,
        )

    def inv(self, coeff_inv=ring_inv):
        """Inverse series; the lowest coefficient is inverted via coeff_inv.

        For plain rational or TRat coefficients the default works; for
        PLaurent coefficients pass lambda c: c.invert_up(window).
        """
        if not self.c:
            raise ZeroDivisionError("inverting a series with no known terms")
        e0 = self.lo2()
        if self.order2 == PINF and len(self.c) == 1:
            return QSeries({-e0: coeff_inv(self.c[e0])}, PINF, self.zero)
        if self.order2 == PINF:
            raise TruncationError("inverse of an exact non-monomial is infinite; truncate first")
        n = self.order2 - e0
        u = {k - e0: v for k, v in self.c.items()}
        g0 = coeff_inv(u[0])
        h = {0: g0}
        for e in range(1, n):
            acc = None
            for j, uj in u.items():
                if 1 <= j <= e:
                    hk = h.get(e - j)
                    if hk is not None:
                        term = uj * hk
                        acc = term if acc is None else acc + term
            if acc is not None:
                v = -(g0 * acc)
                if v:
                    h[e] = v
        return QSeries({k - e0: v for k, v in h.items()}, n - e0, self.zero)

    # -- comparisons --------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.c == other.c and self.order2 == other.order2

    def __hash__(self):
        return hash((frozenset(self.c), self.order2))

    def agrees(self, other, order2=None):
        """Coefficientwise equality through min(order2, both known orders)."""
        o = min(self.order2, other.order2)
        if order2 is not None:
            o = min(o, order2)
        keys = {k for k in set(self.c) | set(other.c) if k < o}
        return all(self.c.get(k, self.zero) == other.c.get(k, other.zero) for k in keys)

    def first_disagreement(self, other, order2=None):
        """Lowest doubled exponent where the two differ, or None."""
        o = min(self.order2, other.order2)
        if order2 is not None:
            o = min(o, order2)
        keys = sorted(k for k in set(self.c) | set(other.c) if k < o)
        for k in keys:
            if self.c.get(k, self.zero) != other.c.get(k, other.zero):
                return k
        return None

    def terms_sorted(self):
        return sorted(self.c.items())

    def __repr__(self):
        o = "" if self.order2 == PINF else f" + O(q^{self.order2}/2)"
        terms = ", ".join(f"q^({k}/2): {v!r}" for k, v in self.terms_sorted())
        return f"QSeries({{{terms}}}{o})"


def _coeff_adams(v, k):
    ad = getattr(v, "adams", None)
    if ad is not None:
        return ad(k)
    return v


class MonoSeries:
    """q^qe * t^te * p^pe times a QSeries, exponents exact Fractions."""

    __slots__ = ("qe", "te", "pe", "s")

    def __init__(self, qe, te, pe, s):
        self.qe = Fraction(qe)
        self.te = Fraction(te)
        self.pe = Fraction(pe)
        self.s = s

    @classmethod
    def wrap(cls, s):
        return cls(0, 0, 0, s)

    def __mul__(self, other):
        if not isinstance(other, MonoSeries):
            return MonoSeries(self.qe, self.te, self.pe, self.s * other)
        return MonoSeries(
            self.qe + other.qe, self.te + other.te, self.pe + other.pe,
            self.s * other.s,
        )

    __rmul__ = __mul__

    def __pow__(self, n):
        assert n >= 1
        out = self
        for _ in range(n - 1):
            out = out * self
        return out

    def __neg__(self):
        return MonoSeries(self.qe, self.te, self.pe, -self.s)

    def inv(self, coeff_inv=ring_inv):
        return MonoSeries(-self.qe, -self.te, -self.pe, self.s.inv(coeff_inv))

    def _shift_to(self, qe, te, pe):
        """Rewrite with the given offsets (differences fold into the series)."""
        dq, dt, dp = self.qe - qe, self.te - te, self.pe - pe
        s = self.s
        if dq:
            e2 = 2 * dq
            if e2.denominator != 1:
                raise GridError(f"q-offset difference {dq} off the half grid")
            s = s.shift(int(e2))
        if dt:
            e2 = 2 * dt
            if e2.denominator != 1:
                raise GridError(f"t-offset difference {dt} off the half grid")
            s = s.map_coeffs(lambda v: v.t_shift(int(e2)))
        if dp:
            if dp.denominator != 1:
                raise GridError(f"p-offset difference {dp} not integral")
            s = s.map_coeffs(lambda v: v.p_shift(int(dp)))
        return MonoSeries(qe, te, pe, s)

    def __add__(self, other):
        if not isinstance(other, MonoSeries):
            return NotImplemented
        o = other._shift_to(self.qe, self.te, self.pe)
        return MonoSeries(self.qe, self.te, self.pe, self.s + o.s)

    def __sub__(self, other):
        return self + (-other)

    def materialize(self):
        """Fold all offsets into the series; offsets must sit on the grids."""
        return self._shift_to(0, 0, 0).s

    def adams(self, k):
        return MonoSeries(k * self.qe, k * self.te, k * self.pe, self.s.adams(k))

    def __eq__(self, other):
        if not isinstance(other, MonoSeries):
            return NotImplemented
        return other._shift_to(self.qe, self.te, self.pe).s == self.s

    def __repr__(self):
        return f"MonoSeries(q^{self.qe} t^{self.te} p^{self.pe} * {self.s!r})"
