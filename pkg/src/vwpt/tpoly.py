"""Laurent polynomials and rational functions in t^(1/2).

TPoly is a sparse Laurent polynomial in the half-power of t: key e stands
for the monomial t^(e/2), so integer powers of t live on even keys.  TRat
is a reduced quotient of two TPoly, with the denominator pinned to lowest
exponent 0 and constant term 1, so equality is plain field-by-field
comparison and a TRat with denominator 1 is literally a polynomial.
"""

from vwpt.kernels import dict_mul
from vwpt.rationals import QQ, QQ0, QQ1


def _shift_nonneg(c):
    """Return (dict with min key 0, shift) for a nonzero coefficient dict."""
    s = min(c)
    if s == 0:
        return dict(c), 0
    return {k - s: v for k, v in c.items()}, s


def _poly_divmod(a, b):
    """Long division of coefficient dicts with min key >= 0: a = q*b + r."""
    assert b
    r = dict(a)
    q = {}
    db = max(b)
    lb = b[db]
    while r and max(r) >= db:
        dr = max(r)
        f = r[dr] / lb
        q[dr - db] = f
        for k, v in b.items():
            kk = dr - db + k
            w = r.get(kk, QQ0) - f * v
            if w:
                r[kk] = w
            elif kk in r:
                del r[kk]
    return q, r


def _poly_gcd(a, b):
    """Monic gcd of coefficient dicts with min key >= 0 (Euclid over QQ[x])."""
    while b:
        _, r = _poly_divmod(a, b)
        a, b = b, r
    lead = a[max(a)]
    if lead != 1:
        a = {k: v / lead for k, v in a.items()}
    return a


class TPoly:
    """Sparse Laurent polynomial in t^(1/2); keys are doubled exponents."""

    __slots__ = ("c",)

    def __init__(self, c=None):
        self.c = {k: v for k, v in c.items() if v} if c else {}

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({0: QQ1})

    @classmethod
    def mono(cls, e2, coeff=1):
        return cls({e2: QQ(coeff)})

    def coeff(self, e2):
        return self.c.get(e2, QQ0)

    def is_zero(self):
        return not self.c

    def __bool__(self):
        return bool(self.c)

    def _coerce(self, other):
        if isinstance(other, TPoly):
            return other
        if isinstance(other, (int, type(QQ0))) or type(other).__name__ == "mpq":
            return TPoly({0: QQ(other)}) if other else TPoly()
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        c = dict(self.c)
        for k, v in o.c.items():
            w = c.get(k, QQ0) + v
            if w:
                c[k] = w
            elif k in c:
                del c[k]
        r = TPoly.__new__(TPoly)
        r.c = c
        return r

    __radd__ = __add__

    def __neg__(self):
        r = TPoly.__new__(TPoly)
        r.c = {k: -v for k, v in self.c.items()}
        return r

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, TPoly):
            r = TPoly.__new__(TPoly)
            r.c = dict_mul(self.c, other.c)
            return r
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o.c:
            return TPoly()
        s = o.c[0]
        r = TPoly.__new__(TPoly)
        r.c = {k: v * s for k, v in self.c.items()}
        return r

    __rmul__ = __mul__

    def __pow__(self, n):
        assert n >= 0
        out = TPoly.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __truediv__(self, other):
        if isinstance(other, TPoly):
            return TRat(self, other)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return TRat(self, o)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return TRat(o, self)

    def __eq__(self, other):
        if isinstance(other, TRat):
            return other == self
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.c == o.c

    def __hash__(self):
        return hash(frozenset(self.c.items()))

    def lowest2(self):
        return min(self.c)

    def highest2(self):
        return max(self.c)

    def inv_t(self):
        """The involution t -> 1/t."""
        r = TPoly.__new__(TPoly)
        r.c = {-k: v for k, v in self.c.items()}
        return r

    def is_palindromic(self):
        return self.c == {-k: v for k, v in self.c.items()}

    def adams(self, k):
        """Substitute t -> t^k (the k-th Adams operation on this variable)."""
        assert k >= 1
        r = TPoly.__new__(TPoly)
        r.c = {k * e: v for e, v in self.c.items()}
        return r

    def t_shift(self, e2):
        """Multiply by the monomial t^(e2/2)."""
        r = TPoly.__new__(TPoly)
        r.c = {k + e2: v for k, v in self.c.items()}
        return r

    def at_one(self):
        """Evaluate at t = 1."""
        return sum(self.c.values(), QQ0)

    def exact_div(self, other):
        """Divide by a TPoly that is known to divide exactly."""
        assert other
        if not self.c:
            return TPoly()
        a, sa = _shift_nonneg(self.c)
        b, sb = _shift_nonneg(other.c)
        q, r = _poly_divmod(a, b)
        if r:
            raise ValueError("not an exact division")
        return TPoly({k + sa - sb: v for k, v in q.items()})

    def inv(self):
        return TRat(TPoly.one(), self)

    def terms_sorted(self):
        return sorted(self.c.items())

    def __repr__(self):
        if not self.c:
            return "TPoly(0)"
        bits = []
        for e, v in self.terms_sorted():
            if e == 0:
                bits.append(f"{v}")
            elif e % 2 == 0:
                bits.append(f"{v}*t^{e // 2}")
            else:
                bits.append(f"{v}*t^({e}/2)")
        return "TPoly(" + " + ".join(bits) + ")"


def qint(n):
    """Quantum integer [n]_t = (t^(n/2) - t^(-n/2)) / (t^(1/2) - t^(-1/2))."""
    if n == 0:
        return TPoly.zero()
    if n < 0:
        return -qint(-n)
    return TPoly({n - 1 - 2 * i: QQ1 for i in range(n)})


class TRat:
    """Reduced quotient of TPoly; denominator has lowest exponent 0, constant 1."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if den is None:
            den = TPoly.one()
        if not den:
            raise ZeroDivisionError("TRat denominator is zero")
        if not num:
            self.num = TPoly.zero()
            self.den = TPoly.one()
            return
        a, sa = _shift_nonneg(num.c)
        b, sb = _shift_nonneg(den.c)
        g = _poly_gcd(a, b)
        if g != {0: QQ1}:
            a, _ = _poly_divmod(a, g)
            b, _ = _poly_divmod(b, g)
        d0 = b[0]
        if d0 != 1:
            a = {k: v / d0 for k, v in a.items()}
            b = {k: v / d0 for k, v in b.items()}
        self.num = TPoly({k + sa - sb: v for k, v in a.items()})
        self.den = TPoly(b)

    @classmethod
    def zero(cls):
        return cls(TPoly.zero())

    @classmethod
    def one(cls):
        return cls(TPoly.one())

    @staticmethod
    def _coerce(x):
        if isinstance(x, TRat):
            return x
        if isinstance(x, TPoly):
            return TRat(x)
        if isinstance(x, int) or type(x).__name__ in ("mpq", "Fraction"):
            return TRat(TPoly({0: QQ(x)}) if x else TPoly.zero())
        return None

    def is_polynomial(self):
        return self.den.c == {0: QQ1}

    def as_tpoly(self):
        if not self.is_polynomial():
            raise ValueError(f"not a polynomial: {self!r}")
        return self.num

    def __bool__(self):
        return bool(self.num)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return TRat(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        r = TRat.__new__(TRat)
        r.num = -self.num
        r.den = self.den
        return r

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return TRat(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return TRat(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return TRat(o.num * self.den, o.den * self.num)

    def __pow__(self, n):
        if n < 0:
            return self.inv() ** (-n)
        out = TRat.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def inv(self):
        return TRat(self.den, self.num)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def adams(self, k):
        return TRat(self.num.adams(k), self.den.adams(k))

    def inv_t(self):
        return TRat(self.num.inv_t(), self.den.inv_t())

    def is_palindromic(self):
        return self == self.inv_t()

    def t_shift(self, e2):
        return TRat(self.num.t_shift(e2), self.den)

    def at_one(self):
        d = self.den.at_one()
        if not d:
            raise ZeroDivisionError("denominator vanishes at t=1")
        return self.num.at_one() / d

    def __repr__(self):
        if self.is_polynomial():
            return f"TRat({self.num!r})"
        return f"TRat({self.num!r} / {self.den!r})"
