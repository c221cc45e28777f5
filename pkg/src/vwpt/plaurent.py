"""Laurent coefficients in p with truncation-aware validity tracking.

A PLaurent stores the known coefficients of a Laurent object in p whose
true support is contained in [slo, shi] (either side may be infinite) and
whose coefficients are exactly known on the validity interval [vlo, vhi]
as well as outside the support bounds (where they are zero by fiat).
Exact finite objects have full validity and never lose information;
validity only narrows when a genuinely infinite expansion (an inverse) is
truncated, and the product/sum rules below propagate what remains provable.

Coefficient values are duck-typed (rationals, TPoly, TRat, nested series).
"""

from vwpt.errors import TruncationError
from vwpt.kernels import dict_mul

NINF = float("-inf")
PINF = float("inf")


def ring_inv(c):
    """Multiplicative inverse in the coefficient ring."""
    inv = getattr(c, "inv", None)
    if inv is not None:
        return inv()
    return 1 / c


class PLaurent:
    __slots__ = ("c", "zero", "slo", "shi", "vlo", "vhi")

    def __init__(self, c, zero, slo=None, shi=None, vlo=NINF, vhi=PINF):
        c = {k: v for k, v in c.items() if v}
        if slo is None:
            slo = min(c) if c else PINF
        if shi is None:
            shi = max(c) if c else NINF
        if slo > shi:
            # empty support: everything is known zero
            slo, shi, vlo, vhi = PINF, NINF, NINF, PINF
        elif vlo > vhi:
            # canonical empty validity: nothing inside the support is known
            vlo, vhi = shi + 1, slo - 1
        else:
            if vlo <= slo:
                vlo = NINF
            if vhi >= shi:
                vhi = PINF
        self.c = c
        self.zero = zero
        self.slo, self.shi = slo, shi
        self.vlo, self.vhi = vlo, vhi
        assert all(self.known(k) for k in c), "stored term outside known region"

    @classmethod
    def exact(cls, c, zero):
        return cls(c, zero)

    @classmethod
    def zero_exact(cls, zero):
        return cls({}, zero)

    @classmethod
    def mono(cls, e, coeff, zero):
        return cls({e: coeff}, zero)

    def known(self, e):
        return self.vlo <= e <= self.vhi or e < self.slo or e > self.shi

    def fully_valid(self):
        return self.vlo == NINF and self.vhi == PINF

    def coeff(self, e):
        if not self.known(e):
            raise TruncationError(f"p^{e} coefficient not known")
        return self.c.get(e, self.zero)

    def is_exact_zero(self):
        return not self.c and self.fully_valid()

    def __bool__(self):
        return not self.is_exact_zero()

    def support_keys(self):
        return sorted(self.c)

    # -- arithmetic ---------------------------------------------------------

    def _check_ring(self, other):
        if not isinstance(other, PLaurent):
            return None
        return other

    def __add__(self, other):
        o = self._check_ring(other)
        if o is None:
            return NotImplemented
        slo, shi = min(self.slo, o.slo), max(self.shi, o.shi)
        vlo, vhi = max(self.vlo, o.vlo), min(self.vhi, o.vhi)
        out = {}
        for k in set(self.c) | set(o.c):
            if (vlo <= k <= vhi) or k < slo or k > shi:
                v = self.c.get(k, self.zero) + o.c.get(k, self.zero)
                if v:
                    out[k] = v
        return PLaurent(out, self.zero, slo, shi, vlo, vhi)

    def __neg__(self):
        return PLaurent(
            {k: -v for k, v in self.c.items()},
            self.zero, self.slo, self.shi, self.vlo, self.vhi,
        )

    def __sub__(self, other):
        o = self._check_ring(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __mul__(self, other):
        if not isinstance(other, PLaurent):
            # scalar from the coefficient ring
            return self.map_coeffs(lambda v: v * other)
        a, b = self, other
        if a.is_exact_zero() or b.is_exact_zero():
            return PLaurent({}, a.zero)
        slo, shi = a.slo + b.slo, a.shi + b.shi
        vlo_parts = [NINF]
        vhi_parts = [PINF]
        if a.vlo > NINF:
            vlo_parts.append(a.vlo + b.shi)
        if b.vlo > NINF:
            vlo_parts.append(b.vlo + a.shi)
        if a.vhi < PINF:
            vhi_parts.append(a.vhi + b.slo)
        if b.vhi < PINF:
            vhi_parts.append(b.vhi + a.slo)
        vlo, vhi = max(vlo_parts), min(vhi_parts)
        raw = dict_mul(a.c, b.c)
        out = {k: v for k, v in raw.items() if (vlo <= k <= vhi) or k < slo or k > shi}
        return PLaurent(out, a.zero, slo, shi, vlo, vhi)

    __rmul__ = __mul__

    def map_coeffs(self, fn):
        """Apply a degree-preserving map to every known coefficient."""
        return PLaurent(
            {k: fn(v) for k, v in self.c.items()},
            self.zero, self.slo, self.shi, self.vlo, self.vhi,
        )

    def t_shift(self, e2):
        return self.map_coeffs(lambda v: v.t_shift(e2))

    def p_shift(self, n):
        return PLaurent(
            {k + n: v for k, v in self.c.items()},
            self.zero, self.slo + n, self.shi + n, self.vlo + n, self.vhi + n,
        )

    def flip(self):
        """The substitution p -> 1/p."""
        return PLaurent(
            {-k: v for k, v in self.c.items()},
            self.zero, -self.shi, -self.slo, -self.vhi, -self.vlo,
        )

    def adams(self, k):
        """Substitute p -> p^k (and push the operation into coefficients)."""
        assert k >= 1
        if k == 1:
            return self.map_coeffs(lambda v: _coeff_adams(v, 1))
        vlo = self.vlo if self.vlo == NINF else k * self.vlo - (k - 1)
        vhi = self.vhi if self.vhi == PINF else k * self.vhi + (k - 1)
        return PLaurent(
            {k * e: _coeff_adams(v, k) for e, v in self.c.items()},
            self.zero, k * self.slo, k * self.shi, vlo, vhi,
        )

    def clip(self, lo, hi):
        """Forget coefficients outside [lo, hi]; validity narrows to match."""
        vlo, vhi = max(self.vlo, lo), min(self.vhi, hi)
        out = {
            k: v
            for k, v in self.c.items()
            if (vlo <= k <= vhi) or k < self.slo or k > self.shi
        }
        return PLaurent(out, self.zero, self.slo, self.shi, vlo, vhi)

    def invert_up(self, hi):
        """Inverse as a Laurent series expanded upward in p, valid through p^hi.

        Requires a fully known object with finite nonempty support.  The
        leading (lowest) coefficient must be invertible in its ring; a
        TPoly lead produces TRat values downstream.
        """
        if not self.fully_valid():
            raise TruncationError("cannot invert a partially known PLaurent")
        if not self.c:
            raise ZeroDivisionError("inverting zero")
        a = min(self.c)
        ca_inv = ring_inv(self.c[a])
        if len(self.c) == 1:
            return PLaurent({-a: ca_inv}, self.zero)
        one = ca_inv * self.c[a]
        w = {k - a: -(ca_inv * v) for k, v in self.c.items() if k != a}
        bound = hi + a
        total = {0: one}
        pw = {0: one}
        while pw:
            nxt = {}
            for i, av in pw.items():
                for j, bv in w.items():
                    k = i + j
                    if k > bound:
                        continue
                    if k in nxt:
                        nxt[k] = nxt[k] + av * bv
                    else:
                        nxt[k] = av * bv
            pw = {k: v for k, v in nxt.items() if v}
            for k, v in pw.items():
                if k in total:
                    total[k] = total[k] + v
                else:
                    total[k] = v
        out = {k - a: ca_inv * v for k, v in total.items() if v}
        return PLaurent(out, self.zero, -a, PINF, NINF, hi)

    def invert_down(self, lo):
        """Inverse expanded downward in p, valid through p^lo."""
        return self.flip().invert_up(-lo).flip()

    # -- comparisons --------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, PLaurent):
            if other == 0:
                return self.is_exact_zero()
            return NotImplemented
        if self.fully_valid() and other.fully_valid():
            return self.c == other.c
        return (
            self.c == other.c
            and (self.vlo, self.vhi) == (other.vlo, other.vhi)
        )

    def __hash__(self):
        return hash((frozenset(self.c), self.vlo, self.vhi))

    def agrees(self, other, lo, hi):
        """Both known and coefficientwise equal on the window [lo, hi]."""
        for e in range(lo, hi + 1):
            if not (self.known(e) and other.known(e)):
                return False
            if self.c.get(e, self.zero) != other.c.get(e, other.zero):
                return False
        return True

    def as_exact_dict(self):
        if not self.fully_valid():
            raise TruncationError("object is only partially known")
        return dict(self.c)

    def is_palindromic(self):
        """Invariance under p -> 1/p combined with t -> 1/t in coefficients."""
        return self.flip().map_coeffs(lambda v: v.inv_t()) == self

    def __repr__(self):
        val = "" if self.fully_valid() else f" valid[{self.vlo},{self.vhi}]"
        terms = ", ".join(f"p^{k}: {v!r}" for k, v in sorted(self.c.items()))
        return f"PLaurent({{{terms}}}{val})"


def _coeff_adams(v, k):
    ad = getattr(v, "adams", None)
    if ad is not None:
        return ad(k)
    return v
