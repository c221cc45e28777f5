"""Numerical Chern data of sheaf classes on the two target geometries.

A class is stored as (r, beta_sq, n) together with the divisibility of the
curve part, since beta itself lives in a lattice the code never materializes;
beta_sq = beta . beta is all the invariants depend on.  The overall
divisibility, the Mukai square and the parity type are derived quantities.
The two geometries differ only in the quadratic form.
"""

from vwpt.arith import gcd_all


class MukaiClass:
    """Enriques-side class; Mukai square beta_sq - 2 r n - r^2."""

    __slots__ = ("r", "beta_sq", "n", "beta_div", "div", "parity")

    _RANK_SQ_COEFF = 1

    def __init__(self, r, beta_sq, n, beta_div=None):
        if beta_div is None:
            beta_div = 0 if beta_sq == 0 else 1
        if beta_div == 0 and beta_sq != 0:
            raise ValueError("zero curve class must have beta_sq = 0")
        if beta_div < 0:
            raise ValueError("beta_div must be >= 0")
        if beta_div > 0 and beta_sq % (2 * beta_div * beta_div) != 0:
            # the curve lattice is even, so (beta/beta_div)^2 is an even integer
            raise ValueError(
                f"beta_sq={beta_sq} inconsistent with curve divisibility {beta_div}"
            )
        if beta_div == 0 and beta_sq == 0 and r == 0 and n == 0:
            raise ValueError("the zero class has no invariants")
        if beta_sq % 2 != 0:
            raise ValueError("beta_sq must be even (the curve lattice is even)")
        self.r = r
        self.beta_sq = beta_sq
        self.n = n
        self.beta_div = beta_div
        self.div = gcd_all(r, beta_div, n)
        g = gcd_all(r, beta_div, 2 * n)
        self.parity = (
            "even" if (r // g) % 2 == 0 and (2 * n // g) % 2 == 0 else "odd"
        )

    def mukai_square(self):
        return (
            self.beta_sq
            - 2 * self.r * self.n
            - self._RANK_SQ_COEFF * self.r * self.r
        )

    def divide(self, k):
        """The class v/k; k must divide the overall divisibility."""
        if k <= 0 or self.div % k != 0:
            raise ValueError(f"{k} does not divide div={self.div}")
        return type(self)(
            self.r // k, self.beta_sq // (k * k), self.n // k, self.beta_div // k
        )

    def primitive(self):
        return self.divide(self.div) if self.div > 1 else self

    def as_dict(self):
        return {
            "r": self.r,
            "beta_sq": self.beta_sq,
            "n": self.n,
            "div": self.div,
            "parity": self.parity,
        }

    def _key(self):
        return (type(self).__name__, self.r, self.beta_sq, self.n, self.beta_div)

    def __eq__(self, other):
        if not isinstance(other, MukaiClass):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return (
            f"{type(self).__name__}(r={self.r}, beta_sq={self.beta_sq}, "
            f"n={self.n}, beta_div={self.beta_div})"
        )


class K3Class(MukaiClass):
    """K3-side class; Mukai square beta_sq - 2 r n - 2 r^2."""

    __slots__ = ()

    _RANK_SQ_COEFF = 2
