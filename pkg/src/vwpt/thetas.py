"""q-expansions of the special functions: eta, theta, discriminant,
Hilbert-scheme chi_y products, Eisenstein series, E8 theta.

Everything is built by exact factor-by-factor expansion of products
prod (1 - z q^(jm))^(+-e), so no series inversion is involved and every
result is exact to its stated order.  Prefactors that live off the
half-integer grid (eta's q^(1/24), theta's z^(-1/2)) ride along as
MonoSeries offsets until they cancel.

Theta convention:
    Theta(z, q) = (z^(1/2) - z^(-1/2)) prod_{m>=1} (1-z q^m)(1-z^(-1) q^m)/(1-q^m)^2
so Theta(e^x, q) = x * exp(-2 sum_{k>=2 even} G_k(q) x^k / k!) and
Theta(z^(-1), q) = -Theta(z, q).  The Eisenstein normalization is
G_k = -B_k/(2k) + sum_{n>=1} sigma_{k-1}(n) q^n, pinned by that expansion.
"""

import math
from fractions import Fraction

from vwpt.arith import sigma
from vwpt.plaurent import PLaurent
from vwpt.qseries import MonoSeries, QSeries
from vwpt.rationals import QQ, QQ0, QQ1
from vwpt.tpoly import TPoly


class Ring:
    """Coefficient-ring adapter: builds monomials t^(t_e2/2) p^(p_e)."""

    def __init__(self, name, zero, one, mono):
        self.name = name
        self.zero = zero
        self.one = one
        self.mono = mono

    def qs_one(self, order2):
        return QSeries({0: self.one}, order2, self.zero)


def _mono_qq(t_e2, p_e, c=1):
    assert t_e2 == 0 and p_e == 0
    return QQ(c)


def _mono_t(t_e2, p_e, c=1):
    assert p_e == 0
    return TPoly.mono(t_e2, c)


def _mono_tp(t_e2, p_e, c=1):
    return PLaurent({p_e: TPoly.mono(t_e2, c)}, TPoly.zero())


def _mono_qp(t_e2, p_e, c=1):
    assert t_e2 == 0
    return PLaurent({p_e: QQ(c)}, QQ0)


RING_QQ = Ring("qq", QQ0, QQ1, _mono_qq)
RING_T = Ring("t", TPoly.zero(), TPoly.one(), _mono_t)
RING_TP = Ring("tp", PLaurent.zero_exact(TPoly.zero()), _mono_tp(0, 0), _mono_tp)
RING_QP = Ring("qp", PLaurent.zero_exact(QQ0), _mono_qp(0, 0), _mono_qp)


def product_series(ring, order2, factors):
    """Expand prod (1 - mono(t_e2, p_e) q^(q_e2))^exp exactly to order2.

    factors: iterable of (t_e2, p_e, q_e2, exp) with q_e2 > 0.
    """
    acc = ring.qs_one(order2)
    for t_e2, p_e, q_e2, exp in factors:
        assert q_e2 > 0
        if q_e2 >= order2:
            continue
        if exp >= 0:
            lin = QSeries({0: ring.one, q_e2: -ring.mono(t_e2, p_e)}, order2, ring.zero)
            for _ in range(exp):
                acc = acc * lin
        else:
            n = (int(order2) - 1) // q_e2
            geom = {0: ring.one}
            z = ring.one
            for i in range(1, n + 1):
                z = z * ring.mono(t_e2, p_e)
                geom[i * q_e2] = z
            geo = QSeries(geom, order2, ring.zero)
            for _ in range(-exp):
                acc = acc * geo
    return acc


def eta(ring, order2, scale=1):
    """eta(q^scale) = q^(scale/24) prod (1 - q^(scale*n)) as a MonoSeries."""
    n_max = (int(order2) - 1) // (2 * scale)
    s = product_series(ring, order2, [(0, 0, 2 * scale * n, 1) for n in range(1, n_max + 1)])
    return MonoSeries(Fraction(scale, 24), 0, 0, s)


def eta_pow(ring, order2, scale, power):
    """eta(q^scale)^power, power of either sign."""
    n_max = (int(order2) - 1) // (2 * scale)
    s = product_series(
        ring, order2, [(0, 0, 2 * scale * n, power) for n in range(1, n_max + 1)]
    )
    return MonoSeries(Fraction(scale * power, 24), 0, 0, s)


def delta(ring, order2):
    """The discriminant eta(q)^24 = q prod (1-q^n)^24."""
    return eta_pow(ring, order2, 1, 24)


def theta(ring, order2, t_e2, p_e, scale=1):
    """Theta(z, q^scale) for the monomial z = t^(t_e2/2) p^(p_e).

    Returned as MonoSeries with prefactor z^(-1/2) (offsets -t_e2/4 and
    -p_e/2) times the on-grid series (z - 1) prod (...).
    """
    assert t_e2 or p_e
    factors = []
    n_max = (int(order2) - 1) // (2 * scale)
    for m in range(1, n_max + 1):
        factors.append((t_e2, p_e, 2 * scale * m, 1))
        factors.append((-t_e2, -p_e, 2 * scale * m, 1))
        factors.append((0, 0, 2 * scale * m, -2))
    s = product_series(ring, order2, factors)
    pre = QSeries({0: ring.mono(t_e2, p_e) - ring.one}, float("inf"), ring.zero)
    return MonoSeries(0, -Fraction(t_e2, 4), -Fraction(p_e, 2), pre * s)


def goettsche_enriques(order2):
    """Sum over n of the signed normalized chi_y of Hilb^n of an Enriques
    surface, as a TPoly-valued q-series:
    prod 1/((1 - t^(-1) q^m)(1 - q^m)^10 (1 - t q^m))."""
    n_max = (int(order2) - 1) // 2
    factors = []
    for m in range(1, n_max + 1):
        factors.append((-2, 0, 2 * m, -1))
        factors.append((0, 0, 2 * m, -10))
        factors.append((2, 0, 2 * m, -1))
    return product_series(RING_T, order2, factors)


def goettsche_k3(order2):
    """Same for K3: prod 1/((1 - t^(-1) q^m)^2 (1 - q^m)^20 (1 - t q^m)^2)."""
    n_max = (int(order2) - 1) // 2
    factors = []
    for m in range(1, n_max + 1):
        factors.append((-2, 0, 2 * m, -2))
        factors.append((0, 0, 2 * m, -20))
        factors.append((2, 0, 2 * m, -2))
    return product_series(RING_T, order2, factors)


def bernoulli(k):
    """Bernoulli number B_k (B_1 = -1/2 convention)."""
    b = [QQ(0)] * (k + 1)
    b[0] = QQ(1)
    for m in range(1, k + 1):
        acc = QQ(0)
        for j in range(m):
            acc += math.comb(m + 1, j) * b[j]
        b[m] = -acc / (m + 1)
    return b[k]


def eisenstein_g(k, order2):
    """G_k = -B_k/(2k) + sum sigma_{k-1}(n) q^n, rational q-series."""
    assert k >= 2 and k % 2 == 0
    c = {0: -bernoulli(k) / (2 * k)}
    for n in range(1, (int(order2) - 1) // 2 + 1):
        c[2 * n] = QQ(sigma(k - 1, n))
    return QSeries(c, order2, QQ0)


# -- E8 ----------------------------------------------------------------------


def e8_vectors(max_norm2):
    """All E8 vectors with norm^2 <= max_norm2, as tuples of doubled
    coordinates (so entries are all-even or all-odd integers with sum of
    halves even).  Depth-first search; independent of the counting route."""
    out = []

    def rec(prefix, rem4):
        # rem4: remaining doubled-norm budget: sum of (2x_i)^2 <= 4*max_norm2
        i = len(prefix)
        if i == 8:
            if rem4 >= 0 and sum(prefix) % 4 == 0:
                out.append(tuple(prefix))
            return
        parity = prefix[0] % 2 if prefix else None
        starts = [0, 1] if parity is None else [parity]
        for par in starts:
            y = par
            while True:
                if y * y > rem4:
                    break
                for s in ([y, -y] if y else [0]):
                    rec(prefix + [s], rem4 - y * y)
                y += 2

    rec([], 4 * max_norm2)
    return out


def _e8_counts_search(max_m):
    """Shell counts |{v in E8 : v^2 = 2m}| for m <= max_m, via DFS."""
    counts = {m: 0 for m in range(max_m + 1)}
    for v in e8_vectors(2 * max_m):
        n4 = sum(y * y for y in v)
        assert n4 % 8 == 0
        counts[n4 // 8] += 1
    return counts


def _e8_counts_orbit(max_m):
    """Shell counts by multiset/orbit counting; no vectors materialized.

    Integer vectors: choose |x_i| >= 0 with sum x_i^2 = 2m and sum |x_i|
    even; each multiset contributes perms * 2^(number of nonzero entries).
    Half-integer vectors: y_i = 2 x_i odd > 0 with sum y_i^2 = 8m; exactly
    half of the 2^8 sign patterns satisfy the even-sum gate, so each
    multiset contributes perms * 2^7.
    """
    counts = {m: 0 for m in range(max_m + 1)}

    def perms(ms):
        n = math.factorial(len(ms))
        for x in set(ms):
            n //= math.factorial(ms.count(x))
        return n

    def rec_int(vals, rem, min_v):
        if len(vals) == 8:
            m2 = sum(v * v for v in vals)
            if m2 % 2 == 0 and m2 // 2 <= max_m and sum(vals) % 2 == 0:
                counts[m2 // 2] += perms(vals) * 2 ** sum(1 for v in vals if v)
            return
        v = min_v
        while v * v <= rem:
            rec_int(vals + [v], rem - v * v, v)
            v += 1

    def rec_half(vals, rem, min_v):
        if len(vals) == 8:
            s = sum(v * v for v in vals)
            assert s % 8 == 0
            if s // 8 <= max_m:
                counts[s // 8] += perms(vals) * 2**7
            return
        v = min_v
        # every remaining slot needs at least 1^2 of budget
        slack = 7 - len(vals)
        while v * v <= rem - slack:
            rec_half(vals + [v], rem - v * v, v)
            v += 2

    rec_int([], 2 * max_m, 0)
    rec_half([], 8 * max_m, 1)
    return counts


def e8_theta(order2, weight=None):
    """Theta series of the E8 lattice, sum over v of q^(v^2/2).

    With weight=None the two independent enumeration strategies are run
    and cross-checked.  A callable weight(v) -> coefficient refines the
    count per vector (v given in doubled coordinates); that route uses
    the explicit vector enumeration.
    """
    max_m = (int(order2) - 1) // 2
    if weight is None:
        a = _e8_counts_search(max_m)
        b = _e8_counts_orbit(max_m)
        assert a == b, f"E8 enumeration strategies disagree: {a} vs {b}"
        return QSeries({2 * m: QQ(c) for m, c in a.items()}, order2, QQ0)
    acc = {}
    for v in e8_vectors(2 * max_m):
        m = sum(y * y for y in v) // 8
        w = weight(v)
        acc[2 * m] = acc.get(2 * m, QQ0) + w
    return QSeries(acc, order2, QQ0)
