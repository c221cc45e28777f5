"""Verifiers for the three quantum-integer double-sum identities.

Each identity equates three displayed forms:
  A  a double sum over quantum integers [n]_t, graded by q,
  B  an explicit infinite product,
  C  a short word in Theta and eta.
The full-r and even-r identities contain the geometric row
sum_{n>=1} [n]_t p^n whose p-support is unbounded, so forms A and B carry
a validity cap on high p-exponents (see PLaurent); every comparison then
restricts to the requested window and the cap bookkeeping guarantees the
window is actually known.  Form C is never divided out: the C-checks
cross-multiply both sides by the denominator thetas so that only exact
products are ever computed.
"""

from fractions import Fraction

from vwpt.plaurent import PINF, PLaurent
from vwpt.qseries import MonoSeries, QSeries
from vwpt.rationals import QQ
from vwpt.thetas import RING_TP, eta_pow, product_series, theta
from vwpt.tpoly import TPoly, qint

_TZERO = TPoly.zero()
_SQRT_T_DIFF = TPoly({1: QQ(1), -1: QQ(-1)})  # t^(1/2) - t^(-1/2)


def qint_row(n_max):
    """sum_{n=1}^{n_max} [n]_t p^n with validity capped above n_max.

    This is the expansion of p/((1 - t^(1/2) p)(1 - t^(-1/2) p)) in
    increasing powers of p; the cap records that exponents beyond n_max
    were dropped.
    """
    # open upper support bound: exponents beyond the cap exist but are unknown
    return PLaurent(
        {n: qint(n) for n in range(1, n_max + 1)}, _TZERO, shi=PINF, vhi=n_max
    )


def _pn_pair(n, coeff):
    """coeff * (p^n + p^(-n)) as an exact PLaurent."""
    return PLaurent({n: coeff, -n: coeff}, _TZERO)


def _p0(coeff):
    return PLaurent({0: coeff}, _TZERO)


def _add_row(rows, e2, term):
    rows[e2] = rows[e2] + term if e2 in rows else term


# -- sum forms ---------------------------------------------------------------


def zagier_sum(q_order2, window):
    """A-form of the full-r identity:
    sum_{n>=1} [n] p^n
      + sum_{r>=1} ([2r] q^(r^2) + sum_{n>=1} [n+2r] (p^n + p^(-n)) q^(rn+r^2)).
    """
    rows = {0: qint_row(window)}
    r = 1
    while 2 * r * r < q_order2:
        _add_row(rows, 2 * r * r, _p0(qint(2 * r)))
        n = 1
        while 2 * (r * n + r * r) < q_order2:
            _add_row(rows, 2 * (r * n + r * r), _pn_pair(n, qint(n + 2 * r)))
            n += 1
        r += 1
    return MonoSeries.wrap(QSeries(rows, q_order2, rows[0].zero_exact(_TZERO)))


def theta_odd_sum(q_order2, window):
    """A-form of the odd-r identity:
    sum_{r odd} ([r] q^(r^2/2) + sum_{n>=1} [n+r] (p^n + p^(-n)) q^(rn+r^2/2));
    all rows have finite p-support, so the result is exact.
    """
    rows = {}
    r = 1
    while r * r < q_order2:
        _add_row(rows, r * r, _p0(qint(r)))
        n = 1
        while 2 * r * n + r * r < q_order2:
            _add_row(rows, 2 * r * n + r * r, _pn_pair(n, qint(n + r)))
            n += 1
        r += 2
    return MonoSeries.wrap(QSeries(rows, q_order2, PLaurent.zero_exact(_TZERO)))


def theta_even_sum(q_order2, window):
    """A-form of the even-r identity: the geometric [n]-row plus the even-r
    part of the double sum, at q-powers rn + r^2/2."""
    rows = {0: qint_row(window)}
    r = 2
    while r * r < q_order2:
        _add_row(rows, r * r, _p0(qint(r)))
        n = 1
        while 2 * r * n + r * r < q_order2:
            _add_row(rows, 2 * r * n + r * r, _pn_pair(n, qint(n + r)))
            n += 1
        r += 2
    return MonoSeries.wrap(QSeries(rows, q_order2, rows[0].zero_exact(_TZERO)))


# -- product forms -----------------------------------------------------------


def _geometric_prefactor(q_order2, window):
    """The q^0 factor p/((1 - t^(1/2) p)(1 - t^(-1/2) p)) as a capped row."""
    return QSeries({0: qint_row(window)}, float("inf"), PLaurent.zero_exact(_TZERO))


def zagier_product(q_order2, window):
    """B-form of the full-r identity: geometric prefactor times
    prod_m (1-t q^m)(1-q^m)^2 (1-t^(-1) q^m) / (four (1 -+ t^(+-1/2) p^(+-1) q^m))."""
    factors = []
    m = 1
    while 2 * m < q_order2:
        factors += [(2, 0, 2 * m, 1), (0, 0, 2 * m, 2), (-2, 0, 2 * m, 1)]
        factors += [
            (-1, -1, 2 * m, -1),
            (1, -1, 2 * m, -1),
            (-1, 1, 2 * m, -1),
            (1, 1, 2 * m, -1),
        ]
        m += 1
    prod = product_series(RING_TP, q_order2, factors)
    return MonoSeries.wrap(_geometric_prefactor(q_order2, window) * prod)


def theta_odd_product(q_order2, window):
    """B-form of the odd-r identity: q^(1/2) times the odd-m diagonal
    quotient times the level-2 triple (1-t^(-1)q^(2n))(1-q^(2n))^2(1-tq^(2n))."""
    factors = []
    m = 1
    while 2 * m < q_order2:
        if m % 2 == 1:
            factors += [
                (-1, -1, 2 * m, -1),
                (1, -1, 2 * m, -1),
                (-1, 1, 2 * m, -1),
                (1, 1, 2 * m, -1),
            ]
        if m % 2 == 0:
            factors += [(-2, 0, 2 * m, 1), (0, 0, 2 * m, 2), (2, 0, 2 * m, 1)]
        m += 1
    prod = product_series(RING_TP, q_order2, factors)
    return MonoSeries(Fraction(1, 2), 0, 0, prod)


def theta_even_product(q_order2, window):
    """B-form of the even-r identity: geometric prefactor times the level-2
    triple over the level-2 diagonal quotient."""
    factors = []
    m = 1
    while 4 * m < q_order2:
        factors += [(-2, 0, 4 * m, 1), (0, 0, 4 * m, 2), (2, 0, 4 * m, 1)]
        factors += [
            (-1, -1, 4 * m, -1),
            (1, -1, 4 * m, -1),
            (-1, 1, 4 * m, -1),
            (1, 1, 4 * m, -1),
        ]
        m += 1
    prod = product_series(RING_TP, q_order2, factors)
    return MonoSeries.wrap(_geometric_prefactor(q_order2, window) * prod)


# -- comparisons -------------------------------------------------------------


def mono_agree(lhs, rhs, q_order2, p_window):
    """Compare two MonoSeries rowwise on |p-exponent| <= p_window for all
    doubled q-exponents below q_order2 (relative to lhs offsets).

    Returns (ok, detail); detail locates the first failing row.
    """
    try:
        other = rhs._shift_to(lhs.qe, lhs.te, lhs.pe)
    except Exception as exc:  # off-grid offsets are a structural mismatch
        return False, f"offset mismatch: {exc}"
    x, y = lhs.s, other.s
    lim = min(x.order2, y.order2)
    if lim < q_order2:
        return False, f"insufficient order: have {lim}, need {q_order2}"
    for e2 in sorted(k for k in set(x.c) | set(y.c) if k < q_order2):
        rx = x.c.get(e2, x.zero)
        ry = y.c.get(e2, y.zero)
        if not rx.agrees(ry, -p_window, p_window):
            for e in range(-p_window, p_window + 1):
                if not (rx.known(e) and ry.known(e)):
                    return False, f"q^({e2}/2) p^{e}: window not fully known"
                if rx.c.get(e, rx.zero) != ry.c.get(e, ry.zero):
                    return False, f"first mismatch at q^({e2}/2) p^{e}"
            return False, f"q^({e2}/2): rows differ"
    return True, None


def _t_inverted(m):
    """Apply t -> 1/t to every coefficient (offsets included)."""
    return MonoSeries(
        m.qe, -m.te, m.pe, m.s.map_coeffs(lambda row: row.map_coeffs(lambda c: c.inv_t()))
    )


def specialize_t1(m):
    """Set t = 1 in every coefficient, keeping validity bookkeeping."""

    def row_t1(row):
        return PLaurent(
            {k: v.at_one() for k, v in row.c.items()},
            QQ(0),
            slo=row.slo,
            shi=row.shi,
            vlo=row.vlo,
            vhi=row.vhi,
        )

    return MonoSeries(m.qe, 0, m.pe, m.s.map_coeffs(row_t1))


def _scale_rows(m, scalar):
    return MonoSeries(m.qe, m.te, m.pe, m.s.map_coeffs(lambda row: row * scalar))


# -- the three identities ----------------------------------------------------


def _identity_report(name, q_order, p_window, builders):
    """Run the A=B, cross-multiplied B=C / A=C, symmetry and t=1 checks."""
    q_order2 = 2 * q_order
    # cross-multiplying by thetas spreads p-support by up to one per q-step,
    # and the B-form product does the same, so pad the build window
    window = p_window + q_order + 4
    build_order2 = q_order2 + 1
    a = builders["sum"](build_order2, window)
    b = builders["product"](build_order2, window)
    lhs_word, rhs_word = builders["words"](build_order2)

    checks = []

    def check(label, ok, detail=None):
        checks.append(
            {"name": label, "ok": bool(ok)} | ({"detail": detail} if detail else {})
        )

    ok, detail = mono_agree(a, b, q_order2, p_window)
    check("sum_vs_product", ok, detail)

    def cross(form):
        lhs = _scale_rows(form, _SQRT_T_DIFF)
        for f in lhs_word:
            lhs = lhs * f
        rhs = rhs_word[0]
        for f in rhs_word[1:]:
            rhs = rhs * f
        return mono_agree(lhs, rhs, q_order2, p_window)

    ok, detail = cross(b)
    check("product_vs_theta", ok, detail)
    ok, detail = cross(a)
    check("sum_vs_theta", ok, detail)

    ok, detail = mono_agree(a, _t_inverted(a), q_order2, p_window)
    check("t_inversion_symmetry", ok, detail)

    ok, detail = mono_agree(
        specialize_t1(a), specialize_t1(b), q_order2, p_window
    )
    check("unrefined_limit", ok, detail)

    return {
        "identity": name,
        "q_order": q_order,
        "p_window": p_window,
        "status": "pass" if all(c["ok"] for c in checks) else "fail",
        "checks": checks,
    }


def verify_zagier(q_order=8, p_window=8):
    """Full-r identity: A = B = (1/(t^(1/2)-t^(-1/2))) Theta(t,q) /
    (Theta(t^(1/2)p,q) Theta(t^(-1/2)p,q))."""

    def words(order2):
        lhs = [theta(RING_TP, order2, 1, 1), theta(RING_TP, order2, -1, 1)]
        rhs = [theta(RING_TP, order2, 2, 0)]
        return lhs, rhs

    return _identity_report(
        "zagier",
        q_order,
        p_window,
        {"sum": zagier_sum, "product": zagier_product, "words": words},
    )


def verify_theta_odd(q_order=8, p_window=8):
    """Odd-r identity: A = B = Theta(t,q^2)/(t^(1/2)-t^(-1/2)) *
    Theta(pt^(1/2),q^2) Theta(pt^(-1/2),q^2) / (Theta(pt^(1/2),q)
    Theta(pt^(-1/2),q)) * eta(q^2)^8/eta(q)^4."""

    def words(order2):
        lhs = [
            theta(RING_TP, order2, 1, 1),
            theta(RING_TP, order2, -1, 1),
            eta_pow(RING_TP, order2, 1, 4),
        ]
        rhs = [
            theta(RING_TP, order2, 2, 0, scale=2),
            theta(RING_TP, order2, 1, 1, scale=2),
            theta(RING_TP, order2, -1, 1, scale=2),
            eta_pow(RING_TP, order2, 2, 8),
        ]
        return lhs, rhs

    return _identity_report(
        "theta_odd",
        q_order,
        p_window,
        {"sum": theta_odd_sum, "product": theta_odd_product, "words": words},
    )


def verify_theta_even(q_order=8, p_window=8):
    """Even-r identity: A = B = Theta(t,q^2) / ((t^(1/2)-t^(-1/2))
    Theta(t^(1/2)p,q^2) Theta(t^(-1/2)p,q^2))."""

    def words(order2):
        lhs = [theta(RING_TP, order2, 1, 1, scale=2), theta(RING_TP, order2, -1, 1, scale=2)]
        rhs = [theta(RING_TP, order2, 2, 0, scale=2)]
        return lhs, rhs

    return _identity_report(
        "theta_even",
        q_order,
        p_window,
        {"sum": theta_even_sum, "product": theta_even_product, "words": words},
    )


ALL_IDENTITIES = {
    "zagier": verify_zagier,
    "theta_odd": verify_theta_odd,
    "theta_even": verify_theta_even,
}
