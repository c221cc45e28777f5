"""Plethystic exponentials and logarithms on truncated series.

Exp(f)     = exp(sum_{k>=1} f(x^k)/k)
Exp2(f)    = exp(sum_{k odd} f(x^k)/k)          (the orientifold variant)
Log / Log2 are the Moebius inverses over all k / odd k.

The argument object is duck-typed: it needs +, -, scalar *, adams(k) and
truncating multiplication.  The Adams/power cutoff N is explicit; for a
QSeries auto_bound computes the exact cutoff from its order, and every
routine asserts the cutoff really was large enough.  Exp2 is implemented
twice (odd-Adams route and Exp(f - f(x^2)/2) route); both must agree.
"""

from vwpt.arith import moebius
from vwpt.rationals import QQ


def _is_trunc_zero(x):
    return not x.c


def auto_bound(f):
    """Largest useful Adams index / power for a QSeries with positive lowest order."""
    if _is_trunc_zero(f):
        return 1
    l = f.lo2()
    assert l >= 1, "plethystic argument must have no constant term"
    if f.order2 == float("inf"):
        raise ValueError("need a truncated series for plethystic ops")
    return max(1, (int(f.order2) - 1) // l)


def exp_trunc(g, one, n_max):
    """exp(g) = sum g^n/n! through n_max factors."""
    out = one
    pw = one
    fact = 1
    for n in range(1, n_max + 1):
        pw = pw * g
        fact *= n
        out = out + pw * QQ(1, fact)
    nxt = pw * g
    assert nxt.lo2() >= out.order2, "exp cutoff too small"
    return out


def log_trunc(F, one, n_max):
    """log(F) for F = 1 + h, as sum (-1)^(n+1) h^n / n."""
    h = F - one
    out = h * QQ(1)
    pw = h
    for n in range(2, n_max + 1):
        pw = pw * h
        out = out + pw * QQ((-1) ** (n + 1), n)
    nxt = pw * h
    assert nxt.lo2() >= out.order2, "log cutoff too small"
    return out


def pleth_exp(f, one, n_max=None):
    if n_max is None:
        n_max = auto_bound(f)
    g = f * QQ(1)
    for k in range(2, n_max + 1):
        g = g + f.adams(k) * QQ(1, k)
    return exp_trunc(g, one, n_max)


def pleth_log(F, one, n_max=None):
    if n_max is None:
        n_max = auto_bound(F - one)
    L = log_trunc(F, one, n_max)
    out = L * QQ(1)
    for k in range(2, n_max + 1):
        m = moebius(k)
        if m:
            out = out + L.adams(k) * QQ(m, k)
    return out


def pleth_exp2(f, one, n_max=None):
    """Exp2 via the odd-Adams sum."""
    if n_max is None:
        n_max = auto_bound(f)
    g = f * QQ(1)
    for k in range(3, n_max + 1, 2):
        g = g + f.adams(k) * QQ(1, k)
    return exp_trunc(g, one, n_max)


def pleth_exp2_alt(f, one, n_max=None):
    """Exp2 via Exp(f - f(x^2)/2); must agree with pleth_exp2."""
    if n_max is None:
        n_max = auto_bound(f)
    return pleth_exp(f - f.adams(2) * QQ(1, 2), one, n_max)


def pleth_log2(F, one, n_max=None):
    """Log2 via Moebius over odd k."""
    if n_max is None:
        n_max = auto_bound(F - one)
    L = log_trunc(F, one, n_max)
    out = L * QQ(1)
    for k in range(3, n_max + 1, 2):
        m = moebius(k)
        if m:
            out = out + L.adams(k) * QQ(m, k)
    return out


def pleth_log2_iter(F, one):
    """Log2 by order-by-order inversion of Exp2 (QSeries only).

    Slower than the Moebius route but independent of it; the two are
    cross-checked in tests.
    """
    f = (F - F) * QQ(1)  # zero with F's order
    order2 = F.order2
    for e2 in range(1, int(order2)):
        mism = F - pleth_exp2(f, one)
        v = mism.c.get(e2)
        if v:
            f = f + type(F)({e2: v}, order2, F.zero)
    return f
