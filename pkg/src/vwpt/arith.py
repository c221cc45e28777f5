"""Small integer helpers shared across modules."""

import math
from functools import reduce


def divisors(n):
    """Sorted positive divisors of n > 0."""
    assert n > 0
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def moebius(n):
    """Moebius function mu(n)."""
    assert n > 0
    if n == 1:
        return 1
    m, mu = n, 1
    p = 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            mu = -mu
        p += 1 if p == 2 else 2
    if m > 1:
        mu = -mu
    return mu


def gcd_all(*ns):
    """gcd of any number of integers, 0 entries ignored; gcd() of all zeros is 0."""
    return reduce(math.gcd, ns, 0)


def sigma(k, n):
    """Divisor power sum sigma_k(n)."""
    return sum(d**k for d in divisors(n))
