"""Pure-Python convolution kernels.

These are the hot inner loops of every ring level (t-polynomials,
p-Laurent coefficients, q-series).  Values are duck-typed: anything with
+, * and a truthiness meaning "not exactly zero" works, so one kernel
serves rationals and nested series alike.  A compiled twin lives in
_convolve.pyx; vwpt.kernels picks whichever is importable.
"""

BACKEND = "pure"


def dict_mul(a, b):
    """Convolve two {int: value} dicts: out[i+j] += a[i]*b[j]."""
    out = {}
    for i, av in a.items():
        for j, bv in b.items():
            k = i + j
            if k in out:
                out[k] = out[k] + av * bv
            else:
                out[k] = av * bv
    return {k: v for k, v in out.items() if v}


def dict_mul_bounded(a, b, lo, hi):
    """Convolve, keeping only keys with lo <= key <= hi."""
    out = {}
    for i, av in a.items():
        jlo = lo - i
        jhi = hi - i
        for j, bv in b.items():
            if j < jlo or j > jhi:
                continue
            k = i + j
            if k in out:
                out[k] = out[k] + av * bv
            else:
                out[k] = av * bv
    return {k: v for k, v in out.items() if v}
