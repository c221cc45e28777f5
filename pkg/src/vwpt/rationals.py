"""Exact rational coefficient field.

Uses gmpy2.mpq when available (noticeably faster once numerators grow),
stdlib fractions.Fraction otherwise.  Set VWPT_FRACTIONS=1 to force the
stdlib implementation.  Everything downstream only relies on +,-,*,/,
bool, ==, str and the numerator/denominator attributes, which the two
implementations share.
"""

import os
from fractions import Fraction

if os.environ.get("VWPT_FRACTIONS"):
    QQ = Fraction
    BACKEND = "fractions"
else:
    try:
        from gmpy2 import mpq as QQ

        BACKEND = "gmpy2"
    except ImportError:
        QQ = Fraction
        BACKEND = "fractions"

QQ0 = QQ(0)
QQ1 = QQ(1)


def qq_from_str(s):
    """Parse 'a' or 'a/b' back into an exact rational."""
    return QQ(Fraction(s))


def qq_to_str(x):
    """Serialize an exact rational as 'a' or 'a/b'."""
    return str(x)
