"""Exact refined Vafa-Witten / Pandharipande-Thomas invariant tables.

Laurent-polynomial-valued sheaf-counting invariants of the local Enriques
surface and its K3 cover, computed and cross-checked in exact rational
arithmetic.  No floats anywhere.
"""

__version__ = "0.1.0"
