"""Exact computations with finitely presented OI-modules over a field."""
