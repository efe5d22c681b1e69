"""Exact and p-adic arithmetic: capped p-adics, quadratic extensions, series in T."""
