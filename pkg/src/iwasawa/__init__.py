"""Iwasawa invariants of truncated p-adic power series."""
