"""Imaginary quadratic fields: Kronecker symbols, class numbers, Heegner data."""
