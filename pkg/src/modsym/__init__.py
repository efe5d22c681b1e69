"""Weight-2 modular symbols for Gamma0(N)."""
