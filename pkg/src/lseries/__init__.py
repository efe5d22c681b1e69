"""p-adic L-functions built from modular symbols."""
