"""Elliptic curves over Q: models, local data, point counts and twists."""
