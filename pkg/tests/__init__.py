"""Test suite for growth-check."""
