"""Curve tables and curve file ingestion."""
