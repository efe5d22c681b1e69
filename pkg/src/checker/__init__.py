"""Checklists for the growth number conjecture and (p, d) scans."""
