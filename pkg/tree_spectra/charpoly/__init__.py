"""Exact characteristic polynomial and the exact 1-eigenspace."""
