"""Theorem verification engine."""
