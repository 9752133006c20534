"""Tests for Tree-Spectra."""
