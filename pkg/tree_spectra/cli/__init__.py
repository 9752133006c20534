"""CLI module for Tree-Spectra."""
