"""Normalized Laplacian operators and their spectra."""
