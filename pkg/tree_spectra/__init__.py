"""Tree-Spectra - vertex covers and the normalized Laplacian spectrum of trees."""

__version__ = "0.1.0"
