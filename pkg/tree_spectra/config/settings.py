"""Configuration management for Tree-Spectra."""

import copy
import logging
from pathlib import Path
from typing import Optional

from dotenv import dotenv_values

from tree_spectra.errors import ConfigError

logger = logging.getLogger(__name__)

# Config-file key -> (attribute, parser)
_FILE_KEYS = {
    "CLUSTER_TOL": ("cluster_tol", float),
    "RESIDUAL_TOL": ("residual_tol", float),
    "JACOBI_TOL": ("jacobi_tol", float),
    "MAX_SWEEPS": ("max_sweeps", int),
    "EIGENSOLVER": ("eigensolver", str),
    "ZERO_TOL_FACTOR": ("zero_tol_factor", float),
    "VANISH_TOL": ("vanish_tol", float),
    "BOUND_TOL": ("bound_tol", float),
    "INTERLACE_TOL": ("interlace_tol", float),
    "ENUMERATION_CAP": ("enumeration_cap", int),
    "BRUTE_FORCE_MAX_N": ("brute_force_max_n", int),
    "ENDPOINT_TOL": ("endpoint_tol", float),
    "IMAG_TOL": ("imag_tol", float),
}


class Settings:
    """Numeric tolerances and size limits used across the pipeline.

    The exact statements being checked need no tolerance; everything that
    runs in floating point takes its thresholds from here.

    Attributes
    ----------
    cluster_tol : float
        Half-width of the window that groups eigenvalues into one cluster.
    residual_tol : float
        Relative bound on ``||L v - lambda v||_inf`` for every eigenpair.
    jacobi_tol : float
        Relative off-diagonal Frobenius norm at which Jacobi stops.
    max_sweeps : int
        Jacobi sweep budget.
    eigensolver : str
        "jacobi" (default) or "lapack".
    zero_tol_factor : float
        Sign-graph zero threshold as a multiple of ``||f||_inf``.
    vanish_tol : float
        Bound on ``|f(c)|`` over cover vertices for numeric 1-eigenvectors.
    bound_tol : float
        Slack allowed when comparing the separation against its bounds.
    interlace_tol : float
        Slack allowed in interlacing comparisons.
    endpoint_tol : float
        Allowed distance of the extreme eigenvalues from 0 and 2.
    imag_tol : float
        Largest imaginary part accepted in quotient-matrix eigenvalues.
    enumeration_cap : int
        Maximum number of minimum vertex covers enumerated per tree.
    brute_force_max_n : int
        Largest tree on which exhaustive oracles are run.

    """

    def __init__(self):
        """Initialize all settings with their defaults."""
        # Spectral configuration
        self.cluster_tol: float = 1e-8
        self.residual_tol: float = 1e-9
        self.jacobi_tol: float = 1e-12
        self.max_sweeps: int = 50
        self.eigensolver: str = "jacobi"

        # Verification configuration
        self.zero_tol_factor: float = 1e-7
        self.vanish_tol: float = 1e-7
        self.bound_tol: float = 1e-9
        self.interlace_tol: float = 1e-8
        self.endpoint_tol: float = 1e-10
        self.imag_tol: float = 1e-10

        # Enumeration limits
        self.enumeration_cap: int = 256
        self.brute_force_max_n: int = 16

    @classmethod
    def from_file(cls, path: str | Path) -> "Settings":
        """Load settings from a dotenv-format file.

        Only the file is read; the process environment is not consulted.

        Parameters
        ----------
        path : str or Path
            File of ``KEY=VALUE`` lines, e.g. ``CLUSTER_TOL=1e-9``.

        Returns
        -------
        Settings
            Defaults overridden by the values in the file.

        Raises
        ------
        ConfigError
            If a value cannot be parsed.

        """
        settings = cls()
        for key, raw in dotenv_values(path).items():
            entry = _FILE_KEYS.get(key.upper())
            if entry is None:
                logger.warning(f"Ignoring unknown config key '{key}' in {path}")
                continue
            attribute, parse = entry
            if raw is None or not raw.strip():
                raise ConfigError(f"{key} has no value in {path}")
            try:
                value = parse(raw.strip())
            except ValueError as e:
                raise ConfigError(f"{key}={raw!r} is not a valid {parse.__name__}") from e
            setattr(settings, attribute, value)
        settings.validate()
        return settings

    def override(self, **values: Optional[float | int]) -> "Settings":
        """Return a copy with every non-None value applied.

        Parameters
        ----------
        **values
            Attribute names mapped to new values; None leaves a field alone.

        Returns
        -------
        Settings
            The updated copy.

        Raises
        ------
        ConfigError
            If a name is not a setting or the result fails validation.

        """
        updated = copy.copy(self)
        for name, value in values.items():
            if value is None:
                continue
            if not hasattr(updated, name):
                raise ConfigError(f"Unknown setting: {name}")
            setattr(updated, name, value)
        updated.validate()
        return updated

    def validate(self) -> bool:
        """Validate that every knob is in range.

        Returns
        -------
        bool
            True if validation passes.

        Raises
        ------
        ConfigError
            Naming the first offending field.

        """
        for name in (
            "cluster_tol",
            "residual_tol",
            "jacobi_tol",
            "zero_tol_factor",
            "vanish_tol",
            "bound_tol",
            "interlace_tol",
            "endpoint_tol",
            "imag_tol",
        ):
            if not getattr(self, name) > 0:
                raise ConfigError(f"{name} must be positive")
        for name in ("max_sweeps", "enumeration_cap", "brute_force_max_n"):
            if getattr(self, name) < 1:
                raise ConfigError(f"{name} must be at least 1")
        if self.eigensolver not in ("jacobi", "lapack"):
            raise ConfigError(f"eigensolver must be jacobi or lapack, got {self.eigensolver!r}")
        return True

    def get_spectral_config(self) -> dict:
        """Get the keyword arguments consumed by the spectral routines.

        Returns
        -------
        dict
            ``tol``, ``max_sweeps`` and ``method`` for ``laplacian_spectrum``.

        """
        return {
            "tol": self.jacobi_tol,
            "max_sweeps": self.max_sweeps,
            "method": self.eigensolver,
        }

    def get_verify_config(self) -> dict:
        """Get the tolerances echoed into verification records.

        Returns
        -------
        dict
            Every tolerance and limit, keyed by attribute name.

        """
        return {
            "cluster_tol": self.cluster_tol,
            "residual_tol": self.residual_tol,
            "zero_tol_factor": self.zero_tol_factor,
            "vanish_tol": self.vanish_tol,
            "bound_tol": self.bound_tol,
            "interlace_tol": self.interlace_tol,
            "endpoint_tol": self.endpoint_tol,
            "imag_tol": self.imag_tol,
            "enumeration_cap": self.enumeration_cap,
            "brute_force_max_n": self.brute_force_max_n,
        }
