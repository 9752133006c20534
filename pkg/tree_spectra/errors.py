"""Exception hierarchy for Tree-Spectra.

Every error raised by the library derives from ``TreeSpectraError``, which is
itself a ``ValueError``. Theorem failures are not exceptions; they are
recorded in verification reports.
"""


class TreeSpectraError(ValueError):
    """Base class for all library errors."""


class ConfigError(TreeSpectraError):
    """Invalid configuration value."""


class TreeStructureError(TreeSpectraError):
    """Input does not describe a tree."""


class TooFewVerticesError(TreeStructureError):
    """A tree needs at least two vertices."""


class SelfLoopError(TreeStructureError):
    """An edge joins a vertex to itself."""


class DuplicateEdgeError(TreeStructureError):
    """The same undirected edge was given twice."""


class CycleError(TreeStructureError):
    """The edge set contains a cycle."""


class DisconnectedError(TreeStructureError):
    """The edge set does not connect all vertices."""


class IsolatedVertexError(TreeStructureError):
    """A vertex id in range has no incident edge."""


class PrueferError(TreeSpectraError):
    """Malformed Pruefer sequence."""


class VertexSetError(TreeSpectraError):
    """Vertex set incompatible with its host tree."""


class EdgeListParseError(TreeSpectraError):
    """Malformed line in an edge-list file.

    Parameters
    ----------
    line_number : int
        1-based line number of the offending line.
    message : str
        Description of the problem.

    """

    def __init__(self, line_number: int, message: str):
        self.line_number = line_number
        super().__init__(f"line {line_number}: {message}")


class CoverError(TreeSpectraError):
    """Vertex set is not a vertex cover, or cover constraints conflict."""


class SpectralError(TreeSpectraError):
    """Invalid input to a spectral routine."""


class ConvergenceError(SpectralError):
    """The Jacobi eigensolver exhausted its sweep budget."""


class SelectorError(TreeSpectraError):
    """Eigenvector selector does not name an available vector."""


class TheoremViolation(TreeSpectraError):
    """An exact construction contradicted a proven identity."""
