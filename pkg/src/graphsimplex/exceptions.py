"""Exception hierarchy.

Every error raised on purpose by the package derives from ``GraphSimplexError``
so callers (and the CLI) can map failures to exit codes without string
matching.
"""


class GraphSimplexError(Exception):
    """Base class for all package errors."""


class EdgeListParseError(GraphSimplexError, ValueError):
    """A line of edge-list text could not be parsed."""

    def __init__(self, message, lineno=None):
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
        self.lineno = lineno


class GraphValidationError(GraphSimplexError, ValueError):
    """Self-loop, non-positive weight, duplicate edge or bad node id."""


class ConnectivityError(GraphSimplexError, ValueError):
    """The graph is not connected."""


class SubsetError(GraphSimplexError, ValueError):
    """A vertex subset is empty, improper, out of range or overlaps another."""


class SpectralError(GraphSimplexError, ArithmeticError):
    """The Laplacian does not have exactly one zero eigenvalue."""


class EmbeddingMismatchError(GraphSimplexError, ValueError):
    """Two embeddings that must share a decomposition do not."""


class BarycentricError(GraphSimplexError, ValueError):
    """Weights are negative or do not sum to one."""


class SizeGuardError(GraphSimplexError, ValueError):
    """An exhaustive routine was asked to run beyond its hard size limit."""
