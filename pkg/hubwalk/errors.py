"""Exception hierarchy shared by the graph, spectral and ranking services."""


class HubwalkError(Exception):
    """Base class for every error raised by hubwalk."""


class GraphValidationError(HubwalkError, ValueError):
    """A graph violates the 0/1, loop-free, 1..n id contract."""


class GraphFormatError(GraphValidationError):
    """An input file cannot be parsed into a graph."""


class SpectralError(HubwalkError):
    pass


class NonSymmetricMatrixError(SpectralError, ValueError):
    pass


class EigenSolverError(SpectralError):
    pass


class SpectralOverflowError(SpectralError, OverflowError):
    """exp(theta) does not fit in a double for the largest eigenvalue."""


class InvalidStateError(HubwalkError, ValueError):
    """Initial state is not a unit vector, or cannot be built for the graph."""


class ConvergenceError(HubwalkError):
    """An iterative method hit its iteration cap."""

    def __init__(self, message: str, iterations: int = 0):
        super().__init__(message)
        self.iterations = iterations


class GeneratorParameterError(HubwalkError, ValueError):
    pass


class RankingError(HubwalkError, ValueError):
    pass
