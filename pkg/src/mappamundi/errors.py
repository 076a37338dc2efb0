"""Exception hierarchy shared across the engine."""


class MappaError(Exception):
    """Base class for all engine errors."""


class FormatError(MappaError):
    """A data file violates its line format. Carries the offending line number."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class DegenerateInputError(MappaError):
    """Input is structurally valid but has no meaningful answer (zero vector, empty string)."""


class NotFoundError(MappaError):
    """A referenced word, node or session does not exist."""


class ConfigurationError(MappaError):
    """Fixture or manifest data is unusable (empty category, missing seeds)."""


class StateError(MappaError):
    """Operation applied to a graph in the wrong state (e.g. unpositioned nodes)."""


class ReplayError(MappaError):
    """Event log cannot be replayed. Carries the offending event index."""

    def __init__(self, message, index=None):
        if index is not None:
            message = f"event {index}: {message}"
        super().__init__(message)
        self.index = index
