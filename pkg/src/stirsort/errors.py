"""
Exception Hierarchy

All library errors derive from StirsortError so the CLI can map them
onto its exit-code contract in one place.
"""

from typing import Optional


class StirsortError(Exception):
    """Base exception for stirsort errors"""
    pass


class ConfigurationError(StirsortError):
    """Raised when a configuration or its parameters are invalid"""

    def __init__(self, message: str, position: Optional[int] = None):
        super().__init__(message)
        self.position = position


class GenerationError(ConfigurationError):
    """Raised when the rejection sampler cannot produce a stirred configuration"""

    def __init__(self, message: str, tries: int = 0):
        super().__init__(message)
        self.tries = tries


class TranspositionError(StirsortError):
    """Raised when a transposition is applied where it is not legal"""

    def __init__(self, message: str, offending_cell: Optional[int] = None):
        super().__init__(message)
        self.offending_cell = offending_cell


class BoundsError(StirsortError):
    """Raised when bound parameters are out of range"""
    pass


class SearchError(StirsortError):
    """Raised when a search cannot be run on the given instance"""
    pass


class SearchLimitError(SearchError):
    """Raised when a search explores more states than allowed"""

    def __init__(self, message: str, explored: int = 0, frontier: int = 0):
        super().__init__(message)
        self.explored = explored
        self.frontier = frontier


class FlowError(StirsortError):
    """Raised for invalid torus grids, steps or programs"""
    pass


class FormatError(StirsortError):
    """Raised when an input file or record is malformed"""

    def __init__(self, message: str, position: Optional[int] = None, line: Optional[int] = None):
        super().__init__(message)
        self.position = position
        self.line = line


class SettingsError(StirsortError):
    """Raised when a settings file cannot be used"""
    pass
