"""Exception types shared across the package."""


class KlyachkoError(Exception):
    """Base class for all package errors."""


class InputError(KlyachkoError):
    """Invalid fan, ideal, degree or file input."""


class SearchBoxError(KlyachkoError):
    """A reconstruction search box was too small to be trusted."""


class InfiniteRegionError(KlyachkoError):
    """Point enumeration was asked for an infinite lattice region."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness
