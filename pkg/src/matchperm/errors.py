"""Exception types shared across the package.

The CLI maps these to exit codes: InputError -> 2, RoutingError -> 3,
ResourceError -> 4.
"""


class MatchpermError(Exception):
    pass


class InputError(MatchpermError):
    """Malformed or precondition-violating input."""


class RoutingError(MatchpermError):
    """A forced computation route cannot be applied to the input."""


class ResourceError(MatchpermError):
    """A configured search or size bound was exceeded."""
