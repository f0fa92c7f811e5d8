"""Exception types shared across the package.

The CLI maps each class to a fixed exit code, see ``ekrcomplex.cli``.
"""


class EkrError(Exception):
    """Base class for errors raised by this package."""


class InputError(EkrError, ValueError):
    """Malformed input: bad vertex labels, unparsable files, bad arguments."""


class DomainError(EkrError, ValueError):
    """An operation was applied outside its mathematical domain."""


class GenericityError(EkrError, RuntimeError):
    """Random "generic" matrices kept failing the structural checks."""


class ResourceError(EkrError, RuntimeError):
    """A size guard or search budget was exceeded."""
