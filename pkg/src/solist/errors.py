"""Exception types shared across the library."""


class SolistError(Exception):
    """Base class for every error raised by this library."""


class ItemNotInListError(SolistError, LookupError):
    """A requested item is not a member of the list.

    ``item`` is the offending id; ``request_index`` is the 0-based position
    of the request inside a served sequence, when the error comes from one.
    """

    def __init__(self, item, request_index=None):
        self.item = item
        self.request_index = request_index
        if request_index is None:
            msg = f"item {item} is not in the list"
        else:
            msg = f"request {request_index}: item {item} is not in the list"
        super().__init__(msg)


class InvalidParameterError(SolistError, ValueError):
    """A parameter is outside its documented domain (e.g. n < 1)."""


class NotAPermutationError(SolistError, ValueError):
    """A value that must be a permutation has duplicate or missing items."""


class BackwardMoveError(SolistError, ValueError):
    """A free forward move was asked to move an item backward."""


class ParseError(SolistError, ValueError):
    """A list or sequence text input is malformed."""
