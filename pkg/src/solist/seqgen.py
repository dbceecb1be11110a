"""Request-sequence construction.

The two generated families repeat one fixed permutation of the list k
times: t1 repeats the list's own order (an ascending scan), t2 repeats
the reversed order (a descending scan). Both are deliberately free of
locality of reference: within a pass every item is requested exactly
once. ``gen_perm_power`` generalizes them to any repeated permutation,
and explicit sequences can be ingested from text.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .errors import InvalidParameterError, NotAPermutationError, ParseError
from .list_core import ListState

__all__ = [
    "Family",
    "RequestSequence",
    "SequenceSpec",
    "gen_t1",
    "gen_t2",
    "gen_perm_power",
    "explicit_sequence",
    "parse_list_file",
    "parse_sequence_file",
]


class Family(Enum):
    """Kinds of request sequences the library knows how to build."""

    T1 = "T1"  # the initial list order, repeated k times
    T2 = "T2"  # the reversed list order, repeated k times
    PERM_POWER = "perm_power"  # an arbitrary permutation, repeated k times
    EXPLICIT = "explicit"  # a literal request stream


@dataclass(frozen=True)
class RequestSequence:
    """A materialized stream of item requests.

    ``pass_length`` is set when the sequence is a whole number of
    repetitions of an underlying permutation; it turns on per-pass
    accounting in :func:`solist.policies.serve`.
    """

    requests: tuple[int, ...]
    pass_length: int | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "requests", tuple(self.requests))
        if self.pass_length is not None:
            if not isinstance(self.pass_length, int) or isinstance(self.pass_length, bool) or self.pass_length < 1:
                raise InvalidParameterError(
                    f"pass_length must be a positive integer, got {self.pass_length!r}"
                )
            if len(self.requests) % self.pass_length:
                raise InvalidParameterError(
                    f"sequence length {len(self.requests)} is not a multiple of "
                    f"pass_length {self.pass_length}"
                )

    def __len__(self) -> int:
        return len(self.requests)

    @property
    def num_passes(self) -> int | None:
        if self.pass_length is None:
            return None
        return len(self.requests) // self.pass_length


def _check_n_k(n: int, k: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise InvalidParameterError(f"n must be a positive integer, got {n!r}")
    if not isinstance(k, int) or isinstance(k, bool) or k < 0:
        raise InvalidParameterError(f"k must be a nonnegative integer, got {k!r}")


def gen_t1(n: int, k: int) -> RequestSequence:
    """(1, 2, ..., n) repeated k times."""
    _check_n_k(n, k)
    return RequestSequence(tuple(range(1, n + 1)) * k, pass_length=n)


def gen_t2(n: int, k: int) -> RequestSequence:
    """(n, n-1, ..., 1) repeated k times."""
    _check_n_k(n, k)
    return RequestSequence(tuple(range(n, 0, -1)) * k, pass_length=n)


def gen_perm_power(perm: Sequence[int], k: int) -> RequestSequence:
    """An arbitrary permutation of 1..n repeated k times."""
    perm = tuple(perm)
    if not perm:
        raise InvalidParameterError("perm must be nonempty")
    n = len(perm)
    _check_n_k(n, k)
    if sorted(perm) != list(range(1, n + 1)):
        raise NotAPermutationError(
            f"{perm!r} is not a permutation of 1..{n} (duplicate or missing item)"
        )
    return RequestSequence(perm * k, pass_length=n)


def explicit_sequence(items: Iterable[int], pass_length: int | None = None) -> RequestSequence:
    """Wrap a literal request stream, optionally declaring a pass structure."""
    items = tuple(items)
    for item in items:
        if not isinstance(item, int) or isinstance(item, bool) or item < 1:
            raise InvalidParameterError(f"requests must be positive integers, got {item!r}")
    return RequestSequence(items, pass_length=pass_length)


@dataclass(frozen=True)
class SequenceSpec:
    """Declarative description of a request sequence; ``build`` materializes it."""

    family: Family
    n: int | None = None
    k: int | None = None
    perm: tuple[int, ...] | None = None
    items: tuple[int, ...] | None = None

    def build(self) -> RequestSequence:
        if self.family is Family.T1:
            return gen_t1(self._require("n"), self._require("k"))
        if self.family is Family.T2:
            return gen_t2(self._require("n"), self._require("k"))
        if self.family is Family.PERM_POWER:
            if self.perm is None:
                raise InvalidParameterError("perm_power spec needs a perm")
            return gen_perm_power(self.perm, self._require("k"))
        if self.family is Family.EXPLICIT:
            if self.items is None:
                raise InvalidParameterError("explicit spec needs items")
            return explicit_sequence(self.items)
        raise InvalidParameterError(f"unknown family {self.family!r}")

    def _require(self, name: str) -> int:
        value = getattr(self, name)
        if value is None:
            raise InvalidParameterError(f"{self.family.value} spec needs {name}")
        return value


# Text ingestion. Tokens are integers separated by whitespace or commas;
# a '#' starts a comment that runs to the end of the line.

def _tokenize(text: str) -> list[int]:
    values = []
    for line in text.splitlines():
        line = line.split("#", 1)[0]
        for token in line.replace(",", " ").split():
            try:
                values.append(int(token))
            except ValueError:
                raise ParseError(f"expected an integer, got {token!r}") from None
    return values


def _contentful_lines(text: str) -> list[str]:
    lines = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    return lines


def parse_list_file(text: str) -> ListState:
    """Parse an initial list: the first contentful line holds the items."""
    lines = _contentful_lines(text)
    if not lines:
        raise ParseError("list file has no items")
    try:
        items = _tokenize(lines[0])
        return ListState(tuple(items))
    except InvalidParameterError as exc:
        raise ParseError(f"bad list file: {exc}") from None


def parse_sequence_file(text: str) -> RequestSequence:
    """Parse a request stream: every token in the file is one request."""
    try:
        return explicit_sequence(_tokenize(text))
    except InvalidParameterError as exc:
        raise ParseError(f"bad sequence file: {exc}") from None
