"""Finite prefixes and lazy infinite sequences with memoised, query-tracked access.

A SequenceOracle wraps a total rule index -> natural.  Values are produced
lazily, memoised forever, and every read made during an evaluation session is
recorded in a QueryLog, so callers can tell exactly which part of the sequence
a result depended on.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable


class QueryBeyondLimit(Exception):
    """A capped session tried to read an index past its limit."""

    def __init__(self, index: int, limit: int):
        super().__init__(f"query at index {index} exceeds session limit {limit}")
        self.index = index
        self.limit = limit


class SequenceSpecError(ValueError):
    """Malformed sequence spec string."""


@dataclass(frozen=True)
class FinitePrefix:
    """An observed initial segment (f(0), ..., f(k)) of a sequence.

    Equality is element-wise; the empty prefix is allowed.
    """

    entries: tuple[int, ...] = ()

    def __post_init__(self):
        entries = tuple(int(v) for v in self.entries)
        if any(v < 0 for v in entries):
            raise ValueError(f"prefix entries must be naturals: {entries}")
        object.__setattr__(self, "entries", entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, index: int) -> int:
        return self.entries[index]

    def __iter__(self):
        return iter(self.entries)

    @property
    def last_index(self) -> int:
        """Largest readable index, -1 for the empty prefix."""
        return len(self.entries) - 1

    def extended(self, value: int) -> "FinitePrefix":
        return FinitePrefix(self.entries + (int(value),))


class QueryLog:
    """Indices read during one evaluation session.

    Entries are only ever added.  A session may carry a limit; recording an
    index past the limit raises QueryBeyondLimit before the read happens.
    """

    def __init__(self, limit: int | None = None):
        self.queried: set[int] = set()
        self.limit = limit

    def record(self, index: int) -> None:
        if self.limit is not None and index > self.limit:
            raise QueryBeyondLimit(index, self.limit)
        self.queried.add(index)

    @property
    def max_queried(self) -> int | None:
        return max(self.queried) if self.queried else None

    def snapshot(self) -> frozenset[int]:
        return frozenset(self.queried)


class SequenceOracle:
    """Lazy, memoised view of a total deterministic rule index -> natural.

    The memo makes the first answer authoritative: even if a user-supplied
    rule misbehaves, repeated queries at one index return identical values.
    Each evaluation session gets a fresh log via begin_session; the memo
    persists across sessions.
    """

    def __init__(self, rule: Callable[[int], int], describe: str = "oracle"):
        self._rule = rule
        self._memo: dict[int, int] = {}
        self.describe = describe
        self.log = QueryLog()

    def begin_session(self, limit: int | None = None) -> QueryLog:
        """Install and return a fresh query log, optionally index-capped."""
        self.log = QueryLog(limit)
        return self.log

    def query(self, index: int) -> int:
        if index < 0:
            raise ValueError(f"oracle index must be a natural, got {index}")
        self.log.record(index)
        if index not in self._memo:
            value = int(self._rule(index))
            if value < 0:
                raise ValueError(f"oracle rule returned {value} at {index}; values must be naturals")
            self._memo[index] = value
        return self._memo[index]

    def __repr__(self):
        return f"SequenceOracle({self.describe})"


def zero_pad(prefix: FinitePrefix) -> SequenceOracle:
    """Oracle agreeing with the prefix on its indices and 0 beyond."""
    entries = prefix.entries

    def rule(i: int) -> int:
        return entries[i] if i < len(entries) else 0

    return SequenceOracle(rule, describe=prefix_spec(prefix))


def prefix_of(oracle: SequenceOracle, k: int) -> FinitePrefix:
    """The tuple of oracle values at indices 0..k."""
    if k < 0:
        raise ValueError("prefix_of needs k >= 0")
    return FinitePrefix(tuple(oracle.query(i) for i in range(k + 1)))


def agrees_through(o1: SequenceOracle, o2: SequenceOracle, k: int) -> bool:
    """True iff both oracles return equal values at every index <= k."""
    return all(o1.query(i) == o2.query(i) for i in range(k + 1))


_CONST_RE = re.compile(r"const:(\d+)$")
_PLANTZERO_RE = re.compile(r"plantzero:(\d+)$")
_PREFIX_RE = re.compile(r"prefix:\[((?:\d+(?:,\d+)*)?)\]:pad0$")
_CYCLE_RE = re.compile(r"cycle:\[(\d+(?:,\d+)*)\]$")


def from_spec(text: str) -> SequenceOracle:
    """Build an oracle from a sequence spec string.

    Grammar: ``id`` | ``const:<n>`` | ``prefix:[a,b,c]:pad0`` |
    ``plantzero:<p>`` | ``cycle:[a,b,c]``.
    """
    text = text.strip()
    if text == "id":
        return SequenceOracle(lambda i: i, describe="id")
    m = _CONST_RE.match(text)
    if m:
        n = int(m.group(1))
        return SequenceOracle(lambda i: n, describe=text)
    m = _PLANTZERO_RE.match(text)
    if m:
        p = int(m.group(1))
        return SequenceOracle(lambda i: 0 if i == p else 1, describe=text)
    m = _PREFIX_RE.match(text)
    if m:
        body = m.group(1)
        values = tuple(int(v) for v in body.split(",")) if body else ()
        return zero_pad(FinitePrefix(values))
    m = _CYCLE_RE.match(text)
    if m:
        values = tuple(int(v) for v in m.group(1).split(","))
        return SequenceOracle(lambda i: values[i % len(values)], describe=text)
    raise SequenceSpecError(f"unrecognised sequence spec: {text!r}")


def prefix_spec(prefix: FinitePrefix) -> str:
    """Spec string for the zero-padded extension of a prefix."""
    return "prefix:[" + ",".join(str(v) for v in prefix.entries) + "]:pad0"
