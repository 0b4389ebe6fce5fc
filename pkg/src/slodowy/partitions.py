"""Partitions and Young diagrams.

A :class:`Partition` is a weakly decreasing tuple of positive integers.  The
same object is read either as a partition ``d`` (row lengths of a Young
diagram) or as a dual partition ``a`` (its column heights).
"""

from __future__ import annotations

import random
import re
from collections import Counter
from functools import lru_cache
from itertools import accumulate
from math import factorial, prod
from typing import Iterable, Iterator

from .errors import NotAPartition, ParseError, SizeMismatch

BOX = "█"
ASCII_BOX = "#"


class Partition(tuple):
    """Weakly decreasing tuple of positive integers with at least one part."""

    def __new__(cls, parts: Iterable[int]) -> Partition:
        parts = tuple(parts)
        if not parts:
            raise NotAPartition("a partition needs at least one part")
        for p in parts:
            if not isinstance(p, int) or isinstance(p, bool) or p < 1:
                raise NotAPartition(f"parts must be positive integers, got {p!r}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise NotAPartition(f"parts must be weakly decreasing, got {list(parts)}")
        return super().__new__(cls, parts)

    @property
    def N(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def dual(self) -> Partition:
        return dual(self)

    def is_trivial(self) -> bool:
        """True for ``[1, ..., 1]``, the partition of the zero orbit."""
        return self[0] == 1

    def __repr__(self) -> str:
        return f"Partition({list(self)})"

    def __str__(self) -> str:
        return format_partition(self)


def dual(p: Partition) -> Partition:
    """Transpose of the Young diagram: ``a_k = #{i : p_i >= k}``."""
    return Partition(sum(1 for x in p if x >= k) for k in range(1, p[0] + 1))


def padded(p: Iterable[int], length: int) -> tuple[int, ...]:
    p = tuple(p)
    if len(p) > length:
        raise ValueError(f"cannot pad {list(p)} to length {length}")
    return p + (0,) * (length - len(p))


def prefix_sums(p: Iterable[int]) -> list[int]:
    return list(accumulate(p))


def dominates(dp: Partition, d: Partition) -> bool:
    """True iff ``O_dp`` lies in the closure of ``O_d``.

    Prefix sums of ``dp`` are bounded by those of ``d`` over the first
    ``min(len(dp), len(d))`` parts.
    """
    if dp.N != d.N:
        raise SizeMismatch(f"partitions of different sizes: {dp.N} vs {d.N}")
    k = min(len(dp), len(d))
    return all(x <= y for x, y in zip(prefix_sums(dp[:k]), prefix_sums(d[:k])))


def orbit_dim(d: Partition) -> int:
    """Dimension of the nilpotent orbit ``O_d``: ``N^2 - sum a_k^2``."""
    return d.N**2 - sum(a * a for a in dual(d))


def count_resolutions(d: Partition) -> int:
    """Number of distinct rearrangements of ``dual(d)``.

    Equals the number of crepant resolutions of the orbit closure; the
    zero orbit counts its identity resolution once.
    """
    if d.is_trivial():
        return 1
    a = dual(d)
    return factorial(len(a)) // prod(factorial(c) for c in Counter(a).values())


# -- text formats -----------------------------------------------------------

_PARTITION_RE = re.compile(r"^\s*\d+(\s*,\s*\d+)*\s*,?\s*$")


def parse(text: str) -> Partition:
    """Parse ``"4,4,2,1"``; raise :class:`ParseError` or :class:`NotAPartition`."""
    if not isinstance(text, str) or not _PARTITION_RE.match(text):
        raise ParseError(f"expected comma-separated positive integers, got {text!r}")
    parts = [int(t) for t in text.replace(" ", "").strip(",").split(",")]
    if any(x == 0 for x in parts):
        raise NotAPartition(f"parts must be positive, got {parts}")
    return Partition(parts)


def format_partition(p: Iterable[int]) -> str:
    return ",".join(str(x) for x in p)


def render(d: Partition, glyph: str = BOX) -> str:
    """Young diagram, one line of glyphs per row."""
    return "\n".join(glyph * r for r in d)


# -- enumeration ------------------------------------------------------------


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if n < 1:
        return
    max_part = n if max_part is None else min(max_part, n)

    def rec(rest: int, cap: int) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in rec(rest - first, first):
                yield (first,) + tail

    for parts in rec(n, max_part):
        yield Partition(parts)


@lru_cache(maxsize=None)
def all_partitions(n: int) -> tuple[Partition, ...]:
    return tuple(partitions_of(n))


def dominated_by(d: Partition) -> list[Partition]:
    """Every ``dp`` with ``dominates(dp, d)``."""
    return [p for p in all_partitions(d.N) if dominates(p, d)]


def nested_pairs(n: int) -> Iterator[tuple[Partition, Partition]]:
    """All ``(dp, d)`` with ``dp <= d`` among partitions of ``n``."""
    parts = all_partitions(n)
    for d in parts:
        for dp in parts:
            if dominates(dp, d):
                yield dp, d


def random_partition(n: int, rng: random.Random) -> Partition:
    """Uniformly random partition of ``n`` (enumerates, fine for n <= 40)."""
    return rng.choice(all_partitions(n))


def random_nested_pair(n: int, rng: random.Random) -> tuple[Partition, Partition]:
    d = random_partition(n, rng)
    return rng.choice(dominated_by(d)), d
