"""Partitions, signed partitions, and the small operations built on them.

Parts are stored weakly decreasing.  Formulas that index parts from the
smallest end should go through :meth:`Partition.ascending`.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Iterable, Iterator

EMPTY_TEXT = "(empty)"


class PartitionParseError(ValueError):
    """Malformed textual partition; ``position`` is the 0-based column."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...]

    def __init__(self, parts: Iterable[int] = ()):
        parts = tuple(parts)
        for p in parts:
            if not isinstance(p, int) or isinstance(p, bool):
                raise TypeError(f"parts must be integers, got {p!r}")
            if p < 1:
                raise ValueError(f"parts must be positive, got {p}")
        object.__setattr__(self, "parts", tuple(sorted(parts, reverse=True)))

    @classmethod
    def _trusted(cls, parts: tuple[int, ...]) -> "Partition":
        # caller guarantees positive ints, weakly decreasing
        obj = object.__new__(cls)
        object.__setattr__(obj, "parts", parts)
        return obj

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __bool__(self) -> bool:
        return bool(self.parts)

    def descending(self) -> tuple[int, ...]:
        return self.parts

    def ascending(self) -> tuple[int, ...]:
        return self.parts[::-1]

    def __str__(self) -> str:
        return ",".join(map(str, self.parts)) if self.parts else EMPTY_TEXT


@dataclass(frozen=True, order=True)
class SignedPartition:
    """A pair (positives, negatives); negatives holds absolute values."""

    positives: Partition
    negatives: Partition

    def __init__(self, positives: Iterable[int] | Partition = (),
                 negatives: Iterable[int] | Partition = ()):
        if not isinstance(positives, Partition):
            positives = Partition(positives)
        if not isinstance(negatives, Partition):
            negatives = Partition(negatives)
        object.__setattr__(self, "positives", positives)
        object.__setattr__(self, "negatives", negatives)

    @property
    def weight(self) -> int:
        return self.positives.weight - self.negatives.weight

    @property
    def num_positive(self) -> int:
        return len(self.positives)

    def __str__(self) -> str:
        tokens = [str(p) for p in self.positives] + [f"-{v}" for v in self.negatives.ascending()]
        return ",".join(tokens) if tokens else EMPTY_TEXT


class Parity(enum.Enum):
    """Which parity the indicator maps to 1."""

    ODD_IS_1 = "odd"
    EVEN_IS_1 = "even"


def parity_indicator(k: int, variant: Parity = Parity.ODD_IS_1) -> int:
    odd = k % 2
    return odd if variant is Parity.ODD_IS_1 else 1 - odd


def weight_of(s: SignedPartition) -> int:
    return s.weight


def conjugate(p: Partition | Iterable[int]) -> Partition:
    """Transpose of the Ferrers diagram.  Zero entries in the input are ignored."""
    if isinstance(p, Partition):
        parts = p.parts
    else:
        parts = sorted((x for x in p if x > 0), reverse=True)
    out = []
    j = len(parts)
    for i in range(1, (parts[0] if parts else 0) + 1):
        while parts[j - 1] < i:
            j -= 1
        out.append(j)
    return Partition._trusted(tuple(out))


_TOKEN = re.compile(r"\s*([+-]?)\s*(\d+)\s*")


def parse_signed(text: str) -> SignedPartition:
    """Parse ``"16,16,-3,-5"`` style text in any order.

    ``""`` and ``"(empty)"`` both give the empty signed partition.
    """
    stripped = text.strip()
    if stripped in ("", EMPTY_TEXT):
        return SignedPartition()
    pos: list[int] = []
    neg: list[int] = []
    offset = 0
    for field in text.split(","):
        m = _TOKEN.fullmatch(field)
        if m is None:
            col = offset + len(field) - len(field.lstrip())
            raise PartitionParseError(f"expected an integer, got {field.strip()!r}", col)
        value = int(m.group(2))
        if value == 0:
            raise PartitionParseError("zero is not a valid part", offset + m.start(2))
        (neg if m.group(1) == "-" else pos).append(value)
        offset += len(field) + 1
    return SignedPartition(pos, neg)


def parse_partition(text: str) -> Partition:
    s = parse_signed(text)
    if s.negatives:
        raise PartitionParseError("negative parts are not allowed in an ordinary partition",
                                  text.index("-"))
    return s.positives
