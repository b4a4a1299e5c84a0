"""Membership predicates and exhaustive enumeration for the partition classes.

Every class is described by a frozen clause record (:class:`OrdinaryClass` or
:class:`SignedClass`).  Membership and enumeration both read the same clauses,
so editing one clause (see ``harness.MUTATIONS``) changes what is counted.

Signed enumeration is bounded by two explicit closed forms per class, the
least possible positive total and the largest possible negative total for
``k`` positive parts.  They are part of the class record, not derived from
the clauses, so a mutated clause is still searched over a finite region.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterator, Optional, Sequence, Union

from .core import Partition, SignedPartition


class Side(enum.Enum):
    ORDINARY = "ordinary"
    SIGNED = "signed"


class ClassId(str, enum.Enum):
    P = "P"
    P_SIGNED = "P_SIGNED"
    D = "D"
    D_SIGNED = "D_SIGNED"
    RR1 = "RR1"
    RR1_SIGNED = "RR1_SIGNED"
    RR2 = "RR2"
    RR2_SIGNED = "RR2_SIGNED"
    GG1 = "GG1"
    GG1_ANDREWS_SIGNED = "GG1_ANDREWS_SIGNED"
    GG1_PRIME_SIGNED = "GG1_PRIME_SIGNED"
    GG2 = "GG2"
    GG2_ANDREWS_SIGNED = "GG2_ANDREWS_SIGNED"
    GG2_PRIME_SIGNED = "GG2_PRIME_SIGNED"
    GG_DIFF = "GG_DIFF"
    GG_DIFF_SIGNED = "GG_DIFF_SIGNED"
    LG1 = "LG1"
    LG1_E_SIGNED = "LG1_E_SIGNED"
    LG1_SHIFT_SIGNED = "LG1_SHIFT_SIGNED"
    LG1_PRIME_SIGNED = "LG1_PRIME_SIGNED"
    LG2 = "LG2"
    LG2_T_SIGNED = "LG2_T_SIGNED"
    LG2_ANDREWS_SIGNED = "LG2_ANDREWS_SIGNED"
    LG2_PRIME_SIGNED = "LG2_PRIME_SIGNED"
    LG2_H_SIGNED = "LG2_H_SIGNED"

    def __str__(self) -> str:
        return self.value


class SideMismatchError(TypeError):
    pass


@dataclass(frozen=True)
class OrdinaryClass:
    """Difference-condition class of ordinary partitions.

    ``min_gap`` applies to every pair of adjacent parts (0 allows repeats);
    ``even_gap``/``odd_gap`` override it when both adjacent parts are
    even/odd.  ``residues`` restricts parts to ``(modulus, allowed)``.
    """

    name: str
    description: str
    min_part: int = 1
    min_gap: int = 0
    even_gap: Optional[int] = None
    odd_gap: Optional[int] = None
    residues: Optional[tuple[int, frozenset[int]]] = None
    smallest_in: Optional[frozenset[int]] = None
    notes: str = ""

    side = Side.ORDINARY

    def gap_ok(self, larger: int, smaller: int) -> bool:
        need = self.min_gap
        if self.even_gap is not None and larger % 2 == 0 and smaller % 2 == 0:
            need = max(need, self.even_gap)
        if self.odd_gap is not None and larger % 2 == 1 and smaller % 2 == 1:
            need = max(need, self.odd_gap)
        return larger - smaller >= need

    def part_ok(self, p: int) -> bool:
        if p < self.min_part:
            return False
        if self.residues is not None:
            modulus, allowed = self.residues
            return p % modulus in allowed
        return True


JointClause = Callable[[tuple[int, ...], tuple[int, ...]], bool]


@dataclass(frozen=True)
class SignedClass:
    """Clause record for a class of signed partitions.

    All ``k`` arguments are the number of positive parts.  Positive clauses
    are read on the ascending view; ``alternating`` is the parity of the
    smallest part, with parities alternating upward from there.
    """

    name: str
    description: str
    min_positive_total: Callable[[int], int]
    max_negative_total: Callable[[int], int]
    pos_parity: Optional[int] = None
    alternating: Optional[int] = None
    pos_min: Callable[[int], int] = lambda k: 1
    pos_min_gap: int = 0
    neg_residues: Optional[tuple[int, frozenset[int]]] = None
    neg_distinct: bool = True
    neg_max: Callable[[int], int] = lambda k: k
    joint: Optional[JointClause] = None
    joint_description: str = ""
    notes: str = ""

    side = Side.SIGNED

    def pos_parity_at(self, i: int) -> Optional[int]:
        """Required parity of the i-th smallest positive part (0-based)."""
        if self.alternating is not None:
            return (self.alternating + i) % 2
        return self.pos_parity

    def neg_values(self, k: int) -> list[int]:
        top = self.neg_max(k)
        if self.neg_residues is None:
            return list(range(1, top + 1))
        modulus, allowed = self.neg_residues
        return [v for v in range(1, top + 1) if v % modulus in allowed]

    def lower_weight(self, k: int) -> int:
        return self.min_positive_total(k) - self.max_negative_total(k)

    def max_positive_count(self, n: int) -> int:
        """Largest k whose weight lower bound is ≤ n, or -1 if none is."""
        k = -1
        while self.lower_weight(k + 1) <= n:
            k += 1
        return k


ClassSpec = Union[OrdinaryClass, SignedClass]

ODD = (2, frozenset({1}))


def _e_threshold(pos: tuple[int, ...], neg: tuple[int, ...]) -> bool:
    # smallest positive > 2t - [smallest negative == 1]; vacuous without positives
    if not pos:
        return True
    t = len(neg)
    return min(pos) > 2 * t - (1 in neg)


def _t_threshold(pos: tuple[int, ...], neg: tuple[int, ...]) -> bool:
    if not pos:
        return True
    t = len(neg)
    return min(pos) > 2 * t + (1 in neg)


def _diff_has_base_part(pos: tuple[int, ...], neg: tuple[int, ...]) -> bool:
    return bool(pos) and 2 * len(pos) in pos


def _sum_allowed(modulus: int, residue: int, top: int) -> int:
    return sum(v for v in range(1, top + 1) if v % modulus == residue)


CATALOG: dict[ClassId, ClassSpec] = {
    ClassId.P: OrdinaryClass("P", "all partitions"),
    ClassId.D: OrdinaryClass("D", "partitions into distinct parts", min_gap=1),
    ClassId.RR1: OrdinaryClass("RR1", "parts differ by at least 2", min_gap=2),
    ClassId.RR2: OrdinaryClass("RR2", "parts > 1 differing by at least 2", min_part=2, min_gap=2),
    ClassId.GG1: OrdinaryClass(
        "GG1", "parts differ by at least 2, by at least 4 between even parts",
        min_gap=2, even_gap=4),
    ClassId.GG2: OrdinaryClass(
        "GG2", "GG1 partitions with all parts at least 3",
        min_part=3, min_gap=2, even_gap=4),
    ClassId.GG_DIFF: OrdinaryClass(
        "GG_DIFF", "GG1 partitions with a part equal to 1 or 2",
        min_gap=2, even_gap=4, smallest_in=frozenset({1, 2})),
    ClassId.LG1: OrdinaryClass(
        "LG1", "parts differ by at least 2, by at least 4 between odd parts",
        min_gap=2, odd_gap=4),
    ClassId.LG2: OrdinaryClass(
        "LG2", "LG1 partitions without 1's", min_part=2, min_gap=2, odd_gap=4),

    ClassId.P_SIGNED: SignedClass(
        "P_SIGNED",
        "positives alternate in parity from an even smallest part; "
        "negatives distinct and at most l+",
        min_positive_total=lambda k: k * (k + 3) // 2,
        max_negative_total=lambda k: k * (k + 1) // 2,
        alternating=0, pos_min_gap=1),
    ClassId.D_SIGNED: SignedClass(
        "D_SIGNED",
        "positives even and distinct; negatives distinct and at most l+",
        min_positive_total=lambda k: k * (k + 1),
        max_negative_total=lambda k: k * (k + 1) // 2,
        pos_parity=0, pos_min_gap=1,
        notes="distinctness of negatives taken from the generating function"),
    ClassId.RR1_SIGNED: SignedClass(
        "RR1_SIGNED",
        "positives differ by at least 3 and alternate in parity from an even "
        "smallest part; negatives distinct and at most l+",
        min_positive_total=lambda k: k * (3 * k + 1) // 2,
        max_negative_total=lambda k: k * (k + 1) // 2,
        alternating=0, pos_min_gap=3,
        notes="distinctness of negatives taken from the generating function"),
    ClassId.RR2_SIGNED: SignedClass(
        "RR2_SIGNED",
        "positives > 1, differ by at least 3, alternate in parity from an odd "
        "smallest part; negatives distinct and at most l+",
        min_positive_total=lambda k: 3 * k * (k + 1) // 2,
        max_negative_total=lambda k: k * (k + 1) // 2,
        alternating=1, pos_min=lambda k: 2, pos_min_gap=3,
        notes="distinctness of negatives taken from the generating function"),
    ClassId.GG1_ANDREWS_SIGNED: SignedClass(
        "GG1_ANDREWS_SIGNED",
        "positives even and at least 2*l+; negatives odd, distinct, at most 2*l+",
        min_positive_total=lambda k: 2 * k * k,
        max_negative_total=lambda k: k * k,
        pos_parity=0, pos_min=lambda k: 2 * k,
        neg_residues=ODD, neg_max=lambda k: 2 * k),
    ClassId.GG1_PRIME_SIGNED: SignedClass(
        "GG1_PRIME_SIGNED",
        "positives even and differ by at least 4; negatives odd, distinct, "
        "at most 2*l+ - 1",
        min_positive_total=lambda k: 2 * k * k,
        max_negative_total=lambda k: k * k,
        pos_parity=0, pos_min_gap=4,
        neg_residues=ODD, neg_max=lambda k: 2 * k - 1),
    ClassId.GG2_ANDREWS_SIGNED: SignedClass(
        "GG2_ANDREWS_SIGNED",
        "positives even and at least 2*(l+ + 1); negatives odd, distinct, "
        "at most 2*l+",
        min_positive_total=lambda k: 2 * k * (k + 1),
        max_negative_total=lambda k: k * k,
        pos_parity=0, pos_min=lambda k: 2 * (k + 1),
        neg_residues=ODD, neg_max=lambda k: 2 * k),
    ClassId.GG2_PRIME_SIGNED: SignedClass(
        "GG2_PRIME_SIGNED",
        "positives even, at least 4, differ by at least 4; negatives odd, "
        "distinct, at most 2*l+ - 1",
        min_positive_total=lambda k: 2 * k * (k + 1),
        max_negative_total=lambda k: k * k,
        pos_parity=0, pos_min=lambda k: 4, pos_min_gap=4,
        neg_residues=ODD, neg_max=lambda k: 2 * k - 1),
    ClassId.GG_DIFF_SIGNED: SignedClass(
        "GG_DIFF_SIGNED",
        "positives even and at least 2*l+ with 2*l+ itself a part; negatives "
        "odd, distinct, less than 2*l+",
        min_positive_total=lambda k: 2 * k * k,
        max_negative_total=lambda k: k * k,
        pos_parity=0, pos_min=lambda k: 2 * k,
        neg_residues=ODD, neg_max=lambda k: 2 * k - 1,
        joint=_diff_has_base_part, joint_description="2*l+ is a part"),
    ClassId.LG1_E_SIGNED: SignedClass(
        "LG1_E_SIGNED",
        "k positives even and distinct; t negatives odd, distinct, less than "
        "2k; smallest positive > 2t - [1 is a negative part]",
        min_positive_total=lambda k: k * (k + 1),
        max_negative_total=lambda k: k * k,
        pos_parity=0, pos_min_gap=1,
        neg_residues=ODD, neg_max=lambda k: 2 * k - 1,
        joint=_e_threshold, joint_description="min positive > 2t - delta(1, u)"),
    ClassId.LG1_SHIFT_SIGNED: SignedClass(
        "LG1_SHIFT_SIGNED",
        "positives odd, at least 5, differ by at least 4; negatives odd, "
        "distinct, at most 2*l+ + 1 (counted at weight n - 1)",
        min_positive_total=lambda k: 2 * k * k + 3 * k,
        max_negative_total=lambda k: (k + 1) ** 2,
        pos_parity=1, pos_min=lambda k: 5, pos_min_gap=4,
        neg_residues=ODD, neg_max=lambda k: 2 * k + 1,
        notes="l+ is the number of positive parts, so the bound 2*l+ + 1 "
              "matches (-q^-1; q^-2)_{n+1}; weight -1 has one member"),
    ClassId.LG1_PRIME_SIGNED: SignedClass(
        "LG1_PRIME_SIGNED",
        "positives even and distinct; negatives distinct, 1 mod 4, at most 2*l+",
        min_positive_total=lambda k: k * (k + 1),
        max_negative_total=lambda k: _sum_allowed(4, 1, 2 * k),
        pos_parity=0, pos_min_gap=1,
        neg_residues=(4, frozenset({1})), neg_max=lambda k: 2 * k),
    ClassId.LG2_T_SIGNED: SignedClass(
        "LG2_T_SIGNED",
        "k positives even and distinct; t negatives odd, distinct, less than "
        "2k; smallest positive > 2t + [1 is a negative part]",
        min_positive_total=lambda k: k * (k + 1),
        max_negative_total=lambda k: k * k,
        pos_parity=0, pos_min_gap=1,
        neg_residues=ODD, neg_max=lambda k: 2 * k - 1,
        joint=_t_threshold, joint_description="min positive > 2t + delta(1, u)"),
    ClassId.LG2_ANDREWS_SIGNED: SignedClass(
        "LG2_ANDREWS_SIGNED",
        "positives odd and at least 2*l+; negatives odd, distinct, at most 2*l+",
        min_positive_total=lambda k: k * (2 * k + 1),
        max_negative_total=lambda k: k * k,
        pos_parity=1, pos_min=lambda k: 2 * k,
        neg_residues=ODD, neg_max=lambda k: 2 * k),
    ClassId.LG2_PRIME_SIGNED: SignedClass(
        "LG2_PRIME_SIGNED",
        "positives odd, at least 3, differ by at least 4; negatives odd, "
        "distinct, at most 2*l+ - 1",
        min_positive_total=lambda k: 2 * k * k + k,
        max_negative_total=lambda k: k * k,
        pos_parity=1, pos_min=lambda k: 3, pos_min_gap=4,
        neg_residues=ODD, neg_max=lambda k: 2 * k - 1),
    ClassId.LG2_H_SIGNED: SignedClass(
        "LG2_H_SIGNED",
        "positives even and distinct; negatives distinct, 3 mod 4, less than 2*l+",
        min_positive_total=lambda k: k * (k + 1),
        max_negative_total=lambda k: _sum_allowed(4, 3, 2 * k - 1),
        pos_parity=0, pos_min_gap=1,
        neg_residues=(4, frozenset({3})), neg_max=lambda k: 2 * k - 1,
        notes="distinctness of negatives taken from the generating function"),
}


def class_spec(class_id: ClassId | str | ClassSpec) -> ClassSpec:
    if isinstance(class_id, (OrdinaryClass, SignedClass)):
        return class_id
    try:
        return CATALOG[ClassId(class_id)]
    except ValueError:
        valid = ", ".join(c.value for c in ClassId)
        raise KeyError(f"unknown class {class_id!r}; valid: {valid}") from None


def residue_class(modulus: int, residues: Sequence[int]) -> OrdinaryClass:
    """Partitions into parts congruent to one of ``residues`` mod ``modulus``."""
    allowed = frozenset(r % modulus for r in residues)
    label = ",".join(map(str, sorted(allowed)))
    return OrdinaryClass(f"PARTS_{label}_MOD_{modulus}",
                         f"parts congruent to {label} mod {modulus}",
                         residues=(modulus, allowed))


# -- membership --------------------------------------------------------------

def _ordinary_member(spec: OrdinaryClass, p: Partition) -> bool:
    parts = p.descending()
    if not all(spec.part_ok(x) for x in parts):
        return False
    if not all(spec.gap_ok(a, b) for a, b in zip(parts, parts[1:])):
        return False
    if spec.smallest_in is not None and (not parts or parts[-1] not in spec.smallest_in):
        return False
    return True


def _signed_member(spec: SignedClass, s: SignedPartition) -> bool:
    pos = s.positives.ascending()
    k = len(pos)
    lo = spec.pos_min(k)
    for i, x in enumerate(pos):
        parity = spec.pos_parity_at(i)
        if x < lo or (parity is not None and x % 2 != parity):
            return False
    if any(b - a < spec.pos_min_gap for a, b in zip(pos, pos[1:])):
        return False
    neg = s.negatives.descending()
    if spec.neg_distinct and len(set(neg)) != len(neg):
        return False
    allowed = set(spec.neg_values(k))
    if any(v not in allowed for v in neg):
        return False
    if spec.joint is not None and not spec.joint(s.positives.descending(), neg):
        return False
    return True


def is_member(class_id: ClassId | str | ClassSpec,
              obj: Partition | SignedPartition) -> bool:
    spec = class_spec(class_id)
    if spec.side is Side.ORDINARY:
        if not isinstance(obj, Partition):
            raise SideMismatchError(f"{spec.name} holds ordinary partitions, got {type(obj).__name__}")
        return _ordinary_member(spec, obj)
    if not isinstance(obj, SignedPartition):
        raise SideMismatchError(f"{spec.name} holds signed partitions, got {type(obj).__name__}")
    return _signed_member(spec, obj)


# -- enumeration -------------------------------------------------------------

def _ordinary_parts(spec: OrdinaryClass, remaining: int, prev: Optional[int]) -> Iterator[tuple[int, ...]]:
    # Descending construction: each new part is below ``prev``.
    if remaining == 0:
        yield ()
        return
    top = remaining if prev is None else min(remaining, prev - spec.min_gap)
    for p in range(top, spec.min_part - 1, -1):
        if not spec.part_ok(p):
            continue
        if prev is not None and not spec.gap_ok(prev, p):
            continue
        for rest in _ordinary_parts(spec, remaining - p, p):
            yield (p,) + rest


def _positive_tuples(spec: SignedClass, k: int, cap: int) -> Iterator[tuple[int, ...]]:
    """Ascending k-tuples meeting the positive clauses with total ≤ cap."""
    gap = spec.pos_min_gap

    def rec(i: int, prev: int, budget: int) -> Iterator[tuple[int, ...]]:
        if i == k:
            yield ()
            return
        lo = spec.pos_min(k) if i == 0 else prev + gap
        lo = max(lo, 1)
        parity = spec.pos_parity_at(i)
        if parity is not None and lo % 2 != parity:
            lo += 1
        left = k - i
        step = 1 if parity is None else 2
        p = lo
        # the remaining parts are at least p, p+gap, p+2*gap, ...
        while p * left + gap * left * (left - 1) // 2 <= budget:
            for rest in rec(i + 1, p, budget - p):
                yield (p,) + rest
            p += step

    yield from rec(0, 0, cap)


def _negative_sets(values: list[int], target: int, distinct: bool) -> Iterator[tuple[int, ...]]:
    """Descending tuples from ``values`` summing to ``target``."""
    values = sorted(values, reverse=True)
    suffix = [0] * (len(values) + 1)
    for i in range(len(values) - 1, -1, -1):
        suffix[i] = suffix[i + 1] + values[i]

    def rec(i: int, remaining: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        if i == len(values) or (distinct and suffix[i] < remaining):
            return
        v = values[i]
        if v <= remaining:
            for rest in rec(i + 1 if distinct else i, remaining - v):
                yield (v,) + rest
        yield from rec(i + 1, remaining)

    if target < 0:
        return
    yield from rec(0, target)


def _signed_members(spec: SignedClass, n: int) -> Iterator[SignedPartition]:
    for k in range(spec.max_positive_count(n) + 1):
        values = spec.neg_values(k)
        cap = n + spec.max_negative_total(k)
        for pos in _positive_tuples(spec, k, cap):
            target = sum(pos) - n
            if target < 0:
                continue
            for neg in _negative_sets(values, target, spec.neg_distinct):
                s = SignedPartition(pos, neg)
                if spec.joint is None or spec.joint(s.positives.descending(), neg):
                    yield s


@lru_cache(maxsize=None)
def _enumerate_spec(spec: ClassSpec, n: int) -> tuple:
    if spec.side is Side.ORDINARY:
        if n < 0:
            return ()
        found = [Partition(p) for p in _ordinary_parts(spec, n, None)]
        found = [p for p in found if _ordinary_member(spec, p)]
    else:
        found = list(_signed_members(spec, n))
    return tuple(sorted(set(found)))


def enumerate_class(class_id: ClassId | str | ClassSpec, n: int) -> tuple:
    """All members of weight ``n``, sorted, without duplicates.

    Ordinary classes are empty for ``n < 0``; signed classes accept any
    integer weight.
    """
    return _enumerate_spec(class_spec(class_id), n)


def count_class(class_id: ClassId | str | ClassSpec, n: int) -> int:
    return len(enumerate_class(class_id, n))
