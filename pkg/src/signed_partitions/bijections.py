"""Explicit bijections between ordinary and signed partition classes.

The f-family reads parts smallest-first; h, g and phi read them
largest-first.  The raw ``map_*`` functions only check what their formulas
need.  Use :func:`forward` and :func:`inverse` for the class-checked
versions keyed by :class:`MapId`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, Sequence

from .classes import ClassId, is_member
from .core import Parity, Partition, SignedPartition, conjugate, parity_indicator


class BijectionError(ValueError):
    pass


class BVariant(enum.Enum):
    ZERO_START = "0101"
    ONE_START = "1010"
    ALL_ZERO = "0000"

    def bits(self, k: int) -> tuple[int, ...]:
        if self is BVariant.ALL_ZERO:
            return (0,) * k
        first = 0 if self is BVariant.ZERO_START else 1
        return tuple((first + i) % 2 for i in range(k))


def t_of(bits: Sequence[int]) -> tuple[int, ...]:
    """Least-weight gap-free sequence congruent to ``bits`` termwise.

    Starts at ``bits[0]`` and steps up by one exactly where the bit flips,
    so an initial run of zeros is kept.
    """
    if not bits:
        raise ValueError("t_of needs a nonempty binary sequence")
    if any(b not in (0, 1) for b in bits):
        raise ValueError(f"not a binary sequence: {tuple(bits)}")
    out = [bits[0]]
    for prev, b in zip(bits, bits[1:]):
        out.append(out[-1] + (b != prev))
    return tuple(out)


# -- f family (ascending view) -----------------------------------------------

def map_f(lam: Partition, variant: BVariant) -> SignedPartition:
    asc = lam.ascending()
    a = tuple((x + b) % 2 for x, b in zip(asc, variant.bits(len(asc))))
    if not any(a):
        return SignedPartition(lam, ())
    t = t_of(a)
    return SignedPartition((x + tj for x, tj in zip(asc, t)), conjugate(t))


def map_f_inverse(gamma: SignedPartition) -> Partition:
    if not gamma.negatives:
        return gamma.positives
    u = gamma.positives.ascending()
    v = conjugate(gamma.negatives).ascending()
    if len(v) > len(u):
        raise BijectionError(
            f"{gamma}: a negative part exceeds the number of positive parts")
    v = (0,) * (len(u) - len(v)) + v
    lam = [a - b for a, b in zip(u, v)]
    if any(x <= 0 for x in lam):
        raise BijectionError(f"{gamma}: preimage has a nonpositive part")
    if any(b < a for a, b in zip(lam, lam[1:])):
        raise BijectionError(f"{gamma}: preimage is not weakly increasing")
    return Partition(lam)


# -- flags shared by the inverses of h, g, phi -------------------------------

def _odd_flags(neg: Partition, r: int, source: SignedPartition) -> list[int]:
    """f_j = 1 iff 2j - 1 is a negative part, for j = 1..r."""
    parts = neg.descending()
    if len(set(parts)) != len(parts):
        raise BijectionError(f"{source}: repeated negative parts")
    allowed = {2 * j - 1 for j in range(1, r + 1)}
    stray = [v for v in parts if v not in allowed]
    if stray:
        raise BijectionError(
            f"{source}: negative parts {stray} are not odd numbers at most {2 * r - 1}")
    present = set(parts)
    return [int(2 * j - 1 in present) for j in range(1, r + 1)]


def _check_preimage(out: list[int], flags: list[int], parity: Parity,
                    source: SignedPartition) -> Partition:
    if any(x <= 0 for x in out):
        raise BijectionError(f"{source}: preimage has a nonpositive part")
    if any(b >= a for a, b in zip(out, out[1:])):
        raise BijectionError(f"{source}: preimage parts are not strictly decreasing")
    if any(parity_indicator(x, parity) != f for x, f in zip(out, flags)):
        raise BijectionError(f"{source}: preimage parities disagree with the negative parts")
    return Partition(out)


def _suffix_sums(values: list[int]) -> list[int]:
    """s[i] = sum(values[i+1:])."""
    out = [0] * len(values)
    acc = 0
    for i in range(len(values) - 1, -1, -1):
        out[i] = acc
        acc += values[i]
    return out


# -- h -----------------------------------------------------------------------

def map_h(gamma: Partition, parity: Parity = Parity.ODD_IS_1) -> SignedPartition:
    parts = gamma.descending()
    j = len(parts)
    wp = [parity_indicator(x, parity) for x in parts]
    later = _suffix_sums(wp)
    pos = [x + 4 * k - 2 * j - 2 + wp[k - 1] + 2 * later[k - 1]
           for k, x in enumerate(parts, start=1)]
    neg = [2 * k - 1 for k, w in enumerate(wp, start=1) if w]
    if any(x <= 0 for x in pos):
        raise BijectionError(f"{gamma}: image has a nonpositive part")
    return SignedPartition(pos, neg)


def map_h_inverse(pi: SignedPartition, parity: Parity = Parity.ODD_IS_1) -> Partition:
    pos = pi.positives.descending()
    r = len(pos)
    f = _odd_flags(pi.negatives, r, pi)
    later = _suffix_sums(f)
    out = [x - 4 * j + 2 * r + 2 - f[j - 1] - 2 * later[j - 1]
           for j, x in enumerate(pos, start=1)]
    return _check_preimage(out, f, parity, pi)


# -- g -----------------------------------------------------------------------

def map_g(lam: Partition, parity: Parity = Parity.ODD_IS_1) -> SignedPartition:
    parts = lam.descending()
    wp = [parity_indicator(x, parity) for x in parts]
    later = _suffix_sums(wp)
    pos = [x + w + 2 * s for x, w, s in zip(parts, wp, later)]
    neg = [2 * k - 1 for k, w in enumerate(wp, start=1) if w]
    return SignedPartition(pos, neg)


def map_g_inverse(tau: SignedPartition, parity: Parity = Parity.ODD_IS_1) -> Partition:
    pos = tau.positives.descending()
    f = _odd_flags(tau.negatives, len(pos), tau)
    later = _suffix_sums(f)
    out = [x - fj - 2 * s for x, fj, s in zip(pos, f, later)]
    return _check_preimage(out, f, parity, tau)


# -- phi ---------------------------------------------------------------------

def map_phi(lam: Partition, parity: Parity = Parity.ODD_IS_1) -> SignedPartition:
    """Negative part 2i - 1 is attached to the i-th smallest part."""
    parts = lam.descending()
    k = len(parts)
    wp = [parity_indicator(x, parity) for x in parts]
    pos = []
    earlier = 0
    for x, w in zip(parts, wp):
        pos.append(x + w + 2 * earlier)
        earlier += w
    neg = [2 * i - 1 for i in range(1, k + 1) if wp[k - i]]
    return SignedPartition(pos, neg)


def map_phi_inverse(pi: SignedPartition, parity: Parity = Parity.ODD_IS_1) -> Partition:
    pos = pi.positives.descending()
    k = len(pos)
    f = _odd_flags(pi.negatives, k, pi)
    # the j-th largest part carries flag f_{k-j+1}
    flags = [f[k - j] for j in range(1, k + 1)]
    out = []
    earlier = 0
    for x, fl in zip(pos, flags):
        out.append(x - fl - 2 * earlier)
        earlier += fl
    return _check_preimage(out, flags, parity, pi)


# -- map table ---------------------------------------------------------------

class MapId(str, enum.Enum):
    F_P = "F_P"
    F_D = "F_D"
    F_RR1 = "F_RR1"
    F_RR2 = "F_RR2"
    H_GG1 = "H_GG1"
    H_GG2 = "H_GG2"
    G_GG1 = "G_GG1"
    G_GG2 = "G_GG2"
    PHI_LG1 = "PHI_LG1"
    PHI_LG2 = "PHI_LG2"
    H_LG2 = "H_LG2"
    G_LG2 = "G_LG2"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class MapSpec:
    map_id: MapId
    source: ClassId
    target: ClassId
    forward: Callable[[Partition], SignedPartition]
    inverse: Callable[[SignedPartition], Partition]


def _f(variant: BVariant):
    return (lambda lam: map_f(lam, variant)), map_f_inverse


def _parity_pair(fwd, inv, parity: Parity):
    return (lambda x: fwd(x, parity)), (lambda y: inv(y, parity))


_ODD, _EVEN = Parity.ODD_IS_1, Parity.EVEN_IS_1

MAPS: dict[MapId, MapSpec] = {
    spec.map_id: spec for spec in [
        MapSpec(MapId.F_P, ClassId.P, ClassId.P_SIGNED, *_f(BVariant.ZERO_START)),
        MapSpec(MapId.F_D, ClassId.D, ClassId.D_SIGNED, *_f(BVariant.ALL_ZERO)),
        MapSpec(MapId.F_RR1, ClassId.RR1, ClassId.RR1_SIGNED, *_f(BVariant.ZERO_START)),
        MapSpec(MapId.F_RR2, ClassId.RR2, ClassId.RR2_SIGNED, *_f(BVariant.ONE_START)),
        MapSpec(MapId.H_GG1, ClassId.GG1, ClassId.GG1_ANDREWS_SIGNED,
                *_parity_pair(map_h, map_h_inverse, _ODD)),
        MapSpec(MapId.H_GG2, ClassId.GG2, ClassId.GG2_ANDREWS_SIGNED,
                *_parity_pair(map_h, map_h_inverse, _ODD)),
        MapSpec(MapId.G_GG1, ClassId.GG1, ClassId.GG1_PRIME_SIGNED,
                *_parity_pair(map_g, map_g_inverse, _ODD)),
        MapSpec(MapId.G_GG2, ClassId.GG2, ClassId.GG2_PRIME_SIGNED,
                *_parity_pair(map_g, map_g_inverse, _ODD)),
        MapSpec(MapId.PHI_LG1, ClassId.LG1, ClassId.LG1_E_SIGNED,
                *_parity_pair(map_phi, map_phi_inverse, _ODD)),
        MapSpec(MapId.PHI_LG2, ClassId.LG2, ClassId.LG2_T_SIGNED,
                *_parity_pair(map_phi, map_phi_inverse, _ODD)),
        MapSpec(MapId.H_LG2, ClassId.LG2, ClassId.LG2_ANDREWS_SIGNED,
                *_parity_pair(map_h, map_h_inverse, _EVEN)),
        MapSpec(MapId.G_LG2, ClassId.LG2, ClassId.LG2_PRIME_SIGNED,
                *_parity_pair(map_g, map_g_inverse, _EVEN)),
    ]
}


def map_spec(map_id: MapId | str) -> MapSpec:
    try:
        return MAPS[MapId(map_id)]
    except ValueError:
        valid = ", ".join(m.value for m in MapId)
        raise KeyError(f"unknown map {map_id!r}; valid: {valid}") from None


def forward(map_id: MapId | str, lam: Partition) -> SignedPartition:
    """Apply a map, checking source membership before and target membership after."""
    spec = map_spec(map_id)
    if not is_member(spec.source, lam):
        raise BijectionError(f"{lam} is not in {spec.source}")
    image = spec.forward(lam)
    if image.weight != lam.weight:
        raise BijectionError(f"{spec.map_id}: {lam} -> {image} changes the weight")
    if not is_member(spec.target, image):
        raise BijectionError(f"{spec.map_id}: image {image} of {lam} is not in {spec.target}")
    return image


def inverse(map_id: MapId | str, gamma: SignedPartition) -> Partition:
    spec = map_spec(map_id)
    if not is_member(spec.target, gamma):
        raise BijectionError(f"{gamma} is not in {spec.target}")
    pre = spec.inverse(gamma)
    if pre.weight != gamma.weight:
        raise BijectionError(f"{spec.map_id}: {gamma} -> {pre} changes the weight")
    if not is_member(spec.source, pre):
        raise BijectionError(f"{spec.map_id}: preimage {pre} of {gamma} is not in {spec.source}")
    return pre
