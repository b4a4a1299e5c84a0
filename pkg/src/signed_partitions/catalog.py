"""The identity catalog: which classes, maps and product sides go together."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .bijections import MapId
from .classes import ClassId


class IdentityId(str, enum.Enum):
    P_SIGNED = "P_SIGNED"
    D_SIGNED = "D_SIGNED"
    RR1_SIGNED = "RR1_SIGNED"
    RR2_SIGNED = "RR2_SIGNED"
    GG1_ANDREWS = "GG1_ANDREWS"
    GG1_PRIME = "GG1_PRIME"
    GG2_3WAY = "GG2_3WAY"
    GG_DIFF = "GG_DIFF"
    LG1_E = "LG1_E"
    LG2_T = "LG2_T"
    LG1_SHIFT = "LG1_SHIFT"
    LG1_PRIME = "LG1_PRIME"
    LG2_3WAY = "LG2_3WAY"
    LG2_H = "LG2_H"

    def __str__(self) -> str:
        return self.value


# Short names accepted wherever an identity is expected.
ALIASES: dict[str, IdentityId] = {
    "P": IdentityId.P_SIGNED,
    "D": IdentityId.D_SIGNED,
    "RR1": IdentityId.RR1_SIGNED,
    "RR2": IdentityId.RR2_SIGNED,
    "GG1": IdentityId.GG1_ANDREWS,
    "GG2": IdentityId.GG2_3WAY,
    "LG1": IdentityId.LG1_E,
    "LG2": IdentityId.LG2_3WAY,
}


@dataclass(frozen=True)
class IdentityDescriptor:
    identity_id: IdentityId
    label: str
    statement: str
    ordinary: ClassId
    signed: tuple[ClassId, ...]
    maps: tuple[MapId, ...] = ()
    # (modulus, residues) for the product over parts in those classes
    product: Optional[tuple[int, tuple[int, ...]]] = None
    # signed weight = ordinary weight + index_offset
    index_offset: int = 0
    # ordinary count must also equal count(a) - count(b)
    difference_of: Optional[tuple[ClassId, ClassId]] = None


_C, _M = ClassId, MapId

CATALOG: dict[IdentityId, IdentityDescriptor] = {
    d.identity_id: d for d in [
        IdentityDescriptor(
            IdentityId.P_SIGNED, "all partitions, alternating-parity signed form",
            "p(n) = p_-1(n)", _C.P, (_C.P_SIGNED,), (_M.F_P,)),
        IdentityDescriptor(
            IdentityId.D_SIGNED, "distinct parts, even-positive signed form",
            "D(n) = D_-1(n)", _C.D, (_C.D_SIGNED,), (_M.F_D,)),
        IdentityDescriptor(
            IdentityId.RR1_SIGNED, "first Rogers-Ramanujan, signed form",
            "RR1(n) = RR_-1(n) = #parts 1,4 mod 5", _C.RR1, (_C.RR1_SIGNED,), (_M.F_RR1,),
            product=(5, (1, 4))),
        IdentityDescriptor(
            IdentityId.RR2_SIGNED, "second Rogers-Ramanujan, signed form",
            "RR2(n) = RR_-2(n)", _C.RR2, (_C.RR2_SIGNED,), (_M.F_RR2,)),
        IdentityDescriptor(
            IdentityId.GG1_ANDREWS, "first Gollnitz-Gordon, Andrews' signed form",
            "GG1(n) = GG_-1(n) = #parts 1,4,7 mod 8", _C.GG1, (_C.GG1_ANDREWS_SIGNED,),
            (_M.H_GG1,), product=(8, (1, 4, 7))),
        IdentityDescriptor(
            IdentityId.GG1_PRIME, "first Gollnitz-Gordon, difference-4 signed form",
            "GG1(n) = GG'_-1(n) = #parts 1,4,7 mod 8", _C.GG1, (_C.GG1_PRIME_SIGNED,),
            (_M.G_GG1,), product=(8, (1, 4, 7))),
        IdentityDescriptor(
            IdentityId.GG2_3WAY, "second Gollnitz-Gordon, both signed forms",
            "GG2(n) = GG_-2(n) = GG'_-2(n) = #parts 3,4,5 mod 8", _C.GG2,
            (_C.GG2_ANDREWS_SIGNED, _C.GG2_PRIME_SIGNED), (_M.H_GG2, _M.G_GG2),
            product=(8, (3, 4, 5))),
        IdentityDescriptor(
            IdentityId.GG_DIFF, "difference of the two Gollnitz-Gordon counts",
            "GG1(n) - GG2(n) = #GG1 with a part 1 or 2 = signed count", _C.GG_DIFF,
            (_C.GG_DIFF_SIGNED,), difference_of=(_C.GG1, _C.GG2)),
        IdentityDescriptor(
            IdentityId.LG1_E, "first little Gollnitz, even-positive signed form",
            "LG1(n) = E(n)", _C.LG1, (_C.LG1_E_SIGNED,), (_M.PHI_LG1,)),
        IdentityDescriptor(
            IdentityId.LG2_T, "second little Gollnitz, even-positive signed form",
            "LG2(n) = T(n)", _C.LG2, (_C.LG2_T_SIGNED,), (_M.PHI_LG2,)),
        IdentityDescriptor(
            IdentityId.LG1_SHIFT, "first little Gollnitz, odd-positive signed form",
            "LG1(n) = LG_-1(n-1)", _C.LG1, (_C.LG1_SHIFT_SIGNED,), index_offset=-1),
        IdentityDescriptor(
            IdentityId.LG1_PRIME, "first little Gollnitz, 1 mod 4 negatives",
            "LG1(n) = LG'_-1(n)", _C.LG1, (_C.LG1_PRIME_SIGNED,)),
        IdentityDescriptor(
            IdentityId.LG2_3WAY, "second little Gollnitz, both odd-positive signed forms",
            "LG2(n) = LG_-2(n) = LG'_-2(n)", _C.LG2,
            (_C.LG2_ANDREWS_SIGNED, _C.LG2_PRIME_SIGNED), (_M.H_LG2, _M.G_LG2)),
        IdentityDescriptor(
            IdentityId.LG2_H, "second little Gollnitz, 3 mod 4 negatives",
            "LG2(n) = H(n)", _C.LG2, (_C.LG2_H_SIGNED,)),
    ]
}


def resolve_identity(name: IdentityId | str) -> IdentityId:
    if isinstance(name, IdentityId):
        return name
    key = str(name).strip().upper()
    if key in ALIASES:
        return ALIASES[key]
    try:
        return IdentityId(key)
    except ValueError:
        valid = ", ".join([i.value for i in IdentityId] + sorted(ALIASES))
        raise KeyError(f"unknown identity {name!r}; valid: {valid}") from None


def descriptor(name: IdentityId | str) -> IdentityDescriptor:
    return CATALOG[resolve_identity(name)]
