"""Cross-checks enumeration, series and bijections against the catalog.

The three routes share no counting code: series come from
:mod:`.qseries`, counts from :mod:`.classes`, and the bijection sweep only
uses enumeration to list objects before mapping them one by one.
"""

from __future__ import annotations

import dataclasses
import json
from dataclasses import dataclass, field
from typing import Any, Mapping, Optional

from . import classes as cls
from .bijections import MAPS, BijectionError, MapId, forward, inverse, map_spec
from .catalog import CATALOG, IdentityDescriptor, IdentityId, resolve_identity
from .classes import ClassId, ClassSpec, class_spec, enumerate_class, residue_class
from .qseries import product_side, sum_side

PASS, FAIL = "PASS", "FAIL"
WITNESS_LIMIT = 10


@dataclass
class Failure:
    n: int
    oracle_a: str
    oracle_b: str
    value_a: Any
    value_b: Any
    witness: Any = None

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "oracle_a": self.oracle_a,
            "oracle_b": self.oracle_b,
            "value_a": _jsonable(self.value_a),
            "value_b": _jsonable(self.value_b),
            "witness": _jsonable(self.witness),
        }


def _jsonable(v):
    # large counts go out as decimal strings, like series coefficients
    if isinstance(v, int) and not isinstance(v, bool):
        return v if abs(v) < 2**53 else str(v)
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if v is None or isinstance(v, (str, bool)):
        return v
    return str(v)


@dataclass
class VerificationReport:
    identity: str
    check: str
    range: tuple[int, int]
    per_n: dict[int, bool] = field(default_factory=dict)
    failures: list[Failure] = field(default_factory=list)

    @property
    def status(self) -> str:
        return FAIL if self.failures else PASS

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, n: int, ok: bool) -> None:
        self.per_n[n] = self.per_n.get(n, True) and ok

    def fail(self, failure: Failure) -> None:
        self.failures.append(failure)
        self.record(failure.n, False)

    @property
    def first_failure(self) -> Optional[Failure]:
        return min(self.failures, key=lambda f: f.n) if self.failures else None

    def to_dict(self) -> dict:
        return {
            "identity": self.identity,
            "check": self.check,
            "range": list(self.range),
            "status": self.status,
            "failures": [f.to_dict() for f in sorted(self.failures, key=lambda f: f.n)],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def summary(self) -> str:
        lo, hi = self.range
        line = f"{self.status} {self.check:<9} {self.identity:<12} n={lo}..{hi}"
        first = self.first_failure
        if first is not None:
            line += (f"  first failure at n={first.n}: {first.oracle_a}={first.value_a}"
                     f" vs {first.oracle_b}={first.value_b}")
        return line


def _spec_for(class_id: ClassId, overrides: Mapping[ClassId, ClassSpec] | None) -> ClassSpec:
    if overrides and class_id in overrides:
        return overrides[class_id]
    return class_spec(class_id)


def _members_text(members, limit: int = WITNESS_LIMIT) -> list[str]:
    return [str(m) for m in members[:limit]]


def _count_witness(name_a: str, members_a, name_b: str, members_b) -> dict:
    """Members of whichever side is larger, for a count mismatch."""
    if len(members_a) >= len(members_b):
        return {"excess_side": name_a, "members": _members_text(members_a)}
    return {"excess_side": name_b, "members": _members_text(members_b)}


def verify_counts(identity_id: IdentityId | str, n_max: int,
                  overrides: Mapping[ClassId, ClassSpec] | None = None) -> VerificationReport:
    """Counts of the ordinary class against every signed class, n = 0..n_max.

    ``overrides`` swaps in replacement clause records; it is how the
    mutation checks run the same verification on a broken class.
    """
    desc = CATALOG[resolve_identity(identity_id)]
    report = VerificationReport(desc.identity_id.value, "counts", (0, n_max))
    ordinary = _spec_for(desc.ordinary, overrides)
    for n in range(n_max + 1):
        base = enumerate_class(ordinary, n)
        report.record(n, True)
        for sid in desc.signed:
            other = enumerate_class(_spec_for(sid, overrides), n + desc.index_offset)
            if len(other) != len(base):
                report.fail(Failure(
                    n, desc.ordinary.value, f"{sid.value}@{n + desc.index_offset}",
                    len(base), len(other),
                    _count_witness(desc.ordinary.value, base, sid.value, other)))
        if desc.difference_of is not None:
            a_id, b_id = desc.difference_of
            a = enumerate_class(_spec_for(a_id, overrides), n)
            b = enumerate_class(_spec_for(b_id, overrides), n)
            if len(a) - len(b) != len(base):
                extra = sorted(set(a) - set(b) - set(base))
                report.fail(Failure(
                    n, desc.ordinary.value, f"{a_id.value}-{b_id.value}",
                    len(base), len(a) - len(b),
                    {"unexplained": _members_text(extra)} if extra else
                    _count_witness(desc.ordinary.value, base, a_id.value, a)))
    return report


def verify_series(identity_id: IdentityId | str, order: int,
                  count_max: Optional[int] = None,
                  overrides: Mapping[ClassId, ClassSpec] | None = None) -> VerificationReport:
    """Sum-side coefficients against enumeration and, if present, the product side.

    Enumeration is compared for n ≤ min(order, count_max); series against
    series over the whole truncation.
    """
    desc = CATALOG[resolve_identity(identity_id)]
    report = VerificationReport(desc.identity_id.value, "series", (0, order))
    series = sum_side(desc.identity_id, order)
    for n in range(order + 1):
        report.record(n, True)
    if series[0] != (0 if desc.difference_of else 1):
        report.fail(Failure(0, "sum_side", "empty object", series[0],
                            0 if desc.difference_of else 1))
    negative = [n for n, c in enumerate(series) if c < 0]
    for n in negative:
        report.fail(Failure(n, "sum_side", "nonnegativity", series[n], ">= 0"))
    top = order if count_max is None else min(order, count_max)
    classes = [(desc.ordinary, 0)] + [(sid, desc.index_offset) for sid in desc.signed]
    for cid, offset in classes:
        spec = _spec_for(cid, overrides)
        for n in range(top + 1):
            members = enumerate_class(spec, n + offset)
            if len(members) != series[n]:
                report.fail(Failure(n, "sum_side", f"count({cid.value}@{n + offset})",
                                    series[n], len(members), _members_text(members)))
    if desc.product is not None:
        prod = product_side(desc.identity_id, order)
        for n in range(order + 1):
            if prod[n] != series[n]:
                report.fail(Failure(n, "sum_side", "product_side", series[n], prod[n]))
        modulus, residues = desc.product
        restated = residue_class(modulus, residues)
        for n in range(top + 1):
            members = enumerate_class(restated, n)
            if len(members) != prod[n]:
                report.fail(Failure(n, "product_side", f"count({restated.name})",
                                    prod[n], len(members), _members_text(members)))
    if desc.difference_of is not None:
        a_id, b_id = desc.difference_of
        lhs = _sum_side_for_class(a_id, order) - _sum_side_for_class(b_id, order)
        for n in range(order + 1):
            if lhs[n] != series[n]:
                report.fail(Failure(n, f"sum_side({a_id.value})-sum_side({b_id.value})",
                                    "sum_side", lhs[n], series[n]))
    return report


def _sum_side_for_class(class_id: ClassId, order: int):
    for desc in CATALOG.values():
        if desc.ordinary is class_id and desc.index_offset == 0:
            return sum_side(desc.identity_id, order)
    raise KeyError(f"no sum side enumerates {class_id}")


def verify_bijection(map_id: MapId | str, n_max: int) -> VerificationReport:
    """Exhaustive sweep: images land in the target, both roundtrips hold, and
    the image of each weight level is the whole target level."""
    spec = map_spec(map_id)
    report = VerificationReport(spec.map_id.value, "bijection", (0, n_max))
    for n in range(n_max + 1):
        report.record(n, True)
        sources = enumerate_class(spec.source, n)
        targets = enumerate_class(spec.target, n)
        images = set()
        for lam in sources:
            try:
                image = forward(spec.map_id, lam)
                back = inverse(spec.map_id, image)
            except BijectionError as exc:
                report.fail(Failure(n, "forward", "target membership", str(lam), None, str(exc)))
                continue
            if back != lam:
                report.fail(Failure(n, "inverse(forward)", "identity", str(back), str(lam),
                                    str(lam)))
            images.add(image)
        if len(images) != len(sources):
            report.fail(Failure(n, "distinct images", "sources", len(images), len(sources)))
        if images != set(targets):
            missed = sorted(set(targets) - images)
            report.fail(Failure(n, "images", f"{spec.target.value} members",
                                len(images), len(targets), _members_text(missed)))
        for gamma in targets:
            try:
                pre = inverse(spec.map_id, gamma)
                again = forward(spec.map_id, pre)
            except BijectionError as exc:
                report.fail(Failure(n, "inverse", "source membership", str(gamma), None,
                                    str(exc)))
                continue
            if again != gamma:
                report.fail(Failure(n, "forward(inverse)", "identity", str(again), str(gamma),
                                    str(gamma)))
    return report


def verify_identity(identity_id: IdentityId | str, n_max: int = 40, series_max: int = 60,
                    bijection_max: Optional[int] = 35) -> list[VerificationReport]:
    desc = CATALOG[resolve_identity(identity_id)]
    reports = [verify_counts(desc.identity_id, n_max),
               verify_series(desc.identity_id, series_max, count_max=n_max)]
    if bijection_max is not None:
        reports += [verify_bijection(m, bijection_max) for m in desc.maps]
    return reports


def verify_all(n_max: int = 40, series_max: int = 60,
               bijection_max: Optional[int] = 35) -> list[VerificationReport]:
    return [r for ident in IdentityId
            for r in verify_identity(ident, n_max, series_max, bijection_max)]


# -- mutation checks ---------------------------------------------------------

@dataclass(frozen=True)
class Mutation:
    name: str
    identity: IdentityId
    class_id: ClassId
    changes: Mapping[str, Any]

    def spec(self) -> ClassSpec:
        return dataclasses.replace(class_spec(self.class_id), **dict(self.changes))


def _e_without_delta(pos, neg):
    return not pos or min(pos) > 2 * len(neg)


MUTATIONS: tuple[Mutation, ...] = (
    Mutation("GG_-1 negatives not required distinct", IdentityId.GG1_ANDREWS,
             ClassId.GG1_ANDREWS_SIGNED, {"neg_distinct": False}),
    Mutation("p_-1 smallest positive odd instead of even", IdentityId.P_SIGNED,
             ClassId.P_SIGNED, {"alternating": 1}),
    Mutation("RR1 parts only required distinct", IdentityId.RR1_SIGNED,
             ClassId.RR1, {"min_gap": 1}),
    Mutation("E threshold without the delta term", IdentityId.LG1_E,
             ClassId.LG1_E_SIGNED, {"joint": _e_without_delta}),
    Mutation("GG'_-1 positives differ by 2 instead of 4", IdentityId.GG1_PRIME,
             ClassId.GG1_PRIME_SIGNED, {"pos_min_gap": 2}),
    Mutation("H negatives 1 mod 4 instead of 3 mod 4", IdentityId.LG2_H,
             ClassId.LG2_H_SIGNED, {"neg_residues": (4, frozenset({1}))}),
    Mutation("D_-1 negatives allowed up to l+ + 1", IdentityId.D_SIGNED,
             ClassId.D_SIGNED, {"neg_max": lambda k: k + 1}),
    Mutation("LG_-2 positives even instead of odd", IdentityId.LG2_3WAY,
             ClassId.LG2_ANDREWS_SIGNED, {"pos_parity": 0}),
)


def run_mutation(mutation: Mutation, n_max: int = 20) -> VerificationReport:
    return verify_counts(mutation.identity, n_max, overrides={mutation.class_id: mutation.spec()})
