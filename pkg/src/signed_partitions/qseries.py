"""Exact truncated q-series and the sum and product sides of each identity.

Every term of a sum side is a monomial q^s, a finite product of factors
(1 + q^e) where some exponents may be negative, and 1/(q^2;q^2)_m.  The
monomial is folded into the finite product before any truncation, so the
Laurent part only ever exists inside :func:`term_series`.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Union

from .catalog import CATALOG, IdentityId, resolve_identity


class ProductNotStated(LookupError):
    """No product side is available for this identity."""


class Sign(enum.Enum):
    PLUS = 1
    MINUS = -1


@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficients c[0..N] of a power series in q."""

    coefficients: tuple[int, ...]

    def __init__(self, coefficients: Iterable[int]):
        coeffs = tuple(int(c) for c in coefficients)
        if not coeffs:
            raise ValueError("a truncated series needs at least c[0]")
        object.__setattr__(self, "coefficients", coeffs)

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls([0] * (order + 1))

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls([1] + [0] * order)

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, i):
        return self.coefficients[i]

    def __len__(self) -> int:
        return len(self.coefficients)

    def __iter__(self):
        return iter(self.coefficients)

    def _same_order(self, other: "TruncatedSeries") -> None:
        if not isinstance(other, TruncatedSeries):
            raise TypeError(f"expected TruncatedSeries, got {type(other).__name__}")
        if other.order != self.order:
            raise ValueError(f"truncation orders differ: {self.order} != {other.order}")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._same_order(other)
        return TruncatedSeries(a + b for a, b in zip(self, other))

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._same_order(other)
        return TruncatedSeries(a - b for a, b in zip(self, other))

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return series_mul(self, other)

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return TruncatedSeries(self.coefficients[: order + 1])

    def to_csv(self) -> str:
        lines = ["n,coefficient"] + [f"{n},{c}" for n, c in enumerate(self)]
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        return json.dumps([str(c) for c in self])


@dataclass(frozen=True)
class LaurentTerm:
    """Finite Laurent polynomial; coefficients[i] belongs to q^(min_exponent + i)."""

    min_exponent: int
    coefficients: tuple[int, ...]

    def as_dict(self) -> dict[int, int]:
        return {self.min_exponent + i: c for i, c in enumerate(self.coefficients) if c}

    def shift(self, s: int) -> "LaurentTerm":
        return LaurentTerm(self.min_exponent + s, self.coefficients)

    def to_series(self, order: int) -> TruncatedSeries:
        if self.min_exponent < 0:
            raise ValueError(f"negative exponent q^{self.min_exponent} left after assembly")
        out = [0] * (order + 1)
        for i, c in enumerate(self.coefficients):
            e = self.min_exponent + i
            if e > order:
                break
            out[e] += c
        return TruncatedSeries(out)


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    a._same_order(b)
    n = a.order
    out = [0] * (n + 1)
    bc = b.coefficients
    for i, x in enumerate(a.coefficients):
        if x:
            for j in range(n + 1 - i):
                out[i + j] += x * bc[j]
    return TruncatedSeries(out)


def _expand_factors(exponents: list[int], sign: Sign,
                    max_exponent: Optional[int] = None) -> LaurentTerm:
    # 1 +/- q^-e = +/-q^-e (1 +/- q^e): pull the monomials out first so that
    # every remaining factor only raises exponents and truncation is exact
    lo = sum(e for e in exponents if e < 0)
    s = sign.value
    scale = s ** sum(1 for e in exponents if e < 0)
    width = sum(abs(e) for e in exponents)
    if max_exponent is not None:
        width = min(width, max_exponent - lo)
    if width < 0:
        return LaurentTerm(lo, ())
    poly = [0] * (width + 1)
    poly[0] = scale
    for e in map(abs, exponents):
        for j in range(width, e - 1, -1):
            poly[j] += s * poly[j - e]
    return LaurentTerm(lo, tuple(poly))


def pochhammer_series(first_exponent: int, step: int, count: int, sign: Sign,
                      order: int, max_exponent: Optional[int] = None,
                      ) -> Union[TruncatedSeries, LaurentTerm]:
    """Expand prod_{i<count} (1 +/- q^(first_exponent + i*step)).

    Returns a :class:`LaurentTerm` when some exponent is negative, otherwise
    a :class:`TruncatedSeries` of the given order.  The Laurent form is
    complete unless ``max_exponent`` is given, in which case exponents
    above it are dropped.
    """
    if count < 0:
        raise ValueError("count must be nonnegative")
    exponents = [first_exponent + i * step for i in range(count)]
    if any(e < 0 for e in exponents):
        return _expand_factors(exponents, sign, max_exponent)
    out = [1] + [0] * order
    s = sign.value
    for e in exponents:
        if e > order:
            continue
        for j in range(order, e - 1, -1):
            out[j] += s * out[j - e]
    return TruncatedSeries(out)


def inverse_even_pochhammer(count: int, order: int) -> TruncatedSeries:
    """1/(q^2;q^2)_count: partitions into even parts at most 2*count."""
    if count < 0:
        raise ValueError("count must be nonnegative")
    out = [1] + [0] * order
    for i in range(1, count + 1):
        step = 2 * i
        for j in range(step, order + 1):
            out[j] += out[j - step]
    return TruncatedSeries(out)


def inverse_residue_product(modulus: int, residues: Iterable[int], order: int) -> TruncatedSeries:
    """prod over k >= 1 with k mod modulus in residues of 1/(1 - q^k)."""
    allowed = {r % modulus for r in residues}
    out = [1] + [0] * order
    for k in range(1, order + 1):
        if k % modulus in allowed:
            for j in range(k, order + 1):
                out[j] += out[j - k]
    return TruncatedSeries(out)


# -- term shapes per identity ------------------------------------------------

@dataclass(frozen=True)
class TermShape:
    """q^staircase(n) * prod_i (1 + q^(first + i*step)) / (q^2;q^2)_denominator(n)."""

    staircase: Callable[[int], int]
    first: int
    step: int
    count: Callable[[int], int]
    denominator: Callable[[int], int]
    start: int = 0

    def exponents(self, n: int) -> list[int]:
        return [self.first + i * self.step for i in range(self.count(n))]

    def max_negative_total(self, n: int) -> int:
        return -sum(e for e in self.exponents(n) if e < 0)

    def lowest_exponent(self, n: int) -> int:
        return self.staircase(n) - self.max_negative_total(n)


_ident = lambda n: n  # noqa: E731

_NEG_CONSECUTIVE = dict(first=-1, step=-1, count=_ident, denominator=_ident)
_NEG_ODD = dict(first=-1, step=-2, count=_ident, denominator=_ident)

TERM_SHAPES: dict[IdentityId, TermShape] = {
    IdentityId.P_SIGNED: TermShape(lambda n: n * (n + 3) // 2, **_NEG_CONSECUTIVE),
    IdentityId.D_SIGNED: TermShape(lambda n: n * (n + 1), **_NEG_CONSECUTIVE),
    IdentityId.RR1_SIGNED: TermShape(lambda n: n * (3 * n + 1) // 2, **_NEG_CONSECUTIVE),
    IdentityId.RR2_SIGNED: TermShape(lambda n: 3 * n * (n + 1) // 2, **_NEG_CONSECUTIVE),
    IdentityId.GG1_ANDREWS: TermShape(lambda n: 2 * n * n, **_NEG_ODD),
    IdentityId.GG1_PRIME: TermShape(lambda n: 2 * n * n, **_NEG_ODD),
    IdentityId.GG2_3WAY: TermShape(lambda n: 2 * n * n + 2 * n, **_NEG_ODD),
    IdentityId.GG_DIFF: TermShape(lambda n: 2 * n * n, first=-1, step=-2, count=_ident,
                                  denominator=lambda n: n - 1, start=1),
    # ordinary little Gollnitz series: (-q^-1; q^2)_n = (1+q^-1)(1+q)(1+q^3)...
    IdentityId.LG1_E: TermShape(lambda n: n * (n + 1), first=-1, step=2, count=_ident,
                                denominator=_ident),
    IdentityId.LG1_SHIFT: TermShape(lambda n: 2 * n * n + 3 * n + 1, first=-1, step=-2,
                                    count=lambda n: n + 1, denominator=_ident),
    IdentityId.LG1_PRIME: TermShape(lambda n: 4 * n * n - 2 * n, first=-1, step=-4,
                                    count=_ident, denominator=lambda n: 2 * n),
    IdentityId.LG2_T: TermShape(lambda n: 2 * n * n + n, **_NEG_ODD),
    IdentityId.LG2_3WAY: TermShape(lambda n: 2 * n * n + n, **_NEG_ODD),
    IdentityId.LG2_H: TermShape(lambda n: 2 * n * n + n, first=-1, step=4, count=_ident,
                                denominator=lambda n: 2 * n),
}


def staircase_exponent(identity_id: IdentityId | str, n: int) -> int:
    """Exponent of the leading monomial of term ``n``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return TERM_SHAPES[resolve_identity(identity_id)].staircase(n)


def term_series(identity_id: IdentityId | str, n: int, order: int) -> TruncatedSeries:
    shape = TERM_SHAPES[resolve_identity(identity_id)]
    if n < shape.start:
        return TruncatedSeries.zero(order)
    factor = pochhammer_series(shape.first, shape.step, shape.count(n), Sign.PLUS, order,
                               max_exponent=order - shape.staircase(n))
    if isinstance(factor, TruncatedSeries):
        # no negative exponents: fold the monomial in as a shift
        s = shape.staircase(n)
        factor = LaurentTerm(0, factor.coefficients).shift(s)
    else:
        factor = factor.shift(shape.staircase(n))
    numerator = factor.to_series(order)
    return series_mul(numerator, inverse_even_pochhammer(shape.denominator(n), order))


def sum_side(identity_id: IdentityId | str, order: int) -> TruncatedSeries:
    if order < 0:
        raise ValueError("truncation order must be nonnegative")
    ident = resolve_identity(identity_id)
    shape = TERM_SHAPES[ident]
    total = TruncatedSeries.zero(order)
    n = shape.start
    while shape.lowest_exponent(n) <= order:
        total = total + term_series(ident, n, order)
        n += 1
    return total


def product_side(identity_id: IdentityId | str, order: int) -> TruncatedSeries:
    if order < 0:
        raise ValueError("truncation order must be nonnegative")
    desc = CATALOG[resolve_identity(identity_id)]
    if desc.product is None:
        raise ProductNotStated(f"no product side is given for {desc.identity_id}")
    modulus, residues = desc.product
    return inverse_residue_product(modulus, residues, order)
