"""Subsethood measures on blocks and their lifts to equivalence granules.

Block-level measures return exact :class:`~fractions.Fraction` values.  The
granule-level conditional granularity ``G(B|A)`` is the expectation of a
subsethood measure under the meet distribution of ``A`` and ``B``; conditional
fineness is ``m/n - G``.  The two entropy families use floating point.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from .core import Granule, Universe, prob_distribution, whole, _same_universe

__all__ = [
    "MeasureKind",
    "EntropyValue",
    "subsethood",
    "supsethood",
    "mass",
    "conditional_granularity",
    "conditional_fineness",
    "granularity",
    "fineness",
    "are_independent",
    "is_quotient_complement",
    "conditional_fineness_entropy",
    "conditional_granularity_entropy",
    "entropy",
    "co_entropy",
]

ONE = Fraction(1)
ZERO = Fraction(0)


class MeasureKind(enum.Enum):
    SH1 = 1  # |a^c | b| / |X|
    SH2 = 2  # |a & b| / |a|
    SH3 = 3  # |b| / |a | b|
    SH4 = 4  # |a^c| / |a^c | b^c|
    SH5 = 5  # |a^c & b^c| / |b^c|

    @classmethod
    def parse(cls, text: str) -> MeasureKind:
        key = text.strip().upper()
        if key.isdigit():
            key = "SH" + key
        try:
            return cls[key]
        except KeyError:
            raise ValueError(f"unknown measure kind {text!r}; expected sh1..sh5") from None

    def __str__(self) -> str:
        return self.name.lower()


def _ratio(num: int, den: int) -> Fraction:
    # A zero denominator only arises when a is contained in b.
    return ONE if den == 0 else Fraction(num, den)


def subsethood(kind: MeasureKind, b: frozenset[int], a: frozenset[int], u: Universe | int) -> Fraction:
    """Degree to which block ``a`` is included in block ``b``.

    ``u`` is the universe or just its size.  Zero denominators (``a`` empty for
    sh2, ``a = b = X`` for sh4, ``b = X`` for sh5) all imply ``a <= b`` and give 1.
    """
    n = u if isinstance(u, int) else u.n
    if kind is MeasureKind.SH1:
        return Fraction(n - len(a - b), n)
    if kind is MeasureKind.SH2:
        return _ratio(len(a & b), len(a))
    if kind is MeasureKind.SH3:
        return _ratio(len(b), len(a | b))
    if kind is MeasureKind.SH4:
        return _ratio(n - len(a), n - len(a & b))
    if kind is MeasureKind.SH5:
        return _ratio(n - len(a | b), n - len(b))
    raise TypeError(f"not a measure kind: {kind!r}")


def supsethood(kind: MeasureKind, b: frozenset[int], a: frozenset[int], u: Universe | int) -> Fraction:
    return ONE - subsethood(kind, b, a, u)


def mass(a: Granule, b: Granule) -> Fraction:
    """``m/n`` with ``m`` the smaller of the two carrier sizes."""
    u = _same_universe(a, b)
    return Fraction(min(len(a.carrier), len(b.carrier)), u.n)


def conditional_granularity(kind: MeasureKind, b: Granule, a: Granule) -> Fraction:
    """``G(B|A)``: sum over block pairs of ``p(a_i & b_j) * sh(b_j, a_i)``."""
    dist = prob_distribution(a, b)
    n = dist.n
    return sum(
        (p * subsethood(kind, b.blocks[j], a.blocks[i], n) for (i, j), p in dist.nonzero()),
        ZERO,
    )


def conditional_fineness(kind: MeasureKind, b: Granule, a: Granule) -> Fraction:
    return mass(a, b) - conditional_granularity(kind, b, a)


def granularity(kind: MeasureKind, a: Granule) -> Fraction:
    """Unconditional granularity ``G(A) = G(A|{X})``."""
    return conditional_granularity(kind, a, whole(a.universe))


def fineness(kind: MeasureKind, a: Granule) -> Fraction:
    return conditional_fineness(kind, a, whole(a.universe))


def are_independent(a: Granule, b: Granule) -> bool:
    """Every meet probability is zero, i.e. the carriers are disjoint."""
    _same_universe(a, b)
    return a.carrier.isdisjoint(b.carrier)


def is_quotient_complement(b: Granule, a: Granule) -> bool:
    """``b`` is a single block independent of ``a``."""
    return are_independent(a, b) and len(b.blocks) == 1


@dataclass(frozen=True)
class EntropyValue:
    """An entropy in units of the chosen log base.

    ``clamped`` is set when some term had positive mass but zero subsethood;
    such a term contributes ``log n`` instead of diverging.
    """

    value: float
    clamped: bool = False

    def __float__(self) -> float:
        return self.value


def _log(x: Fraction | int, base: float) -> float:
    if isinstance(x, Fraction):
        return _log(x.numerator, base) - _log(x.denominator, base)
    return math.log2(x) if base == 2 else math.log(x, base)


def conditional_fineness_entropy(
    kind: MeasureKind, b: Granule, a: Granule, *, base: float = 2
) -> EntropyValue:
    """``H'(B|A) = -sum p(a_i & b_j) log sh(b_j, a_i)``; zero-mass terms vanish."""
    dist = prob_distribution(a, b)
    n = dist.n
    cap = _log(n, base)
    terms = []
    clamped = False
    for (i, j), p in dist.nonzero():
        sh = subsethood(kind, b.blocks[j], a.blocks[i], n)
        if sh == 0:
            clamped = True
            terms.append(float(p) * cap)
        elif sh != 1:
            terms.append(-float(p) * _log(sh, base))
    return EntropyValue(math.fsum(terms), clamped)


def conditional_granularity_entropy(
    kind: MeasureKind, b: Granule, a: Granule, *, base: float = 2
) -> EntropyValue:
    """``H(B|A) = (m/n) log n - H'(B|A)``."""
    co = conditional_fineness_entropy(kind, b, a, base=base)
    value = float(mass(a, b)) * _log(a.universe.n, base) - co.value
    if -1e-12 < value < 0:
        value = 0.0
    return EntropyValue(value, co.clamped)


def entropy(kind: MeasureKind, a: Granule, *, base: float = 2) -> EntropyValue:
    return conditional_granularity_entropy(kind, a, whole(a.universe), base=base)


def co_entropy(kind: MeasureKind, a: Granule, *, base: float = 2) -> EntropyValue:
    return conditional_fineness_entropy(kind, a, whole(a.universe), base=base)
