"""Exhaustive enumeration and claim checking on small universes.

Every check walks all operand tuples of a scope, evaluates one quantified
statement and returns a :class:`CheckReport` whose violation certificates carry
the full text form of each operand, so a verdict can be replayed by hand.

Claims carry an *expectation*:

``hold``
    asserted for every instance; any violation makes the verification run fail.
``fail``
    a documented discrepancy probe; a counterexample is the expected outcome.
``info``
    reported for the record only (converse directions and the like).
"""

from __future__ import annotations

import enum
import math
import time
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Callable, Iterable, Iterator, Sequence, TypeVar

from .combinatorics import bell, granule_count, set_partitions, subsets_by_size
from .core import (
    Granule,
    Universe,
    finer_or_equal,
    format_granule,
    format_set,
    make_granule,
    meet,
    prob_distribution,
    quotient_join,
    whole,
)
from .errors import CapExceededError, NoBoundError
from .measures import (
    EntropyValue,
    MeasureKind,
    co_entropy,
    conditional_fineness_entropy,
    conditional_granularity,
    conditional_granularity_entropy,
    granularity,
    mass,
    subsethood,
    supsethood,
)
from .rough import (
    InformationSystem,
    Mode,
    approximate_set,
    base_granule,
    complete_shortcut,
    lower_granule,
    macro_family,
    micro_space,
    pawlak_approximation,
    upper_granule,
)

__all__ = [
    "MAX_N",
    "TOLERANCE",
    "Subject",
    "EnumerationScope",
    "CheckReport",
    "Claim",
    "enumerate_granules",
    "enumerate_triples",
    "brute_bound",
    "check_axiom",
    "check_theorem",
    "axiom_claims",
    "theorem_ids",
    "claims",
    "run_verify",
]

MAX_N = 5
TOLERANCE = 1e-9
MAX_CERTIFICATES = 25

T = TypeVar("T")


class Subject(enum.Enum):
    SUBSETS = "subsets"
    GRANULES = "granules"
    QUOTIENT = "quotient_granules"
    TRIPLES = "triples"


@dataclass(frozen=True)
class EnumerationScope:
    n: int
    subject: Subject = Subject.GRANULES

    def __post_init__(self) -> None:
        object.__setattr__(self, "subject", Subject(self.subject))
        if not 1 <= self.n <= MAX_N:
            raise CapExceededError(f"enumeration scope limited to 1 <= n <= {MAX_N}, got {self.n}")

    @property
    def expected_count(self) -> int:
        """Closed-form size of the scope (nonempty granules only)."""
        if self.subject is Subject.SUBSETS:
            return 2 ** self.n
        if self.subject is Subject.QUOTIENT:
            return bell(self.n)
        if self.subject is Subject.TRIPLES:
            return granule_count(self.n) ** 3
        return granule_count(self.n)

    @property
    def universe(self) -> Universe:
        return Universe.of_size(self.n)


def enumerate_granules(scope: EnumerationScope, *, include_empty: bool = False) -> Iterator[Granule]:
    """Every equivalence granule of the scope exactly once, in canonical order.

    Carriers come by size then lexicographically; partitions of one carrier come
    in restricted-growth-string order.  ``quotient_granules`` restricts to the
    whole universe.  The empty granule is yielded first on request.
    """
    u = scope.universe
    if include_empty:
        yield make_granule((), u)
    if scope.subject is Subject.QUOTIENT:
        carriers: Iterable[frozenset[int]] = [u.full]
    else:
        carriers = subsets_by_size(u.n, nonempty=True)
    for carrier in carriers:
        for blocks in set_partitions(sorted(carrier)):
            yield make_granule(blocks, u)


def enumerate_triples(scope: EnumerationScope) -> Iterator[tuple[Granule, Granule, Granule]]:
    granules = list(enumerate_granules(EnumerationScope(scope.n, Subject.GRANULES)))
    return product(granules, repeat=3)


def brute_bound(
    a: T,
    family: Sequence[T],
    leq: Callable[[T, T], bool] = lambda x, y: x <= y,
) -> tuple[T, T]:
    """Greatest member of ``family`` below ``a`` and least member above it, by linear scan.

    Raises :class:`NoBoundError` (with ``side`` set) when either bound is missing.
    """
    return _scan_bound(a, family, leq, below=True), _scan_bound(a, family, leq, below=False)


def _scan_bound(a, family, leq, *, below: bool):
    if below:
        candidates = [x for x in family if leq(x, a)]
        order = leq
    else:
        candidates = [x for x in family if leq(a, x)]
        order = lambda x, y: leq(y, x)  # noqa: E731
    side = "lower" if below else "upper"
    if not candidates:
        raise NoBoundError(f"no family member is {'below' if below else 'above'} the target", side=side)
    best = candidates[0]
    for x in candidates[1:]:
        if order(best, x):
            best = x
    if not all(order(x, best) for x in candidates):
        raise NoBoundError(f"the {side} candidates have no extremal member", side=side)
    return best


# -- reports ------------------------------------------------------------------------


@dataclass
class CheckReport:
    claim: str
    scope: dict
    instances: int = 0
    violations: list[dict] = field(default_factory=list)
    violation_count: int = 0
    expectation: str = "hold"
    notes: list[str] = field(default_factory=list)
    extras: dict = field(default_factory=dict)
    wall_time: float = 0.0

    @property
    def status(self) -> str:
        if self.violation_count == 0:
            return "pass"
        return "flagged" if self.expectation == "info" else "fail"

    @property
    def ok(self) -> bool:
        """Whether the outcome matches the expectation."""
        if self.expectation == "hold":
            return self.violation_count == 0
        if self.expectation == "fail":
            return self.violation_count > 0
        return True

    @property
    def must_pass(self) -> bool:
        return self.expectation == "hold"

    def verdict(self) -> str:
        if self.expectation == "fail":
            return "expected-fail" if self.violation_count else "unexpected-pass"
        return self.status

    def record(self, certificate: dict) -> None:
        self.violation_count += 1
        if len(self.violations) < MAX_CERTIFICATES:
            self.violations.append(certificate)

    def to_dict(self) -> dict:
        return {
            "claim": self.claim,
            "scope": self.scope,
            "instances": self.instances,
            "status": self.status,
            "expectation": self.expectation,
            "verdict": self.verdict(),
            "violation_count": self.violation_count,
            "violations": self.violations,
            "notes": self.notes,
            "extras": self.extras,
            "wall_time": round(self.wall_time, 6),
        }

    def line(self) -> str:
        return (
            f"{self.verdict().upper():15s} {self.claim:40s} "
            f"instances={self.instances} violations={self.violation_count}"
        )


def _show(v) -> str:
    if isinstance(v, EntropyValue):
        return f"{v.value:.12g}" + (" (clamped)" if v.clamped else "")
    if isinstance(v, float):
        return f"{v:.12g}"
    return str(v)


def _cert(**items) -> dict:
    return {k: format_granule(v) if isinstance(v, Granule) else _show(v) for k, v in items.items()}


# -- precomputed tables -------------------------------------------------------------

TARGETS = ("G", "F", "H", "H'")
INCREASING = {"G": True, "H": True, "F": False, "H'": False}


class Tables:
    """Pairwise operation and measure tables for one scope."""

    def __init__(self, n: int, subject: Subject = Subject.GRANULES, include_empty: bool = False):
        self.n = n
        self.subject = Subject(subject)
        scope = EnumerationScope(n, Subject.QUOTIENT if self.subject is Subject.QUOTIENT else Subject.GRANULES)
        self.universe = scope.universe
        self.granules = list(enumerate_granules(scope, include_empty=include_empty))
        self.index = {g: i for i, g in enumerate(self.granules)}
        gs = self.granules
        r = range(len(gs))
        self.leq = [[finer_or_equal(gs[i], gs[j]) for j in r] for i in r]
        self.disjoint = [[gs[i].carrier.isdisjoint(gs[j].carrier) for j in r] for i in r]
        self.mass = [[mass(gs[i], gs[j]) for j in r] for i in r]
        self._meet: dict[tuple[int, int], Granule] = {}
        self._join: dict[tuple[int, int], Granule] = {}
        self._values: dict[tuple[str, MeasureKind], list[list]] = {}
        self.log_n = math.log2(n)

    def __len__(self) -> int:
        return len(self.granules)

    def meet(self, i: int, j: int) -> Granule:
        key = (i, j)
        if key not in self._meet:
            self._meet[key] = meet(self.granules[i], self.granules[j])
        return self._meet[key]

    def join(self, i: int, j: int) -> Granule:
        key = (i, j)
        if key not in self._join:
            self._join[key] = quotient_join(self.granules[i], self.granules[j])
        return self._join[key]

    def values(self, target: str, kind: MeasureKind) -> list[list]:
        """``v[x][y]`` is the target measure of granule x conditioned on granule y."""
        key = (target, kind)
        if key not in self._values:
            gs = self.granules
            r = range(len(gs))
            if target == "G":
                table = [[conditional_granularity(kind, gs[x], gs[y]) for y in r] for x in r]
            elif target == "F":
                g = self.values("G", kind)
                table = [[self.mass[y][x] - g[x][y] for y in r] for x in r]
            elif target == "H'":
                table = [[conditional_fineness_entropy(kind, gs[x], gs[y]) for y in r] for x in r]
            elif target == "H":
                table = [[conditional_granularity_entropy(kind, gs[x], gs[y]) for y in r] for x in r]
            else:
                raise ValueError(f"unknown target {target!r}")
            self._values[key] = table
        return self._values[key]

    def numeric(self, target: str, kind: MeasureKind) -> list[list]:
        table = self.values(target, kind)
        if target in ("H", "H'"):
            return [[v.value for v in row] for row in table]
        return table

    def top(self, target: str, x: int, y: int):
        """Largest attainable value of the target for the pair: m/n or (m/n) log n."""
        m = self.mass[x][y]
        if target in ("G", "F"):
            return m
        return float(m) * self.log_n


@lru_cache(maxsize=16)
def tables(n: int, subject: Subject | str = Subject.GRANULES) -> Tables:
    return Tables(n, Subject(subject))


def _eq(x, y) -> bool:
    if isinstance(x, (float, EntropyValue)) or isinstance(y, (float, EntropyValue)):
        return abs(float(x) - float(y)) <= TOLERANCE
    return x == y


def _le(x, y) -> bool:
    if isinstance(x, (float, EntropyValue)) or isinstance(y, (float, EntropyValue)):
        return float(x) <= float(y) + TOLERANCE
    return x <= y


# -- axioms -------------------------------------------------------------------------

BOUNDARY = {"A1", "A2"}
MONOTONE = [f"A{i}" for i in range(3, 13)]
AXIOMS = ["A1", "A2", *MONOTONE]


def _parse_axiom(axiom: str) -> tuple[str, bool]:
    text = axiom.strip().replace("′", "'")
    primed = text.endswith("'")
    base = text.rstrip("'").upper()
    if base not in AXIOMS:
        raise ValueError(f"unknown axiom {axiom!r}")
    return base, primed


def _premise(base: str, t: Tables, a: int, b: int, c: int) -> bool:
    """Extra premise of a monotone axiom beyond ``C >= B``."""
    if base in ("A3", "A4"):
        return True
    if base in ("A5", "A6"):
        return t.meet(b, a) == t.meet(c, a)
    if base in ("A7", "A8"):
        return t.join(b, a) == t.join(c, a)
    if base in ("A9", "A10"):
        return t.leq[a][b]
    return t.leq[b][a] and t.leq[c][a]  # A11, A12: A >= C >= B


def _monotone_violations(base: str, primed: bool, t: Tables, v: list[list]) -> Iterator[tuple[int, int, int, object, object]]:
    """Yield (a, b, c, lhs, rhs) for every triple breaking ``lhs <= rhs``."""
    first_form = int(base[1:]) % 2 == 1  # A3, A5, ... compare sh(., A); A4, A6, ... compare sh(A, .)
    r = range(len(t))
    chains = [(b, c) for b in r for c in r if t.leq[b][c]]
    for a in r:
        for b, c in chains:
            if not _premise(base, t, a, b, c):
                continue
            if first_form:
                lhs, rhs = v[b][a], v[c][a]  # sh(B,A) <= sh(C,A)
            else:
                lhs, rhs = v[a][c], v[a][b]  # sh(A,C) <= sh(A,B)
            if primed:
                lhs, rhs = rhs, lhs
            if not _le(lhs, rhs):
                yield a, b, c, lhs, rhs


def _count_chains(base: str, t: Tables) -> int:
    r = range(len(t))
    return sum(1 for a in r for b in r for c in r if t.leq[b][c] and _premise(base, t, a, b, c))


def _monotone_label(base: str, primed: bool, target: str) -> tuple[str, str]:
    first_form = int(base[1:]) % 2 == 1
    x, y = ("B|A", "C|A") if first_form else ("A|C", "A|B")
    if primed:
        x, y = y, x
    return f"{target}({x})", f"{target}({y})"


def check_axiom(
    axiom: str,
    kind: MeasureKind | str,
    target: str,
    n: int,
    subject: Subject | str = Subject.GRANULES,
) -> CheckReport:
    """Evaluate one axiom for one measure kind and target over a whole scope.

    Unprimed axioms go with the increasing targets ``G`` and ``H``, primed ones
    with ``F`` and ``H'``.  Boundary axioms are asserted only in the directions
    that are claimed for the target; other directions are probed and their
    violations reported under ``extras``.
    """
    kind = MeasureKind.parse(kind) if isinstance(kind, str) else kind
    base, primed = _parse_axiom(axiom)
    if target not in TARGETS:
        raise ValueError(f"unknown target {target!r}")
    if primed == INCREASING[target]:
        raise ValueError(f"axiom {axiom} does not apply to target {target}")
    subject = Subject(subject)
    label = base + ("'" if primed else "")
    start = time.perf_counter()
    t = tables(n, subject)
    report = CheckReport(
        f"axiom:{label}:{target}:{kind}",
        {"n": n, "subject": subject.value, "kind": str(kind), "target": target},
    )
    v = t.values(target, kind)
    num = t.numeric(target, kind)
    if base in BOUNDARY:
        _check_boundary(report, base, target, t, v, num, subject)
    else:
        lhs_name, rhs_name = _monotone_label(base, primed, target)
        gs = t.granules
        report.instances = _count_chains(base, t)
        for a, b, c, lhs, rhs in _monotone_violations(base, primed, t, v):
            report.record(_cert(A=gs[a], B=gs[b], C=gs[c], **{lhs_name: lhs, rhs_name: rhs}))
    report.wall_time = time.perf_counter() - start
    return report


def _check_boundary(report, base, target, t: Tables, v, num, subject: Subject) -> None:
    gs = t.granules
    r = range(len(t))
    entropic = target in ("H", "H'")
    increasing = INCREASING[target]
    if base == "A1":
        # increasing: value = top <=> B >= A; decreasing: value = 0 <=> B >= A
        def hits(a: int, b: int) -> bool:
            return _eq(num[b][a], t.top(target, a, b) if increasing else 0)

        def holds(a: int, b: int) -> bool:
            return t.leq[a][b]

        both = (target == "G") or subject is Subject.QUOTIENT
        condition = "B >= A"
    else:
        # increasing: value = 0 <=> A & B empty; decreasing: value = top <=> A & B empty
        def hits(a: int, b: int) -> bool:
            return _eq(num[b][a], 0 if increasing else t.top(target, a, b))

        def holds(a: int, b: int) -> bool:
            return t.disjoint[a][b]

        both = not entropic
        condition = "A & B empty"
        if entropic:
            report.expectation = "info"
            report.notes.append("not claimed for entropies; probed for the record")
    converse = 0
    converse_certs = []
    for a in r:
        for b in r:
            report.instances += 1
            h, c = hits(a, b), holds(a, b)
            cert = None
            if h != c:
                cert = _cert(A=gs[a], B=gs[b], value=v[b][a], bound=t.top(target, a, b))
                cert["condition"] = f"{condition}: {c}"
            if c and not h:
                report.record(cert)  # forward direction: condition => boundary value
            elif h and not c:
                if both or (base == "A2" and entropic):
                    report.record(cert)
                else:
                    converse += 1
                    if len(converse_certs) < 5:
                        converse_certs.append(cert)
    if not both and not (base == "A2" and entropic):
        report.notes.append("asserted in the forward direction only; converse probed")
        report.extras["converse_violations"] = converse
        report.extras["converse_certificates"] = converse_certs


def axiom_claims() -> list[tuple[str, str]]:
    """(axiom, target) pairs: unprimed for G/H, primed for F/H'."""
    out = []
    for target in TARGETS:
        suffix = "" if INCREASING[target] else "'"
        out.extend((a + suffix, target) for a in AXIOMS)
    return out


# -- theorems -----------------------------------------------------------------------

KINDS = list(MeasureKind)


def _new(claim: str, n: int, subject: Subject, expectation: str = "hold", **scope) -> CheckReport:
    return CheckReport(claim, {"n": n, "subject": subject.value, **scope}, expectation=expectation)


def _pairs(t: Tables) -> Iterator[tuple[int, int]]:
    r = range(len(t))
    return product(r, r)


def _thm_sum_bound(n, subject):
    t = tables(n, subject)
    rep = _new("theorem-4", n, subject)
    for a, b in _pairs(t):
        ga, gb = t.granules[a], t.granules[b]
        dist = prob_distribution(ga, gb)
        rep.instances += 1
        if dist.total > dist.bound:
            rep.record(_cert(A=ga, B=gb, total=dist.total, bound=dist.bound))
    return rep


def _thm_empty_meet(n, subject):
    t = tables(n, subject)
    rep = _new("theorem-5", n, subject)
    for k in KINDS:
        g, f = t.values("G", k), t.values("F", k)
        for a, b in _pairs(t):
            rep.instances += 1
            empty = t.disjoint[a][b]
            if (g[b][a] == 0) != empty or (f[b][a] == t.mass[a][b]) != empty:
                rep.record(_cert(kind=k, A=t.granules[a], B=t.granules[b], G=g[b][a], F=f[b][a], meet_empty=empty))
    return rep


def _thm_range(n, subject):
    t = tables(n, subject)
    rep = _new("theorem-range", n, subject)
    for k in KINDS:
        g, f = t.values("G", k), t.values("F", k)
        for a, b in _pairs(t):
            rep.instances += 1
            if not (0 <= g[b][a] <= t.mass[a][b] <= 1 and 0 <= f[b][a] <= 1):
                rep.record(_cert(kind=k, A=t.granules[a], B=t.granules[b], G=g[b][a], F=f[b][a]))
    return rep


def _thm_unconditional(n, subject):
    t = tables(n, subject)
    rep = _new("theorem-6", n, subject)
    top = t.index[whole(t.universe)]
    for k in KINDS:
        g = t.values("G", k)
        for a, ga in enumerate(t.granules):
            rep.instances += 1
            value = granularity(k, ga)
            expected = g[a][top]
            if k is MeasureKind.SH2 and ga.is_quotient:
                expected_closed = sum((Fraction(len(x), n) ** 2 for x in ga.blocks), Fraction(0))
            else:
                expected_closed = expected
            if value != expected or value != expected_closed:
                rep.record(_cert(kind=k, A=ga, granularity=value, conditional=expected))
    return rep


def _thm_finer_granularity(n, subject):
    t = tables(n, subject)
    rep = _new("theorem-7", n, subject)
    for k in KINDS:
        g = t.values("G", k)
        for a, b in _pairs(t):
            rep.instances += 1
            if (g[b][a] == t.mass[a][b]) != t.leq[a][b]:
                rep.record(_cert(kind=k, A=t.granules[a], B=t.granules[b], G=g[b][a], bound=t.mass[a][b], A_finer=t.leq[a][b]))
    return rep


def _thm_printed_fineness(n, subject):
    t = tables(n, subject)
    rep = _new("theorem-7-printed-F", n, subject, expectation="fail")
    rep.notes.append("printed value F = 1 - m/n for A finer than B; conflicts with F = m/n - G")
    for k in KINDS:
        f = t.values("F", k)
        for a, b in _pairs(t):
            rep.instances += 1
            if (f[b][a] == 1 - t.mass[a][b]) != t.leq[a][b]:
                rep.record(_cert(kind=k, A=t.granules[a], B=t.granules[b], F=f[b][a], printed=1 - t.mass[a][b], A_finer=t.leq[a][b]))
    return rep


def _thm_fineness_zero(n, subject):
    t = tables(n, subject)
    rep = _new("theorem-7-F", n, subject)
    rep.notes.append("A finer than B => F(B|A) = 0; converse probed")
    converse = 0
    for k in KINDS:
        f = t.values("F", k)
        for a, b in _pairs(t):
            rep.instances += 1
            if t.leq[a][b] and f[b][a] != 0:
                rep.record(_cert(kind=k, A=t.granules[a], B=t.granules[b], F=f[b][a]))
            elif f[b][a] == 0 and not t.leq[a][b]:
                converse += 1
    rep.extras["converse_violations"] = converse
    return rep


def _cor_quotient(n, subject):
    t = tables(n, Subject.QUOTIENT)
    rep = _new("corollary-1", n, Subject.QUOTIENT)
    for k in KINDS:
        g, f = t.values("G", k), t.values("F", k)
        for a, b in _pairs(t):
            rep.instances += 1
            finer = t.leq[a][b]
            if (g[b][a] == 1) != finer or (f[b][a] == 0) != finer:
                rep.record(_cert(kind=k, A=t.granules[a], B=t.granules[b], G=g[b][a], F=f[b][a], A_finer=finer))
    return rep


def _thm_independence(n, subject):
    t = tables(n, subject)
    rep = _new("theorem-8", n, subject)
    for k in KINDS:
        g, f = t.values("G", k), t.values("F", k)
        for a, b in _pairs(t):
            rep.instances += 1
            indep = t.disjoint[a][b]
            g_zero = g[b][a] == 0 and g[a][b] == 0
            f_top = f[b][a] == t.mass[a][b] and f[a][b] == t.mass[a][b]
            if g_zero != indep or f_top != indep:
                rep.record(_cert(
                    kind=k, A=t.granules[a], B=t.granules[b],
                    **{"G(B|A)": g[b][a], "G(A|B)": g[a][b], "F(B|A)": f[b][a], "F(A|B)": f[a][b]},
                    independent=indep,
                ))
    return rep


def _merge_steps(t: Tables) -> Iterator[tuple[int, int]]:
    """(B, C) index pairs where C merges exactly two blocks of B."""
    for b, gb in enumerate(t.granules):
        blocks = gb.blocks
        for i in range(len(blocks)):
            for j in range(i + 1, len(blocks)):
                rest = [x for k, x in enumerate(blocks) if k not in (i, j)]
                gc = make_granule([*rest, blocks[i] | blocks[j]], t.universe)
                yield b, t.index[gc]


def _lemma(claim, targets, n, subject, expectation="hold"):
    """Single-merge monotonicity.  ``targets`` maps a target to (first, second) orientation.

    ``first`` compares the target at (B|A) and (C|A); ``second`` at (A|C) and (A|B).
    Each orientation is ``"up"`` (value at B <= value at C, resp. A|C <= A|B) or ``"down"``.
    """
    t = tables(n, subject)
    rep = _new(claim, n, subject, expectation)
    steps = list(_merge_steps(t))
    for target, (first, second) in targets.items():
        for k in KINDS:
            v = t.values(target, k)
            num = t.numeric(target, k)
            for b, c in steps:
                for a in range(len(t)):
                    rep.instances += 1
                    x1, y1 = (num[b][a], num[c][a]) if first == "up" else (num[c][a], num[b][a])
                    x2, y2 = (num[a][c], num[a][b]) if second == "up" else (num[a][b], num[a][c])
                    if not (_le(x1, y1) and _le(x2, y2)):
                        gs = t.granules
                        rep.record(_cert(
                            kind=k, A=gs[a], B=gs[b], C=gs[c],
                            **{f"{target}(B|A)": v[b][a], f"{target}(C|A)": v[c][a],
                               f"{target}(A|B)": v[a][b], f"{target}(A|C)": v[a][c]},
                        ))
    return rep


def _lemma_granularity(n, subject):
    return _lemma("lemma-1", {"G": ("up", "up")}, n, subject)


def _lemma_fineness(n, subject):
    # F(C|A) <= F(B|A) and F(A|B) <= F(A|C), matching the decreasing monotone axioms.
    return _lemma("lemma-2", {"F": ("down", "down")}, n, subject)


def _lemma_fineness_printed(n, subject):
    t = tables(n, subject)
    rep = _new("lemma-2-printed", n, subject, expectation="info")
    rep.notes.append("printed form: F(A|C) <= F(A|B) and F(B|A) <= F(A|C)")
    steps = list(_merge_steps(t))
    for k in KINDS:
        f = t.values("F", k)
        for b, c in steps:
            for a in range(len(t)):
                rep.instances += 1
                if not (f[a][c] <= f[a][b] and f[b][a] <= f[a][c]):
                    gs = t.granules
                    rep.record(_cert(kind=k, A=gs[a], B=gs[b], C=gs[c],
                                     **{"F(A|C)": f[a][c], "F(A|B)": f[a][b], "F(B|A)": f[b][a]}))
    return rep


def _lemma_entropy(n, subject):
    return _lemma("lemma-entropy", {"H": ("up", "up"), "H'": ("down", "down")}, n, subject)


def _monotone_theorem(claim, pairs, n, subject):
    t = tables(n, subject)
    rep = _new(claim, n, subject)
    for axiom, target in pairs:
        base, primed = _parse_axiom(axiom)
        rep.instances += _count_chains(base, t) * len(KINDS)
        lhs_name, rhs_name = _monotone_label(base, primed, target)
        for k in KINDS:
            v = t.values(target, k)
            gs = t.granules
            for a, b, c, lhs, rhs in _monotone_violations(base, primed, t, v):
                rep.record(_cert(axiom=axiom, kind=k, A=gs[a], B=gs[b], C=gs[c], **{lhs_name: lhs, rhs_name: rhs}))
    return rep


def _thm_granularity_monotone(n, subject):
    return _monotone_theorem("theorem-9", [("A3", "G"), ("A4", "G")], n, subject)


def _thm_fineness_monotone(n, subject):
    return _monotone_theorem("theorem-10", [("A3'", "F"), ("A4'", "F")], n, subject)


def _thm_entropy_monotone(n, subject):
    return _monotone_theorem(
        "theorem-entropy-monotone", [("A3", "H"), ("A4", "H"), ("A3'", "H'"), ("A4'", "H'")], n, subject
    )


def _thm_entropy_range(n, subject):
    t = tables(n, subject)
    rep = _new("theorem-entropy-range", n, subject)
    clamped = 0
    for k in KINDS:
        h, hc = t.values("H", k), t.values("H'", k)
        for a, b in _pairs(t):
            rep.instances += 1
            x, y = h[b][a], hc[b][a]
            clamped += y.clamped
            if not (-TOLERANCE <= x.value <= t.log_n + TOLERANCE and -TOLERANCE <= y.value <= t.log_n + TOLERANCE):
                rep.record(_cert(kind=k, A=t.granules[a], B=t.granules[b], H=x, **{"H'": y}))
    rep.extras["clamped_instances"] = clamped
    if clamped:
        rep.notes.append(f"{clamped} instances needed the zero-subsethood clamp")
    return rep


def _entropy_boundary(claim, target, n, subject, *, converse: bool):
    """Forward: B >= A => boundary value.  Converse: boundary => A finer or independent.

    The converse is asserted on quotient granules only; elsewhere it is a probe.
    """
    t = tables(n, subject)
    rep = _new(claim, n, subject, "info" if converse and subject is not Subject.QUOTIENT else "hold")
    for k in KINDS:
        num = t.numeric(target, k)
        v = t.values(target, k)
        for a, b in _pairs(t):
            rep.instances += 1
            at_bound = _eq(num[b][a], t.top(target, a, b) if target == "H" else 0.0)
            if converse:
                bad = at_bound and not (t.leq[a][b] or t.disjoint[a][b])
            else:
                bad = t.leq[a][b] and not at_bound
            if bad:
                rep.record(_cert(kind=k, A=t.granules[a], B=t.granules[b], **{target: v[b][a]},
                                 bound=t.top(target, a, b) if target == "H" else 0.0))
    return rep


def _thm_coentropy_finer(n, subject):
    return _entropy_boundary("theorem-12", "H'", n, subject, converse=False)


def _thm_coentropy_converse(n, subject):
    return _entropy_boundary("theorem-12-converse", "H'", n, subject, converse=True)


def _thm_entropy_finer(n, subject):
    return _entropy_boundary("theorem-13", "H", n, subject, converse=False)


def _thm_entropy_converse(n, subject):
    return _entropy_boundary("theorem-13-converse", "H", n, subject, converse=True)


def _cor_entropy(n, subject):
    t = tables(n, Subject.QUOTIENT)
    rep = _new("corollary-entropy", n, Subject.QUOTIENT)
    for k in KINDS:
        h, hc = t.values("H", k), t.values("H'", k)
        for a, b in _pairs(t):
            rep.instances += 1
            finer = t.leq[a][b]
            top_hit = _eq(h[b][a].value, t.top("H", a, b))
            log_hit = _eq(h[b][a].value, t.log_n)
            zero_hit = _eq(hc[b][a].value, 0.0)
            if not (top_hit == log_hit == zero_hit == finer):
                rep.record(_cert(kind=k, A=t.granules[a], B=t.granules[b], H=h[b][a], **{"H'": hc[b][a]}, A_finer=finer))
    return rep


def shannon_entropy(sizes: Sequence[int]) -> float:
    total = sum(sizes)
    return -math.fsum(s / total * math.log2(s / total) for s in sizes if s)


def _shannon(n, subject):
    rep = _new("shannon-reduction", n, Subject.QUOTIENT, upto=n)
    for size in range(1, n + 1):
        for g in enumerate_granules(EnumerationScope(size, Subject.QUOTIENT)):
            rep.instances += 1
            got = co_entropy(MeasureKind.SH2, g).value
            expected = shannon_entropy([len(b) for b in g.blocks])
            if abs(got - expected) > TOLERANCE:
                rep.record(_cert(A=g, co_entropy=got, shannon=expected))
    return rep


WEAK_OF = {"A3": ["A5", "A7", "A9", "A11"], "A4": ["A6", "A8", "A10", "A12"]}


def _weak_implies_strong(n, subject):
    t = tables(n, subject)
    rep = _new("weak-implies-strong", n, subject)
    for k in KINDS:
        for target in ("G", "F"):
            primed = not INCREASING[target]
            v = t.values(target, k)
            for strong, weaks in WEAK_OF.items():
                strong_hits = {x[:3] for x in _monotone_violations(strong, primed, t, v)}
                for weak in weaks:
                    for a, b, c, *_ in _monotone_violations(weak, primed, t, v):
                        rep.instances += 1
                        if (a, b, c) not in strong_hits:
                            gs = t.granules
                            rep.record(_cert(kind=k, target=target, weak=weak, A=gs[a], B=gs[b], C=gs[c]))
    rep.notes.append("instances = weak-axiom violations inspected")
    return rep


def _duality(n, subject):
    t = tables(n, subject)
    rep = _new("duality", n, subject)
    sets = list(subsets_by_size(n))
    for k in KINDS:
        for a in sets:
            if not a:
                continue
            for b in sets:
                rep.instances += 1
                if subsethood(k, b, a, n) + supsethood(k, b, a, n) != 1:
                    rep.record({"kind": str(k), "a": format_set(a, t.universe), "b": format_set(b, t.universe)})
        g, f = t.values("G", k), t.values("F", k)
        h, hc = t.values("H", k), t.values("H'", k)
        for a, b in _pairs(t):
            rep.instances += 1
            if g[b][a] + f[b][a] != t.mass[a][b] or not _eq(h[b][a].value + hc[b][a].value, t.top("H", a, b)):
                rep.record(_cert(kind=k, A=t.granules[a], B=t.granules[b], G=g[b][a], F=f[b][a]))
    return rep


def _counts(n, subject):
    rep = _new("enumeration-counts", n, Subject.GRANULES, upto=n)
    rows = []
    for size in range(1, n + 1):
        q = sum(1 for _ in enumerate_granules(EnumerationScope(size, Subject.QUOTIENT)))
        g = sum(1 for _ in enumerate_granules(EnumerationScope(size, Subject.GRANULES)))
        distinct = len(set(enumerate_granules(EnumerationScope(size, Subject.GRANULES))))
        rows.append({"n": size, "quotient": q, "granules": g})
        rep.instances += 1
        if q != bell(size) or g != granule_count(size) or distinct != g:
            rep.record({"n": str(size), "quotient": str(q), "granules": str(g), "distinct": str(distinct)})
    rep.extras["counts"] = rows
    return rep


# -- rough-set checks ---------------------------------------------------------------


def _systems(n: int, *, complete: bool) -> Iterator[InformationSystem]:
    """One- and two-attribute systems over the scope's (quotient) granules."""
    t = tables(n, Subject.QUOTIENT if complete else Subject.GRANULES)
    gs = t.granules
    for i, g in enumerate(gs):
        yield InformationSystem.from_granules([g])
        for h in gs[i + 1:]:
            yield InformationSystem.from_granules([g, h])


def _pawlak(n, subject):
    rep = _new("pawlak-equivalence", n, Subject.QUOTIENT)
    sets = list(subsets_by_size(n))
    for sys in _systems(n, complete=True):
        p = base_granule(sys)
        for mode in Mode:
            space = micro_space(sys, mode)
            for s in sets:
                rep.instances += 1
                approx = approximate_set(s, space)
                lower, upper = pawlak_approximation(s, p)
                if approx.lower != lower or approx.upper != upper:
                    u = sys.universe
                    rep.record({
                        "P": format_granule(p), "mode": mode.value, "target": format_set(s, u),
                        "lower": format_set(approx.lower, u),
                        "upper": "absent" if approx.upper is None else format_set(approx.upper, u),
                        "pawlak_lower": format_set(lower, u), "pawlak_upper": format_set(upper, u),
                    })
    return rep


def _bound_or_none(fn):
    try:
        return fn()
    except NoBoundError:
        return None


def _micro_bounds(n, subject):
    rep = _new("micro-bound-oracle", n, Subject.GRANULES)
    sets = list(subsets_by_size(n))
    for sys in _systems(n, complete=False):
        for mode in Mode:
            space = micro_space(sys, mode)
            family = sorted(space.family, key=sorted)
            for s in sets:
                rep.instances += 1
                approx = approximate_set(s, space)
                lower = _bound_or_none(lambda: _scan_bound(s, family, frozenset.__le__, below=True))
                upper = _bound_or_none(lambda: _scan_bound(s, family, frozenset.__le__, below=False))
                if approx.lower != lower or approx.upper != upper:
                    u = sys.universe
                    fmt = lambda x: "absent" if x is None else format_set(x, u)  # noqa: E731
                    rep.record({
                        "system": "; ".join(format_granule(g) for g in sys.granules),
                        "mode": mode.value, "target": format_set(s, u),
                        "lower": fmt(approx.lower), "upper": fmt(approx.upper),
                        "scan_lower": fmt(lower), "scan_upper": fmt(upper),
                    })
    return rep


def _macro_bounds(n, subject):
    rep = _new("macro-bound-oracle", n, Subject.GRANULES)
    t = tables(n, Subject.GRANULES)
    targets = [make_granule((), t.universe), *t.granules]
    for p in t.granules:
        sys = InformationSystem.from_granules([p])
        family = macro_family(sys)
        for a in targets:
            rep.instances += 1
            lo = _bound_or_none(lambda: lower_granule(a, sys))
            hi = _bound_or_none(lambda: upper_granule(a, sys))
            scan_lo = _bound_or_none(lambda: _scan_bound(a, family, finer_or_equal, below=True))
            scan_hi = _bound_or_none(lambda: _scan_bound(a, family, finer_or_equal, below=False))
            if lo != scan_lo or hi != scan_hi:
                fmt = lambda g: "absent" if g is None else format_granule(g)  # noqa: E731
                rep.record({
                    "P": format_granule(p), "A": format_granule(a),
                    "lower": fmt(lo), "upper": fmt(hi), "scan_lower": fmt(scan_lo), "scan_upper": fmt(scan_hi),
                })
    return rep


def _shortcut(n, subject):
    rep = _new("shortcut-vs-formula", n, Subject.QUOTIENT, expectation="fail")
    rep.notes.append("complete-system closed form (A & P, A v_t P) against the lattice-bound formula")
    t = tables(n, Subject.GRANULES)
    quotients = [g for g in t.granules if g.is_quotient]
    agree_upper = 0
    for p in quotients:
        sys = InformationSystem.from_granules([p])
        for a in t.granules:
            rep.instances += 1
            short = complete_shortcut(a, sys)
            lo = _bound_or_none(lambda: lower_granule(a, sys))
            hi = _bound_or_none(lambda: upper_granule(a, sys))
            agree_upper += hi == short.upper
            if lo != short.lower or hi != short.upper:
                fmt = lambda g: "absent" if g is None else format_granule(g)  # noqa: E731
                rep.record({
                    "P": format_granule(p), "A": format_granule(a),
                    "lower": fmt(lo), "upper": fmt(hi),
                    "shortcut_lower": format_granule(short.lower), "shortcut_upper": format_granule(short.upper),
                })
    rep.extras["upper_agreements"] = agree_upper
    return rep


def _atomic_premise(base: str, a: frozenset, b: frozenset, c: frozenset) -> bool:
    if base in ("A3", "A4"):
        return True
    if base in ("A5", "A6"):
        return b & a == c & a
    if base in ("A7", "A8"):
        return b | a == c | a
    if base in ("A9", "A10"):
        return a <= b
    return c <= a  # A11, A12: b <= c <= a


def _atomic_boundary(n, subject):
    """Block level: every kind has sh(b, a) = 1 iff a <= b; only sh2 has sh(b, a) = 0 iff a & b empty."""
    rep = _new("atomic-boundary", n, Subject.SUBSETS)
    u = Universe.of_size(n)
    sets = list(subsets_by_size(n, nonempty=True))
    for k in KINDS:
        for a, b in product(sets, sets):
            rep.instances += 1
            value = subsethood(k, b, a, n)
            bad = (value == 1) != (a <= b)
            if k is MeasureKind.SH2:
                bad = bad or (value == 0) != a.isdisjoint(b)
                bad = bad or (supsethood(k, b, a, n) == 1) != a.isdisjoint(b)
            bad = bad or (supsethood(k, b, a, n) == 0) != (a <= b)
            if bad:
                rep.record({"kind": str(k), "a": format_set(a, u), "b": format_set(b, u), "sh": str(value)})
    return rep


def _atomic_monotone(n, subject):
    """Block level A3..A12 for every kind (the primed forms follow by complement)."""
    rep = _new("atomic-monotone", n, Subject.SUBSETS, expectation="info")
    u = Universe.of_size(n)
    sets = list(subsets_by_size(n, nonempty=True))
    for k in KINDS:
        sh = {(b, a): subsethood(k, b, a, n) for a in sets for b in sets}
        for base in MONOTONE:
            first_form = int(base[1:]) % 2 == 1
            for a, b, c in product(sets, sets, sets):
                if not (b <= c and _atomic_premise(base, a, b, c)):
                    continue
                rep.instances += 1
                lhs, rhs = (sh[b, a], sh[c, a]) if first_form else (sh[a, c], sh[a, b])
                if lhs > rhs:
                    rep.record({"kind": str(k), "axiom": base, "a": format_set(a, u), "b": format_set(b, u),
                                "c": format_set(c, u), "lhs": str(lhs), "rhs": str(rhs)})
    return rep


THEOREMS: dict[str, tuple[Callable[[int, Subject], CheckReport], int]] = {
    # id: (check, largest n it accepts)
    "atomic-boundary": (_atomic_boundary, 5),
    "atomic-monotone": (_atomic_monotone, 4),
    "theorem-4": (_thm_sum_bound, 4),
    "theorem-5": (_thm_empty_meet, 4),
    "theorem-range": (_thm_range, 4),
    "theorem-6": (_thm_unconditional, 4),
    "theorem-7": (_thm_finer_granularity, 4),
    "theorem-7-printed-F": (_thm_printed_fineness, 4),
    "theorem-7-F": (_thm_fineness_zero, 4),
    "corollary-1": (_cor_quotient, 5),
    "theorem-8": (_thm_independence, 4),
    "lemma-1": (_lemma_granularity, 4),
    "lemma-2": (_lemma_fineness, 4),
    "lemma-2-printed": (_lemma_fineness_printed, 4),
    "theorem-9": (_thm_granularity_monotone, 4),
    "theorem-10": (_thm_fineness_monotone, 4),
    "theorem-entropy-range": (_thm_entropy_range, 4),
    "theorem-12": (_thm_coentropy_finer, 4),
    "theorem-12-converse": (_thm_coentropy_converse, 4),
    "theorem-13": (_thm_entropy_finer, 4),
    "theorem-13-converse": (_thm_entropy_converse, 4),
    "corollary-entropy": (_cor_entropy, 5),
    "lemma-entropy": (_lemma_entropy, 4),
    "theorem-entropy-monotone": (_thm_entropy_monotone, 4),
    "shannon-reduction": (_shannon, 5),
    "weak-implies-strong": (_weak_implies_strong, 4),
    "duality": (_duality, 4),
    "enumeration-counts": (_counts, 5),
    "pawlak-equivalence": (_pawlak, 4),
    "micro-bound-oracle": (_micro_bounds, 4),
    "macro-bound-oracle": (_macro_bounds, 4),
    "shortcut-vs-formula": (_shortcut, 4),
}


def theorem_ids() -> list[str]:
    return list(THEOREMS)


def check_theorem(claim: str, n: int, subject: Subject | str = Subject.GRANULES) -> CheckReport:
    """Instantiate one printed theorem, lemma or corollary exhaustively.

    Claims tied to complete systems always run over quotient granules.
    """
    try:
        fn, max_n = THEOREMS[claim]
    except KeyError:
        raise ValueError(f"unknown claim {claim!r}") from None
    if n > max_n:
        raise CapExceededError(f"{claim} is limited to n <= {max_n}")
    start = time.perf_counter()
    report = fn(n, Subject(subject))
    report.wall_time = time.perf_counter() - start
    return report


@dataclass(frozen=True)
class Claim:
    id: str
    run: Callable[[int, Subject], CheckReport]


def claims(kinds: Sequence[MeasureKind] | None = None) -> list[Claim]:
    """Every registered claim: all axiom instances, then theorems and rough-set checks."""
    kinds = list(kinds or KINDS)
    out = []
    for axiom, target in axiom_claims():
        for k in kinds:
            out.append(Claim(
                f"axiom:{axiom}:{target}:{k}",
                lambda n, s, axiom=axiom, target=target, k=k: check_axiom(axiom, k, target, n, s),
            ))
    for claim in THEOREMS:
        out.append(Claim(claim, lambda n, s, claim=claim: check_theorem(claim, min(n, THEOREMS[claim][1]), s)))
    return out


def run_verify(
    n: int,
    selected: Sequence[str] | None = None,
    subject: Subject | str = Subject.GRANULES,
    kinds: Sequence[MeasureKind] | None = None,
) -> list[CheckReport]:
    """Run the selected claims (all by default); ids may be exact or prefixes ending in ':'."""
    registry = claims(kinds)
    if selected:
        chosen = [c for c in registry if any(c.id == s or (s.endswith(":") and c.id.startswith(s)) for s in selected)]
        unknown = [s for s in selected if not any(c.id == s or (s.endswith(":") and c.id.startswith(s)) for c in registry)]
        if unknown:
            raise ValueError(f"unknown claims: {', '.join(unknown)}")
    else:
        chosen = registry
    return [c.run(n, Subject(subject)) for c in chosen]
