"""Finite scans over residue tuples certifying the congruence facts used
by the covering analysis.

For a parameter tuple t = (t1, t2, t3, t4) the six group elements
(id, R, R^2, S, RS, R^2S conjugated) give rise to linear congruences; the
scans below exhaustively check the claimed bounds on the number of
equivalence classes of their coefficient pairs over small moduli.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

SIGMA_NAMES = ("id", "R", "R2", "S", "RS", "R2S")

#: Exceptional residue tuples mod 3: all five non-identity coefficient
#: pairs vanish exactly on these.
BAD_TUPLES_MOD3 = (
    (0, 1, 0, 1), (0, 2, 0, 2), (1, 1, 1, 1),
    (2, 2, 2, 2), (1, 2, 1, 2), (2, 1, 2, 1),
)

#: Representatives of the classes above, up to negation.
BAD_TUPLE_REPS = ((0, 1, 0, 1), (1, 1, 1, 1), (1, 2, 1, 2))

#: Tuples mod 3 where all five non-identity first coefficients vanish.
TRIPLE_VANISHING_TUPLES = (
    (1, 1, 1, 1), (2, 2, 2, 2), (1, 2, 1, 2), (2, 1, 2, 1),
)


def coefficient_matrix(t):
    """Integer coefficient rows ((p1, p2), (P1, P2)) for each non-identity
    element, in the order R, R^2, S, RS, R^2S.

    (p1, p2) are the x1/x2 coefficients of the first defining congruence
    of the associated lattice and (P1, P2) those of the second.
    """
    t1, t2, t3, t4 = t
    return (
        ((t1 * t2 + t2 * t3 + t3 * t4, t2 * t2 + t2 * t4 + t4 * t4),
         (t1 * t1 + t1 * t3 + t3 * t3, t1 * t2 + t1 * t4 + t3 * t4)),
        ((t1 * t2 + t1 * t4 + t3 * t4, t2 * t2 + t2 * t4 + t4 * t4),
         (t1 * t1 + t1 * t3 + t3 * t3, t1 * t2 + t2 * t3 + t3 * t4)),
        ((t3 * t4 - t1 * t2, t4 * t4 - t2 * t2),
         (t3 * t3 - t1 * t1, t3 * t4 - t1 * t2)),
        ((t1 * t2 + t1 * t4 + t2 * t3, t2 * t2 + 2 * t2 * t4),
         (t1 * t1 + 2 * t1 * t3, t1 * t2 + t1 * t4 + t2 * t3)),
        ((t1 * t4 + t2 * t3 + t3 * t4, t4 * t4 + 2 * t2 * t4),
         (t3 * t3 + 2 * t1 * t3, t1 * t4 + t2 * t3 + t3 * t4)),
    )


def top_pairs(t, n: int):
    """The six (p1, p2) coefficient pairs mod n, identity first."""
    pairs = [(1 % n, 0)]
    pairs.extend(
        (p1 % n, p2 % n) for (p1, p2), _ in coefficient_matrix(t)
    )
    return tuple(pairs)


def bottom_firsts(t, n: int):
    """The five P1 coefficients mod n, in the order R, R^2, S, RS, R^2S."""
    return tuple(bot[0] % n for _, bot in coefficient_matrix(t))


def class_count(pairs, n: int) -> int:
    """Number of low-order pairs plus the number of unit-scaling classes
    among the full-order ones.

    A pair counts as low-order when both coordinates share a factor with
    the modulus; otherwise it opens a new class unless a unit multiple of
    it appeared earlier in the list.
    """
    total = 0
    for i, (p, q) in enumerate(pairs):
        if math.gcd(p, n) != 1 and math.gcd(q, n) != 1:
            total += 1
            continue
        fresh = True
        for j in range(i):
            for k in range(n):
                if (
                    math.gcd(k, n) == 1
                    and k * p % n == pairs[j][0] % n
                    and k * q % n == pairs[j][1] % n
                ):
                    fresh = False
        if fresh:
            total += 1
    return total


def low_order_count(pairs, n: int) -> int:
    return sum(
        1 for p, q in pairs if math.gcd(p, n) != 1 and math.gcd(q, n) != 1
    )


#: Pairs mod 4 whose presence among the unit-scaled full-order pairs is
#: restricted when gcd(t1, t3) is odd.
_BAD_HALF_PAIRS = (((0, 1), (0, 3)), ((2, 1), (2, 3)))
_BAD_LOW_PAIRS = ((2, 0), (0, 2), (0, 0), (2, 2))


def _badness(pairs) -> int:
    """Count of restricted pairs mod 4 as in the exhaustive check: each
    of the two unit-scaling classes {(0,1),(0,3)} and {(2,1),(2,3)} at
    most once, plus every occurrence of a low-order pair.
    """
    counter = 0
    seen_first = seen_second = False
    for p in pairs:
        if not seen_first and p in _BAD_HALF_PAIRS[0]:
            counter += 1
            seen_first = True
        if not seen_second and p in _BAD_HALF_PAIRS[1]:
            counter += 1
            seen_second = True
        if p in _BAD_LOW_PAIRS:
            counter += 1
    return counter


@dataclass
class ScanReport:
    """Outcome of one exhaustive residue scan."""

    name: str
    modulus: int
    clauses: dict[str, bool] = field(default_factory=dict)
    exceptional: list = field(default_factory=list)
    violations: list = field(default_factory=list)
    context: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.clauses.values())

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "modulus": self.modulus,
            "ok": self.ok,
            "clauses": self.clauses,
            "context": {k: list(v) for k, v in self.context.items()},
            "exceptional": [list(t) for t in self.exceptional],
            "violations": [list(v) for v in self.violations],
        }


def scan_pair_classes(x: int) -> ScanReport:
    """Scan all residue tuples mod x in {3, 4, 5} and bound the class
    count of the six coefficient pairs.
    """
    if x not in (3, 4, 5):
        raise ValueError("modulus must be 3, 4 or 5")
    report = ScanReport(name="pair-classes", modulus=x)
    exceptional = []
    z_violations = []
    mod4_shape_violations = []
    badness_violations = []
    for t1 in range(x):
        for t2 in range(x):
            for t3 in range(x):
                for t4 in range(x):
                    t = (t1, t2, t3, t4)
                    if math.gcd(t2, math.gcd(t4, x)) != 1:
                        continue
                    pairs = top_pairs(t, x)
                    count = class_count(pairs, x)
                    if count > 3:
                        exceptional.append(t)
                        if x == 4 and (2, 0) not in pairs:
                            mod4_shape_violations.append(t)
                    if low_order_count(pairs, x) > 1:
                        z_violations.append(t)
                    if x == 4 and math.gcd(t1, math.gcd(t3, 2)) == 1:
                        if _badness(pairs) > 1:
                            badness_violations.append(t)
    report.exceptional = exceptional
    if x == 5:
        report.clauses["no-exceptional-tuples"] = not exceptional
        report.clauses["low-order-at-most-1"] = not z_violations
    elif x == 4:
        report.clauses["exceptional-only-with-(2,0)"] = not mod4_shape_violations
        report.clauses["low-order-at-most-1"] = not z_violations
        report.clauses["badness-at-most-1"] = not badness_violations
        report.violations = mod4_shape_violations + badness_violations
    else:
        bad = set(BAD_TUPLES_MOD3)
        report.clauses["exceptional-set-matches"] = set(exceptional) == bad and len(
            exceptional
        ) == len(bad)
        all_zero = all(
            all(p == (0, 0) for p in top_pairs(t, 3)[1:]) for t in bad
        )
        report.clauses["exceptional-pairs-all-zero"] = all_zero
        z_outside = [t for t in z_violations if t not in bad]
        report.clauses["low-order-at-most-1-outside-exceptional"] = not z_outside
    return report


def scan_lifted_classes(rep) -> ScanReport:
    """For one exceptional representative mod 3, scan all lifts mod 9 of
    the divided-by-3 coefficient pairs and bound their class count.
    """
    rep = tuple(rep)
    if rep not in BAD_TUPLE_REPS:
        raise ValueError(f"{rep} is not one of the scan representatives")
    report = ScanReport(name="lifted-classes", modulus=9, context={"rep": rep})
    violations = []
    for a in range(3):
        for b in range(3):
            for c in range(3):
                for d in range(3):
                    t = (
                        3 * a + rep[0], 3 * b + rep[1],
                        3 * c + rep[2], 3 * d + rep[3],
                    )
                    pairs = [(1, 0)]
                    for (p1, p2), _ in coefficient_matrix(t):
                        pairs.append((p1 // 3 % 3, p2 // 3 % 3))
                    if class_count(pairs, 3) > 3 or low_order_count(pairs, 3) > 1:
                        violations.append(t)
    report.violations = violations
    report.clauses["lifted-class-count-at-most-3"] = not violations
    return report


def scan_first_coefficient_vanishing() -> ScanReport:
    """Count, mod 3, how many of the five non-identity first coefficients
    vanish; the count is 0, 1, 2 or 5, and 5 happens only on a known set.
    """
    report = ScanReport(name="first-coefficient-vanishing", modulus=3)
    count5 = []
    bad_counts = []
    for t1 in range(3):
        for t2 in range(3):
            for t3 in range(3):
                for t4 in range(3):
                    if math.gcd(t1, math.gcd(t3, 3)) != 1:
                        continue
                    if math.gcd(t2, math.gcd(t4, 3)) != 1:
                        continue
                    t = (t1, t2, t3, t4)
                    zeros = sum(
                        1 for p, _ in top_pairs(t, 3)[1:] if p == 0
                    )
                    if zeros in (3, 4):
                        bad_counts.append(t)
                    if zeros == 5:
                        count5.append(t)
    report.clauses["count-in-0-1-2-5"] = not bad_counts
    report.clauses["count-5-set-matches"] = set(count5) == set(
        TRIPLE_VANISHING_TUPLES
    )
    report.violations = bad_counts
    report.exceptional = count5
    return report


def scan_quadratic_forms_mod9() -> ScanReport:
    """Exhaustive check mod 9 of the four quadratic forms
    A = U^2+UV+V^2, B = V^2-U^2, C = U^2+2UV, D = V^2+2UV:
    A never vanishes and at most one of the four vanishes.
    """
    report = ScanReport(name="quadratic-forms", modulus=9)
    violations = []
    for u in range(9):
        for v in range(9):
            if math.gcd(u, math.gcd(v, 3)) != 1:
                continue
            a = (u * u + u * v + v * v) % 9
            b = (v * v - u * u) % 9
            c = (u * u + 2 * u * v) % 9
            d = (v * v + 2 * u * v) % 9
            if a == 0:
                violations.append((u, v, "A"))
            if sum(1 for w in (a, b, c, d) if w == 0) > 1:
                violations.append((u, v, "multiple"))
    report.violations = violations
    report.clauses["A-nonzero"] = not any(v[2] == "A" for v in violations)
    report.clauses["at-most-one-vanishes"] = not any(
        v[2] == "multiple" for v in violations
    )
    return report


def run_all_scans() -> list[ScanReport]:
    reports = [scan_pair_classes(x) for x in (3, 4, 5)]
    reports.extend(scan_lifted_classes(rep) for rep in BAD_TUPLE_REPS)
    reports.append(scan_first_coefficient_vanishing())
    reports.append(scan_quadratic_forms_mod9())
    return reports
