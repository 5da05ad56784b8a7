"""The catalog of minimal coverings: canonical entries, persistence,
queries and the per-length verification checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .enumeration import CoveringTuple, enumerate_minimal_coverings, precedes
from .lattices import Subgroup, ZERO, canonicalize, density_sum, index, is_cover

#: Expected number of minimal coverings per length.
EXPECTED_COUNTS = {3: 1, 4: 4, 5: 9, 6: 40}


def column_form(s: Subgroup) -> tuple[int, int, int, int]:
    """The column-style canonical basis (a, c), (0, b) of a rank-2
    subgroup, returned as (a, c, b) packed with the zero: (a, 0, c, b).

    This is the basis convention of the display format: the text
    ``a,0;c,b`` denotes the matrix with rows (a, 0) and (c, b), whose
    columns (a, c) and (0, b) generate the subgroup.
    """
    if s.rank != 2:
        raise ValueError("column form requires rank 2")
    (a, _), (c, b) = s.gens
    g = math.gcd(a, c) if c else a
    b2 = b * (a // g)
    if c:
        # Smallest y with (g, y) in the subgroup: solve k*c = g (mod a).
        step = a // math.gcd(a, c)
        k = next(k for k in range(step) if (k * c - g) % a == 0)
        c2 = (b * k) % b2
    else:
        c2 = 0
    return (g, 0, c2, b2)


def subgroup_text(s: Subgroup) -> str:
    """Display form: ``a,0;c,b`` for rank 2, ``u,v`` for rank 1, ``0``."""
    if s.rank == 2:
        a, _, c, b = column_form(s)
        return f"{a},0;{c},{b}"
    if s.rank == 1:
        (u, v), = s.gens
        return f"{u},{v}"
    return "0"


def parse_subgroup(text: str) -> Subgroup:
    """Inverse of :func:`subgroup_text`."""
    text = text.strip()
    if text == "0":
        return ZERO
    rows = text.split(";")
    try:
        if len(rows) == 1:
            u, v = (int(p) for p in rows[0].split(","))
            return canonicalize([(u, v)])
        if len(rows) == 2:
            a, z = (int(p) for p in rows[0].split(","))
            c, b = (int(p) for p in rows[1].split(","))
            if z != 0:
                raise ValueError
            return canonicalize([(a, c), (0, b)])
    except ValueError:
        pass
    raise ValueError(f"malformed subgroup text {text!r}")


@dataclass(frozen=True)
class CatalogEntry:
    """An unordered minimal covering, stored sorted for O(1) equality."""

    lattices: tuple[Subgroup, ...]

    @property
    def length(self) -> int:
        return len(self.lattices)

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(index(s) for s in self.lattices)

    def text(self) -> str:
        parts = " | ".join(subgroup_text(s) for s in self.lattices)
        return f"len={self.length} | {parts}"


def _entry_sort_key(s: Subgroup):
    return (index(s), column_form(s))


def canonical_entry(t: CoveringTuple) -> CatalogEntry:
    """Drop rank-0 slots and sort the lattices into the canonical order."""
    if not is_cover(t):
        raise ValueError("tuple does not cover Z^2")
    lattices = [s for s in t if s.rank != 0]
    if any(s.rank != 2 for s in lattices):
        raise ValueError("nonzero slots must have rank 2")
    lattices.sort(key=_entry_sort_key)
    return CatalogEntry(tuple(lattices))


def entry_from_texts(texts) -> CatalogEntry:
    """Build an entry from display-form lattices, e.g. ``"2,0;0,1"``."""
    return canonical_entry(tuple(parse_subgroup(t) for t in texts))


@dataclass
class Catalog:
    entries: list[CatalogEntry]
    provenance: dict = field(default_factory=dict)

    def by_length(self, k: int) -> list[CatalogEntry]:
        return [e for e in self.entries if e.length == k]

    def query(self, predicate) -> list[CatalogEntry]:
        """Entries whose (length, indices) satisfy ``predicate``."""
        return [e for e in self.entries if predicate(e.length, e.indices)]


def generate_catalog(workers: int = 1) -> Catalog:
    tuples = enumerate_minimal_coverings(workers=workers)
    entries = [canonical_entry(t) for t in tuples]
    entries.sort(key=lambda e: (e.length, e.indices, e.text()))
    return Catalog(entries, provenance={"slots": 6, "workers": workers})


def serialize(catalog: Catalog) -> str:
    return "".join(e.text() + "\n" for e in catalog.entries)


def parse(text: str) -> Catalog:
    """Parse the line format written by :func:`serialize`.

    Raises ValueError naming the offending line number on bad input.
    """
    entries = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        try:
            head, *parts = [p.strip() for p in line.split("|")]
            if not head.startswith("len=") or not parts:
                raise ValueError
            length = int(head[4:])
            entry = entry_from_texts(parts)
            if entry.length != length:
                raise ValueError
        except ValueError as exc:
            raise ValueError(f"line {lineno}: malformed catalog line {line!r}") from exc
        entries.append(entry)
    return Catalog(entries)


# The explicitly known entries, in display form.

LENGTH3_ENTRY = ("2,0;0,1", "1,0;0,2", "1,0;1,2")

LENGTH4_ENTRIES = (
    ("1,0;0,2", "4,0;0,1", "1,0;1,2", "2,0;1,2"),
    ("1,0;0,4", "2,0;0,1", "1,0;1,2", "1,0;2,4"),
    ("1,0;0,2", "2,0;0,1", "1,0;1,4", "1,0;3,4"),
    ("1,0;0,3", "3,0;0,1", "1,0;1,3", "1,0;2,3"),
)

COVER_4_6 = ("1,0;0,4", "4,0;0,1", "1,0;1,4", "1,0;3,4", "1,0;2,4", "2,0;1,2")
COVER_5_6 = ("1,0;0,5", "5,0;0,1", "1,0;1,5", "1,0;4,5", "1,0;2,5", "1,0;3,5")


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


def _pad(entry: CatalogEntry) -> CoveringTuple:
    return entry.lattices + (ZERO,) * (6 - entry.length)


def verify_catalog(catalog: Catalog) -> list[CheckResult]:
    """Run every per-length structural check against the catalog."""
    results: list[CheckResult] = []

    def check(name: str, ok: bool, detail: str = ""):
        results.append(CheckResult(name, ok, detail))

    counts = {k: len(catalog.by_length(k)) for k in (3, 4, 5, 6)}
    check(
        "counts-per-length",
        counts == EXPECTED_COUNTS and len(catalog.entries) == 54,
        f"got {counts}, total {len(catalog.entries)}",
    )

    check(
        "length3-entry",
        catalog.by_length(3) == [entry_from_texts(LENGTH3_ENTRY)],
    )
    expected4 = sorted(
        (entry_from_texts(ts) for ts in LENGTH4_ENTRIES),
        key=lambda e: (e.indices, e.text()),
    )
    got4 = sorted(catalog.by_length(4), key=lambda e: (e.indices, e.text()))
    check("length4-entries", got4 == expected4)

    five = catalog.by_length(5)
    check(
        "length5-no-all-indices-divisible-by-4",
        not [e for e in five if all(i % 4 == 0 for i in e.indices)],
    )
    check(
        "length5-no-index-divisible-by-5",
        not [e for e in five if any(i % 5 == 0 for i in e.indices)],
    )

    six = catalog.by_length(6)
    big = [e for e in six if all(i >= 4 for i in e.indices)]
    expected_big = {entry_from_texts(COVER_4_6), entry_from_texts(COVER_5_6)}
    check(
        "length6-two-entries-all-indices-ge-4",
        len(big) == 2 and set(big) == expected_big,
        f"got {[e.text() for e in big]}",
    )

    def has_large_prime_index(e: CatalogEntry) -> bool:
        return any(
            any(i % p == 0 for p in (5, 7, 11, 13, 17, 19, 23, 29, 31))
            for i in e.indices
        )

    large = [e for e in six if has_large_prime_index(e)]
    check(
        "length6-unique-large-prime-entry",
        large == [entry_from_texts(COVER_5_6)],
        f"got {[e.text() for e in large]}",
    )

    cover_ok = all(is_cover(e.lattices) for e in catalog.entries)
    check("entries-cover", cover_ok)
    check(
        "entries-density-above-1",
        all(1 < density_sum(e.lattices) <= 6 for e in catalog.entries),
    )

    comparable = [
        (i, j)
        for i, a in enumerate(catalog.entries)
        for j, b in enumerate(catalog.entries)
        if i != j and precedes(_pad(a), _pad(b))
    ]
    check("entries-incomparable", not comparable, f"comparable pairs {comparable}")

    return results
