import math

import pytest

from latcover.catalog import (
    COVER_4_6,
    COVER_5_6,
    EXPECTED_COUNTS,
    LENGTH3_ENTRY,
    LENGTH4_ENTRIES,
    CatalogEntry,
    canonical_entry,
    column_form,
    entry_from_texts,
    parse,
    parse_subgroup,
    serialize,
    subgroup_text,
    verify_catalog,
)
from latcover.lattices import ZERO, Subgroup, canonicalize, contains, index, is_cover


def test_subgroup_text_roundtrip():
    for text in ("1,0;1,2", "2,0;0,1", "5,0;3,5", "1,2", "0"):
        assert subgroup_text(parse_subgroup(text)) == text


def test_column_form_matches_membership():
    s = canonicalize([(3, 0), (1, 2)])
    a, z, c, b = column_form(s)
    assert z == 0
    # Columns (a, c) and (0, b) must generate the same subgroup.
    assert canonicalize([(a, c), (0, b)]) == s


def test_parse_subgroup_rejects_malformed():
    for bad in ("", "1;2;3", "a,b", "1,1;0,2"):
        with pytest.raises(ValueError):
            parse_subgroup(bad)


def test_canonical_entry_requires_cover():
    with pytest.raises(ValueError):
        canonical_entry((canonicalize([(2, 0), (0, 2)]), ZERO))


def test_catalog_counts(catalog):
    assert len(catalog.entries) == 54
    for k, n in EXPECTED_COUNTS.items():
        assert len(catalog.by_length(k)) == n


def test_known_entries_present(catalog):
    assert catalog.by_length(3) == [entry_from_texts(LENGTH3_ENTRY)]
    four = set(catalog.by_length(4))
    assert four == {entry_from_texts(ts) for ts in LENGTH4_ENTRIES}
    six = set(catalog.by_length(6))
    assert entry_from_texts(COVER_4_6) in six
    assert entry_from_texts(COVER_5_6) in six


def test_index_profiles_of_distinguished_entries():
    assert entry_from_texts(COVER_4_6).indices == (4, 4, 4, 4, 4, 4)
    assert entry_from_texts(COVER_5_6).indices == (5, 5, 5, 5, 5, 5)
    assert entry_from_texts(LENGTH3_ENTRY).indices == (2, 2, 2)


def test_verify_catalog_all_pass(catalog):
    results = verify_catalog(catalog)
    failed = [r for r in results if not r.ok]
    assert not failed, [f"{r.name}: {r.detail}" for r in failed]


def test_serialize_parse_roundtrip(catalog):
    text = serialize(catalog)
    again = parse(text)
    assert again.entries == catalog.entries
    assert serialize(again) == text


def test_parse_reports_line_number():
    with pytest.raises(ValueError, match="line 2"):
        parse("len=3 | 1,0;0,2 | 1,0;1,2 | 2,0;0,1\nlen=3 | nonsense\n")
    with pytest.raises(ValueError, match="line 1"):
        parse("len=4 | 1,0;0,2 | 1,0;1,2 | 2,0;0,1\n")


def test_query_interface(catalog):
    big = catalog.query(lambda ln, idx: ln == 6 and all(i >= 4 for i in idx))
    assert {e.text() for e in big} == {
        entry_from_texts(COVER_4_6).text(),
        entry_from_texts(COVER_5_6).text(),
    }


def _index_q_sublattices(s: Subgroup, q: int):
    """The q + 1 sublattices of index q inside a rank-2 subgroup."""
    g1, g2 = s.gens
    subs = [canonicalize([g1, (q * g2[0], q * g2[1])])]
    for k in range(q):
        subs.append(
            canonicalize(
                [(q * g1[0], q * g1[1]), (g2[0] + k * g1[0], g2[1] + k * g1[1])]
            )
        )
    return subs


def test_entries_are_replacement_minimal_for_small_primes(catalog):
    # Replacing any component with any proper sublattice of prime index
    # up to 7 must break the cover.
    for entry in catalog.entries:
        lattices = list(entry.lattices)
        for i, s in enumerate(lattices):
            for q in (2, 3, 5, 7):
                for sub in _index_q_sublattices(s, q):
                    assert index(sub) == q * index(s)
                    replaced = lattices[:i] + [sub] + lattices[i + 1:]
                    assert not is_cover(replaced), (entry.text(), i, q)
