import pytest

from girthlab.corpus import groups, load_corpus, load_entry, select, verify_entry

ENTRIES = load_corpus()


def test_groups_and_sizes():
    assert groups() == ["girth10", "girth6-dmin", "me-girth6", "me-girth8", "worked"]
    sizes = {g: len(select(g)) for g in groups()}
    assert sizes == {"girth10": 9, "girth6-dmin": 15, "me-girth6": 5, "me-girth8": 3, "worked": 3}
    assert len({e.id for e in ENTRIES}) == len(ENTRIES)


def test_select_by_id_and_unknown():
    assert [e.id for e in select("g12-3x4-N73")] == ["g12-3x4-N73"]
    with pytest.raises(KeyError):
        select("nothing")


def test_ids_match_shape():
    for e in ENTRIES:
        B = e.matrix
        assert f"{B.m}x{B.n}-N{B.N}" in e.id


def test_load_entry_metadata():
    e = load_entry("# id: x\n# girth: 8\n# dmin: 4\n1 2 3\n0 1\n")
    assert e.id == "x" and e.group == "misc" and e.expected == {"girth": 8, "dmin": 4}


@pytest.mark.parametrize("entry", ENTRIES, ids=lambda e: e.id)
def test_entry_verifies(entry):
    checks = verify_entry(entry, dmin=False)
    assert checks
    for c in checks:
        assert c.passed, c.to_json()


def test_dd_order_note():
    (c,) = [c for c in verify_entry(select("demo-3x4-N37")[0], dmin=False) if c.name == "DD"]
    assert c.passed and c.note == "pairs agree up to component order"


@pytest.mark.parametrize("entry_id", ["g6-4x5-N5-d8", "g6-4x6-N7-d10", "g6-4x6-N7-d8", "g6-4x7-N7-d10",
                                      "g6-4x7-N7-d8", "g6-4x8-N10-d6", "g6-4x8-N10-d8"])
def test_small_dmin_entries_certified(entry_id):
    (c,) = [c for c in verify_entry(select(entry_id)[0], dmin_time=60) if c.name == "dmin"]
    assert c.passed and c.hard, c.to_json()
