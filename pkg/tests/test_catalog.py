# tests/test_catalog.py
import pytest

from folpol.catalog import ENTRY_BY_NAME, FOLIATIONS, GERMS, find_entry, get_all_entries, get_entry
from folpol.core.exceptions import InvalidInput
from folpol.domain.models import CatalogEntryModel
from folpol.utils.parser import parse_form, parse_poly


def test_names_are_unique():
    assert len(ENTRY_BY_NAME) == len(GERMS) + len(FOLIATIONS)


@pytest.mark.parametrize("entry", GERMS + FOLIATIONS, ids=lambda e: e["name"])
def test_entries_parse(entry):
    CatalogEntryModel(**entry)
    w = parse_form(entry["form"])
    assert not w.is_zero()
    for text in entry.get("curves", []):
        assert not parse_poly(text).is_ground


def test_lookup_normalizes_names():
    assert get_entry("Saddle Node K2")["name"] == "saddle-node-k2"
    assert get_entry("tangent_saddle_node_k1")["kind"] == "germ"
    assert find_entry("nothing here") is None
    with pytest.raises(InvalidInput):
        get_entry("")


def test_filter_by_kind():
    assert len(get_all_entries("germ")) == len(GERMS)
    assert all(e["kind"] == "foliation" for e in get_all_entries("foliation"))
    assert len(get_all_entries()) == len(ENTRY_BY_NAME)
