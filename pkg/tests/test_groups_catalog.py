import pytest

from conftest import ctx_for, nonstretch_names, stretch_names

from shephardlab import catalog
from shephardlab.catalog import (CatalogFormatError, UnknownGroup,
                                 catalog_lookup, entry_metadata,
                                 validate_entry)
from shephardlab.groups import verify_presentation


@pytest.mark.parametrize("name", nonstretch_names())
def test_order_matches_degree_product(name):
    ctx = ctx_for(name)
    expected = 1
    for d in ctx.spec.known_degrees:
        expected *= d
    assert len(ctx.group.elements) == expected


@pytest.mark.parametrize("name", nonstretch_names())
def test_presentation_relations(name):
    report = verify_presentation(ctx_for(name).group)
    assert report and all(ok for _, ok in report)


@pytest.mark.parametrize("name", nonstretch_names())
def test_reflection_counts(name):
    ctx = ctx_for(name)
    group = ctx.group
    by_degrees = sum(d - 1 for d in ctx.spec.known_degrees)
    by_hyperplanes = sum(h.order - 1 for h in group.hyperplanes)
    assert len(group.reflections) == by_degrees == by_hyperplanes


def test_stretch_entries_exist():
    assert sorted(stretch_names()) == ["2[4]3[3]3", "3[3]3[3]3"]


def test_alias_lookup():
    assert catalog_lookup("3").name == "C3"
    assert catalog_lookup(" C3 ").name == "C3"


def test_unknown_key():
    with pytest.raises(UnknownGroup):
        catalog_lookup("7[3]7")


def test_available_is_sorted_by_rank_then_order():
    names = catalog.available()
    keys = [(entry_metadata(n)["rank"], entry_metadata(n)["order"])
            for n in names]
    assert keys == sorted(keys)


def test_validate_entry_rejects_corruption():
    doc = entry_metadata("B2")
    bad = dict(doc)
    bad["order"] = doc["order"] + 1
    with pytest.raises(CatalogFormatError):
        validate_entry(bad)
    bad = dict(doc)
    bad["degrees"] = list(reversed(doc["degrees"]))
    with pytest.raises(CatalogFormatError):
        validate_entry(bad)


def test_group_inverse_and_product_tables():
    group = ctx_for("3[3]3").group
    n = len(group.elements)
    for i in range(n):
        assert group.product(i, group.inverses[i]) == 0
    # classes partition the group
    assert sorted(sum(group.classes, [])) == list(range(n))
