"""Shared per-group artifact cache for the test session.

GroupContext values are expensive (group enumeration, invariants, ideals,
complexes); caching one per catalog entry lets the unit suites and the
acceptance criteria share them within a single pytest run.
"""

from shephardlab.catalog import available, catalog_lookup, entry_metadata
from shephardlab.checks import GroupContext

_CONTEXTS = {}


def ctx_for(key):
    spec = catalog_lookup(key)
    if spec.name not in _CONTEXTS:
        _CONTEXTS[spec.name] = GroupContext(spec)
    return _CONTEXTS[spec.name]


def nonstretch_names():
    return [n for n in available() if not entry_metadata(n)["stretch"]]


def stretch_names():
    return [n for n in available() if entry_metadata(n)["stretch"]]
