"""The shipped group catalog.

Each catalog entry is a JSON document holding the generator matrices of one
reflection group as cyclotomic coefficient vectors, together with metadata
(symbol, field order, degrees).  Matrices are data, not derivation: the test
suite re-verifies the presentation, the group order against the degree
product, and the reflection count for every entry.

Schema (validated on load):

    {
      "name":        str, canonical key,
      "aliases":     [str, ...],
      "family":      "wreath" | "coxeter" | "shephard-exceptional",
      "symbol":      str, e.g. "3[3]3",
      "field_order": int n >= 1,
      "rank":        int,
      "degrees":     [int, ...] ascending, one per rank,
      "order":       int, product of the degrees,
      "stretch":     bool, true for the large complex-only entries,
      "generators":  rank matrices; each is rank x rank; each entry is a list
                     of phi(n) rational-number strings, the power-basis
                     coordinates of the matrix entry in Q(zeta_n)
    }
"""

import json
import os

from .field import Cyclotomic, Rational, euler_phi
from .linalg import MatrixExact
from .symbols import parse_symbol
from .groups import GroupSpec

CATALOG_DIR = os.path.join(os.path.dirname(__file__), "catalog")

FAMILIES = ("wreath", "coxeter", "shephard-exceptional")


class UnknownGroup(KeyError):
    def __init__(self, key, available):
        self.key = key
        self.available = available
        super().__init__(
            "unknown group %r; available: %s" % (key, ", ".join(available)))


class CatalogFormatError(ValueError):
    pass


def _check(cond, msg):
    if not cond:
        raise CatalogFormatError(msg)


def validate_entry(doc):
    for key in ("name", "family", "symbol", "field_order", "rank", "degrees",
                "order", "generators"):
        _check(key in doc, "missing field %r" % key)
    _check(doc["family"] in FAMILIES, "bad family %r" % doc["family"])
    sym = parse_symbol(doc["symbol"])
    rank = doc["rank"]
    _check(sym.rank == rank, "symbol rank disagrees with rank field")
    n = doc["field_order"]
    _check(isinstance(n, int) and n >= 1, "bad field order")
    degrees = doc["degrees"]
    _check(len(degrees) == rank, "need one degree per rank")
    _check(list(degrees) == sorted(degrees), "degrees must be ascending")
    prod = 1
    for d in degrees:
        prod *= d
    _check(prod == doc["order"], "order is not the product of the degrees")
    phi = euler_phi(n)
    gens = doc["generators"]
    _check(len(gens) == rank, "need one generator per rank")
    for g in gens:
        _check(len(g) == rank and all(len(row) == rank for row in g),
               "generator is not rank x rank")
        for row in g:
            for entry in row:
                _check(len(entry) == phi,
                       "coefficient vector length != phi(n)")


def _decode_matrix(n, rows):
    out = []
    for row in rows:
        out_row = []
        for entry in row:
            coeffs = tuple(Rational(s) for s in entry)
            out_row.append(Cyclotomic(n, coeffs))
        out.append(out_row)
    return MatrixExact(n, out)


def encode_matrix(m):
    return [[[str(c) for c in entry.coeffs] for entry in row]
            for row in m.entries]


def _spec_from_doc(doc):
    validate_entry(doc)
    n = doc["field_order"]
    gens = [_decode_matrix(n, g) for g in doc["generators"]]
    return GroupSpec(
        name=doc["name"],
        symbol=parse_symbol(doc["symbol"]),
        field_order=n,
        generators=gens,
        known_degrees=doc["degrees"],
        family=doc["family"],
        aliases=doc.get("aliases", ()),
        stretch=doc.get("stretch", False),
    )


_DOCS = None
_ALIAS = None


def _load_all():
    global _DOCS, _ALIAS
    if _DOCS is not None:
        return
    docs = {}
    for fname in sorted(os.listdir(CATALOG_DIR)):
        if not fname.endswith(".json"):
            continue
        with open(os.path.join(CATALOG_DIR, fname)) as fh:
            doc = json.load(fh)
        validate_entry(doc)
        docs[doc["name"]] = doc
    alias = {}
    for name, doc in docs.items():
        alias[name] = name
        for a in doc.get("aliases", ()):
            if a in alias:
                raise CatalogFormatError("duplicate catalog key %r" % a)
            alias[a] = name
    _DOCS, _ALIAS = docs, alias


def available():
    """Canonical entry names, ordered by (rank, order, name)."""
    _load_all()
    return sorted(_DOCS, key=lambda k: (_DOCS[k]["rank"], _DOCS[k]["order"], k))


def entry_metadata(name):
    _load_all()
    return dict(_DOCS[name])


def catalog_lookup(key):
    """Resolve a catalog key (canonical name or alias) to a GroupSpec."""
    _load_all()
    name = _ALIAS.get(key.strip())
    if name is None:
        raise UnknownGroup(key, available())
    return _spec_from_doc(_DOCS[name])
