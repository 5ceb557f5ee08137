import pytest

from shephardlab.symbols import ShephardSymbol, SymbolError, parse_symbol


def test_parse_round_trip():
    for text in ("3", "2[4]2", "3[3]3", "2[4]3[3]3", "3[6]2", "2[5]2[3]2"):
        sym = parse_symbol(text)
        assert str(sym) == text
        assert parse_symbol(str(sym)) == sym


def test_rank_and_fields():
    sym = parse_symbol("3[4]2[3]2")
    assert sym.rank == 3
    assert sym.p == (3, 2, 2)
    assert sym.q == (4, 3)


def test_bare_integer_is_rank_one():
    sym = parse_symbol("5")
    assert sym.rank == 1 and sym.p == (5,) and sym.q == ()


@pytest.mark.parametrize("bad", ["", "x", "3[3]", "[3]3", "3[3]3[", "3 3"])
def test_malformed_symbols(bad):
    with pytest.raises(SymbolError):
        parse_symbol(bad)


def test_braid_length_floor():
    with pytest.raises(SymbolError):
        parse_symbol("3[2]3")


def test_generator_order_floor():
    with pytest.raises(SymbolError):
        parse_symbol("1[3]3")
    with pytest.raises(SymbolError):
        ShephardSymbol((2, 1), (3,))
