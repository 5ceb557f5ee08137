"""Parsing and validation of unbranched presentation symbols p0[q0]p1[q1]...

A symbol records the orders p_i of the distinguished generators and the braid
lengths q_i between neighbours.  A bare integer is a rank-1 symbol.
"""

import re


class SymbolError(ValueError):
    pass


class ShephardSymbol:
    __slots__ = ("p", "q")

    def __init__(self, p, q):
        p, q = tuple(p), tuple(q)
        if len(p) == 0:
            raise SymbolError("empty symbol")
        if len(q) != len(p) - 1:
            raise SymbolError("need one braid length per adjacent generator pair")
        for pi in p:
            if pi < 2:
                raise SymbolError("generator order %d < 2" % pi)
        for qi in q:
            if qi < 3:
                raise SymbolError("braid length %d < 3" % qi)
        self.p = p
        self.q = q

    @property
    def rank(self):
        return len(self.p)

    def __eq__(self, other):
        return (isinstance(other, ShephardSymbol)
                and self.p == other.p and self.q == other.q)

    def __hash__(self):
        return hash((self.p, self.q))

    def __str__(self):
        out = [str(self.p[0])]
        for qi, pi in zip(self.q, self.p[1:]):
            out.append("[%d]%d" % (qi, pi))
        return "".join(out)

    def __repr__(self):
        return "ShephardSymbol(p=%r, q=%r)" % (self.p, self.q)


_TOKEN = re.compile(r"^(\d+)((?:\[\d+\]\d+)*)$")
_EDGE = re.compile(r"\[(\d+)\](\d+)")


def parse_symbol(text):
    """Parse 'p0[q0]p1[q1]...' (or a bare integer) into a ShephardSymbol."""
    text = text.strip()
    m = _TOKEN.match(text)
    if not m:
        raise SymbolError("malformed symbol: %r" % text)
    p = [int(m.group(1))]
    q = []
    for qi, pi in _EDGE.findall(m.group(2)):
        q.append(int(qi))
        p.append(int(pi))
    return ShephardSymbol(p, q)
