"""Univariate polynomials and truncated power series in a formal variable t.

Polynomials are coefficient lists (index = degree) over any exact scalar
type; trailing zeros are stripped by normalize().  Used for Molien series,
graded characters and the rational-function character formula.
"""

from .field import Rational, R0, R1


def normalize(p):
    n = len(p)
    while n and not p[n - 1]:
        n -= 1
    return list(p[:n])


def deg(p):
    p = normalize(p)
    return len(p) - 1


def add(p, q):
    if len(q) > len(p):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] = out[i] + c
    return normalize(out)


def sub(p, q):
    return add(p, [-c for c in q])


def mul(p, q):
    p, q = normalize(p), normalize(q)
    if not p or not q:
        return []
    out = [p[0] * q[0] * 0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                if b:
                    out[i + j] = out[i + j] + a * b
    return normalize(out)


def scale(p, c):
    return normalize([c * a for a in p])


def evaluate(p, x):
    acc = None
    for c in reversed(list(p)):
        acc = c if acc is None else acc * x + c
    return acc if acc is not None else x * 0


def evaluate_one(p):
    """Sum of coefficients (value at t = 1)."""
    acc = None
    for c in p:
        acc = c if acc is None else acc + c
    return acc


def series_inverse(p, trunc):
    """Coefficients of 1/p up to degree trunc; p[0] must be invertible."""
    c0 = p[0]
    inv0 = c0.inverse() if hasattr(c0, "inverse") else 1 / c0
    out = [inv0]
    for m in range(1, trunc + 1):
        acc = None
        for k in range(1, min(m, len(p) - 1) + 1):
            if k < len(p) and p[k]:
                term = p[k] * out[m - k]
                acc = term if acc is None else acc + term
        out.append(-(acc * inv0) if acc is not None else c0 * 0)
    return out


def geometric_product(degrees, trunc):
    """Coefficients of prod_i 1/(1 - t^d_i) up to degree trunc, as Rational."""
    out = [R1] + [R0] * trunc
    for d in degrees:
        for m in range(d, trunc + 1):
            out[m] += out[m - d]
    return out


def binom_series(d, ell, trunc):
    """Coefficients of ((1 - t^(d-1)) / (1 - t))^ell up to trunc, as Rational.

    This is (1 + t + ... + t^(d-2))^ell, the Hilbert series of a complete
    intersection of ell forms of degree d-1.
    """
    base = [R1] * (d - 1) if d >= 2 else [R1] * 0
    if d == 1:
        base = [R0]
    out = [R1]
    for _ in range(ell):
        out = mul(out, base)
    out = list(out) + [R0] * max(0, trunc + 1 - len(out))
    return out[:trunc + 1]


class PowerSeriesTruncation:
    """Rational-coefficient series known up to a stated truncation bound."""

    def __init__(self, coeffs, trunc):
        if len(coeffs) < trunc + 1:
            raise ValueError("coefficient vector shorter than truncation bound")
        self.coeffs = [Rational(c) for c in coeffs[:trunc + 1]]
        self.trunc = trunc

    def __getitem__(self, m):
        if m > self.trunc:
            raise IndexError("degree %d beyond truncation %d" % (m, self.trunc))
        return self.coeffs[m]

    def __eq__(self, other):
        return (isinstance(other, PowerSeriesTruncation)
                and self.trunc == other.trunc and self.coeffs == other.coeffs)

    def __repr__(self):
        return "PowerSeriesTruncation(%r, %d)" % (self.coeffs, self.trunc)


class RationalFunctionInT:
    """Quotient of two t-polynomials; equality by cross-multiplication."""

    def __init__(self, numerator, denominator):
        self.numerator = normalize(numerator)
        self.denominator = normalize(denominator)
        if not self.denominator:
            raise ZeroDivisionError("zero denominator")

    def equals_polynomial(self, p):
        """True iff self == p as rational functions (p a coefficient list)."""
        return mul(p, self.denominator) == self.numerator

    def __eq__(self, other):
        if not isinstance(other, RationalFunctionInT):
            return NotImplemented
        return mul(self.numerator, other.denominator) == \
            mul(other.numerator, self.denominator)

    def __repr__(self):
        return "RationalFunctionInT(%r, %r)" % (self.numerator, self.denominator)


def det_poly_matrix(rows):
    """Determinant of a square matrix whose entries are t-polynomials.

    Cofactor expansion along the first column; fine at reflection-group ranks.
    """
    n = len(rows)
    if n == 0:
        return [R1]
    if n == 1:
        return normalize(rows[0][0])
    acc = None
    for i in range(n):
        if not normalize(rows[i][0]):
            continue
        minor = [r[1:] for k, r in enumerate(rows) if k != i]
        term = mul(rows[i][0], det_poly_matrix(minor))
        if i % 2:
            term = [-c for c in term]
        acc = term if acc is None else add(acc, term)
    return acc if acc is not None else []
