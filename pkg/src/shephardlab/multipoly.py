"""Sparse multivariate polynomials over a cyclotomic field.

Terms map exponent tuples to nonzero Cyclotomic coefficients.  The group acts
contragrediently: a matrix g sends f to the polynomial v -> f(g^(-1) v), i.e.
substitutes each variable by the corresponding linear form of g^(-1).

Monomial order is graded lexicographic with x1 > x2 > ... ; degree slices are
enumerated in descending lex order so x1^m comes first.
"""

from .field import Cyclotomic, Rational, R1
from . import tseries


def monomials(nvars, degree):
    """All exponent tuples of the given total degree, descending graded-lex."""
    if nvars == 1:
        return [(degree,)]
    out = []
    for e in range(degree, -1, -1):
        for rest in monomials(nvars - 1, degree - e):
            out.append((e,) + rest)
    return out


def monomial_count(nvars, degree):
    from math import comb
    return comb(degree + nvars - 1, nvars - 1)


class Poly:
    """Sparse polynomial with Cyclotomic coefficients; immutable by convention."""

    __slots__ = ("order", "nvars", "terms")

    def __init__(self, order, nvars, terms=None):
        self.order = order
        self.nvars = nvars
        self.terms = {} if terms is None else terms

    # -- constructors -----------------------------------------------------

    @staticmethod
    def zero(order, nvars):
        return Poly(order, nvars)

    @staticmethod
    def constant(order, nvars, c):
        c = c if isinstance(c, Cyclotomic) else Cyclotomic.from_rational(order, c)
        if not c:
            return Poly(order, nvars)
        return Poly(order, nvars, {(0,) * nvars: c})

    @staticmethod
    def variable(order, nvars, i):
        expt = tuple(1 if j == i else 0 for j in range(nvars))
        return Poly(order, nvars, {expt: Cyclotomic.one(order)})

    @staticmethod
    def monomial(order, nvars, expt, coeff):
        if not coeff:
            return Poly(order, nvars)
        return Poly(order, nvars, {tuple(expt): coeff})

    # -- basic queries ----------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def is_homogeneous(self):
        degs = set(sum(e) for e in self.terms)
        return len(degs) <= 1

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def coefficient(self, expt):
        return self.terms.get(tuple(expt), Cyclotomic.zero(self.order))

    def lead_monomial(self):
        """Largest exponent tuple in graded-lex order."""
        if not self.terms:
            raise ValueError("zero polynomial has no lead monomial")
        d = self.degree()
        return max((e for e in self.terms if sum(e) == d))

    def lead_normalized(self):
        return self.scale(self.terms[self.lead_monomial()].inverse())

    def homogeneous_component(self, m):
        return Poly(self.order, self.nvars,
                    dict((e, c) for e, c in self.terms.items() if sum(e) == m))

    def coefficient_vector(self, basis):
        """Coefficients over an ordered monomial basis (list of exponent tuples)."""
        zero = Cyclotomic.zero(self.order)
        return [self.terms.get(e, zero) for e in basis]

    @staticmethod
    def from_coefficient_vector(order, nvars, basis, vec):
        terms = {}
        for e, c in zip(basis, vec):
            if c:
                terms[e] = c if isinstance(c, Cyclotomic) else \
                    Cyclotomic.from_rational(order, c)
        return Poly(order, nvars, terms)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            s = c if s is None else s + c
            if s:
                out[e] = s
            elif e in out:
                del out[e]
        return Poly(self.order, self.nvars, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Poly(self.order, self.nvars,
                    dict((e, -c) for e, c in self.terms.items()))

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                p = c1 * c2
                s = out.get(e)
                s = p if s is None else s + p
                if s:
                    out[e] = s
                elif e in out:
                    del out[e]
        return Poly(self.order, self.nvars, out)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c):
        if not isinstance(c, Cyclotomic):
            c = Cyclotomic.from_rational(self.order, c)
        if not c:
            return Poly(self.order, self.nvars)
        return Poly(self.order, self.nvars,
                    dict((e, c * v) for e, v in self.terms.items()))

    def __pow__(self, k):
        result = Poly.constant(self.order, self.nvars, R1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        return (isinstance(other, Poly) and self.order == other.order
                and self.nvars == other.nvars and self.terms == other.terms)

    def __hash__(self):
        return hash((self.order, self.nvars, frozenset(self.terms.items())))

    def proportional_to(self, other):
        """True iff self = c * other for some nonzero scalar c (both nonzero),
        or both are zero."""
        if not self.terms and not other.terms:
            return True
        if not self.terms or not other.terms:
            return False
        if set(self.terms) != set(other.terms):
            return False
        e0 = next(iter(self.terms))
        ratio = self.terms[e0] / other.terms[e0]
        return all(c == ratio * other.terms[e] for e, c in self.terms.items())

    # -- rendering --------------------------------------------------------

    VARNAMES = "xyzw"

    def _fmt_monomial(self, e):
        parts = []
        for i, k in enumerate(e):
            if k:
                name = self.VARNAMES[i] if self.nvars <= 4 else "x%d" % (i + 1)
                parts.append(name if k == 1 else "%s^%d" % (name, k))
        return "*".join(parts) if parts else "1"

    def __repr__(self):
        if not self.terms:
            return "0"
        keys = sorted(self.terms, key=lambda e: (sum(e), e), reverse=True)
        parts = []
        for e in keys:
            c = self.terms[e]
            mono = self._fmt_monomial(e)
            if mono == "1":
                parts.append("%r" % c)
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                cs = "%r" % c
                if " " in cs:
                    cs = "(%s)" % cs
                parts.append("%s*%s" % (cs, mono))
        return " + ".join(parts).replace("+ -", "- ")


# -- calculus ------------------------------------------------------------


def partial(f, i):
    """Formal partial derivative with respect to variable i (0-based)."""
    out = {}
    for e, c in f.terms.items():
        k = e[i]
        if k:
            e2 = e[:i] + (k - 1,) + e[i + 1:]
            out[e2] = c * k
    return Poly(f.order, f.nvars, out)


def _poly_det(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    acc = None
    for i in range(n):
        if not rows[i][0]:
            continue
        minor = [r[1:] for k, r in enumerate(rows) if k != i]
        term = rows[i][0] * _poly_det(minor)
        if i % 2:
            term = -term
        acc = term if acc is None else acc + term
    if acc is None:
        return Poly(rows[0][0].order, rows[0][0].nvars)
    return acc


def jacobian(fs):
    """det(d f_i / d x_j) for a square system of polynomials."""
    ell = fs[0].nvars
    if len(fs) != ell:
        raise ValueError("need exactly %d polynomials" % ell)
    rows = [[partial(f, j) for j in range(ell)] for f in fs]
    return _poly_det(rows)


def hessian(f):
    """det of the matrix of second partials."""
    ell = f.nvars
    firsts = [partial(f, i) for i in range(ell)]
    rows = [[partial(g, j) for j in range(ell)] for g in firsts]
    return _poly_det(rows)


# -- group action --------------------------------------------------------


def substitute_linear(f, rows):
    """Substitute x_i -> sum_j rows[i][j] * x_j.  rows: Cyclotomic matrix rows."""
    n = f.nvars
    forms = []
    for i in range(n):
        terms = {}
        for j in range(n):
            if rows[i][j]:
                e = tuple(1 if k == j else 0 for k in range(n))
                terms[e] = rows[i][j]
        forms.append(Poly(f.order, n, terms))
    pow_cache = {}

    def form_power(i, k):
        key = (i, k)
        if key not in pow_cache:
            pow_cache[key] = forms[i] ** k
        return pow_cache[key]

    out = Poly(f.order, n)
    for e, c in f.terms.items():
        term = Poly.constant(f.order, n, R1)
        for i, k in enumerate(e):
            if k:
                term = term * form_power(i, k)
        out = out + term.scale(c)
    return out


def act(g, f):
    """Contragredient action: (g . f)(v) = f(g^(-1) v)."""
    if g.nrows != f.nvars:
        raise ValueError("rank mismatch: matrix is %dx%d, polynomial has %d "
                         "variables" % (g.nrows, g.ncols, f.nvars))
    return substitute_linear(f, g.inverse().entries)


def reynolds(group, f):
    """Average of f over the group orbit; projects onto the invariants."""
    acc = Poly(f.order, f.nvars)
    for h in group.elements:
        # summing substitution by h over all h equals summing g . f over all g
        acc = acc + substitute_linear(f, h.entries)
    return acc.scale(Rational(1, len(group.elements)))


def substitution_images(rows, nvars, order, max_degree):
    """Images of every monomial of degree <= max_degree under the linear
    substitution x_i -> sum_j rows[i][j] x_j, built incrementally (each
    monomial is one linear multiply away from a lower-degree one)."""
    forms = []
    for i in range(nvars):
        terms = {}
        for j in range(nvars):
            if rows[i][j]:
                e = tuple(1 if k == j else 0 for k in range(nvars))
                terms[e] = rows[i][j]
        forms.append(Poly(order, nvars, terms))
    cache = {(0,) * nvars: Poly.constant(order, nvars, R1)}
    for m in range(1, max_degree + 1):
        for expt in monomials(nvars, m):
            i = next(k for k, v in enumerate(expt) if v)
            prev = expt[:i] + (expt[i] - 1,) + expt[i + 1:]
            cache[expt] = cache[prev] * forms[i]
    return cache


def act_matrix_columns(g, m):
    """Columns (over the degree-m monomial basis) of f -> act(g, f) on S_m."""
    rows = g.inverse().entries
    imgs = substitution_images(rows, g.nrows, g.order, m)
    basis = monomials(g.nrows, m)
    return [imgs[e].coefficient_vector(basis) for e in basis]


# -- Molien series -------------------------------------------------------


def char_poly_one_minus_tg(g):
    """det(1 - t g) as a t-polynomial with Cyclotomic coefficients."""
    one = Cyclotomic.one(g.order)
    zero = Cyclotomic.zero(g.order)
    rows = []
    for i in range(g.nrows):
        row = []
        for j in range(g.ncols):
            const = one if i == j else zero
            row.append(tseries.normalize([const, -g.entries[i][j]]))
        rows.append(row)
    return tseries.det_poly_matrix(rows)


def element_series(g, trunc):
    """Coefficients of 1/det(1 - t g) up to trunc (Cyclotomic values)."""
    return tseries.series_inverse(char_poly_one_minus_tg(g), trunc)


def molien_series(group, trunc):
    """Truncated Molien series (1/|G|) sum_g 1/det(1 - t g).

    With per_class=False the sum runs over every element, which is the
    straightforward definition; pass per_class=True on a generated group to
    weight one representative per conjugacy class instead.
    """
    return _molien(group, trunc, per_class=False)


def molien_series_by_class(group, trunc):
    return _molien(group, trunc, per_class=True)


def _molien(group, trunc, per_class):
    order = group.elements[0].order
    total = [Cyclotomic.zero(order)] * (trunc + 1)
    if per_class:
        pairs = [(group.elements[i], len(cls))
                 for i, cls in zip(group.class_reps, group.classes)]
    else:
        pairs = [(g, 1) for g in group.elements]
    for g, weight in pairs:
        ser = element_series(g, trunc)
        for m in range(trunc + 1):
            term = ser[m] if weight == 1 else ser[m] * weight
            total[m] = total[m] + term
    n = len(group.elements)
    coeffs = []
    for c in total:
        v = c.rational_value()  # Molien coefficients are rational by averaging
        coeffs.append(v / n)
    return tseries.PowerSeriesTruncation(coeffs, trunc)
