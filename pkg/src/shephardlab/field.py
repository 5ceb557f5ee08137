"""Exact arithmetic in cyclotomic fields Q(zeta_n).

Elements are stored in the power basis 1, z, ..., z^(phi(n)-1) with rational
coefficients, reduced modulo the n-th cyclotomic polynomial.  Everything is
immutable and hashable, and all comparisons are exact.
"""

from functools import lru_cache

try:
    from gmpy2 import mpq as Rational
except ImportError:  # pragma: no cover - gmpy2 is an optional speedup
    from fractions import Fraction as Rational

R0 = Rational(0)
R1 = Rational(1)


def euler_phi(n):
    if n < 1:
        raise ValueError("euler_phi needs n >= 1")
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _poly_divmod_int(num, den):
    """Quotient/remainder of integer-coefficient polynomials, den monic."""
    num = list(num)
    dd = len(den) - 1
    q = [0] * max(len(num) - dd, 1)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            q[i - dd] = c
            for j in range(dd + 1):
                num[i - dd + j] -= c * den[j]
    return q, num[:dd]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n):
    """Coefficient tuple (ascending) of the n-th cyclotomic polynomial."""
    if n == 1:
        return (-1, 1)
    poly = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            poly, rem = _poly_divmod_int(poly, list(cyclotomic_polynomial(d)))
            assert not any(rem)
    return tuple(poly)


@lru_cache(maxsize=None)
def _reduction_table(n):
    """x^k mod Phi_n for k = 0 .. 2*phi(n)-2, as coefficient tuples."""
    phi = euler_phi(n)
    mod = cyclotomic_polynomial(n)
    rows = []
    for k in range(2 * phi - 1):
        vec = [R0] * (k + 1)
        vec[k] = R1
        for i in range(k, phi - 1, -1):
            c = vec[i]
            if c:
                vec[i] = R0
                for j in range(phi):
                    vec[i - phi + j] -= c * mod[j]
        vec = vec[:phi] + [R0] * (phi - len(vec))
        rows.append(tuple(vec[:phi]))
    return tuple(rows)


@lru_cache(maxsize=None)
def _conjugation_table(n):
    """Images of the basis powers under z -> z^(n-1), reduced."""
    phi = euler_phi(n)
    rows = []
    for i in range(phi):
        k = (n - i) % n
        raw = [R0] * (k + 1)
        raw[k] = R1
        rows.append(_reduce_raw(n, raw))
    return tuple(rows)


def _reduce_raw(n, raw):
    """Reduce arbitrary-length power coefficients modulo Phi_n."""
    phi = euler_phi(n)
    mod = cyclotomic_polynomial(n)
    vec = [Rational(c) for c in raw]
    if len(vec) < phi:
        vec += [R0] * (phi - len(vec))
    for i in range(len(vec) - 1, phi - 1, -1):
        c = vec[i]
        if c:
            vec[i] = R0
            for j in range(phi):
                vec[i - phi + j] -= c * mod[j]
    return tuple(vec[:phi])


def _poly_ext_gcd(a, b):
    """Extended gcd in Q[x]: returns (g, s, t) with s*a + t*b = g, lists ascending."""

    def deg(p):
        d = len(p) - 1
        while d >= 0 and not p[d]:
            d -= 1
        return d

    def pdivmod(num, den):
        num = list(num)
        dn = deg(den)
        lead = den[dn]
        q = [R0] * max(len(num) - dn, 1)
        for i in range(len(num) - 1, dn - 1, -1):
            c = num[i]
            if c:
                f = c / lead
                q[i - dn] = f
                for j in range(dn + 1):
                    num[i - dn + j] -= f * den[j]
        return q, num

    def pmul(p, q):
        out = [R0] * (len(p) + len(q) - 1)
        for i, c in enumerate(p):
            if c:
                for j, d in enumerate(q):
                    if d:
                        out[i + j] += c * d
        return out

    def psub(p, q):
        out = [R0] * max(len(p), len(q))
        for i, c in enumerate(p):
            out[i] += c
        for i, c in enumerate(q):
            out[i] -= c
        return out

    r0, r1 = list(a), list(b)
    s0, s1 = [R1], [R0]
    t0, t1 = [R0], [R1]
    while deg(r1) >= 0:
        q, rem = pdivmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, psub(s0, pmul(q, s1))
        t0, t1 = t1, psub(t0, pmul(q, t1))
    return r0, s0, t0


class Cyclotomic:
    """An element of Q(zeta_n), canonical in the power basis mod Phi_n."""

    __slots__ = ("order", "coeffs", "_hash")

    def __init__(self, order, coeffs):
        self.order = order
        self.coeffs = coeffs  # tuple of Rational, length phi(order)
        self._hash = None

    # -- construction -----------------------------------------------------

    @staticmethod
    def from_raw(order, raw_coeffs):
        """Interpret raw_coeffs as sum c_i * zeta^i and reduce canonically."""
        if order < 1:
            raise ValueError("cyclotomic order must be >= 1")
        return Cyclotomic(order, _reduce_raw(order, raw_coeffs))

    @staticmethod
    def zero(order):
        return Cyclotomic(order, (R0,) * euler_phi(order))

    @staticmethod
    def one(order):
        return Cyclotomic.from_rational(order, R1)

    @staticmethod
    def from_rational(order, q):
        phi = euler_phi(order)
        return Cyclotomic(order, (Rational(q),) + (R0,) * (phi - 1))

    @staticmethod
    def zeta(order, power=1):
        raw = [R0] * (power % order + 1)
        raw[power % order] = R1
        return Cyclotomic.from_raw(order, raw)

    def _coerce(self, other):
        if isinstance(other, Cyclotomic):
            if other.order != self.order:
                raise ValueError(
                    "mixed cyclotomic orders %d and %d" % (self.order, other.order))
            return other
        if isinstance(other, (int, type(R0))):
            return Cyclotomic.from_rational(self.order, other)
        return NotImplemented

    # -- queries ----------------------------------------------------------

    def is_rational(self):
        return not any(self.coeffs[1:])

    def rational_value(self):
        if not self.is_rational():
            raise ValueError("not a rational element: %r" % (self,))
        return self.coeffs[0]

    def __bool__(self):
        return any(self.coeffs)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Cyclotomic(self.order,
                          tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Cyclotomic(self.order,
                          tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __neg__(self):
        return Cyclotomic(self.order, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        phi = len(a)
        if phi == 1:
            return Cyclotomic(self.order, (a[0] * b[0],))
        conv = [R0] * (2 * phi - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        conv[i + j] += ai * bj
        table = _reduction_table(self.order)
        out = conv[:phi]
        for k in range(phi, 2 * phi - 1):
            c = conv[k]
            if c:
                row = table[k]
                for j in range(phi):
                    if row[j]:
                        out[j] += c * row[j]
        return Cyclotomic(self.order, tuple(out))

    __rmul__ = __mul__

    def inverse(self):
        if not self:
            raise ZeroDivisionError("cyclotomic division by zero")
        mod = [Rational(c) for c in cyclotomic_polynomial(self.order)]
        g, s, _ = _poly_ext_gcd(list(self.coeffs), mod)
        lead = next(c for c in reversed(g) if c)
        inv = [c / lead for c in s]
        return Cyclotomic.from_raw(self.order, inv)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        result = Cyclotomic.one(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self):
        """Complex conjugation, zeta -> zeta^(n-1)."""
        table = _conjugation_table(self.order)
        phi = len(self.coeffs)
        out = [R0] * phi
        for i, c in enumerate(self.coeffs):
            if c:
                row = table[i]
                for j in range(phi):
                    if row[j]:
                        out[j] += c * row[j]
        return Cyclotomic(self.order, tuple(out))

    # -- comparisons ------------------------------------------------------

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.order, self.coeffs))
        return self._hash

    def __repr__(self):
        if self.is_rational():
            return str(self.coeffs[0])
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                z = "z%d" % self.order if i == 1 else "z%d^%d" % (self.order, i)
                if c == 1:
                    parts.append(z)
                elif c == -1:
                    parts.append("-" + z)
                else:
                    parts.append("%s*%s" % (c, z))
        return " + ".join(parts).replace("+ -", "- ")


def cyclo_reduce(order, raw_coeffs):
    """Canonical representative of sum c_i zeta^i in Q(zeta_order)."""
    return Cyclotomic.from_raw(order, raw_coeffs)


def cyclo_conj(z):
    return z.conjugate()
