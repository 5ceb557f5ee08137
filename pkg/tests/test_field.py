from shephardlab.field import (Cyclotomic, Rational, euler_phi,
                               cyclotomic_polynomial)


def samples(n):
    z = Cyclotomic.zeta(n)
    return [
        Cyclotomic.one(n),
        Cyclotomic.from_rational(n, Rational(-3) / Rational(7)),
        z,
        z * z - Cyclotomic.from_rational(n, Rational(2)),
        z + Cyclotomic.one(n),
        z ** (n - 1) - z,
    ]


def test_euler_phi():
    assert [euler_phi(k) for k in range(1, 13)] == \
        [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]


def test_cyclotomic_polynomial_degree():
    for n in (1, 2, 3, 4, 5, 8, 12):
        assert len(cyclotomic_polynomial(n)) == euler_phi(n) + 1


def test_ring_axioms():
    for n in (4, 5, 12):
        vals = samples(n)
        for a in vals:
            for b in vals:
                assert a + b == b + a
                assert a * b == b * a
                for c in vals:
                    assert (a + b) + c == a + (b + c)
                    assert (a * b) * c == a * (b * c)
                    assert a * (b + c) == a * b + a * c


def test_inverse_and_division():
    for n in (3, 4, 5, 12):
        for a in samples(n):
            if not a:
                continue
            assert a * a.inverse() == Cyclotomic.one(n)
            assert (a / a) == Cyclotomic.one(n)


def test_zeta_is_primitive_root():
    for n in (2, 3, 4, 5, 6, 8, 12):
        z = Cyclotomic.zeta(n)
        assert z ** n == Cyclotomic.one(n)
        for k in range(1, n):
            assert z ** k != Cyclotomic.one(n)


def test_conjugate_inverts_roots_of_unity():
    for n in (3, 4, 5, 12):
        z = Cyclotomic.zeta(n)
        assert z.conjugate() == z.inverse()
        a = samples(n)[3]
        assert a.conjugate().conjugate() == a


def test_rationality_predicate():
    z = Cyclotomic.zeta(5)
    assert not z.is_rational()
    s = z + z ** 2 + z ** 3 + z ** 4
    assert s.is_rational() and s.rational_value() == Rational(-1)


def test_coercion_with_plain_scalars():
    z = Cyclotomic.zeta(4)
    assert z * z == -1
    assert z + 0 == z
    assert 1 - z * z == Cyclotomic.from_rational(4, Rational(2))
