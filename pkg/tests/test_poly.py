from conftest import ctx_for

from shephardlab.field import Cyclotomic, Rational
from shephardlab.invariants import invariant_component
from shephardlab.multipoly import (Poly, act, molien_series, monomials,
                                   reynolds)


def sample_polys(n, nvars):
    one = Cyclotomic.one(n)
    z = Cyclotomic.zeta(n)
    out = []
    for expt in monomials(nvars, 2):
        out.append(Poly.monomial(n, nvars, expt, one))
    mixed = out[0].scale(z) + out[-1]
    out.append(mixed)
    return out


def test_act_is_a_group_action():
    group = ctx_for("3[3]3").group
    n = group.field_order
    ident = group.elements[0]
    picks = [0, 1, 5, 11, 17, 23]
    for f in sample_polys(n, group.rank):
        assert act(ident, f) == f
        for i in picks:
            for j in picks:
                g, h = group.elements[i], group.elements[j]
                assert act(g, act(h, f)) == act(g * h, f)


def test_act_is_linear_and_multiplicative():
    group = ctx_for("B2").group
    g = group.elements[3]
    f1, f2 = sample_polys(group.field_order, 2)[:2]
    assert act(g, f1 + f2) == act(g, f1) + act(g, f2)
    assert act(g, f1 * f2) == act(g, f1) * act(g, f2)


def test_reynolds_idempotent_and_invariant():
    group = ctx_for("G(3,1,2)").group
    for f in sample_polys(group.field_order, group.rank):
        avg = reynolds(group, f)
        assert reynolds(group, avg) == avg
        for g in group.spec.generators:
            assert act(g, avg) == avg


def test_molien_counts_invariants():
    for key in ("B2", "3[3]3", "G(3,1,2)"):
        group = ctx_for(key).group
        series = molien_series(group, 7)
        for m in range(7):
            dim = len(invariant_component(group, m))
            assert series.coeffs[m] == Rational(dim)


def test_molien_hand_values():
    series = molien_series(ctx_for("G(3,1,2)").group, 7)
    assert list(series.coeffs)[:7] == [Rational(c)
                                       for c in (1, 0, 0, 1, 0, 0, 2)]


def test_invariant_component_routes_agree():
    group = ctx_for("3[3]3").group
    for m in (4, 6):
        assert invariant_component(group, m, method="reynolds") == \
            invariant_component(group, m, method="fixed")
