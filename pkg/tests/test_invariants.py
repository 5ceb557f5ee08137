import pytest

from conftest import ctx_for

from shephardlab.invariants import (check_classical_identities,
                                    check_det_twists, minimal_invariant,
                                    molien_degrees)
from shephardlab.multipoly import act, jacobian, hessian


@pytest.mark.parametrize("key,degrees", [
    ("C3", (3,)),
    ("B2", (2, 4)),
    ("3[3]3", (4, 6)),
    ("G(3,1,2)", (3, 6)),
    ("3[6]2", (4, 12)),
    ("H3", (2, 6, 10)),
])
def test_molien_degrees(key, degrees):
    ctx = ctx_for(key)
    assert tuple(molien_degrees(ctx.group)) == degrees
    assert tuple(ctx.spec.known_degrees) == degrees


def test_minimal_invariant_is_a_line():
    group = ctx_for("3[3]3").group
    d, f1 = minimal_invariant(group)
    assert d == 4 and f1.degree() == 4
    for g in group.spec.generators:
        assert act(g, f1) == f1


@pytest.mark.parametrize("key", ["B2", "3[3]3", "G(3,1,2)", "A3"])
def test_basic_invariants_shape(key):
    ctx = ctx_for(key)
    basic = ctx.basic
    assert basic.degrees == tuple(ctx.spec.known_degrees)
    for f, d in zip(basic.polys, basic.degrees):
        assert f.degree() == d and f.is_homogeneous()
        for g in ctx.group.spec.generators:
            assert act(g, f) == f


def test_relative_invariant_degrees():
    ctx = ctx_for("3[3]3")
    group, rel = ctx.group, ctx.rel
    n_hyps = len(group.hyperplanes)
    refl = len(group.reflections)
    assert rel.Q.degree() == n_hyps
    assert rel.J.degree() == refl
    assert rel.H.degree() == refl - n_hyps


@pytest.mark.parametrize("key", ["B2", "3[3]3", "G(3,1,2)", "4[3]4"])
def test_classical_identities(key):
    ctx = ctx_for(key)
    verdict = check_classical_identities(ctx.group, ctx.basic, ctx.rel)
    assert all(verdict.values()), verdict


@pytest.mark.parametrize("key", ["B2", "3[3]3", "G(3,1,2)"])
def test_det_twists(key):
    ctx = ctx_for(key)
    report = check_det_twists(ctx.group, ctx.rel)
    assert all(ok for _, ok in report), report


def test_jacobian_and_hessian_degrees():
    ctx = ctx_for("3[3]3")
    jac = jacobian(ctx.basic.polys)
    assert jac.degree() == sum(d - 1 for d in ctx.basic.degrees)
    hess = hessian(ctx.basic.f1)
    assert hess.degree() == ctx.group.rank * (ctx.basic.d - 2)
