import pytest

from conftest import ctx_for

from shephardlab.coinvariants import (finite_dim_certificate,
                                      hilbert_function, monomial_count,
                                      quotient_trace, ungraded_sk_character,
                                      verify_duality_tops, verify_kernel_phi,
                                      verify_thm11_i_ii)


@pytest.mark.parametrize("key,hilb", [
    ("C3", [1, 1]),
    ("B2", [1]),
    ("G(3,1,2)", [1, 2, 1]),
    ("3[3]3", [1, 2, 3, 2, 1]),
])
def test_sk_hilbert_vectors(key, hilb):
    ctx = ctx_for(key)
    top = ctx.group.rank * (ctx.basic.d - 2)
    assert hilbert_function(ctx.ideal_K, top) == hilb


@pytest.mark.parametrize("key", ["C3", "B2", "G(3,1,2)", "3[3]3", "3[6]2"])
def test_finite_dim_certificate(key):
    ctx = ctx_for(key)
    cert = finite_dim_certificate(ctx.ideal_K, ctx.basic.d, ctx.group.rank)
    assert cert["pass"], cert
    assert cert["total_dimension"] == \
        (ctx.basic.d - 1) ** ctx.group.rank


def test_component_dims_are_additive():
    ctx = ctx_for("3[3]3")
    for ideal in (ctx.ideal_I, ctx.ideal_K):
        for m in range(6):
            assert ideal.dim(m) + ideal.quotient_dim(m) == \
                monomial_count(ideal.nvars, m)


def test_quotient_trace_routes_agree():
    ctx = ctx_for("3[3]3")
    cache = ctx.action_cache
    for i in ctx.group.class_reps:
        for m in range(5):
            assert quotient_trace(ctx.group, ctx.ideal_K, i, m, cache,
                                  method="quotient") == \
                quotient_trace(ctx.group, ctx.ideal_K, i, m, cache,
                               method="split")


@pytest.mark.parametrize("key", ["C3", "B2", "G(3,1,2)", "3[3]3"])
def test_graded_equivalence(key):
    ctx = ctx_for(key)
    results = verify_thm11_i_ii(ctx.group, ctx.basic, ctx.ideal_K,
                                ctx.action_cache)
    assert results and all(ok for _, ok in results)


def test_kernel_phi_certificate_with_witness():
    ctx = ctx_for("G(3,1,2)")
    results = verify_kernel_phi(ctx.group, ctx.basic, ctx.rel,
                                ctx.ideal_I, ctx.ideal_K)
    assert all(r["pass"] for r in results)
    # degree-2 witness: dim S_2 = 3, quotient (S/K)_2 has dimension 1,
    # so both ker(phi_2) and K_2 are 2-dimensional
    at2 = next(r for r in results if r["m"] == 2)
    assert at2["ker_dim"] == 2 and at2["K_dim"] == 2


def test_ungraded_values():
    ctx = ctx_for("3[3]3")
    sk = ungraded_sk_character(ctx.group, ctx.basic, ctx.ideal_K,
                               ctx.action_cache)
    assert sk[0] == 9
    ctx = ctx_for("B2")
    sk = ungraded_sk_character(ctx.group, ctx.basic, ctx.ideal_K,
                               ctx.action_cache)
    assert sk[0] == 1


@pytest.mark.parametrize("key", ["B2", "G(3,1,2)", "3[3]3"])
def test_duality_tops(key):
    ctx = ctx_for(key)
    out = verify_duality_tops(ctx.group, ctx.basic, ctx.rel,
                              ctx.ideal_I, ctx.ideal_K, ctx.action_cache)
    assert out["pass"], out
