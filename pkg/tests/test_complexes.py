import pytest

from conftest import ctx_for

from shephardlab.complexes import (_betti_of_cells, cm_check,
                                   fixed_cells_alternating_sum,
                                   homology_character, homology_ranks,
                                   shelling_check, solomon_tits_order,
                                   sparse_rank, virtual_character)


def compose_is_zero(complex_):
    bnd = complex_.boundaries
    for i in range(1, len(bnd)):
        lower = bnd[i - 1]
        for col in bnd[i]:
            acc = {}
            for row, sign in col.items():
                for r2, s2 in lower[row].items():
                    acc[r2] = acc.get(r2, 0) + sign * s2
            if any(acc.values()):
                return False
    return True


@pytest.mark.parametrize("key", ["C5", "B2", "3[3]3", "A3", "G(3,1,3)"])
def test_boundary_squares_to_zero(key):
    assert compose_is_zero(ctx_for(key).complex)


def test_cell_counts_and_colors():
    ctx = ctx_for("3[3]3")
    complex_ = ctx.complex
    group = ctx.group
    assert len(complex_.cells_by_dim[0]) == 16
    assert len(complex_.cells_by_dim[1]) == 24
    assert len(complex_.chambers()) == len(group.elements)
    # color-i vertex count = index of the maximal parabolic dropping i
    for color in complex_.R:
        J = frozenset(complex_.R) - {color}
        count = sum(1 for cell in complex_.cells_by_dim[0]
                    if complex_.vertex_color(cell) == color)
        assert count == len(group.parabolic_cosets(J))


@pytest.mark.parametrize("key,betti", [
    ("C5", [4]),
    ("B2", [0, 1]),
    ("3[3]3", [0, 9]),
    ("A3", [0, 0, 1]),
])
def test_hand_betti_numbers(key, betti):
    assert homology_ranks(ctx_for(key).complex) == betti


def test_b2_character_values():
    ctx = ctx_for("B2")
    group = ctx.group
    r0 = group.index[group.spec.generators[0]]
    assert homology_character(ctx.complex, 0, ctx.cycle_basis) == 1
    assert homology_character(ctx.complex, r0, ctx.cycle_basis) == -1
    assert virtual_character(group, 0) == 1
    assert virtual_character(group, r0) == -1


def test_virtual_character_identity_counts():
    group = ctx_for("3[3]3").group
    assert virtual_character(group, 0) == 24 - 8 - 8 + 1


@pytest.mark.parametrize("key", ["B2", "3[3]3", "A3"])
def test_hopf_consistency(key):
    ctx = ctx_for(key)
    ell = ctx.group.rank
    hopf_sign = -1 if (ell - 1) % 2 else 1
    virt_sign = -1 if ell % 2 else 1
    for i in ctx.group.class_reps:
        hom = homology_character(ctx.complex, i, ctx.cycle_basis)
        assert fixed_cells_alternating_sum(ctx.complex, i) == hopf_sign * hom
        assert virtual_character(ctx.group, i) == virt_sign * hom


@pytest.mark.parametrize("key", ["B2", "3[3]3", "G(2,1,3)"])
def test_cohen_macaulay(key):
    assert cm_check(ctx_for(key).complex)["pass"]


def test_betti_of_synthetic_complexes():
    # two disjoint edges: connectivity fails
    cells = [frozenset([0]), frozenset([1]), frozenset([2]), frozenset([3]),
             frozenset([0, 1]), frozenset([2, 3])]
    assert _betti_of_cells(cells) == [1, 0]
    # a hollow triangle: one 1-cycle
    tri = [frozenset([v]) for v in range(3)] + \
        [frozenset([0, 1]), frozenset([1, 2]), frozenset([0, 2])]
    assert _betti_of_cells(tri) == [0, 1]


def test_shelling_path_and_disjoint_edges():
    path = [frozenset([i, i + 1]) for i in range(5)]
    assert shelling_check(path)["pass"]
    bad = [frozenset([0, 1]), frozenset([2, 3])]
    verdict = shelling_check(bad)
    assert not verdict["pass"] and verdict["first_failure"] == 1


def test_shelling_rejects_impure_input():
    with pytest.raises(ValueError):
        shelling_check([frozenset([0, 1]), frozenset([2])])


def test_solomon_tits_on_octagon():
    ctx = ctx_for("B2")
    for seed in (0, 1, 7):
        res = solomon_tits_order(ctx.complex, seed=seed)
        assert res["shelling"]["pass"]
        assert sorted(res["order"]) == list(range(8))
        assert res["distances"][res["order"][0]] == 0


def test_sparse_rank_exactness():
    cols = [{0: 1, 1: 2}, {0: 2, 1: 4}, {1: 1, 2: 3}, {0: 5}]
    assert sparse_rank(cols) == 3
    assert sparse_rank([]) == 0
    assert sparse_rank([{0: 7}]) == 1
