"""Braid-relation residuals for both parameterised families."""

from fractions import Fraction

import pytest

from braidbax import (
    DimensionMismatch,
    PoleError,
    ResidualNotInSpan,
    SquareMatrix,
    SymbolTable,
    TensorOps,
    braid,
    braid_ybe_residual,
    builtin,
    combination_basis,
    embed12,
    embed23,
    expand_pybe_coefficients,
    expansion_identity_residual,
    power_reduction_residual,
    pybe_coefficient_formulas,
    reduction_identity_residuals,
    s03_generic_residual,
    s03_member,
    s03_pybe_residual,
    s03_reduction_residual,
    s14_chain,
    s14_constant_projectors,
    s14_inverse_closed,
    s14_member,
    s14_member_q,
    s14_pybe_residual,
    verify_frt_relations,
)

T = SymbolTable(["x", "y"])
X, Y = T.symbols("x", "y")


def _bump(m):
    """Copy of m with one added to the top-left entry."""
    table = m.table
    unit = SquareMatrix(table, [[1, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]])
    return m + unit


# ---------------------------------------------------------------- embeddings


def test_embeddings_place_factors_correctly():
    a = SquareMatrix(T, [[Fraction(r * 4 + c + 1) for c in range(4)] for r in range(4)])
    left = embed12(a)
    right = embed23(a)
    assert left.n == 8 and right.n == 8
    # a (x) I duplicates each entry along the inner diagonal
    assert left == a.kron(SquareMatrix.identity(T, 2))
    assert left.rows[1][3] == a.rows[0][1]
    assert left.rows[1][2].is_zero()
    # I (x) a repeats a on the two diagonal blocks
    assert right == SquareMatrix.identity(T, 2).kron(a)
    assert right.rows[0][1] == a.rows[0][1]
    assert right.rows[0][5].is_zero()


def test_embeddings_reject_other_sizes():
    small = SquareMatrix(T, [[1, 2], [3, 4]])
    with pytest.raises(DimensionMismatch):
        embed12(small)
    with pytest.raises(DimensionMismatch):
        embed23(small)


@pytest.mark.parametrize("name", ["s03_r", "s14_r"])
def test_builtin_braid_matrices_satisfy_the_relation(name):
    table = SymbolTable(["q"]) if name == "s14_r" else SymbolTable([])
    assert braid_ybe_residual(braid(builtin(name, table))).is_zero()


def test_braid_residual_detects_failures():
    d = SquareMatrix(T, [[1, 0, 0, 0], [0, 2, 0, 0], [0, 0, 3, 0], [0, 0, 0, 4]])
    assert not braid_ybe_residual(d).is_zero()


# ---------------------------------------------------------------- s03 family


def test_power_zero_member_is_twice_identity():
    assert s03_member(0, X) == 2 * SquareMatrix.identity(T, 4)


def test_inverse_power_member_matches_cleared_matrix():
    cleared = X * s03_member(-1, X)
    x = X
    want = SquareMatrix(
        T,
        [
            [x + 1, 0, 0, 1 - x],
            [0, x + 1, x - 1, 0],
            [0, 1 - x, x + 1, 0],
            [x - 1, 0, 0, x + 1],
        ],
    )
    assert cleared == want


def test_square_inverse_member_is_braid_plus_inverse_braid():
    rhat = braid(builtin("s03_r", T))
    cleared = (X * X) * s03_member(-2, X)
    assert cleared == rhat + (2 * X * X) * rhat.inverse()


@pytest.mark.parametrize("p", [-2, 1, 3])
def test_parameterised_braid_residual_vanishes(p):
    assert s03_pybe_residual(p, X, Y).is_zero()


def test_negative_powers_reject_zero_argument():
    with pytest.raises(PoleError):
        s03_member(-1, T.zero())


def test_member_power_must_be_a_plain_int():
    with pytest.raises(TypeError):
        s03_member(True, X)


def test_first_collapse_stage_for_both_builtins():
    free = SymbolTable(["cx", "cy", "cxy", "q"])
    cx, cy, cxy = free.symbols("cx", "cy", "cxy")
    for name in ("s03_r", "s14_r"):
        b = braid(builtin(name, free))
        assert power_reduction_residual(b, cx, cy, cxy).is_zero()


def test_full_collapse_is_exact_for_free_coefficients():
    free = SymbolTable(["cx", "cy", "cxy"])
    cx, cy, cxy = free.symbols("cx", "cy", "cxy")
    assert s03_reduction_residual(cx, cy, cxy).is_zero()


def test_generic_residual_factors_through_the_law():
    # breaking the law by forcing cxy = 0 leaves the predicted multiple
    rhat = braid(builtin("s03_r", T))
    b12, b23 = embed12(rhat), embed23(rhat)
    broken = s03_generic_residual(X, Y, T.zero(), rhat)
    assert broken == (X + Y + 2 * X * Y) * (b12 - b23)
    # restoring the law kills the residual
    assert s03_generic_residual(X, Y, X + Y + 2 * X * Y, rhat).is_zero()


# ---------------------------------------------------------------- s14 family


def test_two_parameter_member_and_closed_inverse():
    free = SymbolTable(["v", "w"])
    v, w = free.symbols("v", "w")
    m = s14_member(v, w)
    inv = s14_inverse_closed(v, w)
    eye = SquareMatrix.identity(free, 4)
    assert m * inv == eye
    assert inv * m == eye


def test_closed_inverse_pole_at_minus_one():
    with pytest.raises(PoleError):
        s14_inverse_closed(T.const(-1), T.zero())


def test_one_parameter_slice_reproduces_the_builtin():
    q = SymbolTable(["q"]).symbol("q")
    assert s14_member_q(q) == braid(builtin("s14_r", q.table))


def test_pair_sum_constraint_gives_zero_residual():
    free = SymbolTable(["v", "vp", "vpp"])
    v, vp, vpp = free.symbols("v", "vp", "vpp")
    res = s14_pybe_residual((v, -2 - v), (vp, -2 - vp), (vpp, -2 - vpp))
    assert res.is_zero()


def test_unconstrained_pairs_leave_a_nonzero_residual():
    one, zero = T.one(), T.zero()
    assert not s14_pybe_residual((one, zero), (one, zero), (one, zero)).is_zero()


def test_reduction_identities_all_vanish():
    residuals = reduction_identity_residuals(combination_basis(TensorOps(T)))
    assert sorted(residuals) == ["k1", "k2", "k3", "l1", "l2", "l3", "s5", "s6"]
    for value in residuals.values():
        assert value.is_zero()


def test_reduction_identities_need_honest_projectors():
    pair = s14_constant_projectors(T)
    fake = TensorOps(T, plus=_bump(pair["plus"]))
    residuals = reduction_identity_residuals(combination_basis(fake))
    assert any(not value.is_zero() for value in residuals.values())


def test_expansion_identity_in_six_symbols():
    free = SymbolTable(["v", "w", "vp", "wp", "vpp", "wpp"])
    v, w, vp, wp, vpp, wpp = free.symbols("v", "w", "vp", "wp", "vpp", "wpp")
    tops = TensorOps(free)
    assert expansion_identity_residual(tops, (v, w), (vp, wp), (vpp, wpp)).is_zero()


def test_exchange_relations_hold_for_family_members():
    q = SymbolTable(["q"]).symbol("q")
    tops = TensorOps(q.table)
    assert verify_frt_relations(tops, s14_member_q(q))
    assert verify_frt_relations(tops, s14_member_q(q.table.const(3)))


def test_exchange_relations_fail_for_a_unipotent_matrix():
    tops = TensorOps(T)
    uni = SquareMatrix(T, [[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    assert not verify_frt_relations(tops, uni)


# ------------------------------------------------------- residual coefficients


def test_expanded_coefficients_match_closed_formulas():
    free = SymbolTable(["v", "w", "vp", "wp", "vpp", "wpp"])
    v, w, vp, wp, vpp, wpp = free.symbols("v", "w", "vp", "wp", "vpp", "wpp")
    first, middle, last = (v, w), (vp, wp), (vpp, wpp)
    got = expand_pybe_coefficients(first, middle, last)
    want = pybe_coefficient_formulas(first, middle, last)
    assert sorted(got) == ["a1", "a2", "b1", "b2"]
    for key in want:
        assert got[key] == want[key]


def test_constrained_coefficients_vanish():
    free = SymbolTable(["v", "vp", "vpp"])
    v, vp, vpp = free.symbols("v", "vp", "vpp")
    got = expand_pybe_coefficients((v, -2 - v), (vp, -2 - vp), (vpp, -2 - vpp))
    for value in got.values():
        assert value.is_zero()


def test_chained_middle_parameter_cancels_everything():
    free = SymbolTable(["v", "vpp"])
    v, vpp = free.symbols("v", "vpp")
    zero = free.zero()
    got = expand_pybe_coefficients((v, zero), (s14_chain(v, vpp), zero), (vpp, zero))
    for value in got.values():
        assert value.is_zero()
    # the mirrored chain acts on the second slot family
    got = expand_pybe_coefficients((zero, v), (zero, s14_chain(v, vpp)), (zero, vpp))
    for value in got.values():
        assert value.is_zero()


def test_chain_values_and_pole():
    assert s14_chain(T.const(4), T.const(4)) == T.const(-8)
    with pytest.raises(PoleError):
        s14_chain(T.const(2), T.const(2))


def test_perturbed_projectors_break_the_span():
    pair = s14_constant_projectors(T)
    fake = TensorOps(T, plus=_bump(pair["plus"]))
    with pytest.raises(ResidualNotInSpan):
        expand_pybe_coefficients((X, T.zero()), (X, T.zero()), (X, T.zero()), fake)
