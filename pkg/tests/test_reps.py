import random

import pytest

from helpers import (
    B2,
    CUR2,
    Q3,
    Z1,
    K1,
    endo_identities_hold,
    nilpotent_rep,
    random_element,
    random_poly,
)
from jjconformal.conformal import (
    Element,
    FreeModule,
    apply_endo,
    conformal_algebra,
    eval_product,
    left_mul_endo,
)
from jjconformal.errors import PreconditionError, ShapeError
from jjconformal.poly import D, L, Poly
from jjconformal.reps import (
    ConformalRep,
    adjoint_rep,
    apply_action,
    check_rep,
    current_rep,
    dual_rep,
    rep_residual,
)


def test_adjoint_reps_are_representations():
    assert check_rep(adjoint_rep(CUR2)).passed
    assert check_rep(adjoint_rep(Q3)).passed
    # left multiplication in a non-Jacobi-Jordan algebra is not an action
    loop = conformal_algebra(("e",), {(0, 0): (1,)})
    assert not check_rep(adjoint_rep(loop)).passed


def test_adjoint_action_matches_product():
    adj = adjoint_rep(CUR2)
    rng = random.Random(5)
    for _ in range(20):
        x = random_element(rng, CUR2)
        v = random_element(rng, CUR2)
        assert apply_action(adj, x, v, "T") == eval_product(x, v, "T")


def test_action_is_semilinear_in_the_operator_slot():
    adj = adjoint_rep(CUR2)
    m = CUR2.basis(0)
    shifted = apply_action(adj, CUR2.basis(0).scale(D), m, "T")
    plain = apply_action(adj, CUR2.basis(0), m, "T")
    assert shifted == plain.scale(-Poly.var("T"))


def test_basis_action_agrees_with_left_multiplication_matrix():
    adj = adjoint_rep(Q3)
    rng = random.Random(6)
    for i in range(Q3.rank):
        mat = left_mul_endo(Q3, i)
        v = random_element(rng, Q3)
        assert apply_endo(mat, v, "T") == apply_action(adj, Q3.basis(i), v, "T")


def test_current_rep_lifts_finite_matrices():
    rep = current_rep(B2, ([[0, 0], [1, 0]], [[0, 0], [0, 0]]))
    assert check_rep(rep).passed
    assert rep.module.basis_names == ("m1", "m2")
    assert rep.algebra == CUR2
    assert all(e.is_const() for mat in rep.action for row in mat for e in row)


def test_current_rep_rejects_bad_matrices():
    with pytest.raises(PreconditionError) as exc:
        current_rep(B2, ([[1, 0], [0, 1]], [[1, 0], [0, 1]]))
    assert "rho(ab)" in str(exc.value)
    assert "(0, 0)" in str(exc.value)


def test_dual_rep_transposes_and_flips():
    nil = nilpotent_rep()
    dual = dual_rep(nil)
    assert check_rep(dual).passed
    # constant matrix [[0,1],[0,0]] dualises to its transpose
    assert [[str(e) for e in row] for row in dual.action[0]] == [
        ["0", "0"],
        ["1", "0"],
    ]
    adj_dual = dual_rep(adjoint_rep(Q3))
    assert check_rep(adj_dual).passed


def test_double_dual_restores_the_action():
    for rep in (nilpotent_rep(), adjoint_rep(CUR2), adjoint_rep(Q3)):
        assert dual_rep(dual_rep(rep)).action == rep.action


def test_dual_requires_representation():
    bad = ConformalRep(Z1, K1, (((Poly.const(1),),),))
    with pytest.raises(PreconditionError):
        dual_rep(bad)


def test_rep_residual_witness():
    bad = ConformalRep(Z1, K1, (((Poly.const(1),),),))
    report = check_rep(bad)
    assert not report.passed
    assert report.counterexamples[0].indices == (0, 0, 0)
    assert str(report.counterexamples[0].residual) == "2*x"
    assert rep_residual(bad, 0, 0, 0) == report.counterexamples[0].residual


def test_rep_shape_guards():
    with pytest.raises(ShapeError):
        ConformalRep(Z1, K1, ())
    with pytest.raises(ShapeError):
        ConformalRep(Z1, K1, (((Poly.var("M"),),),))
    nil = nilpotent_rep()
    with pytest.raises(ShapeError):
        apply_action(nil, CUR2.basis(0), nil.module.basis(0), "T")
    with pytest.raises(ShapeError):
        apply_action(nil, Z1.basis(0), CUR2.basis(0), "T")
    with pytest.raises(ShapeError):
        apply_action(nil, Z1.basis(0), nil.module.basis(0), "D")


def test_endo_composition_identities_on_random_data():
    rng = random.Random(9)
    for _ in range(30):
        n = rng.randint(1, 3)
        space = FreeModule(tuple(f"m{i + 1}" for i in range(n)))
        f_mat = tuple(tuple(random_poly(rng) for _ in range(n)) for _ in range(n))
        g_mat = tuple(tuple(random_poly(rng) for _ in range(n)) for _ in range(n))
        coeffs = tuple(random_poly(rng, names=("D",)) for _ in range(n))
        assert endo_identities_hold(f_mat, g_mat, Element(space, coeffs))
