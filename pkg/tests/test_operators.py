import pytest

from helpers import AB2, CUR2, Q3, Z1, Z2, K2, nilpotent_rep
from jjconformal.conformal import (
    FreeModule,
    admissible_algebra,
    check_jacobi_jordan,
    check_left_anti_symmetric,
    module,
    zero_algebra,
)
from jjconformal.errors import PreconditionError, ShapeError
from jjconformal.finite import zero_finite_algebra
from jjconformal.operators import (
    bilinear_form,
    check_o_operator,
    check_rota_baxter,
    check_skew_nondegenerate,
    check_symplectic,
    compatible_las_from_bijective,
    current_symplectic,
    induced_las_from_o_operator,
    induced_las_from_symplectic,
    module_map,
    o_operator_homomorphism_report,
    pair,
)
from jjconformal.poly import D, L, Poly, mat_identity
from jjconformal.reps import ConformalRep, adjoint_rep


def test_rota_baxter_oracles():
    diag = module_map(CUR2, CUR2, [[0, 0], [0, 1]])
    assert check_rota_baxter(diag, 0).passed
    ident2 = module_map(CUR2, CUR2, mat_identity(2))
    assert check_rota_baxter(ident2, -1).passed
    ident3 = module_map(Q3, Q3, mat_identity(3))
    assert check_rota_baxter(ident3, -1).passed
    report = check_rota_baxter(ident2, 0)
    assert not report.passed
    assert report.check == "rota-baxter(0)"
    assert report.counterexamples[0].indices == (0, 0)
    assert str(report.counterexamples[0].residual) == "-e2"


def test_rota_baxter_shape_guards():
    with pytest.raises(ShapeError):
        check_rota_baxter(module_map(CUR2, Q3, [[0, 0], [0, 0], [0, 0]]), 0)
    with pytest.raises(ShapeError):
        check_rota_baxter(module_map(K2, K2, mat_identity(2)), 0)


def test_o_operator_oracles():
    nil = nilpotent_rep()
    good = module_map(nil.module, Z1, [[0, 1]])
    assert check_o_operator(good, nil).passed
    bad = module_map(nil.module, Z1, [[1, 0]])
    report = check_o_operator(bad, nil)
    assert not report.passed
    assert [(c.indices, str(c.residual)) for c in report.counterexamples] == [
        ((0, 1), "-a"),
        ((1, 0), "-a"),
    ]
    with pytest.raises(ShapeError):
        check_o_operator(module_map(nil.module, CUR2, [[0, 1], [0, 0]]), nil)


def test_induced_product_and_homomorphism():
    nil = nilpotent_rep()
    good = module_map(nil.module, Z1, [[0, 1]])
    las = induced_las_from_o_operator(good, nil)
    assert las.basis_names == ("m1", "m2")
    assert [str(c) for c in las.structure[1][1]] == ["1", "0"]
    assert check_left_anti_symmetric(las).passed
    assert check_jacobi_jordan(admissible_algebra(las)).passed
    assert o_operator_homomorphism_report(good, nil).passed
    bad = module_map(nil.module, Z1, [[1, 0]])
    with pytest.raises(PreconditionError):
        induced_las_from_o_operator(bad, nil)


def test_bijective_transfer():
    mz = module("m1", "m2")
    zero_rep = ConformalRep(
        Z2,
        mz,
        (
            ((Poly.zero(), Poly.zero()), (Poly.zero(), Poly.zero())),
            ((Poly.zero(), Poly.zero()), (Poly.zero(), Poly.zero())),
        ),
    )
    tb = module_map(mz, Z2, [[1, D], [0, 1]])
    assert compatible_las_from_bijective(tb, zero_rep) == Z2
    with pytest.raises(ShapeError) as exc:
        compatible_las_from_bijective(module_map(mz, Z2, [[D, 0], [0, 1]]), zero_rep)
    assert "determinant D" in str(exc.value)
    # identity on the adjoint action double-counts the product
    with pytest.raises(PreconditionError):
        compatible_las_from_bijective(
            module_map(CUR2, CUR2, mat_identity(2)), adjoint_rep(CUR2)
        )
    nil = nilpotent_rep()
    with pytest.raises(ShapeError):
        compatible_las_from_bijective(module_map(nil.module, Z1, [[0, 1]]), nil)


def test_form_pairing_values():
    space = FreeModule(("e1", "e2"))
    phi = bilinear_form(space, [[0, 1], [-1, 0]])
    assert str(pair(phi, space.basis(0), space.basis(1), "T")) == "1"
    assert str(pair(phi, space.basis(0).scale(D), space.basis(1), "T")) == "-T"
    assert str(pair(phi, space.basis(1), space.basis(0).scale(D), "T")) == "-T"
    with pytest.raises(ShapeError):
        pair(phi, space.basis(0), space.basis(1), "D")
    with pytest.raises(ShapeError):
        pair(phi, CUR2.basis(0).scale(Poly.var("T")), CUR2.basis(1), "T")
    with pytest.raises(ShapeError):
        pair(phi, FreeModule(("x", "y")).basis(0), space.basis(1), "T")


def test_skew_nondegenerate_labels():
    space = FreeModule(("e1", "e2"))
    assert check_skew_nondegenerate(bilinear_form(space, [[0, 1], [-1, 0]])).passed
    # an odd diagonal entry is allowed by the skew condition
    assert check_skew_nondegenerate(bilinear_form(space, [[L, 1], [-1, 0]])).passed
    degenerate = check_skew_nondegenerate(bilinear_form(space, [[0, L], [L, 0]]))
    assert [(c.label, c.indices, str(c.residual)) for c in degenerate.counterexamples] == [
        ("nondegenerate", (), "-L^2")
    ]
    not_skew = check_skew_nondegenerate(bilinear_form(space, [[0, 1], [1, 0]]))
    assert ("skew", (0, 1), "2") in [
        (c.label, c.indices, str(c.residual)) for c in not_skew.counterexamples
    ]


def test_symplectic_oracles():
    space = FreeModule(("e1", "e2"))
    phi = bilinear_form(space, [[0, 1], [-1, 0]])
    assert check_symplectic(AB2, phi).passed
    report = check_symplectic(CUR2, phi)
    assert not report.passed
    assert report.counterexamples[0].indices == (0, 0, 0)
    assert str(report.counterexamples[0].residual) == "1"
    with pytest.raises(PreconditionError) as exc:
        check_symplectic(AB2, bilinear_form(space, [[0, 1], [1, 0]]))
    assert exc.value.report.check == "skew-nondegenerate"
    with pytest.raises(ShapeError):
        check_symplectic(CUR2, bilinear_form(FreeModule(("x", "y")), [[0, 1], [-1, 0]]))


def test_current_symplectic():
    algebra, form = current_symplectic(zero_finite_algebra("e1", "e2"), [[0, 1], [-1, 0]])
    assert check_symplectic(algebra, form).passed
    assert algebra == AB2
    from helpers import B2

    with pytest.raises(PreconditionError) as exc:
        current_symplectic(B2, [[0, 1], [-1, 0]])
    assert {c.label for c in exc.value.report.counterexamples} == {"invariance"}
    with pytest.raises(PreconditionError) as exc:
        current_symplectic(zero_finite_algebra("e1", "e2"), [[0, 1], [1, 0]])
    assert "skew" in {c.label for c in exc.value.report.counterexamples}
    with pytest.raises(PreconditionError) as exc:
        current_symplectic(zero_finite_algebra("e1", "e2"), [[0, 0], [0, 0]])
    assert "nondegenerate" in {c.label for c in exc.value.report.counterexamples}
    with pytest.raises(ShapeError):
        current_symplectic(zero_finite_algebra("e1", "e2"), [[0, 1]])


def test_induced_product_from_symplectic_form():
    space = FreeModule(("e1", "e2"))
    phi = bilinear_form(space, [[0, 1], [-1, 0]])
    out = induced_las_from_symplectic(AB2, phi)
    assert all(c.is_zero() for row in out.structure for vec in row for c in vec)
    # polynomial entries with unit determinant go through the adjugate solve
    a4 = zero_algebra("e1", "e2", "e3", "e4")
    phi4 = bilinear_form(
        FreeModule(a4.basis_names),
        [[0, 0, 1, L], [0, 0, 0, 1], [-1, 0, 0, 0], [L, -1, 0, 0]],
    )
    assert check_skew_nondegenerate(phi4).passed
    out4 = induced_las_from_symplectic(a4, phi4)
    assert all(c.is_zero() for row in out4.structure for vec in row for c in vec)
    with pytest.raises(PreconditionError):
        induced_las_from_symplectic(CUR2, phi)


def test_module_map_api():
    space = FreeModule(("m1", "m2"))
    with pytest.raises(ShapeError):
        module_map(space, Z1, [[0, 1], [1, 0]])
    with pytest.raises(ShapeError):
        module_map(space, Z1, [[L, 0]])
    t = module_map(space, Z1, [[D, 1]])
    v = space.element((Poly.const(2), D))
    assert str(t.apply(v)) == "(3*D)*a" or str(t.apply(v)) == "3*D*a"
    with pytest.raises(ShapeError):
        t.apply(Z1.basis(0))
