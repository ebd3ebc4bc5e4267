"""O-operators, Rota-Baxter operators and conformal bilinear forms.

Module maps here are matrices over polynomials in D alone (morphisms of
free modules commuting with the derivation).  An O-operator T relative to a
representation pi satisfies

    Tu lam Tv = T( pi(Tu)_lam v + pi(Tv)_{-lam-D} u )

and induces a left-anti-symmetric product u * v = pi(Tu)_lam v whose
symmetrisation is Jacobi-Jordan.  Bilinear forms are matrices over L with
the pairing rule phi_t(p(D)u, q(D)v) = p(-t) q(t) phi_t(u, v); a symplectic
form is skew, nondegenerate (unit determinant) and satisfies

    phi_lam(a, b_mu c) + phi_mu(b, a_lam c) + phi_{lam+mu}(a_lam b, c) = 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .conformal import (
    CheckReport,
    ConformalAlgebra,
    Counterexample,
    Element,
    FreeModule,
    admissible_algebra,
    attach,
    check_jacobi_jordan,
    check_left_anti_symmetric,
    eval_product,
)
from .errors import PreconditionError, ShapeError
from .finite import FiniteAlgebra
from .poly import Poly, fresh_name, mat_adjugate, mat_det, mat_subs
from .reps import ConformalRep, adjoint_rep, apply_action


@dataclass(frozen=True)
class ModuleMap:
    """F[D]-linear map between free modules; matrix columns index the source."""

    source: FreeModule
    target: FreeModule
    matrix: tuple  # target.rank x source.rank, entries Poly in D

    def __post_init__(self):
        if len(self.matrix) != self.target.rank or any(
            len(row) != self.source.rank for row in self.matrix
        ):
            raise ShapeError("matrix does not match source and target ranks")
        for row in self.matrix:
            for entry in row:
                bad = entry.variables() - {"D"}
                if bad:
                    raise ShapeError(
                        f"module map entries may only use D, got {sorted(bad)}"
                    )

    def apply(self, v: Element) -> Element:
        if v.space != self.source:
            raise ShapeError("element does not live over the map's source")
        out = [Poly.zero()] * self.target.rank
        for k, c in enumerate(v.coeffs):
            if c.is_zero():
                continue
            for i in range(self.target.rank):
                entry = self.matrix[i][k]
                if not entry.is_zero():
                    out[i] = out[i] + entry * c
        return Element(self.target, tuple(out))


def module_map(source: FreeModule, target: FreeModule, rows) -> ModuleMap:
    return ModuleMap(
        source, target, tuple(tuple(Poly._coerce(x) for x in row) for row in rows)
    )


def o_operator_residual(t: ModuleMap, rep: ConformalRep, p: int, q: int) -> Element:
    minus = -Poly.var("L") - Poly.var("D")
    up, vq = rep.module.basis(p), rep.module.basis(q)
    tu, tv = t.apply(up), t.apply(vq)
    lhs = eval_product(tu, tv, "L")
    s = fresh_name({"L"})
    inner = apply_action(rep, tu, vq, "L") + attach(
        apply_action(rep, tv, up, s), s, minus
    )
    return lhs - t.apply(inner)


def check_o_operator(t: ModuleMap, rep: ConformalRep) -> CheckReport:
    if t.source != rep.module or t.target != rep.algebra:
        raise ShapeError("map must go from the representation module to its algebra")
    found = []
    for p in range(rep.module.rank):
        for q in range(rep.module.rank):
            r = o_operator_residual(t, rep, p, q)
            if not r.is_zero():
                found.append(Counterexample((p, q), r))
    return CheckReport("o-operator", tuple(found))


def rota_baxter_residual(
    r: ModuleMap, algebra: ConformalAlgebra, alpha: Fraction, i: int, j: int
) -> Element:
    a, b = algebra.basis(i), algebra.basis(j)
    ra, rb = r.apply(a), r.apply(b)
    lhs = eval_product(ra, rb, "L")
    inner = eval_product(ra, b, "L") + eval_product(a, rb, "L")
    rhs = r.apply(inner) + r.apply(eval_product(a, b, "L")).scale(alpha)
    return lhs - rhs


def check_rota_baxter(r: ModuleMap, alpha) -> CheckReport:
    algebra = r.source
    if r.target != algebra or not isinstance(algebra, ConformalAlgebra):
        raise ShapeError("a Rota-Baxter operator maps a conformal algebra to itself")
    alpha = Fraction(alpha)
    found = []
    for i in range(algebra.rank):
        for j in range(algebra.rank):
            res = rota_baxter_residual(r, algebra, alpha, i, j)
            if not res.is_zero():
                found.append(Counterexample((i, j), res))
    return CheckReport(f"rota-baxter({alpha})", tuple(found))


def induced_las_raw(t: ModuleMap, rep: ConformalRep) -> ConformalAlgebra:
    """u * v = pi(Tu)_L v as a structure table on the module basis."""
    m = rep.module.rank
    table = tuple(
        tuple(
            apply_action(rep, t.apply(rep.module.basis(p)), rep.module.basis(q), "L").coeffs
            for q in range(m)
        )
        for p in range(m)
    )
    return ConformalAlgebra(rep.module.basis_names, table)


def induced_las_from_o_operator(t: ModuleMap, rep: ConformalRep) -> ConformalAlgebra:
    pre = check_o_operator(t, rep)
    if not pre.passed:
        raise PreconditionError("not an O-operator", pre)
    out = induced_las_raw(t, rep)
    las = check_left_anti_symmetric(out)
    if not las.passed:
        raise AssertionError("internal error: induced product is not left-anti-symmetric")
    adm = check_jacobi_jordan(admissible_algebra(out))
    if not adm.passed:
        raise AssertionError("internal error: admissible product fails Jacobi-Jordan")
    return out


def o_operator_homomorphism_report(t: ModuleMap, rep: ConformalRep) -> CheckReport:
    """T(u * v) = Tu lam Tv for the induced product (evidence of the theorem)."""
    induced = induced_las_raw(t, rep)
    found = []
    for p in range(rep.module.rank):
        for q in range(rep.module.rank):
            prod = Element(rep.module, induced.structure[p][q])
            lhs = t.apply(prod)
            rhs = eval_product(t.apply(rep.module.basis(p)), t.apply(rep.module.basis(q)), "L")
            r = lhs - rhs
            if not r.is_zero():
                found.append(Counterexample((p, q), r))
    return CheckReport("o-operator-homomorphism", tuple(found))


def compatible_las_from_bijective(t: ModuleMap, rep: ConformalRep) -> ConformalAlgebra:
    """a * b = T( pi(a)_L T^{-1}(b) ) for bijective T; admissible gives back A.

    Bijectivity over F[D] means the determinant is a nonzero rational.
    """
    algebra = rep.algebra
    if rep.module.rank != algebra.rank:
        raise ShapeError("bijective transfer needs module and algebra of equal rank")
    pre = check_o_operator(t, rep)
    if not pre.passed:
        raise PreconditionError("not an O-operator", pre)
    det = mat_det(t.matrix)
    if not det.is_const() or det.is_zero():
        raise ShapeError(f"map is not invertible over F[D]: determinant {det}")
    inv_scale = Fraction(1) / det.const_value()
    adj = mat_adjugate(t.matrix)
    n = algebra.rank
    table = []
    for i in range(n):
        row = []
        for j in range(n):
            tinv_b = Element(
                rep.module, tuple(adj[k][j] * inv_scale for k in range(n))
            )
            row.append(t.apply(apply_action(rep, algebra.basis(i), tinv_b, "L")).coeffs)
        table.append(tuple(row))
    out = ConformalAlgebra(algebra.basis_names, tuple(table))
    if admissible_algebra(out).structure != algebra.structure:
        raise AssertionError("internal error: admissible product does not recover the algebra")
    return out


# -- bilinear forms ---------------------------------------------------------


@dataclass(frozen=True)
class ConformalBilinearForm:
    space: FreeModule
    matrix: tuple  # n x n, entries Poly in L; matrix[i][j] = phi_L(e_i, e_j)

    def __post_init__(self):
        n = self.space.rank
        if len(self.matrix) != n or any(len(row) != n for row in self.matrix):
            raise ShapeError("form matrix does not match the rank")
        for row in self.matrix:
            for entry in row:
                bad = entry.variables() - {"L"}
                if bad:
                    raise ShapeError(f"form entries may only use L, got {sorted(bad)}")


def bilinear_form(space: FreeModule, rows) -> ConformalBilinearForm:
    return ConformalBilinearForm(
        space, tuple(tuple(Poly._coerce(x) for x in row) for row in rows)
    )


def pair(form: ConformalBilinearForm, x: Element, y: Element, t: str) -> Poly:
    """phi_t(x, y): left coefficients D -> -t, right D -> t."""
    if (
        x.space.basis_names != form.space.basis_names
        or y.space.basis_names != form.space.basis_names
    ):
        raise ShapeError("elements do not live over the form's space")
    if t == "D" or t in x.params() or t in y.params():
        raise ShapeError(f"parameter {t} is not fresh for the operands")
    tvar = Poly.var(t)
    out = Poly.zero()
    for i, xc in enumerate(x.coeffs):
        if xc.is_zero():
            continue
        xs = xc.subs("D", -tvar)
        for j, yc in enumerate(y.coeffs):
            if yc.is_zero():
                continue
            entry = form.matrix[i][j]
            if not entry.is_zero():
                out = out + xs * yc.subs("D", tvar) * entry.subs("L", tvar)
    return out


def skew_residual(form: ConformalBilinearForm, i: int, j: int) -> Poly:
    return form.matrix[i][j] + form.matrix[j][i].subs("L", -Poly.var("L"))


def check_skew_nondegenerate(form: ConformalBilinearForm) -> CheckReport:
    """Skew: phi_L(u,v) = -phi_{-L}(v,u); nondegenerate: unit determinant."""
    found = []
    for i in range(form.space.rank):
        for j in range(i, form.space.rank):
            r = skew_residual(form, i, j)
            if not r.is_zero():
                found.append(Counterexample((i, j), r, "skew"))
    det = mat_det(form.matrix)
    if not det.is_const() or det.is_zero():
        found.append(Counterexample((), det, "nondegenerate"))
    return CheckReport("skew-nondegenerate", tuple(found))


def symplectic_residual(
    algebra: ConformalAlgebra, form: ConformalBilinearForm, i: int, j: int, k: int
) -> Poly:
    lam, mu = Poly.var("L"), Poly.var("M")
    a, b, c = algebra.basis(i), algebra.basis(j), algebra.basis(k)
    # phi_lam(a, b_mu c): recompute pair at a fresh name, then attach
    s = fresh_name({"L", "M"})
    t1 = pair(form, a, eval_product(b, c, "M"), s).subs(s, Poly.var("L"))
    t2 = pair(form, b, eval_product(a, c, "L"), s).subs(s, Poly.var("M"))
    t3 = pair(form, eval_product(a, b, "L"), c, s).subs(s, lam + mu)
    return t1 + t2 + t3


def check_symplectic(
    algebra: ConformalAlgebra, form: ConformalBilinearForm
) -> CheckReport:
    if form.space.basis_names != algebra.basis_names:
        raise ShapeError("form and algebra do not share a basis")
    pre = check_skew_nondegenerate(form)
    if not pre.passed:
        raise PreconditionError("form is not skew and nondegenerate", pre)
    found = []
    for i in range(algebra.rank):
        for j in range(algebra.rank):
            for k in range(algebra.rank):
                r = symplectic_residual(algebra, form, i, j, k)
                if not r.is_zero():
                    found.append(Counterexample((i, j, k), r))
    return CheckReport("symplectic", tuple(found))


def current_symplectic(finite: FiniteAlgebra, phi_rows) -> tuple:
    """Constant symplectic form on the current algebra of a finite algebra.

    phi must be skew, invertible, and invariant:
    phi(a, bc) + phi(b, ac) + phi(ab, c) = 0 over basis triples.
    """
    from .constructions import current_algebra
    from .finite import _residual_element, _vec_is_zero

    n = finite.dim
    phi = tuple(tuple(Fraction(x) for x in row) for row in phi_rows)
    if len(phi) != n or any(len(row) != n for row in phi):
        raise ShapeError("form matrix does not match the dimension")
    found = []
    for i in range(n):
        for j in range(i, n):
            if phi[i][j] + phi[j][i]:
                found.append(Counterexample((i, j), Poly.const(phi[i][j] + phi[j][i]), "skew"))
    det = mat_det(tuple(tuple(Poly.const(x) for x in row) for row in phi))
    if det.is_zero():
        found.append(Counterexample((), det, "nondegenerate"))
    for i in range(n):
        for j in range(n):
            for k in range(n):
                val = (
                    sum(finite.structure[j][k][l] * phi[i][l] for l in range(n))
                    + sum(finite.structure[i][k][l] * phi[j][l] for l in range(n))
                    + sum(finite.structure[i][j][l] * phi[l][k] for l in range(n))
                )
                if val:
                    found.append(Counterexample((i, j, k), Poly.const(val), "invariance"))
    if found:
        raise PreconditionError(
            "finite form is not symplectic", CheckReport("finite-symplectic", tuple(found))
        )
    algebra = current_algebra(finite)
    form = ConformalBilinearForm(
        FreeModule(algebra.basis_names),
        tuple(tuple(Poly.const(x) for x in row) for row in phi),
    )
    post = check_symplectic(algebra, form)
    if not post.passed:
        raise AssertionError("internal error: current form fails the symplectic identity")
    return algebra, form


def induced_las_from_symplectic(
    algebra: ConformalAlgebra, form: ConformalBilinearForm
) -> ConformalAlgebra:
    """Solve phi_M(e_i *_L e_c-row, .) against the symplectic identity.

    The defining relation is phi_{mu}(u *_lam v, w)... concretely: the
    product u * v is the unique element with

        phi_M(u *_L v, w) = phi_{M-L}(v, u_L w)   for all w,

    solved exactly via the adjugate of phi(M), then M -> -D.
    """
    pre = check_symplectic(algebra, form)
    if not pre.passed:
        raise PreconditionError("form is not symplectic for this algebra", pre)
    n = algebra.rank
    phi_m = mat_subs(form.matrix, "L", Poly.var("M"))
    det = mat_det(phi_m)
    inv_scale = Fraction(1) / det.const_value()
    adj = mat_adjugate(phi_m)
    shift = Poly.var("M") - Poly.var("L")
    table = []
    for i in range(n):
        row = []
        for j in range(n):
            rhs = []
            for c in range(n):
                w = eval_product(algebra.basis(i), algebra.basis(c), "L")
                # phi_{M-L}(e_j, w): right slot D -> M-L, form entry L -> M-L
                val = Poly.zero()
                for l, wc in enumerate(w.coeffs):
                    if wc.is_zero():
                        continue
                    entry = form.matrix[j][l]
                    if not entry.is_zero():
                        val = val + wc.subs("D", shift) * entry.subs("L", shift)
                rhs.append(val)
            coeffs = []
            for k in range(n):
                acc = Poly.zero()
                for c in range(n):
                    acc = acc + rhs[c] * adj[c][k]
                coeffs.append((acc * inv_scale).subs("M", -Poly.var("D")))
            row.append(tuple(coeffs))
        table.append(tuple(row))
    out = ConformalAlgebra(algebra.basis_names, tuple(table))
    las = check_left_anti_symmetric(out)
    if not las.passed:
        raise AssertionError("internal error: symplectic-induced product is not left-anti-symmetric")
    if admissible_algebra(out).structure != algebra.structure:
        raise AssertionError("internal error: admissible product does not recover the algebra")
    return out
