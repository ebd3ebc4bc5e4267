"""Conformal representations on free modules of finite rank.

A representation assigns to each algebra basis vector a matrix of
polynomials in D and L; `apply_action` evaluates pi(x)_t v with x in the
operator slot (its D goes to -t, matching pi(D a)_lam = -lam pi(a)_lam) and
v in the module slot (D -> t+D).  The defining identity is

    pi(a_lam b)_{lam+mu} = -pi(a)_lam pi(b)_mu - pi(b)_mu pi(a)_lam.
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
    attach,
    eval_product,
)
from .errors import PreconditionError, ShapeError
from .poly import Poly, fresh_name


@dataclass(frozen=True)
class ConformalRep:
    algebra: ConformalAlgebra
    module: FreeModule
    action: tuple  # per algebra basis index, an m x m matrix over D, L

    def __post_init__(self):
        m = self.module.rank
        if len(self.action) != self.algebra.rank or any(
            len(mat) != m or any(len(row) != m for row in mat)
            for mat in self.action
        ):
            raise ShapeError("action matrices do not match algebra rank and module rank")
        for mat in self.action:
            for row in mat:
                for entry in row:
                    bad = entry.variables() - {"D", "L"}
                    if bad:
                        raise ShapeError(
                            f"action matrices may only use D and L, got {sorted(bad)}"
                        )


def apply_action(rep: ConformalRep, x: Element, v: Element, t: str) -> Element:
    """pi(x)_t v for x over the algebra and v over the module."""
    if x.space != rep.algebra:
        raise ShapeError("operator element does not live over the representation's algebra")
    if v.space != rep.module:
        raise ShapeError("module element does not live over the representation's module")
    if t == "D" or t in x.params() or t in v.params():
        raise ShapeError(f"parameter {t} is not fresh for the operands")
    m = rep.module.rank
    out = [Poly.zero()] * m
    tvar = Poly.var(t)
    for i, xc in enumerate(x.coeffs):
        if xc.is_zero():
            continue
        xs = xc.subs("D", -tvar)
        mat = rep.action[i]
        for k, vc in enumerate(v.coeffs):
            if vc.is_zero():
                continue
            vs = vc.subs("D", tvar + Poly.var("D"))
            factor = xs * vs
            for l in range(m):
                entry = mat[l][k]
                if not entry.is_zero():
                    out[l] = out[l] + factor * entry.subs("L", tvar)
    return Element(rep.module, tuple(out))


def rep_residual(rep: ConformalRep, i: int, j: int, k: int) -> Element:
    lam, mu = Poly.var("L"), Poly.var("M")
    a = rep.algebra.basis(i)
    b = rep.algebra.basis(j)
    mk = rep.module.basis(k)
    s = fresh_name({"L", "M"})
    t1 = attach(apply_action(rep, eval_product(a, b, "L"), mk, s), s, lam + mu)
    t2 = apply_action(rep, a, apply_action(rep, b, mk, "M"), "L")
    t3 = apply_action(rep, b, apply_action(rep, a, mk, "L"), "M")
    return t1 + t2 + t3


def check_rep(rep: ConformalRep) -> CheckReport:
    """pi(a_L b)_{L+M} + pi(a)_L pi(b)_M + pi(b)_M pi(a)_L = 0 over bases."""
    found = []
    for i in range(rep.algebra.rank):
        for j in range(rep.algebra.rank):
            for k in range(rep.module.rank):
                r = rep_residual(rep, i, j, k)
                if not r.is_zero():
                    found.append(Counterexample((i, j, k), r))
    return CheckReport("rep", tuple(found))


def adjoint_rep(algebra: ConformalAlgebra) -> ConformalRep:
    """The algebra acting on itself by left multiplication."""
    n = algebra.rank
    action = tuple(
        tuple(
            tuple(algebra.structure[i][k][l] for k in range(n)) for l in range(n)
        )
        for i in range(n)
    )
    # action[i][l][k] = coefficient of e_l in e_i lam e_k
    return ConformalRep(algebra, algebra, action)


def current_rep(finite, finite_rep_matrices) -> ConformalRep:
    """Lift rho on a finite algebra to a rep of its current algebra.

    rho must satisfy rho(a*b) = -(rho(a)rho(b) + rho(b)rho(a)); the lifted
    action matrices are the constant matrices rho(e_i).
    """
    from .constructions import current_algebra

    n = finite.dim
    mats = [tuple(tuple(Fraction(x) for x in row) for row in m) for m in finite_rep_matrices]
    if len(mats) != n:
        raise ShapeError("one matrix per finite basis vector required")
    m = len(mats[0])
    for mat in mats:
        if len(mat) != m or any(len(row) != m for row in mat):
            raise ShapeError("representation matrices must be square of equal size")

    def matmul(a, b):
        return tuple(
            tuple(sum(a[i][k] * b[k][j] for k in range(m)) for j in range(m))
            for i in range(m)
        )

    def madd(a, b, scale=1):
        return tuple(
            tuple(a[i][j] + scale * b[i][j] for j in range(m)) for i in range(m)
        )

    witnesses = []
    for i in range(n):
        for j in range(n):
            target = [[Fraction(0)] * m for _ in range(m)]
            for k, c in enumerate(finite.structure[i][j]):
                if c:
                    for r in range(m):
                        for s in range(m):
                            target[r][s] += c * mats[k][r][s]
            anti = madd(matmul(mats[i], mats[j]), matmul(mats[j], mats[i]))
            if any(
                target[r][s] != -anti[r][s] for r in range(m) for s in range(m)
            ):
                witnesses.append((i, j))
    if witnesses:
        raise PreconditionError(
            f"matrices do not satisfy rho(ab) = -(rho(a)rho(b)+rho(b)rho(a)) at pairs {witnesses}"
        )
    module = FreeModule(tuple(f"m{i+1}" for i in range(m)))
    action = tuple(
        tuple(tuple(Poly.const(entry) for entry in row) for row in mat)
        for mat in mats
    )
    return ConformalRep(current_algebra(finite), module, action)


def dual_rep(rep: ConformalRep) -> ConformalRep:
    """Dual action on the dual module: matrices transposed with D -> -D-L."""
    pre = check_rep(rep)
    if not pre.passed:
        raise PreconditionError("not a representation", pre)
    sub = -Poly.var("D") - Poly.var("L")
    m = rep.module.rank
    action = tuple(
        tuple(
            tuple(mat[k][l].subs("D", sub) for k in range(m)) for l in range(m)
        )
        for mat in rep.action
    )
    return ConformalRep(rep.algebra, FreeModule(rep.module.basis_names), action)
