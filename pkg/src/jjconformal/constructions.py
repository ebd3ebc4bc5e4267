"""Constructions producing conformal algebras from smaller data.

Covered here: current algebras of finite algebras, tensoring with a
commutative associative algebra, semidirect products with a representation,
and the quadratic correspondence

    u lam v = u star v + D (u circ v) + L (u circ v - v circ u)

between two-product finite structures and conformal algebras whose
structure constants are affine in D and L.
"""

from __future__ import annotations

from fractions import Fraction

from .conformal import (
    CheckReport,
    ConformalAlgebra,
    Counterexample,
    check_jacobi_jordan,
)
from .errors import PreconditionError, ShapeError
from .finite import FiniteAlgebra, MockGD, check_mock_gd, _residual_element
from .poly import Poly
from .reps import ConformalRep, check_rep


def current_algebra(finite: FiniteAlgebra) -> ConformalAlgebra:
    """Same structure constants, read as constant polynomials."""
    n = finite.dim
    table = tuple(
        tuple(
            tuple(Poly.const(c) for c in finite.structure[i][j]) for j in range(n)
        )
        for i in range(n)
    )
    return ConformalAlgebra(finite.basis_names, table)


def _comm_assoc_report(a: FiniteAlgebra) -> CheckReport:
    from .finite import fd_commutative_residual, _vec_is_zero, _vec_sub

    found = []
    for i in range(a.dim):
        for j in range(a.dim):
            r = fd_commutative_residual(a, i, j)
            if not _vec_is_zero(r):
                found.append(Counterexample((i, j), _residual_element(a, r), "commutative"))
    for i in range(a.dim):
        for j in range(a.dim):
            for k in range(a.dim):
                r = _vec_sub(
                    a.mul(a.mul(a.basis(i), a.basis(j)), a.basis(k)),
                    a.mul(a.basis(i), a.mul(a.basis(j), a.basis(k))),
                )
                if not _vec_is_zero(r):
                    found.append(
                        Counterexample((i, j, k), _residual_element(a, r), "associative")
                    )
    return CheckReport("commutative-associative", tuple(found))


def tensor_with_comm_assoc(
    finite: FiniteAlgebra, algebra: ConformalAlgebra
) -> ConformalAlgebra:
    """(a ox x) lam (b ox y) = (a*b) ox (x lam y) on the tensor basis.

    The finite factor must be commutative and associative; basis vectors of
    the result are named a_x for a in the finite basis, x in the conformal
    basis, ordered with the conformal index fastest.
    """
    pre = _comm_assoc_report(finite)
    if not pre.passed:
        raise PreconditionError("the finite factor is not commutative associative", pre)
    p, n = finite.dim, algebra.rank
    names = tuple(
        f"{fa}_{cb}" for fa in finite.basis_names for cb in algebra.basis_names
    )
    if len(set(names)) != p * n:
        raise ShapeError("tensor basis names collide")
    rank = p * n
    table = [[None] * rank for _ in range(rank)]
    for alpha in range(p):
        for i in range(n):
            for beta in range(p):
                for j in range(n):
                    vec = [Poly.zero()] * rank
                    prod = finite.structure[alpha][beta]
                    for gamma in range(p):
                        c = prod[gamma]
                        if not c:
                            continue
                        for k in range(n):
                            entry = algebra.structure[i][j][k]
                            if not entry.is_zero():
                                vec[gamma * n + k] = vec[gamma * n + k] + entry * c
                    table[alpha * n + i][beta * n + j] = tuple(vec)
    return ConformalAlgebra(names, tuple(tuple(row) for row in table))


def semidirect_raw(rep: ConformalRep) -> ConformalAlgebra:
    """Unvalidated semidirect table A + M with M an abelian ideal.

    (a + u) lam (b + v) = a lam b + pi(a)_lam v + pi(b)_{-lam-D} u.
    """
    a = rep.algebra
    n, m = a.rank, rep.module.rank
    names = a.basis_names + rep.module.basis_names
    if len(set(names)) != n + m:
        raise ShapeError("algebra and module basis names collide")
    rank = n + m
    minus = -Poly.var("L") - Poly.var("D")
    table = [[tuple(Poly.zero() for _ in range(rank)) for _ in range(rank)] for _ in range(rank)]
    for i in range(n):
        for j in range(n):
            vec = [Poly.zero()] * rank
            for k in range(n):
                vec[k] = a.structure[i][j][k]
            table[i][j] = tuple(vec)
    for i in range(n):
        for q in range(m):
            # e_i lam m_q = pi(e_i)_lam m_q
            vec = [Poly.zero()] * rank
            for l in range(m):
                vec[n + l] = rep.action[i][l][q]
            table[i][n + q] = tuple(vec)
            # m_q lam e_i = pi(e_i)_{-lam-D} m_q
            vec = [Poly.zero()] * rank
            for l in range(m):
                vec[n + l] = rep.action[i][l][q].subs("L", minus)
            table[n + q][i] = tuple(vec)
    return ConformalAlgebra(names, tuple(tuple(row) for row in table))


def semidirect_product(rep: ConformalRep) -> ConformalAlgebra:
    pre = check_rep(rep)
    if not pre.passed:
        raise PreconditionError("not a representation", pre)
    out = semidirect_raw(rep)
    post = check_jacobi_jordan(out)
    if not post.passed:
        raise AssertionError("internal error: semidirect product fails Jacobi-Jordan")
    return out


# -- quadratic correspondence ----------------------------------------------


def quadratic_algebra(g: MockGD) -> ConformalAlgebra:
    """Raw quadratic table; no validity check on the two-product input."""
    n = g.dim
    dvar, lvar = Poly.var("D"), Poly.var("L")
    table = []
    for i in range(n):
        row = []
        for j in range(n):
            star = g.star.structure[i][j]
            circ = g.circ.structure[i][j]
            circ_op = g.circ.structure[j][i]
            vec = tuple(
                Poly.const(star[k])
                + dvar * circ[k]
                + lvar * (circ[k] - circ_op[k])
                for k in range(n)
            )
            row.append(vec)
        table.append(tuple(row))
    return ConformalAlgebra(g.basis_names, tuple(table))


def quadratic_from_mock_gd(g: MockGD) -> ConformalAlgebra:
    pre = check_mock_gd(g)
    if not pre.passed:
        raise PreconditionError("not a valid mock-GD structure", pre)
    out = quadratic_algebra(g)
    post = check_jacobi_jordan(out)
    if not post.passed:
        raise AssertionError("internal error: quadratic algebra fails Jacobi-Jordan")
    return out


def mock_gd_from_quadratic(algebra: ConformalAlgebra) -> MockGD:
    """Read star and circ back from an affine structure table.

    Requires every entry to be w + u*D + v*L with rational w, u, v and the
    L-part consistent with the D-parts: v_ij = u_ij - u_ji componentwise.
    The result is the raw decomposition; it is a valid mock-GD exactly when
    the source algebra is Jacobi-Jordan.
    """
    n = algebra.rank
    w = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    u = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    v = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                entry = algebra.structure[i][j][k]
                for mono, coeff in entry.terms().items():
                    if mono == ():
                        w[i][j][k] = coeff
                    elif mono == (("D", 1),):
                        u[i][j][k] = coeff
                    elif mono == (("L", 1),):
                        v[i][j][k] = coeff
                    else:
                        raise ShapeError(
                            f"structure constant at ({i+1},{j+1}) is not affine in D and L: {entry}"
                        )
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if v[i][j][k] != u[i][j][k] - u[j][i][k]:
                    raise ShapeError(
                        f"L-part at ({i+1},{j+1}) is not the antisymmetrised D-part; "
                        "the table is not of quadratic shape"
                    )
    star = FiniteAlgebra(
        algebra.basis_names,
        tuple(tuple(tuple(w[i][j]) for j in range(n)) for i in range(n)),
    )
    circ = FiniteAlgebra(
        algebra.basis_names,
        tuple(tuple(tuple(u[i][j]) for j in range(n)) for i in range(n)),
    )
    return MockGD(star, circ)
