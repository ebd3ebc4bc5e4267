"""Finite-dimensional algebras over the rationals.

These are plain structure-constant algebras used as inputs to the conformal
constructions (current algebras, quadratic algebras) and as an independent
oracle: every check here works directly on rational vectors.

The two-product container `MockGD` couples a commutative product (star) with
a second product (circ) subject to anti-Novikov axioms and a five-term
compatibility law; such pairs are exactly what the quadratic construction
consumes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .conformal import CheckReport, Counterexample, Element, FreeModule
from .errors import PreconditionError, ShapeError

FVec = tuple  # tuple[Fraction, ...]
FMatrix = tuple  # tuple[tuple[Fraction, ...], ...], columns index the source


def _fvec(values, dim: int) -> FVec:
    vec = tuple(Fraction(v) for v in values)
    if len(vec) != dim:
        raise ShapeError(f"expected a vector of length {dim}")
    return vec


@dataclass(frozen=True)
class FiniteAlgebra:
    """dim-dimensional algebra; structure[i][j] = e_i * e_j as a vector."""

    basis_names: tuple[str, ...]
    structure: tuple

    def __post_init__(self):
        n = self.dim
        if len(set(self.basis_names)) != n:
            raise ShapeError("duplicate basis names")
        if len(self.structure) != n or any(
            len(row) != n or any(len(vec) != n for vec in row)
            for row in self.structure
        ):
            raise ShapeError("structure table does not match the dimension")

    @property
    def dim(self) -> int:
        return len(self.basis_names)

    def mul(self, u: FVec, v: FVec) -> FVec:
        n = self.dim
        out = [Fraction(0)] * n
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in enumerate(v):
                if not b:
                    continue
                for k, c in enumerate(self.structure[i][j]):
                    if c:
                        out[k] += a * b * c
        return tuple(out)

    def basis(self, i: int) -> FVec:
        return tuple(Fraction(1 if j == i else 0) for j in range(self.dim))


def finite_algebra(names, table) -> FiniteAlgebra:
    """Build from a sparse {(i, j): vector} table."""
    names = tuple(names)
    n = len(names)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            vec = table.get((i, j), None)
            row.append(_fvec(vec, n) if vec is not None else tuple([Fraction(0)] * n))
        rows.append(tuple(row))
    return FiniteAlgebra(names, tuple(rows))


def zero_finite_algebra(*names: str) -> FiniteAlgebra:
    return finite_algebra(names, {})


def _residual_element(a: FiniteAlgebra, vec: FVec) -> Element:
    from .poly import Poly

    return Element(FreeModule(a.basis_names), tuple(Poly.const(c) for c in vec))


def _vec_add(*vecs: FVec) -> FVec:
    return tuple(sum(parts) for parts in zip(*vecs))


def _vec_is_zero(v: FVec) -> bool:
    return not any(v)


def _vec_sub(u: FVec, v: FVec) -> FVec:
    return tuple(a - b for a, b in zip(u, v))


# -- axiom checks -----------------------------------------------------------


def fd_commutative_residual(a: FiniteAlgebra, i: int, j: int) -> FVec:
    return _vec_sub(a.structure[i][j], a.structure[j][i])


def check_commutative_fd(a: FiniteAlgebra) -> CheckReport:
    found = []
    for i in range(a.dim):
        for j in range(a.dim):
            r = fd_commutative_residual(a, i, j)
            if not _vec_is_zero(r):
                found.append(Counterexample((i, j), _residual_element(a, r)))
    return CheckReport("commutative", tuple(found))


def fd_jacobi_residual(a: FiniteAlgebra, i: int, j: int, k: int) -> FVec:
    ei, ej, ek = a.basis(i), a.basis(j), a.basis(k)
    return _vec_add(
        a.mul(ei, a.mul(ej, ek)), a.mul(ej, a.mul(ek, ei)), a.mul(ek, a.mul(ei, ej))
    )


def check_jacobi_jordan_fd(a: FiniteAlgebra) -> CheckReport:
    """Commutative and a(bc) + b(ca) + c(ab) = 0 over basis triples."""
    found = [
        Counterexample(ce.indices, ce.residual, "commutative")
        for ce in check_commutative_fd(a).counterexamples
    ]
    for i in range(a.dim):
        for j in range(a.dim):
            for k in range(a.dim):
                r = fd_jacobi_residual(a, i, j, k)
                if not _vec_is_zero(r):
                    found.append(
                        Counterexample((i, j, k), _residual_element(a, r), "jacobi")
                    )
    return CheckReport("jacobi-jordan", tuple(found))


def fd_anti_assoc_residual(a: FiniteAlgebra, i: int, j: int, k: int) -> FVec:
    ei, ej, ek = a.basis(i), a.basis(j), a.basis(k)
    return _vec_add(a.mul(a.mul(ei, ej), ek), a.mul(ei, a.mul(ej, ek)))


def check_anti_associative_fd(a: FiniteAlgebra) -> CheckReport:
    """(ab)c + a(bc) = 0 over basis triples, commutativity not assumed."""
    found = []
    for i in range(a.dim):
        for j in range(a.dim):
            for k in range(a.dim):
                r = fd_anti_assoc_residual(a, i, j, k)
                if not _vec_is_zero(r):
                    found.append(Counterexample((i, j, k), _residual_element(a, r)))
    return CheckReport("anti-associative", tuple(found))


def check_anti_comm_anti_assoc(a: FiniteAlgebra) -> CheckReport:
    """Anti-commutative with (ab)c + a(bc) = 0 over basis triples."""
    found = []
    for i in range(a.dim):
        for j in range(a.dim):
            r = _vec_add(a.structure[i][j], a.structure[j][i])
            if not _vec_is_zero(r):
                found.append(
                    Counterexample((i, j), _residual_element(a, r), "anti-commutative")
                )
    for i in range(a.dim):
        for j in range(a.dim):
            for k in range(a.dim):
                r = fd_anti_assoc_residual(a, i, j, k)
                if not _vec_is_zero(r):
                    found.append(
                        Counterexample(
                            (i, j, k), _residual_element(a, r), "anti-associative"
                        )
                    )
    return CheckReport("anti-associative", tuple(found))


def fd_anti_novikov_left_residual(a: FiniteAlgebra, i: int, j: int, k: int) -> FVec:
    ei, ej, ek = a.basis(i), a.basis(j), a.basis(k)
    return _vec_add(a.mul(ei, a.mul(ej, ek)), a.mul(ej, a.mul(ei, ek)))


def fd_anti_novikov_assoc_residual(a: FiniteAlgebra, i: int, j: int, k: int) -> FVec:
    ei, ej, ek = a.basis(i), a.basis(j), a.basis(k)

    def assoc_sum(x, y, z):
        return _vec_add(a.mul(a.mul(x, y), z), a.mul(x, a.mul(y, z)))

    return _vec_add(assoc_sum(ei, ej, ek), assoc_sum(ei, ek, ej))


def check_anti_novikov(a: FiniteAlgebra) -> CheckReport:
    """a(bc) + b(ac) = 0 and the symmetrised anti-associator vanishes."""
    found = []
    for i in range(a.dim):
        for j in range(a.dim):
            for k in range(a.dim):
                r = fd_anti_novikov_left_residual(a, i, j, k)
                if not _vec_is_zero(r):
                    found.append(
                        Counterexample((i, j, k), _residual_element(a, r), "left-swap")
                    )
                r = fd_anti_novikov_assoc_residual(a, i, j, k)
                if not _vec_is_zero(r):
                    found.append(
                        Counterexample(
                            (i, j, k), _residual_element(a, r), "anti-associator"
                        )
                    )
    return CheckReport("anti-novikov", tuple(found))


def apply_fd_map(matrix: FMatrix, v: FVec) -> FVec:
    rows = len(matrix)
    out = [Fraction(0)] * rows
    for i in range(rows):
        out[i] = sum((matrix[i][k] * v[k] for k in range(len(v))), Fraction(0))
    return tuple(out)


def fd_derivation_residual(a: FiniteAlgebra, d: FMatrix, i: int, j: int) -> FVec:
    ei, ej = a.basis(i), a.basis(j)
    lhs = apply_fd_map(d, a.mul(ei, ej))
    rhs = _vec_add(a.mul(apply_fd_map(d, ei), ej), a.mul(ei, apply_fd_map(d, ej)))
    return _vec_sub(lhs, rhs)


def check_derivation_fd(a: FiniteAlgebra, d: FMatrix) -> CheckReport:
    if len(d) != a.dim or any(len(row) != a.dim for row in d):
        raise ShapeError("derivation matrix does not match the dimension")
    found = []
    for i in range(a.dim):
        for j in range(a.dim):
            r = fd_derivation_residual(a, d, i, j)
            if not _vec_is_zero(r):
                found.append(Counterexample((i, j), _residual_element(a, r)))
    return CheckReport("derivation", tuple(found))


# -- two-product structures -------------------------------------------------


@dataclass(frozen=True)
class MockGD:
    """A commutative product (star) and a companion product (circ).

    Valid when star is Jacobi-Jordan, circ is anti-Novikov and the five-term
    compatibility holds; `check_mock_gd` verifies all of it.
    """

    star: FiniteAlgebra
    circ: FiniteAlgebra

    def __post_init__(self):
        if self.star.basis_names != self.circ.basis_names:
            raise ShapeError("star and circ must share the same basis")

    @property
    def dim(self) -> int:
        return self.star.dim

    @property
    def basis_names(self) -> tuple[str, ...]:
        return self.star.basis_names


def mock_gd(names, star_table, circ_table) -> MockGD:
    return MockGD(finite_algebra(names, star_table), finite_algebra(names, circ_table))


def mock_gd_compat_residual(g: MockGD, i: int, j: int, k: int) -> FVec:
    star, circ = g.star.mul, g.circ.mul
    a, b, c = g.star.basis(i), g.star.basis(j), g.star.basis(k)
    return _vec_add(
        circ(a, star(b, c)),
        star(a, circ(b, c)),
        circ(star(a, b), c),
        circ(b, star(a, c)),
        star(b, circ(a, c)),
    )


def check_mock_gd(g: MockGD) -> CheckReport:
    """Star Jacobi-Jordan, circ anti-Novikov, five-term compatibility."""
    found = []
    for ce in check_jacobi_jordan_fd(g.star).counterexamples:
        found.append(Counterexample(ce.indices, ce.residual, f"star-{ce.label}"))
    for ce in check_anti_novikov(g.circ).counterexamples:
        found.append(Counterexample(ce.indices, ce.residual, f"circ-{ce.label}"))
    for i in range(g.dim):
        for j in range(g.dim):
            for k in range(g.dim):
                r = mock_gd_compat_residual(g, i, j, k)
                if not _vec_is_zero(r):
                    found.append(
                        Counterexample(
                            (i, j, k), _residual_element(g.star, r), "compatibility"
                        )
                    )
    return CheckReport("mock-gd", tuple(found))


# -- constructions from derivations -----------------------------------------


def anti_novikov_from_derivation(a: FiniteAlgebra, d: FMatrix) -> FiniteAlgebra:
    """Product x o y = d(x) * y on an anti-commutative anti-associative algebra."""
    pre = check_anti_comm_anti_assoc(a)
    if not pre.passed:
        raise PreconditionError("the algebra is not anti-commutative anti-associative", pre)
    der = check_derivation_fd(a, d)
    if not der.passed:
        raise PreconditionError("the map is not a derivation", der)
    n = a.dim
    table = tuple(
        tuple(a.mul(apply_fd_map(d, a.basis(i)), a.basis(j)) for j in range(n))
        for i in range(n)
    )
    out = FiniteAlgebra(a.basis_names, table)
    post = check_anti_novikov(out)
    if not post.passed:
        raise AssertionError("internal error: derived product fails anti-Novikov")
    return out


def mock_gd_from_anti_novikov(circ: FiniteAlgebra) -> MockGD:
    """Symmetrise circ into star: x star y = x o y + y o x."""
    pre = check_anti_novikov(circ)
    if not pre.passed:
        raise PreconditionError("the algebra is not anti-Novikov", pre)
    n = circ.dim
    star_table = tuple(
        tuple(
            _vec_add(circ.structure[i][j], circ.structure[j][i]) for j in range(n)
        )
        for i in range(n)
    )
    g = MockGD(FiniteAlgebra(circ.basis_names, star_table), circ)
    post = check_mock_gd(g)
    if not post.passed:
        raise AssertionError("internal error: symmetrised pair fails mock-GD")
    return g


def mock_gd_from_derivation(a: FiniteAlgebra, d: FMatrix) -> MockGD:
    """Compose the two constructions: circ = d(x) * y, star its symmetrisation."""
    return mock_gd_from_anti_novikov(anti_novikov_from_derivation(a, d))
