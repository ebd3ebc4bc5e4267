"""Finite-rank conformal algebras with a symbolic lambda-product.

An algebra of rank n is a free module over polynomials in the derivation D,
with a product determined by structure constants: e_i lam e_j = sum_k
C_ijk(D, L) e_k, where L is the product parameter and D acts on the result.
Elements may carry extra formal parameters; `eval_product` evaluates the
product of two such elements at a fresh parameter using the two
sesquilinearity rules:

    (D a) lam b = -lam (a lam b)        a lam (D b) = (lam + D)(a lam b)

concretely: left coefficients get D -> -t, right coefficients get D -> t+D,
and the structure constants get L -> t while their D stays ambient.

`attach` substitutes a linear form for a parameter, e.g. t -> -L-D turns
a_t b into a_{-L-D} b with D the ambient derivation of the whole element.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ShapeError
from .poly import Matrix, Poly, fresh_name

Vec = tuple  # tuple[Poly, ...]


@dataclass(frozen=True)
class FreeModule:
    """Free module of finite rank with named basis vectors."""

    basis_names: tuple[str, ...]

    @property
    def rank(self) -> int:
        return len(self.basis_names)

    def zero(self) -> "Element":
        return Element(self, tuple(Poly.zero() for _ in self.basis_names))

    def basis(self, i: int) -> "Element":
        coeffs = tuple(
            Poly.const(1) if j == i else Poly.zero() for j in range(self.rank)
        )
        return Element(self, coeffs)

    def element(self, coeffs) -> "Element":
        coeffs = tuple(Poly._coerce(c) for c in coeffs)
        if len(coeffs) != self.rank:
            raise ShapeError(
                f"expected {self.rank} coefficients, got {len(coeffs)}"
            )
        return Element(self, coeffs)


def module(*names: str) -> FreeModule:
    return FreeModule(tuple(names))


# structure[i][j] is the coefficient vector of e_i lam e_j; entries are
# polynomials in D and L only.
@dataclass(frozen=True)
class ConformalAlgebra(FreeModule):
    structure: tuple

    def __post_init__(self):
        n = self.rank
        if len(self.structure) != n or any(
            len(row) != n or any(len(vec) != n for vec in row)
            for row in self.structure
        ):
            raise ShapeError("structure table does not match the rank")
        for row in self.structure:
            for vec in row:
                for entry in vec:
                    bad = entry.variables() - {"D", "L"}
                    if bad:
                        raise ShapeError(
                            f"structure constants may only use D and L, got {sorted(bad)}"
                        )
        if len(set(self.basis_names)) != n:
            raise ShapeError("duplicate basis names")


def conformal_algebra(names, table) -> ConformalAlgebra:
    """Build an algebra from a {(i, j): coefficient-vector} style table."""
    names = tuple(names)
    n = len(names)
    rows = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            vec = table.get((i, j)) if hasattr(table, "get") else table[i][j]
            if vec is None:
                vec = [0] * n
            vec = tuple(Poly._coerce(c) for c in vec)
            if len(vec) != n:
                raise ShapeError("structure vector of wrong length")
            rows[i][j] = vec
    return ConformalAlgebra(names, tuple(tuple(r) for r in rows))


def zero_algebra(*names: str) -> ConformalAlgebra:
    return conformal_algebra(names, {})


@dataclass(frozen=True)
class Element:
    """A vector of coefficients over a space, possibly with parameters."""

    space: FreeModule
    coeffs: Vec

    def params(self) -> set[str]:
        out: set[str] = set()
        for c in self.coeffs:
            out |= c.variables()
        out.discard("D")
        return out

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def subs(self, name: str, value) -> "Element":
        return Element(self.space, tuple(c.subs(name, value) for c in self.coeffs))

    def __add__(self, other: "Element") -> "Element":
        _same_space(self, other)
        return Element(
            self.space, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other: "Element") -> "Element":
        _same_space(self, other)
        return Element(
            self.space, tuple(a - b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self) -> "Element":
        return Element(self.space, tuple(-c for c in self.coeffs))

    def scale(self, factor) -> "Element":
        factor = Poly._coerce(factor)
        return Element(self.space, tuple(factor * c for c in self.coeffs))

    def __str__(self) -> str:
        return render_element(self)


def _same_space(x: Element, y: Element):
    if x.space != y.space:
        raise ShapeError("elements live over different spaces")


def render_element(x: Element) -> str:
    """Canonical text: coefficient polynomials times basis names."""
    pieces: list[str] = []
    for coeff, name in zip(x.coeffs, x.space.basis_names):
        if coeff.is_zero():
            continue
        terms = coeff.terms()
        if len(terms) == 1:
            ((mono, c),) = terms.items()
            if not mono and c == 1:
                text, neg = name, False
            elif not mono and c == -1:
                text, neg = name, True
            else:
                body = str(coeff if c > 0 else -coeff)
                text, neg = f"{body}*{name}", c < 0
        else:
            negs = [c < 0 for c in terms.values()]
            if all(negs):
                text, neg = f"({-coeff})*{name}", True
            else:
                text, neg = f"({coeff})*{name}", False
        if not pieces:
            pieces.append(f"-{text}" if neg else text)
        else:
            pieces.append(f"- {text}" if neg else f"+ {text}")
    if not pieces:
        return "0"
    return " ".join(pieces)


def attach(x: Element, t: str, w) -> Element:
    """Substitute the parameter t by a linear form w (degree <= 1).

    D inside w denotes the ambient derivation of x, so e.g.
    attach(a_t b, t, -L-D) realises a_{-L-D} b.  Total in t: if t does not
    occur the element is returned unchanged.
    """
    w = Poly._coerce(w)
    if w.total_degree() > 1:
        raise ShapeError(f"attachment target must be affine, got {w}")
    if t == "D":
        raise ShapeError("cannot attach the ambient derivation D")
    return x.subs(t, w)


def bilinear_eval(
    table, x: Element, y: Element, t: str, target: FreeModule
) -> Element:
    """Evaluate a conformal bilinear map given by a structure table.

    table[i][j] is the coefficient vector (over `target`) of the map on
    basis pair (i, j) with parameter L and ambient D.  x supplies the left
    slot (D -> -t), y the right (D -> t+D); t must be fresh for both.
    """
    if t == "D":
        raise ShapeError("the evaluation parameter cannot be D")
    if t in x.params() or t in y.params():
        raise ShapeError(f"parameter {t} is not fresh for the operands")
    out = [Poly.zero()] * target.rank
    for i, xc in enumerate(x.coeffs):
        if xc.is_zero():
            continue
        xs = xc.subs("D", -Poly.var(t))
        for j, yc in enumerate(y.coeffs):
            if yc.is_zero():
                continue
            ys = yc.subs("D", Poly.var(t) + Poly.var("D"))
            factor = xs * ys
            for k, c in enumerate(table[i][j]):
                if not c.is_zero():
                    out[k] = out[k] + factor * c.subs("L", Poly.var(t))
    return Element(target, tuple(out))


def eval_product(x: Element, y: Element, t: str) -> Element:
    """x evaluated on y at parameter t in their common algebra."""
    _same_space(x, y)
    algebra = x.space
    if not isinstance(algebra, ConformalAlgebra):
        raise ShapeError("eval_product needs elements of a conformal algebra")
    return bilinear_eval(algebra.structure, x, y, t, algebra)


def apply_endo(matrix: Matrix, x: Element, t: str) -> Element:
    """Apply a conformal endomorphism (matrix over D, L) at parameter t.

    Row convention: result_i = sum_j x_j[D -> t+D] * matrix[i][j][L -> t];
    the operand sits in the module slot, so its D shifts by t.
    """
    space = x.space
    n = space.rank
    if len(matrix) != n or any(len(row) != n for row in matrix):
        raise ShapeError("endomorphism matrix does not match the rank")
    if t == "D" or t in x.params():
        raise ShapeError(f"parameter {t} is not fresh for the operand")
    out = [Poly.zero()] * n
    for j, xc in enumerate(x.coeffs):
        if xc.is_zero():
            continue
        xs = xc.subs("D", Poly.var(t) + Poly.var("D"))
        for i in range(n):
            entry = matrix[i][j]
            if not entry.is_zero():
                out[i] = out[i] + xs * entry.subs("L", Poly.var(t))
    return Element(space, tuple(out))


def left_mul_endo(algebra: ConformalAlgebra, index: int) -> Matrix:
    """Matrix of left multiplication by basis vector `index`."""
    n = algebra.rank
    return tuple(
        tuple(algebra.structure[index][j][i] for j in range(n)) for i in range(n)
    )


# -- reports ----------------------------------------------------------------


@dataclass(frozen=True)
class Counterexample:
    indices: tuple  # 0-based basis indices
    residual: object  # Element or Poly
    label: str = ""


@dataclass(frozen=True)
class CheckReport:
    check: str
    counterexamples: tuple = ()

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def __str__(self) -> str:
        if self.passed:
            return f"{self.check}: passed"
        lines = [f"{self.check}: failed ({len(self.counterexamples)} counterexamples)"]
        for ce in self.counterexamples:
            tag = f"[{ce.label}] " if ce.label else ""
            idx = ",".join(str(i + 1) for i in ce.indices)
            lines.append(f"  {tag}({idx}): {ce.residual}")
        return "\n".join(lines)


def _report(check: str, found) -> CheckReport:
    return CheckReport(check, tuple(found))


# -- axiom checks -----------------------------------------------------------
#
# All checks quantify over basis tuples with fixed parameters L and M (enough
# by sesquilinearity) and report every failing tuple with its residual.


def commutative_residual(a: ConformalAlgebra, i: int, j: int) -> Element:
    lhs = eval_product(a.basis(i), a.basis(j), "L")
    rhs = attach(
        eval_product(a.basis(j), a.basis(i), "M"), "M", -Poly.var("L") - Poly.var("D")
    )
    return lhs - rhs


def check_commutative(a: ConformalAlgebra) -> CheckReport:
    found = []
    for i in range(a.rank):
        for j in range(a.rank):
            r = commutative_residual(a, i, j)
            if not r.is_zero():
                found.append(Counterexample((i, j), r))
    return _report("commutative", found)


def jacobi_residual(a: ConformalAlgebra, i: int, j: int, k: int) -> Element:
    lam, mu = Poly.var("L"), Poly.var("M")
    t1 = eval_product(a.basis(i), eval_product(a.basis(j), a.basis(k), "M"), "L")
    s = fresh_name({"L", "M"})
    t2 = attach(
        eval_product(eval_product(a.basis(i), a.basis(j), "L"), a.basis(k), s),
        s,
        lam + mu,
    )
    t3 = eval_product(a.basis(j), eval_product(a.basis(i), a.basis(k), "L"), "M")
    return t1 + t2 + t3


def check_jacobi_jordan(a: ConformalAlgebra) -> CheckReport:
    """Commutativity plus the three-term conformal Jacobi-Jordan identity."""
    found = [
        Counterexample(ce.indices, ce.residual, "commutative")
        for ce in check_commutative(a).counterexamples
    ]
    for i in range(a.rank):
        for j in range(a.rank):
            for k in range(a.rank):
                r = jacobi_residual(a, i, j, k)
                if not r.is_zero():
                    found.append(Counterexample((i, j, k), r, "jacobi"))
    return _report("jacobi-jordan", found)


def anti_associative_residual(a: ConformalAlgebra, i: int, j: int, k: int) -> Element:
    lam, mu = Poly.var("L"), Poly.var("M")
    s = fresh_name({"L", "M"})
    t1 = attach(
        eval_product(eval_product(a.basis(i), a.basis(j), "L"), a.basis(k), s),
        s,
        lam + mu,
    )
    t2 = eval_product(a.basis(i), eval_product(a.basis(j), a.basis(k), "M"), "L")
    return t1 + t2


def check_anti_associative(a: ConformalAlgebra) -> CheckReport:
    found = []
    for i in range(a.rank):
        for j in range(a.rank):
            for k in range(a.rank):
                r = anti_associative_residual(a, i, j, k)
                if not r.is_zero():
                    found.append(Counterexample((i, j, k), r))
    return _report("anti-associative", found)


def left_anti_symmetric_residual(
    a: ConformalAlgebra, i: int, j: int, k: int
) -> Element:
    lam, mu = Poly.var("L"), Poly.var("M")
    s = fresh_name({"L", "M"})
    t1 = attach(
        eval_product(eval_product(a.basis(i), a.basis(j), "L"), a.basis(k), s),
        s,
        lam + mu,
    )
    t2 = eval_product(a.basis(i), eval_product(a.basis(j), a.basis(k), "M"), "L")
    t3 = attach(
        eval_product(eval_product(a.basis(j), a.basis(i), "M"), a.basis(k), s),
        s,
        lam + mu,
    )
    t4 = eval_product(a.basis(j), eval_product(a.basis(i), a.basis(k), "L"), "M")
    return t1 + t2 + t3 + t4


def check_left_anti_symmetric(a: ConformalAlgebra) -> CheckReport:
    found = []
    for i in range(a.rank):
        for j in range(a.rank):
            for k in range(a.rank):
                r = left_anti_symmetric_residual(a, i, j, k)
                if not r.is_zero():
                    found.append(Counterexample((i, j, k), r))
    return _report("left-anti-symmetric", found)


def admissible_algebra(a: ConformalAlgebra) -> ConformalAlgebra:
    """Symmetrised product a o_L b = a_L b + b_{-L-D} a on the same module."""
    minus = -Poly.var("L") - Poly.var("D")
    n = a.rank
    table = tuple(
        tuple(
            tuple(
                a.structure[i][j][k] + a.structure[j][i][k].subs("L", minus)
                for k in range(n)
            )
            for j in range(n)
        )
        for i in range(n)
    )
    return ConformalAlgebra(a.basis_names, table)


def anti_derivation_residual(
    a: ConformalAlgebra, d: Matrix, i: int, j: int
) -> Element:
    lam, mu = Poly.var("L"), Poly.var("M")
    s = fresh_name({"L", "M"})
    lhs = apply_endo(d, eval_product(a.basis(i), a.basis(j), "M"), "L")
    t1 = attach(
        eval_product(apply_endo(d, a.basis(i), "L"), a.basis(j), s), s, lam + mu
    )
    t2 = eval_product(a.basis(i), apply_endo(d, a.basis(j), "L"), "M")
    return lhs + t1 + t2


def check_anti_derivation(a: ConformalAlgebra, d: Matrix) -> CheckReport:
    """d_L(a_M b) = -(d_L a)_{L+M} b - a_M (d_L b), reported as lhs+rhs sum."""
    found = []
    for i in range(a.rank):
        for j in range(a.rank):
            r = anti_derivation_residual(a, d, i, j)
            if not r.is_zero():
                found.append(Counterexample((i, j), r))
    return _report("anti-derivation", found)
