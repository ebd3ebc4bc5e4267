"""Unified products: extending a conformal algebra by a complement.

An extending datum over an algebra J and a free module K consists of four
bilinear maps with parameter L and ambient D:

    actJ : K x J -> J      (x |> a)      actK : K x J -> K      (x |< a)
    omega: K x K -> J                    circ : K x K -> K

The unified product on J + K is

    (a,x) * (b,y) = ( a_L b + x|>_L b + y|>_{-L-D} a + omega_L(x,y),
                      x|<_L b + y|<_{-L-D} a + x o_L y )

It is Jacobi-Jordan precisely when the seven conditions U1..U7 hold (for J
itself Jacobi-Jordan); the checker evaluates each condition symbolically
over basis tuples.  Twisted (both actions zero) and crossed (actK zero)
data are special cases; their checkers run the full verdict and also the
shorter condition lists traditionally quoted for those cases, which are
strictly weaker (see check_twisted).
"""

from __future__ import annotations

from dataclasses import dataclass

from .conformal import (
    CheckReport,
    ConformalAlgebra,
    Counterexample,
    Element,
    FreeModule,
    attach,
    bilinear_eval,
    check_jacobi_jordan,
    eval_product,
)
from .errors import PreconditionError, ShapeError
from .poly import Matrix, Poly, mat_det

Table = tuple  # table[p][j] = coefficient vector, entries Poly in D, L


def _validate_table(table, rows: int, cols: int, width: int, what: str):
    if len(table) != rows or any(
        len(row) != cols or any(len(vec) != width for vec in row) for row in table
    ):
        raise ShapeError(f"{what} table has the wrong shape")
    for row in table:
        for vec in row:
            for entry in vec:
                bad = entry.variables() - {"D", "L"}
                if bad:
                    raise ShapeError(
                        f"{what} entries may only use D and L, got {sorted(bad)}"
                    )


@dataclass(frozen=True)
class ExtendingDatum:
    algebra: ConformalAlgebra  # J
    complement: FreeModule  # K
    act_j: Table  # m x n -> J-vectors
    act_k: Table  # m x n -> K-vectors
    omega: Table  # m x m -> J-vectors
    circ: Table  # m x m -> K-vectors

    def __post_init__(self):
        n, m = self.algebra.rank, self.complement.rank
        _validate_table(self.act_j, m, n, n, "actJ")
        _validate_table(self.act_k, m, n, m, "actK")
        _validate_table(self.omega, m, m, n, "omega")
        _validate_table(self.circ, m, m, m, "circ")
        if set(self.algebra.basis_names) & set(self.complement.basis_names):
            raise ShapeError("J and K basis names must be disjoint")


def _zero_table(rows: int, cols: int, width: int) -> Table:
    return tuple(
        tuple(tuple(Poly.zero() for _ in range(width)) for _ in range(cols))
        for _ in range(rows)
    )


def extending_datum(
    algebra: ConformalAlgebra,
    complement: FreeModule,
    act_j=None,
    act_k=None,
    omega=None,
    circ=None,
) -> ExtendingDatum:
    """Build a datum from sparse {(p, j): vector} tables (missing = zero)."""
    n, m = algebra.rank, complement.rank

    def build(sparse, rows, cols, width):
        if sparse is None:
            return _zero_table(rows, cols, width)
        out = [
            [tuple(Poly.zero() for _ in range(width)) for _ in range(cols)]
            for _ in range(rows)
        ]
        for (p, j), vec in sparse.items():
            vec = tuple(Poly._coerce(c) for c in vec)
            if len(vec) != width:
                raise ShapeError("table vector of wrong length")
            out[p][j] = vec
        return tuple(tuple(row) for row in out)

    return ExtendingDatum(
        algebra,
        complement,
        build(act_j, m, n, n),
        build(act_k, m, n, m),
        build(omega, m, m, n),
        build(circ, m, m, m),
    )


# -- evaluators -------------------------------------------------------------


def _aj(u: ExtendingDatum, x: Element, a: Element, t: str) -> Element:
    return bilinear_eval(u.act_j, x, a, t, u.algebra)


def _ak(u: ExtendingDatum, x: Element, a: Element, t: str) -> Element:
    return bilinear_eval(u.act_k, x, a, t, u.complement)


def _om(u: ExtendingDatum, x: Element, y: Element, t: str) -> Element:
    return bilinear_eval(u.omega, x, y, t, u.algebra)


def _ci(u: ExtendingDatum, x: Element, y: Element, t: str) -> Element:
    return bilinear_eval(u.circ, x, y, t, u.complement)


def _minus(*names: str) -> Poly:
    out = -Poly.var("D")
    for name in names:
        out = out - Poly.var(name)
    return out


def unified_product(u: ExtendingDatum) -> ConformalAlgebra:
    """The product table on J + K determined by the datum."""
    j, k = u.algebra, u.complement
    n, m = j.rank, k.rank
    rank = n + m
    names = j.basis_names + k.basis_names
    minus = _minus("L")

    def embed(j_vec, k_vec):
        return tuple(j_vec) + tuple(k_vec)

    zero_j = tuple(Poly.zero() for _ in range(n))
    zero_k = tuple(Poly.zero() for _ in range(m))
    table = [[None] * rank for _ in range(rank)]
    for i1 in range(n):
        for i2 in range(n):
            table[i1][i2] = embed(j.structure[i1][i2], zero_k)
    for i1 in range(n):
        for p in range(m):
            # (e_i, 0) * (0, x_p): x_p acts from the right at -L-D
            jpart = tuple(c.subs("L", minus) for c in u.act_j[p][i1])
            kpart = tuple(c.subs("L", minus) for c in u.act_k[p][i1])
            table[i1][n + p] = embed(jpart, kpart)
            # (0, x_p) * (e_i, 0): plain left action at L
            table[n + p][i1] = embed(u.act_j[p][i1], u.act_k[p][i1])
    for p in range(m):
        for q in range(m):
            table[n + p][n + q] = embed(u.omega[p][q], u.circ[p][q])
    return ConformalAlgebra(names, tuple(tuple(row) for row in table))


# -- the seven conditions ---------------------------------------------------
#
# Residual conventions: each condition is a sum of terms required to vanish;
# the residual is that sum.  Fresh parameters: L and M are the two free
# parameters, S/T internal attachment scratch.


def u1_residuals(u: ExtendingDatum, p: int, q: int):
    k = u.complement
    x, y = k.basis(p), k.basis(q)
    out = []
    r = _om(u, x, y, "L") - attach(_om(u, y, x, "S"), "S", _minus("L"))
    out.append(("omega", r))
    r = _ci(u, x, y, "L") - attach(_ci(u, y, x, "S"), "S", _minus("L"))
    out.append(("circ", r))
    return out


def u2_residual(u: ExtendingDatum, i: int, j: int, p: int) -> Element:
    a, b = u.algebra.basis(i), u.algebra.basis(j)
    x = u.complement.basis(p)
    t1 = eval_product(a, attach(_aj(u, x, b, "S"), "S", _minus("M")), "L")
    t2 = attach(
        _aj(u, attach(_ak(u, x, b, "S"), "S", _minus("M")), a, "T"), "T", _minus("L")
    )
    t3 = attach(_aj(u, x, eval_product(a, b, "L"), "T"), "T", _minus("L", "M"))
    t4 = eval_product(b, attach(_aj(u, x, a, "S"), "S", _minus("L")), "M")
    t5 = attach(
        _aj(u, attach(_ak(u, x, a, "S"), "S", _minus("L")), b, "T"), "T", _minus("M")
    )
    return t1 + t2 + t3 + t4 + t5


def u3_residual(u: ExtendingDatum, i: int, j: int, p: int) -> Element:
    a, b = u.algebra.basis(i), u.algebra.basis(j)
    x = u.complement.basis(p)
    t1 = attach(
        _ak(u, attach(_ak(u, x, b, "S"), "S", _minus("M")), a, "T"), "T", _minus("L")
    )
    t2 = attach(_ak(u, x, eval_product(a, b, "L"), "T"), "T", _minus("L", "M"))
    t3 = attach(
        _ak(u, attach(_ak(u, x, a, "S"), "S", _minus("L")), b, "T"), "T", _minus("M")
    )
    return t1 + t2 + t3


def u4_residual(u: ExtendingDatum, i: int, p: int, q: int) -> Element:
    a = u.algebra.basis(i)
    x, y = u.complement.basis(p), u.complement.basis(q)
    lam_mu = Poly.var("L") + Poly.var("M")
    t1 = eval_product(a, _om(u, x, y, "M"), "L")
    t2 = attach(_aj(u, _ci(u, x, y, "M"), a, "T"), "T", _minus("L"))
    t3 = attach(
        _aj(u, y, attach(_aj(u, x, a, "S"), "S", _minus("L")), "T"),
        "T",
        _minus("L", "M"),
    )
    t4 = attach(
        _om(u, attach(_ak(u, x, a, "S"), "S", _minus("L")), y, "T"), "T", lam_mu
    )
    t5 = _aj(u, x, attach(_aj(u, y, a, "S"), "S", _minus("L")), "M")
    t6 = _om(u, x, attach(_ak(u, y, a, "S"), "S", _minus("L")), "M")
    return t1 + t2 + t3 + t4 + t5 + t6


def u5_residual(u: ExtendingDatum, i: int, p: int, q: int) -> Element:
    a = u.algebra.basis(i)
    x, y = u.complement.basis(p), u.complement.basis(q)
    lam_mu = Poly.var("L") + Poly.var("M")
    t1 = attach(_ak(u, _ci(u, x, y, "M"), a, "T"), "T", _minus("L"))
    t2 = attach(
        _ak(u, y, attach(_aj(u, x, a, "S"), "S", _minus("L")), "T"),
        "T",
        _minus("L", "M"),
    )
    t3 = attach(
        _ci(u, attach(_ak(u, x, a, "S"), "S", _minus("L")), y, "T"), "T", lam_mu
    )
    t4 = _ak(u, x, attach(_aj(u, y, a, "S"), "S", _minus("L")), "M")
    t5 = _ci(u, x, attach(_ak(u, y, a, "S"), "S", _minus("L")), "M")
    return t1 + t2 + t3 + t4 + t5


def u6_residual(u: ExtendingDatum, p: int, q: int, r: int) -> Element:
    x, y, z = (
        u.complement.basis(p),
        u.complement.basis(q),
        u.complement.basis(r),
    )
    lam_mu = Poly.var("L") + Poly.var("M")
    t1 = _aj(u, x, _om(u, y, z, "M"), "L")
    t2 = _om(u, x, _ci(u, y, z, "M"), "L")
    t3 = attach(_aj(u, z, _om(u, x, y, "L"), "T"), "T", _minus("L", "M"))
    t4 = attach(_om(u, _ci(u, x, y, "L"), z, "T"), "T", lam_mu)
    t5 = _aj(u, y, _om(u, x, z, "L"), "M")
    t6 = _om(u, y, _ci(u, x, z, "L"), "M")
    return t1 + t2 + t3 + t4 + t5 + t6


def u7_residual(u: ExtendingDatum, p: int, q: int, r: int) -> Element:
    x, y, z = (
        u.complement.basis(p),
        u.complement.basis(q),
        u.complement.basis(r),
    )
    lam_mu = Poly.var("L") + Poly.var("M")
    t1 = _ak(u, x, _om(u, y, z, "M"), "L")
    t2 = _ci(u, x, _ci(u, y, z, "M"), "L")
    t3 = attach(_ak(u, z, _om(u, x, y, "L"), "T"), "T", _minus("L", "M"))
    t4 = attach(_ci(u, _ci(u, x, y, "L"), z, "T"), "T", lam_mu)
    t5 = _ak(u, y, _om(u, x, z, "L"), "M")
    t6 = _ci(u, y, _ci(u, x, z, "L"), "M")
    return t1 + t2 + t3 + t4 + t5 + t6


@dataclass(frozen=True)
class UnifiedVerdict:
    conditions: tuple  # ordered ("U1", CheckReport), ...

    @property
    def passed(self) -> bool:
        return all(report.passed for _, report in self.conditions)

    def report(self, name: str) -> CheckReport:
        for label, rep in self.conditions:
            if label == name:
                return rep
        raise KeyError(name)

    def flat_counterexamples(self) -> tuple:
        out = []
        for label, rep in self.conditions:
            for ce in rep.counterexamples:
                sub = f"{label}:{ce.label}" if ce.label else label
                out.append(Counterexample(ce.indices, ce.residual, sub))
        return tuple(out)


def check_extending_structure(u: ExtendingDatum) -> UnifiedVerdict:
    """Evaluate U1..U7 over basis tuples.

    When J itself is Jacobi-Jordan this passes exactly when the unified
    product is Jacobi-Jordan.
    """
    n, m = u.algebra.rank, u.complement.rank
    conditions = []

    found = []
    for p in range(m):
        for q in range(m):
            for label, r in u1_residuals(u, p, q):
                if not r.is_zero():
                    found.append(Counterexample((p, q), r, label))
    conditions.append(("U1", CheckReport("U1", tuple(found))))

    for name, residual, ranges in (
        ("U2", u2_residual, "jjk"),
        ("U3", u3_residual, "jjk"),
        ("U4", u4_residual, "jkk"),
        ("U5", u5_residual, "jkk"),
        ("U6", u6_residual, "kkk"),
        ("U7", u7_residual, "kkk"),
    ):
        found = []
        if ranges == "jjk":
            for i in range(n):
                for j in range(n):
                    for p in range(m):
                        r = residual(u, i, j, p)
                        if not r.is_zero():
                            found.append(Counterexample((i, j, p), r))
        elif ranges == "jkk":
            for i in range(n):
                for p in range(m):
                    for q in range(m):
                        r = residual(u, i, p, q)
                        if not r.is_zero():
                            found.append(Counterexample((i, p, q), r))
        else:
            for p in range(m):
                for q in range(m):
                    for r_ in range(m):
                        r = residual(u, p, q, r_)
                        if not r.is_zero():
                            found.append(Counterexample((p, q, r_), r))
        conditions.append((name, CheckReport(name, tuple(found))))
    return UnifiedVerdict(tuple(conditions))


# -- twisted and crossed specialisations ------------------------------------


@dataclass(frozen=True)
class SpecialVerdict:
    """Full verdict plus the traditional shorter condition list."""

    verdict: UnifiedVerdict
    listed: tuple  # ordered (name, CheckReport)

    @property
    def passed(self) -> bool:
        return self.verdict.passed

    def listed_report(self, name: str) -> CheckReport:
        for label, rep in self.listed:
            if label == name:
                return rep
        raise KeyError(name)


def _circ_algebra(u: ExtendingDatum) -> ConformalAlgebra:
    return ConformalAlgebra(u.complement.basis_names, u.circ)


def twisted_cocycle_residual(u: ExtendingDatum, p: int, q: int, r: int) -> Element:
    x, y, z = u.complement.basis(p), u.complement.basis(q), u.complement.basis(r)
    lam_mu = Poly.var("L") + Poly.var("M")
    t1 = _om(u, x, _ci(u, y, z, "M"), "L")
    t2 = attach(_om(u, _ci(u, x, y, "L"), z, "T"), "T", lam_mu)
    t3 = _om(u, y, _ci(u, x, z, "L"), "M")
    return t1 + t2 + t3


def check_twisted(u: ExtendingDatum) -> SpecialVerdict:
    """Twisted datum: both actions zero; omega and circ free.

    The short list traditionally quoted (omega symmetric, the omega/circ
    cocycle law, circ Jacobi-Jordan) does not imply the full U1..U7; the
    verdict is the full check, the short list is reported alongside.
    """
    if not (mat_is_zero_table(u.act_j) and mat_is_zero_table(u.act_k)):
        raise ShapeError("a twisted datum must have both actions zero")
    verdict = check_extending_structure(u)
    m = u.complement.rank
    sym = []
    for p in range(m):
        for q in range(m):
            for label, r in u1_residuals(u, p, q):
                if label == "omega" and not r.is_zero():
                    sym.append(Counterexample((p, q), r))
    cocycle = []
    for p in range(m):
        for q in range(m):
            for r_ in range(m):
                r = twisted_cocycle_residual(u, p, q, r_)
                if not r.is_zero():
                    cocycle.append(Counterexample((p, q, r_), r))
    listed = (
        ("omega-symmetric", CheckReport("omega-symmetric", tuple(sym))),
        ("omega-cocycle", CheckReport("omega-cocycle", tuple(cocycle))),
        ("circ-jacobi-jordan", check_jacobi_jordan(_circ_algebra(u))),
    )
    return SpecialVerdict(verdict, listed)


def crossed_action_residual(u: ExtendingDatum, i: int, j: int, p: int) -> Element:
    a, b = u.algebra.basis(i), u.algebra.basis(j)
    x = u.complement.basis(p)
    t1 = eval_product(a, attach(_aj(u, x, b, "S"), "S", _minus("M")), "L")
    t2 = attach(_aj(u, x, eval_product(a, b, "L"), "T"), "T", _minus("L", "M"))
    t3 = eval_product(b, attach(_aj(u, x, a, "S"), "S", _minus("L")), "M")
    return t1 + t2 + t3


def crossed_cocycle_action_residual(
    u: ExtendingDatum, i: int, p: int, q: int
) -> Element:
    a = u.algebra.basis(i)
    x, y = u.complement.basis(p), u.complement.basis(q)
    t1 = eval_product(a, _om(u, x, y, "M"), "L")
    t2 = attach(_aj(u, _ci(u, x, y, "M"), a, "T"), "T", _minus("L"))
    t3 = attach(
        _aj(u, y, attach(_aj(u, x, a, "S"), "S", _minus("L")), "T"),
        "T",
        _minus("L", "M"),
    )
    t4 = _aj(u, x, attach(_aj(u, y, a, "S"), "S", _minus("L")), "M")
    return t1 + t2 + t3 + t4


def check_crossed(u: ExtendingDatum) -> SpecialVerdict:
    """Crossed datum: actK zero; actJ, omega, circ free."""
    if not mat_is_zero_table(u.act_k):
        raise ShapeError("a crossed datum must have actK zero")
    verdict = check_extending_structure(u)
    m, n = u.complement.rank, u.algebra.rank
    sym = []
    for p in range(m):
        for q in range(m):
            for label, r in u1_residuals(u, p, q):
                if label == "omega" and not r.is_zero():
                    sym.append(Counterexample((p, q), r))
    action = []
    for i in range(n):
        for j in range(n):
            for p in range(m):
                r = crossed_action_residual(u, i, j, p)
                if not r.is_zero():
                    action.append(Counterexample((i, j, p), r))
    coaction = []
    for i in range(n):
        for p in range(m):
            for q in range(m):
                r = crossed_cocycle_action_residual(u, i, p, q)
                if not r.is_zero():
                    coaction.append(Counterexample((i, p, q), r))
    cocycle = []
    for p in range(m):
        for q in range(m):
            for r_ in range(m):
                r = u6_residual(u, p, q, r_)
                if not r.is_zero():
                    cocycle.append(Counterexample((p, q, r_), r))
    listed = (
        ("omega-symmetric", CheckReport("omega-symmetric", tuple(sym))),
        ("action-condition", CheckReport("action-condition", tuple(action))),
        ("cocycle-action", CheckReport("cocycle-action", tuple(coaction))),
        ("omega-cocycle", CheckReport("omega-cocycle", tuple(cocycle))),
        ("circ-jacobi-jordan", check_jacobi_jordan(_circ_algebra(u))),
    )
    return SpecialVerdict(verdict, listed)


def mat_is_zero_table(table: Table) -> bool:
    return all(entry.is_zero() for row in table for vec in row for entry in vec)


# -- extraction and equivalence ---------------------------------------------


def extract_datum(extended: ConformalAlgebra, j_indices) -> ExtendingDatum:
    """Split off the subalgebra spanned by j_indices; complement is the rest.

    The J-part must be closed: products of J basis vectors may not have
    components along the complement.  Reading the four maps back off the
    structure table inverts `unified_product` when the J block comes first.
    """
    j_idx = list(j_indices)
    if len(set(j_idx)) != len(j_idx) or any(
        i < 0 or i >= extended.rank for i in j_idx
    ):
        raise ShapeError("subalgebra indices out of range or repeated")
    k_idx = [i for i in range(extended.rank) if i not in j_idx]
    witnesses = []
    for a in j_idx:
        for b in j_idx:
            vec = extended.structure[a][b]
            if any(not vec[c].is_zero() for c in k_idx):
                witnesses.append(
                    Counterexample(
                        (a, b),
                        Element(
                            extended,
                            tuple(
                                vec[c] if c in k_idx else Poly.zero()
                                for c in range(extended.rank)
                            ),
                        ),
                    )
                )
    if witnesses:
        raise PreconditionError(
            "chosen indices do not span a closed subalgebra",
            CheckReport("subalgebra-closure", tuple(witnesses)),
        )
    j_names = tuple(extended.basis_names[i] for i in j_idx)
    k_names = tuple(extended.basis_names[i] for i in k_idx)
    j_table = tuple(
        tuple(
            tuple(extended.structure[a][b][c] for c in j_idx) for b in j_idx
        )
        for a in j_idx
    )
    algebra = ConformalAlgebra(j_names, j_table)
    complement = FreeModule(k_names)
    act_j = tuple(
        tuple(tuple(extended.structure[p][b][c] for c in j_idx) for b in j_idx)
        for p in k_idx
    )
    act_k = tuple(
        tuple(tuple(extended.structure[p][b][c] for c in k_idx) for b in j_idx)
        for p in k_idx
    )
    omega = tuple(
        tuple(tuple(extended.structure[p][q][c] for c in j_idx) for q in k_idx)
        for p in k_idx
    )
    circ = tuple(
        tuple(tuple(extended.structure[p][q][c] for c in k_idx) for q in k_idx)
        for p in k_idx
    )
    return ExtendingDatum(algebra, complement, act_j, act_k, omega, circ)


@dataclass(frozen=True)
class EquivalencePair:
    """Maps (r, s) comparing two data over the same J and K.

    r: K -> J and s: K -> K, matrices over D with columns indexing K; s must
    be invertible over F[D] (constant nonzero determinant).
    """

    r: Matrix
    s: Matrix


def _apply_d_matrix(matrix: Matrix, v: Element, target: FreeModule) -> Element:
    out = [Poly.zero()] * target.rank
    for k, c in enumerate(v.coeffs):
        if c.is_zero():
            continue
        for i in range(target.rank):
            entry = matrix[i][k]
            if not entry.is_zero():
                out[i] = out[i] + entry * c
    return Element(target, tuple(out))


def equivalence_residuals(
    u1: ExtendingDatum, u2: ExtendingDatum, pair: EquivalencePair
):
    """Labelled residuals rs1..rs4 of the equivalence equations."""
    j, k = u1.algebra, u1.complement

    def r_of(v):
        return _apply_d_matrix(pair.r, v, j)

    def s_of(v):
        return _apply_d_matrix(pair.s, v, k)

    out = []
    minus = _minus("L")
    for i in range(j.rank):
        a = j.basis(i)
        for p in range(k.rank):
            x = k.basis(p)
            xa_j = attach(_aj(u1, x, a, "S"), "S", minus)
            xa_k = attach(_ak(u1, x, a, "S"), "S", minus)
            lhs = xa_j + r_of(xa_k)
            rhs = eval_product(a, r_of(x), "L") + attach(
                _aj(u2, s_of(x), a, "S"), "S", minus
            )
            res = lhs - rhs
            if not res.is_zero():
                out.append(Counterexample((i, p), res, "rs1"))
            res = s_of(xa_k) - attach(_ak(u2, s_of(x), a, "S"), "S", minus)
            if not res.is_zero():
                out.append(Counterexample((i, p), res, "rs2"))
    for p in range(k.rank):
        for q in range(k.rank):
            x, y = k.basis(p), k.basis(q)
            lhs_j = _om(u1, x, y, "L") + r_of(_ci(u1, x, y, "L"))
            rhs_j = (
                eval_product(r_of(x), r_of(y), "L")
                + _aj(u2, s_of(x), r_of(y), "L")
                + attach(_aj(u2, s_of(y), r_of(x), "S"), "S", minus)
                + _om(u2, s_of(x), s_of(y), "L")
            )
            res = lhs_j - rhs_j
            if not res.is_zero():
                out.append(Counterexample((p, q), res, "rs3"))
            lhs_k = s_of(_ci(u1, x, y, "L"))
            rhs_k = (
                _ak(u2, s_of(x), r_of(y), "L")
                + attach(_ak(u2, s_of(y), r_of(x), "S"), "S", minus)
                + _ci(u2, s_of(x), s_of(y), "L")
            )
            res = lhs_k - rhs_k
            if not res.is_zero():
                out.append(Counterexample((p, q), res, "rs4"))
    return tuple(out)


def check_equivalence(
    u1: ExtendingDatum,
    u2: ExtendingDatum,
    pair: EquivalencePair,
    cohomologous: bool = False,
) -> CheckReport:
    """Do (r, s) realise an equivalence of the two extending data?

    In cohomologous mode s is required to be the identity (same complement
    embedding, data differing by the coboundary of r).
    """
    if u1.algebra != u2.algebra:
        raise ShapeError("data must extend the same algebra")
    if u1.complement.rank != u2.complement.rank:
        raise ShapeError("data must have complements of the same rank")
    n, m = u1.algebra.rank, u1.complement.rank
    if len(pair.r) != n or any(len(row) != m for row in pair.r):
        raise ShapeError("r must be an n x m matrix over D")
    if len(pair.s) != m or any(len(row) != m for row in pair.s):
        raise ShapeError("s must be an m x m matrix over D")
    for mat in (pair.r, pair.s):
        for row in mat:
            for entry in row:
                bad = entry.variables() - {"D"}
                if bad:
                    raise ShapeError(f"pair entries may only use D, got {sorted(bad)}")
    det = mat_det(pair.s)
    if not det.is_const() or det.is_zero():
        raise ShapeError(f"s is not invertible over F[D]: determinant {det}")
    if cohomologous:
        ident = all(
            pair.s[i][j] == (Poly.const(1) if i == j else Poly.zero())
            for i in range(m)
            for j in range(m)
        )
        if not ident:
            raise ShapeError("cohomologous comparison requires s = identity")
    name = "cohomologous" if cohomologous else "equivalence"
    return CheckReport(name, equivalence_residuals(u1, u2, pair))
