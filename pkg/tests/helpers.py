"""Deterministic random builders and shared fixture objects for the tests."""

from fractions import Fraction

from jjconformal.conformal import (
    apply_endo,
    attach,
    conformal_algebra,
    eval_product,
    module,
    zero_algebra,
)
from jjconformal.extending import extending_datum
from jjconformal.finite import finite_algebra, mock_gd
from jjconformal.poly import D, L, M, Poly
from jjconformal.reps import ConformalRep

# -- fixed structures used across modules -----------------------------------

B2 = finite_algebra(("e1", "e2"), {(0, 0): (0, 1)})
C2 = finite_algebra(("u1", "u2"), {(0, 0): (0, 1)})
CUR2 = conformal_algebra(("e1", "e2"), {(0, 0): (0, 1)})
Q3 = conformal_algebra(
    ("e1", "e2", "e3"),
    {(0, 1): (0, 0, D + 3 * L - 1), (1, 0): (0, 0, -(2 * D + 3 * L + 1))},
)
Z1 = zero_algebra("a")
Z2 = zero_algebra("a1", "a2")
AB2 = zero_algebra("e1", "e2")

MGD3 = mock_gd(
    ("e1", "e2", "e3"),
    {(0, 1): (0, 0, -1), (1, 0): (0, 0, -1)},
    {(0, 1): (0, 0, 1), (1, 0): (0, 0, -2)},
)

K1 = module("x")
K2 = module("x1", "x2")

#: each datum violates exactly the named condition of the unified product
MUTANTS = {
    "U1": extending_datum(CUR2, K1, omega={(0, 0): (0, L)}),
    "U2": extending_datum(CUR2, K1, act_j={(0, 1): (1, 0)}),
    "U3": extending_datum(CUR2, K1, act_k={(0, 0): (1,)}),
    "U4": extending_datum(CUR2, K1, omega={(0, 0): (1, 0)}),
    "U5": extending_datum(Z1, K2, act_k={(1, 0): (1, 0)}, circ={(0, 0): (0, 1)}),
    "U6": extending_datum(
        CUR2, K2, circ={(0, 0): (0, 1)}, omega={(0, 1): (0, 1), (1, 0): (0, 1)}
    ),
    "U7": extending_datum(Z1, K1, circ={(0, 0): (1,)}),
}


def nilpotent_rep():
    """Rank-2 module over the rank-1 zero algebra with a strictly triangular action."""
    return ConformalRep(
        Z1,
        module("m1", "m2"),
        (((Poly.zero(), Poly.const(1)), (Poly.zero(), Poly.zero())),),
    )


# -- identity oracles shared between unit and acceptance tests ---------------


def substitution_identities_hold(x, y, z) -> bool:
    """The three parameter-shift identities any lambda-product satisfies."""
    minus_ld = -L - D

    inner = eval_product(x, y, "T")
    lhs1 = attach(eval_product(attach(inner, "T", minus_ld), z, "S"), "S", L + M)
    rhs1 = attach(eval_product(attach(inner, "T", M), z, "S"), "S", L + M)

    inner2 = eval_product(y, z, "T")
    lhs2 = eval_product(x, attach(inner2, "T", minus_ld), "M")
    rhs2 = attach(eval_product(x, inner2, "M"), "T", -L - M - D)

    lhs3 = attach(eval_product(attach(inner, "T", -M - D), z, "S"), "S", minus_ld)
    rhs3 = attach(attach(eval_product(inner, z, "S"), "S", minus_ld), "T", -L - M - D)

    return lhs1 == rhs1 and lhs2 == rhs2 and lhs3 == rhs3


def endo_identities_hold(f_mat, g_mat, m) -> bool:
    """Composition laws for conformal endomorphisms acting on a module element.

    With (f_t g) the composed map evaluated by nesting `apply_endo`, the three
    shift identities relate evaluation at t, at -t-D, and mixed placements.
    """
    uvar, svar = Poly.var("U"), Poly.var("S")
    w = apply_endo(f_mat, apply_endo(g_mat, m, "R"), "S")

    lhs1 = apply_endo(f_mat, attach(apply_endo(g_mat, m, "R"), "R", -M - D), "S")
    rhs1 = attach(attach(w, "R", uvar - svar), "U", -M - D)

    lhs2 = attach(apply_endo(f_mat, apply_endo(g_mat, m, "M"), "S"), "S", -L - D)
    rhs2 = attach(attach(attach(w, "R", M), "S", uvar - M), "U", -L - D + M)

    lhs3 = attach(
        apply_endo(f_mat, attach(apply_endo(g_mat, m, "R"), "R", -M - D), "S"),
        "S",
        -L - D,
    )
    rhs3 = attach(attach(attach(w, "R", L - M), "S", -L + uvar + M), "U", -M - D)

    return lhs1 == rhs1 and lhs2 == rhs2 and lhs3 == rhs3


# -- random generators -------------------------------------------------------


def random_poly(rng, names=("D", "L"), degree=2, terms=2):
    out = Poly.zero()
    for _ in range(rng.randint(0, terms)):
        piece = Poly.const(rng.choice((-2, -1, 1, 2)))
        for _ in range(rng.randint(0, degree)):
            piece = piece * Poly.var(rng.choice(names))
        out = out + piece
    return out


def random_conformal(rng, max_rank=3, degree=2):
    n = rng.randint(1, max_rank)
    names = tuple(f"e{i + 1}" for i in range(n))
    table = {}
    for i in range(n):
        for j in range(n):
            if rng.random() < 0.5:
                table[(i, j)] = tuple(random_poly(rng, degree=degree) for _ in range(n))
    return conformal_algebra(names, table)


def random_element(rng, space, degree=2):
    return space.element(
        tuple(random_poly(rng, names=("D",), degree=degree) for _ in range(space.rank))
    )


def random_endo(rng, rank, degree=2):
    return tuple(
        tuple(random_poly(rng, degree=degree) for _ in range(rank))
        for _ in range(rank)
    )


def random_finite_table(rng, dim, sparse):
    table = {}
    if sparse:
        for _ in range(rng.randint(0, 2)):
            vec = [0] * dim
            vec[rng.randrange(dim)] = rng.choice((-2, -1, 1, 2))
            table[(rng.randrange(dim), rng.randrange(dim))] = tuple(vec)
    else:
        for i in range(dim):
            for j in range(dim):
                if rng.random() < 0.6:
                    table[(i, j)] = tuple(rng.randint(-2, 2) for _ in range(dim))
    return table


def random_mock_gd(rng, sparse=True):
    dim = rng.randint(1, 3)
    names = tuple(f"e{i + 1}" for i in range(dim))
    return mock_gd(
        names,
        random_finite_table(rng, dim, sparse),
        random_finite_table(rng, dim, sparse),
    )


def random_valid_mock_gd(rng):
    """Both products map into the span of the last basis vector, which then
    annihilates everything; star is kept symmetric.  All double products
    vanish, so every axiom of the pair holds."""
    dim = rng.randint(2, 3)
    names = tuple(f"e{i + 1}" for i in range(dim))
    star, circ = {}, {}
    last = dim - 1
    for i in range(last):
        for j in range(i, last):
            c = rng.randint(-2, 2)
            if c:
                vec = [0] * dim
                vec[last] = c
                star[(i, j)] = tuple(vec)
                star[(j, i)] = tuple(vec)
    for i in range(last):
        for j in range(last):
            c = rng.randint(-2, 2)
            if c:
                vec = [0] * dim
                vec[last] = c
                circ[(i, j)] = tuple(vec)
    return mock_gd(names, star, circ)


def random_affine(rng):
    return (
        Poly.const(rng.randint(-1, 1))
        + rng.randint(-1, 1) * D
        + rng.randint(-1, 1) * L
    )


def random_datum(rng):
    """Unconstrained datum with sparse degree-<=1 entries; usually invalid."""
    j = rng.choice((CUR2, Z1, Z2))
    m = rng.randint(1, 2)
    k = module(*(f"x{p + 1}" for p in range(m)))
    n = j.rank

    def sparse(rows, cols, width):
        table = {}
        for p in range(rows):
            for q in range(cols):
                if rng.random() < 0.25:
                    vec = [Poly.zero()] * width
                    vec[rng.randrange(width)] = random_affine(rng)
                    table[(p, q)] = tuple(vec)
        return table

    return extending_datum(
        j,
        k,
        act_j=sparse(m, n, n),
        act_k=sparse(m, n, m),
        omega=sparse(m, m, n),
        circ=sparse(m, m, m),
    )


def random_valid_datum(rng):
    """A datum satisfying all seven conditions, drawn from four families."""
    kind = rng.choice(("trivial", "omega", "actj", "actk"))
    if kind == "trivial":
        j = rng.choice((CUR2, Z1, Z2, Q3))
        m = rng.randint(1, 2)
        return extending_datum(j, module(*(f"x{p + 1}" for p in range(m))))
    if kind == "omega":
        # omega lands in the annihilator of CUR2 and is symmetric under
        # the parameter flip L -> -L-D; everything else is zero.
        m = rng.randint(1, 2)
        omega = {}
        for p in range(m):
            c = rng.randint(-2, 2)
            omega[(p, p)] = (Poly.zero(), Poly.const(c))
        for p in range(m):
            for q in range(p + 1, m):
                f = random_poly(rng, degree=1)
                omega[(p, q)] = (Poly.zero(), f)
                omega[(q, p)] = (Poly.zero(), f.subs("L", -L - D))
        return extending_datum(
            CUR2, module(*(f"x{p + 1}" for p in range(m))), omega=omega
        )
    if kind == "actj":
        # x |> e1 lands in the annihilator of CUR2 and x |> e2 = 0.
        m = rng.randint(1, 2)
        act_j = {
            (p, 0): (Poly.zero(), random_poly(rng, degree=1)) for p in range(m)
        }
        return extending_datum(
            CUR2, module(*(f"x{p + 1}" for p in range(m))), act_j=act_j
        )
    # x2 <| a = f * x1 over a zero algebra; x1 acts as zero.
    j = rng.choice((Z1, Z2))
    act_k = {
        (1, q): (random_poly(rng, degree=1), Poly.zero()) for q in range(j.rank)
    }
    return extending_datum(j, module("x1", "x2"), act_k=act_k)
