"""Exact multivariate polynomials over the rationals.

Everything downstream is computed with these: structure constants, element
coefficients, residuals.  Coefficients are `fractions.Fraction`, terms are
kept in a dict keyed by monomials, a monomial being a sorted tuple of
(name, exponent) pairs with every exponent >= 1.  That representation is
canonical by construction: equal polynomials compare equal as dicts.

By convention `D` is the ambient derivation of a free module and `L`, `M`,
`N` are formal parameters; nothing in this module enforces that, names are
arbitrary strings.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

Scalar = Union[int, Fraction]

# monomial: tuple of (name, exponent) pairs, sorted by name, exponents >= 1
Mono = tuple


def _mono_mul(a: Mono, b: Mono) -> Mono:
    if not a:
        return b
    if not b:
        return a
    exps = dict(a)
    for name, e in b:
        exps[name] = exps.get(name, 0) + e
    return tuple(sorted(exps.items()))


class Poly:
    """Immutable polynomial with Fraction coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Mono, Scalar] | None = None):
        clean: dict[Mono, Fraction] = {}
        if terms:
            for mono, coeff in terms.items():
                coeff = Fraction(coeff)
                if not coeff:
                    continue
                mono = tuple(sorted((v, e) for v, e in mono if e))
                total = clean.get(mono, Fraction(0)) + coeff
                if total:
                    clean[mono] = total
                else:
                    clean.pop(mono, None)
        self._terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def const(cls, value: Scalar) -> "Poly":
        return cls({(): Fraction(value)})

    @classmethod
    def var(cls, name: str, power: int = 1) -> "Poly":
        assert power >= 1
        return cls({((name, power),): Fraction(1)})

    @classmethod
    def zero(cls) -> "Poly":
        return _ZERO

    @classmethod
    def _coerce(cls, value: "Poly | Scalar") -> "Poly":
        if isinstance(value, Poly):
            return value
        if isinstance(value, (int, Fraction)):
            return cls.const(value)
        return NotImplemented  # type: ignore[return-value]

    # -- queries -----------------------------------------------------------

    def terms(self) -> Mapping[Mono, Fraction]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_const(self) -> bool:
        return not self._terms or set(self._terms) == {()}

    def const_value(self) -> Fraction:
        """Value of a constant polynomial; raises if it is not constant."""
        if not self._terms:
            return Fraction(0)
        if set(self._terms) != {()}:
            raise ValueError(f"not a constant polynomial: {self}")
        return self._terms[()]

    def variables(self) -> set[str]:
        return {name for mono in self._terms for name, _ in mono}

    def total_degree(self) -> int:
        if not self._terms:
            return 0
        return max(sum(e for _, e in mono) for mono in self._terms)

    def degree_in(self, name: str) -> int:
        best = 0
        for mono in self._terms:
            for v, e in mono:
                if v == name and e > best:
                    best = e
        return best

    def coefficient(self, mono: Mono) -> Fraction:
        return self._terms.get(tuple(sorted(mono)), Fraction(0))

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "Poly | Scalar") -> "Poly":
        other = Poly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self._terms:
            return other
        if not other._terms:
            return self
        out = dict(self._terms)
        for mono, c in other._terms.items():
            s = out.get(mono, Fraction(0)) + c
            if s:
                out[mono] = s
            else:
                out.pop(mono, None)
        res = Poly.__new__(Poly)
        res._terms = out
        return res

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        res = Poly.__new__(Poly)
        res._terms = {mono: -c for mono, c in self._terms.items()}
        return res

    def __sub__(self, other: "Poly | Scalar") -> "Poly":
        other = Poly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: "Poly | Scalar") -> "Poly":
        other = Poly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: "Poly | Scalar") -> "Poly":
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            if not other:
                return _ZERO
            res = Poly.__new__(Poly)
            res._terms = {mono: c * other for mono, c in self._terms.items()}
            return res
        if not isinstance(other, Poly):
            return NotImplemented
        out: dict[Mono, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                mono = _mono_mul(m1, m2)
                s = out.get(mono, Fraction(0)) + c1 * c2
                if s:
                    out[mono] = s
                else:
                    out.pop(mono, None)
        res = Poly.__new__(Poly)
        res._terms = out
        return res

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> "Poly":
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return self * (Fraction(1) / Fraction(other))

    def __pow__(self, exponent: int) -> "Poly":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial exponents must be non-negative integers")
        out = Poly.const(1)
        for _ in range(exponent):
            out = out * self
        return out

    # -- substitution ------------------------------------------------------

    def subs(self, name: str, value: "Poly | Scalar") -> "Poly":
        """Substitute `value` for the indeterminate `name`.

        Total: a name that does not occur leaves the polynomial unchanged.
        """
        if not any(v == name for mono in self._terms for v, _ in mono):
            return self
        value = Poly._coerce(value)
        powers: dict[int, Poly] = {0: Poly.const(1)}

        def power(k: int) -> Poly:
            if k not in powers:
                powers[k] = power(k - 1) * value
            return powers[k]

        out = _ZERO
        for mono, c in self._terms.items():
            k = 0
            rest = []
            for v, e in mono:
                if v == name:
                    k = e
                else:
                    rest.append((v, e))
            term = Poly({tuple(rest): c})
            if k:
                term = term * power(k)
            out = out + term
        return out

    # -- equality / hashing ------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    # -- rendering ---------------------------------------------------------

    def _sorted_monos(self) -> list[Mono]:
        names = sorted(self.variables())

        def key(mono: Mono):
            exps = dict(mono)
            vec = tuple(exps.get(v, 0) for v in names)
            return (sum(vec), vec)

        return sorted(self._terms, key=key, reverse=True)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces: list[str] = []
        for i, mono in enumerate(self._sorted_monos()):
            coeff = self._terms[mono]
            mag = abs(coeff)
            body = "*".join(f"{v}^{e}" if e > 1 else v for v, e in mono)
            if not mono:
                text = _frac_str(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{_frac_str(mag)}*{body}"
            if i == 0:
                pieces.append(text if coeff > 0 else f"-{text}")
            else:
                pieces.append(f"+ {text}" if coeff > 0 else f"- {text}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"Poly({self})"


def _frac_str(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"({value.numerator}/{value.denominator})"


_ZERO = Poly()

# Shared indeterminates.  D is the ambient derivation, L/M/N the parameters
# used throughout checks; S/T are reserved for internal fresh attachments.
D = Poly.var("D")
L = Poly.var("L")
M = Poly.var("M")
N = Poly.var("N")

#: names a user-supplied expression may use as scalar indeterminates
SCALAR_NAMES = ("D", "L", "M", "N")


def fresh_name(avoid: set[str]) -> str:
    """A parameter name not occurring in `avoid` (deterministic choice)."""
    for cand in ("S", "T", "U", "V", "W"):
        if cand not in avoid:
            return cand
    i = 0
    while f"S{i}" in avoid:
        i += 1
    return f"S{i}"


# -- small exact matrix helpers (sizes here are tiny, cofactor expansion) ---

Matrix = tuple  # tuple[tuple[Poly, ...], ...]


def mat_from_rows(rows: Iterable[Iterable[Poly | Scalar]]) -> Matrix:
    return tuple(tuple(Poly._coerce(x) for x in row) for row in rows)


def mat_identity(n: int) -> Matrix:
    return tuple(
        tuple(Poly.const(1) if i == j else Poly.zero() for j in range(n))
        for i in range(n)
    )


def mat_zero(rows: int, cols: int) -> Matrix:
    return tuple(tuple(Poly.zero() for _ in range(cols)) for _ in range(rows))


def mat_is_zero(m: Matrix) -> bool:
    return all(entry.is_zero() for row in m for entry in row)


def mat_transpose(m: Matrix) -> Matrix:
    return tuple(zip(*m)) if m else ()


def mat_subs(m: Matrix, name: str, value: Poly | Scalar) -> Matrix:
    return tuple(tuple(entry.subs(name, value) for entry in row) for row in m)


def _minor(m: Matrix, row: int, col: int) -> Matrix:
    return tuple(
        tuple(entry for j, entry in enumerate(r) if j != col)
        for i, r in enumerate(m)
        if i != row
    )


def mat_det(m: Matrix) -> Poly:
    n = len(m)
    if n == 0:
        return Poly.const(1)
    if any(len(row) != n for row in m):
        raise ValueError("determinant of a non-square matrix")
    if n == 1:
        return m[0][0]
    out = Poly.zero()
    for j in range(n):
        if m[0][j].is_zero():
            continue
        cofactor = mat_det(_minor(m, 0, j))
        term = m[0][j] * cofactor
        out = out + (term if j % 2 == 0 else -term)
    return out


def mat_adjugate(m: Matrix) -> Matrix:
    """Adjugate: m @ adj(m) == adj(m) @ m == det(m) * identity."""
    n = len(m)
    if n == 1:
        return ((Poly.const(1),),)
    adj = [[Poly.zero()] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            c = mat_det(_minor(m, i, j))
            adj[j][i] = c if (i + j) % 2 == 0 else -c
    return tuple(tuple(row) for row in adj)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    rows = len(a)
    inner = len(b)
    cols = len(b[0]) if b else 0
    out = []
    for i in range(rows):
        row = []
        for j in range(cols):
            s = Poly.zero()
            for k in range(inner):
                s = s + a[i][k] * b[k][j]
            row.append(s)
        out.append(tuple(row))
    return tuple(out)
