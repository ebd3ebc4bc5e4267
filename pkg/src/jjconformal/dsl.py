"""Parser and canonical printer for structure-definition files.

A file is a sequence of named blocks, each defining one object:

    algebra  NAME { dim N; [basis a b ...;] (prod a b = fexpr;)* }
    conformal NAME { rank N; basis a b ...; (lprod a b = cexpr;)* }
    mockgd   NAME { dim N; [basis ...;] (star a b = fexpr; | circ a b = fexpr;)* }
    rep      NAME of ALG { rank K; (act a : [[..], ..];)* }
    map      NAME : SRC -> TGT { [[..], ..] }
    form     NAME on ALG { [[..], ..] }
    datum    NAME { J ALG; Krank M; [Kbasis x ...;]
                    (actJ x a = cexpr; | actK x a = cexpr;
                     | omega x y = cexpr; | circ x y = cexpr;)* }

`cexpr` is a linear combination of basis names with polynomial coefficients
(indeterminates as allowed by context), `fexpr` the same with rational
coefficients only.  Unlisted products are zero.  `#` starts a comment.
Names may only refer to objects defined earlier in the same file.  Omitted
basis clauses default to e1..eN (x1..xM for datum complements).

Scalar contexts: conformal products, rep actions and datum values may use
D and L; map matrices only D; form matrices only L.

`print_document` renders a Document canonically (entries in row-major
order, polynomial coefficients in graded-lexicographic order) so that
parse and print are mutually inverse.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .conformal import (
    ConformalAlgebra,
    Element,
    FreeModule,
    conformal_algebra,
    render_element,
)
from .errors import DslError, ShapeError
from .extending import ExtendingDatum, extending_datum
from .finite import FiniteAlgebra, MockGD, finite_algebra, mock_gd
from .operators import ConformalBilinearForm, ModuleMap
from .poly import Poly, SCALAR_NAMES
from .reps import ConformalRep

_PUNCT_TWO = ("->",)
_PUNCT_ONE = set("{}()[];:=,+-*/^")


@dataclass(frozen=True)
class Token:
    kind: str  # "name" | "int" | "punct" | "eof"
    value: object
    line: int
    col: int


def tokenize(text: str):
    toks = []
    i, line, col = 0, 1, 1
    n = len(text)
    while i < n:
        c = text[i]
        if c == "\n":
            i += 1
            line += 1
            col = 1
            continue
        if c in " \t\r":
            i += 1
            col += 1
            continue
        if c == "#":
            while i < n and text[i] != "\n":
                i += 1
            continue
        if c.isalpha() or c == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            toks.append(Token("name", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if c.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(Token("int", int(text[i:j]), line, col))
            col += j - i
            i = j
            continue
        if text[i : i + 2] in _PUNCT_TWO:
            toks.append(Token("punct", text[i : i + 2], line, col))
            i += 2
            col += 2
            continue
        if c in _PUNCT_ONE:
            toks.append(Token("punct", c, line, col))
            i += 1
            col += 1
            continue
        raise DslError(f"unexpected character {c!r}", line, col)
    toks.append(Token("eof", None, line, col))
    return toks


@dataclass
class Document:
    """Named objects in definition order, plus name references between them."""

    objects: dict = field(default_factory=dict)
    refs: dict = field(default_factory=dict)

    def require(self, name: str):
        if name not in self.objects:
            raise KeyError(f"no object named '{name}'")
        return self.objects[name]


def resolve_space(doc: Document, name: str) -> FreeModule:
    """The module an object name denotes when used as a map endpoint.

    Algebras stand for themselves, representations for their module,
    extending data for their complement.
    """
    obj = doc.require(name)
    if isinstance(obj, ConformalAlgebra):
        return obj
    if isinstance(obj, ConformalRep):
        return obj.module
    if isinstance(obj, ExtendingDatum):
        return obj.complement
    raise ValueError(f"'{name}' does not denote a module or conformal algebra")


# -- expression values ------------------------------------------------------


@dataclass
class _LinComb:
    scalar: Poly
    vec: dict  # basis name -> Poly


class _Parser:
    def __init__(self, text: str):
        self.toks = tokenize(text)
        self.pos = 0

    def peek(self) -> Token:
        return self.toks[self.pos]

    def advance(self) -> Token:
        tok = self.toks[self.pos]
        if tok.kind != "eof":
            self.pos += 1
        return tok

    def error(self, message: str, tok: Token):
        raise DslError(message, tok.line, tok.col)

    def at_punct(self, value: str) -> bool:
        tok = self.peek()
        return tok.kind == "punct" and tok.value == value

    def accept_punct(self, value: str) -> bool:
        if self.at_punct(value):
            self.advance()
            return True
        return False

    def expect_punct(self, value: str) -> Token:
        tok = self.peek()
        if tok.kind != "punct" or tok.value != value:
            self.error(f"expected '{value}'", tok)
        return self.advance()

    def at_kw(self, value: str) -> bool:
        tok = self.peek()
        return tok.kind == "name" and tok.value == value

    def accept_kw(self, value: str) -> bool:
        if self.at_kw(value):
            self.advance()
            return True
        return False

    def expect_kw(self, value: str) -> Token:
        tok = self.peek()
        if not self.at_kw(value):
            self.error(f"expected '{value}'", tok)
        return self.advance()

    def expect_name(self, what: str = "a name") -> Token:
        tok = self.peek()
        if tok.kind != "name":
            self.error(f"expected {what}", tok)
        return self.advance()

    def expect_int(self, what: str = "an integer") -> Token:
        tok = self.peek()
        if tok.kind != "int":
            self.error(f"expected {what}", tok)
        return self.advance()

    # expression grammar:
    #   expr   := ["+"|"-"] term (("+"|"-") term)*
    #   term   := factor (("*" factor) | ("/" INT))*
    #   factor := atom ["^" INT]
    #   atom   := INT | NAME | "(" expr ")"
    def parse_expr(self, basis, scalars) -> _LinComb:
        negate = False
        if self.at_punct("-"):
            self.advance()
            negate = True
        elif self.at_punct("+"):
            self.advance()
        lin = self.parse_term(basis, scalars)
        if negate:
            lin = _LinComb(-lin.scalar, {k: -v for k, v in lin.vec.items()})
        while True:
            if self.at_punct("+"):
                self.advance()
                rhs = self.parse_term(basis, scalars)
                lin = _lin_add(lin, rhs, 1)
            elif self.at_punct("-"):
                self.advance()
                rhs = self.parse_term(basis, scalars)
                lin = _lin_add(lin, rhs, -1)
            else:
                return lin

    def parse_term(self, basis, scalars) -> _LinComb:
        lin = self.parse_factor(basis, scalars)
        while True:
            if self.at_punct("*"):
                op = self.advance()
                rhs = self.parse_factor(basis, scalars)
                if lin.vec and rhs.vec:
                    self.error("products of basis elements are not allowed", op)
                lin = _LinComb(
                    lin.scalar * rhs.scalar,
                    {
                        **{k: v * rhs.scalar for k, v in lin.vec.items()},
                        **{k: lin.scalar * v for k, v in rhs.vec.items()},
                    },
                )
            elif self.at_punct("/"):
                op = self.advance()
                tok = self.expect_int("an integer denominator")
                if tok.value == 0:
                    self.error("division by zero", tok)
                lin = _LinComb(
                    lin.scalar / tok.value,
                    {k: v / tok.value for k, v in lin.vec.items()},
                )
            else:
                return lin

    def parse_factor(self, basis, scalars) -> _LinComb:
        lin = self.parse_atom(basis, scalars)
        if self.at_punct("^"):
            op = self.advance()
            tok = self.expect_int("an exponent")
            if lin.vec:
                self.error("basis elements cannot be raised to a power", op)
            lin = _LinComb(lin.scalar ** tok.value, {})
        return lin

    def parse_atom(self, basis, scalars) -> _LinComb:
        tok = self.peek()
        if tok.kind == "int":
            self.advance()
            return _LinComb(Poly.const(tok.value), {})
        if tok.kind == "name":
            self.advance()
            if tok.value in scalars:
                return _LinComb(Poly.var(tok.value), {})
            if tok.value in basis:
                return _LinComb(Poly.zero(), {tok.value: Poly.const(1)})
            self.error(f"unknown name '{tok.value}'", tok)
        if self.accept_punct("("):
            lin = self.parse_expr(basis, scalars)
            self.expect_punct(")")
            return lin
        self.error("expected an expression", tok)

    def parse_value(self, basis, scalars, what: str) -> dict:
        start = self.peek()
        lin = self.parse_expr(basis, scalars)
        if not lin.scalar.is_zero():
            self.error(f"{what} must be a linear combination of basis elements", start)
        return lin.vec

    def parse_scalar(self, scalars) -> Poly:
        return self.parse_expr((), scalars).scalar

    def parse_matrix(self, scalars):
        start = self.expect_punct("[")
        rows = []
        while True:
            self.expect_punct("[")
            row = [self.parse_scalar(scalars)]
            while self.accept_punct(","):
                row.append(self.parse_scalar(scalars))
            self.expect_punct("]")
            rows.append(row)
            if not self.accept_punct(","):
                break
        self.expect_punct("]")
        if any(len(row) != len(rows[0]) for row in rows):
            self.error("matrix rows have unequal lengths", start)
        return rows, start


def _lin_add(a: _LinComb, b: _LinComb, sign: int) -> _LinComb:
    vec = dict(a.vec)
    for k, v in b.vec.items():
        vec[k] = vec.get(k, Poly.zero()) + (v if sign > 0 else -v)
    return _LinComb(a.scalar + (b.scalar if sign > 0 else -b.scalar), vec)


# -- block parsers ----------------------------------------------------------

_CONFORMAL_SCALARS = frozenset(("D", "L"))
_MAP_SCALARS = frozenset(("D",))
_FORM_SCALARS = frozenset(("L",))
_FD_SCALARS = frozenset()


def _object_name(p: _Parser, doc: Document) -> Token:
    tok = p.expect_name("an object name")
    if tok.value in doc.objects:
        p.error(f"duplicate object name '{tok.value}'", tok)
    return tok


def _basis_decl(p: _Parser, count: int, prefix: str, required: bool = False):
    if p.at_kw("basis"):
        tok = p.advance()
        names = []
        while p.peek().kind == "name":
            names.append(p.advance().value)
        p.expect_punct(";")
        if len(names) != count:
            p.error(f"expected {count} basis names, got {len(names)}", tok)
        if len(set(names)) != len(names):
            p.error("basis names must be distinct", tok)
        for name in names:
            if name in SCALAR_NAMES:
                p.error(f"'{name}' is reserved for polynomial indeterminates", tok)
        return tuple(names)
    if required:
        p.error("expected 'basis'", p.peek())
    return tuple(f"{prefix}{i + 1}" for i in range(count))


def _positive_int(p: _Parser, what: str) -> int:
    tok = p.expect_int(what)
    if tok.value <= 0:
        p.error(f"{what} must be positive", tok)
    return tok.value


def _operand(p: _Parser, names, what: str) -> int:
    tok = p.expect_name(what)
    if tok.value not in names:
        p.error(f"unknown name '{tok.value}'", tok)
    return names.index(tok.value)


def _build(p: _Parser, tok: Token, fn, *args):
    try:
        return fn(*args)
    except ShapeError as exc:
        p.error(str(exc), tok)


def _parse_algebra(p: _Parser, doc: Document):
    name_tok = _object_name(p, doc)
    p.expect_punct("{")
    p.expect_kw("dim")
    dim = _positive_int(p, "dimension")
    p.expect_punct(";")
    names = _basis_decl(p, dim, "e")
    entries = {}
    while p.at_kw("prod"):
        p.advance()
        i = _operand(p, names, "a basis name")
        j = _operand(p, names, "a basis name")
        tok = p.expect_punct("=")
        if (i, j) in entries:
            p.error(f"duplicate product {names[i]} {names[j]}", tok)
        vec = p.parse_value(names, _FD_SCALARS, "a product value")
        p.expect_punct(";")
        entries[(i, j)] = tuple(
            vec.get(nm, Poly.zero()).const_value() for nm in names
        )
    p.expect_punct("}")
    doc.objects[name_tok.value] = _build(p, name_tok, finite_algebra, names, entries)


def _parse_conformal(p: _Parser, doc: Document):
    name_tok = _object_name(p, doc)
    p.expect_punct("{")
    p.expect_kw("rank")
    rank = _positive_int(p, "rank")
    p.expect_punct(";")
    names = _basis_decl(p, rank, "e", required=True)
    entries = {}
    while p.at_kw("lprod"):
        p.advance()
        i = _operand(p, names, "a basis name")
        j = _operand(p, names, "a basis name")
        tok = p.expect_punct("=")
        if (i, j) in entries:
            p.error(f"duplicate product {names[i]} {names[j]}", tok)
        vec = p.parse_value(names, _CONFORMAL_SCALARS, "a product value")
        p.expect_punct(";")
        entries[(i, j)] = tuple(vec.get(nm, Poly.zero()) for nm in names)
    p.expect_punct("}")
    doc.objects[name_tok.value] = _build(
        p, name_tok, conformal_algebra, names, entries
    )


def _parse_mockgd(p: _Parser, doc: Document):
    name_tok = _object_name(p, doc)
    p.expect_punct("{")
    p.expect_kw("dim")
    dim = _positive_int(p, "dimension")
    p.expect_punct(";")
    names = _basis_decl(p, dim, "e")
    stars, circs = {}, {}
    while p.at_kw("star") or p.at_kw("circ"):
        entries = stars if p.advance().value == "star" else circs
        i = _operand(p, names, "a basis name")
        j = _operand(p, names, "a basis name")
        tok = p.expect_punct("=")
        if (i, j) in entries:
            p.error(f"duplicate product {names[i]} {names[j]}", tok)
        vec = p.parse_value(names, _FD_SCALARS, "a product value")
        p.expect_punct(";")
        entries[(i, j)] = tuple(
            vec.get(nm, Poly.zero()).const_value() for nm in names
        )
    p.expect_punct("}")
    doc.objects[name_tok.value] = _build(p, name_tok, mock_gd, names, stars, circs)


def _lookup_algebra(p: _Parser, doc: Document, tok: Token) -> ConformalAlgebra:
    obj = doc.objects.get(tok.value)
    if obj is None:
        p.error(f"unknown name '{tok.value}'", tok)
    if not isinstance(obj, ConformalAlgebra):
        p.error(f"'{tok.value}' is not a conformal algebra", tok)
    return obj


def _parse_rep(p: _Parser, doc: Document):
    name_tok = _object_name(p, doc)
    p.expect_kw("of")
    alg_tok = p.expect_name("an algebra name")
    algebra = _lookup_algebra(p, doc, alg_tok)
    p.expect_punct("{")
    p.expect_kw("rank")
    rank = _positive_int(p, "rank")
    p.expect_punct(";")
    module = FreeModule(tuple(f"m{i + 1}" for i in range(rank)))
    zero_row = tuple(Poly.zero() for _ in range(rank))
    action = [tuple(zero_row for _ in range(rank)) for _ in range(algebra.rank)]
    seen = set()
    while p.at_kw("act"):
        p.advance()
        btok = p.expect_name("a basis name")
        if btok.value not in algebra.basis_names:
            p.error(f"unknown name '{btok.value}'", btok)
        i = algebra.basis_names.index(btok.value)
        if i in seen:
            p.error(f"duplicate action for {btok.value}", btok)
        seen.add(i)
        p.expect_punct(":")
        rows, start = p.parse_matrix(_CONFORMAL_SCALARS)
        p.expect_punct(";")
        if len(rows) != rank or len(rows[0]) != rank:
            p.error(f"action matrix must be {rank} x {rank}", start)
        action[i] = tuple(tuple(row) for row in rows)
    p.expect_punct("}")
    doc.objects[name_tok.value] = _build(
        p, name_tok, ConformalRep, algebra, module, tuple(action)
    )
    doc.refs[name_tok.value] = {"algebra": alg_tok.value}


def _parse_map(p: _Parser, doc: Document):
    name_tok = _object_name(p, doc)
    p.expect_punct(":")
    src_tok = p.expect_name("a source name")
    p.expect_punct("->")
    tgt_tok = p.expect_name("a target name")
    for tok in (src_tok, tgt_tok):
        if tok.value not in doc.objects:
            p.error(f"unknown name '{tok.value}'", tok)
    try:
        source = resolve_space(doc, src_tok.value)
    except ValueError as exc:
        p.error(str(exc), src_tok)
    try:
        target = resolve_space(doc, tgt_tok.value)
    except ValueError as exc:
        p.error(str(exc), tgt_tok)
    p.expect_punct("{")
    rows, start = p.parse_matrix(_MAP_SCALARS)
    p.expect_punct("}")
    if len(rows) != target.rank or len(rows[0]) != source.rank:
        p.error(
            f"map matrix must be {target.rank} x {source.rank}"
            " (rows index the target basis)",
            start,
        )
    doc.objects[name_tok.value] = _build(
        p, name_tok, ModuleMap, source, target, tuple(tuple(r) for r in rows)
    )
    doc.refs[name_tok.value] = {"source": src_tok.value, "target": tgt_tok.value}


def _parse_form(p: _Parser, doc: Document):
    name_tok = _object_name(p, doc)
    p.expect_kw("on")
    alg_tok = p.expect_name("an algebra name")
    algebra = _lookup_algebra(p, doc, alg_tok)
    p.expect_punct("{")
    rows, start = p.parse_matrix(_FORM_SCALARS)
    p.expect_punct("}")
    n = algebra.rank
    if len(rows) != n or len(rows[0]) != n:
        p.error(f"form matrix must be {n} x {n}", start)
    doc.objects[name_tok.value] = _build(
        p,
        name_tok,
        ConformalBilinearForm,
        FreeModule(algebra.basis_names),
        tuple(tuple(r) for r in rows),
    )
    doc.refs[name_tok.value] = {"algebra": alg_tok.value}


def _parse_datum(p: _Parser, doc: Document):
    name_tok = _object_name(p, doc)
    p.expect_punct("{")
    p.expect_kw("J")
    j_tok = p.expect_name("an algebra name")
    algebra = _lookup_algebra(p, doc, j_tok)
    p.expect_punct(";")
    p.expect_kw("Krank")
    m = _positive_int(p, "complement rank")
    p.expect_punct(";")
    if p.at_kw("Kbasis"):
        tok = p.advance()
        knames = []
        while p.peek().kind == "name":
            knames.append(p.advance().value)
        p.expect_punct(";")
        if len(knames) != m:
            p.error(f"expected {m} basis names, got {len(knames)}", tok)
        if len(set(knames)) != len(knames):
            p.error("basis names must be distinct", tok)
        for nm in knames:
            if nm in SCALAR_NAMES:
                p.error(f"'{nm}' is reserved for polynomial indeterminates", tok)
        knames = tuple(knames)
    else:
        knames = tuple(f"x{i + 1}" for i in range(m))
    clash = set(knames) & set(algebra.basis_names)
    if clash:
        p.error(f"complement names clash with J: {sorted(clash)}", name_tok)
    union = algebra.basis_names + knames
    tables = {"actJ": {}, "actK": {}, "omega": {}, "circ": {}}
    targets = {"actJ": "J", "actK": "K", "omega": "J", "circ": "K"}
    while any(p.at_kw(kw) for kw in tables):
        kw_tok = p.advance()
        kind = kw_tok.value
        pidx = _operand(p, knames, "a complement basis name")
        if kind in ("actJ", "actK"):
            sidx = _operand(p, algebra.basis_names, "a basis name of J")
        else:
            sidx = _operand(p, knames, "a complement basis name")
        eq_tok = p.expect_punct("=")
        if (pidx, sidx) in tables[kind]:
            p.error(f"duplicate {kind} entry", eq_tok)
        vec = p.parse_value(union, _CONFORMAL_SCALARS, "a value")
        p.expect_punct(";")
        if targets[kind] == "J":
            stray = [nm for nm in knames if not vec.get(nm, Poly.zero()).is_zero()]
            keep = algebra.basis_names
        else:
            stray = [
                nm
                for nm in algebra.basis_names
                if not vec.get(nm, Poly.zero()).is_zero()
            ]
            keep = knames
        if stray:
            p.error(
                f"{kind} values must lie in {targets[kind]}"
                f" (offending: {', '.join(stray)})",
                kw_tok,
            )
        tables[kind][(pidx, sidx)] = tuple(
            vec.get(nm, Poly.zero()) for nm in keep
        )
    p.expect_punct("}")
    doc.objects[name_tok.value] = _build(
        p,
        name_tok,
        extending_datum,
        algebra,
        FreeModule(knames),
        tables["actJ"],
        tables["actK"],
        tables["omega"],
        tables["circ"],
    )
    doc.refs[name_tok.value] = {"J": j_tok.value}


_BLOCKS = {
    "algebra": _parse_algebra,
    "conformal": _parse_conformal,
    "mockgd": _parse_mockgd,
    "rep": _parse_rep,
    "map": _parse_map,
    "form": _parse_form,
    "datum": _parse_datum,
}


def parse_document(text: str) -> Document:
    p = _Parser(text)
    doc = Document()
    while p.peek().kind != "eof":
        tok = p.peek()
        if tok.kind != "name" or tok.value not in _BLOCKS:
            p.error(
                "expected a block keyword"
                " (algebra, conformal, mockgd, rep, map, form, datum)",
                tok,
            )
        p.advance()
        _BLOCKS[tok.value](p, doc)
    return doc


def parse_element(text: str, space: FreeModule, scalars=("D",)) -> Element:
    """Parse a standalone linear combination over a module's basis."""
    p = _Parser(text)
    vec = p.parse_value(space.basis_names, frozenset(scalars), "an element")
    tok = p.peek()
    if tok.kind != "eof":
        p.error("unexpected trailing input", tok)
    return Element(space, tuple(vec.get(nm, Poly.zero()) for nm in space.basis_names))


# -- canonical printing -----------------------------------------------------


def _matrix_str(rows) -> str:
    return (
        "["
        + ", ".join("[" + ", ".join(str(e) for e in row) + "]" for row in rows)
        + "]"
    )


def _fd_value_str(space: FreeModule, vec) -> str:
    return render_element(
        Element(space, tuple(Poly.const(c) for c in vec))
    )


def _print_finite(name: str, a: FiniteAlgebra) -> str:
    space = FreeModule(a.basis_names)
    lines = [f"algebra {name} {{", f"  dim {a.dim};", f"  basis {' '.join(a.basis_names)};"]
    for i in range(a.dim):
        for j in range(a.dim):
            vec = a.structure[i][j]
            if any(vec):
                lines.append(
                    f"  prod {a.basis_names[i]} {a.basis_names[j]}"
                    f" = {_fd_value_str(space, vec)};"
                )
    lines.append("}")
    return "\n".join(lines) + "\n"


def _print_conformal(name: str, a: ConformalAlgebra) -> str:
    lines = [
        f"conformal {name} {{",
        f"  rank {a.rank};",
        f"  basis {' '.join(a.basis_names)};",
    ]
    for i in range(a.rank):
        for j in range(a.rank):
            vec = a.structure[i][j]
            if any(not c.is_zero() for c in vec):
                value = render_element(Element(a, vec))
                lines.append(
                    f"  lprod {a.basis_names[i]} {a.basis_names[j]} = {value};"
                )
    lines.append("}")
    return "\n".join(lines) + "\n"


def _print_mockgd(name: str, g: MockGD) -> str:
    space = FreeModule(g.basis_names)
    lines = [
        f"mockgd {name} {{",
        f"  dim {g.dim};",
        f"  basis {' '.join(g.basis_names)};",
    ]
    for label, alg in (("star", g.star), ("circ", g.circ)):
        for i in range(g.dim):
            for j in range(g.dim):
                vec = alg.structure[i][j]
                if any(vec):
                    lines.append(
                        f"  {label} {g.basis_names[i]} {g.basis_names[j]}"
                        f" = {_fd_value_str(space, vec)};"
                    )
    lines.append("}")
    return "\n".join(lines) + "\n"


def _print_rep(name: str, r: ConformalRep, refs: dict) -> str:
    algebra_name = refs["algebra"]
    lines = [f"rep {name} of {algebra_name} {{", f"  rank {r.module.rank};"]
    for i, matrix in enumerate(r.action):
        if any(not e.is_zero() for row in matrix for e in row):
            lines.append(
                f"  act {r.algebra.basis_names[i]} : {_matrix_str(matrix)};"
            )
    lines.append("}")
    return "\n".join(lines) + "\n"


def _print_map(name: str, t: ModuleMap, refs: dict) -> str:
    return (
        f"map {name} : {refs['source']} -> {refs['target']}"
        f" {{ {_matrix_str(t.matrix)} }}\n"
    )


def _print_form(name: str, f: ConformalBilinearForm, refs: dict) -> str:
    return f"form {name} on {refs['algebra']} {{ {_matrix_str(f.matrix)} }}\n"


def _print_datum(name: str, u: ExtendingDatum, refs: dict) -> str:
    j, k = u.algebra, u.complement
    lines = [
        f"datum {name} {{",
        f"  J {refs['J']};",
        f"  Krank {k.rank};",
        f"  Kbasis {' '.join(k.basis_names)};",
    ]
    for label, table, cols, space in (
        ("actJ", u.act_j, j.basis_names, j),
        ("actK", u.act_k, j.basis_names, k),
        ("omega", u.omega, k.basis_names, j),
        ("circ", u.circ, k.basis_names, k),
    ):
        for pidx, row in enumerate(table):
            for sidx, vec in enumerate(row):
                if any(not c.is_zero() for c in vec):
                    value = render_element(Element(space, vec))
                    lines.append(
                        f"  {label} {k.basis_names[pidx]} {cols[sidx]} = {value};"
                    )
    lines.append("}")
    return "\n".join(lines) + "\n"


def print_object(name: str, obj, refs: dict) -> str:
    if isinstance(obj, ConformalAlgebra):
        return _print_conformal(name, obj)
    if isinstance(obj, FiniteAlgebra):
        return _print_finite(name, obj)
    if isinstance(obj, MockGD):
        return _print_mockgd(name, obj)
    if isinstance(obj, ConformalRep):
        return _print_rep(name, obj, refs)
    if isinstance(obj, ModuleMap):
        return _print_map(name, obj, refs)
    if isinstance(obj, ConformalBilinearForm):
        return _print_form(name, obj, refs)
    if isinstance(obj, ExtendingDatum):
        return _print_datum(name, obj, refs)
    raise TypeError(f"cannot print object of type {type(obj).__name__}")


def print_document(doc: Document) -> str:
    blocks = [
        print_object(name, obj, doc.refs.get(name, {}))
        for name, obj in doc.objects.items()
    ]
    return "\n".join(blocks)
