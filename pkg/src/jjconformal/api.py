"""Command-level operations shared by the HTTP service and the CLI.

Each command works on a Document parsed from definition text and returns
plain dicts ready for JSON serialisation.  Error contract:

    DslError / ShapeError / ApiError  -> invalid input (exit code 2)
    verdict with passed=False          -> property fails (exit code 1)

Mathematical precondition failures (PreconditionError) are reported as
failed verdicts carrying the precondition's counterexamples and a note.
"""

from __future__ import annotations

import time
from fractions import Fraction

from . import constructions, extending, finite, operators, reps
from .conformal import (
    ConformalAlgebra,
    anti_associative_residual,
    check_anti_associative,
    check_commutative,
    check_jacobi_jordan,
    check_left_anti_symmetric,
    commutative_residual,
    eval_product,
    jacobi_residual,
    left_anti_symmetric_residual,
)
from .dsl import Document, parse_document, parse_element, print_document
from .errors import ApiError, PreconditionError
from .extending import EquivalencePair, ExtendingDatum
from .finite import FiniteAlgebra, MockGD
from .operators import ConformalBilinearForm, ModuleMap
from .poly import Poly, mat_identity, mat_zero
from .reps import ConformalRep

CHECK_PROPERTIES = (
    "commutative",
    "jacobi-jordan",
    "anti-associative",
    "left-anti-symmetric",
    "anti-novikov",
    "mock-gd",
    "rep",
    "o-operator",
    "rota-baxter",
    "symplectic",
    "unified",
    "twisted",
    "crossed",
    "equivalence",
)

CONSTRUCT_KINDS = (
    "current",
    "tensor",
    "semidirect",
    "quadratic",
    "mockgd-extract",
    "dual-rep",
    "unified",
    "induced-las",
)


def load_document(text: str) -> Document:
    return parse_document(text)


def _get(doc: Document, name: str):
    if name not in doc.objects:
        raise ApiError(f"no object named '{name}'")
    return doc.objects[name]


def _expect(doc: Document, name: str, cls, what: str):
    obj = _get(doc, name)
    if not isinstance(obj, cls):
        raise ApiError(f"'{name}' is not {what}")
    return obj


def _ces(counterexamples) -> list:
    out = []
    for ce in counterexamples:
        entry = {
            "indices": [i + 1 for i in ce.indices],
            "residual": str(ce.residual),
        }
        if ce.label:
            entry["label"] = ce.label
        out.append(entry)
    return out


def _verdict(object_name, prop, passed, counterexamples, millis, conditions=None, note=None):
    out = {
        "object": object_name,
        "property": prop,
        "passed": passed,
        "counterexamples": counterexamples,
        "millis": millis,
    }
    if conditions is not None:
        out["conditions"] = conditions
    if note is not None:
        out["note"] = note
    return out


def _equivalence_pair(doc: Document, u1: ExtendingDatum, r_name: str, s_name: str):
    n, m = u1.algebra.rank, u1.complement.rank
    if r_name == "zero":
        r = mat_zero(n, m)
    else:
        rmap = _expect(doc, r_name, ModuleMap, "a map")
        if (
            rmap.source.basis_names != u1.complement.basis_names
            or rmap.target.basis_names != u1.algebra.basis_names
        ):
            raise ApiError(f"map '{r_name}' must send the complement into J")
        r = rmap.matrix
    if s_name == "id":
        s = mat_identity(m)
    else:
        smap = _expect(doc, s_name, ModuleMap, "a map")
        if (
            smap.source.basis_names != u1.complement.basis_names
            or smap.target.basis_names != u1.complement.basis_names
        ):
            raise ApiError(f"map '{s_name}' must send the complement to itself")
        s = smap.matrix
    return EquivalencePair(r, s)


def _dispatch_check(doc: Document, object_name: str, obj, head: str, arg: str):
    """Returns (passed, counterexamples, conditions-or-None)."""

    def simple(report):
        return report.passed, _ces(report.counterexamples), None

    if head == "commutative":
        if isinstance(obj, ConformalAlgebra):
            return simple(check_commutative(obj))
        if isinstance(obj, FiniteAlgebra):
            return simple(finite.check_commutative_fd(obj))
        raise ApiError(f"'{object_name}' is not an algebra")
    if head == "jacobi-jordan":
        if isinstance(obj, ConformalAlgebra):
            return simple(check_jacobi_jordan(obj))
        if isinstance(obj, FiniteAlgebra):
            return simple(finite.check_jacobi_jordan_fd(obj))
        raise ApiError(f"'{object_name}' is not an algebra")
    if head == "anti-associative":
        if isinstance(obj, ConformalAlgebra):
            return simple(check_anti_associative(obj))
        if isinstance(obj, FiniteAlgebra):
            return simple(finite.check_anti_associative_fd(obj))
        raise ApiError(f"'{object_name}' is not an algebra")
    if head == "left-anti-symmetric":
        alg = _as_conformal(object_name, obj)
        return simple(check_left_anti_symmetric(alg))
    if head == "anti-novikov":
        if not isinstance(obj, FiniteAlgebra):
            raise ApiError(f"'{object_name}' is not a finite algebra")
        return simple(finite.check_anti_novikov(obj))
    if head == "mock-gd":
        if not isinstance(obj, MockGD):
            raise ApiError(f"'{object_name}' is not a mock-GD structure")
        return simple(finite.check_mock_gd(obj))
    if head == "rep":
        if not isinstance(obj, ConformalRep):
            raise ApiError(f"'{object_name}' is not a representation")
        return simple(reps.check_rep(obj))
    if head == "o-operator":
        if not arg:
            raise ApiError("property o-operator:REP needs a representation name")
        t = _require_map(object_name, obj)
        rep = _expect(doc, arg, ConformalRep, "a representation")
        return simple(operators.check_o_operator(t, rep))
    if head == "rota-baxter":
        t = _require_map(object_name, obj)
        alpha = _fraction(arg, "rota-baxter weight")
        return simple(operators.check_rota_baxter(t, alpha))
    if head == "symplectic":
        alg = _as_conformal(object_name, obj)
        if not arg:
            raise ApiError("property symplectic:FORM needs a form name")
        form = _expect(doc, arg, ConformalBilinearForm, "a bilinear form")
        return simple(operators.check_symplectic(alg, form))
    if head == "unified":
        u = _require_datum(object_name, obj)
        verdict = extending.check_extending_structure(u)
        conditions = {name: rep.passed for name, rep in verdict.conditions}
        return verdict.passed, _ces(verdict.flat_counterexamples()), conditions
    if head in ("twisted", "crossed"):
        u = _require_datum(object_name, obj)
        checker = extending.check_twisted if head == "twisted" else extending.check_crossed
        special = checker(u)
        conditions = {name: rep.passed for name, rep in special.listed}
        conditions.update(
            {name: rep.passed for name, rep in special.verdict.conditions}
        )
        return special.passed, _ces(special.verdict.flat_counterexamples()), conditions
    if head == "equivalence":
        u1 = _require_datum(object_name, obj)
        parts = arg.split(":") if arg else []
        if len(parts) != 3:
            raise ApiError("property equivalence:OTHER:R:S needs three arguments")
        other_name, r_name, s_name = parts
        u2 = _expect(doc, other_name, ExtendingDatum, "an extending datum")
        pair = _equivalence_pair(doc, u1, r_name, s_name)
        report = extending.check_equivalence(u1, u2, pair)
        return report.passed, _ces(report.counterexamples), None
    raise ApiError(f"unknown property '{head}'")


def _as_conformal(name, obj) -> ConformalAlgebra:
    if not isinstance(obj, ConformalAlgebra):
        raise ApiError(f"'{name}' is not a conformal algebra")
    return obj


def _require_map(name, obj) -> ModuleMap:
    if not isinstance(obj, ModuleMap):
        raise ApiError(f"'{name}' is not a map")
    return obj


def _require_datum(name, obj) -> ExtendingDatum:
    if not isinstance(obj, ExtendingDatum):
        raise ApiError(f"'{name}' is not an extending datum")
    return obj


def _fraction(text: str, what: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ApiError(f"invalid {what} '{text}'") from None


def run_check(doc: Document, object_name: str, prop: str) -> dict:
    obj = _get(doc, object_name)
    head, _, arg = prop.partition(":")
    start = time.perf_counter()
    try:
        passed, counterexamples, conditions = _dispatch_check(
            doc, object_name, obj, head, arg
        )
        note = None
    except PreconditionError as exc:
        passed, conditions = False, None
        counterexamples = (
            _ces(exc.report.counterexamples) if exc.report is not None else []
        )
        note = str(exc)
    millis = int((time.perf_counter() - start) * 1000)
    return _verdict(object_name, prop, passed, counterexamples, millis, conditions, note)


# -- constructions ----------------------------------------------------------

_KIND_TAGS = {
    "current": "cur",
    "tensor": "ten",
    "semidirect": "sd",
    "quadratic": "quad",
    "mockgd-extract": "mgd",
    "dual-rep": "dual",
    "unified": "up",
    "induced-las": "las",
}


def run_construct(
    doc: Document,
    kind: str,
    from_name: str,
    with_name: str | None = None,
    name: str | None = None,
) -> dict:
    if kind not in CONSTRUCT_KINDS:
        raise ApiError(f"unknown construction kind '{kind}'")
    out_name = name or f"{from_name}_{_KIND_TAGS[kind]}"
    start = time.perf_counter()

    def need_with(what):
        if with_name is None:
            raise ApiError(f"construction '{kind}' needs --with {what}")

    out_doc = Document()
    try:
        if kind == "current":
            src = _expect(doc, from_name, FiniteAlgebra, "a finite algebra")
            out_doc.objects[out_name] = constructions.current_algebra(src)
        elif kind == "tensor":
            src = _expect(doc, from_name, FiniteAlgebra, "a finite algebra")
            need_with("a conformal algebra")
            alg = _expect(doc, with_name, ConformalAlgebra, "a conformal algebra")
            out_doc.objects[out_name] = constructions.tensor_with_comm_assoc(src, alg)
        elif kind == "semidirect":
            rep = _expect(doc, from_name, ConformalRep, "a representation")
            out_doc.objects[out_name] = constructions.semidirect_product(rep)
        elif kind == "quadratic":
            g = _expect(doc, from_name, MockGD, "a mock-GD structure")
            out_doc.objects[out_name] = constructions.quadratic_from_mock_gd(g)
        elif kind == "mockgd-extract":
            alg = _expect(doc, from_name, ConformalAlgebra, "a conformal algebra")
            out_doc.objects[out_name] = constructions.mock_gd_from_quadratic(alg)
        elif kind == "dual-rep":
            rep = _expect(doc, from_name, ConformalRep, "a representation")
            dual = reps.dual_rep(rep)
            alg_name = doc.refs.get(from_name, {}).get("algebra", f"{from_name}_alg")
            out_doc.objects[alg_name] = rep.algebra
            out_doc.objects[out_name] = dual
            out_doc.refs[out_name] = {"algebra": alg_name}
        elif kind == "unified":
            u = _expect(doc, from_name, ExtendingDatum, "an extending datum")
            out_doc.objects[out_name] = extending.unified_product(u)
        elif kind == "induced-las":
            src = _get(doc, from_name)
            if isinstance(src, ModuleMap):
                need_with("a representation")
                rep = _expect(doc, with_name, ConformalRep, "a representation")
                out_doc.objects[out_name] = operators.induced_las_from_o_operator(
                    src, rep
                )
            elif isinstance(src, ConformalAlgebra):
                need_with("a bilinear form")
                form = _expect(doc, with_name, ConformalBilinearForm, "a bilinear form")
                out_doc.objects[out_name] = operators.induced_las_from_symplectic(
                    src, form
                )
            else:
                raise ApiError(
                    f"'{from_name}' must be a map (with a representation)"
                    " or a conformal algebra (with a form)"
                )
    except PreconditionError as exc:
        millis = int((time.perf_counter() - start) * 1000)
        counterexamples = (
            _ces(exc.report.counterexamples) if exc.report is not None else []
        )
        verdict = _verdict(
            from_name, f"construct:{kind}", False, counterexamples, millis, None, str(exc)
        )
        return {"ok": False, "name": out_name, "verdict": verdict}
    return {"ok": True, "name": out_name, "source": print_document(out_doc)}


def run_product(
    doc: Document, algebra_name: str, left: str, right: str, at: str = "L"
) -> dict:
    alg = _expect(doc, algebra_name, ConformalAlgebra, "a conformal algebra")
    if at == "D" or at in alg.basis_names or not at.isidentifier():
        raise ApiError(f"invalid parameter name '{at}'")
    x = parse_element(left, alg)
    y = parse_element(right, alg)
    result = eval_product(x, y, at)
    return {
        "algebra": algebra_name,
        "left": str(x),
        "right": str(y),
        "at": at,
        "result": str(result),
    }


# -- counterexample replay --------------------------------------------------


def replay(doc: Document, object_name: str, prop: str, indices, label: str = "") -> str:
    """Recompute the residual of a reported counterexample.

    `indices` are 1-based as serialised in verdicts; the return value is the
    canonical rendering that appeared in the verdict.
    """
    obj = _get(doc, object_name)
    head, _, arg = prop.partition(":")
    idx = tuple(i - 1 for i in indices)
    if head == "commutative":
        if isinstance(obj, ConformalAlgebra):
            return str(commutative_residual(obj, *idx))
        return str(_fd_str(obj, finite.fd_commutative_residual(obj, *idx)))
    if head == "jacobi-jordan":
        if isinstance(obj, ConformalAlgebra):
            if label == "commutative":
                return str(commutative_residual(obj, *idx))
            return str(jacobi_residual(obj, *idx))
        if label == "commutative":
            return str(_fd_str(obj, finite.fd_commutative_residual(obj, *idx)))
        return str(_fd_str(obj, finite.fd_jacobi_residual(obj, *idx)))
    if head == "anti-associative":
        if isinstance(obj, ConformalAlgebra):
            return str(anti_associative_residual(obj, *idx))
        return str(_fd_str(obj, finite.fd_anti_assoc_residual(obj, *idx)))
    if head == "left-anti-symmetric":
        return str(left_anti_symmetric_residual(obj, *idx))
    if head == "anti-novikov":
        fn = (
            finite.fd_anti_novikov_left_residual
            if label == "left-swap"
            else finite.fd_anti_novikov_assoc_residual
        )
        return str(_fd_str(obj, fn(obj, *idx)))
    if head == "mock-gd":
        if label == "compatibility":
            return str(_fd_str(obj.star, finite.mock_gd_compat_residual(obj, *idx)))
        side, _, sub = label.partition("-")
        alg = obj.star if side == "star" else obj.circ
        if side == "star":
            if sub == "commutative":
                return str(_fd_str(alg, finite.fd_commutative_residual(alg, *idx)))
            return str(_fd_str(alg, finite.fd_jacobi_residual(alg, *idx)))
        fn = (
            finite.fd_anti_novikov_left_residual
            if sub == "left-swap"
            else finite.fd_anti_novikov_assoc_residual
        )
        return str(_fd_str(alg, fn(alg, *idx)))
    if head == "rep":
        return str(reps.rep_residual(obj, *idx))
    if head == "o-operator":
        rep = _expect(doc, arg, ConformalRep, "a representation")
        return str(operators.o_operator_residual(obj, rep, *idx))
    if head == "rota-baxter":
        t = _require_map(object_name, obj)
        return str(
            operators.rota_baxter_residual(t, t.source, _fraction(arg, "weight"), *idx)
        )
    if head == "symplectic":
        form = _expect(doc, arg, ConformalBilinearForm, "a bilinear form")
        return str(operators.symplectic_residual(obj, form, *idx))
    if head in ("unified", "twisted", "crossed"):
        cond, _, sub = label.partition(":")
        if cond == "U1":
            for kind, residual in extending.u1_residuals(obj, *idx):
                if kind == sub:
                    return str(residual)
            raise ApiError(f"no U1 residual labelled '{sub}'")
        fn = {
            "U2": extending.u2_residual,
            "U3": extending.u3_residual,
            "U4": extending.u4_residual,
            "U5": extending.u5_residual,
            "U6": extending.u6_residual,
            "U7": extending.u7_residual,
        }.get(cond)
        if fn is None:
            raise ApiError(f"cannot replay condition '{cond}'")
        return str(fn(obj, *idx))
    if head == "equivalence":
        parts = arg.split(":") if arg else []
        if len(parts) != 3:
            raise ApiError("property equivalence:OTHER:R:S needs three arguments")
        u2 = _expect(doc, parts[0], ExtendingDatum, "an extending datum")
        pair = _equivalence_pair(doc, obj, parts[1], parts[2])
        for ce in extending.equivalence_residuals(obj, u2, pair):
            if ce.indices == idx and ce.label == label:
                return str(ce.residual)
        raise ApiError("no matching counterexample")
    raise ApiError(f"cannot replay property '{head}'")


def _fd_str(alg, vec):
    return finite._residual_element(alg, vec)
