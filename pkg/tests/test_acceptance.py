"""Acceptance gate: one test per contract criterion, each with its time bound.

Every test enforces its runtime budget and records a summary line; conftest
prints one PASS/FAIL line per criterion at the end of the run.
"""

import json
import random
import time

from helpers import (
    AB2,
    B2,
    CUR2,
    K1,
    K2,
    MGD3,
    MUTANTS,
    Q3,
    endo_identities_hold,
    nilpotent_rep,
    random_conformal,
    random_datum,
    random_element,
    random_mock_gd,
    random_poly,
    random_valid_datum,
    random_valid_mock_gd,
    substitution_identities_hold,
)
from jjconformal import api, cli
from jjconformal.conformal import (
    Element,
    FreeModule,
    ConformalAlgebra,
    admissible_algebra,
    check_jacobi_jordan,
    check_left_anti_symmetric,
)
from jjconformal.constructions import (
    mock_gd_from_quadratic,
    quadratic_algebra,
    quadratic_from_mock_gd,
)
from jjconformal.extending import (
    check_extending_structure,
    check_twisted,
    extending_datum,
    extract_datum,
    unified_product,
)
from jjconformal.finite import check_mock_gd
from jjconformal.operators import (
    check_rota_baxter,
    induced_las_from_o_operator,
    module_map,
    o_operator_homomorphism_report,
)
from jjconformal.poly import D, L, mat_identity
from jjconformal.reps import adjoint_rep, check_rep, current_rep, dual_rep
from jjconformal.conformal import zero_algebra


RESULTS: dict = {}


def _done(number: int, text: str, start: float, limit: float) -> None:
    elapsed = time.monotonic() - start
    assert elapsed < limit, f"criterion {number} took {elapsed:.2f}s (limit {limit}s)"
    RESULTS[number] = (text, elapsed)
    print(f"PASS criterion {number}: {text} ({elapsed:.2f}s)")


def test_c1_quadratic_example_reproduced_exactly():
    start = time.monotonic()
    q = quadratic_from_mock_gd(MGD3)
    assert str(q.structure[0][1][2]) == "D + 3*L - 1"
    assert str(q.structure[1][0][2]) == "-2*D - 3*L - 1"
    assert q == Q3
    assert check_jacobi_jordan(q).passed
    _done(1, "quadratic example reproduced byte-exactly", start, 1.0)


def test_c2_quadratic_correspondence_both_directions():
    start = time.monotonic()
    rng = random.Random(2024)
    structures = [MGD3]
    structures += [random_mock_gd(rng, sparse=True) for _ in range(70)]
    structures += [random_mock_gd(rng, sparse=False) for _ in range(70)]
    structures += [random_valid_mock_gd(rng) for _ in range(60)]
    assert len(structures) >= 200
    counts = {True: 0, False: 0}
    for g in structures:
        valid = check_mock_gd(g).passed
        assert valid == check_jacobi_jordan(quadratic_algebra(g)).passed
        if valid:
            assert mock_gd_from_quadratic(quadratic_from_mock_gd(g)) == g
        counts[valid] += 1
    assert counts[True] >= 30 and counts[False] >= 30, counts
    _done(
        2,
        f"two-product validity matches Jacobi-Jordan on {len(structures)} structures "
        f"({counts[True]} valid / {counts[False]} invalid), round-trip exact",
        start,
        30.0,
    )


def test_c3_unified_product_conditions_sound_and_complete():
    start = time.monotonic()
    rng = random.Random(33)
    data = [random_datum(rng) for _ in range(100)]
    data += [random_valid_datum(rng) for _ in range(20)]
    counts = {True: 0, False: 0}
    for u in data:
        ok = check_extending_structure(u).passed
        assert ok == check_jacobi_jordan(unified_product(u)).passed
        counts[ok] += 1
    assert counts[True] >= 20 and counts[False] >= 20, counts
    for want, datum in MUTANTS.items():
        verdict = check_extending_structure(datum)
        broken = [name for name, rep in verdict.conditions if not rep.passed]
        assert broken == [want], (want, broken)
        assert not check_jacobi_jordan(unified_product(datum)).passed
    _done(
        3,
        f"U1-U7 verdicts match unified-product Jacobi-Jordan on {len(data)} random "
        "data; 7 mutants each name exactly their broken condition",
        start,
        60.0,
    )


def test_c4_extraction_round_trip(fixdir):
    start = time.monotonic()
    omega_01 = D + 2 * L
    fixtures = [
        extending_datum(CUR2, K2),
        extending_datum(
            CUR2,
            K2,
            omega={(0, 1): (0, omega_01), (1, 0): (0, omega_01.subs("L", -L - D))},
        ),
        extending_datum(CUR2, K1, act_j={(0, 0): (0, 1)}),
        api.load_document((fixdir / "ext1.jjc").read_text()).objects["EXT0"],
    ]
    rng = random.Random(44)
    data = fixtures + [random_valid_datum(rng) for _ in range(100)]
    for u in data:
        assert check_extending_structure(u).passed
        back = extract_datum(unified_product(u), tuple(range(u.algebra.rank)))
        assert back == u
    _done(
        4,
        f"datum -> unified product -> extraction is the identity on {len(data)} valid data",
        start,
        30.0,
    )


def test_c5_representation_stack():
    start = time.monotonic()
    for algebra in (CUR2, Q3, AB2):
        adj = adjoint_rep(algebra)
        assert check_rep(adj).passed
        assert check_rep(dual_rep(adj)).passed
    cur = current_rep(B2, ([[0, 0], [1, 0]], [[0, 0], [0, 0]]))
    assert check_rep(cur).passed
    for rep in (nilpotent_rep(), cur, adjoint_rep(CUR2)):
        assert dual_rep(dual_rep(rep)).action == rep.action
    _done(
        5,
        "adjoint/current/dual representations valid; double dual restores the action",
        start,
        10.0,
    )


def test_c6_operator_stack(fixdir):
    start = time.monotonic()
    diag = module_map(CUR2, CUR2, [[0, 0], [0, 1]])
    assert check_rota_baxter(diag, 0).passed
    algebras = {}
    for path in sorted(fixdir.glob("*.jjc")):
        doc = api.load_document(path.read_text())
        for name, obj in doc.objects.items():
            if isinstance(obj, ConformalAlgebra):
                algebras[name] = obj
    assert len(algebras) >= 4
    for name, algebra in algebras.items():
        ident = module_map(algebra, algebra, mat_identity(algebra.rank))
        assert check_rota_baxter(ident, -1).passed, name
    nil = nilpotent_rep()
    t_map = module_map(nil.module, nil.algebra, [[0, 1]])
    las = induced_las_from_o_operator(t_map, nil)
    assert check_left_anti_symmetric(las).passed
    assert check_jacobi_jordan(admissible_algebra(las)).passed
    assert o_operator_homomorphism_report(t_map, nil).passed
    _done(
        6,
        f"Rota-Baxter weights 0/-1 verified (identity on {len(algebras)} fixture "
        "algebras); induced product left-anti-symmetric, admissible Jacobi-Jordan, "
        "operator is a homomorphism onto it",
        start,
        10.0,
    )


def test_c7_substitution_engine_identities():
    start = time.monotonic()
    rng = random.Random(77)
    for _ in range(100):
        alg = random_conformal(rng)
        x, y, z = (random_element(rng, alg) for _ in range(3))
        assert substitution_identities_hold(x, y, z)
    for _ in range(100):
        n = rng.randint(1, 3)
        space = FreeModule(tuple(f"m{i + 1}" for i in range(n)))
        f_mat = tuple(tuple(random_poly(rng) for _ in range(n)) for _ in range(n))
        g_mat = tuple(tuple(random_poly(rng) for _ in range(n)) for _ in range(n))
        m = Element(space, tuple(random_poly(rng, names=("D",)) for _ in range(n)))
        assert endo_identities_hold(f_mat, g_mat, m)
    _done(
        7,
        "product-shift identities on 100 random algebras and endomorphism "
        "composition identities on 100 random pairs",
        start,
        30.0,
    )


def test_c8_twisted_product_discrepancy_split(fixdir):
    start = time.monotonic()
    doc = api.load_document((fixdir / "ext1.jjc").read_text())
    datum = doc.objects["EXT1"]
    sv = check_twisted(datum)
    assert not sv.passed
    listed = {name: rep.passed for name, rep in sv.listed}
    assert listed == {
        "omega-symmetric": True,
        "omega-cocycle": True,
        "circ-jacobi-jordan": True,
    }
    broken = [name for name, rep in sv.verdict.conditions if not rep.passed]
    assert broken == ["U4"]
    assert not check_jacobi_jordan(unified_product(datum)).passed
    verdict = api.run_check(doc, "EXT1", "twisted")
    assert not verdict["passed"]
    assert verdict["conditions"]["omega-symmetric"] is True
    assert verdict["conditions"]["omega-cocycle"] is True
    assert verdict["conditions"]["U4"] is False
    assert all(
        verdict["conditions"][f"U{i}"] for i in (1, 2, 3, 5, 6, 7)
    )
    _done(
        8,
        "listed twisted conditions hold while U4 and the full Jacobi check fail, "
        "and the report shows exactly that split",
        start,
        1.0,
    )


def test_c9_cli_contract(fixdir, tmp_path, capsys):
    start = time.monotonic()
    from jjconformal.dsl import parse_document, print_document

    for path in sorted(fixdir.glob("*.jjc")):
        text = path.read_text()
        assert print_document(parse_document(text)) == text, path.name

    def run(argv):
        try:
            code = cli.main(argv)
        except SystemExit as exc:
            code = exc.code
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    code, out, _ = run(
        ["check", str(fixdir / "q3.jjc"), "--object", "Q3", "--property", "jacobi-jordan"]
    )
    assert code == 0 and out.startswith("PASS: Q3 jacobi-jordan")

    code, out, _ = run(
        ["check", str(fixdir / "bad.jjc"), "--object", "E", "--property", "jacobi-jordan"]
    )
    assert code == 1 and "counterexample (1,1,1)" in out

    code, _, err = run(
        ["check", "/no/such/file.jjc", "--object", "X", "--property", "rep"]
    )
    assert code == 2 and "error:" in err
    code, _, err = run(
        ["check", str(fixdir / "q3.jjc"), "--object", "Q3", "--property", "nonsense"]
    )
    assert code == 2 and "error:" in err

    code, out, _ = run(
        [
            "check",
            str(fixdir / "bad.jjc"),
            "--object",
            "E",
            "--property",
            "jacobi-jordan",
            "--json",
        ]
    )
    assert code == 1
    verdict = json.loads(out)
    doc = api.load_document((fixdir / "bad.jjc").read_text())
    for ce in verdict["counterexamples"]:
        replayed = api.replay(
            doc, "E", "jacobi-jordan", ce["indices"], ce.get("label", "")
        )
        assert replayed == ce["residual"]

    _done(
        9,
        "fixture files print back byte-identically; exit codes 0/1/2 observed; "
        "JSON counterexamples replay to the same residuals",
        start,
        5.0,
    )
