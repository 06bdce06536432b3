import json

import pytest

from codegrees.constructions import (MatrixGroupSpec, alternating, build,
                                     csu23_spec, gamma_spec, monomial_spec,
                                     symmetric)
from codegrees.verify import (UnknownCheckError,
                              VerificationReport, check_cor_1_2,
                              check_half_transitive, check_lemma_2_suite,
                              check_lemma_3_1, check_lemma_3_3,
                              check_prop_1_3, check_prop_1_4,
                              check_theorem_1_1, run_catalog, run_checks)


def test_report_invariants():
    with pytest.raises(AssertionError):
        VerificationReport("G", "cor1.2", "fail", 1, 0, [], 42)
    with pytest.raises(AssertionError):
        VerificationReport("G", "cor1.2", "skipped", None, None,
                           [{"note": "no reason key"}], 42)
    r = VerificationReport("G", "cor1.2", "pass", 1, 2, [], 42)
    assert json.loads(r.to_json())["status"] == "pass"


def test_theorem_1_1_s4():
    r = check_theorem_1_1("S4", symmetric(4))
    assert r.status == "pass"
    assert r.lhs == 3  # sign, and the two faithful cubics
    kinds = {w["chi"]: w for w in r.witnesses}
    # every witness has strictly larger codegree and smaller kernel
    for w in r.witnesses:
        assert w["xi_cod"] > w["cod"]
        assert w["xi_kernel_order"] < w["kernel_order"]


def test_theorem_1_1_vacuous_on_nilpotent():
    r = check_theorem_1_1("Q8", build("Q8"))
    assert r.status == "pass"
    assert r.lhs == 0
    assert "vacuous" in r.witnesses[0]["note"]


def test_bounds_s4_equalities():
    S4 = symmetric(4)
    r = check_cor_1_2("S4", S4)
    assert r.status == "pass" and r.witnesses[0]["equality"]
    r = check_prop_1_3("S4", S4)
    assert r.status == "pass" and r.witnesses[0]["equality"]
    r = check_prop_1_4("S4", S4)
    assert r.status == "pass"


def test_bounds_skip_nonsolvable():
    A5 = alternating(5)
    for check in (check_cor_1_2, check_prop_1_3, check_prop_1_4):
        r = check("A5", A5)
        assert r.status == "skipped"
        assert "solvable" in r.witnesses[0]["reason"]


def test_lemma_3_1_gamma():
    r = check_lemma_3_1("Affine-Gamma(9)", gamma_spec(3, 2))
    assert r.status == "pass"
    w = r.witnesses[0]
    assert w["disjoint"] and w["union_is_cod"] and w["wolf_bound"]


def test_lemma_3_1_gate_skips():
    # trivial linear part: V is not the unique minimal normal subgroup
    r = check_lemma_3_1("E9", MatrixGroupSpec(3, 2, ()))
    assert r.status == "skipped"


def test_half_transitive():
    half, sizes, m = check_half_transitive(gamma_spec(3, 2))
    assert half and sizes == [8] and m == 1
    half, sizes, m = check_half_transitive(monomial_spec(5, 2))
    assert half and m == 1
    # trivial group: all orbits singletons
    half, sizes, m = check_half_transitive(MatrixGroupSpec(3, 2, ()))
    assert half and sizes == [1] * 8
    # reducible diagonal group with unequal orbit sizes
    diag = MatrixGroupSpec(3, 2, (((2, 0), (0, 1)),))
    half, sizes, m = check_half_transitive(diag)
    assert not half and m == 2


def test_lemma_3_3():
    r = check_lemma_3_3("Gamma(9)", gamma_spec(3, 2))
    assert r.status == "pass" and r.witnesses[0]["branch"] == 1
    r = check_lemma_3_3("CSU(2,3)", csu23_spec())
    assert r.status == "pass"
    assert r.witnesses[0] == {"fitting_height": 3, "cod_count": 6,
                              "branch": 2}
    diag = MatrixGroupSpec(3, 2, (((2, 0), (0, 1)),))
    assert check_lemma_3_3("diag", diag).status == "skipped"


def test_lemma_2_suite_s4():
    r = check_lemma_2_suite("S4", symmetric(4))
    assert r.status == "pass"
    per_lemma = {w["lemma"]: w for w in r.witnesses if "instances" in w}
    assert set(per_lemma) == {"L2.1.1", "L2.1.2", "L2.2", "L2.3/P2.4",
                              "L2.6"}
    for w in per_lemma.values():
        assert w["instances"] > 0 and w["status"] == "pass"


def test_unknown_check_id():
    with pytest.raises(UnknownCheckError):
        run_checks("S4", symmetric(4), ["nope"])
    with pytest.raises(UnknownCheckError):
        run_catalog(["nope"], "S4")


def test_run_catalog_filter():
    reports = run_catalog(group_filter="S4", seed=42)
    assert len(reports) == 6
    assert {r.check for r in reports} == \
        {"thm1.1", "cor1.2", "prop1.3", "prop1.4", "lem2suite", "lem3.1"}
    assert all(r.group == "S4" for r in reports)
    assert all(r.seed == 42 for r in reports)
