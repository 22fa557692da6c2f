from schubcalc import verify


def test_theorem_suites_rank_two():
    for kind, family in (("theorem1", "A"), ("theorem1", "C"), ("theorem2", "A"), ("theorem3", "C")):
        report = verify.theorem_suite(kind, family, 2, 1)
        assert report["status"] == "pass"
        assert all(cell["status"] == "pass" for cell in report["cells"])


def test_duality_suite():
    report = verify.duality_suite("C", 2)
    assert report["status"] == "pass"
    resolved = [c for c in report["cells"] if c["status"] == "pass"]
    assert resolved, "nothing resolved"
    for cell in resolved:
        assert cell["pairing"] in (0, 1)


def test_products_suite():
    report = verify.products_suite("C", 2)
    assert report["status"] == "pass"
    assert len(report["cells"]) == 64
    assert all(cell["identified"] for cell in report["cells"])


def test_axioms_suite_deterministic():
    a = verify.axioms_suite("A", 2, 40, seed=7)
    b = verify.axioms_suite("A", 2, 40, seed=7)
    assert a["cells"] == b["cells"]
    assert a["status"] == "pass"


def test_budget_produces_partial_report():
    report = verify.theorem_suite("theorem1", "A", 2, 2, budget=0.0)
    assert report["status"] == "partial"
    assert len(report["cells"]) < 54


def test_higher_rank_spot_checks():
    # fixed-seed randomized invariants beyond the exhaustive desk range
    for family, rank in (("A", 4), ("C", 3)):
        report = verify.axioms_suite(family, rank, 30, seed=11)
        assert report["status"] == "pass"
