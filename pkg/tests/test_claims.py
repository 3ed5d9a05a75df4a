"""Claim verifier: catalog runners, grids, suite determinism, witnesses."""

import json

import pytest

from ringgraphs.claims import (
    CATALOG,
    REFUTED,
    UNSUPPORTED,
    VACUOUS,
    VERIFIED,
    ClaimInstance,
    check_bipartite_iff,
    default_grid,
    dump_grid,
    grid_ideals,
    load_grid,
    replay_witness,
    run_claim,
    run_suite,
    suite_to_json,
)
from ringgraphs.ideals import jacobson_radical, maximal_ideals, span, zero_ideal
from ringgraphs.rings import build_ring


def inst(claim, ring, ideal="0", expected=None, **params):
    return ClaimInstance(claim, ring, ideal, tuple(sorted(params.items())), expected)


def test_catalog_is_complete():
    assert list(CATALOG) == [
        "C-EMPTY", "C-GROW", "C-PRIME", "C-FILT", "C-TRI", "C-XI", "C-CONIL",
        "C-VMEM", "C-ADJ17", "C-DESC", "C-IDEM", "C-BIP", "C-ZDGC", "C-SEMI",
    ]


def test_empty_claim_example():
    report = run_claim(inst("C-EMPTY", "Z27", i=4))
    assert report.status == VERIFIED


def test_grow_claim_example():
    report = run_claim(inst("C-GROW", "Z12", p=2, q=3, n=2))
    assert report.status == VERIFIED
    assert report.witness["x"] == "6" and report.witness["y"] == "2"
    assert report.witness["level"] == 2
    assert report.witness["absent_at_level"] == 1
    assert replay_witness(report)


def test_tripartite_claim_refuted_with_replayable_witness():
    report = run_claim(inst("C-TRI", "Z12", p=2, q=3, n=2))
    assert report.status == REFUTED
    assert (report.witness["x"], report.witness["y"]) == ("3", "6")
    assert replay_witness(report)


def test_prime_claim_vacuous_on_finite_rings():
    for ideal in ("0", "6", "4"):
        report = run_claim(inst("C-PRIME", "Z12", ideal, i=1))
        assert report.status == VACUOUS
    report = run_claim(inst("C-PRIME", "Z12", "2", i=1))
    assert report.status == VACUOUS  # prime = maximal: empty graph


def test_filtration_claim_verified():
    assert run_claim(inst("C-FILT", "Z24")).status == VERIFIED
    assert run_claim(inst("C-FILT", "Z2[x,y]/(x^3,y^2)")).status == VERIFIED


def test_xi_claim():
    assert run_claim(inst("C-XI", "Z6")).status == VERIFIED
    assert run_claim(inst("C-XI", "Z12")).status == VACUOUS  # levels differ
    assert run_claim(inst("C-XI", "Z12", "6")).status == VERIFIED


def test_semiprime_claim_counterexample_is_refuted_and_replayable():
    report = run_claim(inst("C-SEMI", "Z2xZ2", i=1))
    assert report.status == REFUTED
    assert report.witness["kind"] == "complete_graph"
    assert report.witness["vertices"] == ["(0,1)", "(1,0)"]
    assert replay_witness(report)


def test_semiprime_claim_holds_elsewhere():
    assert run_claim(inst("C-SEMI", "Z6", i=1)).status == VERIFIED
    assert run_claim(inst("C-SEMI", "Z6", i=3)).status == VERIFIED
    assert run_claim(inst("C-SEMI", "Z12", "6", i=2)).status == VERIFIED
    assert run_claim(inst("C-SEMI", "Z12", i=1)).status == VACUOUS  # 0 not semiprime


def test_zero_divisor_completeness_claim():
    assert run_claim(inst("C-ZDGC", "Z4", i=1)).status == VERIFIED
    assert run_claim(inst("C-ZDGC", "Z2xZ2", i=2)).status == VERIFIED
    assert run_claim(inst("C-ZDGC", "Z12", i=2)).status == VACUOUS


def test_descent_claims_are_vacuous_by_construction():
    # x^n*y always lies in yR+J, so the hypotheses can never fire
    for name in ("Z6", "Z12", "Z24", "Z2xZ2"):
        assert run_claim(inst("C-DESC", name)).status == VACUOUS
        assert run_claim(inst("C-IDEM", name)).status == VACUOUS


def test_conilpotency_claims():
    assert run_claim(inst("C-CONIL", "Z12")).status == VERIFIED
    assert run_claim(inst("C-VMEM", "Z12")).status == VERIFIED
    assert run_claim(inst("C-ADJ17", "Z24")).status == VERIFIED
    assert run_claim(inst("C-CONIL", "Z8")).status == VACUOUS  # local ring


def test_bipartite_claim():
    assert run_claim(inst("C-BIP", "Z6", i=1)).status == VERIFIED
    assert run_claim(inst("C-BIP", "Z12", i=1)).status == VERIFIED
    assert run_claim(inst("C-BIP", "Z12", i=3)).status == VERIFIED
    assert run_claim(inst("C-BIP", "Z8", i=1)).status == VACUOUS  # one maximal ideal
    assert run_claim(inst("C-BIP", "Z4[x]/(x^2)", i=1)).status == UNSUPPORTED


def test_check_bipartite_iff_direct():
    z6 = build_ring("Z6")
    m1, m2 = maximal_ideals(z6)
    status, witness, detail = check_bipartite_iff(z6, zero_ideal(z6), m1, m2, 1)
    assert status == VERIFIED
    z12 = build_ring("Z12")
    m1, m2 = maximal_ideals(z12)
    status, _, _ = check_bipartite_iff(z12, zero_ideal(z12), m1, m2, 2)
    assert status == VERIFIED
    # an ideal outside the radical fails the op's precondition
    status, _, _ = check_bipartite_iff(z12, span(z12, [2]), m1, m2, 1)
    assert status == VACUOUS


def test_bipartite_parts_exclude_radical():
    z12 = build_ring("Z12")
    jac = jacobson_radical(z12)
    assert set(jac.members()) == {0, 6}
    report = run_claim(inst("C-BIP", "Z12", i=1))
    assert report.status == VERIFIED


def test_grid_ideals_are_deterministic_and_well_formed():
    assert grid_ideals("Z12") == ["0", "6", "4"]
    assert grid_ideals("Z8") == ["0", "2", "4"]
    assert grid_ideals("Z6") == ["0"]
    assert grid_ideals("Z2xZ2") == ["0"]
    assert grid_ideals("Z4[x]/(x^2)") == ["0", "2,x", "2"]


def test_default_grid_shape():
    grid = default_grid()
    assert len(grid) > 1000
    claims_seen = {i.claim for i in grid}
    assert claims_seen == set(CATALOG)
    # pinned expectations
    for i in grid:
        if i.claim == "C-TRI":
            assert i.expected == REFUTED
        elif i.claim == "C-SEMI" and i.ring == "Z2xZ2" and i.ideal == "0":
            assert i.expected == REFUTED
        else:
            assert i.expected == VERIFIED


def test_run_suite_empty():
    result = run_suite([])
    assert result.reports == [] and result.summary == {} and result.ok


def test_run_suite_small_deterministic_across_workers():
    grid = [
        inst("C-EMPTY", "Z27", i=4, expected=VERIFIED),
        inst("C-GROW", "Z12", p=2, q=3, n=2, expected=VERIFIED),
        inst("C-TRI", "Z12", p=2, q=3, n=2, expected=REFUTED),
        inst("C-BIP", "Z6", i=1, expected=VERIFIED),
        inst("C-SEMI", "Z2xZ2", i=1, expected=REFUTED),
    ]
    r1 = run_suite(grid)
    r4 = run_suite(grid, workers=4)
    assert suite_to_json(r1) == suite_to_json(r4)
    assert r1.ok
    assert r1.summary["C-TRI"] == {"REFUTED": 1}


def test_run_suite_flags_mismatches():
    grid = [inst("C-TRI", "Z12", p=2, q=3, n=2, expected=VERIFIED)]
    result = run_suite(grid)
    assert not result.ok
    assert len(result.mismatches) == 1


def test_refuted_witnesses_replay(tmp_path):
    grid = [
        inst("C-TRI", "Z12", p=2, q=3, n=2),
        inst("C-TRI", "Z24", p=2, q=3, n=3),
        inst("C-SEMI", "Z2xZ2", i=2),
    ]
    for report in run_suite(grid).reports:
        assert report.status == REFUTED
        assert report.witness is not None
        assert replay_witness(report)


def test_grid_file_round_trip(tmp_path):
    grid = [
        inst("C-EMPTY", "Z27", i=4, expected=VERIFIED),
        inst("C-BIP", "Z6", i=1, expected=VERIFIED),
    ]
    path = tmp_path / "grid.json"
    path.write_text(dump_grid(grid), encoding="utf-8")
    loaded = load_grid(str(path))
    assert loaded == grid


def test_suite_json_has_no_timings():
    result = run_suite([inst("C-EMPTY", "Z27", i=4)])
    payload = json.loads(suite_to_json(result))
    assert "elapsed" not in json.dumps(payload)
    assert payload["reports"][0]["status"] == VERIFIED


def test_unknown_claim_rejected():
    with pytest.raises(ValueError):
        run_claim(inst("C-NOPE", "Z12"))
