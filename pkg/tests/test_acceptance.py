"""Acceptance criteria 1-9, at the stated instance counts and time limits.

Each criterion records one PASS/FAIL line that is printed in the pytest
terminal summary (and echoed to stdout when run with ``-s``).
"""

import time

import pytest

from aboveguarantee.verify import run_suite

from conftest import ACCEPTANCE_LINES

SEED = 2024


def record(number, title, ok, detail):
    line = f"criterion {number} [{'PASS' if ok else 'FAIL'}] {title}: {detail}"
    ACCEPTANCE_LINES[number] = line
    print(line)
    return ok


def timed(name, count, seed=SEED):
    start = time.perf_counter()
    report = run_suite(name, seed=seed, count=count)
    return report, time.perf_counter() - start


def failures(report, *names):
    return [c for name in names for c in report.failures_named(name)]


def instance_count(report, name):
    return sum(1 for c in report.checks if c.check_id.endswith("/" + name))


@pytest.fixture(scope="session")
def tier2_validated():
    report, elapsed = timed("oracles", 1000)
    return report, elapsed


@pytest.fixture(scope="session")
def solver_corpus():
    return timed("solvers", 500)


def test_criterion_9_tier2_oracles(tier2_validated):
    report, elapsed = tier2_validated
    bad = failures(report, "vc_tier2", "cvd_tier2")
    skipped = report.by_status("skip")
    ok = not bad and not skipped and instance_count(report, "vc_tier2") == 1000
    record(9, "tier-2 oracles vs enumeration (1000 graphs, n<=12)", ok,
           f"{len(bad)} disagreements, {len(skipped)} skipped, {elapsed:.1f}s")
    assert ok, [c.to_json() for c in bad + skipped][:5]


def test_criterion_1_solver_oracle_equivalence(solver_corpus):
    report, elapsed = solver_corpus
    bad = failures(report, "vc_decide", "fvs_decide")
    skipped = report.by_status("skip")
    ok = not bad and not skipped and instance_count(report, "vc_decide") == 500 and elapsed < 120
    record(1, "vc/fvs solvers vs enumeration (500 graphs, all k)", ok,
           f"{len(bad)} discrepancies, {elapsed:.1f}s (limit 120s)")
    assert ok, [c.to_json() for c in bad + skipped][:5]


def test_criterion_2_above_guarantee_equivalence(solver_corpus):
    report, _ = solver_corpus
    bad = failures(
        report,
        "vc_above_h_index", "fvs_above_degeneracy", "vc_above_treewidth_planar",
        "h_budgets", "d_budgets", "d_branch_count",
    )
    planar = instance_count(report, "vc_above_treewidth_planar")
    ok = not bad and planar > 0
    record(2, "above-guarantee branchings match the plain solvers", ok,
           f"{len(bad)} mismatches or budget violations, {planar} planar samples")
    assert ok, [c.to_json() for c in bad][:5]


def test_criterion_3_planar_bound():
    report, elapsed = timed("planar", 200)
    bad = report.by_status("fail")
    grids = [c for c in report.checks if "/fixed/grid" in c.check_id]
    ok = not bad and not report.by_status("skip") and len(grids) == 8 and elapsed < 300
    record(3, "planar r <= vc, sound rejection, grid anchors g=2..5", ok,
           f"{len(bad)} violations, {elapsed:.1f}s (limit 300s)")
    assert ok, [c.to_json() for c in bad][:5]


def test_criterion_4_clique_and_triangle_reductions():
    thm5, t5 = timed("thm5", 100)
    cor6, t6 = timed("cor6", 100)
    bad = thm5.by_status("fail") + cor6.by_status("fail")
    skipped = thm5.by_status("skip") + cor6.by_status("skip")
    ok = not bad and not skipped and t5 + t6 < 180
    record(4, "clique->vc complement and vc->fvs triangles (100 each)", ok,
           f"{len(bad)} violations, {len(skipped)} skipped, {t5 + t6:.1f}s (limit 180s)")
    assert ok, [c.to_json() for c in bad + skipped][:5]


def test_criterion_5_distance_to_k3_free(tier2_validated):
    assert tier2_validated[0].ok
    report, elapsed = timed("thm7", 30)
    bad = report.by_status("fail")
    ok = not bad and not report.by_status("skip") and instance_count(report, "iff") == 30 and elapsed < 900
    record(5, "independent set -> vc above distance to K3-free (30)", ok,
           f"{len(bad)} violations, {elapsed:.1f}s (limit 900s)")
    assert ok, [c.to_json() for c in bad][:5]


def test_criterion_6_construction(tier2_validated):
    assert tier2_validated[0].ok
    report, elapsed = timed("construction1", 50)
    part_a = failures(report, "assignment_cover", "vc_exact")
    part_a_ok = not part_a and instance_count(report, "assignment_cover") == 50
    by_id = {c.check_id: c for c in report.checks}
    unsat = by_id["construction1/fixed/unsat_polarity"]
    fallback = by_id["construction1/fixed/cvd_eq_vc_single_clause"]
    others = [c for c in report.by_status("fail") if c not in part_a]
    ok = part_a_ok and (unsat.passed or fallback.passed) and not others
    record(6, "3-SAT gadget graphs: covers, vc = 14m+3n, unsat case", ok,
           f"(a) {len(part_a)} failures; (b) {unsat.status} [{unsat.detail}]; "
           f"(b') {fallback.status} [{fallback.detail}]; {elapsed:.1f}s")
    assert ok, [c.to_json() for c in part_a + others][:5]


def test_criterion_7_fvs_below_vc():
    report, elapsed = timed("thm9", 100)
    bad = report.by_status("fail")
    ok = not bad and not report.by_status("skip") and instance_count(report, "iff") == 100 and elapsed < 600
    record(7, "fvs -> fvs below vc (100, n<=7)", ok, f"{len(bad)} violations, {elapsed:.1f}s (limit 600s)")
    assert ok, [c.to_json() for c in bad][:5]


def test_criterion_8_parameter_hierarchy():
    report, elapsed = timed("hierarchy", 500)
    bad = report.by_status("fail")
    ok = not bad and not report.by_status("skip") and instance_count(report, "d_le_h") == 500 and elapsed < 180
    record(8, "parameter hierarchy (500 graphs, n<=10)", ok, f"{len(bad)} violations, {elapsed:.1f}s (limit 180s)")
    assert ok, [c.to_json() for c in bad][:5]
