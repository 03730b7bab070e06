import json
import threading

import pandas as pd
import pytest

from core.config import settings
from core.errors import DomainError, UnknownNameError
from models.schemas import Provenance, VerificationReport
from services import verification


def test_scores():
    assert verification.set_score({1, 2}, [2, 1]) == 2
    assert verification.set_score({1, 2}, {2, 3}) == -2
    assert verification.bijection_score(["a", "b"], {"a", "b"}) == 2
    assert verification.bijection_score(["a", "a"], {"a", "b"}) == -2
    assert verification.injection_score([1, 3], lambda x: x % 2 == 1) == 2
    assert verification.injection_score([1, 2], lambda x: x % 2 == 1) == -1
    assert verification.histogram_score({(0, 1): 2}, {(0, 1): 2}, 2) == 2
    assert verification.histogram_score({(0, 1): 2}, {(1, 1): 2}, 2) == -4


def test_report_validation():
    report = VerificationReport(claim="x", n_values=[1, 2], expected=[1, 2], observed=[1, 3],
                                provenance=[Provenance.DERIVED, Provenance.DERIVED])
    assert not report.passed
    assert [row["pass"] for row in report.rows()] == [True, False]
    with pytest.raises(ValueError):
        VerificationReport(claim="x", n_values=[1], expected=[], observed=[1], provenance=[])


def test_table1_passes():
    reports = verification.verify_table1(7)
    assert len(reports) == 12
    assert all(report.passed for report in reports), [r.claim for r in reports if not r.passed]
    drs123 = next(r for r in reports if r.claim == "table1-drs-123")
    assert drs123.observed == [1, 2, 4, 5, 3, 2, 2]


CLAIM_SIZES = dict(
    [
        ("rs-total", 7),
        ("rs-filter", 7),
        ("drs-total", 8),
        ("drs-pruned-eq-naive", 7),
        ("phi-bijection", 6),
        ("phi-descents-leaves", 6),
        ("label-rs213", 7),
        ("chi-bijection", 8),
        ("rs213-motzkin", 7),
        ("rs213-dd-uncovered-4132", 7),
        ("rs213-inverse-simsun", 7),
        ("drs213-dd-free", 7),
        ("drs132-213-q", 7),
        ("rs231-213-w", 7),
        ("rs231-to-rs213", 7),
        ("rs231-to-motzkin", 7),
        ("psi-roundtrip", 6),
        ("psi-inverse-roundtrip", 6),
        ("psi-fixed-points", 7),
        ("gamma-involution", 6),
        ("gamma-drs132-drs213", 7),
        ("drs132-drs213-statistics", 7),
        ("gamma-42513", 7),
        ("rho-bijection", 8),
        ("varrho-inverse-of-rho", 8),
        ("drs-descents-binomial", 7),
        ("rho-descents-binomial", 8),
        ("drs312-231-exchange", 7),
        ("rho-varrho-exchange", 8),
        ("drs312-eq-rs312", 7),
        ("drs321-eq-rs321", 7),
        ("drs132-eq-rs132", 7),
        ("drs-inverse-312-231", 7),
        ("drs312-231-fibonacci", 7),
        ("drs132-213-fibonacci", 7),
        ("rs231-213-fibonacci", 7),
        ("hierarchy", 7),
        ("rs123-growth", 7),
        ("drs123-growth", 8),
        ("zeta-image", 7),
        ("alternating-euler", 7),
        ("r-paths", 10),
        ("q-from-r", 8),
        ("dd-free-secondary", 10),
        ("w-fibonacci", 10),
        ("sequence-formulations", 30),
    ]
)


@pytest.mark.parametrize("claim_id, n_max", CLAIM_SIZES.items())
def test_claim_holds(claim_id, n_max):
    report = verification.verify_identity(claim_id, n_max)
    assert report.passed, report.rows()
    assert report.n_values[0] == verification.CLAIMS[claim_id].n_min


def test_every_claim_is_exercised():
    assert set(CLAIM_SIZES) | {"inversions-area"} == set(verification.CLAIMS)


def test_exploratory_claim_never_fails_a_suite():
    report = verification.verify_identity("inversions-area", 6)
    assert report.exploratory
    failing = report.model_copy(update={"passed": False})
    assert verification.suite_passed([failing])


def test_limits_and_unknown_names():
    with pytest.raises(UnknownNameError):
        verification.verify_identity("no-such-claim", 3)
    with pytest.raises(DomainError):
        verification.verify_identity("rs-total", settings.SIMSUN_NMAX_LIMIT + 1)
    with pytest.raises(DomainError):
        verification.verify_table1(-1)
    with pytest.raises(UnknownNameError):
        verification.run_suite("table2", 3)


def test_run_suite_workers_stay_per_call(monkeypatch):
    before = settings.SIMSUN_WORKERS
    seen = []
    barrier = threading.Barrier(2)

    def counting(n, workers=1):
        if n == 1:
            barrier.wait(timeout=10)
        seen.append((threading.current_thread().name, workers))
        return verification.PUBLISHED_DRS[n - 1]

    monkeypatch.setattr(verification, "count_double_simsun", counting)
    results = {}

    def run(workers):
        results[workers] = verification.run_suite("drs-total", 3, workers)

    threads = [threading.Thread(target=run, args=(w,), name=f"w{w}") for w in (8, 4)]
    for thread in threads:
        thread.start()
    for thread in threads:
        thread.join()

    assert all(reports[0].passed for reports in results.values())
    assert sorted(set(seen)) == [("w4", 4), ("w8", 8)]
    assert settings.SIMSUN_WORKERS == before


def test_gamma_involution_checks_all_of_s_n():
    report = verification.verify_identity("gamma-involution", 6)
    assert report.expected == [1, 1, 2, 6, 24, 120, 720]
    assert report.observed == report.expected


def test_threaded_claims_pass_with_workers():
    assert verification.verify_identity("drs-pruned-eq-naive", 6, workers=2).passed
    assert verification.run_suite("drs-total", 8, workers=3)[0].passed


def test_write_reports(tmp_path):
    reports = verification.run_suite("table1", 5)
    json_path, tsv_path = verification.write_reports(reports, str(tmp_path), stem="table1")
    assert json_path.endswith("table1.json")
    loaded = json.loads(open(json_path, encoding="utf-8").read())
    assert [item["claim"] for item in loaded] == [report.claim for report in reports]
    frame = pd.read_csv(tsv_path, sep="\t")
    assert len(frame) == 12 * 5
    assert set(frame["provenance"]) <= {p.value for p in Provenance}

    json_path, tsv_path = verification.write_reports(reports, str(tmp_path / "out" / "run.txt"))
    assert json_path == str(tmp_path / "out" / "run.json")
    assert tsv_path == str(tmp_path / "out" / "run.tsv")


@pytest.mark.slow
def test_full_sweep():
    reports = verification.verify_all(9)
    assert verification.suite_passed(reports), [r.claim for r in reports if not r.passed]
