"""Corpus integrity and the entry runner."""

import dataclasses

import pytest

from lebetti.corpus import CorpusEntry, load_entries, run_all, run_entry


@pytest.fixture(scope="module")
def entries():
    return load_entries()


@pytest.fixture(scope="module")
def report():
    return run_all(parallel=False)


class TestCorpusShape:
    def test_at_least_twelve_entries(self, entries):
        assert len(entries) >= 12

    def test_population(self, entries):
        brieskorn = [e for e in entries if e.name.startswith("brieskorn")]
        assert len(brieskorn) >= 6
        one_dim = [e for e in entries if e.expected["sigma_dim"] == 1]
        assert len(one_dim) >= 3
        two_dim = [e for e in entries if e.expected["sigma_dim"] == 2]
        assert len(two_dim) >= 2
        isolated = [e for e in entries if e.expected["sigma_dim"] == 0]
        assert len(isolated) >= 7

    def test_every_expected_value_has_provenance(self, entries):
        for e in entries:
            for key, value in e.expected.items():
                if value is None:
                    continue
                assert key in e.provenance, f"{e.name}: no provenance for {key}"
                assert e.provenance[key] in ("literature", "derived", "trivial")

    def test_derived_values_document_their_oracle(self, entries):
        for e in entries:
            if "derived" in e.provenance.values():
                assert len(e.notes) > 40, f"{e.name}: derived values need an oracle note"

    def test_one_dim_entries_carry_component_data(self, entries):
        for e in entries:
            if e.expected["sigma_dim"] == 1:
                assert e.one_dim is not None and e.one_dim["components"]


class TestRunner:
    def test_all_entries_pass(self, report):
        failing = [r.name for r in report.results if not r.passed]
        assert report.failures == 0, failing
        assert report.total >= 12

    def test_results_sorted_by_name(self, report):
        names = [r.name for r in report.results]
        assert names == sorted(names)

    def test_parallel_matches_sequential(self):
        seq = run_all("brieskorn-2", parallel=False)
        par = run_all("brieskorn-2", parallel=True)
        assert [r.to_json() for r in seq.results] == [r.to_json() for r in par.results]

    def test_filter(self):
        report = run_all("brieskorn")
        assert report.total == 6
        assert run_all("definitely-no-such-entry").total == 0

    def test_injected_failure_is_caught(self, entries):
        flagship = next(e for e in entries if e.name == "massey-suspension")
        broken = dataclasses.replace(
            flagship,
            expected={**flagship.expected, "lambdas": [4, 6, 2], "cycles": None},
        )
        result = run_entry(broken)
        assert not result.passed
        failed = [c for c in result.checks if not c.ok()]
        assert any(c.name == "lambdas" for c in failed)

    def test_injected_bad_cycle_is_caught(self, entries):
        flagship = next(e for e in entries if e.name == "massey-suspension")
        cycles = {
            "gamma": {"3": [[["x"], 1]]},
            "le": {},
        }
        broken = dataclasses.replace(
            flagship, expected={**flagship.expected, "cycles": cycles}
        )
        result = run_entry(broken)
        assert not result.passed

    def test_error_entry_reported(self, entries):
        flagship = next(e for e in entries if e.name == "massey-suspension")
        broken = dataclasses.replace(flagship, f_text="0")
        result = run_entry(broken)
        assert not result.passed
        assert result.error is not None

    def test_entry_json_round_trip(self, report):
        for r in report.results:
            doc = r.to_json()
            assert doc["name"] == r.name
            assert doc["passed"] == r.passed
            assert isinstance(doc["checks"], list)
