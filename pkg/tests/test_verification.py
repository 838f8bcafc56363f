import json

import pytest

import inccat.verification as verification
from inccat.category import Morphism, compose, identity
from inccat.cli import main
from inccat.families import fin_up_to, sets_up_to
from inccat.verification import (
    CheckResult,
    check_associativity,
    check_unit_laws,
    run_verification,
)


@pytest.fixture(scope="module")
def fin2():
    return fin_up_to(3)


class TestCheckResult:
    def test_ok_line(self):
        assert CheckResult("x", True, "5 checked").line() == "ok   x (5 checked)"

    def test_fail_line(self):
        line = CheckResult("x", False, "1 failure(s)", {"m": 1}).line()
        assert line.startswith("FAIL x")


class TestSuitesPass:
    def test_run_verification_sets(self):
        results = run_verification(sets_up_to(4), 2, 2, 3, 3, 3, seed=1)
        assert results and all(r.passed for r in results)


class TestFailureDetection:
    """The checkers must notice a broken composition, not pass vacuously."""

    def test_unit_check_catches_broken_compose(self, fin2, monkeypatch):
        def sabotaged(second, first):
            from inccat.category import zero_morphism

            result = compose(second, first)
            if first.source.size == 1 and result.i2 != 0:
                return zero_morphism(result.source, result.target, result.mode)
            return result

        monkeypatch.setattr(verification, "compose", sabotaged)
        result = check_unit_laws(fin2, 1)
        assert not result.passed
        assert result.counterexample is not None

    def test_associativity_catches_biased_compose(self, fin2, monkeypatch):
        calls = {"n": 0}

        def flaky(second, first):
            calls["n"] += 1
            result = compose(second, first)
            if calls["n"] % 97 == 0 and not result.is_zero:
                from inccat.category import zero_morphism

                return zero_morphism(result.source, result.target, result.mode)
            return result

        monkeypatch.setattr(verification, "compose", flaky)
        result = check_associativity(fin2, 2)
        assert not result.passed


class TestVerifyCliFailurePath:
    def test_exit_one_with_counterexample(self, monkeypatch, capsys):
        def fake_run(*args, **kwargs):
            return [CheckResult("fake.axiom", False, "1 failure(s)", {"why": "broken"})]

        monkeypatch.setattr("inccat.cli.run_verification", fake_run)
        code = main(["verify", "--family", "sets", "--max-size", "2", "--quick"])
        out = capsys.readouterr().out
        assert code == 1
        assert "FAIL fake.axiom" in out
        assert json.loads(out.splitlines()[-1]) == {"why": "broken"}
