import pytest

from natrees import verify


def test_run_all_size_six():
    results = verify.run_all(6)
    assert {r.suite for r in results} == set(verify.SUITES)
    failed = [r.as_dict() for r in results if not r.ok]
    assert not failed


def test_deterministic():
    assert verify.run_suite("nat", 4) == verify.run_suite("nat", 4)


def test_unknown_suite():
    with pytest.raises(ValueError):
        verify.run_suite("nope", 3)


def test_exceptions_become_failures(monkeypatch):
    def boom(_):
        raise RuntimeError("bad")

    monkeypatch.setitem(verify.SUITES, "nat", [("explodes", boom)])
    [res] = verify.run_suite("nat", 3)
    assert not res.ok and "RuntimeError" in res.detail
    assert res.as_dict() == {"suite": "nat", "property": "explodes", "pass": False, "detail": "RuntimeError: bad"}
