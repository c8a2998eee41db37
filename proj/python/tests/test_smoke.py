import math

import pytest

import modres


def test_resolve_example():
    r = modres.run("resolve", p=3, n=4, k=1)
    assert list(r) == ["job", "results", "checks", "timings_ms"]
    assert r["results"]["terms"] == [5, 1]
    assert r["results"]["dims"] == [1, 2]
    assert r["results"]["exact"] is True
    assert r["results"]["dimD"] == 1
    assert all(c["status"] == "pass" for c in r["checks"])


def test_dims_example():
    assert list(modres.lemma15_dims(3)) == [14, 14, 6, 1]
    assert [modres.verlinde_dim(5, k, 3) for k in range(1, 5)] == [14, 14, 6, 1]
    r = modres.run("dims", p=5, g=2)
    assert r["results"]["dims"] == [5, 4, 1, 0]


def test_catalan_matches_binomials():
    for n in range(12):
        for j in range(n // 2 + 1):
            assert modres.catalan(n, j) == math.comb(n, j) - (math.comb(n, j - 1) if j else 0)


def test_d_dim_below_p_is_catalan():
    # n < p: the Specht module is already simple
    for n in range(1, 7):
        for c in range(1, min(n + 2, 7)):
            if (n + 1 - c) % 2 == 0:
                assert modres.d_dim(7, n, c) == modres.catalan(n, (n + 1 - c) // 2)


def test_batch_order_and_errors():
    jobs = [{"command": "resolve", "p": p, "n": 4, "k": 1} for p in (3, 5, 7)]
    agg = modres.run_batch(jobs, workers=2)
    assert [j["job"]["params"]["p"] for j in agg["jobs"]] == [3, 5, 7]
    assert agg["summary"]["failed"] == 0
    assert modres.run_batch([])["jobs"] == []
    with pytest.raises(ValueError):
        modres.run("resolve", p=4, n=4, k=1)
    with pytest.raises(modres.UsageError):
        modres.run_batch("[{")


def test_commands_listed():
    assert set(modres.command_names()) == {
        "resolve", "character", "factors", "dims", "fusion", "alexander", "jm", "selftest"}
