import inspect
import json

import pytest

from nilduality import characters, collapses, duality, verify
from nilduality.errors import BoundExceeded, UnknownCheck
from nilduality.partition import Partition as P
from nilduality.verify import CHECK_IDS, run_all, run_check


def test_catalog_is_complete():
    assert CHECK_IDS == tuple(f"C{i}" for i in range(1, 15))
    for cid in CHECK_IDS:
        assert verify.describe(cid)


def test_c14_counts():
    r = run_check("C14", 10)
    assert (r.instances, r.failures, r.witnesses) == (20, 0, [])


def test_c2_small():
    r = run_check("C2", 2)
    # special Nil(o_2n) for 2n = 0, 2, 4 has 1 + 1 + 3 elements
    assert r.instances == 5 and r.failures == 0


def test_report_invariants():
    for r in run_all(3, 1):
        assert r.instances > 0
        assert (r.failures == 0) == (r.witnesses == [])
        d = r.to_dict()
        assert set(d) == {"check", "params", "instances", "failures", "witnesses", "elapsed_ms"}
        assert d["params"] == {"max_n": 3, "a_offset": 1}
        json.dumps(d)


def test_deterministic_and_jobs_independent():
    serial = [r.to_dict(include_elapsed=False) for r in run_all(4, 2, jobs=1)]
    again = [r.to_dict(include_elapsed=False) for r in run_all(4, 2, jobs=1)]
    parallel = [r.to_dict(include_elapsed=False) for r in run_all(4, 2, jobs=3)]
    assert json.dumps(serial) == json.dumps(again) == json.dumps(parallel)


def test_errors():
    with pytest.raises(UnknownCheck):
        run_check("C99", 2)
    with pytest.raises(BoundExceeded):
        run_check("C1", 11)
    with pytest.raises(BoundExceeded):
        run_check("C11", 10)  # oracle bound 18
    with pytest.raises(BoundExceeded):
        run_check("C4", 10, 3)  # needs partitions of 46


def test_lowercase_ids_accepted():
    assert run_check("c14", 2).id == "C14"


def test_failures_produce_size_sorted_capped_witnesses(monkeypatch):
    real = collapses.collapse

    def broken(p, f):
        out = real(p, f)
        return P([1] * out.size) if out.size >= 6 else out

    monkeypatch.setattr(collapses, "collapse", broken)
    r = run_check("C11", 5, witness_limit=4)
    assert r.failures > 4
    assert len(r.witnesses) == 4
    sizes = [sum(map(int, w["input"]["partition"].split(","))) for w in r.witnesses]
    assert sizes == sorted(sizes) and sizes[0] == 6


def test_checks_touch_every_operation(monkeypatch):
    touched = set()
    for module in (collapses, duality, characters):
        for name in module.__all__:
            fn = getattr(module, name)
            if not inspect.isfunction(fn):
                continue

            def wrapper(*args, __fn=fn, __key=f"{module.__name__}.{name}", **kwargs):
                touched.add(__key)
                return __fn(*args, **kwargs)

            monkeypatch.setattr(module, name, wrapper)
    for r in run_all(2, 1):
        assert r.passed
    expected = {
        f"{m.__name__}.{n}"
        for m in (collapses, duality, characters)
        for n in m.__all__
        if inspect.isfunction(getattr(m, n))
    }
    assert expected - touched == set()
