import json
from fractions import Fraction

import pytest

import semihomology as sh


def test_counterexample_dims():
    report = sh.counterexample()
    assert report["format"] == "semihomology-report/1"
    assert report["ok"]
    verdicts = {c["verdict"] for c in report["checks"]}
    assert "expected_failure" in verdicts

    m = sh.representable("aug_ssimp", 0, 4)
    assert sh.homology(m)[-1] == 0
    induced, window = sh.induce("v", m)
    assert induced.kind == "scube"
    assert [induced.dims[n] for n in (0, 1)] == [2, 1]
    assert sh.homology(sh.restrict_v(induced))[-1] == 1


def test_cube_representable_homology():
    x = sh.representable("scube", 1, 3)
    assert x.dims == {0: 2, 1: 1, 2: 0, 3: 0}
    h = sh.homology(x)
    assert h[0] == 1 and h[1] == 0


def test_actions_are_fractions():
    x = sh.representable("aug_ssimp", 0, 2)
    assert sh.action(x, "delta 0 0") == [[Fraction(1)]]


def test_json_round_trip():
    x = sh.direct_sum(sh.representable("ssimp", 1, 3), sh.representable("ssimp", 2, 3))
    text = x.to_json()
    y = sh.parse_module(text)
    assert y == x
    assert y.to_json() == text


def test_invalid_module_is_rejected():
    doc = json.loads(sh.representable("ssimp", 2, 2).to_json())
    doc["actions"]["delta 0 1"][0][0] = "5"
    with pytest.raises(sh.ModuleError):
        sh.parse_module(json.dumps(doc))
    with pytest.raises(ValueError):
        sh.parse_module("{")


def test_tor_matches_homology():
    x = sh.representable("ssimp", 2, 4)
    t = sh.tor(x, "k_constant")
    h = sh.homology(x)
    for n in h:
        if n in t:
            assert t[n] == h[n]
    with pytest.raises(sh.TransportError):
        sh.tor(sh.zero("chain0", 3), "k_constant")


def test_small_battery_is_deterministic():
    a = sh.battery(seed=3, truncation=3)
    b = sh.battery(seed=3, truncation=3, threads=2)
    assert a == b
    assert a["summary"]["counterexample"]["expected_failure"] == 1
