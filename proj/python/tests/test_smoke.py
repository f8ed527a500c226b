import json

import pytest

import dominotab as dt

# the switching example, entries from 1
PIONEEX = """domino 4,4,3,3,2/2
          +----+----+
          | 2  | 3  |
+----+----+    |    |
| 1  | 1  |    |    |
|    |    +----+----+
|    |    | 3  |
+----+----+    |
| 2       |    |
+---------+----+
| 4       |
+---------+
"""


def test_shapes():
    s = dt.SkewShape("4,4,3,3,2/2")
    assert s.outer.parts == [4, 4, 3, 3, 2]
    assert s.inner.parts == [2]
    assert str(s) == "4,4,3,3,2/2"
    assert dt.dublpart([2, 1]).parts == [4, 4, 2, 2]
    assert dt.core(1).parts == [1]


def test_pi_and_pi1():
    d = dt.parse(PIONEEX, offset=1)
    assert dt.pi(d).rows == [[0, 0, 1, 2], [1, 2], [3]]
    u, v = dt.pi1(d)
    assert u.rows == [[1, 2], [0, 0, 2], [1], [3]]
    assert dt.is_self_switching(u, v)
    assert dt.pi1_inv(u, v) == d


def test_round_trips():
    d = dt.parse(PIONEEX, offset=1)
    assert d.to_ascii(offset=1) == PIONEEX
    assert dt.parse(d.to_json()) == d
    doc = json.loads(d.to_json())
    assert doc["type"] == "domino" and len(doc["dominoes"]) == len(d)


def test_coplactic():
    d = dt.parse(PIONEEX, offset=1)
    f = dt.f(0, d)
    assert f is not None and dt.e(0, f) == d
    y, word = dt.raise_to_yamanouchi(d)
    assert y.is_yamanouchi()
    y2, p = dt.cl_split(d)
    assert y2 == y and dt.cl_merge(y2, p) == d


def test_enumerate_counts():
    # c^(2,2)_{(2),(2)} = 1
    assert len(dt.enumerate_ssdt("4,4", weight=[2, 2], yamanouchi=True)) == 1
    # tilings of a 2x2 box, entries < 1
    assert len(dt.enumerate_ssdt("2,2", entries=1)) == 1
    assert len(dt.enumerate_sst([2, 1], entries=2)) == 2


def test_chains_and_reflection():
    lam = dt.enumerate_ssdt("6,5,3,3,3", weight=[4, 3, 2, 1], yamanouchi=True)
    assert len(lam) == 1
    m = dt.yamyam(lam[0], "4,3,2,1")
    assert dt.yamyam_inv(m, "6,5,3,3,3") == lam[0]
    cs = dt.chains(1, m)
    assert all(c["kind"] == "closed" for c in cs)
    assert dt.move_chains(m, 1, list(range(len(cs)))) == dt.s_reflect(1, m)


def test_numbers():
    assert dt.lr_coefficient([1], [1, 1], [2, 1]) == 1
    assert dt.lr_coefficient([1], [1, 1], [3]) == 0
    assert dt.phi2_bracket("2", "1") == 1
    assert dt.phi2_bracket("1,1", "1") == -1


def test_verify():
    ids = {c["id"] for c in dt.checks()}
    assert "pithm" in ids and len(ids) == 14
    r = dt.verify("pithm", size=5)
    assert r["passed"] and r["cases"] > 0
    with pytest.raises(ValueError):
        dt.verify("nope")


def test_errors():
    with pytest.raises(dt.ParseError):
        dt.parse("nonsense")
    with pytest.raises(ValueError):
        dt.DominoTableau("2", [(0, 0, "h", 0), (0, 1, "h", 0)])
