"""Smoke tests for the python bindings."""

import _cyclesieve as cs


def test_word_statistics():
    w = [1, 5, 5, 3, 1, 5, 5, 3]
    assert cs.descent_set(w) == [3, 4, 7]
    assert cs.maj(w) == 14
    assert cs.maj_n(w) == 6
    assert cs.flex([2, 2, 1, 2, 2, 1]) == 6
    assert cs.content([3, 1, 3]) == [1, 0, 2]


def test_rsk():
    p, q = cs.rsk([2, 3, 1, 4])
    assert p == [[1, 3, 4], [2]]
    assert q == [[1, 2, 4], [3]]
    _, q2 = cs.rsk([1, 4, 2, 3])
    assert q2 == q
    assert cs.rsk_shape([2, 3, 1, 4]) == (3, 1)


def test_series():
    series = cs.kw(4)
    assert len(series) == 4
    assert series[0] == {(3, 1): 1, (2, 1, 1): 1}
    assert series[3] == {(4,): 1, (2, 2): 1, (2, 1, 1): 1}

    branch = cs.stembridge([2, 1])
    assert branch[0] == {(2, 1): 1, (1, 1, 1): 1}
    assert branch[1] == {(3,): 1, (2, 1): 1}


def test_wreath_and_lie():
    assert cs.schocker(2, 2, 1, "trivial") == {(2, 2): 1, (1, 1, 1, 1): 1}
    assert cs.schocker(2, 2, 1, "sign") == {(2, 1, 1): 1}
    assert cs.wreath(2, [[1], []]) == {(1, 1): 1}
    assert cs.wreath_dim([[1], [1]]) == 2
    assert cs.lie([2, 1]) == {(2, 1): 1, (1, 1, 1): 1}


def test_tuple_statistics():
    word = [3, 2, 3, 1, 3, 4, 2, 1, 2, 3, 5, 2]
    assert cs.flex_tuple(word, 3, 4) == [(1,), (2, 1), ()]
    assert cs.maj_tuple(word, 3, 4) == [(1, 1), (1,), (1,)]


def test_csp():
    report = cs.csp_content_class([2, 2], "maj")
    assert report["holds"]
    assert report["order"] == 4
    assert report["orbit_profile"] == {2: 1, 4: 1}
    assert cs.csp_content_class([2, 1, 1], "flex")["holds"]


def test_verify_small():
    results = cs.verify(4)
    assert len(results) == 11
    for name, ok, detail in results:
        assert ok, f"{name}: {detail}"
