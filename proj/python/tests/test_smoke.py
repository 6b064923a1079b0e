import json
from fractions import Fraction

import pytest

import tmwords


def test_words():
    assert tmwords.thue_morse(16) == "0110100110010110"
    assert tmwords.generalized_thue_morse(3, 8) == "01121220"
    assert tmwords.generalized_thue_morse(5, 8) == "01121223"
    assert tmwords.paperfolding("000") == "0010011"


def test_thue_morse_matches_digit_sums():
    t = tmwords.thue_morse(4096)
    assert all(int(t[n]) == bin(n).count("1") % 2 for n in range(4096))


def test_avoidance():
    assert tmwords.find_overlap("01010") == (0, 2)
    assert tmwords.find_overlap("0110") is None
    assert tmwords.is_overlap_free(tmwords.thue_morse(1000))
    assert not tmwords.is_circular_overlap_free("00110")
    assert tmwords.find_squares("0110") == [(1, 1)]
    with pytest.raises(ValueError):
        tmwords.find_overlap("01x")


def test_enumeration():
    a = tmwords.count_overlap_free(16)
    assert a[:5] == [1, 2, 4, 6, 10]
    c = tmwords.circular_counts(48)
    assert [n for n in range(1, 49) if c[n]] == [1, 2, 3, 4, 6, 8, 12, 16, 24, 32, 48]


def test_complexity():
    for n in range(1, 65):
        assert tmwords.factor_count(2, n) == tmwords.pt_formula(n)
    assert [tmwords.pf_formula(n) for n in range(1, 8)] == [2, 4, 8, 12, 20, 28, 40]
    assert tmwords.paperfolding_factor_count(7) == 40
    assert tmwords.ptk_formula(3, 3) == 15


def test_series():
    fib = [0, 1]
    while len(fib) < 30:
        fib.append(fib[-1] + fib[-2])
    assert tmwords.guess_linear_recurrence(fib, 5) == [Fraction(1), Fraction(1)]
    assert tmwords.guess_linear_recurrence(tmwords.count_overlap_free(119), 10) is None
    dpt = tmwords.builtin_sequence("dpt", 1024)
    assert tmwords.detect_eventual_period(dpt, 128, 64) is None
    assert tmwords.detect_eventual_period([1, 2] + [3, 4] * 6, 4, 2) == (2, 2)


def test_kernel():
    k = tmwords.kernel("tm", 2, 4096)
    assert k["complete"] and len(k["classes"]) == 2
    assert k["transitions"] == [[0, 1], [1, 0]]


def test_interchange():
    r = tmwords.interchange_report(3, "1")
    assert r["evidence"]["contradiction"]["holds"] is True
    assert r["evidence"]["contradiction"]["lower"] == "1073741824/4225"
    r1 = tmwords.interchange_report(1)
    assert r1["evidence"]["R_size"] == 4
    assert r1["evidence"]["violations"] == []


def test_cli_in_process():
    code, out, _ = tmwords.run(["generate", "tm", "--length", "8"])
    assert (code, out) == (0, "01101001\n")
    code, out, _ = tmwords.run(["avoid", "overlap", "000"])
    assert code == 1
    assert json.loads(out)["status"] == "fail"
    code, _, _ = tmwords.run(["nonsense"])
    assert code == 64
