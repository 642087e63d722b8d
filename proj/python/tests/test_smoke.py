import json

import pytest

import permclass as pc


def test_involvement_and_sums():
    assert pc.involves([2, 4, 1, 3], [2, 1])
    assert not pc.involves([1, 2, 3], [2, 1])
    assert pc.count_occurrences([1, 2], [1, 3, 2]) == 2
    assert pc.direct_sum([1], [2, 1]) == [1, 3, 2]
    assert pc.sum_decompose([2, 1, 3, 5, 4]) == [[2, 1], [1], [2, 1]]
    assert pc.flatten([10, 30, 20]) == [1, 3, 2]


def test_two_segment_counts():
    counts = pc.count_profile([[3, 2, 1], [3, 1, 4, 2], [2, 1, 4, 3]], 10)
    assert counts[1:] == [2**n - n for n in range(1, 11)]


def test_atomicity():
    r = pc.atomicity_check([[3, 2, 1], [2, 1, 4, 3]])
    assert r["verdict"] == "refuted-certified"
    assert sorted(r["witness_pair"]) == [[2, 4, 1, 3], [3, 1, 4, 2]]


def test_periodic_and_gf():
    osc = pc.increasing_oscillation()
    assert osc.prefix(7) == [2, 4, 1, 6, 3, 8, 5]
    assert pc.PeriodicPerm([2, 4, 1, 6, 3], 2, 2) == osc
    assert pc.basis_up_to(osc, 5) == [[2, 3, 4, 1], [3, 2, 1], [3, 4, 1, 2], [4, 1, 2, 3]]
    g = pc.gf(osc, 6)
    assert g["num"] == [1, -1]
    assert g["den"] == [1, -2, 0, -1]


def test_big_counts_are_python_ints():
    counts = pc.count_profile([[2, 1]], 3)
    assert counts == [1, 1, 1, 1]
    assert all(isinstance(c, int) for c in counts)


def test_encoding_round_trip():
    assert pc.encode([2, 4, 1, 3]) == [1, 1, 3, 2]
    assert pc.decode(pc.encode([3, 1, 4, 2])) == [3, 1, 4, 2]


def test_classify_twin():
    twin = pc.twin_oscillation()
    basis = pc.basis_up_to(twin, 9)
    r = pc.classify(twin, basis, 7)
    assert r["branch"] == "periodic"
    assert r["period"] == (3, 5)


def test_errors():
    with pytest.raises(ValueError):
        pc.PeriodicPerm([2], 1, 1)
    with pytest.raises(ValueError):
        pc.involves([1, 1], [1])


def test_cli_entry():
    code, out, _ = pc.cli(["enumerate", "--class", "/nonexistent.json"])
    assert code == 1
    code, out, _ = pc.cli(["examples", "twin", "--n", "2"])
    assert code == 0
    assert json.loads(out)["schema"] == "permclass/1"
