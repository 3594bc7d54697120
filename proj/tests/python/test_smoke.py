import pytest

import ghcode


def test_gray_row():
    assert ghcode.gray(3, 3, 13) == [1, 2, 0, 2, 0, 1, 0, 1, 2]
    assert ghcode.tau(3, 3, 1) == [0, 3, 6]


def test_generator_rows():
    rows = ghcode.generator(3, [2, 1])
    assert len(rows) == 3
    assert rows[0] == [1] * 27
    assert rows[2] == [0] * 9 + [3] * 9 + [6] * 9


def test_invariants():
    assert ghcode.invariants(3, [2, 1]) == (6, 3)
    assert ghcode.invariants(3, [1, 1, 0]) == (6, 3)
    assert ghcode.is_linear(3, [1, 0, 2])
    assert not ghcode.is_linear(3, [2, 1])


def test_chain():
    c = ghcode.chain(3, [1, 0, 2, 1])
    assert c["representative"] == [3, 3]
    assert c["position"] == 3
    assert c["chain_length"] == 4
    assert c["members"][1] == [1, 2, 2]


def test_equiv_check():
    r = ghcode.equiv_check(3, [2, 1], [1, 1, 0])
    assert r["verdict"] == "PASS"
    assert r["mode"] == "set-equality"
    assert sorted(r["witness"]) == list(range(1, 82))
    assert ghcode.equiv_check(3, [2, 2], [3, 0])["verdict"] == "FAIL"
    assert ghcode.equiv_check(3, [2, 1], [1, 1, 0], budget_bytes=1000)["verdict"] == "PASS-BY-ALGEBRA"


def test_bounds_and_census():
    b = ghcode.bounds(7, 3)
    assert b["improved"]["value"] == 7
    assert b["improved_classes"] == {"value": 12, "published": 11}
    assert b["notes"]
    rows = ghcode.census(5, 3, invariants=True)
    assert len(rows) == 11
    pairs = {r["invariants"] for r in rows}
    assert len(pairs) == 4


def test_isolated_types():
    table = ghcode.isolated_types(8, 3)
    assert table[7] == [[4, 0], [2, 1, 0], [2, 0, 0, 0]]
    assert table[8] == [[3, 0, 0]]


def test_gh():
    assert ghcode.is_gh_code(3, [2, 1])
    assert ghcode.is_gh_code(2, [3, 0])


def test_errors():
    with pytest.raises(ghcode.InputError):
        ghcode.chain(3, [1, 0, 3])
    with pytest.raises(ValueError):
        ghcode.gray(4, 2, 1)
    with pytest.raises(ghcode.CapacityError):
        ghcode.invariants(3, [4, 0, 0], budget_bytes=1000)
