import json
import os
import subprocess

import pytest

import dyck_squares as ds


def test_decompose_example():
    d = ds.decompose(7)
    assert d["terms"] == [1, 6, 14, 14]
    assert d["squares"] == [1, 36, 196, 196]
    assert d["catalan"] == 429 == sum(d["squares"])


def test_big_values_are_python_ints():
    c = ds.catalan(300)
    assert isinstance(c, int)
    assert c == sum(t * t for t in ds.decompose(300)["terms"])
    assert ds.binomial(600, 300) == c * 301


def test_closed_forms():
    assert ds.binomial(5, 2) == 10
    assert ds.binomial(7, -1) == 0
    assert ds.ballot(5, 4) == 5
    assert ds.ballot(4, 2) == 9
    assert ds.column_term(7, 3) == 14
    assert ds.ij_to_nk(10, 4) == (7, 3)
    assert ds.nk_to_ij(7, 3) == (10, 4)
    with pytest.raises(IndexError):
        ds.column_term(7, 4)
    with pytest.raises(ValueError):
        ds.ij_to_nk(5, 0)


def test_triangle():
    t = ds.Triangle(14)
    assert t.i_max == 14
    assert t.column(6) == [1, 5, 9, 5]
    assert t.dynamics(14, 0) == 429
    assert t.dynamics(5, 0) == 0
    assert t.reverse_dynamics(7, 10, 4) == 1
    assert t.paths_through(6, 6, 2) == 81
    with pytest.raises(IndexError):
        t.dynamics(15, 1)


def test_oracle():
    assert ds.validate("(()((()())))")
    assert not ds.validate(")(")
    assert ds.validate_by_positions("(())")
    assert ds.enumerate(3)[0] == "((()))"
    assert len(ds.enumerate(6)) == 132
    assert ds.midpoint_histogram(6) == {0: 25, 2: 81, 4: 25, 6: 1}
    assert ds.unbalance_profile("(())") == [0, 1, 2, 1, 0]
    with pytest.raises(ValueError):
        ds.enumerate(15)


@pytest.mark.skipif("DYCK_SQUARES_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_json_matches_module():
    out = subprocess.run(
        [os.environ["DYCK_SQUARES_CLI"], "decompose", "40", "--format", "json"],
        check=True, capture_output=True, text=True,
    ).stdout
    doc = json.loads(out)
    d = ds.decompose(40)
    assert [int(t) for t in doc["terms"]] == d["terms"]
    assert int(doc["catalan"]) == d["catalan"]
