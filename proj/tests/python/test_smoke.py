import os
from fractions import Fraction

import pytest

import xiknot

FIX = os.environ.get(
    "XIKNOT_FIXTURES",
    os.path.join(os.path.dirname(__file__), "..", "..", "fixtures"),
)


def fx(name):
    return os.path.join(FIX, name)


def test_xi_six_one():
    rep = xiknot.compute_xi(fx("6_1.problem.json"))
    assert rep["xi"] == "1"
    assert rep["verdict"] == "not obstructed by xi"
    assert rep["m"] == [["-1"]]
    assert rep["basis"] == ["beta^1-beta^2"]
    assert rep["monodromies"] == {"beta.right": [1, 2, 3], "beta.left": [3, 1, 2]}
    assert rep["h1"] == {"known": True, "factors": []}
    assert rep["warnings"] == []
    assert xiknot.xi(fx("6_1.problem.json")) == 1


def test_xi_eight_eleven_from_block_table():
    rep = xiknot.compute_xi(fx("8_11.problem.json"))
    assert rep["xi"] == "3"
    assert rep["verdict"] == "obstructed"
    assert rep["m"] == [["-2", "-1", "-2"], ["-1", "-2", "-2"], ["-2", "-2", "-3"]]
    assert rep["sigma_m"] == -3
    assert rep["h1"]["known"] is False

    override = xiknot.compute_xi(fx("8_11.problem.json"), "table:" + fx("8_11.table.json"))
    assert override["xi"] == "3"


def test_linking_block():
    b = xiknot.linking_block(fx("6_1.scene.json"), "beta", "beta")
    assert b == [
        [Fraction(-1), Fraction(0), Fraction(1)],
        [Fraction(0), Fraction(0), Fraction(0)],
        [Fraction(1), Fraction(0), Fraction(-1)],
    ]


def test_lists_text():
    lines = xiknot.lists_text(fx("6_1.scene.json"), "alpha").splitlines()
    assert lines == [
        "f=(1,8,0,7,10,5,3,2,4,6,6,4)",
        "eps=(-,+,-,-,-,-,+,+,+,-,+,-)",
        "t=(p,k,k,p,k,p,p,k,p,k,p,k)",
        "c=(1,1,3,2,2,1,1,1,2,2,3,3)",
    ]
    assert xiknot.lists_text(fx("6_1.scene.json"), "beta").splitlines()[0] == "(0,8,2,6,6,10,4,0)"


def test_cover_h1_and_colorings():
    assert xiknot.cover_h1(fx("6_1.scene.json")) == []
    classes = xiknot.coloring_classes(fx("6_1.scene.json"))
    fixture = [1, 1, 3, 2, 2, 1, 1, 1, 2, 2, 3, 3]
    relabellings = [
        [(a * c + b - 1) % 3 + 1 for c in fixture] for a in (1, 2) for b in (0, 1, 2)
    ]
    assert any(r in classes for r in relabellings)


def test_cover_signature_and_verdict():
    assert xiknot.cover_signature(3, 0, 0, 1) == -1
    assert xiknot.cover_signature(3, 1, 4, 3) == -2
    assert xiknot.cover_signature(3, 0, -8, 1) == 3
    assert xiknot.cover_signature(3, 0, 2, 0) == Fraction(-1)
    assert xiknot.ribbon_verdict(1) == "not obstructed by xi"
    assert xiknot.ribbon_verdict(3) == "obstructed"
    assert xiknot.ribbon_verdict(Fraction(3, 2)) == "obstructed"


def test_error_mapping():
    with pytest.raises(xiknot.ProblemError):
        xiknot.compute_xi(fx("6_1.scene.json"))
    with pytest.raises(xiknot.SceneError):
        xiknot.lists_text(fx("6_1.scene.json"), "nope")
