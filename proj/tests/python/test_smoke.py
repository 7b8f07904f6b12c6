import json

import pytest

import lamina


def test_angle_basics():
    assert lamina.double_angle("1/3") == "2/3"
    assert lamina.orbit_type("13/31") == (0, 5)
    assert lamina.orbit_type("5/62") == (1, 5)
    assert lamina.chord_length("5/62", "37/62") == "15/31"


def test_kneading_and_address():
    assert lamina.kneading("13/31") == "(0100*)^inf"
    assert lamina.kneading("1/2") == "0(1)^inf"
    assert lamina.address("13/31") == "1-2-4-5"
    assert lamina.address_of_kneading("0100*") == "1-2-4-5"
    assert lamina.kneading_of_address("1-2-4-5-6") == "(01001*)^inf"


def test_admissibility():
    assert lamina.admissible("1-2-3") == "3/7"
    assert lamina.admissible("1-2-4-5") == "13/31"
    assert lamina.admissible("1-2-4-5-6") is None


def test_store_queries():
    assert lamina.partner("13/31") == "18/31"
    assert lamina.partner("1/7") == "2/7"
    assert lamina.bstar_counts(6) == [1, 3, 6, 15, 27]
    assert lamina.is_narrow("15/31")
    assert lamina.is_narrow("1/3")
    assert not lamina.is_narrow("13/31")


def test_tuning():
    assert lamina.tune("13/31", "1/3") == "14/33"
    assert lamina.untune("13/31", "14/33") == "1/3"
    assert lamina.bifurcation("13/31", 1, 2) == ("14/33", "19/33")
    assert lamina.bifurcation("1/3", 1, 2) == ("2/5", "3/5")


def test_vistree_json():
    tree = json.loads(lamina.vistree_json("13/31", "1/2"))
    assert tree["schema"] == "lamina/1"
    assert tree["root"]["period"] == 10
    assert tree["root"]["leaf"] == ["14/33", "19/33"]


def test_errors_are_value_errors():
    with pytest.raises(ValueError):
        lamina.kneading("not-a-fraction")
    with pytest.raises(ValueError):
        lamina.partner("1/10")
