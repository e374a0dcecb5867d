import json
import math
import pathlib
from fractions import Fraction

import pytest

import genrank

FIXTURES = pathlib.Path(__file__).resolve().parents[2] / "fixtures"


def fixture(name):
    return genrank.load(str(FIXTURES / name))


def test_star_poset_values():
    d = fixture("star_module.json")
    assert d.kind == "vec"
    assert d.rank("{b}") == 2
    assert d.diagram("{b}") == -1
    assert d.diagram_mobius("{b}") == -1
    ranks = dict(d.ranks())
    assert len(ranks) == 11
    assert ranks["{a,b,c,d}"] == 0
    assert d.validate() is None


def test_twisted_reeb_graph():
    d = fixture("twisted_reeb.json")
    assert d.is_set
    assert d.barcode() == [("[1,4]", 1), ("[2,3)", 1), ("(2,3]", 1)]
    assert d.untwisted() == (False, "[1,4)")
    assert d.full("[1,4]") == 1
    assert dict(d.diagrams())["[2,3]"] == -1
    assert d.dot().startswith("graph reeb {")


def test_round_trip_through_json():
    d = fixture("merge_tree.json")
    e = genrank.loads(d.to_json())
    assert e.ranks() == d.ranks()
    assert genrank.from_dict(json.loads(d.to_json())).barcode() == d.barcode()


def test_bottleneck():
    m = (FIXTURES / "near_pair_a.json").read_text()
    n = (FIXTURES / "near_pair_b.json").read_text()
    assert genrank.bottleneck(m, n) == Fraction(1, 2)
    ess = json.dumps([{"birth": 0, "death": "inf"}])
    assert math.isinf(genrank.bottleneck(ess, "[]"))


def test_non_functorial_and_errors():
    assert fixture("grid_noncommuting.json").validate() == ("00", "11")
    with pytest.raises(genrank.GenrankError) as info:
        genrank.loads('{"kind":"vec","index":"zz","window":[0,1],"field":4}')
    assert info.value.args[0] == "InvalidModulus"
    with pytest.raises(genrank.GenrankError):
        fixture("star_module.json").rank("{a,c}")
    with pytest.raises(genrank.GenrankError):
        fixture("star_module.json").untwisted()


def test_matrix_rank():
    assert genrank.matrix_rank([[1, 1], [1, 1]]) == 1
    assert genrank.matrix_rank([[1, 2], [2, 1]], 5) == 2
    assert genrank.matrix_rank([[1, 2], [2, 1]], p=3) == 1
