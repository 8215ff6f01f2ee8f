"""Smoke tests for the Python bindings."""

import pytest

import fg


def test_weyl_orders():
    assert fg.weyl_order("f4") == 96
    assert fg.weyl_order("g3") == 24


def test_root_system_document():
    rs = fg.root_system("f4")
    assert rs["schema"] == fg.SCHEMA == 1


def test_blocks_list():
    doc = fg.blocks_list("f4", "1,1", -2, 3)
    cs = [w["c"] for w in doc["weights"]]
    assert "2/1" in cs
    assert doc["schema"] == 1


def test_superdimensions():
    assert fg.sdim("f4", "1,1", "2") == -2
    assert fg.sdim("g3", "3", "-1/2") == 3


def test_character_methods_agree():
    d = fg.character("f4", "1,1", "5/2", method="direct")
    r = fg.character("f4", "1,1", "5/2", method="recursion")
    assert d["sdim"] == r["sdim"] == 2
    d.pop("method")
    r.pop("method")
    assert d == r


def test_weight_queries():
    assert fg.atypicality("f4", "(0,0,0|0)") == 1
    assert fg.is_dominant("f4", "(0,0,0|0)")
    assert fg.block_of("g3", "(1,1|6)")


def test_quiver_and_relations():
    q = fg.quiver("f4", "4,1", 4)
    assert q["shape"] == "A_inf"
    assert fg.quiver_dot("f4", "1,1", 4).startswith("graph ")
    assert len(fg.relations("f4", "4,1", 4)["families"]) == 3


def test_category_documents():
    assert fg.bwb("f4", "1,1", 4)["schema"] == 1
    assert fg.projectives("f4", "1,1", 4)["schema"] == 1
    assert fg.translate("f4", "1,1", 4)["schema"] == 1


def test_verify_suite():
    ok, text = fg.verify("dominance")
    assert ok
    assert "PASS" in text


def test_errors():
    with pytest.raises(ValueError):
        fg.weyl_order("e8")
    with pytest.raises(ValueError):
        fg.character("f4", "1,1", "2", method="magic")
    assert issubclass(fg.ConsistencyError, RuntimeError)
