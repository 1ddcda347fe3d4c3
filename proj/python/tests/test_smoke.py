import pytest

import fstruct


def test_example_reports():
    r = fstruct.report(fstruct.example(1))
    assert r["structure_ok"] and r["rank"] == 2
    assert all(r["flags"].values())

    r4 = fstruct.report(fstruct.example(4))
    assert r4["flags"] == {
        "Dl_integrable": True,
        "Dm_integrable": True,
        "partially": False,
        "completely": False,
        "integrable": False,
    }
    assert r4["consistency_ok"]


def test_nijenhuis_pair():
    assert fstruct.nijenhuis(fstruct.example(4), "z", "t") == "(1/x)*∂y"
    assert fstruct.nijenhuis(fstruct.example(4), "x", "t") == "0"
    with pytest.raises(ValueError):
        fstruct.nijenhuis(fstruct.example(4), "w", "t")


def test_cr_block():
    cr = fstruct.report(fstruct.example(2))["cr"]
    assert cr["is_cr"] and cr["complex_dim"] == 1
    assert cr["H"] == ["(1, j)"]


def test_classify():
    label, case, matches = fstruct.classify(0, 1, 3)
    assert case == 1 and matches == [1, 3, 7, 9]
    assert fstruct.classify(1, -2, 3)[0] == "generic"


def test_generate_and_audit():
    m = fstruct.generate(4, 3, 0, 1, conjugation="unimodular", seed=7)
    assert fstruct.audit_failures(m) == []
    assert fstruct.canonical_manifest(m) == m


def test_errors():
    m = fstruct.example(1)
    m["K"] = 2
    with pytest.raises(fstruct.SchemaError):
        fstruct.report(m)
    m = fstruct.example(1)
    m["F"][1][1] = "3"
    with pytest.raises(fstruct.StructureError):
        fstruct.report(m)
