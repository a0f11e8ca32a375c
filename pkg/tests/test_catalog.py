"""Catalog loading, label normalization, alias closure, validation diagnostics."""

import json
import os

import pytest

from liecert.catalog import (
    CatalogError, canonical_label, canonical_sum_label, label_dim,
    load_catalog, parse_label, sum_label_dim, ENV_CATALOG,
)

from _frozen import FROZEN


# -- label grammar ----------------------------------------------------------

def test_parse_label_families():
    assert parse_label("sl(3,R)") == ("slR", (3,))
    assert parse_label("sl(2,C)") == ("slC", (2,))
    assert parse_label("su(2,1)") == ("su", (2, 1))
    assert parse_label("su*(6)") == ("sustar", (6,))
    assert parse_label("so(4,3)") == ("so", (4, 3))
    assert parse_label("so*(8)") == ("sostar", (8,))
    assert parse_label("sp(3,R)") == ("spR", (3,))
    assert parse_label("sp(2,1)") == ("sp", (2, 1))
    assert parse_label("u(2,2)") == ("u", (2, 2))
    assert parse_label("e6(-26)") == ("exc", ("e6", "-26"))
    fam, _params = parse_label("R")
    assert fam == "abelian"


def test_parse_label_compact_one_arg():
    assert parse_label("sp(2)") == ("sp", (2, 0))
    assert parse_label("so(9)") == ("so", (9, 0))
    assert parse_label("su(4)") == ("su", (4, 0))


def test_parse_label_rejects_garbage():
    for bad in ("", "foo", "sp)", "diag(su(1,1))", "sl(x,R)"):
        assert parse_label(bad) is None


def test_canonical_label_orders_signature():
    assert canonical_label("sp(1,2)") == "sp(2,1)"
    assert canonical_label("su(1,3)") == "su(3,1)"
    assert canonical_label("so(1,4)") == "so(4,1)"
    assert canonical_label("sp(2,1)") == "sp(2,1)"
    assert canonical_label("not a label") is None


def test_canonical_sum_label_componentwise():
    assert canonical_sum_label("sp(1,2)+sp(1)") == "sp(2,1)+sp(1)"
    assert canonical_sum_label(" sl(2,R) + R ") == "sl(2,R)+R"
    # unparseable components pass through verbatim
    assert canonical_sum_label("diag(su(1,1))") == "diag(su(1,1))"


def test_label_dims():
    assert label_dim("su(2,1)") == 8
    assert label_dim("sp(2)") == 10
    assert label_dim("sl(3,R)") == 8
    assert label_dim("e8(8)") == 248
    assert label_dim("R") == 1
    assert label_dim("bogus") is None
    assert sum_label_dim("sp(1,1)+sp(1)") == 13
    assert sum_label_dim("sl(2,R)+R") == 4


# -- loading and lookup -----------------------------------------------------

def test_load_shape(cat):
    assert cat.version == "1.0.0"
    assert len(cat.records) == len(FROZEN["ALGEBRAS"])
    assert len(cat.pairs) > 0
    assert set(cat.records) == set(FROZEN["ALGEBRAS"])


def test_every_record_and_table_cites_a_source(cat):
    for rec in cat.record_list():
        assert rec.citation.strip()
    for name, table in cat.tables.items():
        assert table.get("citation", "").strip(), f"table {name} lacks a citation"


def test_resolve_alias_with_note(cat):
    rec, note = cat.resolve("sp(1,2)")
    assert rec.label == "sp(2,1)"
    assert "sp(2,1)" in note
    rec, note = cat.resolve("sp(2,1)")
    assert note is None


def test_cross_listed_low_rank_isomorphisms(cat):
    # one algebra, several classical spellings: lookups agree on the invariants
    for a, b in [("so(4,1)", "sp(1,1)"), ("so(5,1)", "su*(4)"),
                 ("so(3,2)", "sp(2,R)"), ("so(3,3)", "sl(4,R)"),
                 ("su(1,1)", "sl(2,R)")]:
        ra, _ = cat.resolve(a)
        rb, _ = cat.resolve(b)
        assert cat.name_class(a) == cat.name_class(b)
        assert ra.m_real() == rb.m_real()
        assert ra.n_complex() == rb.n_complex()
        assert ra.dim_g == rb.dim_g


def test_unknown_label_suggestions(cat):
    with pytest.raises(KeyError) as ei:
        cat.resolve("sp(2,5)")
    assert ei.value.args[0] == "sp(2,5)"
    assert any(s.startswith("sp(") for s in ei.value.suggestions)


def test_find_pair_canonicalizes_both_sides(cat):
    # signatures normalize within each component; component order is kept
    row, note = cat.find_pair("sp(1,2)", "sp(1,1)+sp(1)")
    assert row.g == "sp(2,1)"
    assert row.gprime == "sp(1,1)+sp(1)"
    assert "sp(2,1)" in note
    row2, _ = cat.find_pair("sp(2,1)", "sp(1,1)+sp(0,1)")
    assert row2 is row
    with pytest.raises(KeyError) as ei:
        cat.find_pair("sp(2,1)", "so(9)")
    assert ei.value.args[0] == ("sp(2,1)", "so(9)")
    assert "u(2,1)" in ei.value.suggestions


def test_fixed_subalgebra_dims_frozen(cat):
    for key, dim in FROZEN["FIXED_DIM"].items():
        g, gp = key.split("|")
        row, _ = cat.find_pair(g, gp)
        assert row.dim_gprime == dim


def test_pairs_for_lists_every_partner(cat):
    partners = {row.gprime for row in cat.pairs_for("sp(2,1)")}
    assert {"u(2,1)", "sp(2)+sp(1)", "sp(1,1)+sp(1)"} <= partners


# -- validation diagnostics ---------------------------------------------------

def _reload_with(tmp_path, mutate):
    raw = json.load(open(load_catalog().path, encoding="utf-8"))
    mutate(raw)
    p = tmp_path / "catalog.json"
    p.write_text(json.dumps(raw))
    return str(p)


def test_tampered_multiplicity_is_reported_by_label(tmp_path):
    def bump(raw):
        ent = next(a for a in raw["algebras"] if a["label"] == "sp(2,1)")
        ent["mult"]["e"] = 5
    path = _reload_with(tmp_path, bump)
    with pytest.raises(CatalogError) as ei:
        load_catalog(path)
    assert "sp(2,1)" in str(ei.value)


def test_bad_schema_rejected(tmp_path):
    path = _reload_with(tmp_path, lambda raw: raw.update(schema=99))
    with pytest.raises(CatalogError) as ei:
        load_catalog(path)
    assert "schema" in str(ei.value)


def test_missing_section_rejected(tmp_path):
    path = _reload_with(tmp_path, lambda raw: raw.pop("pairs"))
    with pytest.raises(CatalogError) as ei:
        load_catalog(path)
    assert "pairs" in str(ei.value)


def test_unreadable_file_rejected(tmp_path):
    with pytest.raises(CatalogError):
        load_catalog(str(tmp_path / "nope.json"))
    bad = tmp_path / "broken.json"
    bad.write_text("{not json")
    with pytest.raises(CatalogError):
        load_catalog(str(bad))


def test_env_var_overrides_default_path(tmp_path, monkeypatch):
    src = load_catalog().path
    alt = tmp_path / "alt.json"
    alt.write_text(open(src, encoding="utf-8").read())
    monkeypatch.setenv(ENV_CATALOG, str(alt))
    cat2 = load_catalog()
    assert cat2.path == str(alt)
    assert cat2.version == "1.0.0"
