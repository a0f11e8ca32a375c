"""Involution realizations, the highest-root sign test, Hermitian structure,
and the parabolic (para-Hermitian) table."""

import pytest

from liecert import matrixalg as mx
from liecert import pairs as pr
from liecert.linalg import R1, mat_vec

from _frozen import FROZEN

# every matrix-realized pair kind, one representative each
REPRESENTATIVES = [
    ("sp(1,1)", "u(1,1)"),
    ("sp(2,1)", "sp(1,1)+sp(1)"),
    ("su(2,1)", "so(2,1)"),
    ("su(2,1)", "s(u(1,1)+u(1))"),
    ("su(2,2)", "sp(2,R)"),
    ("su(2,2)", "sl(2,C)+R"),
    ("su(2,2)", "sp(1,1)"),
    ("sp(2,R)", "sl(2,R)+R"),
    ("sp(2,R)", "sp(1,R)+sp(1,R)"),
    ("sl(4,R)", "sp(2,R)"),
    ("sl(4,R)", "so(2,2)"),
    ("sl(3,R)", "sl(2,R)+R"),
    ("so(4,3)", "so(3,3)"),
    ("so(3,2)", "so(2,1)+R"),
    ("su*(4)", "sp(1,1)"),
    ("su*(4)", "su*(2)+su*(2)+R"),
    ("sl(2,R)xsl(2,R)", "diag(sl(2,R))"),
]


@pytest.mark.parametrize("g,gp", REPRESENTATIVES)
def test_realized_pairs_validate(g, gp, cat):
    # SymPair construction re-checks: involutive, automorphism, commutes
    # with the Cartan involution, fixed dimension matches the catalog
    pair = pr.register_pair(cat, g, gp)
    assert pair is not None
    assert pair.fixed.dim == pair.record.dim_gprime
    assert pair.fixed.dim + pair.minus.dim == pair.alg.dim
    # fixed subspace is really pointwise fixed
    for row in pair.fixed.rows:
        assert pair.sigma_coords(row) == list(row)


def test_register_pair_table_only_returns_none(cat):
    assert pr.register_pair(cat, "f4(-20)", "so(9)") is None
    assert pr.register_pair(cat, "e6(-26)", "f4(-20)") is None


def test_register_pair_caches(cat):
    a = pr.register_pair(cat, "sp(1,1)", "u(1,1)")
    b = pr.register_pair(cat, "sp(1,1)", "u(1,1)")
    assert a is b


def test_fixed_dims_frozen(cat):
    for key, dim in FROZEN["FIXED_DIM"].items():
        g, gp = key.split("|")
        pair = pr.register_pair(cat, g, gp)
        assert pair.fixed.dim == dim


def test_fixed_subspace_is_a_subalgebra(cat):
    pair = pr.register_pair(cat, "su(2,2)", "sp(2,R)")
    mats = pair.fixed_mats()
    for i, x in enumerate(mats):
        for y in mats[i:]:
            assert pair.fixed.contains(pair.alg.coords(x.bracket(y)))


# -- sign of the highest restricted root under the involution ----------------

SIGN_YES = [("sp(1,1)", "u(1,1)"), ("sp(2,1)", "sp(1,1)+sp(1)"),
            ("sp(2,2)", "sp(2,1)+sp(1)"), ("sp(3,1)", "sp(2)+sp(1,1)")]
SIGN_NO = [("sl(2,R)", "sp(1,R)"), ("sp(2,R)", "sp(1,R)+sp(1,R)"),
           ("su(2,2)", "sp(1,1)"), ("so(4,4)", "so(4,3)")]


@pytest.mark.parametrize("g,gp", SIGN_YES)
def test_sign_flips(g, gp, cat):
    res = pr.check_sigma_mu(pr.register_pair(cat, g, gp))
    assert res.status == "yes" and res.provenance == "computed"
    assert res.mu is not None
    # the minus-part coordinates come first; the fixed-part tail vanishes
    assert not any(res.mu[res.minus_rank:])


@pytest.mark.parametrize("g,gp", SIGN_NO)
def test_sign_kept(g, gp, cat):
    res = pr.check_sigma_mu(pr.register_pair(cat, g, gp))
    assert res.status == "no" and res.provenance == "computed"
    assert any(res.mu[res.minus_rank:])


def test_sign_table_fallback(cat):
    rec, _ = cat.find_pair("f4(-20)", "so(8,1)")
    res = pr.check_sigma_mu(rec)
    assert res.status == "yes" and res.provenance == "table"
    rec2, _ = cat.find_pair("e6(-14)", "f4(-20)")
    assert pr.check_sigma_mu(rec2).status == "no"
    rec3, _ = cat.find_pair("sp(1,1)", "u(1,1)")
    with pytest.raises(ValueError):
        pr.check_sigma_mu(rec3)  # no recorded answer; needs the realization


def test_split_cartan_orders_minus_part_first(cat):
    pair = pr.register_pair(cat, "sp(2,2)", "u(2,2)")
    split = pr.sigma_split_a(pair)
    for A in split.minus_mats:
        assert pair.sigma_coords(pair.alg.coords(A)) == \
            [-c for c in pair.alg.coords(A)]
    for A in split.plus_mats:
        assert pair.sigma_coords(pair.alg.coords(A)) == pair.alg.coords(A)
    rdec = mx.restricted_decomposition(pair.alg)
    assert len(split.minus_mats) + len(split.plus_mats) == rdec.rank


# -- Hermitian structure ------------------------------------------------------

def test_hermitian_center_squares_to_minus_one():
    alg = mx.construct_classical("su(2,1)")
    hd = pr.hermitian_data(alg)
    assert hd is not None
    for row in alg.p_sub.rows:
        m = alg.mat(list(row))
        assert hd.Z.bracket(hd.Z.bracket(m)) == -m
    for row in alg.k_sub.rows:
        m = alg.mat(list(row))
        assert hd.Z.bracket(m).is_zero()


def test_hermitian_data_only_for_hermitian_forms(cat):
    for label in ("su(2,1)", "sp(2,R)", "su(2,2)"):
        assert pr.hermitian_data(mx.construct_classical(label)) is not None
        assert cat.resolve(label)[0].hermitian
    for label in ("sl(3,R)", "sp(2,1)", "su*(4)"):
        assert pr.hermitian_data(mx.construct_classical(label)) is None
        assert not cat.resolve(label)[0].hermitian


def test_holomorphy_types(cat):
    assert pr.holo_type(pr.register_pair(cat, "su(2,1)", "so(2,1)")) == \
        "antiholomorphic"
    assert pr.holo_type(pr.register_pair(cat, "sp(2,R)", "sl(2,R)+R")) == \
        "antiholomorphic"
    assert pr.holo_type(pr.register_pair(cat, "su(2,1)", "s(u(1,1)+u(1))")) == \
        "holomorphic"
    assert pr.holo_type(pr.register_pair(cat, "su(2,2)", "sp(2,R)")) == \
        "holomorphic"
    assert pr.holo_type(pr.register_pair(cat, "su(2,2)", "sl(2,C)+R")) == \
        "antiholomorphic"
    # ambient not Hermitian: no type at all
    assert pr.holo_type(pr.register_pair(cat, "sl(3,R)", "so(3)")) is None


# -- parabolic polarizations ---------------------------------------------------

def test_para_table_rows(cat):
    rows = pr.para_hermitian_levis(cat, "sl(4,R)")
    assert {r["levi"] for r in rows} >= {"sl(3,R)+R", "sl(2,R)+sl(2,R)+R"}
    assert all(r["key"] and r["family"] for r in rows)
    # quaternionic rank-one forms admit no such polarization
    assert pr.para_hermitian_levis(cat, "sp(2,1)") == []
    assert pr.para_hermitian_levis(cat, "f4(-20)") == []


def test_para_table_alias_closure(cat):
    # the same algebra under two spellings gives the same Levi set
    a = {r["levi"] for r in pr.para_hermitian_levis(cat, "so(3,3)")}
    b = {r["levi"] for r in pr.para_hermitian_levis(cat, "sl(4,R)")}
    assert a == b


def test_every_para_table_family_resolves(cat):
    for row in cat.tables["para_hermitian"]["rows"]:
        assert row.get("family") and row.get("key") and row.get("levi")
