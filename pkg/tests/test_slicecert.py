"""Slice certificates: dispatch, gradings, and sampled orbit checks at
reduced scale (the full grid runs in the acceptance suite)."""

import random

import pytest

from liecert import matrixalg as mx
from liecert import slicecert as sc

from _frozen import FROZEN

ALG = FROZEN["ALGEBRAS"]


def test_grading_certificate_fields():
    rep = sc.grading_check(mx.construct_classical("sp(2,1)"))
    assert rep.passed
    assert rep.ok_spectrum and rep.ok_symmetric
    assert rep.ok_zero_level and rep.ok_centralizer
    exp = ALG["sp(2,1)"]
    assert rep.dims.get(1, 0) == exp["a"] and rep.dims.get(2, 0) == exp["b"]


@pytest.mark.parametrize("label", ["sl(3,R)", "su(2,2)", "sp(1,1)", "su*(4)"])
def test_grading_certificates(label):
    assert sc.grading_check(mx.construct_classical(label)).passed


def test_real_slice_certificate(cat):
    rep = sc.verify_coiso(cat, "sp(1,1)", "u(1,1)", seeds=(1,), trials=2)
    assert rep.mode == "real-slice"
    assert rep.applicable and rep.passed
    assert len(rep.points) >= 3
    labels = " ".join(p.label for p in rep.points)
    assert "containment" in labels and "openness" in labels


def test_antiholomorphic_certificate(cat):
    rep = sc.verify_coiso(cat, "su(2,1)", "so(2,1)", seeds=(2,), trials=2)
    assert rep.mode == "antiholomorphic"
    assert rep.passed


def test_diagonal_certificates(cat):
    rep = sc.verify_coiso(cat, "sl(2,R)xsl(2,R)", "diag(sl(2,R))",
                          seeds=(1,), trials=2)
    assert rep.mode == "diagonal-orbit" and rep.passed
    rep = sc.verify_coiso(cat, "su(1,1)xsu(1,1)", "diag(su(1,1))",
                          seeds=(1,), trials=2)
    assert rep.mode == "diagonal-holomorphic" and rep.passed


def test_table_only_pair_has_no_certificate(cat):
    with pytest.raises(mx.NoMatrixModel):
        sc.verify_coiso(cat, "f4(-20)", "so(9)")


def test_holomorphic_pair_reports_not_applicable(cat):
    rep = sc.verify_coiso(cat, "su(2,1)", "s(u(1,1)+u(1))", seeds=(1,),
                          trials=2)
    assert not rep.applicable
    assert rep.mode == "holomorphic-route"
    assert any("holomorphic" in n for n in rep.notes)
    assert not rep.passed  # not applicable => never reported as a pass


def test_hermitian_identity(cat):
    rep = sc.verify_hermitian_identity(mx.construct_classical("su(1,1)"),
                                       seeds=(1,), trials=3)
    assert rep.passed and rep.mode == "hermitian-identity"
    rep2 = sc.verify_hermitian_identity(mx.construct_classical("sl(3,R)"))
    assert not rep2.applicable


def test_summary_lines_render(cat):
    rep = sc.verify_coiso(cat, "sp(1,1)", "u(1,1)", seeds=(1,), trials=2)
    lines = rep.summary_lines()
    assert "(sp(1,1), u(1,1))" in lines[0]
    assert all(("ok" in ln or "note:" in ln) for ln in lines[1:])


def test_determinism_same_seed_same_points(cat):
    a = sc.verify_coiso(cat, "sp(2,1)", "sp(1,1)+sp(1)", seeds=(3,), trials=3)
    b = sc.verify_coiso(cat, "sp(2,1)", "sp(1,1)+sp(1)", seeds=(3,), trials=3)
    assert [(p.label, p.ok) for p in a.points] == \
        [(p.label, p.ok) for p in b.points]


def test_subgroup_words_preserve_the_fixed_subalgebra(cat):
    import liecert.pairs as pr
    from liecert.linalg import R0, mat_vec
    pair = pr.register_pair(cat, "sp(1,1)", "u(1,1)")
    words, note = sc.subgroup_orbit_words(pair, random.Random(5), 3)
    assert words and note == ""
    for w in words:
        for row in pair.fixed.rows:
            assert pair.fixed.contains(mat_vec(w, list(row), R0))
