"""Root systems and restricted root data against independently frozen values."""

import pytest

from liecert import roots as rt

from _frozen import FROZEN

ALG = FROZEN["ALGEBRAS"]
ALL_TYPES = sorted(FROZEN["ROOT_COUNTS"])


def _ct(key):
    return rt.CartanType(key[0], int(key[1:]))


@pytest.mark.parametrize("key", ALL_TYPES)
def test_root_count(key):
    rs = rt.build_root_system(key[0], int(key[1:]))
    assert len(rs.roots) == FROZEN["ROOT_COUNTS"][key]
    # closed under negation, no zero vector
    rset = set(rs.roots)
    assert all(tuple(-c for c in a) in rset for a in rset)
    assert all(any(a) for a in rset)


@pytest.mark.parametrize("key", ALL_TYPES)
def test_coroot_pairings_are_integers(key):
    rs = rt.build_root_system(key[0], int(key[1:]))
    mu = rs.highest_root()
    for alpha in rs.roots:
        p = rs.coroot_pairing(alpha, mu)
        assert p == int(p)
        assert -2 <= int(p) <= 2


@pytest.mark.parametrize("key", sorted(FROZEN["HIGHEST_ROOT_COEFFS"]))
def test_highest_root_coefficients(key):
    rs = rt.build_root_system(key[0], int(key[1:]))
    assert rs.highest_root() == FROZEN["HIGHEST_ROOT_COEFFS"][key]


@pytest.mark.parametrize("key", ALL_TYPES)
def test_complex_minimal_halfdim(key):
    assert rt.n_complex_of_type(_ct(key)) == FROZEN["N_COMPLEX"][key]


def test_complex_minimal_halfdim_closed_forms():
    vals = {k: rt.n_complex_of_type(_ct(k)) for k in ALL_TYPES}
    for n in range(1, 9):
        assert vals[f"A{n}"] == n
    for n in range(2, 9):
        assert vals[f"B{n}"] == 2 * n - 2
        assert vals[f"C{n}"] == n
    for n in range(3, 9):
        assert vals[f"D{n}"] == 2 * n - 3
    assert vals["G2"] == 3 and vals["F4"] == 8
    assert (vals["E6"], vals["E7"], vals["E8"]) == (11, 17, 29)


def test_series_rank_gates():
    with pytest.raises(ValueError):
        rt.build_root_system("B", 1)
    with pytest.raises(ValueError):
        rt.build_root_system("E", 9)
    with pytest.raises(ValueError):
        rt.build_root_system("X", 2)


# -- restricted data for every cataloged real form --------------------------

@pytest.mark.parametrize("label", sorted(ALG))
def test_frozen_invariants(label, cat):
    rec, _ = cat.resolve(label)
    exp = ALG[label]
    datum = rec.datum
    assert datum.series == exp["series"]
    assert datum.rank == exp["rank"]
    assert datum.hermitian == exp["hermitian"]
    assert datum.complex_form == exp["complex_form"]
    assert rec.n_complex() == exp["n"]
    assert rec.m_real() == exp["m"]
    gp = rec.grading()
    assert (gp.a, gp.b) == (exp["a"], exp["b"])
    assert gp.rank_ad_nilpositive == exp["rank_adX"]
    assert rec.case() == exp["case"]


@pytest.mark.parametrize("label", sorted(ALG))
def test_halfdim_consistency(label, cat):
    """m = (a + 2b)/2 and n <= m for every real form."""
    rec, _ = cat.resolve(label)
    gp = rec.grading()
    assert 2 * rec.m_real() == gp.a + 2 * gp.b
    assert rec.n_complex() <= rec.m_real()


def test_strict_inequality_exactly_on_frozen_families(cat):
    strict = sorted(lbl for lbl in ALG
                    if cat.resolve(lbl)[0].n_complex()
                    < cat.resolve(lbl)[0].m_real())
    assert strict == sorted(FROZEN["STRICT_FAMILIES"])


def test_quaternionic_and_lorentz_gradings(cat):
    # one multiplicity-3 family and the rank-one family, in closed form
    for p, q in [(1, 1), (2, 1), (2, 2), (3, 1)]:
        gp = cat.resolve(f"sp({p},{q})")[0].grading()
        assert (gp.a, gp.b) == (4 * (p + q - 2), 3)
    for n in range(4, 10):
        rec, _ = cat.resolve(f"so({n},1)")
        gp = rec.grading()
        assert (gp.a, gp.b) == (0, n - 1)
        assert rec.m_real() == n - 1
    gp = cat.resolve("f4(-20)")[0].grading()
    assert (gp.a, gp.b) == (8, 7)


def test_restricted_signature_shape(cat):
    for label in ("su(2,1)", "sp(2,2)", "e6(-26)", "sl(3,R)"):
        rec, _ = cat.resolve(label)
        rank, counts = rt.restricted_signature(rec.datum)
        assert rank == rec.datum.rank
        total = sum(cnt * mult for _len, cnt, mult in counts)
        # root count with multiplicity = dim g - dim of the zero weight space
        assert total > 0
        assert counts == tuple(sorted(counts))


def test_restricted_roots_reduced_vs_bc(cat):
    # type-BC data carry both alpha and 2*alpha weights; reduced types do not
    dat_bc = cat.resolve("su(2,1)")[0].datum
    assert dat_bc.series == "BC"
    dat_a = cat.resolve("sl(3,R)")[0].datum
    assert dat_a.series == "A"
    sig_bc = rt.restricted_signature(dat_bc)
    lengths = sorted({l for l, _c, _m in sig_bc[1]})
    assert len(lengths) >= 2
