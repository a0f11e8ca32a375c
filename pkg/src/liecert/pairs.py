"""Symmetric pairs (g, g') realized by exact involutions on matrix models.

A pair is an ambient matrix algebra g together with an involutive
automorphism sigma commuting with the Cartan involution; g' is the fixed
subalgebra.  Everything a verdict needs from the pair is computed here:

  * sigma-adapted maximal split Cartan subspaces (the -1 part first, then a
    fixed-part extension), with self-centralizing certificates;
  * the sign test on the highest restricted root: sigma(mu) = -mu holds
    exactly when mu vanishes on the fixed-part extension;
  * holomorphy type for Hermitian ambients (sigma fixes or negates the
    central complex-structure element of k);
  * para-Hermitian Levi factors of g, materialized from the catalog table.

Recipes are small dictionaries stored in the catalog; each kind maps to an
explicit matrix involution below.  Every realized involution is validated:
it must preserve the model, square to the identity, commute with theta,
respect brackets, and cut out a fixed subalgebra of the recorded dimension.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

from .linalg import (Mat, QQi, Subspace, QI0, QI1, R0, R1, rat, mat_vec,
                     nullspace)
from . import matrixalg as mx
from .matrixalg import MatrixAlgebra, _greedy_cartan_subspace, _split_a_seeds
from .catalog import Catalog, PairRecord, parse_label, label_dim


class PairRealizationError(ValueError):
    """An involution recipe failed its construction-time validation."""


# ---------------------------------------------------------------------------
# involution recipes
# ---------------------------------------------------------------------------

def _pm_diag(signs) -> Mat:
    n = len(signs)
    D = Mat.zeros(n)
    for i, s in enumerate(signs):
        D.rows[i][i] = QI1 if s > 0 else -QI1
    return D


def _ad(T: Mat, T_inv: Mat) -> Callable[[Mat], Mat]:
    return lambda X: (T @ X) @ T_inv


def build_involution(alg: MatrixAlgebra, recipe: dict) -> Callable[[Mat], Mat]:
    """Concrete matrix involution for a catalog recipe on this model."""
    kind = recipe["kind"]
    if kind == "u_fix":
        # sp(p,q) model has size 2N; conjugation by diag(i I_N, -i I_N)
        # fixes the complex-linear part, u(p,q).
        N = alg.N // 2
        T = Mat.zeros(alg.N)
        for i in range(N):
            T.rows[i][i] = QQi(rat(0), rat(1))
            T.rows[N + i][N + i] = QQi(rat(0), rat(-1))
        return _ad(T, -T)
    if kind == "sp_split":
        p, q, p1, q1 = (recipe[k] for k in ("p", "q", "p1", "q1"))
        N = p + q
        signs = [1 if i < p1 else -1 for i in range(p)] + \
                [1 if i < q1 else -1 for i in range(q)]
        D = _pm_diag(signs + signs)
        return _ad(D, D)
    if kind == "su_s_uu":
        p, q, p1, q1 = (recipe[k] for k in ("p", "q", "p1", "q1"))
        signs = [1 if i < p1 else -1 for i in range(p)] + \
                [1 if i < q1 else -1 for i in range(q)]
        D = _pm_diag(signs)
        return _ad(D, D)
    if kind == "su_so":
        return lambda X: X.conj()
    if kind == "su_sp_quat":
        # su(2p,2q) > sp(p,q): X -> J' conj(X) J'^{-1} with a symplectic
        # structure inside each definiteness block.
        p, q = recipe["p"], recipe["q"]
        Jp = Mat.zeros(2 * (p + q))
        for i in range(p):
            Jp.rows[i][p + i] = QI1
            Jp.rows[p + i][i] = -QI1
        base = 2 * p
        for i in range(q):
            Jp.rows[base + i][base + q + i] = QI1
            Jp.rows[base + q + i][base + i] = -QI1
        return lambda X: (Jp @ X.conj()) @ (-Jp)
    if kind == "sunn_spR":
        n = recipe["n"]
        M = _swap(n)
        return lambda X: (M @ X.conj()) @ M
    if kind == "sunn_slC":
        n = recipe["n"]
        M = _swap(n)
        return _ad(M, M)
    if kind == "sustar_sp":
        n, p, q = recipe["n"], recipe["p"], recipe["q"]
        eps = [1] * p + [-1] * q
        K = _pm_diag(eps + eps)
        return lambda X: -((K @ X.h()) @ K)
    if kind == "sustar_split":
        n, p = recipe["n"], recipe["p"]
        delta = [1] * p + [-1] * (n - p)
        D = _pm_diag(delta + delta)
        return _ad(D, D)
    if kind == "slR_sp":
        n = recipe["n"]
        J = _sympl(n)
        return lambda X: (J @ X.t()) @ J
    if kind == "slR_so":
        p, q = recipe["p"], recipe["q"]
        K = _pm_diag([1] * p + [-1] * q)
        return lambda X: -((K @ X.t()) @ K)
    if kind == "slR_gl_split":
        n, p = recipe["n"], recipe["p"]
        D = _pm_diag([1] * p + [-1] * (n - p))
        return _ad(D, D)
    if kind == "spR_gl":
        n = recipe["n"]
        D = _pm_diag([1] * n + [-1] * n)
        return _ad(D, D)
    if kind == "spR_split":
        n, n1 = recipe["n"], recipe["n1"]
        delta = [1] * n1 + [-1] * (n - n1)
        D = _pm_diag(delta + delta)
        return _ad(D, D)
    if kind == "so_split":
        p, q, fp, fq = (recipe[k] for k in ("p", "q", "fp", "fq"))
        signs = [1 if i < fp else -1 for i in range(p)] + \
                [1 if i < fq else -1 for i in range(q)]
        D = _pm_diag(signs)
        return _ad(D, D)
    if kind == "diag":
        half = alg.N // 2
        P = Mat.zeros(alg.N)
        for i in range(half):
            P.rows[i][half + i] = QI1
            P.rows[half + i][i] = QI1
        return _ad(P, P)
    raise PairRealizationError(f"unknown involution recipe kind {kind!r}")


def _swap(n) -> Mat:
    M = Mat.zeros(2 * n)
    for i in range(n):
        M.rows[i][n + i] = QI1
        M.rows[n + i][i] = QI1
    return M


def _sympl(n) -> Mat:
    J = Mat.zeros(2 * n)
    for i in range(n):
        J.rows[i][n + i] = QI1
        J.rows[n + i][i] = -QI1
    return J


# ---------------------------------------------------------------------------
# the pair object
# ---------------------------------------------------------------------------

class SymPair:
    """An ambient matrix algebra with a validated involution."""

    def __init__(self, alg: MatrixAlgebra, sigma: Callable[[Mat], Mat], *,
                 g_label: str, gprime_label: str, kind: str,
                 record: Optional[PairRecord] = None):
        self.alg = alg
        self.sigma = sigma
        self.g_label = g_label
        self.gprime_label = gprime_label
        self.kind = kind
        self.record = record
        d = alg.dim
        cols = []
        for b in alg.basis:
            sb = sigma(b)
            if not alg.contains_mat(sb):
                raise PairRealizationError(
                    f"({g_label}, {gprime_label}): involution leaves the model")
            cols.append(alg.coords(sb))
        self.srows = [[cols[j][i] for j in range(d)] for i in range(d)]
        self._validate()
        self.fixed = _eigenspace(self.srows, R1, d)
        self.minus = _eigenspace(self.srows, -R1, d)
        assert self.fixed.dim + self.minus.dim == d
        if record is not None and record.dim_gprime is not None:
            if self.fixed.dim != record.dim_gprime:
                raise PairRealizationError(
                    f"({g_label}, {gprime_label}): fixed subalgebra has "
                    f"dimension {self.fixed.dim}, catalog says "
                    f"{record.dim_gprime}")

    def _validate(self):
        alg, d = self.alg, self.alg.dim
        # involutive
        for j in range(d):
            col = [self.srows[i][j] for i in range(d)]
            img = mat_vec(self.srows, col, R0)
            want = [R1 if i == j else R0 for i in range(d)]
            if img != want:
                raise PairRealizationError(
                    f"({self.g_label}, {self.gprime_label}): not an involution")
        # commutes with theta
        T = [alg.coords(alg.theta_mat(b)) for b in alg.basis]
        trows = [[T[j][i] for j in range(d)] for i in range(d)]
        for j in range(d):
            col = [self.srows[i][j] for i in range(d)]
            a = mat_vec(trows, col, R0)
            tcol = [trows[i][j] for i in range(d)]
            b = mat_vec(self.srows, tcol, R0)
            if a != b:
                raise PairRealizationError(
                    f"({self.g_label}, {self.gprime_label}): involution does "
                    f"not commute with the Cartan involution")
        # bracket compatibility
        for i, bi in enumerate(alg.basis):
            si = self.sigma(bi)
            for bj in alg.basis[i + 1:]:
                if self.sigma(bi.bracket(bj)) != si.bracket(self.sigma(bj)):
                    raise PairRealizationError(
                        f"({self.g_label}, {self.gprime_label}): involution "
                        f"is not a Lie algebra automorphism")

    def sigma_coords(self, v):
        return mat_vec(self.srows, list(v), R0)

    def fixed_mats(self):
        return self.alg.mats_of(self.fixed)

    def __repr__(self):
        return (f"SymPair({self.g_label} ⊃ {self.gprime_label}, "
                f"dim {self.alg.dim} ⊃ {self.fixed.dim})")


def _eigenspace(rows, val, d) -> Subspace:
    shifted = [[rows[i][j] - (val if i == j else R0) for j in range(d)]
               for i in range(d)]
    return Subspace.from_vectors(nullspace(shifted, d, R1, R0), d, "Q")


_PAIR_CACHE: dict = {}


def register_pair(cat: Catalog, g_label: str,
                  gprime_label: str) -> Optional[SymPair]:
    """Realize a cataloged pair as a concrete involution, or None when the
    pair is table-only (no matrix recipe).  Realizations are validated once
    and cached per catalog row."""
    rec, _note = cat.find_pair(g_label, gprime_label)
    if rec.recipe is None:
        return None
    key = (rec.g, rec.gprime)
    if key not in _PAIR_CACHE:
        if rec.recipe["kind"] == "diag":
            factor = rec.recipe["factor"]
            alg = mx.construct_classical(f"{factor}x{factor}")
        else:
            alg = mx.construct_classical(rec.g)
        sigma = build_involution(alg, rec.recipe)
        _PAIR_CACHE[key] = SymPair(
            alg, sigma, g_label=rec.g, gprime_label=rec.gprime,
            kind=rec.recipe["kind"], record=rec)
    return _PAIR_CACHE[key]


# ---------------------------------------------------------------------------
# sigma-adapted split Cartan subspace and the highest-root sign test
# ---------------------------------------------------------------------------

@dataclass
class SigmaSplitA:
    pair: SymPair
    minus_mats: list     # basis of the maximal abelian subspace of p ∩ (-1)
    plus_mats: list      # extension inside the fixed part
    span: Subspace       # the full split Cartan subspace

    @property
    def rank(self):
        return len(self.minus_mats) + len(self.plus_mats)


def sigma_split_a(pair: SymPair) -> SigmaSplitA:
    """Maximal split Cartan subspace adapted to the involution.

    Stage 1 grows a maximal abelian subspace of p ∩ (-1 eigenspace), with
    the certificate that it centralizes itself there.  Stage 2 extends by
    fixed-part candidates until the subspace is maximal abelian in all of p.
    Theory guarantees stage-2 candidates always live in the fixed part; the
    assertion enforces it.
    """
    alg = pair.alg
    pm = alg.p_sub.intersect(pair.minus)
    seeds = [s for s in _split_a_seeds(alg.family, alg.params, alg.N)
             if pm.contains(alg.coords(s))]
    minus_mats, span = _greedy_cartan_subspace(alg, pm, seeds)
    p_fix = alg.p_sub.intersect(pair.fixed)
    plus_mats = []
    all_mats = list(minus_mats)
    while True:
        cz = alg.centralizer(all_mats, within=alg.p_sub) if all_mats \
            else alg.p_sub
        if cz.dim == span.dim:
            break
        cz_plus = cz.intersect(p_fix)
        cand = None
        for row in cz_plus.rows:
            if not span.contains(list(row)):
                cand = list(row)
                break
        assert cand is not None, (
            f"{pair}: split Cartan subspace cannot be completed inside the "
            f"fixed part — involution data is inconsistent")
        m = alg.mat(cand)
        plus_mats.append(m)
        all_mats.append(m)
        span = span.add(Subspace.from_vectors([cand], alg.dim, "Q"))
    return SigmaSplitA(pair=pair, minus_mats=minus_mats,
                       plus_mats=plus_mats, span=span)


@dataclass
class SigmaMuResult:
    status: str                 # "yes" | "no"
    provenance: str             # "computed" | "table"
    mu: Optional[tuple] = None
    minus_rank: int = 0
    plus_rank: int = 0
    detail: str = ""


def check_sigma_mu(pair_or_record) -> SigmaMuResult:
    """Does the involution send the highest restricted root to its negative?

    For realized pairs this is computed exactly: with the split Cartan
    subspace ordered (-1)-part first, the highest weight mu in the induced
    lexicographic positive system satisfies sigma(mu) = -mu precisely when
    all its fixed-part coordinates vanish.  Table-only pairs fall back to
    the recorded answer.  When both are available they must agree.
    """
    if isinstance(pair_or_record, PairRecord):
        rec = pair_or_record
        if rec.sigma_mu_table is None:
            raise ValueError(f"({rec.g}, {rec.gprime}): no recorded answer "
                             f"and no realization to compute one")
        return SigmaMuResult(status=rec.sigma_mu_table, provenance="table",
                             detail="catalog row")
    pair: SymPair = pair_or_record
    alg = pair.alg
    split = sigma_split_a(pair)
    ops = [alg.ad_rows(A) for A in split.minus_mats + split.plus_mats]
    pieces = mx.joint_weight_split(ops, alg.whole())
    weights = [w for w, sp in pieces if any(w)]
    assert weights, f"{pair}: no restricted roots"
    mu = max(weights)
    nm = len(split.minus_mats)
    plus_part = mu[nm:]
    status = "no" if any(plus_part) else "yes"
    rec = pair.record
    if rec is not None and rec.sigma_mu_table is not None \
            and rec.sigma_mu_table != status:
        raise AssertionError(
            f"{pair}: computed highest-root sign test ({status}) contradicts "
            f"the catalog row ({rec.sigma_mu_table})")
    return SigmaMuResult(
        status=status, provenance="computed", mu=mu,
        minus_rank=nm, plus_rank=len(split.plus_mats),
        detail=f"mu restricted to the fixed-part coordinates is "
               f"{'zero' if status == 'yes' else 'nonzero'}")


# ---------------------------------------------------------------------------
# Hermitian structure: the central complex-structure element of k
# ---------------------------------------------------------------------------

@dataclass
class HermitianData:
    Z: Mat           # central element of k with ad(Z)^2 = -1 on p
    scale: object    # rational t with Z = Z0 / t for the raw center generator


def _rat_sqrt(x):
    num, den = int(x.numerator), int(x.denominator)
    if num < 0:
        return None
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        return rat(rn, rd)
    return None


def hermitian_data(alg: MatrixAlgebra) -> Optional[HermitianData]:
    """The complex-structure generator for a Hermitian model, or None.

    Computed, not tabulated: the center of k must be one-dimensional and its
    generator must square (under ad, on p) to a negative rational scalar.
    """
    k_mats = alg.mats_of(alg.k_sub)
    zk = alg.centralizer(k_mats, within=alg.k_sub)
    if zk.dim != 1:
        return None
    Z0 = alg.mat(list(zk.rows[0]))
    ad = alg.ad_rows(Z0)
    M = mx._op_restrict(ad, alg.p_sub)
    d = alg.p_sub.dim
    M2 = [[sum((M[i][k] * M[k][j] for k in range(d)), R0) for j in range(d)]
          for i in range(d)]
    s = -M2[0][0]
    for i in range(d):
        for j in range(d):
            if M2[i][j] != (-s if i == j else R0):
                return None
    t = _rat_sqrt(s)
    assert t is not None and t > 0, \
        f"{alg.label}: complex structure needs an irrational normalization"
    return HermitianData(Z=Z0.scale(R1 / t), scale=t)


def holo_type(pair: SymPair) -> Optional[str]:
    """'holomorphic' if the involution fixes the complex-structure element,
    'antiholomorphic' if it negates it, None for non-Hermitian ambients."""
    hd = hermitian_data(pair.alg)
    if hd is None:
        return None
    sz = pair.sigma(hd.Z)
    if sz == hd.Z:
        return "holomorphic"
    if sz == -hd.Z:
        return "antiholomorphic"
    raise AssertionError(
        f"{pair}: involution neither fixes nor negates the complex "
        f"structure — it does not preserve the Hermitian data")


# ---------------------------------------------------------------------------
# para-Hermitian Levi factors
# ---------------------------------------------------------------------------

def _drop_trivial(parts):
    out = []
    for c in parts:
        d = label_dim(c)
        if d == 0:
            continue
        out.append(c)
    return out


def _norm_levi(s: str) -> str:
    parts = _drop_trivial(s.split("+"))
    return "+".join(parts) if parts else "R"


def para_hermitian_levis(cat: Catalog, label: str) -> list:
    """Levi factors of para-Hermitian polarizations carried by this algebra.

    Matches every name in the algebra's alias class against the catalog's
    para-Hermitian table and materializes the Levi labels.  Empty list means
    the algebra carries no such structure.
    """
    try:
        names = cat.name_class(label)
    except KeyError:
        names = frozenset([label.replace(" ", "")])
    keys_seen = {}
    rows = {r["key"]: r for r in cat.tables["para_hermitian"]["rows"]}
    for name in sorted(names):
        parsed = parse_label(name)
        if parsed is None:
            continue
        fam, params = parsed
        for key, levi in _match_para(fam, params):
            keys_seen.setdefault((key, levi), rows[key]["family"])
    return [{"key": k, "levi": lv, "family": fam_str}
            for (k, lv), fam_str in sorted(keys_seen.items())]


def _match_para(fam, params):
    """(table key, materialized Levi label) rows for one parsed name."""
    out = []
    if fam == "slR":
        n = params[0]
        if n >= 2:
            for p in range(n - 1, (n - 1) // 2, -1):
                q = n - p
                out.append(("slR", _norm_levi(f"sl({p},R)+sl({q},R)+R")))
    elif fam == "sustar":
        n = params[0] // 2
        if n >= 2:
            for p in range(n - 1, (n - 1) // 2, -1):
                q = n - p
                out.append(("sustar", _norm_levi(f"su*({2*p})+su*({2*q})+R")))
    elif fam == "slC":
        n = params[0]
        if n >= 2:
            for p in range(n - 1, (n - 1) // 2, -1):
                q = n - p
                out.append(("slC", _norm_levi(f"sl({p},C)+sl({q},C)+C")))
    elif fam == "su":
        p, q = params
        if p == q and p >= 1:
            out.append(("sunn", _norm_levi(f"sl({p},C)+R")))
    elif fam == "so":
        p, q = params
        if p == q and p >= 3:
            out.append(("sonn", _norm_levi(f"sl({p},R)+R")))
        if p >= 1 and q >= 1 and p + q >= 3 and (p - 1, q - 1) != (1, 1):
            inner = f"so({p-1},{q-1})" if q - 1 >= 1 else f"so({p-1})"
            out.append(("soplus", _norm_levi(f"{inner}+R")))
    elif fam == "sostar":
        n2 = params[0]
        if n2 % 4 == 0 and n2 >= 8:
            out.append(("sostar4n", _norm_levi(f"su*({n2//2})+R")))
    elif fam == "soC":
        n = params[0]
        if n % 2 == 0 and n >= 6:
            out.append(("so2nC", _norm_levi(f"sl({n//2},C)+C")))
        if n - 2 >= 3:
            out.append(("son2C", _norm_levi(f"so({n-2},C)+C")))
    elif fam == "spR":
        n = params[0]
        if n >= 1:
            out.append(("spnR", _norm_levi(f"sl({n},R)+R")))
    elif fam == "sp":
        p, q = params
        if p == q and p >= 1:
            out.append(("spnn", _norm_levi(f"su*({2*p})+R")))
    elif fam == "spC":
        n = params[0]
        if n >= 1:
            out.append(("spnC", _norm_levi(f"sl({n},C)+C")))
    elif fam == "exc":
        name, disc = params
        fixed = {
            ("e6", "6"): ("e66", "so(5,5)+R"),
            ("e6", "-26"): ("e6m26", "so(9,1)+R"),
            ("e6", "C"): ("e6C", "so(10,C)+C"),
            ("e7", "7"): ("e77", "e6(6)+R"),
            ("e7", "-25"): ("e7m25", "e6(-26)+R"),
            ("e7", "C"): ("e7C", "e6(C)+C"),
        }
        row = fixed.get((name, disc))
        if row:
            out.append(row)
    return out
