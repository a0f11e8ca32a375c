"""Exact matrix models of the classical noncompact real Lie algebras.

Seven families carry matrix models, all inside gl(N, C) with Gaussian-rational
entries and the global Cartan involution theta(X) = -X^H:

  sl(n,R)   real traceless
  su(p,q)   K-anti-Hermitian traceless, K = diag(I_p, -I_q)
  su*(2n)   J-quaternionic traceless, J = [[0,I],[-I,0]]
  so(p,q)   real K-antisymmetric
  so*(2n)   S-antisymmetric and K-anti-Hermitian, S = [[0,I],[I,0]]
  sp(n,R)   real J-symplectic
  sp(p,q)   J-quaternionic and K-anti-Hermitian, K = diag(e,e), e=(1^p,-1^q)

Bases are computed as exact nullspaces of the defining real-linear conditions,
so each model is correct by construction; everything downstream (Killing
forms, restricted-root decompositions, highest-root sl2 triples, centralizers,
orthocomplements) is exact rational/Gaussian-rational linear algebra with
hard-failing certificates (eigenspace dimensions must sum to the dimension,
triples must bracket exactly, and so on).

Exceptional and complex-field labels have no matrix model here and raise
NoMatrixModel; they are handled by table routes only.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from typing import Optional

from . import linalg as la
from .linalg import (
    Mat, QQi, Subspace, qqi, rat, mat_vec, nullspace, solve_right, R0, R1,
    QI0, QI1,
)
from .catalog import parse_label


class NoMatrixModel(ValueError):
    """Requested label has no classical matrix model (table-only entry)."""


MATRIX_FAMILIES = ("slR", "su", "sustar", "so", "sostar", "spR", "sp")


# ---------------------------------------------------------------------------
# small exact polynomial helpers (coefficients low -> high, RAT entries)
# ---------------------------------------------------------------------------

def _poly_trim(p):
    while p and not p[-1]:
        p.pop()
    return p


def _poly_mul(p, q):
    out = [R0] * (len(p) + len(q) - 1) if p and q else []
    for i, a in enumerate(p):
        if not a:
            continue
        for j, b in enumerate(q):
            if b:
                out[i + j] = out[i + j] + a * b
    return _poly_trim(out)


def _poly_divmod(p, q):
    p = list(p)
    out = [R0] * (max(len(p) - len(q) + 1, 0))
    lead = q[-1]
    while len(p) >= len(q) and p:
        c = p[-1] / lead
        k = len(p) - len(q)
        out[k] = c
        for i, b in enumerate(q):
            p[k + i] = p[k + i] - c * b
        _poly_trim(p)
    return _poly_trim(out), p


def _poly_gcd(p, q):
    p, q = list(p), list(q)
    while q:
        _, r = _poly_divmod(p, q)
        p, q = q, r
    if p:
        lead = p[-1]
        p = [c / lead for c in p]
    return p


def _poly_lcm(p, q):
    if not p:
        return list(q)
    if not q:
        return list(p)
    g = _poly_gcd(p, q)
    quo, rem = _poly_divmod(_poly_mul(p, q), g)
    assert not rem
    lead = quo[-1]
    return [c / lead for c in quo]


def _poly_eval(p, x):
    acc = R0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _rational_roots(p):
    """All distinct rational roots of a nonzero polynomial, exact."""
    import math
    p = list(p)
    roots = []
    if len(p) > 1 and not p[0]:
        roots.append(R0)   # x | p; nonzero-root candidates are unaffected
    # integerize: candidates are (divisor of lowest nonzero)/(divisor of lead)
    L = 1
    for c in p:
        d = int(c.denominator)
        L = L * d // math.gcd(L, d)
    ip = [int(c * L) for c in p]
    if len(ip) <= 1:
        return sorted(set(roots), key=str)

    def divisors(k):
        k = abs(k)
        out = set()
        i = 1
        while i * i <= k:
            if k % i == 0:
                out.add(i)
                out.add(k // i)
            i += 1
        return out

    a0 = next((c for c in ip if c != 0), 0)
    an = ip[-1]
    if a0 == 0 or an == 0:
        cand = set()
    else:
        cand = {rat(s * num, den)
                for num in divisors(a0) for den in divisors(an)
                for s in (1, -1)}
    cand.add(R0)
    for r in cand:
        if _poly_eval(p, r) == R0:
            roots.append(r)
    return sorted(set(roots), key=lambda x: (x < R0, abs(x), str(x)))


# ---------------------------------------------------------------------------
# coordinate-space utilities (vectors are coords in an algebra's basis)
# ---------------------------------------------------------------------------

def _op_apply(op_rows, vec, zero=R0):
    return mat_vec(op_rows, vec, zero)


def _op_restrict(op_rows, sub: Subspace):
    """Matrix of a sub-invariant operator in the subspace's echelon basis.

    Raises ValueError if the operator does not preserve the subspace.
    """
    zero = R0 if sub.field == "Q" else QI0
    cols = []
    for row in sub.rows:
        img = _op_apply(op_rows, list(row), zero)
        c = sub.coords_of(img)
        if c is None:
            raise ValueError("operator does not preserve the subspace")
        cols.append(c)
    d = sub.dim
    return [[cols[j][i] for j in range(d)] for i in range(d)]


def _minimal_polynomial(M, d):
    """Minimal polynomial of a d x d rational matrix, exact Krylov."""
    ann = [R1]  # polynomial "1"
    for seed in range(d):
        # annihilator of e_seed under M
        v = [R0] * d
        v[seed] = R1
        # reduce v by current annihilator first: ann(M) v
        w = list(v)
        acc = [R0] * d
        # evaluate ann(M) v by Horner: acc = ann[k] v + M acc
        acc = [c * ann[-1] for c in v]
        for c in reversed(ann[:-1]):
            acc = _op_apply(M, acc)
            acc = [a + c * b for a, b in zip(acc, v)]
        if la.is_zero_vec(acc):
            continue
        krylov = [list(v)]
        span = Subspace.from_vectors([v], d, "Q")
        while True:
            nxt = _op_apply(M, krylov[-1])
            coeffs = span.coords_of(nxt)
            if coeffs is not None:
                # nxt = sum coeffs_i * (echelon rows); convert to coeffs
                # against the raw krylov chain by solving directly
                rows = [[krylov[i][j] for i in range(len(krylov))]
                        for j in range(d)]
                sol = solve_right(rows, nxt, len(krylov), R1, R0)
                assert sol is not None
                poly = [-c for c in sol] + [R1]
                ann = _poly_lcm(ann, poly)
                break
            krylov.append(nxt)
            span = span.add(Subspace.from_vectors([nxt], d, "Q"))
        if len(ann) - 1 == d:
            break
    return ann


def eig_split(op_rows, sub: Subspace):
    """Exact eigendecomposition of an operator on an invariant subspace.

    Requires the restriction to be semisimple with rational eigenvalues;
    raises ValueError otherwise.  Returns [(eigenvalue, eigenspace)] with
    eigenspaces in ambient coordinates, and certifies that the eigenspace
    dimensions sum to the subspace dimension.
    """
    assert sub.field == "Q", "eigensplitting is rational-only"
    d = sub.dim
    if d == 0:
        return []
    M = _op_restrict(op_rows, sub)
    mp = _minimal_polynomial(M, d)
    roots = _rational_roots(mp)
    pieces = []
    total = 0
    for t in roots:
        shifted = [[M[i][j] - (t if i == j else R0) for j in range(d)]
                   for i in range(d)]
        null = nullspace(shifted, d, R1, R0)
        if not null:
            continue
        vecs = []
        for coeffs in null:
            v = [R0] * sub.ncols
            for c, row in zip(coeffs, sub.rows):
                if c:
                    v = [a + c * b for a, b in zip(v, row)]
            vecs.append(v)
        sp = Subspace.from_vectors(vecs, sub.ncols, sub.field)
        total += sp.dim
        pieces.append((t, sp))
    if total != d:
        raise ValueError(
            f"operator is not split-semisimple over Q: eigenspaces cover "
            f"{total} of {d} dimensions (minimal polynomial degree {len(mp)-1})")
    return pieces


def joint_weight_split(ops, whole: Subspace):
    """Simultaneous eigendecomposition for a commuting family of operators.

    Returns [(weight_tuple, Subspace)] sorted by weight, with the certified
    property that the dimensions sum to dim(whole).
    """
    pieces = [((), whole)]
    for op in ops:
        nxt = []
        for w, sp in pieces:
            for val, sub in eig_split(op, sp):
                nxt.append((w + (val,), sub))
        pieces = nxt
    assert sum(sp.dim for _, sp in pieces) == whole.dim
    return sorted(pieces, key=lambda t: t[0])


# ---------------------------------------------------------------------------
# the models
# ---------------------------------------------------------------------------

def _model_conditions(family, params):
    """(matrix size N, list of real-linear matrix conditions, form mats).

    Each condition is a function Mat -> Mat that must vanish identically on
    the algebra; traces are encoded as 1x1 matrices.
    """
    if family == "slR":
        (n,) = params
        if n < 2:
            raise NoMatrixModel("sl(n,R) needs n >= 2")
        conds = [lambda X: X - X.conj(), lambda X: Mat([[X.trace()]])]
        return n, conds, {}
    if family == "su":
        p, q = params
        if q < 1 or p < q:
            raise NoMatrixModel("su(p,q) model needs p >= q >= 1")
        N = p + q
        K = _diag_pm(p, q)
        conds = [lambda X: X.h() @ K + K @ X, lambda X: Mat([[X.trace()]])]
        return N, conds, {"K": K}
    if family == "sustar":
        (two_n,) = params
        if two_n < 4 or two_n % 2:
            raise NoMatrixModel("su*(2n) needs even size >= 4")
        n = two_n // 2
        J = _sympl_j(n)
        conds = [lambda X: X @ J - J @ X.conj(), lambda X: Mat([[X.trace()]])]
        return two_n, conds, {"J": J}
    if family == "so":
        p, q = params
        if p + q < 3 or q < 0 or p < q:
            raise NoMatrixModel("so(p,q) model needs p >= q and p+q >= 3")
        K = _diag_pm(p, q)
        conds = [lambda X: X - X.conj(), lambda X: X.t() @ K + K @ X]
        return p + q, conds, {"K": K}
    if family == "sostar":
        (two_n,) = params
        if two_n < 6 or two_n % 2:
            raise NoMatrixModel("so*(2n) model needs even size >= 6")
        n = two_n // 2
        S = _swap_s(n)
        K = _diag_pm(n, n)
        conds = [lambda X: X.t() @ S + S @ X, lambda X: X.h() @ K + K @ X]
        return two_n, conds, {"S": S, "K": K}
    if family == "spR":
        (n,) = params
        if n < 1:
            raise NoMatrixModel("sp(n,R) needs n >= 1")
        J = _sympl_j(n)
        conds = [lambda X: X - X.conj(), lambda X: X.t() @ J + J @ X]
        return 2 * n, conds, {"J": J}
    if family == "sp":
        p, q = params
        if q < 1 or p < q:
            raise NoMatrixModel("sp(p,q) model needs p >= q >= 1")
        N = p + q
        J = _sympl_j(N)
        eps = [QI1] * p + [-QI1] * q
        K = Mat.zeros(2 * N)
        for i in range(N):
            K.rows[i][i] = eps[i]
            K.rows[N + i][N + i] = eps[i]
        conds = [lambda X: X @ J - J @ X.conj(), lambda X: X.h() @ K + K @ X]
        return 2 * N, conds, {"J": J, "K": K}
    raise NoMatrixModel(f"unknown matrix family {family!r}")


def _diag_pm(p, q):
    N = p + q
    return Mat([[ (QI1 if i < p else -QI1) if i == j else QI0
                  for j in range(N)] for i in range(N)])


def _sympl_j(n):
    J = Mat.zeros(2 * n)
    for i in range(n):
        J.rows[i][n + i] = QI1
        J.rows[n + i][i] = -QI1
    return J


def _swap_s(n):
    S = Mat.zeros(2 * n)
    for i in range(n):
        S.rows[i][n + i] = QI1
        S.rows[n + i][i] = QI1
    return S


def _devectorize(vec, N):
    rows = []
    for i in range(N):
        row = []
        for j in range(N):
            k = i * N + j
            row.append(QQi(vec[k], vec[N * N + k]))
        rows.append(row)
    return Mat(rows)


def _split_a_seeds(family, params, N):
    """Standard commuting p-elements, tried first by the greedy Cartan
    subspace search so that restricted weights come out integral."""
    seeds = []

    def unit_sym(i, j, n):
        m = Mat.zeros(n)
        m.rows[i][j] = QI1
        m.rows[j][i] = QI1
        return m

    if family == "slR":
        (n,) = params
        for i in range(n - 1):
            m = Mat.zeros(n)
            m.rows[i][i] = QI1
            m.rows[i + 1][i + 1] = -QI1
            seeds.append(m)
    elif family in ("su", "so"):
        p, q = params
        for i in range(q):
            seeds.append(unit_sym(i, p + i, p + q))
    elif family == "sustar":
        n = params[0] // 2
        for i in range(n - 1):
            m = Mat.zeros(2 * n)
            for off in (0, n):
                m.rows[off + i][off + i] = QI1
                m.rows[off + i + 1][off + i + 1] = -QI1
            seeds.append(m)
    elif family == "sostar":
        n = params[0] // 2
        for j in range(n // 2):
            m = Mat.zeros(2 * n)
            a, b = 2 * j, 2 * j + 1
            m.rows[a][n + b] = QI1
            m.rows[b][n + a] = -QI1
            m.rows[n + b][a] = QI1
            m.rows[n + a][b] = -QI1
            seeds.append(m)
    elif family == "spR":
        (n,) = params
        for i in range(n):
            m = Mat.zeros(2 * n)
            m.rows[i][n + i] = QI1
            m.rows[n + i][i] = QI1
            seeds.append(m)
    elif family == "sp":
        p, q = params
        N2 = p + q
        for i in range(q):
            m = Mat.zeros(2 * N2)
            for off in (0, N2):
                m.rows[off + i][off + p + i] = QI1
                m.rows[off + p + i][off + i] = QI1
            seeds.append(m)
    return seeds


class MatrixAlgebra:
    """A real Lie algebra of exact complex matrices, with coordinates.

    Subspaces are represented in the algebra's basis coordinates: field "Q"
    for real subspaces, "Qi" for subspaces of the complexification (same
    basis, Gaussian-rational coefficients).
    """

    def __init__(self, label, family, params, N, basis, forms, factors=None):
        self.label = label
        self.family = family
        self.params = params
        self.N = N
        self.basis = basis
        self.forms = forms
        self.factors = factors
        self.dim = len(basis)
        self._ambient = Subspace.from_vectors(
            [b.vectorize_real() for b in basis], 2 * N * N, "Q")
        assert self._ambient.dim == self.dim
        # canonicalize the basis to the echelon representatives
        self.basis = [_devectorize(list(r), N) for r in self._ambient.rows]
        self._ad_cache = {}
        self._gram = None
        self._k_sub = None
        self._p_sub = None

    # -- element/coordinate plumbing ---------------------------------------

    def whole(self, field="Q") -> Subspace:
        one = R1 if field == "Q" else QI1
        zero = R0 if field == "Q" else QI0
        rows = [[one if i == j else zero for j in range(self.dim)]
                for i in range(self.dim)]
        return Subspace.from_vectors(rows, self.dim, field)

    def contains_mat(self, m: Mat) -> bool:
        return self._ambient.contains(m.vectorize_real())

    def coords(self, m: Mat):
        c = self._ambient.coords_of(m.vectorize_real())
        if c is None:
            raise ValueError(f"matrix is not in {self.label}")
        return c

    def mat(self, coords) -> Mat:
        acc = Mat.zeros(self.N)
        for c, b in zip(coords, self.basis):
            if c:
                acc = acc + b.scale(c)
        return acc

    def mats_of(self, sub: Subspace):
        return [self.mat(list(r)) for r in sub.rows]

    def subspace(self, mats, field="Q") -> Subspace:
        vecs = [self.coords(m) for m in mats]
        if field == "Qi":
            vecs = [[_as_qi(c) for c in v] for v in vecs]
        return Subspace.from_vectors(vecs, self.dim, field)

    def theta_mat(self, m: Mat) -> Mat:
        return -(m.h())

    # -- structure ----------------------------------------------------------

    def ad_rows(self, X: Mat):
        """dim x dim rational matrix of ad(X) in basis coordinates."""
        cols = [self.coords(X.bracket(b)) for b in self.basis]
        return [[cols[j][i] for j in range(self.dim)]
                for i in range(self.dim)]

    def ad_rows_coords(self, vec, field="Q"):
        """ad of a coordinate vector (rational or Gaussian-rational)."""
        zero = R0 if field == "Q" else QI0
        sparse = self._ad_sparse_basis()
        d = self.dim
        out = [[zero] * d for _ in range(d)]
        for k, c in enumerate(vec):
            if not c:
                continue
            for (i, j), v in sparse[k].items():
                out[i][j] = out[i][j] + c * v
        return out

    def _ad_sparse_basis(self):
        if "adb" not in self._ad_cache:
            sparse = []
            for b in self.basis:
                rows = self.ad_rows(b)
                nz = {}
                for i, row in enumerate(rows):
                    for j, vv in enumerate(row):
                        if vv:
                            nz[(i, j)] = vv
                sparse.append(nz)
            self._ad_cache["adb"] = sparse
        return self._ad_cache["adb"]

    def killing_gram(self):
        """Gram matrix of the Killing form B(x,y) = tr(ad x ad y)."""
        if self._gram is None:
            sparse = self._ad_sparse_basis()
            d = self.dim
            G = [[R0] * d for _ in range(d)]
            for i in range(d):
                for j in range(i, d):
                    s = R0
                    for (a, b), v in sparse[i].items():
                        w = sparse[j].get((b, a))
                        if w:
                            s = s + v * w
                    G[i][j] = s
                    G[j][i] = s
            self._gram = G
        return self._gram

    def killing(self, X: Mat, Y: Mat):
        cx, cy = self.coords(X), self.coords(Y)
        G = self.killing_gram()
        return la._dot(cx, mat_vec(G, cy, R0), R0)

    @property
    def k_sub(self) -> Subspace:
        if self._k_sub is None:
            self._split_theta()
        return self._k_sub

    @property
    def p_sub(self) -> Subspace:
        if self._p_sub is None:
            self._split_theta()
        return self._p_sub

    def _split_theta(self):
        d = self.dim
        T = [self.coords(self.theta_mat(b)) for b in self.basis]
        rows_minus = [[T[j][i] - (R1 if i == j else R0) for j in range(d)]
                      for i in range(d)]
        rows_plus = [[T[j][i] + (R1 if i == j else R0) for j in range(d)]
                     for i in range(d)]
        k = nullspace(rows_minus, d, R1, R0)
        p = nullspace(rows_plus, d, R1, R0)
        self._k_sub = Subspace.from_vectors(k, d, "Q")
        self._p_sub = Subspace.from_vectors(p, d, "Q")
        assert self._k_sub.dim + self._p_sub.dim == d

    # -- generic subspace operations ----------------------------------------

    def centralizer(self, mats, within: Optional[Subspace] = None,
                    field="Q") -> Subspace:
        """{x : [x, m] = 0 for all m} as a coordinate subspace."""
        one, zero = (QI1, QI0) if field == "Qi" else (R1, R0)
        rows = []
        for m in mats:
            ad = self.ad_rows(m)
            for r in ad:
                if field == "Qi":
                    rows.append([_as_qi(c) for c in r])
                else:
                    rows.append(list(r))
        if not rows:
            sol = self.whole(field)
        else:
            sol = Subspace.from_vectors(
                nullspace(rows, self.dim, one, zero), self.dim, field)
        if within is not None:
            sol = sol.intersect(within)
        return sol

    def orthocomplement(self, sub: Subspace,
                        within: Optional[Subspace] = None) -> Subspace:
        """Killing-orthogonal complement (inside `within` if given)."""
        field = sub.field
        one, zero = (QI1, QI0) if field == "Qi" else (R1, R0)
        G = self.killing_gram()
        rows = []
        for r in sub.rows:
            row = mat_vec(G, list(r), zero)
            if field == "Qi":
                row = [_as_qi(c) for c in row]
            rows.append(row)
        if not rows:
            sol = self.whole(field)
        else:
            sol = Subspace.from_vectors(
                nullspace(rows, self.dim, one, zero), self.dim, field)
        if within is not None:
            sol = sol.intersect(within)
        return sol

    def bracket_image(self, X: Mat, sub: Subspace) -> Subspace:
        """[X, sub] as a coordinate subspace (same field as sub)."""
        ad = self.ad_rows(X)
        zero = R0 if sub.field == "Q" else QI0
        if sub.field == "Qi":
            ad = [[_as_qi(c) for c in r] for r in ad]
        vecs = [mat_vec(ad, list(r), zero) for r in sub.rows]
        return Subspace.from_vectors(vecs, self.dim, sub.field)

    def complexify(self, sub: Subspace) -> Subspace:
        assert sub.field == "Q"
        rows = [[_as_qi(c) for c in r] for r in sub.rows]
        return Subspace.from_vectors(rows, self.dim, "Qi")

    def closure_check(self):
        """Certify bracket closure and theta stability of the model."""
        for i, b in enumerate(self.basis):
            if not self.contains_mat(self.theta_mat(b)):
                raise AssertionError(f"{self.label}: theta leaves the model")
            for b2 in self.basis[i:]:
                if not self.contains_mat(b.bracket(b2)):
                    raise AssertionError(f"{self.label}: bracket not closed")
        return True

    def __repr__(self):
        return f"MatrixAlgebra({self.label}, dim={self.dim}, N={self.N})"


def _as_qi(c):
    return c if isinstance(c, QQi) else QQi(c)


@lru_cache(maxsize=None)
def construct_classical(label: str) -> MatrixAlgebra:
    """Build the matrix model for a classical real simple algebra label.

    Product labels like "sl(2,R)xsl(2,R)" build block-diagonal products.
    Exceptional, complex-field, and compact labels raise NoMatrixModel.
    """
    stripped = label.replace(" ", "")
    if "x" in stripped:
        parts = stripped.split("x")
        algs = [construct_classical(p) for p in parts]
        prod = algs[0]
        for nxt in algs[1:]:
            prod = product_algebra(prod, nxt)
        return prod
    parsed = parse_label(stripped)
    if parsed is None:
        raise NoMatrixModel(f"label {label!r} does not parse; "
                            f"no matrix model")
    fam, params = parsed
    if fam in ("su", "so", "sp", "u") and params[0] < params[1]:
        params = (params[1], params[0])
    if fam in ("slC", "spC", "soC", "exc", "abelian"):
        raise NoMatrixModel(
            f"{label}: no matrix model for this entry (table-only); "
            f"matrix families are sl(n,R), su(p,q), su*(2n), so(p,q), "
            f"so*(2n), sp(n,R), sp(p,q)")
    if fam in ("su", "so", "sp", "u") and params[1] == 0:
        raise NoMatrixModel(f"{label}: compact form, no noncompact model")
    if fam == "u":
        raise NoMatrixModel(f"{label}: not a simple-algebra label")
    if fam == "so" and params == (2, 2):
        raise NoMatrixModel("so(2,2) is not simple; use sl(2,R)xsl(2,R)")
    if fam == "sostar" and params[0] < 6:
        raise NoMatrixModel("so*(2n) is simple only for 2n >= 6")
    N, conds, forms = _model_conditions(fam, params)
    # build the basis as the exact solution space of the defining conditions
    ncoords = 2 * N * N
    unit_mats = []
    for k in range(ncoords):
        v = [R0] * ncoords
        v[k] = R1
        unit_mats.append(_devectorize(v, N))
    rows = []
    for k, um in enumerate(unit_mats):
        col = []
        for cond in conds:
            out = cond(um)
            col.extend(out.vectorize_real())
        rows.append(col)
    # rows[k] is the image of coordinate k; constraints are columns
    constraint_rows = [[rows[k][j] for k in range(ncoords)]
                       for j in range(len(rows[0]))]
    basis_vecs = nullspace(constraint_rows, ncoords, R1, R0)
    basis = [_devectorize(list(v), N) for v in basis_vecs]
    if not basis:
        raise NoMatrixModel(f"{label}: empty model")
    alg = MatrixAlgebra(stripped, fam, params, N, basis, forms)
    return alg


def product_algebra(a: MatrixAlgebra, b: MatrixAlgebra) -> MatrixAlgebra:
    """Block-diagonal product of two matrix algebras."""
    N = a.N + b.N
    basis = []
    for m in a.basis:
        big = Mat.zeros(N)
        for i in range(a.N):
            for j in range(a.N):
                big.rows[i][j] = m.rows[i][j]
        basis.append(big)
    for m in b.basis:
        big = Mat.zeros(N)
        for i in range(b.N):
            for j in range(b.N):
                big.rows[a.N + i][a.N + j] = m.rows[i][j]
        basis.append(big)
    return MatrixAlgebra(f"{a.label}x{b.label}", "product",
                         (a.params, b.params), N, basis, {},
                         factors=(a, b))


def diagonal_subalgebra(prod: MatrixAlgebra) -> Subspace:
    """diag(g) inside a product g x g (factors must agree)."""
    a, b = prod.factors
    assert a.label == b.label and a.N == b.N
    mats = []
    for m in a.basis:
        big = Mat.zeros(prod.N)
        for i in range(a.N):
            for j in range(a.N):
                big.rows[i][j] = m.rows[i][j]
                big.rows[a.N + i][a.N + j] = m.rows[i][j]
        mats.append(big)
    return prod.subspace(mats)


# ---------------------------------------------------------------------------
# restricted-root decomposition
# ---------------------------------------------------------------------------

@dataclass
class RestrictedDecomposition:
    alg: MatrixAlgebra
    a_mats: list                       # basis of the Cartan subspace in p
    a_gram: list                       # Killing Gram on that basis
    weight_spaces: dict                # weight tuple -> Subspace (nonzero wts)
    zero_space: Subspace               # g_0 = m + a
    m_sub: Subspace                    # centralizer of a inside k
    a_sub: Subspace = dc_field(default=None)

    @property
    def rank(self):
        return len(self.a_mats)

    def weights(self):
        return sorted(self.weight_spaces)

    def dual_pairing(self, w1, w2):
        """(w1, w2) via the inverse Killing Gram on the Cartan subspace."""
        r = self.rank
        sol = solve_right(self.a_gram, list(w2), r, R1, R0)
        assert sol is not None
        return la._dot(list(w1), sol, R0)

    def coroot_pairing(self, lam, mu):
        """<lam, mu^vee> = 2 (lam, mu) / (mu, mu)."""
        return 2 * self.dual_pairing(lam, mu) / self.dual_pairing(mu, mu)

    def signature(self):
        """(rank, sorted (relative length, root count, multiplicity))."""
        by_len = {}
        for w, sp in self.weight_spaces.items():
            ln = self.dual_pairing(w, w)
            key = str(ln)
            if key not in by_len:
                by_len[key] = [ln, 0, sp.dim]
            by_len[key][1] += 1
            if by_len[key][2] != sp.dim:
                raise AssertionError("length class with mixed multiplicity")
        min_len = min(v[0] for v in by_len.values())
        classes = sorted((str(v[0] / min_len), v[1], v[2])
                         for v in by_len.values())
        return (self.rank, tuple(classes))

    def weight_mult(self, w):
        return self.weight_spaces[w].dim


def _greedy_cartan_subspace(alg: MatrixAlgebra, within: Subspace,
                            seeds=None):
    """Deterministic maximal abelian subspace of `within` (subset of p).

    Seeded candidates are tried first; afterwards the echelon basis rows of
    the current centralizer are scanned.  Terminates when the centralizer of
    the span inside `within` equals the span (certified maximality).
    """
    a_mats = []
    span = Subspace.zero(alg.dim, "Q")
    seeds = list(seeds or [])
    while True:
        cz = alg.centralizer(a_mats, within=within) if a_mats else within
        if cz.dim == span.dim:
            break
        cand = None
        for s in seeds:
            cs = alg.coords(s)
            if cz.contains(cs) and not span.contains(cs):
                cand = cs
                break
        if cand is None:
            for row in cz.rows:
                if not span.contains(list(row)):
                    cand = list(row)
                    break
        assert cand is not None
        a_mats.append(alg.mat(cand))
        span = span.add(Subspace.from_vectors([cand], alg.dim, "Q"))
    return a_mats, span


def restricted_decomposition(alg: MatrixAlgebra) -> RestrictedDecomposition:
    """Joint ad-eigenspace decomposition for a maximal split Cartan subspace.

    Certifies: the subspace is maximal abelian in p, all ad-eigenvalues are
    rational, eigenspace dimensions sum to dim g, and g_0 = m + a exactly.
    """
    seeds = _split_a_seeds(alg.family, alg.params, alg.N)
    a_mats, a_span = _greedy_cartan_subspace(alg, alg.p_sub, seeds)
    assert a_mats, f"{alg.label}: empty split Cartan subspace"
    ops = [alg.ad_rows(A) for A in a_mats]
    pieces = joint_weight_split(ops, alg.whole())
    weight_spaces = {}
    zero_space = None
    for w, sp in pieces:
        if any(w):
            weight_spaces[w] = sp
        else:
            zero_space = sp
    assert zero_space is not None
    m_sub = zero_space.intersect(alg.k_sub)
    assert m_sub.dim + len(a_mats) == zero_space.dim, \
        f"{alg.label}: g_0 != m + a"
    G = alg.killing_gram()
    r = len(a_mats)
    coords = [alg.coords(A) for A in a_mats]
    a_gram = [[la._dot(coords[i], mat_vec(G, coords[j], R0), R0)
               for j in range(r)] for i in range(r)]
    return RestrictedDecomposition(
        alg=alg, a_mats=a_mats, a_gram=a_gram, weight_spaces=weight_spaces,
        zero_space=zero_space, m_sub=m_sub, a_sub=a_span)


# ---------------------------------------------------------------------------
# highest-root sl2 triple and the associated grading
# ---------------------------------------------------------------------------

@dataclass
class HighestSL2:
    alg: MatrixAlgebra
    rdec: RestrictedDecomposition
    mu: tuple                  # the highest restricted root (weight tuple)
    X: Mat                     # weight-mu nilpotent
    Y: Mat                     # weight -mu partner with [X, Y] = A
    A: Mat                     # coroot-normalized semisimple, mu(A) = 2
    levels: dict               # ad(A) eigenvalue (int) -> Subspace

    def grading_dims(self):
        return {k: v.dim for k, v in sorted(self.levels.items())}


def highest_restricted_root(rdec: RestrictedDecomposition,
                            weight_key=None):
    """The lexicographically largest weight; with the default key this is
    the highest root of the positive system defined by that order."""
    key = weight_key or (lambda w: w)
    return max(rdec.weights(), key=key)


def highest_sl2(alg: MatrixAlgebra,
                rdec: Optional[RestrictedDecomposition] = None,
                weight_key=None) -> HighestSL2:
    rdec = rdec or restricted_decomposition(alg)
    mu = highest_restricted_root(rdec, weight_key)
    r = rdec.rank
    # A = Killing-dual coroot of mu inside the Cartan subspace
    h_coeffs = solve_right(rdec.a_gram, list(mu), r, R1, R0)
    assert h_coeffs is not None
    mumu = rdec.dual_pairing(mu, mu)
    scale = 2 / mumu
    A = Mat.zeros(alg.N)
    for c, Am in zip(h_coeffs, rdec.a_mats):
        if c:
            A = A + Am.scale(c * scale)
    # X = first canonical basis vector of the mu weight space
    Xsp = rdec.weight_spaces[mu]
    X = alg.mat(list(Xsp.rows[0]))
    assert A.bracket(X) == X.scale(rat(2)), "mu(A) != 2 on X"
    # Y solved inside the -mu weight space from [X, Y] = A
    neg = tuple(-c for c in mu)
    Ysp = rdec.weight_spaces[neg]
    cols = [alg.coords(X.bracket(alg.mat(list(row)))) for row in Ysp.rows]
    rows = [[cols[j][i] for j in range(len(cols))] for i in range(alg.dim)]
    sol = solve_right(rows, alg.coords(A), len(cols), R1, R0)
    assert sol is not None, f"{alg.label}: no sl2 partner for the highest root"
    Y = Mat.zeros(alg.N)
    for c, row in zip(sol, Ysp.rows):
        if c:
            Y = Y + alg.mat(list(row)).scale(c)
    assert X.bracket(Y) == A
    assert A.bracket(Y) == Y.scale(rat(-2))
    # the grading by ad(A): eigenvalues must be integers in [-2, 2]
    levels = {}
    for val, sp in eig_split(alg.ad_rows(A), alg.whole()):
        iv = int(val)
        assert iv == val and -2 <= iv <= 2, \
            f"{alg.label}: ad(A) eigenvalue {val} outside [-2,2]"
        levels[iv] = sp
    return HighestSL2(alg=alg, rdec=rdec, mu=mu, X=X, Y=Y, A=A,
                      levels=levels)
