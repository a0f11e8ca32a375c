"""Exact linear algebra over the rationals and Gaussian rationals.

Everything downstream (root systems, matrix Lie algebras, slice
certificates) reduces to row reduction of matrices whose entries are
exact rationals, so this module is deliberately small and boring:

* ``RAT`` is the rational scalar type.  ``gmpy2.mpq`` when available
  (C-speed arithmetic), else ``fractions.Fraction``.  Set
  ``EXACT_RATIONAL_PURE=1`` in the environment to force the pure-Python
  fallback; both behave identically.
* ``QQi`` is a Gaussian rational a + b*i with exact rational parts.
  All field code below is duck-typed over either scalar.
* Subspaces are kept in *reduced row echelon form* with the
  first-nonzero-pivot convention, so two equal subspaces have literally
  equal basis rows — subspace equality is syntactic.

No floats anywhere.
"""

from __future__ import annotations

import os
from typing import Iterable, Sequence

if os.environ.get("EXACT_RATIONAL_PURE") == "1":
    from fractions import Fraction as RAT
else:
    try:
        from gmpy2 import mpq as RAT  # type: ignore[no-redef]
    except ImportError:  # pragma: no cover - gmpy2 is normally present
        from fractions import Fraction as RAT  # type: ignore[no-redef]

R0 = RAT(0)
R1 = RAT(1)


def rat(a, b=None) -> RAT:
    """Exact rational from ints or a 'p/q' string."""
    if b is not None:
        return RAT(a) / RAT(b)
    if isinstance(a, str):
        if "/" in a:
            num, den = a.split("/")
            return RAT(int(num)) / RAT(int(den))
        return RAT(int(a))
    return RAT(a)


def rat_str(x) -> str:
    """Canonical 'p' or 'p/q' string (gmpy2 and Fraction already agree)."""
    return str(x)


class QQi:
    """Gaussian rational: re + im*i with exact rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if type(re) is type(R0) else RAT(re)
        self.im = im if type(im) is type(R0) else RAT(im)

    def __add__(self, o):
        o = _as_qqi(o)
        return QQi(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, o):
        o = _as_qqi(o)
        return QQi(self.re - o.re, self.im - o.im)

    def __rsub__(self, o):
        return _as_qqi(o) - self

    def __mul__(self, o):
        o = _as_qqi(o)
        return QQi(self.re * o.re - self.im * o.im,
                   self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, o):
        o = _as_qqi(o)
        d = o.re * o.re + o.im * o.im
        if not d:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return QQi((self.re * o.re + self.im * o.im) / d,
                   (self.im * o.re - self.re * o.im) / d)

    def __rtruediv__(self, o):
        return _as_qqi(o) / self

    def __neg__(self):
        return QQi(-self.re, -self.im)

    def conj(self) -> "QQi":
        return QQi(self.re, -self.im)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, o):
        o = _as_qqi(o)
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((str(self.re), str(self.im)))

    def __repr__(self):
        if not self.im:
            return rat_str(self.re)
        if not self.re:
            return f"{rat_str(self.im)}i"
        sign = "+" if self.im > 0 else "-"
        return f"{rat_str(self.re)}{sign}{rat_str(abs(self.im))}i"


def _as_qqi(x) -> QQi:
    if isinstance(x, QQi):
        return x
    return QQi(RAT(x))


QI0 = QQi(0)
QI1 = QQi(1)
QI_I = QQi(0, 1)


def qqi(re, im=0) -> QQi:
    return QQi(rat(re), rat(im))


# ---------------------------------------------------------------------------
# row reduction (field-generic: works for RAT rows and QQi rows alike)
# ---------------------------------------------------------------------------

def rref(rows: Iterable[Sequence]) -> tuple[list[list], list[int]]:
    """Reduced row echelon form with first-nonzero-pivot convention.

    Returns (nonzero rows, pivot column indices).  Deterministic: columns
    scanned left to right, the first row (in current order) with a nonzero
    entry is promoted.  Pivots are normalized to 1 and their columns are
    cleared above and below, so the output is a canonical form of the row
    space.
    """
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = -1
        for i in range(r, len(m)):
            if m[i][c]:
                pr = i
                break
        if pr < 0:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = m[r][c]
        if inv != 1:
            row = m[r]
            for j in range(c, ncols):
                if row[j]:
                    row[j] = row[j] / inv
        row_r = m[r]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                row_i = m[i]
                for j in range(c, ncols):
                    if row_r[j]:
                        row_i[j] = row_i[j] - f * row_r[j]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Iterable[Sequence]) -> int:
    return len(rref(rows)[0])


def nullspace(rows: Iterable[Sequence], ncols: int, one, zero) -> list[list]:
    """Canonical basis of {x : M x = 0} for the matrix with the given rows.

    ``one``/``zero`` supply the field constants (R1/R0 or QI1/QI0).  The
    returned basis is itself in reduced row echelon form.
    """
    red, pivots = rref(rows)
    pivset = set(pivots)
    free = [c for c in range(ncols) if c not in pivset]
    basis = []
    for f in free:
        v = [zero] * ncols
        v[f] = one
        for i, p in enumerate(pivots):
            v[p] = -red[i][f]
        basis.append(v)
    return rref(basis)[0]


def solve_right(rows: list[Sequence], b: Sequence, ncols: int, one, zero):
    """One exact solution x of M x = b, or None if inconsistent.

    Deterministic: free variables are set to zero.
    """
    aug = [list(r) + [bv] for r, bv in zip(rows, b)]
    red, pivots = rref(aug)
    x = [zero] * ncols
    for i, p in enumerate(pivots):
        if p == ncols:
            return None  # pivot in the augmented column: inconsistent
        x[p] = red[i][ncols]
    # verify (cheap, and guards against inconsistent rows below the pivots)
    for r, bv in zip(rows, b):
        s = zero
        for a, xv in zip(r, x):
            if a and xv:
                s = s + a * xv
        if s != bv:
            return None
    return x


def mat_vec(rows: list[Sequence], v: Sequence, zero):
    out = []
    for r in rows:
        s = zero
        for a, xv in zip(r, v):
            if a and xv:
                s = s + a * xv
        out.append(s)
    return out


def mat_mul(a: list[Sequence], b: list[Sequence], zero) -> list[list]:
    nb = len(b[0]) if b else 0
    bt = list(zip(*b))
    return [[_dot(row, col, zero) for col in bt] for row in a]


def _dot(u, v, zero):
    s = zero
    for x, y in zip(u, v):
        if x and y:
            s = s + x * y
    return s


def vec_add(u, v):
    return [a + b for a, b in zip(u, v)]


def vec_sub(u, v):
    return [a - b for a, b in zip(u, v)]


def vec_scale(c, u):
    return [c * a for a in u]


def is_zero_vec(u) -> bool:
    return not any(u)


# ---------------------------------------------------------------------------
# canonical subspaces
# ---------------------------------------------------------------------------

class Subspace:
    """A linear subspace of F^n held in canonical reduced row echelon form.

    Equality of subspaces is equality of the canonical rows, so it is
    syntactic and hashable.  ``field`` is "Q" for rational coordinates and
    "Qi" for Gaussian-rational ones; mixing them in binary operations is a
    bug and raises.
    """

    __slots__ = ("rows", "pivots", "ncols", "field")

    def __init__(self, rows: list[list], pivots: list[int], ncols: int, field: str):
        self.rows = tuple(tuple(r) for r in rows)
        self.pivots = tuple(pivots)
        self.ncols = ncols
        self.field = field

    @staticmethod
    def from_vectors(vecs: Iterable[Sequence], ncols: int, field: str = "Q") -> "Subspace":
        red, piv = rref(vecs)
        return Subspace(red, piv, ncols, field)

    @staticmethod
    def zero(ncols: int, field: str = "Q") -> "Subspace":
        return Subspace([], [], ncols, field)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def _consts(self):
        return (QI1, QI0) if self.field == "Qi" else (R1, R0)

    def contains(self, v: Sequence) -> bool:
        """Exact membership test via pivot elimination."""
        one, zero = self._consts()
        w = list(v)
        for row, p in zip(self.rows, self.pivots):
            c = w[p]
            if c:
                for j in range(self.ncols):
                    if row[j]:
                        w[j] = w[j] - c * row[j]
        return is_zero_vec(w)

    def coords_of(self, v: Sequence):
        """Coefficients of v against the canonical rows, or None."""
        one, zero = self._consts()
        w = list(v)
        coeffs = []
        for row, p in zip(self.rows, self.pivots):
            c = w[p]
            coeffs.append(c)
            if c:
                for j in range(self.ncols):
                    if row[j]:
                        w[j] = w[j] - c * row[j]
        if not is_zero_vec(w):
            return None
        return coeffs

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(r) for r in other.rows)

    def add(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace.from_vectors(list(self.rows) + list(other.rows),
                                     self.ncols, self.field)

    def intersect(self, other: "Subspace") -> "Subspace":
        """U ∩ V via the kernel of [U^T | -V^T]."""
        self._check(other)
        one, zero = self._consts()
        k, m = self.dim, other.dim
        if k == 0 or m == 0:
            return Subspace.zero(self.ncols, self.field)
        cols = k + m
        rows = []
        for j in range(self.ncols):
            rows.append([self.rows[i][j] for i in range(k)]
                        + [-other.rows[i][j] for i in range(m)])
        sols = nullspace(rows, cols, one, zero)
        vecs = []
        for s in sols:
            v = [zero] * self.ncols
            for i in range(k):
                if s[i]:
                    v = [a + s[i] * b for a, b in zip(v, self.rows[i])]
            vecs.append(v)
        return Subspace.from_vectors(vecs, self.ncols, self.field)

    def _check(self, other: "Subspace"):
        if self.ncols != other.ncols or self.field != other.field:
            raise ValueError("subspace dimension/field mismatch")

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.field == other.field
                and self.ncols == other.ncols and self.rows == other.rows)

    def __hash__(self):
        return hash((self.field, self.ncols,
                     tuple(tuple(repr(x) for x in r) for r in self.rows)))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ncols={self.ncols}, field={self.field})"


# ---------------------------------------------------------------------------
# ambient complex matrices with exact Gaussian-rational entries
# ---------------------------------------------------------------------------

class Mat:
    """Dense n x m matrix over QQi.  Small (ambient sizes <= ~16)."""

    __slots__ = ("rows", "n", "m")

    def __init__(self, rows):
        self.rows = [[_as_qqi(x) for x in r] for r in rows]
        self.n = len(self.rows)
        self.m = len(self.rows[0]) if self.rows else 0

    @staticmethod
    def zeros(n: int, m: int | None = None) -> "Mat":
        m = n if m is None else m
        return Mat([[QI0] * m for _ in range(n)])

    @staticmethod
    def eye(n: int) -> "Mat":
        return Mat([[QI1 if i == j else QI0 for j in range(n)] for i in range(n)])

    @staticmethod
    def unit(n: int, i: int, j: int, val=QI1) -> "Mat":
        """n x n matrix with a single entry at (i, j) (0-based)."""
        z = Mat.zeros(n)
        z.rows[i][j] = _as_qqi(val)
        return z

    def clone(self) -> "Mat":
        return Mat([list(r) for r in self.rows])

    def __add__(self, o: "Mat") -> "Mat":
        return Mat([[a + b for a, b in zip(r1, r2)]
                    for r1, r2 in zip(self.rows, o.rows)])

    def __sub__(self, o: "Mat") -> "Mat":
        return Mat([[a - b for a, b in zip(r1, r2)]
                    for r1, r2 in zip(self.rows, o.rows)])

    def __neg__(self) -> "Mat":
        return Mat([[-a for a in r] for r in self.rows])

    def scale(self, c) -> "Mat":
        c = _as_qqi(c)
        return Mat([[c * a for a in r] for r in self.rows])

    def __matmul__(self, o: "Mat") -> "Mat":
        ot = list(zip(*o.rows))
        out = []
        for r in self.rows:
            out.append([_dot(r, col, QI0) for col in ot])
        return Mat(out)

    def bracket(self, o: "Mat") -> "Mat":
        return (self @ o) - (o @ self)

    def t(self) -> "Mat":
        return Mat([list(c) for c in zip(*self.rows)])

    def conj(self) -> "Mat":
        return Mat([[a.conj() for a in r] for r in self.rows])

    def h(self) -> "Mat":
        """Conjugate transpose."""
        return Mat([[a.conj() for a in c] for c in zip(*self.rows)])

    def trace(self) -> QQi:
        s = QI0
        for i in range(min(self.n, self.m)):
            s = s + self.rows[i][i]
        return s

    def is_zero(self) -> bool:
        return all(not x for r in self.rows for x in r)

    def __eq__(self, o):
        return isinstance(o, Mat) and self.rows == o.rows

    def __hash__(self):
        return hash(tuple(tuple(repr(x) for x in r) for r in self.rows))

    def vectorize_real(self) -> list:
        """Flatten to 2*n*m rational coordinates (all re parts, then im)."""
        out = [x.re for r in self.rows for x in r]
        out += [x.im for r in self.rows for x in r]
        return out

    def entries_str(self) -> list[list[str]]:
        return [[repr(x) for x in r] for r in self.rows]

    def __repr__(self):
        return "Mat(" + "; ".join(" ".join(repr(x) for x in r) for r in self.rows) + ")"


def mat_exp_nilpotent(n: Mat, max_pow: int | None = None) -> Mat:
    """exp(n) for a nilpotent matrix, as an exact finite sum.

    Raises ValueError if n is not nilpotent (so callers cannot silently
    exponentiate something non-polynomial).
    """
    size = n.n
    limit = max_pow if max_pow is not None else size
    acc = Mat.eye(size)
    term = Mat.eye(size)
    k = 0
    while True:
        term = term @ n
        k += 1
        if term.is_zero():
            return acc
        if k > limit:
            raise ValueError("matrix is not nilpotent")
        term = term.scale(QQi(R1 / RAT(k)))
        acc = acc + term


def conjugate(g: Mat, x: Mat, g_inv: Mat) -> Mat:
    """Ad(g) x = g x g^{-1} with the inverse supplied by the caller."""
    return (g @ x) @ g_inv


def mat_inverse(a: Mat) -> Mat:
    """Exact inverse via Gauss-Jordan; raises on singular input."""
    n = a.n
    aug = [list(a.rows[i]) + list(Mat.eye(n).rows[i]) for i in range(n)]
    red, piv = rref(aug)
    if piv[:n] != list(range(n)):
        raise ValueError("singular matrix")
    return Mat([row[n:] for row in red[:n]])
