"""Root systems, gradings by the highest root, and restricted root data.

Two kinds of object live here:

* ``CartanType`` / complex root systems of the simple series A-G, with
  roots held as exact integer coefficient vectors in the simple-root
  basis and the bilinear form normalized so long roots have squared
  length 2.
* ``RestrictedDatum``: the restricted root system of a real form — a
  (possibly non-reduced) root system together with a multiplicity for
  each root-length class, plus flags (Hermitian type, complexification).

From either one we read off the two integers that drive everything
else: the half-dimension of the minimal complex nilpotent orbit, and
the grading profile (a, b) of the algebra under the semisimple element
dual to the highest (restricted) root, normalized to eigenvalue 2 on
the highest root space.  The ad-eigenvalues are then 0, ±1, ±2 and the
real-orbit invariant is m = a/2 + b.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .linalg import RAT, R0, R1, rat

SERIES_RANKS = {
    "A": lambda r: r >= 1,
    "B": lambda r: r >= 2,
    "C": lambda r: r >= 2,
    "D": lambda r: r >= 3,
    "E": lambda r: r in (6, 7, 8),
    "F": lambda r: r == 4,
    "G": lambda r: r == 2,
}


@dataclass(frozen=True)
class CartanType:
    series: str
    rank: int

    def __post_init__(self):
        if self.series not in SERIES_RANKS:
            raise ValueError(f"unknown series {self.series!r}")
        if not SERIES_RANKS[self.series](self.rank):
            raise ValueError(f"invalid rank {self.rank} for series {self.series}")

    def __str__(self):
        return f"{self.series}{self.rank}"


def cartan_matrix(ct: CartanType) -> list[list[int]]:
    """Cartan matrix with entries a[i][j] = <alpha_i, alpha_j^vee>."""
    r = ct.rank
    a = [[2 if i == j else 0 for j in range(r)] for i in range(r)]

    def chain(i, j):  # single bond
        a[i][j] = a[j][i] = -1

    s = ct.series
    if s == "A":
        for i in range(r - 1):
            chain(i, i + 1)
    elif s == "B":  # alpha_r short
        for i in range(r - 2):
            chain(i, i + 1)
        a[r - 2][r - 1] = -2
        a[r - 1][r - 2] = -1
    elif s == "C":  # alpha_r long
        for i in range(r - 2):
            chain(i, i + 1)
        a[r - 2][r - 1] = -1
        a[r - 1][r - 2] = -2
    elif s == "D":
        for i in range(r - 3):
            chain(i, i + 1)
        chain(r - 3, r - 2)
        chain(r - 3, r - 1)
    elif s == "G":  # alpha_1 short, alpha_2 long
        a[0][1] = -1
        a[1][0] = -3
    elif s == "F":  # alpha_1, alpha_2 long; alpha_3, alpha_4 short
        chain(0, 1)
        a[1][2] = -2
        a[2][1] = -1
        chain(2, 3)
    elif s == "E":  # Bourbaki: node 2 attached to node 4 (1-indexed)
        chain(0, 2)
        chain(1, 3)
        chain(2, 3)
        for i in range(3, r - 1):
            chain(i, i + 1)
    return a


def _root_half_lengths(ct: CartanType) -> list[RAT]:
    """d_i = (alpha_i, alpha_i)/2 with long roots normalized to length^2 = 2."""
    r = ct.rank
    s = ct.series
    if s in ("A", "D", "E"):
        return [R1] * r
    if s == "B":
        return [R1] * (r - 1) + [rat(1, 2)]
    if s == "C":
        return [rat(1, 2)] * (r - 1) + [R1]
    if s == "F":
        return [R1, R1, rat(1, 2), rat(1, 2)]
    if s == "G":
        return [rat(1, 3), R1]
    raise AssertionError


class RootSystem:
    """All roots of a simple complex Lie algebra, exactly.

    Roots are integer tuples in the simple-root basis.  The symmetric
    form is (alpha_i, alpha_j) = d_j * a_ij, long roots of squared
    length 2.
    """

    def __init__(self, ct: CartanType):
        self.ct = ct
        self.A = cartan_matrix(ct)
        self.d = _root_half_lengths(ct)
        self.roots = self._generate()

    def _generate(self) -> list[tuple[int, ...]]:
        r = self.ct.rank
        simple = [tuple(1 if i == j else 0 for j in range(r)) for i in range(r)]
        seen = set(simple)
        frontier = list(simple)
        while frontier:
            nxt = []
            for beta in frontier:
                for j in range(r):
                    # s_j(beta) = beta - <beta, alpha_j^vee> alpha_j
                    pair = sum(beta[i] * self.A[i][j] for i in range(r))
                    if pair == 0:
                        continue
                    ref = list(beta)
                    ref[j] -= pair
                    ref = tuple(ref)
                    if ref not in seen:
                        seen.add(ref)
                        nxt.append(ref)
            frontier = nxt
        return sorted(seen, reverse=True)

    def form(self, alpha, beta) -> RAT:
        r = self.ct.rank
        s = R0
        for i in range(r):
            if not alpha[i]:
                continue
            for j in range(r):
                if beta[j] and self.A[i][j]:
                    s += rat(alpha[i]) * self.d[j] * rat(self.A[i][j]) * rat(beta[j])
        return s

    def coroot_pairing(self, alpha, beta) -> RAT:
        """<alpha, beta^vee> = 2 (alpha, beta) / (beta, beta)."""
        return 2 * self.form(alpha, beta) / self.form(beta, beta)

    def positive_roots(self) -> list[tuple[int, ...]]:
        return [a for a in self.roots if sum(a) > 0]

    def highest_root(self) -> tuple[int, ...]:
        """The unique root of maximal height (non-simply-laced systems also
        have a dominant short root, so dominance alone does not pin it down)."""
        pos = self.positive_roots()
        top_height = max(sum(a) for a in pos)
        tallest = [a for a in pos if sum(a) == top_height]
        if len(tallest) != 1:
            raise ValueError(f"expected a unique root of maximal height, got {len(tallest)}")
        mu = tallest[0]
        r = self.ct.rank
        if not all(sum(mu[i] * self.A[i][j] for i in range(r)) >= 0 for j in range(r)):
            raise ValueError("maximal-height root is not dominant")
        return mu


@lru_cache(maxsize=None)
def build_root_system(series: str, rank: int) -> RootSystem:
    return RootSystem(CartanType(series, rank))


def n_complex_of_type(ct: CartanType) -> int:
    """Half the complex dimension of the minimal nilpotent orbit.

    Grade the algebra by the semisimple element dual to the highest root
    mu (eigenvalue 2 on the mu root space); the orbit of a highest root
    vector has dimension (#degree-1 roots) + 2, and the degree-1 roots
    pair to 1 with the coroot of mu.
    """
    rs = build_root_system(ct.series, ct.rank)
    mu = rs.highest_root()
    count = 0
    for alpha in rs.roots:
        p = rs.coroot_pairing(alpha, mu)
        if p == 1:
            count += 1
        elif p == 2 and alpha != mu:
            raise AssertionError("highest root space must be one-dimensional")
    if count % 2:
        raise AssertionError("degree-1 root count must be even")
    return count // 2 + 1


# ---------------------------------------------------------------------------
# restricted root data
# ---------------------------------------------------------------------------

# length classes used by the catalog, per series, shortest first
RESTRICTED_CLASSES = {
    "A": ("a",),
    "B": ("e", "ee"),
    "C": ("ee", "2e"),
    "D": ("ee",),
    "BC": ("e", "ee", "2e"),
    "E": ("a",),
    "F": ("short", "long"),
    "G": ("short", "long"),
}


@dataclass(frozen=True)
class GradingProfile:
    """Dimensions of the degree-1 and degree-2 spaces for the grading by
    the element dual to the highest restricted root (eigenvalue 2 on the
    highest root space)."""
    a: int
    b: int

    @property
    def m(self) -> RAT:
        return rat(self.a, 2) + self.b

    @property
    def rank_ad_nilpositive(self) -> int:
        """Rank of ad(X) for a highest-root nilpotent X: a + 2b."""
        return self.a + 2 * self.b


@dataclass(frozen=True)
class RestrictedDatum:
    """Restricted root system of a real form, as stored in the catalog."""
    label: str
    series: str            # A B C D BC E F G
    rank: int
    mult: dict             # class key -> multiplicity
    hermitian: bool
    cplx_series: str       # complexification Cartan type (of the simple factor)
    cplx_rank: int
    complex_form: bool     # True when the real form is itself a complex algebra
    dim_m: int | None = None   # dim of the centralizer of a in k, if recorded
    aliases: tuple = ()
    compact: bool = False

    def cartan_type(self) -> CartanType:
        return CartanType(self.cplx_series, self.cplx_rank)


def restricted_roots(series: str, rank: int):
    """All restricted roots as (vector, class_key) pairs.

    Classical series live in e-coordinates (tuples of RAT of length
    ``rank``) with the standard dot form; exceptional series reuse the
    complex root system in simple-root coordinates.
    """
    out = []
    if series in ("A", "E", "F", "G"):
        rs = build_root_system(series, rank)
        if series in ("A", "E"):
            for alpha in rs.roots:
                out.append((alpha, "a"))
        else:
            for alpha in rs.roots:
                cls = "long" if rs.form(alpha, alpha) == 2 else "short"
                out.append((alpha, cls))
        return out, ("cartan", rs)

    def e(i, c=1):
        v = [R0] * rank
        v[i] = rat(c)
        return v

    vecs = []
    if series in ("B", "BC"):
        for i in range(rank):
            vecs.append((tuple(e(i)), "e"))
            vecs.append((tuple(e(i, -1)), "e"))
    if series in ("B", "C", "D", "BC"):
        for i in range(rank):
            for j in range(i + 1, rank):
                for si in (1, -1):
                    for sj in (1, -1):
                        v = [R0] * rank
                        v[i] = rat(si)
                        v[j] = rat(sj)
                        vecs.append((tuple(v), "ee"))
    if series in ("C", "BC"):
        for i in range(rank):
            vecs.append((tuple(e(i, 2)), "2e"))
            vecs.append((tuple(e(i, -2)), "2e"))
    return vecs, ("euclid", None)


def _euclid_form(u, v) -> RAT:
    s = R0
    for a, b in zip(u, v):
        if a and b:
            s += a * b
    return s


def grading_profile(datum: RestrictedDatum) -> GradingProfile:
    """(a, b) = multiplicity sums over restricted roots of degree 1 and 2
    for the grading by the coroot of the highest restricted root."""
    roots, (kind, rs) = restricted_roots(datum.series, datum.rank)
    if not roots:
        raise ValueError(f"{datum.label}: empty restricted root system")
    if kind == "cartan":
        form = rs.form
    else:
        form = _euclid_form
    # highest root: the positive system is fixed by lexicographic order on
    # coordinates, and an irreducible system has a unique maximum, so the
    # lex-greatest root is it.
    mu = max(r for r, _ in roots)
    mumu = form(mu, mu)
    a = b = 0
    for v, cls in roots:
        m = datum.mult[cls]
        pair = 2 * form(v, mu) / mumu
        if pair == 1:
            a += m
        elif pair == 2 and v != mu:
            raise AssertionError(f"{datum.label}: second root at degree 2")
        elif v == mu:
            b += m
    if a % 2:
        raise ValueError(f"{datum.label}: odd degree-1 dimension a={a}")
    return GradingProfile(a, b)


def m_real(datum: RestrictedDatum) -> int:
    """Half the dimension of the minimal real nilpotent adjoint orbit."""
    gp = grading_profile(datum)
    m = gp.m
    if m != int(m):
        raise AssertionError("m must be integral")
    return int(m)


def n_complex(datum: RestrictedDatum) -> int:
    """Half-dimension invariant of the complexified algebra's minimal
    orbit; doubled when the real form is already complex (its
    complexification is a product of two copies)."""
    base = n_complex_of_type(datum.cartan_type())
    return 2 * base if datum.complex_form else base


CASE_ONE, CASE_TWO, CASE_THREE = "Case1", "Case2", "Case3"


def classify_case(datum: RestrictedDatum) -> str:
    """Trichotomy for a noncompact simple real form:

    Case1  — the minimal complex orbit misses the real form (m > n);
    Case2  — it meets it in one real orbit (m = n, not Hermitian);
    Case3  — it meets it in two (m = n, Hermitian type).
    """
    m = m_real(datum)
    n = n_complex(datum)
    if m > n:
        return CASE_ONE
    if m < n:
        raise AssertionError(f"{datum.label}: m < n contradicts orbit inclusion")
    return CASE_THREE if datum.hermitian else CASE_TWO


def restricted_signature(datum: RestrictedDatum):
    """Isomorphism-invariant key of the restricted datum: rank plus, per
    length class (relative to the shortest), the root count and
    multiplicity.  Used to compare catalog entries with matrix-level
    computations without fixing a basis."""
    roots, (kind, rs) = restricted_roots(datum.series, datum.rank)
    form = rs.form if kind == "cartan" else _euclid_form
    by_len: dict = {}
    for v, cls in roots:
        ln = form(v, v)
        key = str(ln)
        if key not in by_len:
            by_len[key] = [ln, 0, datum.mult[cls]]
        by_len[key][1] += 1
        if by_len[key][2] != datum.mult[cls]:
            raise AssertionError("length class with mixed multiplicity")
    min_len = min(item[0] for item in by_len.values())
    classes = sorted(
        (str(item[0] / min_len), item[1], item[2]) for item in by_len.values()
    )
    return (datum.rank, tuple(classes))
