"""Decision engine: which bounded-multiplicity certificates apply to a pair.

For a symmetric pair (g, g') — or a tensor-product query on a single g —
every applicable certification route is evaluated:

  complex-spherical   the complexified pair is strongly spherical
                      (type-A minus a gl corner, or an orthogonal pair
                      dropping one dimension), so every representation
                      restricts with uniformly bounded multiplicity
  highest-weight      the ambient algebra is Hermitian; holomorphic-type
                      modules restrict boundedly to any symmetric subalgebra
  para-hermitian      the ambient algebra carries a para-Hermitian
                      polarization; degenerate-principal-series witness
  minimal-orbit       a representation attaining the complex minimal-orbit
                      half-dimension exists (no exclusion rule matches)
  small-rep           the highest restricted root changes sign under the
                      involution AND a witness representation attaining the
                      real minimal-orbit half-dimension is registered

Tensor-product routes carry a "-tensor" suffix and need no sign condition.
Every condition records provenance: "computed" when re-derived from the
matrix model or root data in this run, "table" when read from the catalog.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
import re
from typing import Optional

from . import catalog as cata
from .catalog import Catalog, parse_label, canonical_sum_label, label_dim
from . import pairs as pr

ROUTE_BB = "complex-spherical"
ROUTE_HW = "highest-weight"
ROUTE_PARA = "para-hermitian"
ROUTE_MINGK = "minimal-orbit"
ROUTE_SMALL = "small-rep"
TENSOR_SUFFIX = "-tensor"

# families with an honest matrix realization in this library; keep in sync
# with the gates of matrixalg.construct_classical
_MATRIX_FAMS = {"slR", "su", "sustar", "so", "sostar", "spR", "sp"}


@dataclass
class RepFamily:
    kind: str           # HighestWeight | DegeneratePrincipalSeries |
                        # MinimalGKDim | AqLambda
    gk_dim: object      # int, or a short symbolic description
    notes: str = ""


@dataclass
class Route:
    theorem_id: str
    witness: Optional[RepFamily]
    conditions: list = dc_field(default_factory=list)
    conditional: bool = False

    def add(self, condition, result, provenance):
        self.conditions.append(
            {"condition": condition, "result": result,
             "provenance": provenance})


@dataclass
class Verdict:
    g: str
    gprime: Optional[str]
    routes: list = dc_field(default_factory=list)
    conditional_routes: list = dc_field(default_factory=list)
    bounded: str = "unknown"
    diagnostics: list = dc_field(default_factory=list)

    def route_ids(self):
        return [r.theorem_id for r in self.routes]


# ---------------------------------------------------------------------------
# structural helpers on name classes
# ---------------------------------------------------------------------------

def _names(cat: Catalog, label: str):
    try:
        return set(cat.name_class(label))
    except KeyError:
        return {cata.canonical_label(label) or cata._strip(label)}


def _type_a_rank(names) -> Optional[int]:
    """n if some name shows the real form complexifies to sl(n,C)."""
    for nm in names:
        parsed = parse_label(nm)
        if parsed is None:
            continue
        fam, params = parsed
        if fam == "slR":
            return params[0]
        if fam == "su":
            return params[0] + params[1]
        if fam == "sustar":
            return params[0]
    return None


_SO3_NAMES = {"su(2)", "sp(1)", "su*(2)"}


def _so_rank(names) -> Optional[int]:
    """N if some name shows the real form complexifies to so(N,C), N>=3."""
    for nm in names:
        parsed = parse_label(nm)
        if parsed is None:
            continue
        fam, params = parsed
        if fam == "so" and params[0] + params[1] >= 3:
            return params[0] + params[1]
        if fam == "sostar":
            return params[0]
    if names & _SO3_NAMES:
        return 3
    return None


def _complex_so_rank(names) -> Optional[int]:
    for nm in names:
        parsed = parse_label(nm)
        if parsed is None:
            continue
        if parsed[0] == "soC":
            return parsed[1][0]
    return None


def _u_rank(param_text: str) -> int:
    return sum(int(x) for x in param_text.split(","))


_RE_S_UU = re.compile(r"s\(u\(([0-9,]+)\)\+u\(([0-9,]+)\)\)")


def _gl_rank(cat: Catalog, gprime: str) -> Optional[int]:
    """k if g' complexifies to gl(k,C) sitting as a corner block."""
    s = cata._strip(gprime)
    m = _RE_S_UU.fullmatch(s)
    if m:
        a, b = _u_rank(m.group(1)), _u_rank(m.group(2))
        return a + b - 1 if (a == 1 or b == 1) else None
    comps = canonical_sum_label(s).split("+")
    abelian, simple = [], []
    for c in comps:
        if label_dim(c) == 1:
            abelian.append(c)
        else:
            simple.append(c)
    if len(abelian) != 1 or len(simple) > 1:
        return None
    if not simple:
        return 1
    return _type_a_rank(_names(cat, simple[0]))


def _bb_pair_match(cat: Catalog, rec) -> Optional[str]:
    """A condition string when the complexified pair is on the
    strongly-spherical short list, else None.

    A pair of complex algebras, and likewise a doubled pair with the
    diagonal subalgebra, complexifies factor-wise; membership of every
    factor pair is the criterion.
    """
    if rec.recipe is not None and rec.recipe.get("kind") == "diag":
        if _type_a_rank(_names(cat, rec.recipe["factor"])) == 2:
            return ("factor complexifies to sl(2,C); the doubled pair "
                    "becomes (so(4,C), so(3,C))")
        return None
    g_names = _names(cat, rec.g)
    gp_comps = canonical_sum_label(rec.gprime).split("+")
    # complex orthogonal pair dropping one dimension, matched factor-wise
    gc = _complex_so_rank(g_names)
    if gc is not None and gc >= 4 and len(gp_comps) == 1:
        gpc = _complex_so_rank(_names(cat, rec.gprime))
        if gpc == gc - 1:
            return f"(so({gc},C), so({gc - 1},C)) factor-wise"
    # type A minus a gl corner
    n = _type_a_rank(g_names)
    if n is not None:
        k = _gl_rank(cat, rec.gprime)
        if k is not None and k == n - 1:
            return f"(sl({n},C), gl({n - 1},C))"
    # orthogonal pair dropping one dimension
    ng = _so_rank(g_names)
    if ng is not None and len(gp_comps) == 1:
        npr = _so_rank(_names(cat, rec.gprime))
        if npr is not None and npr == ng - 1:
            return f"(so({ng},C), so({ng - 1},C))"
    return None


# ---------------------------------------------------------------------------
# minimal-orbit witness existence and small witnesses
# ---------------------------------------------------------------------------

def minimal_gk_exists(cat: Catalog, g_label: str):
    """(exists, note) — whether some irreducible representation attains the
    complex minimal-orbit half-dimension, with the witness kind if so.

    The exclusion rules are checked against every name in the algebra's
    isomorphism class, so aliased spellings agree.
    """
    rec, _ = cat.resolve(g_label)
    names = cat.name_class(rec.label)
    table = cat.tables["minimal_gk_exclusion"]
    fixed = set()
    for rule in table["rules"]:
        if rule["key"] == "fixed":
            fixed = set(rule["labels"])
    for nm in names:
        if nm in fixed:
            return False, f"excluded: {nm}"
        parsed = parse_label(nm)
        if parsed is None:
            continue
        fam, params = parsed
        if fam == "so" and params[1] == 1 and params[0] >= 6:
            return False, f"excluded: {nm}"
        if fam == "so" and min(params) >= 4 and sum(params) % 2 == 1:
            return False, f"excluded: {nm}"
        if fam == "sustar" and params[0] >= 4:
            return False, f"excluded: {nm}"
        if fam == "sp" and params[1] >= 1:
            return False, f"excluded: {nm}"
    kinds = table["witness_kinds"]
    fams = {p[0] for p in map(parse_label, names) if p is not None}
    if fams & {"slR", "slC"}:
        return True, kinds["type_a"]
    if rec.hermitian:
        return True, kinds["hermitian"]
    return True, kinds["default"]


def _eval_gk_formula(expr, p, q):
    if isinstance(expr, int):
        return expr
    return int(eval(expr, {"__builtins__": {}}, {"p": p, "q": q}))


def _small_rep_witness(cat: Catalog, grec):
    """(RepFamily, provenance) for a registered representation attaining the
    real minimal-orbit half-dimension, or (None, None)."""
    rows = cat.tables["small_rep_witnesses"]["rows"]
    for nm in cat.name_class(grec.label):
        parsed = parse_label(nm)
        if parsed is not None and parsed[0] == "sp" and parsed[1][1] >= 1:
            row = next(r for r in rows if r.get("family") == "sp(p,q)")
            gk = _eval_gk_formula(row["gk"], *parsed[1])
            return RepFamily(
                kind="AqLambda", gk_dim=gk,
                notes="cohomologically induced module attaining the real "
                      "minimal-orbit half-dimension"), "table"
        if nm == "f4(-20)":
            row = next(r for r in rows if r.get("label") == "f4(-20)")
            return RepFamily(
                kind="AqLambda", gk_dim=int(row["gk"]),
                notes="cohomologically induced module attaining the real "
                      "minimal-orbit half-dimension"), "table"
    n, m = grec.n_complex(), grec.m_real()
    if n == m:
        exists, note = minimal_gk_exists(cat, grec.label)
        if exists:
            return RepFamily(
                kind="MinimalGKDim", gk_dim=m,
                notes="real and complex minimal-orbit half-dimensions "
                      f"agree; witness: {note}"), "computed"
    return None, None


def has_matrix_model(cat: Catalog, label: str) -> bool:
    """Does some spelling of this algebra admit a matrix realization?"""
    for nm in _names(cat, label):
        parsed = parse_label(nm)
        if parsed is None:
            continue
        fam, params = parsed
        if fam in _MATRIX_FAMS:
            if fam in ("su", "so", "sp") and min(params) == 0:
                continue  # compact spelling
            return True
    return False


# ---------------------------------------------------------------------------
# sign of the highest restricted root, with provenance
# ---------------------------------------------------------------------------

def _sigma_mu_status(cat: Catalog, rec, compute: str):
    """(status, provenance) with status in {"yes", "no", None}."""
    if rec.recipe is not None and compute != "never":
        pair = pr.register_pair(cat, rec.g, rec.gprime)
        if pair is not None:
            return pr.check_sigma_mu(pair).status, "computed"
    if rec.sigma_mu_table is not None:
        return rec.sigma_mu_table, "table"
    return None, None


# ---------------------------------------------------------------------------
# verdicts
# ---------------------------------------------------------------------------

def decide_pair(cat: Catalog, g: str, gprime: str, *,
                compute: str = "auto") -> Verdict:
    """Evaluate every restriction route for a registered pair.

    compute="auto" re-derives the sign of the highest restricted root from
    the matrix model when the pair has one; compute="never" uses catalog
    tables only.  Unknown pairs raise KeyError (with .suggestions).
    """
    rec, _note = cat.find_pair(g, gprime)
    if rec.recipe is not None and rec.recipe.get("kind") == "diag":
        return _decide_diag(cat, rec)
    grec, _ = cat.resolve(rec.g)
    v = Verdict(g=rec.g, gprime=rec.gprime)

    bb = _bb_pair_match(cat, rec)
    if bb is not None:
        r = Route(theorem_id=ROUTE_BB, witness=RepFamily(
            kind="HighestWeight", gk_dim="any",
            notes="every irreducible admissible representation restricts "
                  "with uniformly bounded multiplicity"))
        r.add("complexified pair is strongly spherical", bb, "table")
        v.routes.append(r)

    if grec.hermitian:
        r = Route(theorem_id=ROUTE_HW, witness=RepFamily(
            kind="HighestWeight", gk_dim="any holomorphic-type",
            notes="irreducible highest-weight modules restrict boundedly "
                  "to every symmetric subalgebra"))
        r.add("ambient algebra is Hermitian", True, "table")
        v.routes.append(r)

    para = pr.para_hermitian_levis(cat, rec.g)
    if para:
        r = Route(theorem_id=ROUTE_PARA, witness=RepFamily(
            kind="DegeneratePrincipalSeries",
            gk_dim="dimension of the abelian nilradical",
            notes="induced from a character of a parabolic with abelian "
                  "nilradical"))
        r.add("para-Hermitian polarizations (Levi factors)",
              "; ".join(sorted({p["levi"] for p in para})), "table")
        v.routes.append(r)

    exists, kind_note = minimal_gk_exists(cat, rec.g)
    if exists:
        r = Route(theorem_id=ROUTE_MINGK, witness=RepFamily(
            kind="MinimalGKDim", gk_dim=grec.n_complex(), notes=kind_note))
        r.add("no minimal-orbit exclusion rule matches", True, "table")
        r.add("complex minimal-orbit half-dimension", grec.n_complex(),
              "computed")
        v.routes.append(r)

    witness, wit_prov = _small_rep_witness(cat, grec)
    status, prov = (None, None)
    evaluable = (witness is not None or rec.sigma_mu_table is not None
                 or (compute != "never" and rec.recipe is not None))
    if evaluable:
        status, prov = _sigma_mu_status(cat, rec, compute)
    if status == "yes":
        r = Route(theorem_id=ROUTE_SMALL, witness=witness)
        r.add("highest restricted root changes sign under the involution",
              "yes", prov)
        if witness is not None:
            r.add("witness with Gelfand-Kirillov dimension "
                  f"{witness.gk_dim}", witness.kind, wit_prov)
            v.routes.append(r)
        else:
            r.conditional = True
            r.add("witness attaining the real minimal-orbit half-dimension",
                  "none registered", "table")
            v.conditional_routes.append(r)
            v.diagnostics.append(
                "sign condition holds but no witness representation is "
                "registered; route reported as conditional")
    elif status is None and witness is not None and rec.recipe is None:
        v.diagnostics.append(
            "sign of the highest restricted root is neither tabulated nor "
            "computable (no matrix model); small-rep route not evaluated")

    _finish(v, certifiable=rec.recipe is not None)
    return v


def _decide_diag(cat: Catalog, rec) -> Verdict:
    """A doubled pair with the diagonal subalgebra: certify through the
    tensor-product routes of the factor, plus the spherical short list."""
    inner = decide_tensor(cat, rec.recipe["factor"])
    v = Verdict(g=rec.g, gprime=rec.gprime,
                conditional_routes=inner.conditional_routes,
                diagnostics=["diagonal pair: certified through the "
                             "tensor-product routes of the factor"]
                + inner.diagnostics)
    bb = _bb_pair_match(cat, rec)
    if bb is not None:
        r = Route(theorem_id=ROUTE_BB, witness=RepFamily(
            kind="HighestWeight", gk_dim="any",
            notes="every irreducible admissible representation restricts "
                  "with uniformly bounded multiplicity"))
        r.add("complexified pair is strongly spherical", bb, "table")
        v.routes.append(r)
    v.routes.extend(inner.routes)
    v.bounded = inner.bounded
    return v


def decide_tensor(cat: Catalog, g: str) -> Verdict:
    """Evaluate the tensor-product routes for one ambient algebra."""
    grec, _ = cat.resolve(g)
    v = Verdict(g=grec.label, gprime=None)

    if grec.hermitian:
        r = Route(theorem_id=ROUTE_HW + TENSOR_SUFFIX, witness=RepFamily(
            kind="HighestWeight", gk_dim="any holomorphic-type",
            notes="tensor product of two highest-weight modules"))
        r.add("ambient algebra is Hermitian", True, "table")
        v.routes.append(r)

    para = pr.para_hermitian_levis(cat, grec.label)
    if para:
        r = Route(theorem_id=ROUTE_PARA + TENSOR_SUFFIX, witness=RepFamily(
            kind="DegeneratePrincipalSeries",
            gk_dim="dimension of the abelian nilradical",
            notes="tensor product of two degenerate principal series"))
        r.add("para-Hermitian polarizations (Levi factors)",
              "; ".join(sorted({p["levi"] for p in para})), "table")
        v.routes.append(r)

    exists, kind_note = minimal_gk_exists(cat, grec.label)
    if exists:
        r = Route(theorem_id=ROUTE_MINGK + TENSOR_SUFFIX, witness=RepFamily(
            kind="MinimalGKDim", gk_dim=grec.n_complex(), notes=kind_note))
        r.add("no minimal-orbit exclusion rule matches", True, "table")
        v.routes.append(r)

    witness, wit_prov = _small_rep_witness(cat, grec)
    if witness is not None:
        r = Route(theorem_id=ROUTE_SMALL + TENSOR_SUFFIX, witness=witness)
        r.add("witness attaining the real minimal-orbit half-dimension",
              witness.kind, wit_prov)
        r.add("tensor-product route needs no sign condition", True, "table")
        v.routes.append(r)

    _finish(v, certifiable=has_matrix_model(cat, grec.label))
    return v


def _finish(v: Verdict, *, certifiable: bool):
    if v.routes:
        v.bounded = "certified" if certifiable else "table-certified"
    else:
        v.bounded = "unknown"
        v.diagnostics.append(
            "no certification route applies; for a registered entry this "
            "signals a catalog gap")


# ---------------------------------------------------------------------------
# the proper-pair table (ambient with a small witness, subalgebra noncompact
# or a signature split)
# ---------------------------------------------------------------------------

def _sp_signature(comp) -> Optional[tuple]:
    parsed = parse_label(comp)
    if parsed is None or parsed[0] != "sp":
        return None
    return parsed[1]


def matches_proper_table(cat: Catalog, rec) -> bool:
    """Does this catalog pair instantiate a row of the proper-pair table?"""
    names = _names(cat, rec.g)
    sp_sig = None
    for nm in names:
        parsed = parse_label(nm)
        if parsed is not None and parsed[0] == "sp" and parsed[1][1] >= 1:
            sp_sig = parsed[1]
    if sp_sig is not None:
        p, q = sp_sig
        gp = cata._strip(rec.gprime)
        parsed = parse_label(gp)
        if parsed is not None and parsed[0] == "u" and \
                tuple(sorted(parsed[1])) == tuple(sorted((p, q))):
            return True
        comps = gp.split("+")
        if len(comps) == 2:
            s1, s2 = _sp_signature(comps[0]), _sp_signature(comps[1])
            if s1 is not None and s2 is not None:
                for a in (s1, s1[::-1]):
                    for b in (s2, s2[::-1]):
                        added = (a[0] + b[0], a[1] + b[1])
                        if tuple(sorted(added)) == tuple(sorted((p, q))):
                            return True
        return False
    if "f4(-20)" in names:
        table_rows = cat.tables["proper_pair_table"]["rows"]
        row = next(r for r in table_rows if r["g"] == "f4(-20)")
        wanted = {canonical_sum_label(x) for x in row["gprimes"]}
        return canonical_sum_label(rec.gprime) in wanted
    return False


# ---------------------------------------------------------------------------
# catalog sweep
# ---------------------------------------------------------------------------

def sweep_catalog(cat: Catalog) -> dict:
    """Decide every registered pair and tensor query; report coverage.

    Each pair is first decided from tables alone; the matrix model is
    brought in only where tables leave the verdict short — a pair with zero
    routes, or a proper-table row still missing its small-rep route (the
    sign of the highest restricted root is the one condition that can
    require computation).
    """
    route_counts, zero, pair_rows = {}, [], []
    hermitian_hw, para_ok, table2 = True, True, []
    for rec in cat.pairs:
        v = decide_pair(cat, rec.g, rec.gprime, compute="never")
        needs_model = not v.routes or (
            rec.recipe is not None
            and ROUTE_SMALL not in v.route_ids()
            and matches_proper_table(cat, rec))
        if needs_model:
            v = decide_pair(cat, rec.g, rec.gprime, compute="auto")
        if not v.routes:
            zero.append((rec.g, rec.gprime))
        for r in v.routes:
            route_counts[r.theorem_id] = route_counts.get(r.theorem_id, 0) + 1
        row = {
            "g": rec.g, "gprime": rec.gprime,
            "routes": v.route_ids(), "bounded": v.bounded,
            "small_gk": next((r.witness.gk_dim for r in v.routes
                              if r.theorem_id == ROUTE_SMALL
                              and r.witness is not None), None),
        }
        pair_rows.append(row)
        is_diag = rec.recipe is not None and rec.recipe.get("kind") == "diag"
        if not is_diag:
            if cat.resolve(rec.g)[0].hermitian and \
                    ROUTE_HW not in row["routes"]:
                hermitian_hw = False
            if pr.para_hermitian_levis(cat, rec.g) and \
                    ROUTE_PARA not in row["routes"]:
                para_ok = False
            if matches_proper_table(cat, rec):
                table2.append(row)
    tensor_rows, tensor_zero, tensor_counts = [], [], {}
    for arec in cat.record_list():
        tv = decide_tensor(cat, arec.label)
        if not tv.routes:
            tensor_zero.append(arec.label)
        for r in tv.routes:
            tensor_counts[r.theorem_id] = \
                tensor_counts.get(r.theorem_id, 0) + 1
        tensor_rows.append({"g": arec.label, "routes": tv.route_ids(),
                            "bounded": tv.bounded})
    return {
        "pairs": len(cat.pairs),
        "zero_route_pairs": zero,
        "route_counts": dict(sorted(route_counts.items())),
        "pair_rows": pair_rows,
        "table2_rows": table2,
        "hermitian_pairs_have_hw_route": hermitian_hw,
        "para_pairs_have_para_route": para_ok,
        "tensor_counts": dict(sorted(tensor_counts.items())),
        "tensor_zero": tensor_zero,
        "tensor_rows": tensor_rows,
    }
