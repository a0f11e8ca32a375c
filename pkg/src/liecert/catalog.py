"""Catalog loading, label grammar, and schema validation.

The package ships a curated JSON catalog (``liecert/data/catalog.json``)
holding restricted-root data for noncompact simple real Lie algebras, a
registry of symmetric pairs, and the lookup tables used by the certification
logic.  This module parses and validates that file and provides label
canonicalization (``sp(1,2)`` -> ``sp(2,1)``, alias names like ``su(1,1)``
-> ``sl(2,R)``) plus pair lookup.

Validation is strict: every algebra entry must pass a dimension census
(sum of restricted-root multiplicities + rank + centralizer block == the
dimension implied by the label), so a corrupted multiplicity entry is
rejected at load with a message naming the offending entry.
"""

from __future__ import annotations

import difflib
import json
import os
import re
from dataclasses import dataclass, field
from typing import Optional

from . import roots

ENV_CATALOG = "LIECERT_CATALOG"
SCHEMA_VERSION = 1

_EXC_DIM = {"g2": 14, "f4": 52, "e6": 78, "e7": 133, "e8": 248}


class CatalogError(Exception):
    """Raised when the catalog file is missing, malformed, or inconsistent."""

    def __init__(self, errors):
        if isinstance(errors, str):
            errors = [errors]
        self.errors = list(errors)
        super().__init__("; ".join(self.errors))

    def itemized(self):
        return "\n".join(f"  - {e}" for e in self.errors)


# ---------------------------------------------------------------------------
# label grammar
# ---------------------------------------------------------------------------

_RE_TWO = re.compile(r"^(sl|su|so|sp|u)\((\d+),(\d+)\)$")
_RE_FIELD = re.compile(r"^(sl|so|sp)\((\d+),([RC])\)$")
_RE_ONE = re.compile(r"^(su|so|sp|u)\((\d+)\)$")
_RE_STAR = re.compile(r"^(su|so)\*\((\d+)\)$")
_RE_EXC = re.compile(r"^(g2|f4|e6|e7|e8)\((-?\d+|C)\)$")


def _strip(name: str) -> str:
    return name.replace(" ", "")


def parse_label(name: str):
    """Parse one simple-algebra label into (family, params) or None.

    Families: slR, slC, su, sustar, so, soC, sostar, spR, sp, spC, u, uC?,
    compact one-argument forms, exceptional names, and the abelian tokens
    "R" / "C".  Unparseable strings return None (treated as literal labels).
    """
    s = _strip(name)
    if s in ("R", "C"):
        return ("abelian", (s,))
    m = _RE_FIELD.match(s)
    if m:
        fam, n, fld = m.group(1), int(m.group(2)), m.group(3)
        return (fam + fld, (n,))
    m = _RE_TWO.match(s)
    if m:
        fam, p, q = m.group(1), int(m.group(2)), int(m.group(3))
        return (fam, (p, q))
    m = _RE_ONE.match(s)
    if m:
        fam, k = m.group(1), int(m.group(2))
        return (fam, (k, 0))
    m = _RE_STAR.match(s)
    if m:
        fam, k = m.group(1), int(m.group(2))
        return (fam + "star", (k,))
    m = _RE_EXC.match(s)
    if m:
        return ("exc", (m.group(1), m.group(2)))
    return None


def canonical_label(name: str) -> Optional[str]:
    """Grammar-level canonical form of a simple-algebra label.

    Orders signature parameters descendingly (sp(1,2) -> sp(2,1)), rewrites
    zero signatures to compact one-argument form (sp(2,0) -> sp(2)), and
    normalizes whitespace.  Returns None if the label does not parse.
    """
    parsed = parse_label(name)
    if parsed is None:
        return None
    fam, params = parsed
    if fam == "abelian":
        return params[0]
    if fam in ("slR", "slC", "soC", "spC"):
        base, fld = fam[:-1], fam[-1]
        return f"{base}({params[0]},{fld})"
    if fam in ("sustar", "sostar"):
        return f"{fam[:2]}*({params[0]})"
    if fam == "spR":
        return f"sp({params[0]},R)"
    if fam == "exc":
        return f"{params[0]}({params[1]})"
    # two-signature families (su/so/sp/u), possibly compact
    p, q = max(params), min(params)
    if q == 0:
        return f"{fam}({p})"
    return f"{fam}({p},{q})"


def canonical_sum_label(name: str) -> str:
    """Canonicalize a '+'-sum of labels componentwise, keeping order.

    Components that do not parse are kept verbatim, so arbitrary registry
    strings like ``diag(sl(2,R))`` pass through unchanged.
    """
    s = _strip(name)
    comps = s.split("+")
    out = []
    for c in comps:
        out.append(canonical_label(c) or c)
    return "+".join(out)


def label_dim(name: str) -> Optional[int]:
    """Real dimension implied by a simple-algebra label, or None."""
    parsed = parse_label(name)
    if parsed is None:
        return None
    fam, params = parsed
    if fam == "abelian":
        return 1 if params[0] == "R" else 2
    if fam == "slR":
        n = params[0]
        return n * n - 1
    if fam == "slC":
        n = params[0]
        return 2 * (n * n - 1)
    if fam in ("su", "u"):
        n = params[0] + params[1]
        return n * n - (1 if fam == "su" else 0)
    if fam == "sustar":
        k = params[0]
        return k * k - 1
    if fam == "so":
        n = params[0] + params[1]
        return n * (n - 1) // 2
    if fam == "soC":
        n = params[0]
        return n * (n - 1)
    if fam == "sostar":
        k = params[0]
        m = k // 2
        return m * (k - 1)
    if fam == "spR":
        n = params[0]
        return n * (2 * n + 1)
    if fam == "sp":
        n = params[0] + params[1]
        return n * (2 * n + 1)
    if fam == "spC":
        n = params[0]
        return 2 * n * (2 * n + 1)
    if fam == "exc":
        base, inner = params
        d = _EXC_DIM[base]
        return 2 * d if inner == "C" else d
    return None


def sum_label_dim(name: str) -> Optional[int]:
    """Real dimension of a '+'-sum label; None if any component is opaque."""
    total = 0
    for comp in _strip(name).split("+"):
        d = label_dim(comp)
        if d is None:
            return None
        total += d
    return total


# ---------------------------------------------------------------------------
# records
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AlgebraRecord:
    label: str
    datum: roots.RestrictedDatum
    dim_g: int
    citation: str

    @property
    def aliases(self):
        return self.datum.aliases

    @property
    def hermitian(self):
        return self.datum.hermitian

    def n_complex(self) -> int:
        return roots.n_complex(self.datum)

    def m_real(self) -> int:
        return roots.m_real(self.datum)

    def grading(self) -> roots.GradingProfile:
        return roots.grading_profile(self.datum)

    def case(self) -> str:
        return roots.classify_case(self.datum)


@dataclass(frozen=True)
class PairRecord:
    g: str
    gprime: str
    recipe: Optional[dict]
    dim_gprime: int
    sigma_mu_table: Optional[str]
    citations: tuple
    notes: Optional[str] = None

    @property
    def is_matrix(self) -> bool:
        return self.recipe is not None


@dataclass
class Catalog:
    version: str
    path: str
    records: dict = field(default_factory=dict)     # canonical label -> AlgebraRecord
    pairs: list = field(default_factory=list)       # [PairRecord]
    tables: dict = field(default_factory=dict)
    _alias_to_label: dict = field(default_factory=dict)
    _classes: dict = field(default_factory=dict)    # label -> frozenset of names

    # -- lookup ------------------------------------------------------------

    def resolve(self, name: str):
        """Resolve a user-supplied algebra name to (record, alias_note).

        alias_note is None when the name is already a record label, else a
        short human-readable rewrite note.  Raises KeyError (with candidate
        suggestions attached) for unknown names.
        """
        raw = _strip(name)
        canon = canonical_label(raw) or raw
        note = None
        if canon != raw:
            note = f"normalized {raw} -> {canon}"
        if canon in self.records:
            return self.records[canon], note
        if canon in self._alias_to_label:
            target = self._alias_to_label[canon]
            extra = f"{canon} is listed as {target}"
            note = f"{note}; {extra}" if note else extra
            return self.records[target], note
        err = KeyError(name)
        err.suggestions = self.suggest(raw)
        raise err

    def name_class(self, name: str) -> frozenset:
        """All catalog names (records and alias strings) of one algebra."""
        rec, _ = self.resolve(name)
        return self._classes[rec.label]

    def find_pair(self, g: str, gprime: str):
        """Locate a registered pair, canonicalizing both labels.

        Returns (PairRecord, note) or raises KeyError with suggestions of
        registered partners for g.
        """
        rec_notes = []
        g_raw = _strip(g)
        g_names = None
        try:
            grec, note = self.resolve(g_raw)
            if note:
                rec_notes.append(note)
            g_names = set(self._classes[grec.label])
        except KeyError:
            g_names = {canonical_label(g_raw) or g_raw}
        gp_canon = canonical_sum_label(gprime)
        if gp_canon != _strip(gprime):
            rec_notes.append(f"normalized {_strip(gprime)} -> {gp_canon}")
        for row in self.pairs:
            if row.g in g_names and canonical_sum_label(row.gprime) == gp_canon:
                return row, ("; ".join(rec_notes) or None)
        err = KeyError((g, gprime))
        err.suggestions = sorted(
            row.gprime for row in self.pairs if row.g in g_names)
        raise err

    def pairs_for(self, g: str):
        names = self.name_class(g)
        return [row for row in self.pairs if row.g in names]

    def suggest(self, name: str):
        pool = sorted(set(self.records) | set(self._alias_to_label))
        return difflib.get_close_matches(_strip(name), pool, n=3, cutoff=0.5)

    def record_list(self):
        return [self.records[k] for k in sorted(self.records)]


# ---------------------------------------------------------------------------
# loading and validation
# ---------------------------------------------------------------------------

def default_catalog_path() -> str:
    env = os.environ.get(ENV_CATALOG)
    if env:
        return env
    return os.path.join(os.path.dirname(os.path.abspath(__file__)),
                        "data", "catalog.json")


def _class_counts(series: str, rank: int):
    """Number of restricted roots in each length/type class."""
    root_list, _ = roots.restricted_roots(series, rank)
    counts = {}
    for _vec, cls in root_list:
        counts[cls] = counts.get(cls, 0) + 1
    return counts


_ALLOWED_FIELDS = {"label", "series", "rank", "mult", "dim_m", "cplx",
                   "hermitian", "complex_form", "aliases", "citation"}


def _validate_algebra(entry, errors):
    """Schema + census validation of one algebra entry.

    Returns an AlgebraRecord, or None after appending error strings.
    """
    if not isinstance(entry, dict):
        errors.append(f"algebra entry is not an object: {entry!r}")
        return None
    label = entry.get("label")
    where = f"catalog entry {label!r}"
    missing = _ALLOWED_FIELDS - set(entry)
    if missing:
        errors.append(f"{where}: missing fields {sorted(missing)}")
        return None
    unknown = set(entry) - _ALLOWED_FIELDS
    if unknown:
        errors.append(f"{where}: unknown fields {sorted(unknown)}")
        return None
    series, rank = entry["series"], entry["rank"]
    mult, dim_m = entry["mult"], entry["dim_m"]
    if not (isinstance(rank, int) and rank >= 1):
        errors.append(f"{where}: bad rank {rank!r}")
        return None
    if series not in ("A", "B", "C", "D", "BC", "E", "F", "G"):
        errors.append(f"{where}: unknown restricted type {series!r}")
        return None
    if not (isinstance(mult, dict) and mult and
            all(isinstance(v, int) and v >= 1 for v in mult.values())):
        errors.append(f"{where}: multiplicities must be positive integers, got {mult!r}")
        return None
    if not (isinstance(dim_m, int) and dim_m >= 0):
        errors.append(f"{where}: bad centralizer dimension {dim_m!r}")
        return None

    canon = canonical_label(label)
    if canon != label:
        errors.append(f"{where}: label is not canonical (expected {canon!r})")
        return None
    dim_g = label_dim(label)
    if dim_g is None:
        errors.append(f"{where}: label does not parse to a known family")
        return None

    cplx = entry["cplx"]
    m = re.match(r"^([A-G]|BC)(\d+)$", cplx or "")
    if not m:
        errors.append(f"{where}: bad complexification type {cplx!r}")
        return None
    cplx_series, cplx_rank = m.group(1), int(m.group(2))

    try:
        counts = _class_counts(series, rank)
    except (AssertionError, ValueError) as exc:
        errors.append(f"{where}: invalid restricted type {series}{rank}: {exc}")
        return None
    if set(mult) != set(counts):
        errors.append(
            f"{where}: multiplicity classes {sorted(mult)} do not match the "
            f"{series}{rank} root classes {sorted(counts)}")
        return None
    census = sum(mult[c] * counts[c] for c in counts) + rank + dim_m
    if census != dim_g:
        errors.append(
            f"{where}: dimension census mismatch: roots+rank+centralizer = "
            f"{census} but the label implies dimension {dim_g}; the entry's "
            f"multiplicity or centralizer data is corrupted")
        return None

    datum = roots.RestrictedDatum(
        label=label, series=series, rank=rank,
        mult={k: int(v) for k, v in mult.items()},
        hermitian=bool(entry["hermitian"]),
        cplx_series=cplx_series, cplx_rank=cplx_rank,
        complex_form=bool(entry["complex_form"]),
        dim_m=dim_m, aliases=tuple(entry["aliases"]))
    try:
        n = roots.n_complex(datum)
        mm = roots.m_real(datum)
    except (AssertionError, ValueError) as exc:
        errors.append(f"{where}: derived invariants failed: {exc}")
        return None
    if mm < n:
        errors.append(
            f"{where}: computed m = {mm} < n = {n}, impossible for a real form")
        return None
    return AlgebraRecord(label=label, datum=datum, dim_g=dim_g,
                         citation=str(entry["citation"]))


_PAIR_FIELDS = {"g", "gprime", "recipe", "dim_gprime", "sigma_mu_table",
                "citations", "notes"}


def _validate_pair(entry, records, errors):
    if not isinstance(entry, dict):
        errors.append(f"pair entry is not an object: {entry!r}")
        return None
    g = entry.get("g")
    where = f"pair ({g!r}, {entry.get('gprime')!r})"
    unknown = set(entry) - _PAIR_FIELDS
    if unknown:
        errors.append(f"{where}: unknown fields {sorted(unknown)}")
        return None
    for req in ("g", "gprime", "dim_gprime", "citations"):
        if req not in entry:
            errors.append(f"{where}: missing field {req!r}")
            return None
    recipe = entry.get("recipe")
    if recipe is not None and not (isinstance(recipe, dict) and "kind" in recipe):
        errors.append(f"{where}: recipe must be null or an object with 'kind'")
        return None
    sig = entry.get("sigma_mu_table")
    if sig not in (None, "yes", "no"):
        errors.append(f"{where}: sigma_mu_table must be 'yes', 'no', or null")
        return None
    dim_gp = entry["dim_gprime"]
    if not (isinstance(dim_gp, int) and dim_gp >= 1):
        errors.append(f"{where}: bad dim_gprime {dim_gp!r}")
        return None
    implied = sum_label_dim(entry["gprime"])
    if implied is not None and implied != dim_gp:
        errors.append(
            f"{where}: dim_gprime = {dim_gp} but the label implies {implied}")
        return None
    return PairRecord(
        g=str(entry["g"]), gprime=str(entry["gprime"]),
        recipe=recipe, dim_gprime=dim_gp, sigma_mu_table=sig,
        citations=tuple(entry["citations"]), notes=entry.get("notes"))


_REQUIRED_TABLES = (
    "minimal_orbit_halfdim", "para_hermitian", "hermitian_range",
    "spherical_complex_pairs", "minimal_gk_exclusion",
    "small_rep_witnesses", "highest_root_sign", "proper_pair_table",
    "complex_bounded_pairs",
)


def load_catalog(path: Optional[str] = None) -> Catalog:
    """Load and validate the catalog.

    path resolution: explicit argument > LIECERT_CATALOG env var > packaged
    default.  Raises CatalogError with itemized diagnostics on any schema or
    consistency violation.
    """
    path = path or default_catalog_path()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            raw = json.load(fh)
    except FileNotFoundError:
        raise CatalogError(f"catalog file not found: {path}")
    except json.JSONDecodeError as exc:
        raise CatalogError(f"catalog file {path} is not valid JSON: {exc}")

    errors = []
    if not isinstance(raw, dict):
        raise CatalogError(f"catalog root must be an object, got {type(raw).__name__}")
    if raw.get("schema") != SCHEMA_VERSION:
        errors.append(f"unsupported schema {raw.get('schema')!r} "
                      f"(this build reads schema {SCHEMA_VERSION})")
    version = raw.get("version")
    if not isinstance(version, str):
        errors.append("missing or non-string catalog version")
        version = "unversioned"
    for key in ("algebras", "pairs", "tables"):
        if key not in raw:
            errors.append(f"missing top-level section {key!r}")
    if errors:
        raise CatalogError(errors)

    cat = Catalog(version=version, path=path, tables=raw["tables"])

    for entry in raw["algebras"]:
        rec = _validate_algebra(entry, errors)
        if rec is None:
            continue
        if rec.label in cat.records:
            errors.append(f"duplicate catalog entry {rec.label!r}")
            continue
        cat.records[rec.label] = rec

    # alias index: names that are not records must appear in exactly one
    # record's alias list; names that are records form cross-linked classes.
    for rec in cat.records.values():
        for al in rec.aliases:
            c = canonical_label(al)
            if c != al:
                errors.append(f"catalog entry {rec.label!r}: alias {al!r} is "
                              f"not canonical (expected {c!r})")
                continue
            if al in cat.records:
                other = cat.records[al]
                if rec.label not in other.aliases:
                    errors.append(
                        f"catalog entries {rec.label!r} and {al!r}: alias link "
                        f"is not symmetric")
                continue
            prev = cat._alias_to_label.get(al)
            if prev is not None and prev != rec.label:
                errors.append(f"alias {al!r} claimed by both {prev!r} and "
                              f"{rec.label!r}")
                continue
            cat._alias_to_label[al] = rec.label

    # name classes (union of cross-listed records and their alias strings)
    parent = {lbl: lbl for lbl in cat.records}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for rec in cat.records.values():
        for al in rec.aliases:
            if al in cat.records:
                ra, rb = find(rec.label), find(al)
                if ra != rb:
                    parent[ra] = rb
    groups = {}
    for lbl in cat.records:
        groups.setdefault(find(lbl), set()).add(lbl)
    for members in groups.values():
        names = set()
        for lbl in members:
            names.add(lbl)
            names.update(cat.records[lbl].aliases)
        fs = frozenset(names)
        for lbl in members:
            cat._classes[lbl] = fs

    # cross-listed records must agree on derived invariants
    for members in groups.values():
        if len(members) < 2:
            continue
        rows = sorted(members)
        vals = [(cat.records[l].dim_g, cat.records[l].n_complex(),
                 cat.records[l].m_real(), cat.records[l].hermitian)
                for l in rows]
        if len(set(vals)) != 1:
            errors.append(f"cross-listed entries {rows} disagree on derived "
                          f"invariants {vals}")

    seen_pairs = set()
    for entry in raw["pairs"]:
        row = _validate_pair(entry, cat.records, errors)
        if row is None:
            continue
        if row.g not in cat.records and row.g not in cat._alias_to_label:
            gbase = row.g.split("x")[0]
            if "x" not in row.g or (gbase not in cat.records
                                    and gbase not in cat._alias_to_label):
                errors.append(f"pair ({row.g!r}, {row.gprime!r}): ambient "
                              f"algebra is not in the catalog")
                continue
        key = (row.g, canonical_sum_label(row.gprime))
        if key in seen_pairs:
            errors.append(f"duplicate pair ({row.g!r}, {row.gprime!r})")
            continue
        seen_pairs.add(key)
        cat.pairs.append(row)

    for key in _REQUIRED_TABLES:
        if key not in cat.tables:
            errors.append(f"tables section missing {key!r}")

    if errors:
        raise CatalogError(errors)
    return cat
