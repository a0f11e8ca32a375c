"""Command-line interface and deterministic report serialization.

Subcommands:

  info G                structural invariants of one algebra
  pair G GPRIME         certification routes for a symmetric pair
  tensor G              certification routes for tensor products
  tables WHICH          dump an embedded table (n, m, para, remaining,
                        bblist) with its citation
  verify-coiso G GPRIME exact slice certificates at sampled points
  sweep                 decide every registered pair and tensor query

Exit codes: 0 all checks passed; 1 verified negative or zero-route verdict;
2 usage or registry error; 3 internal-consistency failure (a computation
contradicting a certified table entry — always a bug, never mathematics).

JSON reports are deterministic: identical (command, seed, catalog version)
produce byte-identical output.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys

from . import __version__
from .catalog import (Catalog, CatalogError, ENV_CATALOG, load_catalog,
                      parse_label)
from . import decide as dc
from . import matrixalg as mx
from . import pairs as pr
from . import roots
from . import slicecert as sc

REPORT_SCHEMA = "liecert-report/1"
EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


def _emit(report: dict, as_json: bool, human_lines):
    if as_json:
        print(json.dumps(report, sort_keys=True, indent=2))
    else:
        for line in human_lines:
            print(line)


def _report(cat: Catalog, command: str, query: dict, payload: dict) -> dict:
    return {
        "schema": REPORT_SCHEMA,
        "tool_version": __version__,
        "catalog_version": cat.version,
        "command": command,
        "query": query,
        "result": payload,
    }


def _usage_error(msg: str, suggestions=()) -> int:
    print(f"error: {msg}", file=sys.stderr)
    if suggestions:
        print("did you mean: " + ", ".join(suggestions), file=sys.stderr)
    return EXIT_USAGE


def _key_error_message(exc: KeyError) -> str:
    key = exc.args[0] if exc.args else "?"
    if isinstance(key, tuple):
        return (f"pair ({key[0]}, {key[1]}) is not in the registry; "
                "registered partners are suggested below")
    return f"unknown algebra label {key!r}"


def _verdict_payload(v: dc.Verdict) -> dict:
    return {
        "g": v.g,
        "gprime": v.gprime,
        "bounded": v.bounded,
        "routes": [dataclasses.asdict(r) for r in v.routes],
        "conditional_routes": [dataclasses.asdict(r)
                               for r in v.conditional_routes],
        "diagnostics": list(v.diagnostics),
    }


def _verdict_lines(v: dc.Verdict):
    target = f"({v.g}, {v.gprime})" if v.gprime else f"tensor products of {v.g}"
    yield f"query: {target}"
    yield f"bounded multiplicity: {v.bounded}"
    for r in v.routes:
        wit = ""
        if r.witness is not None:
            wit = f"  [witness: {r.witness.kind}, GK dim {r.witness.gk_dim}]"
        yield f"  route {r.theorem_id}{wit}"
        for c in r.conditions:
            yield (f"    - {c['condition']}: {c['result']}"
                   f" ({c['provenance']})")
    for r in v.conditional_routes:
        yield f"  conditional route {r.theorem_id} (no witness registered)"
    for d in v.diagnostics:
        yield f"  note: {d}"


def _certificate_payload(rep: sc.CoisoReport) -> dict:
    return {
        "g": rep.g,
        "gprime": rep.gprime,
        "mode": rep.mode,
        "seeds": list(rep.seeds),
        "applicable": rep.applicable,
        "passed": rep.passed,
        "points": [dataclasses.asdict(pt) for pt in rep.points],
        "notes": list(rep.notes),
    }


# ---------------------------------------------------------------------------
# optional load-time cross-validation (--max-rank)
# ---------------------------------------------------------------------------

def _cross_validate(cat: Catalog, max_rank: int):
    """Recompute restricted data from matrix models for every classical
    record of restricted rank <= max_rank and compare with the catalog.
    Any mismatch is an internal-consistency failure."""
    failures = []
    for rec in cat.record_list():
        parsed = parse_label(rec.label)
        if parsed is None or parsed[0] not in dc._MATRIX_FAMS:
            continue
        if rec.datum.rank > max_rank:
            continue
        try:
            alg = mx.construct_classical(rec.label)
        except mx.NoMatrixModel:
            continue
        rdec = mx.restricted_decomposition(alg)
        want = roots.restricted_signature(rec.datum)
        got = rdec.signature()
        if want != got:
            failures.append(
                f"{rec.label}: restricted signature mismatch "
                f"(catalog {want}, matrix {got})")
            continue
        sl2 = mx.highest_sl2(alg, rdec)
        dims = sl2.grading_dims()
        prof = rec.grading()
        if (dims.get(1, 0), dims.get(2, 0)) != (prof.a, prof.b):
            failures.append(
                f"{rec.label}: grading mismatch (catalog ({prof.a}, "
                f"{prof.b}), matrix ({dims.get(1, 0)}, {dims.get(2, 0)}))")
    return failures


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_info(cat: Catalog, args) -> int:
    try:
        rec, note = cat.resolve(args.g)
    except KeyError as exc:
        return _usage_error(_key_error_message(exc),
                            getattr(exc, "suggestions", ()))
    prof = rec.grading()
    para = pr.para_hermitian_levis(cat, rec.label)
    payload = {
        "label": rec.label,
        "resolved_from": note or "",
        "aliases": sorted(rec.aliases),
        "dim": rec.dim_g,
        "hermitian": rec.hermitian,
        "complex_minimal_halfdim": rec.n_complex(),
        "real_minimal_halfdim": rec.m_real(),
        "halfdims_agree": rec.n_complex() == rec.m_real(),
        "grading": {"a": prof.a, "b": prof.b},
        "case": rec.case(),
        "para_hermitian_levis": sorted({p["levi"] for p in para}),
        "matrix_model": dc.has_matrix_model(cat, rec.label),
        "citation": rec.citation,
    }
    lines = [
        f"{rec.label}" + (f"  (resolved: {note})" if note else ""),
        f"  dim                 : {rec.dim_g}",
        f"  complex half-dim n  : {payload['complex_minimal_halfdim']}",
        f"  real half-dim m     : {payload['real_minimal_halfdim']}",
        f"  grading (a, b)      : ({prof.a}, {prof.b})",
        f"  case                : {rec.case()}",
        f"  Hermitian           : {'yes' if rec.hermitian else 'no'}",
        "  para-Hermitian Levis: "
        + ("; ".join(payload["para_hermitian_levis"]) or "none"),
        f"  matrix model        : "
        + ("available" if payload["matrix_model"] else "table-only"),
    ]
    if payload["aliases"]:
        lines.append("  aliases             : "
                     + ", ".join(payload["aliases"]))
    _emit(_report(cat, "info", {"g": args.g}, payload), args.json, lines)
    return EXIT_OK


def cmd_pair(cat: Catalog, args) -> int:
    try:
        rec, _ = cat.find_pair(args.g, args.gprime)
    except KeyError as exc:
        return _usage_error(_key_error_message(exc),
                            getattr(exc, "suggestions", ()))
    v = dc.decide_pair(cat, args.g, args.gprime)
    payload = _verdict_payload(v)
    lines = list(_verdict_lines(v))
    status = EXIT_OK if v.routes else EXIT_NEGATIVE
    if args.verify:
        if rec.recipe is None:
            payload["certificates"] = None
            payload["verify_note"] = ("table-only pair: no matrix model, "
                                      "slice certificates not run")
            lines.append("  verify: table-only pair, certificates not run")
        else:
            cert = sc.verify_coiso(cat, args.g, args.gprime,
                                   seeds=args.seeds, trials=args.trials)
            payload["certificates"] = _certificate_payload(cert)
            lines.extend("  " + ln for ln in cert.summary_lines())
            if cert.applicable and not cert.passed:
                lines.append("  INTERNAL: certificate failed for a "
                             "certified configuration")
                status = EXIT_INTERNAL
    _emit(_report(cat, "pair",
                  {"g": args.g, "gprime": args.gprime,
                   "verify": bool(args.verify), "seed": args.seed,
                   "trials": args.trials},
                  payload), args.json, lines)
    return status


def cmd_tensor(cat: Catalog, args) -> int:
    try:
        v = dc.decide_tensor(cat, args.g)
    except KeyError as exc:
        return _usage_error(_key_error_message(exc),
                            getattr(exc, "suggestions", ()))
    payload = _verdict_payload(v)
    _emit(_report(cat, "tensor", {"g": args.g}, payload), args.json,
          _verdict_lines(v))
    return EXIT_OK if v.routes else EXIT_NEGATIVE


_M_FAMILY_ORDER = ("su*(2n)", "so(n,1)", "sp(p,q)", "f4(-20)", "e6(-26)")


def _m_family(label: str):
    parsed = parse_label(label)
    if parsed is None:
        return None
    fam, params = parsed
    if fam == "sustar":
        return "su*(2n)"
    if fam == "so" and params[1] == 1:
        return "so(n,1)"
    if fam == "sp" and params[1] >= 1:
        return "sp(p,q)"
    if label in ("f4(-20)", "e6(-26)"):
        return label
    return None


def cmd_tables(cat: Catalog, args) -> int:
    which = args.which
    if which == "n":
        rows = []
        for series in sorted(roots.SERIES_RANKS):
            for rank in range(1, 9):
                if not roots.SERIES_RANKS[series](rank):
                    continue
                ct = roots.CartanType(series, rank)
                rows.append({"type": f"{series}{rank}",
                             "value": roots.n_complex_of_type(ct)})
        payload = {
            "table": "complex minimal-orbit half-dimension by Cartan type",
            "citation": cat.tables["minimal_orbit_halfdim"]["citation"],
            "rows": rows,
        }
        lines = [payload["table"] + ":"] + [
            f"  {r['type']:4s} -> {r['value']}" for r in rows
        ] + [f"  [{payload['citation']}]"]
    elif which == "m":
        groups = {}
        for rec in cat.record_list():
            if rec.n_complex() == rec.m_real():
                continue
            fam = _m_family(rec.label)
            if fam is None:
                continue
            groups.setdefault(fam, []).append(
                {"label": rec.label, "value": rec.m_real()})
        rows = []
        for fam in _M_FAMILY_ORDER:
            members = sorted(groups.get(fam, []),
                             key=lambda r: (r["value"], r["label"]))
            rows.append({"family": fam, "members": members})
        payload = {
            "table": "real minimal-orbit half-dimension where it exceeds "
                     "the complex one",
            "citation": cat.tables["highest_root_sign"]["citation"],
            "rows": rows,
        }
        lines = [payload["table"] + ":"]
        for row in rows:
            mem = ", ".join(f"{m['label']} -> {m['value']}"
                            for m in row["members"])
            lines.append(f"  {row['family']:9s}: {mem}")
        lines.append(f"  [{payload['citation']}]")
    elif which in ("para", "remaining", "bblist"):
        key = {"para": "para_hermitian",
               "remaining": "proper_pair_table",
               "bblist": "spherical_complex_pairs"}[which]
        table = cat.tables[key]
        payload = {"table": key, "citation": table["citation"],
                   "rows": table["rows"]}
        lines = [key + ":"]
        for row in table["rows"]:
            lines.append("  " + json.dumps(row, sort_keys=True))
        lines.append(f"  [{table['citation']}]")
    else:  # pragma: no cover - argparse restricts choices
        return _usage_error(f"unknown table {which!r}")
    _emit(_report(cat, "tables", {"which": which}, payload), args.json,
          lines)
    return EXIT_OK


def cmd_verify_coiso(cat: Catalog, args) -> int:
    try:
        rep = sc.verify_coiso(cat, args.g, args.gprime,
                              seeds=args.seeds, trials=args.trials)
    except KeyError as exc:
        return _usage_error(_key_error_message(exc),
                            getattr(exc, "suggestions", ()))
    except mx.NoMatrixModel as exc:
        return _usage_error(str(exc))
    payload = _certificate_payload(rep)
    lines = list(rep.summary_lines())
    _emit(_report(cat, "verify-coiso",
                  {"g": args.g, "gprime": args.gprime, "seed": args.seed,
                   "trials": args.trials}, payload), args.json, lines)
    if rep.applicable and not rep.passed:
        if not args.json:
            print("INTERNAL: certificate failed for a certified "
                  "configuration")
        return EXIT_INTERNAL
    return EXIT_OK


def cmd_sweep(cat: Catalog, args) -> int:
    rep = dc.sweep_catalog(cat)
    payload = {
        "pairs": rep["pairs"],
        "zero_route_pairs": [list(t) for t in rep["zero_route_pairs"]],
        "route_counts": rep["route_counts"],
        "pair_rows": rep["pair_rows"],
        "table2_rows": rep["table2_rows"],
        "hermitian_pairs_have_hw_route":
            rep["hermitian_pairs_have_hw_route"],
        "para_pairs_have_para_route": rep["para_pairs_have_para_route"],
        "tensor_counts": rep["tensor_counts"],
        "tensor_zero": rep["tensor_zero"],
        "tensor_rows": rep["tensor_rows"],
    }
    lines = [
        f"pairs decided       : {rep['pairs']}",
        "route counts        : " + ", ".join(
            f"{k}={v}" for k, v in rep["route_counts"].items()),
        "tensor route counts : " + ", ".join(
            f"{k}={v}" for k, v in rep["tensor_counts"].items()),
        f"zero-route pairs    : {rep['zero_route_pairs'] or 'none'}",
        f"zero-route tensors  : {rep['tensor_zero'] or 'none'}",
        f"Hermitian -> highest-weight route: "
        f"{rep['hermitian_pairs_have_hw_route']}",
        f"para-Hermitian -> para route     : "
        f"{rep['para_pairs_have_para_route']}",
        f"small-witness table rows decided : {len(rep['table2_rows'])}",
    ]
    _emit(_report(cat, "sweep", {}, payload), args.json, lines)
    if rep["zero_route_pairs"] or rep["tensor_zero"]:
        return EXIT_NEGATIVE
    return EXIT_OK


# ---------------------------------------------------------------------------
# argument parsing and dispatch
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="liecert",
        description="exact certificates for bounded-multiplicity branching")
    p.add_argument("--catalog", default=None,
                   help=f"catalog path (default: ${ENV_CATALOG} or the "
                        "packaged file)")
    p.add_argument("--json", action="store_true",
                   help="emit a deterministic JSON report")
    p.add_argument("--max-rank", type=int, default=None, metavar="R",
                   help="cross-validate classical catalog records of "
                        "restricted rank <= R against matrix models before "
                        "running the command")
    sub = p.add_subparsers(dest="command", required=True)

    q = sub.add_parser("info", help="structural invariants of one algebra")
    q.add_argument("g")
    q.set_defaults(func=cmd_info)

    q = sub.add_parser("pair", help="certification routes for a pair")
    q.add_argument("g")
    q.add_argument("gprime")
    q.add_argument("--verify", action="store_true",
                   help="also run the slice certificates backing the routes")
    q.add_argument("--trials", type=int, default=5)
    q.add_argument("--seed", type=int, default=None)
    q.set_defaults(func=cmd_pair)

    q = sub.add_parser("tensor", help="tensor-product routes for an algebra")
    q.add_argument("g")
    q.set_defaults(func=cmd_tensor)

    q = sub.add_parser("tables", help="dump an embedded table")
    q.add_argument("which",
                   choices=["n", "m", "para", "remaining", "bblist"])
    q.set_defaults(func=cmd_tables)

    q = sub.add_parser("verify-coiso",
                       help="exact slice certificates at sampled points")
    q.add_argument("g")
    q.add_argument("gprime")
    q.add_argument("--trials", type=int, default=5)
    q.add_argument("--seed", type=int, default=None)
    q.set_defaults(func=cmd_verify_coiso)

    q = sub.add_parser("sweep", help="decide every registered pair")
    q.set_defaults(func=cmd_sweep)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if hasattr(args, "seed"):
        args.seeds = (1, 2, 3) if args.seed is None else (args.seed,)
    try:
        cat = load_catalog(args.catalog)
    except CatalogError as exc:
        return _usage_error(f"catalog: {exc}")
    if args.max_rank is not None:
        failures = _cross_validate(cat, args.max_rank)
        if failures:
            for f in failures:
                print(f"INTERNAL: {f}", file=sys.stderr)
            return EXIT_INTERNAL
    return args.func(cat, args)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
