"""Command line front end.

Subcommands mirror the library modules: ``rootdata``, ``dominance``,
``relations``, ``admissible``, ``split-search``, ``char``, ``embed-check``,
``crystal`` and ``reproduce``.  JSON output is byte-stable under a fixed
invocation: keys are sorted and term lists are ordered by (grade, weight).

Exit codes: 0 on success, 1 when a check reports a violation or a search
finds nothing, 2 on a configuration error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from .acceptance import run_all
from .admissibility import (balanced_split, enumerate_dominant_splits,
                            is_r_admissible, pull_back)
from .characters import demazure_character, embedding_certificate
from .crystal import (build_crystal, component_of, crystal_decomposition,
                      demazure_subcrystal, tensor_crystal, to_dot)
from .relations import (demazure_p, generalized_weyl_p, relations_M,
                        relations_Mpp, relations_Mprime,
                        simplified_demazure_relations, weyl_p)
from .rootdata import RootSystem, root_system
from .weights import AffineWeight, dominance_algorithm, finite_dominance


def _coords(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(c) for c in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            "expected comma-separated integers, got %r" % text)


def _word(text: str) -> tuple[int, ...]:
    if text == "":
        return ()
    return _coords(text)


def _split_arg(text: str) -> tuple[tuple[int, ...], ...]:
    return tuple(_coords(part) for part in text.split("|"))


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True, indent=2))


@dataclass
class RunConfig:
    """Validated flag bundle; constructing it builds the root system, so a
    bad type/rank pair fails before any subcommand runs."""

    args: argparse.Namespace
    rs: RootSystem | None = None

    def __post_init__(self):
        a = self.args
        if getattr(a, "family", None) is not None:
            self.rs = root_system(a.family, a.rank)
            for name in ("mu", "lam", "component_weight"):
                val = getattr(a, name, None)
                if val is not None and len(val) != self.rs.rank:
                    raise ValueError("%s has %d coordinates, rank is %d"
                                     % (name, len(val), self.rs.rank))
            split = getattr(a, "split", None)
            if split is not None:
                for part in split:
                    if len(part) != self.rs.rank:
                        raise ValueError("split part %r has %d coordinates, "
                                         "rank is %d"
                                         % (part, len(part), self.rs.rank))
                k = getattr(a, "k", None)
                if k is not None and k != len(split):
                    raise ValueError("--k %d disagrees with %d split parts"
                                     % (k, len(split)))


def _add_system(ap, *, mu=False, mu_required=False):
    ap.add_argument("--type", dest="family", required=True,
                    choices=["A", "B", "C", "D", "E", "F", "G"],
                    help="simple type")
    ap.add_argument("--rank", type=int, required=True)
    if mu:
        ap.add_argument("--mu", type=_coords, required=mu_required,
                        help="weight in fundamental coordinates, e.g. 1,-2")


# -- subcommands -------------------------------------------------------------

def _cmd_rootdata(cfg: RunConfig) -> int:
    rs = cfg.rs
    _emit({
        "family": rs.family,
        "rank": rs.rank,
        "cartan": [list(row) for row in rs.cartan],
        "positive_roots": [
            {"coords": list(root.coords),
             "height": root.height,
             "d": rs.d(root),
             "pairing_row": list(rs.coroot_vector(root))}
            for root in rs.positive_roots],
    })
    return 0


def _cmd_dominance(cfg: RunConfig) -> int:
    a = cfg.args
    w = AffineWeight(a.mu, a.level, a.degree)
    lam, word = dominance_algorithm(cfg.rs, w)
    _emit({
        "input": {"finite": list(w.finite), "level": w.level,
                  "degree": w.degree},
        "dominant": {"finite": list(lam.finite), "level": lam.level,
                     "degree": lam.degree},
        "word": list(word),
        "length": len(word),
    })
    return 0


def _relation_json(rel):
    return {"root": list(rel.root.coords), "sign": rel.sign,
            "factors": [list(f) for f in rel.factors], "kind": rel.kind,
            "index": rel.index, "tags": list(rel.tags)}


def _cmd_relations(cfg: RunConfig) -> int:
    a = cfg.args
    if a.preset == "demazure":
        if a.k is None:
            raise ValueError("--k is required for the demazure preset")
        fam = demazure_p(cfg.rs, a.mu, a.k)
    elif a.preset == "weyl":
        fam = weyl_p(cfg.rs, a.mu)
    else:
        fam = generalized_weyl_p(cfg.rs, a.mu)
    if a.set == "simplified":
        if a.preset != "demazure":
            raise ValueError("the simplified set exists only for the "
                             "demazure preset")
        rels = simplified_demazure_relations(cfg.rs, a.mu, a.k)
    else:
        rels = {"M": relations_M, "Mprime": relations_Mprime,
                "Mpp": relations_Mpp}[a.set](fam)
    _emit({"preset": a.preset, "mu": list(a.mu), "k": a.k, "set": a.set,
           "relations": [_relation_json(r) for r in rels]})
    return 0


def _report_json(rep):
    return {
        "mu": list(rep.mu),
        "split": [list(p) for p in rep.split],
        "r": rep.r,
        "k": rep.k,
        "preadmissible": rep.preadmissible,
        "admissible": rep.admissible,
        "sign_witnesses": [
            {"root": list(root.coords), "part": idx, "pairing": pair}
            for root, idx, pair in rep.sign_witnesses],
        "records": [
            {"root": list(rec.profile.root.coords),
             "sign": rec.profile.sign,
             "d": rec.profile.d,
             "values": list(rec.profile.values),
             "x": rec.profile.x,
             "t": rec.profile.t,
             "m": rec.profile.m(rep.r),
             "condition_a": rec.condition_a,
             "condition_b": rec.condition_b,
             "ok": rec.ok}
            for rec in rep.records],
    }


def _cmd_admissible(cfg: RunConfig) -> int:
    a = cfg.args
    rep = is_r_admissible(cfg.rs, a.mu, a.split, a.r)
    _emit(_report_json(rep))
    return 0 if rep.admissible else 1


def _cmd_split_search(cfg: RunConfig) -> int:
    a = cfg.args
    rs = cfg.rs
    if a.balanced:
        split = balanced_split(rs, a.mu, a.k)
        rep = is_r_admissible(rs, a.mu, split, 1)
        _emit({"split": [list(p) for p in split],
               "admissible_1": rep.admissible})
        return 0 if rep.admissible else 1
    lam, word = finite_dominance(rs, a.mu)
    found = 0
    for dom in enumerate_dominant_splits(rs, lam, a.k):
        cand = pull_back(rs, word, dom)
        admissible = is_r_admissible(rs, a.mu, cand, 1).admissible
        if a.find_1_admissible and not admissible:
            continue
        print(json.dumps({"split": [list(p) for p in cand],
                          "admissible_1": admissible}, sort_keys=True))
        found += 1
        if a.first and found:
            break
    return 0 if found else 1


def _cmd_char(cfg: RunConfig) -> int:
    a = cfg.args
    char = demazure_character(cfg.rs, a.mu, a.level)
    terms = [{"wt": list(fin), "grade": grade, "mult": mult}
             for (fin, _lvl, grade), mult in char.sorted_terms()]
    if a.json:
        _emit({"terms": terms})
    else:
        print("dimension %d" % char.dimension())
        for t in terms:
            print("grade %d  weight %s  mult %d"
                  % (t["grade"], tuple(t["wt"]), t["mult"]))
    return 0


def _cmd_embed_check(cfg: RunConfig) -> int:
    a = cfg.args
    cert = embedding_certificate(cfg.rs, a.mu, a.split, a.r)
    rep = is_r_admissible(cfg.rs, a.mu, a.split, a.r)
    ok = cert.certified and rep.admissible
    _emit({
        "status": "Certified" if ok else "Violation",
        "mu": list(cert.mu),
        "split": [list(p) for p in cert.split],
        "r": cert.r,
        "k": cert.k,
        "split_admissible": rep.admissible,
        "admissibility_violations": [
            {"root": list(rec.profile.root.coords),
             "sign": rec.profile.sign,
             "condition_a": rec.condition_a,
             "condition_b": rec.condition_b}
            for rec in rep.failures],
        "character_failures": [
            {"wt": list(fin), "grade": grade, "need": need, "have": have}
            for fin, grade, need, have in cert.failures],
    })
    return 0 if ok else 1


def _tensor_factor(rs, arg, budget):
    if ":" in arg:
        coords_text, word_text = arg.split(":", 1)
    else:
        coords_text, word_text = arg, ""
    lam = _coords(coords_text)
    if len(lam) != rs.rank:
        raise ValueError("tensor factor %r has %d coordinates, rank is %d"
                         % (arg, len(lam), rs.rank))
    b = build_crystal(rs, lam, budget=budget)
    word = _word(word_text)
    if word:
        b = demazure_subcrystal(rs, b, word, lam)
    return b


def _cmd_crystal(cfg: RunConfig) -> int:
    a = cfg.args
    rs = cfg.rs
    budget = int(os.environ.get("DEMAZURE_VERTEX_BUDGET", 10 ** 6))
    b = build_crystal(rs, a.lam, budget=budget)
    if a.word:
        b = demazure_subcrystal(rs, b, a.word, a.lam)
    for arg in a.tensor or ():
        b = tensor_crystal(rs, b, _tensor_factor(rs, arg, budget))
    if a.component_weight is not None:
        try:
            b = component_of(b, a.component_weight)
        except ValueError as exc:
            # absent or ambiguous weight is a not-found outcome, not a
            # configuration error
            print("error: %s" % exc, file=sys.stderr)
            return 1
    index = {v: pos for pos, v in enumerate(b.vertices)}
    if a.dot is not None:
        text = to_dot(b)
        if a.dot == "-":
            sys.stdout.write(text)
        else:
            with open(a.dot, "w") as fh:
                fh.write(text)
    if a.json:
        out = {
            "vertices": [{"index": index[v], "weight": list(v.weight())}
                         for v in b.vertices],
            "edges": [[index[u], index[v], i] for u, v, i in b.edges],
            "highest": index.get(b.highest),
        }
        if a.decompose is not None:
            out["decomposition"] = [
                {"weight": list(piece.weight), "size": piece.size,
                 "count": piece.count}
                for piece in crystal_decomposition(b, a.decompose)]
        _emit(out)
    elif a.dot is None:
        print("%d vertices, %d edges" % (len(b.vertices), len(b.edges)))
        if a.decompose is not None:
            for piece in crystal_decomposition(b, a.decompose):
                print("source %s  size %d  count %d"
                      % (piece.weight, piece.size, piece.count))
    return 0


def _cmd_reproduce(cfg: RunConfig) -> int:
    rows = run_all(cfg.args.seed)
    width = max(len(name) for name, _, _ in rows)
    failed = 0
    for name, ok, detail in rows:
        print("%-*s : %s  %s" % (width, name, "PASS" if ok else "FAIL",
                                 detail))
        if not ok:
            failed += 1
    print("%d of %d criteria passed" % (len(rows) - failed, len(rows)))
    return 1 if failed else 0


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="demazure",
        description="Exact computations with graded Demazure-type modules.")
    sub = parser.add_subparsers(dest="command", required=True)

    ap = sub.add_parser("rootdata", help="positive roots and pairing table")
    _add_system(ap)
    ap.set_defaults(handler=_cmd_rootdata)

    ap = sub.add_parser("dominance",
                        help="walk an affine weight to the dominant chamber")
    _add_system(ap, mu=True, mu_required=True)
    ap.add_argument("--level", type=int, required=True)
    ap.add_argument("--degree", type=int, default=0)
    ap.set_defaults(handler=_cmd_dominance)

    ap = sub.add_parser("relations", help="relation sets of a presentation")
    _add_system(ap, mu=True, mu_required=True)
    ap.add_argument("--preset", required=True,
                    choices=["demazure", "weyl", "genweyl"])
    ap.add_argument("--k", type=int, default=None)
    ap.add_argument("--set", default="simplified",
                    choices=["M", "Mprime", "Mpp", "simplified"])
    ap.set_defaults(handler=_cmd_relations)

    ap = sub.add_parser("admissible",
                        help="full admissibility report for one split")
    _add_system(ap, mu=True, mu_required=True)
    ap.add_argument("--split", type=_split_arg, required=True,
                    help='parts separated by "|", coords by ",", '
                             'e.g. "1,1|1,0"')
    ap.add_argument("--k", type=int, default=None,
                    help="optional cross-check against the part count")
    ap.add_argument("--r", type=int, required=True)
    ap.set_defaults(handler=_cmd_admissible)

    ap = sub.add_parser("split-search",
                        help="enumerate candidate splits of a weight")
    _add_system(ap, mu=True, mu_required=True)
    ap.add_argument("--k", type=int, required=True)
    ap.add_argument("--find-1-admissible", action="store_true",
                    help="print only 1-admissible candidates; "
                             "exit 1 when none exist")
    ap.add_argument("--first", action="store_true",
                    help="stop after the first printed candidate")
    ap.add_argument("--balanced", action="store_true",
                    help="print the balanced candidate only")
    ap.set_defaults(handler=_cmd_split_search)

    ap = sub.add_parser("char", help="graded character of one module")
    _add_system(ap, mu=True, mu_required=True)
    ap.add_argument("--level", "--k", dest="level", type=int, required=True)
    ap.add_argument("--json", action="store_true")
    ap.set_defaults(handler=_cmd_char)

    ap = sub.add_parser("embed-check",
                        help="certify one split against the character bound")
    _add_system(ap, mu=True, mu_required=True)
    ap.add_argument("--split", type=_split_arg, required=True)
    ap.add_argument("--k", type=int, default=None)
    ap.add_argument("--r", type=int, required=True)
    ap.set_defaults(handler=_cmd_embed_check)

    ap = sub.add_parser("crystal", help="build a path crystal and project it")
    _add_system(ap)
    ap.add_argument("--lambda", dest="lam", type=_coords, required=True,
                    help="dominant highest weight")
    ap.add_argument("--word", type=_word, default=(),
                    help="take the subcrystal of this Weyl word")
    ap.add_argument("--tensor", action="append", metavar="COORDS[:WORD]",
                    help="tensor with another crystal, e.g. 0,1:2; "
                             "repeatable")
    ap.add_argument("--component-weight", type=_coords, default=None,
                    help="restrict to the component of this weight")
    ap.add_argument("--decompose", type=_word, default=None, metavar="NODES",
                    help="also split along arrows with these labels")
    ap.add_argument("--dot", default=None, metavar="FILE",
                    help='write DOT to FILE ("-" for stdout)')
    ap.add_argument("--json", action="store_true")
    ap.set_defaults(handler=_cmd_crystal)

    ap = sub.add_parser("reproduce",
                        help="re-run the bundled acceptance criteria")
    ap.add_argument("--paper-examples", action="store_true",
                    help="run the worked examples and property grids "
                             "(the default and only mode)")
    ap.add_argument("--seed", type=int, default=0,
                    help="seed for the randomized property criteria")
    ap.set_defaults(handler=_cmd_reproduce)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = RunConfig(args)
        return args.handler(cfg)
    except (ValueError, RuntimeError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
