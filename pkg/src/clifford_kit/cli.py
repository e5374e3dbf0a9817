"""Batch front-end.  Every subcommand prints one JSON report on stdout.

Exit status: 0 when the verdict holds, 1 when it fails (witnesses are in the
report), 2 for bad input or a size cap.

Semigroup arguments are table files or construction expressions such as
``gdot(z2)`` or ``reduced(chain3,{0},s3)``.  Metric arguments are metric files
or one of ``discrete``, ``random[:seed]``, ``tree[:seed]`` and ``word`` (the
bi-invariant word metric of a group).
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time
from fractions import Fraction

from . import catalog as cat
from . import constructions as cons
from . import embeddings as emb
from . import metrics as met
from .errors import CliffordKitError, ParseError
from .homs import enumerate_homs
from .semigroup import classify, clifford_structure, format_table, maximal_subgroups

EXIT_OK, EXIT_FALSE, EXIT_INPUT = 0, 1, 2


def _semigroup(text):
    return cat.build(text, source=text)


def _metric(text, S):
    if os.path.isfile(text):
        return met.read_metric(text, S)
    name, _, seed = text.partition(":")
    seed = int(seed) if seed else 0
    if name == "discrete":
        return met.discrete_metric(S)
    if name == "random":
        return met.random_rational_metric(S, seed=seed)
    if name == "tree":
        return met.spanning_tree_metric(S, seed=seed)
    if name == "word":
        return met.bi_invariant_word_metric(S)
    raise ParseError(f"unknown metric or missing file {text!r}", 1, 1, text)


def _labels(S, xs):
    return [S.label(x) for x in xs]


def _table_dict(S):
    return {"size": S.size, "labels": list(S.labels), "table": S.table.tolist()}


# ---------------------------------------------------------------------------
# subcommands; each returns (report, verdict)


def cmd_analyze(a):
    S = _semigroup(a.table)
    r = classify(S)
    out = {
        "size": S.size,
        "is_semilattice": r.is_semilattice,
        "is_group": r.is_group,
        "is_regular": r.is_regular,
        "is_inverse": r.is_inverse,
        "is_clifford": r.is_clifford,
        "is_commutative": r.is_commutative,
        "idempotents": _labels(S, r.idempotents),
        "idempotents_commute": r.idempotents_commute,
        "identity": None if r.identity is None else S.label(r.identity),
    }
    if r.is_clifford:
        C = clifford_structure(S)
        out["inverse"] = _labels(S, C.inverse)
        out["pi"] = _labels(S, C.pi)
        out["maximal_subgroups"] = {
            S.label(e): _labels(S, g) for e, g in sorted(maximal_subgroups(S, C).groups.items())
        }
    return out, True


def cmd_classify(a):
    S = _semigroup(a.table)
    flags = emb.classify_embeddability(S, a.levels)
    return flags.as_dict(), True


def cmd_homs(a):
    X, Y = _semigroup(a.source), _semigroup(a.target)
    homs = enumerate_homs(X, Y, method=a.method)
    shown = homs if a.limit is None else homs[:a.limit]
    return {
        "count": len(homs),
        "method": a.method,
        "homs": [_labels(Y, h.map) for h in shown],
    }, True


def cmd_product(a):
    A, B = _semigroup(a.left), _semigroup(a.right)
    return _table_dict(cons.direct_product(A, B)), True


def cmd_reduced(a):
    E, H = _semigroup(a.E), _semigroup(a.H)
    ideal = cat.parse_subset(E, a.ideal, source=a.ideal)
    rp = cons.reduced_product(E, ideal, H)
    out = _table_dict(rp.S)
    out["ideal"] = _labels(E, sorted(ideal))
    out["is_clifford"] = classify(rp.S).is_clifford
    return out, True


def cmd_cone(a):
    rp = cons.cone(_semigroup(a.group), a.levels)
    return _table_dict(rp.S), True


def _A(S, text):
    if text is None:
        return None
    return sorted(S.index(t.strip()) for t in text.split(",") if t.strip())


def cmd_embed1(a):
    S = _semigroup(a.table)
    rep = emb.h_A(S, _A(S, a.A), allow_non_dense=a.force)
    return rep.as_dict(), rep.ok


def cmd_embed2(a):
    S = _semigroup(a.table)
    rep = emb.pi_hat_h_AA(S, _A(S, a.A), a.levels, allow_non_dense=a.force)
    return rep.as_dict(), rep.ok


def _witness_labels(S, flags):
    return {k: _labels(S, v) for k, v in flags.witnesses.items()}


def cmd_metric_check(a):
    S = _semigroup(a.table)
    M = _metric(a.metric, S)
    flags = met.check_metric_flags(M, strict=False)
    out = flags.as_dict()
    out["witnesses"] = _witness_labels(S, flags) if flags.metric else out["witnesses"]
    verdict = flags.metric and (flags.subinvariant if flags.subinvariant is not None
                                else flags.left_sub and flags.right_sub)
    return out, verdict


def cmd_metric_closure(a):
    S = _semigroup(a.table)
    M = _metric(a.metric, S)
    rho = met.subinvariant_closure(M)
    flags = met.check_metric_flags(rho)
    rows = [[met.format_rational(rho(x, y)) for y in range(S.size)] for x in range(S.size)]
    return {"closure": rows, "flags": flags.as_dict()}, bool(flags.subinvariant)


def _points(G, text):
    pts = []
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        t, _, h = item.partition(":")
        try:
            level = Fraction(t)
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"bad cone level {t!r}", 1, 1, "--points") from None
        if level == 0:
            pts.append(met.ConePoint(0, 0))
        elif not h:
            raise ParseError(f"cone point {item!r} needs t:h", 1, 1, "--points")
        else:
            try:
                pts.append(met.ConePoint(level, G.index(h)))
            except KeyError:
                raise ParseError(f"no element {h!r} in G", 1, 1, "--points") from None
    return pts


def cmd_cone_metric(a):
    G = _semigroup(a.group)
    dG = _metric(a.metric, G)
    rep = met.verify_cone_metric(G, dG, _points(G, a.points))
    return rep.as_dict(), rep.passed


def cmd_refute64(a):
    eps = met.parse_rational(a.epsilon, source="--epsilon")
    if a.oracle == "euclid":
        oracle = met.euclid_oracle(a.N)
    elif a.oracle == "discrete":
        oracle = met.discrete_oracle(a.N)
    elif os.path.isfile(a.oracle):
        with open(a.oracle) as fh:
            oracle = met.parse_oracle(fh.read(), source=a.oracle)
    else:
        raise ParseError(f"unknown oracle or missing file {a.oracle!r}", 1, 1, a.oracle)
    ref = met.refute_example64(oracle, eps)
    out = ref.as_dict()
    out["oracle"] = oracle.name
    return out, ref.verdict != "inconclusive"


def cmd_catalog(a):
    names = [n for n, S in cat.members(max_size=a.max_size)]
    return {"count": len(names), "members": names}, True


def cmd_dump(a):
    sys.stdout.write(format_table(_semigroup(a.table)))
    return None, True


# ---------------------------------------------------------------------------


def build_parser():
    p = argparse.ArgumentParser(prog="clifford-kit", description=__doc__.split("\n")[0])
    p.add_argument("--no-timing", action="store_true", help="omit the elapsed time field")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, *args):
        sp = sub.add_parser(name)
        for arg in args:
            sp.add_argument(arg)
        sp.add_argument("--no-timing", action="store_true", default=argparse.SUPPRESS)
        sp.set_defaults(func=func)
        return sp

    add("analyze", cmd_analyze, "table")
    add("classify", cmd_classify, "table").add_argument("--levels", type=int, default=4)
    sp = add("homs", cmd_homs, "source", "target")
    sp.add_argument("--method", choices=("auto", "scan", "backtrack"), default="auto")
    sp.add_argument("--limit", type=int)
    add("product", cmd_product, "left", "right")
    add("reduced", cmd_reduced, "E", "ideal", "H")
    add("cone", cmd_cone, "group").add_argument("--levels", type=int, default=1)
    for name, func in (("embed1", cmd_embed1), ("embed2", cmd_embed2)):
        sp = add(name, func, "table")
        sp.add_argument("--A", help="comma-separated idempotent labels (default: all of E)")
        sp.add_argument("--force", action="store_true", help="allow a non-dense A")
        if name == "embed2":
            sp.add_argument("--levels", type=int, default=1)
    add("metric-check", cmd_metric_check, "table", "metric")
    add("metric-closure", cmd_metric_closure, "table", "metric")
    add("cone-metric", cmd_cone_metric, "group", "metric").add_argument(
        "--points", required=True, help="comma-separated t:h points; 0 is the apex")
    sp = add("refute64", cmd_refute64)
    sp.add_argument("--oracle", required=True)
    sp.add_argument("--epsilon", required=True)
    sp.add_argument("--N", type=int, default=1000)
    add("catalog", cmd_catalog).add_argument("--max-size", type=int, default=cat.CATALOG_MAX_ELEMENTS)
    add("dump", cmd_dump, "table")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    try:
        report, verdict = args.func(args)
    except (CliffordKitError, ValueError, KeyError, OSError) as exc:
        err = {"command": args.command, "error": type(exc).__name__, "message": str(exc)}
        print(json.dumps(err, sort_keys=True, indent=2))
        return EXIT_INPUT
    if report is None:
        return EXIT_OK if verdict else EXIT_FALSE
    out = {"command": args.command, "verdict": bool(verdict), "report": report,
           "input": {k: v for k, v in sorted(vars(args).items())
                     if k not in ("func", "no_timing", "command")}}
    if not args.no_timing:
        out["elapsed_seconds"] = round(time.perf_counter() - start, 6)
    print(json.dumps(out, sort_keys=True, indent=2))
    return EXIT_OK if verdict else EXIT_FALSE


if __name__ == "__main__":
    sys.exit(main())
