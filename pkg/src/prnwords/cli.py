"""Command line entry point: ``prnwords <subcommand> ...``.

Exit status: 0 on success, 1 on usage or input errors, 2 when a word fails
to represent its target (a constructed witness failing its own check, or
``verify`` answering false).
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from . import acceptance
from .bookgraph import ASCII_PRIME, PRIME, book, book_numbers
from .graphcore import CertificateError, InvalidArgument, concat, derive_graph, format_word, represents, uniformity
from .oracle import (
    BoundExceeded,
    ChordDiagram,
    SearchBounds,
    circle_search,
    comparability_search,
    conjecture_probe,
    local_complement,
    prn_search,
)
from .pathcycle import cycle_prn, path_word
from .textio import dumps, format_graph_text, format_word_text, graph_to_json, parse_word_text, read_graph
from .treebuilder import contains_s, root_and_label, tree_permutations

EXIT_OK, EXIT_INPUT, EXIT_CERT = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _read_word(spec: str):
    """A word given literally or as a file; a file's lines are concatenated."""
    path = Path(spec)
    if path.is_file():
        words = parse_word_text(path.read_text())
        if not words:
            raise InvalidArgument(f"{spec}: no word found")
        return concat(words)
    w = tuple(spec.split())
    if not w:
        raise InvalidArgument("empty word")
    return w


def _witness_json(w):
    if isinstance(w, ChordDiagram):
        return {"chords": w.as_dict(), "word": format_word(w.to_word())}
    if isinstance(w, list) and w and isinstance(w[0], tuple):
        return {"permutations": [format_word(p) for p in w], "word": format_word(concat(w))}
    return w


def _search_json(outcome, extra=None):
    out = {
        "found": outcome.found,
        "witness": _witness_json(outcome.witness),
        "states_examined": outcome.states_examined,
        "elapsed_ms": round(outcome.elapsed_ms, 3),
    }
    out.update(extra or {})
    return out


def _perm_payload(perms, prn):
    return {"permutations": [format_word(p) for p in perms], "word": format_word(concat(perms)), "prn": prn}


def cmd_tree(args, bounds, out):
    g = read_graph(args.graph)
    perms = tree_permutations(root_and_label(g, args.root))
    prn = 1 if g.n <= 2 else (3 if contains_s(g, bounds) is not None else 2)
    if args.json:
        p1, p2, p3 = (format_word(p) for p in perms)
        out(dumps({"p1": p1, "p2": p2, "p3": p3, "word": format_word(concat(perms)), "prn": prn}))
    else:
        out(format_word_text(perms), end="")
    return EXIT_OK


def cmd_path(args, bounds, out):
    w = path_word(args.n)
    perms = [w] if args.n <= 2 else [w[: args.n], w[args.n:]]
    payload = _perm_payload(perms, 1 if args.n <= 2 else 2)
    out(dumps(payload) if args.json else format_word_text(perms), end="" if not args.json else "\n")
    return EXIT_OK


def cmd_cycle(args, bounds, out):
    res = cycle_prn(args.n, certify_lower=args.certify, bounds=bounds)
    payload = _perm_payload(res.permutations, res.prn)
    if res.lower_bound is not None:
        payload["lower_bound"] = _search_json(res.lower_bound)
    out(dumps(payload) if args.json else format_word_text(res.permutations), end="" if not args.json else "\n")
    return EXIT_OK


def cmd_book(args, bounds, out):
    suffix = ASCII_PRIME if args.suffix else PRIME
    g = book(args.m, suffix)
    if args.graph_text:
        out(format_graph_text(g), end="")
        return EXIT_OK
    res = book_numbers(args.m, suffix, certify=args.certify, bounds=bounds)
    payload = {
        "graph": graph_to_json(g),
        "permutations": [format_word(p) for p in res.permutations],
        "word": format_word(res.witness),
        "representation_number": res.representation_number,
        "prn": res.prn,
    }
    if "circle_b3" in res.certificates:
        payload["b3_circle_search"] = _search_json(res.certificates["circle_b3"])
    if args.json:
        out(dumps(payload))
    else:
        out(format_word_text(res.permutations), end="")
        out(f"representation number {res.representation_number}, prn {res.prn}")
    return EXIT_OK


def cmd_verify(args, bounds, out):
    w = _read_word(args.word)
    g = read_graph(args.graph)
    ok = represents(w, g)
    if args.json:
        out(dumps({"represents": ok, "uniformity": uniformity(w)}))
    else:
        out(f"represents: {'true' if ok else 'false'}")
    return EXIT_OK if ok else EXIT_CERT


def cmd_derive(args, bounds, out):
    g = derive_graph(_read_word(args.word))
    if args.json:
        out(dumps(graph_to_json(g)))
    else:
        for u, v in g.edge_list():
            out(f"{u} {v}")
    return EXIT_OK


def cmd_search(args, bounds, out):
    g = read_graph(args.graph)
    res = prn_search(g, args.perms, bounds, canonical=args.canonical, workers=args.workers)
    out(dumps(_search_json(res, {"perms": args.perms})))
    return EXIT_OK


def cmd_circle(args, bounds, out):
    res = circle_search(read_graph(args.graph), bounds)
    out(dumps(_search_json(res)))
    return EXIT_OK


def cmd_lc(args, bounds, out):
    t0 = time.perf_counter()
    h = local_complement(read_graph(args.graph), args.vertex)
    out(dumps({"found": True, "witness": graph_to_json(h), "states_examined": 1,
               "elapsed_ms": round((time.perf_counter() - t0) * 1000, 3)}))
    return EXIT_OK


def cmd_comparability(args, bounds, out):
    res = comparability_search(read_graph(args.graph), bounds)
    res.witness = [list(a) for a in res.witness] if res.witness else None
    out(dumps(_search_json(res)))
    return EXIT_OK


def cmd_probe(args, bounds, out):
    t0 = time.perf_counter()
    rep = conjecture_probe(read_graph(args.graph), bounds)
    witness = {
        "verdict": rep.verdict,
        "reason": rep.reason,
        "prn_upper": rep.prn_upper,
        "permutations": [format_word(p) for p in rep.witness] if rep.witness else None,
    }
    out(dumps({"found": rep.verdict == "consistent", "witness": witness,
               "states_examined": sum(rep.searches.values()),
               "elapsed_ms": round((time.perf_counter() - t0) * 1000, 3)}))
    return EXIT_OK


def cmd_selftest(args, bounds, out):
    results = acceptance.run_all(quick=args.quick, seed=args.seed, data_dir=args.data_dir, echo=out)
    failed = [r for r in results if not r.passed]
    out(f"{len(results) - len(failed)}/{len(results)} criteria passed")
    return EXIT_OK if not failed else EXIT_CERT


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="prnwords", description="Permutational words for trees, cycles and book graphs.")
    p.add_argument("--bounds", default=None, help="search bounds, e.g. 'prn2=8,circle=8' (overrides PRNWORDS_BOUNDS)")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, help_text):
        sp = sub.add_parser(name, help=help_text)
        sp.set_defaults(fn=fn)
        sp.add_argument("--json", action="store_true", help="structured output")
        return sp

    sp = add("tree", cmd_tree, "three permutations for a tree")
    sp.add_argument("--edges", "--graph", dest="graph", required=True)
    sp.add_argument("--root", default=None)
    sp = add("path", cmd_path, "permutations for the path P_n")
    sp.add_argument("n", type=int)
    sp = add("cycle", cmd_cycle, "permutations for the even cycle C_n")
    sp.add_argument("n", type=int)
    sp.add_argument("--certify", action="store_true", help="also run the two-permutation search")
    sp = add("book", cmd_book, "book graph B_m, its words and numbers")
    sp.add_argument("m", type=int)
    sp.add_argument("--suffix", action="store_true", help="write primes as _p")
    sp.add_argument("--graph-text", action="store_true", help="print the graph in graph text format")
    sp.add_argument("--certify", action="store_true", help="run the lower-bound searches too")
    sp = add("verify", cmd_verify, "does a word represent a graph")
    sp.add_argument("--word", required=True)
    sp.add_argument("--graph", required=True)
    sp = add("derive", cmd_derive, "graph represented by a word")
    sp.add_argument("--word", required=True)
    sp = add("search", cmd_search, "exhaustive k-permutation search")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--perms", type=int, required=True)
    sp.add_argument("--canonical", action="store_true")
    sp.add_argument("--workers", type=int, default=1)
    sp = add("circle", cmd_circle, "exhaustive chord-diagram search")
    sp.add_argument("--graph", required=True)
    sp = add("lc", cmd_lc, "local complementation")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--vertex", required=True)
    sp = add("comparability", cmd_comparability, "transitive orientation search")
    sp.add_argument("--graph", required=True)
    sp = add("probe", cmd_probe, "check a graph against the prn <= 3 conjecture")
    sp.add_argument("--graph", required=True)
    sp = add("selftest", cmd_selftest, "run the acceptance criteria")
    sp.add_argument("--quick", action="store_true", help="skip the two long exhaustive searches")
    sp.add_argument("--seed", type=int, default=acceptance.DEFAULT_SEED)
    sp.add_argument("--data-dir", default=None, help="alternative golden-data directory")
    return p


def run(argv=None, out=None, err=None) -> int:
    out = out or print
    err = err or (lambda msg: print(msg, file=sys.stderr))
    try:
        args = build_parser().parse_args(argv)
        bounds = SearchBounds.from_env()
        if args.bounds:
            bounds = bounds.updated(args.bounds)
        return args.fn(args, bounds, out)
    except UsageError as exc:
        err(str(exc))
        return EXIT_INPUT
    except CertificateError as exc:
        err(f"certificate failure: {exc}")
        return EXIT_CERT
    except (InvalidArgument, BoundExceeded) as exc:
        err(f"error: {exc}")
        return EXIT_INPUT


def main():
    sys.exit(run())
