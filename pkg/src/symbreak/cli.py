"""Command-line front end: ``symbreak <subcommand> [options]``.

Every subcommand reads graphs from ``--input`` (edge list or graph6, one
graph per line) or ``--g6``, falling back to standard input, and prints one
JSON report per graph. A failed verdict gives exit status 1; usage and input
errors give 2.
"""

from __future__ import annotations

import argparse
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Sequence

from .breaker import BreakerFailure, HubPlan, hubs_by_degree, run_full_construction
from .canonical import (PreconditionError, canonical_edge_colouring,
                        check_lemma_fixed_point_free, check_stabiliser_bound, explain_patch)
from .corpus import MAX_CORPUS_N, corpus
from .distinguishing import (EDGE, VERTEX, Colouring, count_distinguishing,
                             distinguishing_index, distinguishing_number, is_distinguishing)
from .graph import Graph, GraphFormatError, line_graph, parse_graph, write_graph6
from .motion import edge_motion, motion, rs_bound_check
from .perm import CutoffExceeded, default_cutoff
from .report import Report
from .search import automorphism_group
from .transfer import transfer_colouring, whitney_check

COMMANDS = ("aut", "motion", "dist-number", "dist-index", "count", "canonical",
            "break", "transfer", "corpus")


def _int_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(x) for x in text.replace(" ", "").split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--input", metavar="FILE", help="graph file (edge list or graph6)")
    p.add_argument("--g6", metavar="STRING", help="a single graph given inline as graph6")
    p.add_argument("--format", choices=("g6", "edgelist"), help="input format (auto-detected)")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--cutoff", type=int, default=None,
                   help="group enumeration cutoff (default: $SYMBREAK_CUTOFF or 10^6)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="symbreak", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser("aut", help="automorphism group order and generators")
    _common(p)

    p = sub.add_parser("motion", help="vertex and edge motion")
    _common(p)
    p.add_argument("--rs", action="store_true", help="also evaluate the motion criterion")

    for name, what in (("dist-number", "distinguishing number D(G)"),
                       ("dist-index", "distinguishing index D'(G)")):
        p = sub.add_parser(name, help=what)
        _common(p)
        p.add_argument("--method", choices=("pruned", "exhaustive"), default="pruned")

    p = sub.add_parser("count", help="count distinguishing colourings")
    _common(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--kind", choices=(VERTEX, EDGE), default=VERTEX)

    p = sub.add_parser("canonical", help="canonical edge colouring of a vertex colouring")
    _common(p)
    p.add_argument("--colouring", type=_int_list,
                   help="vertex colouring, comma separated (default: a minimal distinguishing one)")
    p.add_argument("--k", type=int, help="size of the colour group (default: max colour + 1)")
    p.add_argument("--patch", action="store_true", help="build the k+1 distinguishing edge colouring")
    p.add_argument("--check-lemma", action="store_true",
                   help="check the fixed-point-free and stabiliser-order properties")

    p = sub.add_parser("break", help="hub encoding and path packing 2-edge-colouring")
    _common(p)
    hubs = p.add_mutually_exclusive_group()
    hubs.add_argument("--hubs", type=_int_list, default=None, help="hub vertices in order")
    hubs.add_argument("--hub-degree-threshold", type=int, default=None,
                      help="use every vertex of at least this degree as a hub")
    p.add_argument("--d-seq", type=_int_list, default=None,
                   help="black degrees for the hubs (default 1,2,3,...)")
    p.add_argument("--l-seq", type=_int_list, default=None,
                   help="path lengths, strictly increasing, first > 1 (default 2,3,4,...)")
    p.add_argument("--component-threshold", type=int, default=2,
                   help="target components with more vertices than this")

    p = sub.add_parser("transfer", help="natural map to the line graph and colouring transfer")
    _common(p)
    p.add_argument("--colouring", type=_int_list, help="edge colouring of G, comma separated")
    p.add_argument("--check-whitney", action="store_true")

    p = sub.add_parser("corpus", help="enumerate graphs up to isomorphism")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--n-min", type=int, default=1)
    p.add_argument("--connected", action="store_true")
    p.add_argument("--run", choices=("aut", "motion", "dist-number", "dist-index", "transfer"),
                   help="run this analysis on every corpus graph instead of listing it")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--cutoff", type=int, default=None)
    return parser


# -- per-command workers ---------------------------------------------------

def _do_aut(g: Graph, args, rep: Report) -> None:
    grp = automorphism_group(g, cutoff=args.cutoff)
    rep.results.update(grp.to_json())


def _do_motion(g: Graph, args, rep: Report) -> None:
    mv = motion(g, args.cutoff)
    me = edge_motion(g, args.cutoff)
    rep.results.update(motion=mv.value, edge_motion=me.value, aut_order=mv.aut_order)
    rep.witnesses["witness"] = list(mv.witness) if mv.witness else None
    rep.witnesses["edge_witness"] = list(me.witness) if me.witness else None
    rep.verdict("edge_motion_exists_iff_motion_exists", (mv.value is None) == (me.value is None))
    if getattr(args, "rs", False):
        rs = rs_bound_check(g, cutoff=args.cutoff)
        rep.results["rs_bound_holds"] = rs.bound_holds
        rep.results["d_at_most_2"] = rs.d_at_most_2
        rep.verdict("rs_prediction", (not rs.bound_holds) or bool(rs.d_at_most_2))


def _do_dist(g: Graph, args, rep: Report, index: bool) -> None:
    fn = distinguishing_index if index else distinguishing_number
    res = fn(g, method=getattr(args, "method", "pruned"), cutoff=args.cutoff)
    rep.results["value"] = res.value
    rep.witnesses["witness_colouring"] = res.witness.to_json() if res.witness else None
    if res.witness is not None:
        ok, _ = is_distinguishing(g, res.witness, args.cutoff)
        rep.verdict("witness_is_distinguishing", ok)


def _do_count(g: Graph, args, rep: Report) -> None:
    res = count_distinguishing(g, args.k, args.kind, cutoff=args.cutoff)
    rep.results.update(labelled=res.labelled, classes=res.classes, aut_order=res.aut_order,
                       k=args.k, kind=args.kind)
    rep.verdict("free_action", res.classes * res.aut_order == res.labelled)


def _do_canonical(g: Graph, args, rep: Report) -> None:
    if args.colouring is None:
        base = distinguishing_number(g, cutoff=args.cutoff).witness
        if args.k is not None:
            base = Colouring(VERTEX, base.values, args.k)
    else:
        base = Colouring.vertex(args.colouring, args.k)
    cc = canonical_edge_colouring(g, base)
    rep.results["base"] = base.to_json()
    rep.results["derived"] = cc.derived.to_json()
    ok, wit = is_distinguishing(g, base, args.cutoff)
    rep.results["base_distinguishing"] = ok
    if args.check_lemma or args.patch:
        if not ok:
            rep.verdict("precondition_distinguishing", False, witness=list(wit))
            return
    if args.check_lemma:
        lem = check_lemma_fixed_point_free(g, base, args.cutoff)
        rep.verdict("fixed_point_free", lem.holds, checked=lem.checked,
                    violation=[list(lem.violation[0]), lem.violation[1]] if lem.violation else None)
        st = check_stabiliser_bound(g, base, args.cutoff)
        rep.verdict("stabiliser_bound", st.holds, order=st.stabiliser_order, k=st.k)
    if args.patch:
        try:
            pr = explain_patch(g, base)
        except PreconditionError as exc:
            rep.verdict("patch", False, error=str(exc))
            return
        rep.results["patched"] = pr.colouring.to_json()
        rep.results["patch_branch"] = pr.branch
        rep.results["recoloured_edges"] = list(pr.recoloured)
        rep.verdict("patched_distinguishing", is_distinguishing(g, pr.colouring, args.cutoff)[0],
                    colours_used=pr.colouring.colours_used(), bound=base.k + 1)


def _do_break(g: Graph, args, rep: Report) -> None:
    if args.hubs is not None:
        hubs = args.hubs
    elif args.hub_degree_threshold is not None:
        hubs = hubs_by_degree(g, args.hub_degree_threshold)
    else:
        hubs = []
    d = args.d_seq if args.d_seq is not None else list(range(1, len(hubs) + 1))
    lengths = args.l_seq if args.l_seq is not None else list(range(2, max(g.n, 2) + 2))
    plan = HubPlan(tuple(hubs), tuple(d))
    rep.results["hubs"] = list(plan.hubs)
    rep.results["d_seq"] = list(plan.d)
    rep.results["l_seq"] = list(lengths)
    try:
        res = run_full_construction(g, plan, lengths, args.component_threshold)
    except BreakerFailure as exc:
        rep.results["failure"] = {"reason": exc.reason, "phase": exc.phase, "message": str(exc),
                                  "details": exc.details,
                                  "state": exc.state.to_json() if exc.state is not None else None}
        rep.verdict("construction", False, reason=exc.reason)
        return
    rep.results.update(res.report())
    rep.witnesses["colouring"] = {str(e): c for e, c in enumerate(res.colouring.values)}
    rep.verdict("construction", True)
    rep.verdict("distinguishing", res.verified)


def _do_transfer(g: Graph, args, rep: Report) -> None:
    if g.m == 0:
        rep.verdict("has_edges", False)
        return
    lg, emap = line_graph(g)
    rep.results["line_graph6"] = write_graph6(lg) if lg.n < 63 else None
    rep.results["edge_to_vertex"] = [emap[e] for e in range(g.m)]
    if getattr(args, "check_whitney", False) or args.command == "corpus":
        wv = whitney_check(g, args.cutoff)
        rep.results.update(aut_order=wv.aut_order, line_aut_order=wv.line_aut_order,
                           whitney=wv.label)
        if wv.in_scope:
            rep.verdict("whitney_bijective", wv.bijective)
    colouring = getattr(args, "colouring", None)
    if colouring is not None:
        c = Colouring.edge(colouring)
        t = transfer_colouring(g, c)
        rep.results["transferred"] = t.to_json()
        left = is_distinguishing(g, c, args.cutoff)[0]
        right = is_distinguishing(lg, t, args.cutoff)[0]
        rep.results["distinguishing_in_g"] = left
        rep.results["distinguishing_in_line_graph"] = right
        if g.n > 4:
            rep.verdict("distinguishing_transfers", left == right)


_WORKERS = {
    "aut": _do_aut,
    "motion": _do_motion,
    "dist-number": lambda g, a, r: _do_dist(g, a, r, False),
    "dist-index": lambda g, a, r: _do_dist(g, a, r, True),
    "count": _do_count,
    "canonical": _do_canonical,
    "break": _do_break,
    "transfer": _do_transfer,
}


def run_one(command: str, args: argparse.Namespace, g: Graph) -> Report:
    rep = Report(args.command, write_graph6(g) if g.n < 63 else "")
    if args.command == "corpus":
        rep.results.update(n=g.n, m=g.m)
        if command == "corpus":
            return rep
        rep.results["analysis"] = command
    try:
        with rep.timed(command):
            _WORKERS[command](g, args, rep)
    except CutoffExceeded as exc:
        rep.verdict("within_cutoff", False, error=str(exc))
    return rep


def _run_packed(packed) -> tuple[str, bool]:
    rep = run_one(*packed)
    return rep.to_json(), rep.ok


def _read_graphs(args) -> list[Graph]:
    if args.g6:
        return parse_graph(args.g6, "g6")
    if args.input:
        with open(args.input, encoding="ascii") as fh:
            text = fh.read()
    else:
        text = sys.stdin.read()
    return parse_graph(text, args.format)


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.cutoff is None:
        args.cutoff = default_cutoff()
    if args.command == "corpus":
        if args.n_max > MAX_CORPUS_N:
            parser.error(f"--n-max must be at most {MAX_CORPUS_N}")
        graphs = list(corpus(args.n_max, args.connected, args.n_min))
        command = args.run or "corpus"
    else:
        try:
            graphs = _read_graphs(args)
        except (OSError, GraphFormatError) as exc:
            print(f"symbreak: error: {exc}", file=sys.stderr)
            return 2
        command = args.command
    work = [(command, args, g) for g in graphs]
    failed = False
    jobs = min(max(1, args.jobs), os.cpu_count() or 1)
    try:
        if jobs == 1 or len(work) < 2:
            for text, ok in map(_run_packed, work):
                out.write(text + "\n")
                failed |= not ok
        else:
            # map() keeps input order, so reports stream out deterministically
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                for text, ok in pool.map(_run_packed, work, chunksize=4):
                    out.write(text + "\n")
                    failed |= not ok
    except ValueError as exc:
        # invalid parameters (hub plan, colouring shape) are usage errors
        print(f"symbreak: error: {exc}", file=sys.stderr)
        return 2
    return 1 if failed else 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
