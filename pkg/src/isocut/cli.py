"""Command-line front end: ``isocut <command> FILE [options]``."""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from . import __version__
from .core import INF, CutCertificate, ElementInstance, Hypergraph, WeightedGraph
from .edge import edge_isolating_cuts, steiner_min_cut
from .element import element_global_conn, element_isolating_cuts
from .hyper import hyper_global_min_cut, hyper_isolating_cuts
from .io import DEFAULT_SCALE, FormatError, parse_instance
from .lattice import SamplingParams, ceil_log2
from .oracles import (
    OracleLimitError,
    brute_edge_cut,
    brute_edge_st_cut,
    brute_element_all_pairs,
    brute_element_cut,
    brute_hyper_cut,
    brute_hyper_st_cut,
    brute_vertex_cut,
)
from .setpair import SetPair
from .verify import diagnose_certificate
from .vertex import NoCutError, VCParams, approx_vertex_connectivity, exact_vc_sparse, exact_vertex_connectivity

SCHEMA_VERSION = 1

EXIT_OK, EXIT_USAGE, EXIT_SOLVER, EXIT_MISMATCH = 0, 1, 2, 3

_FILE_KIND = {"edge": "graph", "hyper": "hypergraph", "elem": "element", "vertex": "graph"}
_PROBLEM_KIND = {"edge-cut": "edge", "hyper-cut": "hyper", "elem-cut": "elem", "vertex-cut": "vertex"}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def _fraction(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    return value


def _precision(text: str):
    if text == "auto":
        return "auto"
    try:
        scale = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("precision is 'auto' or a positive integer scale") from None
    if scale < 1:
        raise argparse.ArgumentTypeError("precision scale must be positive")
    return scale


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("file", nargs="?", default="-", help="instance file ('-' or omitted: stdin)")
    common.add_argument("--terminals", help="comma-separated vertex labels (default: all vertices, or all terminals)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--delta", type=_fraction, default=Fraction(1, 1000), help="failure probability (default 1/1000)")
    common.add_argument("--json", action="store_true", help="emit a JSON certificate")
    common.add_argument("--oracle", action="store_true", help="cross-check against exhaustive search (small inputs)")
    common.add_argument("--threads", type=int, default=1)
    common.add_argument(
        "--precision",
        type=_precision,
        default="auto",
        help=f"decimal weights are multiplied by this scale; 'auto' uses 1 for integer input, else {DEFAULT_SCALE}",
    )

    parser = _Parser(prog="isocut", description="Minimum cuts via isolating cuts.")
    parser.add_argument("--version", action="store_true", help="print toolkit and schema versions")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.add_parser("edge-cut", parents=[common], help="subset minimum edge cut")
    sub.add_parser("hyper-cut", parents=[common], help="subset minimum hyperedge cut")
    sub.add_parser("elem-cut", parents=[common], help="element connectivity of the terminals")
    vc = sub.add_parser("vertex-cut", parents=[common], help="weighted vertex connectivity")
    vc.add_argument("--epsilon", type=_fraction, default=Fraction(1, 10))
    vc.add_argument("--exact", action="store_true")
    vc.add_argument("--sparsify", action="store_true", help="exact, on a sparsified copy (unweighted graphs)")
    iso = sub.add_parser("isolate", parents=[common], help="minimum isolating cut of every terminal")
    iso.add_argument("--kind", choices=["edge", "hyper", "elem"], default="edge")
    ver = sub.add_parser("verify", help="re-check an emitted JSON certificate")
    ver.add_argument("file", help="instance file")
    ver.add_argument("certificate", help="JSON certificate file ('-' for stdin)")
    ver.add_argument("--precision", type=_precision, default="auto")
    return parser


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _natural(label: str):
    try:
        return int(label)
    except ValueError:
        return label


class _Renderer:
    """Maps internal ids and scaled weights back to the input's vocabulary."""

    def __init__(self, inst, scale: int, kind: str, origin=None):
        self.inst = inst
        self.scale = scale
        self.kind = kind
        self.origin = origin
        g = inst.graph if isinstance(inst, ElementInstance) else inst
        self.labels = g.labels

    def value(self, w):
        if w == INF:
            return "inf"
        q = Fraction(w, self.scale)
        return q.numerator if q.denominator == 1 else float(q)

    def vertices(self, ids):
        return [_natural(self.labels[v]) for v in sorted(ids)]

    def side(self, cert: CutCertificate):
        first = cert.side_pair.first
        if self.kind == "elem":
            first = [x for x in first if x < self.inst.n]
        return self.vertices(first)

    def removed(self, cert: CutCertificate):
        lab = self.labels
        if self.kind == "edge":
            return sorted([lab[u], lab[v]] for u, v in sorted(cert.removed))
        if self.kind == "hyper":
            return sorted(self.origin[i] for i in cert.removed)
        if self.kind == "elem":
            return [list(self.inst.describe_element(x)) for x in sorted(cert.removed)]
        return [lab[v] for v in sorted(cert.removed)]


def _parse_terminals(text, labels, default):
    if text is None:
        return sorted(default)
    index = {lab: i for i, lab in enumerate(labels)}
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if tok not in index:
            raise UsageError(f"unknown terminal {tok!r}")
        out.append(index[tok])
    return sorted(set(out))


def _load(args, kind):
    try:
        text = _read(args.file)
    except OSError as exc:
        raise UsageError(f"cannot read {args.file}: {exc}") from None
    try:
        return parse_instance(text, _FILE_KIND[kind], scale=args.precision)
    except FormatError as exc:
        raise UsageError(f"{args.file}: {exc}") from None


def _solve(args, kind, inst, R):
    """Returns (certificate or None for 'no cut', oracle value or None)."""
    params = SamplingParams(seed=args.seed, delta=args.delta, workers=args.threads)
    oracle = None
    if kind == "edge":
        cert = steiner_min_cut(inst, R, params)
        if args.oracle:
            oracle = brute_edge_cut(inst, R)[0]
    elif kind == "hyper":
        cert = hyper_global_min_cut(inst, R, params)
        if args.oracle:
            oracle = brute_hyper_cut(inst, R)[0]
    elif kind == "elem":
        cert = element_global_conn(inst, R, params)
        if args.oracle:
            pairs = brute_element_all_pairs(inst)
            Rs = set(R)
            oracle = min(v for (s, t), v in pairs.items() if s in Rs and t in Rs)
    else:
        if args.oracle:
            oracle = brute_vertex_cut(inst)[0]
        try:
            if args.sparsify:
                cert = exact_vc_sparse(inst, seed=args.seed, delta=args.delta, workers=args.threads)
            elif args.exact:
                cert = exact_vertex_connectivity(inst, seed=args.seed, delta=args.delta, workers=args.threads)
            else:
                vp = VCParams(epsilon=args.epsilon, seed=args.seed, delta=args.delta, workers=args.threads)
                cert = approx_vertex_connectivity(inst, vp)
        except NoCutError:
            cert = None
    return cert, oracle


def _cut_command(args, out) -> int:
    kind = _PROBLEM_KIND[args.command]
    if kind == "vertex" and args.terminals is not None:
        raise UsageError("vertex-cut takes no --terminals")
    start = time.perf_counter()
    inst, report = _load(args, kind)
    r = _Renderer(inst, report.scale, kind, report.hyperedge_origin)
    if kind == "elem":
        R = _parse_terminals(args.terminals, r.labels, inst.terminals)
        if not set(R) <= inst.terminals:
            raise UsageError("--terminals must name terminals of the instance")
    elif kind == "vertex":
        R = []
    else:
        R = _parse_terminals(args.terminals, r.labels, range(inst.n))
    cert, oracle = _solve(args, kind, inst, R)
    elapsed = round((time.perf_counter() - start) * 1000, 3)
    value = INF if cert is None else cert.value
    doc = {
        "problem": args.command,
        "value": r.value(value),
        "side": [] if cert is None else r.side(cert),
        "removed": [] if cert is None else r.removed(cert),
        "terminals": r.vertices(R),
        "seed": args.seed,
        "trials": 0 if cert is None else cert.meta.get("trials", 0),
        "oracle_calls": 0 if cert is None else cert.meta.get("oracle_calls", 0),
        "elapsed_ms": elapsed,
    }
    if cert is None:
        doc["no_cut"] = True
    code = EXIT_OK
    if args.oracle:
        match = oracle == value
        doc["oracle"] = {"value": r.value(oracle), "match": match}
        if not match:
            code = EXIT_MISMATCH
    _emit(args, doc, out)
    return code


def _isolate_command(args, out) -> int:
    kind = args.kind
    start = time.perf_counter()
    inst, report = _load(args, kind)
    r = _Renderer(inst, report.scale, kind, report.hyperedge_origin)
    if kind == "elem":
        R = _parse_terminals(args.terminals, r.labels, inst.terminals)
        certs = element_isolating_cuts(inst, R)
    else:
        R = _parse_terminals(args.terminals, r.labels, range(inst.n))
        certs = (edge_isolating_cuts if kind == "edge" else hyper_isolating_cuts)(inst, R)
    entries = []
    mismatch = False
    for t in R:
        c = certs[t]
        entry = {"terminal": _natural(r.labels[t]), "value": r.value(c.value), "side": r.side(c), "removed": r.removed(c)}
        if args.oracle:
            rest = [x for x in R if x != t]
            if kind == "edge":
                ov = brute_edge_st_cut(inst, [t], rest)[0]
            elif kind == "hyper":
                ov = brute_hyper_st_cut(inst, [t], rest)[0]
            else:
                ov = brute_element_cut(inst, [t], rest)[0]
            entry["oracle"] = {"value": r.value(ov), "match": ov == c.value}
            mismatch |= ov != c.value
        entries.append(entry)
    doc = {
        "problem": "isolate",
        "kind": kind,
        "certificates": entries,
        "value": r.value(min(c.value for c in certs.values())),
        "side": [],
        "removed": [],
        "terminals": r.vertices(R),
        "seed": args.seed,
        "trials": 1,
        "oracle_calls": ceil_log2(len(R)) + len(R),
        "elapsed_ms": round((time.perf_counter() - start) * 1000, 3),
    }
    best = min(R, key=lambda t: certs[t].sort_key())
    doc["side"] = r.side(certs[best])
    doc["removed"] = r.removed(certs[best])
    _emit(args, doc, out)
    return EXIT_MISMATCH if mismatch else EXIT_OK


def _emit(args, doc, out):
    if args.json:
        out.write(json.dumps(doc, sort_keys=True) + "\n")
        return
    if doc.get("no_cut"):
        out.write(f"{doc['problem']}: no cut (complete graph)\n")
    else:
        out.write(f"{doc['problem']}: value {doc['value']}\n")
        out.write(f"  side: {' '.join(map(str, doc['side']))}\n")
        out.write(f"  removed: {' '.join(_fmt_obj(x) for x in doc['removed'])}\n")
    for entry in doc.get("certificates", ()):
        out.write(f"  terminal {entry['terminal']}: value {entry['value']}\n")
    out.write(f"  seed {doc['seed']}, trials {doc['trials']}, oracle calls {doc['oracle_calls']}, {doc['elapsed_ms']} ms\n")
    if "oracle" in doc:
        o = doc["oracle"]
        out.write(f"  oracle: {o['value']} ({'match' if o['match'] else 'MISMATCH'})\n")


def _fmt_obj(x):
    if isinstance(x, list):
        return "{" + ",".join(map(str, x)) + "}"
    return str(x)


# ---------------------------------------------------------------------------
# verify


def _scaled_value(v, scale: int):
    if v == "inf":
        return INF
    q = Fraction(str(v)) * scale
    if q.denominator != 1:
        raise UsageError(f"value {v} is not representable at scale {scale}")
    return int(q)


def _cert_from_doc(doc, kind, inst, scale, origin) -> CutCertificate:
    g = inst.graph if isinstance(inst, ElementInstance) else inst
    index = {lab: i for i, lab in enumerate(g.labels)}

    def vid(label):
        key = str(label)
        if key not in index:
            raise UsageError(f"certificate names unknown vertex {label!r}")
        return index[key]

    side = frozenset(vid(x) for x in doc["side"])
    value = _scaled_value(doc["value"], scale)
    if kind == "edge":
        removed = frozenset(tuple(sorted((vid(a), vid(b)))) for a, b in doc["removed"])
        return CutCertificate(value, SetPair.bipartition(side, range(g.n)), removed, "edge")
    if kind == "hyper":
        back = {o: i for i, o in enumerate(origin)}
        try:
            removed = frozenset(back[i] for i in doc["removed"])
        except KeyError as exc:
            raise UsageError(f"certificate names unknown hyperedge {exc}") from None
        return CutCertificate(value, SetPair.bipartition(side, range(g.n)), removed, "hyper")
    if kind == "vertex":
        removed = frozenset(vid(x) for x in doc["removed"])
        rest = frozenset(range(g.n)) - side - removed
        return CutCertificate(value, SetPair(side, rest), removed, "vertex")
    n = inst.n
    removed = set()
    for item in doc["removed"]:
        if len(item) == 1:
            removed.add(vid(item[0]))
        else:
            u, v = sorted((vid(item[0]), vid(item[1])))
            if (u, v) not in g.edge_index:
                raise UsageError(f"certificate names unknown edge {item}")
            removed.add(n + g.edge_index[(u, v)])
    first = set(side)
    for i, (u, v, _) in enumerate(g.edges):
        if n + i not in removed and (u in side or v in side):
            first.add(n + i)
    rest = frozenset(range(inst.num_elements)) - first - removed
    return CutCertificate(value, SetPair(first, rest), frozenset(removed), "element")


def _verify_command(args, out) -> int:
    try:
        doc = json.loads(_read(args.certificate))
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read certificate: {exc}") from None
    problem = doc.get("problem")
    if problem == "isolate":
        kind = doc.get("kind")
        docs = doc.get("certificates", [])
    elif problem in _PROBLEM_KIND:
        kind = _PROBLEM_KIND[problem]
        docs = [doc]
    else:
        raise UsageError(f"unknown problem {problem!r} in certificate")
    if kind not in _FILE_KIND:
        raise UsageError(f"unknown kind {kind!r} in certificate")
    inst, report = _load(args, kind)
    failures = []
    for d in docs:
        if d.get("no_cut"):
            g = inst
            if not (isinstance(g, WeightedGraph) and g.is_complete()):
                failures.append("'no cut' claimed for a graph that is not complete")
            continue
        cert = _cert_from_doc(d, kind, inst, report.scale, report.hyperedge_origin)
        why = diagnose_certificate(inst, cert)
        if why:
            failures.append(why)
    ok = not failures
    if getattr(args, "json", False):
        out.write(json.dumps({"problem": "verify", "valid": ok, "reasons": failures}, sort_keys=True) + "\n")
    else:
        out.write("valid\n" if ok else "invalid: " + "; ".join(failures) + "\n")
    return EXIT_OK if ok else EXIT_MISMATCH


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        try:
            args = parser.parse_args(argv)
        except SystemExit as exc:  # --help
            return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
        if args.version:
            out.write(f"isocut {__version__} (certificate schema {SCHEMA_VERSION})\n")
            return EXIT_OK
        if args.command is None:
            raise UsageError(parser.format_usage().rstrip() + "\nisocut: error: a command is required")
        if getattr(args, "threads", 1) < 1:
            raise UsageError("--threads must be at least 1")
        if args.command == "verify":
            return _verify_command(args, out)
        if args.command == "isolate":
            return _isolate_command(args, out)
        return _cut_command(args, out)
    except UsageError as exc:
        err.write(f"{exc}\n")
        return EXIT_USAGE
    except (OracleLimitError, ValueError, RuntimeError) as exc:
        err.write(f"isocut: {exc}\n")
        return EXIT_SOLVER


def main() -> None:
    sys.exit(run())
