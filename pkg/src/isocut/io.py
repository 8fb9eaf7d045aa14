"""Text formats for graphs, hypergraphs and element instances.

Graph::

    p <n> <m>
    e <u> <v> [w]      # m lines; parallel edges are summed
    v <u> <w>          # optional vertex weight (default 1)
    t <u>              # element instances only: marks a terminal

Hypergraph::

    ph <n> <m>
    h <w> <v1> ... <vk>

Weights are decimals or ``inf``; ``#`` starts a comment.  Vertex tokens are
labels: ids follow numeric order for integer labels, then string order for
the rest.  Decimal weights are multiplied by ``scale`` and must
become integers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from decimal import Decimal, InvalidOperation
from typing import Union

from .core import INF, ElementInstance, Hypergraph, InstanceError, WeightedGraph

DEFAULT_SCALE = 10**6


class FormatError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass
class LoadReport:
    scale: int = 1
    dropped_hyperedges: list[int] = field(default_factory=list)
    hyperedge_origin: list[int] = field(default_factory=list)
    dropped_zero_edges: int = 0


Instance = Union[WeightedGraph, Hypergraph, ElementInstance]


def _parse_weight(tok: str, lineno: int) -> Decimal | float:
    if tok.lower() in ("inf", "infinity"):
        return INF
    try:
        d = Decimal(tok)
    except InvalidOperation:
        raise FormatError(lineno, f"bad weight {tok!r}") from None
    if not d.is_finite():
        raise FormatError(lineno, f"bad weight {tok!r}")
    if d < 0:
        raise FormatError(lineno, f"negative weight {tok}")
    return d


def _scaled(d, scale: int, lineno: int):
    if d == INF:
        return INF
    x = d * scale
    if x != x.to_integral_value():
        raise FormatError(lineno, f"weight {d} is not representable at scale {scale}")
    return int(x)


def _parse_int(tok: str, lineno: int, what: str) -> int:
    try:
        v = int(tok)
    except ValueError:
        raise FormatError(lineno, f"{what} must be an integer, got {tok!r}") from None
    if v < 0:
        raise FormatError(lineno, f"{what} must be nonnegative")
    return v


class _Labels:
    def __init__(self, n: int):
        self.n = n
        self.order: list[str] = []
        self.seen: dict[str, int] = {}
        self.first_line: dict[str, int] = {}

    def note(self, tok: str, lineno: int) -> None:
        if tok not in self.seen:
            self.seen[tok] = len(self.order)
            self.order.append(tok)
            self.first_line[tok] = lineno

    def finish(self) -> dict[str, int]:
        ordered = sorted(self.order, key=_label_key)
        if len(ordered) > self.n:
            extra = ordered[self.n]
            raise FormatError(self.first_line[extra], f"vertex {extra!r} is out of range: more than {self.n} distinct vertices")
        self.table = list(ordered)
        taken = set(ordered)
        for i in range(len(ordered), self.n):
            lab = str(i)
            while lab in taken:
                lab = "_" + lab
            taken.add(lab)
            self.table.append(lab)
        return {t: i for i, t in enumerate(ordered)}


def _label_key(t: str):
    try:
        return (0, int(t), t)
    except ValueError:
        return (1, 0, t)


def _lines(text: str | bytes):
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def _choose_scale(weights, scale) -> int:
    if scale is not None and scale != "auto":
        scale = int(scale)
        if scale < 1:
            raise ValueError("scale must be a positive integer")
        return scale
    finite = [d for d in weights if d != INF]
    return 1 if all(d == d.to_integral_value() for d in finite) else DEFAULT_SCALE


def parse_instance(text: str | bytes, kind: str, scale: int | str | None = "auto") -> tuple[Instance, LoadReport]:
    """Parse ``text`` as ``kind`` in ``{"graph", "hypergraph", "element"}``.

    Returns the instance and a :class:`LoadReport`.  Errors carry line numbers.
    """
    if kind == "hypergraph":
        return _parse_hyper(text, scale)
    if kind in ("graph", "element"):
        return _parse_graph(text, kind == "element", scale)
    raise ValueError(f"unknown instance kind {kind!r}")


def _header(lines, tag: str):
    if not lines:
        raise FormatError(1, "empty input")
    lineno, toks = lines[0]
    if toks[0] != tag or len(toks) != 3:
        raise FormatError(lineno, f"expected header '{tag} <n> <m>'")
    return _parse_int(toks[1], lineno, "n"), _parse_int(toks[2], lineno, "m"), lineno


def _parse_graph(text, element: bool, scale):
    lines = list(_lines(text))
    n, m, hline = _header(lines, "p")
    labels = _Labels(n)
    raw_edges, raw_vw, raw_terms = [], [], []
    for lineno, toks in lines[1:]:
        tag = toks[0]
        if tag == "e":
            if len(toks) not in (3, 4):
                raise FormatError(lineno, "edge line is 'e <u> <v> [w]'")
            w = _parse_weight(toks[3], lineno) if len(toks) == 4 else Decimal(1)
            if toks[1] == toks[2]:
                raise FormatError(lineno, f"self-loop at {toks[1]}")
            labels.note(toks[1], lineno)
            labels.note(toks[2], lineno)
            raw_edges.append((lineno, toks[1], toks[2], w))
        elif tag == "v":
            if len(toks) != 3:
                raise FormatError(lineno, "vertex line is 'v <u> <w>'")
            labels.note(toks[1], lineno)
            raw_vw.append((lineno, toks[1], _parse_weight(toks[2], lineno)))
        elif tag == "t" and element:
            if len(toks) != 2:
                raise FormatError(lineno, "terminal line is 't <u>'")
            labels.note(toks[1], lineno)
            raw_terms.append(toks[1])
        elif tag == "p":
            raise FormatError(lineno, "duplicate header")
        else:
            raise FormatError(lineno, f"unknown line type {tag!r}")
    if len(raw_edges) != m:
        raise FormatError(hline, f"header declares {m} edges but {len(raw_edges)} were given")
    ids = labels.finish()
    report = LoadReport(scale=_choose_scale([e[3] for e in raw_edges] + [x[2] for x in raw_vw], scale))
    edges = []
    for lineno, a, b, w in raw_edges:
        ws = _scaled(w, report.scale, lineno)
        if element and ws == 0:
            report.dropped_zero_edges += 1
            continue
        edges.append((ids[a], ids[b], ws))
    vw = None
    if raw_vw or report.scale != 1:
        vw = [report.scale] * n
        for lineno, a, w in raw_vw:
            vw[ids[a]] = _scaled(w, report.scale, lineno)
    try:
        g = WeightedGraph.from_edges(n, edges, vw, labels.table)
    except InstanceError as exc:
        raise FormatError(hline, str(exc)) from None
    if element:
        return ElementInstance(g, frozenset(ids[t] for t in raw_terms)), report
    return g, report


def _parse_hyper(text, scale):
    lines = list(_lines(text))
    n, m, hline = _header(lines, "ph")
    labels = _Labels(n)
    raw = []
    for lineno, toks in lines[1:]:
        if toks[0] != "h":
            raise FormatError(lineno, f"unknown line type {toks[0]!r}")
        if len(toks) < 2:
            raise FormatError(lineno, "hyperedge line is 'h <w> <v1> ... <vk>'")
        w = _parse_weight(toks[1], lineno)
        for t in toks[2:]:
            labels.note(t, lineno)
        raw.append((lineno, w, toks[2:]))
    if len(raw) != m:
        raise FormatError(hline, f"header declares {m} hyperedges but {len(raw)} were given")
    ids = labels.finish()
    report = LoadReport(scale=_choose_scale([r[1] for r in raw], scale))
    edges = [([ids[t] for t in members], _scaled(w, report.scale, lineno)) for lineno, w, members in raw]
    try:
        h, dropped = Hypergraph.from_edges(n, edges, labels.table)
    except InstanceError as exc:
        raise FormatError(hline, str(exc)) from None
    report.dropped_hyperedges = dropped
    report.hyperedge_origin = [i for i in range(len(edges)) if i not in set(dropped)]
    return h, report


def _fmt_weight(w, scale: int) -> str:
    if w == INF:
        return "inf"
    if scale == 1:
        return str(w)
    d = Decimal(w) / Decimal(scale)
    return format(d.normalize(), "f")


def serialize(inst: Instance, scale: int = 1) -> str:
    """Canonical text for ``inst``; parsing it back gives an equal instance."""
    if isinstance(inst, Hypergraph):
        lab = inst.labels
        out = [f"ph {inst.n} {inst.m}"]
        for members, w in inst.hyperedges:
            out.append("h " + _fmt_weight(w, scale) + " " + " ".join(lab[v] for v in sorted(members)))
        return "\n".join(out) + "\n"
    g = inst.graph if isinstance(inst, ElementInstance) else inst
    lab = g.labels
    out = [f"p {g.n} {g.m}"]
    for u, v, w in g.edges:
        out.append(f"e {lab[u]} {lab[v]} {_fmt_weight(w, scale)}")
    if g.vertex_weights is not None:
        for v in range(g.n):
            out.append(f"v {lab[v]} {_fmt_weight(g.vertex_weights[v], scale)}")
    if isinstance(inst, ElementInstance):
        for t in sorted(inst.terminals):
            out.append(f"t {lab[t]}")
    return "\n".join(out) + "\n"
