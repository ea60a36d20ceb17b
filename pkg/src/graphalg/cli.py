"""Command-line interface and the NetworkDocument text format.

A NetworkDocument is a line-oriented description of a network, with an
optional disk embedding and free-form metadata::

    vertex 0 boundary
    vertex 1 interior d=2
    edge 0 0 1 w=1
    edge 1 1 0 w=1/2
    rotation 0 +0 -1
    boundary-order 0
    meta name example

Vertex and edge ids are nonnegative integers; ``w`` accepts an integer
or a rational ``p/q``; oriented edges in rotations are ``+eid`` /
``-eid``.  Serialization is canonical, so documents round-trip
losslessly.  Unknown directives are rejected.

Every subcommand reads a document from a file argument (or stdin when
the argument is ``-``) unless noted, writes a human-readable report (or
JSON with ``--json``, schema tagged ``format: 1``), and exits 0 on
success, 1 when a computation's precondition fails, and 2 on a parse
error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from .continuation import u0_matrix_A, u0_via_continuation
from .exact_algebra import Mod, snf
from .fundamental import (
    critical_group,
    eigen_multiplicity,
    laplacian_charpoly,
    upsilon,
)
from .layering import (
    is_completely_reducible,
    is_layerable,
    reduce_to_flower,
    standard_form_filtration,
)
from .network import Network, U0_QmodZ, U0_mod_n
from .partial_graph import PartialGraph
from .planar import EmbeddedPartialGraph, dual, harmonic_conjugate
from . import families


class DocumentError(ValueError):
    """Malformed NetworkDocument; carries the offending line number."""

    def __init__(self, line_no, message):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


@dataclass
class NetworkDocument:
    network: Network
    embedded: EmbeddedPartialGraph | None = None
    metadata: dict = field(default_factory=dict)


def _parse_scalar(text, line_no):
    try:
        if "/" in text:
            return Fraction(text)
        return int(text)
    except (ValueError, ZeroDivisionError):
        raise DocumentError(line_no, f"bad scalar {text!r}")


def _format_scalar(x):
    if isinstance(x, Fraction) and x.denominator != 1:
        return f"{x.numerator}/{x.denominator}"
    return str(int(x))


def parse_document(text):
    vertices = {}
    offsets = {}
    edges = {}
    weights = {}
    rotation = {}
    boundary_order = None
    metadata = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        kind, args = parts[0], parts[1:]
        if kind == "vertex":
            if len(args) < 2 or args[1] not in ("boundary", "interior"):
                raise DocumentError(
                    line_no, "expected: vertex <id> boundary|interior [d=..]"
                )
            vid = _parse_int(args[0], line_no)
            if vid in vertices:
                raise DocumentError(line_no, f"duplicate vertex id {vid}")
            vertices[vid] = args[1] == "boundary"
            for extra in args[2:]:
                if extra.startswith("d="):
                    offsets[vid] = _parse_scalar(extra[2:], line_no)
                else:
                    raise DocumentError(line_no, f"unknown field {extra!r}")
        elif kind == "edge":
            if len(args) < 3:
                raise DocumentError(
                    line_no, "expected: edge <id> <tail> <head> [w=..]"
                )
            eid = _parse_int(args[0], line_no)
            if eid in edges:
                raise DocumentError(line_no, f"duplicate edge id {eid}")
            edges[eid] = (
                _parse_int(args[1], line_no),
                _parse_int(args[2], line_no),
            )
            weights[eid] = 1
            for extra in args[3:]:
                if extra.startswith("w="):
                    weights[eid] = _parse_scalar(extra[2:], line_no)
                else:
                    raise DocumentError(line_no, f"unknown field {extra!r}")
        elif kind == "rotation":
            if not args:
                raise DocumentError(line_no, "expected: rotation <v> <±e>...")
            vid = _parse_int(args[0], line_no)
            if vid in rotation:
                raise DocumentError(line_no, f"duplicate rotation for {vid}")
            darts = []
            for token in args[1:]:
                if token[:1] not in "+-":
                    raise DocumentError(
                        line_no, f"oriented edge {token!r} needs a sign"
                    )
                darts.append(
                    (_parse_int(token[1:], line_no), 1 if token[0] == "+" else -1)
                )
            rotation[vid] = tuple(darts)
        elif kind == "boundary-order":
            if boundary_order is not None:
                raise DocumentError(line_no, "duplicate boundary-order")
            boundary_order = tuple(_parse_int(a, line_no) for a in args)
        elif kind == "meta":
            if not args:
                raise DocumentError(line_no, "expected: meta <key> [value..]")
            metadata[args[0]] = " ".join(args[1:])
        else:
            raise DocumentError(line_no, f"unknown directive {kind!r}")
    if not vertices:
        raise DocumentError(0, "document has no vertices")
    known = set(vertices)
    for eid, (t, h) in edges.items():
        if t not in known or h not in known:
            raise DocumentError(0, f"edge {eid} references unknown vertices")
    boundary = {v for v, is_bd in vertices.items() if is_bd}
    graph = PartialGraph(vertices, boundary, edges)
    try:
        network = Network(graph, weights, offsets)
    except (ValueError, TypeError) as exc:
        raise DocumentError(0, str(exc))
    embedded = None
    if rotation or boundary_order is not None:
        embedded = EmbeddedPartialGraph(
            graph, rotation, boundary_order or tuple(sorted(boundary))
        )
    return NetworkDocument(network, embedded, metadata)


def _parse_int(text, line_no):
    try:
        return int(text)
    except ValueError:
        raise DocumentError(line_no, f"bad integer {text!r}")


def serialize_document(doc):
    N = doc.network
    G = N.graph
    dmap = N.dmap
    lines = []
    for v in G.vertices:
        kind = "boundary" if v in G.boundary else "interior"
        entry = f"vertex {v} {kind}"
        if dmap[v] != 0:
            entry += f" d={_format_scalar(dmap[v])}"
        lines.append(entry)
    for e, t, h in G.edges:
        lines.append(f"edge {e} {t} {h} w={_format_scalar(N.weight(e))}")
    if doc.embedded is not None:
        for v, darts in doc.embedded.rotation:
            tokens = " ".join(
                ("+" if s > 0 else "-") + str(e) for e, s in darts
            )
            lines.append(f"rotation {v} {tokens}".rstrip())
        order = " ".join(str(v) for v in doc.embedded.boundary_order)
        lines.append(f"boundary-order {order}".rstrip())
    for key in sorted(doc.metadata):
        lines.append(f"meta {key} {doc.metadata[key]}".rstrip())
    return "\n".join(lines) + "\n"


# -- output helpers -----------------------------------------------------


def _decomposition_json(dec):
    return {
        "free_rank": dec.free_rank,
        "invariant_factors": [str(f) for f in dec.invariant_factors],
    }


def _emit(args, text, payload):
    if getattr(args, "json", False):
        payload = {"format": 1, **payload}
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _read_document(args):
    if args.file == "-":
        text = sys.stdin.read()
    else:
        with open(args.file) as fh:
            text = fh.read()
    return parse_document(text)


def _require_embedding(doc):
    if doc.embedded is None:
        raise ValueError("this command needs embedding data in the document")
    return doc.embedded


# -- subcommand implementations ----------------------------------------


def _cmd_upsilon(args):
    doc = _read_document(args)
    report = upsilon(doc.network)
    dec = report.decomposition
    _emit(
        args,
        f"{dec}\nnon-degenerate: {'yes' if report.nondegenerate else 'no'}",
        {
            "upsilon": _decomposition_json(dec),
            "nondegenerate": report.nondegenerate,
        },
    )


def _cmd_crit(args):
    doc = _read_document(args)
    dec = critical_group(doc.network.graph)
    _emit(
        args,
        f"{dec}\nfactors: {list(dec.invariant_factors)}",
        {"critical_group": _decomposition_json(dec)},
    )


def _cmd_u0(args):
    doc = _read_document(args)
    if args.qz == (args.mod is not None):
        raise ValueError("choose exactly one of --mod N or --qz")
    if args.qz:
        dec = U0_QmodZ(doc.network)
        label = "U0 over Q/Z"
    else:
        dec = U0_mod_n(doc.network, args.mod)
        label = f"U0 over Z/{args.mod}"
    _emit(
        args,
        f"{label}: {dec}",
        {"u0": _decomposition_json(dec)},
    )


def _cmd_layerable(args):
    doc = _read_document(args)
    G = doc.network.graph
    verdict = is_layerable(G)
    lines = [f"layerable: {'yes' if verdict else 'no'}"]
    payload = {"layerable": verdict}
    if args.filtration and verdict:
        filtration = standard_form_filtration(G)
        steps = []
        for op in filtration.ops:
            if op.kind == "spike":
                steps.append(f"spike {op.vertex} via edge {op.edge}")
            elif op.kind == "edge":
                steps.append(f"boundary-edge {op.edge}")
            else:
                steps.append(f"isolated {op.vertex}")
        lines += [f"  {s}" for s in steps]
        payload["filtration"] = steps
    _emit(args, "\n".join(lines), payload)


def _cmd_flower(args):
    doc = _read_document(args)
    flower, trace = reduce_to_flower(doc.network.graph)
    lines = [
        f"moves applied: {len(trace)}",
        f"flower vertices: {list(flower.vertices)}",
        f"flower edges: {[e for e in flower.edge_ids]}",
        f"empty: {'yes' if flower.is_empty() else 'no'}",
    ]
    _emit(
        args,
        "\n".join(lines),
        {
            "moves": len(trace),
            "flower_vertices": list(flower.vertices),
            "flower_edges": list(flower.edge_ids),
            "empty": flower.is_empty(),
        },
    )


def _cmd_reduce(args):
    doc = _read_document(args)
    verdict, trace = is_completely_reducible(doc.network.graph)
    witnesses = trace.irreducible_witnesses()
    lines = [f"completely reducible: {'yes' if verdict else 'no'}"]
    for W in witnesses:
        lines.append(
            f"irreducible piece: vertices {list(W.vertices)}"
            f" edges {list(W.edge_ids)}"
        )
    _emit(
        args,
        "\n".join(lines),
        {
            "completely_reducible": verdict,
            "irreducible_pieces": [
                {
                    "vertices": list(W.vertices),
                    "edges": list(W.edge_ids),
                }
                for W in witnesses
            ],
        },
    )


def _cmd_u0_matrix(args):
    doc = _read_document(args)
    S = [int(v) for v in args.interiorize.split(",") if v]
    A = u0_matrix_A(doc.network, S)
    dec = u0_via_continuation(doc.network, S)
    diag = snf(A.to_integer()).diagonal if A.is_integer() else None
    rows = [
        " ".join(_format_scalar(A[i, j]) for j in range(A.cols))
        for i in range(A.rows)
    ]
    lines = ["matrix A:"] + [f"  {r}" for r in rows]
    if diag is not None:
        lines.append(f"smith diagonal: {list(diag)}")
    lines.append(f"kernel over Q/Z: {dec}")
    _emit(
        args,
        "\n".join(lines),
        {
            "matrix": [
                [_format_scalar(A[i, j]) for j in range(A.cols)]
                for i in range(A.rows)
            ],
            "smith_diagonal": [str(d) for d in diag] if diag else None,
            "kernel": _decomposition_json(dec),
        },
    )


def _cmd_dual(args):
    doc = _read_document(args)
    EG = _require_embedding(doc)
    D = dual(doc.network, EG)
    out = serialize_document(NetworkDocument(D.network, D.embedded, {}))
    if args.json:
        _emit(args, out, {"document": out})
    else:
        print(out, end="")


def _cmd_conjugate(args):
    doc = _read_document(args)
    EG = _require_embedding(doc)
    values = {}
    with open(args.values) as fh:
        for line_no, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            v, val = line.split()
            scalar = _parse_scalar(val, line_no)
            if args.mod:
                scalar = Mod(scalar, args.mod)
            values[int(v)] = scalar
    v, D = harmonic_conjugate(doc.network, EG, values)
    lines = [
        f"{x} {_format_value(v(x))}" for x in D.network.graph.vertices
    ]
    _emit(
        args,
        "\n".join(lines),
        {"conjugate": {str(x): _format_value(v(x)) for x in D.network.graph.vertices}},
    )


def _format_value(x):
    if isinstance(x, Mod):
        return str(x.value)
    return _format_scalar(x)


def _cmd_charpoly(args):
    doc = _read_document(args)
    coeffs = laplacian_charpoly(doc.network)
    terms = " ".join(str(c) for c in coeffs)
    _emit(
        args,
        f"coefficients (highest degree first): {terms}",
        {"charpoly": [str(c) for c in coeffs]},
    )


def _cmd_eigmult(args):
    doc = _read_document(args)
    lam = Fraction(args.eigenvalue)
    mult = eigen_multiplicity(doc.network, lam)
    _emit(
        args,
        f"multiplicity of {args.eigenvalue}: {mult}",
        {"eigenvalue": args.eigenvalue, "multiplicity": mult},
    )


_FAMILY_BUILDERS = {
    "complete": lambda p: families.complete_graph(int(p[0]), []),
    "complete-bipartite": lambda p: families.complete_bipartite_bi(
        int(p[0]), int(p[1])
    ),
    "cycle": lambda p: families.cycle(int(p[0])),
    "cube": lambda p: families.cube(int(p[0])),
    "wheel": lambda p: families.wheel(
        int(p[0]), hub_boundary=len(p) > 1 and p[1] == "hub-boundary"
    ),
    "clf": lambda p: families.clf(int(p[0]), int(p[1])),
    "clf-prime": lambda p: families.clf_prime(int(p[0]), int(p[1])),
}


def _cmd_family(args):
    name = args.name
    if name not in _FAMILY_BUILDERS:
        known = ", ".join(sorted(_FAMILY_BUILDERS))
        raise ValueError(f"unknown family {name!r} (known: {known})")
    try:
        built = _FAMILY_BUILDERS[name](args.params)
    except (IndexError, ValueError) as exc:
        raise ValueError(f"bad parameters for {name}: {exc}")
    if isinstance(built, EmbeddedPartialGraph):
        doc = NetworkDocument(Network.standard(built.graph), built, {})
    else:
        doc = NetworkDocument(Network.standard(built), None, {})
    doc.metadata["family"] = " ".join([name] + list(args.params))
    out = serialize_document(doc)
    if args.json:
        _emit(args, out, {"document": out})
    else:
        print(out, end="")


def _cmd_export_dot(args):
    doc = _read_document(args)
    G = doc.network.graph
    lines = ["graph network {"]
    for v in G.vertices:
        style = "filled" if v in G.boundary else "solid"
        fill = ', fillcolor="black", fontcolor="white"' if v in G.boundary else ""
        lines.append(f'  v{v} [label="{v}", style="{style}"{fill}];')
    for e, t, h in G.edges:
        w = doc.network.weight(e)
        label = f' [label="{_format_scalar(w)}"]' if w != 1 else ""
        lines.append(f"  v{t} -- v{h}{label};")
    lines.append("}")
    out = "\n".join(lines)
    if args.json:
        _emit(args, out, {"dot": out})
    else:
        print(out)


def _cmd_verify(args):
    from .verify import run_suite

    results = run_suite(args.suite)
    width = max(len(r.name) for r in results)
    lines = []
    for r in results:
        status = "pass" if r.passed else "FAIL"
        lines.append(f"{r.name.ljust(width)}  {status}  {r.detail}")
    ok = all(r.passed for r in results)
    lines.append(f"{sum(r.passed for r in results)}/{len(results)} passed")
    _emit(
        args,
        "\n".join(lines),
        {
            "results": [
                {"name": r.name, "passed": r.passed, "detail": r.detail}
                for r in results
            ],
            "all_passed": ok,
        },
    )
    return 0 if ok else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="graphalg",
        description="exact algebraic invariants of graphs with boundary",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.add_argument("--json", action="store_true", help="JSON output")
        p.set_defaults(fn=fn)
        return p

    def add_doc(name, fn, **kwargs):
        p = add(name, fn, **kwargs)
        p.add_argument("file", help="NetworkDocument file, or - for stdin")
        return p

    add_doc("upsilon", _cmd_upsilon, help="fundamental module decomposition")
    add_doc("crit", _cmd_crit, help="critical group of a boundaryless graph")
    p = add_doc("u0", _cmd_u0, help="boundary-vanishing harmonic module")
    p.add_argument("--mod", type=int, help="coefficients Z/N")
    p.add_argument("--qz", action="store_true", help="coefficients Q/Z")
    p = add_doc("layerable", _cmd_layerable, help="layerability test")
    p.add_argument("--filtration", action="store_true")
    add_doc("flower", _cmd_flower, help="strip to the unique flower")
    add_doc("reduce", _cmd_reduce, help="complete-reducibility trace")
    p = add_doc("u0-matrix", _cmd_u0_matrix, help="kernel presentation matrix")
    p.add_argument(
        "--interiorize",
        required=True,
        help="comma-separated interior vertices to expose",
    )
    add_doc("dual", _cmd_dual, help="dual network document")
    p = add_doc("conjugate", _cmd_conjugate, help="harmonic conjugate")
    p.add_argument("--values", required=True, help="file of '<vertex> <value>'")
    p.add_argument("--mod", type=int, help="interpret values in Z/N")
    add_doc("charpoly", _cmd_charpoly, help="characteristic polynomial")
    p = add_doc("eigmult", _cmd_eigmult, help="eigenvalue multiplicity")
    p.add_argument(
        "--lambda", dest="eigenvalue", required=True, help="eigenvalue p/q"
    )
    p = add("family", _cmd_family, help="emit a family NetworkDocument")
    p.add_argument("name")
    p.add_argument("params", nargs="*")
    add_doc("export-dot", _cmd_export_dot, help="DOT drawing")
    p = add("verify", _cmd_verify, help="run the verification suites")
    p.add_argument(
        "--suite", choices=("paper", "property"), default=None,
        help="restrict to one suite",
    )
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code = args.fn(args)
    except DocumentError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, TypeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return code or 0


if __name__ == "__main__":
    sys.exit(main())
