"""Command-line interface.

Subcommands: ``ring describe``, ``ideal list``, ``classify``, ``graph``,
``analyze``, ``verify``.  DOT and JSON outputs are stable, byte-identical
contracts; the text format is for humans.  Exit codes: 0 success, 1
verification failure, 2 usage or parse errors, 3 exact-computation cap
exceeded.  Errors print a single machine-parseable line
``error: <category>: <reason>`` on stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from .classify import classification_record
from .errors import (
    CapExceededError,
    NotAnIdealError,
    RingAxiomError,
    RingMismatchError,
    RingSpecError,
)
from .graphs import (
    cozero_divisor_graph,
    emit_graph,
    ideal_cozero_divisor_graph,
    ideal_zero_divisor_graph,
    remove_vertices,
    zero_divisor_graph,
)
from .harness import CorpusConfig, normalize_check_ids, verify_corpus
from .ideals import (
    IdealSet,
    all_ideals,
    annihilator,
    ideal_from_members,
    ideal_generated,
    jacobson_radical,
    maximal_ideals,
    ring_predicates,
)
from .metrics import (
    chromatic_number,
    clique_number,
    diameter,
    girth,
    is_connected,
    is_planar,
    partite_structure,
)
from .rings import FiniteRing, build_ring

METRIC_NAMES = (
    "connected", "diameter", "girth", "clique_number", "chromatic_number",
    "bipartite", "complete_bipartite", "complete", "planar",
)


def parse_ideal_spec(ring: FiniteRing, text: str) -> IdealSet:
    """Ideal mini-language: gen:<e,..>, elems:<e,..>, zero, full, ann-of:<spec>."""
    text = text.strip()
    if text == "zero":
        return IdealSet(ring, frozenset((ring.zero,)), (ring.zero,))
    if text == "full":
        return ideal_generated(ring, (ring.one,))
    if text.startswith("gen:"):
        gens = _parse_indices(ring, text[4:])
        return ideal_generated(ring, gens)
    if text.startswith("elems:"):
        members = _parse_indices(ring, text[6:])
        return ideal_from_members(ring, members)
    if text.startswith("ann-of:"):
        return annihilator(ring, parse_ideal_spec(ring, text[7:]))
    raise RingSpecError(f"unrecognized ideal spec {text!r}")


def _parse_indices(ring: FiniteRing, text: str) -> tuple[int, ...]:
    try:
        indices = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise RingSpecError(f"ideal spec needs comma-separated element indices, got {text!r}") from None
    for idx in indices:
        if not 0 <= idx < ring.order:
            raise RingSpecError(f"element index {idx} out of range for {ring.spec}")
    return indices


def _dump(payload) -> str:
    return json.dumps(payload, indent=2)


def _cmd_ring_describe(args) -> int:
    ring = build_ring(args.ring)
    preds = ring_predicates(ring)
    payload = {
        "spec": ring.spec,
        "order": ring.order,
        "zero": ring.zero,
        "one": ring.one,
        "units": sorted(ring.units()),
        "zero_divisors": sorted(ring.zero_divisors()),
        "maximal_ideals": [sorted(m.members) for m in maximal_ideals(ring)],
        "jacobson_radical": sorted(jacobson_radical(ring).members),
        "is_local": preds.is_local,
        "is_field": preds.is_field,
        "is_reduced": preds.is_reduced,
        "is_zero_dimensional": preds.is_zero_dimensional,
    }
    if args.format == "json":
        print(_dump(payload))
    else:
        for key, value in payload.items():
            print(f"{key}: {value}")
    return 0


def _cmd_ideal_list(args) -> int:
    ring = build_ring(args.ring)
    rows = [
        {"members": sorted(i.members), "size": len(i), "generators": list(i.generators)}
        for i in all_ideals(ring)
    ]
    payload = {"ring": ring.spec, "count": len(rows), "ideals": rows}
    if args.format == "json":
        print(_dump(payload))
    else:
        print(f"{ring.spec}: {len(rows)} ideals")
        for row in rows:
            print(f"  size {row['size']:>3}  gen {row['generators']}  {row['members']}")
    return 0


def _cmd_classify(args) -> int:
    ring = build_ring(args.ring)
    ideal = parse_ideal_spec(ring, args.ideal)
    record = classification_record(ring, ideal)
    payload = record.to_json()
    payload["ring"] = ring.spec
    if args.format == "json":
        print(_dump(payload))
    else:
        for key, value in payload.items():
            print(f"{key}: {value}")
    return 0


def _build_selected_graph(args, ring: FiniteRing):
    needs_ideal = args.kind in ("zero-ideal", "cozero-ideal")
    if needs_ideal and args.ideal is None:
        raise RingSpecError(f"graph kind {args.kind} needs --ideal")
    if not needs_ideal and args.ideal is not None:
        raise RingSpecError(f"graph kind {args.kind} does not take --ideal")
    if args.kind == "zero":
        graph = zero_divisor_graph(ring)
    elif args.kind == "cozero":
        graph = cozero_divisor_graph(ring)
    elif args.kind == "zero-ideal":
        graph = ideal_zero_divisor_graph(ring, parse_ideal_spec(ring, args.ideal))
    else:
        graph = ideal_cozero_divisor_graph(ring, parse_ideal_spec(ring, args.ideal))
    if args.minus_jacobson:
        graph = remove_vertices(graph, jacobson_radical(ring).members)
    return graph


def _cmd_graph(args) -> int:
    ring = build_ring(args.ring)
    graph = _build_selected_graph(args, ring)
    sys.stdout.write(emit_graph(graph, args.format))
    return 0


def _cmd_analyze(args) -> int:
    ring = build_ring(args.ring)
    graph = _build_selected_graph(args, ring)
    if args.metrics == "all":
        wanted = set(METRIC_NAMES)
    else:
        wanted = {m.strip() for m in args.metrics.split(",")}
        unknown = sorted(wanted - set(METRIC_NAMES))
        if unknown:
            raise RingSpecError(f"unknown metrics: {unknown}")
    payload = {"graph": graph.name}
    parts = None
    for name in METRIC_NAMES:
        if name not in wanted:
            continue
        if name in ("bipartite", "complete_bipartite", "complete"):
            parts = parts or partite_structure(graph)
            if name == "bipartite":
                payload[name] = parts.bipartite
            elif name == "complete_bipartite":
                cb = parts.complete_bipartite
                payload[name] = list(cb) if cb else None
            else:
                payload[name] = parts.complete
        elif name == "connected":
            payload[name] = is_connected(graph)
        elif name == "diameter":
            payload[name] = diameter(graph).to_json()
        elif name == "girth":
            payload[name] = girth(graph).to_json()
        elif name == "clique_number":
            payload[name] = clique_number(graph)
        elif name == "chromatic_number":
            payload[name] = chromatic_number(graph)
        else:
            payload[name] = is_planar(graph)
    print(_dump(payload))
    return 0


def _cmd_verify(args) -> int:
    families = tuple(f.strip() for f in args.families.split(",") if f.strip())
    config = CorpusConfig(
        families=families,
        max_order=args.max_order,
        max_cyclic_n=args.max_cyclic,
        custom_specs=tuple(args.ring or ()),
        include_full_ideal_quantifier=args.full_ideal_quantifier,
    )
    check_ids = None if args.checks == "all" else normalize_check_ids(args.checks.split(","))
    report = verify_corpus(config, check_ids)
    print(_dump(report.to_json()))
    return 0 if report.overall_pass else 1


def _make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ringgraphs",
        description="zero-divisor and cozero-divisor graphs of finite commutative rings",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_ring = sub.add_parser("ring", help="ring-level queries")
    ring_sub = p_ring.add_subparsers(dest="ring_command", required=True)
    p_desc = ring_sub.add_parser("describe", help="order, units, ideals, predicates")
    p_desc.add_argument("--ring", required=True)
    p_desc.add_argument("--format", choices=("text", "json"), default="text")
    p_desc.set_defaults(func=_cmd_ring_describe)

    p_ideal = sub.add_parser("ideal", help="ideal-level queries")
    ideal_sub = p_ideal.add_subparsers(dest="ideal_command", required=True)
    p_list = ideal_sub.add_parser("list", help="every ideal with generators")
    p_list.add_argument("--ring", required=True)
    p_list.add_argument("--format", choices=("text", "json"), default="text")
    p_list.set_defaults(func=_cmd_ideal_list)

    p_classify = sub.add_parser("classify", help="classify one ideal")
    p_classify.add_argument("--ring", required=True)
    p_classify.add_argument("--ideal", required=True)
    p_classify.add_argument("--format", choices=("text", "json"), default="json")
    p_classify.set_defaults(func=_cmd_classify)

    for name, help_text in (("graph", "emit a graph"), ("analyze", "graph invariants")):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--ring", required=True)
        p.add_argument("--ideal")
        p.add_argument("--kind", required=True,
                       choices=("zero", "zero-ideal", "cozero", "cozero-ideal"))
        p.add_argument("--minus-jacobson", action="store_true")
        if name == "graph":
            p.add_argument("--format", choices=("dot", "json"), default="dot")
            p.set_defaults(func=_cmd_graph)
        else:
            p.add_argument("--metrics", default="all")
            p.set_defaults(func=_cmd_analyze)

    p_verify = sub.add_parser("verify", help="run the property checks over a corpus")
    p_verify.add_argument("--families", default="cyclic")
    p_verify.add_argument("--max-order", type=int, default=36)
    p_verify.add_argument("--max-cyclic", type=int, default=36)
    p_verify.add_argument("--checks", default="all")
    p_verify.add_argument("--ring", action="append",
                          help="extra ring spec added to the corpus (repeatable)")
    p_verify.add_argument("--full-ideal-quantifier", action="store_true")
    p_verify.add_argument("--format", choices=("json",), default="json")
    p_verify.set_defaults(func=_cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = _make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CapExceededError as exc:
        print(f"error: cap: {exc}", file=sys.stderr)
        return 3
    except RingAxiomError as exc:
        print(f"error: axiom: {exc}", file=sys.stderr)
        return 2
    except NotAnIdealError as exc:
        print(f"error: ideal: {exc}", file=sys.stderr)
        return 2
    except (RingSpecError, RingMismatchError, ValueError) as exc:
        print(f"error: parse: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
