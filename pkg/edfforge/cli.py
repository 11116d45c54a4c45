"""Command line front end: ``edf-forge construct | verify | search | export-dot | trees``.

Exit codes: 0 success, 1 usage or parameter error, 2 verification failure, 3 exhaustive search found nothing.
"""
import argparse
import dataclasses
import logging
import sys
from pathlib import Path
from typing import Callable, Dict, Optional, Sequence, Union

from edfforge import EdfForgeError, catalog, codec
from edfforge.codec import LabelledGraph, Payload
from edfforge.config import search_limits
from edfforge.edf import EdfWitness, SetFamily
from edfforge.edf.builder import (build_2cedf, double_witness, edf_from_near_alpha, edf_from_oriented_beta,
                                  edf_from_oriented_near_alpha)
from edfforge.edf.verify import verify_ccedf, verify_edf
from edfforge.families.bipartite import complete_bipartite_alpha
from edfforge.families.cycle import cycle_alpha, cycle_oriented_near_alpha
from edfforge.families.cyclotomic import cyclotomic_near_alpha_tree, star_path_oriented_beta
from edfforge.families.ladder import ladder_oriented
from edfforge.families.path import path_unidirectional, path_alpha, unidirectional_path_family
from edfforge.families.sun import sun_alpha, sun_semi_directed
from edfforge.families.two_cycles import two_cycles_alpha, two_cycles_alpha_4k2, two_cycles_clockwise
from edfforge.graph import Digraph, Graph
from edfforge.oracle.search import search_beta, search_oriented_beta
from edfforge.oracle.trees import exhaustive_trees_near_alpha
from edfforge.types import ArcReport, BlowUpOrder, EdfParams
from edfforge.valuation import ValuationKind
from edfforge.valuation.check import classify, satisfies

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FAILED = 2
EXIT_NOT_FOUND = 3


class UsageError(EdfForgeError):
    ...


def _need(args, name: str) -> int:
    value = getattr(args, name)
    if value is None:
        raise UsageError(f'--{name} is required for {args.family}')
    return value


def _labelled(kind: ValuationKind, built) -> LabelledGraph:
    return LabelledGraph(built[0], built[1], kind)


def _two_cycles(args) -> LabelledGraph:
    k = _need(args, 'k')
    if args.clockwise:
        return _labelled(ValuationKind.oriented_near_alpha, two_cycles_clockwise(k, args.length_class))
    build = two_cycles_alpha if args.length_class == '4k' else two_cycles_alpha_4k2
    return _labelled(ValuationKind.alpha, build(k))


def _path_edf(args) -> EdfWitness:
    m, l = _need(args, 'm'), _need(args, 'l')
    family: SetFamily = unidirectional_path_family(m, l)
    d, _ = path_unidirectional(m)
    w = EdfWitness(EdfParams(family.modulus, m, l), d.vertices, tuple((i, i + 1) for i in range(m - 1)), family)
    verdict = verify_edf(w)
    return dataclasses.replace(w, transcript=verdict.transcript, verified=verdict.ok)


FAMILIES: Dict[str, Callable[[argparse.Namespace], Payload]] = {
    'path': lambda a: _labelled(ValuationKind.alpha, path_alpha(_need(a, 'm'))),
    'cycle': lambda a: _labelled(ValuationKind.alpha, cycle_alpha(_need(a, 'm'))),
    'cycle-oriented': lambda a: _labelled(ValuationKind.oriented_near_alpha, cycle_oriented_near_alpha(_need(a, 'm'))),
    'kpq': lambda a: _labelled(ValuationKind.alpha, complete_bipartite_alpha(_need(a, 'p'), _need(a, 'q'))),
    'cyclotomic-tree': lambda a: _labelled(ValuationKind.near_alpha, cyclotomic_near_alpha_tree(_need(a, 'p'))),
    'star-path': lambda a: _labelled(ValuationKind.oriented_beta, star_path_oriented_beta(_need(a, 'p'), a.alpha)),
    '2cycles': _two_cycles,
    'ladder': lambda a: _labelled(ValuationKind.oriented_near_alpha, ladder_oriented(_need(a, 'k'))),
    'sun': lambda a: _labelled(ValuationKind.alpha, sun_alpha(_need(a, 'k'))),
    'sun-directed': lambda a: _labelled(ValuationKind.oriented_near_alpha, sun_semi_directed(_need(a, 'k'))),
    'five-vertex': lambda a: _labelled(ValuationKind.near_alpha, catalog.five_vertex_near_alpha()),
    'oralp': lambda a: _labelled(ValuationKind.oriented_near_alpha, catalog.oralp_digraph()),
    'path-edf': _path_edf,
    '2cedf': lambda a: build_2cedf(_need(a, 'k'), _need(a, 'l')),
}

# families whose --l is part of the construction itself
_OWN_L = ('path-edf', '2cedf')


def _blow_up(lg: LabelledGraph, l: int, order: BlowUpOrder) -> EdfWitness:
    if lg.kind in (ValuationKind.alpha, ValuationKind.near_alpha):
        return edf_from_near_alpha(lg.target, lg.labelling, l, order)
    if lg.kind is ValuationKind.oriented_near_alpha:
        return edf_from_oriented_near_alpha(lg.target, lg.labelling, l, order)
    if l == 1:
        return edf_from_oriented_beta(lg.target, lg.labelling)
    raise UsageError('an oriented beta-valuation only gives singleton EDFs; use --l 1')


def _verified(payload: Payload) -> bool:
    if isinstance(payload, EdfWitness):
        if payload.params.c is not None:
            return bool(verify_ccedf(payload.family, payload.params.c, payload.params.lam))
        return bool(verify_edf(payload))
    return payload.kind is None or satisfies(payload.target, payload.labelling, payload.kind)


def _emit(text: str, out: Optional[str]):
    if out:
        Path(out).write_text(text, encoding='utf_8')
    else:
        sys.stdout.write(text)


def _emit_json(payload: Payload, out: Optional[str]):
    if out:
        codec.save(out, payload)
    else:
        sys.stdout.write(codec.dumps(payload))


def cmd_construct(args) -> int:
    payload = FAMILIES[args.family](args)
    if args.l is not None and args.family not in _OWN_L:
        if not isinstance(payload, LabelledGraph):
            raise UsageError(f'{args.family} does not take --l')
        payload = _blow_up(payload, args.l, BlowUpOrder(args.order))
    if args.lam == 2:
        if not isinstance(payload, EdfWitness) or payload.params.c is not None:
            raise UsageError('--lambda 2 needs an EDF; pass --l')
        payload = double_witness(payload)
    elif args.lam != 1:
        raise UsageError(f'only lambda 1 or 2 can be built, got {args.lam}')
    if not _verified(payload):
        print(f'constructed {args.family} failed verification', file=sys.stderr)
        return EXIT_FAILED
    _emit_json(payload, args.out)
    return EXIT_OK


def _print_transcript(transcript: Sequence[ArcReport]):
    for r in transcript:
        i, j = r.arc
        if r.interval is not None:
            print(f'arc {i}->{j}: {r.size} differences, interval [{r.interval[0]}, {r.interval[1]}]')
        else:
            print(f'arc {i}->{j}: {r.size} differences {list(r.residues)}')


def _print_defects(defects, lam: int):
    for residue, count in defects:
        what = 'missing' if count < lam else 'duplicated'
        print(f'residue {residue} {what}: covered {count} times, expected {lam}')


def cmd_verify(args) -> int:
    payload = codec.load(args.input)
    if args.mode == 'valuation':
        if not isinstance(payload, LabelledGraph):
            raise UsageError('valuation mode needs a labelled-graph file')
        found = classify(payload.target, payload.labelling)
        print(f'class: {found.kind.value}' + (f', threshold {found.threshold}' if found.threshold is not None else ''))
        kind = ValuationKind(args.cls) if args.cls else payload.kind
        if kind is None:
            return EXIT_OK if found.kind is not ValuationKind.none else EXIT_FAILED
        ok = satisfies(payload.target, payload.labelling, kind)
        print(f'{kind.value}: {"ok" if ok else "FAILED"}')
        return EXIT_OK if ok else EXIT_FAILED
    if not isinstance(payload, EdfWitness):
        raise UsageError(f'{args.mode} mode needs a witness file')
    if args.mode == 'ccedf':
        c = args.c if args.c is not None else payload.params.c
        if c is None:
            raise UsageError('ccedf mode needs --c or a witness with params.c')
        verdict = verify_ccedf(payload.family, c, payload.params.lam)
        _print_transcript(verdict.transcript)
        print(f'blocks (gcd {len(verdict.blocks)}): ' + ' | '.join(' '.join(map(str, b)) for b in verdict.blocks))
        print(f'direct and block unions {"agree" if verdict.agrees else "DISAGREE"}')
        _print_defects(verdict.defects, payload.params.lam)
        ok = bool(verdict)
    else:
        verdict = verify_edf(payload, search_limits().workers)
        _print_transcript(verdict.transcript)
        _print_defects(verdict.defects, payload.params.lam)
        ok = bool(verdict)
    n, m, l, lam, c = payload.params
    name = f'({n},{m},{l},{lam})-' + (f'{c}-CEDF' if args.mode == 'ccedf' else 'EDF')
    print(f'{name}: {"ok" if ok else "FAILED"}')
    return EXIT_OK if ok else EXIT_FAILED


def _generated(spec: str) -> Union[Graph, Digraph]:
    name, _, arg = spec.partition(':')
    sized = {'cycle': catalog.cycle_graph, 'path': catalog.path_graph,
             'unidirectional-cycle': catalog.unidirectional_cycle}
    fixed = {'rosa-star': catalog.rosa_star_graph, 'two-edges': catalog.two_disjoint_edges,
             'orbeta': lambda: catalog.orbeta_digraph()[0]}
    if name in sized:
        try:
            return sized[name](int(arg))
        except ValueError:
            raise UsageError(f'{name} needs a size, as in {name}:8') from None
    if name in fixed and not arg:
        return fixed[name]()
    if Path(spec).is_file():
        payload = codec.load(spec)
        if isinstance(payload, EdfWitness):
            return payload.digraph
        return payload.target
    raise UsageError(f'unknown graph {spec!r}')


def cmd_search(args) -> int:
    target = _generated(args.graph)
    limits = search_limits()
    if args.max_vertices:
        limits = limits._replace(max_vertices=args.max_vertices)
    if args.workers:
        limits = limits._replace(workers=args.workers)
    oriented = isinstance(target, Digraph)
    kind = ValuationKind(args.cls) if args.cls else (
        ValuationKind.oriented_beta if oriented else ValuationKind.beta)
    if kind.oriented != oriented:
        raise UsageError(f'{kind.value} does not apply to a{" di" if oriented else "n undirected "}graph')
    found = search_oriented_beta(target, kind, limits) if oriented else search_beta(target, kind, limits)
    if found is None:
        print(f'no {kind.value} valuation exists')
        return EXIT_NOT_FOUND
    _emit_json(LabelledGraph(target, found, kind), args.out)
    if args.out:
        print(', '.join(f'{v}={found[v]}' for v in target.vertices))
    return EXIT_OK


def cmd_export_dot(args) -> int:
    _emit(codec.to_dot(codec.load(args.input)), args.out)
    return EXIT_OK


def cmd_trees(args) -> int:
    report = exhaustive_trees_near_alpha(args.order)
    print(f'order {report.order}: {report.tree_count} trees (expected {report.expected_count}), '
          f'{len(report.failures)} without a near-alpha valuation')
    for edges in report.failures:
        print(f'  {list(edges)}')
    return EXIT_OK if report.passed else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='edf-forge', description='Graph valuations and external difference families.')
    parser.add_argument('-v', '--verbose', action='count', default=0, help='-v for info, -vv for debug logging')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('construct', help='build a labelled family or an EDF')
    p.add_argument('family', choices=sorted(FAMILIES))
    for name in ('m', 'k', 'p', 'q', 'l'):
        p.add_argument(f'--{name}', type=int)
    p.add_argument('--alpha', type=int, help='primitive element for star-path')
    p.add_argument('--length-class', choices=('4k', '4k+2'), default='4k')
    p.add_argument('--clockwise', action='store_true', help='2cycles: orient both cycles the same way round')
    p.add_argument('--order', choices=[o.value for o in BlowUpOrder], default=BlowUpOrder.small_first.value)
    p.add_argument('--lambda', dest='lam', type=int, default=1)
    p.add_argument('--out')
    p.set_defaults(run=cmd_construct)

    p = sub.add_parser('verify', help='check a witness or a labelled graph')
    p.add_argument('mode', choices=('edf', 'ccedf', 'valuation'))
    p.add_argument('input')
    p.add_argument('--c', type=int)
    p.add_argument('--class', dest='cls', choices=[k.value for k in ValuationKind if k is not ValuationKind.none])
    p.set_defaults(run=cmd_verify)

    p = sub.add_parser('search', help='exhaustive valuation search on a small graph')
    p.add_argument('graph', help='cycle:M, path:M, unidirectional-cycle:M, rosa-star, two-edges, orbeta or a file')
    p.add_argument('--class', dest='cls', choices=[k.value for k in ValuationKind if k is not ValuationKind.none])
    p.add_argument('--max-vertices', type=int)
    p.add_argument('--workers', type=int)
    p.add_argument('--out')
    p.set_defaults(run=cmd_search)

    p = sub.add_parser('export-dot', help='write Graphviz source for a witness or labelled graph')
    p.add_argument('input')
    p.add_argument('--out')
    p.set_defaults(run=cmd_export_dot)

    p = sub.add_parser('trees', help='near-alpha search over every tree of one order')
    p.add_argument('--order', type=int, required=True)
    p.set_defaults(run=cmd_trees)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE
    level = logging.WARNING if args.verbose == 0 else logging.INFO if args.verbose == 1 else logging.DEBUG
    logging.basicConfig(level=level, format='%(levelname)s %(name)s: %(message)s', stream=sys.stderr)
    try:
        return args.run(args)
    except EdfForgeError as e:
        print(f'edf-forge: {e}', file=sys.stderr)
        return EXIT_USAGE
