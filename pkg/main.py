"""
tqdlab command line
Runs the cocycle, quantum double, Morita, genuineness and Nichols procedures
and prints JSON (default) or banner text reports
"""

import argparse
import json
import os
import sys
import traceback

import config
import fixtures
import reports
from cocycles import CocycleParams, Cochain3, is_abelian, verify_3cocycle
from errors import TqdError
from genuine import genuineness_report, sweep
from groups import group_from_json, invariant_factors_of
from log_config import setup_logging
from morita import (MoritaWitness, check_theorem12, condition_sets,
                    construct_dual, dual_summary, is_dual_abelian, verify_witness)
from nichols import (braiding, cartan_data, classify_triple, d8_module,
                     diagonalize_braiding, is_braid_indecomposable,
                     matrix_to_json, skeleton)
from tqd import (TqdAlgebra, cyclic_algebra, grouplike_group, verify_extension,
                 verify_quasi_hopf, verify_relations)

EXIT_OK, EXIT_FALSE, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3


def _read_json(text):
    """Inline JSON or a path to a JSON file"""
    if os.path.exists(text):
        with open(text, encoding='utf-8') as f:
            return json.load(f)
    return json.loads(text)


def _load_params(args):
    if getattr(args, 'fixture', None):
        obj = fixtures.load(args.fixture)
        if isinstance(obj, tuple):
            obj = obj[0]
        if not isinstance(obj, CocycleParams):
            raise ValueError(f"fixture {args.fixture!r} does not hold cocycle parameters")
        return obj
    if getattr(args, 'params', None):
        return CocycleParams.from_json(_read_json(args.params))
    raise ValueError("give --fixture or --params")


def _modules(args):
    return [d8_module(name.strip()) for name in args.modules.split(',') if name.strip()]


# Handlers return (data, ok, text)

def cmd_cocycle(args):
    params = _load_params(args)
    if args.action == 'verify':
        ok, witness = verify_3cocycle(Cochain3.from_params(params))
        data = {'params': params.to_json(), 'valid': ok,
                'witness': None if witness is None else {'kind': witness[0], 'args': list(witness[1])}}
    else:
        ok = is_abelian(params)
        data = {'params': params.to_json(), 'abelian': ok}
    return data, ok, reports.format_generic(f"COCYCLE {args.action.upper()}", data)


def cmd_tqd(args):
    if args.action == 'axioms':
        if args.group or args.named:
            G = group_from_json(_read_json(args.group) if args.group else {'named': args.named})
            A = TqdAlgebra(G, Cochain3.trivial(G))
        elif args.m is not None and args.a is not None:
            A = cyclic_algebra(args.m, args.a)
        else:
            A = TqdAlgebra.from_params(_load_params(args))
        report = verify_quasi_hopf(A, full=args.full, seed=args.seed)
        text = reports.format_checks(f"QUASI-HOPF AXIOMS ({report['mode']})", report['axioms'])
        return report, report['passed'], text

    if args.m is None or args.a is None:
        raise ValueError("tqd grouplikes needs --m and --a")
    GG = grouplike_group(cyclic_algebra(args.m, args.a))
    relations = verify_relations(GG)
    data = {'m': args.m, 'a': args.a, 'order': GG.table.order,
            'invariant_factors': invariant_factors_of(GG.table),
            'relations': relations, 'extension': verify_extension(GG)}
    ok = all(relations.values()) and data['extension']
    return data, ok, reports.format_generic("GROUP-LIKES", data)


def cmd_morita(args):
    if args.action == 'verify-witness':
        if args.witness:
            params = _load_params(args)
            witness = MoritaWitness.from_json(_read_json(args.witness))
        else:
            record = fixtures.fixture(args.fixture or 'example-3-7')
            if record['kind'] != 'morita_witness':
                raise ValueError(f"fixture {record['name']!r} holds no Morita witness")
            params, witness = fixtures.build(record)
        report = verify_witness(params.group, Cochain3.from_params(params), witness)
        data = {'condition_sets': condition_sets(params).to_json(),
                'theorem12': check_theorem12(params), 'witness_report': report}
        return data, report['passed'], reports.format_morita(data)

    params = _load_params(args)
    data = {'condition_sets': condition_sets(params).to_json(),
            'theorem12': check_theorem12(params),
            'dual_abelian_predicted': is_dual_abelian(params)}
    if args.action == 'check':
        return data, data['theorem12'], reports.format_morita(data)

    witness, dual = construct_dual(params)
    data['dual_group'] = dual_summary(dual)
    data['witness_report'] = verify_witness(params.group, Cochain3.from_params(params), witness)
    return data, data['witness_report']['passed'], reports.format_morita(data)


def _sweep_range(text):
    lo, _, hi = text.partition(':')
    lo, hi = int(lo), int(hi or lo)
    return range(lo, hi + 1)


def cmd_genuine(args):
    if args.sweep:
        df = sweep(_sweep_range(args.sweep), explicit=args.explicit, workers=args.workers)
        data = json.loads(df.to_json(orient='records'))
        ok = bool(df['agree'].all()) if not df.empty else True
        return data, ok, reports.format_sweep(df)
    if args.m is None or args.a is None:
        raise ValueError("give --m and --a, or --sweep LO:HI")
    report = genuineness_report(args.m, args.a, explicit=args.explicit).to_json()
    return report, report['genuine'], reports.format_genuineness(report)


def cmd_nichols(args):
    if args.action == 'classify':
        triple = [int(n) for n in args.triple.split(',')]
        if len(triple) != 3:
            raise ValueError("--triple takes three module numbers, e.g. 1,3,5")
        report = classify_triple(*triple, cap=args.cap)
        return report, report['verdict'] == 'infinite-dimensional', reports.format_triple(report)

    modules = _modules(args)
    names = [M.name for M in modules]
    if args.action == 'cartan':
        matrix, certificates = cartan_data(modules, args.cap)
        data = {'modules': names, 'cartan': matrix, 'certificates': certificates}
        return data, True, reports.format_matrix(matrix, names)
    if args.action == 'diagram':
        matrix, basis, diagram = diagonalize_braiding(modules)
        space = braiding(modules)
        data = {'modules': names, 'basis': [v.to_json(space) for v in basis],
                'braiding_matrix': matrix_to_json(matrix), 'diagram': diagram.to_json()}
        labels = [v.label for v in basis]
        return data, True, reports.format_matrix(data['braiding_matrix'], labels)
    if args.action == 'skeleton':
        matrix, _ = cartan_data(modules, args.cap)
        sk = skeleton(modules, matrix, strict=False)
        data = {'modules': names, 'cartan': matrix, 'skeleton': sk.to_json()}
        return data, sk.is_skeleton, reports.format_generic("SKELETON", data)

    ok, witness = is_braid_indecomposable(modules)
    data = {'modules': names, 'braid_indecomposable': ok, 'witness': witness}
    return data, ok, reports.format_generic("BRAID INDECOMPOSABILITY", data)


def cmd_fixtures(args):
    if args.action == 'list':
        data = [{'name': n, 'kind': fixtures.fixture(n)['kind']} for n in fixtures.fixture_names()]
        text = "\n".join(f"  {d['name']:<28} {d['kind']}" for d in data)
        return data, True, text
    if not args.name:
        raise ValueError("fixtures show needs a fixture name")
    record = fixtures.fixture(args.name)
    return record, True, reports.to_json(record)


def build_parser():
    parser = argparse.ArgumentParser(
        prog='tqdlab',
        description='Exact twisted quantum doubles, Morita duals and D8 Nichols data')
    parser.add_argument('--format', choices=['json', 'text'], default='json')
    parser.add_argument('--verbose', action='store_true', help='Debug logging')
    sub = parser.add_subparsers(dest='command', required=True)

    def add_params(p):
        p.add_argument('--fixture', help='Named fixture (see `fixtures list`)')
        p.add_argument('--params', help='CocycleParams JSON, inline or a file path')

    p = sub.add_parser('cocycle', help='Verify or classify a cocycle parameter vector')
    p.add_argument('action', choices=['verify', 'abelian'])
    add_params(p)
    p.set_defaults(handler=cmd_cocycle)

    p = sub.add_parser('tqd', help='Quantum double axioms and group-likes')
    p.add_argument('action', choices=['axioms', 'grouplikes'])
    add_params(p)
    p.add_argument('--named', help='Named group with trivial cocycle, e.g. D8')
    p.add_argument('--group', help='Group JSON (trivial cocycle), inline or a file path')
    p.add_argument('--full', action='store_true', help='Enumerate every basis tuple')
    p.add_argument('--seed', type=int, default=config.DEFAULT_SEED)
    p.add_argument('--m', type=int)
    p.add_argument('--a', type=int)
    p.set_defaults(handler=cmd_tqd)

    p = sub.add_parser('morita', help='Condition sets, dual construction, witness check')
    p.add_argument('action', choices=['check', 'construct', 'verify-witness'])
    add_params(p)
    p.add_argument('--witness', help='MoritaWitness JSON, inline or a file path')
    p.set_defaults(handler=cmd_morita)

    p = sub.add_parser('genuine', help='Genuineness of D^omega(Z_m)')
    p.add_argument('--m', type=int)
    p.add_argument('--a', type=int)
    p.add_argument('--explicit', action='store_true', help='Run the group-like oracle too')
    p.add_argument('--sweep', help='Range of m, e.g. 2:12')
    p.add_argument('--workers', type=int, default=config.SWEEP_WORKERS)
    p.set_defaults(handler=cmd_genuine)

    p = sub.add_parser('nichols', help='Braidings, Cartan matrices and skeletons over D8')
    p.add_argument('action', choices=['cartan', 'diagram', 'skeleton', 'indecomposable', 'classify'])
    p.add_argument('--modules', default='M1,M3,M5', help='Comma-separated D8 modules M1..M6')
    p.add_argument('--triple', default='1,3,5', help='Module numbers for classify')
    p.add_argument('--cap', type=int, default=config.DEFAULT_CARTAN_CAP)
    p.set_defaults(handler=cmd_nichols)

    p = sub.add_parser('fixtures', help='List or show fixtures')
    p.add_argument('action', choices=['list', 'show'])
    p.add_argument('name', nargs='?')
    p.set_defaults(handler=cmd_fixtures)
    return parser


def run(argv=None):
    """
    Parse arguments, dispatch, print the report

    Returns:
        0 on success, 1 when a predicate is false, 2 on input errors,
        3 on internal errors
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logging(level='DEBUG' if args.verbose else None)
    predicates = {'cocycle', 'tqd', 'morita', 'genuine'}
    try:
        data, ok, text = args.handler(args)
    except (TqdError, ValueError, KeyError, json.JSONDecodeError) as e:
        print(f"❌ {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_INPUT
    except Exception:
        traceback.print_exc()
        print("❌ Internal error, see the traceback above", file=sys.stderr)
        return EXIT_INTERNAL

    print(reports.to_json(data) if args.format == 'json' else text)
    is_predicate = (args.command in predicates
                    or getattr(args, 'action', None) in ('indecomposable', 'classify', 'skeleton'))
    if is_predicate and not ok:
        return EXIT_FALSE
    return EXIT_OK


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
