"""Command-line frontend.

Every subcommand builds a report dictionary with the keys ``command``,
``inputs``, ``results``, ``verdict`` and ``summary``. By default the summary
lines are printed; ``--json`` prints the whole report as canonical JSON
(sorted keys, two-space indent), so identical inputs give byte-identical
output.

Exit codes: 0 success, 1 the check ran and came out false, 2 bad input.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Optional, Sequence

from .lefschetz import (
    FixedConfig,
    S_table,
    admissible_primes,
    order3_analysis,
    order5_analysis,
    s0_terminal_closed_form,
    solve_configs,
    verify_config,
)
from .localtypes import classify, enumerate_isolated_types, is_prime, is_terminal, make_type
from .pipelines import EXAMPLE_NAMES, load_example, run_example

__all__ = ['main', 'build_parser', 'InputError', 'dumps']

EXIT_OK, EXIT_FALSE, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    """Raised for anything the user should fix on the command line or in a file."""


def _plain(obj: Any) -> Any:
    if isinstance(obj, Fraction):
        return [obj.numerator, obj.denominator]
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    return obj


def dumps(report: dict) -> str:
    return json.dumps(_plain(report), sort_keys=True, indent=2)


def _prime(p: int) -> int:
    if not is_prime(p):
        raise InputError(f'p must be prime, got {p}')
    return p


def _exps(text: str) -> tuple[int, ...]:
    try:
        vals = tuple(int(x) for x in text.replace(' ', '').split(',') if x)
    except ValueError:
        raise argparse.ArgumentTypeError(f'exponents must be comma-separated integers, got {text!r}') from None
    if len(vals) != 3:
        raise argparse.ArgumentTypeError(f'expected three exponents, got {len(vals)}')
    return vals


def _report(command: str, inputs: dict, results: Any, verdict: Optional[bool], summary: list[str]) -> dict:
    return {'command': command, 'inputs': inputs, 'results': results,
            'verdict': verdict, 'summary': summary}


def _fmt_bool(b: Optional[bool]) -> str:
    return 'n/a' if b is None else str(b).lower()


# -- subcommands --

def cmd_classify(p: int, exps: Sequence[int]) -> dict:
    _prime(p)
    try:
        t = make_type(p, exps)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    c = classify(t)
    ages = ', '.join(f'u={u}: {a}' for u, a in sorted(c.ages.items()))
    summary = [
        f'type {t}  s={c.s}',
        f'isolated={_fmt_bool(c.is_isolated)} quasi_reflection={_fmt_bool(c.is_quasi_reflection)} '
        f'gorenstein={_fmt_bool(c.is_gorenstein)}',
        f'canonical={_fmt_bool(c.is_canonical)} terminal={_fmt_bool(c.is_terminal)}',
        f'ages: {ages}',
    ]
    return _report('classify', {'p': p, 'exps': list(exps)}, c.to_json(), True, summary)


def cmd_primes(p_max: int) -> dict:
    rows = admissible_primes(p_max)
    summary = [f'p={a.p} q={a.q}' for a in rows] or ['no admissible primes']
    return _report('primes', {'max': p_max}, [{'p': a.p, 'q': a.q} for a in rows], True, summary)


def _annotate(c: FixedConfig) -> dict:
    rep = verify_config(c)
    out = {'config': c.to_json(), 'size': c.size, 'valid': rep.valid,
           'conti': {'lhs': rep.conti_lhs, 'rhs': rep.conti_rhs, 'ok': rep.conti_ok},
           'all_terminal': all(is_terminal(t) for t, _ in c.points)}
    if c.p == 5 and c.r:
        out['order5'] = order5_analysis(c).to_json()
    elif c.p == 3:
        out['order3'] = order3_analysis(c).to_json()
    return out


def cmd_solve(p: int, r: int, max_points: int) -> dict:
    _prime(p)
    if not 0 <= r < p:
        raise InputError(f'r must lie in [0, {p - 1}], got {r}')
    if max_points < 0:
        raise InputError('max must be non-negative')
    sols = [_annotate(c) for c in solve_configs(p, r, max_points)]
    ok = all(s['valid'] and s['conti']['ok'] for s in sols)
    summary = [f'{len(sols)} configuration(s) for p={p}, r={r}, at most {max_points} points']
    for s in sols:
        cfg = FixedConfig.from_json(s['config'])
        line = f'  {s["size"]:3d} points: {cfg}'
        if 'order5' in s:
            o = s['order5']
            line += f'  (n={o["n"]}, q1={o["q1"]}, q2={o["q2"]}; n=5+q2: {_fmt_bool(o["relation_holds"])})'
        summary.append(line)
    return _report('solve', {'p': p, 'r': r, 'max': max_points}, sols, ok, summary)


def cmd_verify(path: str) -> dict:
    try:
        with open(path) as fh:
            data = json.load(fh)
        cfg = FixedConfig.from_json(data)
    except OSError as exc:
        raise InputError(f'cannot read {path}: {exc.strerror}') from None
    except (ValueError, KeyError, TypeError) as exc:
        raise InputError(f'malformed configuration file {path}: {exc}') from None
    rep = verify_config(cfg)
    verdict = rep.valid and rep.conti_ok
    summary = [
        f'configuration {cfg}',
        f'Lefschetz identity: {"holds" if rep.valid else "fails"}',
        f'  lhs = {rep.lhs}',
        f'  rhs = {rep.rhs}',
        f'S_0 check: {rep.conti_lhs} = {rep.conti_rhs}: {_fmt_bool(rep.conti_ok)}',
    ]
    if rep.counts:
        summary.append('counts: ' + ', '.join(f'{k}={v}' for k, v in sorted(rep.counts.items())))
    return _report('verify', {'file': path, 'config': cfg.to_json()}, rep.to_json(), verdict, summary)


def cmd_s0(p: int, exps: Optional[Sequence[int]] = None, terminal_only: bool = False) -> dict:
    _prime(p)
    if exps is not None:
        try:
            types = [make_type(p, exps)]
        except ValueError as exc:
            raise InputError(str(exc)) from None
    else:
        types = enumerate_isolated_types(p)
    closed = s0_terminal_closed_form(p)
    rows, summary, ok = [], [f'S_n tables for p={p}; terminal closed form S_0 = {closed}'], True
    for t in types:
        term = is_terminal(t) if all(t.exps) else None
        if terminal_only and not term:
            continue
        tab = list(S_table(t))
        match = None if not term else Fraction(tab[0]) == closed
        ok = ok and match is not False
        rows.append({'type': t.to_json(), 'terminal': term, 'S': tab, 'matches_closed_form': match})
        summary.append(f'  {t}  terminal={_fmt_bool(term)}  S=' + ' '.join(map(str, tab)))
    return _report('s0', {'p': p, 'exps': list(exps) if exps else None, 'terminal_only': terminal_only},
                   {'closed_form': closed, 'rows': rows}, ok, summary)


def cmd_example(name: str) -> dict:
    try:
        data = load_example(name)
    except KeyError as exc:
        raise InputError(exc.args[0]) from None
    rep = run_example(data)
    summary = [f'{rep["name"]}: {rep["title"]}']
    for c in rep['checks']:
        mark = 'PASS' if c['passed'] else 'FAIL'
        summary.append(f'  [{mark}] {c["name"]}' + (f': {c["detail"]}' if c['detail'] else ''))
    return _report('example', {'name': name}, rep, rep['ok'], summary)


# -- argument handling --

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog='cyfix', description='Exact fixed-point analysis for automorphisms of Calabi-Yau threefolds.')
    ap.add_argument('--json', action='store_true', help='print the full report as JSON')
    sub = ap.add_subparsers(dest='command', required=True)

    c = sub.add_parser('classify', help='classify one linearized fixed point')
    c.add_argument('--p', type=int, required=True)
    c.add_argument('--exps', type=_exps, required=True, help='three exponents, e.g. 1,1,2')

    c = sub.add_parser('primes', help='primes p with 24p/(p^2-1) integral')
    c.add_argument('--max', type=int, required=True, dest='p_max')

    c = sub.add_parser('solve', help='enumerate all fixed-point configurations')
    c.add_argument('--p', type=int, required=True)
    c.add_argument('--r', type=int, required=True)
    c.add_argument('--max', type=int, default=64, dest='max_points')

    c = sub.add_parser('verify', help='check a configuration file against the Lefschetz identity')
    c.add_argument('config_file')

    c = sub.add_parser('s0', help='print S_n tables')
    c.add_argument('--p', type=int, required=True)
    c.add_argument('--exps', type=_exps, default=None)
    c.add_argument('--terminal-only', action='store_true')

    c = sub.add_parser('example', help='run a shipped worked example')
    c.add_argument('name', help=', '.join(EXAMPLE_NAMES))

    for p in sub.choices.values():
        p.add_argument('--json', action='store_true', default=argparse.SUPPRESS, help=argparse.SUPPRESS)
    return ap


def _dispatch(args: argparse.Namespace) -> dict:
    if args.command == 'classify':
        return cmd_classify(args.p, args.exps)
    if args.command == 'primes':
        return cmd_primes(args.p_max)
    if args.command == 'solve':
        return cmd_solve(args.p, args.r, args.max_points)
    if args.command == 'verify':
        return cmd_verify(args.config_file)
    if args.command == 's0':
        return cmd_s0(args.p, args.exps, args.terminal_only)
    return cmd_example(args.name)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        report = _dispatch(args)
    except InputError as exc:
        print(f'error: {exc}', file=sys.stderr)
        return EXIT_INPUT
    if args.json:
        print(dumps(report))
    else:
        print('\n'.join(report['summary']))
    return EXIT_OK if report['verdict'] is not False else EXIT_FALSE
