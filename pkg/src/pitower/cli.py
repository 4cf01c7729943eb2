#  Copyright (c) 2024. Affects AI LLC
#
#  Licensed under the Creative Common CC BY-NC-SA 4.0 International License (the "License");
#  you may not use this file except in compliance with the License. The full text of the License is
#  provided in the included LICENSE file. If this file is not available, you may obtain a copy of the
#  License at
#
#       https://creativecommons.org/licenses/by-nc-sa/4.0/deed.en
#
#  Unless required by applicable law or agreed to in writing, software distributed under the License
#  is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either
#  express or implied. See the License for the specific language governing permissions and limitations
#  under the License.
import argparse
import json
import logging
import sys
from pathlib import Path

from pitower.counting import MatrixGenSet, CountSeries, count_series, fit_dimension, run_catalog, \
    dimension_catalog_check
from pitower.errors import PitowerError, ParseError, NotFullHeight
from pitower.formal import height_of, divisibility_check
from pitower.reports import LAW_CHOICES, build_law, read_law, write_law, emit, run_scenario
from pitower.rings import LocalRingSpec, make_ring
from pitower.torsion import torsion_profile, full_height_tower, certified_tower

logger = logging.getLogger('pitower')


def _load_json(path):
    try:
        with open(path, 'r') as f:
            return json.load(f)
    except json.JSONDecodeError as ex:
        raise ParseError(f'Cannot parse {path}: {ex}')


def _write(data, args):
    if args.out:
        Path(args.out).write_bytes(data)
    else:
        sys.stdout.buffer.write(data)


def lt_law_command(args):
    ring = make_ring(LocalRingSpec.from_dict(_load_json(args.ring), N=args.precision))
    law = build_law(ring, args.law, args.degree, args.group_degree)
    height = height_of(law)
    extra = {'height': height.to_dict(), 'pi_height': height.pi_height(ring.f)}
    if args.out:
        write_law(law, args.out, extra)
    else:
        _write(emit({**law.to_dict(), **extra}), args)
    return 0


def height_command(args):
    law = read_law(args.law)
    height = height_of(law)
    _write(emit({'height': height.to_dict(), 'pi_height': height.pi_height(law.ring.f),
                 'divisible': divisibility_check(law)}, args.format), args)
    return 0


def torsion_command(args):
    law = read_law(args.law)
    profiles = [torsion_profile(law, n) for n in range(1, args.levels + 1)]
    _write(emit({'profiles': [t.to_dict() for t in profiles]}, args.format), args)
    return 0


def tower_command(args):
    law = read_law(args.law)
    try:
        report = full_height_tower(law, args.levels)
    except NotFullHeight as ex:
        logger.debug(f'{ex}; reporting certified bounds only')
        report = certified_tower(law, args.levels)
    _write(emit(report, args.format), args)
    return 0 if report.passed else 1


def count_command(args):
    gens = MatrixGenSet.from_dict(_load_json(args.gens))
    n_max = args.nmax if args.nmax is not None else gens.M
    _write(emit(count_series(gens, n_max), args.format), args)
    return 0


def fit_command(args):
    series = CountSeries.from_dict(_load_json(args.series))
    _write(emit(fit_dimension(series, args.base), args.format), args)
    return 0


def catalog_command(args):
    fits = run_catalog()
    report = dimension_catalog_check(fits, strict=False)
    _write(emit({'fits': [fit.to_dict() for fit in fits], **report}, args.format), args)
    return 0 if report['passed'] else 1


def scenario_command(args):
    report = run_scenario(args.path)
    _write(emit(report, args.format), args)
    for name in report.failed_checks():
        print(f'FAILED {name}', file=sys.stderr)
    return 0 if report.passed else 1


def build_parser():
    parser = argparse.ArgumentParser(prog='pitower', description='Lubin-Tate formal modules, their torsion towers '
                                                                 'and counting laws of p-adic matrix groups.')
    parser.add_argument('--verbose', '-v', action='store_true', help='log debug progress messages to stderr')
    commands = parser.add_subparsers(dest='command', required=True)

    def command(name, handler, help_text):
        sub = commands.add_parser(name, help=help_text)
        sub.add_argument('--out', default=None, help='output file (stdout when omitted)')
        sub.add_argument('--format', choices=['json', 'csv'], default='json')
        sub.set_defaults(handler=handler)
        return sub

    sub = command('lt-law', lt_law_command, 'construct a Lubin-Tate (or additive) law')
    sub.add_argument('--ring', required=True, help='ring spec JSON')
    sub.add_argument('--law', '--f', dest='law', choices=LAW_CHOICES, default='default',
                     help='w X + X^q (default), (1+X)^p - 1 (gm) or the additive law')
    sub.add_argument('--degree', type=int, required=True, help='truncation degree D')
    sub.add_argument('--group-degree', type=int, default=None, help='truncation of the two-variable law')
    sub.add_argument('--precision', type=int, default=None, help='override the p-adic precision N of the ring')

    sub = command('height', height_command, 'height of an archived law')
    sub.add_argument('--law', required=True, help='law JSON written by lt-law')

    for name, handler, help_text in (('torsion', torsion_command, 'torsion profiles of an archived law'),
                                     ('tower', tower_command, 'division tower report of an archived law')):
        sub = command(name, handler, help_text)
        sub.add_argument('--law', required=True, help='law JSON written by lt-law')
        sub.add_argument('--levels', type=int, default=3)

    sub = command('count', count_command, 'orders of the images of a matrix group mod p^n')
    sub.add_argument('--gens', required=True, help='generator JSON {"h","M","p","gens"}')
    sub.add_argument('--nmax', type=int, default=None, help='deepest level (defaults to M)')

    sub = command('fit', fit_command, 'fit the volume law to a count series')
    sub.add_argument('--series', required=True, help='count series JSON written by count')
    sub.add_argument('--base', type=int, default=None, help='p (default) or q for w-adic counts')

    command('catalog', catalog_command, 'run the built-in catalog of GL_(h_r)(A) models')

    scenario = commands.add_parser('scenario', help='reproducible experiments')
    actions = scenario.add_subparsers(dest='action', required=True)
    sub = actions.add_parser('run', help='run a scenario file')
    sub.add_argument('path')
    sub.add_argument('--out', default=None, help='output file (stdout when omitted)')
    sub.add_argument('--format', choices=['json', 'csv'], default='json')
    sub.set_defaults(handler=scenario_command)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)

    handler = logging.StreamHandler()
    handler.setLevel(logging.DEBUG if args.verbose else logging.WARNING)
    logging.basicConfig(handlers=[handler], format='%(name)s: %(message)s')

    try:
        return args.handler(args)
    except PitowerError as ex:
        print(f'pitower {args.command}: {type(ex).__name__}: {ex}', file=sys.stderr)
        return 2


if __name__ == '__main__':
    sys.exit(main())
