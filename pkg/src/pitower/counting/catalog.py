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
import logging
from dataclasses import dataclass

from pitower import config
from pitower.counting.CountSeries import CountSeries
from pitower.counting.DimFit import DimFit
from pitower.counting.OrderSpec import OrderSpec
from pitower.counting.embedding import embed_order
from pitower.counting.enumeration import count_series, omega_count_series
from pitower.counting.fitting import fit_dimension, fit_dimension_over_O, interleaving_check
from pitower.errors import CatalogViolation

logger = logging.getLogger('catalog')
logger.level = logging.DEBUG


@dataclass
class CatalogFit:
    """
    Counting results of one GL_(h_r)(A) model: the p-filtration fit (d) and the w-filtration fit (d_A).
    """
    label: str
    e: int
    f: int
    h_r: int
    series: CountSeries
    omega_series: CountSeries
    fit: DimFit
    omega_fit: DimFit

    @property
    def d(self):
        return self.fit.d

    @property
    def d_A(self):
        return self.omega_fit.d

    @property
    def h(self):
        return self.e * self.f * self.h_r

    def to_dict(self):
        return {'label': self.label, 'e': self.e, 'f': self.f, 'h_r': self.h_r, 'h': self.h,
                'series': self.series.to_dict(), 'omega_series': self.omega_series.to_dict(),
                'fit': self.fit.to_dict(), 'omega_fit': self.omega_fit.to_dict()}


def fit_entry(entry, budget=None):
    """
    Enumerates and fits one catalog entry {"label", "ring", "h_r", "nmax"}.
    """
    n_max = int(entry.get('nmax', config['counting']['default_nmax']))
    spec = OrderSpec.from_catalog(entry, M=n_max)
    gens = embed_order(spec, n_max)
    series = count_series(gens, n_max, budget)
    fit = fit_dimension(series)
    omega_series = omega_count_series(gens, spec, spec.e * n_max, budget)
    omega_fit, _ = fit_dimension_over_O(omega_series, spec, fit)
    logger.debug(f'{spec.label}: d={fit.d} vol={fit.vol} d_A={omega_fit.d}')
    return CatalogFit(spec.label, spec.e, spec.f, spec.h_r, series, omega_series, fit, omega_fit)


def run_catalog(entries=None, budget=None):
    entries = config['catalog'] if entries is None else entries
    return [fit_entry(entry, budget) for entry in entries]


def dimension_catalog_check(fits, strict=True):
    """
    Checks the dimension identities on fitted GL_(h_r)(A) models:

    - d_A = h_r^2 and d = h_r^2 * e * f for every entry, and e * d_A * f = d
    - models with equal e*f and h_r have equal d, and over the same p their counts interleave with shift 1
    - models of equal Z_p-height h have equal d iff they have equal e*f
    - for unramified entries the dimension over the coefficient field is h^2 / f

    Returns a report {"entries": [...], "pairs": [...], "passed": bool}.

    :raises CatalogViolation: some identity fails and strict is set
    """
    entries = []
    for fit in fits:
        checks = {
            'd_A = h_r^2': fit.d_A == fit.h_r ** 2,
            'd = h_r^2 e f': fit.d == fit.h_r ** 2 * fit.e * fit.f,
            'e d_A f = d': fit.e * fit.d_A * fit.f == fit.d,
        }
        if fit.e == 1:
            checks['h^2 / f = d'] = fit.h ** 2 == fit.d * fit.f
        entries.append({'label': fit.label, 'e': fit.e, 'f': fit.f, 'h_r': fit.h_r, 'd': fit.d, 'd_A': fit.d_A,
                        'checks': checks, 'pass': all(checks.values())})

    pairs = []
    for i, a in enumerate(fits):
        for b in fits[i + 1:]:
            if a.e * a.f == b.e * b.f and a.h_r == b.h_r:
                record = {'kind': 'equal (ef, h_r)', 'labels': [a.label, b.label], 'pass': a.d == b.d}
                if a.series.p == b.series.p:
                    record['interleaved'] = interleaving_check(a.series, b.series, 1)
                    record['pass'] = record['pass'] and record['interleaved']
                pairs.append(record)
            if a.h == b.h:
                pairs.append({'kind': 'equal Z_p-height', 'labels': [a.label, b.label],
                              'pass': (a.d == b.d) == (a.e * a.f == b.e * b.f)})

    report = {'entries': entries, 'pairs': pairs,
              'passed': all(e['pass'] for e in entries) and all(p['pass'] for p in pairs)}
    if strict and not report['passed']:
        failed = [e['label'] for e in entries if not e['pass']] + [p['labels'] for p in pairs if not p['pass']]
        raise CatalogViolation(f'Dimension identities fail for {failed}')
    return report
