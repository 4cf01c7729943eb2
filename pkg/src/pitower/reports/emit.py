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
import json

from pitower.counting import CountSeries
from pitower.errors import ParseError, ValidationError
from pitower.reports.RunReport import RunReport


def emit(report, fmt='json'):
    """
    Serializes a report. JSON keeps the insertion order of every mapping, with rationals already rendered as
    "num/den" and big integers as decimal strings by the to_dict methods. CSV is available for count series only
    (a CountSeries, or a RunReport holding a count step), as a header "n,order" followed by one row per level.

    :param report: a RunReport, a CountSeries or any object with to_dict()
    :param fmt: 'json' or 'csv'
    :return: the encoded bytes
    """
    if fmt == 'json':
        data = report if isinstance(report, dict) else report.to_dict()
        return (json.dumps(data, indent=2) + '\n').encode('utf-8')
    if fmt == 'csv':
        if isinstance(report, RunReport):
            count = report.steps.get('count')
            if count is None:
                raise ValidationError('CSV output needs a report with a count step')
            report = CountSeries.from_dict(count['series'])
        if not isinstance(report, CountSeries):
            raise ValidationError(f'CSV output is only available for count series, got {type(report).__name__}')
        return report.to_csv().encode('utf-8')
    raise ValidationError(f'Unknown output format {fmt!r}; use json or csv')


def parse_report(data):
    """
    Inverse of emit(report, 'json') for run reports.
    """
    try:
        return RunReport.from_dict(json.loads(data))
    except (json.JSONDecodeError, KeyError, TypeError) as ex:
        raise ParseError(f'Malformed report: {ex}')
