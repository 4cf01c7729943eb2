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
import contextlib
import io
import json
import os
import tempfile
import unittest
from pathlib import Path
from unittest import mock

from pitower import config
from pitower.cli import main


class CliTest(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.dir = Path(self.tmp.name)
        patcher = mock.patch.dict(config, {'working_dir': self.tmp.name})
        patcher.start()
        self.addCleanup(patcher.stop)

    def tearDown(self):
        self.tmp.cleanup()

    def write(self, name, data):
        path = self.dir / name
        path.write_text(data if isinstance(data, str) else json.dumps(data))
        return str(path)

    def run_main(self, *argv):
        stderr = io.StringIO()
        with contextlib.redirect_stderr(stderr):
            code = main(list(argv))
        return code, stderr.getvalue()

    def test_scenario_run(self):
        path = self.write('gm.json', {'name': 'gm', 'ring': {'p': 3}, 'law': 'gm', 'degree': 9, 'levels': 2,
                                      'trials': 3, 'pairs': 3})
        out = str(self.dir / 'report.json')
        code, stderr = self.run_main('scenario', 'run', path, '--out', out)
        self.assertEqual(code, 0, stderr)
        report = json.loads(Path(out).read_text())
        self.assertTrue(report['passed'])
        self.assertEqual(report['steps']['fit']['fit']['vol'], '2/3')
        self.assertTrue((self.dir / 'laws').is_dir())

    def test_scenario_errors(self):
        code, stderr = self.run_main('scenario', 'run', self.write('broken.json', '{"ring": '))
        self.assertEqual(code, 2)
        self.assertIn('ParseError', stderr)

        code, stderr = self.run_main('scenario', 'run', self.write('deep.json', {'ring': {'p': 3}, 'law': 'gm',
                                                                                 'degree': 9, 'levels': 3}))
        self.assertEqual(code, 2)
        self.assertIn('ValidationError', stderr)

    def test_law_height_and_tower(self):
        ring = self.write('ring.json', {'p': 3})
        law = str(self.dir / 'law.json')
        code, stderr = self.run_main('lt-law', '--ring', ring, '--law', 'gm', '--degree', '9', '--out', law)
        self.assertEqual(code, 0, stderr)
        self.assertEqual(json.loads(Path(law).read_text())['height'], {'kind': 'FINITE', 'h': 1})

        height = str(self.dir / 'height.json')
        self.assertEqual(self.run_main('height', '--law', law, '--out', height)[0], 0)
        data = json.loads(Path(height).read_text())
        self.assertEqual(data['height'], {'kind': 'FINITE', 'h': 1})
        self.assertEqual(data['pi_height'], 1)

        tower = str(self.dir / 'tower.json')
        self.assertEqual(self.run_main('tower', '--law', law, '--levels', '2', '--out', tower)[0], 0)
        data = json.loads(Path(tower).read_text())
        self.assertTrue(data['full_height'])
        self.assertEqual([level['predicted_degree'] for level in data['levels']], ['2', '6'])

        code, stderr = self.run_main('torsion', '--law', law, '--levels', '3')
        self.assertEqual(code, 2)
        self.assertIn('TruncationTooSmall', stderr)

    def test_count_and_fit(self):
        gens = self.write('gens.json', {'h': 1, 'M': 4, 'p': 3, 'gens': [[[2]]]})
        csv_out = self.dir / 'count.csv'
        self.assertEqual(self.run_main('count', '--gens', gens, '--format', 'csv', '--out', str(csv_out))[0], 0)
        self.assertEqual(csv_out.read_text(), 'n,order\n1,2\n2,6\n3,18\n4,54\n')

        series = str(self.dir / 'count.json')
        self.assertEqual(self.run_main('count', '--gens', gens, '--out', series)[0], 0)
        fit = str(self.dir / 'fit.json')
        self.assertEqual(self.run_main('fit', '--series', series, '--out', fit)[0], 0)
        data = json.loads(Path(fit).read_text())
        self.assertEqual((data['d'], data['vol'], data['n0']), (1, '2/3', 1))

    def test_invalid_budget(self):
        gens = self.write('gens.json', {'h': 1, 'M': 2, 'p': 3, 'gens': [[[2]]]})
        with mock.patch.dict(os.environ, {'PITOWER_BUDGET': '10k'}):
            code, stderr = self.run_main('count', '--gens', gens)
        self.assertEqual(code, 2)
        self.assertIn('ValidationError: PITOWER_BUDGET', stderr)

    def test_usage_errors(self):
        with contextlib.redirect_stderr(io.StringIO()):
            with self.assertRaises(SystemExit):
                main(['lt-law', '--degree', '9'])
            with self.assertRaises(SystemExit):
                main(['count', '--gens', 'gens.json', '--format', 'xml'])


if __name__ == '__main__':
    unittest.main()
