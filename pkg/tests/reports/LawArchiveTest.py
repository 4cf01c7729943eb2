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
import tempfile
import unittest
from pathlib import Path
from unittest import mock

from pitower import config
from pitower.errors import ParseError, ValidationError
from pitower.reports import LawArchive, build_law, read_law, write_law
from pitower.rings import LocalRingSpec, make_ring
from pitower.series import Series1


class LawArchiveTest(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.archive = LawArchive(working_dir=self.tmp.name)
        self.ring = make_ring(LocalRingSpec.create(3))

    def tearDown(self):
        self.tmp.cleanup()

    def test_load_or_build_caches(self):
        path = self.archive.path_for(self.ring.spec, 'gm', 9)
        self.assertFalse(path.exists())
        built = self.archive.load_or_build(self.ring, 'gm', 9)
        self.assertTrue(path.exists())
        self.assertEqual(path.parent, Path(self.tmp.name) / 'laws')

        loaded = self.archive.load_or_build(self.ring, 'gm', 9)
        self.assertIsNot(loaded, built)
        self.assertEqual(loaded.kind, 'lubin-tate')
        self.assertEqual(loaded.F, built.F)
        self.assertEqual(loaded.bracket_pi(), built.bracket_pi())

    def test_keys_cover_every_input(self):
        spec = self.ring.spec
        keys = {LawArchive.key(spec, 'gm', 9), LawArchive.key(spec, 'default', 9), LawArchive.key(spec, 'gm', 10),
                LawArchive.key(spec, 'gm', 9, 4), LawArchive.key(spec.with_precision(8), 'gm', 9)}
        self.assertEqual(len(keys), 5)

    def test_cache_can_be_disabled(self):
        with mock.patch.dict(config, {'cache_laws': False}):
            self.archive.load_or_build(self.ring, 'additive', 6)
        self.assertFalse(self.archive.path_for(self.ring.spec, 'additive', 6).exists())

    def test_archived_brackets_are_restored(self):
        law = build_law(self.ring, 'gm', 9)
        law.bracket(2)
        path = Path(self.tmp.name) / 'law.json'
        write_law(law, path, extra={'note': 'gm'})

        restored = read_law(path)
        self.assertIn(self.ring.from_int(2), [a for a, _ in restored.cached_brackets()])
        self.assertEqual(restored.bracket(2), Series1.from_ints(self.ring, [0, 2, 1] + [0] * 7))

    def test_invalid_documents(self):
        path = Path(self.tmp.name) / 'broken.json'
        path.write_text('{"kind": "lubin-tate", "D": ')
        with self.assertRaises(ParseError):
            read_law(path)
        path.write_text('{"kind": "lubin-tate"}')
        with self.assertRaises(ParseError):
            read_law(path)
        with self.assertRaises(ValidationError):
            build_law(self.ring, 'sine', 9)


if __name__ == '__main__':
    unittest.main()
