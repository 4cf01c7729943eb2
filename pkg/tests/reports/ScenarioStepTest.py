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
import unittest

from pitower.errors import ValidationError
from pitower.reports import ScenarioStep


class CountingStep(ScenarioStep):
    def run_step(self, context):
        self.record_checks({'positive': context['counter'] > 0})
        context[self.name] = context['counter']
        context['counter'] += 1
        return {'counter': context[self.name]}


class StepA(CountingStep):
    name = 'a'


class StepB(CountingStep):
    name = 'b'


class StepC(CountingStep):
    name = 'c'


class StepD(CountingStep):
    name = 'd'


class FailingStep(ScenarioStep):
    name = 'failing'

    def run_step(self, context):
        raise ValidationError('levels out of range')


class ScenarioStepTest(unittest.TestCase):
    def test_parent_call(self):
        chain = StepA(parent_step=StepB(parent_step=StepC()))
        self.assertEqual(chain.resolve(), ['c', 'b', 'a'])

    def test_child_call(self):
        chain = StepA(child_step=StepB(child_step=StepC()))
        self.assertEqual(chain.resolve(), ['a', 'b', 'c'])

    def test_mixed_call(self):
        chain = StepA(child_step=StepB(parent_step=StepC(child_step=StepD())))
        self.assertEqual(chain.resolve(), ['a', 'c', 'd', 'b'])

    def test_context_call(self):
        context = {'counter': 1}

        # expected execution order is A -> C -> D -> B
        chain = StepA(child_step=StepB(parent_step=StepC(child_step=StepD())))
        chain(context)

        self.assertEqual(context['a'], 1)
        self.assertEqual(context['c'], 2)
        self.assertEqual(context['d'], 3)
        self.assertEqual(context['b'], 4)
        self.assertEqual(context['counter'], 5)
        self.assertEqual(list(context['steps']), ['a', 'c', 'd', 'b'])
        self.assertEqual(context['steps']['b'], {'counter': 4})
        self.assertEqual(context['checks'], {'a.positive': True, 'c.positive': True, 'd.positive': True,
                                             'b.positive': True})

    def test_errors_name_the_step(self):
        chain = StepA(child_step=FailingStep())
        with self.assertRaises(ValidationError) as raised:
            chain({'counter': 1})
        self.assertIn("step 'failing'", str(raised.exception))


if __name__ == '__main__':
    unittest.main()
