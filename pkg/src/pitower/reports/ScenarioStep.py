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
from abc import ABCMeta, abstractmethod

from pitower.errors import PitowerError

logger = logging.getLogger('ScenarioStep')
logger.level = logging.DEBUG


class ScenarioStep(metaclass=ABCMeta):
    def __init__(self, parent_step=None, child_step=None):
        """
        Constructs a scenario step with an optional parent and child step. If parent_step is given, then it will be
        run before this step. If child_step is given, then it will be run after this step. Chaining steps this way
        builds the construct -> torsion -> tower -> count -> fit -> catalog pipeline of a scenario.

        Every step reads what earlier steps left in the shared context dict (the scenario, the law, the tower...)
        and records its own results under context['steps'][self.name] and its relation checks under
        context['checks'].

        :param parent_step:
        :param child_step:
        """
        self._parent_step = parent_step
        self._child_step = child_step
        self._context = {}

    name = None

    @abstractmethod
    def run_step(self, context):
        """
        :param context: the context dictionary shared by the chain
        :return: a JSON-ready dict of results for this step
        """
        pass

    @property
    def context(self):
        return self._context

    def resolve(self, chain=None):
        """
        Resolves the step chain.

        :param chain: a list of step names that will already be run prior to this step, or None.
        :return: a list of step names, in the order in which they will be run when this step is called.
        """
        if chain is None:
            chain = []

        chain = chain if self._parent_step is None else self._parent_step.resolve(chain)
        chain.append(self.name)

        if self._child_step is not None:
            self._child_step.resolve(chain)

        return chain

    def record_checks(self, checks):
        """
        Adds this step's named relation checks to the shared context.
        """
        for key, value in checks.items():
            self.context.setdefault('checks', {})[f'{self.name}.{key}'] = bool(value)

    def __call__(self, context=None):
        if context is None:
            context = {}

        self.context.update(context)

        if self._parent_step is not None:
            self._parent_step(self.context)
        logger.debug(f'Running scenario step {self.name}')
        try:
            result = self.run_step(self.context)
        except PitowerError as ex:
            raise type(ex)(f"step '{self.name}': {ex}") from ex
        self.context.setdefault('steps', {})[self.name] = result
        if self._child_step is not None:
            self._child_step(self.context)

        context.update(self.context)
        return context
