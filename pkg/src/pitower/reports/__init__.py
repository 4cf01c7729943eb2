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
from .ScenarioStep import ScenarioStep
from .ConstructLawStep import ConstructLawStep
from .TorsionStep import TorsionStep
from .TowerStep import TowerStep
from .CountStep import CountStep
from .FitStep import FitStep
from .CatalogStep import CatalogStep
from .LawArchive import LawArchive, build_law, law_from_dict, read_law, write_law, LAW_CHOICES
from .RunReport import RunReport
from .emit import emit, parse_report
from .Scenario import Scenario, run_scenario
