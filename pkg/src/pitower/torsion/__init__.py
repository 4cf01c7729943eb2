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
from .NewtonPolygon import NewtonPolygon
from .TorsionProfile import TorsionProfile
from .TowerReport import TowerReport, TowerLevel
from .analysis import iterate_bracket, primitive_quotient, newton_polygon, torsion_profile, full_height_tower, \
    certified_tower, generator_bound_check, min_generators, height_factorisation_check
