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
from .MatrixGenSet import MatrixGenSet
from .OrderSpec import OrderSpec
from .CountSeries import CountSeries
from .DimFit import DimFit
from .enumeration import image_order, count_series, image_order_omega, omega_count_series, gl_order, closure
from .fitting import fit_dimension, fit_dimension_over_O, interleaving_check
from .embedding import embed_order, unit_generators, gl_generators, sl_generators, scalar_subgroup_check
from .catalog import CatalogFit, fit_entry, run_catalog, dimension_catalog_check
