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


class PitowerError(Exception):
    """
    Base class for all errors raised by pitower. Concrete errors also derive from ValueError (bad input) or
    RuntimeError (a consistency check failed), so callers may catch either family.
    """
    pass


class NonPrime(PitowerError, ValueError):
    pass


class ReducibleUnramPoly(PitowerError, ValueError):
    pass


class NotEisenstein(PitowerError, ValueError):
    pass


class SpecMismatch(PitowerError, ValueError):
    pass


class NonUnit(PitowerError, ValueError):
    pass


class ShapeMismatch(PitowerError, ValueError):
    pass


class NonzeroConstantTerm(PitowerError, ValueError):
    pass


class NonUnitLinearTerm(PitowerError, ValueError):
    pass


class NotLTSeries(PitowerError, ValueError):
    pass


class NotPPower(PitowerError, ValueError):
    pass


class NoUnitCoefficient(PitowerError, ValueError):
    pass


class TruncationTooSmall(PitowerError, ValueError):
    pass


class NotFullHeight(PitowerError, ValueError):
    pass


class PrecisionTooLow(PitowerError, ValueError):
    pass


class NonMultiplicativeSeries(PitowerError, ValueError):
    pass


class ParseError(PitowerError, ValueError):
    pass


class ValidationError(PitowerError, ValueError):
    pass


class PrecisionExhausted(PitowerError, RuntimeError):
    pass


class Mismatch(PitowerError, RuntimeError):
    pass


class RelationViolated(PitowerError, RuntimeError):
    pass


class CatalogViolation(PitowerError, RuntimeError):
    pass


class BudgetExceeded(PitowerError, RuntimeError):
    pass
