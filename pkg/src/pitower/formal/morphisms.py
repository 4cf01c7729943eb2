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

from pitower.errors import NonzeroConstantTerm, SpecMismatch
from pitower.series import Series1

logger = logging.getLogger('morphisms')


def is_homomorphism(law_from, law_to, g):
    """
    True iff g(F(X, Y)) = G(g(X), g(Y)) at the common truncation of both group laws and g.
    """
    if law_from.ring.spec != law_to.ring.spec or g.ring.spec != law_from.ring.spec:
        raise SpecMismatch('Homomorphism check needs both laws and g over the same ring')
    if g.has_constant_term():
        raise NonzeroConstantTerm('A homomorphism of formal groups has zero constant term')
    degree = min(law_from.group_degree, law_to.group_degree, g.D)
    F = law_from.F.truncate(degree)
    G = law_to.F.truncate(degree)
    g = g.truncate(degree)
    return g.compose(F) == G.substitute_separate(g, g)


def is_endomorphism(law, g):
    return is_homomorphism(law, law, g)


def random_series(ring, D, rng):
    """
    A random series with zero constant term and random coefficients in degrees 1..D.
    """
    return Series1.from_terms(ring, D, {i: ring.random_element(rng) for i in range(1, D + 1)})


def check_axioms(law, rng, trials=50, pairs=20):
    """
    Checks the formal module axioms at the law's truncations and returns a mapping from check name to outcome:

    - unit: F(X, 0) = X and F(0, Y) = Y
    - commutative: F(X, Y) = F(Y, X)
    - associative: F(F(a, b), c) = F(a, F(b, c)) for trials random one-variable series a, b, c
    - bracket_additive / bracket_multiplicative: [a + b] = F([a], [b]) and [ab] = [a]([b]) for random pairs,
      compared on the digits both sides know
    """
    ring, F, G = law.ring, law.F, law.group_degree
    identity = Series1.identity(ring, G)
    results = {
        'unit': F.restrict_x() == identity and F.swap().restrict_x() == identity,
        'commutative': F.is_symmetric(),
    }

    associative = True
    for _ in range(trials):
        a, b, c = (random_series(ring, G, rng) for _ in range(3))
        if F.substitute(F.substitute(a, b), c) != F.substitute(a, F.substitute(b, c)):
            associative = False
            break
    results['associative'] = associative

    additive, multiplicative = True, True
    for _ in range(pairs):
        a, b = ring.random_element(rng), ring.random_element(rng)
        ba, bb = law.bracket(a), law.bracket(b)
        if not F.substitute(ba.truncate(G), bb.truncate(G)).agrees_with(law.bracket(a + b).truncate(G)):
            additive = False
        if not ba.compose(bb).agrees_with(law.bracket(a * b)):
            multiplicative = False
        if not (additive or multiplicative):
            break
    results['bracket_additive'] = additive
    results['bracket_multiplicative'] = multiplicative

    logger.debug(f'Axiom checks for {law}: {results}')
    return results
