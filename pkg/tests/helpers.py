"""Shared samplers for the randomized tests."""

import random
from fractions import Fraction

from qtriangular.coeff import GaussianRational, I, ScalarQ, qpow
from qtriangular.autos import Sextuple

UNIT_POOL = [
    ScalarQ.constant(1),
    ScalarQ.constant(-1),
    ScalarQ.constant(2),
    ScalarQ.constant(Fraction(1, 2)),
    ScalarQ.constant(3),
    ScalarQ.constant(I),
    qpow(1),
    qpow(-1, 2),
    qpow(2, Fraction(-2, 3)),
    qpow(-2, GaussianRational(1, 1)),
]


def random_unit(rng: random.Random) -> ScalarQ:
    return rng.choice(UNIT_POOL)


def random_sextuple(rng: random.Random, span: int = 3) -> Sextuple:
    return Sextuple(
        random_unit(rng),
        random_unit(rng),
        random_unit(rng),
        rng.randint(-span, span),
        rng.randint(-span, span),
        rng.randint(-span, span),
    )


def random_hopf_sextuple(rng: random.Random, span: int = 3) -> Sextuple:
    one = ScalarQ.constant(1)
    j = rng.randint(-span, span)
    return Sextuple(random_unit(rng), one, one, j, j, -j)
