"""
Named constants of the eigenvalue densities.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import log, pi, sqrt

SQRT2 = sqrt(2.0)

# Integral of V over [-2, 2]
V_INTEGRAL = 4.0 / 9.0 * (7.0 * SQRT2 + 4.0 + 3.0 * log(SQRT2 + 1.0))

# Two real eigenvalues with probability 49/72
REAL_PAIR_PROBABILITY = 49.0 / 72.0
W_INTEGRAL = 2.0 * REAL_PAIR_PROBABILITY

V_AT_ONE = 1.0 + log(2.0)
W_AT_ONE = 15.0 / 32.0
W_AT_ZERO = 5.0 / 9.0

SIX_OVER_PI_SQUARED = 6.0 / pi**2

# C = (7 sqrt2 + 4 + 3 log(sqrt2 + 1)) / (3 pi^2): |M2^Z(k)| ~ 16 C k^3 log k
INTEGER_SPECTRUM_CONSTANT = (7.0 * SQRT2 + 4.0 + 3.0 * log(SQRT2 + 1.0)) / (3.0 * pi**2)

# Points where V and W switch branches
BREAKPOINTS = (-SQRT2, -1.0, 0.0, 1.0, SQRT2)


@dataclass(frozen=True)
class ConstantsBundle:
    """Constants reported by `eigencount constants`."""

    C: float
    six_over_pi_squared: float
    real_pair_probability: float
    w_integral: float
    w_at_one: float
    v_at_one: float
    v_integral: float

    def as_dict(self) -> dict:
        return {
            "C": self.C,
            "6/pi^2": self.six_over_pi_squared,
            "real_pair_probability": self.real_pair_probability,
            "w_integral": self.w_integral,
            "W(1)": self.w_at_one,
            "V(1)": self.v_at_one,
            "v_integral": self.v_integral,
        }


@lru_cache(maxsize=1)
def constants_bundle() -> ConstantsBundle:
    return ConstantsBundle(
        C=INTEGER_SPECTRUM_CONSTANT,
        six_over_pi_squared=SIX_OVER_PI_SQUARED,
        real_pair_probability=REAL_PAIR_PROBABILITY,
        w_integral=W_INTEGRAL,
        w_at_one=W_AT_ONE,
        v_at_one=V_AT_ONE,
        v_integral=V_INTEGRAL,
    )
