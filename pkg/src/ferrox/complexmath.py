"""Complex gamma-family functions, principal powers, and the two square-root
conventions used by the Legendre/Ferrers machinery.

Everything here is a pure function of scalars.  The principal branch
(argument in (-pi, pi]) is used throughout; ``ln_gamma`` is the analytic
continuation from the positive real axis, continuous on the plane cut along
(-inf, 0].
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum

from .errors import BranchCutError, DomainError, PoleError

__all__ = [
    "BranchedRoot",
    "RootVariant",
    "gamma",
    "gamma_quotient",
    "is_nonpos_int",
    "ln_gamma",
    "near_int",
    "pochhammer",
    "principal_pow",
    "rgamma",
    "root_y",
    "z2m1_pow",
]

# Rational-approximation weights for the shifted gamma sum, g = 607/128.
# Accurate to ~1e-15 relative for Re z >= 0.5 in double precision.
_LANCZOS_G = 607.0 / 128.0
_LANCZOS_C = (
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
)

_LN_SQRT_TWO_PI = 0.5 * math.log(2.0 * math.pi)
_LN_PI = math.log(math.pi)

#: Default tolerance for "is effectively an integer" predicates.  Prefactors
#: like 1/sin(pi*mu) lose all precision closer to a pole than this.
NEAR_INT_TOL = 1e-9


def near_int(z: complex, tol: float = NEAR_INT_TOL) -> bool:
    """True when ``z`` lies within ``tol`` of a (real) integer."""
    z = complex(z)
    return abs(z.imag) <= tol and abs(z.real - round(z.real)) <= tol


def is_nonpos_int(z: complex, tol: float = NEAR_INT_TOL) -> bool:
    """True when ``z`` lies within ``tol`` of 0, -1, -2, ..."""
    return near_int(z, tol) and round(complex(z).real) <= 0


def _exact_nonpos_int(z: complex) -> bool:
    z = complex(z)
    return z.imag == 0.0 and z.real == round(z.real) and z.real <= 0.0


class RootVariant(Enum):
    """The two branches of sqrt(x^2 - 1) used on either side of [-1, 1].

    ``Y1 = i*sqrt(1 - x^2)`` is analytic on the plane cut outside [-1, 1];
    ``Y2 = x*sqrt(1 - x^-2)`` is analytic on the plane cut along [-1, 1].
    They agree for Im x > 0 and differ by a sign for Im x < 0.
    """

    Y1 = "Y1"
    Y2 = "Y2"


def _lanczos_sum(z: complex) -> complex:
    s = _LANCZOS_C[0]
    for k in range(1, len(_LANCZOS_C)):
        s += _LANCZOS_C[k] / (z + (k - 1))
    return s


def _log_sin_pi_upper(z: complex) -> complex:
    # log(sin(pi z)) unwound so the reflection formula stays on the principal
    # branch of ln_gamma; valid for Im z >= 0.
    return (
        math.log(0.5)
        + 0.5j * math.pi
        - 1j * math.pi * z
        + cmath.log(1.0 - cmath.exp(2j * math.pi * z))
    )


def ln_gamma(z: complex) -> complex:
    """Principal branch of log Gamma, continuous on C cut along (-inf, 0].

    Raises PoleError at the poles 0, -1, -2, ...  On the rest of the negative
    real axis the limit from the lower half-plane is returned, matching the
    usual software convention.
    """
    z = complex(z)
    if _exact_nonpos_int(z) or (near_int(z, 1e-300) and z.real <= 0):
        raise PoleError(f"ln_gamma pole at z = {z}")
    if z.imag < 0.0:
        return ln_gamma(z.conjugate()).conjugate()
    if z.real >= 0.5:
        t = z + (_LANCZOS_G - 0.5)
        return _LN_SQRT_TWO_PI + (z - 0.5) * cmath.log(t) - t + cmath.log(_lanczos_sum(z))
    return _LN_PI - _log_sin_pi_upper(z) - ln_gamma(1.0 - z)


def gamma(z: complex) -> complex:
    """Gamma function; raises PoleError on the nonpositive integers."""
    return cmath.exp(ln_gamma(z))


def rgamma(z: complex) -> complex:
    """Entire reciprocal gamma, exactly 0 at 0, -1, -2, ..."""
    z = complex(z)
    if _exact_nonpos_int(z):
        return 0.0 + 0.0j
    if is_nonpos_int(z, 1e-8):
        # Near a pole of gamma the direct exponential cancels badly; the
        # reflection product stays well conditioned.
        return cmath.sin(math.pi * z) * cmath.exp(ln_gamma(1.0 - z)) / math.pi
    return cmath.exp(-ln_gamma(z))


def gamma_quotient(numerators=(), denominators=()) -> complex:
    """prod Gamma(numerators) / prod Gamma(denominators), overflow-safe.

    A gamma pole in a denominator sends the quotient to exactly 0.  A pole in
    a numerator raises PoleError; callers are expected to have excluded those
    parameter sets already.
    """
    zeros = 0
    acc = 0.0 + 0.0j
    for d in denominators:
        d = complex(d)
        if is_nonpos_int(d, 1e-12):
            zeros += 1
        else:
            acc -= ln_gamma(d)
    if zeros:
        return 0.0 + 0.0j
    for n in numerators:
        acc += ln_gamma(complex(n))
    return cmath.exp(acc)


def pochhammer(a: complex, n: int) -> complex:
    """Rising factorial a (a+1) ... (a+n-1); (a)_0 = 1."""
    if n < 0:
        raise ValueError("pochhammer order must be nonnegative")
    out = 1.0 + 0.0j
    a = complex(a)
    for k in range(n):
        out *= a + k
    return out


def principal_pow(base: complex, exponent: complex) -> complex:
    """Principal-branch power exp(exponent * Log base).

    Negative real bases are allowed only for integer exponents (the real
    power is returned); otherwise they sit on the log branch cut and raise
    BranchCutError.
    """
    base = complex(base)
    exponent = complex(exponent)
    if exponent == 0:
        return 1.0 + 0.0j
    if base == 0:
        if exponent.real > 0 and exponent.imag == 0:
            return 0.0 + 0.0j
        raise DomainError(f"0 cannot be raised to the power {exponent}")
    if base.imag == 0.0 and base.real < 0.0:
        if exponent.imag == 0.0 and exponent.real == round(exponent.real):
            n = int(exponent.real)
            if abs(n) <= 4096:
                return complex(base) ** n
            return cmath.exp(n * cmath.log(base))
        raise BranchCutError(
            f"non-integer power {exponent} of negative real base {base}"
        )
    return cmath.exp(exponent * cmath.log(base))


def z2m1_pow(z: complex, alpha: complex) -> complex:
    """(z^2 - 1)^alpha read as (z+1)^alpha (z-1)^alpha, analytic off (-inf, 1]."""
    z = complex(z)
    if z.imag == 0.0 and z.real <= 1.0:
        raise DomainError(f"(z^2-1)^alpha requires z off (-inf, 1]; got {z}")
    return principal_pow(z + 1.0, alpha) * principal_pow(z - 1.0, alpha)


@dataclass(frozen=True)
class BranchedRoot:
    """A square root of x^2 - 1 tagged with the branch it came from."""

    variant: RootVariant
    value: complex

    @classmethod
    def at(cls, variant: RootVariant, x: complex) -> "BranchedRoot":
        return cls(variant, root_y(variant, x))


def root_y(variant: RootVariant, x: complex) -> complex:
    """One of the two square roots of x^2 - 1.

    Y1 = i sqrt(1 - x^2), analytic off the real rays |x| >= 1;
    Y2 = x sqrt(1 - x^-2), analytic off the segment [-1, 1].
    Y1 is even in x, Y2 is odd, and Y1 = sign(Im x) * Y2 off the real axis.
    """
    x = complex(x)
    if variant is RootVariant.Y1:
        if x.imag == 0.0 and abs(x.real) >= 1.0:
            raise DomainError(f"Y1 root undefined on the real rays |x| >= 1; got {x}")
        return 1j * cmath.sqrt(1.0 - x * x)
    if variant is RootVariant.Y2:
        if x.imag == 0.0 and abs(x.real) <= 1.0:
            raise DomainError(f"Y2 root undefined on the segment [-1, 1]; got {x}")
        return x * cmath.sqrt(1.0 - 1.0 / (x * x))
    raise ValueError(f"unknown root variant {variant!r}")
