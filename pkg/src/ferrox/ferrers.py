"""Associated Legendre functions on the plane cut along (-inf, 1] and the
Ferrers functions (Legendre on the cut) on the plane cut outside [-1, 1],
for complex degree nu and order mu.

The Ferrers function of the second kind is computable through every entry of
the representation table: seven series in the arguments (1 -+ x)/2 and their
Moebius images (group I), six in x^2-type arguments (group II), six in
square-root arguments with the branch i sqrt(1 - x^2) (group III, each with
an upper-sign and a lower-sign form valid on the whole domain), and one
two-sided form in u = x + i sqrt(1 - x^2) and v = 1/u.  ``ferrers_q`` picks
a valid representation automatically, preferring the smallest argument
modulus; ``ferrers_q_rep`` evaluates a chosen one.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable

from .complexmath import (
    NEAR_INT_TOL,
    gamma_quotient,
    near_int,
    principal_pow,
    rgamma,
    z2m1_pow,
)
from .errors import (
    ConvergenceError,
    DomainError,
    FerroxError,
    NoRepresentationError,
    ParameterError,
)
from .hyp2f1 import (
    DEFAULT_TOL,
    CutSide,
    HypParams,
    SeriesResult,
    f21,
    f21_cut,
    f21_regularized,
)
from .regions import DomainId, argument, in_domain, in_region

__all__ = [
    "EvalOutcome",
    "ParamPair",
    "RepresentationId",
    "RepValidity",
    "connection_residuals",
    "ferrers_p",
    "ferrers_q",
    "ferrers_q_halfplane_cut",
    "ferrers_q_rep",
    "ferrers_q_rep_trig",
    "ferrers_q_via_limit",
    "legendre_ode_residual",
    "legendre_p",
    "legendre_q",
    "legendre_q_bold",
    "valid_representations",
]

_SQRT_PI = math.sqrt(math.pi)


@dataclass(frozen=True)
class ParamPair:
    """Degree nu and order mu, with the integer-exclusion predicates the
    representation table needs.  Values within 1e-9 of an excluded integer
    count as excluded: closer than that, prefactors like 1/sin(pi mu) have
    no usable precision."""

    nu: complex
    mu: complex

    def __post_init__(self):
        object.__setattr__(self, "nu", complex(self.nu))
        object.__setattr__(self, "mu", complex(self.mu))

    def mu_is_integer(self) -> bool:
        return near_int(self.mu, NEAR_INT_TOL)

    def two_mu_is_integer(self) -> bool:
        return near_int(2.0 * self.mu, NEAR_INT_TOL)

    def two_nu_is_integer(self) -> bool:
        return near_int(2.0 * self.nu, NEAR_INT_TOL)

    def nu_plus_half_is_integer(self) -> bool:
        return near_int(self.nu + 0.5, NEAR_INT_TOL)

    def nu_plus_mu_is_integer(self) -> bool:
        return near_int(self.nu + self.mu, NEAR_INT_TOL)

    def nu_plus_mu_in_neg_n(self) -> bool:
        s = self.nu + self.mu
        return near_int(s, NEAR_INT_TOL) and round(s.real) <= -1

    def nu_plus_mu_in_nonpos_n(self) -> bool:
        s = self.nu + self.mu
        return near_int(s, NEAR_INT_TOL) and round(s.real) <= 0

    def nu_plus_mu_in_pos_n(self) -> bool:
        s = self.nu + self.mu
        return near_int(s, NEAR_INT_TOL) and round(s.real) >= 1


class RepresentationId(Enum):
    I1 = "I1"
    I2 = "I2"
    I3 = "I3"
    I4 = "I4"
    I5 = "I5"
    I6 = "I6"
    I7 = "I7"
    II1 = "II1"
    II2 = "II2"
    II3 = "II3"
    II4 = "II4"
    II5 = "II5"
    II6 = "II6"
    III1_UPPER = "III1Upper"
    III1_LOWER = "III1Lower"
    III2_UPPER = "III2Upper"
    III2_LOWER = "III2Lower"
    III3_UPPER = "III3Upper"
    III3_LOWER = "III3Lower"
    FOURIER_UV = "FourierUV"


@dataclass(frozen=True)
class EvalOutcome:
    value: complex
    rep: RepresentationId | None
    terms_used: int
    tail_estimate: float


@dataclass(frozen=True)
class RepValidity:
    """Validity of one representation at a point.

    ``ok`` means the identity holds there (domain of x and parameter
    exclusions); ``region_ok`` additionally means the hypergeometric series
    converges at the point's argument, which is what the automatic dispatch
    keys on.  ``preference`` is the largest argument modulus (smaller sorts
    first)."""

    rep: RepresentationId
    ok: bool
    reason: str | None
    region_ok: bool
    preference: float


FEval = Callable[[complex, complex, complex, complex], SeriesResult]


def _default_feval(tol: float) -> FEval:
    def ev(a, b, c, w):
        return f21(HypParams(a, b, c), w, tol)
    return ev


def _combine(parts: list[tuple[complex, SeriesResult]]) -> tuple[complex, int, float]:
    value = sum(c * r.value for c, r in parts)
    terms = sum(r.terms_used for _, r in parts)
    abs_tail = sum(abs(c * r.value) * r.tail_estimate for c, r in parts)
    mag = abs(value)
    return value, terms, (abs_tail / mag if mag else abs_tail)


def _sinpi(z: complex) -> complex:
    return cmath.sin(math.pi * z)


def _cospi(z: complex) -> complex:
    return cmath.cos(math.pi * z)


# ---------------------------------------------------------------------------
# Legendre functions on the cut plane D2 and Ferrers P on D1
# ---------------------------------------------------------------------------

def legendre_p(p: ParamPair, z: complex, tol: float = DEFAULT_TOL) -> EvalOutcome:
    """First-kind associated Legendre function on the plane cut along
    (-inf, 1].  Valid for all nu, mu (the regularized series removes the
    1 - mu pole)."""
    z = complex(z)
    if not in_domain(DomainId.D2, z):
        raise DomainError(f"legendre_p requires z off (-inf, 1]; got {z}")
    nu, mu = p.nu, p.mu
    pref = principal_pow((z + 1.0) / (z - 1.0), 0.5 * mu)
    r = f21_regularized(HypParams(-nu, nu + 1.0, 1.0 - mu), (1.0 - z) / 2.0, tol)
    return EvalOutcome(pref * r.value, None, r.terms_used, r.tail_estimate)


def legendre_q(p: ParamPair, z: complex, tol: float = DEFAULT_TOL) -> EvalOutcome:
    """Second-kind associated Legendre function on the plane cut along
    (-inf, 1]; undefined when nu + mu is a negative integer."""
    z = complex(z)
    if not in_domain(DomainId.D2, z):
        raise DomainError(f"legendre_q requires z off (-inf, 1]; got {z}")
    if p.nu_plus_mu_in_neg_n():
        raise ParameterError(f"legendre_q undefined for nu + mu = {p.nu + p.mu} in -N")
    nu, mu = p.nu, p.mu
    pref = (_SQRT_PI * cmath.exp(1j * math.pi * mu)
            * gamma_quotient((nu + mu + 1.0,), ())
            * z2m1_pow(z, 0.5 * mu)
            / (principal_pow(2.0, nu + 1.0) * principal_pow(z, nu + mu + 1.0)))
    r = f21_regularized(
        HypParams((nu + mu + 2.0) / 2.0, (nu + mu + 1.0) / 2.0, nu + 1.5),
        1.0 / (z * z), tol)
    return EvalOutcome(pref * r.value, None, r.terms_used, r.tail_estimate)


def legendre_q_bold(p: ParamPair, z: complex, tol: float = DEFAULT_TOL) -> EvalOutcome:
    """Normalized second-kind function e^{-i pi mu} Q / Gamma(nu + mu + 1);
    entire in both parameters and even in mu."""
    z = complex(z)
    if not in_domain(DomainId.D2, z):
        raise DomainError(f"legendre_q_bold requires z off (-inf, 1]; got {z}")
    nu, mu = p.nu, p.mu
    pref = (_SQRT_PI * z2m1_pow(z, 0.5 * mu)
            / (principal_pow(2.0, nu + 1.0) * principal_pow(z, nu + mu + 1.0)))
    r = f21_regularized(
        HypParams((nu + mu + 2.0) / 2.0, (nu + mu + 1.0) / 2.0, nu + 1.5),
        1.0 / (z * z), tol)
    return EvalOutcome(pref * r.value, None, r.terms_used, r.tail_estimate)


def ferrers_p(p: ParamPair, x: complex, tol: float = DEFAULT_TOL) -> EvalOutcome:
    """Ferrers function of the first kind on the plane cut outside [-1, 1];
    valid for all nu, mu."""
    x = complex(x)
    if not in_domain(DomainId.D1, x):
        raise DomainError(f"ferrers_p requires x off the real rays |x| >= 1; got {x}")
    nu, mu = p.nu, p.mu
    pref = principal_pow((1.0 + x) / (1.0 - x), 0.5 * mu)
    r = f21_regularized(HypParams(-nu, nu + 1.0, 1.0 - mu), (1.0 - x) / 2.0, tol)
    return EvalOutcome(pref * r.value, None, r.terms_used, r.tail_estimate)


# ---------------------------------------------------------------------------
# The individual second-kind representations
# ---------------------------------------------------------------------------

def _eval_I1(p, x, tol, fe):
    nu, mu = p.nu, p.mu
    w = (1.0 - x) / 2.0
    s = math.pi / (2.0 * _sinpi(mu))
    pw = principal_pow((1.0 + x) / (1.0 - x), 0.5 * mu)
    c1 = s * _cospi(mu) * rgamma(1.0 - mu) * pw
    c2 = -s * gamma_quotient((nu + mu + 1.0,), (mu + 1.0, nu - mu + 1.0)) / pw
    return _combine([(c1, fe(-nu, nu + 1.0, 1.0 - mu, w)),
                     (c2, fe(-nu, nu + 1.0, 1.0 + mu, w))])


def _eval_I2(p, x, tol, fe):
    nu, mu = p.nu, p.mu
    w = (1.0 + x) / 2.0
    pw = principal_pow((1.0 - x) / (1.0 + x), 0.5 * mu)
    c1 = -0.5 * _cospi(nu) * gamma_quotient((mu,), ()) * pw
    c2 = (-0.5 * _cospi(nu + mu)
          * gamma_quotient((-mu, nu + mu + 1.0), (nu - mu + 1.0,)) / pw)
    return _combine([(c1, fe(-nu, nu + 1.0, 1.0 - mu, w)),
                     (c2, fe(-nu, nu + 1.0, 1.0 + mu, w))])


def _eval_I3(p, x, tol, fe):
    nu, mu = p.nu, p.mu
    w = (x - 1.0) / (x + 1.0)
    lead = principal_pow(1.0 + x, nu) / principal_pow(2.0, nu + 1.0)
    pw = principal_pow((1.0 + x) / (1.0 - x), 0.5 * mu)
    c1 = lead * _cospi(mu) * gamma_quotient((mu,), ()) * pw
    c2 = lead * gamma_quotient((-mu, nu + mu + 1.0), (nu - mu + 1.0,)) / pw
    return _combine([(c1, fe(-nu, -nu - mu, 1.0 - mu, w)),
                     (c2, fe(-nu, mu - nu, 1.0 + mu, w))])


def _eval_I4(p, x, tol, fe):
    nu, mu = p.nu, p.mu
    w = (x + 1.0) / (x - 1.0)
    lead = -principal_pow(2.0, nu) / principal_pow(1.0 - x, nu + 1.0)
    pw = principal_pow((1.0 + x) / (1.0 - x), 0.5 * mu)
    c1 = lead * gamma_quotient((mu,), ()) * _cospi(nu) / pw
    c2 = lead * _cospi(nu + mu) * gamma_quotient((-mu, nu + mu + 1.0), (nu - mu + 1.0,)) * pw
    return _combine([(c1, fe(nu + 1.0, nu - mu + 1.0, 1.0 - mu, w)),
                     (c2, fe(nu + 1.0, nu + mu + 1.0, 1.0 + mu, w))])


def _halfplane_mix(p, sgn):
    # cos(pi mu) -+ i sin(pi(mu - nu)) / (2 cos(pi nu)), sign tied to the
    # half-plane of x.
    return _cospi(p.mu) - sgn * 1j * _sinpi(p.mu - p.nu) / (2.0 * _cospi(p.nu))


def _eval_I5(p, x, tol, fe, sgn):
    nu, mu = p.nu, p.mu
    w = 2.0 / (1.0 + x)
    c1 = (principal_pow(2.0, nu) * _halfplane_mix(p, sgn)
          * gamma_quotient((nu + 1.0, nu + mu + 1.0), (2.0 * nu + 2.0,))
          * principal_pow(1.0 + x, 0.5 * mu - nu - 1.0)
          * principal_pow(1.0 - x, -0.5 * mu))
    c2 = (sgn * 1j * math.pi * principal_pow(2.0, -nu - 2.0) / _cospi(nu)
          * gamma_quotient((-nu,), (-2.0 * nu, nu - mu + 1.0))
          * principal_pow(1.0 + x, nu + 0.5 * mu)
          * principal_pow(1.0 - x, -0.5 * mu))
    return _combine([(c1, fe(nu - mu + 1.0, nu + 1.0, 2.0 * nu + 2.0, w)),
                     (c2, fe(-nu, -nu - mu, -2.0 * nu, w))])


def _eval_I6(p, x, tol, fe, sgn):
    nu, mu = p.nu, p.mu
    w = 2.0 / (1.0 - x)
    c1 = (principal_pow(2.0, nu) * cmath.exp(-sgn * 1j * math.pi * (nu + 1.0))
          * _halfplane_mix(p, sgn)
          * gamma_quotient((nu + 1.0, nu + mu + 1.0), (2.0 * nu + 2.0,))
          * principal_pow(1.0 + x, 0.5 * mu)
          * principal_pow(1.0 - x, -nu - 0.5 * mu - 1.0))
    c2 = (sgn * 1j * math.pi * principal_pow(2.0, -nu - 2.0)
          * cmath.exp(sgn * 1j * math.pi * nu) / _cospi(nu)
          * gamma_quotient((-nu,), (-2.0 * nu, nu - mu + 1.0))
          * principal_pow(1.0 + x, 0.5 * mu)
          * principal_pow(1.0 - x, nu - 0.5 * mu))
    return _combine([(c1, fe(nu + mu + 1.0, nu + 1.0, 2.0 * nu + 2.0, w)),
                     (c2, fe(-nu, mu - nu, -2.0 * nu, w))])


def _eval_I7(p, x, tol, fe_unused):
    # Both terms share the parameter set; the regularized series removes the
    # Gamma(1 - mu) pole, so integer mu is allowed here.
    nu, mu = p.nu, p.mu
    pw = principal_pow((1.0 + x) / (1.0 - x), 0.5 * mu)
    s = _sinpi(nu + mu)
    c1 = 0.5 * math.pi * _cospi(nu + mu) / s * pw
    c2 = -0.5 * math.pi / s / pw
    r1 = f21_regularized(HypParams(-nu, nu + 1.0, 1.0 - mu), (1.0 - x) / 2.0, tol)
    r2 = f21_regularized(HypParams(-nu, nu + 1.0, 1.0 - mu), (1.0 + x) / 2.0, tol)
    return _combine([(c1, r1), (c2, r2)])


def _eval_II1(p, x, tol, fe):
    nu, mu = p.nu, p.mu
    w = 1.0 - x * x
    pw = principal_pow(1.0 - x * x, 0.5 * mu)
    c1 = principal_pow(2.0, mu - 1.0) * gamma_quotient((mu,), ()) * _cospi(mu) / pw
    c2 = (gamma_quotient((-mu, nu + mu + 1.0), (nu - mu + 1.0,))
          * pw / principal_pow(2.0, 1.0 + mu))
    return _combine([(c1, fe((nu - mu + 1.0) / 2.0, (-nu - mu) / 2.0, 1.0 - mu, w)),
                     (c2, fe((nu + mu + 1.0) / 2.0, (mu - nu) / 2.0, 1.0 + mu, w))])


def _eval_II2(p, x, tol, fe, sgn):
    nu, mu = p.nu, p.mu
    w = 1.0 / (1.0 - x * x)
    c1 = (_SQRT_PI * principal_pow(2.0, -nu - 1.0)
          * cmath.exp(sgn * 0.5j * math.pi * (-nu + mu - 1.0))
          * _halfplane_mix(p, sgn)
          * gamma_quotient((nu + mu + 1.0,), (nu + 1.5,))
          * principal_pow(1.0 - x * x, -0.5 * nu - 0.5))
    c2 = (math.pi ** 1.5 * principal_pow(2.0, nu - 1.0)
          * cmath.exp(sgn * 0.5j * math.pi * (nu + mu + 1.0)) / _cospi(nu)
          * gamma_quotient((), (nu - mu + 1.0, 0.5 - nu))
          * principal_pow(1.0 - x * x, 0.5 * nu))
    return _combine([(c1, fe((nu - mu + 1.0) / 2.0, (nu + mu + 1.0) / 2.0, nu + 1.5, w)),
                     (c2, fe((-nu - mu) / 2.0, (mu - nu) / 2.0, 0.5 - nu, w))])


def _eval_II3(p, x, tol, fe):
    nu, mu = p.nu, p.mu
    w = x * x
    lead = _SQRT_PI * principal_pow(2.0, mu - 1.0) / principal_pow(1.0 - x * x, 0.5 * mu)
    c1 = (-lead * _sinpi((nu + mu) / 2.0)
          * gamma_quotient(((nu + mu + 1.0) / 2.0,), ((nu - mu + 2.0) / 2.0,)))
    c2 = (lead * 2.0 * _cospi((nu + mu) / 2.0) * x
          * gamma_quotient(((nu + mu + 2.0) / 2.0,), ((nu - mu + 1.0) / 2.0,)))
    return _combine([(c1, fe(-(nu + mu) / 2.0, (nu - mu + 1.0) / 2.0, 0.5, w)),
                     (c2, fe((-nu - mu + 1.0) / 2.0, (nu - mu + 2.0) / 2.0, 1.5, w))])


def _eval_II4(p, x, tol, fe, sgn):
    nu, mu = p.nu, p.mu
    w = 1.0 / (x * x)
    pw = principal_pow(1.0 - x * x, 0.5 * mu)
    c1 = (_SQRT_PI * principal_pow(2.0, -nu - 1.0)
          * cmath.exp(sgn * 1j * math.pi * mu) * _halfplane_mix(p, sgn)
          * gamma_quotient((nu + mu + 1.0,), (nu + 1.5,))
          * principal_pow(x, -nu - mu - 1.0) * pw)
    c2 = (math.pi ** 1.5 * principal_pow(2.0, nu - 1.0)
          * cmath.exp(sgn * 1j * math.pi * (0.5 + mu)) / _cospi(nu)
          * gamma_quotient((), (nu - mu + 1.0, 0.5 - nu))
          * principal_pow(x, nu - mu) * pw)
    return _combine([(c1, fe((nu + mu + 1.0) / 2.0, (nu + mu + 2.0) / 2.0, nu + 1.5, w)),
                     (c2, fe((mu - nu) / 2.0, (mu - nu + 1.0) / 2.0, 0.5 - nu, w))])


def _eval_II5(p, x, tol, fe):
    nu, mu = p.nu, p.mu
    w = (x * x - 1.0) / (x * x)
    pw = principal_pow(1.0 - x * x, 0.5 * mu)
    c1 = (principal_pow(2.0, mu - 1.0) * _cospi(mu) * gamma_quotient((mu,), ())
          * principal_pow(x, nu + mu) / pw)
    c2 = (gamma_quotient((nu + mu + 1.0, -mu), (nu - mu + 1.0,))
          / principal_pow(2.0, mu + 1.0) * pw * principal_pow(x, nu - mu))
    return _combine([(c1, fe(-(nu + mu) / 2.0, (-nu - mu + 1.0) / 2.0, 1.0 - mu, w)),
                     (c2, fe((mu - nu) / 2.0, (mu - nu + 1.0) / 2.0, 1.0 + mu, w))])


def _eval_II6(p, x, tol, fe):
    nu, mu = p.nu, p.mu
    w = x * x / (x * x - 1.0)
    lead = _SQRT_PI * principal_pow(2.0, mu)
    c1 = (-lead * gamma_quotient(((nu + mu + 1.0) / 2.0,), ((nu - mu + 2.0) / 2.0,))
          * _sinpi((nu + mu) / 2.0)
          / (2.0 * principal_pow(1.0 - x * x, 0.5 * (nu + 1.0))))
    c2 = (lead * gamma_quotient(((nu + mu + 2.0) / 2.0,), ((nu - mu + 1.0) / 2.0,))
          * _cospi((nu + mu) / 2.0) * x
          * principal_pow(1.0 - x * x, 0.5 * (nu - 1.0)))
    return _combine([(c1, fe((nu - mu + 1.0) / 2.0, (nu + mu + 1.0) / 2.0, 0.5, w)),
                     (c2, fe((mu - nu + 1.0) / 2.0, (-nu - mu + 1.0) / 2.0, 1.5, w))])


def _eval_III1(p, x, tol, fe, sgn):
    nu, mu = p.nu, p.mu
    s = cmath.sqrt(1.0 - x * x)
    y = 1j * s
    w = (-sgn * x + y) / (2.0 * y)
    pre = _SQRT_PI / (2.0 ** 1.5 * principal_pow(1.0 - x * x, 0.25))
    c1 = (pre * cmath.exp(sgn * 0.5j * math.pi * (mu + 0.5))
          * gamma_quotient((nu + 0.5,), (nu - mu + 1.0,))
          * principal_pow(x + sgn * 1j * s, nu + 0.5))
    fac = 1.0 + cmath.exp(sgn * 1j * math.pi * (nu + mu)) * _cospi(mu) / _cospi(nu)
    c2 = (pre * cmath.exp(-sgn * 0.5j * math.pi * (mu + 0.5))
          * gamma_quotient((nu + mu + 1.0,), (nu + 1.5,)) * fac
          * principal_pow(x - sgn * 1j * s, nu + 0.5))
    return _combine([(c1, fe(0.5 + mu, 0.5 - mu, 0.5 - nu, w)),
                     (c2, fe(0.5 + mu, 0.5 - mu, nu + 1.5, w))])


def _eval_III2(p, x, tol, fe, sgn):
    nu, mu = p.nu, p.mu
    s = cmath.sqrt(1.0 - x * x)
    w = (x - sgn * 1j * s) / (x + sgn * 1j * s)
    pre = _SQRT_PI * principal_pow(2.0, mu - 1.0) * principal_pow(1.0 - x * x, 0.5 * mu)
    c1 = (pre * cmath.exp(sgn * 1j * math.pi * (mu + 0.5))
          * gamma_quotient((nu + 0.5,), (nu - mu + 1.0,))
          * principal_pow(x + sgn * 1j * s, nu - mu))
    fac = 1.0 + cmath.exp(sgn * 1j * math.pi * (nu + mu)) * _cospi(mu) / _cospi(nu)
    c2 = (pre * gamma_quotient((nu + mu + 1.0,), (nu + 1.5,)) * fac
          * principal_pow(x - sgn * 1j * s, nu + mu + 1.0))
    return _combine([(c1, fe(0.5 + mu, mu - nu, 0.5 - nu, w)),
                     (c2, fe(0.5 + mu, nu + mu + 1.0, nu + 1.5, w))])


def _eval_III3(p, x, tol, fe, sgn):
    nu, mu = p.nu, p.mu
    s = cmath.sqrt(1.0 - x * x)
    w = 2j * s / (sgn * x + 1j * s)
    pw = principal_pow(1.0 - x * x, 0.5 * mu)
    c1 = (gamma_quotient((-mu, nu + mu + 1.0), (nu - mu + 1.0,))
          / principal_pow(2.0, mu + 1.0) * pw
          * principal_pow(x + sgn * 1j * s, nu - mu))
    c2 = (principal_pow(2.0, mu - 1.0) * gamma_quotient((mu,), ()) * _cospi(mu)
          * principal_pow(x + sgn * 1j * s, nu + mu) / pw)
    return _combine([(c1, fe(0.5 + mu, mu - nu, 1.0 + 2.0 * mu, w)),
                     (c2, fe(0.5 - mu, -nu - mu, 1.0 - 2.0 * mu, w))])


def _eval_fourier_uv(p, x, tol, fe_unused):
    nu, mu = p.nu, p.mu
    s = cmath.sqrt(1.0 - x * x)
    u = x + 1j * s
    v = x - 1j * s
    pre = (_SQRT_PI * principal_pow(2.0, mu - 1.0)
           * principal_pow(1.0 - x * x, 0.5 * mu)
           * gamma_quotient((nu + mu + 1.0,), ()))
    hp = HypParams(mu + 0.5, nu + mu + 1.0, nu + 1.5)
    r1 = f21_regularized(hp, u / v, tol)
    r2 = f21_regularized(hp, v / u, tol)
    c1 = pre * principal_pow(u, nu + mu + 1.0)
    c2 = pre * principal_pow(v, nu + mu + 1.0)
    return _combine([(c1, r1), (c2, r2)])


# ---------------------------------------------------------------------------
# Representation table: domain of x, parameter exclusions, argument indices
# ---------------------------------------------------------------------------

_EXCL_NAMES = {
    "mu_int": ("mu in Z", ParamPair.mu_is_integer),
    "two_mu_int": ("2 mu in Z", ParamPair.two_mu_is_integer),
    "two_nu_int": ("2 nu in Z", ParamPair.two_nu_is_integer),
    "nu_half_int": ("nu + 1/2 in Z", ParamPair.nu_plus_half_is_integer),
    "numu_int": ("nu + mu in Z", ParamPair.nu_plus_mu_is_integer),
    "numu_neg": ("nu + mu in -N", ParamPair.nu_plus_mu_in_neg_n),
    "numu_nonpos": ("nu + mu in -N0", ParamPair.nu_plus_mu_in_nonpos_n),
    "numu_pos": ("nu + mu in N", ParamPair.nu_plus_mu_in_pos_n),
}


@dataclass(frozen=True)
class _RepSpec:
    domain: str                       # "D1" | "D1+" | "half"
    exclusions: tuple[str, ...]
    argument_ids: tuple[int, ...]
    sign_from_halfplane: bool = False


_REP_TABLE: dict[RepresentationId, _RepSpec] = {
    RepresentationId.I1: _RepSpec("D1", ("mu_int", "numu_neg"), (1,)),
    RepresentationId.I2: _RepSpec("D1", ("mu_int", "numu_neg"), (2,)),
    RepresentationId.I3: _RepSpec("D1", ("mu_int", "numu_neg"), (3,)),
    RepresentationId.I4: _RepSpec("D1", ("mu_int", "numu_neg"), (4,)),
    RepresentationId.I5: _RepSpec("half", ("two_nu_int", "numu_nonpos"), (5,), True),
    RepresentationId.I6: _RepSpec("half", ("two_nu_int", "numu_nonpos"), (6,), True),
    RepresentationId.I7: _RepSpec("D1", ("numu_int",), (1, 2)),
    RepresentationId.II1: _RepSpec("D1+", ("mu_int", "numu_neg"), (7,)),
    RepresentationId.II2: _RepSpec("half", ("nu_half_int", "numu_neg"), (8,), True),
    RepresentationId.II3: _RepSpec("D1", ("numu_neg",), (9,)),
    RepresentationId.II4: _RepSpec("half", ("nu_half_int", "numu_neg"), (10,), True),
    RepresentationId.II5: _RepSpec("D1+", ("mu_int", "numu_neg"), (11,)),
    RepresentationId.II6: _RepSpec("D1", ("numu_pos", "numu_neg"), (12,)),
    RepresentationId.III1_UPPER: _RepSpec("D1", ("nu_half_int", "numu_neg"), (13,)),
    RepresentationId.III1_LOWER: _RepSpec("D1", ("nu_half_int", "numu_neg"), (17,)),
    RepresentationId.III2_UPPER: _RepSpec("D1", ("nu_half_int", "numu_neg"), (14,)),
    RepresentationId.III2_LOWER: _RepSpec("D1", ("nu_half_int", "numu_neg"), (18,)),
    RepresentationId.III3_UPPER: _RepSpec("D1+", ("two_mu_int", "numu_neg"), (15,)),
    RepresentationId.III3_LOWER: _RepSpec("D1+", ("two_mu_int", "numu_neg"), (16,)),
    RepresentationId.FOURIER_UV: _RepSpec("D1", ("numu_neg",), (14, 18)),
}

_SIGNED_EVALUATORS = {
    RepresentationId.I5: _eval_I5,
    RepresentationId.I6: _eval_I6,
    RepresentationId.II2: _eval_II2,
    RepresentationId.II4: _eval_II4,
}

_FIXED_SIGN = {
    RepresentationId.III1_UPPER: (_eval_III1, +1),
    RepresentationId.III1_LOWER: (_eval_III1, -1),
    RepresentationId.III2_UPPER: (_eval_III2, +1),
    RepresentationId.III2_LOWER: (_eval_III2, -1),
    RepresentationId.III3_UPPER: (_eval_III3, +1),
    RepresentationId.III3_LOWER: (_eval_III3, -1),
}

_PLAIN_EVALUATORS = {
    RepresentationId.I1: _eval_I1,
    RepresentationId.I2: _eval_I2,
    RepresentationId.I3: _eval_I3,
    RepresentationId.I4: _eval_I4,
    RepresentationId.I7: _eval_I7,
    RepresentationId.II1: _eval_II1,
    RepresentationId.II3: _eval_II3,
    RepresentationId.II5: _eval_II5,
    RepresentationId.II6: _eval_II6,
    RepresentationId.FOURIER_UV: _eval_fourier_uv,
}

_TABLE_ORDER = {rep: i for i, rep in enumerate(_REP_TABLE)}


def _check_params(rep: RepresentationId, p: ParamPair) -> str | None:
    for key in _REP_TABLE[rep].exclusions:
        label, pred = _EXCL_NAMES[key]
        if pred(p):
            return label
    return None


def _check_domain(rep: RepresentationId, x: complex) -> str | None:
    dom = _REP_TABLE[rep].domain
    if dom == "D1":
        return None if in_domain(DomainId.D1, x) else "x not in D1"
    if dom == "D1+":
        return None if in_domain(DomainId.D1_PLUS, x) else "x not in D1 with Re x > 0"
    if complex(x).imag == 0.0:
        return "x on the real axis (half-plane representation)"
    return None


def _route_modulus(w: complex) -> float:
    """Smallest working argument among w, w/(w-1), 1/w."""
    r = abs(w)
    out = min(r, abs(w / (w - 1.0))) if w != 1.0 else r
    if r > 0:
        out = min(out, 1.0 / r)
    return out


def _preference(rep: RepresentationId, x: complex) -> float:
    spec = _REP_TABLE[rep]
    vals = []
    for j in spec.argument_ids:
        w = argument(j, x)
        if rep is RepresentationId.FOURIER_UV:
            vals.append(_route_modulus(w))
        else:
            vals.append(abs(w))
    return max(vals)


def _in_rep_region(rep: RepresentationId, x: complex) -> bool:
    if rep is RepresentationId.FOURIER_UV:
        return all(_route_modulus(argument(j, x)) < 0.9
                   for j in _REP_TABLE[rep].argument_ids)
    return all(in_region(j, x) for j in _REP_TABLE[rep].argument_ids)


def valid_representations(p: ParamPair, x: complex) -> list[RepValidity]:
    """Per-representation validity at (p, x), with the reason for each
    rejection and the argument-modulus preference score."""
    x = complex(x)
    out = []
    for rep in _REP_TABLE:
        reason = _check_params(rep, p) or _check_domain(rep, x)
        if reason is not None:
            out.append(RepValidity(rep, False, reason, False, math.inf))
            continue
        try:
            region = _in_rep_region(rep, x)
            pref = _preference(rep, x)
        except DomainError as exc:
            out.append(RepValidity(rep, False, str(exc), False, math.inf))
            continue
        out.append(RepValidity(rep, True, None, region, pref))
    return out


def ferrers_q_rep(rep: RepresentationId, p: ParamPair, x: complex,
                  tol: float = DEFAULT_TOL) -> EvalOutcome:
    """Ferrers function of the second kind through one chosen representation.

    Raises DomainError when x lies outside the representation's domain and
    ParameterError naming the violated predicate for excluded parameters.
    The convergence region is not enforced here: arguments beyond the unit
    disk are continued internally.
    """
    x = complex(x)
    bad = _check_params(rep, p)
    if bad is not None:
        raise ParameterError(f"{bad} excluded by representation {rep.value}")
    bad = _check_domain(rep, x)
    if bad is not None:
        raise DomainError(f"{bad} (representation {rep.value})")
    fe = _default_feval(tol)
    if rep in _PLAIN_EVALUATORS:
        value, terms, tail = _PLAIN_EVALUATORS[rep](p, x, tol, fe)
    elif rep in _FIXED_SIGN:
        fn, sgn = _FIXED_SIGN[rep]
        value, terms, tail = fn(p, x, tol, fe, sgn)
    else:
        sgn = +1 if x.imag > 0 else -1
        value, terms, tail = _SIGNED_EVALUATORS[rep](p, x, tol, fe, sgn)
    return EvalOutcome(value, rep, terms, tail)


def ferrers_q(p: ParamPair, x: complex, tol: float = DEFAULT_TOL) -> EvalOutcome:
    """Ferrers function of the second kind, representation chosen
    automatically: among the representations whose parameter predicates pass
    and whose series converges at x, the one with the smallest argument
    modulus wins (ties broken by table order)."""
    x = complex(x)
    if not in_domain(DomainId.D1, x):
        raise DomainError(f"x not in D1: {x}")
    if p.nu_plus_mu_in_neg_n():
        raise ParameterError(
            f"Ferrers Q undefined for nu + mu = {p.nu + p.mu} in -N")
    validity = valid_representations(p, x)
    reasons = {v.rep.value: v.reason for v in validity if not v.ok}
    for v in validity:
        if v.ok and not v.region_ok:
            reasons[v.rep.value] = "series argument has modulus >= 1 at x"
    ranked = sorted((v for v in validity if v.ok and v.region_ok),
                    key=lambda v: (v.preference, _TABLE_ORDER[v.rep]))
    for cand in ranked:
        try:
            return ferrers_q_rep(cand.rep, p, x, tol)
        except (ConvergenceError, FerroxError) as exc:
            reasons[cand.rep.value] = str(exc)
    raise NoRepresentationError(
        f"no valid representation at nu={p.nu}, mu={p.mu}, x={x}", reasons)


def ferrers_q_via_limit(p: ParamPair, x: float, eps: float = 1e-7,
                        tol: float = DEFAULT_TOL) -> EvalOutcome:
    """Independent route to the second-kind Ferrers function on (-1, 1): the
    defining two-sided limit of the second-kind Legendre function,
    (e^{-i pi mu/2} [e^{-i pi mu} Q(x + i eps)]
     + e^{+i pi mu/2} [e^{-i pi mu} Q(x - i eps)]) / 2."""
    if not (isinstance(x, (int, float)) and -1.0 < float(x) < 1.0):
        raise DomainError(f"limit definition requires real x in (-1, 1); got {x}")
    x = float(x)
    mu = p.mu
    above = legendre_q(p, complex(x, eps), tol)
    below = legendre_q(p, complex(x, -eps), tol)
    value = 0.5 * (cmath.exp(-1.5j * math.pi * mu) * above.value
                   + cmath.exp(-0.5j * math.pi * mu) * below.value)
    return EvalOutcome(value, None, above.terms_used + below.terms_used,
                       max(above.tail_estimate, below.tail_estimate))


def ferrers_q_halfplane_cut(rep: RepresentationId, p: ParamPair, x: float,
                            approach: int = +1,
                            tol: float = DEFAULT_TOL) -> EvalOutcome:
    """Boundary values of the half-plane representations I5/I6/II2/II4 at
    real x in (-1, 1).

    Their hypergeometric arguments land on [1, inf) there, so each series
    factor is replaced by its one-sided limit; ``approach`` selects which
    half-plane the formula is continued from (+1 from above, -1 from below).
    The result must agree with every on-axis representation.
    """
    if rep not in _SIGNED_EVALUATORS:
        raise ValueError(f"{rep.value} is not a half-plane representation")
    if not (isinstance(x, (int, float)) and -1.0 < float(x) < 1.0):
        raise DomainError(f"cut evaluation requires real x in (-1, 1); got {x}")
    if approach not in (+1, -1):
        raise ValueError("approach must be +1 or -1")
    bad = _check_params(rep, p)
    if bad is not None:
        raise ParameterError(f"{bad} excluded by representation {rep.value}")
    x = float(x)
    j = _REP_TABLE[rep].argument_ids[0]
    w_on_axis = argument(j, x)
    if not (w_on_axis.imag == 0.0 and w_on_axis.real > 1.0):
        raise DomainError(
            f"argument w_{j}({x}) = {w_on_axis} is not on the cut (1, inf)")
    w_probe = argument(j, complex(x, approach * 1e-8))
    side = CutSide.ABOVE if w_probe.imag > 0 else CutSide.BELOW

    def fe(a, b, c, w):
        return f21_cut(HypParams(a, b, c), complex(w).real, side, tol)

    # A subnormal imaginary part steers every prefactor power onto the branch
    # continued from the requested half-plane without perturbing its value.
    x_eval = complex(x, approach * 5e-324)
    value, terms, tail = _SIGNED_EVALUATORS[rep](p, x_eval, tol, fe, approach)
    return EvalOutcome(value, rep, terms, tail)


# ---------------------------------------------------------------------------
# Trigonometric forms of the square-root representations (x = cos theta)
# ---------------------------------------------------------------------------

def ferrers_q_rep_trig(rep: RepresentationId, p: ParamPair, theta: float,
                       tol: float = DEFAULT_TOL) -> EvalOutcome:
    """The theta-forms of the square-root-family representations, with
    x = cos(theta) and theta in (0, pi); equal to the x-forms there."""
    if not 0.0 < theta < math.pi:
        raise DomainError(f"theta must lie in (0, pi); got {theta}")
    nu, mu = p.nu, p.mu
    fe = _default_feval(tol)
    st, ct = math.sin(theta), math.cos(theta)
    if rep in (RepresentationId.III1_UPPER, RepresentationId.III1_LOWER):
        sgn = +1 if rep is RepresentationId.III1_UPPER else -1
        w = 0.5 + sgn * 0.5j * (ct / st)
        pre = _SQRT_PI / (2.0 ** 1.5 * math.sqrt(st))
        c1 = (pre * cmath.exp(sgn * 0.5j * math.pi * (mu + 0.5))
              * gamma_quotient((nu + 0.5,), (nu - mu + 1.0,))
              * cmath.exp(sgn * 1j * (nu + 0.5) * theta))
        fac = 1.0 + cmath.exp(sgn * 1j * math.pi * (nu + mu)) * _cospi(mu) / _cospi(nu)
        c2 = (pre * cmath.exp(-sgn * 0.5j * math.pi * (mu + 0.5))
              * gamma_quotient((nu + mu + 1.0,), (nu + 1.5,)) * fac
              * cmath.exp(-sgn * 1j * (nu + 0.5) * theta))
        value, terms, tail = _combine([
            (c1, fe(0.5 + mu, 0.5 - mu, 0.5 - nu, w)),
            (c2, fe(0.5 + mu, 0.5 - mu, nu + 1.5, w))])
        return EvalOutcome(value, rep, terms, tail)
    if rep in (RepresentationId.III2_UPPER, RepresentationId.III2_LOWER):
        sgn = +1 if rep is RepresentationId.III2_UPPER else -1
        w = cmath.exp(-sgn * 2j * theta)
        pre = _SQRT_PI * principal_pow(2.0, mu - 1.0) * principal_pow(st, mu)
        c1 = (pre * cmath.exp(sgn * 1j * math.pi * (mu + 0.5))
              * gamma_quotient((nu + 0.5,), (nu - mu + 1.0,))
              * cmath.exp(sgn * 1j * (nu - mu) * theta))
        fac = 1.0 + cmath.exp(sgn * 1j * math.pi * (nu + mu)) * _cospi(mu) / _cospi(nu)
        c2 = (pre * gamma_quotient((nu + mu + 1.0,), (nu + 1.5,)) * fac
              * cmath.exp(-sgn * 1j * (nu + mu + 1.0) * theta))
        value, terms, tail = _combine([
            (c1, fe(0.5 + mu, mu - nu, 0.5 - nu, w)),
            (c2, fe(0.5 + mu, nu + mu + 1.0, nu + 1.5, w))])
        return EvalOutcome(value, rep, terms, tail)
    if rep in (RepresentationId.III3_UPPER, RepresentationId.III3_LOWER):
        sgn = +1 if rep is RepresentationId.III3_UPPER else -1
        w = 1.0 - cmath.exp(-sgn * 2j * theta)
        c1 = (gamma_quotient((-mu, nu + mu + 1.0), (nu - mu + 1.0,))
              / principal_pow(2.0, mu + 1.0) * principal_pow(st, mu)
              * cmath.exp(sgn * 1j * (nu - mu) * theta))
        c2 = (principal_pow(2.0, mu - 1.0) * gamma_quotient((mu,), ()) * _cospi(mu)
              * cmath.exp(sgn * 1j * (nu + mu) * theta) / principal_pow(st, mu))
        value, terms, tail = _combine([
            (c1, fe(0.5 + mu, mu - nu, 1.0 + 2.0 * mu, w)),
            (c2, fe(0.5 - mu, -nu - mu, 1.0 - 2.0 * mu, w))])
        return EvalOutcome(value, rep, terms, tail)
    raise ValueError(f"{rep.value} has no trigonometric form")


# ---------------------------------------------------------------------------
# Connection relations between the second-kind Ferrers function and the
# cut-plane Legendre functions
# ---------------------------------------------------------------------------

def connection_residuals(p: ParamPair, x: complex,
                         tol: float = DEFAULT_TOL) -> list[tuple[str, float]]:
    """Normalized residuals |LHS - RHS| / (|LHS| + |RHS| + 1) of the
    connection relations linking the second-kind Ferrers function to the
    cut-plane Legendre functions.  Relations whose preconditions fail at
    (p, x) are omitted."""
    x = complex(x)
    if not in_domain(DomainId.D1, x):
        raise DomainError(f"x not in D1: {x}")
    nu, mu = p.nu, p.mu
    out: list[tuple[str, float]] = []
    lhs = ferrers_q(p, x, tol).value

    def resid(rhs: complex) -> float:
        return abs(lhs - rhs) / (abs(lhs) + abs(rhs) + 1.0)

    # On-axis relation: (2/pi) sin(pi mu) Q = cos(pi mu) P(mu) - ratio P(-mu)
    if not p.mu_is_integer():
        pm = ferrers_p(p, x, tol).value
        pmm = ferrers_p(ParamPair(nu, -mu), x, tol).value
        rhs = (math.pi / (2.0 * _sinpi(mu))
               * (_cospi(mu) * pm
                  - gamma_quotient((nu + mu + 1.0,), (nu - mu + 1.0,)) * pmm))
        out.append(("ferrers_first_kind_pair", resid(rhs)))

    if x.imag == 0.0:
        return out
    upper = x.imag > 0.0
    tag = "upper" if upper else "lower"
    q_val = legendre_q(p, x, tol).value if not p.nu_plus_mu_in_neg_n() else None
    p_val = legendre_p(p, x, tol).value

    if q_val is not None:
        if upper:
            rhs = (cmath.exp(-1.5j * math.pi * mu) * q_val
                   + 0.5j * math.pi * cmath.exp(0.5j * math.pi * mu) * p_val)
        else:
            rhs = (cmath.exp(-0.5j * math.pi * mu) * q_val
                   - 0.5j * math.pi * cmath.exp(-0.5j * math.pi * mu) * p_val)
        out.append((f"legendre_qp_{tag}", resid(rhs)))

    if not p.mu_is_integer():
        pmm_val = legendre_p(ParamPair(nu, -mu), x, tol).value
        phase = cmath.exp(0.5j * math.pi * mu) if upper else cmath.exp(-0.5j * math.pi * mu)
        rhs = (0.5 * math.pi * _cospi(mu) / _sinpi(mu) * phase * p_val
               - math.pi / (2.0 * _sinpi(mu)) / phase
               * gamma_quotient((nu + mu + 1.0,), (nu - mu + 1.0,)) * pmm_val)
        out.append((f"legendre_pp_{tag}", resid(rhs)))

    if (q_val is not None and not p.nu_plus_half_is_integer()
            and not near_int(mu - nu, NEAR_INT_TOL)):
        refl = ParamPair(-nu - 1.0, mu)
        if not refl.nu_plus_mu_in_neg_n():
            q2_val = legendre_q(refl, x, tol).value
            t = _sinpi(mu - nu) / (2.0 * _cospi(nu))
            if upper:
                rhs = (cmath.exp(-0.5j * math.pi * mu) * ((_cospi(mu) - 1j * t) * q_val
                       + 1j * t * q2_val))
            else:
                rhs = (cmath.exp(-1.5j * math.pi * mu) * ((_cospi(mu) + 1j * t) * q_val
                       - 1j * t * q2_val))
            out.append((f"legendre_qq_{tag}", resid(rhs)))
    return out


# ---------------------------------------------------------------------------
# Differential-equation residual
# ---------------------------------------------------------------------------

def legendre_ode_residual(f: Callable[[complex], complex], nu: complex,
                          mu: complex, x: complex, h: float = 1e-4) -> float:
    """Residual of (1-x^2) y'' - 2x y' + (nu(nu+1) - mu^2/(1-x^2)) y at x,
    with derivatives from five-point central differences of step h,
    normalized by the sum of the term magnitudes."""
    x = complex(x)
    ys = [f(x + k * h) for k in (-2, -1, 0, 1, 2)]
    d1 = (ys[0] - 8.0 * ys[1] + 8.0 * ys[3] - ys[4]) / (12.0 * h)
    d2 = (-ys[0] + 16.0 * ys[1] - 30.0 * ys[2] + 16.0 * ys[3] - ys[4]) / (12.0 * h * h)
    t1 = (1.0 - x * x) * d2
    t2 = -2.0 * x * d1
    t3 = (nu * (nu + 1.0) - mu * mu / (1.0 - x * x)) * ys[2]
    scale = abs(t1) + abs(t2) + abs(t3)
    return abs(t1 + t2 + t3) / scale if scale else 0.0
