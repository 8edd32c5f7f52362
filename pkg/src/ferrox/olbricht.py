"""Catalogue of the 72 classical hypergeometric-form solutions of the
associated Legendre equation, with numeric verification of what each one
reduces to.

The catalogue is data-driven: every entry is a record holding its prefactor
powers (exponents affine in nu and mu), its hypergeometric parameter triple
(also affine), its argument map, and its domain.  One evaluator interprets
the records.  Entries given classically as x -> -x reflections of earlier
ones are stored that way.  Each entry also carries exactly one identity
record: either a closed-form reduction to a Legendre or Ferrers function, or
equality with another entry (Euler/Pfaff transformations, parity).

Square-root entries come in two branch variants (Y1 and Y2); the variants
with arguments (y+x)/(2y) and (x+y)/(x-y) admit only Y1, since with Y2 those
arguments land on [1, inf) for x > 1.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable

from .complexmath import RootVariant, gamma_quotient, principal_pow, rgamma, root_y
from .errors import DomainError, FerroxError, ParameterError
from .ferrers import (
    DEFAULT_TOL,
    ParamPair,
    ferrers_p,
    legendre_ode_residual,
    legendre_p,
    legendre_q_bold,
)
from .hyp2f1 import HypParams, f21
from .regions import DomainId, argument, in_domain

__all__ = [
    "ALL_IDS",
    "CatalogueEntry",
    "IdentityOutcome",
    "IdentityReport",
    "OlbrichtId",
    "catalogue",
    "catalogue_records",
    "default_samples",
    "entry",
    "eval_olbricht",
    "identity_record",
    "ode_residual",
    "ode_samples",
    "verify_identity",
]

_SQRT_PI = math.sqrt(math.pi)

Affine = tuple[float, float, float]   # value = a0 + a_nu * nu + a_mu * mu


def _aff(t: Affine, nu: complex, mu: complex) -> complex:
    return t[0] + t[1] * nu + t[2] * mu


@dataclass(frozen=True)
class OlbrichtId:
    group: str                       # "I" | "II" | "III"
    index: int                       # 1..24
    root: RootVariant | None = None  # group III only

    def label(self) -> str:
        if self.root is None:
            return f"{self.group}.{self.index}"
        return f"{self.group}.{self.index}.{self.root.value}"


@dataclass(frozen=True)
class CatalogueEntry:
    group: str
    index: int
    #: allowed root variants; empty for the rational-argument groups
    roots: tuple[str, ...]
    #: domain tag, or per-root mapping for the square-root group
    domain: str | dict[str, str]
    #: ((base_tag, exponent-affine), ...)
    prefactors: tuple[tuple[str, Affine], ...] = ()
    hyp: tuple[Affine, Affine, Affine] | None = None
    #: regions argument index for groups I/II, "w13".."w18" for group III
    argument: int | str | None = None
    #: evaluate as the referenced entry of the same group at -x
    reflect_of: int | None = None


# -- prefactor base vocabulary (functions of x and the chosen root y) -------

_BASES: dict[str, Callable[[complex, complex | None], complex]] = {
    "half_one_minus_x": lambda x, y: (1.0 - x) / 2.0,
    "half_one_plus_x": lambda x, y: (1.0 + x) / 2.0,
    "ratio_p": lambda x, y: (x + 1.0) / (x - 1.0),
    "ratio_m": lambda x, y: (x - 1.0) / (x + 1.0),
    "two_over_one_minus_x": lambda x, y: 2.0 / (1.0 - x),
    "two_over_one_plus_x": lambda x, y: 2.0 / (1.0 + x),
    "x": lambda x, y: x,
    "one_minus_x2": lambda x, y: 1.0 - x * x,
    "two_y": lambda x, y: 2.0 * y,
    "x_plus_y": lambda x, y: x + y,
    "x_minus_y": lambda x, y: x - y,
    "y_minus_x": lambda x, y: y - x,
}

_III_ARGS: dict[str, Callable[[complex, complex], complex]] = {
    "w13": lambda x, y: (y - x) / (2.0 * y),
    "w14": lambda x, y: (x - y) / (x + y),
    "w15": lambda x, y: 2.0 * y / (y + x),
    "w16": lambda x, y: 2.0 * y / (y - x),
    "w17": lambda x, y: (y + x) / (2.0 * y),
    "w18": lambda x, y: (x + y) / (x - y),
}


def _domain_ok(tag: str, x: complex) -> bool:
    if tag == "D1":
        return in_domain(DomainId.D1, x)
    if tag == "D1+":
        return in_domain(DomainId.D1_PLUS, x)
    if tag == "D1-offaxis":
        return in_domain(DomainId.D1, x) and complex(x).real != 0.0
    if tag == "D2":
        return in_domain(DomainId.D2, x)
    if tag == "D2+":
        return in_domain(DomainId.D2_PLUS, x)
    if tag == "D3":
        return in_domain(DomainId.D3, x)
    raise ValueError(f"unknown domain tag {tag!r}")


def _e(group, index, roots, domain, prefactors=(), hyp=None, arg=None, reflect=None):
    return CatalogueEntry(group, index, roots, domain, tuple(prefactors),
                          hyp, arg, reflect)


def _build_catalogue() -> dict[tuple[str, int], CatalogueEntry]:
    entries: list[CatalogueEntry] = []

    # ---- rational arguments in x -----------------------------------------
    hm, hp = "half_one_minus_x", "half_one_plus_x"
    t_m, t_p = "two_over_one_minus_x", "two_over_one_plus_x"
    entries += [
        _e("I", 1, (), "D1", [(hm, (0, 0, .5)), (hp, (0, 0, .5))],
           ((0, -1, 1), (1, 1, 1), (1, 0, 1)), 1),
        _e("I", 2, (), "D1", [(hm, (0, 0, -.5)), (hp, (0, 0, .5))],
           ((0, -1, 0), (1, 1, 0), (1, 0, -1)), 1),
        _e("I", 3, (), "D1", [(hm, (0, 0, .5)), (hp, (0, 0, -.5))],
           ((0, -1, 0), (1, 1, 0), (1, 0, 1)), 1),
        _e("I", 4, (), "D1", [(hm, (0, 0, -.5)), (hp, (0, 0, -.5))],
           ((0, -1, -1), (1, 1, -1), (1, 0, -1)), 1),
        _e("I", 5, (), "D1", reflect=1),
        _e("I", 6, (), "D1", reflect=2),
        _e("I", 7, (), "D1", reflect=3),
        _e("I", 8, (), "D1", reflect=4),
        _e("I", 9, (), "D3", [(t_m, (0, -1, 0)), ("ratio_p", (0, 0, .5))],
           ((0, -1, 0), (0, -1, 1), (0, -2, 0)), 6),
        _e("I", 10, (), "D3", [(t_m, (1, 1, 0)), ("ratio_p", (0, 0, .5))],
           ((1, 1, 1), (1, 1, 0), (2, 2, 0)), 6),
        _e("I", 11, (), "D3", [(t_m, (0, -1, 0)), ("ratio_p", (0, 0, -.5))],
           ((0, -1, 0), (0, -1, -1), (0, -2, 0)), 6),
        _e("I", 12, (), "D3", [(t_m, (1, 1, 0)), ("ratio_p", (0, 0, -.5))],
           ((1, 1, 0), (1, 1, -1), (2, 2, 0)), 6),
        _e("I", 13, (), "D2", reflect=9),
        _e("I", 14, (), "D2", reflect=10),
        _e("I", 15, (), "D2", reflect=11),
        _e("I", 16, (), "D2", reflect=12),
        _e("I", 17, (), "D2", [("ratio_m", (0, 0, .5)), (t_p, (0, -1, 0))],
           ((0, -1, 0), (0, -1, 1), (1, 0, 1)), 3),
        _e("I", 18, (), "D2", [("ratio_m", (0, 0, -.5)), (t_p, (0, -1, 0))],
           ((0, -1, 0), (0, -1, -1), (1, 0, -1)), 3),
        _e("I", 19, (), "D2", [("ratio_m", (0, 0, .5)), (t_p, (1, 1, 0))],
           ((1, 1, 1), (1, 1, 0), (1, 0, 1)), 3),
        _e("I", 20, (), "D2", [("ratio_m", (0, 0, -.5)), (t_p, (1, 1, 0))],
           ((1, 1, 0), (1, 1, -1), (1, 0, -1)), 3),
        _e("I", 21, (), "D3", reflect=17),
        _e("I", 22, (), "D3", reflect=18),
        _e("I", 23, (), "D3", reflect=19),
        _e("I", 24, (), "D3", reflect=20),
    ]

    # ---- arguments in x^2 --------------------------------------------------
    ox2 = "one_minus_x2"
    # (x^2 - 1)^alpha stands for the product (x+1)^alpha (x-1)^alpha, which
    # is what keeps these entries analytic off (-inf, 1].
    entries += [
        _e("II", 1, (), "D1", [(ox2, (0, 0, .5))],
           ((0, -.5, .5), (.5, .5, .5), (.5, 0, 0)), 9),
        _e("II", 2, (), "D1", [("x", (1, 0, 0)), (ox2, (0, 0, .5))],
           ((.5, -.5, .5), (1, .5, .5), (1.5, 0, 0)), 9),
        _e("II", 3, (), "D1", [(ox2, (0, 0, -.5))],
           ((0, -.5, -.5), (.5, .5, -.5), (.5, 0, 0)), 9),
        _e("II", 4, (), "D1", [("x", (1, 0, 0)), (ox2, (0, 0, -.5))],
           ((.5, -.5, -.5), (1, .5, -.5), (1.5, 0, 0)), 9),
        _e("II", 5, (), "D1-offaxis", [(ox2, (0, 0, .5))],
           ((0, -.5, .5), (.5, .5, .5), (1, 0, 1)), 7),
        _e("II", 6, (), "D1-offaxis", [("x", (1, 0, 0)), (ox2, (0, 0, .5))],
           ((.5, -.5, .5), (1, .5, .5), (1, 0, 1)), 7),
        _e("II", 7, (), "D1-offaxis", [(ox2, (0, 0, -.5))],
           ((0, -.5, -.5), (.5, .5, -.5), (1, 0, -1)), 7),
        _e("II", 8, (), "D1-offaxis", [("x", (1, 0, 0)), (ox2, (0, 0, -.5))],
           ((1, .5, -.5), (.5, -.5, -.5), (1, 0, -1)), 7),
        _e("II", 9, (), "D2", [("x", (0, 1, -1)), ("x2m1", (0, 0, .5))],
           ((0, -.5, .5), (.5, -.5, .5), (.5, -1, 0)), 10),
        _e("II", 10, (), "D2", [("x", (-1, -1, -1)), ("x2m1", (0, 0, .5))],
           ((.5, .5, .5), (1, .5, .5), (1.5, 1, 0)), 10),
        _e("II", 11, (), "D2", [("x", (-1, -1, 1)), ("x2m1", (0, 0, -.5))],
           ((.5, .5, -.5), (1, .5, -.5), (1.5, 1, 0)), 10),
        _e("II", 12, (), "D2", [("x", (0, 1, 1)), ("x2m1", (0, 0, -.5))],
           ((0, -.5, -.5), (.5, -.5, -.5), (.5, -1, 0)), 10),
        _e("II", 13, (), "D2", [("x2m1", (0, .5, 0))],
           ((0, -.5, .5), (0, -.5, -.5), (.5, -1, 0)), 8),
        _e("II", 14, (), "D2", [("x2m1", (-.5, -.5, 0))],
           ((.5, .5, .5), (.5, .5, -.5), (1.5, 1, 0)), 8),
        _e("II", 15, (), "D2", [("x", (1, 0, 0)), ("x2m1", (-.5, .5, 0))],
           ((.5, -.5, .5), (.5, -.5, -.5), (.5, -1, 0)), 8),
        _e("II", 16, (), "D2", [("x", (1, 0, 0)), ("x2m1", (-1, -.5, 0))],
           ((1, .5, .5), (1, .5, -.5), (1.5, 1, 0)), 8),
        _e("II", 17, (), "D1", [(ox2, (0, .5, 0))],
           ((0, -.5, .5), (0, -.5, -.5), (.5, 0, 0)), 12),
        _e("II", 18, (), "D1", [(ox2, (-.5, -.5, 0))],
           ((.5, .5, .5), (.5, .5, -.5), (.5, 0, 0)), 12),
        _e("II", 19, (), "D1", [("x", (1, 0, 0)), (ox2, (-.5, .5, 0))],
           ((.5, -.5, .5), (.5, -.5, -.5), (1.5, 0, 0)), 12),
        _e("II", 20, (), "D1", [("x", (1, 0, 0)), (ox2, (-1, -.5, 0))],
           ((1, .5, .5), (1, .5, -.5), (1.5, 0, 0)), 12),
        _e("II", 21, (), "D1+", [("x", (0, 1, -1)), (ox2, (0, 0, .5))],
           ((0, -.5, .5), (.5, -.5, .5), (1, 0, 1)), 11),
        _e("II", 22, (), "D1+", [("x", (-1, -1, -1)), (ox2, (0, 0, .5))],
           ((.5, .5, .5), (1, .5, .5), (1, 0, 1)), 11),
        _e("II", 23, (), "D1+", [("x", (-1, -1, 1)), (ox2, (0, 0, -.5))],
           ((1, .5, -.5), (.5, .5, -.5), (1, 0, -1)), 11),
        _e("II", 24, (), "D1+", [("x", (0, 1, 1)), (ox2, (0, 0, -.5))],
           ((.5, -.5, -.5), (0, -.5, -.5), (1, 0, -1)), 11),
    ]

    # ---- square-root arguments --------------------------------------------
    both = ("Y1", "Y2")
    d_full = {"Y1": "D1", "Y2": "D2"}
    d_plus = {"Y1": "D1+", "Y2": "D2+"}
    entries += [
        _e("III", 1, ("Y1",), {"Y1": "D1"}, [("two_y", (0, 1, 0))],
           ((0, -1, 1), (0, -1, -1), (.5, -1, 0)), "w17"),
        _e("III", 2, ("Y1",), {"Y1": "D1"},
           [("two_y", (-.5, 0, 0)), ("y_minus_x", (.5, 1, 0))],
           ((.5, 0, -1), (.5, 0, 1), (.5, -1, 0)), "w17"),
        _e("III", 3, ("Y1",), {"Y1": "D1"},
           [("two_y", (-.5, 0, 0)), ("y_minus_x", (-.5, -1, 0))],
           ((.5, 0, -1), (.5, 0, 1), (1.5, 1, 0)), "w17"),
        _e("III", 4, ("Y1",), {"Y1": "D1"}, [("two_y", (-1, -1, 0))],
           ((1, 1, -1), (1, 1, 1), (1.5, 1, 0)), "w17"),
        _e("III", 5, both, d_full, [("two_y", (0, 1, 0))],
           ((0, -1, 1), (0, -1, -1), (.5, -1, 0)), "w13"),
        _e("III", 6, both, d_full,
           [("two_y", (-.5, 0, 0)), ("x_plus_y", (.5, 1, 0))],
           ((.5, 0, -1), (.5, 0, 1), (.5, -1, 0)), "w13"),
        _e("III", 7, both, d_full,
           [("two_y", (-.5, 0, 0)), ("x_plus_y", (-.5, -1, 0))],
           ((.5, 0, -1), (.5, 0, 1), (1.5, 1, 0)), "w13"),
        _e("III", 8, both, d_full, [("two_y", (-1, -1, 0))],
           ((1, 1, -1), (1, 1, 1), (1.5, 1, 0)), "w13"),
        _e("III", 9, both, d_plus,
           [("two_y", (0, 0, 1)), ("x_plus_y", (0, 1, -1))],
           ((0, -1, 1), (.5, 0, 1), (1, 0, 2)), "w15"),
        _e("III", 10, both, d_plus,
           [("two_y", (0, 0, -1)), ("x_plus_y", (0, 1, 1))],
           ((0, -1, -1), (.5, 0, -1), (1, 0, -2)), "w15"),
        _e("III", 11, both, d_plus,
           [("two_y", (0, 0, -1)), ("x_plus_y", (-1, -1, 1))],
           ((1, 1, -1), (.5, 0, -1), (1, 0, -2)), "w15"),
        _e("III", 12, both, d_plus,
           [("two_y", (0, 0, 1)), ("x_plus_y", (-1, -1, -1))],
           ((1, 1, 1), (.5, 0, 1), (1, 0, 2)), "w15"),
        _e("III", 13, both, d_plus,
           [("two_y", (0, 0, 1)), ("x_minus_y", (0, 1, -1))],
           ((0, -1, 1), (.5, 0, 1), (1, 0, 2)), "w16"),
        _e("III", 14, both, d_plus,
           [("two_y", (0, 0, -1)), ("x_minus_y", (0, 1, 1))],
           ((0, -1, -1), (.5, 0, -1), (1, 0, -2)), "w16"),
        _e("III", 15, both, d_plus,
           [("two_y", (0, 0, -1)), ("x_minus_y", (-1, -1, 1))],
           ((1, 1, -1), (.5, 0, -1), (1, 0, -2)), "w16"),
        _e("III", 16, both, d_plus,
           [("two_y", (0, 0, 1)), ("x_minus_y", (-1, -1, -1))],
           ((1, 1, 1), (.5, 0, 1), (1, 0, 2)), "w16"),
        _e("III", 17, ("Y1",), {"Y1": "D1"},
           [("two_y", (0, 0, 1)), ("y_minus_x", (0, 1, -1))],
           ((0, -1, 1), (.5, 0, 1), (.5, -1, 0)), "w18"),
        _e("III", 18, ("Y1",), {"Y1": "D1"},
           [("two_y", (0, 0, -1)), ("y_minus_x", (0, 1, 1))],
           ((0, -1, -1), (.5, 0, -1), (.5, -1, 0)), "w18"),
        _e("III", 19, ("Y1",), {"Y1": "D1"},
           [("two_y", (0, 0, 1)), ("y_minus_x", (-1, -1, -1))],
           ((.5, 0, 1), (1, 1, 1), (1.5, 1, 0)), "w18"),
        _e("III", 20, ("Y1",), {"Y1": "D1"},
           [("two_y", (0, 0, -1)), ("y_minus_x", (-1, -1, 1))],
           ((.5, 0, -1), (1, 1, -1), (1.5, 1, 0)), "w18"),
        _e("III", 21, both, d_full,
           [("two_y", (0, 0, 1)), ("x_plus_y", (0, 1, -1))],
           ((0, -1, 1), (.5, 0, 1), (.5, -1, 0)), "w14"),
        _e("III", 22, both, d_full,
           [("two_y", (0, 0, -1)), ("x_plus_y", (0, 1, 1))],
           ((0, -1, -1), (.5, 0, -1), (.5, -1, 0)), "w14"),
        _e("III", 23, both, d_full,
           [("two_y", (0, 0, 1)), ("x_plus_y", (-1, -1, -1))],
           ((.5, 0, 1), (1, 1, 1), (1.5, 1, 0)), "w14"),
        _e("III", 24, both, d_full,
           [("two_y", (0, 0, -1)), ("x_plus_y", (-1, -1, 1))],
           ((.5, 0, -1), (1, 1, -1), (1.5, 1, 0)), "w14"),
    ]
    return {(e.group, e.index): e for e in entries}


_CATALOGUE = _build_catalogue()


def catalogue() -> tuple[CatalogueEntry, ...]:
    return tuple(_CATALOGUE.values())


def entry(group: str, index: int) -> CatalogueEntry:
    try:
        return _CATALOGUE[(group, index)]
    except KeyError:
        raise KeyError(f"no catalogue entry {group}.{index}") from None


ALL_IDS: tuple[OlbrichtId, ...] = tuple(
    OlbrichtId(e.group, e.index, RootVariant(r) if e.roots else None)
    for e in _CATALOGUE.values()
    for r in (e.roots or (None,))
    if not (e.roots and r is None)
)


def _entry_domain(e: CatalogueEntry, root: RootVariant | None) -> str:
    if isinstance(e.domain, dict):
        if root is None:
            raise ParameterError(f"entry {e.group}.{e.index} needs a root variant")
        return e.domain[root.value]
    return e.domain


def eval_olbricht(oid: OlbrichtId, p: ParamPair, x: complex,
                  tol: float = DEFAULT_TOL) -> complex:
    """Evaluate one catalogue entry: prefactor powers times the
    hypergeometric factor, with the stated branch conventions."""
    e = entry(oid.group, oid.index)
    if e.roots:
        if oid.root is None or oid.root.value not in e.roots:
            raise ParameterError(
                f"entry {e.group}.{e.index} admits roots {e.roots}; got {oid.root}")
    elif oid.root is not None:
        raise ParameterError(f"entry {e.group}.{e.index} takes no root variant")
    x = complex(x)
    dom = _entry_domain(e, oid.root)
    if not _domain_ok(dom, x):
        raise DomainError(f"x = {x} outside domain {dom} of entry {oid.label()}")
    if e.reflect_of is not None:
        base = OlbrichtId(e.group, e.reflect_of, oid.root)
        return eval_olbricht(base, p, -x, tol)
    nu, mu = p.nu, p.mu
    y = root_y(oid.root, x) if e.roots else None
    pref = 1.0 + 0.0j
    for tag, expo in e.prefactors:
        alpha = _aff(expo, nu, mu)
        if tag == "x2m1":
            pref *= principal_pow(x + 1.0, alpha) * principal_pow(x - 1.0, alpha)
        else:
            pref *= principal_pow(_BASES[tag](x, y), alpha)
    if isinstance(e.argument, str):
        w = _III_ARGS[e.argument](x, y)
    else:
        w = argument(e.argument, x)
    a = _aff(e.hyp[0], nu, mu)
    b = _aff(e.hyp[1], nu, mu)
    c = _aff(e.hyp[2], nu, mu)
    return pref * f21(HypParams(a, b, c), w, tol).value


# ---------------------------------------------------------------------------
# Identity records
# ---------------------------------------------------------------------------

Reduction = Callable[[ParamPair, complex, float], complex]


def _gam(z: complex) -> complex:
    return gamma_quotient((z,), ())


def _qbold(nu_map, reflect):
    def f(p: ParamPair, x: complex, tol: float) -> complex:
        deg = nu_map(p.nu)
        z = -x if reflect else x
        return legendre_q_bold(ParamPair(deg, p.mu), z, tol).value
    return f


def _red_I1(p, x, tol):
    return _gam(1.0 + p.mu) * ferrers_p(ParamPair(p.nu, -p.mu), x, tol).value


def _red_I2(p, x, tol):
    return _gam(1.0 - p.mu) * ferrers_p(p, x, tol).value


def _red_I5(p, x, tol):
    return _gam(1.0 + p.mu) * ferrers_p(ParamPair(p.nu, -p.mu), -x, tol).value


def _red_I6(p, x, tol):
    return _gam(1.0 - p.mu) * ferrers_p(p, -x, tol).value


def _red_I9(p, x, tol):
    return (principal_pow(4.0, -p.nu) / _SQRT_PI * _gam(0.5 - p.nu)
            * _qbold(lambda nu: -nu - 1.0, True)(p, x, tol))


def _red_I10(p, x, tol):
    return (principal_pow(4.0, p.nu + 1.0) / _SQRT_PI * _gam(p.nu + 1.5)
            * _qbold(lambda nu: nu, True)(p, x, tol))


def _red_I13(p, x, tol):
    return (principal_pow(4.0, -p.nu) / _SQRT_PI * _gam(0.5 - p.nu)
            * _qbold(lambda nu: -nu - 1.0, False)(p, x, tol))


def _red_I14(p, x, tol):
    return (principal_pow(4.0, p.nu + 1.0) / _SQRT_PI * _gam(p.nu + 1.5)
            * _qbold(lambda nu: nu, False)(p, x, tol))


def _red_I17(p, x, tol):
    return _gam(1.0 + p.mu) * legendre_p(ParamPair(p.nu, -p.mu), x, tol).value


def _red_I18(p, x, tol):
    return _gam(1.0 - p.mu) * legendre_p(p, x, tol).value


def _red_I21(p, x, tol):
    return _gam(1.0 + p.mu) * legendre_p(ParamPair(p.nu, -p.mu), -x, tol).value


def _red_I22(p, x, tol):
    return _gam(1.0 - p.mu) * legendre_p(p, -x, tol).value


def _red_II1(p, x, tol):
    nu, mu = p.nu, p.mu
    c = (principal_pow(2.0, -mu - 1.0) / _SQRT_PI
         * gamma_quotient((0.5 * nu - 0.5 * mu + 1.0, 0.5 - 0.5 * nu - 0.5 * mu), ()))
    return c * (ferrers_p(p, x, tol).value + ferrers_p(p, -x, tol).value)


def _red_II2(p, x, tol):
    nu, mu = p.nu, p.mu
    c = (principal_pow(2.0, -mu - 2.0) / _SQRT_PI
         * gamma_quotient((0.5 * nu - 0.5 * mu + 0.5, -0.5 * nu - 0.5 * mu), ()))
    return c * (ferrers_p(p, -x, tol).value - ferrers_p(p, x, tol).value)


def _red_II5(p, x, tol):
    return (principal_pow(2.0, p.mu) * _gam(1.0 + p.mu)
            * ferrers_p(ParamPair(p.nu, -p.mu), x, tol).value)


def _red_II7(p, x, tol):
    return (principal_pow(2.0, -p.mu) * _gam(1.0 - p.mu)
            * ferrers_p(p, x, tol).value)


def _red_II9(p, x, tol):
    return (principal_pow(2.0, -p.nu) / _SQRT_PI * _gam(0.5 - p.nu)
            * _qbold(lambda nu: -nu - 1.0, False)(p, x, tol))


def _red_II10(p, x, tol):
    return (principal_pow(2.0, p.nu + 1.0) / _SQRT_PI * _gam(p.nu + 1.5)
            * _qbold(lambda nu: nu, False)(p, x, tol))


def _red_III5_Y2(p, x, tol):
    return _gam(0.5 - p.nu) / _SQRT_PI * _qbold(lambda nu: -nu - 1.0, False)(p, x, tol)


def _red_III5_Y1(p, x, tol):
    # Equality with the Y2 form holds in the upper half-plane; crossing to
    # the lower half-plane picks up a first-kind term from the monodromy of
    # the normalized second-kind function around z = 1.
    nu, mu = p.nu, p.mu
    qb = _qbold(lambda n: -n - 1.0, False)(p, x, tol)
    if complex(x).imag > 0:
        return _gam(0.5 - nu) / _SQRT_PI * qb
    pv = legendre_p(ParamPair(nu, -mu), x, tol).value
    return (_gam(0.5 - nu) / _SQRT_PI
            * (cmath.exp(-1j * math.pi * mu) * qb
               - 1j * math.pi * rgamma(-nu - mu) * pv))


def _red_III7_Y2(p, x, tol):
    return _gam(p.nu + 1.5) / _SQRT_PI * _qbold(lambda nu: nu, False)(p, x, tol)


def _red_III7_Y1(p, x, tol):
    nu, mu = p.nu, p.mu
    qb = _qbold(lambda n: n, False)(p, x, tol)
    if complex(x).imag > 0:
        return _gam(nu + 1.5) / _SQRT_PI * qb
    pv = legendre_p(ParamPair(nu, -mu), x, tol).value
    return (_gam(nu + 1.5) / _SQRT_PI
            * (cmath.exp(-1j * math.pi * mu) * qb
               - 1j * math.pi * rgamma(nu - mu + 1.0) * pv))


def _red_III9_Y2(p, x, tol):
    return (principal_pow(4.0, p.mu) * _gam(1.0 + p.mu)
            * legendre_p(ParamPair(p.nu, -p.mu), x, tol).value)


def _red_III9_Y1(p, x, tol):
    return (cmath.exp(0.5j * math.pi * p.mu) * principal_pow(4.0, p.mu)
            * _gam(1.0 + p.mu) * ferrers_p(ParamPair(p.nu, -p.mu), x, tol).value)


def _red_III10_Y2(p, x, tol):
    return (principal_pow(4.0, -p.mu) * _gam(1.0 - p.mu)
            * legendre_p(p, x, tol).value)


def _red_III10_Y1(p, x, tol):
    return (cmath.exp(-0.5j * math.pi * p.mu) * principal_pow(4.0, -p.mu)
            * _gam(1.0 - p.mu) * ferrers_p(p, x, tol).value)


@dataclass(frozen=True)
class IdentityRecord:
    description: str
    #: closed-form reduction, or None when the record is entry-equality
    reduction: Reduction | None = None
    #: (group, index, root-preserved, reflect) target for equality records
    equals: tuple[str, int, bool] | None = None


def _identity_table() -> dict[tuple[str, int, str | None], IdentityRecord]:
    t: dict[tuple[str, int, str | None], IdentityRecord] = {}

    def named(g, i, root, desc, fn):
        t[(g, i, root)] = IdentityRecord(desc, reduction=fn)

    def dup(g, i, root, j, desc, reflect=False):
        t[(g, i, root)] = IdentityRecord(desc, equals=(g, j, reflect))

    named("I", 1, None, "Gamma(1+mu) * FerrersP(nu, -mu; x)", _red_I1)
    named("I", 2, None, "Gamma(1-mu) * FerrersP(nu, mu; x)", _red_I2)
    dup("I", 3, None, 1, "equal to I.1 (Euler transformation)")
    dup("I", 4, None, 2, "equal to I.2 (Euler transformation)")
    named("I", 5, None, "Gamma(1+mu) * FerrersP(nu, -mu; -x)", _red_I5)
    named("I", 6, None, "Gamma(1-mu) * FerrersP(nu, mu; -x)", _red_I6)
    dup("I", 7, None, 5, "equal to I.5 (Euler transformation)")
    dup("I", 8, None, 6, "equal to I.6 (Euler transformation)")
    named("I", 9, None, "4^-nu Gamma(1/2-nu) QBold(-nu-1, mu; -x) / sqrt(pi)", _red_I9)
    named("I", 10, None, "4^(nu+1) Gamma(nu+3/2) QBold(nu, mu; -x) / sqrt(pi)", _red_I10)
    dup("I", 11, None, 9, "equal to I.9 (mu -> -mu symmetry)")
    dup("I", 12, None, 10, "equal to I.10 (mu -> -mu symmetry)")
    named("I", 13, None, "4^-nu Gamma(1/2-nu) QBold(-nu-1, mu; x) / sqrt(pi)", _red_I13)
    named("I", 14, None, "4^(nu+1) Gamma(nu+3/2) QBold(nu, mu; x) / sqrt(pi)", _red_I14)
    dup("I", 15, None, 13, "equal to I.13 (mu -> -mu symmetry)")
    dup("I", 16, None, 14, "equal to I.14 (mu -> -mu symmetry)")
    named("I", 17, None, "Gamma(1+mu) * LegendreP(nu, -mu; x)", _red_I17)
    named("I", 18, None, "Gamma(1-mu) * LegendreP(nu, mu; x)", _red_I18)
    dup("I", 19, None, 17, "equal to I.17 (Euler transformation)")
    dup("I", 20, None, 18, "equal to I.18 (Euler transformation)")
    named("I", 21, None, "Gamma(1+mu) * LegendreP(nu, -mu; -x)", _red_I21)
    named("I", 22, None, "Gamma(1-mu) * LegendreP(nu, mu; -x)", _red_I22)
    dup("I", 23, None, 21, "equal to I.21 (Euler transformation)")
    dup("I", 24, None, 22, "equal to I.22 (Euler transformation)")

    named("II", 1, None,
          "even solution: c * (FerrersP(x) + FerrersP(-x)), y(0)=1, y'(0)=0", _red_II1)
    named("II", 2, None,
          "odd solution: c * (FerrersP(-x) - FerrersP(x)), y(0)=0, y'(0)=1", _red_II2)
    dup("II", 3, None, 1, "equal to II.1 (Euler transformation)")
    dup("II", 4, None, 2, "equal to II.2 (Euler transformation)")
    named("II", 5, None, "2^mu Gamma(1+mu) FerrersP(nu, -mu; x) on Re x > 0", _red_II5)
    dup("II", 6, None, 5, "equal to II.5 on Re x > 0 (Euler transformation)")
    named("II", 7, None, "2^-mu Gamma(1-mu) FerrersP(nu, mu; x) on Re x > 0", _red_II7)
    dup("II", 8, None, 7, "equal to II.7 on Re x > 0 (Euler transformation)")
    named("II", 9, None, "2^-nu Gamma(1/2-nu) QBold(-nu-1, mu; x) / sqrt(pi)", _red_II9)
    named("II", 10, None, "2^(nu+1) Gamma(nu+3/2) QBold(nu, mu; x) / sqrt(pi)", _red_II10)
    dup("II", 11, None, 10, "equal to II.10 (mu -> -mu symmetry)")
    dup("II", 12, None, 9, "equal to II.9 (mu -> -mu symmetry)")
    dup("II", 13, None, 9, "equal to II.9 (Pfaff transformation)")
    dup("II", 14, None, 10, "equal to II.10 (Pfaff transformation)")
    dup("II", 15, None, 12, "equal to II.12 (Pfaff transformation)")
    dup("II", 16, None, 11, "equal to II.11 (Pfaff transformation)")
    dup("II", 17, None, 1, "equal to II.1 (Pfaff transformation)")
    dup("II", 18, None, 3, "equal to II.3 (Pfaff transformation)")
    dup("II", 19, None, 2, "equal to II.2 (Pfaff transformation)")
    dup("II", 20, None, 4, "equal to II.4 (Pfaff transformation)")
    dup("II", 21, None, 5, "equal to II.5 (Pfaff transformation)")
    dup("II", 22, None, 6, "equal to II.6 (Pfaff transformation)")
    dup("II", 23, None, 7, "equal to II.7 (Pfaff transformation)")
    dup("II", 24, None, 8, "equal to II.8 (Pfaff transformation)")

    dup("III", 1, "Y1", 5, "equal to III.5 (Y1) at -x", reflect=True)
    dup("III", 2, "Y1", 1, "equal to III.1 (Euler transformation)")
    dup("III", 3, "Y1", 7, "equal to III.7 (Y1) at -x", reflect=True)
    dup("III", 4, "Y1", 3, "equal to III.3 (Euler transformation)")
    named("III", 5, "Y1",
          "Gamma(1/2-nu) QBold(-nu-1, mu; x) / sqrt(pi) for Im x > 0; "
          "two-term monodromy-corrected form for Im x < 0", _red_III5_Y1)
    named("III", 5, "Y2", "Gamma(1/2-nu) QBold(-nu-1, mu; x) / sqrt(pi)", _red_III5_Y2)
    dup("III", 6, "Y1", 5, "equal to III.5 (Euler transformation)")
    dup("III", 6, "Y2", 5, "equal to III.5 (Euler transformation)")
    named("III", 7, "Y1",
          "Gamma(nu+3/2) QBold(nu, mu; x) / sqrt(pi) for Im x > 0; "
          "two-term monodromy-corrected form for Im x < 0", _red_III7_Y1)
    named("III", 7, "Y2", "Gamma(nu+3/2) QBold(nu, mu; x) / sqrt(pi)", _red_III7_Y2)
    dup("III", 8, "Y1", 7, "equal to III.7 (Euler transformation)")
    dup("III", 8, "Y2", 7, "equal to III.7 (Euler transformation)")
    named("III", 9, "Y1",
          "e^(i pi mu/2) 4^mu Gamma(1+mu) FerrersP(nu, -mu; x) on D1+", _red_III9_Y1)
    named("III", 9, "Y2", "4^mu Gamma(1+mu) LegendreP(nu, -mu; x) on D2+", _red_III9_Y2)
    named("III", 10, "Y1",
          "e^(-i pi mu/2) 4^-mu Gamma(1-mu) FerrersP(nu, mu; x) on D1+", _red_III10_Y1)
    named("III", 10, "Y2", "4^-mu Gamma(1-mu) LegendreP(nu, mu; x) on D2+", _red_III10_Y2)
    for root in ("Y1", "Y2"):
        dup("III", 11, root, 10, "equal to III.10 (Euler transformation)")
        dup("III", 12, root, 9, "equal to III.9 (Euler transformation)")
        dup("III", 13, root, 9, "equal to III.9 (Pfaff transformation)")
        dup("III", 14, root, 10, "equal to III.10 (Pfaff transformation)")
        dup("III", 15, root, 11, "equal to III.11 (Pfaff transformation)")
        dup("III", 16, root, 12, "equal to III.12 (Pfaff transformation)")
        dup("III", 21, root, 5, "equal to III.5 (Pfaff transformation)")
        dup("III", 22, root, 6, "equal to III.6 (Pfaff transformation)")
        dup("III", 23, root, 7, "equal to III.7 (Pfaff transformation)")
        dup("III", 24, root, 8, "equal to III.8 (Pfaff transformation)")
    for i in range(17, 21):
        dup("III", i, "Y1", i - 16, f"equal to III.{i - 16} (Pfaff transformation)")
    return t


_IDENTITIES = _identity_table()


@dataclass(frozen=True)
class IdentityOutcome:
    x: complex
    residual: float
    error: str | None = None


@dataclass(frozen=True)
class IdentityReport:
    id: OlbrichtId
    description: str
    outcomes: tuple[IdentityOutcome, ...]

    @property
    def max_residual(self) -> float:
        vals = [o.residual for o in self.outcomes if o.error is None]
        if len(vals) < len(self.outcomes) or not vals:
            return math.inf
        return max(vals)


def identity_record(oid: OlbrichtId) -> IdentityRecord:
    key = (oid.group, oid.index, oid.root.value if oid.root else None)
    return _IDENTITIES[key]


def verify_identity(oid: OlbrichtId, p: ParamPair, x_samples,
                    tol: float = DEFAULT_TOL) -> IdentityReport:
    """Relative residual between the entry and its recorded identity at each
    sample.  Failures are reported in the outcome list, never raised."""
    rec = identity_record(oid)
    outcomes = []
    for x in x_samples:
        x = complex(x)
        try:
            lhs = eval_olbricht(oid, p, x, tol)
            if rec.reduction is not None:
                rhs = rec.reduction(p, x, tol)
            else:
                g, j, reflect = rec.equals
                target = OlbrichtId(g, j, oid.root)
                rhs = eval_olbricht(target, p, -x if reflect else x, tol)
            denom = abs(lhs) + abs(rhs)
            res = abs(lhs - rhs) / denom if denom else 0.0
            outcomes.append(IdentityOutcome(x, res))
        except FerroxError as exc:
            outcomes.append(IdentityOutcome(x, math.inf, f"{type(exc).__name__}: {exc}"))
    return IdentityReport(oid, rec.description, tuple(outcomes))


def ode_residual(oid: OlbrichtId, p: ParamPair, x: complex,
                 h: float = 1e-4) -> float:
    """Five-point finite-difference residual of the associated Legendre
    equation for this entry, normalized by the local term scale.

    The stencil divides by h^2, so the entry is evaluated well below the
    default tolerance to keep truncation wobble out of the residual.
    """
    x = complex(x)
    if min(abs(x - 1.0), abs(x + 1.0)) <= 0.01:
        raise DomainError(f"sample {x} too close to the singular points +-1")
    return legendre_ode_residual(
        lambda z: eval_olbricht(oid, p, z, tol=1e-14), p.nu, p.mu, x, h)


_D1_SAMPLES = (0.37, -0.42, 0.18 + 0.31j, -0.25 - 0.33j, 0.52 + 0.17j)
_D1_OFFAXIS = (0.37, 0.52 + 0.17j, 0.44 - 0.28j, 0.61, 0.23 + 0.41j)
_D1_COMPLEX = (0.18 + 0.31j, -0.25 - 0.33j, 0.52 + 0.17j, -0.4 + 0.6j, 0.3 - 0.5j)
_D2_SAMPLES = (1.9, 2.6 + 0.8j, 1.4 - 1.1j, 3.2, 0.8 + 1.5j)
_D2P_SAMPLES = (1.9, 2.6 + 0.8j, 1.4 - 1.1j, 3.2, 0.9 + 1.2j)
_D3_SAMPLES = tuple(-z for z in _D2_SAMPLES)


def default_samples(oid: OlbrichtId) -> tuple[complex, ...]:
    """Five domain-appropriate sample points for identity checks."""
    e = entry(oid.group, oid.index)
    dom = _entry_domain(e, oid.root)
    if oid.group == "III" and oid.root is RootVariant.Y1 and oid.index in (
            1, 2, 3, 4, 5, 6, 7, 8, 17, 18, 19, 20, 21, 22, 23, 24):
        # The named reductions of this family split by half-plane, so keep
        # the samples off the real axis.
        return _D1_COMPLEX
    return {
        "D1": _D1_SAMPLES,
        "D1+": _D1_OFFAXIS,
        "D1-offaxis": _D1_OFFAXIS,
        "D2": _D2_SAMPLES,
        "D2+": _D2P_SAMPLES,
        "D3": _D3_SAMPLES,
    }[dom]


def ode_samples(oid: OlbrichtId) -> tuple[complex, ...]:
    """Three interior sample points for the differential-equation check."""
    return default_samples(oid)[:3]


def catalogue_records() -> list[dict]:
    """Machine-readable dump of the catalogue (used by the CLI)."""
    out = []
    for e in _CATALOGUE.values():
        roots = e.roots or (None,)
        for r in roots:
            oid = OlbrichtId(e.group, e.index, RootVariant(r) if r else None)
            rec = identity_record(oid)
            out.append({
                "group": e.group,
                "index": e.index,
                "root": r,
                "domain": _entry_domain(e, RootVariant(r) if r else None),
                "reflected_of": e.reflect_of,
                "prefactors": [
                    {"base": tag, "exponent": list(expo)} for tag, expo in e.prefactors
                ],
                "hyp_params": [list(t) for t in e.hyp] if e.hyp else None,
                "argument": e.argument,
                "identity": rec.description,
            })
    return out
