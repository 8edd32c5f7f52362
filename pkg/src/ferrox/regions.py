"""The eighteen hypergeometric argument maps w_j(x) and the geometry of the
regions |w_j| < 1 in the complex x-plane.

Arguments 1..6 are Moebius-type maps of x, 7..12 are maps of x^2, and 13..18
involve a square root of x^2 - 1 (branch Y1 by default; the starred variants
of 13 and 14 use branch Y2 and live on the plane cut along [-1, 1]).

Each |w_j| < 1 predicate is implemented in closed form: disks, half-planes,
the lemniscate |1-x||1+x| = 1, the circles |x| = 1, the hyperbola
Re(x^2) = 1/2, and for the square-root family the criterion
e^{2 beta} cos(2 alpha) vs 1/2 with x = cos(alpha + i beta).  Boundary points
classify as outside.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum

from .complexmath import RootVariant, root_y
from .errors import DomainError, SingularPointError

__all__ = [
    "ARGUMENT_COUNT",
    "CurveBranch",
    "DomainId",
    "RegionReport",
    "argument",
    "classify",
    "curve_w13",
    "in_domain",
    "in_region",
]

ARGUMENT_COUNT = 18


class DomainId(Enum):
    D1 = "D1"            # plane cut along the real rays |x| >= 1
    D1_PLUS = "D1+"      # D1 restricted to Re x > 0
    D2 = "D2"            # plane cut along (-inf, 1]
    D2_PLUS = "D2+"      # D2 restricted to Re x > 0
    D3 = "D3"            # -D2: plane cut along [-1, inf)


def in_domain(dom: DomainId, x: complex) -> bool:
    x = complex(x)
    real = x.imag == 0.0
    if dom is DomainId.D1:
        return not (real and abs(x.real) >= 1.0)
    if dom is DomainId.D1_PLUS:
        return x.real > 0.0 and not (real and x.real >= 1.0)
    if dom is DomainId.D2:
        return not (real and x.real <= 1.0)
    if dom is DomainId.D2_PLUS:
        return x.real > 0.0 and not (real and x.real <= 1.0)
    if dom is DomainId.D3:
        return not (real and x.real >= -1.0)
    raise ValueError(f"unknown domain {dom!r}")


class CurveBranch(Enum):
    PLAIN = "plain"        # boundary piece of |w13| = 1 (root Y1)
    STARRED = "starred"    # boundary piece of |w13*| = 1 (root Y2)


@dataclass(frozen=True)
class RegionReport:
    x: complex
    inside: dict[int, bool]
    domains: dict[DomainId, bool]


def _check_singular(j: int, x: complex) -> None:
    if j in (3, 5) and x == -1.0:
        raise SingularPointError(f"w_{j} singular at x = -1")
    if j in (4, 6) and x == 1.0:
        raise SingularPointError(f"w_{j} singular at x = 1")
    if j in (8, 12) and (x == 1.0 or x == -1.0):
        raise SingularPointError(f"w_{j} singular at x = +-1")
    if j in (10, 11) and x == 0.0:
        raise SingularPointError(f"w_{j} singular at x = 0")
    if 13 <= j <= 18 and (x == 1.0 or x == -1.0):
        raise SingularPointError(f"w_{j} singular at x = +-1")


def argument(j: int, x: complex, root: RootVariant = RootVariant.Y1) -> complex:
    """Evaluate the j-th hypergeometric argument map at x.

    The ``root`` choice matters only for j in 13..18; Y2 is accepted only for
    the starred variants j in {13, 14}.
    """
    x = complex(x)
    if not 1 <= j <= ARGUMENT_COUNT:
        raise ValueError(f"argument index must be 1..18; got {j}")
    if root is RootVariant.Y2 and j not in (13, 14):
        raise DomainError(f"root Y2 is only defined for arguments 13 and 14; got {j}")
    _check_singular(j, x)
    if j == 1:
        return (1.0 - x) / 2.0
    if j == 2:
        return (1.0 + x) / 2.0
    if j == 3:
        return (x - 1.0) / (x + 1.0)
    if j == 4:
        return (x + 1.0) / (x - 1.0)
    if j == 5:
        return 2.0 / (1.0 + x)
    if j == 6:
        return 2.0 / (1.0 - x)
    if j == 7:
        return 1.0 - x * x
    if j == 8:
        return 1.0 / (1.0 - x * x)
    if j == 9:
        return x * x
    if j == 10:
        return 1.0 / (x * x)
    if j == 11:
        return (x * x - 1.0) / (x * x)
    if j == 12:
        return x * x / (x * x - 1.0)
    y = root_y(root, x)
    if j == 13:
        return (-x + y) / (2.0 * y)
    if j == 14:
        return (x - y) / (x + y)
    if j == 15:
        return 2.0 * y / (x + y)
    if j == 16:
        return 2.0 * y / (-x + y)
    if j == 17:
        return (x + y) / (2.0 * y)
    return (x + y) / (x - y)


def _alpha_beta(x: complex) -> tuple[float, float]:
    # x = cos(alpha + i beta) with alpha in [0, pi]; Im x > 0 iff beta < 0.
    th = cmath.acos(x)
    return th.real, th.imag


def in_region(j: int, x: complex, root: RootVariant = RootVariant.Y1) -> bool:
    """Closed-form test of |w_j(x)| < 1 (strict; boundary counts as outside)."""
    x = complex(x)
    if not 1 <= j <= ARGUMENT_COUNT:
        raise ValueError(f"argument index must be 1..18; got {j}")
    if root is RootVariant.Y2 and j not in (13, 14):
        raise DomainError(f"root Y2 is only defined for arguments 13 and 14; got {j}")
    _check_singular(j, x)
    if j == 1:
        return abs(1.0 - x) < 2.0
    if j == 2:
        return abs(1.0 + x) < 2.0
    if j == 3:
        return x.real > 0.0
    if j == 4:
        return x.real < 0.0
    if j == 5:
        return abs(1.0 + x) > 2.0
    if j == 6:
        return abs(1.0 - x) > 2.0
    if j == 7:
        return abs(1.0 - x) * abs(1.0 + x) < 1.0
    if j == 8:
        return abs(1.0 - x) * abs(1.0 + x) > 1.0
    if j == 9:
        return abs(x) < 1.0
    if j == 10:
        return abs(x) > 1.0
    if j == 11:
        return x.real * x.real - x.imag * x.imag > 0.5
    if j == 12:
        return x.real * x.real - x.imag * x.imag < 0.5
    if root is RootVariant.Y2:
        y = root_y(RootVariant.Y2, x)
        if j == 13:
            # |w13*| < 1  iff  Re w14* < 1/2, with w13* = w14*/(w14* - 1)
            return ((x - y) / (x + y)).real < 0.5
        # |w14*| < 1  iff  |x - y| < |x + y|  iff  Re(x conj(y)) > 0
        return (x * y.conjugate()).real > 0.0
    alpha, beta = _alpha_beta(x)
    if j == 13:
        return math.exp(2.0 * beta) * math.cos(2.0 * alpha) < 0.5
    if j == 14:
        return x.imag > 0.0
    if j == 15:
        return math.exp(-2.0 * beta) * math.cos(2.0 * alpha) > 0.5
    if j == 16:
        return math.exp(2.0 * beta) * math.cos(2.0 * alpha) > 0.5
    if j == 17:
        return math.exp(-2.0 * beta) * math.cos(2.0 * alpha) < 0.5
    return x.imag < 0.0


def classify(x: complex) -> RegionReport:
    """Full membership report: |w_j| < 1 flags for j = 1..18 (root Y1 for the
    square-root family) plus domain flags.  Points where a map is undefined
    yield inside = False rather than an error."""
    x = complex(x)
    inside: dict[int, bool] = {}
    for j in range(1, ARGUMENT_COUNT + 1):
        try:
            inside[j] = in_region(j, x)
        except DomainError:
            inside[j] = False
    domains = {dom: in_domain(dom, x) for dom in DomainId}
    return RegionReport(x=x, inside=inside, domains=domains)


def curve_w13(alpha: float, branch: CurveBranch) -> complex:
    """Point on the boundary curve |w13| = 1 (PLAIN, root Y1) or |w13*| = 1
    (STARRED, root Y2, upper-right quadrant piece).

    Parametrized by x = (t + 1/t)/2 cos(alpha) + i (t - 1/t)/2 sin(alpha)
    with t = sqrt(2 cos 2 alpha); alpha in (0, pi/4) for PLAIN and
    (0, pi/6) for STARRED.  The curve pieces in the remaining quadrants are
    mirror images across the axes.
    """
    hi = math.pi / 4 if branch is CurveBranch.PLAIN else math.pi / 6
    if not 0.0 < alpha < hi:
        raise DomainError(
            f"curve parameter must lie in (0, {hi:.6f}) for {branch.value}; got {alpha}"
        )
    t = math.sqrt(2.0 * math.cos(2.0 * alpha))
    return complex(0.5 * (t + 1.0 / t) * math.cos(alpha),
                   0.5 * (t - 1.0 / t) * math.sin(alpha))
