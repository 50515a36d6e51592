"""The curve y^2 = phi(x): classification, charts and the even/odd split.

Coefficients are stored in descending powers, phi = a0 x^3 + a1 x^2 + a2 x
+ a3 with a0 > 0.  A chart fixes the weight's support window inside one
component and an affine map from the canonical domain ([-1, 1] or [0, inf))
onto it; all downstream computations run in the canonical variable, where
the curve is y^2 = phi_c(t) with phi_c the pulled-back cubic.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np
from numpy.polynomial import polynomial as P
from scipy.special import gammaln

from .exceptions import DegenerateCurveError, DomainError, InvalidChartError
from .families import OPFamily, build_family, scaled_family
from .modify import modify

__all__ = ["CurveCase", "CubicCurve", "CurveChart", "classify", "chart",
           "even_odd_split"]

_MERGE_TOL = 1e-10
_ENDPOINT_TOL = 1e-9


class CurveCase(str, Enum):
    ONE_COMPONENT = "OneComponent"
    TWO_COMPONENTS = "TwoComponents"
    TOUCHING = "Touching"


def _cubic_roots(p: float, q: float, r: float) -> list[float]:
    """Real roots of x^3 + p x^2 + q x + r, closed form + Newton polish."""
    shift = p / 3.0
    P3 = q - p * p / 3.0
    Q = 2.0 * p ** 3 / 27.0 - p * q / 3.0 + r
    scale = max(abs(P3) ** 1.5, abs(Q), 1e-300)
    disc = -4.0 * P3 ** 3 - 27.0 * Q * Q
    roots: list[float]
    if abs(P3) < 1e-14 * scale ** (2 / 3) and abs(Q) < 1e-14 * scale:
        roots = [0.0, 0.0, 0.0]
    elif disc > 0:
        # three distinct real roots: trigonometric form
        m = 2.0 * math.sqrt(-P3 / 3.0)
        theta = math.acos(min(1.0, max(-1.0, 3.0 * Q / (P3 * m))))
        roots = [m * math.cos((theta - 2.0 * math.pi * k) / 3.0) for k in range(3)]
    else:
        # one real root (Cardano); repeated-root cases fall here too
        h = Q * Q / 4.0 + P3 ** 3 / 27.0
        if h >= 0:
            sq = math.sqrt(h)
            u = np.cbrt(-Q / 2.0 + sq)
            v = np.cbrt(-Q / 2.0 - sq)
            roots = [u + v]
            if abs(h) < 1e-13 * scale * scale:
                # double root at -t/2 when the discriminant vanishes
                roots += [-(u + v) / 2.0, -(u + v) / 2.0]
        else:  # pragma: no cover - disc > 0 branch already catches this
            m = 2.0 * math.sqrt(-P3 / 3.0)
            theta = math.acos(min(1.0, max(-1.0, 3.0 * Q / (P3 * m))))
            roots = [m * math.cos((theta - 2.0 * math.pi * k) / 3.0) for k in range(3)]
    out = []
    for t in roots:
        x = t - shift
        for _ in range(2):  # Newton polish on the monic cubic
            fx = ((x + p) * x + q) * x + r
            dfx = (3.0 * x + 2.0 * p) * x + q
            if dfx != 0.0:
                x -= fx / dfx
        out.append(x)
    return sorted(out)


@dataclass(eq=False)
class CubicCurve:
    coeffs: tuple[float, float, float, float]  # descending: a0 x^3 + ... + a3
    roots: list[tuple[float, int]]             # (root, multiplicity), sorted
    case: CurveCase
    omega: list[tuple[float, float]]           # intervals where phi > 0

    def phi(self, x):
        a0, a1, a2, a3 = self.coeffs
        return ((a0 * np.asarray(x, dtype=float) + a1) * x + a2) * x + a3

    def dphi(self, x):
        a0, a1, a2, _ = self.coeffs
        return (3.0 * a0 * np.asarray(x, dtype=float) + 2.0 * a1) * x + a2

    @property
    def elliptic_discriminant(self) -> float | None:
        """Delta_E for curves in the form y^2 = x^3 + a x + b, else None."""
        a0, a1, a2, a3 = self.coeffs
        if a0 == 1.0 and a1 == 0.0:
            return -16.0 * (4.0 * a2 ** 3 + 27.0 * a3 ** 2)
        return None


def classify(coeffs) -> CubicCurve:
    """Roots, component structure and case of y^2 = phi(x)."""
    a0, a1, a2, a3 = (float(c) for c in coeffs)
    if a0 == 0.0:
        raise DegenerateCurveError("leading coefficient a0 must be nonzero")
    if a0 < 0.0:
        raise DegenerateCurveError("a0 < 0 not supported; substitute x -> -x")
    raw = _cubic_roots(a1 / a0, a2 / a0, a3 / a0)
    # merge nearly equal roots
    merged: list[tuple[float, int]] = []
    for r in raw:
        if merged and abs(r - merged[-1][0]) <= _MERGE_TOL * (1.0 + abs(r)):
            root, m = merged[-1]
            merged[-1] = ((root * m + r) / (m + 1), m + 1)
        else:
            merged.append((r, 1))
    mults = [m for _, m in merged]
    if mults == [1]:
        case = CurveCase.ONE_COMPONENT
    elif mults == [1, 1, 1]:
        case = CurveCase.TWO_COMPONENTS
    elif mults in ([1, 2], [3]):
        case = CurveCase.TOUCHING
    else:  # [2, 1]: double root below the simple root -> isolated point
        raise DegenerateCurveError(
            "double root left of the simple root gives an isolated point; "
            "this curve is not supported")
    # intervals where phi > 0 (phi -> +inf on the right since a0 > 0)
    omega: list[tuple[float, float]] = []
    if case is CurveCase.ONE_COMPONENT or mults == [3]:
        omega = [(merged[-1][0], math.inf)]
    elif case is CurveCase.TWO_COMPONENTS:
        r1, r2, r3 = (r for r, _ in merged)
        omega = [(r1, r2), (r3, math.inf)]
    else:  # simple + double
        omega = [(merged[0][0], merged[1][0]), (merged[1][0], math.inf)]
    return CubicCurve((a0, a1, a2, a3), merged, case, omega)


def _in_closure(lo, hi, interval, tol):
    a, b = interval
    return lo >= a - tol and (hi <= b + tol if np.isfinite(hi) else not np.isfinite(b))


@dataclass(eq=False)
class CurveChart:
    """A curve with the weight's support window mapped to a canonical domain."""

    curve: CubicCurve
    support: tuple[float, float]
    weight_kind: str
    weight_params: dict
    compact: bool
    phi_c: np.ndarray = field(init=False)  # canonical cubic, ascending powers
    n_left: int = field(init=False)        # root multiplicity at canonical left end
    n_right: int = field(init=False)       # ... at the right end (compact only)
    cofactor: np.ndarray = field(init=False)  # positive factor, ascending

    def __post_init__(self):
        lo, hi = self.support
        tol = _ENDPOINT_TOL * (1.0 + abs(lo) + (abs(hi) if np.isfinite(hi) else 0.0))
        if not any(_in_closure(lo, hi, iv, tol) for iv in self.curve.omega):
            raise InvalidChartError(
                f"support {self.support} is not inside one component of the curve")
        a3, a2, a1, a0 = (self.curve.coeffs[::-1])
        phi_asc = np.array([a3, a2, a1, a0])
        if self.compact:
            mid, half = 0.5 * (lo + hi), 0.5 * (hi - lo)
            affine = np.array([mid, half])
        else:
            affine = np.array([lo, 1.0])
        out = np.zeros(4)
        for c in phi_asc[::-1]:
            out = P.polymul(out, affine)
            out = P.polyadd(out, [c])
        self.phi_c = np.zeros(4)
        self.phi_c[: len(out)] = out
        # factor canonical roots into endpoint factors and the cofactor
        canon_roots: list[tuple[float, int]] = []
        for r, m in self.curve.roots:
            t = (r - affine[0]) / affine[1]
            canon_roots.append((t, m))
        n_left = n_right = 0
        rem = self.phi_c.copy()
        for t, m in canon_roots:
            if self.compact:
                if abs(t + 1.0) <= _ENDPOINT_TOL * (1 + abs(t)):
                    n_left += m
                elif abs(t - 1.0) <= _ENDPOINT_TOL * (1 + abs(t)):
                    n_right += m
                elif -1.0 < t < 1.0:
                    raise InvalidChartError(
                        f"curve root at canonical t={t} crosses the support")
            else:
                if abs(t) <= _ENDPOINT_TOL * (1 + abs(t)):
                    n_left += m
                elif t > 0:
                    raise InvalidChartError(
                        f"curve root at canonical t={t} crosses the support")
        if self.compact:
            for _ in range(n_left):
                rem, r_ = P.polydiv(rem, [1.0, 1.0])     # (1 + t)
            for _ in range(n_right):
                rem, r_ = P.polydiv(rem, [1.0, -1.0])    # (1 - t)
        else:
            for _ in range(n_left):
                rem, r_ = P.polydiv(rem, [0.0, 1.0])     # t
        self.n_left, self.n_right = n_left, n_right
        self.cofactor = np.trim_zeros(rem, "b")
        if self.cofactor.size == 0:
            raise InvalidChartError("curve degenerates to zero on the support")
        # weight/domain compatibility
        kinds_compact = ("legendre", "chebyshev", "chebyshev_t", "jacobi")
        if self.compact and self.weight_kind not in kinds_compact:
            raise InvalidChartError(
                f"weight {self.weight_kind!r} needs a compact support window")
        if not self.compact and self.weight_kind != "laguerre":
            raise InvalidChartError(
                f"weight {self.weight_kind!r} is not valid on a semi-infinite window")

    # -- canonical-variable geometry ------------------------------------
    def to_canonical(self, x):
        lo, hi = self.support
        if self.compact:
            return (2.0 * np.asarray(x, dtype=float) - (lo + hi)) / (hi - lo)
        return np.asarray(x, dtype=float) - lo

    def from_canonical(self, t):
        lo, hi = self.support
        if self.compact:
            return 0.5 * (lo + hi) + 0.5 * (hi - lo) * np.asarray(t, dtype=float)
        return lo + np.asarray(t, dtype=float)

    def phi(self, t):
        return P.polyval(np.asarray(t, dtype=float), self.phi_c)

    def dphi(self, t):
        return P.polyval(np.asarray(t, dtype=float), P.polyder(self.phi_c))

    def y(self, t):
        v = self.phi(t)
        if np.any(np.asarray(v) < 0):
            raise DomainError("phi(t) < 0: point is off the curve component")
        return np.sqrt(v)

    @property
    def cofactor_degree(self) -> int:
        return self.cofactor.size - 1

    @property
    def is_classical(self) -> bool:
        """True when phi*w is a (scaled) classical family."""
        return self.cofactor_degree == 0

    # -- families --------------------------------------------------------
    def weight_family(self, cap: int) -> OPFamily:
        return build_family(self.weight_kind, cap, **self.weight_params)

    def second_family(self, cap: int) -> OPFamily:
        """Family orthogonal w.r.t. phi_c * w on the canonical domain."""
        i, j = self.n_right, self.n_left
        if self.compact:
            if self.weight_kind in ("chebyshev", "chebyshev_t"):
                a, b = -0.5, -0.5
            elif self.weight_kind == "legendre":
                a, b = 0.0, 0.0
            else:
                a, b = self.weight_params["alpha"], self.weight_params["beta"]
            if self.is_classical:
                fam = build_family("jacobi", cap, alpha=a + i, beta=b + j)
                return scaled_family(fam, float(self.cofactor[0]))
            deg = self.cofactor_degree
            base_cap = cap + 2 + 2 * deg + deg + 2
            base = build_family("jacobi", base_cap, alpha=a + i, beta=b + j)
            return modify(base, self.cofactor, cap)
        a = self.weight_params["alpha"]
        cgam = math.exp(gammaln(a + j + 1.0) - gammaln(a + 1.0))
        if self.is_classical:
            fam = build_family("laguerre", cap, alpha=a + j)
            return scaled_family(fam, cgam * float(self.cofactor[0]))
        deg = self.cofactor_degree
        base_cap = cap + 2 + 2 * deg + deg + 2
        base = scaled_family(build_family("laguerre", base_cap, alpha=a + j), cgam)
        return modify(base, self.cofactor, cap)


def chart(curve: CubicCurve, support, weight_kind: str, **weight_params) -> CurveChart:
    """Attach a weight support window and canonical map to a curve."""
    lo, hi = support
    hi = math.inf if hi in ("inf", None) else float(hi)
    lo = float(lo)
    if not lo < hi:
        raise InvalidChartError(f"empty support window {support}")
    compact = np.isfinite(hi)
    kind = weight_kind.lower()
    params = {}
    if kind == "jacobi":
        params = {"alpha": float(weight_params.get("alpha", 0.0)),
                  "beta": float(weight_params.get("beta", 0.0))}
    elif kind == "laguerre":
        params = {"alpha": float(weight_params.get("alpha", 0.0))}
    return CurveChart(curve, (lo, hi), kind, params, compact)


def even_odd_split(ch: CurveChart, f, t):
    """Even/odd parts of f(t, y) on the curve at interior canonical points."""
    t = np.asarray(t, dtype=float)
    phi = ch.phi(t)
    if np.any(phi <= 0):
        raise DomainError("even/odd split requires phi(t) > 0")
    y = np.sqrt(phi)
    fp = f(t, y)
    fm = f(t, -y)
    return 0.5 * (fp + fm), 0.5 * (fp - fm) / y
