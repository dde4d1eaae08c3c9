"""Change of variable, tangent polynomial and potential evaluation.

The family is parametrized by two ray identifiers (``lambda_o``, ``mu_o``)
and the double root ``z_T`` of the tangent polynomial

    T2(z) = (z - z_T)**2 / (1 - z_T)**2,       T2(1) = 1,

which governs the change of variable z(x) through

    (dz/dx)**2 = 4 z**2 (1-z)**2 / T2(z).

Everything downstream (spectra, eigenfunctions, Darboux partners) is built
on the canonical Schrodinger gauge -psi'' + V(x) psi = E psi with
hbar**2/2m = 1, V(x->+inf) = 0 and E equal to the z-gauge energy epsilon.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, PoleError

# Origin convention for the map x(z): fixed so that the z_T = 2 branch is
# exactly z(x) = 2 / (1 + sqrt(1 + exp(-2x))).
X_ORIGIN = -math.log(2.0)


@dataclass(frozen=True)
class RayIdentifiers:
    """Free potential parameters.

    Parameters
    ----------
    lambda_o : float
        Reflective-barrier strength, >= 0.  Controls the left asymptote.
    mu_o : float
        Well-depth parameter, > 0.  Controls the number of bound states.
    """

    lambda_o: float
    mu_o: float

    def __post_init__(self):
        if not (np.isfinite(self.lambda_o) and self.lambda_o >= 0.0):
            raise DomainError(f"lambda_o must be finite and >= 0, got {self.lambda_o}")
        if not (np.isfinite(self.mu_o) and self.mu_o > 0.0):
            raise DomainError(f"mu_o must be finite and > 0, got {self.mu_o}")

    @property
    def f0(self) -> float:
        """Derived well-depth constant mu_o**2 - 1 (never stored)."""
        return self.mu_o**2 - 1.0


@dataclass(frozen=True)
class TangentPoly:
    """Tangent polynomial with a double root ``z_T`` outside [0, 1]."""

    z_T: float

    def __post_init__(self):
        if not np.isfinite(self.z_T) or (0.0 <= self.z_T <= 1.0):
            raise DomainError(
                f"z_T must lie outside [0, 1], got {self.z_T}"
            )

    @property
    def sqrt_c0(self) -> float:
        # z_T/(z_T - 1) > 0 for any admissible z_T; this is the positive
        # square root of c0 by the sign convention of the family.
        return self.z_T / (self.z_T - 1.0)

    @property
    def c0(self) -> float:
        return self.sqrt_c0**2

    @property
    def c1(self) -> float:
        return 1.0

    @property
    def a2(self) -> float:
        return 1.0 / (1.0 - self.z_T) ** 2

    @property
    def x_tilde_T(self) -> float:
        return 2.0 * (self.z_T - 1.0)

    @property
    def gamma(self) -> float:
        """Asymmetry parameter of the asymptotically-levelled form."""
        return 1.0 - 2.0 * self.z_T


def tangent_poly_eval(z, tp: TangentPoly):
    """Evaluate T2(z) = (z - z_T)**2 / (1 - z_T)**2."""
    z = np.asarray(z, dtype=float)
    out = (z - tp.z_T) ** 2 / (1.0 - tp.z_T) ** 2
    return out if out.ndim else float(out)


def x_of_z(z, tp: TangentPoly):
    """Closed-form inverse map x(z), strictly increasing on (0, 1)."""
    z = np.asarray(z, dtype=float)
    zT = tp.z_T
    out = (-zT * np.log(z) - (1.0 - zT) * np.log1p(-z)) / (2.0 * (1.0 - zT)) + X_ORIGIN
    return out if out.ndim else float(out)


def dz_dx(z, tp: TangentPoly):
    """dz/dx expressed through z; positive on (0, 1)."""
    z = np.asarray(z, dtype=float)
    out = 2.0 * z * (1.0 - z) * (1.0 - tp.z_T) / (z - tp.z_T)
    return out if out.ndim else float(out)


def _map_fast_zt2(x):
    # z_T = 2 branch in elementary functions; 1-z is formed separately to
    # keep precision near the right asymptote.
    s = np.sqrt(1.0 + np.exp(-2.0 * x))
    return 2.0 / (1.0 + s)


def _map_fast_zt2_pair(x):
    e = np.exp(-2.0 * x)
    s = np.sqrt(1.0 + e)
    return 2.0 / (1.0 + s), e / (1.0 + s) ** 2


def _x_of_w(w, tp: TangentPoly):
    # inverse map through the right-edge distance w = 1 - z
    zT = tp.z_T
    return (-zT * np.log1p(-w) - (1.0 - zT) * np.log(w)) / (2.0 * (1.0 - zT)) + X_ORIGIN


def _newton_small(x_arr, tp: TangentPoly, tol: float, from_right: bool):
    """Solve for the small coordinate u in (0, 1/2]: u = z (left side) or
    u = 1 - z (right side), each accurate relative to its own size."""
    lo = np.full_like(x_arr, 1e-300)
    hi = np.full_like(x_arr, 0.5)
    # asymptotic tail as the starting point; the safeguard corrects the rest
    if from_right:
        u = np.exp(2.0 * (X_ORIGIN - x_arr))
    else:
        rate = 2.0 * (1.0 - tp.z_T) / (-tp.z_T)
        u = np.exp(rate * (x_arr - X_ORIGIN))
    u = np.clip(u, 1e-299, 0.5)
    for _ in range(160):
        if from_right:
            f = _x_of_w(u, tp) - x_arr
            # x decreases in w
            hi = np.where(f < 0, u, hi)
            lo = np.where(f > 0, u, lo)
            step = f * dz_dx(1.0 - u, tp)
        else:
            f = x_of_z(u, tp) - x_arr
            hi = np.where(f > 0, u, hi)
            lo = np.where(f < 0, u, lo)
            step = -f * dz_dx(u, tp)
        u_new = u + step
        # reject only genuine bracket escapes; an iterate pinned on a
        # bound (underflowing step at the root) counts as converged
        bad = (f != 0.0) & ~((u_new >= lo) & (u_new <= hi))
        u_new = np.where(bad, 0.5 * (lo + hi), u_new)
        conv = np.minimum(tol, np.maximum(1e-15 * u_new, 1e-250))
        if np.all(np.abs(u_new - u) <= conv):
            u = u_new
            break
        u = u_new
    return u


def map_x_to_z_pair(x, tp: TangentPoly, tol: float = 1e-14):
    """(z(x), 1 - z(x)) with each component accurate in its own relative
    scale; use this instead of forming 1 - z by subtraction near the
    right asymptote."""
    x_arr = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(x_arr)):
        raise DomainError("x must be finite")
    if tp.z_T == 2.0:
        z, omz = _map_fast_zt2_pair(x_arr)
        return (z, omz) if np.ndim(z) else (float(z), float(omz))
    scalar = x_arr.ndim == 0
    x_arr = np.atleast_1d(x_arr)
    x_mid = x_of_z(0.5, tp)
    right = x_arr > x_mid
    z = np.empty_like(x_arr)
    omz = np.empty_like(x_arr)
    if np.any(~right):
        u = _newton_small(x_arr[~right], tp, tol, from_right=False)
        z[~right] = u
        omz[~right] = 1.0 - u
    if np.any(right):
        u = _newton_small(x_arr[right], tp, tol, from_right=True)
        z[right] = 1.0 - u
        omz[right] = u
    if scalar:
        return float(z[0]), float(omz[0])
    return z, omz


def map_x_to_z(x, tp: TangentPoly, tol: float = 1e-14, method: str = "auto"):
    """Invert the change of variable: unique z in (0, 1) with x(z) = x.

    Uses the elementary closed form on the z_T = 2 branch and safeguarded
    bisection + Newton on the monotone closed-form inverse otherwise;
    ``method`` can force either route ("fast" requires z_T = 2).

    Parameters
    ----------
    x : float or ndarray
        Position(s); must be finite.
    tp : TangentPoly
    tol : float
        Absolute tolerance on z.

    Returns
    -------
    float or ndarray
    """
    x_arr = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(x_arr)):
        raise DomainError("x must be finite")
    if method not in ("auto", "fast", "general"):
        raise DomainError(f"unknown method {method!r}")
    if method == "fast" and tp.z_T != 2.0:
        raise DomainError("fast path requires z_T = 2")
    if tp.z_T == 2.0 and method != "general":
        out = _map_fast_zt2(x_arr)
        return out if out.ndim else float(out)

    scalar = x_arr.ndim == 0
    x_arr = np.atleast_1d(x_arr)
    x_mid = x_of_z(0.5, tp)
    right = x_arr > x_mid
    z = np.empty_like(x_arr)
    if np.any(~right):
        z[~right] = _newton_small(x_arr[~right], tp, tol, from_right=False)
    if np.any(right):
        z[right] = 1.0 - _newton_small(x_arr[right], tp, tol, from_right=True)
    return float(z[0]) if scalar else z


def schwarzian_eval(z, tp: TangentPoly, gauge: str = "xtilde"):
    """Schwarzian derivative of the map, as a function of z.

    gauge="xtilde" returns the normalized value {z, x~} where x~ carries the
    scale 2(z_T - 1); gauge="x" returns the physical {z, x}.
    """
    z = np.asarray(z, dtype=float)
    if np.any(z == tp.z_T):
        raise PoleError("Schwarzian has a pole at z == z_T")
    P = z - tp.z_T
    base = (
        -0.5 / P**2
        + z * (1.0 - z) * (2.0 * z - 1.0) / P**3
        + 1.5 * z**2 * (1.0 - z) ** 2 / P**4
    )
    if gauge == "xtilde":
        out = base
    elif gauge == "x":
        out = tp.x_tilde_T**2 * base
    else:
        raise DomainError(f"unknown gauge {gauge!r}")
    return out if out.ndim else float(out)


def schwarzian_eta(eta_hat):
    """Schwarzian {eta^, x} on the z_T = 2 branch; even in eta^."""
    eta_hat = np.asarray(eta_hat, dtype=float)
    out = -0.5 - 3.0 / eta_hat**2 + 1.5 / eta_hat**4
    return out if out.ndim else float(out)


def ref_pf_eval(z, ri: RayIdentifiers):
    """Energy-independent part of the Bose invariant (reference fraction)."""
    z = np.asarray(z, dtype=float)
    o00 = ri.mu_o**2 - ri.lambda_o**2 + 1.0
    out = (
        (1.0 - ri.lambda_o**2) / (4.0 * z**2)
        + 1.0 / (4.0 * (1.0 - z) ** 2)
        + o00 / (4.0 * z * (1.0 - z))
    )
    return out if out.ndim else float(out)


def potential_eval_z(z, ri: RayIdentifiers, tp: TangentPoly):
    """Reference z-gauge potential value v[z] on the closed interval [0, 1].

    This is the asymmetric-well form that reduces exactly to the
    asymptotically-levelled (Williams-Levai) potential at lambda_o = 0;
    v[1] = 0 and v[0] = lambda_o**2 / z_T**2.  The physical x-gauge
    potential is :func:`potential_eval_x`.
    """
    z = np.asarray(z, dtype=float)
    if np.any((z < 0.0) | (z > 1.0)):
        raise DomainError("z must lie in [0, 1]")
    P = z - tp.z_T
    lam2 = ri.lambda_o**2
    out = (
        (lam2 * (1.0 - z) - ri.f0 * z) * (1.0 - z) / P**2
        - z * (1.0 - z) * (2.0 * z - 1.0) / (2.0 * P**3)
        - 0.75 * z**2 * (1.0 - z) ** 2 / P**4
    )
    return out if out.ndim else float(out)


def potential_x_of_z(z, ri: RayIdentifiers, tp: TangentPoly):
    """Canonical potential V as a function of z(x).

    Equal to -(z')**2 I0[z] - {z,x}/2 but assembled as a single rational
    expression so the endpoint limits carry no 0*inf indeterminacy.
    V(z=1) = 0; V(z=0) = lambda_o**2 (1-z_T)**2 / z_T**2.
    """
    z = np.asarray(z, dtype=float)
    P = z - tp.z_T
    lam2 = ri.lambda_o**2
    bracket = (
        (1.0 - z) * (lam2 - ri.f0 * z) / P**2
        - 2.0 * z * (1.0 - z) * (2.0 * z - 1.0) / P**3
        - 3.0 * z**2 * (1.0 - z) ** 2 / P**4
    )
    out = (1.0 - tp.z_T) ** 2 * bracket
    return out if out.ndim else float(out)


def potential_eval_x(x, ri: RayIdentifiers, tp: TangentPoly):
    """Canonical x-gauge potential V(x).

    Asymptotes: V(+inf) = 0 and V(-inf) = lambda_o**2 (1-z_T)**2 / z_T**2.
    On the z_T = 2 branch this is the Dutt-Khare-Varshni potential shifted
    so that the right asymptote sits at zero energy.
    """
    z = map_x_to_z(x, tp)
    return potential_x_of_z(z, ri, tp)


def potential_asymptotes(ri: RayIdentifiers, tp: TangentPoly) -> tuple[float, float]:
    """(V(-inf), V(+inf)) of the canonical potential."""
    left = ri.lambda_o**2 * (1.0 - tp.z_T) ** 2 / tp.z_T**2
    return left, 0.0


def dkv_map(ri: RayIdentifiers) -> tuple[float, float, float]:
    """Map ray identifiers to the Dutt-Khare-Varshni parameters.

    Returns
    -------
    (A, B, zero_shift)
        ``zero_shift`` is the value of the DKV potential at eta^ = 1,
        i.e. -lambda_o**2 / 4.
    """
    A = (2.0 * ri.mu_o**2 - ri.lambda_o**2 + 3.0) / 4.0
    B = ri.mu_o**2 / 2.0
    return A, B, -(ri.lambda_o**2) / 4.0


def dkv_inverse(A: float, B: float) -> RayIdentifiers:
    """Inverse of :func:`dkv_map`; raises if (A, B) is outside the family."""
    if B <= 0.0:
        raise DomainError("B must be positive")
    mu_o = math.sqrt(2.0 * B)
    radicand = 2.0 * mu_o**2 + 3.0 - 4.0 * A
    if radicand < 0.0:
        raise DomainError("(A, B) not in the DRtTP(z_T=2) family: 4B + 3 - 4A < 0")
    return RayIdentifiers(lambda_o=math.sqrt(radicand), mu_o=mu_o)


def dkv_potential_eval(eta_hat, A: float, B: float):
    """DKV potential -B/e + A/e**2 - (3/4)/e**4 for eta^ >= 1."""
    eta_hat = np.asarray(eta_hat, dtype=float)
    if np.any(eta_hat < 1.0):
        raise DomainError("eta_hat must be >= 1")
    out = -B / eta_hat + A / eta_hat**2 - 0.75 / eta_hat**4
    return out if out.ndim else float(out)


def eta_hat_of_x(x):
    """Elementary variable eta^(x) = sqrt(1 + exp(-2x)) of the z_T = 2 branch."""
    x = np.asarray(x, dtype=float)
    out = np.sqrt(1.0 + np.exp(-2.0 * x))
    return out if out.ndim else float(out)
