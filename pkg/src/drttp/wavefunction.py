"""Closed-form solution and eigenfunction evaluation, node counting."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad
from scipy.special import eval_jacobi

from .core import RayIdentifiers, TangentPoly, map_x_to_z_pair
from .errors import ConvergenceError, DomainError
from .spectral import AehSolution, spectrum


def pochhammer(a: float, k: int) -> float:
    out = 1.0
    for i in range(k):
        out *= a + i
    return out


def hypergeom_poly_eval(n: int, a: float, c: float, z) -> float:
    """Terminating hypergeometric sum F(-n, a; c; z), Kahan-compensated.

    ``c`` may not be a nonpositive integer >= -(n-1): such values put a
    pole inside the truncated series.
    """
    if n < 0:
        raise DomainError("n must be >= 0")
    if c <= 0.0 and abs(c - round(c)) < 1e-12 and round(c) >= -(n - 1):
        raise DomainError(f"c = {c} hits a Pochhammer pole within the sum")
    z = np.asarray(z, dtype=float)
    total = np.ones_like(z)
    comp = np.zeros_like(z)
    term = np.ones_like(z)
    for k in range(n):
        term = term * ((-n + k) * (a + k)) / ((c + k) * (k + 1.0)) * z
        y = term - comp
        t = total + y
        comp = (t - total) - y
        total = t
    return total if total.ndim else float(total)


def hypergeom_poly_jacobi(n: int, a: float, c: float, z) -> float:
    """Same sum through the Jacobi three-term recurrence (fallback for
    large degree, better conditioned)."""
    z = np.asarray(z, dtype=float)
    alpha = c - 1.0
    beta = a - n - c
    out = eval_jacobi(n, alpha, beta, 1.0 - 2.0 * z) * math.factorial(n) / pochhammer(c, n)
    return out if out.ndim else float(out)


def hypergeom_poly_coeffs(n: int, a: float, c: float) -> np.ndarray:
    """Ascending coefficients of F(-n, a; c; z)."""
    coef = np.empty(n + 1)
    coef[0] = 1.0
    for k in range(n):
        coef[k + 1] = coef[k] * ((-n + k) * (a + k)) / ((c + k) * (k + 1.0))
    return coef


@dataclass(frozen=True)
class PolyFactor:
    """Polynomial factor of a solution, ascending coefficients."""

    degree: int
    coeffs: tuple[float, ...]
    roots_in_01: int

    def __call__(self, z):
        z = np.asarray(z, dtype=float)
        out = np.zeros_like(z)
        for c in reversed(self.coeffs):
            out = out * z + c
        return out if out.ndim else float(out)


def count_roots_in_01(coeffs) -> int:
    """Real roots of a polynomial strictly inside (0, 1)."""
    coeffs = np.asarray(coeffs, dtype=float)
    coeffs = np.trim_zeros(coeffs, "b")
    if coeffs.size <= 1:
        return 0
    rts = np.roots(coeffs[::-1])
    scale = max(1.0, float(np.max(np.abs(rts))))
    count = 0
    for r in rts:
        if abs(r.imag) < 1e-9 * scale and 0.0 < r.real < 1.0:
            count += 1
    return count


def poly_factor(sol: AehSolution) -> PolyFactor:
    """Polynomial factor of a solution as explicit coefficients."""
    coeffs = hypergeom_poly_coeffs(sol.m, sol.mu - sol.m, sol.lambda0 + 1.0)
    return PolyFactor(sol.m, tuple(coeffs), count_roots_in_01(coeffs))


def _endpoint_limit(exponent: float) -> float:
    if exponent > 0.0:
        return 0.0
    if exponent == 0.0:
        return 1.0
    return math.inf


def aeh_eval(z, sol: AehSolution, ri: RayIdentifiers, tp: TangentPoly):
    """Solution value z^((lambda0+1)/2) (1-z)^((lambda1+1)/2) * Pi_m(z).

    Endpoints return the limit value (0, finite, or inf by the exponent
    sign); irregular solutions are finite only on the open interval.
    """
    z_arr = np.asarray(z, dtype=float)
    scalar = z_arr.ndim == 0
    z_arr = np.atleast_1d(z_arr)
    if np.any((z_arr < 0.0) | (z_arr > 1.0)):
        raise DomainError("z must lie in [0, 1]")
    e0 = 0.5 * (sol.lambda0 + 1.0)
    e1 = 0.5 * (sol.lambda1 + 1.0)
    out = np.empty_like(z_arr)
    interior = (z_arr > 0.0) & (z_arr < 1.0)
    zi = z_arr[interior]
    if sol.m <= 25:
        pol = hypergeom_poly_eval(sol.m, sol.mu - sol.m, sol.lambda0 + 1.0, zi)
    else:
        pol = hypergeom_poly_jacobi(sol.m, sol.mu - sol.m, sol.lambda0 + 1.0, zi)
    out[interior] = zi**e0 * (1.0 - zi) ** e1 * pol
    for idx in np.nonzero(~interior)[0]:
        zv = z_arr[idx]
        if zv == 0.0:
            out[idx] = _endpoint_limit(e0)
        else:
            lim = _endpoint_limit(e1)
            if lim == 1.0:
                lim = float(
                    hypergeom_poly_eval(sol.m, sol.mu - sol.m, sol.lambda0 + 1.0, 1.0)
                )
            out[idx] = lim
    return float(out[0]) if scalar else out


def hypergeom_flip_eval(z, sol: AehSolution):
    """Companion representation of the polynomial factor in 1/z.

    Equals F(-m, mu - m; lambda0 + 1; z) wherever both series are defined
    (terminating-series argument inversion); used as a cross-check of the
    primary evaluation.  The second parameter lambda1 - mu + m + 1 equals
    -lambda0 - m.
    """
    z = np.asarray(z, dtype=float)
    n = sol.m
    mu, lam0, lam1 = sol.mu, sol.lambda0, sol.lambda1
    ratio = pochhammer(1.0 - mu, n) / pochhammer(-lam0 - n, n)
    zhat = 1.0 / z
    out = (-z) ** n * ratio * hypergeom_poly_eval(
        n, lam1 - mu + n + 1.0, 1.0 - mu, zhat
    )
    return out if out.ndim else float(out)


def solution_eval_x(x, sol: AehSolution, ri: RayIdentifiers, tp: TangentPoly):
    """x-gauge value (z')**(-1/2) Phi(z(x)), composed analytically.

    The Liouville weight and the solution prefactors are merged so the
    tails carry no inf*0 indeterminacy:
    sqrt((z - z_T)/(2(1 - z_T))) z^(l0/2) (1-z)^(l1/2) Pi_m(z),
    with 1-z carried at its own relative precision.
    """
    z, omz = map_x_to_z_pair(x, tp)
    z = np.asarray(z, dtype=float)
    omz = np.asarray(omz, dtype=float)
    scalar = z.ndim == 0
    z = np.atleast_1d(z)
    omz = np.atleast_1d(omz)
    if sol.m <= 25:
        pol = hypergeom_poly_eval(sol.m, sol.mu - sol.m, sol.lambda0 + 1.0, z)
    else:
        pol = hypergeom_poly_jacobi(sol.m, sol.mu - sol.m, sol.lambda0 + 1.0, z)
    w = np.sqrt((z - tp.z_T) / (2.0 * (1.0 - tp.z_T)))
    out = w * z ** (0.5 * sol.lambda0) * omz ** (0.5 * sol.lambda1) * pol
    return float(out[0]) if scalar else out


def eigenfunction_eval_x(x, n: int, ri: RayIdentifiers, tp: TangentPoly,
                         normalize: bool = False,
                         _sols: list[AehSolution] | None = None):
    """n-th bound eigenfunction in the x gauge, (z')**(-1/2) times the
    z-gauge solution; unnormalized unless requested."""
    sols = spectrum(ri, tp) if _sols is None else _sols
    if not 0 <= n < len(sols):
        raise IndexError(f"level n={n} out of range (found {len(sols)})")
    val = solution_eval_x(x, sols[n], ri, tp)
    if normalize:
        val = val / math.sqrt(eigenfunction_norm_sq(n, ri, tp, _sols=sols))
    return val


def eigenfunction_norm_sq(n: int, ri: RayIdentifiers, tp: TangentPoly,
                          _sols: list[AehSolution] | None = None) -> float:
    """L2 norm squared by adaptive quadrature."""
    sols = spectrum(ri, tp) if _sols is None else _sols
    sol = sols[n]
    val, _ = quad(
        lambda x: solution_eval_x(x, sol, ri, tp) ** 2,
        -60.0, 60.0, epsabs=1e-13, epsrel=1e-10, limit=400,
    )
    return val


def count_nodes(f, interval: tuple[float, float], initial: int = 4096,
                cap: int = 2**20) -> int:
    """Strict sign changes of f on the open interval.

    The sampling grid is doubled until two consecutive counts agree;
    exceeding the cap raises ConvergenceError.
    """
    a, b = interval
    prev = None
    n = initial
    while n <= cap:
        xs = np.linspace(a, b, n + 2)[1:-1]
        vals = _eval_grid(f, xs)
        sgn = np.sign(vals)
        sgn = sgn[sgn != 0]
        count = int(np.sum(sgn[:-1] * sgn[1:] < 0))
        if prev == count:
            return count
        prev = count
        n *= 2
    raise ConvergenceError("node count did not stabilize before the grid cap")


def _eval_grid(f, xs: np.ndarray) -> np.ndarray:
    try:
        vals = np.asarray(f(xs), dtype=float)
        if vals.shape == xs.shape:
            return vals
    except Exception:
        pass
    return np.asarray([f(float(x)) for x in xs], dtype=float)
