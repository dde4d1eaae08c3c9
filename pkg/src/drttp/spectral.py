"""Characteristic cubics, solution classification and the discrete spectrum.

Energies of the polynomial-times-exponents solutions are fixed by the real
zeros of a characteristic cubic in either signed exponent difference: the
one at z = 1 (``lambda1``, energy epsilon = -lambda1**2) or the one at
z = 0 (``lambda0``).  The two cubics carry the same information; roots
transfer between them through a rational relation that is regular except on
the a/d double-root hyperbola.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from enum import Enum

from .core import RayIdentifiers, TangentPoly
from .errors import (
    ClassificationError,
    DegenerateLimitError,
    DomainError,
    TransferAmbiguityError,
)

_DEGENERATE_C0_TOL = 1e-12


class Kind(Enum):
    """Solution type tags; C marks normalizable eigenfunctions."""

    A = "a"
    B = "b"
    C = "c"
    D = "d"
    A_PRIME = "a'"
    B_PRIME = "b'"
    D_PRIME = "d'"
    D_DOUBLE_PRIME = "d''"


class CubicVariable(Enum):
    LAMBDA1 = "lambda1_cubic"
    LAMBDA0 = "lambda0_cubic"


class TransferDirection(Enum):
    LAMBDA1_TO_LAMBDA0 = "lambda1_to_lambda0"
    LAMBDA0_TO_LAMBDA1 = "lambda0_to_lambda1"


@dataclass(frozen=True)
class AehSolution:
    """One almost-everywhere-holomorphic solution.

    ``lambda0`` / ``lambda1`` are the signed exponent differences at z = 0
    and z = 1, ``m`` the degree of the polynomial factor, ``mu`` the signed
    exponent difference at infinity and ``epsilon`` the z-gauge energy.
    """

    kind: Kind
    m: int
    lambda0: float
    lambda1: float
    mu: float = field(init=False)
    epsilon: float = field(init=False)
    merged_tail: bool = False  # d-sequence member relabeled from the d'' tail

    def __post_init__(self):
        object.__setattr__(self, "mu", self.lambda0 + self.lambda1 + 2 * self.m + 1)
        object.__setattr__(self, "epsilon", -self.lambda1**2)

    @property
    def label(self) -> str:
        """Type tag; the merged d-tail keeps its provenance mark."""
        if self.kind is Kind.D and self.merged_tail:
            return Kind.D_DOUBLE_PRIME.value
        return self.kind.value


def make_solution(kind: Kind, m: int, lambda0: float, lambda1: float,
                  ri: RayIdentifiers, tp: TangentPoly, *,
                  merged_tail: bool = False, tol: float = 1e-10) -> AehSolution:
    """Build a solution and enforce the defining quadratic constraints."""
    sol = AehSolution(kind, m, lambda0, lambda1, merged_tail=merged_tail)
    scale = 1.0 + ri.mu_o**2 + lambda0**2 + lambda1**2
    r1 = lambda0**2 - (ri.lambda_o**2 + tp.c0 * lambda1**2)
    r2 = sol.mu**2 - (ri.mu_o**2 + tp.a2 * lambda1**2)
    if abs(r1) > tol * scale or abs(r2) > tol * scale:
        raise ClassificationError(
            f"exponent differences violate the defining constraints: "
            f"residuals {r1:.3e}, {r2:.3e}"
        )
    return sol


@dataclass(frozen=True)
class CubicSpec:
    """Characteristic cubic: coeffs[k] multiplies lambda**k (ascending)."""

    variable: CubicVariable
    coeffs: tuple[float, float, float, float]
    discriminant: float
    double_root_vicinity: bool

    def __call__(self, lam):
        c0, c1, c2, c3 = self.coeffs
        return ((c3 * lam + c2) * lam + c1) * lam + c0

    def derivative(self, lam):
        c0, c1, c2, c3 = self.coeffs
        return (3.0 * c3 * lam + 2.0 * c2) * lam + c1


def _check_not_degenerate(tp: TangentPoly):
    if abs(tp.sqrt_c0 - 1.0) < _DEGENERATE_C0_TOL:
        raise DegenerateLimitError("degenerate (Rosen-Morse) limit: c0 == 1")


def cubic_coeffs(m: int, ri: RayIdentifiers, tp: TangentPoly,
                 variable: CubicVariable = CubicVariable.LAMBDA1) -> CubicSpec:
    """Coefficients of the characteristic cubic for one exponent difference.

    The lambda1 cubic determines the energy directly; the lambda0 cubic is
    its companion with the same root information, preferred for root
    selection when c0 > 1 because its pole-free transfer covers Area A_m.
    """
    if m < 0:
        raise DomainError("m must be >= 0")
    _check_not_degenerate(tp)
    s = tp.sqrt_c0
    u = 2.0 * m + 1.0
    L = ri.lambda_o**2
    M = ri.mu_o**2
    if variable is CubicVariable.LAMBDA1:
        c3 = 8.0 * s * (1.0 - s) * u
        c2 = -4.0 * (s * (M - L - u * u) + L + (s * s - 1.0) * u * u)
        c1 = -4.0 * u * (M + L - u * u)
        c0 = (M - (ri.lambda_o - u) ** 2) * (M - (ri.lambda_o + u) ** 2)
    else:
        c3 = 8.0 * u * (s - 1.0)
        c2 = 4.0 * ((s * s + s - 1.0) * u * u + (s - 1.0) * L - s * M)
        c1 = -4.0 * u * (s * s * (M - u * u) - (s * s - 2.0 * s + 2.0) * L)
        c0 = (s * (M - u * u) + (2.0 - s) * L) ** 2 + 4.0 * L * u * u
    coeffs = (float(c0), float(c1), float(c2), float(c3))
    delta0 = c2 * c2 - 3.0 * c3 * c1
    delta1 = 2.0 * c2**3 - 9.0 * c3 * c2 * c1 + 27.0 * c3 * c3 * c0
    big = 4.0 * delta0**3 - delta1**2  # = 27 a^2 * (standard discriminant)
    disc = big / (27.0 * c3 * c3)
    scale = max(abs(v) for v in coeffs)
    vicinity = abs(big) < 1e-12 * scale**6
    return CubicSpec(variable, coeffs, disc, vicinity)


_CUBE_ROOTS_UNITY = (
    complex(1.0, 0.0),
    cmath.exp(2j * math.pi / 3.0),
    cmath.exp(-2j * math.pi / 3.0),
)


def real_cubic_roots(spec: CubicSpec) -> list[float]:
    """Real roots of the characteristic cubic, ascending, with multiplicity.

    Three real roots are produced by the complex-cube-root prescription
    (principal cube root of delta1/2 + i sqrt(4 delta0^3 - delta1^2)/2,
    combined with the three cube roots of -1), then polished with two
    Newton steps.  A trigonometric evaluation is the fallback when the
    imaginary part underflows; a negative discriminant yields the single
    real root by the real Cardano branch.
    """
    c0, c1, c2, c3 = spec.coeffs
    a, b, c, d = c3, c2, c1, c0
    if a == 0.0:
        raise DomainError("leading coefficient vanished; cubic expected")
    delta0 = b * b - 3.0 * a * c
    delta1 = 2.0 * b**3 - 9.0 * a * b * c + 27.0 * a * a * d
    big = 4.0 * delta0**3 - delta1**2
    scale6 = max(abs(v) for v in spec.coeffs) ** 6

    if big > 1e-28 * scale6:
        # three distinct real roots; |C|^2 = delta0 makes 2 Re(u C) exact
        C = (0.5 * delta1 + 0.5j * math.sqrt(big)) ** (1.0 / 3.0)
        roots = [
            -(b + 2.0 * (u * C).real) / (3.0 * a) for u in _CUBE_ROOTS_UNITY
        ]
    elif big >= 0.0:
        # imaginary part underflows: trigonometric form, handles double roots
        if delta0 <= 0.0:
            roots = [-b / (3.0 * a)] * 3
        else:
            arg = delta1 / (2.0 * delta0**1.5)
            theta = math.acos(min(1.0, max(-1.0, arg)))
            roots = [
                -(b + 2.0 * math.sqrt(delta0) * math.cos((theta - 2.0 * math.pi * k) / 3.0))
                / (3.0 * a)
                for k in range(3)
            ]
    else:
        # one real root
        sq = math.sqrt(-big)
        t = 0.5 * (delta1 + sq) if delta1 >= 0.0 else 0.5 * (delta1 - sq)
        Cr = math.copysign(abs(t) ** (1.0 / 3.0), t)
        roots = [-(b + Cr + delta0 / Cr) / (3.0 * a)] if Cr != 0.0 else [-b / (3.0 * a)]

    polished = []
    for r in roots:
        for _ in range(2):
            dp = spec.derivative(r)
            if dp == 0.0:
                break
            r -= spec(r) / dp
        polished.append(float(r))
    return sorted(polished)


def expdiff_transfer(known: float, m: int, ri: RayIdentifiers, tp: TangentPoly,
                     direction: TransferDirection) -> float:
    """Transfer one signed exponent difference to its companion.

    Raises
    ------
    TransferAmbiguityError
        When the denominator ``known + 2m + 1`` vanishes (the a/d-hyperbola
        double point); the caller must use the companion cubic instead.
    """
    s = tp.sqrt_c0
    u = 2.0 * m + 1.0
    den = known + u
    if abs(den) <= 1e-9 * max(1.0, abs(known), u):
        raise TransferAmbiguityError(
            "a/d-hyperbola ambiguity: |lambda + 2m + 1| ~ 0"
        )
    if direction is TransferDirection.LAMBDA1_TO_LAMBDA0:
        num = ri.mu_o**2 - ri.lambda_o**2 + (1.0 - 2.0 * s) * known**2 - den**2
    else:
        num = ri.mu_o**2 - den**2 + (1.0 - 2.0 / s) * (known**2 - ri.lambda_o**2)
    return num / (2.0 * den)


def bound_state_count(mu_o: float, lambda_o: float = 0.0) -> int:
    """Number of bound levels, ceil((mu_o - lambda_o - 1)/2), floored at 0."""
    if mu_o <= 0.0:
        raise DomainError("mu_o must be positive")
    n = math.ceil((mu_o - lambda_o - 1.0) / 2.0)
    return max(0, n)


def wl_gm(m: int, mu_o: float) -> float:
    """Linear-branch numerator (2m+1)**2 - mu_o**2 of the levelled limit."""
    return (2.0 * m + 1.0) ** 2 - mu_o**2


def wl_quadratic_discriminant(m: int, mu_o: float, tp: TangentPoly) -> float:
    """Discriminant of the levelled-limit quadratic branch; always >= 0."""
    s = tp.sqrt_c0
    u = 2.0 * m + 1.0
    return 4.0 * (u * u * (s - 1.0) ** 2 + 4.0 * s * mu_o**2)


def wl_solve(m: int, mu_o: float, tp: TangentPoly) -> list[AehSolution]:
    """All three solutions of the asymptotically-levelled limit at degree m.

    Returns the linear-branch solution (type a/b or a'/b' by the sign of
    mu_o - 2m - 1 and the c0 branch) plus the two quadratic-branch roots
    (types c/d' and d).  Energies are epsilon = -lambda1**2.
    """
    _check_not_degenerate(tp)
    ri = RayIdentifiers(0.0, mu_o)
    s = tp.sqrt_c0
    u = 2.0 * m + 1.0
    g = wl_gm(m, mu_o)
    out = []

    lam1_lin = g / (2.0 * (s - 1.0) * u)
    if mu_o > u:
        kind_lin = Kind.A if s > 1.0 else Kind.B
    else:
        kind_lin = Kind.A_PRIME if s < 1.0 else Kind.B_PRIME
    out.append(make_solution(kind_lin, m, -s * lam1_lin, lam1_lin, ri, tp))

    rt = math.sqrt(wl_quadratic_discriminant(m, mu_o, tp))
    lam1_up = (-2.0 * (s + 1.0) * u + rt) / (8.0 * s)
    lam1_dn = (-2.0 * (s + 1.0) * u - rt) / (8.0 * s)
    kind_up = Kind.C if mu_o > u else Kind.D_PRIME
    out.append(make_solution(kind_up, m, s * lam1_up, lam1_up, ri, tp))
    out.append(make_solution(Kind.D, m, s * lam1_dn, lam1_dn, ri, tp,
                             merged_tail=mu_o < u))
    return out


class Region(Enum):
    A = "A"
    B = "B"
    C = "C"
    D = "D"


def classify_region(m: int, ri: RayIdentifiers,
                    boundary_tol: float = 1e-12) -> tuple[Region, list[str]]:
    """Locate (lambda_o, mu_o) among the four zero-energy separatrix areas.

    Returns the strict-inequality region and the list of separatrix flags
    ("A|D", "B|D", "C|D") active at the point; boundary points classify
    as D with the corresponding flag set.
    """
    u = 2.0 * m + 1.0
    lo, mo = ri.lambda_o, ri.mu_o
    scale = max(1.0, abs(lo), abs(mo), u)
    flags = []
    if abs(mo - (lo + u)) <= boundary_tol * scale:
        flags.append("A|D")
    if abs(mo + lo - u) <= boundary_tol * scale:
        flags.append("B|D")
    if abs(mo - (lo - u)) <= boundary_tol * scale:
        flags.append("C|D")
    if flags:
        return Region.D, flags
    if mo > lo + u:
        return Region.A, flags
    if mo + lo < u:
        return Region.B, flags
    if mo < lo - u:
        return Region.C, flags
    return Region.D, flags


def _negative_pair_rank(lambda1: float, m: int, ri: RayIdentifiers,
                        tp: TangentPoly) -> bool:
    """True when lambda1 is the upper of the cubic's both-negative roots."""
    spec = cubic_coeffs(m, ri, tp, CubicVariable.LAMBDA1)
    roots = real_cubic_roots(spec)
    neg = []
    for r in roots:
        try:
            l0 = expdiff_transfer(r, m, ri, tp, TransferDirection.LAMBDA1_TO_LAMBDA0)
        except TransferAmbiguityError:
            continue
        if r < 0.0 and l0 < 0.0:
            neg.append(r)
    if not neg:
        raise ClassificationError("no matching negative-pair root found")
    nearest = min(neg, key=lambda r: abs(r - lambda1))
    if abs(nearest - lambda1) > 1e-6 * max(1.0, abs(lambda1)):
        raise ClassificationError("lambda1 does not match any cubic root")
    return nearest == max(neg)


def classify_solution(lambda0: float, lambda1: float, m: int,
                      ri: RayIdentifiers, tp: TangentPoly) -> Kind:
    """Type tag from the sign pattern, continued in lambda_o from the
    levelled-limit conventions.

    Eigenfunctions (kind C) have both exponent differences positive; the
    both-negative pattern splits into the primary d sequence and the
    supplementary d' by rank among the cubic's roots.
    """
    scale = 1.0 + ri.mu_o**2 + lambda0**2 + lambda1**2
    if abs(lambda0**2 - ri.lambda_o**2 - tp.c0 * lambda1**2) > 1e-8 * scale:
        raise ClassificationError("pair violates the z=0 quadratic constraint")
    u = 2.0 * m + 1.0
    if abs(lambda1) < 1e-12:
        # zero-energy threshold: take the one-sided limit in mu_o
        ri_up = RayIdentifiers(ri.lambda_o, ri.mu_o * (1.0 + 1e-7) + 1e-12)
        spec = cubic_coeffs(m, ri_up, tp, CubicVariable.LAMBDA1)
        roots = real_cubic_roots(spec)
        lam1 = min(roots, key=abs)
        lam0 = expdiff_transfer(lam1, m, ri_up, tp,
                                TransferDirection.LAMBDA1_TO_LAMBDA0)
        return classify_solution(lam0, lam1, m, ri_up, tp)
    if lambda0 > 0.0 and lambda1 > 0.0:
        if ri.mu_o <= u:
            raise ClassificationError("positive pair requires mu_o > 2m + 1")
        return Kind.C
    if lambda0 > 0.0 and lambda1 < 0.0:
        return Kind.A if ri.mu_o > u else Kind.A_PRIME
    if lambda0 < 0.0 and lambda1 > 0.0:
        return Kind.B if ri.mu_o > u else Kind.B_PRIME
    if ri.mu_o > u:
        return Kind.D
    return Kind.D_PRIME if _negative_pair_rank(lambda1, m, ri, tp) else Kind.D


@dataclass(frozen=True)
class NodelessCensus:
    """Closed-form bounds on nodeless below-ground solutions."""

    m_plus_c0: float | None        # primary sequence bound (in m)
    m_minus_c0: float | None       # supplementary sequence bound (in m)
    count_primary_nodeless: int | None   # min-rule count for a_m / b_m
    constraint_secondary_ok: bool | None
    mu_cross_slope: float | None   # mu_x;m = slope * (2m + 1), c0 > 1 only
    hyperbola_residuals: tuple[float, ...]

    def primary_nodeless(self, m: int) -> bool:
        if self.m_plus_c0 is None:
            return False
        return m < self.m_plus_c0

    def supplementary_nodeless(self, m: int) -> bool:
        if self.m_minus_c0 is None:
            return False
        return m > self.m_minus_c0


def nodeless_census(ri: RayIdentifiers, tp: TangentPoly,
                    m_range: int = 6) -> NodelessCensus:
    """Bounds selecting the below-ground (hence nodeless) solutions.

    The c-referenced bounds require a nonempty spectrum (mu_o > 1); they
    are reported as None otherwise.
    """
    s = tp.sqrt_c0
    mo = ri.mu_o
    u_h = [2.0 * m + 1.0 for m in range(m_range)]
    hyper = tuple(
        mo**2 - ri.lambda_o**2 + (1.0 - 2.0 * s) * u * u for u in u_h
    )
    slope = math.sqrt(2.0 * s - 1.0) if (tp.c0 > 1.0 and 2.0 * s > 1.0) else None
    if mo <= 1.0:
        return NodelessCensus(None, None, None, None, slope, hyper)

    rt = math.sqrt(wl_quadratic_discriminant(0, mo, tp))
    lam1_c0 = (-2.0 * (s + 1.0) + rt) / (8.0 * s)
    delta = abs(s - 1.0) * lam1_c0
    v_plus = -delta + math.sqrt(delta * delta + mo * mo)
    v_minus = delta + math.sqrt(delta * delta + mo * mo)
    m_plus = (v_plus - 1.0) / 2.0
    m_minus = (v_minus - 1.0) / 2.0

    if tp.c0 > 1.0:
        count = min(math.floor(m_plus), math.floor((mo - ri.lambda_o - 1.0) / 2.0))
        constraint_ok = None
    else:
        count = min(math.floor(m_plus), math.floor((mo + ri.lambda_o - 1.0) / 2.0))
        constraint_ok = ri.lambda_o < mo + 2.0 * math.floor(m_plus) + 1.0
    count = max(count, -1)
    return NodelessCensus(m_plus, m_minus, count, constraint_ok, slope, hyper)


@dataclass(frozen=True)
class AsymptoticSlopes:
    """Large-m slopes tau of lambda ~ (m + 1/2) tau, by sequence."""

    tau1_linear: float      # a'/b' supplementary tail
    tau1_d: float           # primary d tail
    tau1_d_tail: float      # relabeled d'' tail
    tau0_linear: float
    tau0_d: float
    tau0_d_tail: float

    def cubic_residual(self, tau: float, tp: TangentPoly) -> float:
        s = tp.sqrt_c0
        return (
            8.0 * s * (1.0 - s) * tau**3
            + 4.0 * (1.0 + s - s * s) * tau**2
            + 4.0 * tau
            + 1.0
        )

    @staticmethod
    def tau0_fraction(t1: float, tp: TangentPoly) -> float:
        """Companion-slope fraction; pole at t1 = -1 is removable."""
        s = tp.sqrt_c0
        return (-2.0 * s * t1 * t1 - 2.0 * t1 - 1.0) / (2.0 * (t1 + 1.0))


def asymptotic_tau(tp: TangentPoly) -> AsymptoticSlopes:
    """Closed-form large-m slopes; all are roots of the slope cubic.

    The companion tau0 values use the exact pair relations (-/+ sqrt(c0)
    times tau1); the rational fraction form is exposed separately for
    cross-checking away from its removable pole.
    """
    _check_not_degenerate(tp)
    s = tp.sqrt_c0
    t_lin = 1.0 / (2.0 * (s - 1.0))
    if tp.c0 > 1.0:
        t_d, t_tail = -1.0 / (2.0 * s), -0.5
    else:
        t_d, t_tail = -0.5, -1.0 / (2.0 * s)
    return AsymptoticSlopes(
        t_lin, t_d, t_tail, -s * t_lin, s * t_d, s * t_tail
    )


def _select_c_root(n: int, ri: RayIdentifiers, tp: TangentPoly,
                   variable: CubicVariable) -> tuple[float, float]:
    """One admissible (lambda0, lambda1) pair of kind C at degree n."""
    spec = cubic_coeffs(n, ri, tp, variable)
    roots = real_cubic_roots(spec)
    cands = []
    for r in roots:
        if variable is CubicVariable.LAMBDA0:
            if r <= 0.0:
                continue
            lam1 = expdiff_transfer(r, n, ri, tp,
                                    TransferDirection.LAMBDA0_TO_LAMBDA1)
            pair = (r, lam1)
        else:
            if r <= 0.0:
                continue
            lam0 = expdiff_transfer(r, n, ri, tp,
                                    TransferDirection.LAMBDA1_TO_LAMBDA0)
            pair = (lam0, r)
        if pair[0] > 0.0 and pair[1] > 0.0:
            cands.append(pair)
    if len(cands) != 1:
        raise ClassificationError(
            f"expected exactly one admissible eigen-root at n={n}, "
            f"found {len(cands)}"
        )
    return cands[0]


def spectrum(ri: RayIdentifiers, tp: TangentPoly) -> list[AehSolution]:
    """Discrete spectrum as kind-C solutions with strictly increasing energy.

    Root selection uses the lambda0 cubic (transfer regular throughout the
    discrete-spectrum area) when c0 > 1 and the lambda1 cubic when c0 < 1;
    if a transfer lands on the a/d-hyperbola pole the companion cubic is
    used for that level.  Near a double root the level is re-derived at
    lambda_o +/- 1e-9 and checked for continuity.
    """
    _check_not_degenerate(tp)
    n0 = bound_state_count(ri.mu_o, ri.lambda_o)
    primary = (CubicVariable.LAMBDA0 if tp.c0 > 1.0 else CubicVariable.LAMBDA1)
    companion = (CubicVariable.LAMBDA1 if tp.c0 > 1.0 else CubicVariable.LAMBDA0)
    out = []
    for n in range(n0):
        try:
            lam0, lam1 = _select_c_root(n, ri, tp, primary)
        except TransferAmbiguityError:
            lam0, lam1 = _select_c_root(n, ri, tp, companion)
        spec = cubic_coeffs(n, ri, tp, primary)
        if spec.double_root_vicinity and ri.lambda_o > 2e-9:
            eps_ref = -lam1**2
            for sgn in (+1.0, -1.0):
                ri_p = RayIdentifiers(ri.lambda_o + sgn * 1e-9, ri.mu_o)
                _, lam1_p = _select_c_root(n, ri_p, tp, primary)
                if abs(-lam1_p**2 - eps_ref) > 1e-6 * max(1.0, abs(eps_ref)):
                    raise ClassificationError(
                        f"root selection discontinuous near double root at n={n}"
                    )
        out.append(make_solution(Kind.C, n, lam0, lam1, ri, tp))
    energies = [s.epsilon for s in out]
    if any(e >= 0.0 for e in energies) or any(
        b <= a for a, b in zip(energies, energies[1:])
    ):
        raise ClassificationError("spectrum not strictly increasing below zero")
    return out


def energy_of(sol: AehSolution) -> float:
    """Canonical x-gauge eigenvalue; equals the z-gauge epsilon."""
    return sol.epsilon


def basic_solutions(ri: RayIdentifiers, tp: TangentPoly) -> dict[Kind, AehSolution]:
    """The three m = 0 basic solutions, keyed by kind.

    Requires a point with a nonempty spectrum (Area A_0) so that all three
    types coexist.
    """
    region, _ = classify_region(0, ri)
    if region is not Region.A:
        from .errors import AvailabilityError

        raise AvailabilityError(
            "basic-solution triple requires mu_o > lambda_o + 1 (Area A_0)"
        )
    variable = CubicVariable.LAMBDA0 if tp.c0 > 1.0 else CubicVariable.LAMBDA1
    spec = cubic_coeffs(0, ri, tp, variable)
    out: dict[Kind, AehSolution] = {}
    for r in real_cubic_roots(spec):
        if variable is CubicVariable.LAMBDA0:
            lam0 = r
            lam1 = expdiff_transfer(r, 0, ri, tp,
                                    TransferDirection.LAMBDA0_TO_LAMBDA1)
        else:
            lam1 = r
            lam0 = expdiff_transfer(r, 0, ri, tp,
                                    TransferDirection.LAMBDA1_TO_LAMBDA0)
        kind = classify_solution(lam0, lam1, 0, ri, tp)
        out[kind] = make_solution(kind, 0, lam0, lam1, ri, tp)
    return out
