"""Jacobi polynomials with overflow-safe scaled arithmetic.

Evaluation uses the three-term recurrence carried in :class:`ScaledValue`
numbers ``mantissa * exp(log_scale)``.  With parameters a, b comparable to
the degree n, raw polynomial values overflow doubles past n of a few hundred
while the quantities that matter downstream (kernel values) stay moderate,
so every product here is assembled in log scale and exponentiated last.

Polynomial normalization: P_n(1) equals the binomial coefficient C(n+a, n).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, ParameterError

__all__ = [
    "ScaledValue",
    "InteriorAsymptotics",
    "jacobi_eval",
    "jacobi_pair",
    "jacobi_deriv",
    "weight",
    "gamma_n",
    "gamma_n_stirling",
    "log_sq_norm",
    "chi",
    "chi_prime",
    "chi_numerator",
    "g_n",
    "interior_asymptotic",
]

_LN2 = math.log(2.0)


@dataclass
class ScaledValue:
    """A real number stored as ``mantissa * exp(log_scale)``.

    After normalization the mantissa lies in [1, 2) up to sign, or is 0.
    """

    mantissa: float
    log_scale: float = 0.0

    def __post_init__(self):
        self._normalize()

    def _normalize(self) -> None:
        m = self.mantissa
        if m == 0.0 or not math.isfinite(m):
            self.mantissa = m
            self.log_scale = 0.0 if m == 0.0 else self.log_scale
            return
        fr, ex = math.frexp(m)  # m = fr * 2**ex, |fr| in [0.5, 1)
        self.mantissa = fr * 2.0
        self.log_scale += (ex - 1) * _LN2

    @classmethod
    def from_float(cls, v: float) -> "ScaledValue":
        return cls(float(v), 0.0)

    @classmethod
    def from_log(cls, log_abs: float, sign: float = 1.0) -> "ScaledValue":
        if sign == 0.0:
            return cls(0.0, 0.0)
        return cls(math.copysign(1.0, sign), log_abs)

    def value(self) -> float:
        """Collapse to a plain double (inf on overflow, 0 on underflow)."""
        if self.mantissa == 0.0:
            return 0.0
        try:
            return self.mantissa * math.exp(self.log_scale)
        except OverflowError:
            return math.copysign(math.inf, self.mantissa)

    def log_abs(self) -> float:
        if self.mantissa == 0.0:
            return -math.inf
        return math.log(abs(self.mantissa)) + self.log_scale

    @property
    def sign(self) -> float:
        if self.mantissa == 0.0:
            return 0.0
        return math.copysign(1.0, self.mantissa)

    def __mul__(self, other):
        if isinstance(other, ScaledValue):
            return ScaledValue(self.mantissa * other.mantissa, self.log_scale + other.log_scale)
        return ScaledValue(self.mantissa * float(other), self.log_scale)

    __rmul__ = __mul__

    def __neg__(self):
        return ScaledValue(-self.mantissa, self.log_scale)

    def __add__(self, other):
        if not isinstance(other, ScaledValue):
            other = ScaledValue.from_float(other)
        if self.mantissa == 0.0:
            return ScaledValue(other.mantissa, other.log_scale)
        if other.mantissa == 0.0:
            return ScaledValue(self.mantissa, self.log_scale)
        # align on the larger scale; the other operand underflows harmlessly
        if self.log_scale >= other.log_scale:
            big, small = self, other
        else:
            big, small = other, self
        shift = small.log_scale - big.log_scale
        if shift < -745.0:
            return ScaledValue(big.mantissa, big.log_scale)
        return ScaledValue(big.mantissa + small.mantissa * math.exp(shift), big.log_scale)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, ScaledValue):
            other = ScaledValue.from_float(other)
        return self + (-other)

    def __repr__(self):
        return f"ScaledValue({self.mantissa!r}, {self.log_scale!r})"


def _validate_params(n: int, a: float, b: float) -> None:
    if n < 0:
        raise ParameterError(f"degree must be >= 0, got {n}")
    if a < 0 or b < 0:
        raise ParameterError(f"parameters must be >= 0, got a={a}, b={b}")


def _log_binom(top: float, k: int) -> float:
    # log C(top, k) for real top >= k >= 0
    return math.lgamma(top + 1.0) - math.lgamma(top - k + 1.0) - math.lgamma(k + 1.0)


def jacobi_pair(n: int, a: float, b: float, x: float) -> tuple[ScaledValue, ScaledValue]:
    """(P_{n-1}, P_n) at x by the forward three-term recurrence.

    One pass gives the two consecutive degrees every kernel formula needs.
    P_{-1} is 0 by convention.  The recurrence coefficients stay O(1) even
    for a, b of order n, so only the values themselves need rescaling.
    """
    _validate_params(n, a, b)
    if n == 0:
        return ScaledValue.from_float(0.0), ScaledValue.from_float(1.0)
    pm = ScaledValue.from_float(1.0)
    p = ScaledValue.from_float((a + b + 2.0) * x / 2.0 + (a - b) / 2.0)
    for k in range(2, n + 1):
        t = 2.0 * k + a + b
        c1 = 2.0 * k * (k + a + b) * (t - 2.0)
        c2 = (t - 1.0) * (t * (t - 2.0) * x + a * a - b * b)
        c3 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * t
        pm, p = p, (c2 / c1) * p - (c3 / c1) * pm
    return pm, p


def jacobi_eval(n: int, a: float, b: float, x: float) -> ScaledValue:
    """P_n^{a,b}(x) in scaled form; exact at x = +-1 via binomial formulas."""
    _validate_params(n, a, b)
    if x == 1.0:
        return ScaledValue.from_log(_log_binom(n + a, n))
    if x == -1.0:
        return ScaledValue.from_log(_log_binom(n + b, n), sign=(-1.0) ** (n % 2))
    return jacobi_pair(n, a, b, x)[1]


def jacobi_deriv(n: int, a: float, b: float, x: float) -> ScaledValue:
    """(P_n^{a,b})'(x) = (n+a+b+1)/2 * P_{n-1}^{a+1,b+1}(x)."""
    _validate_params(n, a, b)
    if n == 0:
        return ScaledValue.from_float(0.0)
    return 0.5 * (n + a + b + 1.0) * jacobi_eval(n - 1, a + 1.0, b + 1.0, x)


def weight(a: float, b: float, x: float) -> ScaledValue:
    """(1-x)^a (1+x)^b on [-1, 1], computed through logs."""
    if not -1.0 <= x <= 1.0:
        raise DomainError(f"x={x} outside [-1, 1]")
    if a < 0 or b < 0:
        raise ParameterError(f"parameters must be >= 0, got a={a}, b={b}")
    log_w = 0.0
    for expo, base in ((a, 1.0 - x), (b, 1.0 + x)):
        if base == 0.0:
            if expo > 0:
                return ScaledValue.from_float(0.0)
            # expo == 0: factor is 1
        elif expo != 0.0:
            log_w += expo * math.log(base)
    return ScaledValue.from_log(log_w)


def gamma_n(n: int, a: float, b: float) -> ScaledValue:
    """Christoffel-Darboux normalization constant of the degree-n kernel.

    gamma_n = 2^{-a-b}/(2n+a+b) * Gamma(n+1)Gamma(n+a+b+1) /
    (Gamma(n+a)Gamma(n+b)), evaluated through log-Gamma.  Needs n >= 1:
    for n >= 1 and a, b >= 0 no Gamma argument can hit a pole.
    """
    if n < 1:
        raise ParameterError(f"gamma_n needs n >= 1, got {n}")
    _validate_params(n, a, b)
    log_g = (
        -(a + b) * _LN2
        - math.log(2.0 * n + a + b)
        + math.lgamma(n + 1.0)
        + math.lgamma(n + a + b + 1.0)
        - math.lgamma(n + a)
        - math.lgamma(n + b)
    )
    return ScaledValue.from_log(log_g)


def gamma_n_stirling(n: int, a: float, b: float) -> ScaledValue:
    """Leading-order Stirling approximant of :func:`gamma_n`.

    n * 2^{-a-b} (1+al+be)^{n+a+b+1/2} / ((1+al)^{n+a-1/2} (1+be)^{n+b-1/2}
    (2+al+be)) with al = a/n, be = b/n; accurate to relative O(1/n).
    """
    if n < 1:
        raise ParameterError(f"needs n >= 1, got {n}")
    al = a / n
    be = b / n
    log_g = (
        math.log(n)
        - (a + b) * _LN2
        + (n + a + b + 0.5) * math.log1p(al + be)
        - (n + a - 0.5) * math.log1p(al)
        - (n + b - 0.5) * math.log1p(be)
        - math.log(2.0 + al + be)
    )
    return ScaledValue.from_log(log_g)


def log_sq_norm(n: int, a: float, b: float) -> float:
    """log of the squared L2 norm of P_n^{a,b} under the bare weight on [-1,1]."""
    _validate_params(n, a, b)
    return (
        (a + b + 1.0) * _LN2
        - math.log(2.0 * n + a + b + 1.0)
        + math.lgamma(n + a + 1.0)
        + math.lgamma(n + b + 1.0)
        - math.lgamma(n + 1.0)
        - math.lgamma(n + a + b + 1.0)
    )


def chi(n: int, a: float, b: float, x: float) -> float:
    """Coefficient function of the second-order ODE satisfied by g_n.

    chi(x) = (1-a^2)/(4(1-x)^2) + (1-b^2)/(4(1+x)^2)
             + (2n(n+a+b+1) + (a+1)(b+1)) / (2(1-x^2)).

    Sign convention: with this definition the weighted polynomial g_n obeys
    g_n'' = -chi * g_n, so chi > 0 on the oscillatory band and chi < 0
    outside it once a, b > 1.
    """
    if not -1.0 < x < 1.0:
        raise DomainError(f"x={x} outside (-1, 1)")
    big = 2.0 * n * (n + a + b + 1.0) + (a + 1.0) * (b + 1.0)
    return (
        (1.0 - a * a) / (4.0 * (1.0 - x) ** 2)
        + (1.0 - b * b) / (4.0 * (1.0 + x) ** 2)
        + big / (2.0 * (1.0 - x * x))
    )


def chi_prime(n: int, a: float, b: float, x: float) -> float:
    """Analytic x-derivative of :func:`chi`."""
    if not -1.0 < x < 1.0:
        raise DomainError(f"x={x} outside (-1, 1)")
    big = 2.0 * n * (n + a + b + 1.0) + (a + 1.0) * (b + 1.0)
    return (
        (1.0 - a * a) / (2.0 * (1.0 - x) ** 3)
        - (1.0 - b * b) / (2.0 * (1.0 + x) ** 3)
        + big * x / (1.0 - x * x) ** 2
    )


def chi_numerator(n: int, a: float, b: float) -> tuple[float, float, float]:
    """Quadratic (c2, c1, c0) with chi(x) = (c2 x^2 + c1 x + c0) / (4(1-x^2)^2).

    chi's zeros are the roots of this quadratic; c2 < 0 for all n >= 1.
    """
    big = 2.0 * n * (n + a + b + 1.0) + (a + 1.0) * (b + 1.0)
    c2 = 2.0 - a * a - b * b - 2.0 * big
    c1 = 2.0 * (b * b - a * a)
    c0 = 2.0 - a * a - b * b + 2.0 * big
    return c2, c1, c0


def g_n(n: int, a: float, b: float, x: float) -> ScaledValue:
    """(1-x)^{(a+1)/2} (1+x)^{(b+1)/2} P_n^{a,b}(x), the ODE-normalized form."""
    return weight((a + 1.0) / 2.0, (b + 1.0) / 2.0, x) * jacobi_eval(n, a, b, x)


@dataclass(frozen=True)
class InteriorAsymptotics:
    """Local oscillation data of P_n^{a,b} at a bulk point (Delta < 0)."""

    Delta: float
    rho: float
    theta: float
    gamma: float


def oscillation_angles(n: int, a: float, b: float, x: float) -> InteriorAsymptotics:
    """Discriminant and polar angles of the bulk oscillation at x.

    Delta = [al(x+1) + be(x-1)]^2 - 4(1+al+be)(1-x^2) with al = a/n,
    be = b/n; the three angles in (-pi, pi] are the arguments of the complex
    quantities whose moduli encode the local amplitude factors.  Only defined
    where Delta < 0 (the oscillatory band).
    """
    al = a / n
    be = b / n
    lin = al * (x + 1.0) + be * (x - 1.0)
    delta = lin * lin - 4.0 * (1.0 + al + be) * (1.0 - x * x)
    if delta >= 0.0:
        raise DomainError(f"Delta={delta:.3e} >= 0 at x={x}; not in the oscillatory band")
    root = math.sqrt(-delta)
    rho = math.atan2(root, lin)
    theta = math.atan2(root, (3.0 * al + be + 2.0) - (al + be + 2.0) * x)
    gamma = math.atan2(-root, (al + be + 2.0) * x + (al + 3.0 * be + 2.0))
    return InteriorAsymptotics(Delta=delta, rho=rho, theta=theta, gamma=gamma)


def _phase_to_edge(c2: float, r: float, s: float, x: float) -> float:
    """Closed form of the WKB phase integral of sqrt(chi) from x to s.

    Integrates sqrt(|c2|(s-t)(t-r)) / (2(1-t^2)) dt over [x, s] by partial
    fractions in 1/(1-t), 1/(1+t); each piece has an elementary
    antiderivative in the angle psi = arcsin((t-m)/d).
    """
    m = 0.5 * (r + s)
    d = 0.5 * (s - r)

    def anti(c: float, t: float) -> float:
        e = c - m
        kap = d / e
        u = min(1.0, max(-1.0, (t - m) / d))
        psi = math.asin(u)
        root = math.sqrt(1.0 - kap * kap)
        arc = math.atan((math.tan(psi / 2.0) - kap) / root)
        return e * psi - d * math.cos(psi) - 2.0 * e * root * arc

    part_plus = anti(1.0, s) - anti(1.0, x)
    part_minus = -(anti(-1.0, s) - anti(-1.0, x))
    return 0.25 * math.sqrt(-c2) * (part_plus + part_minus)


def interior_asymptotic(n: int, a: float, b: float, x: float) -> ScaledValue:
    """Leading-order approximation of P_n^{a,b}(x) in the oscillatory band.

    WKB (Liouville-Green) solution of the ODE g_n'' = -chi g_n anchored at
    the upper turning point: amplitude C * chi^{-1/4} with C fixed by the
    L2 normalization of P_n, phase the closed-form integral of sqrt(chi).
    Documented accuracy: relative O(1/n) on compacts of the open band; this
    is a validation oracle, not a primary computation path.

    Requires Delta < 0 and both turning points of chi inside (-1, 1), which
    holds once a, b > 1 (the large-parameter regime the oracle exists for).
    """
    if n < 1:
        raise ParameterError(f"needs n >= 1, got {n}")
    # raises DomainError when Delta >= 0
    oscillation_angles(n, a, b, x)
    if a <= 1.0 or b <= 1.0:
        raise DomainError(
            f"turning points of chi leave (-1,1) for a={a}, b={b}; oracle needs a, b > 1"
        )
    c2, c1, c0 = chi_numerator(n, a, b)
    disc = c1 * c1 - 4.0 * c2 * c0
    sd = math.sqrt(disc)
    r1 = (-c1 - sd) / (2.0 * c2)
    r2 = (-c1 + sd) / (2.0 * c2)
    r, s = min(r1, r2), max(r1, r2)
    q = -c2 * (s - x) * (x - r)
    if q <= 0.0 or not (r < x < s):
        raise DomainError(f"x={x} outside the finite-n oscillatory band ({r:.6f}, {s:.6f})")
    log_c = 0.5 * (log_sq_norm(n, a, b) + 0.5 * math.log(-c2) - math.log(math.pi))
    log_amp = (
        log_c
        + 0.25 * math.log(4.0 * (1.0 - x * x) ** 2 / q)
        - 0.5 * (a + 1.0) * math.log(1.0 - x)
        - 0.5 * (b + 1.0) * math.log(1.0 + x)
    )
    phase = _phase_to_edge(c2, r, s, x)
    return ScaledValue.from_float(math.cos(phase - math.pi / 4.0)) * ScaledValue.from_log(log_amp)
