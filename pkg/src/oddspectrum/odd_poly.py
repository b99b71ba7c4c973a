"""Odd polynomials, Chebyshev polynomials of the first kind, and the
spectrum-dependent certificate polynomial used in the high-lambda1 regime.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import HypothesisError
from .spectral import Spectrum, _kahan_sum

# Above this degree the expanded certificate coefficients blow up and cancel
# catastrophically; the factored evaluator is used instead.
EXPANSION_DEGREE_LIMIT = 31


@dataclass(frozen=True)
class OddPolynomial:
    """Polynomial with only odd-exponent monomials: coeffs[i] multiplies x^(2i+1).

    Trailing zero coefficients are stripped on construction, so degree is
    determined by the stored tuple. satisfies p(-x) = -p(x) identically.
    """

    coeffs: tuple[float, ...]

    def __post_init__(self):
        vals = [float(c) for c in self.coeffs]
        while vals and vals[-1] == 0.0:
            vals.pop()
        object.__setattr__(self, "coeffs", tuple(vals))

    @property
    def degree(self) -> int:
        """Highest odd exponent with a nonzero coefficient; -1 for the zero polynomial."""
        if not self.coeffs:
            return -1
        return 2 * len(self.coeffs) - 1

    def evaluate(self, x: float) -> float:
        """Horner evaluation in x^2, multiplied by x."""
        y = x * x
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * y + c
        return acc * x

    @classmethod
    def monomial(cls, degree: int, coefficient: float = 1.0) -> "OddPolynomial":
        if degree < 1 or degree % 2 == 0:
            raise ValueError(f"monomial degree must be odd and positive, got {degree}")
        coeffs = [0.0] * ((degree + 1) // 2)
        coeffs[-1] = coefficient
        return cls(tuple(coeffs))


@dataclass(frozen=True)
class FactoredOddPolynomial:
    """x^exponent * prod_r (x^2 - r^2)^2, kept in factored form.

    Same evaluation contract as OddPolynomial, without ever expanding the
    coefficients. exponent must be odd so the whole product is odd.
    """

    exponent: int
    roots: tuple[float, ...]

    def __post_init__(self):
        if self.exponent < 1 or self.exponent % 2 == 0:
            raise ValueError(f"exponent must be odd and positive, got {self.exponent}")
        object.__setattr__(self, "roots", tuple(float(r) for r in self.roots))

    @property
    def degree(self) -> int:
        return self.exponent + 4 * len(self.roots)

    def evaluate(self, x: float) -> float:
        acc = float(x) ** self.exponent
        y = x * x
        for r in self.roots:
            d = y - r * r
            acc *= d * d
        return acc


def chebyshev_T_recurrence(j: int, x: float) -> float:
    """Three-term recurrence T_{j+1} = 2x T_j - T_{j-1}; reference route."""
    if j < 0:
        raise ValueError(f"order must be non-negative, got {j}")
    if j == 0:
        return 1.0
    t_prev, t = 1.0, float(x)
    for _ in range(j - 1):
        t_prev, t = t, 2.0 * x * t - t_prev
    return t


def chebyshev_T(j: int, x: float) -> float:
    """Chebyshev polynomial of the first kind, stable on the whole real line.

    Inside [-1, 1] the recurrence is used directly. For x > 1 the closed form
    ((x + sqrt(x^2-1))^j + (x - sqrt(x^2-1))^j) / 2 is evaluated with the
    second term as a reciprocal power, avoiding the subtractive cancellation.
    x < -1 reduces by parity T_j(-x) = (-1)^j T_j(x).
    """
    if j < 0:
        raise ValueError(f"order must be non-negative, got {j}")
    if x > 1.0:
        u = x + math.sqrt(x * x - 1.0)
        return 0.5 * (u**j + u**-j)
    if x < -1.0:
        value = chebyshev_T(j, -x)
        return -value if j % 2 else value
    return chebyshev_T_recurrence(j, x)


def odd_poly_spectrum_sum(s: Spectrum, p) -> float:
    """Sum of p over the spectrum, largest magnitudes first, compensated.

    Accepts anything with an evaluate(x) method (expanded or factored form).
    """
    terms = sorted((p.evaluate(v) for v in s.values), key=abs, reverse=True)
    return _kahan_sum(terms)


@dataclass(frozen=True)
class ThresholdPartition:
    """Counts of eigenvalues beyond the half-lambda1 thresholds.

    mu = lambda1 / 2; d_plus counts entries >= mu, d_minus counts entries
    <= -mu. Comparisons are exact, with no tolerance at equality.
    """

    mu: float
    d_plus: int
    d_minus: int

    @property
    def d(self) -> int:
        return self.d_plus + self.d_minus


def threshold_partition(s: Spectrum) -> ThresholdPartition:
    if s.n == 0 or s.lambda1 <= 0:
        raise ValueError("threshold partition needs a positive largest eigenvalue")
    mu = s.lambda1 / 2.0
    d_plus = sum(1 for v in s.values if v >= mu)
    d_minus = sum(1 for v in s.values if v <= -mu)
    return ThresholdPartition(mu=mu, d_plus=d_plus, d_minus=d_minus)


def high_lambda1_polynomial(s: Spectrum, k: int):
    """Certificate polynomial x^(k - 4d - 2) * prod (x^2 - lambda_i^2)^2 over the
    d = d_minus most negative eigenvalues.

    The result is odd of degree k - 2 and vanishes at +-lambda_i for each
    used eigenvalue. Expanded coefficients are returned for k <= 31; beyond
    that a factored evaluator with the identical contract is returned.
    Raises HypothesisError when k - 4*d_minus - 2 < 1, which happens exactly
    when the spectrum is outside the large-lambda1 regime.
    """
    if k < 3 or k % 2 == 0:
        raise ValueError(f"k must be an odd integer >= 3, got {k}")
    part = threshold_partition(s)
    exponent = k - 4 * part.d_minus - 2
    if exponent < 1:
        raise HypothesisError(
            f"certificate exponent k - 4*d_minus - 2 = {exponent} < 1 "
            f"(d_minus = {part.d_minus}); spectrum outside the certificate regime"
        )
    roots = tuple(abs(v) for v in s.values[s.n - part.d_minus :])
    if k > EXPANSION_DEGREE_LIMIT:
        return FactoredOddPolynomial(exponent=exponent, roots=roots)

    # Expand prod (y - r^2)^2 in y = x^2, then shift by the leading exponent.
    poly_y = [1.0]
    for r in roots:
        for _ in range(2):
            r2 = r * r
            nxt = [0.0] * (len(poly_y) + 1)
            for i, c in enumerate(poly_y):
                nxt[i] -= c * r2
                nxt[i + 1] += c
            poly_y = nxt
    coeffs = [0.0] * ((k - 2 + 1) // 2)
    base = (exponent - 1) // 2
    for i, c in enumerate(poly_y):
        coeffs[base + i] = c
    return OddPolynomial(tuple(coeffs))
