"""Closed-form E-spectra, energies, bounds and quartics for the tree families.

Every quantity here is evaluated from integer parameters. Where a value has
the form (alpha - sqrt(beta)) / 2 it is computed through the conjugate
(alpha**2 - beta) / (2 (alpha + sqrt(beta))) to avoid cancellation at large n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    DiameterTooSmall,
    InvalidFamilyParameters,
    NonIntegerResult,
    OrderTooSmall,
)
from .polynomial import IntPolynomial, largest_root, real_roots

SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class ClosedSpectrum:
    """Eigenvalues with multiplicities and the formula that produced each."""

    entries: tuple[tuple[float, int, str], ...]

    @property
    def n(self) -> int:
        return sum(m for _, m, _ in self.entries)

    def values(self) -> list[float]:
        out = []
        for v, m, _ in self.entries:
            out.extend([v] * m)
        return sorted(out, reverse=True)

    def positive_sum(self) -> float:
        return math.fsum(v * m for v, m, _ in self.entries if v > 0)

    def energy(self) -> float:
        return math.fsum(abs(v) * m for v, m, _ in self.entries)


def _require(cond: bool, msg: str, exc=InvalidFamilyParameters):
    if not cond:
        raise exc(msg)


def _split_biquadratic(alpha: int, beta: int) -> tuple[float, float]:
    """(sqrt((alpha+sqrt(beta))/2), sqrt((alpha-sqrt(beta))/2)) for integer alpha, beta."""
    root_beta = math.sqrt(beta)
    big_sq = (alpha + root_beta) / 2.0
    small_sq = (alpha * alpha - beta) / (2.0 * (alpha + root_beta))
    return math.sqrt(big_sq), math.sqrt(max(small_sq, 0.0))


def _symmetric_spectrum(n: int, alpha: int, beta: int, tag: str) -> ClosedSpectrum:
    big, small = _split_biquadratic(alpha, beta)
    entries = [(big, 1, f"{tag}:+sqrt((alpha+sqrt(beta))/2)"),
               (small, 1, f"{tag}:+sqrt((alpha-sqrt(beta))/2)")]
    if n > 4:
        entries.append((0.0, n - 4, f"{tag}:zero"))
    entries += [(-small, 1, f"{tag}:-sqrt((alpha-sqrt(beta))/2)"),
                (-big, 1, f"{tag}:-sqrt((alpha+sqrt(beta))/2)")]
    return ClosedSpectrum(tuple(entries))


# -- stars and double stars --------------------------------------------------

def star_spectrum(n: int) -> ClosedSpectrum:
    _require(n >= 3, f"star spectrum formula needs n >= 3, got {n}", OrderTooSmall)
    r = math.sqrt(n * n - 3 * n + 3)
    return ClosedSpectrum((
        (n - 2 + r, 1, "star:n-2+sqrt(n^2-3n+3)"),
        (n - 2 - r, 1, "star:n-2-sqrt(n^2-3n+3)"),
        (-2.0, n - 2, "star:-2"),
    ))


def star_energy(n: int) -> float:
    return 2.0 * (n - 2 + math.sqrt(n * n - 3 * n + 3))


def double_star_alpha_beta(a: int, b: int) -> tuple[int, int]:
    alpha = 9 * a * b + 13 * a + 13 * b + 17
    return alpha, alpha * alpha - 64 * (a + 1) * (b + 1)


def double_star_spectrum(n: int, a: int, b: int) -> ClosedSpectrum:
    _require(n >= 4 and b >= a >= 0 and a + b == n - 4,
             f"need a+b = n-4 and b >= a >= 0, got n={n}, a={a}, b={b}")
    alpha, beta = double_star_alpha_beta(a, b)
    return _symmetric_spectrum(n, alpha, beta, "double-star")


def xi2_diam3(n: int, a: int) -> float:
    """Second largest E-eigenvalue of T(n,3;a,n-4-a), as a function of a."""
    _require(n >= 4 and 0 <= a <= (n - 4) // 2, f"need 0 <= a <= (n-4)//2, got n={n}, a={a}")
    t = a * (n - 4 - a)
    alpha = 9 * t + 13 * n - 35
    beta = alpha * alpha - 64 * (t + n - 3)
    return _split_biquadratic(alpha, beta)[1]


def xi2_star_plus_edge(n: int) -> float:
    """sqrt((13n-35-sqrt(169n^2-974n+1417))/2), the a=0 value."""
    _require(n >= 4, f"need n >= 4, got {n}", OrderTooSmall)
    alpha = 13 * n - 35
    return _split_biquadratic(alpha, 169 * n * n - 974 * n + 1417)[1]


def xi2_sqrt2_bound(n: int) -> bool:
    """Exact certificate that xi2(T(n,3;0,n-4)) < sqrt(2).

    xi2^2 < 2  <=>  alpha - 4 < sqrt(beta)  <=>  (alpha-4)^2 < beta  (alpha > 4).
    """
    _require(n >= 4, f"need n >= 4, got {n}", OrderTooSmall)
    alpha = 13 * n - 35
    beta = 169 * n * n - 974 * n + 1417
    return alpha - 4 > 0 and (alpha - 4) ** 2 < beta


def xi2_floor_d_ge_4(d: int) -> float:
    """Second largest eigenvalue of the 4x4 diametral-endpoint submatrix."""
    _require(d >= 4, f"need d >= 4, got {d}", DiameterTooSmall)
    return (math.sqrt(d * d + 4 * (d - 1) ** 2) - d) / 2.0


def endpoint_submatrix(d: int) -> list[list[int]]:
    """Rows of E(T) restricted to v0, v1, v_{d-1}, v_d on a diametral path."""
    return [[0, 0, d - 1, d],
            [0, 0, 0, d - 1],
            [d - 1, 0, 0, 0],
            [d, d - 1, 0, 0]]


def floor_exceeds_sqrt2(d: int) -> bool:
    """Exact certificate that xi2_floor_d_ge_4(d) > sqrt(2).

    sqrt(d^2 + 4(d-1)^2) > d + 2 sqrt(2)  <=>  ((d-1)^2 - 2)^2 > 2 d^2  when (d-1)^2 > 2.
    """
    _require(d >= 4, f"need d >= 4, got {d}", DiameterTooSmall)
    lhs = (d - 1) ** 2 - 2
    return lhs > 0 and lhs * lhs > 2 * d * d


def energy_T_n3(n: int) -> float:
    """E-energy of T(n,3;0,n-4)."""
    _require(n >= 5, f"need n >= 5, got {n}", OrderTooSmall)
    return 2.0 * math.sqrt(13 * n - 35 + 8 * math.sqrt(n - 3))


def xi1_bounds_T_n3(n: int) -> tuple[float, float]:
    _require(n >= 5, f"need n >= 5, got {n}", OrderTooSmall)
    return math.sqrt(13 * n - 37), math.sqrt(13 * n - 36)


def xi1_sandwich_exact(n: int) -> bool:
    """Exact check of sqrt(13n-37) < xi1(T(n,3;0,n-4)) < sqrt(13n-36).

    With alpha = 13n-35 the sandwich is (13n-39)^2 < beta < (13n-37)^2.
    """
    _require(n >= 5, f"need n >= 5, got {n}", OrderTooSmall)
    beta = 169 * n * n - 974 * n + 1417
    return 13 * n - 39 > 0 and (13 * n - 39) ** 2 < beta < (13 * n - 37) ** 2


# -- diameter 5, 6, 7 families ------------------------------------------------

def t5_alpha_beta(a: int, b: int) -> tuple[int, int]:
    s = a + b
    return 16 * s + 75, 256 * s * s + 800 * s - 1024 * a * b + 3125


def t5_spectrum(n: int, a: int, b: int) -> ClosedSpectrum:
    _require(b >= a >= 0 and a + b == n - 6, f"need a+b = n-6, b >= a >= 0; got n={n}, a={a}, b={b}")
    alpha, beta = t5_alpha_beta(a, b)
    return _symmetric_spectrum(n, alpha, beta, "T5")


def t5_energy(n: int, a: int, b: int) -> float:
    _require(b >= a >= 0 and a + b == n - 6, f"need a+b = n-6, b >= a >= 0; got n={n}, a={a}, b={b}")
    return 2.0 * math.sqrt(16 * n - 21 + math.sqrt(1600 * n - 7100 + 1024 * a * b))


def t6_aba_spectrum(n: int, a: int, b: int) -> ClosedSpectrum:
    _require(a >= 0 and b >= 0 and 2 * a + b == n - 7,
             f"need 2a+b = n-7 with a, b >= 0; got n={n}, a={a}, b={b}")
    r = math.sqrt(25 * a + 32 * b + 68)
    s = 5.0 * math.sqrt(a + 2)
    entries = [(3 + r, 1, "T6aba:3+sqrt(25a+32b+68)"), (s - 3, 1, "T6aba:5sqrt(a+2)-3")]
    if n > 4:
        entries.append((0.0, n - 4, "T6aba:zero"))
    entries += [(3 - r, 1, "T6aba:3-sqrt(25a+32b+68)"), (-s - 3, 1, "T6aba:-5sqrt(a+2)-3")]
    return ClosedSpectrum(tuple(entries))


def t6_aba_energy(n: int, a: int, b: int) -> float:
    _require(a >= 0 and b >= 0 and 2 * a + b == n - 7,
             f"need 2a+b = n-7 with a, b >= 0; got n={n}, a={a}, b={b}")
    return 2.0 * (math.sqrt(32 * n - 39 * a - 156) + 5.0 * math.sqrt(a + 2))


def t6_aba_quartic(a: int, b: int) -> IntPolynomial:
    return IntPolynomial.from_descending(
        1, 0, -(50 * a + 32 * b + 136), -(192 * b + 108),
        625 * a * a + 2500 * a + 800 * a * b + 1312 * b + 2419)


def t6_ab_a1_polynomial(n: int, a: int, b: int) -> IntPolynomial:
    """Quartic whose roots are the nonzero E-eigenvalues of T(n,6;a,b,a+1)."""
    _require(a >= 0 and b >= 0 and 2 * a + b == n - 8,
             f"need 2a+b = n-8 with a, b >= 0; got n={n}, a={a}, b={b}")
    return IntPolynomial.from_descending(
        1, 0, -(50 * a + 32 * b + 161), -(192 * b + 108),
        625 * a * a + 3125 * a + 800 * a * b + 1712 * b + 3669)


def t6_ab_a1_certificates(n: int, a: int, b: int) -> tuple[float, float, float]:
    """p(5 sqrt(a) - 3), p(1 + r), p(3 + r) with r = sqrt(32n - 39a - 156)."""
    p = t6_ab_a1_polynomial(n, a, b)
    r = math.sqrt(32 * n - 39 * a - 156)
    return p(5 * math.sqrt(a) - 3), p(1 + r), p(3 + r)


def t6_ab_a1_spectrum(n: int, a: int, b: int) -> ClosedSpectrum:
    p = t6_ab_a1_polynomial(n, a, b)
    roots = real_roots(p)
    if len(roots) != 4:
        raise ArithmeticError(f"expected four simple real roots of {p}, found {roots}")
    entries = [(x, 1, "T6ab(a+1):root of p") for x in reversed(roots)]
    if n > 4:
        entries.insert(2, (0.0, n - 4, "T6ab(a+1):zero"))
    return ClosedSpectrum(tuple(entries))


def t6_ab_a1_energy(n: int, a: int, b: int) -> float:
    roots = real_roots(t6_ab_a1_polynomial(n, a, b))
    return 2.0 * math.fsum(x for x in roots if x > 0)


def t7_alpha_beta(a: int, b: int) -> tuple[int, int]:
    s = a + b
    return 25 * s + 203, 625 * s * s + 2450 * s - 2500 * a * b + 17493


def t7_spectrum(n: int, a: int, b: int) -> ClosedSpectrum:
    _require(b >= a >= 0 and a + b == n - 8, f"need a+b = n-8, b >= a >= 0; got n={n}, a={a}, b={b}")
    alpha, beta = t7_alpha_beta(a, b)
    return _symmetric_spectrum(n, alpha, beta, "T7")


def t7_energy(n: int, a: int, b: int) -> float:
    _require(b >= a >= 0 and a + b == n - 8, f"need a+b = n-8, b >= a >= 0; got n={n}, a={a}, b={b}")
    return 2.0 * math.sqrt(25 * n + 3 + math.sqrt(7700 * n - 37884 + 2500 * a * b))


# -- spectral-radius quartics ------------------------------------------------

def gamma_d(d: int) -> int:
    num = d * (d - 1) * (7 * d - 5)
    if num % 24:
        raise NonIntegerResult(f"d(d-1)(7d-5)/24 is not an integer for d={d}")
    return num // 24


def theta_d(d: int) -> int:
    num = d * (d - 1) * (7 * d - 2)
    if num % 24:
        raise NonIntegerResult(f"d(d-1)(7d-2)/24 is not an integer for d={d}")
    return num // 24


def xi1_odd_quartic(d: int, a: int, b: int) -> IntPolynomial:
    """det [[r^2 - G - k b, -d r], [-d r, r^2 - G - k a]] with G = gamma_d(d), k = ((d+3)/2)^2."""
    _require(d >= 5 and d % 2 == 1, f"need odd d >= 5, got {d}")
    _require(a >= 0 and b >= 0, f"pendant counts must be non-negative, got a={a}, b={b}")
    g = gamma_d(d)
    k = ((d + 3) // 2) ** 2
    return IntPolynomial.from_descending(1, 0, -(2 * g + k * (a + b) + d * d), 0,
                                         (g + k * a) * (g + k * b))


def xi1_even_quartic(d: int, a: int, b: int, c: int) -> IntPolynomial:
    """(r^2 - A)(r^2 - C) - (d r + e)^2 for the even-diameter 2x2 determinant."""
    _require(d >= 6 and d % 2 == 0, f"need even d >= 6, got {d}")
    _require(min(a, b, c) >= 0, f"pendant counts must be non-negative, got a={a}, b={b}, c={c}")
    th = theta_d(d)
    kb = ((d + 2) // 2) ** 2
    ka = kc = ((d + 4) // 2) ** 2
    big_a = th + kb * b + kc * c
    big_c = th + kb * b + ka * a
    e = (d // 2) ** 2 + kb * b
    return IntPolynomial.from_descending(1, 0, -(big_a + big_c + d * d), -2 * d * e,
                                         big_a * big_c - e * e)


def xi1_odd(d: int, a: int, b: int) -> float:
    return largest_root(xi1_odd_quartic(d, a, b))


def xi1_even(d: int, a: int, b: int, c: int) -> float:
    return largest_root(xi1_even_quartic(d, a, b, c))


def min_gen_bound(n: int) -> float:
    """Minimum E-spectral radius over all trees of order n."""
    _require(n >= 4, f"need n >= 4, got {n}", OrderTooSmall)
    if n <= 15:
        alpha = 13 * n - 35
        return math.sqrt((alpha + math.sqrt(alpha * alpha - 64 * (n - 3))) / 2.0)
    if n % 2:
        return math.sqrt((16 * n - 21 + math.sqrt(800 * n - 1419)) / 2.0)
    return math.sqrt((16 * n - 21 + 5.0 * math.sqrt(32 * n - 67)) / 2.0)
