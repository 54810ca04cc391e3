"""Exact integer polynomials and a sign-exact real root isolator."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import NoRootInBracket

MAX_BISECTIONS = 200


@dataclass(frozen=True)
class IntPolynomial:
    """Integer coefficients in ascending degree; trailing zeros are trimmed."""

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int]):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def from_descending(cls, *coeffs: int) -> "IntPolynomial":
        return cls(reversed(coeffs))

    @classmethod
    def x(cls) -> "IntPolynomial":
        return cls((0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def coeff(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __add__(self, other):
        other = _coerce(other)
        m = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(self.coeff(i) + other.coeff(i) for i in range(m))

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        if not self.coeffs or not other.coeffs:
            return IntPolynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = IntPolynomial((1,))
        for _ in range(k):
            out = out * self
        return out

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(i * c for i, c in enumerate(self.coeffs) if i)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def sign_at(self, x: float | Fraction | int) -> int:
        """Exact sign of p(x) for a float/rational argument."""
        num, den = Fraction(x).as_integer_ratio()
        deg = self.degree
        if deg < 0:
            return 0
        acc = 0
        den_pow = 1
        for i in range(deg, -1, -1):
            acc = acc * num + self.coeffs[i] * den_pow
            den_pow *= den
        return (acc > 0) - (acc < 0)

    def x_power(self) -> int:
        """Multiplicity of x as a factor."""
        k = 0
        while k < len(self.coeffs) and self.coeffs[k] == 0:
            k += 1
        return k if self.coeffs else 0

    def strip_x_power(self) -> tuple[int, "IntPolynomial"]:
        k = self.x_power()
        return k, IntPolynomial(self.coeffs[k:])

    def cauchy_bound(self) -> float:
        lead = abs(self.lead)
        return 1.0 + max(1.0, sum(abs(c) for c in self.coeffs[:-1]) / lead)

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                mono = "x" if k == 1 else f"x^{k}"
                body = mono if mag == 1 else f"{mag}{mono}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def factored_str(self) -> str:
        k, rest = self.strip_x_power()
        if k == 0:
            return str(rest)
        head = "x" if k == 1 else f"x^{k}"
        return head if rest.degree == 0 and rest.lead == 1 else f"{head}({rest})"


def _coerce(v) -> IntPolynomial:
    return v if isinstance(v, IntPolynomial) else IntPolynomial((v,))


def _bisect(p: IntPolynomial, lo: float, hi: float, s_lo: int) -> float:
    for _ in range(MAX_BISECTIONS):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        s = p.sign_at(mid)
        if s == 0:
            return mid
        if s == s_lo:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def real_roots(p: IntPolynomial, lo: float | None = None, hi: float | None = None) -> list[float]:
    """Distinct real roots of p in [lo, hi] (default: the Cauchy interval), ascending.

    Critical points come from recursing on p'; each monotone piece is then
    bisected with exact sign evaluation.
    """
    if p.degree < 1:
        return []
    bound = p.cauchy_bound()
    lo = -bound if lo is None else lo
    hi = bound if hi is None else hi
    if p.degree == 1:
        r = -p.coeffs[0] / p.coeffs[1]
        return [r] if lo <= r <= hi else []
    crit = [c for c in real_roots(p.derivative(), lo, hi) if lo < c < hi]
    knots = [lo] + crit + [hi]
    roots: list[float] = []
    for a, b in zip(knots, knots[1:]):
        sa, sb = p.sign_at(a), p.sign_at(b)
        if sa == 0:
            roots.append(a)
        elif sb != 0 and sa != sb:
            roots.append(_bisect(p, a, b, sa))
    if p.sign_at(hi) == 0:
        roots.append(hi)
    out: list[float] = []
    for r in roots:
        if not out or r != out[-1]:
            out.append(r)
    return out


def largest_root(p: IntPolynomial) -> float:
    """Largest real root in [0, Cauchy bound]."""
    if p.degree < 1:
        raise NoRootInBracket("constant polynomial has no roots")
    roots = real_roots(p, 0.0, p.cauchy_bound())
    if not roots:
        raise NoRootInBracket(f"no real root of {p} in [0, {p.cauchy_bound():g}]")
    return roots[-1]
