"""Equitable partitions, quotient matrices and exact characteristic polynomials.

The quotient path is exact: entries are Fractions, characteristic
polynomials come from the division-free Berkowitz recurrence over Python ints.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import (
    InvalidPartition,
    NonIntegerQuotient,
    NotEquitable,
    ParseError,
    UnsupportedFamily,
)
from .families import EVEN, ODD, FamilySpec, validate
from .graph import IntSymMatrix
from .polynomial import IntPolynomial
from .spectral import sym_eigenvalues

CONTAINMENT_TOL = 1e-7


@dataclass(frozen=True)
class VertexPartition:
    cells: tuple[tuple[int, ...], ...]

    @classmethod
    def of(cls, cells: Sequence[Sequence[int]]) -> "VertexPartition":
        return cls(tuple(tuple(int(v) for v in c) for c in cells))

    @classmethod
    def singletons(cls, n: int) -> "VertexPartition":
        return cls(tuple((v,) for v in range(n)))

    def validate(self, n: int) -> None:
        seen = set()
        for i, cell in enumerate(self.cells):
            if not cell:
                raise InvalidPartition(f"cell {i} is empty")
            for v in cell:
                if not 0 <= v < n:
                    raise InvalidPartition(f"vertex {v} outside 0..{n - 1}")
                if v in seen:
                    raise InvalidPartition(f"vertex {v} appears in more than one cell")
                seen.add(v)
        if len(seen) != n:
            missing = sorted(set(range(n)) - seen)
            raise InvalidPartition(f"vertices {missing} are not covered")


@dataclass(frozen=True)
class QuotientMatrix:
    entries: tuple[tuple[Fraction, ...], ...]
    sizes: tuple[int, ...]

    @property
    def m(self) -> int:
        return len(self.entries)

    @property
    def is_integral(self) -> bool:
        return all(q.denominator == 1 for row in self.entries for q in row)

    def as_ints(self) -> list[list[int]]:
        if not self.is_integral:
            raise NonIntegerQuotient("quotient matrix has non-integer entries")
        return [[int(q) for q in row] for row in self.entries]

    def symmetrized(self) -> list[list[float]]:
        """D^(1/2) Q D^(-1/2); similar to Q and symmetric when Q comes from a symmetric matrix."""
        return [[float(q) * math.sqrt(self.sizes[i] / self.sizes[j]) for j, q in enumerate(row)]
                for i, row in enumerate(self.entries)]


def _block_row_sums(m: IntSymMatrix, pi: VertexPartition):
    pi.validate(m.n)
    for cell in pi.cells:
        yield [[sum(m.rows[u][v] for v in other) for u in cell] for other in pi.cells]


def quotient(m: IntSymMatrix, pi: VertexPartition) -> QuotientMatrix:
    """q_ij = (sum of the (X_i, X_j) block) / |X_i|."""
    rows = []
    for cell, sums in zip(pi.cells, _block_row_sums(m, pi)):
        rows.append(tuple(Fraction(sum(s), len(cell)) for s in sums))
    return QuotientMatrix(tuple(rows), tuple(len(c) for c in pi.cells))


def is_equitable(m: IntSymMatrix, pi: VertexPartition) -> bool:
    return all(len(set(s)) == 1 for sums in _block_row_sums(m, pi) for s in sums)


def _berkowitz(a: list[list[int]]) -> list[int]:
    """Coefficients of det(xI - A), descending, for an integer matrix."""
    n = len(a)
    poly = [1]
    for k in range(n):
        # leading principal block A[:k, :k], column C = A[:k, k], row R = A[k, :k]
        col = [a[i][k] for i in range(k)]
        row = [a[k][j] for j in range(k)]
        # Toeplitz column: 1, -a_kk, -R C, -R A C, -R A^2 C, ...
        t = [1, -a[k][k]]
        vec = col
        for _ in range(k):
            t.append(-sum(r * v for r, v in zip(row, vec)))
            vec = [sum(a[i][j] * vec[j] for j in range(k)) for i in range(k)]
        new = [0] * (k + 2)
        for i in range(k + 2):
            new[i] = sum(t[i - j] * poly[j] for j in range(len(poly)) if 0 <= i - j < len(t))
        poly = new
    return poly


def char_poly_exact(q: QuotientMatrix | IntSymMatrix | Sequence[Sequence[int]],
                    strict: bool = True) -> IntPolynomial:
    """det(xI - Q) with exact integer arithmetic.

    A non-integral quotient raises NonIntegerQuotient when ``strict``; otherwise
    Q is scaled by the lcm L of its denominators and L^m det(xI - Q) is returned
    (same roots; see ``denominator_scale``).
    """
    if isinstance(q, QuotientMatrix):
        if q.is_integral:
            a = q.as_ints()
            scale = 1
        elif strict:
            raise NonIntegerQuotient("quotient matrix has non-integer entries")
        else:
            scale = denominator_scale(q)
            a = [[int(x * scale) for x in row] for row in q.entries]
    elif isinstance(q, IntSymMatrix):
        a, scale = q.to_lists(), 1
    else:
        a, scale = [[int(x) for x in row] for row in q], 1
    desc = _berkowitz(a)
    m = len(a)
    # det(yI - LQ) at y = Lx equals L^m det(xI - Q)
    asc = [c * scale ** k for k, c in enumerate(reversed(desc))]
    assert len(asc) == m + 1
    return IntPolynomial(asc)


def denominator_scale(q: QuotientMatrix) -> int:
    lcm = 1
    for row in q.entries:
        for x in row:
            lcm = lcm * x.denominator // math.gcd(lcm, x.denominator)
    return lcm


def quotient_eigenvalues(q: QuotientMatrix) -> tuple[float, ...]:
    return sym_eigenvalues(q.symmetrized()).values


def spectrum_contained(q: QuotientMatrix, m: IntSymMatrix, pi: VertexPartition | None = None,
                       tol: float = CONTAINMENT_TOL) -> bool:
    """Every eigenvalue of Q (with multiplicity) matches a distinct eigenvalue of M."""
    if pi is not None and not is_equitable(m, pi):
        raise NotEquitable("containment is only guaranteed for equitable partitions")
    if not _symmetrizable(q):
        raise NotEquitable("quotient is not the image of an equitable partition of a symmetric matrix")
    big = list(sym_eigenvalues(m).values)
    small = quotient_eigenvalues(q)
    # both lists descending: greedy two-pointer match within tol
    j = 0
    for mu in small:
        while j < len(big) and big[j] > mu + tol:
            j += 1
        if j == len(big) or abs(big[j] - mu) > tol:
            return False
        j += 1
    return True


def _symmetrizable(q: QuotientMatrix) -> bool:
    s = q.sizes
    return all(q.entries[i][j] * s[i] == q.entries[j][i] * s[j]
               for i in range(q.m) for j in range(i))


def canonical_partition(spec: FamilySpec) -> VertexPartition:
    """Cell structure used for T(n,5;a,b), T(n,6;a,b,a), T(n,6;a,b,a+1), T(n,7;a,b).

    Labels follow families.build. Cells are ordered as the quotient matrices are
    usually printed; an empty pendant cell (b = 0 on diameter 6) is dropped.
    """
    validate(spec)
    d, a, b, c = spec.d, spec.a, spec.b, spec.c
    first = d + 1
    pend_a = list(range(first, first + a))
    pend_b = list(range(first + a, first + a + b))
    pend_c = list(range(first + a + b, first + a + b + c))
    if spec.kind == ODD and d == 5:
        cells = [[0], [1] + pend_a, [2], [3], [4] + pend_b, [5]]
    elif spec.kind == ODD and d == 7:
        cells = [[0], [1], [2] + pend_a, [3], [4], [5] + pend_b, [6], [7]]
    elif spec.kind == EVEN and d == 6 and c in (a, a + 1):
        cells = [[0], [1] + pend_a, [2], [3], pend_b, [4], [5] + pend_c, [6]]
    else:
        raise UnsupportedFamily(f"no canonical equitable partition for {spec}")
    return VertexPartition.of([cell for cell in cells if cell])


def parse_partition(text: str) -> VertexPartition:
    """One cell per line, whitespace-separated vertex indices; '#' starts a comment."""
    cells = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            cells.append([int(tok) for tok in line.split()])
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer vertex in {raw.strip()!r}") from None
    if not cells:
        raise ParseError("partition file has no cells")
    return VertexPartition.of(cells)


def format_partition(pi: VertexPartition) -> str:
    return "".join(" ".join(map(str, cell)) + "\n" for cell in pi.cells)
