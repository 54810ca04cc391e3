"""Symmetric eigensolver and the spectral statistics of eccentricity matrices.

The solver reduces the matrix to tridiagonal form with Householder
reflections and then runs implicit-shift QL sweeps on the tridiagonal.
numpy is used for the dense reflection updates only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import NoConvergence, RankOutOfRange
from .graph import Graph, IntSymMatrix, eccentricity_matrix, principal_submatrix

MAX_SWEEPS = 64
ZERO_TOL_SCALE = 1e-8
GROUP_GAP = 1e-7
INTERLACE_SLACK = 1e-8
EPS = 2.0 ** -52


@dataclass(frozen=True)
class Spectrum:
    values: tuple[float, ...]  # descending
    zero_tol: float

    @property
    def n(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class Inertia:
    n_plus: int
    n_minus: int
    n_zero: int

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.n_plus, self.n_minus, self.n_zero)


def default_zero_tol(n: int, max_entry: float) -> float:
    return ZERO_TOL_SCALE * n * max(max_entry, 1.0)


def _as_array(m) -> np.ndarray:
    if isinstance(m, IntSymMatrix):
        return np.array(m.rows, dtype=float).reshape(m.n, m.n)
    a = np.array(m, dtype=float)
    if a.size == 0:
        return np.zeros((0, 0))
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("expected a square matrix")
    return a


def tridiagonalize(a: np.ndarray) -> tuple[list[float], list[float]]:
    """Householder reduction of a symmetric matrix; returns (diagonal, subdiagonal)."""
    a = np.array(a, dtype=float)
    n = a.shape[0]
    for k in range(n - 2):
        x = a[k + 1:, k].copy()
        norm_x = math.sqrt(float(x @ x))
        if norm_x == 0.0:
            continue
        alpha = -norm_x if x[0] >= 0 else norm_x
        v = x
        v[0] -= alpha
        norm_v = math.sqrt(float(v @ v))
        if norm_v == 0.0:
            continue
        v /= norm_v
        sub = a[k + 1:, k + 1:]
        p = sub @ v
        w = p - float(v @ p) * v
        sub -= 2.0 * (np.outer(v, w) + np.outer(w, v))
        a[k + 1:, k] = 0.0
        a[k, k + 1:] = 0.0
        a[k + 1, k] = a[k, k + 1] = alpha
    diag = [float(a[i, i]) for i in range(n)]
    off = [float(a[i + 1, i]) for i in range(n - 1)]
    return diag, off


def tridiagonal_eigenvalues(diag: Sequence[float], off: Sequence[float]) -> list[float]:
    """Implicit QL with Wilkinson-style shifts on a symmetric tridiagonal matrix."""
    d = list(diag)
    n = len(d)
    e = list(off) + [0.0]
    # absolute floor so clusters of zero eigenvalues still deflate
    floor = EPS * max((abs(x) for x in d + e), default=0.0)
    for l in range(n):
        sweeps = 0
        while True:
            m = l
            while m < n - 1:
                dd = abs(d[m]) + abs(d[m + 1])
                if abs(e[m]) + dd == dd or abs(e[m]) <= floor:
                    break
                m += 1
            if m == l:
                break
            sweeps += 1
            if sweeps > MAX_SWEEPS:
                raise NoConvergence(f"eigenvalue {l} did not converge in {MAX_SWEEPS} sweeps")
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = math.hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + math.copysign(r, g))
            s = c = 1.0
            p = 0.0
            deflated = False
            for i in range(m - 1, l - 1, -1):
                f = s * e[i]
                b = c * e[i]
                r = math.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    deflated = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
            if deflated:
                continue
            d[l] -= p
            e[l] = g
            e[m] = 0.0
    return d


def sym_eigenvalues(m, zero_tol: float | None = None) -> Spectrum:
    """All eigenvalues of a symmetric matrix, sorted descending."""
    a = _as_array(m)
    n = a.shape[0]
    if n == 0:
        return Spectrum((), zero_tol or 0.0)
    if zero_tol is None:
        zero_tol = default_zero_tol(n, float(np.max(np.abs(a))))
    diag, off = tridiagonalize(a)
    vals = tridiagonal_eigenvalues(diag, off)
    return Spectrum(tuple(sorted(vals, reverse=True)), zero_tol)


def ecc_spectrum(g: Graph, zero_tol: float | None = None) -> Spectrum:
    return sym_eigenvalues(eccentricity_matrix(g), zero_tol)


def inertia_of(s: Spectrum) -> Inertia:
    tol = s.zero_tol
    plus = sum(1 for x in s.values if x > tol)
    minus = sum(1 for x in s.values if x < -tol)
    return Inertia(plus, minus, s.n - plus - minus)


def ecc_energy(s: Spectrum) -> float:
    return math.fsum(abs(x) for x in s.values)


def xi_k(s: Spectrum, k: int) -> float:
    """k-th largest eigenvalue, 1-based."""
    if not 1 <= k <= s.n:
        raise RankOutOfRange(f"rank {k} outside 1..{s.n}")
    return s.values[k - 1]


def group_multiplicities(s: Spectrum, gap: float = GROUP_GAP) -> list[tuple[float, int]]:
    """Collapse runs of eigenvalues closer than ``gap`` into (mean, multiplicity)."""
    groups: list[list[float]] = []
    for x in s.values:
        if groups and groups[-1][-1] - x <= gap:
            groups[-1].append(x)
        else:
            groups.append([x])
    return [(math.fsum(g) / len(g), len(g)) for g in groups]


def check_interlacing(m: IntSymMatrix, idx: Sequence[int], slack: float = INTERLACE_SLACK) -> bool:
    """Cauchy interlacing between m and its principal submatrix on idx."""
    sub = principal_submatrix(m, idx)
    lam = sym_eigenvalues(m).values
    mu = sym_eigenvalues(sub).values
    big, small = len(lam), len(mu)
    return all(lam[big - small + i] - slack <= mu[i] <= lam[i] + slack for i in range(small))
