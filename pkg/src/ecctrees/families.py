"""Constructors for stars, paths and the central caterpillars T(n,d;a,b[,c]).

Canonical labeling: the spine v0..vd gets labels 0..d, then pendants are
labeled consecutively in attachment order (a, then b, then c).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidFamilyParameters, ParseError
from .graph import Graph, from_edge_list

STAR, PATH, ODD, EVEN = "star", "path", "odd", "even"


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    n: int
    d: int | None = None
    a: int = 0
    b: int = 0
    c: int = 0

    def __str__(self):
        if self.kind in (STAR, PATH):
            return f"{self.kind}:n={self.n}"
        s = f"{self.kind}:n={self.n},d={self.d},a={self.a},b={self.b}"
        return s + (f",c={self.c}" if self.kind == EVEN else "")


def validate(spec: FamilySpec) -> None:
    k, n, d, a, b, c = spec.kind, spec.n, spec.d, spec.a, spec.b, spec.c
    if k == STAR:
        if n < 2:
            raise InvalidFamilyParameters("star needs n >= 2")
    elif k == PATH:
        if n < 1:
            raise InvalidFamilyParameters("path needs n >= 1")
    elif k == ODD:
        if d is None or d < 3 or d % 2 == 0:
            raise InvalidFamilyParameters(f"odd caterpillar needs odd d >= 3, got d={d}")
        if a < 0 or b < a:
            raise InvalidFamilyParameters(f"need b >= a >= 0, got a={a}, b={b}")
        if a + b != n - d - 1:
            raise InvalidFamilyParameters(f"need a+b = n-d-1 = {n - d - 1}, got {a + b}")
    elif k == EVEN:
        if d is None or d < 4 or d % 2:
            raise InvalidFamilyParameters(f"even caterpillar needs even d >= 4, got d={d}")
        if a < 0 or b < 0 or c < a:
            raise InvalidFamilyParameters(f"need c >= a >= 0 and b >= 0, got a={a}, b={b}, c={c}")
        if a + b + c != n - d - 1:
            raise InvalidFamilyParameters(f"need a+b+c = n-d-1 = {n - d - 1}, got {a + b + c}")
    else:
        raise InvalidFamilyParameters(f"unknown family kind {k!r}")


def _spine_with_pendants(d: int, attach: list[tuple[int, int]]) -> Graph:
    edges = [(i, i + 1) for i in range(d)]
    nxt = d + 1
    for center, count in attach:
        for _ in range(count):
            edges.append((center, nxt))
            nxt += 1
    return from_edge_list(edges, nxt)


def build_unchecked(kind: str, d: int, a: int, b: int, c: int = 0) -> Graph:
    """Caterpillar without the b >= a / c >= a ordering checks (mirrored parameters)."""
    if min(a, b, c) < 0:
        raise InvalidFamilyParameters("pendant counts must be non-negative")
    if kind == ODD:
        if d < 3 or d % 2 == 0:
            raise InvalidFamilyParameters(f"odd caterpillar needs odd d >= 3, got {d}")
        return _spine_with_pendants(d, [((d - 1) // 2, a), ((d + 1) // 2, b)])
    if kind == EVEN:
        if d < 4 or d % 2:
            raise InvalidFamilyParameters(f"even caterpillar needs even d >= 4, got {d}")
        h = d // 2
        return _spine_with_pendants(d, [(h - 1, a), (h, b), (h + 1, c)])
    raise InvalidFamilyParameters(f"unknown caterpillar kind {kind!r}")


def build(spec: FamilySpec) -> Graph:
    validate(spec)
    if spec.kind == STAR:
        return from_edge_list([(0, i) for i in range(1, spec.n)], spec.n)
    if spec.kind == PATH:
        return from_edge_list([(i, i + 1) for i in range(spec.n - 1)], spec.n)
    return build_unchecked(spec.kind, spec.d, spec.a, spec.b, spec.c)


def star(n: int) -> Graph:
    return build(FamilySpec(STAR, n))


def path(n: int) -> Graph:
    return build(FamilySpec(PATH, n))


def odd_caterpillar(n: int, d: int, a: int, b: int) -> Graph:
    return build(FamilySpec(ODD, n, d, a, b))


def even_caterpillar(n: int, d: int, a: int, b: int, c: int) -> Graph:
    return build(FamilySpec(EVEN, n, d, a, b, c))


def double_star(n: int, a: int, b: int) -> Graph:
    """T(n,3;a,b): two adjacent centres carrying a and b extra leaves."""
    if n < 4:
        raise InvalidFamilyParameters("double star needs n >= 4")
    return odd_caterpillar(n, 3, a, b)


def parse_family(text: str) -> FamilySpec:
    """Parse ``star:n=5``, ``path:n=7``, ``odd:n=8,d=5,a=1,b=1``, ``even:n=9,d=6,a=1,b=0,c=1``."""
    kind, sep, rest = text.strip().partition(":")
    kind = kind.strip().lower()
    if not sep or kind not in (STAR, PATH, ODD, EVEN):
        raise ParseError(f"unrecognised family {text!r}")
    allowed = {STAR: {"n"}, PATH: {"n"}, ODD: {"n", "d", "a", "b"},
               EVEN: {"n", "d", "a", "b", "c"}}[kind]
    params: dict[str, int] = {}
    for item in filter(None, (s.strip() for s in rest.split(","))):
        key, eq, val = item.partition("=")
        key = key.strip()
        if not eq or key not in allowed:
            raise ParseError(f"bad family parameter {item!r} for {kind}")
        if key in params:
            raise ParseError(f"parameter {key!r} given twice")
        try:
            params[key] = int(val)
        except ValueError:
            raise ParseError(f"parameter {key}={val!r} is not an integer") from None
    missing = allowed - set(params) - ({"c"} if kind == ODD else set())
    if missing:
        raise ParseError(f"missing parameter(s) {sorted(missing)} for {kind}")
    spec = FamilySpec(kind, **params)
    validate(spec)
    return spec
