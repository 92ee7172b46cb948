"""Root systems of simple Lie algebras, weights and Weyl group operations.

Weights are integer tuples in fundamental-weight coordinates, so entry ``i``
of a weight is its pairing with the simple coroot ``i``. Simple roots are
numbered as in Bourbaki; indices are 0-based in code.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Optional, Sequence


Weight = tuple[int, ...]

FAMILIES = ("A", "B", "C", "D", "G")


class RootSystemError(ValueError):
    pass


@dataclass(frozen=True)
class RootSystemSpec:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise RootSystemError(f"unsupported family {self.family!r}; expected one of {FAMILIES}")
        if self.rank < 1:
            raise RootSystemError("rank must be a positive integer")
        if self.family == "G" and self.rank != 2:
            raise RootSystemError("type G exists only in rank 2")
        if self.family in "BC" and self.rank < 2:
            raise RootSystemError(f"type {self.family} requires rank >= 2 (use A1)")
        if self.family == "D" and self.rank < 3:
            raise RootSystemError("type D requires rank >= 3")

    @classmethod
    def parse(cls, text: str) -> "RootSystemSpec":
        m = re.fullmatch(r"\s*([A-Za-z])\s*(\d+)\s*", text)
        if not m:
            raise RootSystemError(f"cannot parse root system {text!r}; expected e.g. 'A2' or 'G2'")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def _simple_root_vectors(spec: RootSystemSpec) -> list[list[int]]:
    """Simple roots as vectors in an ambient Euclidean space."""
    n, fam = spec.rank, spec.family

    def e(i, dim):
        v = [0] * dim
        v[i] = 1
        return v

    def diff(i, j, dim):
        return [a - b for a, b in zip(e(i, dim), e(j, dim))]

    if fam == "A":
        return [diff(i, i + 1, n + 1) for i in range(n)]
    if fam == "B":
        return [diff(i, i + 1, n) for i in range(n - 1)] + [e(n - 1, n)]
    if fam == "C":
        return [diff(i, i + 1, n) for i in range(n - 1)] + [[2 * x for x in e(n - 1, n)]]
    if fam == "D":
        last = [0] * n
        last[n - 2] = last[n - 1] = 1
        return [diff(i, i + 1, n) for i in range(n - 1)] + [last]
    # G2: short root first
    return [[1, -1, 0], [-2, 1, 1]]


@dataclass(frozen=True)
class RootSystem:
    spec: RootSystemSpec
    cartan_matrix: tuple[tuple[int, ...], ...]
    # (alpha_i, alpha_j) for simple roots
    gram: tuple[tuple[int, ...], ...]
    # positive roots in simple-root coordinates, sorted by height
    positive_roots_simple: tuple[tuple[int, ...], ...] = field(repr=False)

    @property
    def rank(self) -> int:
        return self.spec.rank

    @property
    def positive_roots(self) -> list[Weight]:
        """Positive roots in fundamental-weight coordinates."""
        return [self.to_weight(b) for b in self.positive_roots_simple]

    def simple_root(self, i: int) -> Weight:
        """alpha_i in fundamental-weight coordinates: column i of the Cartan matrix."""
        return tuple(self.cartan_matrix[r][i] for r in range(self.rank))

    def to_weight(self, simple_coords: Sequence[int]) -> Weight:
        C = self.cartan_matrix
        return tuple(sum(C[r][j] * simple_coords[j] for j in range(self.rank)) for r in range(self.rank))

    @cached_property
    def _cartan_inverse(self) -> list[list[Fraction]]:
        n = self.rank
        aug = [list(map(Fraction, self.cartan_matrix[r])) + [Fraction(int(r == c)) for c in range(n)] for r in range(n)]
        for col in range(n):
            piv = next(r for r in range(col, n) if aug[r][col] != 0)
            aug[col], aug[piv] = aug[piv], aug[col]
            inv = 1 / aug[col][col]
            aug[col] = [x * inv for x in aug[col]]
            for r in range(n):
                if r != col and aug[r][col] != 0:
                    f = aug[r][col]
                    aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
        return [row[n:] for row in aug]

    def to_simple_coords(self, weight: Sequence[int]) -> tuple[Fraction, ...]:
        """Solve C x = weight over Q."""
        Ci = self._cartan_inverse
        return tuple(sum(Ci[r][c] * weight[c] for c in range(self.rank)) for r in range(self.rank))

    def height(self, simple_coords: Sequence) -> Fraction:
        return sum(simple_coords, Fraction(0))

    def inner(self, lam: Sequence[int], simple_coords: Sequence) -> Fraction:
        """(lam, beta) for beta given in simple-root coordinates."""
        return sum(Fraction(lam[i] * simple_coords[i] * self.gram[i][i], 2) for i in range(self.rank))

    def root_norm(self, simple_coords: Sequence) -> Fraction:
        n = self.rank
        return sum(Fraction(simple_coords[i] * simple_coords[j] * self.gram[i][j]) for i in range(n) for j in range(n))

    def coroot_pairing(self, lam: Sequence[int], simple_coords: Sequence) -> Fraction:
        """<lam, beta-check> = 2 (lam, beta) / (beta, beta)."""
        return 2 * self.inner(lam, simple_coords) / self.root_norm(simple_coords)

    @property
    def rho(self) -> Weight:
        return (1,) * self.rank

    def __str__(self) -> str:
        return str(self.spec)


def _generate_positive_roots(C: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Close the simple roots under beta -> beta + alpha_i using root strings.

    beta + alpha_i is a root iff p > 0 where p = q - <beta, alpha_i-check> and q
    is the length of the string below beta, already known by induction on height.
    """
    n = len(C)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    roots = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(n):
                pairing = sum(C[i][j] * beta[j] for j in range(n))
                q = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in roots:
                        q += 1
                    else:
                        break
                if q - pairing > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in roots:
                        roots.add(up)
                        nxt.append(up)
        layer = nxt
    return sorted(roots, key=lambda b: (sum(b), b))


def expected_positive_root_count(spec: RootSystemSpec) -> int:
    n = spec.rank
    return {"A": n * (n + 1) // 2, "B": n * n, "C": n * n, "D": n * (n - 1), "G": 6}[spec.family]


@lru_cache(maxsize=None)
def build_root_system(spec: RootSystemSpec | str) -> RootSystem:
    if isinstance(spec, str):
        spec = RootSystemSpec.parse(spec)
    vecs = _simple_root_vectors(spec)
    n = spec.rank
    gram = tuple(tuple(sum(a * b for a, b in zip(vecs[i], vecs[j])) for j in range(n)) for i in range(n))
    C = tuple(tuple(2 * gram[i][j] // gram[i][i] for j in range(n)) for i in range(n))
    for i in range(n):
        for j in range(n):
            assert 2 * gram[i][j] % gram[i][i] == 0
    pos = _generate_positive_roots(C)
    if len(pos) != expected_positive_root_count(spec):
        raise AssertionError(f"{spec}: generated {len(pos)} positive roots")
    return RootSystem(spec, C, gram, tuple(pos))


def weight(*coords: int) -> Weight:
    return tuple(int(c) for c in coords)


def fundamental_weight(rs: RootSystem, i: int) -> Weight:
    return tuple(int(j == i) for j in range(rs.rank))


def parse_weight(text: str) -> Weight:
    """'1,0,2' -> (1, 0, 2)."""
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError as exc:
        raise ValueError(f"cannot parse weight {text!r}; expected comma-separated integers") from exc


def pairing(lam: Weight, i: int) -> int:
    if not 0 <= i < len(lam):
        raise IndexError(f"simple root index {i} out of range for rank {len(lam)}")
    return lam[i]


def is_dominant(lam: Weight) -> bool:
    return all(c >= 0 for c in lam)


def add(a: Weight, b: Weight) -> Weight:
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Weight, b: Weight) -> Weight:
    return tuple(x - y for x, y in zip(a, b))


def scale(c: int, a: Weight) -> Weight:
    return tuple(c * x for x in a)


def dominance_leq(rs: RootSystem, lam: Weight, mu: Weight) -> tuple[bool, Optional[tuple[int, ...]]]:
    """lam <= mu iff mu - lam is a non-negative integer combination of simple roots.

    Returns the certificate x (simple-root coordinates of mu - lam) when true.
    """
    x = rs.to_simple_coords(sub(mu, lam))
    if all(c.denominator == 1 and c >= 0 for c in x):
        return True, tuple(int(c) for c in x)
    return False, None


def simple_reflection(rs: RootSystem, i: int, lam: Weight) -> Weight:
    c = pairing(lam, i)
    a = rs.simple_root(i)
    return tuple(x - c * y for x, y in zip(lam, a))


def apply_word(rs: RootSystem, word: Sequence[int], lam: Weight) -> Weight:
    """s_{w[0]} s_{w[1]} ... s_{w[-1]} applied to lam (rightmost first)."""
    for i in reversed(word):
        lam = simple_reflection(rs, i, lam)
    return lam


def weyl_orbit(rs: RootSystem, lam: Weight) -> set[Weight]:
    seen = {tuple(lam)}
    todo = [tuple(lam)]
    while todo:
        w = todo.pop()
        for i in range(rs.rank):
            r = simple_reflection(rs, i, w)
            if r not in seen:
                seen.add(r)
                todo.append(r)
    return seen


def dominant_representative(rs: RootSystem, lam: Weight) -> tuple[Weight, list[int]]:
    """Reflect away negative coordinates until dominant.

    Returns (dominant weight, word) with dominant = apply_word(word, lam).
    """
    lam = tuple(lam)
    applied: list[int] = []
    while True:
        i = next((j for j, c in enumerate(lam) if c < 0), None)
        if i is None:
            return lam, list(reversed(applied))
        lam = simple_reflection(rs, i, lam)
        applied.append(i)


def minus_w0(rs: RootSystem, lam: Weight) -> Weight:
    return dominant_representative(rs, tuple(-c for c in lam))[0]


def weyl_group_words(rs: RootSystem, cap: int = 120) -> list[list[int]]:
    """One reduced word per Weyl group element, via the orbit of rho.

    The identity comes first and the longest element last.
    """
    rho = rs.rho
    words = {rho: []}
    layer = [rho]
    while layer:
        nxt = []
        for w in layer:
            for i in range(rs.rank):
                if w[i] <= 0:
                    continue
                r = simple_reflection(rs, i, w)
                if r not in words:
                    words[r] = [i] + words[w]
                    nxt.append(r)
                    if len(words) > cap:
                        raise RootSystemError(f"Weyl group of {rs} exceeds the configured bound of {cap} elements")
        layer = nxt
    return sorted(words.values(), key=len)


def in_convex_hull_of_orbit(rs: RootSystem, lam: Weight, gamma: Weight) -> bool:
    """gamma lies in the real convex hull of W.lam (lam dominant).

    Uses the fact that this holds iff lam - dom(gamma) is a non-negative real
    combination of simple roots.
    """
    dom, _ = dominant_representative(rs, gamma)
    return all(c >= 0 for c in rs.to_simple_coords(sub(lam, dom)))


def root_lattice_member(rs: RootSystem, gamma: Weight) -> bool:
    return all(c.denominator == 1 for c in rs.to_simple_coords(gamma))


def dominant_weights_below(rs: RootSystem, lam: Weight) -> list[Weight]:
    """All dominant gamma with gamma <= lam."""
    out = {tuple(lam)}
    todo = [tuple(lam)]
    pos = rs.positive_roots
    while todo:
        g = todo.pop()
        for beta in pos:
            h = sub(g, beta)
            if is_dominant(h) and h not in out:
                out.add(h)
                todo.append(h)
    return sorted(out, key=lambda g: (rs.height(rs.to_simple_coords(sub(lam, g))), tuple(-c for c in g)))


__all__ = [
    "RootSystemSpec", "RootSystem", "RootSystemError", "Weight", "build_root_system",
    "pairing", "dominance_leq", "simple_reflection", "weyl_orbit", "dominant_representative",
    "minus_w0", "weyl_group_words", "apply_word", "is_dominant", "fundamental_weight",
    "parse_weight", "in_convex_hull_of_orbit", "dominant_weights_below", "add", "sub", "scale",
]
