"""Exact combinatorics of finite root systems.

Conventions, fixed once for the whole package:

* simple roots are numbered in Bourbaki order;
* the Cartan matrix is ``C[i][j] = <alpha_i, alpha_j^vee>``, so the i-th
  simple root written in the fundamental-weight basis is the i-th row of C;
* weights live in the fundamental-weight basis with exact rational
  coordinates, ``coords[j] = <lambda, alpha_j^vee>``;
* positive roots are stored as integer coefficient vectors over the simple
  roots, sorted by (height, coefficients) for deterministic output.

All arithmetic in this module is exact.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import linalg

Root = tuple[int, ...]

_RANK_RANGE = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (3, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}

_TYPE_RE = re.compile(r"^([A-Ga-g])\s*(\d+)$")


class InvalidTypeError(ValueError):
    """Family/rank combination outside the finite simple types."""


@dataclass(frozen=True)
class SimpleLieType:
    family: str
    rank: int

    def __post_init__(self) -> None:
        lo, hi = _RANK_RANGE.get(self.family, (None, None))
        if lo is None:
            raise InvalidTypeError(f"unknown family {self.family!r}")
        if self.rank < lo or (hi is not None and self.rank > hi):
            raise InvalidTypeError(f"rank {self.rank} out of range for type {self.family}")

    @classmethod
    def from_string(cls, text: str) -> "SimpleLieType":
        match = _TYPE_RE.match(text.strip())
        if not match:
            raise InvalidTypeError(f"cannot parse Dynkin type {text!r}")
        return cls(match.group(1).upper(), int(match.group(2)))

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def positive_root_count(t: SimpleLieType) -> int:
    """Closed-form number of positive roots of each finite simple type."""
    n = t.rank
    if t.family == "A":
        return n * (n + 1) // 2
    if t.family in ("B", "C"):
        return n * n
    if t.family == "D":
        return n * (n - 1)
    if t.family == "G":
        return 6
    if t.family == "F":
        return 24
    return {6: 36, 7: 63, 8: 120}[n]


@dataclass(frozen=True)
class Weight:
    """Point of the weight lattice (or its rational span), fw coordinates."""

    coords: tuple[Fraction, ...]

    @classmethod
    def of(cls, *coords: int | Fraction | str) -> "Weight":
        return cls(tuple(Fraction(c) for c in coords))

    @classmethod
    def zero(cls, rank: int) -> "Weight":
        return cls((Fraction(0),) * rank)

    @property
    def rank(self) -> int:
        return len(self.coords)

    @property
    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coords)

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def __getitem__(self, i: int) -> Fraction:
        return self.coords[i]

    def __add__(self, other: "Weight") -> "Weight":
        self._check(other)
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Weight") -> "Weight":
        self._check(other)
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Weight":
        return Weight(tuple(-c for c in self.coords))

    def __mul__(self, scalar: int | Fraction) -> "Weight":
        return Weight(tuple(c * scalar for c in self.coords))

    __rmul__ = __mul__

    def __truediv__(self, scalar: int | Fraction) -> "Weight":
        return Weight(tuple(c / scalar for c in self.coords))

    def restricted(self, indices: Iterable[int]) -> "Weight":
        """Zero out every coordinate outside ``indices``."""
        keep = set(indices)
        return Weight(tuple(c if i in keep else Fraction(0) for i, c in enumerate(self.coords)))

    def _check(self, other: "Weight") -> None:
        if len(self.coords) != len(other.coords):
            raise ValueError("weight rank mismatch")


def fundamental_weight(rank: int, index: int) -> Weight:
    coords = [Fraction(0)] * rank
    coords[index] = Fraction(1)
    return Weight(tuple(coords))


@dataclass(frozen=True)
class RootSystem:
    """Cartan matrix, symmetrizers and the full list of positive roots.

    ``symmetrizers`` are the minimal positive integers d with D*C symmetric;
    ``root_norms`` are the minimal positive integers e with C*E symmetric,
    i.e. e_j is proportional to half the squared length of alpha_j.  Both
    are normalized per connected component.
    """

    lie_type: SimpleLieType | None
    cartan: tuple[tuple[int, ...], ...]
    symmetrizers: tuple[int, ...]
    root_norms: tuple[int, ...]
    positive_roots: tuple[Root, ...]

    @property
    def rank(self) -> int:
        return len(self.cartan)

    def simple_root(self, i: int) -> Root:
        root = [0] * self.rank
        root[i] = 1
        return tuple(root)

    def root_norm_sq(self, root: Root) -> Fraction:
        """(beta, beta) in the integer normalization fixed by root_norms."""
        c, e = self.cartan, self.root_norms
        total = 0
        for i, mi in enumerate(root):
            if mi:
                for j, mj in enumerate(root):
                    if mj:
                        total += mi * mj * c[i][j] * e[j]
        return Fraction(total)

    def coroot_coefficients(self, root: Root) -> tuple[Fraction, ...]:
        """Expansion of beta^vee over the simple coroots alpha_j^vee."""
        norm = self.root_norm_sq(root)
        return tuple(Fraction(2 * m * e, norm) for m, e in zip(root, self.root_norms))

    def pairing(self, weight: Weight, root: Root) -> Fraction:
        """<lambda, beta^vee> = 2(lambda, beta)/(beta, beta), exactly."""
        if weight.rank != self.rank or len(root) != self.rank:
            raise ValueError("dimension mismatch")
        e = self.root_norms
        num = 2 * sum((m * c * ej for m, c, ej in zip(root, weight.coords, e)), Fraction(0))
        return num / self.root_norm_sq(root)

    def root_as_weight(self, root: Root) -> Weight:
        """beta = sum_i m_i alpha_i rewritten over the fundamental weights."""
        coords = [Fraction(0)] * self.rank
        for i, m in enumerate(root):
            if m:
                for j in range(self.rank):
                    coords[j] += m * self.cartan[i][j]
        return Weight(tuple(coords))

    def weyl_vector(self) -> Weight:
        return Weight((Fraction(1),) * self.rank)

    def weight_in_simple_roots(self, weight: Weight) -> tuple[Fraction, ...]:
        """Coordinates of a weight over the simple roots (exact solve of C^T x = c)."""
        return linalg.solve(linalg.transpose(self.cartan), weight.coords)

    def to_dict(self) -> dict:
        return {
            "type": str(self.lie_type) if self.lie_type else "custom",
            "cartan": [list(row) for row in self.cartan],
            "positive_roots": [list(root) for root in self.positive_roots],
        }


def cartan_matrix(t: SimpleLieType) -> list[list[int]]:
    """Bourbaki Cartan matrix with entries C[i][j] = <alpha_i, alpha_j^vee>."""
    n = t.rank
    c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i: int, j: int, cij: int = -1, cji: int = -1) -> None:
        c[i][j] = cij
        c[j][i] = cji

    if t.family in ("A", "B", "C", "F"):
        for i in range(n - 1):
            link(i, i + 1)
        if t.family == "B":
            # alpha_n short: <alpha_{n-1}, alpha_n^vee> = -2
            link(n - 2, n - 1, -2, -1)
        elif t.family == "C":
            link(n - 2, n - 1, -1, -2)
        elif t.family == "F":
            link(1, 2, -2, -1)
    elif t.family == "D":
        for i in range(n - 3):
            link(i, i + 1)
        link(n - 3, n - 2)
        link(n - 3, n - 1)
    elif t.family == "E":
        for i, j in [(0, 2), (2, 3), (3, 4), (1, 3)]:
            link(i, j)
        for i in range(4, n - 1):
            link(i, i + 1)
    elif t.family == "G":
        # alpha_1 short, alpha_2 long
        link(0, 1, -1, -3)
    return c


def _validate_cartan(cartan: Sequence[Sequence[int]]) -> None:
    n = len(cartan)
    for i in range(n):
        if len(cartan[i]) != n:
            raise ValueError("Cartan matrix must be square")
        if cartan[i][i] != 2:
            raise ValueError("Cartan diagonal must be 2")
        for j in range(n):
            if i != j:
                if cartan[i][j] > 0:
                    raise ValueError("off-diagonal Cartan entries must be <= 0")
                if (cartan[i][j] == 0) != (cartan[j][i] == 0):
                    raise ValueError("Cartan zero pattern must be symmetric")
    if n and linalg.det(cartan) <= 0:
        raise ValueError("Cartan matrix is not of finite type")


def _component_scaled(values: list[Fraction | None], component: list[int]) -> None:
    denom_lcm = math.lcm(*(values[i].denominator for i in component))
    scaled = [values[i] * denom_lcm for i in component]
    divisor = math.gcd(*(int(v) for v in scaled))
    for i, v in zip(component, scaled):
        values[i] = Fraction(int(v) // divisor)


def _symmetrizers(cartan: Sequence[Sequence[int]], left: bool) -> tuple[int, ...]:
    """Minimal positive integers making D*C (left) or C*E (right) symmetric."""
    n = len(cartan)
    values: list[Fraction | None] = [None] * n
    for start in range(n):
        if values[start] is not None:
            continue
        values[start] = Fraction(1)
        stack = [start]
        component = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if cartan[i][j] != 0 and i != j and values[j] is None:
                    ratio = Fraction(cartan[i][j], cartan[j][i])
                    values[j] = values[i] * (ratio if left else 1 / ratio)
                    stack.append(j)
                    component.append(j)
        _component_scaled(values, component)
    result = tuple(int(v) for v in values)
    for i in range(n):
        for j in range(n):
            if left:
                assert result[i] * cartan[i][j] == result[j] * cartan[j][i]
            else:
                assert cartan[i][j] * result[j] == cartan[j][i] * result[i]
    return result


def _positive_roots(cartan: Sequence[Sequence[int]]) -> tuple[Root, ...]:
    """Enumerate the positive roots by height via root-string closure.

    Starting from the simple roots, alpha + alpha_i is a root exactly when
    q = p - <alpha, alpha_i^vee> is positive, where p counts how far the
    alpha_i-string continues below alpha.  Every root of smaller height is
    already materialized when p is computed, so the scan is complete.
    """
    n = len(cartan)
    simple = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
    known: set[Root] = set(simple)
    level: list[Root] = list(simple)
    while level:
        nxt: set[Root] = set()
        for root in level:
            for i in range(n):
                pairing = sum(m * cartan[j][i] for j, m in enumerate(root) if m)
                p = 0
                lower = list(root)
                while True:
                    lower[i] -= 1
                    if lower[i] < 0 or tuple(lower) not in known:
                        break
                    p += 1
                if p - pairing > 0:
                    upper = list(root)
                    upper[i] += 1
                    candidate = tuple(upper)
                    if candidate not in known:
                        nxt.add(candidate)
        known.update(nxt)
        level = sorted(nxt)
    return tuple(sorted(known, key=lambda r: (sum(r), r)))


def root_system_from_cartan(
    cartan: Sequence[Sequence[int]], lie_type: SimpleLieType | None = None
) -> RootSystem:
    """Build a root system from any finite-type (possibly reducible) Cartan matrix."""
    _validate_cartan(cartan)
    frozen = tuple(tuple(int(x) for x in row) for row in cartan)
    rs = RootSystem(
        lie_type=lie_type,
        cartan=frozen,
        symmetrizers=_symmetrizers(frozen, left=True) if frozen else (),
        root_norms=_symmetrizers(frozen, left=False) if frozen else (),
        positive_roots=_positive_roots(frozen),
    )
    if lie_type is not None:
        expected = positive_root_count(lie_type)
        if len(rs.positive_roots) != expected:
            raise AssertionError(
                f"{lie_type}: enumerated {len(rs.positive_roots)} positive roots, expected {expected}"
            )
    return rs


def build_root_system(t: SimpleLieType | str) -> RootSystem:
    """Root system of a finite simple type, e.g. build_root_system("B3")."""
    if isinstance(t, str):
        t = SimpleLieType.from_string(t)
    return root_system_from_cartan(cartan_matrix(t), lie_type=t)
