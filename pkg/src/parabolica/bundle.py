"""Splitting analysis for irreducible homogeneous vector bundles.

A bundle is specified by a parabolic and a highest weight that is dominant
for the Levi.  The questions answered here: the rank of the defining
module (Weyl dimension formula over the Levi), the first-Chern weight
lambda(E), and whether E factors as E0 (x) L0 with c1(E0) = 0.  The
verdict is an integrality test, so every quantity is an exact rational.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import linalg
from .parabolic import NotDominantError, ParabolicData, decompose_weight, is_dominant_for_levi
from .rootsys import Weight


@dataclass(frozen=True)
class BundleSpec:
    parabolic: ParabolicData
    highest_weight: Weight

    def __post_init__(self) -> None:
        if self.highest_weight.rank != self.parabolic.rs.rank:
            raise ValueError("weight rank must match the root system rank")
        if not self.highest_weight.is_integral:
            raise ValueError("integral highest weight required")
        if not is_dominant_for_levi(self.highest_weight, self.parabolic):
            raise NotDominantError("highest weight must be dominant for the Levi factor")


@dataclass(frozen=True)
class ChernData:
    rank: int
    lambda_E: Weight
    cramer_a: tuple[Fraction, ...]


@dataclass(frozen=True)
class SplittingReport:
    chern: ChernData
    criterion_values: dict[int, Fraction]
    splits: bool
    lambda_L0: Weight | None
    lambda_E0_check: Weight | None


def weyl_dim(p: ParabolicData, lambda_s: Weight) -> int:
    """Dimension of the irreducible Levi module with highest weight lambda_s.

    Computed as prod <lambda_s + rho, alpha^vee> / <rho, alpha^vee> over the
    positive roots of the Levi subsystem, in exact rationals; the result is
    asserted to be a positive integer.
    """
    for i in p.picard_nodes:
        if lambda_s[i] != 0:
            raise ValueError("lambda_s must be supported on the Levi nodes")
    for i in p.levi_nodes:
        if lambda_s[i] < 0:
            raise NotDominantError("lambda_s must be dominant for the Levi factor")
    levi = p.levi_system
    coords = p.levi_coords(lambda_s)
    rho = levi.weyl_vector()
    shifted = coords + rho
    dim = Fraction(1)
    for root in levi.positive_roots:
        dim *= levi.pairing(shifted, root) / levi.pairing(rho, root)
    assert dim.denominator == 1 and dim > 0
    return int(dim)


def criterion_ratios(p: ParabolicData, lambda_s: Weight) -> tuple[Fraction, ...]:
    """det(C_I(lambda_s, alpha)) / det(C_I) for each alpha in I.

    The alpha-row of the Levi Cartan matrix is replaced by the row of
    pairings (<lambda_s, beta^vee>)_{beta in I}.  The same numbers solve
    C_I^T x = b with b the lambda_s coordinate vector on I; both routes are
    computed and must agree exactly.
    """
    coords = [lambda_s[i] for i in p.levi_nodes]
    if not p.levi_nodes:
        return ()
    base = [list(row) for row in p.levi_cartan]
    denom = linalg.det(base)
    ratios = []
    for pos in range(len(p.levi_nodes)):
        replaced = [row[:] for row in base]
        replaced[pos] = coords
        ratios.append(linalg.det(replaced) / denom)
    solved = linalg.solve(linalg.transpose(base), coords)
    assert tuple(ratios) == solved, "Cramer determinants disagree with the exact solve"
    return tuple(ratios)


def cramer_coefficients(spec: BundleSpec) -> tuple[Fraction, ...]:
    """First-Chern coefficients a_alpha(E) = rank * det-ratio, alpha in I."""
    p = spec.parabolic
    split = decompose_weight(spec.highest_weight, p)
    rank = weyl_dim(p, split.lambda_s)
    ratios = criterion_ratios(p, split.lambda_s)
    coeffs = tuple(rank * r for r in ratios)
    if p.levi_nodes:
        b = [rank * split.lambda_s[i] for i in p.levi_nodes]
        assert coeffs == linalg.solve(linalg.transpose(p.levi_cartan), b)
    return coeffs


def chern_weight(spec: BundleSpec) -> ChernData:
    """lambda(E) from the Cramer coefficients and the central character."""
    p = spec.parabolic
    rs = p.rs
    split = decompose_weight(spec.highest_weight, p)
    rank = weyl_dim(p, split.lambda_s)
    coeffs = cramer_coefficients(spec)

    coords = [Fraction(0)] * rs.rank
    for beta in p.picard_nodes:
        coords[beta] = sum(
            (a * rs.cartan[alpha][beta] for a, alpha in zip(coeffs, p.levi_nodes)),
            Fraction(0),
        )
    lambda_e = Weight(tuple(coords)) - rank * split.lambda_c

    det_levi = linalg.det(p.levi_cartan)
    for a in coeffs:
        assert (a * det_levi).denominator == 1, "a_alpha denominators must divide det(C_I)"
    for i in p.levi_nodes:
        assert lambda_e[i] == 0

    # r*lambda + lambda(E) must land in the span of the Levi simple roots,
    # with exactly the Cramer coefficients as coordinates.
    residue = rank * spec.highest_weight + lambda_e
    in_simple = rs.weight_in_simple_roots(residue)
    for i in range(rs.rank):
        expected = coeffs[p.levi_nodes.index(i)] if i in p.levi_nodes else Fraction(0)
        assert in_simple[i] == expected, "residue identity failed"

    return ChernData(rank=rank, lambda_E=lambda_e, cramer_a=coeffs)


def canonical_weight(p: ParabolicData) -> Weight:
    """First-Chern weight of the holomorphic tangent bundle: delta itself."""
    return p.delta


def splitting_report(spec: BundleSpec) -> SplittingReport:
    """Full splitting verdict with per-generator criterion values.

    criterion[beta] = sum_{alpha in I} det-ratio(alpha) * <alpha, beta^vee>
    for each node beta outside I.  The bundle splits as E0 (x) L0 with
    c1(E0) = 0 exactly when every value is an integer, equivalently when
    lambda(E)/rank is an integral weight; both routes are checked against
    each other.  Values are reported for every beta, not short-circuited.
    """
    p = spec.parabolic
    rs = p.rs
    split = decompose_weight(spec.highest_weight, p)
    chern = chern_weight(spec)
    ratios = criterion_ratios(p, split.lambda_s)

    criterion: dict[int, Fraction] = {}
    for beta in p.picard_nodes:
        criterion[beta] = sum(
            (r * rs.cartan[alpha][beta] for r, alpha in zip(ratios, p.levi_nodes)),
            Fraction(0),
        )

    per_generator = chern.lambda_E / chern.rank
    for beta in p.picard_nodes:
        assert per_generator[beta] == criterion[beta] - split.lambda_c[beta]

    splits_from_criterion = all(v.denominator == 1 for v in criterion.values())
    splits_from_degrees = per_generator.is_integral
    assert splits_from_criterion == splits_from_degrees, "criterion and degree tests disagree"

    lambda_l0 = lambda_e0_check = None
    if splits_from_criterion:
        lambda_l0 = per_generator
        lambda_e0_check = chern.lambda_E - chern.rank * lambda_l0
        assert lambda_e0_check.is_zero
    return SplittingReport(
        chern=chern,
        criterion_values=criterion,
        splits=splits_from_criterion,
        lambda_L0=lambda_l0,
        lambda_E0_check=lambda_e0_check,
    )


def line_bundle_weight(coeffs: Sequence[int], p: ParabolicData) -> Weight:
    """Embed per-generator degrees as an integral weight supported off I.

    ``coeffs`` are ordered by increasing node index over the complement of I;
    the resulting weight has <w, alpha^vee> equal to the given degree on each
    Picard generator and zero on the Levi nodes.
    """
    nodes = p.picard_nodes
    if len(coeffs) != len(nodes):
        raise ValueError(f"expected {len(nodes)} degree(s), got {len(coeffs)}")
    coords = [Fraction(0)] * p.rs.rank
    for value, node in zip(coeffs, nodes):
        coords[node] = Fraction(value)
    return Weight(tuple(coords))
