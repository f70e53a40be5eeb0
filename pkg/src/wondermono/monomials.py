"""Standard monomials on orbit closures.

A basis index for an orbit closure and a dominant weight lam packs a boundary
exponent vector n, the dominant shape mu = lam - n.alpha, and a pair of paths
of shapes (-w0 mu, mu).  The pair is standard on a closure when some
irreducible component of the closure's slice to the doubled flag variety
admits both initial directions in its Bruhat intervals.
"""

from __future__ import annotations

from dataclasses import dataclass

from .orbits import OrbitLabel, OrbitPoset, schubert_pairs
from .paths import PathPair, generate_pairs, initial_direction, pair_weight
from .rootsys import (
    RootVector,
    Weight,
    dominance_diff,
    dominant_below,
    is_dominant,
    support,
)
from .weyl import WeylElement, WeylGroup


@dataclass(frozen=True)
class MonomialIndex:
    """One standard monomial: boundary exponents, shape, and path pair."""

    powers: RootVector
    mu: Weight
    pair: PathPair

    @property
    def degree(self) -> int:
        return sum(self.powers)


@dataclass(frozen=True)
class GradedTable:
    """Counts of basis indices by total boundary degree, zero rows included."""

    rows: tuple[tuple[int, int], ...]

    def total(self) -> int:
        return sum(count for _, count in self.rows)

    def count(self, degree: int) -> int:
        for d, count in self.rows:
            if d == degree:
                return count
        return 0


def is_standard_on_components(group: WeylGroup, pair: PathPair, components) -> bool:
    """True when some component pair dominates both initial directions.

    An empty component list admits nothing.
    """
    a = initial_direction(group, pair.left)
    b = initial_direction(group, pair.right)
    for comp in components:
        if group.bruhat_leq(a, comp.left) and group.bruhat_leq(b, comp.right):
            return True
    return False


def is_standard_on_closure(pair: PathPair, z: OrbitLabel) -> bool:
    return is_standard_on_components(z.group, pair, schubert_pairs(z))


def has_schubert_sections(w: WeylElement, mu: Weight) -> bool:
    """Section-existence test for a weight on the Schubert variety of w.

    The coordinate of mu at every simple root sent negative by w must be
    nonnegative.  Dominant weights pass trivially.
    """
    group = w.group
    return all(
        mu[i - 1] >= 0
        for i in range(1, group.rank + 1)
        if group.simple_root_negated(w, i)
    )


def basis_indices(z: OrbitLabel, lam: Weight) -> tuple[MonomialIndex, ...]:
    """All basis indices for the closure of z in degree lam.

    Ordered by exponent vector (lexicographic, ascending) and then by the
    enumeration order of the path pairs of each shape.
    """
    group = z.group
    rs = group.rs
    if not is_dominant(lam):
        raise ValueError(f"weight {lam} is not dominant")
    comps = schubert_pairs(z)
    out = []
    for mu, nvec in dominant_below(rs, lam):
        if not support(nvec) <= z.stratum:
            continue
        for pair in generate_pairs(group, mu):
            if is_standard_on_components(group, pair, comps):
                out.append(MonomialIndex(nvec, mu, pair))
    return tuple(out)


def is_basis_index(z: OrbitLabel, lam: Weight, idx: MonomialIndex) -> bool:
    """Membership test matching basis_indices without enumerating everything."""
    rs = z.group.rs
    if not is_dominant(lam) or not is_dominant(idx.mu):
        return False
    diff = dominance_diff(rs, lam, idx.mu)
    if diff is None or diff != idx.powers:
        return False
    if not support(idx.powers) <= z.stratum:
        return False
    if idx.pair.mu != idx.mu:
        return False
    return is_standard_on_closure(idx.pair, z)


def graded_counts(z: OrbitLabel, lam: Weight) -> GradedTable:
    """Basis counts by boundary degree, including degrees with no index.

    The degree range runs from 0 to the largest degree of any exponent vector
    admissible for z's stratum, so interior zero rows survive.
    """
    rs = z.group.rs
    degrees = [
        sum(nvec) for _, nvec in dominant_below(rs, lam) if support(nvec) <= z.stratum
    ]
    counts = {d: 0 for d in range(max(degrees) + 1)}
    for idx in basis_indices(z, lam):
        counts[idx.degree] += 1
    return GradedTable(tuple(sorted(counts.items())))


def nonstandard_orbits(pair: PathPair, poset: OrbitPoset) -> list[OrbitLabel]:
    """All orbits on whose closure the pair fails to be standard."""
    return [z for z in poset.labels if not is_standard_on_closure(pair, z)]


def nonstandard_components(pair: PathPair, poset: OrbitPoset) -> list[OrbitLabel]:
    """Maximal orbits of the nonstandard locus of a pair."""
    mask = 0
    for k, z in enumerate(poset.labels):
        if not is_standard_on_closure(pair, z):
            mask |= 1 << k
    return poset.maximal_of_mask(mask)


def correction_support(pair: PathPair, z: OrbitLabel, lam: Weight) -> tuple[MonomialIndex, ...]:
    """Basis indices that can carry straightening corrections for a pair.

    The pair must be nonstandard on z's closure.  Candidates are the basis
    indices of positive boundary degree whose pair weight matches.
    """
    if is_standard_on_closure(pair, z):
        raise ValueError("pair is standard on this orbit closure, nothing to correct")
    target = pair_weight(pair)
    return tuple(
        idx
        for idx in basis_indices(z, lam)
        if any(idx.powers) and pair_weight(idx.pair) == target
    )
