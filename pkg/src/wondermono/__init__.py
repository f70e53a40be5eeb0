"""Standard monomial combinatorics on wonderful group compactifications.

Exact integer and rational arithmetic throughout; weights are tuples of
fundamental-weight coordinates under Bourbaki numbering of the simple roots.
"""

from __future__ import annotations

from .demazure import char_dim, demazure_character, weyl_dim
from .monomials import (
    GradedTable,
    MonomialIndex,
    basis_indices,
    correction_support,
    graded_counts,
    has_schubert_sections,
    is_basis_index,
    is_standard_on_closure,
    is_standard_on_components,
    nonstandard_components,
    nonstandard_orbits,
)
from .orbits import (
    OrbitLabel,
    OrbitPoset,
    SchubertPair,
    build_poset,
    closure_leq,
    closure_witnesses,
    dimension,
    schubert_pairs,
    stratum_components,
)
from .paths import (
    LSPath,
    PathPair,
    generate_pairs,
    generate_paths,
    initial_direction,
    pair_weight,
    root_lower,
    straight_path,
)
from .rootsys import (
    RootSystem,
    RootSystemError,
    build,
    dominant_below,
    from_name,
    is_dominant,
)
from .verify import CheckResult, run_suite, suite_passed
from .weyl import WeylElement, WeylGroup

__version__ = "0.1.0"


def root_system(name: str) -> RootSystem:
    """Root system from a short name like "A2" or "G2"."""
    return from_name(name)


def weyl_group(name: str) -> WeylGroup:
    """Weyl group of the named root system."""
    return WeylGroup(from_name(name))


__all__ = [
    "CheckResult",
    "GradedTable",
    "LSPath",
    "MonomialIndex",
    "OrbitLabel",
    "OrbitPoset",
    "PathPair",
    "RootSystem",
    "RootSystemError",
    "SchubertPair",
    "WeylElement",
    "WeylGroup",
    "basis_indices",
    "build",
    "build_poset",
    "char_dim",
    "closure_leq",
    "closure_witnesses",
    "correction_support",
    "demazure_character",
    "dimension",
    "dominant_below",
    "from_name",
    "generate_pairs",
    "generate_paths",
    "graded_counts",
    "has_schubert_sections",
    "initial_direction",
    "is_basis_index",
    "is_dominant",
    "is_standard_on_closure",
    "is_standard_on_components",
    "nonstandard_components",
    "nonstandard_orbits",
    "pair_weight",
    "root_lower",
    "root_system",
    "run_suite",
    "schubert_pairs",
    "straight_path",
    "stratum_components",
    "suite_passed",
    "weyl_dim",
    "weyl_group",
]
