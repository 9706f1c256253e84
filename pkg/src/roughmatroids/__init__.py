"""Covering-based rough sets and rough matroids over finite universes.

Neighborhood and approximation operators, definable-set families and their
lattices, axiom-system checkers with replayable witnesses, structural
constructions, and brute-force enumeration oracles, all at desk scale.
"""

from .core import (
    BinaryRelation,
    Covering,
    InvalidCoveringError,
    LawViolationError,
    NeighborhoodMap,
    SizeBoundError,
    Subset,
    Universe,
    UniverseMismatchError,
    check_duality,
    lower_approx,
    neighborhoods_of_covering,
    successor_neighborhoods,
    upper_approx,
)
from .definable import (
    SetFamily,
    check_closure,
    definable_family,
    fixpoint_family_lower,
    fixpoint_family_upper,
    is_definable,
)
from .lattice import (
    LatticeDiagram,
    NotALatticeError,
    build_lattice,
    check_atomicity,
    check_lattice_laws,
    export_dot,
)
from .axioms import (
    check_lower_rough_matroid_covering,
    check_lower_rough_matroid_relation,
    check_matroid,
    check_matroid_condition,
    check_rough_matroid_covering,
    check_upper_rough_matroid_covering,
    check_upper_rough_matroid_relation,
)
from .constructions import (
    check_ci3_prime,
    check_uniform_proposition,
    covering_disjoint_sum,
    direct_sum,
    family_disjoint_sum,
    merge_universes,
    one_point_extension_blocked,
    uniform_family,
)
from .oracle import (
    EnumerationBudget,
    classical_matroids,
    cross_check,
    enumerate_rough_matroids,
    random_covering,
    random_relation,
)
from .report import AxiomFailure, CheckReport

__version__ = "0.1.0"

__all__ = [
    "AxiomFailure",
    "BinaryRelation",
    "CheckReport",
    "Covering",
    "EnumerationBudget",
    "InvalidCoveringError",
    "LatticeDiagram",
    "LawViolationError",
    "NeighborhoodMap",
    "NotALatticeError",
    "SetFamily",
    "SizeBoundError",
    "Subset",
    "Universe",
    "UniverseMismatchError",
    "build_lattice",
    "check_atomicity",
    "check_ci3_prime",
    "check_closure",
    "check_duality",
    "check_lattice_laws",
    "check_lower_rough_matroid_covering",
    "check_lower_rough_matroid_relation",
    "check_matroid",
    "check_matroid_condition",
    "check_rough_matroid_covering",
    "check_uniform_proposition",
    "check_upper_rough_matroid_covering",
    "check_upper_rough_matroid_relation",
    "classical_matroids",
    "covering_disjoint_sum",
    "cross_check",
    "definable_family",
    "direct_sum",
    "enumerate_rough_matroids",
    "export_dot",
    "family_disjoint_sum",
    "fixpoint_family_lower",
    "fixpoint_family_upper",
    "is_definable",
    "lower_approx",
    "merge_universes",
    "neighborhoods_of_covering",
    "one_point_extension_blocked",
    "random_covering",
    "random_relation",
    "successor_neighborhoods",
    "uniform_family",
    "upper_approx",
]
