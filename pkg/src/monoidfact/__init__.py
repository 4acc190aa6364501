"""Exact factorization invariants of finitely generated cancellative
commutative monoids: factoriality, half- and length-factoriality, pure
irreducibles, Betti elements, catenary degrees, and truncated Krull models
of Dedekind domains.
"""

from .congruence import (
    BettiSet,
    MasterRelation,
    RelationVector,
    betti_elements,
    kernel_generating_set,
    master_relation,
    mu,
    r_classes,
)
from .errors import (
    BoundRequiredForInfiniteGroup,
    BoundTooSmallWarning,
    ElementNotInMonoid,
    EmptyGenerators,
    InputError,
    MonoidError,
    NonPositivePuiseuxGenerator,
    NotPLS,
    NotPointed,
    PropertyAssertionError,
)
from .factorizations import (
    Factorization,
    FactorizationSet,
    distance,
    factorizations,
    length_set,
)
from .intlinalg import (
    LatticeBasis,
    Sublattice2,
    hnf,
    image_lattice_2d,
    integer_kernel,
    rational_rank,
)
from .invariants import (
    CatenaryReport,
    Classification,
    PureSets,
    atom_signature,
    catenary_element,
    catenary_monoid,
    classify,
    decompose,
    is_factorial,
    is_half_factorial,
    is_length_factorial,
    pure_sets,
    puiseux_classify,
    relation_shape_check,
)
from .krull import (
    IdealAtom,
    PrimeDistribution,
    distribution_from_document,
    ideal_atoms,
    to_presentation,
    verify_dedekind_example,
)
from .presentation import (
    AmbientGroup,
    Grading,
    MonoidPresentation,
    MonoidSpec,
    compute_atoms,
    enumerate_elements,
    find_grading,
    gp_rank,
    normalize_spec,
    spec_from_document,
)

__version__ = "0.1.0"
