"""Scattered-factor universality: Simon's congruence, arch factorizations and optimization problems."""

from ._backend import BACKEND
from .arch import (
    ArchFactorization,
    InvariantError,
    UniversalityTables,
    arch_factorize,
    build_tables,
    factor_is_universal,
    iota,
    marker_word,
    zeta,
    zeta_with_witness,
)
from .concat import (
    CrossingDPLayer,
    SubsetDPLayer,
    UnsolvableError,
    WordSet,
    min_concat,
    min_concat_all_universal,
    min_concat_binary,
    min_concat_general,
    witness_bound,
)
from .core import (
    Alphabet,
    BigCount,
    MorphicPermutation,
    Word,
    WordError,
    apply_permutation,
    conjugate,
    normalize,
    reverse,
)
from .powers import (
    PowerCursor,
    check_wwR_universality,
    iota_of_power,
    min_power_for_k,
    palindrome_iota,
    permutation_double_iota,
    spectra_stable_under_square,
)
from .simon import (
    IntervalUnionFind,
    NormalForm,
    SimonCoordinates,
    equiv_k,
    shortlex_normal_form,
    smallest_distinguishing_k,
    uncommon_square_witness,
    x_coordinates,
    y_coordinates,
)
from .trim import Deletion, shortest_deletion

__version__ = "0.1.0"
