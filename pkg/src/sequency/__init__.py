"""Sequency analysis of +1/-1 matrices."""

from .classifier import Classification, classify, classify_real, is_hadamard
from .combinatorics import (
    CountReport,
    SearchSpaceTooLargeError,
    columns_with_sequency,
    count_maximal_chains,
    count_sequency_complete,
    count_sequency_ordered,
    enumerate_ordered,
    grid_identity_check,
)
from .core import (
    DegenerateLengthError,
    NonFiniteEntryError,
    SequencyError,
    SequencyProfile,
    SignMatrix,
    SignVector,
    boundary_flip,
    derived_sequence,
    profile,
    project_signs,
    sequency,
)
from .formats import SgnFormatError, dumps_sgn, load_sgn, loads_sgn
from .generators import (
    GeneratorKind,
    generate,
    ordered_threshold,
    power_residue,
    power_residue_profile,
    prefix_sign_changes,
    threshold,
    walsh_natural,
    walsh_sequency,
)
from .tensor import (
    FactorSummary,
    MixedRadixIndex,
    kronecker,
    kronecker_power,
    mod_residue_profile_5,
    predict_nfold,
    predict_pair,
    predict_pair_special,
)

__version__ = "0.1.0"
