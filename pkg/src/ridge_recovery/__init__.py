"""Ridge subspace recovery from point samples with sliced inverse regression (SIR)
and sliced average variance estimation (SAVE)."""

from .errors import (
    DatasetFormatError,
    DimensionMismatchError,
    IllConditionedCovarianceError,
    InsufficientSamplesError,
    InvalidInputError,
    RidgeRecoveryError,
    SliceTooSmallError,
)
from .inverse_regression import (
    Fit,
    MomentMatrixEstimate,
    SubspaceEstimate,
    estimate_subspace,
    fit,
    save_matrix,
    sir_matrix,
)
from .linalg import EigenDecomposition, inv_sqrt, subspace_distance, sym_eig
from .slicing import SlicePartition, SlicingStrategy, partition
from .standardize import Dataset, Standardizer

__version__ = "0.1.0"
