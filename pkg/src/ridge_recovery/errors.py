"""Exception types. Each carries a short machine-readable ``code`` used by the CLI."""


class RidgeRecoveryError(Exception):
    code = "error"


class InvalidInputError(RidgeRecoveryError, ValueError):
    code = "invalid_input"


class DimensionMismatchError(RidgeRecoveryError, ValueError):
    code = "dimension_mismatch"


class IllConditionedCovarianceError(RidgeRecoveryError, ValueError):
    code = "ill_conditioned_covariance"


class InsufficientSamplesError(RidgeRecoveryError, ValueError):
    code = "insufficient_samples"


class SliceTooSmallError(RidgeRecoveryError, ValueError):
    code = "slice_too_small"


class DatasetFormatError(RidgeRecoveryError, ValueError):
    code = "dataset_format"
