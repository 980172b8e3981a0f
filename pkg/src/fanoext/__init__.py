"""Finite-blocklength coding bounds from Hamming-distance error distributions."""

from .bounds import (
    BoundReport,
    ext_codebook_ub,
    ext_fano_cor1,
    ext_fano_relative_form,
    ext_fano_ub,
    ext_mutual_info_lb,
    fano_codebook_ub,
    fano_conditional_entropy_ub,
    fano_mutual_info_lb,
    qsc_bound_report,
    qsc_capacity_per_symbol,
    qsc_exact_conditional_entropy,
)
from .channel_oracle import (
    BudgetExceededError,
    DmcSpec,
    EnumerationBudget,
    exact_conditional_entropy,
    exact_mutual_info,
    hamming_distance_distribution,
    load_dmc,
    monte_carlo_error_histogram,
    qsc_spec,
)
from .error_model import (
    ErrorDistribution,
    ReferenceDistribution,
    block_error_probability,
    empirical_error_distribution,
    qsc_error_distribution,
    reference_distribution,
    symbol_error_probability,
)
from .numerics import (
    ProbVector,
    binary_entropy,
    entropy,
    log2_binomial,
    relative_entropy,
)

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "BudgetExceededError",
    "DmcSpec",
    "EnumerationBudget",
    "ErrorDistribution",
    "ProbVector",
    "ReferenceDistribution",
    "binary_entropy",
    "block_error_probability",
    "empirical_error_distribution",
    "entropy",
    "exact_conditional_entropy",
    "exact_mutual_info",
    "ext_codebook_ub",
    "ext_fano_cor1",
    "ext_fano_relative_form",
    "ext_fano_ub",
    "ext_mutual_info_lb",
    "fano_codebook_ub",
    "fano_conditional_entropy_ub",
    "fano_mutual_info_lb",
    "hamming_distance_distribution",
    "load_dmc",
    "log2_binomial",
    "monte_carlo_error_histogram",
    "qsc_bound_report",
    "qsc_capacity_per_symbol",
    "qsc_error_distribution",
    "qsc_exact_conditional_entropy",
    "qsc_spec",
    "reference_distribution",
    "relative_entropy",
    "symbol_error_probability",
]
