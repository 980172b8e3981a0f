"""Equivocation, mutual-information, and codebook-size bounds.

Three families live here:

* the classical bounds driven only by the block error probability and the
  alphabet size,
* the extended bounds driven by the full Hamming-distance error
  distribution (which are tight for q-ary symmetric channels), and
* the QSC closed forms used as exact references.

All values are in bits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .error_model import (
    ErrorDistribution,
    block_error_probability,
    qsc_error_distribution,
    reference_distribution,
    symbol_error_probability,
)
from .numerics import binary_entropy, entropy, log2_binomial, relative_entropy

_LN2 = math.log(2.0)

_IDENTITY_TOL = 1e-9


def _log2_pow2_minus_one(l: float) -> float:
    """log2(2^l - 1) computed stably from l = log2(M), without forming M."""
    if l < 1.0:
        raise ValueError(f"alphabet log-size must be >= 1 bit (M >= 2), got {l!r}")
    if l <= 50.0:
        return math.log2(2.0**l - 1.0)
    # M - 1 differs from M only in the far tail; log1p keeps full precision.
    return l + math.log1p(-(2.0**-l)) / _LN2


def fano_conditional_entropy_ub(p_e_block: float, m_size_log2: float) -> float:
    """Classical Fano bound H_b(P_e) + P_e * log2(M - 1), M given as log2 M."""
    if not 0.0 <= p_e_block <= 1.0:
        raise ValueError(f"error probability must lie in [0, 1], got {p_e_block!r}")
    correction = _log2_pow2_minus_one(m_size_log2)
    return binary_entropy(p_e_block) + p_e_block * correction


def fano_mutual_info_lb(p_e_block: float, m_size_log2: float) -> float:
    """Classical lower bound (1 - P_e) * log2 M - H_b(P_e); may go negative."""
    if not 0.0 <= p_e_block <= 1.0:
        raise ValueError(f"error probability must lie in [0, 1], got {p_e_block!r}")
    if m_size_log2 < 1.0:
        raise ValueError(f"alphabet log-size must be >= 1 bit, got {m_size_log2!r}")
    return (1.0 - p_e_block) * m_size_log2 - binary_entropy(p_e_block)


def fano_codebook_ub(i_sup: float, eps: float) -> float:
    """Classical converse log2 M <= (sup I + H_b(eps)) / (1 - eps)."""
    if not 0.0 <= eps < 1.0:
        raise ValueError(f"error constraint must lie in [0, 1), got {eps!r}")
    if i_sup < 0.0:
        raise ValueError(f"mutual information must be >= 0, got {i_sup!r}")
    return (i_sup + binary_entropy(eps)) / (1.0 - eps)


def ext_fano_ub(d: ErrorDistribution, q: int) -> float:
    """Extended equivocation bound H(p) + sum_k p_k log2(C(n,k)(q-1)^k).

    Driven by the full error distribution instead of just P_b; tight for
    q-ary symmetric channels.
    """
    if q < 2:
        raise ValueError(f"alphabet size must be >= 2, got {q}")
    n = d.n
    l2qm1 = math.log2(q - 1) if q > 2 else 0.0
    pattern_terms = math.fsum(
        pk * (log2_binomial(n, k) + k * l2qm1)
        for k, pk in enumerate(d.probs)
        if k >= 1 and pk > 0.0
    )
    return entropy(d.probs) + pattern_terms


def ext_fano_relative_form(d: ErrorDistribution, q: int) -> float:
    """Same bound rearranged as n log2 q - D(p || q_ref)."""
    ref = reference_distribution("Q", d.n, q)
    return d.n * math.log2(q) - relative_entropy(d.probs, ref.probs)


def ext_fano_cor1(d: ErrorDistribution, q: int) -> float:
    """Symbol-error form n - D(p || w_ref) + n P_s log2(q - 1)."""
    if q < 2:
        raise ValueError(f"alphabet size must be >= 2, got {q}")
    ref = reference_distribution("W", d.n)
    l2qm1 = math.log2(q - 1) if q > 2 else 0.0
    return (
        d.n
        - relative_entropy(d.probs, ref.probs)
        + d.n * symbol_error_probability(d) * l2qm1
    )


def ext_mutual_info_lb(d: ErrorDistribution, q: int) -> float:
    """Extended lower bound n log2 q - ext_fano_ub(d, q).

    Valid when the transmitted or received word is equiprobable; that
    hypothesis is the caller's to assert, it cannot be read off from the
    error distribution alone.
    """
    return d.n * math.log2(q) - ext_fano_ub(d, q)


def ext_codebook_ub(
    i_sup: float,
    d: ErrorDistribution,
    q: int,
    symbol_error_constraint: float | None = None,
) -> float:
    """Extended converse sup I - D(p || w_ref) + n (1 + eps_s log2(q - 1)).

    By default the symbol-error constraint eps_s is P_s of ``d`` itself;
    comparison protocols may pass a smaller constraint explicitly.
    """
    if q < 2:
        raise ValueError(f"alphabet size must be >= 2, got {q}")
    if i_sup < 0.0:
        raise ValueError(f"mutual information must be >= 0, got {i_sup!r}")
    if symbol_error_constraint is None:
        symbol_error_constraint = symbol_error_probability(d)
    ref = reference_distribution("W", d.n)
    l2qm1 = math.log2(q - 1) if q > 2 else 0.0
    return (
        i_sup
        - relative_entropy(d.probs, ref.probs)
        + d.n * (1.0 + symbol_error_constraint * l2qm1)
    )


def qsc_capacity_per_symbol(q: int, eps: float) -> float:
    """Capacity of one QSC use: log2 q + (1-p_e) log2(1-p_e) + (q-1) eps log2 eps."""
    if q < 2:
        raise ValueError(f"alphabet size must be >= 2, got {q}")
    pe = (q - 1) * eps
    if eps < 0.0 or pe > 1.0:
        raise ValueError(
            f"invalid QSC: need 0 <= (q-1)*eps <= 1, got q={q}, eps={eps!r}"
        )
    if eps == 0.0:
        return math.log2(q)
    acc = math.log2(q) + (q - 1) * eps * math.log2(eps)
    if pe < 1.0:
        acc += (1.0 - pe) * math.log2(1.0 - pe)
    return acc


def qsc_exact_conditional_entropy(n: int, q: int, eps: float) -> float:
    """Exact equivocation of n QSC uses: n * H(1 - p_e, eps, ..., eps).

    The channel is memoryless and its transition rows are permutations of
    each other, so H(X|Y) under uniform input is n times the row entropy.
    """
    if n < 1:
        raise ValueError(f"blocklength must be >= 1, got {n}")
    if q < 2:
        raise ValueError(f"alphabet size must be >= 2, got {q}")
    pe = (q - 1) * eps
    if eps < 0.0 or pe > 1.0:
        raise ValueError(
            f"invalid QSC: need 0 <= (q-1)*eps <= 1, got q={q}, eps={eps!r}"
        )
    if eps == 0.0:
        return 0.0
    acc = -(q - 1) * eps * math.log2(eps)
    if pe < 1.0:
        acc -= (1.0 - pe) * math.log2(1.0 - pe)
    return n * acc


@dataclass(frozen=True)
class BoundReport:
    """All bound values for one (n, q, eps) channel configuration.

    The three extended equivocation forms are algebraically identical
    rearrangements; construction checks they agree within 1e-9, and that
    the exact values (when present) respect the bounds.
    """

    n: int
    q: int
    eps: float
    p_b: float
    p_s: float
    h_ext_ub: float
    h_rel_form: float
    h_cor1_ub: float
    h_fano_ub: float
    h_exact: float | None
    i_ext_lb: float
    i_cor4_lb: float
    i_fano_lb: float
    i_exact: float | None
    logm_ext_ub: float
    logm_fano_ub: float

    def __post_init__(self):
        if abs(self.h_ext_ub - self.h_rel_form) > _IDENTITY_TOL:
            raise ValueError(
                f"h_ext_ub={self.h_ext_ub!r} and h_rel_form={self.h_rel_form!r} "
                "disagree beyond 1e-9"
            )
        if abs(self.h_ext_ub - self.h_cor1_ub) > _IDENTITY_TOL:
            raise ValueError(
                f"h_ext_ub={self.h_ext_ub!r} and h_cor1_ub={self.h_cor1_ub!r} "
                "disagree beyond 1e-9"
            )
        if self.h_exact is not None:
            if self.h_exact > self.h_ext_ub + _IDENTITY_TOL:
                raise ValueError("exact equivocation exceeds the extended bound")
            if self.h_exact > self.h_fano_ub + _IDENTITY_TOL:
                raise ValueError("exact equivocation exceeds the classical bound")
        if self.i_exact is not None and self.i_exact < self.i_ext_lb - _IDENTITY_TOL:
            raise ValueError("exact mutual information below the extended bound")


def qsc_bound_report(
    n: int, q: int, eps: float, eps_fraction: float = 0.5
) -> BoundReport:
    """Evaluate every bound for n uses of QSC(q, eps).

    The codebook bounds follow the comparison protocol of feeding each
    converse the same fraction of its natural error probability:
    eps_fraction * P_s for the extended bound, eps_fraction * P_b for the
    classical one.
    """
    if not 0.0 <= eps_fraction <= 1.0:
        raise ValueError(f"eps fraction must lie in [0, 1], got {eps_fraction!r}")
    d = qsc_error_distribution(n, q, eps)
    p_b = block_error_probability(d)
    p_s = symbol_error_probability(d)
    n_log2_q = n * math.log2(q)
    i_sup = n * qsc_capacity_per_symbol(q, eps)

    h_ext = ext_fano_ub(d, q)
    report = BoundReport(
        n=n,
        q=q,
        eps=eps,
        p_b=p_b,
        p_s=p_s,
        h_ext_ub=h_ext,
        h_rel_form=ext_fano_relative_form(d, q),
        h_cor1_ub=ext_fano_cor1(d, q),
        h_fano_ub=fano_conditional_entropy_ub(p_b, n_log2_q),
        h_exact=qsc_exact_conditional_entropy(n, q, eps),
        i_ext_lb=ext_mutual_info_lb(d, q),
        i_cor4_lb=relative_entropy(d.probs, reference_distribution("Q", n, q).probs),
        i_fano_lb=fano_mutual_info_lb(p_b, n_log2_q),
        i_exact=i_sup,
        logm_ext_ub=ext_codebook_ub(
            i_sup, d, q, symbol_error_constraint=eps_fraction * p_s
        ),
        logm_fano_ub=fano_codebook_ub(i_sup, eps_fraction * p_b),
    )
    return report
