"""Hamming-distance error distributions and their reference distributions.

The central object is the law p = (p_0, ..., p_n) of the generalized Hamming
distance between a transmitted and a received length-n word. Two fixed
comparison laws accompany it: the uniform-output law q_k = C(n,k)(q-1)^k / q^n
and the fair-coin law w_k = C(n,k) / 2^n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .numerics import ProbVector, log2_binomial

#: Blocklengths up to this use the plain float log-domain binomial path;
#: above it the terms are evaluated in 40-digit precision so the pmf still
#: sums to 1 within the ProbVector tolerance.
_FLOAT_PMF_MAX_N = 1024


@dataclass(frozen=True)
class ErrorDistribution:
    """Law of the Hamming distance between two length-n words.

    probs[k] = Pr(H_d(X, Y) = k), so probs has length n + 1. For
    distributions derived from a q-ary symmetric channel the per-symbol
    error rate p_e = (q-1)*eps is stored alongside.
    """

    n: int
    probs: ProbVector
    symbol_error_rate: float | None = None

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"blocklength must be >= 1, got {self.n}")
        if len(self.probs) != self.n + 1:
            raise ValueError(
                f"need n + 1 = {self.n + 1} probabilities, got {len(self.probs)}"
            )


@dataclass(frozen=True)
class ReferenceDistribution:
    """One of the two fixed comparison laws, kind 'Q' or 'W'.

    Kind 'Q' is the Hamming-distance law of an output chosen uniformly and
    independently of the input (needs the alphabet size q); kind 'W' is the
    binomial(n, 1/2) law and is independent of q.
    """

    kind: str
    n: int
    probs: ProbVector
    q: int | None = None


def _validate_qsc(q: int, eps: float) -> float:
    if q < 2:
        raise ValueError(f"alphabet size must be >= 2, got {q}")
    if eps < 0.0 or (q - 1) * eps > 1.0:
        raise ValueError(
            f"invalid QSC: need 0 <= (q-1)*eps <= 1, got q={q}, eps={eps!r}"
        )
    return (q - 1) * eps


def qsc_error_distribution(n: int, q: int, eps: float) -> ErrorDistribution:
    """Hamming-distance law of n uses of a q-ary symmetric channel.

    Binomial with parameter p_e = (q-1)*eps, computed in the log domain and
    exponentiated so that tail terms underflow gracefully at large n.
    """
    if n < 1:
        raise ValueError(f"blocklength must be >= 1, got {n}")
    pe = _validate_qsc(q, eps)
    if pe == 0.0:
        probs = [1.0] + [0.0] * n
    elif pe == 1.0:
        probs = [0.0] * n + [1.0]
    elif n <= _FLOAT_PMF_MAX_N:
        l2pe = math.log2(pe)
        l2qe = math.log2(1.0 - pe)
        probs = [
            2.0 ** (log2_binomial(n, k) + k * l2pe + (n - k) * l2qe)
            for k in range(n + 1)
        ]
    else:
        probs = _binomial_pmf_highprec(n, pe)
    return ErrorDistribution(n=n, probs=ProbVector(probs), symbol_error_rate=pe)


def _binomial_pmf_highprec(n: int, pe: float) -> list[float]:
    # Same log-domain evaluation, carried out in extended precision; plain
    # doubles drift past the 1e-12 sum tolerance once n reaches several
    # thousand.
    import mpmath

    with mpmath.workdps(40):
        lpe = mpmath.log(pe)
        lqe = mpmath.log(1.0 - pe)
        lgam = [mpmath.loggamma(i + 1) for i in range(n + 2)]
        return [
            float(mpmath.exp(lgam[n] - lgam[k] - lgam[n - k] + k * lpe + (n - k) * lqe))
            for k in range(n + 1)
        ]


def block_error_probability(d: ErrorDistribution) -> float:
    """P_b = Pr(X != Y) = 1 - p_0."""
    return 1.0 - d.probs[0]


def symbol_error_probability(d: ErrorDistribution) -> float:
    """P_s = (1/n) sum_k k * p_k, the expected fraction of wrong symbols."""
    return math.fsum(k * pk for k, pk in enumerate(d.probs)) / d.n


def reference_distribution(
    kind: str, n: int, q: int | None = None
) -> ReferenceDistribution:
    """Build the Q or W comparison law for blocklength n.

    Terms are exact big-integer ratios converted to floats, so the vector
    sums to 1 within rounding even at n = 10^4.
    """
    if n < 1:
        raise ValueError(f"blocklength must be >= 1, got {n}")
    if kind == "Q":
        if q is None or q < 2:
            raise ValueError(f"kind Q needs an alphabet size q >= 2, got {q}")
        den = q**n
        growth = q - 1
    elif kind == "W":
        den = 2**n
        growth = 1
        q = None
    else:
        raise ValueError(f"kind must be 'Q' or 'W', got {kind!r}")
    probs = []
    num = 1  # C(n,k) * growth^k, updated incrementally
    for k in range(n + 1):
        probs.append(num / den)  # big-int true division is correctly rounded
        num = num * (n - k) * growth // (k + 1)
    return ReferenceDistribution(kind=kind, n=n, probs=ProbVector(probs), q=q)


def empirical_error_distribution(
    hamming_counts: Sequence[int], n: int
) -> ErrorDistribution:
    """Normalize a histogram of observed Hamming distances over 0..n."""
    if len(hamming_counts) != n + 1:
        raise ValueError(
            f"histogram must have n + 1 = {n + 1} bins, got {len(hamming_counts)}"
        )
    total = sum(hamming_counts)
    if total <= 0:
        raise ValueError("histogram total count must be positive")
    probs = ProbVector([c / total for c in hamming_counts])
    return ErrorDistribution(n=n, probs=probs)
