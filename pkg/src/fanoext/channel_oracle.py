"""Ground-truth engine for small channels.

Exact enumeration of equivocation, mutual information, and the
Hamming-distance law of a memoryless channel under uniform input, plus a
seeded Monte Carlo sampler for blocklengths enumeration cannot reach. The
enumeration walks the raw product channel (Kronecker products of transition
rows) and never reuses the closed forms it is meant to check.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import reduce
from pathlib import Path

import numpy as np

from .error_model import ErrorDistribution
from .numerics import ProbVector

#: Generator used by the Monte Carlo sampler, recorded in output metadata so
#: histograms are reproducible across implementations.
RNG_ALGORITHM = "numpy-PCG64"

_ROW_SUM_TOL = 1e-12


class BudgetExceededError(ValueError):
    """Enumeration refused: the instance needs more pairs than allowed."""

    def __init__(self, required_pairs: int, max_pairs: int):
        self.required_pairs = required_pairs
        self.max_pairs = max_pairs
        super().__init__(
            f"enumeration needs q^(2n) = {required_pairs} codeword pairs, "
            f"budget allows {max_pairs}"
        )


@dataclass(frozen=True)
class DmcSpec:
    """A discrete memoryless channel: q x q transition matrix, rows sum to 1."""

    q: int
    transition: tuple[tuple[float, ...], ...]

    def __post_init__(self):
        if self.q < 2:
            raise ValueError(f"alphabet size must be >= 2, got {self.q}")
        if len(self.transition) != self.q:
            raise ValueError(f"need {self.q} rows, got {len(self.transition)}")
        for x, row in enumerate(self.transition):
            if len(row) != self.q:
                raise ValueError(f"row {x} has {len(row)} entries, need {self.q}")
            for y, t in enumerate(row):
                if not 0.0 <= t <= 1.0:
                    raise ValueError(f"transition[{x}][{y}] = {t!r} outside [0, 1]")
            total = math.fsum(row)
            if abs(total - 1.0) > _ROW_SUM_TOL:
                raise ValueError(f"row {x} sums to {total!r}, not 1")

    def matrix(self) -> np.ndarray:
        return np.array(self.transition, dtype=float)


@dataclass(frozen=True)
class EnumerationBudget:
    """Cap on the number of codeword pairs a full enumeration may touch."""

    max_pairs: int = 10**8

    def check(self, q: int, n: int) -> None:
        required = q ** (2 * n)
        if required > self.max_pairs:
            raise BudgetExceededError(required, self.max_pairs)


def qsc_spec(q: int, eps: float) -> DmcSpec:
    """q-ary symmetric channel: diagonal 1 - (q-1)*eps, off-diagonal eps."""
    if q < 2:
        raise ValueError(f"alphabet size must be >= 2, got {q}")
    if eps < 0.0 or (q - 1) * eps > 1.0:
        raise ValueError(
            f"invalid QSC: need 0 <= (q-1)*eps <= 1, got q={q}, eps={eps!r}"
        )
    keep = 1.0 - (q - 1) * eps
    rows = tuple(
        tuple(keep if y == x else eps for y in range(q)) for x in range(q)
    )
    return DmcSpec(q=q, transition=rows)


def load_dmc(path: str | Path) -> DmcSpec:
    """Read a DmcSpec from a plain-text file: first line q, then q rows."""
    lines = [
        line.strip()
        for line in Path(path).read_text().splitlines()
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not lines:
        raise ValueError(f"{path}: empty matrix file")
    q = int(lines[0])
    if len(lines) != q + 1:
        raise ValueError(f"{path}: expected {q} matrix rows, found {len(lines) - 1}")
    rows = tuple(tuple(float(tok) for tok in line.split()) for line in lines[1:])
    return DmcSpec(q=q, transition=rows)


def _entropy_bits(p: np.ndarray) -> float:
    nz = p[p > 0.0]
    return float(-(nz * np.log2(nz)).sum())


def _enumerate_rows(spec: DmcSpec, n: int):
    """Yield (codeword, output-law row) for every length-n input codeword.

    The row is the Kronecker product of the per-symbol transition rows, i.e.
    the raw product-channel law over all q^n outputs.
    """
    t = spec.matrix()
    for x in itertools.product(range(spec.q), repeat=n):
        yield x, reduce(np.kron, (t[s] for s in x))


def exact_conditional_entropy(
    spec: DmcSpec, n: int, budget: EnumerationBudget = EnumerationBudget()
) -> float:
    """H(X|Y) in bits under uniform input, by full enumeration.

    Computed as H(X) + H(Y|X) - H(Y) over the product channel.
    """
    if n < 1:
        raise ValueError(f"blocklength must be >= 1, got {n}")
    budget.check(spec.q, n)
    inv_m = spec.q ** (-float(n))
    h_y_given_x = 0.0
    marginal = np.zeros(spec.q**n)
    for _, row in _enumerate_rows(spec, n):
        h_y_given_x += inv_m * _entropy_bits(row)
        marginal += inv_m * row
    h_x = n * math.log2(spec.q)
    return h_x + h_y_given_x - _entropy_bits(marginal)


def exact_mutual_info(
    spec: DmcSpec, n: int, budget: EnumerationBudget = EnumerationBudget()
) -> float:
    """I(X;Y) = H(X) - H(X|Y) in bits under uniform input, by enumeration."""
    return n * math.log2(spec.q) - exact_conditional_entropy(spec, n, budget)


def hamming_distance_distribution(
    spec: DmcSpec, n: int, budget: EnumerationBudget = EnumerationBudget()
) -> ErrorDistribution:
    """Exact law of H_d(X, Y) under uniform input, by full enumeration."""
    if n < 1:
        raise ValueError(f"blocklength must be >= 1, got {n}")
    budget.check(spec.q, n)
    outputs = np.array(list(itertools.product(range(spec.q), repeat=n)))
    inv_m = spec.q ** (-float(n))
    law = np.zeros(n + 1)
    for x, row in _enumerate_rows(spec, n):
        dist = (outputs != np.array(x)).sum(axis=1)
        law += inv_m * np.bincount(dist, weights=row, minlength=n + 1)
    return ErrorDistribution(n=n, probs=ProbVector(law.tolist()))


def monte_carlo_error_histogram(
    spec: DmcSpec,
    n: int,
    trials: int,
    seed: int,
    _chunk: int = 1 << 16,
) -> list[int]:
    """Histogram of Hamming distances over ``trials`` simulated channel uses.

    Each trial draws a uniform codeword and passes every symbol through its
    transition row. Deterministic given the seed (single PCG64 stream drawn
    in a fixed chunk order).
    """
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    if n < 1:
        raise ValueError(f"blocklength must be >= 1, got {n}")
    rng = np.random.default_rng(seed)
    cum = np.cumsum(spec.matrix(), axis=1)
    counts = np.zeros(n + 1, dtype=np.int64)
    done = 0
    while done < trials:
        m = min(_chunk, trials - done)
        x = rng.integers(0, spec.q, size=(m, n))
        u = rng.random((m, n))
        y = (u[..., None] < cum[x]).argmax(axis=-1)
        errors = (y != x).sum(axis=1)
        counts += np.bincount(errors, minlength=n + 1)
        done += m
    return counts.tolist()
