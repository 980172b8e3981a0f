import numpy as np

from fanoext import ErrorDistribution, ProbVector


def random_error_distribution(rng: np.random.Generator, n: int) -> ErrorDistribution:
    """A random valid error distribution over 0..n (Dirichlet draw)."""
    probs = rng.dirichlet(np.ones(n + 1))
    return ErrorDistribution(n=n, probs=ProbVector(probs.tolist()))
