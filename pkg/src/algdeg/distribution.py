"""How many Boolean functions of n variables have each algebraic degree."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from decimal import ROUND_HALF_DOWN, Decimal
from typing import Optional

import numpy as np

from .cube import binomial
from .degree import BOTTOM, Algorithm, Degree, degree_from_code, pipeline_batch
from .errors import DomainError

EXACT_MAX_N = 10
PROB_MAX_N = 30


def _check(n: int, k: int, max_n: int) -> None:
    if not (0 <= n <= max_n and 0 <= k <= n):
        raise DomainError(f"(n={n}, k={k}) outside 0 <= k <= n <= {max_n}")


def count_exact_int(n: int, k: int) -> int:
    if n > EXACT_MAX_N:
        raise DomainError(f"exact counts stop at n={EXACT_MAX_N}; use probability mode")
    _check(n, k, EXACT_MAX_N)
    lower = sum(binomial(n, i) for i in range(k))
    return ((1 << binomial(n, k)) - 1) << lower


def count_exact(n: int, k: int) -> str:
    """Number of functions of n variables with degree exactly k, as a decimal string.

    At least one of the C(n, k) degree-k monomials is present, and any subset
    of the lower-degree monomials may be added.
    """
    return str(count_exact_int(n, k))


def probability(n: int, k: int) -> float:
    """Fraction of all 2^(2^n) functions whose degree is k.

    Evaluated as (1 - 2^-C(n,k)) * 2^-(number of monomials above degree k) so
    nothing overflows; tiny values underflow to 0.0.
    """
    _check(n, k, PROB_MAX_N)
    above = sum(binomial(n, i) for i in range(k + 1, n + 1))
    return math.ldexp(1.0 - math.ldexp(1.0, -binomial(n, k)), -above)


def format_probability(p: float, digits: int = 10) -> str:
    """Fixed-point rendering; exact ties round toward zero."""
    q = Decimal(p).quantize(Decimal(1).scaleb(-digits), rounding=ROUND_HALF_DOWN)
    return f"{q:.{digits}f}"


@dataclass(frozen=True)
class DistributionRow:
    n: int
    k: int
    count: Optional[str]
    probability: float


def distribution_table(n: int, exact: Optional[bool] = None) -> list[DistributionRow]:
    """Rows for k = 0..n. Counts are filled when ``exact`` (default: n <= 10)."""
    if not 1 <= n <= PROB_MAX_N:
        raise DomainError(f"n={n} outside [1, {PROB_MAX_N}]")
    if exact is None:
        exact = n <= EXACT_MAX_N
    return [DistributionRow(n, k, count_exact(n, k) if exact else None, probability(n, k))
            for k in range(n + 1)]


@dataclass
class EmpiricalHistogram:
    n: int
    counts: dict = field(default_factory=dict)
    total: int = 0

    def fraction(self, k: Degree) -> float:
        return self.counts.get(k, 0) / self.total if self.total else 0.0

    def add_codes(self, codes: np.ndarray) -> None:
        values, freq = np.unique(codes, return_counts=True)
        for v, c in zip(values.tolist(), freq.tolist()):
            key = degree_from_code(v)
            self.counts[key] = self.counts.get(key, 0) + c
            self.total += c

    def deviations(self) -> dict[int, float]:
        return {k: abs(self.fraction(k) - probability(self.n, k)) for k in range(self.n + 1)}


def empirical_distribution(n: int, count: int, seed: int, batch_size: int = 1 << 16) -> EmpiricalHistogram:
    """Degree histogram of ``count`` seeded random functions (bitwise pipeline, parity shortcut on)."""
    from .ingest import generate_random

    if n < 1 or count < 1:
        raise DomainError("empirical distribution needs n >= 1 and count >= 1")
    hist = EmpiricalHistogram(n=n, counts={BOTTOM: 0})
    for block in generate_random(n, count, seed).batches(batch_size):
        res = pipeline_batch(block, n, Algorithm.WLO_BIT_MASK, parity_shortcut=True)
        hist.add_codes(res.degrees)
    return hist
