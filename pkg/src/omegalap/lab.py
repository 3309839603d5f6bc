"""Truncated exponentials of principal sections.

The first row of ``sum_{k <= terms} t^k/k! A_N^k`` shows how far coordinate 1
of ``exp(tA)`` depends on the input. For a connected section it depends on
every coordinate once ``terms`` reaches the diameter, for every ``N``: there
is no finite dependence radius, which is why no semigroup can exist.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction

from .operators import _as_operator
from .scalars import coerce, format_scalar

__all__ = ["DEFAULT_BUDGET", "BudgetExceeded", "TruncationReport", "truncated_exponential_row"]

DEFAULT_BUDGET = 10**6


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class TruncationReport:
    N: int
    t: Fraction
    terms: int
    row1: list
    nonzero_count: int

    def to_json(self) -> dict:
        return {
            "N": self.N,
            "t": format_scalar(self.t),
            "terms": self.terms,
            "row1": [format_scalar(v) for v in self.row1],
            "nonzero_count": self.nonzero_count,
        }


def truncated_exponential_row(op, N: int, t, terms: int, budget: int = DEFAULT_BUDGET) -> TruncationReport:
    """Row 1 of the degree-``terms`` Taylor polynomial of ``exp(t A_N)``.

    ``A_N`` is the principal ``N x N`` section of ``op``. Raises
    :class:`BudgetExceeded` when ``N * terms`` exceeds ``budget``.
    """
    if N < 1 or terms < 0:
        raise ValueError("need N >= 1 and terms >= 0")
    if N * terms > budget:
        raise BudgetExceeded(f"N * terms = {N * terms} exceeds the budget {budget}")
    if terms < N:
        warnings.warn(f"terms={terms} < N={N}: the series may not reach the whole section",
                      stacklevel=2)
    t = Fraction(t)
    A = _as_operator(op)
    rows = []
    for k in range(1, N + 1):
        rows.append([(l, a) for l, a in A.row(k) if l <= N])
    zero = coerce(0, A.field)
    y = {1: coerce(1, A.field)}
    acc = dict(y)
    coeff = Fraction(1)
    for k in range(1, terms + 1):
        nxt = {}
        for i, yi in y.items():
            for l, a in rows[i - 1]:
                nxt[l] = nxt.get(l, zero) + yi * a
        y = {l: v for l, v in nxt.items() if v}
        coeff = coeff * t / k
        for l, v in y.items():
            acc[l] = acc.get(l, zero) + coeff * v
    row1 = [acc.get(j, zero) for j in range(1, N + 1)]
    return TruncationReport(N, t, terms, row1, sum(1 for v in row1 if v))
