"""Checking the semigroup generation condition and certifying its failure.

For an operator ``A = D - B`` on the sequence space, generation of a strongly
continuous semigroup is equivalent to

    for every n there is m such that, for all k >= 0 and all x,
    x_1 = ... = x_m = 0  implies  (A^k x)_1 = ... = (A^k x)_n = 0.

Since every power of ``A`` has finite hopping range, it suffices to test unit
vectors ``x = e_l``; the condition then says that the set of columns ``l``
with ``(A^k)_{i,l} != 0`` for some ``i <= n`` and some ``k`` is bounded.

For a quasiadjacency ``B`` on a connected infinite graph it is never bounded.
Given ``m``, take ``l = m + 1`` and ``k = d(v_1, v_l)``. Expanding ``(D-B)^k``
into words in ``D`` and ``B``, only the word ``B^k`` moves ``e_l`` far enough
to reach coordinate 1, so

    ((D-B)^k)_{1,l} = (-1)^k (B^k)_{1,l},

and ``(B^k)_{1,l}`` is ``sign^{-k}`` times a sum of positive weight products
over shortest walks, hence nonzero. A :class:`NonGenerationCertificate`
records this witness for one ``m``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .graphs import DEFAULT_RADIUS_CAP, GraphOracle, distance, walk_exists
from .operators import (
    FinVector,
    QuasiadjacencyPair,
    _as_operator,
    power_entry,
)
from .scalars import coerce, format_scalar, is_real_nonnegative

__all__ = [
    "CriterionQuery",
    "InternalInconsistency",
    "NonGenerationCertificate",
    "binomial_collapse",
    "certificate",
    "criterion_scan",
    "dense_first_row_powers",
    "diagonal_collapse_check",
    "no_cancellation_check",
    "reach_set",
]


class InternalInconsistency(AssertionError):
    """A computed witness contradicts the theorem; this is a bug."""


@dataclass(frozen=True)
class CriterionQuery:
    operator: object
    n: int
    m: int
    k_max: int

    def __post_init__(self):
        if min(self.n, self.m, self.k_max) < 1:
            raise ValueError("n, m and k_max must be positive")
        if self.n > self.m:
            raise ValueError("degenerate query: n > m")

    def violated(self) -> bool:
        """Whether some column beyond ``m`` reaches the first ``n`` rows
        within ``k_max`` powers."""
        return any(l > self.m for l in reach_set(self.operator, self.n, self.k_max))


def reach_set(op, n: int, k_max: int) -> set[int]:
    """Columns ``l`` with ``(A^k)_{i,l} != 0`` for some ``i <= n``, ``0 <= k <= k_max``.

    Works with rows only: ``e_i^T A^k`` is propagated by row-vector
    multiplication.
    """
    if n < 1 or k_max < 0:
        raise ValueError("need n >= 1 and k_max >= 0")
    A = _as_operator(op)
    reached = set(range(1, n + 1))
    rows = [FinVector.unit(i, A.field) for i in range(1, n + 1)]
    for _ in range(k_max):
        rows = [A.apply_left(y) for y in rows]
        for y in rows:
            reached.update(y.support)
    return reached


@dataclass(frozen=True)
class NonGenerationCertificate:
    m: int
    l: int
    k: int
    value: object
    cross_check: object
    descriptor: dict

    def row_json(self) -> dict:
        return {
            "m": self.m,
            "l": self.l,
            "k": self.k,
            "value": format_scalar(self.value),
            "cross_check": format_scalar(self.cross_check),
        }


def certificate(g: GraphOracle, op: QuasiadjacencyPair, m: int,
                radius_cap: int = DEFAULT_RADIUS_CAP) -> NonGenerationCertificate:
    """Witness that no depth ``m`` works for ``n = 1``."""
    if m < 1:
        raise ValueError("m must be positive")
    if op.graph != g:
        raise ValueError("operator was built over a different graph")
    l = m + 1
    g.check_vertex(l)
    k = distance(g, 1, l, radius_cap)
    value = power_entry(op, k, 1, l)
    cross = power_entry(op.B, k, 1, l)
    if k % 2:
        cross = -cross
    if value != cross:
        raise InternalInconsistency(
            f"m={m}: ((D-B)^{k})_1,{l} = {format_scalar(value)} but "
            f"(-1)^k (B^k)_1,{l} = {format_scalar(cross)}")
    if not value:
        raise InternalInconsistency(f"m={m}: witness entry vanishes")
    return NonGenerationCertificate(m, l, k, value, cross, dict(op.descriptor))


def binomial_collapse(lam, B, l: int, k: int) -> list:
    """Terms ``C(k,j) (-1)^j lam^(k-j) (B^j)_{1,l}`` for ``j = 0..k``.

    Their sum is ``((lam Id - B)^k)_{1,l}``. ``B`` may be a pair (its ``B``
    part is used) or a banded operator.
    """
    if k < 1 or l < 2:
        raise ValueError("need k >= 1 and l >= 2")
    if isinstance(B, QuasiadjacencyPair):
        B = B.B
    lam = coerce(lam, B.field)
    terms = []
    x = FinVector.unit(l, B.field)
    for j in range(k + 1):
        if j:
            x = B.apply(x)
        coeff = comb(k, j) * (-1) ** j * lam ** (k - j)
        terms.append(coeff * x[1])
    return terms


def diagonal_collapse_check(op: QuasiadjacencyPair, l: int, k: int) -> bool:
    """``((D-B)^k)_{1,l} == (-1)^k (B^k)_{1,l}`` at ``k = d(v_1, v_l)``.

    Every word in ``D`` and ``B`` with fewer than ``k`` factors of ``B``
    moves ``e_l`` fewer than ``k`` steps and cannot reach coordinate 1.
    """
    lhs = power_entry(op, k, 1, l)
    rhs = power_entry(op.B, k, 1, l)
    return lhs == (-rhs if k % 2 else rhs)


def no_cancellation_check(pair: QuasiadjacencyPair, i: int, l: int, k: int) -> bool:
    """``(B^k)_{i,l} != 0`` exactly when a walk of length ``k`` joins ``v_i``
    and ``v_l``, and ``sign^k (B^k)_{i,l}`` is a nonnegative real."""
    entry = power_entry(pair.B, k, i, l)
    if bool(entry) != walk_exists(pair.graph, i, l, k):
        return False
    return is_real_nonnegative(pair.sign ** k * entry)


def criterion_scan(g: GraphOracle, op: QuasiadjacencyPair, n: int, m_range,
                   k_max: int | None = None) -> list[NonGenerationCertificate]:
    """One certificate per ``m``; the rows are in ``m_range`` order.

    A certificate for coordinate 1 also refutes every depth ``n >= 1``.
    ``k_max``, when given, is a power budget: a witness needing more powers
    raises ``ValueError``.
    """
    if n < 1:
        raise ValueError("n must be positive")
    rows = []
    for m in m_range:
        cert = certificate(g, op, m)
        if k_max is not None and cert.k > k_max:
            raise ValueError(f"m={m}: witness needs k={cert.k} > k_max={k_max}")
        rows.append(cert)
    return rows


def dense_first_row_powers(op, N: int, k_max: int) -> list[list]:
    """Row 1 of ``A_N^k`` for ``k = 0..k_max``, with ``A_N`` the dense
    principal ``N x N`` section.

    This is the truncated-matrix cross check used when emitting
    certificates; it never touches the sparse application path.
    """
    A = _as_operator(op)
    dense = A.section(N)
    zero = coerce(0, A.field)
    row = [zero] * N
    row[0] = coerce(1, A.field)
    out = [row]
    for _ in range(k_max):
        nxt = [zero] * N
        for i, yi in enumerate(row):
            if not yi:
                continue
            Ai = dense[i]
            for j in range(N):
                a = Ai[j]
                if a:
                    nxt[j] = nxt[j] + yi * a
        row = nxt
        out.append(row)
    return out
