"""Exact linear algebra on the sequence space of all scalar sequences.

Elements that can actually be stored are finitely supported
(:class:`FinVector`). Operators are infinite matrices given row by row
(:class:`BandedOperator`); each row must live inside a graph neighbourhood of
bounded radius, which is exactly what makes the operator continuous for the
product topology. Columns are recovered from the graph geometry when needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from dataclasses import field as dc_field
from fractions import Fraction
from typing import Callable, Iterable

from .graphs import GraphOracle, WeightScheme, n_neighborhood
from .scalars import (
    GaussianRational,
    ScalarError,
    coerce,
    format_scalar,
    is_real_nonnegative,
    modulus,
    parse_scalar,
)

__all__ = [
    "BandedOperator",
    "FinVector",
    "OperatorError",
    "QuasiadjacencyPair",
    "Seminorm",
    "affine_reduce",
    "apply",
    "build_laplacian",
    "power_entry",
    "seminorm",
    "verify_hopping",
]

ZERO = Fraction(0)


class OperatorError(ValueError):
    pass


class FinVector:
    """Finitely supported sequence ``x = (x_1, x_2, ...)``.

    Indexing returns 0 off the support, and exact zeros are never stored.

    >>> x = FinVector({1: 1, 3: Fraction(-1, 2), 4: 0})
    >>> x.support, x[2], x[3]
    ([1, 3], Fraction(0, 1), Fraction(-1, 2))
    """

    __slots__ = ("_data",)

    def __init__(self, entries=None):
        data = {}
        items = entries.items() if isinstance(entries, dict) else (entries or ())
        for k, v in items:
            if not isinstance(k, int) or isinstance(k, bool) or k < 1:
                raise OperatorError(f"index must be a positive integer, got {k!r}")
            if v:
                data[k] = v if isinstance(v, (Fraction, GaussianRational)) else Fraction(v)
        self._data = data

    @classmethod
    def unit(cls, l: int, field: str = "rational") -> "FinVector":
        return cls({l: coerce(1, field)})

    @classmethod
    def _trusted(cls, data):
        out = cls.__new__(cls)
        out._data = data
        return out

    @property
    def support(self) -> list[int]:
        return sorted(self._data)

    def items(self):
        return sorted(self._data.items())

    def __getitem__(self, k):
        return self._data.get(k, ZERO)

    def __len__(self):
        return len(self._data)

    def __iter__(self):
        return iter(self.support)

    def __bool__(self):
        return bool(self._data)

    def __eq__(self, other):
        if not isinstance(other, FinVector):
            return NotImplemented
        return self._data == other._data

    def __hash__(self):
        return hash(frozenset(self._data.items()))

    def __add__(self, other):
        data = dict(self._data)
        for k, v in other._data.items():
            s = data.get(k, ZERO) + v
            if s:
                data[k] = s
            else:
                data.pop(k, None)
        return FinVector._trusted(data)

    def __neg__(self):
        return FinVector._trusted({k: -v for k, v in self._data.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, s):
        if not s:
            return FinVector()
        return FinVector._trusted({k: v * s for k, v in self._data.items()})

    __rmul__ = __mul__

    def truncate(self, m: int) -> "FinVector":
        """The coordinate projection onto the first ``m`` coordinates."""
        return FinVector._trusted({k: v for k, v in self._data.items() if k <= m})

    def to_json(self) -> dict:
        return {str(k): format_scalar(v) for k, v in self.items()}

    @classmethod
    def from_json(cls, data: dict, field: str = "rational") -> "FinVector":
        return cls({int(k): parse_scalar(v, field) for k, v in data.items()})

    def __repr__(self):
        inner = ", ".join(f"{k}: {format_scalar(v)}" for k, v in self.items())
        return f"FinVector({{{inner}}})"


def seminorm(k: int, x: FinVector) -> Fraction:
    """``p_k(x)``, the sum of the moduli of the first ``k`` coordinates."""
    if k < 1:
        raise ValueError("seminorm index must be positive")
    return sum((modulus(v) for j, v in x._data.items() if j <= k), ZERO)


@dataclass(frozen=True)
class Seminorm:
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("seminorm index must be positive")

    def __call__(self, x: FinVector) -> Fraction:
        return seminorm(self.k, x)


class BandedOperator:
    """Infinite matrix with finitely supported rows inside graph balls.

    ``row(k)`` must return the nonzero entries ``(l, a_kl)`` of row ``k``, and
    every such ``l`` must lie within ``radius`` steps of ``k`` in ``graph``.
    The radius is a uniform bound over all rows.
    """

    def __init__(self, graph: GraphOracle, row: Callable[[int], Iterable], radius: int,
                 field: str = "rational", name: str = ""):
        if radius < 0:
            raise OperatorError("hopping radius must be nonnegative")
        self.graph = graph
        self.radius = radius
        self.field = field
        self.name = name
        self._row_fn = row
        self._rows = {}
        self._cols = {}

    def hopping_radius(self, k: int) -> int:
        return self.radius

    def row(self, k: int) -> list:
        cached = self._rows.get(k)
        if cached is None:
            self.graph.check_vertex(k)
            acc = {}
            for l, v in self._row_fn(k):
                acc[l] = acc.get(l, ZERO) + v
            cached = sorted((l, v) for l, v in acc.items() if v)
            self._rows[k] = cached
        return cached

    def entry(self, k: int, l: int):
        for j, v in self.row(k):
            if j == l:
                return v
        return coerce(0, self.field)

    def column(self, l: int) -> list:
        cached = self._cols.get(l)
        if cached is None:
            cached = []
            for k in sorted(n_neighborhood(self.graph, l, self.radius)):
                for j, v in self.row(k):
                    if j == l:
                        cached.append((k, v))
                        break
            self._cols[l] = cached
        return cached

    def apply(self, x: FinVector) -> FinVector:
        acc = {}
        for l, xl in x._data.items():
            for k, a in self.column(l):
                acc[k] = acc.get(k, ZERO) + a * xl
        return FinVector._trusted({k: v for k, v in acc.items() if v})

    __call__ = apply

    def apply_left(self, y: FinVector) -> FinVector:
        """Row vector times matrix, ``(yA)_l = sum_k y_k a_kl``."""
        acc = {}
        for k, yk in y._data.items():
            for l, a in self.row(k):
                acc[l] = acc.get(l, ZERO) + yk * a
        return FinVector._trusted({l: v for l, v in acc.items() if v})

    def _combine(self, other, sign):
        if self.graph != other.graph:
            raise OperatorError("operators live on different graphs")
        if self.field != other.field:
            raise OperatorError("operators use different scalar fields")

        def row(k):
            yield from self.row(k)
            for l, v in other.row(k):
                yield l, v if sign > 0 else -v

        return BandedOperator(self.graph, row, max(self.radius, other.radius), self.field)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def scale(self, s) -> "BandedOperator":
        s = coerce(s, self.field)
        return BandedOperator(self.graph, lambda k: [(l, s * v) for l, v in self.row(k)],
                              self.radius, self.field)

    def section(self, N: int) -> list[list]:
        """Dense principal ``N x N`` truncation (rows and columns ``1..N``)."""
        zero = coerce(0, self.field)
        dense = [[zero] * N for _ in range(N)]
        for k in range(1, N + 1):
            for l, v in self.row(k):
                if l <= N:
                    dense[k - 1][l - 1] = v
        return dense

    @classmethod
    def diagonal(cls, graph: GraphOracle, d: Callable[[int], object], field: str = "rational"):
        return cls(graph, lambda k: [(k, coerce(d(k), field))], 0, field, name="diagonal")

    @classmethod
    def identity(cls, graph: GraphOracle, field: str = "rational"):
        return cls.diagonal(graph, lambda k: 1, field)

    def __repr__(self):
        label = f" {self.name}" if self.name else ""
        return f"<BandedOperator{label} on {self.graph.family}, radius {self.radius}>"


def apply(A: BandedOperator, x: FinVector) -> FinVector:
    return A.apply(x)


@dataclass(frozen=True, eq=False)
class QuasiadjacencyPair:
    """The splitting ``D - B`` of an operator into a diagonal part and a
    quasiadjacency matrix ``B``.

    ``B`` is stored through a nonzero sign scalar ``sign`` and nonnegative
    magnitudes ``c_kl`` so that ``b_kl = c_kl / sign``; ``c_kl > 0`` exactly
    on edges. ``magnitudes(k)`` yields the pairs ``(l, c_kl)`` of row ``k``.
    """

    graph: GraphOracle
    diag: Callable[[int], object]
    sign: object
    magnitudes: Callable[[int], Iterable]
    field: str = "rational"
    descriptor: dict = dc_field(default_factory=dict)

    def __post_init__(self):
        sign = coerce(self.sign, self.field)
        if not sign:
            raise OperatorError("the sign scalar of a quasiadjacency matrix must be nonzero")
        object.__setattr__(self, "sign", sign)

    def magnitude_row(self, k: int) -> list:
        row = sorted((l, Fraction(c)) for l, c in self.magnitudes(k))
        cols = [l for l, _ in row]
        if cols != self.graph.neighbors(k):
            raise OperatorError(f"row {k} of B is not supported exactly on the neighbors of v_{k}")
        for l, c in row:
            if c <= 0:
                raise OperatorError(f"magnitude c_({k},{l}) = {c} is not positive")
        return row

    def diagonal_entry(self, k: int):
        return coerce(self.diag(k), self.field)

    @property
    def D(self) -> BandedOperator:
        try:
            return self._D
        except AttributeError:
            op = BandedOperator(self.graph, lambda k: [(k, self.diagonal_entry(k))], 0,
                                self.field, name="D")
            object.__setattr__(self, "_D", op)
            return op

    @property
    def B(self) -> BandedOperator:
        try:
            return self._B
        except AttributeError:
            inv = coerce(1, self.field) / self.sign
            op = BandedOperator(self.graph, lambda k: [(l, c * inv) for l, c in self.magnitude_row(k)],
                                1, self.field, name="B")
            object.__setattr__(self, "_B", op)
            return op

    def operator(self) -> BandedOperator:
        """``D - B`` as a single banded operator."""
        try:
            return self._op
        except AttributeError:
            B = self.B

            def row(k):
                yield k, self.diagonal_entry(k)
                for l, b in B.row(k):
                    yield l, -b

            op = BandedOperator(self.graph, row, 1, self.field, name="D-B")
            object.__setattr__(self, "_op", op)
            return op

    def sign_ray_holds(self, k: int) -> bool:
        """``sign * b_kl`` is a nonnegative real for every entry of row ``k``."""
        return all(is_real_nonnegative(self.sign * b) for _, b in self.B.row(k))


def build_laplacian(g: GraphOracle, w: WeightScheme | str = "uniform", field: str = "rational"):
    """Graph Laplacian ``(Lf)(v) = sum_{w ~ v} gamma(v, w) (f(v) - f(w))``.

    Returns the operator (hopping radius 1) together with its splitting
    ``D - B``: ``D`` is the weighted degree and ``B`` has sign 1 and
    magnitudes ``gamma``. With normalized weights ``D`` is the identity.
    """
    if isinstance(w, str):
        w = WeightScheme(w)

    def magnitudes(k):
        out = []
        for l in g.neighbors(k):
            gamma = w.gamma(g, k, l)
            if gamma <= 0:
                raise OperatorError(f"nonpositive weight on edge ({k}, {l})")
            out.append((l, gamma))
        return out

    def degree(k):
        return sum((c for _, c in magnitudes(k)), ZERO)

    def row(k):
        mags = magnitudes(k)
        yield k, coerce(sum((c for _, c in mags), ZERO), field)
        for l, c in mags:
            yield l, coerce(-c, field)

    lap = BandedOperator(g, row, 1, field, name="Laplacian")
    descriptor = {"graph": g.spec() if not _is_custom(g) else None, "weights": w.spec(),
                  "alpha": "0", "beta": "1", "field": field}
    pair = QuasiadjacencyPair(g, degree, 1, magnitudes, field, descriptor)
    return lap, pair


def _is_custom(g):
    try:
        g.spec()
    except Exception:
        return True
    return False


def affine_reduce(alpha, beta, pair: QuasiadjacencyPair) -> QuasiadjacencyPair:
    """Splitting of ``alpha Id + beta (D - B)`` as ``D' - B'``.

    ``D' = alpha + beta D`` and ``B' = beta B``; the new sign scalar is
    ``1/beta`` times the old one, which keeps every magnitude unchanged.
    """
    field = pair.field
    try:
        alpha = coerce(alpha, field)
        beta = coerce(beta, field)
    except ScalarError as exc:
        raise OperatorError(f"{exc} (operator built over the {field} field)") from None
    if not beta:
        raise OperatorError("beta must be nonzero")
    descriptor = dict(pair.descriptor)
    old_alpha = parse_scalar(descriptor.get("alpha", "0"), field)
    old_beta = parse_scalar(descriptor.get("beta", "1"), field)
    descriptor["alpha"] = format_scalar(alpha + beta * old_alpha)
    descriptor["beta"] = format_scalar(beta * old_beta)
    return QuasiadjacencyPair(
        pair.graph,
        lambda k: alpha + beta * pair.diagonal_entry(k),
        pair.sign / beta,
        pair.magnitudes,
        field,
        descriptor,
    )


def _as_operator(op) -> BandedOperator:
    if isinstance(op, QuasiadjacencyPair):
        return op.operator()
    if isinstance(op, BandedOperator):
        return op
    raise TypeError(f"expected an operator, got {type(op).__name__}")


def power_entry(op, k: int, i: int, l: int):
    """Entry ``(A^k)_{i,l}`` by ``k`` exact applications of ``A`` to ``e_l``."""
    if k < 0:
        raise ValueError("power must be nonnegative")
    A = _as_operator(op)
    x = FinVector.unit(l, A.field)
    for _ in range(k):
        x = A.apply(x)
        if not x:
            break
    return x[i] if i in x._data else coerce(0, A.field)


def verify_hopping(A, n: int, N: int) -> list[tuple[int, int]]:
    """Pairs ``(v, col)`` among the first ``N`` rows whose support leaves ``U_n(v)``."""
    A = _as_operator(A)
    if n < 0 or N < 1:
        raise ValueError("need n >= 0 and N >= 1")
    report = []
    for v in range(1, N + 1):
        ball = None
        for col, _ in A.row(v):
            if col == v:
                continue
            if ball is None:
                ball = n_neighborhood(A.graph, v, n)
            if col not in ball:
                report.append((v, col))
    return report
