"""Lazily enumerated, locally finite, undirected graphs.

Vertices are the positive integers ``1, 2, 3, ...`` under a fixed
enumeration chosen per family:

``ray``
    natural order, ``v_k ~ v_{k+1}``.
``line``
    the integers in the order ``0, 1, -1, 2, -2, ...``.
``binary_tree``
    breadth first from the root ``v_1``; the children of ``v_k`` are
    ``v_{2k}`` and ``v_{2k+1}``.
``grid2d``
    the square lattice, enumerated along an outward square spiral starting
    at the origin ``v_1`` and continuing with ``(1, 0), (1, 1), (0, 1), ...``.
``caterpillar``
    a ray spine on the odd indices, each spine vertex ``v_{2i-1}`` carrying a
    single leaf ``v_{2i}``.
``finite``
    an explicit 1-indexed edge list.

Every query on an infinite family is answered from a neighbor oracle, so no
operation ever materializes the whole graph. Searches take an explicit depth
bound and raise :class:`RadiusExceeded` instead of running forever.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

__all__ = [
    "DEFAULT_RADIUS_CAP",
    "FAMILIES",
    "BinaryTree",
    "Caterpillar",
    "CustomGraph",
    "FiniteGraph",
    "GraphError",
    "GraphOracle",
    "Grid2D",
    "Line",
    "MissingWeight",
    "RadiusExceeded",
    "Ray",
    "Violation",
    "WeightScheme",
    "distance",
    "graph_from_spec",
    "load_graph",
    "n_neighborhood",
    "neighbors",
    "validate_section",
    "walk_exists",
    "weights_from_spec",
]

DEFAULT_RADIUS_CAP = 10_000


class GraphError(ValueError):
    """Invalid graph parameters, input, or vertex index."""


class RadiusExceeded(RuntimeError):
    """No path was found within the requested search radius."""


class MissingWeight(GraphError):
    pass


class GraphOracle:
    """Base class: subclasses implement ``_adjacent(v)``.

    ``neighbors`` normalizes the raw oracle output (sorted, deduplicated);
    :func:`validate_section` inspects the raw output directly.
    """

    family: str = "custom"
    enumeration = ""
    infinite = True

    def _adjacent(self, v: int) -> Iterable[int]:
        raise NotImplementedError

    def check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or isinstance(v, bool) or v < 1:
            raise GraphError(f"vertex index must be a positive integer, got {v!r}")

    def neighbors(self, v: int) -> list[int]:
        self.check_vertex(v)
        return sorted(set(self._adjacent(v)))

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def spec(self) -> dict:
        """JSON-ready description of the graph (see :func:`graph_from_spec`)."""
        return {"family": self.family}

    def __eq__(self, other):
        return type(self) is type(other) and self.spec() == other.spec()

    def __hash__(self):
        return hash(json.dumps(self.spec(), sort_keys=True))

    def __repr__(self):
        return f"{type(self).__name__}()"


class Ray(GraphOracle):
    family = "ray"
    enumeration = "natural order; v_k ~ v_(k+1)"

    def _adjacent(self, v):
        return [v + 1] if v == 1 else [v - 1, v + 1]


def line_value(k: int) -> int:
    """Integer sitting at index ``k`` of the line enumeration."""
    if k == 1:
        return 0
    return k // 2 if k % 2 == 0 else -(k // 2)


def line_index(z: int) -> int:
    if z == 0:
        return 1
    return 2 * z if z > 0 else -2 * z + 1


class Line(GraphOracle):
    family = "line"
    enumeration = "integers ordered 0, 1, -1, 2, -2, ...; consecutive integers adjacent"

    def _adjacent(self, v):
        z = line_value(v)
        return [line_index(z - 1), line_index(z + 1)]


class BinaryTree(GraphOracle):
    family = "binary_tree"
    enumeration = "breadth first from the root v_1; children of v_k are v_(2k), v_(2k+1)"

    def _adjacent(self, v):
        adj = [2 * v, 2 * v + 1]
        if v > 1:
            adj.append(v // 2)
        return adj


def spiral_point(k: int) -> tuple[int, int]:
    """Lattice point at index ``k`` of the outward square spiral."""
    if k == 1:
        return (0, 0)
    r = 1
    while (2 * r + 1) ** 2 < k:
        r += 1
    t = k - (2 * r - 1) ** 2 - 1
    side, pos = divmod(t, 2 * r)
    if side == 0:
        return (r, -r + 1 + pos)
    if side == 1:
        return (r - 1 - pos, r)
    if side == 2:
        return (-r, r - 1 - pos)
    return (-r + 1 + pos, -r)


def spiral_index(x: int, y: int) -> int:
    r = max(abs(x), abs(y))
    if r == 0:
        return 1
    base = (2 * r - 1) ** 2 + 1
    if x == r and y > -r:
        t = y + r - 1
    elif y == r:
        t = 2 * r + (r - 1 - x)
    elif x == -r:
        t = 4 * r + (r - 1 - y)
    else:
        t = 6 * r + (x + r - 1)
    return base + t


class Grid2D(GraphOracle):
    family = "grid2d"
    enumeration = (
        "square lattice Z^2 along an outward square spiral: v_1 = (0,0), "
        "then ring r counter-clockwise from (r, 1-r)"
    )

    def _adjacent(self, v):
        x, y = spiral_point(v)
        return [spiral_index(x + dx, y + dy) for dx, dy in ((1, 0), (-1, 0), (0, 1), (0, -1))]


class Caterpillar(GraphOracle):
    family = "caterpillar"
    enumeration = "spine v_1 ~ v_3 ~ v_5 ~ ...; leaf v_(2i) hangs off spine vertex v_(2i-1)"

    def _adjacent(self, v):
        if v % 2 == 0:
            return [v - 1]
        adj = [v + 1, v + 2]
        if v > 1:
            adj.append(v - 2)
        return adj


class FiniteGraph(GraphOracle):
    """Explicit graph on ``1..vertices``.

    Edges are unordered pairs and are symmetrized unless ``symmetrize`` is
    false, in which case they are taken as directed (useful for building
    deliberately broken inputs for :func:`validate_section`). Repeated edges
    are rejected; loops are kept so that validation can report them.
    """

    family = "finite"
    enumeration = "explicit 1-indexed vertex list"
    infinite = False

    def __init__(self, vertices: int, edges, symmetrize: bool = True):
        if not isinstance(vertices, int) or isinstance(vertices, bool) or vertices < 1:
            raise GraphError(f"vertex count must be a positive integer, got {vertices!r}")
        self.vertices = vertices
        self.symmetric = symmetrize
        self.edges = []
        seen = set()
        adj = {v: [] for v in range(1, vertices + 1)}
        for edge in edges:
            try:
                i, j = edge
            except (TypeError, ValueError):
                raise GraphError(f"edge must be a pair, got {edge!r}") from None
            for u in (i, j):
                if not isinstance(u, int) or isinstance(u, bool) or not 1 <= u <= vertices:
                    raise GraphError(f"edge {edge!r} has an endpoint outside 1..{vertices}")
            key = frozenset((i, j)) if symmetrize else (i, j)
            if key in seen:
                raise GraphError(f"multiple edge {edge!r}")
            seen.add(key)
            self.edges.append((i, j))
            adj[i].append(j)
            if symmetrize and i != j:
                adj[j].append(i)
        self._adj = {v: tuple(ws) for v, ws in adj.items()}

    def check_vertex(self, v):
        super().check_vertex(v)
        if v > self.vertices:
            raise GraphError(f"vertex {v} out of range 1..{self.vertices}")

    def _adjacent(self, v):
        return self._adj[v]

    def spec(self):
        return {"family": "finite", "vertices": self.vertices, "edges": [list(e) for e in self.edges]}

    def __repr__(self):
        return f"FiniteGraph({self.vertices}, {self.edges!r})"


class CustomGraph(GraphOracle):
    """Wrap an arbitrary neighbor function (not serializable)."""

    def __init__(self, adjacent: Callable[[int], Iterable[int]], vertices: int | None = None):
        self._fn = adjacent
        self.vertices = vertices
        self.infinite = vertices is None

    def check_vertex(self, v):
        super().check_vertex(v)
        if self.vertices is not None and v > self.vertices:
            raise GraphError(f"vertex {v} out of range 1..{self.vertices}")

    def _adjacent(self, v):
        return list(self._fn(v))

    def spec(self):
        raise GraphError("custom graphs have no JSON form")

    def __eq__(self, other):
        return self is other

    def __hash__(self):
        return id(self)


FAMILIES = {
    "ray": Ray,
    "line": Line,
    "binary_tree": BinaryTree,
    "grid2d": Grid2D,
    "caterpillar": Caterpillar,
}


def graph_from_spec(spec) -> GraphOracle:
    """Build a graph from its JSON description.

    Finite graphs are symmetrized and must pass :func:`validate_section`.
    """
    if isinstance(spec, str):
        spec = {"family": spec}
    if not isinstance(spec, dict) or "family" not in spec:
        raise GraphError(f"graph spec must be an object with a 'family' key, got {spec!r}")
    family = spec["family"]
    if family in FAMILIES:
        extra = set(spec) - {"family"}
        if extra:
            raise GraphError(f"family {family!r} takes no parameters, got {sorted(extra)}")
        return FAMILIES[family]()
    if family != "finite":
        raise GraphError(f"unknown graph family {family!r}")
    if "vertices" not in spec or "edges" not in spec:
        raise GraphError("finite graph needs 'vertices' and 'edges'")
    edges = spec["edges"]
    if not isinstance(edges, list):
        raise GraphError("'edges' must be a list of pairs")
    g = FiniteGraph(spec["vertices"], [tuple(e) if isinstance(e, list) else e for e in edges])
    problems = validate_section(g, g.vertices)
    if problems:
        raise GraphError("invalid finite graph: " + "; ".join(str(p) for p in problems))
    return g


def load_graph(path) -> GraphOracle:
    with open(path, encoding="utf-8") as fh:
        return graph_from_spec(json.load(fh))


def neighbors(g: GraphOracle, v: int) -> list[int]:
    return g.neighbors(v)


def _bfs_layers(g, v, depth):
    """Yield ``(d, layer)`` for d = 0..depth, stopping early when exhausted."""
    g.check_vertex(v)
    seen = {v}
    layer = [v]
    for d in range(depth + 1):
        yield d, layer
        if d == depth:
            return
        nxt = []
        for u in layer:
            for w in g.neighbors(u):
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        if not nxt:
            return
        layer = nxt


def distance(g: GraphOracle, u: int, v: int, radius_cap: int) -> int:
    """Length of a shortest path from ``u`` to ``v`` by breadth-first search.

    Raises :class:`RadiusExceeded` when ``v`` is not within ``radius_cap``
    steps of ``u``.
    """
    if radius_cap < 0:
        raise ValueError("radius_cap must be nonnegative")
    g.check_vertex(v)
    for d, layer in _bfs_layers(g, u, radius_cap):
        if v in layer:
            return d
    raise RadiusExceeded(f"no path from {u} to {v} of length <= {radius_cap}")


def n_neighborhood(g: GraphOracle, v: int, n: int) -> set[int]:
    """``U_n(v)``: all vertices within ``n`` steps of ``v``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = set()
    for _, layer in _bfs_layers(g, v, n):
        out.update(layer)
    return out


def walk_exists(g: GraphOracle, u: int, v: int, j: int) -> bool:
    """Whether some walk of exactly ``j`` edges joins ``u`` to ``v``."""
    if j < 0:
        raise ValueError("walk length must be nonnegative")
    g.check_vertex(u)
    g.check_vertex(v)
    frontier = {u}
    for _ in range(j):
        frontier = {w for x in frontier for w in g.neighbors(x)}
        if not frontier:
            return False
    return v in frontier


@dataclass(frozen=True)
class Violation:
    kind: str
    v: int
    w: int | None = None

    def __str__(self):
        return f"{self.kind} at {self.v}" + ("" if self.w is None else f" -> {self.w}")


def validate_section(g: GraphOracle, N: int) -> list[Violation]:
    """Check the graph axioms on the first ``N`` vertices.

    Reports loops, repeated neighbors, and asymmetric adjacencies for every
    edge touching ``v_1 .. v_N``; finite graphs are also checked for
    connectivity from ``v_1``. An empty list means no violations.
    """
    if N < 1:
        raise ValueError("N must be positive")
    if not g.infinite and g.vertices is not None:
        N = min(N, g.vertices)
    section = range(1, N + 1)
    raw = {}

    def adjacent(u):
        if u not in raw:
            try:
                raw[u] = list(g._adjacent(u))
            except (GraphError, KeyError, IndexError):
                raw[u] = None
        return raw[u]

    report = []
    for v in section:
        adj = adjacent(v)
        if adj is None:
            report.append(Violation("invalid-vertex", v))
            continue
        dup = sorted({w for w in adj if adj.count(w) > 1})
        report.extend(Violation("duplicate-neighbor", v, w) for w in dup)
        if v in adj:
            report.append(Violation("loop", v))
    # symmetry in both directions for every edge with an endpoint in the section
    boundary = sorted({w for v in section for w in adjacent(v) or ()} - set(section))
    checked = set()
    for u in list(section) + boundary:
        adj = adjacent(u)
        if adj is None:
            continue
        for x in sorted(set(adj)):
            if x == u or (u > N and x > N) or (u, x) in checked:
                continue
            checked.add((u, x))
            back = adjacent(x) if isinstance(x, int) and x >= 1 else None
            if back is None:
                report.append(Violation("invalid-neighbor", u, x))
            elif u not in back:
                report.append(Violation("asymmetric", u, x))
    if not g.infinite:
        reached = n_neighborhood(g, 1, g.vertices)
        for v in range(1, g.vertices + 1):
            if v not in reached:
                report.append(Violation("disconnected", v))
    return report


@dataclass(frozen=True)
class WeightScheme:
    """Edge weights ``gamma(v, w) > 0``.

    ``uniform`` gives 1 on every edge, ``normalized`` gives ``1/deg(v)``, and
    ``custom`` reads a directed table keyed by ``(v, w)``.
    """

    kind: str = "uniform"
    table: dict = field(default=None, hash=False, compare=False)

    def __post_init__(self):
        if self.kind not in ("uniform", "normalized", "custom"):
            raise GraphError(f"unknown weight scheme {self.kind!r}")
        if self.kind == "custom":
            if not self.table:
                raise GraphError("custom weights need a table")
            clean = {}
            for key, value in self.table.items():
                q = Fraction(value)
                if q <= 0:
                    raise GraphError(f"nonpositive weight {q} on edge {key}")
                clean[tuple(key)] = q
            object.__setattr__(self, "table", clean)

    def gamma(self, g: GraphOracle, v: int, w: int) -> Fraction:
        if self.kind == "uniform":
            return Fraction(1)
        if self.kind == "normalized":
            return Fraction(1, g.degree(v))
        try:
            return self.table[(v, w)]
        except KeyError:
            raise MissingWeight(f"no weight for edge ({v}, {w})") from None

    def spec(self):
        if self.kind != "custom":
            return self.kind
        from .scalars import format_scalar

        return {"table": [[v, w, format_scalar(q)] for (v, w), q in sorted(self.table.items())]}

    def __eq__(self, other):
        return isinstance(other, WeightScheme) and self.kind == other.kind and self.table == other.table

    def __hash__(self):
        return hash(self.kind)


def weights_from_spec(spec) -> WeightScheme:
    """Accepts ``"uniform"``, ``"normalized"``, ``{"table": [[i, j, "p/q"], ...]}``
    or any of these wrapped as ``{"weights": ...}``."""
    if isinstance(spec, dict) and "weights" in spec:
        spec = spec["weights"]
    if spec in ("uniform", "normalized"):
        return WeightScheme(spec)
    if isinstance(spec, dict) and "table" in spec:
        from .scalars import ScalarError, parse_scalar

        table = {}
        for entry in spec["table"]:
            try:
                i, j, value = entry
                q = parse_scalar(value) if isinstance(value, str) else Fraction(value)
            except (TypeError, ValueError, ScalarError):
                raise GraphError(f"bad weight table entry {entry!r}") from None
            if (i, j) in table:
                raise GraphError(f"duplicate weight for ({i}, {j})")
            table[(i, j)] = q
        return WeightScheme("custom", table)
    raise GraphError(f"unrecognized weight scheme {spec!r}")
