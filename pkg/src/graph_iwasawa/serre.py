"""Finite multigraphs in Serre form and their exact matrix invariants.

A multigraph is a set of directed edges together with a fixed-point-free
inversion pairing each directed edge with its reverse.  Loops and parallel
edges are allowed; an undirected edge is an orbit {e, inverse(e)}.  All
graphs handled here are expected to be finite, connected, and free of
degree-one vertices; ``validate_serre`` reports every violation.

Spanning trees are counted exactly through the matrix-tree theorem: the
determinant of the reduced Laplacian, computed fraction-free for small
graphs and by a rigorous multi-modular CRT determinant for large ones.
"""

from __future__ import annotations

import numpy as np

from . import linalg

# Dense determinants on graphs beyond this many vertices are refused.
DEFAULT_VERTEX_CAP = 1 << 15


class DisconnectedGraphError(ValueError):
    """The operation requires a connected multigraph."""


class Multigraph:
    """Serre-form multigraph with dense 0-based vertex and edge ids.

    Directed edges are stored as parallel arrays ``origin``, ``terminus``,
    ``inverse``.  Use ``add_edge``/``add_loop`` to build; both synthesize
    the directed pair.  Treat instances as frozen once built.
    """

    __slots__ = ("num_vertices", "origin", "terminus", "inverse")

    def __init__(self, num_vertices: int):
        if num_vertices < 1:
            raise ValueError("a multigraph needs at least one vertex")
        self.num_vertices = num_vertices
        self.origin: list[int] = []
        self.terminus: list[int] = []
        self.inverse: list[int] = []

    @classmethod
    def from_arrays(cls, num_vertices: int, origin, terminus, inverse) -> "Multigraph":
        """Raw constructor; no axioms enforced (see validate_serre)."""
        g = cls(num_vertices)
        g.origin = list(origin)
        g.terminus = list(terminus)
        g.inverse = list(inverse)
        return g

    def add_edge(self, u: int, v: int) -> tuple[int, int]:
        """Add an undirected edge between u and v; returns the directed pair."""
        if not (0 <= u < self.num_vertices and 0 <= v < self.num_vertices):
            raise ValueError("vertex id out of range")
        e = len(self.origin)
        self.origin += [u, v]
        self.terminus += [v, u]
        self.inverse += [e + 1, e]
        return e, e + 1

    def add_loop(self, v: int) -> tuple[int, int]:
        return self.add_edge(v, v)

    @property
    def num_directed_edges(self) -> int:
        return len(self.origin)

    @property
    def num_undirected_edges(self) -> int:
        return len(self.origin) // 2

    def undirected_edges(self) -> list[int]:
        """Canonical representatives: the smaller id of each orbit."""
        return [e for e in range(len(self.origin)) if e < self.inverse[e]]

    def valency(self, v: int) -> int:
        return sum(1 for o in self.origin if o == v)

    def valencies(self) -> list[int]:
        out = [0] * self.num_vertices
        for o in self.origin:
            out[o] += 1
        return out

    def __repr__(self):
        return (f"Multigraph(vertices={self.num_vertices}, "
                f"undirected_edges={self.num_undirected_edges})")


def bouquet(t: int) -> Multigraph:
    """B_t: one vertex carrying t loops."""
    g = Multigraph(1)
    for _ in range(t):
        g.add_loop(0)
    return g


def cycle_graph(n: int) -> Multigraph:
    """C_n.  C_1 is a single loop and C_2 a doubled edge."""
    g = Multigraph(n)
    if n == 1:
        g.add_loop(0)
    else:
        for v in range(n):
            g.add_edge(v, (v + 1) % n)
    return g


def _components(x: Multigraph) -> int:
    n = x.num_vertices
    adj: list[list[int]] = [[] for _ in range(n)]
    for e in range(len(x.origin)):
        o, t = x.origin[e], x.terminus[e]
        if 0 <= o < n and 0 <= t < n:
            adj[o].append(t)
    seen = [False] * n
    comps = 0
    for s in range(n):
        if seen[s]:
            continue
        comps += 1
        stack = [s]
        seen[s] = True
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
    return comps


def validate_serre(x: Multigraph) -> list[str]:
    """Every axiom violation, as human-readable strings; [] when valid."""
    out = []
    ne = len(x.origin)
    if not (len(x.terminus) == len(x.inverse) == ne):
        return ["edge arrays have inconsistent lengths"]
    for e in range(ne):
        if not (0 <= x.origin[e] < x.num_vertices
                and 0 <= x.terminus[e] < x.num_vertices):
            out.append(f"edge {e}: endpoint out of range")
        ie = x.inverse[e]
        if not (0 <= ie < ne):
            out.append(f"edge {e}: inverse id out of range")
            continue
        if ie == e:
            out.append(f"edge {e}: inversion has a fixed point")
        if x.inverse[ie] != e:
            out.append(f"edge {e}: inversion is not an involution")
        if x.origin[ie] != x.terminus[e] or x.terminus[ie] != x.origin[e]:
            out.append(f"edge {e}: inverse does not swap origin and terminus")
    if not out:
        if _components(x) != 1:
            out.append("graph is not connected")
        for v, val in enumerate(x.valencies()):
            if val < 2:
                out.append(f"vertex {v}: valency {val} < 2")
    return out


def require_valid(x: Multigraph) -> None:
    problems = validate_serre(x)
    if problems:
        if any("not connected" in p for p in problems):
            raise DisconnectedGraphError("; ".join(problems))
        raise ValueError("invalid multigraph: " + "; ".join(problems))


def adjacency_matrix(x: Multigraph) -> list[list[int]]:
    """a_ii = twice the loops at i; a_ij = undirected edges between i and j."""
    n = x.num_vertices
    a = [[0] * n for _ in range(n)]
    for e in range(len(x.origin)):
        a[x.origin[e]][x.terminus[e]] += 1
    return a


def valency_matrix(x: Multigraph) -> list[list[int]]:
    n = x.num_vertices
    d = [[0] * n for _ in range(n)]
    for v, val in enumerate(x.valencies()):
        d[v][v] = val
    return d


def laplacian(x: Multigraph) -> list[list[int]]:
    a = adjacency_matrix(x)
    for v, val in enumerate(x.valencies()):
        a[v][v] -= val
        for j in range(x.num_vertices):
            a[v][j] = -a[v][j]
    return a


def euler_characteristic(x: Multigraph) -> int:
    return x.num_vertices - x.num_undirected_edges


def betti1(x: Multigraph) -> int:
    return 1 - euler_characteristic(x)


def _laplacian_reduced_np(x: Multigraph, delete_index: int) -> np.ndarray:
    n = x.num_vertices
    lap = np.zeros((n, n), dtype=np.int64)
    for e in range(len(x.origin)):
        o, t = x.origin[e], x.terminus[e]
        lap[o, t] -= 1
        lap[o, o] += 1
    keep = [i for i in range(n) if i != delete_index]
    return lap[np.ix_(keep, keep)]


def spanning_tree_count(x: Multigraph, delete_index: int = 0,
                        cap: int = DEFAULT_VERTEX_CAP,
                        bareiss_max: int = linalg.BAREISS_DEFAULT_MAX) -> int:
    """Number of spanning trees (matrix-tree theorem), exact.

    ``delete_index`` selects the row/column removed from the Laplacian; the
    result does not depend on it.  Graphs with more than ``cap`` vertices
    are refused since the dense determinant is infeasible.
    """
    require_valid(x)
    n = x.num_vertices
    if n > cap:
        raise ValueError(f"graph has {n} vertices, beyond the cap of {cap}")
    if not (0 <= delete_index < n):
        raise ValueError("delete_index out of range")
    if n == 1:
        return 1
    if n - 1 <= bareiss_max:
        lap = laplacian(x)
        keep = [i for i in range(n) if i != delete_index]
        reduced = [[lap[i][j] for j in keep] for i in keep]
        det = linalg.det_bareiss(reduced)
    else:
        det = linalg.det_crt(_laplacian_reduced_np(x, delete_index),
                             nonnegative=True)
    if det <= 0:
        raise DisconnectedGraphError("reduced Laplacian is singular")
    return det


def to_dot(x: Multigraph, name: str = "multigraph") -> str:
    """DOT source; multi-edges repeated, loops as self-edges."""
    lines = [f"graph {name} {{"]
    for v in range(x.num_vertices):
        lines.append(f"  {v};")
    pairs = sorted((min(x.origin[e], x.terminus[e]),
                    max(x.origin[e], x.terminus[e]), e)
                   for e in x.undirected_edges())
    for u, v, _ in pairs:
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def multigraph_to_json(x: Multigraph) -> dict:
    return {
        "vertices": x.num_vertices,
        "edges": [{"u": x.origin[e], "v": x.terminus[e]}
                  for e in x.undirected_edges()],
    }


def multigraph_from_json(data: dict) -> Multigraph:
    try:
        n = int(data["vertices"])
        edges = data["edges"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed multigraph JSON: {exc}") from exc
    g = Multigraph(n)
    for rec in edges:
        g.add_edge(int(rec["u"]), int(rec["v"]))
    return g
