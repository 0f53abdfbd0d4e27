"""Power graphs and commuting graphs as dense boolean adjacency matrices."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path

import numpy as np
from scipy.sparse.csgraph import connected_components

from .groups import Group

ALL = "all"
NONIDENTITY = "nonidentity"


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple undirected graph on vertices 0..n-1.

    ``labels[v]`` is the group element behind vertex v when the graph came
    from a group.
    """

    adjacency: np.ndarray
    labels: tuple[int, ...] | None = None

    def __post_init__(self):
        a = np.asarray(self.adjacency, dtype=bool)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError("adjacency must be square")
        if a.diagonal().any():
            raise ValueError("self-loops are not allowed")
        if not (a == a.T).all():
            raise ValueError("adjacency must be symmetric")
        if self.labels is not None and len(self.labels) != a.shape[0]:
            raise ValueError("one label per vertex")
        a.setflags(write=False)
        object.__setattr__(self, "adjacency", a)

    @property
    def n(self) -> int:
        return self.adjacency.shape[0]

    def __len__(self):
        return self.n

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u, v])

    @cached_property
    def degrees(self) -> np.ndarray:
        return self.adjacency.sum(axis=1)

    def edge_count(self) -> int:
        return int(self.degrees.sum()) // 2

    def edges(self) -> list[tuple[int, int]]:
        u, v = np.nonzero(np.triu(self.adjacency, 1))
        return list(zip(u.tolist(), v.tolist()))

    def laplacian(self) -> np.ndarray:
        a = self.adjacency.astype(np.int64)
        return np.diag(a.sum(axis=1)) - a

    def component_count(self) -> int:
        if self.n == 0:
            return 0
        return int(connected_components(self.adjacency, directed=False)[0])

    def is_connected(self) -> bool:
        return self.component_count() == 1

    def is_complete(self) -> bool:
        return self.edge_count() == self.n * (self.n - 1) // 2

    def induced(self, vertices) -> "Graph":
        idx = np.asarray(list(vertices), dtype=np.int64)
        labels = tuple(self.labels[i] for i in idx) if self.labels is not None else None
        return Graph(self.adjacency[np.ix_(idx, idx)], labels)

    def permuted(self, perm) -> "Graph":
        """Relabel so that new vertex k is old vertex perm[k]."""
        return self.induced(perm)

    def same_edges(self, other: "Graph") -> bool:
        return self.adjacency.shape == other.adjacency.shape and bool(
            (self.adjacency == other.adjacency).all()
        )

    def dumps(self) -> str:
        rows = ["".join("1" if x else "0" for x in row) for row in self.adjacency]
        return "\n".join([str(self.n), *rows]) + "\n"

    @classmethod
    def loads(cls, text: str) -> "Graph":
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        n = int(lines[0])
        if len(lines) != n + 1 or any(len(r) != n or set(r) - {"0", "1"} for r in lines[1:]):
            raise ValueError(f"expected {n} rows of {n} 0/1 characters")
        return cls(np.array([[c == "1" for c in r] for r in lines[1:]], dtype=bool).reshape(n, n))

    def dump(self, path: str | Path) -> None:
        Path(path).write_text(self.dumps())

    @classmethod
    def load(cls, path: str | Path) -> "Graph":
        return cls.loads(Path(path).read_text())


def complete_graph(n: int) -> Graph:
    return Graph(~np.eye(n, dtype=bool))


def empty_graph(n: int) -> Graph:
    return Graph(np.zeros((n, n), dtype=bool))


def graph_from_edges(n: int, edges) -> Graph:
    a = np.zeros((n, n), dtype=bool)
    for u, v in edges:
        a[u, v] = a[v, u] = True
    return Graph(a)


def resolve_subset(G: Group, subset) -> list[int]:
    if isinstance(subset, str):
        if subset == ALL:
            return list(range(G.order))
        if subset == NONIDENTITY:
            verts = list(range(1, G.order))
        else:
            raise ValueError(f"unknown subset {subset!r}")
    else:
        verts = sorted(set(int(v) for v in subset))
        if verts and not (0 <= verts[0] and verts[-1] < G.order):
            raise IndexError("subset contains an index outside the group")
    if not verts:
        raise ValueError("vertex subset must be nonempty")
    return verts


def _restricted(adj: np.ndarray, verts: list[int]) -> Graph:
    idx = np.array(verts)
    a = adj[np.ix_(idx, idx)].copy()
    np.fill_diagonal(a, False)
    return Graph(a, tuple(verts))


def power_graph(G: Group, subset=ALL) -> Graph:
    verts = resolve_subset(G, subset)
    m = G.cyclic_membership
    return _restricted(m | m.T, verts)


def commuting_graph(G: Group, subset=ALL) -> Graph:
    verts = resolve_subset(G, subset)
    t = G.table
    return _restricted(t == t.T, verts)


def edge_count(g: Graph) -> int:
    return g.edge_count()


def are_isomorphic(g: Graph, h: Graph) -> bool:
    """Brute-force isomorphism test, refined by degree classes.

    Intended for the tiny graphs used in cross-checks.
    """
    if g.n != h.n or g.edge_count() != h.edge_count():
        return False
    if sorted(g.degrees.tolist()) != sorted(h.degrees.tolist()):
        return False
    dg, dh = g.degrees, h.degrees
    classes = sorted(set(dg.tolist()))
    g_groups = [np.flatnonzero(dg == d) for d in classes]
    h_groups = [np.flatnonzero(dh == d) for d in classes]
    order_g = np.concatenate(g_groups)
    ag = g.adjacency[np.ix_(order_g, order_g)]
    for choice in itertools.product(*(itertools.permutations(grp) for grp in h_groups)):
        order_h = np.concatenate(choice)
        if (h.adjacency[np.ix_(order_h, order_h)] == ag).all():
            return True
    return False
