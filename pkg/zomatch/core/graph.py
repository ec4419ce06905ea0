"""Bipartite graph with 0/1 edge weights and its weight-0 piece decomposition."""

from collections import deque
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field

from zomatch.core.exceptions import InputError

Edge = tuple[int, int, int]
Matching = list[tuple[int, int]]


@dataclass(eq=False)
class BipartiteGraph:
    """
    Edges between parts A and B, each with weight 0 or 1.

    Vertices share one index space: A-vertex i is i, B-vertex j is n_a + j.
    Edge lists keep input order, which fixes adjacency order and hence DFS order.
    """

    n_a: int
    n_b: int
    edge_a: list[int]
    edge_b: list[int]
    weight: list[int]
    adj_a: list[list[int]]
    adj_b: list[list[int]]
    piece_id: list[int | None] = field(default_factory=list)
    coordinates: dict[int, tuple[int, int]] | None = None
    _index: dict[tuple[int, int], int] = field(default_factory=dict, repr=False)

    @property
    def m(self) -> int:
        return len(self.weight)

    @property
    def vertex_count(self) -> int:
        return self.n_a + self.n_b

    def is_a(self, v: int) -> bool:
        return v < self.n_a

    def b_vertex(self, j: int) -> int:
        """Unified id of the j-th B-vertex."""
        return self.n_a + j

    def edge(self, e: int) -> Edge:
        return self.edge_a[e], self.edge_b[e], self.weight[e]

    def edges(self) -> Iterator[Edge]:
        for e in range(self.m):
            yield self.edge_a[e], self.edge_b[e], self.weight[e]

    def endpoints(self, e: int) -> tuple[int, int]:
        """Unified (a, b) vertex ids of an edge."""
        return self.edge_a[e], self.n_a + self.edge_b[e]

    def incident(self, v: int) -> list[int]:
        """Edge ids at a unified vertex, in construction order."""
        if v < self.n_a:
            return self.adj_a[v]
        return self.adj_b[v - self.n_a]

    def other(self, e: int, v: int) -> int:
        a, b = self.endpoints(e)
        return b if v == a else a

    def find_edge(self, a: int, b: int) -> int | None:
        """Edge id for A-index a and B-index b."""
        return self._index.get((a, b))

    def reweighted(self, weights: Sequence[int]) -> "BipartiteGraph":
        """Same edges and coordinates, new weights; pieces are recomputed lazily."""
        if len(weights) != self.m:
            raise InputError(
                f"Expected {self.m} weights, got {len(weights)}",
                reason="weight count",
            )
        graph = build_graph(
            self.n_a,
            self.n_b,
            [(a, b, w) for (a, b, _), w in zip(self.edges(), weights, strict=True)],
        )
        graph.coordinates = self.coordinates
        return graph


@dataclass(frozen=True)
class PieceDecomposition:
    """Connected components of the weight-0 subgraph; every vertex has a piece."""

    piece_count: int
    vertex_of_piece: list[int]
    piece_vertices: list[int]
    piece_edges: list[int]

    @property
    def max_piece_vertices(self) -> int:
        return max(self.piece_vertices, default=0)

    @property
    def max_piece_edges(self) -> int:
        return max(self.piece_edges, default=0)

    def members(self, piece: int) -> list[int]:
        return [v for v, p in enumerate(self.vertex_of_piece) if p == piece]


def build_graph(
    n_a: int,
    n_b: int,
    edges: Iterable[tuple[int, int, int]],
) -> BipartiteGraph:
    """
    Build a graph from (a-index, b-index, weight) triples.

    Args:
        n_a: Number of A-vertices
        n_b: Number of B-vertices
        edges: Edge triples; weights must be 0 or 1 and pairs must be distinct

    Returns:
        BipartiteGraph with adjacency built and no piece ids assigned

    Raises:
        InputError: on out-of-range index, duplicate edge or weight outside {0, 1}
    """
    if n_a < 0 or n_b < 0:
        raise InputError("Vertex counts must be non-negative", reason=f"n_a={n_a}, n_b={n_b}")

    edge_a: list[int] = []
    edge_b: list[int] = []
    weight: list[int] = []
    adj_a: list[list[int]] = [[] for _ in range(n_a)]
    adj_b: list[list[int]] = [[] for _ in range(n_b)]
    index: dict[tuple[int, int], int] = {}

    for a, b, w in edges:
        triple = (a, b, w)
        if not (0 <= a < n_a and 0 <= b < n_b):
            raise InputError("Edge endpoint out of range", edge=triple, reason="index")
        if isinstance(w, bool) or w not in (0, 1):
            raise InputError("Edge weight must be 0 or 1", edge=triple, reason="weight")
        if (a, b) in index:
            raise InputError("Duplicate edge", edge=triple, reason="duplicate")

        e = len(weight)
        index[(a, b)] = e
        edge_a.append(a)
        edge_b.append(b)
        weight.append(int(w))
        adj_a[a].append(e)
        adj_b[b].append(e)

    return BipartiteGraph(
        n_a=n_a,
        n_b=n_b,
        edge_a=edge_a,
        edge_b=edge_b,
        weight=weight,
        adj_a=adj_a,
        adj_b=adj_b,
        piece_id=[None] * len(weight),
        _index=index,
    )


def compute_pieces(graph: BipartiteGraph) -> PieceDecomposition:
    """
    Label the components of the weight-0 subgraph and stamp weight-0 edges.

    Pieces are numbered in order of their smallest unified vertex id. A vertex
    with no weight-0 edge forms a singleton piece.
    """
    n = graph.vertex_count
    vertex_piece = [-1] * n
    piece_vertices: list[int] = []

    for start in range(n):
        if vertex_piece[start] != -1:
            continue
        piece = len(piece_vertices)
        vertex_piece[start] = piece
        size = 1
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for e in graph.incident(v):
                if graph.weight[e]:
                    continue
                u = graph.other(e, v)
                if vertex_piece[u] == -1:
                    vertex_piece[u] = piece
                    size += 1
                    queue.append(u)
        piece_vertices.append(size)

    piece_edges = [0] * len(piece_vertices)
    for e in range(graph.m):
        if graph.weight[e]:
            graph.piece_id[e] = None
            continue
        piece = vertex_piece[graph.edge_a[e]]
        graph.piece_id[e] = piece
        piece_edges[piece] += 1

    return PieceDecomposition(
        piece_count=len(piece_vertices),
        vertex_of_piece=vertex_piece,
        piece_vertices=piece_vertices,
        piece_edges=piece_edges,
    )
