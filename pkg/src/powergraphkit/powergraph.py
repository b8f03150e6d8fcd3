"""Power graph, directed power graph, and cyclic-subgroup class graph.

Adjacency is stored as one Python int bitmask per vertex, which keeps the
exact searches downstream (cliques, holes, eliminations) fast at desk scale.
"""

from .errors import PowerGraphKitError
from .groups import FiniteGroup


def iter_bits(mask: int):
    """Yield the set bit positions of mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Simple undirected graph on vertices 0..n-1 with bitmask rows."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: list[int] | None = None):
        self.n = n
        self.adj = adj if adj is not None else [0] * n

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        g = cls(n)
        for u, v in edges:
            g.add_edge(u, v)
        return g

    def add_edge(self, u: int, v: int) -> None:
        if u == v:
            raise ValueError("no self-loops")
        self.adj[u] |= 1 << v
        self.adj[v] |= 1 << u

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(iter_bits(self.adj[v]))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def universal_mask(self) -> int:
        """Bitmask of vertices adjacent to every other vertex."""
        full = self.full_mask
        out = 0
        for v in range(self.n):
            if self.adj[v] == full ^ (1 << v):
                out |= 1 << v
        return out

    def complement(self) -> "Graph":
        full = self.full_mask
        return Graph(self.n, [(full ^ row ^ (1 << v)) for v, row in enumerate(self.adj)])

    def induced(self, vertices) -> "Graph":
        """Induced subgraph on `vertices`, re-indexed in the given order."""
        verts = list(vertices)
        pos = {v: i for i, v in enumerate(verts)}
        sub = Graph(len(verts))
        for i, v in enumerate(verts):
            row = 0
            for w in iter_bits(self.adj[v]):
                j = pos.get(w)
                if j is not None:
                    row |= 1 << j
            sub.adj[i] = row
        return sub

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= self.adj[v]
            frontier = nxt & ~seen
            seen |= frontier
        return seen == self.full_mask

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count()})"


class Digraph:
    """Simple directed graph with bitmask out-neighbour rows."""

    __slots__ = ("n", "out")

    def __init__(self, n: int, out: list[int] | None = None):
        self.n = n
        self.out = out if out is not None else [0] * n

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.out[u] >> v) & 1)

    def in_adj(self) -> list[int]:
        rows = [0] * self.n
        for u in range(self.n):
            for v in iter_bits(self.out[u]):
                rows[v] |= 1 << u
        return rows

    def underlying(self) -> Graph:
        rows = self.in_adj()
        return Graph(self.n, [self.out[v] | rows[v] for v in range(self.n)])

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.out)

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, m={self.edge_count()})"


class PowerGraph(Graph):
    """Undirected power graph of a finite group: x ~ y iff one of the two
    cyclic subgroups contains the other."""

    __slots__ = ("group",)

    def __init__(self, group: FiniteGroup, adj: list[int]):
        super().__init__(group.order, adj)
        self.group = group


class DirectedPowerGraph(Digraph):
    """Directed power graph: edge (x, y) iff y lies in <x> and x != y."""

    __slots__ = ("group",)

    def __init__(self, group: FiniteGroup, out: list[int]):
        super().__init__(group.order, out)
        self.group = group


def build_power_graph(group: FiniteGroup) -> PowerGraph:
    n = group.order
    masks = group.subgroup_masks
    adj = list(masks)
    for y in range(n):
        bit_y = 1 << y
        for x in iter_bits(masks[y]):
            adj[x] |= bit_y
    for v in range(n):
        adj[v] &= ~(1 << v)
    return PowerGraph(group, adj)


def build_directed_power_graph(group: FiniteGroup) -> DirectedPowerGraph:
    out = [mask & ~(1 << v) for v, mask in enumerate(group.subgroup_masks)]
    return DirectedPowerGraph(group, out)


class CyclicClassGraph:
    """Quotient of the power graph by "generates the same cyclic subgroup".

    Classes are ordered by descending weight then ascending representative,
    which keeps every export and report stable. `dir_adj` holds an edge
    (A, B) whenever B's subgroup is properly contained in A's (transitively
    closed); `hasse_adj` is its covering-relation reduction.
    """

    __slots__ = (
        "group",
        "classes",
        "reps",
        "weights",
        "subgroup_orders",
        "masks",
        "class_of",
        "dir_adj",
        "hasse_adj",
        "undirected",
    )

    def __init__(self, group: FiniteGroup):
        self.group = group
        by_mask: dict[int, list[int]] = {}
        for x in range(group.order):
            by_mask.setdefault(group.subgroup_masks[x], []).append(x)
        classes = [tuple(sorted(members)) for members in by_mask.values()]
        classes.sort(key=lambda c: (-len(c), c[0]))
        self.classes = tuple(classes)
        self.reps = tuple(c[0] for c in classes)
        self.weights = tuple(len(c) for c in classes)
        self.masks = tuple(group.subgroup_masks[c[0]] for c in classes)
        self.subgroup_orders = tuple(m.bit_count() for m in self.masks)

        self.class_of = [0] * group.order
        for idx, members in enumerate(classes):
            for x in members:
                self.class_of[x] = idx

        k = len(classes)
        dir_adj = [0] * k
        und = Graph(k)
        for i in range(k):
            mi = self.masks[i]
            for j in range(k):
                if i == j:
                    continue
                mj = self.masks[j]
                if mj & ~mi == 0:  # subgroup_j strictly inside subgroup_i
                    dir_adj[i] |= 1 << j
                    und.adj[i] |= 1 << j
                    und.adj[j] |= 1 << i
        self.dir_adj = dir_adj
        self.undirected = und

        above = [0] * k
        for i in range(k):
            for j in iter_bits(dir_adj[i]):
                above[j] |= 1 << i
        hasse = [0] * k
        for i in range(k):
            below = dir_adj[i]
            for j in iter_bits(below):
                # j is covered by i unless some strictly intermediate class exists
                if not (below & above[j]):
                    hasse[i] |= 1 << j
        self.hasse_adj = hasse

    @property
    def n(self) -> int:
        return len(self.classes)

    def parents(self, idx: int) -> tuple[int, ...]:
        """Classes covering idx in the Hasse reduction (one step up)."""
        return tuple(i for i in range(self.n) if (self.hasse_adj[i] >> idx) & 1)

    def children(self, idx: int) -> tuple[int, ...]:
        """Classes covered by idx in the Hasse reduction (one step down)."""
        return tuple(iter_bits(self.hasse_adj[idx]))

    def __repr__(self) -> str:
        return f"CyclicClassGraph({self.group.label!r}, classes={self.n})"


def build_cyclic_class_graph(group: FiniteGroup) -> CyclicClassGraph:
    return CyclicClassGraph(group)


def embed_classes(gcc: CyclicClassGraph, pg: PowerGraph) -> dict[int, int]:
    """Map each class to its canonical representative and certify that the
    induced subgraph of the power graph on the representatives is
    edge-isomorphic to the undirected class graph."""
    group = getattr(pg, "group", None)
    if group is None or group.label != gcc.group.label or group.order != gcc.group.order:
        raise PowerGraphKitError(
            "class graph and power graph were built from different groups"
        )
    mapping = {idx: rep for idx, rep in enumerate(gcc.reps)}
    for i in range(gcc.n):
        for j in range(i + 1, gcc.n):
            if gcc.undirected.has_edge(i, j) != pg.has_edge(gcc.reps[i], gcc.reps[j]):
                raise PowerGraphKitError(
                    f"class embedding mismatch between classes {i} and {j}"
                )
    return mapping


# -- DOT export ---------------------------------------------------------------


def _dot_escape(text: str) -> str:
    return text.replace("\\", "\\\\").replace('"', '\\"')


def _vertex_label(labels, v: int) -> str:
    if labels is None:
        return str(v)
    lab = labels[v]
    if isinstance(lab, tuple):
        return "(" + ",".join(str(x) for x in lab) + ")"
    return str(lab)


def graph_to_dot(g: Graph, labels=None, name: str = "G", highlight=None) -> str:
    """Render an undirected graph; `highlight` is an optional edge set drawn
    with a bold attribute (used to mark witness subgraphs)."""
    marked = {frozenset(e) for e in highlight} if highlight else set()
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        lines.append(f'  {v} [label="{_dot_escape(_vertex_label(labels, v))}"];')
    for u in range(g.n):
        for v in iter_bits(g.adj[u]):
            if v > u:
                attr = ' [style=bold]' if frozenset((u, v)) in marked else ""
                lines.append(f"  {u} -- {v}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def digraph_to_dot(dg: Digraph, labels=None, name: str = "G") -> str:
    lines = [f"digraph {name} {{"]
    for v in range(dg.n):
        lines.append(f'  {v} [label="{_dot_escape(_vertex_label(labels, v))}"];')
    for u in range(dg.n):
        for v in iter_bits(dg.out[u]):
            lines.append(f"  {u} -> {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def class_graph_to_dot(gcc: CyclicClassGraph, hasse: bool = False, name: str = "C") -> str:
    """Directed class graph with vertices labelled ``Z_k(w)`` where k is the
    cyclic subgroup order and w the class weight."""
    rows = gcc.hasse_adj if hasse else gcc.dir_adj
    lines = [f"digraph {name} {{"]
    for idx in range(gcc.n):
        label = f"Z_{gcc.subgroup_orders[idx]}({gcc.weights[idx]})"
        lines.append(f'  {idx} [label="{label}"];')
    for i in range(gcc.n):
        for j in iter_bits(rows[i]):
            lines.append(f"  {i} -> {j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
