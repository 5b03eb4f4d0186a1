"""Graphs as directed edges with an involution, plus exact geodesic counting.

A graph is a set of vertices and a set of directed edges y with origin
o(y), terminus t(y) and an involution bar(y) satisfying bar(bar(y)) = y,
bar(y) != y, o(y) = t(bar(y)).  An undirected edge is the pair {y, bar(y)};
multi-edges and self-loops (with two distinct orientations) are allowed.

All counting is done in Python integers, so results are exact at any
length.  The recursions are validated against brute-force depth-first
enumeration, which is the ground-truth oracle for every count here.

Counting functions, all relative to a base vertex x0:

* a_k(x): walks of length k from x0 to x,
* c_k(x): non-backtracking walks (geodesics) of length k from x0 to x,
* c_k^0 = c_k(x0): geodesic loops at x0,
* N_k^0: closed geodesics at x0 (no backtracking and no tail),
* N_k: closed geodesics from any starting vertex, with direction,
* pi_k: prime geodesic classes of length k.
"""

from __future__ import annotations

import json
from collections import Counter, deque
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from sympy import mobius

__all__ = [
    "CountTable",
    "Graph",
    "GraphError",
    "builtin_graph",
    "check_vertex_transitive",
    "closed_geodesics_at_vertex",
    "closed_geodesics_total",
    "count_table",
    "enumerate_closed_geodesics",
    "enumerate_geodesics",
    "geodesic_counts",
    "geodesic_counts_recursion",
    "load_graph",
    "path_counts",
    "prime_geodesic_counts",
]

BUILTIN_NAMES = ("k4", "petersen", "cube", "k33")  # plus "c{n}" and "tree"


class GraphError(ValueError):
    """Raised for malformed, irregular, or otherwise unusable graph input."""


@dataclass(frozen=True)
class Graph:
    """Immutable graph in the edge-involution formalism.

    Directed edges are stored in bar-pairs: edge 2i and 2i+1 are each
    other's involution, so bar(e) = e ^ 1.
    """

    n_vertices: int
    origin: tuple[int, ...]
    terminus: tuple[int, ...]

    @property
    def n_edges(self) -> int:
        return len(self.origin)

    def bar(self, e: int) -> int:
        return e ^ 1

    @property
    def out_edges(self) -> tuple[tuple[int, ...], ...]:
        """Edge indices leaving each vertex (cached)."""
        cached = _OUT_EDGES.get(self)
        if cached is None:
            out: list[list[int]] = [[] for _ in range(self.n_vertices)]
            for e, u in enumerate(self.origin):
                out[u].append(e)
            cached = tuple(tuple(es) for es in out)
            _OUT_EDGES[self] = cached
        return cached

    def degree(self, v: int) -> int:
        return len(self.out_edges[v])

    def regularity(self) -> int:
        """Return q such that every vertex has degree q+1, else raise."""
        degrees = {self.degree(v) for v in range(self.n_vertices)}
        if len(degrees) != 1:
            raise GraphError(f"graph is not regular: degrees {sorted(degrees)}")
        d = degrees.pop()
        if d < 2:
            raise GraphError(f"degree {d} < 2: no q >= 1 exists")
        return d - 1

    def adjacency_counts(self) -> list[Counter]:
        """adjacency_counts()[u][v] = number of directed edges u -> v."""
        rows: list[Counter] = [Counter() for _ in range(self.n_vertices)]
        for e in range(self.n_edges):
            rows[self.origin[e]][self.terminus[e]] += 1
        return rows


# out-edge cache keyed by graph identity (Graph is frozen/hashable)
_OUT_EDGES: dict[Graph, tuple[tuple[int, ...], ...]] = {}


@dataclass
class CountTable:
    """Exact counting tables for one graph and base vertex, up to order K."""

    x0: int
    K: int
    a: list[list[int]] = field(repr=False)  # a[k][x]
    c: list[list[int]] = field(repr=False)  # c[k][x]
    c0: list[int] = field(default_factory=list)  # c_k(x0)
    n0: list[int] = field(default_factory=list)  # N_k^0 (transitive graphs)
    c_total: list[int] | None = None
    n_total: list[int] | None = None
    primes: list[int] | None = None


def _build_graph(n: int, undirected_edges: list[tuple[int, int]]) -> Graph:
    origin: list[int] = []
    terminus: list[int] = []
    for u, v in undirected_edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) references a vertex outside 0..{n - 1}")
        origin.extend((u, v))
        terminus.extend((v, u))
    g = Graph(n, tuple(origin), tuple(terminus))
    if n == 0:
        raise GraphError("graph has no vertices")
    _require_connected(g)
    return g


def _require_connected(g: Graph) -> None:
    seen = [False] * g.n_vertices
    seen[0] = True
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for e in g.out_edges[u]:
            v = g.terminus[e]
            if not seen[v]:
                seen[v] = True
                queue.append(v)
    missing = [v for v, s in enumerate(seen) if not s]
    if missing:
        raise GraphError(f"graph is disconnected: vertices {missing} unreachable from 0")


def load_graph(source: str | Path | dict) -> Graph:
    """Build a Graph from an edge-list document.

    Accepted forms:

    * a path to (or the text of) a file with one undirected edge per line,
      "u v" with 0-based indices; duplicate lines create multi-edges;
    * a dict {"vertices": n, "edges": [[u, v], ...]} or its JSON text.

    Each undirected edge expands to the directed pair {y, bar(y)}.
    """
    if isinstance(source, Path):
        source = source.read_text()
    if isinstance(source, str):
        stripped = source.strip()
        if stripped.startswith("{"):
            try:
                source = json.loads(stripped)
            except json.JSONDecodeError as exc:
                raise GraphError(f"invalid JSON graph document: {exc}") from exc
        else:
            edges = []
            for lineno, line in enumerate(stripped.splitlines(), start=1):
                line = line.split("#", 1)[0].strip()
                if not line:
                    continue
                parts = line.split()
                if len(parts) != 2:
                    raise GraphError(f"line {lineno}: expected 'u v', got {line!r}")
                try:
                    u, v = int(parts[0]), int(parts[1])
                except ValueError as exc:
                    raise GraphError(f"line {lineno}: non-integer vertex in {line!r}") from exc
                if u < 0 or v < 0:
                    raise GraphError(f"line {lineno}: negative vertex index in {line!r}")
                edges.append((u, v))
            if not edges:
                raise GraphError("edge list is empty")
            n = 1 + max(max(u, v) for u, v in edges)
            return _build_graph(n, edges)
    if isinstance(source, dict):
        try:
            n = int(source["vertices"])
            edges = [(int(u), int(v)) for u, v in source["edges"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise GraphError(f"malformed graph document: {exc}") from exc
        return _build_graph(n, edges)
    raise GraphError(f"unsupported graph source type {type(source).__name__}")


def builtin_graph(name: str) -> Graph:
    """Named test graphs: k4, c{n}, petersen, cube, k33."""
    name = name.lower()
    if name == "k4":
        return _build_graph(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
    if name.startswith("c") and name[1:].isdigit():
        n = int(name[1:])
        if n < 3:
            raise GraphError("cycle needs at least 3 vertices")
        return _build_graph(n, [(i, (i + 1) % n) for i in range(n)])
    if name == "petersen":
        outer = [(i, (i + 1) % 5) for i in range(5)]
        spokes = [(i, i + 5) for i in range(5)]
        inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
        return _build_graph(10, outer + spokes + inner)
    if name == "cube":
        edges = []
        for u in range(8):
            for bit in (1, 2, 4):
                v = u ^ bit
                if u < v:
                    edges.append((u, v))
        return _build_graph(8, edges)
    if name == "k33":
        return _build_graph(6, [(u, v) for u in range(3) for v in range(3, 6)])
    raise GraphError(f"unknown builtin graph {name!r}")


# ---------------------------------------------------------------------------
# counting recursions


def path_counts(g: Graph, x0: int, K: int) -> list[list[int]]:
    """a_k(x): walks of length k from x0 to x, for k = 0..K.  Exact integers."""
    cur = [0] * g.n_vertices
    cur[x0] = 1
    table = [cur]
    for _ in range(K):
        nxt = [0] * g.n_vertices
        for e in range(g.n_edges):
            nxt[g.terminus[e]] += cur[g.origin[e]]
        table.append(nxt)
        cur = nxt
    return table


def geodesic_counts(g: Graph, x0: int, K: int) -> list[list[int]]:
    """c_k(x): non-backtracking walks of length k from x0 to x, k = 0..K.

    Computed by the edge-transfer recursion: the state is a count per
    directed edge, and an edge e may be followed by any f with
    o(f) = t(e), f != bar(e).  Works on any graph, regular or not.
    """
    n = g.n_vertices
    c0 = [0] * n
    c0[x0] = 1
    table = [c0]
    if K == 0:
        return table
    w = [1 if g.origin[e] == x0 else 0 for e in range(g.n_edges)]
    table.append(_edge_counts_to_vertex(g, w))
    for _ in range(2, K + 1):
        nxt = [0] * g.n_edges
        for f in range(g.n_edges):
            u = g.origin[f]
            barf = g.bar(f)
            total = 0
            for e in g.out_edges[u]:
                # incoming edges at u are the bars of outgoing ones
                incoming = g.bar(e)
                if incoming != barf:
                    total += w[incoming]
            nxt[f] = total
        w = nxt
        table.append(_edge_counts_to_vertex(g, w))
    return table


def _edge_counts_to_vertex(g: Graph, w: list[int]) -> list[int]:
    out = [0] * g.n_vertices
    for e, count in enumerate(w):
        out[g.terminus[e]] += count
    return out


def geodesic_counts_recursion(g: Graph, x0: int, K: int) -> list[list[int]]:
    """c_k(x) by the three-term adjacency recursion (regular graphs only).

    c_1 = A delta_{x0}, c_2 = A c_1 - (q+1) c_0, and
    c_{k+1} = A c_k - q c_{k-1} for k >= 2.
    """
    q = g.regularity()
    n = g.n_vertices

    def apply_a(vec: list[int]) -> list[int]:
        out = [0] * n
        for e in range(g.n_edges):
            out[g.terminus[e]] += vec[g.origin[e]]
        return out

    c0 = [0] * n
    c0[x0] = 1
    table = [c0]
    if K >= 1:
        table.append(apply_a(c0))
    if K >= 2:
        table.append([a - (q + 1) * b for a, b in zip(apply_a(table[1]), c0)])
    for k in range(2, K):
        nxt = [a - q * b for a, b in zip(apply_a(table[k]), table[k - 1])]
        table.append(nxt)
    return table


def closed_geodesics_at_vertex(g: Graph, x0: int, K: int) -> list[int]:
    """N_k^0: closed geodesics of length k at x0, for vertex-transitive graphs.

    Derived from the geodesic-loop counts c_k^0 by the recursion
    N_k^0 - N_{k-2}^0 = c_k^0 - q c_{k-2}^0 with N_1^0 = c_1^0 and
    N_2^0 = c_2^0.  The caller is responsible for transitivity.
    """
    q = g.regularity()
    c_loops = [row[x0] for row in geodesic_counts(g, x0, K)]
    return _closed_from_loops(c_loops, q, base_zero=1)


def _closed_from_loops(c_loops: list[int], q: int, base_zero: int) -> list[int]:
    n_table = [base_zero]
    for k in range(1, len(c_loops)):
        if k <= 2:
            n_table.append(c_loops[k])
        else:
            n_table.append(n_table[k - 2] + c_loops[k] - q * c_loops[k - 2])
    return n_table


def closed_geodesics_total(g: Graph, K: int) -> list[int]:
    """N_k: closed geodesics of length k over all starting vertices.

    Uses c_k = sum over base vertices of c_k^0 and the same alternating-tail
    recursion; N_0 is set to the vertex count by the zero-path convention
    but never enters a zeta coefficient.
    """
    q = g.regularity()
    totals = [0] * (K + 1)
    for x0 in range(g.n_vertices):
        loops = geodesic_counts(g, x0, K)
        for k in range(K + 1):
            totals[k] += loops[k][x0]
    return _closed_from_loops(totals, q, base_zero=g.n_vertices)


def prime_geodesic_counts(n_table: list[int], K: int) -> list[int]:
    """pi_k from N via Moebius inversion of N_m = sum_{d|m} d pi_d.

    pi_m = (1/m) sum_{d|m} mu(m/d) N_d; raises if any value fails to be a
    nonnegative integer, which signals an inconsistent N table.
    """
    if len(n_table) <= K:
        raise ValueError(f"need N_k up to k={K}, got {len(n_table) - 1}")
    primes = [0] * (K + 1)
    for m in range(1, K + 1):
        total = Fraction(0)
        for d in range(1, m + 1):
            if m % d == 0:
                total += int(mobius(m // d)) * n_table[d]
        value = total / m
        if value.denominator != 1 or value < 0:
            raise ValueError(f"pi_{m} = {value} is not a nonnegative integer")
        primes[m] = int(value)
    return primes


# ---------------------------------------------------------------------------
# brute-force enumeration oracles

ENUMERATION_CAP = 12


def enumerate_geodesics(g: Graph, x0: int, k: int) -> list[tuple[int, ...]]:
    """All non-backtracking edge sequences of length k starting at x0.

    Exhaustive depth-first search in canonical (lexicographic edge-index)
    order; this is the oracle the counting recursions are tested against.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    if k > ENUMERATION_CAP:
        raise ValueError(f"enumeration capped at length {ENUMERATION_CAP}")
    results: list[tuple[int, ...]] = []
    if k == 0:
        return [()]
    stack: list[int] = []

    def descend(vertex: int, depth: int) -> None:
        if depth == k:
            results.append(tuple(stack))
            return
        forbidden = g.bar(stack[-1]) if stack else -1
        for e in g.out_edges[vertex]:
            if e == forbidden:
                continue
            stack.append(e)
            descend(g.terminus[e], depth + 1)
            stack.pop()

    descend(x0, 0)
    return results


def enumerate_closed_geodesics(g: Graph, x0: int, k: int) -> list[tuple[int, ...]]:
    """Closed geodesics at x0 of length k: closed, no backtracking, no tail.

    The tail condition excludes sequences with y_0 = bar(y_{k-1}).  Length
    zero yields the single empty sequence by convention.
    """
    if k == 0:
        return [()]
    walks = enumerate_geodesics(g, x0, k)
    return [
        w
        for w in walks
        if g.terminus[w[-1]] == x0 and w[0] != g.bar(w[-1])
    ]


# ---------------------------------------------------------------------------
# vertex transitivity

TRANSITIVITY_CAP = 64


def _distance_matrix(g: Graph) -> list[list[int]]:
    dist = []
    for s in range(g.n_vertices):
        row = [-1] * g.n_vertices
        row[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for e in g.out_edges[u]:
                v = g.terminus[e]
                if row[v] < 0:
                    row[v] = row[u] + 1
                    queue.append(v)
        dist.append(row)
    return dist


def check_vertex_transitive(
    g: Graph, cap: int = TRANSITIVITY_CAP
) -> tuple[bool | None, dict[int, list[int]]]:
    """Decide vertex transitivity by explicit automorphism search.

    Returns (verdict, witnesses) where witnesses maps each target vertex v
    to one automorphism (as an image list) sending vertex 0 to v.  The
    verdict is None when the graph exceeds the vertex cap, in which case
    the caller may assert transitivity manually.
    """
    n = g.n_vertices
    if n > cap:
        return None, {}
    degrees = [g.degree(v) for v in range(n)]
    if len(set(degrees)) != 1:
        return False, {}
    dist = _distance_matrix(g)
    # distance profile: sorted multiset of distances; automorphisms preserve it
    profiles = [tuple(sorted(row)) for row in dist]
    if len(set(profiles)) != 1:
        return False, {}
    adj = g.adjacency_counts()
    # BFS vertex order from 0 keeps each new vertex adjacent to a mapped one
    order: list[int] = []
    seen = [False] * n
    seen[0] = True
    queue = deque([0])
    while queue:
        u = queue.popleft()
        order.append(u)
        for e in g.out_edges[u]:
            v = g.terminus[e]
            if not seen[v]:
                seen[v] = True
                queue.append(v)

    def search(target: int) -> list[int] | None:
        image = [-1] * n
        used = [False] * n
        image[0] = target
        used[target] = True

        def extend(idx: int) -> bool:
            if idx == len(order):
                return True
            u = order[idx]
            for cand in range(n):
                if used[cand] or profiles[cand] != profiles[u]:
                    continue
                ok = True
                for w in order[:idx]:
                    if adj[u][w] != adj[cand][image[w]]:
                        ok = False
                        break
                if not ok:
                    continue
                image[u] = cand
                used[cand] = True
                if extend(idx + 1):
                    return True
                image[u] = -1
                used[cand] = False
            return False

        return image if extend(1) else None

    witnesses: dict[int, list[int]] = {}
    for v in range(n):
        found = search(v)
        if found is None:
            return False, {}
        witnesses[v] = found
    return True, witnesses


# ---------------------------------------------------------------------------
# convenience bundle


def count_table(g: Graph, x0: int, K: int, assume_transitive: bool = False) -> CountTable:
    """All counting tables for one base vertex in a single pass.

    N_k^0 is only meaningful for vertex-transitive graphs; it is reported
    unconditionally and it is the caller's business (or the transitivity
    check's) to decide whether to trust it.
    """
    a = path_counts(g, x0, K)
    c = geodesic_counts(g, x0, K)
    q = g.regularity()
    c0 = [row[x0] for row in c]
    n0 = _closed_from_loops(c0, q, base_zero=1)
    n_total = closed_geodesics_total(g, K)
    c_total = [0] * (K + 1)
    for base in range(g.n_vertices):
        loops = geodesic_counts(g, base, K)
        for k in range(K + 1):
            c_total[k] += loops[k][base]
    primes = prime_geodesic_counts(n_total, K)
    return CountTable(
        x0=x0,
        K=K,
        a=a,
        c=c,
        c0=c0,
        n0=n0,
        c_total=c_total,
        n_total=n_total,
        primes=primes,
    )
