"""Constructors for the named arrangements and the arrangement -> multigraph map.

The k-Shi and G-Shi arrangements are built already translated by the point
``((i-1)/n)_i``, which sits inside the fundamental region
``{0 < x_i - x_j < 1 for i > j}``.  After the shift every hyperplane misses
the origin, so each one gets a positive constant and the labeling rule is
simply "count separating hyperplanes by their first index".
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple

from .core import Arrangement, Hyperplane, Multigraph, ParkplaneError


class BadParams(ParkplaneError):
    pass


class BadEdge(ParkplaneError):
    pass


def _shifted(n: int, i: int, j: int, level: int) -> Hyperplane:
    """Shifted copy of ``x_i - x_j = level`` for ``i > j``."""
    d = Fraction(i - j, n)
    if level >= 1:
        return Hyperplane(i, j, level - d)
    return Hyperplane(j, i, d - level)


def k_shi(n: int, k: int) -> Arrangement:
    """The k-Shi arrangement ``x_i - x_j = l`` for ``i > j``, ``-k < l <= k``, shifted."""
    if n < 2 or k < 1:
        raise BadParams(f"k-Shi needs n >= 2 and k >= 1, got n={n}, k={k}")
    hs = []
    for i in range(2, n + 1):
        for j in range(1, i):
            for level in range(k, -k, -1):
                hs.append(_shifted(n, i, j, level))
    return Arrangement(n, tuple(hs))


def _edge_pairs(n: int, edges: Iterable) -> List[Tuple[int, int]]:
    pairs = []
    seen = set()
    for e in edges:
        try:
            u, v = e
        except (TypeError, ValueError):
            raise BadEdge(f"edge must be a pair of vertices, got {e!r}") from None
        if u == v:
            raise BadEdge(f"edge {u}-{v} is a loop")
        if not (1 <= u <= n and 1 <= v <= n):
            raise BadEdge(f"edge {u}-{v} outside 1..{n}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise BadEdge(f"edge {key[0]}-{key[1]} listed twice")
        seen.add(key)
        pairs.append(key)
    return pairs


def g_shi(n: int, edges: Iterable) -> Arrangement:
    """Sub-arrangement of ``k_shi(n, 1)`` keeping only pairs that are edges of ``G``."""
    if n < 2:
        raise BadParams(f"G-Shi needs n >= 2, got n={n}")
    pairs = set(_edge_pairs(n, edges))
    full = k_shi(n, 1)
    return Arrangement(
        n, tuple(h for h in full if (min(h.p, h.q), max(h.p, h.q)) in pairs)
    )


def from_multigraph(G: Multigraph) -> Arrangement:
    """Default geometry for ``G``: ``m_ij`` parallel copies ``x_i - x_j = 1/2, 3/2, ...``."""
    hs = []
    for i, j, m in G.edges():
        for c in range(1, m + 1):
            hs.append(Hyperplane(i, j, Fraction(2 * c - 1, 2)))
    return Arrangement(G.n, tuple(hs))


def multigraph_of(arr: Arrangement) -> Multigraph:
    return Multigraph.from_edges(arr.n, ((h.p, h.q, 1) for h in arr))


def complete_multigraph(n: int, k: int) -> Multigraph:
    return Multigraph.complete(n, k)


def parse_edge_list(text: str) -> List[Tuple[int, int]]:
    """Parse ``"1-2,2-3"`` into vertex pairs."""
    out = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        try:
            u, v = (int(x) for x in chunk.split("-"))
        except ValueError:
            raise BadEdge(f"cannot read edge {chunk!r}; expected 'u-v'") from None
        out.append((u, v))
    return out
