"""G-parking functions of oriented multigraphs and the k-parking special case."""

from __future__ import annotations

from itertools import combinations, product
from typing import Iterable, List, Optional, Sequence, Tuple

from .core import LengthMismatch, Multigraph, ParkVec


def out_multiplicity(G: Multigraph, i: int, S: Iterable[int]) -> int:
    """Number of edges ``i -> j`` with ``j`` in ``S``, counted with multiplicity."""
    row = G.mult[i - 1]
    return sum(row[j - 1] for j in S)


def _check_length(G: Multigraph, f: Sequence[int]) -> None:
    if len(f) != G.n:
        raise LengthMismatch(f"function has {len(f)} values, graph has {G.n} vertices")


def _subsets_lex(n: int):
    """Non-empty subsets of 1..n as sorted tuples, in lexicographic order."""
    return sorted(
        (c for r in range(1, n + 1) for c in combinations(range(1, n + 1), r))
    )


def violating_subset(G: Multigraph, f: Sequence[int]) -> Optional[Tuple[int, ...]]:
    """Lexicographically smallest non-empty ``I`` with no witness vertex, or ``None``.

    A witness is some ``i`` in ``I`` whose edges leaving ``I`` number at least ``f(i)``.
    """
    _check_length(G, f)
    everything = set(range(1, G.n + 1))
    for I in _subsets_lex(G.n):
        outside = everything.difference(I)
        if not any(out_multiplicity(G, i, outside) >= f[i - 1] for i in I):
            return I
    return None


def is_g_parking_subsets(G: Multigraph, f: Sequence[int]) -> bool:
    return violating_subset(G, f) is None


def burning_order(G: Multigraph, f: Sequence[int]) -> Tuple[List[int], Tuple[int, ...]]:
    """Run the burning test; return the removal order and the unburnt remainder.

    Starting from all vertices, repeatedly remove the smallest ``i`` whose edges
    into the already-removed set number at least ``f(i)``.  Removing vertices
    only grows that set, so the greedy order never blocks a valid removal.
    """
    _check_length(G, f)
    remaining = list(range(1, G.n + 1))
    removed: List[int] = []
    while remaining:
        for i in remaining:
            if out_multiplicity(G, i, removed) >= f[i - 1]:
                remaining.remove(i)
                removed.append(i)
                break
        else:
            break
    return removed, tuple(remaining)


def is_g_parking_burning(G: Multigraph, f: Sequence[int]) -> bool:
    return not burning_order(G, f)[1]


def parking_box(G: Multigraph) -> List[range]:
    """Per-vertex ranges ``0..outdeg(i)``; the singleton ``I = {i}`` forces ``f(i) <= outdeg(i)``."""
    return [range(G.out_degree(i) + 1) for i in range(1, G.n + 1)]


def enumerate_g_parking(G: Multigraph) -> List[ParkVec]:
    """All G-parking functions of ``G`` in lexicographic order."""
    # Precompute, for each subset I and each i in I, the out-multiplicity to
    # the complement, so the inner test is a table lookup.
    n = G.n
    everything = set(range(1, n + 1))
    table = []
    for I in _subsets_lex(n):
        outside = everything.difference(I)
        table.append(tuple((i - 1, out_multiplicity(G, i, outside)) for i in I))
    out = []
    for f in product(*parking_box(G)):
        if all(any(f[i] <= d for i, d in row) for row in table):
            out.append(tuple(f))
    return out


def is_k_parking(n: int, k: int, f: Sequence[int]) -> bool:
    """For every non-empty ``I`` some ``i`` in ``I`` has ``f(i) <= k(n - |I|)``."""
    if len(f) != n:
        raise LengthMismatch(f"function has {len(f)} values, expected {n}")
    for r in range(1, n + 1):
        bound = k * (n - r)
        for I in combinations(range(n), r):
            if not any(f[i] <= bound for i in I):
                return False
    return True


def is_k_parking_diagram(n: int, k: int, f: Sequence[int]) -> bool:
    """Young-diagram form: rows ``sorted(f, reverse=True)`` fit under the diagonal of an n x kn box.

    Row ``r`` (0-based from the top) sits ``r`` steps below the top edge, and the
    diagonal from ``(0, kn)`` to ``(n, 0)`` leaves room for ``k(n - 1 - r)``
    boxes in it.
    """
    if len(f) != n:
        raise LengthMismatch(f"function has {len(f)} values, expected {n}")
    rows = sorted(f, reverse=True)
    return all(length <= k * (n - 1 - r) for r, length in enumerate(rows))


def enumerate_k_parking(n: int, k: int) -> List[ParkVec]:
    """All k-parking functions of length ``n`` via :func:`is_k_parking`, lexicographic."""
    top = k * (n - 1)
    return [f for f in product(range(top + 1), repeat=n) if is_k_parking(n, k, f)]
