"""Feasibility of sign vectors as systems of strict difference constraints.

Hyperplane ``h = (p, q, a)`` with sign MINUS reads ``x_p - x_q < a``; with
sign PLUS it reads ``x_q - x_p < -a``.  A constraint ``x_u - x_v < c`` is the
edge ``v -> u`` of weight ``(c, -1)`` in the constraint digraph.  Weights
compare lexicographically, so the second component counts strict edges and
no numeric epsilon is needed to decide feasibility.  The system is feasible
iff the digraph has no cycle of lexicographically negative weight.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import List, Optional, Sequence, Tuple

from .core import (
    Arrangement,
    Hyperplane,
    InfeasibleSigns,
    Point,
    TooLarge,
)

ORACLE_MAX_HYPERPLANES = 12


@dataclass(frozen=True, order=True)
class LexWeight:
    """A path weight ``(cost, strictness)`` with ``strictness <= 0``."""

    cost: Fraction
    strictness: int = 0

    def __add__(self, other: "LexWeight") -> "LexWeight":
        return LexWeight(self.cost + other.cost, self.strictness + other.strictness)

    def is_negative(self) -> bool:
        return self < LexWeight(Fraction(0), 0)


@dataclass(frozen=True)
class Verdict:
    """Outcome of :func:`check_signs`.

    ``witness`` is set when feasible.  Otherwise ``cycle`` lists hyperplane
    positions along a contradictory oriented cycle: following each queried
    constraint from its smaller side to its larger side closes up, and the
    constants sum to ``<= 0``.
    """

    feasible: bool
    witness: Optional[Point] = None
    cycle: Tuple[int, ...] = ()
    cycle_hyperplanes: Tuple[Hyperplane, ...] = ()

    def __bool__(self):
        return self.feasible


def constraint(h: Hyperplane, plus: bool) -> Tuple[int, int, Fraction]:
    """Return ``(u, v, c)`` meaning ``x_u - x_v < c`` for a signed hyperplane."""
    if plus:
        return h.q, h.p, -h.a
    return h.p, h.q, h.a


def _scaled(arr: Arrangement):
    """Common denominator and the integer constants ``(p-1, q-1, a*scale)``."""
    cached = arr.__dict__.get("_scaled_cache")
    if cached is None:
        scale = 1
        for h in arr.hyperplanes:
            scale = lcm(scale, h.a.denominator)
        cached = (scale, tuple((h.p - 1, h.q - 1, int(h.a * scale)) for h in arr.hyperplanes))
        arr.__dict__["_scaled_cache"] = cached
    return cached


def _edges(arr: Arrangement, sv: Sequence[bool]):
    # The lexicographic weight (c, -1) of each strict edge is packed into the
    # single integer c*m - 1 with m > n.  Simple paths and cycles have fewer
    # than m edges, so integer comparison of their totals is exactly the
    # lexicographic comparison of (cost, strictness).
    scale, consts = _scaled(arr)
    m = arr.n + 1
    edges = []
    for idx, ((p, q, a), plus) in enumerate(zip(consts, sv)):
        if plus:
            edges.append((p, q, -a * m - 1, idx))  # x_q - x_p < -a
        else:
            edges.append((q, p, a * m - 1, idx))  # x_p - x_q < a
    return scale, m, edges


def _unpack(d: int, m: int) -> Tuple[int, int]:
    """Split a packed weight into ``(cost, strictness)`` with ``-m < strictness <= 0``."""
    cost = -((-d) // m)
    return cost, d - cost * m


def _relax(n: int, edges):
    """Bellman-Ford from a virtual source joined to every vertex by weight 0.

    Returns ``(dist, cycle)``; ``cycle`` is ``None`` when the system is
    feasible, else a tuple of edge indices along a negative cycle.
    """
    dist = [0] * n
    pred: List[Optional[Tuple[int, int]]] = [None] * n
    rounds = 0
    while True:
        rounds += 1
        changed = False
        for src, dst, w, idx in edges:
            cand = dist[src] + w
            if cand < dist[dst]:
                dist[dst] = cand
                pred[dst] = (src, idx)
                changed = True
        if not changed:
            return dist, None
        if rounds >= n:
            # Any cycle of the predecessor graph has negative weight, and one
            # appears after finitely many further rounds.
            cycle = _pred_cycle(n, pred)
            if cycle is not None:
                return dist, cycle


def _pred_cycle(n: int, pred) -> Optional[Tuple[int, ...]]:
    state = [0] * n  # 0 unseen, 1 on current chain, 2 done
    for start in range(n):
        chain = []
        v = start
        while v is not None and state[v] == 0:
            state[v] = 1
            chain.append(v)
            v = pred[v][0] if pred[v] is not None else None
        if v is not None and state[v] == 1:
            cycle = []
            u = v
            while True:
                src, idx = pred[u]
                cycle.append(idx)
                u = src
                if u == v:
                    break
            cycle.reverse()
            k = cycle.index(min(cycle))
            return tuple(cycle[k:] + cycle[:k])
        for u in chain:
            state[u] = 2
    return None


def _witness(scale: int, m: int, dist, edges) -> Point:
    # Potentials (c, s) satisfy each constraint as c + s*eps for all small
    # eps > 0; take half the smallest threshold gap/slope where one would break.
    pot = [_unpack(d, m) for d in dist]
    best = None  # (gap, slope) of the smallest threshold so far
    for src, dst, w, _ in edges:
        c = (w + 1) // m
        gap = pot[src][0] + c - pot[dst][0]
        slope = pot[dst][1] - pot[src][1]
        if gap > 0 and slope > 0 and (best is None or gap * best[1] < best[0] * slope):
            best = (gap, slope)
    eps_num, eps_den = (1, 1) if best is None else (best[0], 2 * best[1])
    nums = [c * eps_den + s * eps_num for c, s in pot]
    den = eps_den * scale
    return tuple(Fraction(x - nums[-1], den) for x in nums)


def check_signs(arr: Arrangement, sv: Sequence[bool]) -> Verdict:
    """Decide whether ``sv`` cuts out a nonempty open region of ``arr``."""
    arr.check_signs_length(sv)
    scale, m, edges = _edges(arr, sv)
    dist, cycle = _relax(arr.n, edges)
    if cycle is None:
        return Verdict(True, witness=_witness(scale, m, dist, edges))
    return Verdict(
        False,
        cycle=cycle,
        cycle_hyperplanes=tuple(arr.hyperplanes[i] for i in cycle),
    )


def cycle_weight(arr: Arrangement, sv: Sequence[bool], cycle: Sequence[int]) -> LexWeight:
    """Total lexicographic weight of the constraints at ``cycle`` positions."""
    total = LexWeight(Fraction(0), 0)
    for idx in cycle:
        _, _, c = constraint(arr.hyperplanes[idx], sv[idx])
        total = total + LexWeight(c, -1)
    return total


def interior_witness(arr: Arrangement, sv: Sequence[bool]) -> Point:
    verdict = check_signs(arr, sv)
    if not verdict.feasible:
        raise InfeasibleSigns(
            "sign vector is infeasible; contradictory cycle through "
            + ", ".join(str(h) for h in verdict.cycle_hyperplanes)
        )
    return verdict.witness


def satisfies(arr: Arrangement, sv: Sequence[bool], point: Sequence[Fraction]) -> bool:
    """True iff ``point`` lies strictly on the ``sv`` side of every hyperplane."""
    arr.check_signs_length(sv)
    for h, s in zip(arr.hyperplanes, sv):
        val = h.value(point)
        if (val <= 0) if s else (val >= 0):
            return False
    return True


def fm_feasible_oracle(arr: Arrangement, sv: Sequence[bool]) -> bool:
    """Fourier-Motzkin elimination on the same strict system, as a test oracle.

    Works on general linear rows ``sum(coef * x) < bound`` and knows nothing
    about shortest paths.  Exponential; limited to small arrangements.
    """
    arr.check_signs_length(sv)
    if len(arr) > ORACLE_MAX_HYPERPLANES:
        raise TooLarge(f"oracle handles at most {ORACLE_MAX_HYPERPLANES} hyperplanes")
    nvars = arr.n - 1  # x_n is pinned to 0
    rows = set()
    for h, s in zip(arr.hyperplanes, sv):
        u, v, c = constraint(h, s)
        coef = [Fraction(0)] * arr.n
        coef[u - 1] += 1
        coef[v - 1] -= 1
        rows.add((tuple(coef[:nvars]), c))

    for k in range(nvars):
        pos, neg, rest = [], [], set()
        for coef, b in rows:
            if coef[k] > 0:
                pos.append((coef, b))
            elif coef[k] < 0:
                neg.append((coef, b))
            else:
                rest.add((coef, b))
        for cp, bp in pos:
            for cn, bn in neg:
                wp, wn = -cn[k], cp[k]
                coef = tuple(wp * x + wn * y for x, y in zip(cp, cn))
                b = wp * bp + wn * bn
                rest.add(_normalize_row(coef, b))
        rows = rest
    # Only rows "0 < b" remain.
    return all(b > 0 for _, b in rows)


def _normalize_row(coef, b):
    m = max((abs(x) for x in coef if x), default=None)
    if m is None:
        return coef, b
    return tuple(x / m for x in coef), b / m
