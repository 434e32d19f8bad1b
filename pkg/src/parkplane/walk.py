"""Inverting the labeling: walk from the fundamental region to a region labeled ``f``.

At each step the coordinates split into ``I`` (label still below ``f``) and
``J`` (label already equal to ``f``).  The walk crosses one hyperplane
``(p, q, a)`` with ``p`` in ``I`` and ``q`` in ``J`` away from the origin,
which raises ``label[p]`` by one and leaves every other coordinate alone.
Moving along the direction that raises ``I`` coordinates and lowers ``J``
coordinates must eventually hit such a wall when ``f`` is G-parking, so the
walk never gets stuck.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet, Iterator, List, Sequence, Tuple

from .core import (
    MINUS,
    Arrangement,
    Hyperplane,
    ParkplaneError,
    ParkVec,
    Point,
    SignVector,
    label_to_str,
)
from .factory import multigraph_of
from .feasibility import check_signs, interior_witness
from .parking import violating_subset
from .regions import Region, flip, fundamental_signs, label_of


class NotGParking(ParkplaneError):
    def __init__(self, f, subset):
        self.f = tuple(f)
        self.subset = tuple(subset)
        super().__init__(
            f"{label_to_str(f)} is not a G-parking function; "
            f"I={{{','.join(map(str, subset))}}} has no vertex with enough edges leaving it"
        )


class InternalStuck(ParkplaneError):
    """No admissible wall while ``I`` is non-empty; this is a bug, not bad input."""


class EmptyI(ParkplaneError):
    pass


@dataclass(frozen=True)
class WalkState:
    current: SignVector
    label: ParkVec
    I: FrozenSet[int]
    J: FrozenSet[int]
    trace: Tuple[Hyperplane, ...]


def make_state(arr: Arrangement, f: Sequence[int], sv: SignVector, trace=()) -> WalkState:
    label = label_of(arr, sv)
    I = frozenset(i for i in range(1, arr.n + 1) if f[i - 1] > label[i - 1])
    J = frozenset(range(1, arr.n + 1)) - I
    return WalkState(sv, label, I, J, tuple(trace))


def ray_parameter(h: Hyperplane, r: Point, size_i: int, size_j: int) -> Fraction:
    """Ray time at which ``x_p - x_q`` reaches ``a`` when ``x_I`` rises by ``t/|I|`` and ``x_J`` falls by ``t/|J|``."""
    speed = Fraction(1, size_i) + Fraction(1, size_j)
    return (h.a - (r[h.p - 1] - r[h.q - 1])) / speed


def step_candidates(arr: Arrangement, st: WalkState, witness: Point = None) -> List[int]:
    """Uncrossed hyperplanes from ``I`` to ``J``, nearest along the ray first.

    ``witness`` is an interior point of the current region; one is computed
    when omitted.
    """
    if not st.I:
        raise EmptyI("walk is complete; no candidates to cross")
    hits = [
        pos
        for pos, h in enumerate(arr.hyperplanes)
        if st.current[pos] == MINUS and h.p in st.I and h.q in st.J
    ]
    if not hits:
        return []
    r = interior_witness(arr, st.current) if witness is None else witness

    # Every candidate shares the ray speed 1/|I| + 1/|J|, so the remaining
    # gap a - (r_p - r_q) orders them the same way as the crossing time.
    def key(pos):
        h = arr.hyperplanes[pos]
        return h.a - (r[h.p - 1] - r[h.q - 1]), h

    return sorted(hits, key=key)


def check_conditions(arr: Arrangement, f: Sequence[int], st: WalkState, previous: WalkState = None) -> None:
    """Assert the invariants that keep the walk alive; raise ``InternalStuck`` if any breaks."""
    problems = []
    if any(st.label[j - 1] != f[j - 1] for j in st.J):
        problems.append("label differs from f on J")
    if any(l > v for l, v in zip(st.label, f)):
        problems.append("label exceeds f")
    if st.I and not st.J:
        problems.append("J is empty")
    if previous is not None and not st.I <= previous.I:
        problems.append("I gained a vertex")
    if len(st.trace) != sum(st.label):
        problems.append("trace length differs from label sum")
    for h, s in zip(arr.hyperplanes, st.current):
        if s and h.p in st.I and h.q in st.I:
            problems.append(f"{h} has both ends in I but is already crossed")
            break
    if problems:
        raise InternalStuck("; ".join(problems))


def walk_states(arr: Arrangement, f: Sequence[int]) -> Iterator[WalkState]:
    """Yield every state of the walk toward ``f``, starting at the fundamental region."""
    f = tuple(f)
    bad = violating_subset(multigraph_of(arr), f)
    if bad is not None:
        raise NotGParking(f, bad)
    st = make_state(arr, f, fundamental_signs(arr))
    check_conditions(arr, f, st)
    yield st
    witness = None
    while st.I:
        for pos in step_candidates(arr, st, witness):
            nxt = flip(st.current, pos)
            verdict = check_signs(arr, nxt)
            if verdict.feasible:
                witness = verdict.witness
                break
        else:
            raise InternalStuck(
                f"no crossable wall from I={sorted(st.I)} to J={sorted(st.J)} "
                f"at label {label_to_str(st.label)}"
            )
        new = make_state(arr, f, nxt, st.trace + (arr.hyperplanes[pos],))
        check_conditions(arr, f, new, st)
        st = new
        yield st


def find_region(arr: Arrangement, f: Sequence[int]) -> Tuple[Region, Tuple[Hyperplane, ...]]:
    """A region labeled ``f`` and the hyperplanes crossed to reach it, in order."""
    for st in walk_states(arr, f):
        pass
    region = Region(st.current, st.label, interior_witness(arr, st.current))
    return region, st.trace
