"""Region enumeration by single-flip search from the fundamental region, and labels."""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from .core import (
    MINUS,
    Arrangement,
    Hyperplane,
    InfeasibleSigns,
    ParkVec,
    Point,
    SignVector,
    TooLarge,
)
from .feasibility import check_signs

DEFAULT_MAX_HYPERPLANES = 64
MAX_HYPERPLANES_ENV = "PARKPLANE_MAX_HYPERPLANES"


@dataclass(frozen=True)
class Region:
    signs: SignVector
    label: ParkVec
    witness: Point


def max_hyperplanes() -> int:
    raw = os.environ.get(MAX_HYPERPLANES_ENV)
    if raw is None:
        return DEFAULT_MAX_HYPERPLANES
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{MAX_HYPERPLANES_ENV} must be an integer, got {raw!r}") from None


def check_size(arr: Arrangement, allow_large: bool = False) -> None:
    limit = max_hyperplanes()
    if not allow_large and len(arr) > limit:
        raise TooLarge(
            f"{len(arr)} hyperplanes exceeds the limit of {limit}; "
            f"set {MAX_HYPERPLANES_ENV} or pass allow_large=True"
        )


def fundamental_signs(arr: Arrangement) -> SignVector:
    return (MINUS,) * len(arr)


def separating_set(arr: Arrangement, sv: Sequence[bool]) -> List[Hyperplane]:
    arr.check_signs_length(sv)
    return [h for h, s in zip(arr.hyperplanes, sv) if s]


def label_of(arr: Arrangement, sv: Sequence[bool]) -> ParkVec:
    """Pak-Stanley label: ``label[i]`` counts separating hyperplanes ``(i, q, a)``."""
    arr.check_signs_length(sv)
    out = [0] * arr.n
    for h, s in zip(arr.hyperplanes, sv):
        if s:
            out[h.p - 1] += 1
    return tuple(out)


def flip(sv: Sequence[bool], pos: int) -> SignVector:
    return tuple(not s if i == pos else s for i, s in enumerate(sv))


def neighbors(arr: Arrangement, sv: Sequence[bool]) -> List[Tuple[int, SignVector]]:
    """Feasible single-position flips of a feasible ``sv``, by ascending position."""
    if not check_signs(arr, sv).feasible:
        raise InfeasibleSigns("neighbors() needs a feasible sign vector")
    out = []
    for pos in range(len(arr)):
        other = flip(sv, pos)
        if check_signs(arr, other).feasible:
            out.append((pos, other))
    return out


def _sort_key(sv: SignVector):
    # MINUS before PLUS within a stratum, matching "-" < "+" reading left to right.
    return (sum(sv), tuple(int(s) for s in sv))


def enumerate_regions(arr: Arrangement, allow_large: bool = False) -> List[Region]:
    """Every region of ``arr`` exactly once, ordered by distance from the origin then signs."""
    check_size(arr, allow_large)
    start = fundamental_signs(arr)
    found = {start: check_signs(arr, start).witness}
    rejected = set()
    queue = deque([start])
    while queue:
        sv = queue.popleft()
        for pos in range(len(arr)):
            other = flip(sv, pos)
            if other in found or other in rejected:
                continue
            verdict = check_signs(arr, other)
            if verdict.feasible:
                found[other] = verdict.witness
                queue.append(other)
            else:
                rejected.add(other)
    return [
        Region(sv, label_of(arr, sv), found[sv])
        for sv in sorted(found, key=_sort_key)
    ]


def region_count(arr: Arrangement, allow_large: bool = False) -> int:
    return len(enumerate_regions(arr, allow_large))

