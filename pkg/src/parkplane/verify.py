"""End-to-end checks: labels are G-parking, every G-parking function is a label,
and the k-Shi labeling is a bijection."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, List

from .core import Arrangement, ParkVec, TooLarge, label_to_str
from .factory import complete_multigraph, k_shi, multigraph_of
from .parking import enumerate_g_parking, enumerate_k_parking, is_g_parking_subsets
from .regions import check_size, enumerate_regions
from .walk import find_region

KSHI_MAX_N = 4
KSHI_MAX_K = 3


@dataclass
class SurjectivityReport:
    regions: int
    labels: Dict[ParkVec, int]
    g_parking: List[ParkVec]
    labels_are_gpf: bool
    surjective: bool
    walk_reaches_all: bool
    missing: List[ParkVec] = field(default_factory=list)
    walk_failures: List[ParkVec] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.labels_are_gpf and self.surjective and self.walk_reaches_all

    def summary(self) -> str:
        verdicts = [
            "LABELS_ARE_GPF" if self.labels_are_gpf else "LABELS_NOT_GPF",
            "SURJECTIVE" if self.surjective and self.walk_reaches_all else "NOT_SURJECTIVE",
        ]
        return (
            f"regions={self.regions} labels={len(self.labels)} "
            f"gpf={len(self.g_parking)} " + " ".join(verdicts)
        )

    def as_dict(self) -> dict:
        return {
            "regions": self.regions,
            "distinct_labels": len(self.labels),
            "g_parking": len(self.g_parking),
            "labels_are_gpf": self.labels_are_gpf,
            "surjective": self.surjective,
            "walk_reaches_all": self.walk_reaches_all,
            "multiplicity": {label_to_str(k): v for k, v in sorted(self.labels.items())},
            "missing": [label_to_str(f) for f in self.missing],
            "walk_failures": [label_to_str(f) for f in self.walk_failures],
        }


@dataclass
class BijectivityReport:
    n: int
    k: int
    regions: int
    parking: int
    parking_by_definition: int
    formula: int
    labels_distinct: bool

    @property
    def ok(self) -> bool:
        return (
            self.regions == self.parking == self.parking_by_definition == self.formula
            and self.labels_distinct
        )

    def summary(self) -> str:
        verdict = "BIJECTIVE" if self.ok else "NOT_BIJECTIVE"
        return f"regions={self.regions} parking={self.parking} formula={self.formula} {verdict}"

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "regions": self.regions,
            "parking": self.parking,
            "parking_by_definition": self.parking_by_definition,
            "formula": self.formula,
            "labels_distinct": self.labels_distinct,
            "bijective": self.ok,
        }


def verify_surjectivity(arr: Arrangement, allow_large: bool = False, walk: bool = True) -> SurjectivityReport:
    """Compare region labels with the G-parking functions of the arrangement's multigraph.

    Surjectivity is checked as a set inclusion and, independently, by walking
    to every G-parking function with :func:`find_region`.
    """
    check_size(arr, allow_large)
    G = multigraph_of(arr)
    regions = enumerate_regions(arr, allow_large)
    labels = Counter(r.label for r in regions)
    gpf = enumerate_g_parking(G)
    labels_ok = all(is_g_parking_subsets(G, f) for f in labels)
    missing = [f for f in gpf if f not in labels]
    failures = []
    if walk:
        for f in gpf:
            region, trace = find_region(arr, f)
            if region.label != f or len(trace) != sum(f):
                failures.append(f)
    return SurjectivityReport(
        regions=len(regions),
        labels=dict(labels),
        g_parking=gpf,
        labels_are_gpf=labels_ok,
        surjective=not missing,
        walk_reaches_all=not failures,
        missing=missing,
        walk_failures=failures,
    )


def verify_bijectivity_kshi(n: int, k: int, allow_large: bool = False) -> BijectivityReport:
    if not allow_large and (n > KSHI_MAX_N or k > KSHI_MAX_K):
        raise TooLarge(f"k-Shi check limited to n <= {KSHI_MAX_N}, k <= {KSHI_MAX_K}")
    arr = k_shi(n, k)
    regions = enumerate_regions(arr, allow_large)
    labels = [r.label for r in regions]
    return BijectivityReport(
        n=n,
        k=k,
        regions=len(regions),
        parking=len(enumerate_g_parking(complete_multigraph(n, k))),
        parking_by_definition=len(enumerate_k_parking(n, k)),
        formula=(k * n + 1) ** (n - 1),
        labels_distinct=len(set(labels)) == len(labels),
    )
