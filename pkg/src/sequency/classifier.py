from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations

from .core import SequencyProfile, SignMatrix, profile, project_signs


@dataclass(frozen=True)
class Classification:
    complete: bool
    ordered: bool
    profile: SequencyProfile
    duplicate_sequencies: tuple[tuple[int, tuple[int, ...]], ...] = ()

    @property
    def n(self) -> int:
        return len(self.profile)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "complete": self.complete,
            "ordered": self.ordered,
            "profile": self.profile.to_list(),
            "duplicates": {str(s): list(cols) for s, cols in self.duplicate_sequencies},
        }


def classify(a: SignMatrix) -> Classification:
    """Decide sequency-completeness and -orderedness of ``a``.

    Repeated sequency values are listed with the columns that share them,
    sorted by value.
    """
    prof = profile(a)
    n = a.n
    by_value = defaultdict(list)
    for j, s in enumerate(prof):
        by_value[s].append(j)
    dups = tuple(
        (s, tuple(cols)) for s, cols in sorted(by_value.items()) if len(cols) > 1
    )
    complete = sorted(prof) == list(range(n))
    ordered = prof.to_list() == list(range(n))
    return Classification(complete, ordered, prof, dups)


def classify_real(m) -> Classification:
    return classify(project_signs(m))


def is_hadamard(a: SignMatrix) -> bool:
    """True when the columns are pairwise orthogonal (H Hᵀ = nI)."""
    n = a.n
    return all(
        n - 2 * (x ^ y).bit_count() == 0 for x, y in combinations(a.columns, 2)
    )
