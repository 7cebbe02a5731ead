"""Nesting-similarity classes: keys, the brute-force census, and the
canonical representative set.

Two matchings are nesting-similar when they share an LR word and a nesting
count. Each class is keyed by that pair. The representatives are the
matchings reachable from a noncrossing matching by an initial segment of its
swap sequence; one per class.
"""

from dataclasses import dataclass
from functools import lru_cache

from .core import (
    LabeledMatching,
    LRSequence,
    Matching,
    lr_sequence,
    matching_from_lr,
    nep,
    stats,
)
from .bijections import NotRepresentativeError, swap_left, tau_inv
from .enumeration import all_matchings, noncrossing_matchings

__all__ = [
    "ClassKey",
    "class_key",
    "census",
    "ns_representatives",
    "ns_stream",
    "is_representative",
]


@lru_cache(maxsize=None)
def _max_nestings(word: str) -> int:
    # The noncrossing matching maximizes nestings for its LR word.
    return stats(matching_from_lr(word)).ne


@dataclass(frozen=True)
class ClassKey:
    """The invariant pair (LR word, nesting count) naming a similarity class."""

    lr: LRSequence
    ne: int

    def __post_init__(self):
        if self.ne < 0:
            raise ValueError(f"nesting count must be nonnegative, got {self.ne}")
        ceiling = _max_nestings(self.lr.word)
        if self.ne > ceiling:
            raise ValueError(
                f"no matching with word {self.lr} has {self.ne} nestings "
                f"(maximum is {ceiling})"
            )


def class_key(m: Matching) -> ClassKey:
    """The similarity-class key of ``m``."""
    return ClassKey(lr_sequence(m), stats(m).ne)


def census(n: int) -> tuple[int, dict[ClassKey, int]]:
    """Group every matching with n edges by class key.

    Returns the class count and a map from key to member count. Only counts
    are stored, so memory stays bounded by the number of classes rather than
    the double factorial.
    """
    counts: dict[ClassKey, int] = {}
    for m in all_matchings(n):
        key = class_key(m)
        counts[key] = counts.get(key, 0) + 1
    return len(counts), counts


def ns_stream(n: int):
    """Canonical representatives in deterministic generation order.

    Walks each noncrossing matching's swap sequence; every step is one
    representative, and no representative repeats across the stream.
    """
    for m in noncrossing_matchings(n):
        yield m
        lm = LabeledMatching.fresh(m)
        for pair in nep(m):
            lm = swap_left(lm, *pair)
            yield lm.to_matching()


def ns_representatives(n: int) -> set[Matching]:
    """The canonical representative set for all similarity classes."""
    return set(ns_stream(n))


def is_representative(m: Matching) -> bool:
    """True iff ``m`` is one of the canonical class representatives."""
    try:
        tau_inv(m)
    except NotRepresentativeError:
        return False
    return True
