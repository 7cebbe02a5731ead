"""Complete matchings on 2n points: representation, statistics, projections.

A complete matching pairs the positions 0..2n-1 into n arcs ("edges") drawn
above a horizontal baseline. Edges are labeled 1..n in increasing order of
left endpoint. Any two edges either nest (one arc inside the other), cross
(the arcs interleave), or are aligned (disjoint intervals).

Everything here is an immutable value and every operation is a pure
function, so all of it can be used from concurrent workers without
coordination.
"""

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Union

__all__ = [
    "InvalidMatchingError",
    "Matching",
    "Edge",
    "LRSequence",
    "MatchingStats",
    "LabeledMatching",
    "from_pairs",
    "edges",
    "lr_sequence",
    "matching_from_lr",
    "stats",
    "nestings",
    "crossings",
    "alignments",
    "nc",
    "is_noncrossing",
    "rperm",
    "lperm",
    "nep",
]


class InvalidMatchingError(ValueError):
    """Raised when a pairing does not describe a complete matching."""


@dataclass(frozen=True)
class Matching:
    """A complete matching on 2n points, stored as a partner table.

    ``partner[v]`` is the position matched with position ``v``; the table is
    a fixed-point-free involution of {0, ..., 2n-1}.
    """

    n: int
    partner: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise InvalidMatchingError(f"edge count must be positive, got {self.n}")
        size = 2 * self.n
        if len(self.partner) != size:
            raise InvalidMatchingError(
                f"partner table has {len(self.partner)} entries, expected {size}"
            )
        p = self.partner
        for v, w in enumerate(p):
            if not 0 <= w < size:
                raise InvalidMatchingError(
                    f"position {w} out of range 0..{size - 1}"
                )
            if w == v:
                raise InvalidMatchingError(f"position {v} is matched to itself")
            if p[w] != v:
                raise InvalidMatchingError(
                    f"partner table is not an involution at position {v}"
                )

    def pairs(self) -> list[tuple[int, int]]:
        """Endpoint pairs (left, right), listed in increasing left order."""
        return [(v, self.partner[v]) for v in range(2 * self.n) if v < self.partner[v]]

    def __repr__(self):
        body = ",".join(f"({l},{r})" for l, r in self.pairs())
        return f"Matching[{body}]"


class Edge(NamedTuple):
    """One arc: its label and the positions of its two endpoints."""

    label: int
    left: int
    right: int


@dataclass(frozen=True)
class LRSequence:
    """The left/right endpoint word of a matching, over the alphabet L, R.

    Valid words satisfy the Dyck condition: every prefix has at least as many
    L as R, and the totals agree. Construction validates eagerly.
    """

    word: str

    def __post_init__(self):
        depth = 0
        for i, c in enumerate(self.word):
            if c == "L":
                depth += 1
            elif c == "R":
                depth -= 1
                if depth < 0:
                    raise ValueError(f"unmatched R at index {i} of {self.word!r}")
            else:
                raise ValueError(f"invalid symbol {c!r} at index {i}; expected L or R")
        if depth != 0:
            raise ValueError(f"{depth} unmatched L symbols in {self.word!r}")

    def __str__(self):
        return self.word

    def __len__(self):
        return len(self.word)


class MatchingStats(NamedTuple):
    """Nesting and crossing pair counts of a matching."""

    ne: int
    cr: int


@dataclass(frozen=True)
class LabeledMatching:
    """A matching whose edges carry fixed labels, decoupled from left order.

    ``edges[k]`` is the edge labeled ``k + 1``. Swapping left endpoints
    reorders positions but keeps each label attached to its edge, which is
    what makes ``lperm`` informative.
    """

    edges: tuple[Edge, ...]

    def __post_init__(self):
        n = len(self.edges)
        if n < 1:
            raise InvalidMatchingError("labeled matching needs at least one edge")
        seen_positions = set()
        for k, e in enumerate(self.edges):
            if e.label != k + 1:
                raise InvalidMatchingError(
                    f"edge at index {k} carries label {e.label}, expected {k + 1}"
                )
            if not e.left < e.right:
                raise InvalidMatchingError(
                    f"edge {e.label} has left endpoint {e.left} >= right {e.right}"
                )
            seen_positions.update((e.left, e.right))
        if seen_positions != set(range(2 * n)):
            raise InvalidMatchingError(
                "edge endpoints do not cover the positions 0..%d exactly" % (2 * n - 1)
            )

    @classmethod
    def fresh(cls, m: "Matching") -> "LabeledMatching":
        """Label the edges of ``m`` by increasing left endpoint (1..n)."""
        return cls(tuple(edges(m)))

    @property
    def n(self) -> int:
        return len(self.edges)

    def to_matching(self) -> "Matching":
        """Forget the labels."""
        partner = [0] * (2 * self.n)
        for e in self.edges:
            partner[e.left] = e.right
            partner[e.right] = e.left
        return Matching(self.n, tuple(partner))


AnyMatching = Union[Matching, LabeledMatching]


def from_pairs(pairs: Iterable[tuple[int, int]], n: int) -> Matching:
    """Build a matching from n endpoint pairs covering {0, ..., 2n-1}.

    Rejects duplicate positions, out-of-range positions, and a wrong number
    of pairs, naming the offending value in each case.
    """
    pair_list = list(pairs)
    if len(pair_list) != n:
        raise InvalidMatchingError(f"expected {n} pairs, got {len(pair_list)}")
    partner = [-1] * (2 * n)
    seen: set[int] = set()
    for a, b in pair_list:
        for v in (a, b):
            if not 0 <= v < 2 * n:
                raise InvalidMatchingError(
                    f"position {v} out of range 0..{2 * n - 1}"
                )
            if v in seen:
                raise InvalidMatchingError(f"duplicate position {v}")
            seen.add(v)
        partner[a] = b
        partner[b] = a
    return Matching(n, tuple(partner))


def edges(m: Matching) -> list[Edge]:
    """The edges of ``m`` labeled 1..n in increasing left-endpoint order."""
    return [Edge(k + 1, l, r) for k, (l, r) in enumerate(m.pairs())]


def _edge_list(m: AnyMatching) -> list[Edge]:
    if isinstance(m, LabeledMatching):
        return list(m.edges)
    return edges(m)


def lr_sequence(m: AnyMatching) -> LRSequence:
    """The word recording, left to right, whether each position opens (L) or
    closes (R) an edge."""
    if isinstance(m, LabeledMatching):
        m = m.to_matching()
    return LRSequence(
        "".join("L" if v < m.partner[v] else "R" for v in range(2 * m.n))
    )


def _pair_by_stack(is_left: list[bool]) -> tuple[int, ...]:
    # Match each closer to the most recently opened position.
    partner = [0] * len(is_left)
    stack: list[int] = []
    for v, opening in enumerate(is_left):
        if opening:
            stack.append(v)
        else:
            l = stack.pop()
            partner[l] = v
            partner[v] = l
    return tuple(partner)


def matching_from_lr(word: "LRSequence | str") -> Matching:
    """The unique noncrossing matching with the given LR word."""
    seq = word if isinstance(word, LRSequence) else LRSequence(word)
    partner = _pair_by_stack([c == "L" for c in seq.word])
    return Matching(len(seq) // 2, partner)


def nc(m: AnyMatching) -> Matching:
    """The unique noncrossing matching with the same LR word as ``m``.

    Computed by matching each right endpoint to the most recent unmatched
    left endpoint (stack discipline).
    """
    if isinstance(m, LabeledMatching):
        m = m.to_matching()
    partner = _pair_by_stack([v < m.partner[v] for v in range(2 * m.n)])
    return Matching(m.n, partner)


def is_noncrossing(m: AnyMatching) -> bool:
    """True iff ``m`` contains no crossing pair of edges."""
    if isinstance(m, LabeledMatching):
        m = m.to_matching()
    stack: list[int] = []
    for v, w in enumerate(m.partner):
        if v < w:
            stack.append(v)
        else:
            if stack[-1] != w:
                return False
            stack.pop()
    return True


def stats(m: AnyMatching) -> MatchingStats:
    """Nesting and crossing counts in a single quadratic scan."""
    es = sorted(_edge_list(m), key=lambda e: e.left)
    ne = cr = 0
    k = len(es)
    for i in range(k):
        ri = es[i].right
        for j in range(i + 1, k):
            lj, rj = es[j].left, es[j].right
            if lj > ri:
                continue
            if rj < ri:
                ne += 1
            else:
                cr += 1
    return MatchingStats(ne, cr)


def _classified_pairs(m: AnyMatching, kind: str) -> list[tuple[int, int]]:
    es = sorted(_edge_list(m), key=lambda e: e.left)
    out = []
    k = len(es)
    for i in range(k):
        ri, label_i = es[i].right, es[i].label
        for j in range(i + 1, k):
            e = es[j]
            if e.left > ri:
                got = "alignment"
            elif e.right < ri:
                got = "nested"
            else:
                got = "crossing"
            if got == kind:
                a, b = label_i, e.label
                out.append((a, b) if a < b else (b, a))
    return out


def nestings(m: AnyMatching) -> tuple[int, list[tuple[int, int]]]:
    """All nested label pairs (reported as (min, max)) and their count."""
    pairs = _classified_pairs(m, "nested")
    return len(pairs), pairs


def crossings(m: AnyMatching) -> tuple[int, list[tuple[int, int]]]:
    """All crossing label pairs (reported as (min, max)) and their count."""
    pairs = _classified_pairs(m, "crossing")
    return len(pairs), pairs


def alignments(m: AnyMatching) -> tuple[int, list[tuple[int, int]]]:
    """All aligned (disjoint) label pairs and their count."""
    pairs = _classified_pairs(m, "alignment")
    return len(pairs), pairs


def rperm(m: AnyMatching) -> tuple[int, ...]:
    """Edge labels in the order their right endpoints appear."""
    return tuple(e.label for e in sorted(_edge_list(m), key=lambda e: e.right))


def lperm(m: AnyMatching) -> tuple[int, ...]:
    """Edge labels in the order their left endpoints appear.

    For a plain ``Matching`` this is the identity, since labels are assigned
    by left endpoint; it becomes informative on a ``LabeledMatching`` whose
    left endpoints have been swapped around.
    """
    return tuple(e.label for e in sorted(_edge_list(m), key=lambda e: e.left))


def nep(m: AnyMatching) -> list[tuple[int, int]]:
    """Nested label pairs sorted by second coordinate, then first."""
    return sorted(nestings(m)[1], key=lambda p: (p[1], p[0]))
