"""The bijections between L & P matchings, noncrossing matchings with a
chosen nested pair, and nesting-class representatives.

Three maps, all invertible:

* ``phi``   sends an L & P matching to its noncrossing projection together
  with the nested pair (max of the A side, max of the B side) remembering
  where the inflated hairpin was. Its inverse re-crosses the hairpin by
  cyclically reassigning right endpoints.
* ``tau``   sends a noncrossing matching with chosen nested pair (a, b) to
  the matching reached by swapping left endpoints along the nested-pair list
  up to and including (a, b). Each swap destroys exactly one nesting, so the
  image is the representative with the prescribed nesting count.
* ``sigma`` is the composite ``tau . phi``.

Left-endpoint swaps carry edge labels with the edges (a ``LabeledMatching``),
since after a swap the labels no longer sort by left endpoint.
"""

from dataclasses import dataclass
from typing import Optional

from .core import (
    Edge,
    LabeledMatching,
    Matching,
    crossings,
    edges,
    from_pairs,
    is_noncrossing,
    lperm,
    nc,
    nep,
    nestings,
)
from .lp import find_inflated_hairpin

__all__ = [
    "NotLPError",
    "NotRepresentativeError",
    "NCNTriple",
    "SwapStep",
    "SwapTrace",
    "swap_left",
    "swap_sequence",
    "phi",
    "phi_inv",
    "tau",
    "tau_inv",
    "sigma",
    "sigma_inv",
]


class NotLPError(ValueError):
    """Raised when a matching outside the L & P family is handed to phi."""


class NotRepresentativeError(ValueError):
    """Raised when tau_inv is given a matching that is not a class
    representative."""


@dataclass(frozen=True)
class NCNTriple:
    """A noncrossing matching with an optional chosen nested edge pair.

    ``pair`` is (a, b) with a < b nested in ``base``, or None for "no pair
    chosen" (serialized as the sentinel pair 0 0).
    """

    base: Matching
    pair: Optional[tuple[int, int]] = None

    def __post_init__(self):
        if not is_noncrossing(self.base):
            raise ValueError("base matching has crossings")
        if self.pair is not None:
            a, b = self.pair
            if not 1 <= a < b <= self.base.n:
                raise ValueError(
                    f"pair {self.pair} is not an increasing pair of edge labels"
                )
            es = edges(self.base)
            ea, eb = es[a - 1], es[b - 1]
            if not (ea.left < eb.left and eb.right < ea.right):
                raise ValueError(f"edges {a} and {b} are not nested in the base")


def swap_left(m: "Matching | LabeledMatching", a: int, b: int) -> LabeledMatching:
    """Exchange the left endpoints of the edges labeled a and b.

    Right endpoints stay put and labels stay attached to their edges. A plain
    ``Matching`` is labeled by left endpoint first. The swap is refused if it
    would leave an edge with its endpoints inverted.
    """
    lm = m if isinstance(m, LabeledMatching) else LabeledMatching.fresh(m)
    n = lm.n
    for label in (a, b):
        if not 1 <= label <= n:
            raise ValueError(f"label {label} out of range 1..{n}")
    if a == b:
        raise ValueError("cannot swap an edge with itself")
    ea, eb = lm.edges[a - 1], lm.edges[b - 1]
    new_ea = Edge(a, eb.left, ea.right)
    new_eb = Edge(b, ea.left, eb.right)
    for e in (new_ea, new_eb):
        if e.left >= e.right:
            raise ValueError(
                f"swapping left endpoints of {a} and {b} would invert edge {e.label}"
            )
    new_edges = list(lm.edges)
    new_edges[a - 1] = new_ea
    new_edges[b - 1] = new_eb
    return LabeledMatching(tuple(new_edges))


@dataclass(frozen=True)
class SwapStep:
    """One stage of a swap sequence: the pair just swapped (None at the
    start), the labeled matching reached, and its lperm and nesting count."""

    swapped: Optional[tuple[int, int]]
    matching: LabeledMatching
    lperm: tuple[int, ...]
    ne: int


@dataclass(frozen=True)
class SwapTrace:
    """The full swap sequence of a noncrossing matching, steps 0..k."""

    steps: tuple[SwapStep, ...]


def _apply_swaps(base: Matching, order: list[tuple[int, int]], count: int) -> LabeledMatching:
    lm = LabeledMatching.fresh(base)
    for a, b in order[:count]:
        lm = swap_left(lm, a, b)
    return lm


def swap_sequence(m: Matching) -> SwapTrace:
    """Swap left endpoints along the nested-pair list of ``m``, recording
    every intermediate matching with its lperm and nesting count."""
    if not is_noncrossing(m):
        raise ValueError("swap sequence is defined for noncrossing matchings only")
    order = nep(m)
    lm = LabeledMatching.fresh(m)
    steps = [SwapStep(None, lm, lperm(lm), len(order))]
    for pair in order:
        lm = swap_left(lm, *pair)
        steps.append(SwapStep(pair, lm, lperm(lm), nestings(lm)[0]))
    return SwapTrace(tuple(steps))


def phi(m: Matching) -> NCNTriple:
    """Map an L & P matching to its noncrossing projection plus the nested
    pair recording the hairpin maxima; noncrossing input maps to itself with
    no pair chosen."""
    decomposition = find_inflated_hairpin(m)
    if decomposition is None:
        a, b = crossings(m)[1][0]
        raise NotLPError(
            f"matching is not L & P: crossing pair ({a},{b}) does not belong "
            f"to a single inflated hairpin"
        )
    if not decomposition.a_side:
        return NCNTriple(m, None)
    return NCNTriple(nc(m), (decomposition.a_side[-1], decomposition.b_side[-1]))


def phi_inv(t: NCNTriple) -> Matching:
    """Rebuild the L & P matching whose hairpin maxima are the chosen pair.

    The hairpin sides are recovered as the edges nesting a (labels <= a) and
    the edges nesting b (labels in (a, b]); their right endpoints are then
    reassigned, in increasing position, to the side sequences read outermost
    last, which turns every A-B nesting into a crossing.
    """
    if t.pair is None:
        return t.base
    a, b = t.pair
    es = edges(t.base)

    def encloses(outer: Edge, inner: Edge) -> bool:
        return outer.left < inner.left and inner.right < outer.right

    a_side = [x for x in range(1, a) if encloses(es[x - 1], es[a - 1])] + [a]
    b_side = [x for x in range(a + 1, b) if encloses(es[x - 1], es[b - 1])] + [b]
    slots = sorted(es[x - 1].right for x in a_side + b_side)
    receive_order = list(reversed(a_side)) + list(reversed(b_side))
    new_right = dict(zip(receive_order, slots))
    pairs = [
        (e.left, new_right.get(e.label, e.right))
        for e in es
    ]
    return from_pairs(pairs, t.base.n)


def tau(t: NCNTriple) -> Matching:
    """Swap left endpoints along the nested-pair list of the base up to and
    including the chosen pair; no pair means no swaps."""
    if t.pair is None:
        return t.base
    order = nep(t.base)
    try:
        index = order.index(t.pair) + 1
    except ValueError:
        raise ValueError(
            f"pair {t.pair} is not a nested pair of the base matching"
        ) from None
    return _apply_swaps(t.base, order, index).to_matching()


def tau_inv(representative: Matching) -> NCNTriple:
    """Recover the noncrossing base and chosen pair from a representative.

    The base is the noncrossing projection; the swap count is the nesting
    deficit. The swaps are replayed to verify the claim, and a mismatch
    rejects the input as not a representative.
    """
    base = nc(representative)
    if representative == base:
        return NCNTriple(base, None)
    k = nestings(base)[0]
    deficit = k - nestings(representative)[0]
    if not 1 <= deficit <= k:
        raise NotRepresentativeError(
            f"nesting count {k - deficit} is impossible for this LR word "
            f"(noncrossing maximum is {k})"
        )
    order = nep(base)
    replayed = _apply_swaps(base, order, deficit).to_matching()
    if replayed != representative:
        raise NotRepresentativeError(
            f"not a class representative: replaying {deficit} swaps from the "
            f"noncrossing projection gives {replayed}, not {representative}"
        )
    return NCNTriple(base, order[deficit - 1])


def sigma(m: Matching) -> Matching:
    """The composite bijection: L & P matching to class representative."""
    return tau(phi(m))


def sigma_inv(representative: Matching) -> Matching:
    """Inverse of the composite bijection."""
    return phi_inv(tau_inv(representative))
