"""Executable invariant suites, exposed through the "verify" CLI command.

Each check exhaustively tests one property at a given size and reports
(name, passed, detail). The suites parallel the library layers: core
statistics, the L & P family, the bijections, and the similarity census.
"""

from typing import Callable

from .core import (
    Matching,
    alignments,
    crossings,
    edges,
    from_pairs,
    is_noncrossing,
    lr_sequence,
    matching_from_lr,
    nc,
    nep,
    nestings,
    rperm,
    stats,
)
from .lp import find_inflated_hairpin, is_lp, lp_count_formula
from .bijections import NCNTriple, phi, phi_inv, sigma, sigma_inv, swap_sequence, tau, tau_inv
from .similarity import census, class_key, ns_representatives
from .enumeration import all_matchings, catalan, double_factorial, ncn_elements, noncrossing_matchings

__all__ = ["SUITES", "run_suite", "mirror"]

CheckResult = tuple[str, bool, str]


def mirror(m: Matching) -> Matching:
    """Reflect a matching left to right."""
    size = 2 * m.n
    pairs = [(size - 1 - r, size - 1 - l) for l, r in m.pairs()]
    return from_pairs(pairs, m.n)


def _ok(count: int, what: str) -> tuple[bool, str]:
    return True, f"checked {count} {what}"


def _check_pair_partition(n: int) -> tuple[bool, str]:
    total = n * (n - 1) // 2
    count = 0
    for m in all_matchings(n):
        st = stats(m)
        al = alignments(m)[0]
        if st.ne + st.cr + al != total:
            return False, f"partition fails on {m}"
        count += 1
    return _ok(count, "matchings")


def _check_lr_projection(n: int) -> tuple[bool, str]:
    count = 0
    for m in all_matchings(n):
        if lr_sequence(nc(m)) != lr_sequence(m):
            return False, f"projection changes LR word on {m}"
        count += 1
    return _ok(count, "matchings")


def _check_projection_idempotent(n: int) -> tuple[bool, str]:
    count = 0
    for m in all_matchings(n):
        p = nc(m)
        if nc(p) != p:
            return False, f"projection not idempotent on {m}"
        if (p == m) != is_noncrossing(m):
            return False, f"fixed-point mismatch on {m}"
        count += 1
    return _ok(count, "matchings")


def _check_rperm_nesting(n: int) -> tuple[bool, str]:
    count = 0
    for m in noncrossing_matchings(n):
        order = rperm(m)
        position = {label: i for i, label in enumerate(order)}
        nested = set(nestings(m)[1])
        for a in range(1, m.n + 1):
            for b in range(a + 1, m.n + 1):
                if ((a, b) in nested) != (position[b] < position[a]):
                    return False, f"rperm order test fails on {m} at ({a},{b})"
        count += 1
    return _ok(count, "noncrossing matchings")


def _check_projection_max_ne(n: int) -> tuple[bool, str]:
    best: dict[str, int] = {}
    for m in all_matchings(n):
        w = lr_sequence(m).word
        ne = stats(m).ne
        if best.get(w, -1) < ne:
            best[w] = ne
    for w, ne in best.items():
        if stats(matching_from_lr(w)).ne != ne:
            return False, f"projection does not maximize nestings for {w}"
    return _ok(len(best), "LR words")


def _check_edges_roundtrip(n: int) -> tuple[bool, str]:
    count = 0
    for m in all_matchings(n):
        rebuilt = from_pairs([(e.left, e.right) for e in edges(m)], m.n)
        if rebuilt != m:
            return False, f"edge-list round trip fails on {m}"
        count += 1
    return _ok(count, "matchings")


def _check_lp_census(n: int) -> tuple[bool, str]:
    brute = sum(1 for m in all_matchings(n) if is_lp(m))
    expected = lp_count_formula(n)
    if brute != expected:
        return False, f"filter count {brute} != formula {expected}"
    return True, f"{brute} L & P matchings, matching the formula"


def _check_hairpin_right_order(n: int) -> tuple[bool, str]:
    count = 0
    for m in all_matchings(n):
        d = find_inflated_hairpin(m)
        if d is None or not d.a_side:
            continue
        es = edges(m)
        hairpin = list(d.a_side) + list(d.b_side)
        by_position = sorted(hairpin, key=lambda label: es[label - 1].right)
        expected = list(reversed(d.a_side)) + list(reversed(d.b_side))
        if by_position != expected:
            return False, f"right-endpoint order fails on {m}"
        count += 1
    return _ok(count, "hairpin matchings")


def _check_lp_mirror(n: int) -> tuple[bool, str]:
    count = 0
    for m in all_matchings(n):
        if is_lp(m) != is_lp(mirror(m)):
            return False, f"mirror changes membership on {m}"
        count += 1
    return _ok(count, "matchings")


def _check_crossing_product(n: int) -> tuple[bool, str]:
    count = 0
    for m in all_matchings(n):
        d = find_inflated_hairpin(m)
        if d is None:
            continue
        if crossings(m)[0] != len(d.a_side) * len(d.b_side):
            return False, f"crossing count != |A|*|B| on {m}"
        count += 1
    return _ok(count, "L & P matchings")


def _check_phi_roundtrip(n: int) -> tuple[bool, str]:
    count = 0
    for m in all_matchings(n):
        if not is_lp(m):
            continue
        if phi_inv(phi(m)) != m:
            return False, f"phi round trip fails on {m}"
        count += 1
    return _ok(count, "L & P matchings")


def _check_phi_inv_roundtrip(n: int) -> tuple[bool, str]:
    count = 0
    for t in ncn_elements(n):
        if phi(phi_inv(t)) != t:
            return False, f"phi_inv round trip fails on {t}"
        count += 1
    return _ok(count, "triples")


def _check_tau_roundtrip(n: int) -> tuple[bool, str]:
    count = 0
    for t in ncn_elements(n):
        if tau_inv(tau(t)) != t:
            return False, f"tau round trip fails on {t}"
        count += 1
    return _ok(count, "triples")


def _check_sigma_roundtrip(n: int) -> tuple[bool, str]:
    count = 0
    for m in all_matchings(n):
        if not is_lp(m):
            continue
        if sigma_inv(sigma(m)) != m:
            return False, f"sigma round trip fails on {m}"
        count += 1
    return _ok(count, "L & P matchings")


def _check_sigma_properties(n: int) -> tuple[bool, str]:
    count = 0
    for m in all_matchings(n):
        if not is_lp(m):
            continue
        image = sigma(m)
        if lr_sequence(image) != lr_sequence(m):
            return False, f"sigma changes the LR word of {m}"
        if is_noncrossing(m) and image != m:
            return False, f"sigma moves the noncrossing matching {m}"
        count += 1
    return _ok(count, "L & P matchings")


def _check_swap_nestings(n: int) -> tuple[bool, str]:
    count = 0
    for m in noncrossing_matchings(n):
        trace = swap_sequence(m)
        order = nep(m)
        k = len(order)
        for i, step in enumerate(trace.steps):
            if step.ne != k - i:
                return False, f"nesting count at step {i} of {m} is {step.ne}"
            if nep(step.matching) != order[i:]:
                return False, f"nested-pair list at step {i} of {m} is wrong"
        count += 1
    return _ok(count, "noncrossing matchings")


def _check_swap_adjacency(n: int) -> tuple[bool, str]:
    count = 0
    for m in noncrossing_matchings(n):
        trace = swap_sequence(m)
        order = nep(m)
        for i, pair in enumerate(order):
            lp_now = trace.steps[i].lperm
            a_at = lp_now.index(pair[0])
            b_at = lp_now.index(pair[1])
            if b_at != a_at + 1:
                return False, (f"pair {pair} not adjacent in order at step {i} "
                               f"of {m}: lperm {lp_now}")
        count += 1
    return _ok(count, "noncrossing matchings")


def _check_sigma_image(n: int) -> tuple[bool, str]:
    images = []
    for m in all_matchings(n):
        if is_lp(m):
            images.append(sigma(m))
    if len(set(images)) != len(images):
        return False, "sigma images collide"
    if set(images) != ns_representatives(n):
        return False, "sigma image set differs from the representative set"
    return True, f"{len(images)} distinct images covering all representatives"


def _check_class_counts(n: int) -> tuple[bool, str]:
    classes, _ = census(n)
    reps = ns_representatives(n)
    expected = lp_count_formula(n)
    if classes != expected:
        return False, f"census count {classes} != formula {expected}"
    if len(reps) != expected:
        return False, f"representative count {len(reps)} != formula {expected}"
    return True, f"{classes} classes, one representative each"


def _check_key_bijection(n: int) -> tuple[bool, str]:
    _, table = census(n)
    keys = [class_key(r) for r in ns_representatives(n)]
    if len(set(keys)) != len(keys):
        return False, "two representatives share a class key"
    if set(keys) != set(table):
        return False, "representative keys do not cover the census"
    return True, f"keys biject onto {len(keys)} census classes"


def _check_coverage(n: int) -> tuple[bool, str]:
    _, table = census(n)
    seen = set()
    for m in noncrossing_matchings(n):
        k = stats(m).ne
        word = lr_sequence(m)
        for i in range(k + 1):
            seen.add((word.word, k - i))
    if seen != {(key.lr.word, key.ne) for key in table}:
        return False, "constructive coverage misses a class"
    return True, f"all {len(seen)} (word, count) classes witnessed"


def _check_stream_counts(n: int) -> tuple[bool, str]:
    total = sum(1 for _ in all_matchings(n))
    if total != double_factorial(2 * n - 1):
        return False, f"full stream yields {total}"
    nc_total = sum(1 for _ in noncrossing_matchings(n))
    if nc_total != catalan(n):
        return False, f"noncrossing stream yields {nc_total}"
    ncn_total = sum(1 for _ in ncn_elements(n))
    if ncn_total != lp_count_formula(n):
        return False, f"triple stream yields {ncn_total}"
    return True, f"{total}, {nc_total}, {ncn_total} elements as counted"


SUITES: dict[str, list[tuple[str, Callable[[int], tuple[bool, str]]]]] = {
    "core": [
        ("pair-partition", _check_pair_partition),
        ("lr-preserved-by-projection", _check_lr_projection),
        ("projection-idempotent", _check_projection_idempotent),
        ("rperm-detects-nestings", _check_rperm_nesting),
        ("projection-maximizes-nestings", _check_projection_max_ne),
        ("edge-list-roundtrip", _check_edges_roundtrip),
    ],
    "lp": [
        ("census-matches-formula", _check_lp_census),
        ("hairpin-right-endpoint-order", _check_hairpin_right_order),
        ("mirror-invariance", _check_lp_mirror),
        ("crossings-are-hairpin-product", _check_crossing_product),
    ],
    "bijections": [
        ("phi-roundtrip", _check_phi_roundtrip),
        ("phi-inverse-roundtrip", _check_phi_inv_roundtrip),
        ("tau-roundtrip", _check_tau_roundtrip),
        ("sigma-roundtrip", _check_sigma_roundtrip),
        ("sigma-preserves-lr", _check_sigma_properties),
        ("swap-trace-nesting-counts", _check_swap_nestings),
        ("swap-pair-adjacency", _check_swap_adjacency),
        ("sigma-image-is-representative-set", _check_sigma_image),
    ],
    "similarity": [
        ("class-count-matches-formula", _check_class_counts),
        ("representative-keys-biject", _check_key_bijection),
        ("swap-steps-cover-all-classes", _check_coverage),
    ],
    "enumeration": [
        ("stream-lengths-match-counts", _check_stream_counts),
    ],
}


def run_suite(n: int, suite: str = "all") -> list[CheckResult]:
    """Run one named suite (or all of them) at size n."""
    if suite == "all":
        names = list(SUITES)
    elif suite in SUITES:
        names = [suite]
    else:
        raise ValueError(
            f"unknown suite {suite!r}; expected one of {', '.join(SUITES)} or all")
    results = []
    for name in names:
        for check_name, fn in SUITES[name]:
            ok, detail = fn(n)
            results.append((f"{name}/{check_name}", ok, detail))
    return results
