"""Independent ground truth for small sizes.

Two cross-checks that share no code path with the generator: a brute-force
enumeration of all permutation pairs (order dividing 3, order dividing 2,
transitive) for sizes up to 7, and the known recurrence for the number of
rooted triangular maps by face-pair count.  Used by the test suite and by
the command-line ``check`` subcommand.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import Iterator, Sequence

from .canonical import _relabel_tables
from .diagram import is_transitive

#: Largest size the exhaustive pair enumeration accepts by default; at 7
#: there are 351 * 232 = 81432 candidate pairs, still well under a second.
BRUTE_FORCE_LIMIT = 7


class SizeTooLarge(ValueError):
    """Requested size exceeds the brute-force bound."""


@dataclass(frozen=True)
class OracleCounts:
    """Counts from exhaustive enumeration at one size.

    ``labeled_transitive`` counts all valid labeled permutation pairs;
    ``rooted_classes`` the distinct canonical codes rooted at edge 1.
    Relabeling acts freely once a root is fixed, giving
    labeled_transitive = rooted_classes * (n-1)!.
    """

    n: int
    labeled_transitive: int
    rooted_classes: int


def involutions(n: int) -> Iterator[tuple[int, ...]]:
    """All image tables on {1..n} whose square is the identity.

    Built by cycle structure: the smallest unplaced element is either a
    fixed point or paired with a larger unplaced one.
    """
    perm = [0] * (n + 1)

    def place(i: int) -> Iterator[tuple[int, ...]]:
        while i <= n and perm[i]:
            i += 1
        if i > n:
            yield tuple(perm[1:])
            return
        perm[i] = i
        yield from place(i + 1)
        perm[i] = 0
        for j in range(i + 1, n + 1):
            if not perm[j]:
                perm[i], perm[j] = j, i
                yield from place(i + 1)
                perm[i] = perm[j] = 0

    yield from place(1)


def order_three_perms(n: int) -> Iterator[tuple[int, ...]]:
    """All image tables on {1..n} whose cube is the identity.

    Cycles have length 1 or 3; each 3-element support yields two cyclic
    orders.
    """
    perm = [0] * (n + 1)

    def place(i: int) -> Iterator[tuple[int, ...]]:
        while i <= n and perm[i]:
            i += 1
        if i > n:
            yield tuple(perm[1:])
            return
        perm[i] = i
        yield from place(i + 1)
        perm[i] = 0
        free = [j for j in range(i + 1, n + 1) if not perm[j]]
        for a in range(len(free)):
            for b in range(a + 1, len(free)):
                j, k = free[a], free[b]
                for second, third in ((j, k), (k, j)):
                    perm[i], perm[second], perm[third] = second, third, i
                    yield from place(i + 1)
                    perm[i] = perm[second] = perm[third] = 0

    yield from place(1)


def _enumerate(n: int, limit: int) -> tuple[int, set]:
    if n < 1:
        raise ValueError(f"size must be >= 1, got {n}")
    if n > limit:
        raise SizeTooLarge(f"brute force limited to n <= {limit}, got {n}")
    labeled = 0
    codes = set()
    whites = list(involutions(n))
    for s0 in order_three_perms(n):
        s0p = (0,) + s0
        for s1 in whites:
            if not is_transitive(s0, s1):
                continue
            labeled += 1
            codes.add(_relabel_tables(n, s0p, (0,) + s1, 1))
    return labeled, codes


def brute_force_codes(n: int, limit: int = BRUTE_FORCE_LIMIT) -> set:
    """Set of all root-1 canonical codes at size n, as (t0, t1) pairs."""
    return _enumerate(n, limit)[1]


def brute_force_counts(n: int, limit: int = BRUTE_FORCE_LIMIT) -> OracleCounts:
    """Exhaustive labeled and rooted counts at size n (n <= limit)."""
    labeled, codes = _enumerate(n, limit)
    rooted = len(codes)
    assert labeled == rooted * factorial(n - 1), (
        f"free-action identity violated at n={n}: "
        f"{labeled} != {rooted} * {n - 1}!"
    )
    return OracleCounts(n, labeled, rooted)


def regular_rooted_recurrence(k: int) -> int:
    """Number of rooted triangular maps with 6k arcs (2k faces).

    a(1) = 5 and a(m+1) = (6m+6) a(m) + sum_{j=1}^{m-1} a(j) a(m-j);
    exact integers throughout (a(20) has 34 digits).
    """
    if k < 1:
        raise ValueError(f"index must be >= 1, got {k}")
    a = [0, 5]
    for m in range(1, k):
        a.append((6 * m + 6) * a[m] + sum(a[j] * a[m - j] for j in range(1, m)))
    return a[k]


def regular_rooted_series(kmax: int) -> Sequence[int]:
    """The first kmax values of the rooted triangular-map recurrence."""
    a = [0, 5]
    for m in range(1, kmax):
        a.append((6 * m + 6) * a[m] + sum(a[j] * a[m - j] for j in range(1, m)))
    return a[1 : kmax + 1]
