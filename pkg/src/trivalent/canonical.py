"""Canonical labeling of rooted trivalent diagrams.

Rooted trivalent diagrams admit a characteristic labeling computable in
linear time: traverse the edges depth-first in prefix order from the root,
exploring from each edge first its black successor and then its white
successor, and number the edges 1..n in order of first visit.  Transporting
the two permutations along that numbering yields a code that depends only
on the isomorphism class of the rooted diagram, not on the input labels.
Two rooted diagrams are isomorphic exactly when their codes are equal
(rooted diagrams are rigid), and the codes are totally ordered, which makes
unrooted-isomorphism tests a matter of minimizing over rootings.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Mapping, Sequence

from .diagram import Diagram, DiagramError, format_line


class NotConnected(DiagramError):
    """The traversal reached fewer elements than the announced size."""


@dataclass(frozen=True, order=True)
class CanonicalCode:
    """Characteristic labeling of a rooted diagram, root at label 1.

    Instances compare lexicographically on the sequence
    ``(n, t0[1..n], t1[1..n])``, a strict total order in which equality is
    exactly rooted isomorphism.
    """

    n: int
    t0: tuple[int, ...]
    t1: tuple[int, ...]

    def to_diagram(self) -> Diagram:
        return Diagram(self.n, self.t0, self.t1)

    def to_line(self) -> str:
        return format_line(self.n, self.t0, self.t1)


def _relabel_tables(
    n: int, s0: Sequence[int], s1: Sequence[int], root: int
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Core relabeling on 0-padded integer tables (index 0 unused).

    Returns the transported pair (t0, t1) as plain tuples.  The traversal
    uses an explicit stack of pending elements; popping reproduces the
    prefix order of the recursive formulation exactly (element, then its
    s0 subtree, then its s1 subtree), with already-labeled elements skipped
    on pop just as the recursion would return immediately.
    """
    l0 = [0] * (n + 1)  # label assigned to each element; 0 = unvisited
    l1 = [0] * (n + 1)  # element carrying each label
    c = 1
    pending = [root]
    while pending:
        x = pending.pop()
        if l0[x]:
            continue
        l0[x] = c
        l1[c] = x
        c += 1
        pending.append(s1[x])
        pending.append(s0[x])
    if c <= n:
        raise NotConnected(f"reached only {c - 1} of {n} edges from root {root}")
    t0 = tuple(l0[s0[l1[k]]] for k in range(1, n + 1))
    t1 = tuple(l0[s1[l1[k]]] for k in range(1, n + 1))
    return t0, t1


def relabel(
    n: int,
    s0: Mapping[Hashable, Hashable],
    s1: Mapping[Hashable, Hashable],
    root: Hashable,
) -> CanonicalCode:
    """Characteristic relabeling of a diagram over an arbitrary alphabet.

    ``s0`` and ``s1`` map each of the n alphabet elements to an element;
    the alphabet may hold any hashable values.  The output is invariant
    under every bijection of the alphabet: renaming the elements and the
    root consistently produces the identical code.
    """
    label: dict[Hashable, int] = {}
    element: list[Hashable] = [None] * (n + 1)
    c = 1
    pending = [root]
    while pending:
        x = pending.pop()
        if x in label:
            continue
        label[x] = c
        element[c] = x
        c += 1
        pending.append(s1[x])
        pending.append(s0[x])
    if c <= n:
        raise NotConnected(f"reached only {c - 1} of {n} elements from root {root!r}")
    t0 = tuple(label[s0[element[k]]] for k in range(1, n + 1))
    t1 = tuple(label[s1[element[k]]] for k in range(1, n + 1))
    return CanonicalCode(n, t0, t1)


def canonical_code(d: Diagram, root: int) -> CanonicalCode:
    """Code of ``d`` rerooted at edge ``root``.

    Two rooted diagrams are isomorphic iff their codes compare equal.
    """
    if not 1 <= root <= d.n:
        raise ValueError(f"root {root} out of range 1..{d.n}")
    t0, t1 = _relabel_tables(d.n, (0,) + d.s0, (0,) + d.s1, root)
    return CanonicalCode(d.n, t0, t1)


def min_root_code(d: Diagram) -> tuple[CanonicalCode, int]:
    """Least code over all n rootings, and the number of distinct codes.

    The least code is the canonical representative of the underlying
    unrooted diagram; the distinct-code count is the number of rooted
    isomorphism classes lying over it.  Costs n relabelings, O(n^2).
    """
    n = d.n
    s0 = (0,) + d.s0
    s1 = (0,) + d.s1
    codes = {_relabel_tables(n, s0, s1, r) for r in range(1, n + 1)}
    t0, t1 = min(codes)
    return CanonicalCode(n, t0, t1), len(codes)


def are_conjugate(d1: Diagram, d2: Diagram) -> bool:
    """Whether two diagrams are isomorphic once their roots are forgotten.

    Equivalently, whether the corresponding finite-index subgroups of the
    modular group are conjugate.
    """
    if d1.n != d2.n:
        return False
    return min_root_code(d1)[0] == min_root_code(d2)[0]
