"""Trivalent diagrams as pairs of permutations.

A trivalent diagram is a connected two-colored bipartite graph (parallel
edges allowed, loops not) whose black vertices have degree 1 or 3, whose
white vertices have degree 1 or 2, with a cyclic order on the edges around
each vertex.  Walking to the next edge around the black (resp. white)
endpoint defines a permutation of the edge set whose cube (resp. square) is
the identity, and connectivity says the two permutations generate a
transitive group.  Conversely any such pair of permutations determines the
diagram up to isomorphism, so that pair is the representation used
throughout this package.

Edges are labeled 1..n and a permutation is stored as its image table: a
tuple ``s`` of length n with ``s[i - 1]`` the image of edge ``i``.

Diagrams with no univalent vertex ("regular" diagrams) are exactly the
incidence diagrams of oriented triangular combinatorial maps: faces
correspond to the 3-cycles of the black permutation, undirected edges to
the 2-cycles of the white one, and map vertices to the orbits of the
composite move T (white step followed by an inverse black step).  This
yields the Euler characteristic and the genus of the surface carrying the
map; see :func:`map_stats`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


class DiagramError(ValueError):
    """A structural axiom of trivalent diagrams is violated."""


class NotPermutation(DiagramError):
    """An image table is not a permutation of {1..n}."""


class OrderThreeViolated(DiagramError):
    """The black permutation composed three times is not the identity."""


class InvolutionViolated(DiagramError):
    """The white permutation composed twice is not the identity."""


class NotTransitive(DiagramError):
    """The two permutations do not act transitively on the edge labels."""


class NotRegular(DiagramError):
    """The diagram has a univalent vertex, so it is not a triangular map."""


@dataclass(frozen=True)
class Diagram:
    """A trivalent diagram of size ``n`` given by its two image tables.

    ``s0[i - 1]`` is the next edge after ``i`` around its black vertex,
    ``s1[i - 1]`` the next edge around its white vertex.  Instances are
    immutable; use :func:`validate` to construct one with all structural
    axioms checked.
    """

    n: int
    s0: tuple[int, ...]
    s1: tuple[int, ...]

    def to_line(self) -> str:
        return format_line(self.n, self.s0, self.s1)


@dataclass(frozen=True)
class MapStats:
    """Vertex/edge/face counts and genus of a triangular map.

    For a regular diagram of size n the map has n arcs, E = n/2 undirected
    edges (the 2-cycles of the white permutation), F = n/3 triangular faces
    (the 3-cycles of the black permutation) and one vertex per orbit of the
    move T.  The Euler characteristic V - E + F equals 2 - 2g where g is
    the genus of the oriented surface carrying the map.
    """

    vertices: int
    edges: int
    faces: int
    euler: int
    genus: int


def _check_permutation(name: str, n: int, table: Sequence[int]) -> None:
    if len(table) != n:
        raise ValueError(f"{name} has length {len(table)}, expected {n}")
    seen = bytearray(n + 1)
    for i, v in enumerate(table, start=1):
        if not isinstance(v, int) or v < 1 or v > n:
            raise NotPermutation(f"{name}[{i}] = {v!r} is not in 1..{n}")
        if seen[v]:
            raise NotPermutation(f"{name}[{i}] = {v} repeats an earlier image")
        seen[v] = 1


def is_transitive(s0: Sequence[int], s1: Sequence[int]) -> bool:
    """Whether the group generated by two permutations has a single orbit.

    Breadth-first search from edge 1 along ``i -> s0[i]`` and
    ``i -> s1[i]``; since both maps are bijections this reaches exactly the
    orbit of 1.  Runs in O(n) with an explicit worklist.
    """
    n = len(s0)
    if n == 0:
        return False
    seen = bytearray(n + 1)
    seen[1] = 1
    work = [1]
    count = 1
    while work:
        i = work.pop()
        for j in (s0[i - 1], s1[i - 1]):
            if not seen[j]:
                seen[j] = 1
                count += 1
                work.append(j)
    return count == n


def validate(n: int, s0: Sequence[int], s1: Sequence[int]) -> Diagram:
    """Check all structural axioms and return the corresponding Diagram.

    Raises the error for the first violated axiom, in this order:
    NotPermutation, OrderThreeViolated, InvolutionViolated, NotTransitive.
    The empty diagram (n = 0) is rejected.
    """
    if n < 1:
        raise ValueError(f"size must be a positive integer, got {n}")
    _check_permutation("s0", n, s0)
    _check_permutation("s1", n, s1)
    for i in range(1, n + 1):
        j = s0[s0[s0[i - 1] - 1] - 1]
        if j != i:
            raise OrderThreeViolated(f"s0 applied three times sends {i} to {j}")
    for i in range(1, n + 1):
        j = s1[s1[i - 1] - 1]
        if j != i:
            raise InvolutionViolated(f"s1 applied twice sends {i} to {j}")
    if not is_transitive(s0, s1):
        reached = _orbit_of_one(s0, s1)
        raise NotTransitive(
            f"only {len(reached)} of {n} edges reachable from edge 1: "
            f"{sorted(reached)}"
        )
    return Diagram(n, tuple(s0), tuple(s1))


def _orbit_of_one(s0: Sequence[int], s1: Sequence[int]) -> set[int]:
    seen = {1}
    work = [1]
    while work:
        i = work.pop()
        for j in (s0[i - 1], s1[i - 1]):
            if j not in seen:
                seen.add(j)
                work.append(j)
    return seen


#: Moves generating the natural group action on edge labels.  A swaps the
#: two edges of a bivalent white vertex, B rotates the three edges of a
#: trivalent black vertex, and T is A followed by the inverse of B.
MOVES = ("A", "B", "T")


def elementary_move(d: Diagram, a: int, move: str) -> int:
    """Apply one elementary move to edge label ``a`` and return its image."""
    if not 1 <= a <= d.n:
        raise ValueError(f"edge label {a} out of range 1..{d.n}")
    if move == "A":
        return d.s1[a - 1]
    if move == "B":
        return d.s0[a - 1]
    if move == "T":
        # inverse of an order-three permutation is its square
        b = d.s1[a - 1]
        return d.s0[d.s0[b - 1] - 1]
    raise ValueError(f"unknown move {move!r}, expected one of {MOVES}")


def map_stats(d: Diagram) -> MapStats:
    """Statistics of the triangular map associated to a regular diagram.

    Raises NotRegular if either permutation has a fixed point.  Vertices
    are counted as orbits of the T move; the regularity conditions force
    E = n/2, F = n/3 and n divisible by 6.
    """
    n, s0, s1 = d.n, d.s0, d.s1
    for i in range(1, n + 1):
        if s0[i - 1] == i:
            raise NotRegular(f"black vertex at edge {i} is univalent")
        if s1[i - 1] == i:
            raise NotRegular(f"white vertex at edge {i} is univalent")
    seen = bytearray(n + 1)
    vertices = 0
    for a in range(1, n + 1):
        if seen[a]:
            continue
        vertices += 1
        b = a
        while not seen[b]:
            seen[b] = 1
            w = s1[b - 1]
            b = s0[s0[w - 1] - 1]
    edges = n // 2
    faces = n // 3
    euler = vertices - edges + faces
    assert euler % 2 == 0, "oriented surfaces have even Euler characteristic"
    return MapStats(vertices, edges, faces, euler, (2 - euler) // 2)


def format_line(n: int, s0: Sequence[int], s1: Sequence[int]) -> str:
    """One-diagram text line: size, then both image tables.

    ``n<TAB>s0[1] .. s0[n]<TAB>s1[1] .. s1[n]<LF>`` with decimal entries,
    single spaces, no trailing space.  This format is bit-exact and shared
    by every producer and consumer in the package.
    """
    return "%d\t%s\t%s\n" % (n, " ".join(map(str, s0)), " ".join(map(str, s1)))


def parse_line(line: str) -> Diagram:
    """Parse and validate one diagram line (inverse of :func:`format_line`)."""
    fields = line.rstrip("\n").split("\t")
    if len(fields) != 3:
        raise ValueError(f"expected 3 tab-separated fields, got {len(fields)}")
    try:
        n = int(fields[0])
        s0 = tuple(int(v) for v in fields[1].split(" "))
        s1 = tuple(int(v) for v in fields[2].split(" "))
    except ValueError as exc:
        raise ValueError(f"malformed diagram line: {exc}") from None
    return validate(n, s0, s1)
