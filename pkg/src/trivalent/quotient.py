"""From rooted diagrams to unrooted ones: conjugacy-class representatives.

Forgetting the root partitions rooted isomorphism classes into unrooted
ones (equivalently, modular-group subgroups into conjugacy classes).  Out
of each unrooted class we keep the rooting whose canonical code is
lexicographically least; the test is local to one diagram, so the rooted
stream can be filtered item by item with constant memory.

The same machinery restricted to regular diagrams tabulates triangular
maps by genus and face count.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

from .canonical import CanonicalCode, _relabel_tables
from .diagram import map_stats
from .generator import generate


@dataclass(frozen=True)
class UnrootedRepresentative:
    """Least root code of an unrooted class plus its rooted-class count."""

    code: CanonicalCode
    distinct_rootings: int


def _min_root_scan(code: CanonicalCode) -> tuple[bool, int]:
    """Is ``code`` the least among the codes of all its rootings?

    Returns (True, number of distinct codes) for a representative and
    (False, 0) otherwise, bailing out at the first strictly smaller
    rooting.  Assumes the input is already canonical at root 1, which is
    what the generator emits, so root 1 needs no recomputation.
    """
    n = code.n
    s0 = (0,) + code.t0
    s1 = (0,) + code.t1
    ref = (code.t0, code.t1)
    seen = {ref}
    for r in range(2, n + 1):
        t = _relabel_tables(n, s0, s1, r)
        if t < ref:
            return False, 0
        seen.add(t)
    return True, len(seen)


def filter_unrooted(
    codes: Iterable[CanonicalCode],
) -> Iterator[UnrootedRepresentative]:
    """Keep exactly one representative per unrooted isomorphism class.

    The input must be a duplicate-free stream of rooted canonical codes,
    as produced by the generator; each item is tested independently.
    """
    for code in codes:
        ok, distinct = _min_root_scan(code)
        if ok:
            yield UnrootedRepresentative(code, distinct)


def unrooted_count_by_size(n: int, mode: str = "all") -> dict[int, int]:
    """Number of unrooted classes per size, streamed off one generator run."""
    counts: dict[int, int] = {}

    def visit(size, s0, s1):
        code = CanonicalCode(
            size, tuple(s0[1 : size + 1]), tuple(s1[1 : size + 1])
        )
        if _min_root_scan(code)[0]:
            counts[size] = counts.get(size, 0) + 1

    generate(n, mode, visit)
    return counts


@dataclass
class GenusCensus:
    """Triangular-map counts keyed by (genus, face count).

    ``rooted`` counts rooted maps, ``unrooted`` their unrooted classes,
    over all face counts 2, 4, ..., faces_max.
    """

    faces_max: int
    rooted: dict[tuple[int, int], int]
    unrooted: dict[tuple[int, int], int]

    def faces(self) -> list[int]:
        return list(range(2, self.faces_max + 1, 2))


def genus_census(faces_max: int) -> GenusCensus:
    """Tabulate triangular maps with up to ``faces_max`` faces by genus.

    Runs the regular-mode generator up to size 3*faces_max (a map with F
    faces has 3F arcs) and classifies every emitted map by genus; unrooted
    counts come from the least-root filter.  ``faces_max`` must be even:
    a triangular map has an even number of faces, its arc count being both
    even and a multiple of 3.
    """
    if faces_max < 2 or faces_max % 2:
        raise ValueError(f"faces_max must be even and >= 2, got {faces_max}")
    rooted: dict[tuple[int, int], int] = {}
    unrooted: dict[tuple[int, int], int] = {}

    def visit(size, s0, s1):
        code = CanonicalCode(
            size, tuple(s0[1 : size + 1]), tuple(s1[1 : size + 1])
        )
        key = (map_stats(code.to_diagram()).genus, size // 3)
        rooted[key] = rooted.get(key, 0) + 1
        if _min_root_scan(code)[0]:
            unrooted[key] = unrooted.get(key, 0) + 1

    generate(3 * faces_max, "regular", visit)
    return GenusCensus(faces_max, rooted, unrooted)


def census_tsv(
    table: Mapping[tuple[int, int], int], faces: Sequence[int]
) -> str:
    """Render a genus census as TSV, zero-filled.

    Header ``genus<TAB>faces_2<TAB>faces_4...`` for the selected face
    columns, one row per genus from 0 up to the largest genus observed in
    those columns.
    """
    faces = list(faces)
    gmax = max((g for (g, f) in table if f in set(faces)), default=0)
    lines = ["genus\t" + "\t".join(f"faces_{f}" for f in faces)]
    for g in range(gmax + 1):
        row = [str(g)] + [str(table.get((g, f), 0)) for f in faces]
        lines.append("\t".join(row))
    return "\n".join(lines) + "\n"
