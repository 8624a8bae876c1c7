"""Published counting series used as self-check references.

Four integer sequences, all in the On-Line Encyclopedia of Integer
Sequences; the command-line ``check`` subcommand compares generated counts
against them.

* A005133 - rooted trivalent diagrams by size, which is also the number of
  index-n subgroups of the modular group (here to order 50).
* A121350 - unrooted trivalent diagrams by size = conjugacy classes of
  index-n subgroups (to order 50).
* A062980 - rooted triangular maps, entry k counting maps with 6k arcs
  (to order 120 in the arc count).
* A129114 - unrooted triangular maps, same indexing (to order 120).
"""

from __future__ import annotations

# A005133, sizes 1..50
ROOTED_DIAGRAMS = (
    1, 1, 4, 8, 5, 22, 42, 40, 120, 265,
    286, 764, 1729, 2198, 5168, 12144, 17034, 37702, 88958, 136584,
    288270, 682572, 1118996, 2306464, 5428800, 9409517, 19103988, 44701696,
    80904113, 163344502, 379249288, 711598944, 1434840718, 3308997062,
    6391673638, 12921383032, 29611074174, 58602591708, 119001063028,
    271331133136, 547872065136, 1119204224666, 2541384297716,
    5219606253184, 10733985041978, 24300914061436, 50635071045768,
    104875736986272, 236934212877684, 499877970985660,
)

# A121350, sizes 1..50
UNROOTED_DIAGRAMS = (
    1, 1, 2, 2, 1, 8, 6, 7, 14, 27,
    26, 80, 133, 170, 348, 765, 1002, 2176, 4682, 6931,
    13740, 31085, 48652, 96682, 217152, 362779, 707590, 1597130,
    2789797, 5449439, 12233848, 22245655, 43480188, 97330468,
    182619250, 358968639, 800299302, 1542254973, 3051310056,
    6783358130, 13362733296, 26648120027, 59101960412, 118628268978,
    238533003938, 528281671324, 1077341937144, 2184915316390,
    4835392099548, 9997568771074,
)

# A062980, entry k = rooted triangular maps with 6k arcs, k = 1..20
ROOTED_MAPS = (
    5,
    60,
    1105,
    27120,
    828250,
    30220800,
    1282031525,
    61999046400,
    3366961243750,
    202903221120000,
    13437880555850250,
    970217083619328000,
    75849500508999712500,
    6383483988812390400000,
    575440151532675686278125,
    55318762960656722780160000,
    5649301494178851172304968750,
    610768380520654474629120000000,
    69692599846542054607811528918750,
    8370071726919812448859648819200000,
)

# A129114, entry k = unrooted triangular maps with 6k arcs, k = 1..20
UNROOTED_MAPS = (
    3,
    11,
    81,
    1228,
    28174,
    843186,
    30551755,
    1291861997,
    62352938720,
    3381736322813,
    203604398647922,
    13475238697911184,
    972429507963453210,
    75993857157285258473,
    6393779463050776636807,
    576237114190853665462712,
    55385308766655472416299110,
    5655262782600929403228668176,
    611338595145132827847686253456,
    69750597724332100283681465962492,
)


def expected_rooted(n: int) -> int:
    """A005133 at size n (1 <= n <= 50)."""
    return ROOTED_DIAGRAMS[n - 1]


def expected_unrooted(n: int) -> int:
    """A121350 at size n (1 <= n <= 50)."""
    return UNROOTED_DIAGRAMS[n - 1]


def expected_rooted_maps(size: int) -> int:
    """A062980 at arc count ``size`` (a positive multiple of 6, <= 120)."""
    if size % 6:
        raise ValueError(f"triangular maps have sizes divisible by 6, got {size}")
    return ROOTED_MAPS[size // 6 - 1]


def expected_unrooted_maps(size: int) -> int:
    """A129114 at arc count ``size`` (a positive multiple of 6, <= 120)."""
    if size % 6:
        raise ValueError(f"triangular maps have sizes divisible by 6, got {size}")
    return UNROOTED_MAPS[size // 6 - 1]
