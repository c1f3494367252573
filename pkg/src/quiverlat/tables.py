"""Published sequences N_0..N_4 at a = 0, q = 1, keyed by (family, p)."""

from __future__ import annotations

PUBLISHED: dict[tuple[str, int], dict[int, tuple[int, ...]]] = {
    ("neg-twist", -1): {
        0: (1, 1, 3, 12, 55),
        1: (1, 1, 2, 5, 14),
    },
    ("neg-twist", -2): {
        0: (1, 3, 18, 136, 1155),
        1: (1, 3, 15, 91, 612),
        2: (1, 3, 12, 55, 273),
        3: (1, 3, 9, 28, 90),
        4: (1, 3, 6, 10, 15),
    },
    ("neg-twist", -3): {
        0: (1, 5, 45, 500, 6200),
        1: (1, 5, 40, 385, 4095),
        2: (1, 5, 35, 285, 2530),
        3: (1, 5, 30, 200, 1425),
        4: (1, 5, 25, 130, 700),
        5: (1, 5, 20, 75, 275),
    },
    ("pos-twist", 2): {
        0: (1, 4, 30, 280, 2925),
        1: (1, 4, 26, 204, 1771),
        2: (1, 4, 22, 140, 969),
        3: (1, 4, 18, 88, 455),
        4: (1, 4, 14, 48, 165),
    },
    ("pos-twist", 3): {
        0: (1, 6, 63, 812, 11655),
        1: (1, 6, 57, 650, 8184),
        2: (1, 6, 51, 506, 5481),
        3: (1, 6, 45, 380, 3450),
        4: (1, 6, 39, 272, 1995),
        5: (1, 6, 33, 182, 1020),
    },
    ("pos-twist", 4): {
        0: (1, 8, 108, 1776, 32430),
        1: (1, 8, 100, 1496, 24682),
        2: (1, 8, 92, 1240, 18278),
        3: (1, 8, 84, 1008, 13090),
        4: (1, 8, 76, 800, 8990),
        5: (1, 8, 68, 616, 5850),
    },
    ("double-twist-3", 1): {
        0: (1, 4, 38, 468, 6545),
        1: (1, 4, 34, 368, 4495),
        2: (1, 4, 30, 280, 2925),
        3: (1, 4, 26, 204, 1771),
        4: (1, 4, 22, 140, 969),
        5: (1, 4, 18, 88, 455),
    },
    ("double-twist-3", 2): {
        0: (1, 6, 75, 1190, 21285),
        1: (1, 6, 69, 992, 15990),
        2: (1, 6, 63, 812, 11655),
        3: (1, 6, 57, 650, 8184),
    },
}

TABULATED_FRAMINGS: dict[tuple[str, int], tuple[int, ...]] = {
    key: tuple(sorted(rows)) for key, rows in PUBLISHED.items()
}


def published(family: str, p: int, f: int) -> tuple[int, ...] | None:
    return PUBLISHED.get((family, p), {}).get(f)
