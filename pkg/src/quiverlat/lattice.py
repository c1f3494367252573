"""Lattice paths below rational-slope lines, and Raney numbers."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .tables import TABULATED_FRAMINGS

STEP_VECTORS = {"E": (1, 0), "N": (0, 1), "D": (1, 1)}


class PathCapExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class PathModel:
    """Paths from (0,0) to ``(x, y)`` staying below ``Y = slope * (X - x0)``.

    ``slope = s_num / s_den``; ``s_den == 0`` means the line is vertical at
    infinity, i.e. no constraint at all.
    """

    x: int
    y: int
    s_num: int
    s_den: int
    x0: int = 0
    strict: bool = False
    steps: str = "EN"

    def __post_init__(self) -> None:
        if self.x < 0 or self.y < 0:
            raise ValueError("endpoint coordinates must be nonnegative")
        if self.s_num < 0 or self.s_den < 0:
            raise ValueError("slope numerator and denominator must be nonnegative")
        if len(set(self.steps)) != len(self.steps) or any(s not in STEP_VECTORS for s in self.steps):
            raise ValueError(f"steps must be a subset of 'END', got {self.steps!r}")

    def allowed(self, px: int, py: int) -> bool:
        """Line test; strictness applies to interior points only, since both
        ends of a closed-form model sit on the line."""
        if self.s_den == 0:
            return True
        lhs = py * self.s_den
        rhs = (px - self.x0) * self.s_num
        interior = (px, py) != (0, 0) and (px, py) != (self.x, self.y)
        return lhs < rhs if self.strict and interior else lhs <= rhs

    @property
    def total_steps_max(self) -> int:
        return self.x + self.y


@dataclass(frozen=True)
class RaneyParams:
    M: int
    N: int
    k: int

    def __post_init__(self) -> None:
        if self.M < 1 or self.N < 1 or self.k < 0:
            raise ValueError(f"invalid Raney parameters {self}")

    def value(self) -> int:
        return raney(self.M, self.N, self.k)


def raney(M: int, N: int, k: int) -> int:
    """``N / (M k + N) * binomial(M k + N, k)``, exact."""
    total = M * k + N
    if total <= 0:
        raise ValueError(f"Raney number needs M*k + N > 0, got {total}")
    num = N * comb(total, k)
    if num % total:
        raise ValueError(f"R_{{{M},{N}}}({k}) is not an integer")
    return num // total


def count_paths(model: PathModel) -> int:
    """Dynamic programme over the grid, column by column."""
    X, Y = model.x, model.y
    moves = [STEP_VECTORS[s] for s in model.steps]
    table = [[0] * (Y + 1) for _ in range(X + 1)]
    if model.allowed(0, 0):
        table[0][0] = 1
    for px in range(X + 1):
        col = table[px]
        for py in range(Y + 1):
            if px == 0 and py == 0:
                continue
            if not model.allowed(px, py):
                continue
            total = 0
            for dx, dy in moves:
                qx, qy = px - dx, py - dy
                if qx >= 0 and qy >= 0:
                    total += table[qx][qy]
            col[py] = total
    return table[X][Y]


def enumerate_paths(model: PathModel, cap: int = 100_000) -> list[str]:
    """Every admissible path as a step string; raises if more than ``cap``."""
    out: list[str] = []
    moves = [(s, STEP_VECTORS[s]) for s in model.steps]
    if not model.allowed(0, 0):
        return out

    def walk(px: int, py: int, prefix: list[str]) -> None:
        if (px, py) == (model.x, model.y):
            if len(out) >= cap:
                raise PathCapExceeded(f"more than {cap} paths")
            out.append("".join(prefix))
            return
        for name, (dx, dy) in moves:
            nx, ny = px + dx, py + dy
            if nx <= model.x and ny <= model.y and model.allowed(nx, ny):
                prefix.append(name)
                walk(nx, ny, prefix)
                prefix.pop()

    walk(0, 0, [])
    return out


# ---------------------------------------------------------------------------
# knot families


def family_line(family: str, p: int, f: int) -> tuple[int, int]:
    """``(m, s)``: paths end at ``(m k + s, k)`` below the line of slope 1/m."""
    if family == "neg-twist":
        return 2 * abs(p) - f, 2 * abs(p) - 2
    if family == "pos-twist":
        return 2 * p + 1 - f, 2 * p - 1
    if family == "double-twist-3":
        return 2 * p + 5 - f, 2 * p + 1
    raise ValueError(f"no twist path model for family {family!r}")


def _check_supported(family: str, p: int, f: int) -> None:
    if f not in TABULATED_FRAMINGS.get((family, p), ()):
        raise ValueError(f"no path model known for {family} p={p} f={f}")


def family_path_model(family: str, p: int, f: int, k: int, *, steps: str = "EN") -> PathModel:
    _check_supported(family, p, f)
    m, s = family_line(family, p, f)
    return PathModel(m * k + s, k, 1, m, steps=steps)


def family_raney(family: str, p: int, f: int, k: int) -> int:
    _check_supported(family, p, f)
    m, s = family_line(family, p, f)
    return raney(m + 1, s + 1, k)


def closed_form_sequence(family: str, p: int, f: int, kmax: int) -> list[int] | None:
    """Closed-form values for ``k = 0..kmax`` or ``None`` if untabulated."""
    try:
        return [family_raney(family, p, f, k) for k in range(kmax + 1)]
    except ValueError:
        return None


def path_count_sequence(family: str, p: int, f: int, kmax: int) -> list[int] | None:
    try:
        return [count_paths(family_path_model(family, p, f, k)) for k in range(kmax + 1)]
    except ValueError:
        return None


def torus_path_model(p: int, k: int, with_diagonal: bool = False, *, strict: bool = False) -> PathModel:
    if p < 1 or k < 0:
        raise ValueError("torus path model needs p >= 1 and k >= 0")
    return PathModel(
        (2 * p + 1) * k, 2 * k, 2, 2 * p + 1, strict=strict, steps="END" if with_diagonal else "EN"
    )
