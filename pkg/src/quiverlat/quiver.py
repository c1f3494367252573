"""Graded symmetric quivers and the rewrite operations acting on them.

Matrices are stored as tuples of tuples of Python ints, so entries may grow
without bound along a tower.  Every value here is immutable; operations
return new objects.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

Matrix = tuple[tuple[int, ...], ...]


class QuiverError(ValueError):
    """Structural violation: asymmetric matrix, bad index, wrong grading."""


def _as_matrix(rows: Iterable[Iterable[int]]) -> Matrix:
    return tuple(tuple(int(v) for v in row) for row in rows)


@dataclass(frozen=True)
class SymQuiver:
    entries: Matrix

    def __post_init__(self) -> None:
        m = _as_matrix(self.entries)
        object.__setattr__(self, "entries", m)
        n = len(m)
        if n == 0:
            raise QuiverError("quiver must have at least one node")
        for i, row in enumerate(m):
            if len(row) != n:
                raise QuiverError(f"row {i} has length {len(row)}, expected {n}")
        for i in range(n):
            for j in range(i + 1, n):
                if m[i][j] != m[j][i]:
                    raise QuiverError(
                        f"matrix not symmetric at ({i},{j}): {m[i][j]} != {m[j][i]}"
                    )

    @property
    def size(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i][j]

    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.entries[i][i] for i in range(self.size))

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.entries]


@dataclass(frozen=True)
class NodeGrading:
    a_deg: int
    q_deg: int
    x_deg: int = 1

    def __post_init__(self) -> None:
        if self.x_deg < 0:
            raise QuiverError(f"x degree must be nonnegative, got {self.x_deg}")


@dataclass(frozen=True)
class GradedQuiver:
    quiver: SymQuiver
    gradings: tuple[NodeGrading, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "gradings", tuple(self.gradings))
        if len(self.gradings) != self.quiver.size:
            raise QuiverError(
                f"{len(self.gradings)} gradings for a quiver with {self.quiver.size} nodes"
            )

    @classmethod
    def build(
        cls,
        matrix: Sequence[Sequence[int]],
        a: Sequence[int],
        q: Sequence[int],
        x: Sequence[int] | None = None,
    ) -> GradedQuiver:
        if x is None:
            x = [1] * len(a)
        if not len(a) == len(q) == len(x):
            raise QuiverError("grading vectors have different lengths")
        grads = tuple(NodeGrading(ai, qi, xi) for ai, qi, xi in zip(a, q, x))
        return cls(SymQuiver(matrix), grads)

    @property
    def size(self) -> int:
        return self.quiver.size

    @property
    def a(self) -> tuple[int, ...]:
        return tuple(g.a_deg for g in self.gradings)

    @property
    def q(self) -> tuple[int, ...]:
        return tuple(g.q_deg for g in self.gradings)

    @property
    def x(self) -> tuple[int, ...]:
        return tuple(g.x_deg for g in self.gradings)

    def generator(self, i: int) -> tuple[int, int, int]:
        """Exponents ``(a, q, x)`` of ``x_i = a^{a_i} q^{q_i - C_ii} x^{x_i}``."""
        g = self.gradings[i]
        return g.a_deg, g.q_deg - self.quiver[i, i], g.x_deg


@dataclass(frozen=True)
class AugmentedQuiver:
    """A graded quiver whose node 0 is the auxiliary twisting node."""

    base: GradedQuiver
    name: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        if self.base.x[0] != 0:
            raise QuiverError(f"auxiliary node 0 must have x degree 0, got {self.base.x[0]}")

    def check_seed_pattern(self) -> None:
        """Seeds carry x degrees ``(0, 1, ..., 1)``; raise otherwise."""
        bad = [i for i, v in enumerate(self.base.x[1:], start=1) if v != 1]
        if bad:
            raise QuiverError(f"non-auxiliary nodes must have x degree 1; offending nodes {bad}")

    @property
    def size(self) -> int:
        return self.base.size


@dataclass(frozen=True)
class UnreducedQuiver:
    matrix: SymQuiver
    a_bar: tuple[int, ...]
    q_bar: tuple[int, ...]
    framing: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "a_bar", tuple(self.a_bar))
        object.__setattr__(self, "q_bar", tuple(self.q_bar))
        n = self.matrix.size
        if n % 2:
            raise QuiverError("unreduced quiver must have an even number of nodes")
        if len(self.a_bar) != n or len(self.q_bar) != n:
            raise QuiverError("degree vectors do not match the matrix size")
        for j in range(0, n, 2):
            if self.a_bar[j] - self.a_bar[j + 1] != 2 or self.q_bar[j] != self.q_bar[j + 1]:
                raise QuiverError(f"node pair ({j},{j + 1}) breaks the (a+1, a-1) doubling rule")

    @property
    def size(self) -> int:
        return self.matrix.size


# ---------------------------------------------------------------------------
# operations


def mirror(c: SymQuiver) -> SymQuiver:
    """``I - C``: the quiver of the mirror knot."""
    n = c.size
    return SymQuiver(
        tuple(tuple((1 if i == j else 0) - c[i, j] for j in range(n)) for i in range(n))
    )


def frame(u: UnreducedQuiver, f: int) -> UnreducedQuiver:
    """Add ``f`` to every matrix entry; ``f`` is recorded as the framing.

    Framings compose additively, so ``frame(frame(u, 1), -1) == u``.
    """
    m = tuple(tuple(v + f for v in row) for row in u.matrix.entries)
    return UnreducedQuiver(SymQuiver(m), u.a_bar, u.q_bar, u.framing + f)


def double_unreduced(g: GradedQuiver) -> UnreducedQuiver:
    """Split every node into the pair ``(a+1, q+1)``, ``(a-1, q+1)``.

    Entry ``(r, s)`` (1-based) of the result is ``C[ceil(r/2)][ceil(s/2)]``
    plus one when ``max(r, s)`` is odd.
    """
    bad = [i for i, x in enumerate(g.x) if x != 1]
    if bad:
        raise QuiverError(f"cannot double: nodes {bad} have x degree != 1 (auxiliary not removed?)")
    k = g.size
    c = g.quiver
    m = tuple(
        tuple(c[r // 2, s // 2] + (1 if max(r, s) % 2 == 0 else 0) for s in range(2 * k))
        for r in range(2 * k)
    )
    a_bar = tuple(v for a in g.a for v in (a + 1, a - 1))
    q_bar = tuple(v for q in g.q for v in (q + 1, q + 1))
    return UnreducedQuiver(SymQuiver(m), a_bar, q_bar, 0)


def _check_pair(n: int, i: int, j: int) -> None:
    if not (0 <= i < n and 0 <= j < n):
        raise QuiverError(f"node index out of range: ({i},{j}) for {n} nodes")
    if i == j:
        raise QuiverError(f"cannot (un)link a node with itself: ({i},{j})")


def _extend(g: GradedQuiver, i: int, j: int, delta: int, q_shift: int) -> GradedQuiver:
    c = g.quiver.entries
    n = len(c)
    rows = [list(r) + [0] for r in c]
    rows.append([0] * (n + 1))
    rows[i][j] += delta
    rows[j][i] += delta
    cij = c[i][j]
    for s in range(n):
        if s in (i, j):
            continue
        rows[s][n] = rows[n][s] = c[s][i] + c[s][j]
    # delta is -1 for unlinking, +1 for linking
    off = 0 if delta > 0 else -1
    rows[i][n] = rows[n][i] = c[i][i] + cij + off
    rows[j][n] = rows[n][j] = cij + c[j][j] + off
    rows[n][n] = c[i][i] + c[j][j] + 2 * cij + off
    gi, gj = g.gradings[i], g.gradings[j]
    new = NodeGrading(
        gi.a_deg + gj.a_deg,
        gi.q_deg + gj.q_deg + 2 * cij + q_shift,
        gi.x_deg + gj.x_deg,
    )
    return GradedQuiver(SymQuiver(rows), g.gradings + (new,))


def _aux_shift(g: GradedQuiver, i: int, j: int, aux_diag_shift: bool) -> int:
    # With x_0 = a^{a_0} q^{q_0} (no -C_00), the generator bookkeeping for a
    # pair touching node 0 picks up an extra +C_00.
    if aux_diag_shift:
        return 0
    return sum(g.quiver[k, k] for k in (i, j) if k == 0)


def unlink_graded(g: GradedQuiver, i: int, j: int, *, aux_diag_shift: bool = True) -> GradedQuiver:
    _check_pair(g.size, i, j)
    return _extend(g, i, j, -1, -2 + _aux_shift(g, i, j, aux_diag_shift))


def link_graded(g: GradedQuiver, i: int, j: int, *, aux_diag_shift: bool = True) -> GradedQuiver:
    _check_pair(g.size, i, j)
    return _extend(g, i, j, +1, _aux_shift(g, i, j, aux_diag_shift))


def unlink(a: AugmentedQuiver, i: int, j: int, *, aux_diag_shift: bool = True) -> AugmentedQuiver:
    """Unlink nodes ``i`` and ``j``, appending the node ``q^-1 x_i x_j``."""
    return AugmentedQuiver(unlink_graded(a.base, i, j, aux_diag_shift=aux_diag_shift), a.name)


def link(a: AugmentedQuiver, i: int, j: int, *, aux_diag_shift: bool = True) -> AugmentedQuiver:
    """Link nodes ``i`` and ``j``, appending the node ``x_i x_j``."""
    return AugmentedQuiver(link_graded(a.base, i, j, aux_diag_shift=aux_diag_shift), a.name)


def drop_auxiliary(a: AugmentedQuiver) -> GradedQuiver:
    """Remove node 0 together with its row and column."""
    c = a.base.quiver.entries
    rows = tuple(row[1:] for row in c[1:])
    grads = a.base.gradings[1:]
    bad = [i for i, g in enumerate(grads) if g.x_deg != 1]
    if bad:
        raise QuiverError(f"after removing node 0, nodes {bad} still have x degree != 1")
    return GradedQuiver(SymQuiver(rows), grads)
