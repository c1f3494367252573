"""Seeds and unlinking towers for the twist and double twist families."""

from __future__ import annotations

import hashlib
import os
import warnings
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .quiver import AugmentedQuiver, GradedQuiver, QuiverError, unlink

FAMILIES = ("neg-twist", "pos-twist", "double-twist-3", "torus-2")

# first-step unlink targets (each paired with node 0)
FIRST_TARGETS = {
    "neg-twist": (2, 3, 4, 5),
    "pos-twist": (4, 5, 6, 7),
    "double-twist-3": tuple(range(9, 17)),
}

# the seed knot at the bottom of each tower, and its parameter value
SEED_KNOT = {"neg-twist": ("4_1", -1), "pos-twist": ("5_2", 2), "double-twist-3": ("7_4", 1)}

SEED_4_1_MATRIX = (
    (1, 0, 1, 1, 1, 1),
    (0, 0, -1, -1, 0, 0),
    (1, -1, -2, -2, -1, 0),
    (1, -1, -2, -1, -1, 0),
    (1, 0, -1, -1, 1, 1),
    (1, 0, 0, 0, 1, 2),
)
SEED_4_1_A = (2, 0, -2, 0, 0, 2)
SEED_4_1_Q = (-1, 0, 0, -2, 2, 0)


class SeedError(ValueError):
    """A seed file could not be parsed or failed validation."""


@dataclass(frozen=True)
class KnotFamilySpec:
    family: str
    p: int

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        lo = {"neg-twist": None, "pos-twist": 2, "double-twist-3": 1, "torus-2": 1}[self.family]
        if self.family == "neg-twist":
            if self.p > -1:
                raise ValueError(f"neg-twist requires p <= -1, got {self.p}")
        elif self.p < lo:
            raise ValueError(f"{self.family} requires p >= {lo}, got {self.p}")

    @property
    def p1(self) -> int:
        return self.p

    @property
    def p2(self) -> int:
        return 1 if self.family == "double-twist-3" else 0

    @property
    def pretzel(self) -> tuple[int, int, int] | None:
        if self.family == "neg-twist":
            return (2 * self.p + 1, 1, 1)
        if self.family == "pos-twist":
            return (2 * self.p - 1, 1, 1)
        if self.family == "double-twist-3":
            return (2 * self.p + 1, 3, 1)
        return None

    @property
    def knot_name(self) -> str:
        if self.family == "neg-twist":
            return f"{2 * abs(self.p) + 2}_1"
        if self.family == "pos-twist":
            return f"{2 * self.p + 1}_2"
        if self.family == "double-twist-3":
            return {1: "7_4", 2: "9_5"}.get(self.p, "L({},3,1)".format(2 * self.p + 1))
        return f"T(2,{2 * self.p + 1})"

    @property
    def tower_steps(self) -> int:
        """Number of twist steps above the family's seed knot."""
        if self.family == "torus-2":
            raise ValueError("torus-2 has no quiver tower")
        _, p0 = SEED_KNOT[self.family]
        return abs(self.p - p0)

    @property
    def seed_name(self) -> str:
        if self.family == "torus-2":
            raise ValueError("torus-2 has no quiver seed")
        return SEED_KNOT[self.family][0]


# ---------------------------------------------------------------------------
# seeds


def builtin_seed_4_1() -> AugmentedQuiver:
    base = GradedQuiver.build(SEED_4_1_MATRIX, SEED_4_1_A, SEED_4_1_Q, (0, 1, 1, 1, 1, 1))
    return AugmentedQuiver(base, "4_1")


def parse_seed(text: str, source: str = "<string>") -> AugmentedQuiver:
    """Parse the line-oriented seed format; see ``load_seed``."""
    name = ""
    nodes: int | None = None
    rows: list[list[int]] = []
    vectors: dict[str, list[int]] = {}
    in_matrix = False
    matrix_line = 0

    def ints(tokens: list[str], lineno: int) -> list[int]:
        try:
            return [int(t) for t in tokens]
        except ValueError as exc:
            raise SeedError(f"{source}:{lineno}: expected integers ({exc})") from None

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if in_matrix and nodes is not None and len(rows) < nodes:
            if tokens[0].isidentifier():
                raise SeedError(f"{source}:{lineno}: matrix has {len(rows)} rows, expected {nodes}")
            row = ints(tokens, lineno)
            if len(row) != nodes:
                raise SeedError(f"{source}:{lineno}: matrix row has {len(row)} entries, expected {nodes}")
            rows.append(row)
            continue
        in_matrix = False
        key, args = tokens[0], tokens[1:]
        if key == "knot":
            name = " ".join(args)
        elif key == "nodes":
            vals = ints(args, lineno)
            if len(vals) != 1 or vals[0] < 1:
                raise SeedError(f"{source}:{lineno}: 'nodes' takes one positive integer")
            nodes = vals[0]
        elif key == "matrix":
            if nodes is None:
                raise SeedError(f"{source}:{lineno}: 'matrix' before 'nodes'")
            in_matrix = True
            matrix_line = lineno
        elif key in ("a_grading", "q_grading", "x_degree"):
            vectors[key] = ints(args, lineno)
        else:
            raise SeedError(f"{source}:{lineno}: unknown keyword {key!r}")

    if nodes is None:
        raise SeedError(f"{source}: missing 'nodes' line")
    if len(rows) != nodes:
        raise SeedError(f"{source}:{matrix_line}: matrix has {len(rows)} rows, expected {nodes}")
    for i in range(nodes):
        for j in range(i + 1, nodes):
            if rows[i][j] != rows[j][i]:
                raise SeedError(
                    f"{source}: matrix not symmetric at ({i},{j}): {rows[i][j]} != {rows[j][i]}"
                )
    for key in ("a_grading", "q_grading"):
        if key not in vectors:
            raise SeedError(f"{source}: missing '{key}' line")
    if "x_degree" not in vectors:
        warnings.warn(f"{source}: no x_degree line; defaulting to (0, 1, ..., 1)", stacklevel=2)
        vectors["x_degree"] = [0] + [1] * (nodes - 1)
    for key, vec in vectors.items():
        if len(vec) != nodes:
            raise SeedError(f"{source}: '{key}' has {len(vec)} entries, expected {nodes}")
    try:
        aug = AugmentedQuiver(
            GradedQuiver.build(rows, vectors["a_grading"], vectors["q_grading"], vectors["x_degree"]),
            name,
        )
        aug.check_seed_pattern()
    except QuiverError as exc:
        raise SeedError(f"{source}: {exc}") from None
    return aug


def load_seed(path: str | os.PathLike) -> AugmentedQuiver:
    """Read a seed file.

    Format (``#`` starts a comment, tokens are whitespace separated)::

        knot <name>
        nodes <n>
        matrix
        <n rows of n integers>
        a_grading <n ints>
        q_grading <n ints>
        x_degree <n ints>      # optional, defaults to 0 1 ... 1
    """
    p = Path(path)
    return parse_seed(p.read_text(encoding="utf-8"), str(p))


def format_seed(aug: AugmentedQuiver, name: str | None = None) -> str:
    g = aug.base
    lines = [f"knot {name or aug.name or 'unnamed'}", f"nodes {g.size}", "matrix"]
    width = max(len(str(v)) for row in g.quiver.entries for v in row)
    lines += [" ".join(str(v).rjust(width) for v in row) for row in g.quiver.entries]
    lines.append("a_grading " + " ".join(map(str, g.a)))
    lines.append("q_grading " + " ".join(map(str, g.q)))
    lines.append("x_degree " + " ".join(map(str, g.x)))
    return "\n".join(lines) + "\n"


def seed_checksum(aug: AugmentedQuiver) -> str:
    g = aug.base
    payload = repr((g.quiver.entries, g.a, g.q, g.x)).encode()
    return hashlib.sha256(payload).hexdigest()[:16]


def seed_search_path() -> list[Path]:
    dirs = [Path(d) for d in os.environ.get("QUIVERLAT_SEED_DIR", "").split(os.pathsep) if d]
    dirs.append(Path.cwd() / "seeds")
    dirs.append(Path(str(resources.files("quiverlat") / "seeds")))
    return dirs


def find_seed(name: str, explicit: str | os.PathLike | None = None) -> AugmentedQuiver:
    """Resolve a seed by explicit path, then by ``<name>.qseed`` on the search path."""
    if explicit is not None:
        return load_seed(explicit)
    for d in seed_search_path():
        candidate = d / f"{name}.qseed"
        if candidate.is_file():
            return load_seed(candidate)
    if name == "4_1":
        return builtin_seed_4_1()
    raise FileNotFoundError(
        f"no seed file {name}.qseed found (searched {', '.join(map(str, seed_search_path()))})"
    )


# ---------------------------------------------------------------------------
# towers


def step_targets(family: str, step: int, prev_new: tuple[int, ...], rule: str = "explicit") -> tuple[int, ...]:
    """Unlink targets for twist step ``step`` (1-based).

    ``explicit`` uses the printed first-step list and then the nodes created
    by the previous step; ``formula`` uses the closed index formulas.
    """
    if rule == "explicit":
        return FIRST_TARGETS[family] if step == 1 else prev_new
    if rule != "formula":
        raise ValueError(f"unknown tower rule {rule!r}")
    if family == "neg-twist":
        i = step + 1
        return tuple(range(3 * i - 4, 3 * i))
    if family == "pos-twist":
        i = step + 1
        return tuple(range(4 * i - 4, 4 * i))
    if family == "double-twist-3":
        return tuple(range(16 * step - 7, 16 * step + 1))
    raise ValueError(f"no tower for family {family!r}")


def build_tower(
    seed: AugmentedQuiver,
    family: KnotFamilySpec | str,
    steps: int,
    *,
    rule: str = "explicit",
    aux_diag_shift: bool = True,
) -> AugmentedQuiver:
    """Apply ``steps`` rounds of ``U(0, t)`` to ``seed``.

    Within a round the operators act right to left as printed, i.e. in
    increasing target order.
    """
    fam = family.family if isinstance(family, KnotFamilySpec) else family
    if fam not in FIRST_TARGETS:
        raise ValueError(f"no tower for family {fam!r}")
    if steps < 0:
        raise ValueError("steps must be nonnegative")
    current = seed
    prev_new: tuple[int, ...] = ()
    for step in range(1, steps + 1):
        targets = step_targets(fam, step, prev_new, rule)
        start = current.size
        for t in targets:
            if t == 0 or not 0 < t < current.size:
                raise QuiverError(
                    f"step {step}: target {t} out of range for a {current.size}-node quiver"
                )
        for t in sorted(targets):
            current = unlink(current, 0, t, aux_diag_shift=aux_diag_shift)
        prev_new = tuple(range(start, current.size))
    return current
