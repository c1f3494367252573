"""Exact truncated expansion of quiver generating series.

Every coefficient of x^l is kept as ``numerator / (q^2;q^2)_l`` while
summing, using Gaussian multinomials to put all compositions of ``l`` over
that single denominator.  Results are exposed as reduced ``QRat`` values.
"""

from __future__ import annotations

import logging
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Mapping, Sequence

from .qpoly import ONE, QPoly, QRat, gauss_multinomial, poch_q2, q2_binomial
from .quiver import GradedQuiver, SymQuiver, UnreducedQuiver, double_unreduced, drop_auxiliary, frame, mirror
from .tower import KnotFamilySpec, SeedError, build_tower, find_seed, seed_checksum

log = logging.getLogger(__name__)

ALaurent = dict  # a-exponent -> QRat, zero values never stored

KINDS = ("default-reduced", "default-unreduced", "SP1", "SP2")
Q_EXP_CONVENTIONS = ("qbar", "qbar-minus-diag")
ORIENTATIONS = ("mirror-matrix", "as-is")
A_MODES = ("full", "a0-only")


class SeriesError(ArithmeticError):
    """Raised when a specialization or limit is not well defined."""


class LimitError(SeriesError):
    pass


def _sgn(x: int) -> int:
    return (x > 0) - (x < 0)


# ---------------------------------------------------------------------------
# specializations


@dataclass(frozen=True)
class SubstitutionAssignment:
    """``x_i -> sign_i * a^{a_exp_i} * q^{q_exp_i} * x^{x_exp_i}``."""

    signs: tuple[int, ...]
    a_exps: tuple[int, ...]
    q_exps: tuple[int, ...]
    x_exps: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.signs)
        if not (len(self.a_exps) == len(self.q_exps) == len(self.x_exps) == n):
            raise ValueError("substitution vectors have different lengths")
        if any(s not in (1, -1) for s in self.signs):
            raise ValueError("signs must be +1 or -1")
        if any(x < 1 for x in self.x_exps):
            raise ValueError("x exponents must be positive")

    def __len__(self) -> int:
        return len(self.signs)

    def permuted(self, perm: Sequence[int]) -> SubstitutionAssignment:
        return SubstitutionAssignment(
            tuple(self.signs[i] for i in perm),
            tuple(self.a_exps[i] for i in perm),
            tuple(self.q_exps[i] for i in perm),
            tuple(self.x_exps[i] for i in perm),
        )


def make_substitution(
    kind: str,
    quiver: GradedQuiver | UnreducedQuiver,
    *,
    f: int | None = None,
    p1: int | None = None,
    p2: int = 0,
    q_exp_convention: str = "qbar",
) -> SubstitutionAssignment:
    """Build the monomial specialization of the quiver generators.

    ``default-reduced`` takes a ``GradedQuiver``; the other kinds take an
    ``UnreducedQuiver`` and default ``f`` to its recorded framing.
    """
    if kind == "default-reduced":
        if not isinstance(quiver, GradedQuiver):
            raise TypeError("default-reduced needs a GradedQuiver")
        diag = quiver.quiver.diagonal()
        n = quiver.size
        return SubstitutionAssignment(
            (1,) * n,
            quiver.a,
            tuple(q - c for q, c in zip(quiver.q, diag)),
            quiver.x,
        )
    if not isinstance(quiver, UnreducedQuiver):
        raise TypeError(f"{kind} needs an UnreducedQuiver")
    if kind not in KINDS:
        raise ValueError(f"unknown substitution kind {kind!r}")
    if q_exp_convention not in Q_EXP_CONVENTIONS:
        raise ValueError(f"unknown q exponent convention {q_exp_convention!r}")
    if f is None:
        f = quiver.framing
    a_bar, q_bar = quiver.a_bar, quiver.q_bar
    diag = quiver.matrix.diagonal()
    n = quiver.size
    ones = (1,) * n
    if kind == "default-unreduced":
        return SubstitutionAssignment(ones, a_bar, tuple(q - c for q, c in zip(q_bar, diag)), ones)
    fsign = -1 if f % 2 else 1
    if kind == "SP1":
        a_max = max(a_bar)
        shifted = tuple(a_max - a for a in a_bar)
        signs = tuple(fsign * (-1 if a % 2 else 1) for a in shifted)
        return SubstitutionAssignment(signs, shifted, (0,) * n, ones)
    # SP2
    if not p1:
        raise ValueError("SP2 needs a nonzero p1")
    s = _sgn(p1)
    base = -s  # the monomial base is (-sgn(p1) * a)
    prefactor = 2 * (abs(p1) + s) + 2 * (p2 + 1) + 1
    signs = []
    a_exps = []
    for a in a_bar:
        e = -s * a
        signs.append(fsign * (base ** abs(e) if base < 0 else 1))
        a_exps.append(e + prefactor)
    if q_exp_convention == "qbar":
        q_exps = tuple(q + 2 * p2 for q in q_bar)
    else:
        q_exps = tuple(q - c + 2 * p2 for q, c in zip(q_bar, diag))
    return SubstitutionAssignment(tuple(signs), tuple(a_exps), q_exps, ones)


# ---------------------------------------------------------------------------
# partition series


@dataclass(frozen=True)
class TruncatedXSeries:
    order: int
    coeffs: tuple[ALaurent, ...]
    # c_l * (q^2;q^2)_l as a-exponent -> QPoly, kept to avoid re-deriving it
    _numerators: tuple[dict, ...] | None = field(default=None, compare=False, repr=False)

    def __getitem__(self, l: int) -> ALaurent:
        return self.coeffs[l]

    def numerators(self) -> tuple[dict, ...]:
        """Per-coefficient numerators over ``(q^2;q^2)_l``."""
        if self._numerators is not None:
            return self._numerators
        out = []
        for l, c in enumerate(self.coeffs):
            d = poch_q2(l)
            out.append({a: r.num * d.exact_div(r.den) for a, r in c.items()})
        return tuple(out)


def _weighted_vectors(weights: Sequence[int], budget: int) -> Iterator[tuple[int, ...]]:
    """All ``d >= 0`` with ``sum(d_i * weights_i) <= budget``."""
    n = len(weights)
    d = [0] * n

    def rec(i: int, left: int):
        if i == n:
            yield tuple(d)
            return
        w = weights[i]
        for v in range(left // w + 1):
            d[i] = v
            yield from rec(i + 1, left - v * w)
        d[i] = 0

    yield from rec(0, budget)


def _accumulate(args) -> dict:
    """Sum signed q-monomials per (l, a-exponent, part multiset)."""
    matrix, signs, a_exps, q_exps, x_exps, vectors = args
    n = len(matrix)
    acc: dict = defaultdict(lambda: defaultdict(int))
    for d in vectors:
        nz = [i for i in range(n) if d[i]]
        quad = 0
        for i in nz:
            row = matrix[i]
            di = d[i]
            quad += row[i] * di * di
            for j in nz:
                if j > i:
                    quad += 2 * row[j] * di * d[j]
        sign = -1 if quad % 2 else 1
        a = 0
        qexp = quad
        l = 0
        for i in nz:
            di = d[i]
            if signs[i] < 0 and di % 2:
                sign = -sign
            a += a_exps[i] * di
            qexp += q_exps[i] * di
            l += x_exps[i] * di
        parts = tuple(sorted(d[i] for i in nz))
        acc[(l, a, parts)][qexp] += sign
    return {k: dict(v) for k, v in acc.items()}


def _merge(target: dict, part: dict) -> None:
    for key, poly in part.items():
        slot = target.setdefault(key, {})
        for e, c in poly.items():
            slot[e] = slot.get(e, 0) + c


def partition_series(
    c: SymQuiver,
    subst: SubstitutionAssignment,
    order: int,
    a_mode: str = "full",
    *,
    workers: int = 1,
) -> TruncatedXSeries:
    """Expand the specialized quiver series up to ``x^order``.

    In ``a0-only`` mode only compositions with total a-exponent zero are
    kept; a node whose a-exponent is negative makes that mode ill defined
    and raises ``SeriesError``.
    """
    if len(subst) != c.size:
        raise ValueError(f"substitution has {len(subst)} entries for a {c.size}-node quiver")
    if a_mode not in A_MODES:
        raise ValueError(f"unknown a mode {a_mode!r}")
    if order < 0:
        raise ValueError("truncation order must be nonnegative")
    active = list(range(c.size))
    if a_mode == "a0-only":
        neg = [i for i in active if subst.a_exps[i] < 0 and subst.x_exps[i] <= order]
        if neg:
            raise SeriesError(
                f"negative total a-exponent at a=0: nodes {neg} have a-exponents "
                f"{[subst.a_exps[i] for i in neg]}"
            )
        active = [i for i in active if subst.a_exps[i] == 0]
    active = [i for i in active if subst.x_exps[i] <= order]

    sub_matrix = tuple(tuple(c[i, j] for j in active) for i in active)
    pick = lambda v: tuple(v[i] for i in active)  # noqa: E731
    vectors = list(_weighted_vectors(pick(subst.x_exps), order)) if active else [()]
    log.debug("partition_series: %d active nodes, %d compositions", len(active), len(vectors))

    base = (sub_matrix, pick(subst.signs), pick(subst.a_exps), pick(subst.q_exps), pick(subst.x_exps))
    acc: dict = {}
    if workers > 1 and len(vectors) > 1:
        chunks = [vectors[k::workers] for k in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_accumulate, [base + (ch,) for ch in chunks]):
                _merge(acc, part)
    else:
        _merge(acc, _accumulate(base + (vectors,)))

    numerators: list[dict] = [dict() for _ in range(order + 1)]
    for (l, a, parts), poly in sorted(acc.items()):
        term = QPoly.from_dict(poly)
        if term.is_zero():
            continue
        term = term * gauss_multinomial(l, parts)
        bucket = numerators[l]
        bucket[a] = bucket[a] + term if a in bucket else term
    numerators = [{a: p for a, p in sorted(b.items()) if not p.is_zero()} for b in numerators]
    coeffs = tuple(
        {a: QRat(p, poch_q2(l)) for a, p in b.items()} for l, b in enumerate(numerators)
    )
    if coeffs[0] != {0: QRat(1)}:
        raise SeriesError(f"constant term of a partition series must be 1, got {coeffs[0]}")
    return TruncatedXSeries(order, coeffs, tuple(numerators))


# ---------------------------------------------------------------------------
# ratio series and limits


def _a_mul(x: dict, y: dict) -> dict:
    out: dict = {}
    for ea, pa in x.items():
        for eb, pb in y.items():
            e = ea + eb
            prod = pa * pb
            out[e] = out[e] + prod if e in out else prod
    return out


def _a_add(x: dict, y: dict, scale: int = 1) -> dict:
    out = dict(x)
    for e, p in y.items():
        p = p * scale if scale != 1 else p
        out[e] = out[e] + p if e in out else p
    return {e: p for e, p in out.items() if not p.is_zero()}


def ratio_y(series: TruncatedXSeries) -> TruncatedXSeries:
    """``y(x) = P(q x) / P(q^-1 x)`` truncated at the order of ``series``.

    With ``c_l = N_l / D_l`` and ``D_l = (q^2;q^2)_l`` every ``y_l * D_l`` is a
    Laurent polynomial, because ``D_l / (D_m D_{l-m})`` is a q^2-binomial.
    """
    if series.coeffs[0] != {0: QRat(1)}:
        raise SeriesError("ratio_y needs a series with constant term 1")
    nums = series.numerators()
    ys: list[dict] = [{0: ONE}]
    for l in range(1, series.order + 1):
        acc = {a: p.shift(l) for a, p in nums[l].items()}
        for m in range(1, l + 1):
            if not nums[m] or not ys[l - m]:
                continue
            b_m = {a: p.shift(-m) for a, p in nums[m].items()}
            prod = _a_mul(b_m, ys[l - m])
            binom = q2_binomial(l, m)
            acc = _a_add(acc, {a: p * binom for a, p in prod.items()}, -1)
        ys.append({a: p for a, p in sorted(acc.items()) if not p.is_zero()})
    coeffs = tuple({a: QRat(p, poch_q2(l)) for a, p in y.items()} for l, y in enumerate(ys))
    return TruncatedXSeries(series.order, coeffs, tuple(ys))


def limit_q1(r: QRat) -> int:
    """Exact value at ``q = 1`` after cancelling common ``(q - 1)`` factors."""
    num, den = r.num, r.den
    while num.at_one() == 0 and den.at_one() == 0 and not num.is_zero():
        num = num.div_q_minus_one()
        den = den.div_q_minus_one()
    if num.is_zero():
        return 0
    d = den.at_one()
    if d == 0:
        raise LimitError(f"pole at q=1 in {r}")
    value = Fraction(num.at_one(), d)
    if value.denominator != 1:
        raise LimitError(f"limit {value} at q=1 is not an integer")
    return int(value)


def limit_q1_a0(y: TruncatedXSeries) -> list[int]:
    """Integers ``N_l(a=0, q=1)`` for every coefficient of ``y``."""
    out = []
    for l, c in enumerate(y.coeffs):
        neg = sorted(e for e in c if e < 0)
        if neg:
            raise LimitError(f"x^{l} coefficient has negative a-exponents {neg}; a=0 is singular")
        out.append(limit_q1(c[0]) if 0 in c else 0)
    return out


@dataclass
class PositivityReport:
    l: int
    ok: bool
    violations: list[tuple] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok


def check_positivity(y_l: Mapping[int, QRat], l: int = -1) -> PositivityReport:
    """Check that every ``a^i`` part of ``y_l`` is a Laurent polynomial in q
    with positive integer coefficients.  Violations are ``(i, j, l, coeff)``;
    a non-Laurent part is reported with ``j = None``."""
    violations: list[tuple] = []
    for i, r in sorted(y_l.items()):
        if not r.is_laurent():
            violations.append((i, None, l, str(r)))
            continue
        for j, coeff in sorted(r.num.to_dict().items()):
            if coeff <= 0:
                violations.append((i, j, l, coeff))
    return PositivityReport(l, not violations, violations)


# ---------------------------------------------------------------------------
# full pipeline


@dataclass(frozen=True)
class Conventions:
    """Convention flags for the open choices in the pipeline; recorded with each result."""

    q_exp: str = "qbar"
    orientation: str = "mirror-matrix"
    tower_rule: str = "explicit"
    aux_diag_shift: bool = True

    def __post_init__(self) -> None:
        if self.q_exp not in Q_EXP_CONVENTIONS:
            raise ValueError(f"unknown q exponent convention {self.q_exp!r}")
        if self.orientation not in ORIENTATIONS:
            raise ValueError(f"unknown orientation {self.orientation!r}")
        if self.tower_rule not in ("explicit", "formula"):
            raise ValueError(f"unknown tower rule {self.tower_rule!r}")

    def as_dict(self) -> dict[str, object]:
        return {
            "q_exp": self.q_exp,
            "orientation": self.orientation,
            "tower_rule": self.tower_rule,
            "aux_diag_shift": self.aux_diag_shift,
        }


@dataclass
class SequenceReport:
    family: str
    p: int
    framing: int
    kmax: int
    values: list[int]
    conventions: dict[str, object]
    seed_checksum: str = ""
    mode: str = "a0q1"
    closed_form_match: bool | None = None
    path_count_match: bool | None = None

    def __post_init__(self) -> None:
        if self.values and self.values[0] != 1:
            raise SeriesError(f"N_0 must be 1, got {self.values[0]}")


def knot_unreduced(
    spec: KnotFamilySpec,
    f: int,
    conventions: Conventions = Conventions(),
    seed_path: str | None = None,
) -> tuple[UnreducedQuiver, str]:
    """Seed -> tower -> drop node 0 -> doubling -> framing -> orientation."""
    seed = find_seed(spec.seed_name, seed_path)
    if seed.name and seed.name != spec.seed_name:
        raise SeedError(f"{spec.family} towers start from {spec.seed_name}, got a seed for {seed.name}")
    aug = build_tower(
        seed,
        spec,
        spec.tower_steps,
        rule=conventions.tower_rule,
        aux_diag_shift=conventions.aux_diag_shift,
    )
    u = frame(double_unreduced(drop_auxiliary(aug)), f)
    if conventions.orientation == "mirror-matrix":
        u = UnreducedQuiver(mirror(u.matrix), u.a_bar, u.q_bar, u.framing)
    return u, seed_checksum(seed)


def compute_sequence(
    spec: KnotFamilySpec,
    f: int,
    kmax: int,
    conventions: Conventions = Conventions(),
    *,
    mode: str = "a0q1",
    workers: int = 1,
    seed_path: str | None = None,
) -> SequenceReport:
    """``N_0 .. N_kmax`` at ``a = 0``, ``q = 1`` for one framed knot."""
    from .lattice import closed_form_sequence, path_count_sequence

    if spec.family == "torus-2":
        raise SeriesError("torus-2 knots have no quiver in this toolkit; use the path model")
    if mode not in ("a0q1", "full"):
        raise ValueError(f"unknown mode {mode!r}")
    u, checksum = knot_unreduced(spec, f, conventions, seed_path)
    subst = make_substitution("SP2", u, f=f, p1=spec.p1, p2=spec.p2, q_exp_convention=conventions.q_exp)
    series = partition_series(
        u.matrix, subst, kmax, "a0-only" if mode == "a0q1" else "full", workers=workers
    )
    values = limit_q1_a0(ratio_y(series))
    report = SequenceReport(
        spec.family, spec.p, f, kmax, values, conventions.as_dict(), checksum, mode
    )
    closed = closed_form_sequence(spec.family, spec.p, f, kmax)
    if closed is not None:
        report.closed_form_match = closed == values
        report.path_count_match = path_count_sequence(spec.family, spec.p, f, kmax) == values
    return report
