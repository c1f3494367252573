"""Command line front end: ``quiverlat <command> [flags]``."""

from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import dataclass, field
from typing import Sequence, TextIO

from .lattice import PathModel, closed_form_sequence, count_paths, family_path_model, raney, torus_path_model
from .quiver import QuiverError, double_unreduced, drop_auxiliary, frame, mirror, UnreducedQuiver
from .series import Conventions, LimitError, SeriesError, compute_sequence
from .tables import TABULATED_FRAMINGS
from .tower import FAMILIES, KnotFamilySpec, SeedError, build_tower, find_seed, format_seed, seed_checksum

EXIT_OK, EXIT_MISMATCH, EXIT_ERROR = 0, 1, 2


class CliError(Exception):
    def __init__(self, stage: str, message: str) -> None:
        super().__init__(message)
        self.stage = stage


# ---------------------------------------------------------------------------
# helpers


def _conventions(args) -> Conventions:
    return Conventions(
        q_exp=args.q_exp_convention,
        orientation=args.orientation,
        tower_rule=args.tower_rule,
        aux_diag_shift=not args.no_aux_diag_shift,
    )


def _header(out: TextIO, **fields) -> None:
    for key, value in fields.items():
        out.write(f"# {key}={value}\n")


def _check_framing(family: str, p: int, f: int, allow: bool) -> None:
    if f in TABULATED_FRAMINGS.get((family, p), ()):
        return
    if not allow:
        raise CliError(
            "input",
            f"framing {f} is not tabulated for {family} p={p}; pass --allow-untabulated to compute anyway",
        )


def _run(stage: str, fn, *a, **kw):
    try:
        return fn(*a, **kw)
    except (SeedError, FileNotFoundError) as exc:
        raise CliError("seed", str(exc)) from exc
    except QuiverError as exc:
        raise CliError("tower", str(exc)) from exc
    except (SeriesError, LimitError) as exc:
        raise CliError("series", str(exc)) from exc
    except (ValueError, ArithmeticError) as exc:
        raise CliError(stage, str(exc)) from exc


# ---------------------------------------------------------------------------
# commands


def cmd_seq(args, out: TextIO) -> int:
    spec = _run("input", KnotFamilySpec, args.family, args.p)
    _check_framing(args.family, args.p, args.framing, args.allow_untabulated)
    conv = _conventions(args)
    report = _run(
        "series",
        compute_sequence,
        spec,
        args.framing,
        args.kmax,
        conv,
        mode=args.mode,
        workers=args.threads,
        seed_path=args.seed,
    )
    _header(
        out,
        knot=spec.knot_name,
        family=spec.family,
        p=spec.p,
        framing=args.framing,
        mode=args.mode,
        **{k: v for k, v in report.conventions.items()},
        seed_checksum=report.seed_checksum,
    )
    out.write("k\tN_k\n")
    for k, v in enumerate(report.values):
        out.write(f"{k}\t{v}\n")
    return EXIT_OK


def cmd_paths(args, out: TextIO) -> int:
    def model(k: int) -> PathModel:
        if args.family == "torus-2":
            return torus_path_model(args.p, k, args.steps == "END", strict=args.strict)
        m = family_path_model(args.family, args.p, args.framing, k, steps=args.steps)
        return PathModel(m.x, m.y, m.s_num, m.s_den, m.x0, args.strict, m.steps)

    rows = [(k, _run("input", model, k)) for k in range(args.kmax + 1)]
    _header(out, family=args.family, p=args.p, framing=args.framing, strict=args.strict, steps=args.steps)
    out.write("k\tX\tY\tslope\tcount\n")
    for k, m in rows:
        out.write(f"{k}\t{m.x}\t{m.y}\t{m.s_num}/{m.s_den}\t{count_paths(m)}\n")
    return EXIT_OK


def cmd_raney(args, out: TextIO) -> int:
    values = [_run("input", raney, args.M, args.N, k) for k in range(args.kmax + 1)]
    _header(out, M=args.M, N=args.N)
    out.write("k\tR\n")
    for k, v in enumerate(values):
        out.write(f"{k}\t{v}\n")
    return EXIT_OK


@dataclass
class VerificationCell:
    family: str
    p: int
    f: int
    k: int
    quiver: int
    closed_form: int
    path_count: int

    @property
    def agree(self) -> bool:
        return self.quiver == self.closed_form == self.path_count


@dataclass
class VerificationOutcome:
    cells: list[VerificationCell] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.agree for c in self.cells)

    def first_mismatch(self) -> VerificationCell | None:
        return next((c for c in self.cells if not c.agree), None)


def verify(
    family: str,
    ps: Sequence[int],
    framings: Sequence[int] | None,
    kmax: int,
    conventions: Conventions = Conventions(),
    *,
    workers: int = 1,
    seed_path: str | None = None,
) -> VerificationOutcome:
    outcome = VerificationOutcome()
    for p in ps:
        spec = KnotFamilySpec(family, p)
        fs = framings if framings is not None else TABULATED_FRAMINGS.get((family, p), ())
        for f in fs:
            report = compute_sequence(spec, f, kmax, conventions, workers=workers, seed_path=seed_path)
            closed = closed_form_sequence(family, p, f, kmax)
            if closed is None:
                raise ValueError(f"{family} p={p} f={f} has no closed form to verify against")
            for k in range(kmax + 1):
                paths = count_paths(family_path_model(family, p, f, k))
                outcome.cells.append(VerificationCell(family, p, f, k, report.values[k], closed[k], paths))
    return outcome


def cmd_verify(args, out: TextIO) -> int:
    ps = args.p_list or sorted({p for fam, p in TABULATED_FRAMINGS if fam == args.family}, key=abs)
    framings = [args.framing] if args.framing is not None else None
    conv = _conventions(args)
    outcome = _run(
        "series", verify, args.family, ps, framings, args.kmax, conv, workers=args.threads, seed_path=args.seed
    )
    _header(out, family=args.family, **conv.as_dict())
    out.write("p\tf\tk\tquiver\tclosed\tpaths\tok\n")
    for c in outcome.cells:
        mark = "✓" if c.agree else "✗"
        out.write(f"{c.p}\t{c.f}\t{c.k}\t{c.quiver}\t{c.closed_form}\t{c.path_count}\t{mark}\n")
    bad = outcome.first_mismatch()
    if bad is not None:
        n = sum(not c.agree for c in outcome.cells)
        out.write(f"# MISMATCH: {n} cells disagree; first at p={bad.p} f={bad.f} k={bad.k}\n")
        return EXIT_MISMATCH
    out.write(f"# all {len(outcome.cells)} cells agree\n")
    return EXIT_OK


def _write_matrix(out: TextIO, rows) -> None:
    width = max(len(str(v)) for row in rows for v in row)
    for row in rows:
        out.write(" ".join(str(v).rjust(width) for v in row) + "\n")


def cmd_quiver_show(args, out: TextIO) -> int:
    spec = _run("input", KnotFamilySpec, args.family, args.p)
    seed = _run("seed", find_seed, spec.seed_name, args.seed)
    conv = _conventions(args)
    aug = _run("tower", build_tower, seed, spec, spec.tower_steps, rule=conv.tower_rule, aux_diag_shift=conv.aux_diag_shift)
    _header(out, knot=spec.knot_name, stage=args.stage, seed_checksum=seed_checksum(seed))
    if args.stage == "augmented":
        out.write(format_seed(aug, spec.knot_name))
        return EXIT_OK
    reduced = _run("tower", drop_auxiliary, aug)
    if args.stage == "reduced":
        out.write(f"nodes {reduced.size}\nmatrix\n")
        _write_matrix(out, reduced.quiver.entries)
        out.write("a_grading " + " ".join(map(str, reduced.a)) + "\n")
        out.write("q_grading " + " ".join(map(str, reduced.q)) + "\n")
        return EXIT_OK
    u = frame(double_unreduced(reduced), args.framing)
    if conv.orientation == "mirror-matrix":
        u = UnreducedQuiver(mirror(u.matrix), u.a_bar, u.q_bar, u.framing)
    out.write(f"nodes {u.size}\nframing {u.framing}\norientation {conv.orientation}\nmatrix\n")
    _write_matrix(out, u.matrix.entries)
    out.write("a_bar " + " ".join(map(str, u.a_bar)) + "\n")
    out.write("q_bar " + " ".join(map(str, u.q_bar)) + "\n")
    return EXIT_OK


def cmd_tower_build(args, out: TextIO) -> int:
    spec = _run("input", KnotFamilySpec, args.family, args.p)
    seed = _run("seed", find_seed, spec.seed_name, args.seed)
    conv = _conventions(args)
    aug = _run("tower", build_tower, seed, spec, spec.tower_steps, rule=conv.tower_rule, aux_diag_shift=conv.aux_diag_shift)
    text = f"# tower rule {conv.tower_rule}, {spec.tower_steps} step(s) from {seed.name or spec.seed_name}\n"
    text += format_seed(aug, spec.knot_name)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        out.write(text)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser


def _add_common(p: argparse.ArgumentParser, *, framing_default: int | None = 0) -> None:
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--p", type=int, required=True, help="twist parameter")
    p.add_argument("--framing", type=int, default=framing_default)
    p.add_argument("--kmax", type=int, default=4)


def _add_pipeline(p: argparse.ArgumentParser) -> None:
    p.add_argument("--seed", help="seed file (default: search QUIVERLAT_SEED_DIR, ./seeds, bundled)")
    p.add_argument("--q-exp-convention", choices=("qbar", "qbar-minus-diag"), default="qbar")
    p.add_argument("--tower-rule", choices=("explicit", "formula"), default="explicit")
    p.add_argument("--orientation", choices=("mirror-matrix", "as-is"), default="mirror-matrix")
    p.add_argument("--no-aux-diag-shift", action="store_true", help="use the literal q shift for pairs with node 0")
    p.add_argument("--threads", type=int, default=1, help="worker processes for the series expansion")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="quiverlat", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    seq = sub.add_parser("seq", help="N_k(a=0, q=1) for one framed knot")
    _add_common(seq)
    _add_pipeline(seq)
    seq.add_argument("--mode", choices=("a0q1", "full"), default="a0q1")
    seq.add_argument("--allow-untabulated", action="store_true")
    seq.set_defaults(func=cmd_seq)

    paths = sub.add_parser("paths", help="lattice path counts for a family model")
    _add_common(paths)
    strict = paths.add_mutually_exclusive_group()
    strict.add_argument("--strict", dest="strict", action="store_true")
    strict.add_argument("--weak", dest="strict", action="store_false")
    paths.set_defaults(strict=False)
    paths.add_argument("--steps", choices=("EN", "END"), default="EN")
    paths.set_defaults(func=cmd_paths)

    ran = sub.add_parser("raney", help="Raney numbers R_{M,N}(k)")
    ran.add_argument("--M", type=int, required=True)
    ran.add_argument("--N", type=int, required=True)
    ran.add_argument("--kmax", type=int, default=4)
    ran.set_defaults(func=cmd_raney)

    ver = sub.add_parser("verify", help="quiver vs closed form vs path count")
    ver.add_argument("--family", choices=FAMILIES[:3], required=True)
    ver.add_argument("--p", dest="p_list", type=int, action="append", help="repeatable; default all tabulated")
    ver.add_argument("--framing", type=int, default=None, help="default: all tabulated framings")
    ver.add_argument("--kmax", type=int, default=4)
    _add_pipeline(ver)
    ver.set_defaults(func=cmd_verify)

    quiver = sub.add_parser("quiver", help="inspect quivers")
    qsub = quiver.add_subparsers(dest="action", required=True)
    show = qsub.add_parser("show")
    _add_common(show)
    _add_pipeline(show)
    show.add_argument("--stage", choices=("augmented", "reduced", "unreduced"), default="unreduced")
    show.set_defaults(func=cmd_quiver_show)

    tower = sub.add_parser("tower", help="tower operations")
    tsub = tower.add_subparsers(dest="action", required=True)
    tb = tsub.add_parser("build")
    _add_common(tb)
    _add_pipeline(tb)
    tb.add_argument("--out", help="write the seed-format result here")
    tb.set_defaults(func=cmd_tower_build)
    return parser


def main(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    try:
        return args.func(args, out)
    except CliError as exc:
        print(f"error [{exc.stage}]: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except OSError as exc:
        print(f"error [io]: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
