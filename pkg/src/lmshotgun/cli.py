"""Command-line front end.

Subcommands: sample, extract, reconstruct, verify, iso, canon, lemmas,
countbound, phase, collide.  Exit codes: 0 success, 1 validation or I/O
failure, 2 threshold failure in check subcommands.  Every stochastic
subcommand requires --seed.  LM_SHOTGUN_THREADS caps internal parallelism
for trial loops (default 1; aggregation is order-insensitive either way).
"""

from __future__ import annotations

import argparse
import os
import sys

from .analysis import (
    check_lemma_4_2,
    check_lemma_4_3,
    check_lemma_5_1,
    check_lemma_5_2,
    evaluate_count_bound,
    phase_csv,
    phase_experiment,
    prescribed_c,
)
from .collisions import collision_search
from .complexes import Complex, read_complex
from .isomorphism import canonical_form, complexes_isomorphic
from .reconstruction import (
    CollectionError,
    collection_from_json,
    collection_to_json,
    extract_collection,
    reconstruct,
    verify_exact,
)
from .reports import ExperimentReport, atomic_write_text, write_json_report
from .sampler import LMParams, resolve_p, sample_lm

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_THRESHOLD = 2


class CliError(Exception):
    """Validation failure surfaced with exit code 1."""


def _add_alpha_p(parser) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--alpha", type=float, help="face probability exponent: p = n^(-alpha)")
    group.add_argument("--p", type=float, help="face probability")


def _parse_grid(raw: str, cast):
    items = [tok for tok in raw.replace(",", " ").split() if tok]
    if not items:
        raise CliError("empty grid")
    return [cast(tok) for tok in items]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lmshotgun",
        description="Shotgun assembly of Linial-Meshulam random complexes",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_sample = sub.add_parser("sample", help="sample Y_d(n, p) to a complex file")
    p_sample.add_argument("--n", type=int, required=True)
    p_sample.add_argument("--d", type=int, required=True)
    _add_alpha_p(p_sample)
    p_sample.add_argument("--seed", type=int, required=True)
    p_sample.add_argument("--out", required=True)

    p_extract = sub.add_parser("extract", help="extract anonymized 1-neighbourhoods")
    p_extract.add_argument("--in", dest="infile", required=True)
    p_extract.add_argument("--seed", type=int, required=True, help="interior scramble seed")
    p_extract.add_argument("--out", required=True)

    p_recon = sub.add_parser("reconstruct", help="reconstruct a complex from a collection")
    p_recon.add_argument("--in", dest="infile", required=True)
    p_recon.add_argument("--out", required=True)
    p_recon.add_argument("--report", help="ambiguity report JSON path")

    p_verify = sub.add_parser("verify", help="exact face-set equality of two complexes")
    p_verify.add_argument("--a", required=True)
    p_verify.add_argument("--b", required=True)

    p_iso = sub.add_parser("iso", help="isomorphism verdict for two complex files")
    p_iso.add_argument("file_a")
    p_iso.add_argument("file_b")

    p_canon = sub.add_parser("canon", help="hex dump of a complex's canonical form")
    p_canon.add_argument("file")

    p_lem = sub.add_parser("lemmas", help="run a statistical check")
    p_lem.add_argument("--which", required=True, choices=["4.2", "4.3", "5.1", "5.2"])
    p_lem.add_argument("--n", type=int, required=True)
    p_lem.add_argument("--d", type=int, required=True)
    _add_alpha_p(p_lem)
    p_lem.add_argument("--c", type=float, help="tail exponent (defaults per check)")
    p_lem.add_argument("--epsilon", type=float, default=0.1)
    p_lem.add_argument("--trials", type=int, required=True)
    p_lem.add_argument("--seed", type=int, required=True)
    p_lem.add_argument("--out", required=True)

    p_count = sub.add_parser("countbound", help="evaluate the counting ratio bound")
    p_count.add_argument("--alpha", type=float, required=True)
    p_count.add_argument("--d", type=int, required=True)
    p_count.add_argument("--epsilon", type=float, default=0.1)
    p_count.add_argument("--c", type=float, help="defaults to the prescribed midpoint")
    p_count.add_argument("--n-grid", required=True)
    p_count.add_argument("--out", required=True)

    p_phase = sub.add_parser("phase", help="reconstruction success-rate matrix")
    p_phase.add_argument("--n-grid", required=True)
    p_phase.add_argument("--alpha-grid", required=True)
    p_phase.add_argument("--d", type=int, required=True)
    p_phase.add_argument("--trials", type=int, required=True)
    p_phase.add_argument("--seed", type=int, required=True)
    p_phase.add_argument("--out", required=True)
    p_phase.add_argument("--report", help="per-trial JSON report path")

    p_coll = sub.add_parser("collide", help="emit a non-reconstructability witness pair")
    p_coll.add_argument("--n", type=int, required=True)
    p_coll.add_argument("--d", type=int, required=True)
    p_coll.add_argument("--mode", choices=["constructed", "exhaustive"], default="constructed")
    p_coll.add_argument("--out", required=True, help="output directory")

    return parser


def _read_complex(path: str) -> Complex:
    try:
        return read_complex(path)
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}") from exc
    except ValueError as exc:
        raise CliError(f"{path}: {exc}") from exc


def cmd_sample(args) -> int:
    try:
        p = resolve_p(args.n, args.alpha, args.p)
        params = LMParams(n=args.n, d=args.d, p=p, seed=args.seed, alpha=args.alpha)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    x = sample_lm(params)
    atomic_write_text(args.out, x.to_text())
    print(f"sampled {len(x.faces)} faces -> {args.out}")
    return EXIT_OK


def cmd_extract(args) -> int:
    x = _read_complex(args.infile)
    coll = extract_collection(x, scramble_seed=args.seed)
    atomic_write_text(args.out, collection_to_json(coll))
    print(f"extracted {len(coll.neighbourhoods)} neighbourhoods -> {args.out}")
    return EXIT_OK


def cmd_reconstruct(args) -> int:
    try:
        with open(args.infile, "r", encoding="utf-8") as fh:
            coll = collection_from_json(fh.read())
    except OSError as exc:
        raise CliError(f"cannot read {args.infile}: {exc}") from exc
    except CollectionError as exc:
        raise CliError(f"{args.infile}: {exc}") from exc
    x, report = reconstruct(coll)
    atomic_write_text(args.out, x.to_text())
    if args.report:
        rep = ExperimentReport(kind="ambiguity-report", config={"input": args.infile})
        rep.aggregates = report.to_dict()
        write_json_report(args.report, rep)
    print(
        f"reconstructed {len(x.faces)} faces "
        f"({report.clean} clean, {len(report.ambiguous_faces)} ambiguous) -> {args.out}"
    )
    return EXIT_OK


def cmd_verify(args) -> int:
    a = _read_complex(args.a)
    b = _read_complex(args.b)
    try:
        equal = verify_exact(a, b)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    print("equal" if equal else "different")
    return EXIT_OK if equal else EXIT_VALIDATION


def cmd_iso(args) -> int:
    a = _read_complex(args.file_a)
    b = _read_complex(args.file_b)
    same = complexes_isomorphic(a, b)
    print("isomorphic" if same else "not isomorphic")
    return EXIT_OK if same else EXIT_VALIDATION


def cmd_canon(args) -> int:
    x = _read_complex(args.file)
    form = canonical_form(x.faces)
    print(form.data.hex())
    return EXIT_OK


def cmd_lemmas(args) -> int:
    kwargs = dict(
        n=args.n,
        d=args.d,
        alpha=args.alpha,
        p=args.p,
        trials=args.trials,
        seed=args.seed,
    )
    try:
        if args.which == "4.2":
            c = args.c
            if c is None:
                if args.alpha is None:
                    raise CliError("--c is required with --p for check 4.2")
                c = max(0.0, 2 * args.alpha - 1) + 0.1
            report = check_lemma_4_2(c=c, **kwargs)
        elif args.which == "4.3":
            report = check_lemma_4_3(**kwargs)
        elif args.which == "5.1":
            report = check_lemma_5_1(epsilon=args.epsilon, c=args.c, **kwargs)
        else:
            report = check_lemma_5_2(epsilon=args.epsilon, **kwargs)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    out = ExperimentReport(kind=f"check-{args.which}", config={**kwargs, "c": args.c, "epsilon": args.epsilon})
    out.aggregates = report.to_dict()
    write_json_report(args.out, out)
    print(f"check {args.which}: {'pass' if report.passed else 'FAIL'} -> {args.out}")
    return EXIT_OK if report.passed else EXIT_THRESHOLD


def cmd_countbound(args) -> int:
    try:
        grid = _parse_grid(args.n_grid, int)
        rows = evaluate_count_bound(
            grid, d=args.d, alpha=args.alpha, epsilon=args.epsilon, c=args.c
        )
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    lines = ["n,alpha,d,epsilon,c,log10_bound,log10_bound_relabelings,valid"]
    for row in rows:
        lines.append(
            f"{row.n},{row.alpha},{row.d},{row.epsilon},{row.c},"
            f"{row.log10_bound},{row.log10_bound_relabelings},{int(row.valid)}"
        )
    atomic_write_text(args.out, "\n".join(lines) + "\n")
    shown_c = args.c if args.c is not None else prescribed_c(args.alpha)
    print(f"count bound at c={shown_c:.6g} over {len(rows)} grid points -> {args.out}")
    return EXIT_OK


def cmd_phase(args) -> int:
    try:
        n_grid = _parse_grid(args.n_grid, int)
        alpha_grid = _parse_grid(args.alpha_grid, float)
        cells = phase_experiment(n_grid, alpha_grid, d=args.d, trials=args.trials, seed=args.seed)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    atomic_write_text(args.out, phase_csv(cells))
    if args.report:
        rep = ExperimentReport(
            kind="phase-experiment",
            config={
                "n_grid": n_grid,
                "alpha_grid": alpha_grid,
                "d": args.d,
                "trials": args.trials,
                "seed": args.seed,
            },
        )
        rep.trials = [dict(r, n=c.n, alpha=c.alpha) for c in cells for r in c.trial_records]
        rep.aggregates = {
            "cells": [
                {
                    "n": c.n,
                    "alpha": c.alpha,
                    "trials": c.trials,
                    "successes": c.successes,
                    "rate": c.rate,
                    "ambiguous_trials": c.ambiguous_trials,
                }
                for c in cells
            ]
        }
        write_json_report(args.report, rep)
    print(f"phase matrix ({len(cells)} cells) -> {args.out}")
    return EXIT_OK


def cmd_collide(args) -> int:
    try:
        witness = collision_search(args.n, args.d, args.mode)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    if witness is None:
        print("none found")
        return EXIT_OK
    os.makedirs(args.out, exist_ok=True)
    atomic_write_text(os.path.join(args.out, "complex_a.txt"), witness.x.to_text())
    atomic_write_text(os.path.join(args.out, "complex_b.txt"), witness.x_tilde.to_text())
    rep = ExperimentReport(
        kind="collision-witness",
        config={"n": args.n, "d": args.d, "mode": args.mode},
        aggregates={
            "centers_checked": witness.centers_checked,
            "per_center_isomorphic": witness.per_center_isomorphic,
            "complexes_isomorphic": witness.complexes_isomorphic,
            "valid": witness.valid,
        },
    )
    write_json_report(os.path.join(args.out, "verification.json"), rep)
    print(f"witness pair -> {args.out}")
    return EXIT_OK


_COMMANDS = {
    "sample": cmd_sample,
    "extract": cmd_extract,
    "reconstruct": cmd_reconstruct,
    "verify": cmd_verify,
    "iso": cmd_iso,
    "canon": cmd_canon,
    "lemmas": cmd_lemmas,
    "countbound": cmd_countbound,
    "phase": cmd_phase,
    "collide": cmd_collide,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
