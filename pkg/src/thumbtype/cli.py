"""Command-line entry point.

Subcommands:
  decode      rank candidate sequences and word suggestions for a tap file
  simulate    run a simulated transcription experiment from a config
  metrics     recompute the summary tables from a directory of trial logs
  validate    check a lexicon file and report ingestion statistics
  calibrate   re-run the motor-noise calibration for a profile preset
  serve       run the interactive session service (and optional web UI)

Exit codes: 0 success, 1 usage error, 2 data error, 3 runtime failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import decoder, metrics
from .geometry import LayoutError, TouchPoint
from .lexicon import LexiconError, load_lexicon, load_shipped_lexicon
from .session import PhraseSetError, load_phrases, shipped_phrases_path
from .simulator import (
    ConfigError,
    ExperimentConfig,
    PROFILES,
    calibrate_motor_sigma,
    default_config_path,
    resolve_layout,
    resolve_profile,
    run_experiment,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_RUNTIME = 3


def _load_lexicon_arg(path: str | None):
    return load_lexicon(path) if path else load_shipped_lexicon()


def _read_taps(path: str) -> list[TouchPoint]:
    taps = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            try:
                if len(parts) != 2:
                    raise ValueError("expected two values")
                taps.append(TouchPoint(float(parts[0]), float(parts[1])))
            except ValueError as exc:
                raise LexiconError(f"{path}:{lineno}: bad tap line {line!r} ({exc})")
    return taps


def cmd_decode(args) -> int:
    layout = resolve_layout(args.layout)
    lex = _load_lexicon_arg(args.lexicon)
    taps = _read_taps(args.taps)
    if not taps:
        print(f"error: no taps in {args.taps}", file=sys.stderr)
        return EXIT_USAGE
    model = decoder.SpatialModel(layout, args.sigma)
    beam = decoder.BeamConfig(args.letters_per_tap, args.max_sequences)

    print(f"# {len(taps)} taps on layout {layout.name!r}, sigma {model.sigma} mm")
    print("candidate sequences:")
    for cand in decoder.candidate_sequences(model, taps, beam)[: args.top]:
        print(f"  {cand.letters}  {cand.prob:.6f}")
    pair = decoder.suggest(model, lex, taps, beam=beam)
    print("suggestions:")
    if pair.is_empty:
        print("  (none)")
    else:
        for slot, s in (("first", pair.first), ("second", pair.second)):
            if s is not None:
                print(f"  {slot}: {s.word}  {s.score:.9g}")
    print(f"literal: {decoder.nearest_letter_string(model, taps)}")
    return EXIT_OK


def cmd_simulate(args) -> int:
    config = ExperimentConfig.load(args.config or default_config_path())
    if args.seed is not None:
        config = ExperimentConfig(
            seed=args.seed,
            conditions=config.conditions,
            lexicon_path=args.lexicon or config.lexicon_path,
            phrases_path=args.phrases or config.phrases_path,
            allow_phrase_reuse=config.allow_phrase_reuse,
        )
    elif args.lexicon or args.phrases:
        config = ExperimentConfig(
            seed=config.seed,
            conditions=config.conditions,
            lexicon_path=args.lexicon or config.lexicon_path,
            phrases_path=args.phrases or config.phrases_path,
            allow_phrase_reuse=config.allow_phrase_reuse,
        )
    result = run_experiment(config, out_dir=args.out)
    print(result.summary.to_text(), end="")
    if args.out:
        print(f"\nwrote {len(result.logs)} logs and summaries under {args.out}")
    return EXIT_OK


def cmd_metrics(args) -> int:
    logs, errors = metrics.load_log_dir(args.logs)
    for err in errors:
        print(f"warning: skipped {err}", file=sys.stderr)
    if not logs:
        print("error: no readable logs", file=sys.stderr)
        return EXIT_DATA
    summary = metrics.summarize(logs)
    if args.csv:
        print(summary.to_csv(), end="")
    else:
        print(summary.to_text(), end="")
    return EXIT_OK


def cmd_validate(args) -> int:
    lex = _load_lexicon_arg(args.lexicon)
    rep = lex.report
    total = sum(e.lm_prob for e in lex)
    print(f"entries:            {rep.kept}")
    print(f"dropped malformed:  {rep.dropped_malformed}")
    print(f"dropped non-letter: {rep.dropped_nonletter}")
    print(f"merged duplicates:  {rep.merged_duplicates}")
    print(f"probability sum:    {total!r}")
    ok = abs(total - 1.0) <= 1e-9
    print(f"normalization:      {'ok' if ok else 'FAILED'}")
    return EXIT_OK if ok else EXIT_DATA


def cmd_calibrate(args) -> int:
    lex = _load_lexicon_arg(args.lexicon)
    phrases = load_phrases(args.phrases or shipped_phrases_path(), lex).phrases
    profile = resolve_profile(args.profile)
    layout = resolve_layout(args.layout)
    result = calibrate_motor_sigma(
        profile,
        layout,
        lex,
        phrases,
        target_cer_pct=args.target_cer,
        seed=args.seed,
        trials=args.trials,
    )
    print(f"profile:        {profile.name}")
    print(f"target CER:     {args.target_cer}%")
    print(f"motor sigma:    {result.motor_sigma_mm} mm")
    print(f"achieved CER:   {result.mean_cer_pct:.2f}% over {result.trials} trials")
    return EXIT_OK


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    layout = resolve_layout(args.layout)
    lex = _load_lexicon_arg(args.lexicon)
    app = create_app(layout, lex, sigma=args.sigma, log_dir=args.out, ui_dir=args.ui_dir)
    host, _, port = args.address.rpartition(":")
    uvicorn.run(app, host=host or "127.0.0.1", port=int(port))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="thumbtype", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decode", help="decode a tap-coordinate file")
    p.add_argument("taps", help="file with one 'x y' mm pair per line")
    p.add_argument("--layout", default="enlarged")
    p.add_argument("--lexicon", default=None)
    p.add_argument("--sigma", type=float, default=None)
    p.add_argument("--letters-per-tap", type=int, default=12)
    p.add_argument("--max-sequences", type=int, default=500)
    p.add_argument("--top", type=int, default=10, help="candidate sequences to print")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("simulate", help="run a simulated experiment")
    p.add_argument("--config", default=None, help="experiment JSON (default: shipped)")
    p.add_argument("--seed", type=int, default=None, help="override the config seed")
    p.add_argument("--lexicon", default=None)
    p.add_argument("--phrases", default=None)
    p.add_argument("--out", default=None, help="directory for logs and summaries")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("metrics", help="recompute summaries from trial logs")
    p.add_argument("logs", help="directory of .jsonl trial logs")
    p.add_argument("--csv", action="store_true", help="emit CSV instead of the text table")
    p.set_defaults(func=cmd_metrics)

    p = sub.add_parser("validate", help="validate a lexicon file")
    p.add_argument("--lexicon", default=None, help="TSV path (default: shipped)")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("calibrate", help="re-derive a profile's motor sigma")
    p.add_argument("--profile", default="hmd", choices=sorted(PROFILES))
    p.add_argument("--layout", default=None)
    p.add_argument("--lexicon", default=None)
    p.add_argument("--phrases", default=None)
    p.add_argument("--target-cer", type=float, default=8.5)
    p.add_argument("--trials", type=int, default=240)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_calibrate)

    p = sub.add_parser("serve", help="serve the interactive session API")
    p.add_argument("--address", default="127.0.0.1:8077")
    p.add_argument("--layout", default="enlarged")
    p.add_argument("--lexicon", default=None)
    p.add_argument("--sigma", type=float, default=None)
    p.add_argument("--out", default=None, help="directory to flush session logs into")
    p.add_argument("--ui-dir", default=None, help="static web UI bundle to mount at /")
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.command == "calibrate" and args.layout is None:
        args.layout = "enlarged" if args.profile == "hmd" else "original"
    try:
        return args.func(args)
    except (LexiconError, PhraseSetError, ConfigError, LayoutError, metrics.MetricError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except KeyboardInterrupt:
        return EXIT_RUNTIME
    except Exception as exc:  # last-resort: report, do not traceback at users
        print(f"internal error: {exc.__class__.__name__}: {exc}", file=sys.stderr)
        return EXIT_RUNTIME


if __name__ == "__main__":
    raise SystemExit(main())
