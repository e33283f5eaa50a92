"""Command-line front end.

Subcommands: ingest, pretokenize, train, encode, analyze, paradigm,
compare.  All I/O is UTF-8; `-` means stdin/stdout.  Exit codes: 0 on
success, 1 on usage errors, 2 on data errors (malformed input files,
infeasible configs), with line-numbered diagnostics where available.

Every command is re-runnable: identical inputs and flags produce
identical outputs.  A flat key=value config file (keys named like the
long flags) can hold defaults; explicit flags win.
"""

import argparse
import contextlib
import random
import sys
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from typing import IO, Iterable, Iterator

from . import __version__, analysis
from .letters import normalize
from .pipelines import PIPELINES, pipeline_pretokenize
from .pretokenize import DEFAULT_MIN_HOST, marked_line
from .segmentation import morphseg_pretokenize, parse_segmentation_file
from .wordpiece import (
    TrainerConfig,
    Vocabulary,
    encode_pretoken,
    load,
    save,
    train_from_counts,
)

USAGE_ERROR = 1
DATA_ERROR = 2


class _Parser(argparse.ArgumentParser):
    """argparse variant whose usage failures exit with code 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE_ERROR, f"{self.prog}: error: {message}\n")


@contextlib.contextmanager
def _open_in(path: str) -> Iterator[IO[str]]:
    if path == "-":
        yield sys.stdin
    else:
        with open(path, "r", encoding="utf-8") as fh:
            yield fh


@contextlib.contextmanager
def _open_out(path: str) -> Iterator[IO[str]]:
    if path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            yield fh


def _chunks(lines: Iterable[str], size: int) -> Iterator[list[str]]:
    chunk: list[str] = []
    for line in lines:
        chunk.append(line)
        if len(chunk) >= size:
            yield chunk
            chunk = []
    if chunk:
        yield chunk


# ----------------------------------------------------------------- config file


def _apply_config_file(parser: argparse.ArgumentParser, path: str, argv: list[str]) -> None:
    """Load key=value defaults; keys mirror long flag names, flags win."""
    actions = {a.dest: a for a in parser._actions}
    defaults = {}
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            key, sep, value = line.partition("=")
            if not sep:
                raise ValueError(f"{path}:{lineno}: expected key=value, got {line!r}")
            dest = key.strip().replace("-", "_")
            value = value.strip()
            action = actions.get(dest)
            if action is None or dest in ("config", "help"):
                raise ValueError(f"{path}:{lineno}: unknown option {key.strip()!r}")
            if isinstance(action, (argparse._StoreTrueAction, argparse._StoreFalseAction)):
                defaults[dest] = value.lower() in ("1", "true", "yes", "on")
            elif action.type is not None:
                try:
                    defaults[dest] = action.type(value)
                except ValueError as exc:
                    raise ValueError(f"{path}:{lineno}: bad value for {key.strip()!r}: {exc}")
            else:
                defaults[dest] = value
            if action.choices is not None and defaults[dest] not in action.choices:
                raise ValueError(
                    f"{path}:{lineno}: value {value!r} not allowed for {key.strip()!r}"
                )
    parser.set_defaults(**defaults)


# ------------------------------------------------------------- shared options


def _add_io(parser, default_in="-", default_out="-"):
    parser.add_argument("-i", "--input", default=default_in, help="input path or - for stdin")
    parser.add_argument("-o", "--output", default=default_out, help="output path or - for stdout")


def _add_method(parser):
    parser.add_argument("--method", choices=PIPELINES, help="pre-tokenization pipeline")


def _add_segmentation(parser):
    parser.add_argument("--seg-file", help="segmentation file for the morphseg pipeline")
    parser.add_argument(
        "--fallback-segmenter",
        action="store_true",
        help="use the deterministic built-in segmenter for morphseg",
    )
    parser.add_argument(
        "--decompose-overlapping",
        action="store_true",
        help="break overlapping affixes (כש, מש, נו) in segmenter output",
    )


def _add_pretokenize_options(parser):
    parser.add_argument("--min-host", type=int, default=DEFAULT_MIN_HOST, metavar="N")
    parser.add_argument("--strip-diacritics", action="store_true")


def _add_trainer_options(parser):
    parser.add_argument("--vocab-size", type=int, metavar="N")
    parser.add_argument("--min-pair-freq", type=int, default=2, metavar="N")
    parser.add_argument("--max-word-length", type=int, default=100, metavar="N")
    parser.add_argument("--marker", default="##", help="continuation marker")
    parser.add_argument("--seed", type=int, default=0)


def _pipeline_options(args) -> dict:
    options = dict(min_host=args.min_host, strip_diacritics=args.strip_diacritics)
    if args.method == "morphseg":
        options["decompose_overlapping"] = args.decompose_overlapping
        options["segmenter"] = None  # fallback segmenter
    return options


def _check_morphseg_source(parser, args, *, allow_seg_file=True):
    if args.method != "morphseg":
        return
    if args.seg_file and args.fallback_segmenter:
        parser.error("--seg-file and --fallback-segmenter are mutually exclusive")
    if not args.seg_file and not args.fallback_segmenter:
        parser.error("morphseg requires --seg-file or --fallback-segmenter")
    if args.seg_file and not allow_seg_file:
        parser.error("this command supports only --fallback-segmenter for morphseg")


# ------------------------------------------------------- worker-pool plumbing

_WORKER: dict = {}


def _init_line_worker(mode: str, method: str, options: dict, vocab_path: str | None,
                      marker: str, want_ids: bool) -> None:
    _WORKER["mode"] = mode
    _WORKER["method"] = method
    _WORKER["options"] = options
    _WORKER["want_ids"] = want_ids
    if vocab_path is not None:
        _WORKER["vocab"] = load(vocab_path, continuation_marker=marker)


def _run_line_chunk(lines: list[str]) -> list[str]:
    method = _WORKER["method"]
    options = _WORKER["options"]
    out = []
    if _WORKER["mode"] == "pretokenize":
        for line in lines:
            out.append(marked_line(pipeline_pretokenize(line, method, **options)))
    else:
        vocab = _WORKER["vocab"]
        for line in lines:
            pieces = []
            for token in pipeline_pretokenize(line, method, **options):
                pieces.extend(encode_pretoken(token, vocab))
            out.append(" ".join(_to_ids(pieces, vocab) if _WORKER["want_ids"] else pieces))
    return out


def _to_ids(pieces: list[str], vocab: Vocabulary) -> list[str]:
    ids = []
    for piece in pieces:
        piece_id = vocab.token_id(piece)
        if piece_id is None:
            raise ValueError(f"piece {piece!r} missing from the vocabulary")
        ids.append(str(piece_id))
    return ids


def _process_lines(args, mode: str, *, vocab_path=None, marker="##", want_ids=False) -> int:
    options = _pipeline_options(args)
    threads = getattr(args, "threads", 1)
    with _open_in(args.input) as fin, _open_out(args.output) as fout:
        lines = (line.rstrip("\n") for line in fin)
        if threads > 1:
            with ProcessPoolExecutor(
                max_workers=threads,
                initializer=_init_line_worker,
                initargs=(mode, args.method, options, vocab_path, marker, want_ids),
            ) as pool:
                for chunk_out in pool.map(_run_line_chunk, _chunks(lines, 2000)):
                    for line in chunk_out:
                        fout.write(line + "\n")
        else:
            _init_line_worker(mode, args.method, options, vocab_path, marker, want_ids)
            for chunk in _chunks(lines, 2000):
                for line in _run_line_chunk(chunk):
                    fout.write(line + "\n")
    return 0


# ------------------------------------------------------------------- commands


def _cmd_ingest(args, parser) -> int:
    if not 0.0 <= args.holdout < 1.0:
        parser.error(f"--holdout must be in [0, 1), got {args.holdout}")
    with _open_in(args.input) as fin:
        lines = []
        for raw in fin:
            line = raw.rstrip("\n")
            if not args.no_nfc:
                line = normalize(line, strip_diacritics=args.strip_diacritics)
            elif args.strip_diacritics:
                from .letters import strip_points

                line = strip_points(line)
            line = " ".join(line.split())
            if line:
                lines.append(line)
    held: set[int] = set()
    if args.holdout > 0:
        indices = list(range(len(lines)))
        random.Random(args.seed).shuffle(indices)
        held = set(indices[: round(args.holdout * len(lines))])
        holdout_path = args.holdout_output
        if not holdout_path:
            if args.output == "-":
                raise ValueError("--holdout-output is required when writing to stdout")
            holdout_path = args.output + ".holdout"
        with _open_out(holdout_path) as fh:
            for i, line in enumerate(lines):
                if i in held:
                    fh.write(line + "\n")
    with _open_out(args.output) as fout:
        for i, line in enumerate(lines):
            if i not in held:
                fout.write(line + "\n")
    return 0


def _cmd_pretokenize(args, parser) -> int:
    _check_morphseg_source(parser, args)
    if args.method == "morphseg" and args.seg_file:
        with _open_in(args.seg_file) as fin, _open_out(args.output) as fout:
            for records in parse_segmentation_file(fin):
                tokens = morphseg_pretokenize(
                    records, decompose_overlapping=args.decompose_overlapping
                )
                fout.write(marked_line(tokens) + "\n")
        return 0
    return _process_lines(args, "pretokenize")


def _stream_counts(args) -> Counter:
    counts: Counter = Counter()
    if args.method == "morphseg" and args.seg_file:
        with _open_in(args.seg_file) as fin:
            for records in parse_segmentation_file(fin):
                for token in morphseg_pretokenize(
                    records, decompose_overlapping=args.decompose_overlapping
                ):
                    counts[token.marked()] += 1
        return counts
    options = _pipeline_options(args)
    with _open_in(args.input) as fin:
        for raw in fin:
            for token in pipeline_pretokenize(raw.rstrip("\n"), args.method, **options):
                counts[token.marked()] += 1
    return counts


def _cmd_train(args, parser) -> int:
    _check_morphseg_source(parser, args)
    counts = _stream_counts(args)
    if not counts:
        raise ValueError("empty pre-token stream")
    config = TrainerConfig(
        vocab_size=args.vocab_size,
        min_pair_frequency=args.min_pair_freq,
        max_word_length=args.max_word_length,
        seed=args.seed,
        continuation_marker=args.marker,
    )
    vocab = train_from_counts(counts, config)
    with _open_out(args.output) as fout:
        save(vocab, fout)
    return 0


def _cmd_encode(args, parser) -> int:
    _check_morphseg_source(parser, args)
    vocab = load(args.vocab, continuation_marker=args.marker)
    if args.method == "morphseg" and args.seg_file:
        with _open_in(args.seg_file) as fin, _open_out(args.output) as fout:
            for records in parse_segmentation_file(fin):
                pieces: list[str] = []
                for token in morphseg_pretokenize(
                    records, decompose_overlapping=args.decompose_overlapping
                ):
                    pieces.extend(encode_pretoken(token, vocab))
                fout.write(" ".join(_to_ids(pieces, vocab) if args.ids else pieces) + "\n")
        return 0
    return _process_lines(
        args, "encode", vocab_path=args.vocab, marker=args.marker, want_ids=args.ids
    )


def _paradigm_specs(args, parser) -> tuple:
    specs = []
    for host in args.paradigm_host or ():
        try:
            specs.append(analysis.full_paradigm(host))
        except ValueError as exc:
            parser.error(str(exc))
    return tuple(specs)


def _cmd_analyze(args, parser) -> int:
    _check_morphseg_source(parser, args, allow_seg_file=False)
    vocab = load(args.vocab, continuation_marker=args.marker)
    options = _pipeline_options(args)
    with _open_in(args.input) as fin:
        corpus = [line.rstrip("\n") for line in fin]
    report = analysis.evaluate(
        corpus, args.method, vocab, paradigms=_paradigm_specs(args, parser), **options
    )
    with _open_out(args.output) as fout:
        if args.json:
            fout.write(analysis.reports_to_json([report]))
        else:
            fout.write(analysis.reports_to_tsv([report]))
    return 0


def _parse_paradigm_parts(parser, args):
    from .inventory import base_suffixes, enumerate_prefix_combinations

    if args.combinations == "all":
        combos = ("",) + tuple(c.surface for c in enumerate_prefix_combinations())
    else:
        combos = tuple("" if c == "bare" else c for c in args.combinations.split(","))
    if args.suffixes == "all":
        suffixes = (None,) + tuple(a.surface for a in base_suffixes())
    else:
        suffixes = tuple(None if s == "none" else s for s in args.suffixes.split(","))
    try:
        return analysis.ParadigmSpec(args.host, combos, suffixes)
    except ValueError as exc:
        parser.error(str(exc))


def _cmd_paradigm(args, parser) -> int:
    spec = _parse_paradigm_parts(parser, args)
    with _open_out(args.output) as fout:
        for form in analysis.generate_paradigm(spec):
            fout.write(form + "\n")
    return 0


def _cmd_compare(args, parser) -> int:
    methods = args.methods.split(",")
    for method in methods:
        if method not in PIPELINES:
            parser.error(f"unknown method {method!r}")
    try:
        sizes = [int(s) for s in args.sizes.split(",")]
    except ValueError:
        parser.error(f"--sizes must be a comma-separated list of integers, got {args.sizes!r}")
    with _open_in(args.input) as fin:
        corpus = [line.rstrip("\n") for line in fin]
    base = TrainerConfig(
        vocab_size=0,
        min_pair_frequency=args.min_pair_freq,
        max_word_length=args.max_word_length,
        seed=args.seed,
        continuation_marker=args.marker,
    )
    reports = analysis.compare(
        corpus,
        methods,
        sizes,
        base_config=base,
        paradigms=_paradigm_specs(args, parser),
        decompose_overlapping=args.decompose_overlapping,
        min_host=args.min_host,
        strip_diacritics=args.strip_diacritics,
    )
    with _open_out(args.output) as fout:
        fout.write(analysis.reports_to_tsv(reports))
    if args.json_output:
        with _open_out(args.json_output) as fout:
            fout.write(analysis.reports_to_json(reports))
    return 0


# ---------------------------------------------------------------- entry point


def build_parser() -> tuple[_Parser, dict]:
    parser = _Parser(prog="hebtok", description=__doc__)
    parser.add_argument("--version", action="version", version=f"hebtok {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    commands = {}

    p = commands["ingest"] = sub.add_parser("ingest", help="normalize a raw corpus")
    _add_io(p)
    p.add_argument("--holdout", type=float, default=0.0, metavar="FRACTION")
    p.add_argument("--holdout-output", metavar="PATH")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--no-nfc", action="store_true", help="skip NFC normalization")
    p.add_argument("--strip-diacritics", action="store_true")

    p = commands["pretokenize"] = sub.add_parser(
        "pretokenize", help="sentences in, marked pre-tokens out"
    )
    _add_io(p)
    _add_method(p)
    _add_segmentation(p)
    _add_pretokenize_options(p)
    p.add_argument("--threads", type=int, default=1)

    p = commands["train"] = sub.add_parser("train", help="train a WordPiece vocabulary")
    _add_io(p)
    _add_method(p)
    _add_segmentation(p)
    _add_pretokenize_options(p)
    _add_trainer_options(p)

    p = commands["encode"] = sub.add_parser("encode", help="encode sentences to subwords")
    _add_io(p)
    _add_method(p)
    _add_segmentation(p)
    _add_pretokenize_options(p)
    p.add_argument("--vocab", metavar="PATH")
    p.add_argument("--marker", default="##")
    p.add_argument("--ids", action="store_true", help="emit token ids instead of strings")
    p.add_argument("--threads", type=int, default=1)

    p = commands["analyze"] = sub.add_parser("analyze", help="corpus metrics for one pipeline")
    _add_io(p)
    _add_method(p)
    _add_segmentation(p)
    _add_pretokenize_options(p)
    p.add_argument("--vocab", metavar="PATH")
    p.add_argument("--marker", default="##")
    p.add_argument("--json", action="store_true")
    p.add_argument("--paradigm-host", action="append", metavar="HOST")

    p = commands["paradigm"] = sub.add_parser("paradigm", help="generate paradigm forms")
    p.add_argument("--host")
    p.add_argument("--combinations", default="all", help='comma list ("bare" = none) or "all"')
    p.add_argument("--suffixes", default="all", help='comma list ("none" = none) or "all"')
    p.add_argument("-o", "--output", default="-")

    p = commands["compare"] = sub.add_parser(
        "compare", help="pipeline-by-vocabulary-size metrics grid"
    )
    _add_io(p)
    p.add_argument("--methods", default=",".join(PIPELINES))
    p.add_argument("--sizes", help="comma-separated vocabulary sizes")
    p.add_argument("--json-output", metavar="PATH")
    p.add_argument("--decompose-overlapping", action="store_true")
    _add_pretokenize_options(p)
    _add_trainer_options_no_size(p)
    p.add_argument("--paradigm-host", action="append", metavar="HOST")

    for name, sp in commands.items():
        sp.add_argument("--config", metavar="PATH", help="key=value defaults file")
    return parser, commands


def _add_trainer_options_no_size(parser):
    parser.add_argument("--min-pair-freq", type=int, default=2, metavar="N")
    parser.add_argument("--max-word-length", type=int, default=100, metavar="N")
    parser.add_argument("--marker", default="##")
    parser.add_argument("--seed", type=int, default=0)


_REQUIRED = {
    "pretokenize": ("method",),
    "train": ("method", "vocab_size"),
    "encode": ("method", "vocab"),
    "analyze": ("method", "vocab"),
    "paradigm": ("host",),
    "compare": ("sizes",),
}


def main(argv: list[str] | None = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    parser, commands = build_parser()
    args = parser.parse_args(argv)
    subparser = commands[args.command]
    try:
        if args.config:
            _apply_config_file(subparser, args.config, argv)
            args = parser.parse_args(argv)
        for dest in _REQUIRED.get(args.command, ()):
            if getattr(args, dest) is None:
                flag = "--" + dest.replace("_", "-")
                subparser.error(f"the following argument is required: {flag}")
        if args.command == "ingest":
            return _cmd_ingest(args, subparser)
        if args.command == "pretokenize":
            return _cmd_pretokenize(args, subparser)
        if args.command == "train":
            return _cmd_train(args, subparser)
        if args.command == "encode":
            return _cmd_encode(args, subparser)
        if args.command == "analyze":
            return _cmd_analyze(args, subparser)
        if args.command == "paradigm":
            return _cmd_paradigm(args, subparser)
        if args.command == "compare":
            return _cmd_compare(args, subparser)
        raise AssertionError(args.command)
    except BrokenPipeError:
        return 0
    except (ValueError, OSError) as exc:
        print(f"hebtok {args.command}: error: {exc}", file=sys.stderr)
        return DATA_ERROR


if __name__ == "__main__":
    sys.exit(main())
