"""Command-line front end.

Exit codes: 0 affirmative verdict or successful construction, 1 negative
verdict, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Sequence

from digraphseq.core import (
    DegreeSequence,
    VertexPermutation,
    apply_permutation,
    degree_sequence_of,
    positive_lex_sort,
)
from digraphseq.errors import (
    CompleteDigraphError,
    DigraphSeqError,
    NoArcError,
    NotThresholdError,
)
from digraphseq.formats import (
    digraph_to_dict,
    format_digraph,
    format_sequence,
    parse_beta,
    parse_digraph,
    parse_sequence,
    sequence_to_list,
    to_dot,
)
from digraphseq.oracle import census_threshold, equivalence_disagreements
from digraphseq.realization import check_fulkerson_chen, check_relaxed, realize
from digraphseq.threshold import (
    construct_from_beta,
    find_forbidden_configuration,
    grow_arc,
    is_threshold,
    shrink_arc,
)

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE = 0, 1, 2

COMMANDS = ("check", "realize", "threshold-check", "from-beta", "shrink", "grow", "census", "verify")
DIGRAPH_COMMANDS = frozenset({"realize", "from-beta", "shrink", "grow"})


@dataclass
class CliConfig:
    command: str
    input_path: str = "-"
    output_format: str = "text"
    trace: bool = False
    relaxed: bool = False
    degrees: bool = False
    n: int | None = None


class UsageError(DigraphSeqError):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _notice(message: str) -> None:
    print(f"note: {message}", file=sys.stderr)


def _emit(cfg: CliConfig, payload: dict, text: str, graph=None) -> None:
    if cfg.output_format == "json":
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    elif cfg.output_format == "dot" and graph is not None:
        sys.stdout.write(to_dot(graph))
    else:
        sys.stdout.write(text)


def _verdict_text(verdict) -> str:
    if verdict.digraphical:
        return "digraphical\n"
    reasons = []
    if verdict.degree_out_of_range:
        reasons.append("degree out of range")
    if verdict.sum_mismatch:
        reasons.append("out/in totals differ")
    if verdict.failing_k is not None:
        reasons.append(f"inequality fails at k={verdict.failing_k}")
    return f"not digraphical: {', '.join(reasons)}\n"


def _sorted_for_check(s: DegreeSequence) -> tuple[DegreeSequence, VertexPermutation, bool]:
    if s.is_positive_lex():
        return s, VertexPermutation.identity(s.n), False
    _notice("input not in positive lexicographic order; sorted before checking")
    sorted_s, perm = positive_lex_sort(s)
    return sorted_s, perm, True


def _cmd_check(cfg: CliConfig) -> int:
    s = parse_sequence(_read(cfg.input_path))
    resorted = False
    if cfg.relaxed:
        if not s.out_nonincreasing():
            s, _, resorted = _sorted_for_check(s)
        verdict = check_relaxed(s)
    else:
        s, _, resorted = _sorted_for_check(s)
        verdict = check_fulkerson_chen(s)
    payload = verdict.to_dict()
    payload["resorted"] = resorted
    _emit(cfg, payload, _verdict_text(verdict))
    return EXIT_OK if verdict.digraphical else EXIT_NEGATIVE


def _cmd_realize(cfg: CliConfig) -> int:
    original = parse_sequence(_read(cfg.input_path))
    s, perm, resorted = _sorted_for_check(original)
    verdict = check_fulkerson_chen(s)
    if not verdict.digraphical:
        _emit(cfg, {"verdict": verdict.to_dict()}, _verdict_text(verdict))
        return EXIT_NEGATIVE
    g, trace = realize(s, keep_history=cfg.trace)
    # vertex i of the input sits at sorted position perm[i]
    g = apply_permutation(g, perm.inverse())
    payload: dict = {"verdict": verdict.to_dict(), "resorted": resorted, "digraph": digraph_to_dict(g)}
    text = format_digraph(g)
    if cfg.trace:
        payload["trace"] = trace.to_dict()
        steps = "".join(
            f"# step {t + 1}: row {st.r1 + 1} -> row {st.r2 + 1}, column {st.column + 1}\n"
            for t, st in enumerate(trace.steps)
        )
        text = f"# t_max = {trace.t_max}\n{steps}{text}"
    _emit(cfg, payload, text, g)
    return EXIT_OK


def _cmd_threshold_check(cfg: CliConfig) -> int:
    g = parse_digraph(_read(cfg.input_path))
    threshold = is_threshold(g)
    witness = find_forbidden_configuration(g)
    payload: dict = {"threshold": threshold, "witness": witness.to_dict() if witness else None}
    line = "threshold" if threshold else f"not threshold: {witness}"
    if cfg.degrees:
        seq = degree_sequence_of(g)
        payload["degrees"] = sequence_to_list(seq)
        text = f"# {line}\n{format_sequence(seq)}"
    else:
        text = line + "\n"
    _emit(cfg, payload, text)
    return EXIT_OK if threshold else EXIT_NEGATIVE


def _cmd_from_beta(cfg: CliConfig) -> int:
    beta = parse_beta(_read(cfg.input_path))
    try:
        g = construct_from_beta(beta)
    except ValueError as exc:
        raise UsageError(f"invalid beta sequence: {exc}") from None
    _emit(cfg, {"beta": beta, "digraph": digraph_to_dict(g)}, format_digraph(g), g)
    return EXIT_OK


def _cmd_arc(cfg: CliConfig) -> int:
    g = parse_digraph(_read(cfg.input_path))
    op, verb = (shrink_arc, "removed") if cfg.command == "shrink" else (grow_arc, "added")
    try:
        (u, v), result = op(g)
    except (NotThresholdError, NoArcError, CompleteDigraphError) as exc:
        _emit(cfg, {"error": str(exc)}, f"{exc}\n")
        return EXIT_NEGATIVE
    payload = {"arc": [u + 1, v + 1], "digraph": digraph_to_dict(result)}
    _emit(cfg, payload, f"# {verb} arc {u + 1} -> {v + 1}\n{format_digraph(result)}", result)
    return EXIT_OK


def _cmd_census(cfg: CliConfig) -> int:
    report = census_threshold(cfg.n)
    text = (
        f"{'n':>3} {'labeled':>9} {'classes':>9} {'n^n/n!':>10} {'n^n':>9}  bounds\n"
        f"{report.n:>3} {report.labeled_count:>9} {report.class_count:>9} "
        f"{float(report.lower_bound):>10.3f} {report.upper_bound:>9}  "
        f"{'ok' if report.bounds_ok else 'VIOLATED'}\n"
    )
    _emit(cfg, report.to_dict(), text)
    return EXIT_OK if report.bounds_ok else EXIT_NEGATIVE


def _cmd_verify(cfg: CliConfig) -> int:
    bad = [d for d in equivalence_disagreements(cfg.n)]
    payload = {
        "n": cfg.n,
        "equivalent": not bad,
        "disagreements": [
            {
                "digraph": digraph_to_dict(d.digraph),
                "unique": d.unique,
                "no_forbidden": d.no_forbidden,
                "adjacency": d.adjacency,
                "fc_equality": d.fc_equality,
            }
            for d in bad
        ],
    }
    if bad:
        text = f"{len(bad)} digraphs on {cfg.n} vertices where the characterizations disagree\n"
        text += "".join(f"  {d}\n" for d in bad)
    else:
        text = f"all four threshold characterizations agree on every digraph with n={cfg.n}\n"
    _emit(cfg, payload, text)
    return EXIT_NEGATIVE if bad else EXIT_OK


HANDLERS = {
    "check": _cmd_check,
    "realize": _cmd_realize,
    "threshold-check": _cmd_threshold_check,
    "from-beta": _cmd_from_beta,
    "shrink": _cmd_arc,
    "grow": _cmd_arc,
    "census": _cmd_census,
    "verify": _cmd_verify,
}


def run(config: CliConfig) -> int:
    if config.command not in HANDLERS:
        print(f"error: unknown command {config.command!r}", file=sys.stderr)
        return EXIT_USAGE
    if config.output_format == "dot" and config.command not in DIGRAPH_COMMANDS:
        print(f"error: dot output is not available for {config.command}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return HANDLERS[config.command](config)
    except DigraphSeqError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="digraphseq",
        description="Digraph degree sequences, realizations and threshold digraphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def with_input(p, what):
        p.add_argument("input", nargs="?", default="-", help=f"{what} file, '-' for stdin")
        p.add_argument("-f", "--format", dest="output_format", default="text",
                       choices=("text", "json", "dot"))
        return p

    p = with_input(sub.add_parser("check", help="test whether a sequence is digraphical"), "sequence")
    p.add_argument("--relaxed", action="store_true",
                   help="require only nonincreasing out-degrees instead of full sorting")
    p = with_input(sub.add_parser("realize", help="construct a realization"), "sequence")
    p.add_argument("--trace", action="store_true", help="include the column-move trace")
    p = with_input(sub.add_parser("threshold-check", help="test whether a digraph is threshold"), "digraph")
    p.add_argument("--degrees", action="store_true", help="also print the degree sequence")
    with_input(sub.add_parser("from-beta", help="threshold digraph from in-degree column recipe"), "beta")
    with_input(sub.add_parser("shrink", help="remove an arc keeping the digraph threshold"), "digraph")
    with_input(sub.add_parser("grow", help="add an arc keeping the digraph threshold"), "digraph")
    for name, what in (("census", "count threshold digraphs"), ("verify", "exhaustively check equivalence")):
        p = sub.add_parser(name, help=what)
        p.add_argument("n", type=int)
        p.add_argument("-f", "--format", dest="output_format", default="text", choices=("text", "json"))
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    config = CliConfig(
        command=args.command,
        input_path=getattr(args, "input", "-"),
        output_format=args.output_format,
        trace=getattr(args, "trace", False),
        relaxed=getattr(args, "relaxed", False),
        degrees=getattr(args, "degrees", False),
        n=getattr(args, "n", None),
    )
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
