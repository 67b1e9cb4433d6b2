"""Command-line front end.

Exit status: 0 success, 1 usage or parse error, 2 resource limit,
3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import TextIO

from plateaurc.counting import count_maximum_rollercoasters
from plateaurc.enumeration import enumerate_maximum
from plateaurc.errors import InvariantViolation, PlateauError, ResourceLimit
from plateaurc.lcr import DEFAULT_MEMORY_BUDGET, MAX_WORDS, compute_lcr_tables
from plateaurc.longest import compute_longest_tables
from plateaurc.neg import build_neg
from plateaurc.oracle import brute_force_enumerate_max
from plateaurc.words import Word, decompose_runs, is_plateau_k_rollercoaster

EXIT_OK, EXIT_USAGE, EXIT_RESOURCE, EXIT_INTERNAL = 0, 1, 2, 3
SUBCOMMANDS = ("longest", "count", "enumerate", "lcr", "validate", "neg", "oracle-check")


class ParseError(PlateauError, ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class MixedFormat(ParseError):
    pass


class UsageError(PlateauError):
    pass


@dataclass
class JobConfig:
    subcommand: str
    k: int
    inputs: list[str] = field(default_factory=list)
    format: str = "json"
    limit: int | None = None
    allow_small_k: bool = False
    memory_budget: int = DEFAULT_MEMORY_BUDGET
    jobs: int = 1
    witness: bool = True
    dot: bool = False

    def validate(self) -> None:
        if self.subcommand not in SUBCOMMANDS:
            raise UsageError(f"unknown subcommand {self.subcommand!r}")
        if self.k < 1:
            raise UsageError(f"k must be >= 1, got {self.k}")
        if self.k < 3 and not self.allow_small_k:
            raise UsageError(f"k={self.k} is below 3; pass --allow-small-k to run it anyway")
        if self.limit is not None and self.limit < 1:
            raise UsageError("--limit must be >= 1")
        if self.jobs < 1:
            raise UsageError("--jobs must be >= 1")


def parse_word_text(text: str) -> list[Word]:
    """One word per nonempty line.

    A line with whitespace is a list of positive integers. A line without
    whitespace and without digits is a string of single-character letters;
    characters are ranked over all such lines of the input, so ``acb``
    becomes ``(1, 3, 2)``. A whitespace-free all-digit line is one integer.
    """
    parsed: list[tuple[int, str, list]] = []
    chars: set[str] = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.rstrip("\r\n")
        if not line.strip():
            continue
        body = line.strip()
        offset = len(line) - len(line.lstrip())
        if any(ch.isspace() for ch in body):
            tokens = []
            col = 0
            for tok in body.split():
                col = body.index(tok, col)
                column = offset + col + 1
                if not tok.isdigit():
                    if any(not ch.isdigit() for ch in tok) and not tok.lstrip("+-").isdigit():
                        raise MixedFormat(f"non-integer token {tok!r} in an integer line", lineno, column)
                    raise ParseError(f"letters must be positive integers, got {tok!r}", lineno, column)
                if int(tok) < 1:
                    raise ParseError(f"letters must be positive integers, got {tok!r}", lineno, column)
                tokens.append(int(tok))
                col += len(tok)
            parsed.append((lineno, "int", tokens))
        elif body.isdigit():
            if int(body) < 1:
                raise ParseError(f"letters must be positive integers, got {body!r}", lineno, offset + 1)
            parsed.append((lineno, "int", [int(body)]))
        else:
            digit = next((p for p, ch in enumerate(body) if ch.isdigit()), None)
            if digit is not None:
                raise MixedFormat("digits mixed with character letters", lineno, offset + digit + 1)
            parsed.append((lineno, "chr", list(body)))
            chars.update(body)
    rank = {ch: r for r, ch in enumerate(sorted(chars), 1)}
    words = []
    for _, mode, tokens in parsed:
        words.append(Word(tokens) if mode == "int" else Word(rank[ch] for ch in tokens))
    return words


def parse_word_file(path) -> list[Word]:
    if str(path) == "-":
        return parse_word_text(sys.stdin.read())
    return parse_word_text(Path(path).read_text())


def _dump(obj) -> str:
    return json.dumps(obj, ensure_ascii=False)


def _longest_job(args):
    w, k, want_witness = args
    if len(w) == 0:
        return 0, None
    tables = compute_longest_tables(w, k)
    m = tables.longest()
    if m == 0 or not want_witness:
        return m, None
    i, xi = next(tables.end_cells(m))
    return m, list(tables.witness(xi, k, i).letters)


def _count_job(args):
    w, k = args
    m = compute_longest_tables(w, k).longest() if len(w) else 0
    return m, count_maximum_rollercoasters(w, k)


def _batch(fn, jobs, workers):
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(fn, jobs))
    return [fn(j) for j in jobs]


def _read_inputs(config: JobConfig) -> list[Word]:
    paths = config.inputs or ["-"]
    words: list[Word] = []
    for p in paths:
        words.extend(parse_word_file(p))
    return words


def _text_letters(letters) -> str:
    return " ".join(map(str, letters))


def run(config: JobConfig, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    try:
        config.validate()
        if config.k < 3:
            print(f"warning: k={config.k} is outside the k >= 3 rollercoaster setting", file=err)
        words = _read_inputs(config)
        return _dispatch(config, words, out)
    except (UsageError, ParseError, OSError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    except ResourceLimit as exc:
        print(f"error: {exc}", file=err)
        return EXIT_RESOURCE
    except (InvariantViolation, AssertionError) as exc:
        print(f"internal error: {exc}", file=err)
        return EXIT_INTERNAL
    except PlateauError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE


def _dispatch(config: JobConfig, words: list[Word], out: TextIO) -> int:
    k = config.k
    sub = config.subcommand
    as_json = config.format == "json"

    if sub == "longest":
        for m, witness in _batch(_longest_job, [(w, k, config.witness) for w in words], config.jobs):
            rec = {"length": m}
            if config.witness:
                rec["witness"] = witness
            if as_json:
                print(_dump(rec), file=out)
            else:
                line = f"length {m}"
                if config.witness:
                    line += "  witness " + ("-" if witness is None else _text_letters(witness))
                print(line, file=out)
        return EXIT_OK

    if sub == "count":
        for m, c in _batch(_count_job, [(w, k) for w in words], config.jobs):
            if as_json:
                print(_dump({"length": m, "count": str(c)}), file=out)
            else:
                print(f"length {m}  count {c}", file=out)
        return EXIT_OK

    if sub == "enumerate":
        if len(words) != 1:
            raise UsageError(f"enumerate takes exactly one word, got {len(words)}")
        for emitted, u in enumerate(enumerate_maximum(words[0], k), 1):
            print(_dump(list(u.letters)) if as_json else _text_letters(u.letters), file=out)
            out.flush()
            if config.limit is not None and emitted >= config.limit:
                break
        return EXIT_OK

    if sub == "lcr":
        if len(words) < 2:
            raise UsageError(f"lcr needs at least 2 words, got {len(words)}")
        if len(words) > MAX_WORDS:
            raise ResourceLimit(f"lcr accepts at most {MAX_WORDS} words, got {len(words)}")
        tables = compute_lcr_tables(words, k, memory_budget=config.memory_budget)
        m = tables.length()
        witness = None
        if m and config.witness:
            xi, index = tables.best_cell()
            first = tables.words[0]
            witness = [first[t[0]] for t in tables.witness_indices(xi, k, index)]
        rec = {"length": m}
        if config.witness:
            rec["witness"] = witness
        if as_json:
            print(_dump(rec), file=out)
        else:
            line = f"length {m}"
            if config.witness:
                line += "  witness " + ("-" if witness is None else _text_letters(witness))
            print(line, file=out)
        return EXIT_OK

    if sub == "validate":
        for w in words:
            runs = decompose_runs(w) if len(w) else []
            rec = {
                "is_rollercoaster": is_plateau_k_rollercoaster(w, k),
                "runs": [
                    {
                        "start": r.start,
                        "end": r.end,
                        "orientation": None if r.orientation is None else r.orientation.name,
                        "distinct": r.distinct,
                    }
                    for r in runs
                ],
            }
            if as_json:
                print(_dump(rec), file=out)
            else:
                spans = ", ".join(
                    f"[{r['start']}..{r['end']}] {r['orientation'] or 'UNARY'} {r['distinct']}" for r in rec["runs"]
                )
                print(f"{'yes' if rec['is_rollercoaster'] else 'no'}  {spans}", file=out)
        return EXIT_OK

    if sub == "neg":
        for n, w in enumerate(words):
            if n:
                print(file=out)
            g = build_neg(w)
            if config.dot:
                out.write(g.to_dot(w))
            else:
                for line in g.to_lines():
                    print(line, file=out)
        return EXIT_OK

    if sub == "oracle-check":
        status = EXIT_OK
        for w in words:
            truth = brute_force_enumerate_max(w, k)
            m = compute_longest_tables(w, k).longest() if len(w) else 0
            c = count_maximum_rollercoasters(w, k)
            listed = [u.letters for u in enumerate_maximum(w, k)]
            emitted = set(listed)
            rec = {
                "agree": m == truth.max_length
                and c == len(truth.max_words)
                and emitted == truth.max_words
                and len(listed) == len(emitted),
                "length": {"dp": m, "oracle": truth.max_length},
                "count": {"dp": str(c), "oracle": str(len(truth.max_words))},
                "enumerate": {
                    "missing": sorted(map(list, truth.max_words - emitted)),
                    "extra": sorted(map(list, emitted - truth.max_words)),
                    "duplicates": len(listed) - len(emitted),
                },
            }
            if not rec["agree"]:
                status = EXIT_INTERNAL
            if as_json:
                print(_dump(rec), file=out)
            else:
                print(f"agree {rec['agree']}  length {m}/{truth.max_length}  count {c}/{len(truth.max_words)}", file=out)
        return status

    raise UsageError(f"unknown subcommand {sub!r}")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("inputs", nargs="*", help="word files, one word per line ('-' or nothing: stdin)")
    common.add_argument("-k", type=int, required=True, help="minimum distinct letters per run")
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--allow-small-k", action="store_true", help="accept k < 3")

    parser = _Parser(prog="plateaurc", description="Plateau-k-rollercoasters in words.")
    sub = parser.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    for name in ("longest", "count"):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("--jobs", type=int, default=1, help="worker processes across input words")
        if name == "longest":
            p.add_argument("--no-witness", dest="witness", action="store_false")
    p = sub.add_parser("enumerate", parents=[common])
    p.add_argument("--limit", type=int, default=None, help="stop after this many rollercoasters")
    p = sub.add_parser("lcr", parents=[common])
    p.add_argument("--memory-budget", type=int, default=DEFAULT_MEMORY_BUDGET, help="bytes")
    p.add_argument("--no-witness", dest="witness", action="store_false")
    sub.add_parser("validate", parents=[common])
    p = sub.add_parser("neg", parents=[common])
    p.add_argument("--dot", action="store_true", help="emit Graphviz DOT instead of edge lines")
    sub.add_parser("oracle-check", parents=[common])
    return parser


def main(argv: list[str] | None = None) -> int:
    ns = build_parser().parse_args(argv)
    config = JobConfig(
        subcommand=ns.subcommand,
        k=ns.k,
        inputs=list(ns.inputs),
        format=ns.format,
        limit=getattr(ns, "limit", None),
        allow_small_k=ns.allow_small_k,
        memory_budget=getattr(ns, "memory_budget", DEFAULT_MEMORY_BUDGET),
        jobs=getattr(ns, "jobs", 1),
        witness=getattr(ns, "witness", True),
        dot=getattr(ns, "dot", False),
    )
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
