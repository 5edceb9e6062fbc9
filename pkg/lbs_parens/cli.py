"""
Command line interface for lbs_parens.

These are the available commands::

    $ lbs solve "))(()())())()("
    (()())()
    $ lbs gen --kind uniform --len 1000000 --seed 7 > input.txt
    $ lbs solve --file input.txt --mode offsets
    $ lbs trace "())()("
    $ lbs bench --sizes 1e6,2e6,4e6,6e6,8e6,1e7

Exit codes: 0 success, 1 I/O or resource failure, 2 usage or foreign
characters, 3 benchmark not linear.
"""
import functools
import json
import logging
from typing import List, Optional, Sequence

import click
from tensorboardX import SummaryWriter

from .bench import ALGOS, bench_run, check_linearity, records_to_jsonl, render_table
from .config import BenchConfig
from .core import Nul, ParenError, parse, render, render_forest, validate
from .gen import GenKind, GenSpec, gen_string
from .linear import lbs_linear, lbsl_linear
from .loader import ParenLoader, read_stream
from .oracle import Candidate, TraceRow, check_ceiling, forest_trace, lbs_spec, lbsl_spec

logger = logging.getLogger(__name__)

EXIT_IO = 1
EXIT_USAGE = 2
EXIT_NOT_LINEAR = 3

MODES = ["segment", "length", "tree", "offsets"]


class UsageFailure(click.ClickException):
    exit_code = EXIT_USAGE


def exit_codes(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except ParenError as e:
            raise UsageFailure(str(e))
        except OSError as e:
            raise click.ClickException(str(e))
    return wrapper


def read_input(text: Optional[str], path: Optional[str]) -> str:
    if text is not None and path is not None:
        raise click.UsageError("give either TEXT or --file, not both")
    if path is not None:
        return ParenLoader(path).read()
    if text is not None:
        if text.endswith("\n"):
            text = text[:-1]
        return validate(text)
    return read_stream(click.get_binary_stream("stdin"))


def render_answer(answer: Candidate, segment: str, mode: str) -> str:
    if mode == "segment":
        return segment
    if mode == "length":
        return str(answer.length)
    if mode == "tree":
        return render(answer.tree)
    if mode == "offsets":
        return f"start={answer.start} length={answer.length}"
    raise ValueError(f"unknown mode {mode!r}")


def answer_to_json(answer: Candidate, segment: str) -> dict:
    return {
        "start": answer.start,
        "length": answer.length,
        "segment": segment,
        "tree": render(answer.tree),
    }


def answer_from_json(obj: dict) -> Candidate:
    tree = parse(obj["segment"])
    return Candidate(obj["start"], obj["length"], Nul if tree is None else tree)


def render_trace(rows: Sequence[TraceRow]) -> str:
    """Prefixes with their parseF result and the filtJust column."""
    table = [("inits", "map parseF", "filtJust")]
    for row in rows:
        if row.forest is None:
            table.append((f'"{row.prefix}"', "Nothing", ""))
        else:
            forest = render_forest(row.forest)
            table.append((f'"{row.prefix}"', "J " + forest, forest))

    widths = [max(len(r[i]) for r in table) for i in range(3)]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip() for r in table]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def parse_sizes(ctx, param, value) -> List[int]:
    try:
        sizes = [int(float(part)) for part in value.split(",") if part.strip()]
    except ValueError:
        raise click.BadParameter(f"expected a comma separated list of sizes, got {value!r}")
    if not sizes:
        raise click.BadParameter("no sizes given")
    return sizes


@click.group()
@click.option("-v", "--verbose", count=True, help="INFO with -v, DEBUG with -vv.")
def cli(verbose):
    level = [logging.WARNING, logging.INFO, logging.DEBUG][min(verbose, 2)]
    logging.basicConfig(level=level, format="%(asctime)s %(name)s %(levelname)s %(message)s")


@cli.command()
@click.argument("text", required=False)
@click.option("--file", "-f", "path", type=click.Path(dir_okay=False), help="Read the input from a file.")
@click.option("--algo", type=click.Choice(["linear", "oracle"]), default="linear", show_default=True)
@click.option("--mode", type=click.Choice(MODES), default="segment", show_default=True)
@click.option("--output", "-o", type=click.Choice(["text", "json"]), default="text", show_default=True)
@exit_codes
def solve(text, path, algo, mode, output):
    """Longest balanced segment of TEXT, --file or standard input."""
    s = read_input(text, path)
    logger.debug("solving %d characters with %s", len(s), algo)
    if algo == "oracle":
        check_ceiling(s)

    if mode == "length" and output == "text":
        click.echo(lbsl_linear(s) if algo == "linear" else lbsl_spec(s))
        return

    answer = lbs_linear(s) if algo == "linear" else lbs_spec(s)
    segment = answer.segment(s)
    if output == "json":
        click.echo(json.dumps(answer_to_json(answer, segment)))
    else:
        click.echo(render_answer(answer, segment, mode))


@cli.command()
@click.option("--kind", type=click.Choice([k.value for k in GenKind]), default="uniform", show_default=True)
@click.option("--len", "length", type=int, required=True)
@click.option("--seed", type=int, default=0, show_default=True)
@exit_codes
def gen(kind, length, seed):
    """Print a generated parenthesis string."""
    click.echo(gen_string(GenSpec(kind, length, seed)))


@cli.command()
@click.argument("text", required=False)
@click.option("--file", "-f", "path", type=click.Path(dir_okay=False), help="Read the input from a file.")
@exit_codes
def trace(text, path):
    """parseF of every prefix, one row each."""
    s = read_input(text, path)
    click.echo(render_trace(forest_trace(s)))


@cli.command()
@click.option("--sizes", required=True, callback=parse_sizes, help="Comma separated, e.g. 1e6,2e6,4e6.")
@click.option("--algo", type=click.Choice(sorted(ALGOS)), default="lbsl", show_default=True)
@click.option("--kind", type=click.Choice([k.value for k in GenKind]), default="uniform", show_default=True)
@click.option("--repeats", type=int, default=None)
@click.option("--seed", type=int, default=None)
@click.option("--threshold", type=float, default=None, help="Largest allowed max/min per-char time.")
@click.option("--timeout", type=float, default=None, help="Seconds allowed per timed run.")
@click.option("--logdir", type=click.Path(file_okay=False), default=None, help="Write tensorboard scalars here.")
@click.pass_context
@exit_codes
def bench(ctx, sizes, algo, kind, repeats, seed, threshold, timeout, logdir):
    """Time the sweep over several input sizes and check the scaling is linear."""
    config = BenchConfig().with_overrides(repeats=repeats, seed=seed, threshold=threshold, timeout_s=timeout)
    writer = SummaryWriter(logdir, flush_secs=5) if logdir else None

    try:
        records = bench_run(sizes, algo, kind, config.seed, config.repeats, config, writer)
    finally:
        if writer is not None:
            writer.close()
    report = check_linearity(records, config.threshold)

    click.echo(render_table(records))
    click.echo(records_to_jsonl(records))
    verdict = "linear" if report.passed else "NOT linear"
    click.echo(f"max/min per-char time {report.max_ratio:.2f} (threshold {report.threshold:g}): {verdict}")

    if not all(r.ok for r in records):
        ctx.exit(EXIT_IO)
    if not report.passed:
        ctx.exit(EXIT_NOT_LINEAR)


if __name__ == "__main__":
    cli()
