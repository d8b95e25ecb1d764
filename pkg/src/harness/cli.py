"""
geodeduce command line.
Path: src/harness/cli.py

Exit codes: 0 success, 1 unsolvable or inconsistent, 2 usage error.
"""
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional

import click
from pydantic import ValidationError

from src.config import load_config, resolve_path, section
from src.formal_lang import load_problem
from src.formal_lang.errors import FormalLanguageError
from src.hypergraph.export import dump_graph as write_graph
from src.solver.config import SolverConfig
from src.solver.engine import InconsistentResult, Solution, solve
from src.solver.render import render_solution, result_to_dict
from src.text_parser.parser import parse_text_report
from src.theorems.registry import list_theorems
from src.utils.logger import setup_logging
from src.utils.state_manager import StateManager
from src.validation.report import build_sketch, format_feedback

from .corpus import load_corpus
from .errors import HarnessError
from .refine import Refiner
from .runner import MODES, ScoreOptions, run_key, score_corpus, summarize

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

_FILE = click.Path(exists=True, dir_okay=False, path_type=Path)


def _load(path: Path):
    try:
        return load_problem(path)
    except FormalLanguageError as e:
        line = getattr(e, "line", None)
        where = f"line {line}: " if line else ""
        raise click.BadParameter(f"{where}{e}", param_hint=str(path)) from e


def _solver_config(ctx: click.Context, **overrides) -> SolverConfig:
    try:
        return SolverConfig.from_config(ctx.obj["config"], **overrides)
    except ValidationError as e:
        raise click.BadParameter(str(e)) from e


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.option("--config", "config_path", type=_FILE, help="config.yaml to use")
@click.option("--log-level", type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False),
              help="Override logging.level")
@click.option("-v", "--verbose", is_flag=True, help="Debug logging with logger names")
@click.pass_context
def cli(ctx: click.Context, config_path: Optional[Path], log_level: Optional[str], verbose: bool):
    """Symbolic geometry solver with stepwise solutions."""
    config = load_config(str(config_path) if config_path else None)
    setup_logging(log_level or section(config, "logging").get("level", "INFO"), verbose)
    ctx.obj = {"config": config}


@cli.command("solve")
@click.argument("file", type=_FILE)
@click.option("--json", "as_json", is_flag=True, help="Print the result as JSON")
@click.option("--dump-graph", type=click.Path(dir_okay=False, path_type=Path), help="Write the proof hypergraph as JSON")
@click.option("--timeout", type=float, help="Wall-clock seconds")
@click.option("--max-iter", type=int, help="Deductive/algebraic rounds")
@click.option("--ascii", "ascii_", is_flag=True, help="Plain ASCII notation")
@click.option("--no-deductive", is_flag=True, help="Disable theorem matching")
@click.option("--no-algebraic", is_flag=True, help="Disable equation solving")
@click.pass_context
def solve_cmd(ctx, file, as_json, dump_graph, timeout, max_iter, ascii_, no_deductive, no_algebraic):
    """Solve a formalization file."""
    cfg = _solver_config(
        ctx, timeout=timeout, max_iterations=max_iter, ascii=ascii_ or None,
        deductive=False if no_deductive else None, algebraic=False if no_algebraic else None,
    )
    result = solve(_load(file), cfg)

    if dump_graph is not None and getattr(result, "graph", None) is not None:
        write_graph(result.graph, dump_graph, getattr(result, "subgraph", None))

    if as_json:
        click.echo(json.dumps(result_to_dict(result), indent=2, ensure_ascii=cfg.ascii))
    elif isinstance(result, Solution):
        click.echo(render_solution(result, ascii=cfg.ascii))
    elif isinstance(result, InconsistentResult):
        click.echo(result.feedback)
    else:
        click.echo(f"Unsolvable ({result.reason}){': ' + result.detail if result.detail else ''}")
    ctx.exit(EXIT_OK if isinstance(result, Solution) else EXIT_FAILED)


@cli.command("validate")
@click.argument("file", type=_FILE)
@click.pass_context
def validate_cmd(ctx, file):
    """Check a formalization and print refinement feedback."""
    _, report = build_sketch(_load(file))
    click.echo(format_feedback(report))
    ctx.exit(EXIT_OK if report.consistent else EXIT_FAILED)


@cli.command("parse-text")
@click.argument("file", type=_FILE)
@click.pass_context
def parse_text_cmd(ctx, file):
    """Translate problem text into a draft formalization."""
    report = parse_text_report(file.read_text(encoding="utf-8"))
    for span in report.unmatched:
        click.echo(f"# unmatched: {span}")
    for emission in report.rejected:
        click.echo(f"# rejected: {emission}")
    if report.literals:
        click.echo(report.to_text())
    ctx.exit(EXIT_OK if report.literals else EXIT_FAILED)


@cli.command("score")
@click.argument("corpus", type=click.Path(exists=True, file_okay=False, path_type=Path))
@click.option("--mode", type=click.Choice(MODES), default="completion", show_default=True)
@click.option("--workers", type=click.IntRange(min=1), help="Problems solved in parallel")
@click.option("--attempts", type=click.IntRange(min=1), default=1, show_default=True,
              help="Attempts per problem for Pass@k / Major@k")
@click.option("--seed", type=int, help="Base seed (default harness.seed / GEODEDUCE_SEED)")
@click.option("--refiner", help="Refiner command line")
@click.option("--max-refinements", type=click.IntRange(min=1), help="Refiner rounds per attempt")
@click.option("--timeout", type=float, help="Wall-clock seconds per problem")
@click.option("--out", type=click.Path(dir_okay=False, path_type=Path), help="CSV report path")
@click.option("--resume", is_flag=True, help="Reuse rows recorded by an interrupted run")
@click.pass_context
def score_cmd(ctx, corpus, mode, workers, attempts, seed, refiner, max_refinements, timeout, out, resume):
    """Score a corpus directory."""
    config = ctx.obj["config"]
    harness = section(config, "harness")
    cfg = _solver_config(ctx, timeout=timeout, max_refinements=max_refinements)
    command = refiner or harness.get("refiner_command")
    try:
        opts = ScoreOptions(
            mode=mode,
            attempts=attempts,
            seed=int(seed if seed is not None else harness.get("seed", 0)),
            workers=workers or int(harness.get("workers", 4)),
            refiner=Refiner(command, float(harness.get("refiner_timeout", 120))) if command else None,
            max_refinements=cfg.max_refinements,
            solver=cfg,
        )
        records = load_corpus(corpus)
    except (ValueError, HarnessError) as e:
        raise click.BadParameter(str(e)) from e

    runs = resolve_path(section(config, "paths").get("runs", "./data/runs"))
    state = StateManager(runs / "run_state.json")
    key = run_key(corpus, opts)
    if not resume:
        state.reset(key)

    click.echo("=" * 80)
    click.echo(f"Scoring {len(records)} problem(s) from {corpus} ({mode}, k={attempts}, seed={opts.seed})")
    click.echo("=" * 80)
    try:
        report = score_corpus(records, opts, state, key)
    except HarnessError as e:
        click.echo(f"[ERROR] {e}")
        ctx.exit(EXIT_FAILED)

    out = out or runs / f"{corpus.name}_{mode}.csv"
    out.parent.mkdir(parents=True, exist_ok=True)
    report.to_csv(out, index=False)

    summary = summarize(report)
    for _, row in report.iterrows():
        mark = "[OK]  " if row["correct"] else "[WARN]"
        click.echo(f"{mark} {row['id']}: {row['status']} answer={row['answer']} truth={row['truth']}")
    click.echo("-" * 80)
    click.echo(f"Accuracy:  {summary['accuracy']:.3f}")
    click.echo(f"ARR:       {summary['arr']:.3f}")
    if attempts > 1:
        click.echo(f"Pass@{attempts}:    {summary['pass_at_k']:.3f}")
        click.echo(f"Major@{attempts}:   {summary['major_at_k']:.3f}")
    if "mean_compression" in summary:
        click.echo(f"Minimal/total steps: {summary['mean_compression']:.3f}")
    click.echo(f"[OK] Report written to {out}")
    ctx.exit(EXIT_OK)


@cli.command("list-theorems")
def list_theorems_cmd():
    """List the theorem catalog."""
    for name, statement in list_theorems():
        click.echo(f"{name}: {statement}")


def main(argv: Optional[List[str]] = None) -> int:
    """Run the CLI and return its exit code."""
    try:
        rv = cli.main(args=argv, prog_name="geodeduce", standalone_mode=False)
    except click.UsageError as e:
        e.show()
        return EXIT_USAGE
    except click.ClickException as e:
        e.show()
        return e.exit_code
    except click.Abort:
        click.echo("Aborted!", err=True)
        return EXIT_FAILED
    return rv if isinstance(rv, int) else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
