import json
import shlex
import shutil
import sys
from fractions import Fraction
from pathlib import Path

import pandas as pd
import pytest
from click.testing import CliRunner

sys.path.insert(0, str(Path(__file__).parent.parent))

from src.formal_lang import Formalization, load_problem, parse_logic_form
from src.harness.cli import cli, main
from src.harness.corpus import load_corpus
from src.harness.errors import CorpusError, RefinerUnavailable
from src.harness.refine import GiveUp, Refiner, extract_formalization, refine_loop
from src.harness.runner import COMPLETION, ScoreOptions, score_corpus, summarize
from src.harness.scoring import jaccard, majority_answer, score_choice, score_completion
from src.solver.engine import Solution, solve
from src.utils.state_manager import StateManager

ROOT = Path(__file__).parent.parent
DESK_CORPUS = ROOT / "data" / "corpus"
INCONSISTENT_CORPUS = ROOT / "data" / "corpus_inconsistent"
REFINERS = Path(__file__).parent / "refiners"

COLLINEAR_DRAFT = """
Triangle(A,B,C)
PointLiesOnLine(B,Line(A,C))
Equals(LengthOf(Line(A,B)),4)
Equals(LengthOf(Line(B,C)),7)
Find(LengthOf(Line(A,C)))
"""


def _refiner(name):
    return Refiner([sys.executable, str(REFINERS / f"{name}.py")], timeout=60)


def _lits(*texts):
    return [parse_logic_form(t) for t in texts]


@pytest.fixture
def small_corpus(tmp_path):
    root = tmp_path / "small"
    for name in ("01_parallel_similar", "02_right_triangle_hypotenuse", "07_segment_addition"):
        shutil.copytree(DESK_CORPUS / name, root / name)
    return root


@pytest.fixture
def cli_config(tmp_path):
    path = tmp_path / "config.yaml"
    path.write_text(
        "paths:\n"
        f"  runs: {json.dumps(str(tmp_path / 'runs'))}\n"
        "harness:\n"
        "  workers: 2\n"
        "  seed: 0\n"
        "logging:\n"
        "  level: ERROR\n",
        encoding="utf-8",
    )
    return path


# scoring

def test_jaccard_examples():
    a, b, c = _lits("Triangle(A,B,C)", "Equals(x,2)", "Parallel(Line(A,B),Line(C,D))")
    assert jaccard([a, b], [b, a]) == 1
    assert jaccard([a], [c]) == 0
    assert jaccard([a, b], [b, c]) == Fraction(1, 3)
    assert jaccard([], []) == 1


def test_jaccard_ignores_literal_spelling_order():
    assert jaccard(_lits("Parallel(Line(A,B),Line(C,D))"), _lits("Parallel(Line(D,C),Line(B,A))")) == 1


def test_score_choice_picks_nearest_option():
    assert score_choice(2.99, [1, 3, 5, 7]) == 1


def test_score_choice_breaks_ties_toward_lower_index():
    assert score_choice(2, [1, 3, 5, 7]) == 0


def test_score_choice_fallback_is_seeded():
    picks = {score_choice(None, [1, 3, 5, 7], seed=11) for _ in range(5)}
    assert len(picks) == 1
    assert picks.pop() in range(4)


@pytest.mark.parametrize("answer, truth, expected", [
    (3.0001, 3, True),
    (None, 3, False),
    (2.9, 3, False),
    (0.0004, 0, True),
])
def test_score_completion(answer, truth, expected):
    assert score_completion(answer, truth) is expected


def test_majority_answer_rounds_and_prefers_earliest():
    assert majority_answer([3.0001, 2.9999, 5, None]) == 3.0
    assert majority_answer([5, 3]) == 5
    assert majority_answer([None, None]) is None


# corpus

def test_desk_corpus_loads_sorted_with_four_choices():
    records = load_corpus(DESK_CORPUS)
    assert len(records) == 15
    assert [r.id for r in records] == sorted(r.id for r in records)
    assert all(len(r.choices) == 4 and r.truth is not None for r in records)


def test_meta_with_three_choices_is_rejected(tmp_path):
    problem = tmp_path / "p1"
    problem.mkdir()
    (problem / "problem.txt").write_text("Find(x)\n", encoding="utf-8")
    (problem / "meta.json").write_text('{"choices": [1, 2, 3], "truth": 1}', encoding="utf-8")
    with pytest.raises(CorpusError):
        load_corpus(tmp_path)


def test_missing_corpus_directory(tmp_path):
    with pytest.raises(CorpusError):
        load_corpus(tmp_path / "nowhere")


@pytest.mark.parametrize("record", load_corpus(DESK_CORPUS), ids=lambda r: r.id)
def test_every_desk_problem_solves_to_its_truth(record):
    result = solve(record.formalization())
    assert isinstance(result, Solution)
    assert score_completion(float(result.value), record.truth)
    assert result.stats.edges_in_minimal <= result.stats.edges


# refinement

def test_extract_formalization_takes_marked_section():
    out = "thinking...\n### FORMALIZATION\nFind(x)\n### NOTES\nbye"
    assert extract_formalization(out) == "Find(x)"
    assert extract_formalization("Find(x)\n") == "Find(x)\n"


def test_consistent_draft_needs_no_refiner():
    refiner = _refiner("echo")
    result = refine_loop("", "Equals(x,2)\nFind(x)", refiner)
    assert isinstance(result, Formalization)
    assert refiner.calls == 0


def test_without_refiner_inconsistency_is_surfaced():
    result = refine_loop("", COLLINEAR_DRAFT, None)
    assert isinstance(result, GiveUp)
    assert result.rounds == 0
    assert result.feedback.startswith("ERROR")


def test_fixing_refiner_converges_in_one_round():
    refiner = _refiner("fix_collinear")
    result = refine_loop("B lies on AC.", COLLINEAR_DRAFT, refiner, max_refinements=5)
    assert isinstance(result, Formalization)
    assert refiner.calls == 1
    assert all(l.predicate != "Triangle" for l in result.facts)


@pytest.mark.parametrize("stub", ["echo", "garbage"])
def test_unhelpful_refiner_gives_up_at_budget(stub):
    refiner = _refiner(stub)
    result = refine_loop("", COLLINEAR_DRAFT, refiner, max_refinements=3)
    assert isinstance(result, GiveUp)
    assert result.rounds == 3
    assert refiner.calls == 3


def test_unlaunchable_refiner_raises(tmp_path):
    refiner = Refiner([str(tmp_path / "no-such-refiner")], timeout=5)
    with pytest.raises(RefinerUnavailable):
        refine_loop("", COLLINEAR_DRAFT, refiner, max_refinements=1)


# runner

def test_score_corpus_all_correct(small_corpus):
    report = score_corpus(load_corpus(small_corpus), ScoreOptions(mode=COMPLETION, workers=2))
    assert list(report["id"]) == sorted(report["id"])
    summary = summarize(report)
    assert summary["accuracy"] == 1.0
    assert summary["arr"] == 1.0
    assert (report["compression"] < 1).all()


def test_choice_mode_reports_chosen_option(small_corpus):
    report = score_corpus(load_corpus(small_corpus), ScoreOptions(mode="choice", workers=1))
    assert report["correct"].all()
    assert list(report["choice"]) == [1, 0, 2]


def test_refined_corpus_scores_after_one_round():
    opts = ScoreOptions(mode=COMPLETION, workers=1, refiner=_refiner("fix_collinear"))
    report = score_corpus(load_corpus(INCONSISTENT_CORPUS), opts)
    assert report["correct"].all()
    assert (report["rounds"] == 1).all()


def test_inconsistent_corpus_without_refiner_is_invalid():
    report = score_corpus(load_corpus(INCONSISTENT_CORPUS), ScoreOptions(workers=1))
    assert (report["status"] == "inconsistent").all()
    summary = summarize(report)
    assert summary["accuracy"] == 0.0
    assert summary["arr"] == 0.0


def test_attempts_fill_pass_and_major_columns(small_corpus):
    records = load_corpus(small_corpus)[:1]
    report = score_corpus(records, ScoreOptions(attempts=2, workers=1))
    assert bool(report["pass_at_k"].iloc[0])
    assert bool(report["major_at_k"].iloc[0])


def test_scoring_resumes_from_run_state(small_corpus, tmp_path):
    state = StateManager(tmp_path / "state.json")
    records = load_corpus(small_corpus)
    state.update_state("run", records[0].id, {"id": records[0].id, "status": "solved", "answer": 99.0,
                                               "truth": records[0].truth, "correct": False, "valid": True,
                                               "pass_at_k": False, "major_at_k": False})
    report = score_corpus(records, ScoreOptions(workers=1), StateManager(tmp_path / "state.json"), "run")
    assert report["answer"].iloc[0] == 99.0
    assert set(StateManager(tmp_path / "state.json").completed("run")) == {r.id for r in records}


def test_summary_of_empty_report():
    assert summarize(pd.DataFrame(columns=["status", "correct", "valid"]))["accuracy"] == 0.0


def test_score_options_validate_mode():
    with pytest.raises(ValueError):
        ScoreOptions(mode="guess")


# command line

def test_cli_solve_prints_stepwise_solution(cli_config):
    result = CliRunner().invoke(cli, ["--config", str(cli_config), "solve",
                                      str(DESK_CORPUS / "01_parallel_similar" / "problem.txt")])
    assert result.exit_code == 0
    assert result.output.strip().splitlines()[-1] == "Answer: PQ = 3"


def test_cli_solve_json(cli_config):
    result = CliRunner().invoke(cli, ["--config", str(cli_config), "solve", "--json",
                                      str(DESK_CORPUS / "02_right_triangle_hypotenuse" / "problem.txt")])
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data["status"] == "solved"
    assert data["value"] == 5.0


def test_cli_solve_dumps_graph(cli_config, tmp_path):
    dump = tmp_path / "graph.json"
    result = CliRunner().invoke(cli, ["--config", str(cli_config), "solve", "--dump-graph", str(dump),
                                      str(DESK_CORPUS / "07_segment_addition" / "problem.txt")])
    assert result.exit_code == 0
    assert json.loads(dump.read_text(encoding="utf-8"))


def test_cli_validate_reports_contradiction(cli_config):
    path = INCONSISTENT_CORPUS / "01_collinear_triangle_split" / "problem.txt"
    result = CliRunner().invoke(cli, ["--config", str(cli_config), "validate", str(path)])
    assert result.exit_code == 1
    assert result.output.startswith("ERROR")


def test_cli_validate_consistent_file(cli_config):
    path = DESK_CORPUS / "07_segment_addition" / "problem.txt"
    result = CliRunner().invoke(cli, ["--config", str(cli_config), "validate", str(path)])
    assert result.exit_code == 0


def test_cli_malformed_file_is_a_usage_error(cli_config, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("Triangle(A,B\nFind(x)\n", encoding="utf-8")
    result = CliRunner().invoke(cli, ["--config", str(cli_config), "solve", str(bad)])
    assert result.exit_code == 2


def test_cli_parse_text(cli_config, tmp_path):
    text = tmp_path / "text.txt"
    text.write_text("B lies on AC. AB = 4 and BC = 7. Find AC.", encoding="utf-8")
    result = CliRunner().invoke(cli, ["--config", str(cli_config), "parse-text", str(text)])
    assert result.exit_code == 0
    assert "Find(LengthOf(Line(A,C)))" in result.output


def test_cli_list_theorems(cli_config):
    result = CliRunner().invoke(cli, ["--config", str(cli_config), "list-theorems"])
    assert result.exit_code == 0
    assert "Pythagorean Theorem: " in result.output


def test_cli_score_writes_report(cli_config, small_corpus, tmp_path):
    out = tmp_path / "report.csv"
    result = CliRunner().invoke(cli, ["--config", str(cli_config), "score", str(small_corpus),
                                      "--mode", "choice", "--out", str(out)])
    assert result.exit_code == 0
    assert "Accuracy:  1.000" in result.output
    assert "ARR:       1.000" in result.output
    assert len(pd.read_csv(out)) == 3


def test_cli_score_with_refiner(cli_config, tmp_path):
    command = shlex.join([sys.executable, str(REFINERS / "fix_collinear.py")])
    result = CliRunner().invoke(cli, ["--config", str(cli_config), "score", str(INCONSISTENT_CORPUS),
                                      "--refiner", command, "--out", str(tmp_path / "r.csv")])
    assert result.exit_code == 0
    assert "Accuracy:  1.000" in result.output


def test_main_exit_codes(cli_config, tmp_path):
    unsolvable = tmp_path / "unsolvable.txt"
    unsolvable.write_text("Equals(LengthOf(Line(A,B)),x)\nFind(LengthOf(Line(C,D)))\n", encoding="utf-8")
    config = ["--config", str(cli_config)]
    assert main(config + ["solve", str(DESK_CORPUS / "12_given_angle" / "problem.txt")]) == 0
    assert main(config + ["solve", str(unsolvable)]) == 1
    assert main(config + ["solve", str(tmp_path / "missing.txt")]) == 2
    assert main(config + ["frobnicate"]) == 2
