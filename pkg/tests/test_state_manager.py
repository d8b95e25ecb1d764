import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent.parent))

from src.utils.state_manager import StateManager


@pytest.fixture
def state_file(tmp_path):
    return tmp_path / "runs" / "run_state.json"


def test_state_manager_logic(state_file):
    state_mgr = StateManager(state_file=state_file)

    assert state_mgr.get_state("corpus:completion", "01") is None
    assert state_mgr.get_state("corpus:completion", "01", default={}) == {}

    state_mgr.update_state("corpus:completion", "01", {"status": "solved", "answer": 3.0})
    state_mgr.update_state("corpus:completion", "01", {"correct": True})
    assert state_mgr.get_state("corpus:completion", "01") == {"status": "solved", "answer": 3.0, "correct": True}

    # Persistence
    new_mgr = StateManager(state_file=state_file)
    assert new_mgr.completed("corpus:completion")["01"]["answer"] == 3.0


def test_reset_drops_one_run(state_file):
    state_mgr = StateManager(state_file=state_file)
    state_mgr.update_state("a", "01", {"answer": 1.0})
    state_mgr.update_state("b", "01", {"answer": 2.0})
    state_mgr.reset("a")
    reloaded = StateManager(state_file=state_file)
    assert reloaded.completed("a") == {}
    assert reloaded.get_state("b", "01") == {"answer": 2.0}


def test_corrupt_state_file_starts_fresh(state_file):
    state_file.parent.mkdir(parents=True)
    state_file.write_text("{not json", encoding="utf-8")
    assert StateManager(state_file=state_file).state == {}


def test_concurrent_updates_are_all_kept(state_file):
    state_mgr = StateManager(state_file=state_file)
    with ThreadPoolExecutor(max_workers=8) as pool:
        list(pool.map(lambda i: state_mgr.update_state("run", f"{i:02d}", {"answer": float(i)}), range(40)))
    assert len(StateManager(state_file=state_file).completed("run")) == 40
