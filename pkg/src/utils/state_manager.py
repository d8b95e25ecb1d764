"""
StateManager for tracking scoring-run progress.
Path: src/utils/state_manager.py
"""
import json
import logging
import threading
from pathlib import Path
from typing import Any, Dict, Union

logger = logging.getLogger(__name__)


class StateManager:
    """
    Manages a JSON state file mapping run name -> problem id -> result row.

    Writes are serialized so worker threads can record results as they finish.
    """

    def __init__(self, state_file: Union[str, Path] = "data/runs/run_state.json", auto_save: bool = True):
        self.state_file = Path(state_file)
        self.auto_save = auto_save
        self._lock = threading.Lock()
        self.state = self._load()

    def _load(self) -> Dict[str, Any]:
        """Load state from JSON file."""
        if self.state_file.exists():
            try:
                with open(self.state_file, 'r', encoding='utf-8') as f:
                    return json.load(f)
            except (OSError, json.JSONDecodeError) as e:
                logger.warning("Failed to load state file %s: %s. Starting fresh.", self.state_file, e)
        return {}

    def save(self):
        """Save current state to JSON file."""
        self.state_file.parent.mkdir(parents=True, exist_ok=True)
        tmp = self.state_file.with_suffix(".tmp")
        with open(tmp, 'w', encoding='utf-8') as f:
            json.dump(self.state, f, indent=2, sort_keys=True)
        tmp.replace(self.state_file)

    def get_state(self, run: str, key: str, default: Any = None) -> Any:
        return self.state.get(run, {}).get(key, default)

    def update_state(self, run: str, key: str, data: Any):
        """Record data for one key of a run; dicts merge into an existing dict."""
        with self._lock:
            entries = self.state.setdefault(run, {})
            if isinstance(data, dict) and isinstance(entries.get(key), dict):
                entries[key].update(data)
            else:
                entries[key] = data
            if self.auto_save:
                self.save()

    def completed(self, run: str) -> Dict[str, Any]:
        """Everything recorded for a run so far."""
        return dict(self.state.get(run, {}))

    def reset(self, run: str):
        with self._lock:
            self.state.pop(run, None)
            if self.auto_save:
                self.save()
