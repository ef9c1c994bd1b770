from __future__ import annotations

import json
import threading
import time
from pathlib import Path
from typing import Any


class ViolationLogger:
    """Append violation records as JSON lines and write replayable graph files next to them."""

    def __init__(self, out_dir: str) -> None:
        self._dir = Path(out_dir)
        self._dir.mkdir(parents=True, exist_ok=True)
        self._path = self._dir / "violations.jsonl"
        self._lock = threading.Lock()

    @property
    def path(self) -> Path:
        return self._path

    def append(self, entry: dict[str, Any]) -> None:
        payload = {
            "logged_at": time.time(),
            **entry,
        }
        line = json.dumps(payload, separators=(",", ":"), default=str)
        with self._lock:
            with self._path.open("a", encoding="utf-8") as f:
                f.write(line + "\n")

    def dump_graph(self, name: str, graph_text: str) -> Path:
        target = self._dir / f"{name}.lg"
        with self._lock:
            target.write_text(graph_text, encoding="utf-8")
        return target
