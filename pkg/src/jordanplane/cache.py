"""Append-only JSONL result cache keyed by (command, n, partition, seed)."""

from __future__ import annotations

import json
import os
import sys
from dataclasses import dataclass

from . import __version__


@dataclass(frozen=True)
class CacheRecord:
    command: str
    n: int | None
    partition: str | None
    seed: int | None
    payload: object
    tool_version: str

    def key(self) -> tuple:
        return (self.command, self.n, self.partition, self.seed)


class ResultCache:
    """File-backed cache; silently degrades to a no-op when unusable.

    One JSON object per line.  Corrupt lines are skipped with a warning,
    records from another tool version never hit, and on duplicate keys the
    most recently appended record wins.
    """

    FILENAME = "cache.jsonl"

    def __init__(self, directory: str | None):
        self.path = None
        if directory is None:
            return
        try:
            os.makedirs(directory, exist_ok=True)
            probe = os.path.join(directory, self.FILENAME)
            with open(probe, "a", encoding="utf-8"):
                pass
            self.path = probe
        except OSError as exc:
            print(f"warning: cache disabled ({exc})", file=sys.stderr)

    @property
    def enabled(self) -> bool:
        return self.path is not None

    def get(self, command: str, n: int | None, partition: str | None,
            seed: int | None):
        if not self.enabled or not os.path.exists(self.path):
            return None
        hit = None
        key = [command, n, partition, seed]
        with open(self.path, "r", encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, start=1):
                line = line.strip()
                if not line:
                    continue
                try:
                    obj = json.loads(line)
                    if obj["version"] != __version__:
                        continue
                    if obj["key"] == key:
                        hit = obj["payload"]
                except (json.JSONDecodeError, KeyError, TypeError):
                    print(f"warning: skipping corrupt cache line {lineno}",
                          file=sys.stderr)
        return hit

    def put(self, command: str, n: int | None, partition: str | None,
            seed: int | None, payload) -> None:
        if not self.enabled:
            return
        record = {
            "key": [command, n, partition, seed],
            "version": __version__,
            "payload": payload,
        }
        try:
            with open(self.path, "a", encoding="utf-8") as fh:
                fh.write(json.dumps(record, sort_keys=True) + "\n")
        except OSError as exc:
            print(f"warning: cache write failed ({exc})", file=sys.stderr)
