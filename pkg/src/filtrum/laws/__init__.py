"""Machine-checked law suite.

Every law quantifies one theorem over the validation corpus and yields a
record per instance; a failing record carries a counterexample payload.
Laws are grouped by chapter tag (ch1: filters and divisibility, ch2: the
filtrum, ch3: topological filters).
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

Outcome = tuple[str, bool, dict | None]


@dataclass(frozen=True)
class Law:
    id: str
    chapter: str
    statement: str
    run: Callable[[], Iterator[Outcome]]


@dataclass(frozen=True)
class LawRecord:
    law: str
    chapter: str
    statement: str
    instance: str
    ok: bool
    counterexample: dict | None

    def as_dict(self) -> dict:
        out = {
            "law": self.law,
            "chapter": self.chapter,
            "statement": self.statement,
            "instance": self.instance,
            "ok": self.ok,
        }
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


_REGISTRY: list[Law] = []


def law(law_id: str, chapter: str, statement: str):
    def decorate(fn: Callable[[], Iterator[Outcome]]):
        _REGISTRY.append(Law(law_id, chapter, statement, fn))
        return fn

    return decorate


def registered_laws(chapters: Iterable[str] | None = None) -> list[Law]:
    _load()
    if chapters is None:
        return list(_REGISTRY)
    wanted = set(chapters)
    return [entry for entry in _REGISTRY if entry.chapter in wanted]


def run_suite(chapters: Iterable[str] | None = None, jobs: int = 1) -> list[LawRecord]:
    """Evaluate the selected laws; deterministic record order regardless
    of the worker count."""
    selected = registered_laws(chapters)

    def evaluate(entry: Law) -> list[LawRecord]:
        return [
            LawRecord(entry.id, entry.chapter, entry.statement, instance, ok, payload)
            for instance, ok, payload in entry.run()
        ]

    if jobs <= 1:
        batches = [evaluate(entry) for entry in selected]
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            batches = list(pool.map(evaluate, selected))
    return [record for batch in batches for record in batch]


_loaded = False


def _load() -> None:
    global _loaded
    if not _loaded:
        from . import ch1, ch2, ch3  # noqa: F401  (registration side effect)

        _loaded = True
