"""Synthetic reasoning tasks with templated golden rationales, plus JSONL io.

The generators double as the difficulty knob for desk experiments: the flip
count (coin flip) and word count (last letter concatenation) ranges control
how much state the model has to track per question.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

from .errors import DataFormatError, SampleError

NAMES = [
    "Amy", "Brown", "Carlos", "Dana", "Elena", "Felix", "Grace", "Hugo",
    "Iris", "Jonas", "Kara", "Lee", "Mona", "Nadia", "Oscar", "Priya",
    "Quinn", "Rosa", "Sam", "Tina", "Umar", "Vera", "Wade", "Ximena",
    "Yara", "Zane", "Alice", "Ben", "Clara", "David", "Ed", "Fiona",
    "Gus", "Hana", "Ivan", "June", "Kyle", "Lena", "Marco", "Nora",
]

_CANONICAL_FIELDS = ("id", "question", "answer", "rationale", "mode_label", "source")


@dataclass
class Sample:
    """One (question, answer, rationale) record; the unit of every pipeline."""

    id: str
    question: str
    answer: str
    rationale: str | None = None
    mode_label: int | None = None
    source: str = "synthetic"
    extra: dict = field(default_factory=dict)

    def require_rationale(self) -> str:
        if not self.rationale:
            raise SampleError(f"sample {self.id} has no rationale")
        return self.rationale

    def to_dict(self) -> dict:
        row = {"id": self.id, "question": self.question, "answer": self.answer}
        if self.rationale is not None:
            row["rationale"] = self.rationale
        if self.mode_label is not None:
            row["mode_label"] = self.mode_label
        row["source"] = self.source
        for key in sorted(self.extra):
            row.setdefault(key, self.extra[key])
        return row

    @classmethod
    def from_dict(cls, row: dict, line: int | None = None) -> "Sample":
        for key in ("question", "answer"):
            if key not in row:
                raise DataFormatError(f"missing required field '{key}'", line=line)
        if not str(row["answer"]).strip():
            raise DataFormatError("field 'answer' is empty", line=line)
        extra = {k: v for k, v in row.items() if k not in _CANONICAL_FIELDS}
        return cls(
            id=str(row.get("id", f"line-{line}" if line is not None else "sample")),
            question=str(row["question"]),
            answer=str(row["answer"]),
            rationale=row.get("rationale"),
            mode_label=row.get("mode_label"),
            source=str(row.get("source", "ingested")),
            extra=extra,
        )


# ---------------------------------------------------------------------------
# Coin flip
# ---------------------------------------------------------------------------


def gen_coin_flip(
    n: int,
    flips: tuple[int, int] = (1, 3),
    seed: int = 0,
    nonflippers: tuple[int, int] = (0, 2),
) -> list[Sample]:
    """Parity task: does the coin end heads up after a sequence of flips?"""
    lo, hi = flips
    if not (1 <= lo <= hi <= 8):
        raise ValueError(f"flips range must lie within [1, 8], got {flips}")
    rng = random.Random(seed)
    samples = []
    for i in range(n):
        k = rng.randint(lo, hi)
        m = rng.randint(nonflippers[0], nonflippers[1])
        acts = [True] * k + [False] * m
        rng.shuffle(acts)
        actors = rng.sample(NAMES, len(acts))

        q_parts = ["A coin is heads up."]
        r_parts = ["The coin starts heads up."]
        heads = True
        for name, does_flip in zip(actors, acts):
            if does_flip:
                heads = not heads
                q_parts.append(f"{name} flips the coin.")
                r_parts.append(f"{name} flips the coin, so it is now {'heads' if heads else 'tails'} up.")
            else:
                q_parts.append(f"{name} does not flip the coin.")
                r_parts.append(f"{name} does not flip the coin, so it stays {'heads' if heads else 'tails'} up.")
        q_parts.append("Is the coin still heads up?")
        answer = "yes" if k % 2 == 0 else "no"
        times = "1 time" if k == 1 else f"{k} times"
        r_parts.append(
            f"The coin was flipped {times} in total, and an {'even' if k % 2 == 0 else 'odd'} "
            f"number of flips leaves the coin {'heads' if k % 2 == 0 else 'tails'} up. "
            f"So the answer is {answer}."
        )
        samples.append(
            Sample(
                id=f"cf-s{seed}-{i:05d}",
                question=" ".join(q_parts),
                answer=answer,
                rationale=" ".join(r_parts),
                extra={"flips": k},
            )
        )
    return samples


# ---------------------------------------------------------------------------
# Last letter concatenation
# ---------------------------------------------------------------------------


def gen_last_letter(n: int, words: tuple[int, int] = (2, 4), seed: int = 0) -> list[Sample]:
    """Concatenate the last letter of each quoted word."""
    lo, hi = words
    if not (1 <= lo <= hi <= len(NAMES)):
        raise ValueError(f"word count range must lie within [1, {len(NAMES)}], got {words}")
    rng = random.Random(seed)
    samples = []
    for i in range(n):
        count = rng.randint(lo, hi)
        picked = rng.sample(NAMES, count)
        answer = "".join(w[-1] for w in picked)
        steps = [f"The last letter of '{w}' is '{w[-1]}'." for w in picked]
        steps.append(f"Concatenating them gives '{answer}'. So the answer is {answer}.")
        samples.append(
            Sample(
                id=f"ll-s{seed}-{i:05d}",
                question=(
                    f"Take the last letters of the words in '{' '.join(picked)}' "
                    "and concatenate them."
                ),
                answer=answer,
                rationale=" ".join(steps),
                extra={"words": count},
            )
        )
    return samples


# ---------------------------------------------------------------------------
# JSONL io
# ---------------------------------------------------------------------------


def load_jsonl(path: str | Path) -> list[Sample]:
    samples = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                row = json.loads(line)
            except json.JSONDecodeError as exc:
                raise DataFormatError(f"invalid JSON ({exc.msg})", line=lineno) from exc
            if not isinstance(row, dict):
                raise DataFormatError("record is not a JSON object", line=lineno)
            samples.append(Sample.from_dict(row, line=lineno))
    return samples


def save_jsonl(path: str | Path, samples: Iterable[Sample]) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for sample in samples:
            fh.write(json.dumps(sample.to_dict(), ensure_ascii=False) + "\n")


def corpus_texts(samples: Sequence[Sample]) -> list[str]:
    """All text fields, used to build the tokenizer vocabulary."""
    texts = []
    for s in samples:
        texts.append(s.question)
        texts.append(s.answer)
        if s.rationale:
            texts.append(s.rationale)
    return texts
