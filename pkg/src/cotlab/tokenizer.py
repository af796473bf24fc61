"""Whitespace/character hybrid tokenizer with reserved marker ids.

Known words map to single tokens; out-of-vocabulary words fall back to
character tokens. An explicit space token separates words, so decoding is
lossless up to whitespace normalization. The five marker ids (answer/rationale
delimiters and end-of-sequence) are reserved and never produced when encoding
ordinary text.
"""

from __future__ import annotations

import string
from collections import Counter
from dataclasses import dataclass
from typing import Iterable

from .errors import InvalidTokenError

PAD_TOKEN = "<pad>"
ANS_TOKEN = "<ans>"
ANS_END_TOKEN = "</ans>"
RAT_TOKEN = "<rat>"
RAT_END_TOKEN = "</rat>"
EOS_TOKEN = "<eos>"
SPACE_TOKEN = "<sp>"
UNK_TOKEN = "<unk>"

SPECIAL_TOKENS = (
    PAD_TOKEN,
    ANS_TOKEN,
    ANS_END_TOKEN,
    RAT_TOKEN,
    RAT_END_TOKEN,
    EOS_TOKEN,
    SPACE_TOKEN,
    UNK_TOKEN,
)

# Printable ASCII minus whitespace; always part of the vocabulary so any
# ordinary word can be spelled out character by character.
_CHAR_SET = tuple(sorted(set(string.printable) - set(string.whitespace)))


@dataclass(frozen=True)
class MarkerScheme:
    """The five reserved ids used to serialize answers and rationales."""

    ans: int
    ans_end: int
    rat: int
    rat_end: int
    eos: int

    def all(self) -> tuple[int, ...]:
        return (self.ans, self.ans_end, self.rat, self.rat_end, self.eos)


class Tokenizer:
    """Fixed-vocabulary tokenizer; id order is stable for serialization."""

    def __init__(self, tokens: list[str]):
        for i, tok in enumerate(SPECIAL_TOKENS):
            if i >= len(tokens) or tokens[i] != tok:
                raise ValueError("vocabulary must start with the reserved special tokens")
        if len(set(tokens)) != len(tokens):
            raise ValueError("vocabulary contains duplicate tokens")
        self.tokens = list(tokens)
        self._ids = {tok: i for i, tok in enumerate(self.tokens)}
        self._special_ids = frozenset(range(len(SPECIAL_TOKENS)))

    # -- construction ------------------------------------------------------

    @classmethod
    def build(cls, texts: Iterable[str], max_words: int = 4096) -> "Tokenizer":
        """Build a vocabulary of specials + characters + frequent corpus words."""
        counts: Counter[str] = Counter()
        for text in texts:
            counts.update(text.split())
        tokens = list(SPECIAL_TOKENS) + list(_CHAR_SET)
        seen = set(tokens)
        ranked = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))
        for word, _ in ranked:
            if len(tokens) - len(SPECIAL_TOKENS) - len(_CHAR_SET) >= max_words:
                break
            if word in seen:
                continue
            tokens.append(word)
            seen.add(word)
        return cls(tokens)

    def to_dict(self) -> dict:
        return {"tokens": self.tokens}

    @classmethod
    def from_dict(cls, payload: dict) -> "Tokenizer":
        return cls(list(payload["tokens"]))

    # -- properties --------------------------------------------------------

    @property
    def vocab_size(self) -> int:
        return len(self.tokens)

    @property
    def pad_id(self) -> int:
        return self._ids[PAD_TOKEN]

    @property
    def space_id(self) -> int:
        return self._ids[SPACE_TOKEN]

    @property
    def unk_id(self) -> int:
        return self._ids[UNK_TOKEN]

    @property
    def markers(self) -> MarkerScheme:
        return MarkerScheme(
            ans=self._ids[ANS_TOKEN],
            ans_end=self._ids[ANS_END_TOKEN],
            rat=self._ids[RAT_TOKEN],
            rat_end=self._ids[RAT_END_TOKEN],
            eos=self._ids[EOS_TOKEN],
        )

    def is_special(self, token_id: int) -> bool:
        return token_id in self._special_ids

    # -- encode / decode ---------------------------------------------------

    def encode(self, text: str) -> list[int]:
        """Encode ordinary text; never emits reserved ids."""
        out: list[int] = []
        for i, word in enumerate(text.split()):
            if i > 0:
                out.append(self.space_id)
            wid = self._ids.get(word)
            if wid is not None and wid not in self._special_ids:
                out.append(wid)
            else:
                out.extend(self._ids.get(ch, self.unk_id) for ch in word)
        return out

    def decode(self, ids: Iterable[int]) -> str:
        parts: list[str] = []
        for tid in ids:
            if tid < 0 or tid >= len(self.tokens):
                raise InvalidTokenError(f"token id {tid} outside vocabulary of size {len(self.tokens)}")
            parts.append(" " if tid == self.space_id else self.tokens[tid])
        return "".join(parts)
