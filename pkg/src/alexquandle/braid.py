"""Braid words: parsing, formatting and closure permutation data."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import EmptyInput, IndexOutOfRange, ParseError

__all__ = ["BraidWord", "parse_braid", "format_braid", "closure_components", "closure_permutation"]


@dataclass(frozen=True)
class BraidWord:
    """A word in the Artin generators of B_n.

    Letter ``k > 0`` is sigma_k and ``k < 0`` is the inverse of sigma_{-k}.
    """

    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "letters", tuple(int(k) for k in self.letters))
        if self.strands < 2:
            raise IndexOutOfRange(f"a braid needs at least 2 strands, got {self.strands}")
        for k in self.letters:
            if k == 0 or abs(k) > self.strands - 1:
                raise IndexOutOfRange(f"generator {k} is out of range for B_{self.strands}")

    @classmethod
    def of(cls, letters: Iterable[int], strands: Optional[int] = None) -> "BraidWord":
        letters = tuple(letters)
        if strands is None:
            if not letters:
                raise EmptyInput("cannot infer the strand count of an empty word")
            strands = 1 + max(abs(k) for k in letters)
        return cls(strands, letters)

    @property
    def writhe(self) -> int:
        return sum(1 if k > 0 else -1 for k in self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-k for k in reversed(self.letters)))

    def mirror(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-k for k in self.letters))

    def __str__(self) -> str:
        return format_braid(self)


_BRACE = re.compile(r"^\{(.*)\}$", re.S)
_WORD_LETTER = re.compile(r"^(?:s|sigma|σ)_?(\d+)(?:\^\{?([-+]?\d+)\}?)?$")


def _parse_brace(body: str) -> list[int]:
    body = body.strip()
    if not body:
        return []
    letters = []
    for item in body.split(","):
        item = item.strip().replace("−", "-")
        if not re.fullmatch(r"[-+]?\d+", item):
            raise ParseError(f"bad braid letter {item!r}")
        k = int(item)
        if k == 0:
            raise ParseError("braid letter 0 is not a generator")
        letters.append(k)
    return letters


def _parse_word(text: str) -> list[int]:
    letters: list[int] = []
    for chunk in text.replace("−", "-").split():
        m = _WORD_LETTER.match(chunk)
        if not m:
            raise ParseError(f"bad braid letter {chunk!r}")
        k = int(m.group(1))
        power = int(m.group(2)) if m.group(2) is not None else 1
        if k == 0:
            raise ParseError("sigma_0 is not a generator")
        step = k if power > 0 else -k
        letters.extend([step] * abs(power))
    return letters


def parse_braid(text: str, strands: Optional[int] = None) -> BraidWord:
    """Parse ``{1,1,-2}`` brace notation or ``s1^2 s2^-1`` word notation.

    Without ``strands`` the count is one more than the largest generator index.
    """
    stripped = text.strip()
    m = _BRACE.match(stripped)
    if m:
        letters = _parse_brace(m.group(1))
    elif stripped.startswith("{") or stripped.endswith("}"):
        raise ParseError(f"unbalanced braces in {text!r}")
    else:
        letters = _parse_word(stripped)
    if not letters and strands is None:
        raise EmptyInput("empty braid word needs an explicit strand count")
    if strands is not None:
        for k in letters:
            if abs(k) >= strands:
                raise IndexOutOfRange(f"generator {k} needs more than {strands} strands")
    return BraidWord.of(letters, strands)


def format_braid(w: BraidWord, notation: str = "brace") -> str:
    if notation == "brace":
        return "{" + ",".join(str(k) for k in w.letters) + "}"
    if notation == "word":
        out = []
        i = 0
        letters = w.letters
        while i < len(letters):
            j = i
            while j < len(letters) and letters[j] == letters[i]:
                j += 1
            k, run = letters[i], j - i
            power = run if k > 0 else -run
            out.append(f"s{abs(k)}" if power == 1 else f"s{abs(k)}^{power}")
            i = j
        return " ".join(out)
    raise ValueError(f"unknown notation {notation!r}")


def closure_permutation(w: BraidWord) -> list[int]:
    """Permutation of strand positions (0-based): strand starting at i ends at perm[i]."""
    pos = list(range(w.strands))  # pos[p] = strand currently at position p
    for k in w.letters:
        i = abs(k) - 1
        pos[i], pos[i + 1] = pos[i + 1], pos[i]
    perm = [0] * w.strands
    for p, s in enumerate(pos):
        perm[s] = p
    return perm


def closure_components(w: BraidWord) -> int:
    perm = closure_permutation(w)
    seen = [False] * w.strands
    count = 0
    for i in range(w.strands):
        if not seen[i]:
            count += 1
            j = i
            while not seen[j]:
                seen[j] = True
                j = perm[j]
    return count

