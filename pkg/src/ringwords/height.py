"""Shirshov n-divisibility and height over short words.

A word is *n-divisible* when it has a factor ``u1 u2 ... un`` (nonempty
parts) that is lexicographically greater than every product
``u_s(1) ... u_s(n)`` for a nontrivial permutation ``s``.  Two-letter
example: ``ba`` is 2-divisible since ``ba > ab``; ``aaa`` is not, because
rearranging its parts never changes it.

The *height* of a word over a set S is the least number of blocks
``s^k`` (``s`` in S) whose product is the word.

Neither notion is pinned down by a single formula in the literature on the
height theorem; these are the standard reconstructions, and the theorem
itself is only witnessed empirically, via :func:`height_survey`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable

from .words import Alphabet, word_key


class ResourceBoundExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class DivisibilityWitness:
    prefix: str
    parts: tuple[str, ...]
    suffix: str = ""

    @property
    def word(self) -> str:
        return self.prefix + "".join(self.parts) + self.suffix


@dataclass(frozen=True)
class HeightDecomposition:
    blocks: tuple[tuple[str, int], ...]

    @property
    def height(self) -> int:
        return len(self.blocks)

    @property
    def word(self) -> str:
        return "".join(base * k for base, k in self.blocks)


def _dominates(parts: tuple[str, ...], alphabet: Alphabet | None, perms) -> bool:
    base = word_key("".join(parts), alphabet)
    return all(base > word_key("".join(parts[i] for i in p), alphabet) for p in perms)


def _nontrivial_perms(n: int) -> list[tuple[int, ...]]:
    return [p for p in itertools.permutations(range(n)) if p != tuple(range(n))]


def is_valid_witness(w: str, n: int, witness: DivisibilityWitness, alphabet: Alphabet | None = None) -> bool:
    parts = witness.parts
    return (
        witness.word == w
        and len(parts) == n
        and all(parts)
        and _dominates(parts, alphabet, _nontrivial_perms(n))
    )


def is_n_divisible(w: str, n: int, alphabet: Alphabet | None = None) -> DivisibilityWitness | None:
    """A witness ``prefix + parts + suffix == w``, or None.

    Cut points are tried in lexicographic order, so the witness is the one
    with the earliest start, then the earliest cuts.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if not w:
        return None
    if n == 1:
        return DivisibilityWitness("", (w,))
    key = word_key(w, alphabet)
    perms = _nontrivial_perms(n)

    def swaps_ok(c: tuple[int, ...]) -> bool:
        # necessary: u_i u_{i+1} > u_{i+1} u_i for neighbouring parts
        for i in range(n - 1):
            x, y = key[c[i] : c[i + 1]], key[c[i + 1] : c[i + 2]]
            if not x + y > y + x:
                return False
        return True

    for cuts in itertools.combinations(range(len(w) + 1), n + 1):
        if not swaps_ok(cuts):
            continue
        parts = tuple(w[cuts[i] : cuts[i + 1]] for i in range(n))
        if _dominates(parts, alphabet, perms):
            return DivisibilityWitness(w[: cuts[0]], parts, w[cuts[-1] :])
    return None


def height_over(w: str, S: Iterable[str]) -> HeightDecomposition | None:
    """Fewest blocks ``s^k`` (``s`` in S) multiplying to ``w``; None if impossible."""
    S = sorted(set(S), key=lambda s: (len(s), s))
    if not S or any(not s for s in S):
        raise ValueError("S must be a nonempty set of nonempty words")
    L = len(w)
    INF = L + 1
    best = [INF] * (L + 1)
    choice: list[tuple[int, str, int] | None] = [None] * (L + 1)
    best[0] = 0
    for j in range(1, L + 1):
        for s in S:
            k = 1
            start = j - len(s)
            while start >= 0 and w[start : start + len(s)] == s:
                if best[start] + 1 < best[j]:
                    best[j] = best[start] + 1
                    choice[j] = (start, s, k)
                k += 1
                start -= len(s)
    if best[L] >= INF:
        return None
    blocks = []
    j = L
    while j > 0:
        start, s, k = choice[j]
        blocks.append((s, k))
        j = start
    return HeightDecomposition(tuple(reversed(blocks)))


@dataclass
class SurveyRow:
    length: int
    words: int
    divisible: int
    max_height: int
    witness: str


@dataclass
class SurveyReport:
    n: int
    alphabet: str
    rows: list[SurveyRow] = field(default_factory=list)

    @property
    def max_height(self) -> int:
        return max((r.max_height for r in self.rows), default=0)

    @property
    def witness(self) -> str:
        for r in self.rows:
            if r.max_height == self.max_height:
                return r.witness
        return ""

    def max_height_up_to(self, length: int) -> int:
        return max((r.max_height for r in self.rows if r.length <= length), default=0)

    def table(self) -> str:
        head = f"{'length':>6}  {'#words':>8}  {'#n-div':>8}  {'max height':>10}  witness"
        lines = [head]
        for r in self.rows:
            lines.append(f"{r.length:>6}  {r.words:>8}  {r.divisible:>8}  {r.max_height:>10}  {r.witness}")
        return "\n".join(lines) + "\n"


def height_survey(
    alphabet: Alphabet,
    n: int,
    max_len: int,
    max_words: int = 2_000_000,
) -> SurveyReport:
    """Height over words of length < n of every non-n-divisible word up to ``max_len``."""
    if n < 2:
        raise ValueError("n must be at least 2")
    total = sum(len(alphabet) ** k for k in range(1, max_len + 1))
    if total > max_words:
        raise ResourceBoundExceeded(f"{total} words exceed the survey bound of {max_words}")
    S = list(alphabet.words_up_to(n - 1, include_empty=False))
    report = SurveyReport(n, str(alphabet))
    for length in range(1, max_len + 1):
        words = divisible = 0
        top, witness = 0, ""
        for w in alphabet.words(length):
            words += 1
            if is_n_divisible(w, n, alphabet) is not None:
                divisible += 1
                continue
            h = height_over(w, S).height
            if h > top:
                top, witness = h, w
        report.rows.append(SurveyRow(length, words, divisible, top, witness))
    return report
