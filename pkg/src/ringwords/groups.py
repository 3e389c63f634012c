"""Group presentations, the C'(lambda) condition and Dehn's algorithm.

A group word is a tuple of nonzero ints: generator ``i`` (0-based) is
``i + 1`` and its inverse is ``-(i + 1)``.  Text form uses the generator
names with a trailing ``-`` for inverses, e.g. ``a b a- b-``.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

GroupWord = tuple[int, ...]

_LETTER = re.compile(r"\s*([A-Za-z])(-?)")


def inverse(w: Sequence[int]) -> GroupWord:
    return tuple(-x for x in reversed(w))


def free_reduce(w: Sequence[int]) -> GroupWord:
    out: list[int] = []
    for x in w:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def cyclic_reduce(w: Sequence[int]) -> GroupWord:
    w = free_reduce(w)
    i, j = 0, len(w) - 1
    while i < j and w[i] == -w[j]:
        i += 1
        j -= 1
    return w[i : j + 1]


def is_cyclically_reduced(w: Sequence[int]) -> bool:
    return tuple(w) == cyclic_reduce(w)


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relators: tuple[GroupWord, ...]

    def __post_init__(self):
        if len(set(self.generators)) != len(self.generators):
            raise ValueError("duplicate generator names")
        for r in self.relators:
            if not r:
                raise ValueError("relators must be nonempty")
            if any(x == 0 or abs(x) > len(self.generators) for x in r):
                raise ValueError(f"relator {r} uses an unknown generator")
            if not is_cyclically_reduced(r):
                raise ValueError(f"relator {self.format(r)} is not cyclically reduced")

    @classmethod
    def from_strings(cls, generators: Iterable[str], relators: Iterable[str]) -> "Presentation":
        generators = tuple(generators)
        return cls(generators, tuple(parse_word(r, generators) for r in relators))

    @classmethod
    def parse(cls, text: str) -> "Presentation":
        """``generators: a b c d`` followed by ``relator: ...`` lines."""
        generators = None
        relators = []
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            key, sep, body = line.partition(":")
            key = key.strip()
            if not sep or key not in ("generators", "relator"):
                raise ValueError(f"line {lineno}, column 1: expected 'generators:' or 'relator:'")
            if key == "generators":
                generators = tuple(body.split())
            else:
                if generators is None:
                    raise ValueError(f"line {lineno}, column 1: relator before generators")
                offset = raw.index(":") + 1
                try:
                    relators.append(parse_word(body, generators))
                except ValueError as exc:
                    col = getattr(exc, "column", 1) + offset
                    raise ValueError(f"line {lineno}, column {col}: {exc.args[0]}") from None
        if generators is None:
            raise ValueError("line 1, column 1: missing 'generators:' line")
        return cls(generators, tuple(relators))

    def format(self, w: Sequence[int]) -> str:
        return format_word(w, self.generators)


class WordParseError(ValueError):
    def __init__(self, message: str, column: int):
        self.column = column
        super().__init__(message)


def parse_word(text: str, generators: Sequence[str]) -> GroupWord:
    """``"a b a- b-"`` (spaces optional) to a group word; ``""`` or ``"1"`` is the identity."""
    if text.strip() in ("", "1"):
        return ()
    index = {g: i + 1 for i, g in enumerate(generators)}
    out = []
    pos = 0
    while pos < len(text):
        if not text[pos:].strip():
            break
        m = _LETTER.match(text, pos)
        if not m:
            col = pos + len(text[pos:]) - len(text[pos:].lstrip()) + 1
            raise WordParseError(f"unexpected character {text[col - 1]!r}", col)
        g = m.group(1)
        if g not in index:
            raise WordParseError(f"unknown generator {g!r}", m.start(1) + 1)
        out.append(-index[g] if m.group(2) else index[g])
        pos = m.end()
    return tuple(out)


def format_word(w: Sequence[int], generators: Sequence[str]) -> str:
    if not w:
        return "1"
    return " ".join(generators[abs(x) - 1] + ("-" if x < 0 else "") for x in w)


def symmetrize(p: Presentation) -> list[GroupWord]:
    """Cyclic permutations of every relator and its inverse, without repeats."""
    seen = []
    found = set()
    for r in p.relators:
        for base in (r, inverse(r)):
            for i in range(len(base)):
                rot = base[i:] + base[:i]
                if rot not in found:
                    found.add(rot)
                    seen.append(rot)
    return seen


def _positions(p: Presentation) -> list[tuple[tuple[int, int, int], GroupWord]]:
    # every (relator, inverted?, rotation) position, duplicates kept
    out = []
    for k, r in enumerate(p.relators):
        for s, base in enumerate((r, inverse(r))):
            for i in range(len(base)):
                out.append(((k, s, i), base[i:] + base[:i]))
    return out


def _common_prefix(u: Sequence[int], v: Sequence[int]) -> int:
    n = 0
    for x, y in zip(u, v):
        if x != y:
            break
        n += 1
    return n


@dataclass(frozen=True)
class MetricCheck:
    holds: bool
    max_piece: int
    worst: tuple[GroupWord, GroupWord] | None = None


def check_metric_condition(p: Presentation, lam: Fraction | float) -> MetricCheck:
    """C'(lam): every piece is shorter than ``lam`` times each relator it starts.

    Pieces are common prefixes of two symmetrized relators taken at
    different positions.  A relator that is a proper power, or a cyclic
    conjugate of another relator or its inverse, therefore shares its whole
    length with another position and fails for any ``lam < 1``.
    """
    lam = Fraction(lam)
    if not 0 < lam < 1:
        raise ValueError("lambda must lie strictly between 0 and 1")
    positions = _positions(p)
    holds, longest, worst = True, 0, None
    for i in range(len(positions)):
        ri = positions[i][1]
        for j in range(i + 1, len(positions)):
            rj = positions[j][1]
            n = _common_prefix(ri, rj)
            if n > longest:
                longest, worst = n, (ri, rj)
            if n and (n >= lam * len(ri) or n >= lam * len(rj)):
                holds = False
    return MetricCheck(holds, longest, worst)


class Verdict(enum.Enum):
    TRIVIAL = "trivial"
    NONTRIVIAL = "nontrivial"
    UNSUPPORTED = "unsupported"


@dataclass(frozen=True)
class DehnStep:
    """One rewrite ``before -> after``.

    ``kind`` is ``"reduce"`` (free and cyclic cancellation) or ``"relator"``:
    the factor of ``before`` at ``position`` of length ``len(removed)`` is
    replaced by ``inserted``, where ``removed + inverse(inserted)`` is a
    symmetrized relator.
    """

    kind: str
    before: GroupWord
    after: GroupWord
    position: int = 0
    removed: GroupWord = ()
    inserted: GroupWord = ()


@dataclass
class DehnResult:
    verdict: Verdict
    steps: list[DehnStep]
    final: GroupWord

    def __bool__(self) -> bool:
        return self.verdict is Verdict.TRIVIAL


def verify_steps(w: Sequence[int], steps: Sequence[DehnStep], p: Presentation) -> GroupWord:
    """Replay a step log from ``w`` and return the final word.

    Raises ValueError if any step is not a legal move in the group.
    """
    rels = set(symmetrize(p))
    current = tuple(w)
    for k, s in enumerate(steps):
        if s.before != current:
            raise ValueError(f"step {k} starts from the wrong word")
        if s.kind == "reduce":
            expected = cyclic_reduce(current)
        elif s.kind == "relator":
            n = len(s.removed)
            if current[s.position : s.position + n] != s.removed:
                raise ValueError(f"step {k} removes a factor that is not there")
            if s.removed + inverse(s.inserted) not in rels:
                raise ValueError(f"step {k} does not use a relator")
            expected = current[: s.position] + s.inserted + current[s.position + n :]
        else:
            raise ValueError(f"step {k} has unknown kind {s.kind!r}")
        if s.after != expected:
            raise ValueError(f"step {k} produces the wrong word")
        current = s.after
    return current


def dehn_reduce(w: Sequence[int], p: Presentation) -> DehnResult:
    """Run Dehn's algorithm without checking the small-cancellation condition.

    Each relator step replaces a factor matching more than half of a
    symmetrized relator ``r = u v`` (``u`` matched) by ``v^-1``; the longest
    match is taken, earliest first.  Stops at the empty word or when no
    step applies.
    """
    rels = symmetrize(p)
    steps: list[DehnStep] = []
    current = tuple(w)
    while True:
        reduced = cyclic_reduce(current)
        if reduced != current:
            steps.append(DehnStep("reduce", current, reduced))
            current = reduced
        if not current:
            return DehnResult(Verdict.TRIVIAL, steps, current)
        best = None
        for pos in range(len(current)):
            tail = current[pos:]
            for r in rels:
                n = _common_prefix(tail, r)
                if 2 * n > len(r) and (best is None or n > best[0]):
                    best = (n, pos, r)
        if best is None:
            return DehnResult(Verdict.NONTRIVIAL, steps, current)
        n, pos, r = best
        removed, inserted = r[:n], inverse(r[n:])
        after = current[:pos] + inserted + current[pos + n :]
        steps.append(DehnStep("relator", current, after, pos, removed, inserted))
        current = after


def dehn_decide(w: Sequence[int], p: Presentation) -> DehnResult:
    """Word problem for a C'(1/6) presentation.

    ``NONTRIVIAL`` is sound because in a C'(1/6) group every nonempty
    reduced word equal to the identity contains more than half of some
    relator.  Presentations failing C'(1/6) get ``UNSUPPORTED``.
    """
    if not check_metric_condition(p, Fraction(1, 6)).holds:
        return DehnResult(Verdict.UNSUPPORTED, [], tuple(w))
    return dehn_reduce(w, p)


GENUS2 = Presentation.from_strings("abcd", ["a b a- b- c d c- d-"])
