"""Letter-to-word substitutions and power-freeness.

Includes the two classical Thue morphisms, executable checks of the
hypotheses of Thue's square-free criterion, and Crochemore's finite test
for square-free morphisms.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping


@dataclass(frozen=True)
class Morphism:
    """A substitution sending each source letter to a nonempty word."""

    images: Mapping[str, str]

    def __post_init__(self):
        if not self.images:
            raise ValueError("a morphism needs at least one letter")
        for a, img in self.images.items():
            if len(a) != 1:
                raise ValueError(f"source letters must be single characters, got {a!r}")
            if not img:
                raise ValueError(f"image of {a!r} is empty")

    @property
    def source(self) -> tuple[str, ...]:
        return tuple(self.images)

    def __call__(self, w: str) -> str:
        return apply_morphism(self, w)

    @classmethod
    def parse(cls, text: str) -> "Morphism":
        """Lines of the form ``a -> abc``; blank lines and ``#`` comments skipped."""
        images = {}
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "->" not in line:
                raise ValueError(f"line {lineno}, column 1: expected 'letter -> image'")
            left, right = (x.strip() for x in line.split("->", 1))
            if len(left) != 1:
                raise ValueError(f"line {lineno}, column 1: source must be one letter, got {left!r}")
            if not right:
                col = raw.index("->") + 3
                raise ValueError(f"line {lineno}, column {col}: empty image")
            if left in images:
                raise ValueError(f"line {lineno}, column 1: letter {left!r} defined twice")
            images[left] = right
        return cls(images)

    def format(self) -> str:
        return "".join(f"{a} -> {img}\n" for a, img in self.images.items())


THUE_BINARY = Morphism({"a": "ab", "b": "ba"})
THUE_TERNARY = Morphism({"a": "abcab", "b": "acabcb", "c": "acbcacb"})

NAMED = {"thue-binary": THUE_BINARY, "thue-ternary": THUE_TERNARY}


def apply_morphism(phi: Morphism, w: str) -> str:
    try:
        return "".join(phi.images[a] for a in w)
    except KeyError as exc:
        raise ValueError(f"letter {exc.args[0]!r} is outside the source alphabet") from None


@dataclass(frozen=True)
class PowerOccurrence:
    start: int
    period: int
    k: int

    def factor(self, w: str) -> str:
        return w[self.start : self.start + self.k * self.period]


def is_power_free(w: str, k: int) -> PowerOccurrence | None:
    """None if ``w`` has no factor ``u^k`` with ``u`` nonempty, else the
    earliest such occurrence, taking the shortest period at that start."""
    if k not in (2, 3):
        raise ValueError("k must be 2 or 3")
    n = len(w)
    for start in range(n):
        for p in range(1, (n - start) // k + 1):
            u = w[start : start + p]
            if all(w[start + j * p : start + (j + 1) * p] == u for j in range(1, k)):
                return PowerOccurrence(start, p, k)
    return None


def _ends_with_power(w: str, k: int) -> bool:
    n = len(w)
    for p in range(1, n // k + 1):
        u = w[n - p :]
        if all(w[n - (j + 1) * p : n - j * p] == u for j in range(1, k)):
            return True
    return False


def power_free_words(alphabet, max_len: int, k: int = 2, *, include_empty: bool = False) -> Iterator[str]:
    """All k-power-free words up to ``max_len``, grown letter by letter."""
    letters = tuple(alphabet)
    if include_empty:
        yield ""
    layer = [""]
    for _ in range(max_len):
        nxt = []
        for w in layer:
            for a in letters:
                x = w + a
                if not _ends_with_power(x, k):
                    nxt.append(x)
        yield from nxt
        layer = nxt


def iterate_fixed_point(phi: Morphism, seed: str, min_len: int) -> str:
    """Shortest iterate ``phi^j(seed)``, j >= 0, of length at least ``min_len``."""
    if seed not in phi.images or not phi.images[seed].startswith(seed):
        raise ValueError(f"morphism is not prolongable on {seed!r}")
    w = seed
    while len(w) < min_len:
        nxt = apply_morphism(phi, w)
        if len(nxt) == len(w):
            raise ValueError(f"iterates of {seed!r} never reach length {min_len}")
        w = nxt
    return w


@dataclass(frozen=True)
class ThueReport:
    short_images_square_free: bool
    images_factor_free: bool

    def __bool__(self) -> bool:
        return self.short_images_square_free and self.images_factor_free


def check_thue3_conditions(phi: Morphism) -> ThueReport:
    """Hypotheses of Thue's criterion: images of square-free words of length
    at most 3 are square-free, and no letter's image is a factor of another's."""
    cond1 = all(
        is_power_free(apply_morphism(phi, w), 2) is None
        for w in power_free_words(phi.source, 3, 2)
    )
    cond2 = not any(
        phi.images[a] in phi.images[b] for a in phi.source for b in phi.source if a != b
    )
    return ThueReport(cond1, cond2)


@dataclass(frozen=True)
class CrochemoreResult:
    k: int
    square_free: bool
    counterexample: str | None = None


def crochemore_bound(phi: Morphism) -> int:
    """``max(3, 1 + floor((M - 3) / m))`` for the longest and shortest image."""
    lengths = [len(img) for img in phi.images.values()]
    M, m = max(lengths), min(lengths)
    return max(3, 1 + (M - 3) // m)


def crochemore_test(phi: Morphism) -> CrochemoreResult:
    """Decide whether ``phi`` maps square-free words to square-free words.

    Only square-free source words up to the Crochemore bound need checking.
    """
    k = crochemore_bound(phi)
    for w in power_free_words(phi.source, k, 2):
        if is_power_free(apply_morphism(phi, w), 2) is not None:
            return CrochemoreResult(k, False, w)
    return CrochemoreResult(k, True)


def square_free_word(length: int) -> str:
    """A square-free ternary word of the given length (prefix of a Thue fixed point)."""
    if length <= 0:
        return ""
    return iterate_fixed_point(THUE_TERNARY, "a", length)[:length]
