"""Exact van der Waerden numbers by backtracking.

Positions are numbered from 1; a coloring is a sequence of color indices
where ``colors[i - 1]`` is the color of ``i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


def find_mono_ap(colors: Sequence[int], n: int) -> tuple[int, int, int] | None:
    """Earliest monochromatic n-term progression as ``(start, step, color)``.

    Ordered by start, then step.
    """
    if n < 2:
        raise ValueError("progressions need at least 2 terms")
    N = len(colors)
    for start in range(1, N + 1):
        c = colors[start - 1]
        for step in range(1, (N - start) // (n - 1) + 1):
            if all(colors[start - 1 + j * step] == c for j in range(1, n)):
                return start, step, c
    return None


@dataclass
class VdwResult:
    """``number`` is W(n, k) when found; otherwise the search proved W > bound.

    ``witness`` is the longest progression-free coloring seen: of length
    ``number - 1`` when found, of length ``bound`` otherwise.
    """

    n: int
    k: int
    bound: int
    number: int | None
    witness: tuple[int, ...]
    nodes: int

    @property
    def found(self) -> bool:
        return self.number is not None


def _longest_free_coloring(n: int, k: int, limit: int) -> tuple[tuple[int, ...], int]:
    """Depth-first search for a coloring of 1..limit without a monochromatic
    n-AP; returns the longest one met and the number of nodes visited.

    Colors are introduced in order (position 1 gets color 0, a new color is
    only the next unused one), which removes the k! color symmetry.
    """
    colors = [0] * (limit + 1)
    masks = [0] * k  # bit i set when position i has that color
    best: list[int] = []
    nodes = 0

    def closes_ap(pos: int, c: int) -> bool:
        m = masks[c]
        for d in range(1, (pos - 1) // (n - 1) + 1):
            for j in range(1, n):
                if not (m >> (pos - j * d)) & 1:
                    break
            else:
                return True
        return False

    # iterative DFS: choice[pos] is the next color to try at pos
    pos = 1
    choice = [0] * (limit + 2)
    used = [0] * (limit + 2)  # number of distinct colors among 1..pos-1
    used[1] = 0
    while pos >= 1:
        if pos > limit:
            best = colors[1 : limit + 1]
            return tuple(best), nodes
        c = choice[pos]
        top = min(k, used[pos] + 1)
        placed = False
        while c < top:
            if not closes_ap(pos, c):
                placed = True
                break
            c += 1
        if placed:
            nodes += 1
            colors[pos] = c
            masks[c] |= 1 << pos
            choice[pos] = c + 1
            used[pos + 1] = max(used[pos], c + 1)
            if pos > len(best):
                best = colors[1 : pos + 1]
            pos += 1
            choice[pos] = 0
        else:
            choice[pos] = 0
            pos -= 1
            if pos >= 1:
                masks[colors[pos]] &= ~(1 << pos)
    return tuple(best), nodes


def vdw_number(n: int, k: int, max_n: int) -> VdwResult:
    """Least N <= ``max_n`` such that every k-coloring of 1..N has a
    monochromatic n-term progression.

    A single exhaustive search to depth ``max_n`` settles every N at once:
    if the longest progression-free coloring has length L < max_n then
    W = L + 1, else W > max_n.
    """
    if n < 2 or k < 1:
        raise ValueError("need n >= 2 and k >= 1")
    witness, nodes = _longest_free_coloring(n, k, max_n)
    if len(witness) < max_n:
        return VdwResult(n, k, max_n, len(witness) + 1, witness, nodes)
    return VdwResult(n, k, max_n, None, witness, nodes)


def format_coloring(colors: Sequence[int]) -> str:
    return "".join(str(c) if c < 10 else chr(ord("a") + c - 10) for c in colors)
