"""Monomial algebras as finite automata: construction, growth and its class.

A finitely presented monomial algebra has a regular language of nonzero
words.  Its growth function counts those words by length; the shape of the
minimal automaton's cycles tells exponential from polynomial growth and, in
the polynomial case, gives the Gelfand–Kirillov dimension.

The unit (empty word) is counted, so ``growth(a, n)[0] == 1`` whenever the
language is nonempty.
"""

from __future__ import annotations

import enum
import math
from collections import deque
from dataclasses import dataclass
from typing import Hashable, Iterable, Mapping

import numpy as np

from .words import Alphabet

State = Hashable


@dataclass(frozen=True)
class Automaton:
    """Finite automaton without epsilon moves.

    ``transitions`` maps ``(state, letter)`` to a frozenset of targets;
    missing keys mean no transition.
    """

    alphabet: tuple[str, ...]
    states: frozenset
    transitions: Mapping[tuple[State, str], frozenset]
    initial: frozenset
    accepting: frozenset

    @classmethod
    def build(
        cls,
        alphabet: Iterable[str],
        transitions: Iterable[tuple[State, str, State]],
        initial: Iterable[State],
        accepting: Iterable[State],
        states: Iterable[State] = (),
    ) -> "Automaton":
        alphabet = tuple(alphabet)
        table: dict[tuple[State, str], set] = {}
        all_states = set(states) | set(initial) | set(accepting)
        for p, a, q in transitions:
            if a not in alphabet:
                raise ValueError(f"letter {a!r} not in alphabet")
            table.setdefault((p, a), set()).add(q)
            all_states |= {p, q}
        return cls(
            alphabet,
            frozenset(all_states),
            {k: frozenset(v) for k, v in table.items()},
            frozenset(initial),
            frozenset(accepting),
        )

    def targets(self, state: State, letter: str) -> frozenset:
        return self.transitions.get((state, letter), frozenset())

    def edges(self) -> list[tuple[State, str, State]]:
        return [(p, a, q) for (p, a), qs in self.transitions.items() for q in qs]

    @property
    def is_deterministic(self) -> bool:
        return len(self.initial) <= 1 and all(len(qs) <= 1 for qs in self.transitions.values())

    def accepts(self, word: str) -> bool:
        current = set(self.initial)
        for a in word:
            current = {q for p in current for q in self.targets(p, a)}
            if not current:
                return False
        return not current.isdisjoint(self.accepting)

    def to_dot(self, name: str = "automaton") -> str:
        index = {s: i for i, s in enumerate(sorted(self.states, key=repr))}
        lines = [f"digraph {name} {{", "  rankdir=LR;", '  __start [shape=point, label=""];']
        for s, i in index.items():
            shape = "doublecircle" if s in self.accepting else "circle"
            lines.append(f'  q{i} [shape={shape}, label="{s}"];')
        for s in sorted(self.initial, key=repr):
            lines.append(f"  __start -> q{index[s]};")
        for p, a, q in sorted(self.edges(), key=repr):
            lines.append(f'  q{index[p]} -> q{index[q]} [label="{a}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _renumber(a: Automaton, order: list[State]) -> Automaton:
    index = {s: i for i, s in enumerate(order)}
    return Automaton(
        a.alphabet,
        frozenset(index.values()),
        {
            (index[p], x): frozenset(index[q] for q in qs if q in index)
            for (p, x), qs in a.transitions.items()
            if p in index and any(q in index for q in qs)
        },
        frozenset(index[s] for s in a.initial if s in index),
        frozenset(index[s] for s in a.accepting if s in index),
    )


def _bfs_order(a: Automaton) -> list[State]:
    seen = []
    marked = set()
    queue = deque(sorted(a.initial, key=repr))
    marked.update(queue)
    while queue:
        p = queue.popleft()
        seen.append(p)
        for x in a.alphabet:
            for q in sorted(a.targets(p, x), key=repr):
                if q not in marked:
                    marked.add(q)
                    queue.append(q)
    return seen


def trim(a: Automaton) -> Automaton:
    """Keep states that are reachable and co-reachable; renumber in BFS order."""
    reachable = set(_bfs_order(a))
    back: dict[State, set] = {}
    for p, _, q in a.edges():
        back.setdefault(q, set()).add(p)
    coreach = set(a.accepting)
    stack = list(coreach)
    while stack:
        q = stack.pop()
        for p in back.get(q, ()):
            if p not in coreach:
                coreach.add(p)
                stack.append(p)
    keep = reachable & coreach
    order = [s for s in _bfs_order(a) if s in keep]
    return _renumber(a, order)


def is_trim(a: Automaton) -> bool:
    return len(trim(a).states) == len(a.states)


def build_normal_word_automaton(alphabet: Alphabet | Iterable[str], forbidden: Iterable[str]) -> Automaton:
    """Trim deterministic automaton for words containing no forbidden factor.

    States are the Aho–Corasick trie nodes that do not end with a forbidden
    word; every live state is accepting.
    """
    letters = tuple(alphabet)
    forbidden = list(forbidden)
    for w in forbidden:
        if not w:
            raise ValueError("forbidden words must be nonempty")
        for x in w:
            if x not in letters:
                raise ValueError(f"letter {x!r} of {w!r} not in alphabet")
    goto: list[dict[str, int]] = [{}]
    prefix = [""]
    for w in forbidden:
        node = 0
        for x in w:
            if x not in goto[node]:
                goto.append({})
                prefix.append(prefix[node] + x)
                goto[node][x] = len(goto) - 1
            node = goto[node][x]
    fset = set(forbidden)
    fail = [0] * len(goto)
    dead = [prefix[i] in fset for i in range(len(goto))]
    delta: list[dict[str, int]] = [dict() for _ in goto]
    queue = deque([0])
    while queue:
        s = queue.popleft()
        dead[s] = dead[s] or dead[fail[s]]
        for x in letters:
            if x in goto[s]:
                t = goto[s][x]
                fail[t] = delta[fail[s]][x] if s else 0
                delta[s][x] = t
                queue.append(t)
            else:
                delta[s][x] = delta[fail[s]][x] if s else 0
    transitions = [(s, x, delta[s][x]) for s in range(len(goto)) if not dead[s] for x in letters if not dead[delta[s][x]]]
    live = [s for s in range(len(goto)) if not dead[s]]
    if dead[0]:
        return Automaton(letters, frozenset(), {}, frozenset(), frozenset())
    a = Automaton.build(letters, transitions, [0], live, states=live)
    return trim(a)


def determinize(a: Automaton) -> Automaton:
    """Subset construction, restricted to reachable nonempty subsets."""
    start = frozenset(a.initial)
    if not start:
        return Automaton(a.alphabet, frozenset({0}), {}, frozenset({0}), frozenset())
    order = [start]
    index = {start: 0}
    transitions = []
    queue = deque([start])
    while queue:
        S = queue.popleft()
        for x in a.alphabet:
            T = frozenset(q for p in S for q in a.targets(p, x))
            if not T:
                continue
            if T not in index:
                index[T] = len(order)
                order.append(T)
                queue.append(T)
            transitions.append((index[S], x, index[T]))
    accepting = [i for i, S in enumerate(order) if not S.isdisjoint(a.accepting)]
    return Automaton.build(a.alphabet, transitions, [0], accepting, states=range(len(order)))


def minimize(a: Automaton) -> Automaton:
    """Moore partition refinement on a deterministic automaton, then trim."""
    if not a.is_deterministic:
        raise ValueError("minimize needs a deterministic automaton")
    dead = object()
    states = list(a.states) + [dead]

    def step(p, x):
        if p is dead:
            return dead
        qs = a.targets(p, x)
        return next(iter(qs)) if qs else dead

    block = {s: int(s in a.accepting) for s in states}
    while True:
        sigs = {s: (block[s],) + tuple(block[step(s, x)] for x in a.alphabet) for s in states}
        ids: dict[tuple, int] = {}
        new = {s: ids.setdefault(sigs[s], len(ids)) for s in states}
        if len(ids) == len(set(block.values())):
            break
        block = new
    transitions = {(block[p], x, block[step(p, x)]) for p in a.states for x in a.alphabet}
    transitions = [t for t in transitions if t[2] != block[dead]]
    reps = {block[s] for s in a.states if block[s] != block[dead]}
    accepting = {block[s] for s in a.accepting}
    initial = [block[s] for s in a.initial if block[s] != block[dead]]
    return trim(Automaton.build(a.alphabet, transitions, initial, accepting, states=reps))


def growth_per_length(a: Automaton, n: int) -> list[int]:
    """Number of accepted words of each length 0..n (exact integers)."""
    if not a.is_deterministic:
        raise ValueError("growth needs a deterministic automaton")
    counts = {s: 1 for s in a.initial}
    out = []
    for k in range(n + 1):
        out.append(sum(c for s, c in counts.items() if s in a.accepting))
        if k == n:
            break
        nxt: dict[State, int] = {}
        for s, c in counts.items():
            for x in a.alphabet:
                for q in a.targets(s, x):
                    nxt[q] = nxt.get(q, 0) + c
        counts = nxt
    return out


def growth(a: Automaton, n: int) -> list[int]:
    """Cumulative growth V(0), ..., V(n): accepted words of length at most k."""
    out, total = [], 0
    for c in growth_per_length(a, n):
        total += c
        out.append(total)
    return out


class Growth(enum.Enum):
    EXPONENTIAL = "exponential"
    POLYNOMIAL = "polynomial"
    FINITE = "finite"


@dataclass(frozen=True)
class GrowthClass:
    kind: Growth
    gk: int | None = None

    def __str__(self) -> str:
        if self.kind is Growth.POLYNOMIAL:
            return f"polynomial (GK dimension {self.gk})"
        return self.kind.value


def strongly_connected_components(nodes: Iterable[State], edges: Iterable[tuple[State, State]]) -> list[list[State]]:
    """Tarjan's algorithm, iterative; components come out in reverse topological order."""
    nodes = list(nodes)
    succ: dict[State, list] = {v: [] for v in nodes}
    for p, q in edges:
        succ[p].append(q)
    index: dict[State, int] = {}
    low: dict[State, int] = {}
    on_stack: set = set()
    stack: list = []
    comps = []
    counter = 0
    for root in nodes:
        if root in index:
            continue
        work = [(root, iter(succ[root]))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            v, it = work[-1]
            for w in it:
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(succ[w])))
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            else:
                work.pop()
                if work:
                    low[work[-1][0]] = min(low[work[-1][0]], low[v])
                if low[v] == index[v]:
                    comp = []
                    while True:
                        w = stack.pop()
                        on_stack.discard(w)
                        comp.append(w)
                        if w == v:
                            break
                    comps.append(comp)
    return comps


def _cycle_structure(a: Automaton):
    labelled = a.edges()
    comps = strongly_connected_components(a.states, [(p, q) for p, _, q in labelled])
    comp_of = {s: i for i, c in enumerate(comps) for s in c}
    inner = [0] * len(comps)
    for p, _, q in labelled:
        if comp_of[p] == comp_of[q]:
            inner[comp_of[p]] += 1
    return comps, comp_of, inner


def has_doubly_cyclic_vertex(a: Automaton) -> bool:
    """Some state lies on two distinct cycles.

    Within a strongly connected component that happens exactly when the
    component has more internal edges than states.
    """
    comps, _, inner = _cycle_structure(a)
    return any(inner[i] > len(c) for i, c in enumerate(comps))


def classify_growth(a: Automaton) -> GrowthClass:
    """Exponential, polynomial of a given GK dimension, or finite.

    The automaton is minimized first.  Without doubly cyclic states each
    cyclic component is a single cycle and the GK dimension is the largest
    number of cycles met along one path of the component graph.
    """
    if not a.is_deterministic:
        raise ValueError("classify_growth needs a deterministic automaton")
    if not is_trim(a):
        raise ValueError("classify_growth needs a trimmed automaton")
    m = minimize(a)
    comps, comp_of, inner = _cycle_structure(m)
    if any(inner[i] > len(c) for i, c in enumerate(comps)):
        return GrowthClass(Growth.EXPONENTIAL)
    cyclic = [int(inner[i] > 0) for i in range(len(comps))]
    # Tarjan emits sinks first, so successors are scored before predecessors.
    succ: dict[int, set] = {i: set() for i in range(len(comps))}
    for p, _, q in m.edges():
        if comp_of[p] != comp_of[q]:
            succ[comp_of[p]].add(comp_of[q])
    best = [0] * len(comps)
    for i in range(len(comps)):
        best[i] = cyclic[i] + max((best[j] for j in succ[i]), default=0)
    d = max(best, default=0)
    if d == 0:
        return GrowthClass(Growth.FINITE)
    return GrowthClass(Growth.POLYNOMIAL, d)


def gk_estimate(a: Automaton, n: int) -> float:
    """``ln V(n) / ln n``.

    For polynomial growth of degree d, V(n) is about c·n^d with c <= 1 in
    practice, so the ratio approaches d slowly and usually from below.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    v = growth(a, n)[-1]
    if v == 0:
        return float("-inf")
    return math.log(v) / math.log(n)


def spectral_radius(a: Automaton) -> float:
    """Largest eigenvalue modulus of the transition-count matrix.

    Exceeds 1 exactly for exponential growth of a trimmed automaton.
    """
    states = sorted(a.states, key=repr)
    if not states:
        return 0.0
    index = {s: i for i, s in enumerate(states)}
    m = np.zeros((len(states), len(states)))
    for p, _, q in a.edges():
        m[index[p], index[q]] += 1
    return float(max(abs(np.linalg.eigvals(m))))


def read_forbidden(text: str) -> list[str]:
    """One forbidden word per line; blank lines and ``#`` comments skipped."""
    out = []
    for raw in text.splitlines():
        w = raw.split("#", 1)[0].strip()
        if w:
            out.append(w)
    return out
