"""Reduction, Gröbner–Shirshov completion and the diamond lemma.

Relations are monic noncommutative polynomials; a monomial is rewritten
whenever it contains the leading monomial of a relation as a factor.
Completion adds normal forms of compositions (overlap ambiguities) up to a
degree bound, so ideal membership is a semidecision that answers
``UNKNOWN`` rather than guessing.
"""

from __future__ import annotations

import enum
import graphlib
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Hashable, Iterable, Sequence

from .freealg import DEGLEX, DegLex, NcPoly, leading_monomial, monic, read_polys
from .words import Alphabet


@dataclass(frozen=True)
class RelationSet:
    polys: tuple[NcPoly, ...]
    order: DegLex = DEGLEX

    def __post_init__(self):
        for p in self.polys:
            if not p:
                raise ValueError("relation sets may not contain the zero polynomial")
            if leading_monomial(p, self.order)[1] != 1:
                raise ValueError(f"relation {p} is not monic; use RelationSet.of()")

    @classmethod
    def of(cls, polys: Iterable[NcPoly | str], order: DegLex = DEGLEX) -> "RelationSet":
        """Build from arbitrary nonzero polynomials (or their text), normalizing to monic."""
        out = []
        for p in polys:
            if isinstance(p, str):
                p = NcPoly.parse(p)
            if not p:
                raise ValueError("relation sets may not contain the zero polynomial")
            out.append(monic(p, order))
        return cls(tuple(out), order)

    @classmethod
    def read(cls, text: str, order: DegLex = DEGLEX) -> "RelationSet":
        return cls.of(read_polys(text), order)

    @property
    def leads(self) -> list[str]:
        return [leading_monomial(p, self.order)[0] for p in self.polys]

    def __len__(self) -> int:
        return len(self.polys)

    def __iter__(self):
        return iter(self.polys)


@dataclass(frozen=True)
class Step:
    rule: int
    left: str
    right: str
    coeff: Fraction


@dataclass
class ReductionTrace:
    """Record of ``result = start - sum(coeff * left * g[rule] * right)``."""

    start: NcPoly
    steps: list[Step]
    result: NcPoly

    def replay(self, relations: RelationSet) -> NcPoly:
        p = self.start
        for s in self.steps:
            p = p - relations.polys[s.rule].sandwich(s.left, s.right, s.coeff)
        return p

    def export(self) -> str:
        """Line-oriented log ``rule#, left, right, coeff`` (empty words as ``1``)."""
        return "".join(
            f"{s.rule}, {s.left or '1'}, {s.right or '1'}, {s.coeff}\n" for s in self.steps
        )

    @staticmethod
    def parse_steps(text: str) -> list[Step]:
        steps = []
        for lineno, line in enumerate(text.splitlines(), start=1):
            if not line.strip():
                continue
            parts = [x.strip() for x in line.split(",")]
            if len(parts) != 4:
                raise ValueError(f"line {lineno}: expected 4 comma-separated fields")
            rule, left, right, coeff = parts
            steps.append(
                Step(
                    int(rule),
                    "" if left == "1" else left,
                    "" if right == "1" else right,
                    Fraction(coeff),
                )
            )
        return steps


def _find_reducible(p: NcPoly, leads: Sequence[str], order: DegLex):
    for w in order.sorted(p.monomials(), reverse=True):
        for i, lead in enumerate(leads):
            pos = w.find(lead)
            if pos >= 0:
                return w, i, pos
    return None


def reduce(p: NcPoly, relations: RelationSet) -> ReductionTrace:
    """Full reduction to normal form.

    Always rewrites the greatest reducible monomial, so every rewritten
    monomial ``u·lead·v`` is bounded by the leading monomial of the input.
    """
    leads = relations.leads
    steps = []
    current = p
    while True:
        hit = _find_reducible(current, leads, relations.order)
        if hit is None:
            return ReductionTrace(p, steps, current)
        w, i, pos = hit
        c = current.coeff(w)
        left, right = w[:pos], w[pos + len(leads[i]) :]
        current = current - relations.polys[i].sandwich(left, right, c)
        steps.append(Step(i, left, right, c))


def normal_form(p: NcPoly, relations: RelationSet) -> NcPoly:
    return reduce(p, relations).result


def _ambiguities(f: NcPoly, g: NcPoly, order: DegLex) -> list[tuple[str, NcPoly]]:
    """(ambiguity word, composition) for overlaps of f-lead·c = a·g-lead and
    inclusions f-lead = a·g-lead·c."""
    F, _ = leading_monomial(f, order)
    G, _ = leading_monomial(g, order)
    out = []
    for k in range(1, min(len(F), len(G))):
        if F[-k:] == G[:k]:
            a, c = F[:-k], G[k:]
            out.append((F + c, f.sandwich("", c) - g.sandwich(a, "")))
    if f != g:
        start = F.find(G)
        while start >= 0:
            a, c = F[:start], F[start + len(G) :]
            out.append((F, f - g.sandwich(a, c)))
            start = F.find(G, start + 1)
    return out


def compositions(f: NcPoly, g: NcPoly, order: DegLex = DEGLEX) -> list[NcPoly]:
    """Compositions of ``f`` with ``g``: one per proper overlap of the leading
    monomials (``lead(f)`` suffix meets ``lead(g)`` prefix) and one per
    occurrence of ``lead(g)`` inside ``lead(f)``.  Zero compositions are kept.
    """
    for p in (f, g):
        if leading_monomial(p, order)[1] != 1:
            raise ValueError(f"{p} is not monic")
    return [c for _, c in _ambiguities(f, g, order)]


def interreduce(polys: Iterable[NcPoly], order: DegLex = DEGLEX) -> list[NcPoly]:
    """Reduce each polynomial modulo the others until nothing changes.

    Leading monomials of the result are pairwise factor-free, which disposes
    of all inclusion ambiguities.
    """
    basis = [monic(p, order) for p in polys if p]
    changed = True
    while changed:
        changed = False
        basis.sort(key=lambda p: order.key(leading_monomial(p, order)[0]))
        for i, p in enumerate(basis):
            others = RelationSet(tuple(basis[:i] + basis[i + 1 :]), order)
            r = normal_form(p, others)
            if r != p:
                basis = basis[:i] + ([monic(r, order)] if r else []) + basis[i + 1 :]
                changed = True
                break
    basis.sort(key=lambda p: order.key(leading_monomial(p, order)[0]))
    return basis


class Status(enum.Enum):
    COMPLETE = "complete"
    BOUND_EXCEEDED = "bound_exceeded"


def complete(relations: RelationSet, max_deg: int) -> tuple[RelationSet, Status]:
    """Gröbner–Shirshov completion truncated at ``max_deg``.

    Ambiguities of degree at most ``max_deg`` are resolved in increasing
    order of their ambiguity word, adding normal forms of nonzero
    compositions.  ``COMPLETE`` is returned only when every composition of
    the final set (of any degree) reduces to zero; otherwise some composition
    beyond the bound is unresolved and the status is ``BOUND_EXCEEDED``.
    """
    order = relations.order
    if relations.polys and max_deg < max(p.degree() for p in relations.polys):
        raise ValueError("max_deg is below the degree of the input relations")
    basis = interreduce(relations.polys, order)
    resolved: set[tuple[NcPoly, NcPoly, str]] = set()
    while True:
        current = RelationSet(tuple(basis), order)
        pending = []
        for f, g in itertools.product(basis, repeat=2):
            for w, comp in _ambiguities(f, g, order):
                if (f, g, w) not in resolved:
                    pending.append((order.key(w), w, f, g, comp))
        pending.sort(key=lambda item: item[0])
        added = None
        exceeded = False
        for _, w, f, g, comp in pending:
            r = normal_form(comp, current)
            if len(w) > max_deg:
                exceeded = exceeded or bool(r)
                continue
            if r:
                added = r
                break
            resolved.add((f, g, w))
        if added is None:
            if not exceeded:
                # cached resolutions may predate interreduction; recheck everything
                if any(
                    normal_form(comp, current)
                    for f, g in itertools.product(basis, repeat=2)
                    for _, comp in _ambiguities(f, g, order)
                ):
                    resolved.clear()
                    continue
            return current, (Status.BOUND_EXCEEDED if exceeded else Status.COMPLETE)
        basis = interreduce(basis + [added], order)


def is_groebner_shirshov(relations: RelationSet) -> bool:
    """Every composition of every pair reduces to zero."""
    return not any(
        normal_form(comp, relations)
        for f, g in itertools.product(relations.polys, repeat=2)
        for _, comp in _ambiguities(f, g, relations.order)
    )


class Membership(enum.Enum):
    IN_IDEAL = "in_ideal"
    NOT_IN_IDEAL = "not_in_ideal"
    UNKNOWN = "unknown"


@dataclass
class MembershipResult:
    verdict: Membership
    basis: RelationSet
    trace: ReductionTrace
    bound: int

    @property
    def normal_form(self) -> NcPoly:
        return self.trace.result

    def __bool__(self) -> bool:
        return self.verdict is Membership.IN_IDEAL


def is_member(h: NcPoly, relations: RelationSet, max_deg: int) -> MembershipResult:
    """Decide ``h`` in the two-sided ideal generated by ``relations``.

    ``IN_IDEAL`` carries a trace whose steps, taken against ``basis``, form an
    H-representation of ``h``.  ``NOT_IN_IDEAL`` is definitive because the
    basis was verified complete; ``UNKNOWN`` means completion hit ``max_deg``.
    """
    if not h:
        return MembershipResult(Membership.IN_IDEAL, relations, ReductionTrace(h, [], h), max_deg)
    basis, status = complete(relations, max_deg)
    trace = reduce(h, basis)
    if not trace.result:
        verdict = Membership.IN_IDEAL
    elif status is Status.COMPLETE:
        verdict = Membership.NOT_IN_IDEAL
    else:
        verdict = Membership.UNKNOWN
    return MembershipResult(verdict, basis, trace, max_deg)


def normal_words(relations: RelationSet, alphabet: Alphabet, max_len: int) -> list[str]:
    """Words of length at most ``max_len`` avoiding every leading monomial."""
    leads = relations.leads
    layer = [""]
    out = [""] if "" not in leads else []
    for _ in range(max_len):
        nxt = []
        for w in layer:
            for a in alphabet:
                x = w + a
                # only suffixes of x can be new occurrences
                if not any(x.endswith(lead) for lead in leads):
                    nxt.append(x)
        out.extend(nxt)
        layer = nxt
    if "" in leads:
        return []
    return out


# -- diamond lemma ------------------------------------------------------------


@dataclass(frozen=True)
class SimplificationScheme:
    """Finite directed acyclic graph; an edge ``x -> y`` is one rewrite step."""

    nodes: frozenset
    edges: frozenset

    def __init__(self, nodes: Iterable[Hashable], edges: Iterable[tuple[Hashable, Hashable]]):
        edges = frozenset(edges)
        nodes = frozenset(nodes) | {x for e in edges for x in e}
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "edges", edges)
        graph = {n: set() for n in nodes}
        for x, y in edges:
            graph[y].add(x)
        try:
            order = list(graphlib.TopologicalSorter(graph).static_order())
        except graphlib.CycleError as exc:
            raise ValueError(f"simplification scheme has a cycle: {exc.args[1]}") from None
        object.__setattr__(self, "_order", order)

    def children(self, x) -> set:
        return {b for a, b in self.edges if a == x}

    def descendants(self) -> dict:
        """Reflexive-transitive successors of every node."""
        succ = {n: set() for n in self.nodes}
        for a, b in self.edges:
            succ[a].add(b)
        desc: dict = {}
        # _order lists sources first; walk it backwards so children come first
        for n in reversed(self._order):
            d = {n}
            for c in succ[n]:
                d |= desc[c]
            desc[n] = d
        return desc

    def minimal(self) -> set:
        sources = {a for a, _ in self.edges}
        return set(self.nodes) - sources


@dataclass(frozen=True)
class DiamondReport:
    canonical: bool
    church_rosser_transitive: bool
    locally_confluent: bool
    one_minimum_per_component: bool
    connected_iff_joinable: bool

    def values(self) -> tuple[bool, ...]:
        return (
            self.canonical,
            self.church_rosser_transitive,
            self.locally_confluent,
            self.one_minimum_per_component,
            self.connected_iff_joinable,
        )

    @property
    def consistent(self) -> bool:
        return len(set(self.values())) == 1


def _components(scheme: SimplificationScheme) -> list[set]:
    adj = {n: set() for n in scheme.nodes}
    for a, b in scheme.edges:
        adj[a].add(b)
        adj[b].add(a)
    seen, comps = set(), []
    for n in scheme.nodes:
        if n in seen:
            continue
        stack, comp = [n], set()
        while stack:
            x = stack.pop()
            if x in comp:
                continue
            comp.add(x)
            stack.extend(adj[x] - comp)
        seen |= comp
        comps.append(comp)
    return comps


def diamond_report(scheme: SimplificationScheme) -> DiamondReport:
    """Evaluate the five equivalent diamond-lemma conditions by brute force."""
    desc = scheme.descendants()
    minimal = scheme.minimal()
    nodes = list(scheme.nodes)

    def joinable(x, y) -> bool:
        return not desc[x].isdisjoint(desc[y])

    canonical = all(len(desc[n] & minimal) == 1 for n in nodes)
    transitive = all(
        joinable(x, z)
        for x, y, z in itertools.product(nodes, repeat=3)
        if joinable(x, y) and joinable(y, z)
    )
    local = all(
        joinable(b, c)
        for n in nodes
        for b, c in itertools.combinations(sorted(scheme.children(n), key=repr), 2)
    )
    comps = _components(scheme)
    one_min = all(len(c & minimal) == 1 for c in comps)
    comp_of = {n: i for i, c in enumerate(comps) for n in c}
    conn = all(
        (comp_of[x] == comp_of[y]) == joinable(x, y)
        for x, y in itertools.product(nodes, repeat=2)
    )
    return DiamondReport(canonical, transitive, local, one_min, conn)
