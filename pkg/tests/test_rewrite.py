import itertools
from math import comb

import pytest

from ringwords.freealg import NcPoly, parse_poly
from ringwords.rewrite import (
    Membership,
    ReductionTrace,
    RelationSet,
    SimplificationScheme,
    Status,
    complete,
    compositions,
    diamond_report,
    interreduce,
    is_groebner_shirshov,
    is_member,
    normal_form,
    normal_words,
    reduce,
)
from ringwords.words import Alphabet

from oracles import all_words, rank

XY = Alphabet("xy")


def test_relation_set_normalizes_to_monic():
    rs = RelationSet.of(["2*yx - 4*xy"])
    assert rs.polys[0] == parse_poly("yx - 2*xy")
    assert rs.leads == ["yx"]
    with pytest.raises(ValueError):
        RelationSet((parse_poly("2*yx"),))
    with pytest.raises(ValueError):
        RelationSet.of(["x - x"])


def test_reduce_commutator_example():
    rs = RelationSet.of(["yx - xy"])
    trace = reduce(parse_poly("yyx - xyy"), rs)
    assert trace.result == NcPoly()
    assert len(trace.steps) == 2
    assert trace.replay(rs) == trace.result


def test_reduction_is_bounded_by_input_lead():
    rs = RelationSet.of(["yx - xy", "xx - y"])
    p = parse_poly("yxyx + 3*xxy - y")
    trace = reduce(p, rs)
    lead = rs.order.key(rs.order.max(p.monomials()))
    for s in trace.steps:
        assert rs.order.key(s.left + rs.leads[s.rule] + s.right) <= lead
    assert trace.replay(rs) == trace.result
    # the normal form contains no leading monomial
    assert all(lead not in w for w in trace.result.monomials() for lead in rs.leads)


def test_trace_export_roundtrip():
    rs = RelationSet.of(["yx - xy"])
    trace = reduce(parse_poly("yyx"), rs)
    text = trace.export()
    assert text.splitlines()[0] == "0, y, 1, 1"
    steps = ReductionTrace.parse_steps(text)
    assert steps == trace.steps
    with pytest.raises(ValueError):
        ReductionTrace.parse_steps("0, y, 1\n")


def test_compositions():
    (f,) = RelationSet.of(["xyx - yxy"]).polys  # lead yxy
    (c,) = compositions(f, f)
    # the only self-overlap is on the letter y: yxy·xy = yx·yxy
    assert c == f.sandwich("", "xy") - f.sandwich("yx", "")
    assert c == parse_poly("yxxyx - xyxxy")
    with pytest.raises(ValueError):
        compositions(parse_poly("2*x"), parse_poly("x"))
    # zero compositions are kept
    g = parse_poly("xx")
    assert compositions(g, g) == [NcPoly()]


@pytest.mark.parametrize("rels", [["yx - xy"], ["xx - x"], ["yx"], ["yx - xy", "xx"]])
def test_complete_examples(rels):
    rs = RelationSet.of(rels)
    basis, status = complete(rs, 8)
    assert status is Status.COMPLETE
    assert is_groebner_shirshov(basis)


def test_commutator_basis_is_already_complete():
    rs = RelationSet.of(["yx - xy"])
    basis, status = complete(rs, 8)
    assert status is Status.COMPLETE
    assert basis.polys == rs.polys
    words = normal_words(basis, XY, 8)
    assert len(words) == comb(10, 2)
    for n in range(9):
        assert sum(len(w) == n for w in words) == n + 1


def test_complete_bound_exceeded():
    _, status = complete(RelationSet.of(["xyx - yxy"]), 6)
    assert status is Status.BOUND_EXCEEDED
    with pytest.raises(ValueError):
        complete(RelationSet.of(["xyx - yxy"]), 2)


def test_completion_adds_consequences():
    rs = RelationSet.of(["yy - x"])
    basis, status = complete(rs, 8)
    assert status is Status.COMPLETE
    assert is_groebner_shirshov(basis)
    for p in rs:
        assert normal_form(p, basis) == NcPoly()
    # yyy reduces both ways, forcing yx = xy
    assert normal_form(parse_poly("yx - xy"), basis) == NcPoly()


def _graded_dims(rels, d):
    """dim of degree-d component of the quotient, by linear algebra on
    all products u*g*v."""
    spanning = []
    for g in rels:
        k = d - g.degree()
        if k < 0:
            continue
        for i in range(k + 1):
            for u in all_words("xy", i):
                for v in all_words("xy", k - i):
                    spanning.append(g.sandwich(u, v))
    return 2**d - rank(spanning)


@pytest.mark.parametrize(
    "rels",
    [["yx - xy"], ["xyx - yxy"], ["xx - yy"], ["yx - xx"], ["yxy - xyy", "yyx"], ["xy + yx"], ["yyx - 2*xyx + xxy"]],
)
def test_normal_words_match_quotient_dimension(rels):
    # homogeneous relations: truncating completion at D is exact up to degree D
    D = 6
    basis, _ = complete(RelationSet.of(rels), D)
    words = normal_words(basis, XY, D)
    polys = [parse_poly(r) for r in rels]
    for d in range(D + 1):
        assert sum(len(w) == d for w in words) == _graded_dims(polys, d), d


def test_interreduce_clears_inclusions():
    basis = interreduce([parse_poly("xyx - y"), parse_poly("y - x")])
    leads = RelationSet(tuple(basis)).leads
    assert all(a == b or a not in b for a in leads for b in leads)


def test_membership():
    rs = RelationSet.of(["yx - xy"])
    h = parse_poly("yyx - xyy")
    res = is_member(h, rs, 8)
    assert res.verdict is Membership.IN_IDEAL and res
    assert res.trace.replay(res.basis) == NcPoly()
    bound = res.basis.order.key(h.monomials()[0] if len(h) == 1 else res.basis.order.max(h.monomials()))
    for s in res.trace.steps:
        assert res.basis.order.key(s.left + res.basis.leads[s.rule] + s.right) <= bound
    out = is_member(parse_poly("x"), rs, 8)
    assert out.verdict is Membership.NOT_IN_IDEAL
    assert out.normal_form == parse_poly("x")
    assert is_member(parse_poly("xyx"), RelationSet.of(["xyx - yxy"]), 4).verdict is Membership.UNKNOWN
    assert is_member(NcPoly(), rs, 8).verdict is Membership.IN_IDEAL


# -- diamond lemma --------------------------------------------------------------


def _reach(nodes, edges):
    out = {}
    for n in nodes:
        seen, stack = {n}, [n]
        while stack:
            x = stack.pop()
            for a, b in edges:
                if a == x and b not in seen:
                    seen.add(b)
                    stack.append(b)
        out[n] = seen
    return out


def _upper_triangular_dags(n):
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield [p for i, p in enumerate(pairs) if mask >> i & 1]


def test_descendants_match_reachability():
    for edges in _upper_triangular_dags(4):
        s = SimplificationScheme(range(4), edges)
        assert s.descendants() == _reach(range(4), edges)


def test_cycle_rejected():
    with pytest.raises(ValueError):
        SimplificationScheme([1, 2], [(1, 2), (2, 1)])


@pytest.mark.parametrize(
    "edges, expected",
    [
        ([("a", "b"), ("b", "c")], True),
        ([("a", "b"), ("a", "c")], False),
        ([("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")], True),
    ],
)
def test_diamond_examples(edges, expected):
    r = diamond_report(SimplificationScheme([], edges))
    assert r.values() == (expected,) * 5 and r.consistent


def test_diamond_conditions_agree_on_all_small_dags():
    for n in range(1, 6):
        for edges in _upper_triangular_dags(n):
            r = diamond_report(SimplificationScheme(range(n), edges))
            assert r.consistent, edges
            # canonical forms, checked directly against reachability
            reach = _reach(range(n), edges)
            sinks = {x for x in range(n) if not any(a == x for a, _ in edges)}
            assert r.canonical == all(len(reach[x] & sinks) == 1 for x in range(n))


def test_diamond_raw_edge_sets():
    # every edge subset on 4 labelled nodes, acyclic ones only
    pairs = [(a, b) for a in range(4) for b in range(4) if a != b]
    count = 0
    for mask in range(1 << len(pairs)):
        edges = [p for i, p in enumerate(pairs) if mask >> i & 1]
        try:
            s = SimplificationScheme(range(4), edges)
        except ValueError:
            continue
        count += 1
        assert diamond_report(s).consistent
    assert count == 543  # labelled DAGs on 4 nodes
