from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ringwords.freealg import (
    DEGLEX,
    DegLex,
    NcPoly,
    PolyParseError,
    expand_bracket,
    format_poly,
    leading_monomial,
    lie_basis,
    monic,
    parse_poly,
    read_polys,
)
from ringwords.words import BINARY, TERNARY, Alphabet, flatten

from oracles import rank

coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=4)
polys = st.dictionaries(st.text(alphabet="xyz", max_size=3), coeffs, max_size=4).map(NcPoly)


@given(polys, polys, polys)
@settings(max_examples=150)
def test_ring_axioms(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert p + q == q + p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert (p + q) * r == p * r + q * r
    assert p - p == NcPoly()
    assert p * 1 == p and 1 * p == p
    assert p * 0 == NcPoly()


@given(polys, polys)
def test_hash_matches_equality(p, q):
    if p == q:
        assert hash(p) == hash(q)
    assert hash(p + q - q) == hash(p)


@given(polys)
def test_print_parse_roundtrip(p):
    assert parse_poly(format_poly(p)) == p


def test_parse_examples():
    p = parse_poly("2*x*y*x - 3*y^2")
    assert p.coeff("xyx") == 2 and p.coeff("yy") == -3
    assert parse_poly("xy - yx + 1/2") == NcPoly({"xy": 1, "yx": -1, "": Fraction(1, 2)})
    assert parse_poly("x y") == NcPoly.monomial("xy")
    assert parse_poly("x*x - x^2") == NcPoly()
    assert parse_poly("0") == NcPoly()
    assert format_poly(NcPoly()) == "0"
    assert format_poly(parse_poly("-3*y^2 + 2xyx")) == "2*x*y*x - 3*y^2"


@pytest.mark.parametrize(
    "text, column",
    [("x + ", 5), ("x ++ y", 4), ("(x)", 1), ("x^y", 3), ("x^1/2", 3), ("2 3", 3), ("", 1), ("x $", 3)],
)
def test_parse_errors_report_column(text, column):
    with pytest.raises(PolyParseError) as err:
        parse_poly(text)
    assert err.value.column == column
    assert err.value.line == 1


def test_read_polys_tracks_lines():
    text = "# relations\nyx - xy\n\nx^2 - x  # idempotent\n"
    assert read_polys(text) == [parse_poly("yx - xy"), parse_poly("x^2 - x")]
    with pytest.raises(PolyParseError) as err:
        read_polys("x\ny +\n")
    assert err.value.line == 2


def test_deglex_order():
    assert DEGLEX.sorted(["yx", "x", "xyz", "y", "", "xy"]) == ["", "x", "y", "xy", "yx", "xyz"]
    rev = DegLex(Alphabet("yx"))
    assert rev.max(["xy", "yx"]) == "xy"


@given(polys.filter(bool), st.text(alphabet="xyz", max_size=3), st.text(alphabet="xyz", max_size=3))
def test_leading_monomial_is_multiplicative(p, u, v):
    lead, c = leading_monomial(p)
    assert c == p.coeff(lead)
    assert all(DEGLEX.key(w) <= DEGLEX.key(lead) for w in p.monomials())
    lead2, c2 = leading_monomial(p.sandwich(u, v))
    assert lead2 == u + lead + v and c2 == c


def test_leading_monomial_of_zero_raises():
    with pytest.raises(ValueError):
        leading_monomial(NcPoly())


def test_monic():
    assert monic(parse_poly("3*yx - xy")) == parse_poly("yx - 1/3*xy")


def test_expand_bracket():
    assert expand_bracket(("y", ("y", "x"))) == parse_poly("y^2*x - 2*y*x*y + x*y^2")
    assert expand_bracket("x") == NcPoly.monomial("x")


def test_jacobi_identity():
    a, b, c = "x", "y", ("x", "y")
    total = (
        expand_bracket((a, (b, c)))
        + expand_bracket((b, (c, a)))
        + expand_bracket((c, (a, b)))
    )
    assert total == NcPoly()


@pytest.mark.parametrize("alphabet, max_deg", [(BINARY, 6), (TERNARY, 4)])
def test_lie_basis_is_independent_with_regular_leads(alphabet, max_deg):
    basis = lie_basis(alphabet, max_deg)
    images = [expand_bracket(t) for t in basis]
    for d in range(1, max_deg + 1):
        layer = [p for p in images if p.degree() == d]
        assert rank(layer) == len(layer)
    # the leading monomial of each basis element is its underlying regular word
    for t, p in zip(basis, images):
        w = flatten(t)
        assert leading_monomial(p, DegLex(alphabet))[0] == w
