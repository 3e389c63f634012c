"""Noncommutative polynomials with rational coefficients.

Monomials are strings (the empty string is the unit).  Polynomials are
immutable and hashable so they can be collected in sets and used as keys.

Text format: terms joined by ``+``/``-``, an optional rational coefficient
followed by ``*``, and a monomial of letters that may be juxtaposed or
separated by ``*`` with optional ``^k`` powers::

    2*x*y*x - 3*y^2 + 1/2*xy - 1
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

from .words import Alphabet, NonAssocWord, generate_regular, shirshov_bracketing, word_key

Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class DegLex:
    """Degree-then-lexicographic order on monomials.

    Multiplicative on both sides and a well-order, so reduction terminates.
    """

    alphabet: Alphabet | None = None

    def key(self, word: str):
        return (len(word), word_key(word, self.alphabet))

    def max(self, words: Iterable[str]) -> str:
        return max(words, key=self.key)

    def sorted(self, words: Iterable[str], reverse: bool = False) -> list[str]:
        return sorted(words, key=self.key, reverse=reverse)


DEGLEX = DegLex()


class NcPoly:
    """Element of the free associative algebra over the rationals."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[str, Scalar] | None = None):
        clean: dict[str, Fraction] = {}
        for word, c in (terms or {}).items():
            if not isinstance(word, str):
                raise TypeError(f"monomials must be strings, got {word!r}")
            c = Fraction(c)
            if c:
                clean[word] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def monomial(cls, word: str, coeff: Scalar = 1) -> "NcPoly":
        return cls({word: coeff})

    @classmethod
    def constant(cls, c: Scalar) -> "NcPoly":
        return cls({"": c})

    @classmethod
    def parse(cls, text: str) -> "NcPoly":
        return parse_poly(text)

    @property
    def terms(self) -> dict[str, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def monomials(self) -> list[str]:
        return list(self._terms)

    def coeff(self, word: str) -> Fraction:
        return self._terms.get(word, Fraction(0))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def degree(self) -> int:
        if not self._terms:
            raise ValueError("the zero polynomial has no degree")
        return max(len(w) for w in self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = NcPoly.constant(other)
        if not isinstance(other, NcPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    @staticmethod
    def _coerce(other) -> "NcPoly":
        if isinstance(other, NcPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return NcPoly.constant(other)
        if isinstance(other, str):
            return NcPoly.monomial(other)
        return NotImplemented

    def __add__(self, other) -> "NcPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for w, c in other._terms.items():
            terms[w] = terms.get(w, 0) + c
        return NcPoly(terms)

    __radd__ = __add__

    def __neg__(self) -> "NcPoly":
        return NcPoly({w: -c for w, c in self._terms.items()})

    def __sub__(self, other) -> "NcPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "NcPoly":
        return (-self) + other

    def __mul__(self, other) -> "NcPoly":
        if isinstance(other, (int, Fraction)):
            return NcPoly({w: c * other for w, c in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms: dict[str, Fraction] = {}
        for u, a in self._terms.items():
            for v, b in other._terms.items():
                terms[u + v] = terms.get(u + v, 0) + a * b
        return NcPoly(terms)

    def __rmul__(self, other) -> "NcPoly":
        if isinstance(other, (int, Fraction)):
            return self * other
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self

    def __pow__(self, k: int) -> "NcPoly":
        if k < 0:
            raise ValueError("negative powers are not defined")
        out = NcPoly.constant(1)
        for _ in range(k):
            out = out * self
        return out

    def sandwich(self, left: str, right: str, c: Scalar = 1) -> "NcPoly":
        """``c * left * self * right`` for monomials ``left``, ``right``."""
        c = Fraction(c)
        return NcPoly({left + w + right: c * a for w, a in self._terms.items()})

    def to_string(self, order: DegLex = DEGLEX) -> str:
        return format_poly(self, order)

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"NcPoly({format_poly(self)!r})"


def leading_monomial(p: NcPoly, order: DegLex = DEGLEX) -> tuple[str, Fraction]:
    """The order-greatest monomial of ``p`` together with its coefficient."""
    if not p:
        raise ValueError("the zero polynomial has no leading monomial")
    w = order.max(p.monomials())
    return w, p.coeff(w)


def monic(p: NcPoly, order: DegLex = DEGLEX) -> NcPoly:
    _, c = leading_monomial(p, order)
    return p * (1 / c)


def expand_bracket(t: NonAssocWord) -> NcPoly:
    """Associative image of a Lie monomial: ``[u, v] -> uv - vu``."""
    if isinstance(t, str):
        return NcPoly.monomial(t)
    u, v = expand_bracket(t[0]), expand_bracket(t[1])
    return u * v - v * u


def lie_basis(alphabet: Alphabet, max_deg: int) -> list[NonAssocWord]:
    """Lyndon–Shirshov basis of the free Lie algebra up to ``max_deg``."""
    return [shirshov_bracketing(w, alphabet) for w in generate_regular(alphabet, max_deg)]


# -- text format --------------------------------------------------------------

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<letter>[A-Za-z])|(?P<op>[-+*^]))"
)


class PolyParseError(ValueError):
    def __init__(self, message: str, text: str, column: int, line: int = 1):
        self.text = text
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


def _tokenize(text: str, line: int) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            col = pos + len(text[pos:]) - len(text[pos:].lstrip()) + 1
            raise PolyParseError(f"unexpected character {text[col - 1]!r}", text, col, line)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind) + 1))
        pos = m.end()
    return tokens


def parse_poly(text: str, line: int = 1) -> NcPoly:
    """Parse the text format described in the module docstring."""
    tokens = _tokenize(text, line)
    if not tokens:
        raise PolyParseError("empty polynomial", text, 1, line)
    i = 0
    terms: dict[str, Fraction] = {}

    def peek(kind=None, value=None):
        if i >= len(tokens):
            return False
        k, v, _ = tokens[i]
        return (kind is None or k == kind) and (value is None or v == value)

    def fail(msg):
        col = tokens[i][2] if i < len(tokens) else len(text) + 1
        raise PolyParseError(msg, text, col, line)

    first = True
    while i < len(tokens) or first:
        sign = 1
        if peek("op", "+") or peek("op", "-"):
            sign = -1 if tokens[i][1] == "-" else 1
            i += 1
        elif not first:
            fail("expected '+' or '-'")
        first = False
        coeff = Fraction(1)
        word = []
        had_factor = False
        if peek("num"):
            coeff = Fraction(tokens[i][1])
            i += 1
            had_factor = True
            if peek("op", "*"):
                i += 1
                if not peek("letter"):
                    fail("expected a letter after '*'")
        while peek("letter"):
            letter = tokens[i][1]
            i += 1
            power = 1
            if peek("op", "^"):
                i += 1
                if not peek("num") or "/" in tokens[i][1]:
                    fail("expected an integer exponent")
                power = int(tokens[i][1])
                i += 1
            word.append(letter * power)
            had_factor = True
            if peek("op", "*"):
                i += 1
                if not peek("letter"):
                    fail("expected a letter after '*'")
        if not had_factor:
            fail("expected a term")
        w = "".join(word)
        terms[w] = terms.get(w, Fraction(0)) + sign * coeff
    return NcPoly(terms)


def format_monomial(word: str) -> str:
    if not word:
        return "1"
    parts = []
    i = 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        parts.append(word[i] if j - i == 1 else f"{word[i]}^{j - i}")
        i = j
    return "*".join(parts)


def format_poly(p: NcPoly, order: DegLex = DEGLEX) -> str:
    """Print terms in decreasing order; :func:`parse_poly` reads it back."""
    if not p:
        return "0"
    out = []
    for k, w in enumerate(order.sorted(p.monomials(), reverse=True)):
        c = p.coeff(w)
        sign = "-" if c < 0 else "+"
        c = abs(c)
        if not w:
            body = str(c)
        elif c == 1:
            body = format_monomial(w)
        else:
            body = f"{c}*{format_monomial(w)}"
        if k == 0:
            out.append(("-" if sign == "-" else "") + body)
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


def read_polys(text: str) -> list[NcPoly]:
    """One polynomial per line; blank lines and ``#`` comments are skipped."""
    polys = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        if not body.strip():
            continue
        polys.append(parse_poly(body, line=lineno))
    return polys


def iter_terms(p: NcPoly, order: DegLex = DEGLEX) -> Iterator[tuple[str, Fraction]]:
    for w in order.sorted(p.monomials(), reverse=True):
        yield w, p.coeff(w)
