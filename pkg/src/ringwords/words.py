"""Words over ordered alphabets and the Lyndon–Shirshov machinery.

Words are plain Python strings.  A letter's rank comes from an optional
:class:`Alphabet`; when none is given the natural character order is used,
so ``"a" < "b"`` and ``"x" < "y"`` as usual.

Regular words follow the *greatest rotation* convention: ``w`` is regular
when it is strictly greater than each of its proper cyclic shifts.  These are
exactly the classical Lyndon words for the reversed alphabet order.

Nonassociative words are either a single-letter string (a leaf) or a pair
``(left, right)`` of nonassociative words.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence, Union

NonAssocWord = Union[str, tuple]


class Ordering(enum.Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"
    PREFIX_OF = "prefix_of"
    EXTENDED_BY = "extended_by"


class OmegaKind(enum.Enum):
    """Flavour of free algebra whose regular words are being tested."""

    K = "K"
    AK = "AK"
    LIE = "Lie"


@dataclass(frozen=True)
class Alphabet:
    """An ordered alphabet of single-character letters.

    The position of a letter in ``letters`` is its rank; lower rank means
    lexicographically smaller.
    """

    letters: tuple[str, ...]

    def __init__(self, letters: Union[str, Sequence[str]]):
        letters = tuple(letters)
        if not letters:
            raise ValueError("alphabet must be nonempty")
        if len(set(letters)) != len(letters):
            raise ValueError(f"duplicate letters in alphabet {letters!r}")
        for a in letters:
            if not isinstance(a, str) or len(a) != 1:
                raise ValueError(f"letters must be single characters, got {a!r}")
        object.__setattr__(self, "letters", letters)
        object.__setattr__(self, "_rank", {a: i for i, a in enumerate(letters)})

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[str]:
        return iter(self.letters)

    def __contains__(self, letter: object) -> bool:
        return letter in self._rank

    def __str__(self) -> str:
        return "".join(self.letters)

    def rank(self, letter: str) -> int:
        try:
            return self._rank[letter]
        except KeyError:
            raise ValueError(f"letter {letter!r} not in alphabet {str(self)!r}") from None

    def key(self, word: str) -> tuple[int, ...]:
        """Tuple of ranks; compares like the word under this alphabet's order."""
        return tuple(self.rank(a) for a in word)

    def check(self, word: str) -> str:
        self.key(word)
        return word

    def reversed(self) -> "Alphabet":
        return Alphabet(self.letters[::-1])

    def words(self, length: int) -> Iterator[str]:
        """All words of the given length in increasing lexicographic order."""
        for letters in itertools.product(self.letters, repeat=length):
            yield "".join(letters)

    def words_up_to(self, max_len: int, *, include_empty: bool = True) -> Iterator[str]:
        for n in range(0 if include_empty else 1, max_len + 1):
            yield from self.words(n)


BINARY = Alphabet("ab")
TERNARY = Alphabet("abc")


def word_key(word: str, alphabet: Alphabet | None = None):
    """Sort key realizing the lexicographic order (a proper prefix sorts first)."""
    return word if alphabet is None else alphabet.key(word)


def lex_compare(u: str, v: str, alphabet: Alphabet | None = None) -> Ordering:
    """Compare ``u`` with ``v`` at their first differing position.

    When one word is a proper prefix of the other no order is forced:
    ``PREFIX_OF`` means ``u`` is a proper prefix of ``v`` and ``EXTENDED_BY``
    the converse.
    """
    ku, kv = word_key(u, alphabet), word_key(v, alphabet)
    for x, y in zip(ku, kv):
        if x != y:
            return Ordering.LESS if x < y else Ordering.GREATER
    if len(ku) == len(kv):
        return Ordering.EQUAL
    return Ordering.PREFIX_OF if len(ku) < len(kv) else Ordering.EXTENDED_BY


def shirshov_greater(u: str, v: str, alphabet: Alphabet | None = None) -> bool:
    """Strict comparison used by the bracketing conditions.

    Words are compared at the first difference; a proper prefix counts as
    the *greater* word.  This is the exact mirror of the usual Lyndon order
    under alphabet reversal, which is what makes the regular-word bracketing
    unique.
    """
    return lex_compare(u, v, alphabet) in (Ordering.GREATER, Ordering.PREFIX_OF)


def rotations(w: str) -> list[str]:
    return [w[i:] + w[:i] for i in range(len(w))]


def is_assoc_regular(w: str, alphabet: Alphabet | None = None) -> bool:
    """True iff ``w`` is strictly greater than every proper cyclic shift."""
    if not w:
        raise ValueError("regularity is undefined for the empty word")
    k = word_key(w, alphabet)
    return all(k > k[i:] + k[:i] for i in range(1, len(k)))


def _lyndon_rank_words(k: int, max_len: int) -> Iterator[list[int]]:
    # Duval's generator: Lyndon words over range(k), length <= max_len, lex order.
    w = [-1]
    while w:
        w[-1] += 1
        yield w
        m = len(w)
        while len(w) < max_len:
            w.append(w[-m])
        while w and w[-1] == k - 1:
            w.pop()


def generate_regular(alphabet: Alphabet, max_len: int) -> list[str]:
    """All regular words of length at most ``max_len``, sorted by (length, lex)."""
    if max_len < 1:
        raise ValueError("max_len must be at least 1")
    top = len(alphabet) - 1
    out = [
        "".join(alphabet.letters[top - r] for r in ranks)
        for ranks in _lyndon_rank_words(len(alphabet), max_len)
    ]
    out.sort(key=lambda w: (len(w), alphabet.key(w)))
    return out


def cfl_factorize(w: str, alphabet: Alphabet | None = None) -> list[str]:
    """Unique factorization of ``w`` into regular words.

    Runs Duval's algorithm on the reversed alphabet order, so the factors are
    nonincreasing for the lexicographic order of the reversed alphabet.
    """
    if not w:
        raise ValueError("cannot factorize the empty word")
    s = [-r for r in word_key(w, alphabet)] if alphabet else [-ord(c) for c in w]
    n = len(s)
    factors = []
    i = 0
    while i < n:
        j, k = i + 1, i
        while j < n and s[k] <= s[j]:
            k = i if s[k] < s[j] else k + 1
            j += 1
        while i <= k:
            factors.append(w[i : i + j - k])
            i += j - k
    return factors


def is_semiregular(w: str, alphabet: Alphabet | None = None) -> bool:
    """Every proper suffix is a prefix of ``w`` or smaller at the first difference."""
    if not w:
        raise ValueError("semiregularity is undefined for the empty word")
    for i in range(1, len(w)):
        rel = lex_compare(w[i:], w, alphabet)
        if rel not in (Ordering.PREFIX_OF, Ordering.LESS):
            return False
    return True


@dataclass(frozen=True)
class FgfOccurrence:
    f: str
    g: str
    position: int

    @property
    def factor(self) -> str:
        return self.f + self.g + self.f


def find_fgf(w: str, alphabet: Alphabet | None = None) -> FgfOccurrence | None:
    """Find a factor ``f g f`` with ``f`` semiregular and ``g`` regular or empty.

    Among all occurrences returns the one with the longest ``f``, then the
    earliest position, then the shortest ``g``.
    """
    n = len(w)
    for flen in range(n // 2, 0, -1):
        for pos in range(n - 2 * flen + 1):
            f = w[pos : pos + flen]
            if not is_semiregular(f, alphabet):
                continue
            gstart = pos + flen
            for glen in range(n - gstart - flen + 1):
                if w[gstart + glen : gstart + glen + flen] != f:
                    continue
                g = w[gstart : gstart + glen]
                if not g or is_assoc_regular(g, alphabet):
                    return FgfOccurrence(f, g, pos)
    return None


def fgf_threshold(alphabet: Alphabet, max_len: int) -> int | None:
    """Least N such that every word of length N over ``alphabet`` contains fgf.

    Searches lengths up to ``max_len`` and returns None if no such N was found.
    Once every word of length N contains fgf, so does every longer word.
    """
    for n in range(1, max_len + 1):
        if all(find_fgf(w, alphabet) is not None for w in alphabet.words(n)):
            return n
    return None


def flatten(t: NonAssocWord) -> str:
    if isinstance(t, str):
        return t
    left, right = t
    return flatten(left) + flatten(right)


def format_bracket(t: NonAssocWord) -> str:
    """Render as ``[b,[b,a]]``; leaves print as their letter."""
    if isinstance(t, str):
        return t
    return f"[{format_bracket(t[0])},{format_bracket(t[1])}]"


def parse_bracket(text: str) -> NonAssocWord:
    """Inverse of :func:`format_bracket`; whitespace is ignored."""
    s = "".join(text.split())
    pos = 0

    def parse() -> NonAssocWord:
        nonlocal pos
        if pos >= len(s):
            raise ValueError(f"unexpected end of bracket expression {text!r}")
        if s[pos] == "[":
            pos += 1
            left = parse()
            expect(",")
            right = parse()
            expect("]")
            return (left, right)
        if s[pos] in "[],":
            raise ValueError(f"unexpected {s[pos]!r} at column {pos + 1} in {text!r}")
        pos += 1
        return s[pos - 1]

    def expect(ch: str) -> None:
        nonlocal pos
        if pos >= len(s) or s[pos] != ch:
            raise ValueError(f"expected {ch!r} at column {pos + 1} in {text!r}")
        pos += 1

    tree = parse()
    if pos != len(s):
        raise ValueError(f"trailing characters at column {pos + 1} in {text!r}")
    return tree


def bracketings(w: str) -> Iterator[NonAssocWord]:
    """Every full binary bracketing of a nonempty word (Catalan many)."""
    if len(w) == 1:
        yield w
        return
    for i in range(1, len(w)):
        for left in bracketings(w[:i]):
            for right in bracketings(w[i:]):
                yield (left, right)


def standard_factorization(w: str, alphabet: Alphabet | None = None) -> tuple[str, str]:
    """Split a regular word of length >= 2 as ``u v`` with ``v`` its longest
    proper regular suffix."""
    for i in range(1, len(w)):
        if is_assoc_regular(w[i:], alphabet):
            return w[:i], w[i:]
    raise ValueError(f"{w!r} has no proper regular suffix")


def shirshov_bracketing(w: str, alphabet: Alphabet | None = None) -> NonAssocWord:
    """The unique regular bracketing of an associative-regular word."""
    if not w or not is_assoc_regular(w, alphabet):
        raise ValueError(f"{w!r} is not a regular word")

    def bracket(x: str) -> NonAssocWord:
        if len(x) == 1:
            return x
        u, v = standard_factorization(x, alphabet)
        return (bracket(u), bracket(v))

    return bracket(w)


def is_nonassoc_regular(t: NonAssocWord, alphabet: Alphabet | None = None) -> bool:
    """Regularity of a bracketed word.

    The foliage must be associative-regular, and every node ``[v, w]`` must
    have regular children with ``v > w`` and, if ``v = [v1, v2]``, ``v2 <= w``.
    """
    if not is_assoc_regular(flatten(t), alphabet):
        return False
    return _lie_conditions(t, alphabet)


def _lie_conditions(t: NonAssocWord, alphabet: Alphabet | None) -> bool:
    if isinstance(t, str):
        return True
    v, w = t
    fv, fw = flatten(v), flatten(w)
    if not shirshov_greater(fv, fw, alphabet):
        return False
    if not isinstance(v, str) and shirshov_greater(flatten(v[1]), fw, alphabet):
        return False
    return _lie_conditions(v, alphabet) and _lie_conditions(w, alphabet)


def is_omega_regular(
    t: NonAssocWord,
    kind: OmegaKind,
    alphabet: Alphabet | None = None,
    order: str = "lex",
) -> bool:
    """Recursive regularity for the free K, AK or Lie algebra.

    ``order`` selects how already-regular words are compared: ``"lex"`` is the
    bracketing order of :func:`shirshov_greater`; ``"deglex"`` lets shorter
    words precede longer ones and compares equal lengths lexicographically.
    """
    if order == "lex":
        greater = lambda x, y: shirshov_greater(x, y, alphabet)  # noqa: E731
    elif order == "deglex":
        greater = lambda x, y: (len(x), word_key(x, alphabet)) > (len(y), word_key(y, alphabet))  # noqa: E731
    else:
        raise ValueError(f"unknown order {order!r}")

    def check(node: NonAssocWord) -> bool:
        if isinstance(node, str):
            if alphabet is not None:
                alphabet.check(node)
            return True
        u, v = node
        fu, fv = flatten(u), flatten(v)
        if kind is OmegaKind.K:
            if greater(fv, fu):
                return False
        elif not greater(fu, fv):
            return False
        if kind is OmegaKind.LIE and not isinstance(u, str) and greater(flatten(u[1]), fv):
            return False
        return check(u) and check(v)

    return check(t)
