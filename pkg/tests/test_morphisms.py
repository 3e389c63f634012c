import random

import pytest
from hypothesis import given, strategies as st

from ringwords.morphisms import (
    NAMED,
    THUE_BINARY,
    THUE_TERNARY,
    Morphism,
    PowerOccurrence,
    apply_morphism,
    check_thue3_conditions,
    crochemore_bound,
    crochemore_test,
    is_power_free,
    iterate_fixed_point,
    power_free_words,
    square_free_word,
)

from oracles import all_words, has_square


def test_morphism_validation_and_parse():
    with pytest.raises(ValueError):
        Morphism({"a": ""})
    with pytest.raises(ValueError):
        Morphism({})
    phi = Morphism.parse("# Thue\na -> ab\nb -> ba\n")
    assert phi == THUE_BINARY
    assert Morphism.parse(phi.format()) == phi
    for bad, where in [("a ab", "line 1, column 1"), ("a -> ab\nb ->", "line 2, column 5"), ("ab -> a", "line 1"), ("a -> b\na -> c", "line 2")]:
        with pytest.raises(ValueError, match=where):
            Morphism.parse(bad)


def test_apply():
    assert apply_morphism(THUE_BINARY, "aab") == "ababba"
    assert THUE_BINARY("") == ""
    with pytest.raises(ValueError):
        THUE_BINARY("abc")
    assert set(NAMED) == {"thue-binary", "thue-ternary"}


@given(st.text(alphabet="abc", max_size=40), st.sampled_from([2, 3]))
def test_power_free_matches_brute_force(w, k):
    occ = is_power_free(w, k)
    assert (occ is None) == (not has_square(w, k))
    if occ is not None:
        u = w[occ.start : occ.start + occ.period]
        assert occ.factor(w) == u * k


def test_power_free_random_long_words():
    rng = random.Random(7)
    for _ in range(40):
        n = rng.randint(1, 200)
        w = "".join(rng.choice("abc") for _ in range(n))
        for k in (2, 3):
            assert (is_power_free(w, k) is None) == (not has_square(w, k))
    w = square_free_word(200)
    assert is_power_free(w, 2) is None and not has_square(w)


def test_power_free_examples():
    assert is_power_free("abcacb", 2) is None
    assert is_power_free("abab", 2) == PowerOccurrence(0, 2, 2)
    assert is_power_free("aabaa", 3) is None
    assert is_power_free("baaa", 3) == PowerOccurrence(1, 1, 3)
    with pytest.raises(ValueError):
        is_power_free("a", 4)


@pytest.mark.parametrize("k, max_len", [(2, 8), (3, 10)])
def test_power_free_words_enumeration(k, max_len):
    got = list(power_free_words("ab" if k == 3 else "abc", max_len, k))
    letters = "ab" if k == 3 else "abc"
    brute = [w for n in range(1, max_len + 1) for w in all_words(letters, n) if not has_square(w, k)]
    assert sorted(got) == sorted(brute)
    assert "" in power_free_words("ab", 1, include_empty=True)


def test_binary_square_free_words_are_short():
    assert max(map(len, power_free_words("ab", 10, 2))) == 3


def test_thue_binary_preserves_cube_freeness():
    for w in power_free_words("ab", 10, 3):
        assert is_power_free(THUE_BINARY(w), 3) is None


def test_thue_ternary_preserves_square_freeness():
    for w in power_free_words("abc", 7, 2):
        assert is_power_free(THUE_TERNARY(w), 2) is None


def test_thue_conditions():
    assert check_thue3_conditions(THUE_TERNARY)
    bad = check_thue3_conditions(Morphism({"a": "ab", "b": "b", "c": "c"}))
    assert not bad.images_factor_free


def test_crochemore():
    assert crochemore_bound(THUE_TERNARY) == 3
    assert crochemore_bound(Morphism({"a": "aaaaaaaaa", "b": "b"})) == 7
    r = crochemore_test(THUE_TERNARY)
    assert r.k == 3 and r.square_free and r.counterexample is None
    ident = crochemore_test(Morphism({"a": "a", "b": "b", "c": "c"}))
    assert ident.square_free
    bad = crochemore_test(Morphism({"a": "aa"}))
    assert not bad.square_free and bad.counterexample == "a"


def _corpus():
    rng = random.Random(3)
    yield THUE_TERNARY
    yield Morphism({"a": "a", "b": "b", "c": "c"})
    yield Morphism({"a": "b", "b": "c", "c": "a"})
    yield Morphism({"a": "abc", "b": "acb", "c": "bca"})
    yield Morphism({"a": "abcbacbcabcba", "b": "bcacbacabcacb", "c": "cabacbabcabac"})
    for _ in range(20):
        yield Morphism({a: "".join(rng.choice("abc") for _ in range(rng.randint(1, 5))) for a in "abc"})


def test_crochemore_agrees_with_exhaustive_search():
    words = list(power_free_words("abc", 12, 2))
    for phi in _corpus():
        exhaustive = all(is_power_free(phi(w), 2) is None for w in words)
        assert crochemore_test(phi).square_free == exhaustive, phi.images


def test_fixed_points():
    assert iterate_fixed_point(THUE_BINARY, "a", 8) == "abbabaab"
    assert iterate_fixed_point(THUE_BINARY, "a", 1) == "a"
    with pytest.raises(ValueError):
        iterate_fixed_point(Morphism({"a": "ab", "b": "a"}), "b", 4)
    with pytest.raises(ValueError):
        iterate_fixed_point(Morphism({"a": "a"}), "a", 3)
    w = square_free_word(1000)
    assert len(w) == 1000 and is_power_free(w, 2) is None
    assert square_free_word(0) == ""
