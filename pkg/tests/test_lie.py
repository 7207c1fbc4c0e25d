
import pytest
from hypothesis import given, strategies as st

from blockdepth.components import evaluate
from blockdepth.lie import (
    BracketSyntaxError,
    BracketWord,
    count_compositions,
    is_lyndon,
    left_normed_words,
    lyndon_words,
    nested_expansion,
    odd_compositions,
    witt_count,
)


def test_parse_and_print():
    w = BracketWord.parse("[3,[5, 7]]")
    assert str(w) == "[3,[5,7]]"
    assert w.leaves() == (3, 5, 7) and w.degree == 3 and w.weight == 15
    assert BracketWord.parse("9").degree == 1


@pytest.mark.parametrize("text,pos", [("[3,4]", 3), ("[3,5", 4), ("[3 5]", 3), ("", 0)])
def test_parse_errors_carry_position(text, pos):
    with pytest.raises(BracketSyntaxError) as err:
        BracketWord.parse(text)
    assert err.value.pos == pos


def test_nested_expansion_examples():
    assert nested_expansion(BracketWord.parse("[3,5]")) == {(3, 5): 1}
    assert nested_expansion(BracketWord.parse("[[3,5],7]")) == {(3, 5, 7): 1, (5, 3, 7): -1}
    lhs = evaluate(BracketWord.parse("[[3,5],7]"), "depth")
    assert lhs == -evaluate(BracketWord.parse("[7,[3,5]]"), "depth")
    assert nested_expansion(BracketWord.parse("[3,3]")) == {}


def test_enumeration():
    assert list(odd_compositions(12, 2)) == [(3, 9), (5, 7), (7, 5), (9, 3)]
    assert [str(w) for w in lyndon_words(12, 2)] == ["[3,9]", "[5,7]"]
    assert [str(w) for w in left_normed_words(9, 3)] == ["[3,[3,3]]"]
    assert lyndon_words(9, 3) == []


def test_witt_counts_match_lyndon_enumeration():
    for W in range(3, 40):
        for r in range(1, 5):
            assert witt_count(W, r) == len(lyndon_words(W, r))
            assert count_compositions(W, r) == len(list(odd_compositions(W, r)))


def test_is_lyndon():
    assert is_lyndon((3, 5, 5)) and not is_lyndon((5, 3)) and not is_lyndon((3, 3))


trees = st.recursive(st.sampled_from([3, 5, 7]), lambda inner: st.tuples(inner, inner), max_leaves=4)


@given(trees.filter(lambda t: not isinstance(t, int)))
def test_expansion_matches_direct_depth_bracket(tree):
    from blockdepth.depth import dbracket, phi

    def direct(t):
        if isinstance(t, int):
            return phi((t - 1) // 2)
        return dbracket(direct(t[0]), direct(t[1]))

    assert evaluate(BracketWord(tree), "depth") == direct(tree)
