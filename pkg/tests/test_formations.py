import pytest

from formwidth import (Formation, alt, binary_formation, binary_formations,
                       build_alt_avoider, build_es_avoider,
                       build_two_letter_avoider, contains, decode_one_based,
                       fl_bounded, fl_upper_bound, formation_contains, fw,
                       fw_witness, gamma, k_swap, normalize, parse_word,
                       sign_patterns)
from formwidth.errors import InfeasibleError, InvalidParameterError

from oracles import contains_oracle, fl_oracle, fw_oracle


def test_formation_validation():
    with pytest.raises(InvalidParameterError):
        Formation(((0, 1), (0, 0)))
    with pytest.raises(InvalidParameterError):
        Formation(((0, 1), (0, 1, 2)))
    with pytest.raises(InvalidParameterError):
        Formation(())


def test_formation_flattening():
    f = Formation(((0, 1, 2), (2, 1, 0)))
    assert f.word() == (0, 1, 2, 2, 1, 0)
    assert f.width == 3
    assert f.row_count == 2


def test_binary_formation_counts_and_order():
    assert len(list(binary_formations(3, 3))) == 4
    assert [f.rows for f in binary_formations(3, 2)] == [
        ((0, 1, 2), (0, 1, 2)),
        ((0, 1, 2), (2, 1, 0)),
    ]
    assert [f.rows for f in binary_formations(2, 1)] == [((0, 1),)]


def test_sign_patterns_are_lexicographic():
    assert list(sign_patterns(3)) == [(0, 0, 0), (0, 0, 1), (0, 1, 0), (0, 1, 1)]


def test_formation_contains():
    rise_fall_rise = Formation(((0, 1, 2), (2, 1, 0), (0, 1, 2)))
    assert not formation_contains(rise_fall_rise, normalize("acabcb"))
    assert formation_contains(binary_formation(3, (0, 0, 0)), normalize("abcacb"))
    assert formation_contains(binary_formation(4, (0, 0)), (0,))


# -- width --

def test_fw_golden_values():
    assert fw(normalize("abcabc")) == 3
    assert fw(normalize("abccba")) == 4
    assert fw(normalize("aba")) == 2
    assert fw(normalize("a")) == 1
    assert fw(normalize("aaa")) == 3


def test_fw_agrees_with_bruteforce_oracle():
    for text in ("aba", "abab", "aabb", "abcabc", "abcacb", "aab"):
        word = normalize(text)
        assert fw(word) == fw_oracle(word)


def test_fw_exhausted_returns_none():
    assert fw(normalize("abccba"), s_max=3) is None
    assert fw(normalize("abccba"), s_max=4) == 4


def test_fw_witness_examples():
    # three ascending rows avoid the mirrored double
    witness = fw_witness(normalize("abccba"), 3)
    assert witness is not None
    assert witness.rows == ((0, 1, 2),) * 3
    assert not contains(witness.word(), normalize("abccba"))
    # at or above the width there is no witness
    assert fw_witness(normalize("abab"), 3) is None
    assert fw_witness(normalize("ab"), 1) is None


def test_fw_witness_is_lexicographically_least():
    word = normalize("abab")
    witness = fw_witness(word, 2)
    assert witness is not None
    candidates = [f for f in binary_formations(2, 2)
                  if not contains(f.word(), word)]
    assert witness.rows == candidates[0].rows


def test_fw_parallel_matches_sequential():
    for text in ("abcacb", "abccba", "ababa"):
        word = normalize(text)
        assert fw(word, workers=3) == fw(word)


# -- length --

def test_fl_bounded_small_values():
    # frozen from the independent all-rows-free enumeration below
    assert fl_bounded(normalize("ab")) == 2
    assert fl_bounded(normalize("aba")) == 2
    assert fl_bounded(normalize("abab")) == 2


def test_fl_oracle_agreement():
    for text in ("ab", "aba", "abab"):
        word = normalize(text)
        assert fl_oracle(word, fw(word)) == fl_bounded(word)


def test_fl_bounded_exhausted():
    assert fl_bounded(normalize("abab"), r_max=1) is None


def test_fl_bounded_refuses_past_budget():
    with pytest.raises(InfeasibleError):
        fl_bounded(normalize("abcabc"), r_max=8, budget=10)


def test_gamma():
    assert gamma(3, 2) == 5
    assert gamma(7, 1) == 7
    assert all(gamma(2, s) == 2 for s in range(1, 9))
    assert gamma(3, 6) == 2 ** 32 + 1  # exact big integers


def test_fl_upper_bound():
    assert fl_upper_bound(normalize("ab")) == 2
    assert fl_upper_bound(normalize("abab")) == 2
    assert fl_upper_bound(normalize("abcabc")) == 17


# -- avoider constructions --

def test_k_swap_matches_worked_example():
    # 1-swap of the identity on 16 letters, then the 2-swap of that
    row2 = k_swap(tuple(range(16)), 1, 3, 3)
    assert row2 == decode_one_based("CDEF90AB56781234")
    row3 = k_swap(row2, 2, 3, 3)
    assert row3 == (6, 7, 4, 5, 2, 3, 0, 1, 14, 15, 12, 13, 10, 11, 8, 9)


def test_k_swap_is_identity_on_width_two():
    for s in (2, 3, 4):
        for k in range(1, s):
            assert k_swap((0,), k, 2, s) == (0,)


def test_k_swap_validates_input():
    with pytest.raises(InvalidParameterError):
        k_swap(tuple(range(8)), 1, 3, 3)  # wrong length
    with pytest.raises(InvalidParameterError):
        k_swap(tuple(range(16)), 3, 3, 3)  # k out of range


def test_es_avoider_small_cases():
    assert build_es_avoider(3, 2).rows == ((0, 1, 2, 3), (2, 3, 0, 1))
    assert build_es_avoider(2, 3).rows == ((0,), (0,), (0,))
    f = build_es_avoider(3, 3)
    assert f.width == 16 and f.row_count == 3
    assert f.rows[1] == decode_one_based("CDEF90AB56781234")


@pytest.mark.parametrize("r, s", [(2, 2), (2, 3), (3, 2), (3, 3)])
def test_es_avoider_avoids_every_binary_formation(r, s):
    word = build_es_avoider(r, s).word()
    for flags in sign_patterns(s):
        assert not contains(word, binary_formation(r, flags).word())


def test_es_avoider_budget_and_validation():
    with pytest.raises(InfeasibleError):
        build_es_avoider(3, 6, size_budget=1000)
    with pytest.raises(InvalidParameterError):
        build_es_avoider(1, 3)


def test_two_letter_avoider_construction():
    assert build_two_letter_avoider(parse_word("xy")).rows == ((0, 1),)
    assert build_two_letter_avoider(parse_word("xyxy")).rows == (
        (0, 1), (1, 0), (0, 1))
    assert build_two_letter_avoider(parse_word("xyy")).rows == ((0, 1), (0, 1))


def test_two_letter_avoider_prefix_avoids_and_full_contains():
    for text in ("xyx", "xyy", "xyxy", "xyyx", "xyxyx", "xyyxyx"):
        word = parse_word(text)
        f = build_two_letter_avoider(word)
        assert f.row_count == len(word) - 1
        assert contains(f.word(), word)
        prefix = Formation(f.rows[:-1])
        assert not contains(prefix.word(), word)
        assert not contains_oracle(prefix.word(), word)


def test_two_letter_avoider_validates():
    with pytest.raises(InvalidParameterError):
        build_two_letter_avoider(normalize("abc"))
    with pytest.raises(InvalidParameterError):
        build_two_letter_avoider(normalize("aab"))


def test_alt_avoider_members():
    assert build_alt_avoider(3, 1).rows == ((0, 1, 2),) * 3
    assert build_alt_avoider(2, 2).rows == ((0, 1), (0, 1), (1, 0), (1, 0))
    member3 = build_alt_avoider(3, 3)
    assert member3.rows == ((0, 1, 2),) * 3 + ((2, 1, 0),) * 2 + ((0, 1, 2),) * 3


@pytest.mark.parametrize("c", [2, 3])
@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_alt_avoider_avoids_next_alternation(c, k):
    assert not contains(build_alt_avoider(c, k - 1).word(), alt(c, k))


# -- small exhaustive checks of the alphabet threshold --

def test_gamma_threshold_forces_binary_subformation():
    from itertools import permutations, product
    for r, s in [(2, 2), (2, 3), (3, 2)]:
        g = gamma(r, s)
        patterns = [binary_formation(r, flags).word() for flags in sign_patterns(s)]
        first = tuple(range(g))
        for rest in product(permutations(range(g)), repeat=s - 1):
            word = first + tuple(x for row in rest for x in row)
            assert any(contains(word, p) for p in patterns)
