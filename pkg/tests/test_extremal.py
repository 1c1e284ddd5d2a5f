import pytest

from formwidth import (ExQuery, check_klazar_inequality, contains,
                       ex_bruteforce, is_r_sparse, parse_word)
from formwidth.errors import (CapHitError, InfeasibleError,
                              InvalidParameterError)

from oracles import ex_oracle


def _query(text, n, sparsity, **kwargs):
    return ExQuery(parse_word(text), n, sparsity, **kwargs)


@pytest.mark.parametrize("n", range(1, 6))
def test_single_repeat_pattern_caps_at_letter_count(n):
    assert ex_bruteforce(_query("aba", n, 2)).max_length == n


@pytest.mark.parametrize("n", range(1, 5))
def test_double_alternation_pattern(n):
    assert ex_bruteforce(_query("abab", n, 2)).max_length == 2 * n - 1


def test_tiny_patterns():
    assert ex_bruteforce(_query("ab", 5, 2)).max_length == 1
    assert ex_bruteforce(_query("a", 3, 1)).max_length == 0
    assert ex_bruteforce(_query("a", 3, 1)).witness == ()


def test_two_letter_quintuple_alternation():
    # frozen from the unpruned levelwise oracle
    assert ex_oracle(parse_word("ababa"), 2, 2) == 4
    assert ex_bruteforce(_query("ababa", 2, 2)).max_length == 4


def test_oracle_agreement_on_small_queries():
    for text, n, sparsity in [("aba", 3, 2), ("abab", 2, 2), ("aab", 2, 2),
                              ("abc", 3, 3), ("aabb", 2, 2)]:
        expected = ex_oracle(parse_word(text), n, sparsity)
        assert expected is not None
        assert ex_bruteforce(_query(text, n, sparsity)).max_length == expected


def test_witness_is_validated_independently():
    result = ex_bruteforce(_query("abab", 3, 2))
    assert len(result.witness) == result.max_length == 5
    assert is_r_sparse(result.witness, 2)
    assert not contains(result.witness, parse_word("abab"))


def test_witness_is_lexicographically_least():
    assert ex_bruteforce(_query("abab", 3, 2)).witness == (0, 1, 0, 2, 0)
    assert ex_bruteforce(_query("aba", 3, 2)).witness == (0, 1, 2)


def test_monotone_in_letters_and_sparsity():
    lengths = [ex_bruteforce(_query("abab", n, 2)).max_length for n in (1, 2, 3)]
    assert lengths == sorted(lengths)
    loose = ex_bruteforce(_query("abab", 3, 2)).max_length
    tight = ex_bruteforce(_query("abab", 3, 3)).max_length
    assert tight <= loose


def test_pattern_monotonicity():
    # abab contains aba, so the aba maximum cannot exceed the abab one
    small = ex_bruteforce(_query("aba", 3, 2)).max_length
    large = ex_bruteforce(_query("abab", 3, 2)).max_length
    assert small <= large


def test_length_cap_is_never_reported_as_exact():
    with pytest.raises(CapHitError):
        ex_bruteforce(_query("abab", 4, 2, length_cap=4))


def test_node_budget_refusal_carries_partial_best():
    with pytest.raises(InfeasibleError) as info:
        ex_bruteforce(_query("abab", 4, 2, node_budget=5))
    assert info.value.best_length is not None
    assert info.value.nodes_explored >= 5


def test_query_validation():
    with pytest.raises(InvalidParameterError):
        ExQuery(parse_word("abc"), 3, 2)  # window below the alphabet
    with pytest.raises(InvalidParameterError):
        ExQuery(parse_word("ab"), 5, 2, length_cap=3)


def test_parallel_matches_sequential():
    for text, n in [("abab", 3), ("aba", 4), ("ababa", 3)]:
        query = _query(text, n, 2)
        sequential = ex_bruteforce(query)
        parallel = ex_bruteforce(query, workers=3)
        assert (parallel.max_length, parallel.witness) == (
            sequential.max_length, sequential.witness)
        assert parallel.nodes_explored == sequential.nodes_explored


def test_klazar_inequality_examples():
    report = check_klazar_inequality(parse_word("abab"), 2, 3, 3)
    assert report.ex_c == 5
    assert report.passed
    degenerate = check_klazar_inequality(parse_word("aba"), 2, 2, 4)
    assert degenerate.ex_d == degenerate.ex_c
    assert degenerate.passed


def test_klazar_validates_windows():
    with pytest.raises(InvalidParameterError):
        check_klazar_inequality(parse_word("abab"), 3, 2, 3)


def test_state_cap_fallback_matches_incremental(monkeypatch):
    import formwidth.extremal as extremal
    reference = {text: ex_bruteforce(_query(text, 3, 2))
                 for text in ("abab", "aabb")}
    monkeypatch.setattr(extremal, "_STATE_CAP", 1)
    for text, expected in reference.items():
        fallback = ex_bruteforce(_query(text, 3, 2))
        assert (fallback.max_length, fallback.witness) == (
            expected.max_length, expected.witness)
