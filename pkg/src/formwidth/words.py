"""Words over a finite alphabet, containment up to letter renaming, and the
stock sequence constructions.

A word is a plain ``tuple[int, ...]`` whose letters are non-negative and,
after :func:`normalize`, contiguous from 0 with first occurrences in
increasing order. Two raw sequences are isomorphic (equal up to a bijective
renaming) exactly when their normalizations are identical, so all equality
and deduplication happens post-normalize. Constructions such as
:func:`descending` deliberately return non-canonical words; normalize only
when isomorphism classes are what you care about.
"""

from __future__ import annotations

from bisect import bisect_right
from collections import Counter
from typing import Hashable, Iterable, Sequence

from .errors import EmptyWordError, InvalidParameterError

Word = tuple[int, ...]


def normalize(raw: Iterable[Hashable]) -> Word:
    """Relabel a sequence of arbitrary hashable tokens by first occurrence.

    >>> normalize("bab")
    (0, 1, 0)
    >>> normalize("cacb")
    (0, 1, 0, 2)
    >>> normalize([10, 20, 30, 10, 30, 20])
    (0, 1, 2, 0, 2, 1)
    """
    tokens = tuple(raw)
    if not tokens:
        raise EmptyWordError("cannot normalize an empty sequence")
    ids: dict[Hashable, int] = {}
    out = []
    for tok in tokens:
        if tok not in ids:
            ids[tok] = len(ids)
        out.append(ids[tok])
    return tuple(out)


def alphabet_size(word: Sequence[int]) -> int:
    """Number of distinct letters in ``word``."""
    return len(set(word))


def reverse_word(word: Sequence[int]) -> Word:
    return tuple(reversed(word))


def is_permutation(seq: Sequence[int]) -> bool:
    """True iff ``seq`` is a permutation of ``0..len(seq)-1``."""
    return set(seq) == set(range(len(seq))) and len(set(seq)) == len(seq)


def is_subsequence(sub: Sequence[int], sup: Sequence[int]) -> bool:
    """Plain subsequence test, no renaming.

    >>> is_subsequence((0, 2), (0, 1, 2))
    True
    >>> is_subsequence((2, 0), (0, 1, 2))
    False
    """
    it = iter(sup)
    return all(x in it for x in sub)


def is_r_sparse(word: Sequence[int], r: int) -> bool:
    """True iff every window of ``r`` consecutive letters is pairwise
    distinct.

    >>> is_r_sparse((0, 1, 0, 1), 2)
    True
    >>> is_r_sparse((0, 1, 1, 0), 2)
    False
    """
    if r < 1:
        raise InvalidParameterError("sparsity window must be >= 1")
    word = tuple(word)
    for i, letter in enumerate(word):
        if letter in word[max(0, i - r + 1):i]:
            return False
    return True


def is_reduced(word: Sequence[int]) -> bool:
    """True iff every distinct letter occurs at least twice."""
    counts = Counter(word)
    return bool(counts) and min(counts.values()) >= 2


def contains(text: Sequence[int], pattern: Sequence[int]) -> bool:
    """True iff some subsequence of ``text`` maps onto ``pattern`` under an
    injective letter renaming.

    Both arguments may be raw (non-canonical) words; the answer is invariant
    under normalization of either. A pattern with more distinct letters than
    the text is never contained (the renaming must be injective).

    The search iterates over injective maps from pattern letters into text
    letters, pruned by multiplicity (a pattern letter occurring m times can
    only map to a text letter occurring >= m times), with a greedy
    left-to-right subsequence check per complete map. Exact, and fast enough
    for the desk-scale patterns this package targets.
    """
    text = tuple(text)
    pattern = tuple(pattern)
    if not pattern:
        return True
    if len(pattern) > len(text):
        return False

    pattern_counts = Counter(pattern)
    text_counts = Counter(text)
    if len(pattern_counts) > len(text_counts):
        return False

    positions: dict[int, list[int]] = {}
    for i, letter in enumerate(text):
        positions.setdefault(letter, []).append(i)

    # Most-constrained pattern letters first shrinks the branching early.
    pattern_letters = sorted(pattern_counts, key=lambda p: (-pattern_counts[p], p))
    candidates = {
        p: [t for t, n in text_counts.items() if n >= pattern_counts[p]]
        for p in pattern_letters
    }
    if any(not c for c in candidates.values()):
        return False

    mapping: dict[int, int] = {}
    used: set[int] = set()

    def embeds() -> bool:
        cur = -1
        for p in pattern:
            pos = positions[mapping[p]]
            j = bisect_right(pos, cur)
            if j == len(pos):
                return False
            cur = pos[j]
        return True

    def assign(i: int) -> bool:
        if i == len(pattern_letters):
            return embeds()
        p = pattern_letters[i]
        for t in candidates[p]:
            if t in used:
                continue
            used.add(t)
            mapping[p] = t
            if assign(i + 1):
                return True
            used.discard(t)
        mapping.pop(p, None)
        return False

    return assign(0)


def avoids(text: Sequence[int], pattern: Sequence[int]) -> bool:
    return not contains(text, pattern)


# --- named constructions -------------------------------------------------

def ascending(c: int) -> Word:
    """The increasing word ``0 1 ... c-1``."""
    if c < 1:
        raise InvalidParameterError("alphabet size must be >= 1")
    return tuple(range(c))


def descending(c: int) -> Word:
    """The decreasing word ``c-1 ... 1 0``."""
    if c < 1:
        raise InvalidParameterError("alphabet size must be >= 1")
    return tuple(range(c - 1, -1, -1))


def ascending_by(pi: Sequence[int]) -> Word:
    """The permutation ``pi`` read as a word."""
    if not is_permutation(pi):
        raise InvalidParameterError(f"{pi!r} is not a permutation of 0..{len(pi) - 1}")
    return tuple(pi)


def descending_by(pi: Sequence[int]) -> Word:
    """The permutation ``pi`` read backwards."""
    if not is_permutation(pi):
        raise InvalidParameterError(f"{pi!r} is not a permutation of 0..{len(pi) - 1}")
    return tuple(reversed(pi))


def up(c: int, t: int) -> Word:
    """``t`` copies of the ascending row on ``c`` letters.

    >>> up(3, 3)
    (0, 1, 2, 0, 1, 2, 0, 1, 2)
    """
    if c < 1 or t < 1:
        raise InvalidParameterError("up(c, t) needs c >= 1 and t >= 1")
    return ascending(c) * t


def alt(c: int, t: int) -> Word:
    """``t`` rows on ``c`` letters, alternating ascending then descending.

    >>> alt(3, 3)
    (0, 1, 2, 2, 1, 0, 0, 1, 2)
    """
    if c < 1 or t < 1:
        raise InvalidParameterError("alt(c, t) needs c >= 1 and t >= 1")
    out: list[int] = []
    for i in range(t):
        out.extend(ascending(c) if i % 2 == 0 else descending(c))
    return tuple(out)
