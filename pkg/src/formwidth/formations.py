"""Formations (stacked permutation rows), the binary-formation width search,
bounded formation-length search, and the named avoider constructions.

Binary formations are encoded by a sign pattern: one flag per row, SAME
meaning the base permutation and REVERSED its reverse. The first flag is
always SAME, which loses no generality because containment is invariant
under renaming and the global reversal bijection maps reversed-first
patterns onto same-first ones. Width searches therefore enumerate exactly
the 2**(s-1) sign patterns per width, in lexicographic order with
SAME < REVERSED, and all tie-breaks are by that order so results are
reproducible.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import permutations, product
from math import factorial
from typing import Iterator, Sequence

from .errors import InfeasibleError, InvalidParameterError
from .words import (Word, alphabet_size, ascending, contains, descending,
                    is_permutation, normalize)

SAME = 0
REVERSED = 1

SignPattern = tuple[int, ...]

DEFAULT_S_MAX = 16
DEFAULT_FL_BUDGET = 10 ** 8
DEFAULT_SIZE_BUDGET = 1 << 16


@dataclass(frozen=True)
class Formation:
    """A concatenation of rows, each a permutation of the same letters."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not self.rows:
            raise InvalidParameterError("a formation needs at least one row")
        width = len(self.rows[0])
        for row in self.rows:
            if len(row) != width or not is_permutation(row):
                raise InvalidParameterError(
                    f"row {row!r} is not a permutation of 0..{width - 1}")

    @property
    def width(self) -> int:
        """Letters per row."""
        return len(self.rows[0])

    @property
    def row_count(self) -> int:
        return len(self.rows)

    def word(self) -> Word:
        """The formation flattened to a single word."""
        return tuple(letter for row in self.rows for letter in row)

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self.rows]


def sign_patterns(s: int) -> Iterator[SignPattern]:
    """All length-``s`` sign patterns with a SAME first flag, in
    lexicographic order (SAME < REVERSED)."""
    if s < 1:
        raise InvalidParameterError("row count must be >= 1")
    for rest in product((SAME, REVERSED), repeat=s - 1):
        yield (SAME,) + rest


def binary_formation(r: int, flags: Sequence[int],
                     base: Sequence[int] | None = None) -> Formation:
    """Decode a sign pattern into a formation over ``r`` letters. The base
    permutation defaults to the ascending row."""
    base_row = ascending(r) if base is None else tuple(base)
    if not is_permutation(base_row) or len(base_row) != r:
        raise InvalidParameterError("base must be a permutation of 0..r-1")
    reversed_row = tuple(reversed(base_row))
    return Formation(tuple(base_row if f == SAME else reversed_row for f in flags))


def binary_formations(r: int, s: int) -> Iterator[Formation]:
    """The 2**(s-1) binary formations over ``r`` letters whose first row is
    ascending, in lexicographic sign-pattern order.

    >>> [f.rows for f in binary_formations(3, 2)]
    [((0, 1, 2), (0, 1, 2)), ((0, 1, 2), (2, 1, 0))]
    """
    if r < 1:
        raise InvalidParameterError("alphabet size must be >= 1")
    for flags in sign_patterns(s):
        yield binary_formation(r, flags)


def formation_contains(f: Formation, u: Sequence[int]) -> bool:
    """True iff the flattened formation contains ``u`` up to renaming."""
    return contains(f.word(), u)


# --- formation width ------------------------------------------------------

def _surviving_avoiders(u: Word, r: int, candidates: list[SignPattern],
                        workers: int) -> list[SignPattern]:
    """Filter the candidate sign patterns down to those whose formation
    avoids ``u``. With several workers the candidate list is checked in
    contiguous chunks; concatenating chunk results preserves the
    lexicographic order, so the outcome is identical to a sequential pass."""

    def avoiding(chunk: list[SignPattern]) -> list[SignPattern]:
        return [flags for flags in chunk
                if not contains(binary_formation(r, flags).word(), u)]

    if workers <= 1 or len(candidates) < 2 * workers:
        return avoiding(candidates)
    size = (len(candidates) + workers - 1) // workers
    chunks = [candidates[i:i + size] for i in range(0, len(candidates), size)]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(avoiding, chunks))
    return [flags for part in parts for flags in part]


def _avoider_frontier(u: Word, r: int, s_stop: int,
                      workers: int) -> tuple[int, list[SignPattern]]:
    """Grow the set of avoiding sign patterns width by width.

    Containment is monotone under appending rows, so every avoider of width
    s extends an avoider of width s-1; it suffices to recheck the two
    extensions of each surviving pattern. Returns (s, avoiders-at-s) where
    either s == s_stop or the avoider set became empty at s.
    """
    frontier = _surviving_avoiders(u, r, [(SAME,)], workers)
    s = 1
    while s < s_stop and frontier:
        candidates = [flags + (bit,) for flags in frontier
                      for bit in (SAME, REVERSED)]
        frontier = _surviving_avoiders(u, r, candidates, workers)
        s += 1
    return s, frontier


def fw(u: Sequence[int], s_max: int = DEFAULT_S_MAX, workers: int = 1) -> int | None:
    """Formation width: the least s such that every binary (r, s)-formation
    contains ``u``, where r is the number of distinct letters of ``u``.
    Checking binary formations only is sound and complete for this quantity.

    Returns None when no such s <= ``s_max`` exists (the width always exists
    and is at most len(u) - r + 1, but may exceed the configured cap).

    >>> fw(normalize("abcabc"))
    3
    >>> fw(normalize("abccba"))
    4
    """
    u = normalize(u)
    r = alphabet_size(u)
    if s_max < 1:
        raise InvalidParameterError("s_max must be >= 1")
    s, frontier = _avoider_frontier(u, r, s_max, workers)
    return s if not frontier else None


def fw_witness(u: Sequence[int], s: int, workers: int = 1) -> Formation | None:
    """The lexicographically least (by sign pattern) binary (r, s)-formation
    avoiding ``u``, or None when every one contains ``u``.

    A witness at width s certifies fw(u) > s; absence certifies fw(u) <= s.
    """
    if s < 1:
        raise InvalidParameterError("row count must be >= 1")
    u = normalize(u)
    r = alphabet_size(u)
    _, frontier = _avoider_frontier(u, r, s, workers)
    if not frontier:
        return None
    return binary_formation(r, frontier[0])


# --- formation length -----------------------------------------------------

def fl_bounded(u: Sequence[int], r_max: int = 8,
               budget: int = DEFAULT_FL_BUDGET,
               s_max: int = DEFAULT_S_MAX) -> int | None:
    """Formation length: the least r such that every (r, fw(u))-formation
    (all rows arbitrary permutations now, not just binary) contains ``u``.

    The first row is fixed to the ascending permutation, which is no loss
    since renaming a formation is a containment-preserving bijection.
    Returns None when every r <= ``r_max`` has an avoiding formation.
    Raises InfeasibleError before starting an alphabet whose
    (r!)**(fw(u)-1) * r! elementary checks would exceed ``budget``, and when
    fw(u) itself does not resolve within ``s_max``.
    """
    u = normalize(u)
    width = fw(u, s_max)
    if width is None:
        raise InfeasibleError(
            f"formation width did not resolve within s_max={s_max}")
    for r in range(1, r_max + 1):
        cost = factorial(r) ** (width - 1) * factorial(r)
        if cost > budget:
            raise InfeasibleError(
                f"checking alphabet size {r} needs about {cost} elementary "
                f"checks, over the budget of {budget}")
        first = ascending(r)
        all_contain = True
        for rest in product(permutations(range(r)), repeat=width - 1):
            word = first + tuple(letter for row in rest for letter in row)
            if not contains(word, u):
                all_contain = False
                break
        if all_contain:
            return r
    return None


def gamma(r: int, s: int) -> int:
    """The least alphabet size that forces a binary sub-formation: every
    (gamma(r, s), s)-formation contains a binary (r, s)-formation, and some
    (gamma(r, s) - 1, s)-formation avoids them all. Exact integers; the
    value is doubly exponential in s.

    >>> gamma(3, 2)
    5
    """
    if r < 1 or s < 1:
        raise InvalidParameterError("gamma needs r >= 1 and s >= 1")
    return (r - 1) ** (2 ** (s - 1)) + 1


def fl_upper_bound(u: Sequence[int], s_max: int = DEFAULT_S_MAX) -> int | None:
    """Upper bound gamma(r, fw(u)) on the formation length of ``u``. None
    when fw does not resolve within ``s_max``."""
    u = normalize(u)
    width = fw(u, s_max)
    if width is None:
        return None
    return gamma(alphabet_size(u), width)


# --- extremal avoider constructions ---------------------------------------

def k_swap(perm: Sequence[int], k: int, r: int, s: int) -> tuple[int, ...]:
    """One block-reversal step of the extremal avoider construction.

    Positions are grouped into blocks of size (r-1)**a; for every even i
    with 1 < i <= 2**k, the sub-blocks of size (r-1)**((i-1) * 2**(s-k-1))
    inside each block of size (r-1)**(i * 2**(s-k-1)) have their placement
    reversed (sub-block contents are kept intact). The steps for distinct i
    act at nested block-aligned scales, so their order does not matter.
    """
    if r < 2 or s < 1:
        raise InvalidParameterError("k_swap needs r >= 2 and s >= 1")
    if not 1 <= k <= s - 1:
        raise InvalidParameterError(f"swap index {k} outside 1..{s - 1}")
    n = (r - 1) ** (2 ** (s - 1))
    perm = tuple(perm)
    if len(perm) != n:
        raise InvalidParameterError(
            f"permutation length {len(perm)} != (r-1)**(2**(s-1)) = {n}")
    out = list(perm)
    for i in range(2, 2 ** k + 1, 2):
        sub = (r - 1) ** ((i - 1) * 2 ** (s - k - 1))
        enclosing = (r - 1) ** (i * 2 ** (s - k - 1))
        for start in range(0, n, enclosing):
            block = out[start:start + enclosing]
            chunks = [block[j:j + sub] for j in range(0, enclosing, sub)]
            out[start:start + enclosing] = [x for chunk in reversed(chunks)
                                            for x in chunk]
    return tuple(out)


def build_es_avoider(r: int, s: int,
                     size_budget: int = DEFAULT_SIZE_BUDGET) -> Formation:
    """The extremal ((r-1)**(2**(s-1)), s)-formation that avoids every
    binary (r, s)-formation: row 1 is the identity and row k+1 is a k-swap
    of row k. This witnesses that gamma(r, s) is tight."""
    if r < 2 or s < 1:
        raise InvalidParameterError("needs r >= 2 and s >= 1")
    n = (r - 1) ** (2 ** (s - 1))
    if n > size_budget:
        raise InfeasibleError(
            f"avoider would have {n} letters, over the size budget "
            f"{size_budget}")
    rows = [tuple(range(n))]
    for k in range(1, s):
        rows.append(k_swap(rows[-1], k, r, s))
    return Formation(tuple(rows))


def build_two_letter_avoider(u: Sequence[int]) -> Formation:
    """The two-row-alphabet witness formation for a two-letter word ``u``
    whose first two letters differ: dropping the leading letter, each
    remaining first-kind letter becomes the row (1, 0) and each second-kind
    letter the row (0, 1). For ``u`` of length t this is a (2, t-1)-formation
    whose first t-2 rows avoid ``u``, certifying fw(u) = t - 1.

    >>> build_two_letter_avoider(normalize("xyxy")).rows
    ((0, 1), (1, 0), (0, 1))
    """
    u = normalize(u)
    if alphabet_size(u) != 2:
        raise InvalidParameterError("the witness needs exactly 2 distinct letters")
    if u[0] == u[1]:
        raise InvalidParameterError(
            "the first two letters must differ; strip repeated leading "
            "letters first (each strip lowers the width by one)")
    return Formation(tuple((1, 0) if letter == 0 else (0, 1) for letter in u[1:]))


def build_alt_avoider(c: int, k: int) -> Formation:
    """The k-th member of the staircase family used to bound the width of
    alternations: the first member is c ascending rows, each even step
    appends two descending rows, each odd step appends c ascending rows.
    Member k-1 avoids alt(c, k).

    >>> build_alt_avoider(2, 2).rows
    ((0, 1), (0, 1), (1, 0), (1, 0))
    """
    if c < 2 or k < 1:
        raise InvalidParameterError("needs c >= 2 and k >= 1")
    rows = [ascending(c)] * c
    for index in range(2, k + 1):
        if index % 2 == 0:
            rows += [descending(c)] * 2
        else:
            rows += [ascending(c)] * c
    return Formation(tuple(rows))
