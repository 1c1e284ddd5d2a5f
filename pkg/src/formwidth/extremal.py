"""Exhaustive search for the longest sparse pattern-avoiding sequences.

The search walks canonical words only: a new distinct letter may enter only
as the smallest unused id. Relabeling by first occurrence preserves both
sparsity and avoidance and is lexicographically non-increasing, so this
pruning loses no maxima and the lexicographically least maximal word is
itself canonical.

Avoidance along a branch is maintained incrementally: a set of partial-match
states, one per (prefix matched, injective letter assignment) pair, updated
per appended letter. When a branch's state set outgrows a cap the branch
falls back to full containment checks per extension.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Sequence

from .errors import CapHitError, InfeasibleError, InvalidParameterError
from .words import Word, alphabet_size, contains, normalize

DEFAULT_LENGTH_CAP = 64
DEFAULT_NODE_BUDGET = 10 ** 7

_STATE_CAP = 4096

# (positions of the pattern matched so far, letter assignment with -1 free)
_State = tuple[int, tuple[int, ...]]


@dataclass(frozen=True)
class ExQuery:
    """What to maximize: sparse words over at most ``distinct_letters``
    letters avoiding ``pattern``, with every window of ``sparsity``
    consecutive letters pairwise distinct."""

    pattern: Word
    distinct_letters: int
    sparsity: int
    length_cap: int = DEFAULT_LENGTH_CAP
    node_budget: int = DEFAULT_NODE_BUDGET

    def __post_init__(self):
        object.__setattr__(self, "pattern", normalize(self.pattern))
        if self.sparsity < alphabet_size(self.pattern):
            raise InvalidParameterError(
                "sparsity window must be at least the pattern's alphabet")
        if self.distinct_letters < 0:
            raise InvalidParameterError("letter count must be >= 0")
        if self.length_cap < self.distinct_letters:
            raise InvalidParameterError("length cap must be >= the letter count")
        if self.node_budget < 1:
            raise InvalidParameterError("node budget must be >= 1")


@dataclass(frozen=True)
class ExResult:
    max_length: int
    witness: Word
    nodes_explored: int


class _Stats:
    __slots__ = ("nodes", "best_length", "best_word")

    def __init__(self):
        self.nodes = 0
        self.best_length = -1
        self.best_word: Word = ()

    def note(self, word: Word) -> None:
        if len(word) > self.best_length or (
                len(word) == self.best_length and word < self.best_word):
            self.best_length = len(word)
            self.best_word = word


def _initial_states(pattern: Word) -> frozenset[_State]:
    return frozenset({(0, (-1,) * alphabet_size(pattern))})


def _advance(states: frozenset[_State], pattern: Word,
             letter: int) -> frozenset[_State] | None:
    """State set after appending ``letter``, or None when the letter would
    complete a copy of the pattern."""
    out = set(states)
    last = len(pattern) - 1
    for matched, assignment in states:
        p = pattern[matched]
        image = assignment[p]
        if image == letter:
            advanced = (matched + 1, assignment)
        elif image == -1 and letter not in assignment:
            advanced = (matched + 1,
                        assignment[:p] + (letter,) + assignment[p + 1:])
        else:
            continue
        if matched == last:
            return None
        out.add(advanced)
    return frozenset(out)


def _children(query: ExQuery, prefix: Sequence[int], used: int,
              states: frozenset[_State] | None):
    """Legal avoiding extensions of a canonical prefix, in letter order.
    ``states is None`` marks a branch that fell back to full checks."""
    window = tuple(prefix[-(query.sparsity - 1):]) if query.sparsity > 1 else ()
    kids = []
    for letter in range(min(used + 1, query.distinct_letters)):
        if letter in window:
            continue
        if states is None:
            if contains(tuple(prefix) + (letter,), query.pattern):
                continue
            new_states = None
        else:
            new_states = _advance(states, query.pattern, letter)
            if new_states is None:
                continue
            if len(new_states) > _STATE_CAP:
                new_states = None
        kids.append((letter, new_states))
    return kids


def _search(query: ExQuery, prefix: list[int], used: int,
            states: frozenset[_State] | None, stats: _Stats) -> tuple[int, Word]:
    stats.nodes += 1
    word = tuple(prefix)
    stats.note(word)
    if stats.nodes > query.node_budget:
        raise InfeasibleError(
            f"node budget {query.node_budget} exhausted",
            best_length=stats.best_length, witness=stats.best_word,
            nodes_explored=stats.nodes)
    if len(word) >= query.length_cap:
        raise CapHitError(query.length_cap, stats.nodes)
    best = (len(word), word)
    for letter, new_states in _children(query, prefix, used, states):
        prefix.append(letter)
        sub = _search(query, prefix, used + (1 if letter == used else 0),
                      new_states, stats)
        prefix.pop()
        if sub[0] > best[0] or (sub[0] == best[0] and sub[1] < best[1]):
            best = sub
    return best


def ex_bruteforce(query: ExQuery, workers: int = 1) -> ExResult:
    """Exact maximum length of a ``query.sparsity``-sparse word over at most
    ``query.distinct_letters`` letters avoiding ``query.pattern``, plus the
    lexicographically least word of that length.

    Raises CapHitError when an avoider reaches the length cap (the maximum
    is then unknown and never reported), and InfeasibleError past the node
    budget. With ``workers`` > 1 the tree is split breadth-first into
    subtrees searched concurrently; completed searches return exactly the
    sequential result (error payloads on the refusal paths may differ).
    """
    states = _initial_states(query.pattern)
    if workers <= 1:
        stats = _Stats()
        length, word = _search(query, [], 0, states, stats)
        return ExResult(length, word, stats.nodes)

    level: list[tuple[Word, int, frozenset[_State] | None]] = [((), 0, states)]
    best = (-1, ())
    nodes = 0

    def fold(length: int, word: Word) -> None:
        nonlocal best
        if length > best[0] or (length == best[0] and word < best[1]):
            best = (length, word)

    while level and len(level) < 2 * workers:
        next_level = []
        for prefix, used, branch_states in level:
            nodes += 1
            fold(len(prefix), prefix)
            if len(prefix) >= query.length_cap:
                raise CapHitError(query.length_cap, nodes)
            for letter, new_states in _children(query, prefix, used, branch_states):
                next_level.append(
                    (prefix + (letter,), used + (1 if letter == used else 0),
                     new_states))
        level = next_level

    def task(entry):
        prefix, used, branch_states = entry
        stats = _Stats()
        length, word = _search(query, list(prefix), used, branch_states, stats)
        return length, word, stats.nodes

    if level:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(task, level))
        for length, word, task_nodes in outcomes:
            nodes += task_nodes
            fold(length, word)
    if nodes > query.node_budget:
        raise InfeasibleError(
            f"node budget {query.node_budget} exhausted",
            best_length=best[0], witness=best[1], nodes_explored=nodes)
    return ExResult(best[0], best[1], nodes)


@dataclass(frozen=True)
class KlazarReport:
    """The three brute-forced quantities of the sparsity-collapse
    inequality: tightening the window from c to d >= c can only shorten the
    extremum, and by at most the stated factor."""

    pattern: Word
    c: int
    d: int
    n: int
    ex_d: int           # max length at window d, n letters
    ex_c: int           # max length at window c, n letters
    ex_c_small: int     # max length at window c, d-1 letters

    @property
    def lower_holds(self) -> bool:
        return self.ex_d <= self.ex_c

    @property
    def upper_holds(self) -> bool:
        return self.ex_c <= (1 + self.ex_c_small) * self.ex_d

    @property
    def passed(self) -> bool:
        return self.lower_holds and self.upper_holds


def check_klazar_inequality(pattern: Sequence[int], c: int, d: int, n: int,
                            length_cap: int = DEFAULT_LENGTH_CAP,
                            node_budget: int = DEFAULT_NODE_BUDGET,
                            workers: int = 1) -> KlazarReport:
    """Brute-force both sides of the sparsity-collapse inequality.

    Requires d >= c >= alphabet of the pattern. CapHitError/InfeasibleError
    from the underlying searches propagate; callers should report those as
    inconclusive rather than as failures.
    """
    pattern = normalize(pattern)
    if not d >= c >= alphabet_size(pattern):
        raise InvalidParameterError(
            "need d >= c >= the pattern's alphabet size")

    def value(sparsity: int, letters: int) -> int:
        if letters == 0:
            return 0
        query = ExQuery(pattern, letters, sparsity,
                        length_cap=length_cap, node_budget=node_budget)
        return ex_bruteforce(query, workers=workers).max_length

    return KlazarReport(
        pattern=pattern, c=c, d=d, n=n,
        ex_d=value(d, n),
        ex_c=value(c, n),
        ex_c_small=value(c, d - 1),
    )
