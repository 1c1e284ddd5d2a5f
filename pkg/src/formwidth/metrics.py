"""Greedy row-count metrics against the repeated-ascending and alternating
targets, with closed forms and width bounds for stacked-run words.

Both metrics lower-bound the formation width, because the targets are
themselves binary formations. They are computed exactly by minimizing a
single greedy pass over all c! base permutations; c stays small at desk
scale and exactness matters because these feed width bounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Sequence

from .errors import InvalidParameterError
from .words import Word, alphabet_size, ascending, descending, is_permutation, normalize


def _check_operands(u: Sequence[int], pi: Sequence[int]) -> None:
    if not is_permutation(pi):
        raise InvalidParameterError(f"{pi!r} is not a permutation of 0..{len(pi) - 1}")
    if not u or not set(u) <= set(range(len(pi))):
        raise InvalidParameterError(
            "word letters must be drawn from the permutation's domain")


def l_pi(u: Sequence[int], pi: Sequence[int]) -> int:
    """Rows consumed by greedily matching ``u`` against repeated copies of
    the row ``pi``: the least k such that ``u`` is a plain subsequence of
    that row repeated k times.

    >>> l_pi((2, 1, 0), (0, 1, 2))
    3
    """
    _check_operands(u, pi)
    index_in_row = {letter: i for i, letter in enumerate(pi)}
    rows = 1
    cur = -1
    for letter in u:
        p = index_in_row[letter]
        if p > cur:
            cur = p
        else:
            rows += 1
            cur = p
    return rows


def l_metric(u: Sequence[int]) -> int:
    """The least k such that up(c, k) contains ``u`` (c = distinct letters
    of ``u``): the minimum of the greedy row count over all base rows.

    >>> l_metric(normalize("abcabc"))
    2
    """
    u = normalize(u)
    c = alphabet_size(u)
    return min(l_pi(u, pi) for pi in permutations(range(c)))


def _alt_rows(u: Sequence[int], pi: Sequence[int]) -> int:
    """Rows consumed by greedily matching ``u`` against the infinite
    alternation of ``pi`` and its reverse. A letter whose position does not
    advance within the current row (in particular a repeat of the previous
    matched letter) forces a row advance."""
    _check_operands(u, pi)
    c = len(pi)
    index_in_row = {letter: i for i, letter in enumerate(pi)}
    rows = 1
    cur = -1
    for letter in u:
        while True:
            i = index_in_row[letter]
            p = i if rows % 2 == 1 else c - 1 - i
            if p > cur:
                cur = p
                break
            rows += 1
            cur = -1
    return rows


def r_metric(u: Sequence[int]) -> int:
    """The least k such that alt(c, k) contains ``u``.

    >>> r_metric(normalize("abcabc"))
    3
    """
    u = normalize(u)
    c = alphabet_size(u)
    return min(_alt_rows(u, pi) for pi in permutations(range(c)))


def pi_overlap(tail_letter: int, head_letter: int, pi: Sequence[int]) -> bool:
    """True iff ``head_letter`` occurs strictly after ``tail_letter`` in the
    row ``pi``, so that concatenated matches ending and starting with those
    letters share a row and save one copy."""
    if not is_permutation(pi):
        raise InvalidParameterError(f"{pi!r} is not a permutation of 0..{len(pi) - 1}")
    index_in_row = {letter: i for i, letter in enumerate(pi)}
    try:
        return index_in_row[head_letter] > index_in_row[tail_letter]
    except KeyError as exc:
        raise InvalidParameterError(
            f"letter {exc.args[0]} outside the permutation's domain") from None


# --- closed forms for stacked-run words ------------------------------------

@dataclass(frozen=True)
class BinaryFormationSpec:
    """A word made of maximal runs of ascending and descending rows on the
    same alphabet, described by its run lengths: ``exponents[0]`` ascending
    rows, then ``exponents[1]`` descending, and so on alternating."""

    alphabet: int
    exponents: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "exponents", tuple(self.exponents))
        if self.alphabet < 2:
            raise InvalidParameterError("alphabet size must be >= 2")
        if not self.exponents or any(e < 1 for e in self.exponents):
            raise InvalidParameterError("run lengths must be positive")

    @property
    def ascending_rows(self) -> int:
        return sum(self.exponents[0::2])

    @property
    def descending_rows(self) -> int:
        return sum(self.exponents[1::2])

    @property
    def run_count(self) -> int:
        return len(self.exponents)

    @property
    def total_rows(self) -> int:
        return self.ascending_rows + self.descending_rows

    def realize(self) -> Word:
        """The described word, flattened."""
        out: list[int] = []
        for i, e in enumerate(self.exponents):
            row = ascending(self.alphabet) if i % 2 == 0 else descending(self.alphabet)
            out.extend(row * e)
        return tuple(out)

    def to_text(self) -> str:
        return f"c={self.alphabet};e={','.join(str(e) for e in self.exponents)}"

    @classmethod
    def from_text(cls, text: str) -> "BinaryFormationSpec":
        """Parse the ``c=3;e=1,1,1`` serialization."""
        fields = dict(part.split("=", 1) for part in text.split(";") if part)
        try:
            c = int(fields["c"])
            exponents = tuple(int(e) for e in fields["e"].split(","))
        except (KeyError, ValueError) as exc:
            raise InvalidParameterError(
                f"bad run spec {text!r}; expected like c=3;e=1,1,1") from exc
        return cls(c, exponents)

    def to_json(self) -> dict:
        return {"c": self.alphabet, "exponents": list(self.exponents)}


@dataclass(frozen=True)
class MetricBounds:
    """Exact metric values and the proved width bracket for a stacked-run
    word. Both metrics are lower bounds on the width; the upper bound is
    the better of twice-the-ascending-metric-minus-one and the best
    pigeonhole bound over run choices."""

    l_value: int
    r_value: int
    fw_lower: int
    fw_upper: int

    def __post_init__(self):
        assert self.fw_lower <= self.fw_upper
        assert self.l_value <= self.fw_upper


def binary_closed_forms(spec: BinaryFormationSpec) -> MetricBounds:
    """Closed-form metric values and width bracket for a stacked-run word.

    >>> binary_closed_forms(BinaryFormationSpec(3, (1, 1, 1)))
    MetricBounds(l_value=5, r_value=3, fw_lower=5, fw_upper=7)
    """
    c = spec.alphabet
    n = spec.run_count
    k = spec.total_rows
    big = max(spec.ascending_rows, spec.descending_rows)
    small = min(spec.ascending_rows, spec.descending_rows)
    l_value = (c - 1) * small + big + n // 2
    r_value = 2 * k - n
    run_bound = min(c * (k - e) + 2 * e - 1 for e in spec.exponents)
    return MetricBounds(
        l_value=l_value,
        r_value=r_value,
        fw_lower=max(l_value, r_value),
        fw_upper=min(2 * l_value - 1, run_bound),
    )


def r_exceeds_l(spec: BinaryFormationSpec) -> bool:
    """Closed-form predicate for when the alternating metric beats the
    ascending one on a stacked-run word."""
    c = spec.alphabet
    n = spec.run_count
    big = max(spec.ascending_rows, spec.descending_rows)
    small = min(spec.ascending_rows, spec.descending_rows)
    return big > (c - 3) * small + n + n // 2
