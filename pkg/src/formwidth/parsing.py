"""Text grammars for words and formations.

Words accept three forms: compact lowercase letters (``abcacb``),
comma-separated integers (``0,1,2,0,2,1``), and a compact digits/uppercase
form (``1234567890ABCDEF``) in the one-based convention traditionally used
for long permutations, where ``1``..``9`` mean letters 0..8, ``0`` means 9
and ``A``..``Z`` mean 10..35. Words parse to normalized form, which makes
the token convention immaterial: any injective token reading yields the
same canonical word.

Formation rows are different: they carry exact letter ids, so ``parse_word``
does not apply. Rows are joined by ``|`` and each row is either lowercase
letters, comma-separated integers, or zero-based alphanumerics
(``0``..``9`` are letters 0..9, ``A``..``Z`` are 10..35), as in
``012|210|012``.
"""

from __future__ import annotations

from string import ascii_lowercase, ascii_uppercase, digits

from .errors import ParseError
from .formations import Formation
from .words import Word, normalize

_ONE_BASED = {ch: i for i, ch in enumerate("123456789" + "0" + ascii_uppercase)}
_ZERO_BASED = {ch: i for i, ch in enumerate(digits + ascii_uppercase)}
_LETTERS = {ch: i for i, ch in enumerate(ascii_lowercase)}


def _decode_compact(text: str, table: dict[str, int], what: str) -> tuple[int, ...]:
    out = []
    for i, ch in enumerate(text):
        if ch not in table:
            raise ParseError(f"unexpected {ch!r} in {what} at position {i}", i)
        out.append(table[ch])
    return tuple(out)


def decode_one_based(text: str) -> tuple[int, ...]:
    """Raw (unnormalized) letter ids of a one-based compact string.

    >>> decode_one_based("1234567890ABCDEF")
    (0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15)
    """
    return _decode_compact(text, _ONE_BASED, "one-based compact word")


def _decode_int_list(text: str, what: str) -> tuple[int, ...]:
    parts = text.split(",")
    out = []
    offset = 0
    for part in parts:
        try:
            out.append(int(part.strip()))
        except ValueError:
            raise ParseError(f"bad integer {part.strip()!r} in {what} "
                             f"at position {offset}", offset) from None
        offset += len(part) + 1
    if any(x < 0 for x in out):
        raise ParseError(f"negative letter id in {what}")
    return tuple(out)


def parse_word(text: str) -> Word:
    """Parse and normalize a word in any of the three grammars.

    >>> parse_word("abcacb")
    (0, 1, 2, 0, 2, 1)
    >>> parse_word("0,1,0,1")
    (0, 1, 0, 1)
    """
    text = text.strip()
    if not text:
        raise ParseError("empty word", 0)
    if "," in text:
        return normalize(_decode_int_list(text, "word"))
    if text[0] in _LETTERS:
        for i, ch in enumerate(text):
            if ch not in _LETTERS:
                raise ParseError(
                    f"unexpected {ch!r} at position {i}: lowercase words may "
                    "not mix other characters", i)
        return normalize(_decode_compact(text, _LETTERS, "word"))
    return normalize(decode_one_based(text))


def render_word(word: Word) -> str:
    """Compact rendering; inverse of parse_word on canonical words."""
    if word and max(word) < 26:
        return "".join(ascii_lowercase[x] for x in word)
    return ",".join(str(x) for x in word)


def _decode_row(text: str) -> tuple[int, ...]:
    if "," in text:
        return _decode_int_list(text, "formation row")
    if text and text[0] in _LETTERS:
        return _decode_compact(text, _LETTERS, "formation row")
    return _decode_compact(text, _ZERO_BASED, "formation row")


def parse_formation(text: str) -> Formation:
    """Parse rows joined by ``|``; rows keep their exact letter ids.

    >>> parse_formation("012|210").rows
    ((0, 1, 2), (2, 1, 0))
    """
    text = text.strip()
    if not text:
        raise ParseError("empty formation", 0)
    return Formation(tuple(_decode_row(row.strip()) for row in text.split("|")))


def render_formation(f: Formation) -> str:
    """Rows joined by ``|``; zero-based alphanumerics up to 36 letters."""
    if f.width <= 36:
        alphabet = digits + ascii_uppercase
        return "|".join("".join(alphabet[x] for x in row) for row in f.rows)
    return "|".join(",".join(str(x) for x in row) for row in f.rows)
