"""Independent brute-force oracles.

These deliberately share no code with the library: containment is decided
by enumerating position subsets, width by enumerating all binary formations
including both first-row senses, formation length with all rows free, and
the extremal function by breadth-first enumeration of every word with no
canonical pruning. Slow, but trustworthy at tiny sizes.
"""

from itertools import combinations, permutations, product


def relabel(seq):
    ids = {}
    return tuple(ids.setdefault(x, len(ids)) for x in seq)


def contains_oracle(text, pattern):
    text, pattern = tuple(text), tuple(pattern)
    k = len(pattern)
    if k == 0:
        return True
    target = relabel(pattern)
    return any(relabel(tuple(text[i] for i in pos)) == target
               for pos in combinations(range(len(text)), k))


def fw_oracle(u, s_max=8):
    u = tuple(u)
    r = len(set(u))
    rising = tuple(range(r))
    falling = rising[::-1]
    for s in range(1, s_max + 1):
        formations = product((rising, falling), repeat=s)
        if all(contains_oracle(tuple(x for row in f for x in row), u)
               for f in formations):
            return s
    return None


def fl_oracle(u, s, r_max=3):
    """Least alphabet at which every s-row formation (all rows free, no
    first-row normalization) contains u."""
    u = tuple(u)
    for r in range(1, r_max + 1):
        formations = product(permutations(range(r)), repeat=s)
        if all(contains_oracle(tuple(x for row in f for x in row), u)
               for f in formations):
            return r
    return None


def ex_oracle(pattern, n, sparsity, max_len=12):
    """Exact maximum by levelwise enumeration of all avoiding words, or
    None when the level survives to max_len (uncertified)."""
    pattern = tuple(pattern)
    level = [()]
    for length in range(1, max_len + 1):
        survivors = []
        for w in level:
            for letter in range(n):
                if sparsity > 1 and letter in w[-(sparsity - 1):]:
                    continue
                extended = w + (letter,)
                if not contains_oracle(extended, pattern):
                    survivors.append(extended)
        if not survivors:
            return length - 1
        level = survivors
    return None
