"""Finite permutations, their records, and rank coordinates.

A permutation of [n] = {1, ..., n} is stored in one-row notation as the word
(sigma(1), ..., sigma(n)), always a tuple of 1-based letters.  Three coordinate
systems are used throughout the package:

- the word itself;
- the record word: the binary word whose j-th bit is 1 exactly when position j
  is an upper record, i.e. sigma(j) = max(sigma(1), ..., sigma(j));
- the rank vector (r_1, ..., r_n) with r_i the rank of sigma(i) among the first
  i values (r_i = k means sigma(i) is the k-th smallest so far).

The rank map is a bijection between the symmetric group and the grid
[1] x [2] x ... x [n], and position i is a record exactly when r_i = i.

Projections delete the large letters: project(word, m) removes the letters
m+1, ..., n and keeps the relative order of 1..m.  Iterating the one-step
projection and recording each record word yields a path in the record-set
branching graph; that map is a bijection between permutations of [n] and
length-n paths (see :mod:`recperm.graph`).
"""

from __future__ import annotations

from collections.abc import Sequence

from .errors import InvalidPathError

Word = tuple[int, ...]
RecordWord = tuple[int, ...]
RankVector = tuple[int, ...]


def check_word(word: Sequence[int]) -> Word:
    """Validate and normalize a one-row permutation word.

    >>> check_word([3, 4, 1, 2])
    (3, 4, 1, 2)
    """
    w = tuple(word)
    n = len(w)
    if n < 1:
        raise ValueError("permutation word must be nonempty")
    if sorted(w) != list(range(1, n + 1)):
        raise ValueError(f"not a permutation of 1..{n}: {w}")
    return w


def check_record_word(bits: Sequence[int]) -> RecordWord:
    """Validate a record word: binary, nonempty, first bit 1."""
    b = tuple(int(x) for x in bits)
    if len(b) < 1:
        raise ValueError("record word must be nonempty")
    if b[0] != 1:
        raise ValueError("record word must start with 1")
    if any(x not in (0, 1) for x in b):
        raise ValueError(f"record word bits must be 0 or 1: {b}")
    return b


def parse_word(text: str) -> Word:
    """Parse a space-separated one-row word, e.g. ``"3 4 1 2"``."""
    return check_word(tuple(int(tok) for tok in text.split()))


def format_word(word: Sequence[int]) -> str:
    return " ".join(str(x) for x in word)


def parse_record_word(text: str) -> RecordWord:
    """Parse a bit string, e.g. ``"1100"``."""
    return check_record_word(tuple(int(c) for c in text.strip()))


def format_record_word(bits: Sequence[int]) -> str:
    return "".join(str(b) for b in bits)


def records(word: Sequence[int]) -> RecordWord:
    """Record word of a permutation: bit j is 1 iff position j is an upper record.

    >>> records((3, 4, 1, 2))
    (1, 1, 0, 0)
    >>> records((4, 3, 2, 1))
    (1, 0, 0, 0)
    """
    w = check_word(word)
    bits = []
    best = 0
    for x in w:
        bits.append(1 if x > best else 0)
        best = max(best, x)
    return tuple(bits)


def record_positions(word: Sequence[int]) -> tuple[int, ...]:
    """Positions (1-based) of the upper records."""
    return tuple(i for i, b in enumerate(records(word), 1) if b)


def zero_positions(rho: Sequence[int]) -> tuple[int, ...]:
    """Non-record positions of a record word, in increasing order."""
    r = check_record_word(rho)
    return tuple(i for i, b in enumerate(r, 1) if b == 0)


def to_ranks(word: Sequence[int]) -> RankVector:
    """Rank coordinates: r_i = rank of sigma(i) among the first i values.

    >>> to_ranks((3, 4, 1, 2))
    (1, 2, 1, 2)
    """
    w = check_word(word)
    return tuple(
        sum(1 for y in w[: i + 1] if y <= x) for i, x in enumerate(w)
    )


def check_ranks(ranks: Sequence[int]) -> RankVector:
    r = tuple(ranks)
    if len(r) < 1:
        raise ValueError("rank vector must be nonempty")
    for i, x in enumerate(r, 1):
        if not 1 <= x <= i:
            raise ValueError(f"rank r_{i}={x} outside 1..{i}")
    return r


def from_ranks(ranks: Sequence[int]) -> Word:
    """Inverse of :func:`to_ranks`.

    >>> from_ranks((1, 2, 1, 2))
    (3, 4, 1, 2)
    """
    r = check_ranks(ranks)
    # by_value[v-1] is the position currently holding the v-th smallest value
    by_value: list[int] = []
    for i, x in enumerate(r, 1):
        by_value.insert(x - 1, i)
    word = [0] * len(r)
    for value, pos in enumerate(by_value, 1):
        word[pos - 1] = value
    return tuple(word)


def project(word: Sequence[int], m: int) -> Word:
    """Delete letters m+1..n from the word, keeping the order of 1..m.

    >>> project((3, 4, 1, 2), 3)
    (3, 1, 2)
    """
    w = check_word(word)
    if not 1 <= m <= len(w):
        raise ValueError(f"projection size {m} outside 1..{len(w)}")
    return tuple(x for x in w if x <= m)


def phi_path(word: Sequence[int]) -> tuple[RecordWord, ...]:
    """Record words of all projections, from size 1 up to the full word.

    The result is a path of the record-set graph, and the map is injective:
    the j-th entry is the record word of project(word, j).
    """
    w = check_word(word)
    return tuple(records(project(w, j)) for j in range(1, len(w) + 1))


def _edge_witness(rho: Sequence[int], tau: Sequence[int]) -> int | None:
    """The unique k making (rho, tau) an edge, or None.

    Edge rule: tau agrees with rho strictly below k, has a 1 at k, and is 0
    above k.  Such k must be the last 1 of tau, hence is unique.
    """
    n = len(rho)
    if len(tau) != n + 1:
        raise ValueError("consecutive record words must grow by one letter")
    k = max(i for i, b in enumerate(tau, 1) if b == 1)
    if any(tau[i - 1] != rho[i - 1] for i in range(1, k)):
        return None
    return k


def phi_inverse(path: Sequence[Sequence[int]]) -> Word:
    """Reconstruct the permutation from its path of record words.

    Each edge pins the position of the new largest letter: inserting letter j
    at position k keeps the records below k, creates a record at k, and kills
    every later record.
    """
    entries = [check_record_word(p) for p in path]
    if len(entries[0]) != 1:
        raise InvalidPathError("path must start at the length-1 word")
    word = [1]
    for j in range(2, len(entries) + 1):
        prev, cur = entries[j - 2], entries[j - 1]
        if len(prev) != j - 1 or len(cur) != j:
            raise InvalidPathError(f"entry {j} has wrong length")
        k = _edge_witness(prev, cur)
        if k is None:
            raise InvalidPathError(f"entries {j-1} and {j} are not an edge")
        word.insert(k - 1, j)
    return tuple(word)


def record_predecessors(rho: Sequence[int]) -> dict[RecordWord, int]:
    """Multiplicities of record words one level down under letter deletion.

    For a record word A of length n, the returned mapping sends each record
    word B of length n-1 to the number of permutations sigma with record word
    A whose one-step projection equals a fixed word tau with record word B.
    That count is 1 when B agrees with A strictly below A's last record
    (deleting the top letter frees every later bit), and 0 otherwise; only
    the B with count 1 are listed.
    """
    a = check_record_word(rho)
    n = len(a)
    if n < 2:
        raise ValueError("need length at least 2")
    j = max(i for i, b in enumerate(a, 1) if b == 1)
    out: dict[RecordWord, int] = {}
    prefix = a[: j - 1]
    free = (n - 1) - len(prefix)
    for mask in range(1 << free):
        tail = tuple((mask >> i) & 1 for i in range(free))
        b = prefix + tail
        if b[0] == 1:
            out[b] = 1
    return out
