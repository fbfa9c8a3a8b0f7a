"""The graded graph of record words.

Level n holds the 2^(n-1) binary words of length n starting with 1.  A word
rho of length n is joined to tau of length n+1 when some k in [n+1] satisfies:
tau agrees with rho strictly below k, tau has a 1 at k, and tau is 0 above k.
Equivalently, tau arises from rho by inserting a new maximal letter at
position k.  Every vertex therefore has exactly n+1 successors.

Length-n paths from the root biject with permutations of [n]
(:func:`recperm.permutations.phi_path`), and the number of paths ending at
rho equals the product of (i-1) over the non-record positions i of rho.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Iterator, Mapping, Sequence
from fractions import Fraction

from .errors import BudgetExceeded, NormalizationError
from .permutations import RecordWord, check_record_word, format_record_word

MAX_MATERIALIZED_LEVEL = 20


def iter_level(n: int) -> Iterator[RecordWord]:
    """All record words of length n, in lexicographic order."""
    if n < 1:
        raise ValueError("level index must be at least 1")
    for mask in range(1 << (n - 1)):
        yield (1,) + tuple((mask >> (n - 2 - i)) & 1 for i in range(n - 1))


def level(n: int) -> list[RecordWord]:
    """Materialized level; above length 20 use :func:`iter_level` instead."""
    if n > MAX_MATERIALIZED_LEVEL:
        raise BudgetExceeded(
            f"level {n} has 2^{n-1} vertices; iterate lazily instead",
            required=1 << (n - 1),
        )
    return list(iter_level(n))


def is_edge(rho: Sequence[int], tau: Sequence[int]) -> bool:
    """Edge predicate between consecutive levels."""
    r = check_record_word(rho)
    t = check_record_word(tau)
    if len(t) != len(r) + 1:
        raise ValueError("lengths must differ by exactly one")
    k = max(i for i, b in enumerate(t, 1) if b == 1)
    return all(t[i] == r[i] for i in range(k - 1))


def successors(rho: Sequence[int]) -> list[RecordWord]:
    """Upper neighbours, ordered by decreasing insertion position.

    >>> successors((1, 0))
    [(1, 0, 1), (1, 1, 0), (1, 0, 0)]
    """
    r = check_record_word(rho)
    n = len(r)
    return [r[: k - 1] + (1,) + (0,) * (n + 1 - k) for k in range(n + 1, 0, -1)]


def predecessors(tau: Sequence[int]) -> list[RecordWord]:
    """Lower neighbours: words agreeing with tau strictly below its last 1."""
    t = check_record_word(tau)
    n = len(t) - 1
    if n < 1:
        return []
    k = max(i for i, b in enumerate(t, 1) if b == 1)
    prefix = t[: k - 1]
    free = n - len(prefix)
    out = []
    for mask in range(1 << free):
        tail = tuple((mask >> (free - 1 - i)) & 1 for i in range(free))
        r = prefix + tail
        if r[0] == 1:
            out.append(r)
    return out


def dimension(rho: Sequence[int]) -> int:
    """Number of root-to-rho paths; equals the size of the record fiber.

    Closed form: product of (i-1) over non-record positions i.  The brute
    force certificate lives in :mod:`recperm.oracle`.

    >>> dimension((1, 0, 1, 1, 0))
    4
    """
    r = check_record_word(rho)
    out = 1
    for i, b in enumerate(r, 1):
        if b == 0:
            out *= i - 1
    return out


def level_dimension_total(n: int) -> int:
    """Sum of dimension over level n; must equal n!."""
    return sum(dimension(rho) for rho in iter_level(n))


PathMeasure = Mapping[tuple[RecordWord, ...], Fraction | float]


def is_central(measure: PathMeasure) -> bool:
    """True when all paths sharing an endpoint carry equal mass.

    The measure must be normalized over paths of one fixed length; rational
    masses are compared exactly, floats within 1e-12.
    """
    if not measure:
        raise NormalizationError("empty path measure")
    total = sum(measure.values())
    exact = all(isinstance(v, (Fraction, int)) for v in measure.values())
    if exact:
        if total != 1:
            raise NormalizationError(f"path masses sum to {total}, not 1")
    elif not math.isclose(float(total), 1.0, abs_tol=1e-9):
        raise NormalizationError(f"path masses sum to {total}, not 1")
    by_endpoint: dict[RecordWord, set] = {}
    for path, mass in measure.items():
        by_endpoint.setdefault(path[-1], set()).add(mass)
    if exact:
        return all(len(masses) == 1 for masses in by_endpoint.values())
    return all(
        max(m) - min(m) <= 1e-12 for m in (list(v) for v in by_endpoint.values())
    )


def path_pushforward(
    dist: Mapping[tuple[int, ...], Fraction | float],
) -> dict[tuple[RecordWord, ...], Fraction | float]:
    """Push a distribution on permutation words to one on graph paths."""
    from .permutations import phi_path

    return {phi_path(word): mass for word, mass in dist.items()}


def elementary_path_measure(rho: Sequence[int]) -> dict[tuple[RecordWord, ...], Fraction]:
    """Uniform measure on the paths ending at rho (endpoint fixed)."""
    from .oracle import enumerate_record_fiber
    from .permutations import phi_path

    fiber = enumerate_record_fiber(rho)
    mass = Fraction(1, len(fiber))
    return {phi_path(w): mass for w in fiber}


def adjacency_lines(levels: Iterable[int] | int) -> list[str]:
    """Line-oriented adjacency export, one ``rho -> t1 t2 ...`` per vertex."""
    if isinstance(levels, int):
        levels = range(1, levels + 1)
    out = []
    for n in levels:
        for rho in iter_level(n):
            succ = " ".join(format_record_word(t) for t in successors(rho))
            out.append(f"{format_record_word(rho)} -> {succ}")
    return out
