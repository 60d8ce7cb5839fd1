"""Rational Dyck path words: ranks, validation, enumeration, counting.

A (dm,dn)-Dyck path, for a co-prime pair (m, n) and a dilation factor d,
is a lattice path of dn North and dm East unit steps from (0,0) to (dm,dn)
that stays weakly above the line of slope n/m.  Every lattice point (i, j)
carries the integer rank m*j - n*i; walking the path, the rank gains m
after a North step and loses n after an East step, and a word is Dyck
exactly when no vertex rank goes negative.

Words are plain strings over {N, E} wrapped in StepWord together with
their parameters.  Columns (step positions) are numbered from 1 so that
they match the columns of the stretched diagram in `diagram`.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass

from .errors import (
    BadCounts,
    BadLetter,
    LimitExceeded,
    NonCoprime,
    NonPositive,
    NotDyck,
)

NORTH = "N"
EAST = "E"

#: Default cap on d*(m+n), the number of steps, for exhaustive enumeration.
#: Counting is unbounded (polynomial DP); enumeration is not.
DEFAULT_STEP_LIMIT = 40


def step_limit() -> int:
    """The enumeration cap, honoring the SWEEPLAB_LIMIT environment variable."""
    raw = os.environ.get("SWEEPLAB_LIMIT")
    if raw is None:
        return DEFAULT_STEP_LIMIT
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"SWEEPLAB_LIMIT must be an integer, got {raw!r}") from None


@dataclass(frozen=True)
class Params:
    """The triple (m, n, d): slope pair and dilation factor.

    m is the rank gained by a North step, n the rank dropped by an East
    step; the underlying grid is dm wide and dn tall.
    """

    m: int
    n: int
    d: int

    def __post_init__(self):
        for name, value in (("m", self.m), ("n", self.n), ("d", self.d)):
            if not isinstance(value, int) or value < 1:
                raise NonPositive(f"{name} must be a positive integer, got {value!r}")
        if math.gcd(self.m, self.n) != 1:
            raise NonCoprime(f"m={self.m} and n={self.n} share a factor")

    @property
    def east_count(self) -> int:
        return self.d * self.m

    @property
    def north_count(self) -> int:
        return self.d * self.n

    @property
    def step_count(self) -> int:
        return self.d * (self.m + self.n)

    @property
    def rect_height(self) -> int:
        """Height d*m*n of the stretched diagram rectangle."""
        return self.d * self.m * self.n


def make_params(m: int, n: int, d: int = 1) -> Params:
    """Validated parameters.

    >>> make_params(3, 2, 1)
    Params(m=3, n=2, d=1)
    """
    return Params(m, n, d)


@dataclass(frozen=True)
class StepWord:
    """An immutable word of North/East steps with its parameters."""

    steps: tuple[str, ...]
    params: Params

    def __post_init__(self):
        dn, dm = self.params.north_count, self.params.east_count
        norths = sum(1 for s in self.steps if s == NORTH)
        easts = len(self.steps) - norths
        if norths != dn or easts != dm:
            raise BadCounts(
                f"word needs {dn} N and {dm} E letters, got {norths} N and {easts} E"
            )

    @property
    def text(self) -> str:
        return "".join(self.steps)

    def __str__(self) -> str:
        return self.text

    def __len__(self) -> int:
        return len(self.steps)

    def letter(self, column: int) -> str:
        """The letter at 1-based position `column`."""
        return self.steps[column - 1]


_ALPHABET = {"N": NORTH, "E": EAST, "S": NORTH, "W": EAST}


def parse_word(text: str, params: Params) -> StepWord:
    """Parse a path word over {N, E}; {S, W} are accepted as synonyms.

    >>> parse_word("SWSWW", make_params(3, 2)).text
    'NENEE'
    """
    steps = []
    for ch in text:
        try:
            steps.append(_ALPHABET[ch])
        except KeyError:
            raise BadLetter(f"letter {ch!r} is not one of N, E, S, W") from None
    return StepWord(tuple(steps), params)


def start_ranks(word: StepWord) -> tuple[int, ...]:
    """The starting rank of each step, in column order.

    r_1 = 0, then each North step adds m and each East step subtracts n.

    >>> start_ranks(parse_word("NENEE", make_params(3, 2)))
    (0, 3, 1, 4, 2)
    """
    m, n = word.params.m, word.params.n
    ranks = [0]
    for ch in word.steps[:-1]:
        ranks.append(ranks[-1] + (m if ch == NORTH else -n))
    return tuple(ranks)


def vertex_ranks(word: StepWord) -> tuple[int, ...]:
    """Ranks of all d(m+n)+1 path vertices; the last one is always 0."""
    m, n = word.params.m, word.params.n
    ranks = [0]
    for ch in word.steps:
        ranks.append(ranks[-1] + (m if ch == NORTH else -n))
    return tuple(ranks)


def is_dyck(word: StepWord) -> bool:
    """True iff every vertex rank along the path is nonnegative."""
    return min(vertex_ranks(word)) >= 0


def require_dyck(word: StepWord) -> None:
    if not is_dyck(word):
        raise NotDyck(f"not a Dyck path: {word.text}")


def enumerate_dyck(params: Params, limit: int | None = None):
    """Yield every (dm,dn)-Dyck path exactly once, in lexicographic order
    with N < E.

    Backtracking with the rank pruning rule: an East step is only emitted
    while the running rank stays nonnegative.  A partial word with all
    ranks nonnegative always completes (append the remaining North steps,
    then the remaining East steps), so the search has no dead ends.

    Raises LimitExceeded when d(m+n) exceeds `limit` (default: the value
    of step_limit()).
    """
    cap = step_limit() if limit is None else limit
    if params.step_count > cap:
        raise LimitExceeded(
            f"{params.step_count} steps exceed the enumeration limit {cap}"
        )
    return _enumerate(params)


def _enumerate(params: Params):
    m, n = params.m, params.n
    dn, dm = params.north_count, params.east_count
    prefix: list[str] = []

    def rec(rank: int, norths: int, easts: int):
        if norths == dn and easts == dm:
            yield StepWord(tuple(prefix), params)
            return
        if norths < dn:
            prefix.append(NORTH)
            yield from rec(rank + m, norths + 1, easts)
            prefix.pop()
        if easts < dm and rank >= n:
            prefix.append(EAST)
            yield from rec(rank - n, norths, easts + 1)
            prefix.pop()

    yield from rec(0, 0, 0)


def count_dyck(params: Params) -> int:
    """The number of (dm,dn)-Dyck paths, by dynamic programming.

    Counts monotone lattice paths through the vertices (x, y) with
    m*y - n*x >= 0; no enumeration, so no size limit.

    >>> count_dyck(make_params(7, 5))
    66
    """
    m, n = params.m, params.n
    dm, dn = params.east_count, params.north_count
    ways = [[0] * (dn + 1) for _ in range(dm + 1)]
    ways[0][0] = 1
    for x in range(dm + 1):
        for y in range(dn + 1):
            if x == y == 0 or m * y - n * x < 0:
                continue
            total = 0
            if x > 0:
                total += ways[x - 1][y]
            if y > 0:
                total += ways[x][y - 1]
            ways[x][y] = total
    return ways[dm][dn]


def base_path(params: Params) -> StepWord:
    """The unique area-0 path, hugging the diagonal from below.

    Built greedily from rank 0: step East whenever the current rank
    allows it (rank >= n), otherwise step North.

    >>> base_path(make_params(5, 2)).text
    'NEENEEE'
    """
    m, n = params.m, params.n
    steps = []
    rank = 0
    for _ in range(params.step_count):
        if rank >= n:
            steps.append(EAST)
            rank -= n
        else:
            steps.append(NORTH)
            rank += m
    return StepWord(tuple(steps), params)


def corner_path(params: Params) -> StepWord:
    """The maximum-area path: all North steps, then all East steps."""
    steps = (NORTH,) * params.north_count + (EAST,) * params.east_count
    return StepWord(steps, params)


def south_end_ranks(word: StepWord) -> tuple[int, ...]:
    """Starting ranks of the North steps, in path order.

    The j-th entry (1-based) is the rank of the North step that starts at
    height j-1.  Requires a Dyck word.
    """
    require_dyck(word)
    ranks = start_ranks(word)
    return tuple(r for r, ch in zip(ranks, word.steps) if ch == NORTH)
