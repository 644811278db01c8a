"""Signatures, interlacing, Gelfand-Tsetlin patterns and part shifts.

Everything in this module is a pure function on immutable values; the
enumeration orders are fixed and documented so that downstream output
(generating-function sums, matrix blocks, JSON) is deterministic.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator


@dataclass(frozen=True)
class Signature:
    """Nonincreasing integer tuple of length N (the level).

    Labels an irreducible representation of the rank-N (quantum) unitary
    group.  The empty signature, level 0, is a legitimate value and is the
    unique label at rank zero.
    """

    parts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(int(p) for p in self.parts))
        for a, b in zip(self.parts, self.parts[1:]):
            if a < b:
                raise ValueError(f"signature parts must be nonincreasing: {self.parts}")

    @property
    def level(self) -> int:
        return len(self.parts)

    @property
    def size(self) -> int:
        """Sum of the parts."""
        return sum(self.parts)

    def __str__(self) -> str:
        return "*" if not self.parts else "(" + ",".join(map(str, self.parts)) + ")"


EMPTY = Signature(())


@dataclass(frozen=True)
class GTPattern:
    """Triangular array of pairwise interlacing rows; row k has length k.

    ``rows[0]`` is the single-entry bottom row, ``rows[-1]`` the top row.
    Patterns with top row t enumerate a weight basis of the irreducible
    representation labeled by t.
    """

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        if not rows:
            raise ValueError("a pattern needs at least one row")
        for k, row in enumerate(rows):
            if len(row) != k + 1:
                raise ValueError(f"row {k + 1} must have length {k + 1}: {row}")
        for low, up in zip(rows, rows[1:]):
            if not _interlaces_parts(low, up):
                raise ValueError(f"rows do not interlace: {low} within {up}")

    @property
    def top(self) -> Signature:
        return Signature(self.rows[-1])


@dataclass(frozen=True)
class BoundaryParam:
    """Eventually constant nondecreasing integer sequence.

    Represents (head[0], ..., head[-1], tail, tail, ...).  Trailing head
    entries equal to the tail are stripped on construction so that equal
    sequences always compare equal.
    """

    head: tuple[int, ...]
    tail: int

    def __post_init__(self):
        head = tuple(int(h) for h in self.head)
        tail = int(self.tail)
        for a, b in zip(head, head[1:]):
            if a > b:
                raise ValueError(f"head must be nondecreasing: {head}")
        if head and head[-1] > tail:
            raise ValueError(f"head may not exceed the tail value: {head} / {tail}")
        while head and head[-1] == tail:
            head = head[:-1]
        object.__setattr__(self, "head", head)
        object.__setattr__(self, "tail", tail)

    def entry(self, i: int) -> int:
        """The i-th sequence entry, 1-based."""
        if i < 1:
            raise ValueError("sequence entries are indexed from 1")
        return self.head[i - 1] if i <= len(self.head) else self.tail

    def signature_at(self, level: int) -> Signature:
        """The level-`level` signature made of the first entries, largest first."""
        return Signature(tuple(self.entry(i) for i in range(level, 0, -1)))


def _interlaces_parts(lower: tuple[int, ...], upper: tuple[int, ...]) -> bool:
    return all(
        upper[k] >= lower[k] >= upper[k + 1] for k in range(len(lower))
    )


def interlaces(lower: Signature, upper: Signature) -> bool:
    """Whether ``upper[k] >= lower[k] >= upper[k+1]`` holds for all k.

    The levels must differ by exactly one; the empty signature interlaces
    below every level-1 signature.
    """
    if upper.level != lower.level + 1:
        raise ValueError(
            f"levels must differ by 1: got {lower.level} and {upper.level}"
        )
    return _interlaces_parts(lower.parts, upper.parts)


@lru_cache(maxsize=None)
def enumerate_down(upper: Signature) -> tuple[Signature, ...]:
    """All signatures one level below `upper` that interlace it, ascending lex.

    The count is the product of (upper[k] - upper[k+1] + 1) over k.
    """
    if upper.level < 1:
        raise ValueError("need a signature of level >= 1")
    n = upper.level - 1
    ranges = [range(upper.parts[k + 1], upper.parts[k] + 1) for k in range(n)]
    # any choice with parts[k] in [upper[k+1], upper[k]] is automatically
    # nonincreasing, so the raw product is exactly the interlacing set
    return tuple(Signature(parts) for parts in product(*ranges))


def _pattern_rows(top: tuple[int, ...]) -> Iterator[tuple[tuple[int, ...], ...]]:
    if len(top) == 1:
        yield (top,)
        return
    for lam in reversed(enumerate_down(Signature(top))):
        for rows in _pattern_rows(lam.parts):
            yield rows + (top,)


def enumerate_gt_patterns(top: Signature) -> Iterator[GTPattern]:
    """Lazily enumerate all patterns with the given top row.

    Order: patterns are grouped by the row directly below the top, larger
    rows first, and recursively so inside each group.  The first pattern
    emitted is therefore the highest-weight one (weight equal to the top
    row itself), and patterns sharing a sub-top row are contiguous.  The
    number of patterns equals the classical dimension of the irreducible
    representation labeled by `top`.
    """
    if top.level < 1:
        raise ValueError("need a signature of level >= 1")
    for rows in _pattern_rows(top.parts):
        yield GTPattern(rows)


def weight(pattern: GTPattern) -> tuple[int, ...]:
    """Row-sum differences (w_1, ..., w_N); they sum to the top row size."""
    out = []
    prev = 0
    for row in pattern.rows:
        s = sum(row)
        out.append(s - prev)
        prev = s
    return tuple(out)


def shift(lam: Signature, k: int) -> Signature:
    """Add k to every part; shifting by -k inverts."""
    return Signature(tuple(p + k for p in lam.parts))


@lru_cache(maxsize=None)
def dimension(lam: Signature) -> int:
    """Classical dimension: product of (lam_i - lam_j + j - i) / (j - i).

    Equals the number of patterns with top row `lam` (and the side length
    of the matrix block attached to `lam`).
    """
    n = lam.level
    num = 1
    den = 1
    for i in range(n):
        for j in range(i + 1, n):
            num *= lam.parts[i] - lam.parts[j] + j - i
            den *= j - i
    return num // den


def iter_signatures(level: int, lo: int, hi: int) -> Iterator[Signature]:
    """All signatures of the given level with parts in [lo, hi], ascending lex."""
    if level == 0:
        yield EMPTY
        return
    for parts in product(range(lo, hi + 1), repeat=level):
        if all(parts[i] >= parts[i + 1] for i in range(level - 1)):
            yield Signature(parts)
