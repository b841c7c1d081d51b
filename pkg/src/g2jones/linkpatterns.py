"""Planar link patterns and the cup generators acting on them.

A link pattern on n boundary points (n even) is a non-crossing perfect
matching of 1..n.  The diagram algebra generator e_i caps points i and
i+1; acting on a pattern it either closes a loop (when the pattern
already contains the cup (i, i+1), contributing the loop scalar) or
reconnects two strands into a new pattern.  Matrices are written in the
basis of patterns in lexicographic order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import IndexRangeError, OddBoundaryError
from .matrices import SquareMatrix
from .rings import LaurentPoly


@dataclass(frozen=True, order=True)
class LinkPattern:
    """Non-crossing perfect matching, stored as sorted (i, j) pairs with i < j."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        norm = tuple(sorted((min(a, b), max(a, b)) for a, b in self.pairs))
        object.__setattr__(self, "pairs", norm)
        points = [p for pair in norm for p in pair]
        n = 2 * len(norm)
        if sorted(points) != list(range(1, n + 1)):
            raise ValueError("pairs must partition 1..n")
        if self._has_crossing():
            raise ValueError("pattern has crossing strands")

    def _has_crossing(self) -> bool:
        for a, b in self.pairs:
            for c, d in self.pairs:
                if a < c < b < d:
                    return True
        return False

    @property
    def n(self) -> int:
        return 2 * len(self.pairs)

    def partner(self, point: int) -> int:
        for a, b in self.pairs:
            if a == point:
                return b
            if b == point:
                return a
        raise ValueError(f"point {point} not in pattern")

    def has_cup(self, i: int) -> bool:
        """True when points i and i+1 are matched to each other."""
        return (i, i + 1) in self.pairs

    def apply_cup(self, i: int) -> tuple[bool, "LinkPattern"]:
        """Act by the cup at (i, i+1).

        Returns (closed_loop, new_pattern).  When the pattern already
        contains the cup, the cup closes a loop and the pattern is
        unchanged; otherwise the partners of i and i+1 are joined and
        (i, i+1) becomes a cup.
        """
        if self.has_cup(i):
            return True, self
        a, b = self.partner(i), self.partner(i + 1)
        others = [p for p in self.pairs if i not in p and (i + 1) not in p]
        others.append((min(a, b), max(a, b)))
        others.append((i, i + 1))
        return False, LinkPattern(tuple(others))

    def __str__(self) -> str:
        return "".join(f"({a},{b})" for a, b in self.pairs)


@lru_cache(maxsize=None)
def enumerate_link_patterns(n: int) -> tuple[LinkPattern, ...]:
    """All link patterns on n points, lexicographically ordered by pairs.

    The count is the Catalan number C(n/2).
    """
    if n % 2 != 0 or n < 2:
        raise OddBoundaryError(f"need an even number of points >= 2, got {n}")
    return tuple(sorted(LinkPattern(p) for p in _matchings(tuple(range(1, n + 1)))))


def _matchings(points: tuple[int, ...]):
    # non-crossing recursion: the first point pairs with some point at
    # even distance, splitting the rest into inside and outside
    if not points:
        yield ()
        return
    first = points[0]
    for k in range(1, len(points), 2):
        inside, outside = points[1:k], points[k + 1:]
        for left in _matchings(inside):
            for right in _matchings(outside):
                yield ((first, points[k]),) + left + right


def loop_value(m: int) -> LaurentPoly:
    """Loop scalar -(u^m + u^-m)."""
    return LaurentPoly({m: -1, -m: -1})


def tl_generator(i: int, n: int, m: int) -> SquareMatrix:
    """Matrix of the cup generator e_i on link patterns of n points.

    Columns are indexed by source patterns; an action that closes a loop
    contributes the loop scalar -(u^m + u^-m) on the diagonal, otherwise
    a single 1 in the row of the image pattern.
    """
    if n % 2 != 0 or n < 2:
        raise OddBoundaryError(f"need an even number of points >= 2, got {n}")
    if not 1 <= i <= n - 1:
        raise IndexRangeError(f"cup index {i} outside 1..{n - 1}")
    patterns = enumerate_link_patterns(n)
    index = {p: k for k, p in enumerate(patterns)}
    delta = loop_value(m)
    zero = LaurentPoly.zero()
    one = LaurentPoly.one()
    dim = len(patterns)
    cols = []
    for p in patterns:
        closed, image = p.apply_cup(i)
        col = [zero] * dim
        col[index[image]] = delta if closed else one
        cols.append(col)
    return SquareMatrix(tuple(zip(*cols)))
