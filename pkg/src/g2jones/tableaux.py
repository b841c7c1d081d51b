"""Partitions and standard Young tableau counts.

Two independent counters are kept side by side: a brute-force walk of
Young's lattice (add boxes 1..n one corner at a time) and the hook
length formula.  :func:`syt_count` runs both and insists they agree.
"""

from __future__ import annotations

from functools import lru_cache
from math import factorial


def partitions(n: int) -> list[tuple[int, ...]]:
    """All partitions of n as descending tuples, in descending lex order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    result: list[tuple[int, ...]] = []

    def extend(remaining: int, largest: int, prefix: tuple[int, ...]):
        if remaining == 0:
            result.append(prefix)
            return
        for part in range(min(remaining, largest), 0, -1):
            extend(remaining - part, part, prefix + (part,))

    extend(n, n, ())
    return result


def is_partition(shape) -> bool:
    parts = tuple(shape)
    return all(isinstance(p, int) and p > 0 for p in parts) and all(
        a >= b for a, b in zip(parts, parts[1:])
    )


def conjugate(shape: tuple[int, ...]) -> tuple[int, ...]:
    parts = tuple(shape)
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p > i) for i in range(parts[0]))


@lru_cache(maxsize=None)
def _lattice_paths(shape: tuple[int, ...]) -> int:
    # number of ways to build the shape by adding one box at a time,
    # staying a partition throughout; equals the number of standard
    # tableaux of that shape
    if not shape:
        return 1
    total = 0
    for i, part in enumerate(shape):
        below = shape[i + 1] if i + 1 < len(shape) else 0
        if part > below:
            smaller = shape[:i] + ((part - 1,) if part > 1 else ()) + shape[i + 1:]
            total += _lattice_paths(smaller)
    return total


def syt_count_bruteforce(shape) -> int:
    return _lattice_paths(tuple(shape))


def syt_count_hook(shape) -> int:
    """Hook length formula: n! divided by the product of hook lengths."""
    parts = tuple(shape)
    n = sum(parts)
    cols = conjugate(parts)
    hooks = 1
    for i, row_len in enumerate(parts):
        for j in range(row_len):
            hooks *= (row_len - j) + (cols[j] - i) - 1
    quotient, rem = divmod(factorial(n), hooks)
    if rem:
        raise ArithmeticError("hook product does not divide n!")
    return quotient


def syt_count(shape) -> int:
    """Number of standard Young tableaux of the given shape.

    Computed twice, by lattice walk and by hook lengths; a disagreement
    raises rather than returning either answer.
    """
    parts = tuple(shape)
    if not is_partition(parts):
        raise ValueError(f"not a partition: {shape!r}")
    if sum(parts) > 12:
        raise ValueError("shape too large for the brute-force cross-check")
    brute = syt_count_bruteforce(parts)
    hook = syt_count_hook(parts)
    if brute != hook:
        raise ArithmeticError(
            f"tableau counts disagree for {parts}: lattice {brute}, hook {hook}"
        )
    return brute
