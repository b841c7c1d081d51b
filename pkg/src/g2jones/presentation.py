"""Defining relations of the genus-2 twist generators.

The group generated by the five chain twists c1..c5 has the presentation
with braid relations for adjacent pairs, commutation for distant pairs,
the chain relation (c1 c2 c3 c4 c5)^6 = 1, an involutive hyperelliptic
element iota = c1 c2 c3 c4 c5 c5 c4 c3 c2 c1, and iota central.
:func:`check_presentation` evaluates every relation on concrete
generator matrices and reports each outcome by name.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .matrices import SquareMatrix
from .words import MCGWord, evaluate_word


def chain_word() -> MCGWord:
    return MCGWord(tuple((i, 1) for i in range(1, 6)))


def hyperelliptic_word() -> MCGWord:
    ascending = tuple((i, 1) for i in range(1, 6))
    return MCGWord(ascending + tuple(reversed(ascending)))


@dataclass(frozen=True)
class RelationCheck:
    name: str
    passed: bool
    difference: SquareMatrix | None = None


@dataclass(frozen=True)
class RelationReport:
    checks: tuple[RelationCheck, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def first_failure(self) -> RelationCheck | None:
        return next((c for c in self.checks if not c.passed), None)

    def failures(self) -> tuple[RelationCheck, ...]:
        return tuple(c for c in self.checks if not c.passed)

    def __str__(self) -> str:
        lines = [
            f"[{'ok' if c.passed else 'FAIL'}] {c.name}" for c in self.checks
        ]
        return "\n".join(lines)


def _compare(name: str, lhs: SquareMatrix, rhs: SquareMatrix) -> RelationCheck:
    if lhs == rhs:
        return RelationCheck(name, True)
    return RelationCheck(name, False, lhs - rhs)


def braid_relation_words(i: int) -> tuple[MCGWord, MCGWord]:
    a, b = MCGWord.generator(i), MCGWord.generator(i + 1)
    return a * b * a, b * a * b


def check_presentation(generators) -> RelationReport:
    """Evaluate all defining relations on the given generator matrices."""
    gens = tuple(generators)
    dim = gens[0].dim
    identity = SquareMatrix.identity(dim)
    checks = []

    for i in range(1, 5):
        lhs, rhs = braid_relation_words(i)
        checks.append(_compare(
            f"braid c{i} c{i + 1}",
            evaluate_word(lhs, gens),
            evaluate_word(rhs, gens),
        ))

    for i in range(1, 6):
        for j in range(i + 2, 6):
            checks.append(_compare(
                f"commute c{i} c{j}",
                gens[i - 1] * gens[j - 1],
                gens[j - 1] * gens[i - 1],
            ))

    checks.append(_compare(
        "chain (c1 c2 c3 c4 c5)^6 = 1",
        evaluate_word(chain_word() ** 6, gens),
        identity,
    ))

    iota = evaluate_word(hyperelliptic_word(), gens)
    checks.append(_compare("hyperelliptic iota^2 = 1", iota * iota, identity))
    for i in range(1, 6):
        checks.append(_compare(
            f"iota central: [iota, c{i}] = 1",
            iota * gens[i - 1],
            gens[i - 1] * iota,
        ))

    return RelationReport(tuple(checks))
