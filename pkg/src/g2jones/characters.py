"""Character theory of the symmetric group S6.

Irreducible characters are computed by the Murnaghan-Nakayama rule in
its abacus form: a partition is encoded as the set of its first-column
hook lengths (beta numbers); removing a rim hook of size r moves one
beta number down by r, with sign given by the number of beta numbers it
jumps over.  The full 11 x 11 table supports row and column
orthogonality self-checks and a plain-text export/import round trip.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .errors import SchemaError
from .tableaux import is_partition, partitions


def canonical_partitions(n: int) -> tuple[tuple[int, ...], ...]:
    """Partitions of n in descending lexicographic order."""
    return tuple(sorted(partitions(n), reverse=True))


def centralizer_order(mu: tuple[int, ...]) -> int:
    """z_mu = prod(parts) * prod(multiplicities!)."""
    z = 1
    for part in mu:
        z *= part
    for part in set(mu):
        z *= factorial(mu.count(part))
    return z


def class_size(mu: tuple[int, ...]) -> int:
    n = sum(mu)
    quotient, rem = divmod(factorial(n), centralizer_order(mu))
    if rem:
        raise ArithmeticError("centralizer order does not divide n!")
    return quotient


def _beta_set(lam: tuple[int, ...]) -> tuple[int, ...]:
    # first-column hook lengths: lam_i + (rows - 1 - i), distinct by construction
    rows = len(lam)
    return tuple(lam[i] + (rows - 1 - i) for i in range(rows))


def _beta_to_partition(beta: tuple[int, ...]) -> tuple[int, ...]:
    ordered = sorted(beta, reverse=True)
    rows = len(ordered)
    lam = tuple(b - (rows - 1 - i) for i, b in enumerate(ordered))
    return tuple(p for p in lam if p > 0)


@lru_cache(maxsize=None)
def mn_character(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    """Character value chi_lambda at the class of cycle type mu."""
    if sum(lam) != sum(mu):
        raise ValueError("partition sizes disagree")
    if not lam:
        return 1
    if not is_partition(lam) or not is_partition(mu):
        raise ValueError("arguments must be partitions")
    r = mu[0]
    rest = mu[1:]
    beta = set(_beta_set(lam))
    total = 0
    for b in sorted(beta):
        target = b - r
        if target < 0 or target in beta:
            continue
        crossed = sum(1 for other in beta if target < other < b)
        sign = -1 if crossed % 2 else 1
        new_beta = (beta - {b}) | {target}
        total += sign * mn_character(_beta_to_partition(tuple(new_beta)), rest)
    return total


@dataclass(frozen=True)
class CharacterTable:
    """Square character table: one row per partition, one column per class."""

    n: int
    classes: tuple[tuple[tuple[int, ...], int], ...]  # (cycle type, class size)
    rows: tuple[tuple[int, ...], ...]  # values, row order == class order

    @classmethod
    def build(cls, n: int = 6) -> "CharacterTable":
        parts = canonical_partitions(n)
        classes = tuple((mu, class_size(mu)) for mu in parts)
        rows = tuple(
            tuple(mn_character(lam, mu) for mu, _ in classes) for lam in parts
        )
        return cls(n=n, classes=classes, rows=rows)

    @property
    def partitions(self) -> tuple[tuple[int, ...], ...]:
        return tuple(mu for mu, _ in self.classes)

    def value(self, lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
        li = self.partitions.index(tuple(lam))
        ci = self.partitions.index(tuple(mu))
        return self.rows[li][ci]

    def dimension(self, lam: tuple[int, ...]) -> int:
        identity = (1,) * self.n
        return self.value(lam, identity)

    def group_order(self) -> int:
        return factorial(self.n)

    def check_row_orthogonality(self) -> bool:
        order = self.group_order()
        k = len(self.classes)
        sizes = [size for _, size in self.classes]
        for i in range(k):
            for j in range(i, k):
                total = sum(
                    sizes[c] * self.rows[i][c] * self.rows[j][c] for c in range(k)
                )
                if total != (order if i == j else 0):
                    return False
        return True

    def check_column_orthogonality(self) -> bool:
        order = self.group_order()
        k = len(self.classes)
        for c in range(k):
            for d in range(c, k):
                total = sum(self.rows[r][c] * self.rows[r][d] for r in range(k))
                expected = order // self.classes[c][1] if c == d else 0
                if total != expected:
                    return False
        return True

    def inner_product(self, values_by_class) -> Fraction:
        """<values, values> with respect to the class-size weighting."""
        order = self.group_order()
        total = sum(
            size * Fraction(values_by_class[mu]) ** 2 for mu, size in self.classes
        )
        return Fraction(total, order)

    def multiplicity(self, lam: tuple[int, ...], values_by_class) -> Fraction:
        """<values, chi_lambda> for a class function given as {cycle type: value}."""
        order = self.group_order()
        li = self.partitions.index(tuple(lam))
        total = sum(
            size * self.rows[li][ci] * Fraction(values_by_class[mu])
            for ci, (mu, size) in enumerate(self.classes)
        )
        return Fraction(total, order)

    def export_text(self) -> str:
        """Deterministic plain-text form; inverse of :meth:`from_text`."""
        lines = [f"symmetric group S{self.n} character table"]
        lines.append("classes: " + " ".join(
            f"{format_partition(mu)}:{size}" for mu, size in self.classes
        ))
        for lam, row in zip(self.partitions, self.rows):
            lines.append(
                f"{format_partition(lam)}: " + " ".join(str(v) for v in row)
            )
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "CharacterTable":
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        if len(lines) < 2 or not lines[0].startswith("symmetric group S"):
            raise SchemaError("missing character table header")
        try:
            n = int(lines[0].split("S", 1)[1].split()[0])
        except (ValueError, IndexError):
            raise SchemaError("unreadable group size in header") from None
        if not lines[1].startswith("classes: "):
            raise SchemaError("missing classes line")
        classes = []
        for chunk in lines[1][len("classes: "):].split():
            label, _, size_text = chunk.rpartition(":")
            mu = parse_partition_label(label)
            try:
                size = int(size_text)
            except ValueError:
                raise SchemaError(f"bad class size in {chunk!r}") from None
            classes.append((mu, size))
        rows = []
        row_labels = []
        for line in lines[2:]:
            label, _, values_text = line.partition(": ")
            row_labels.append(parse_partition_label(label))
            try:
                rows.append(tuple(int(v) for v in values_text.split()))
            except ValueError:
                raise SchemaError(f"bad character value in {line!r}") from None
        if row_labels != [mu for mu, _ in classes]:
            raise SchemaError("row labels must match class labels in order")
        if any(len(r) != len(classes) for r in rows):
            raise SchemaError("row length must equal the number of classes")
        return cls(n=n, classes=tuple(classes), rows=tuple(rows))


def format_partition(mu: tuple[int, ...]) -> str:
    return "[" + ",".join(str(p) for p in mu) + "]"


def parse_partition_label(text: str) -> tuple[int, ...]:
    if not (text.startswith("[") and text.endswith("]")):
        raise SchemaError(f"bad partition label {text!r}")
    body = text[1:-1]
    try:
        parts = tuple(int(p) for p in body.split(",") if p)
    except ValueError:
        raise SchemaError(f"bad partition label {text!r}") from None
    if not is_partition(parts):
        raise SchemaError(f"not a partition: {text!r}")
    return parts
