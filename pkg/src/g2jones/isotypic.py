"""Degree-0 image and isotypic decomposition of the conjugation module.

At u = eps the five generator matrices become involutions satisfying the
Coxeter relations of S6, so they generate a finite matrix group Phi (720
elements, found by closure).  Conjugation m -> Phi(s) m Phi(s)^-1 makes
the 5 x 5 matrices a 25-dimensional module; its isotypic pieces are
computed two independent ways:

* multiplicities by character inner products (the module character is
  the square of the trace character of Phi), and
* ranks of the averaged projectors
  P_lam = (dim_lam / 720) * sum_s chi_lam(s) * (conjugation by Phi(s)).

The trivial summand is one-dimensional, spanned by the identity; its
coefficient in any matrix is trace / 5, exposed as
:func:`project_trivial`.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import GroupClosureError, NotInvolutiveError, RelationFailureError
from .characters import CharacterTable
from .matrices import SquareMatrix, exact_rank, matrix_trace
from .rep import RepDefinition

Perm = tuple[int, ...]


def degree0_generators(rep: RepDefinition, eps: int) -> tuple[SquareMatrix, ...]:
    """Constant terms of the generators at u = eps; integer matrices."""
    if eps not in (1, -1):
        raise ValueError("eps must be +1 or -1")
    return tuple(
        g.map_entries(lambda p: p.evaluate_at_sign(eps)) for g in rep.generators
    )


def _adjacent_transposition(i: int, n: int = 6) -> Perm:
    # swaps positions i-1 and i (0-based) for the generator index i in 1..5
    perm = list(range(n))
    perm[i - 1], perm[i] = perm[i], perm[i - 1]
    return tuple(perm)


def _compose(sigma: Perm, tau: Perm) -> Perm:
    """(sigma . tau)(x) = sigma(tau(x))."""
    return tuple(sigma[t] for t in tau)


def _invert(sigma: Perm) -> Perm:
    out = [0] * len(sigma)
    for i, s in enumerate(sigma):
        out[s] = i
    return tuple(out)


def cycle_type(sigma: Perm) -> tuple[int, ...]:
    seen = [False] * len(sigma)
    lengths = []
    for start in range(len(sigma)):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = sigma[x]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def class_representative(mu: tuple[int, ...]) -> Perm:
    """A permutation of cycle type mu: consecutive blocks, each cycled."""
    perm = []
    start = 0
    for part in mu:
        block = list(range(start + 1, start + part)) + [start]
        perm.extend(block)
        start += part
    return tuple(perm)


def permutation_matrix_image(sigma: Perm, generators) -> SquareMatrix:
    """Image of a permutation: decompose into adjacent swaps, multiply images.

    Well-defined because the generator images satisfy the Coxeter
    relations; bubble sort supplies one adjacent-swap decomposition.
    """
    gens = tuple(generators)
    dim = gens[0].dim
    work = list(sigma)
    result = SquareMatrix.identity(dim)
    # swapping one-line entries precomposes with s_i, so sigma equals the
    # sorting swaps composed in reverse; images accumulate on the left
    changed = True
    while changed:
        changed = False
        for i in range(len(work) - 1):
            if work[i] > work[i + 1]:
                work[i], work[i + 1] = work[i + 1], work[i]
                result = gens[i] * result
                changed = True
    return result


def verify_coxeter(generators) -> None:
    """Involutivity, braid and distant commutation for the constant images."""
    gens = tuple(generators)
    dim = gens[0].dim
    identity = SquareMatrix.identity(dim)
    for i, g in enumerate(gens, 1):
        if g * g != identity:
            raise NotInvolutiveError(f"constant image of c{i} does not square to 1")
    for i in range(1, len(gens)):
        a, b = gens[i - 1], gens[i]
        if a * b * a != b * a * b:
            raise RelationFailureError(f"braid c{i} c{i + 1} at degree 0")
    for i in range(1, len(gens) + 1):
        for j in range(i + 2, len(gens) + 1):
            a, b = gens[i - 1], gens[j - 1]
            if a * b != b * a:
                raise RelationFailureError(f"commute c{i} c{j} at degree 0")


def group_closure(generators, cap: int = 1000) -> dict[Perm, SquareMatrix]:
    """Map from permutations to matrices, built by breadth-first closure.

    Every rediscovered element must agree with the stored matrix, which
    makes the closure a whole-group homomorphism check.  Exceeding the
    cap raises :class:`GroupClosureError`.
    """
    gens = tuple(generators)
    verify_coxeter(gens)
    n = 6
    identity_perm = tuple(range(n))
    table: dict[Perm, SquareMatrix] = {identity_perm: SquareMatrix.identity(gens[0].dim)}
    frontier = [identity_perm]
    gen_perms = [_adjacent_transposition(i, n) for i in range(1, n)]
    while frontier:
        next_frontier = []
        for sigma in frontier:
            base = table[sigma]
            for perm, matrix in zip(gen_perms, gens):
                product = _compose(sigma, perm)
                image = base * matrix
                known = table.get(product)
                if known is None:
                    table[product] = image
                    next_frontier.append(product)
                    if len(table) > cap:
                        raise GroupClosureError(
                            f"closure exceeded {cap} elements without stabilizing"
                        )
                elif known != image:
                    raise RelationFailureError(
                        "group closure inconsistency: images do not define a homomorphism"
                    )
        frontier = next_frontier
    return table


class ConjugationModule:
    """Conjugation action of the degree-0 group on dim x dim matrices."""

    def __init__(self, generators, table: CharacterTable | None = None):
        self.generators = tuple(generators)
        self.dim = self.generators[0].dim
        self.table = table or CharacterTable.build(6)
        self.image = group_closure(self.generators)
        self._class_sums: dict[tuple[int, ...], SquareMatrix] | None = None

    @classmethod
    def from_rep(cls, rep: RepDefinition, eps: int, table: CharacterTable | None = None):
        return cls(degree0_generators(rep, eps), table)

    @property
    def order(self) -> int:
        return len(self.image)

    def trace_character(self) -> dict[tuple[int, ...], int]:
        """chi_V(mu): trace of the image of one representative per class."""
        values = {}
        for mu in self.table.partitions:
            rep_matrix = permutation_matrix_image(class_representative(mu), self.generators)
            values[mu] = matrix_trace(rep_matrix)
        return values

    def module_character(self) -> dict[tuple[int, ...], int]:
        """Character of the conjugation module: chi_V squared, classwise."""
        return {mu: v * v for mu, v in self.trace_character().items()}

    def multiplicities(self) -> dict[tuple[int, ...], int]:
        """Isotypic multiplicities by character inner products."""
        module = self.module_character()
        out = {}
        for lam in self.table.partitions:
            value = self.table.multiplicity(lam, module)
            if value.denominator != 1 or value < 0:
                raise ArithmeticError(
                    f"multiplicity of {lam} is {value}, not a nonnegative integer"
                )
            out[lam] = int(value)
        return out

    def class_sums(self) -> dict[tuple[int, ...], SquareMatrix]:
        """For each class, the sum of conjugation operators over its elements.

        Operators act on row-major vec coordinates (matrix entry (i, j)
        lands at index dim*i + j); each is kron(g, (g^-1)^T) with integer
        entries.
        """
        if self._class_sums is not None:
            return self._class_sums
        dim = self.dim
        size = dim * dim
        sums = {
            mu: [[0] * size for _ in range(size)] for mu in self.table.partitions
        }
        for sigma, matrix in self.image.items():
            inverse = self.image[_invert(sigma)]
            acc = sums[cycle_type(sigma)]
            g = matrix.entries
            ginv_t = tuple(zip(*inverse.entries))
            for i in range(dim):
                for j in range(dim):
                    gij = g[i][j]
                    if not gij:
                        continue
                    for k in range(dim):
                        row = acc[dim * i + k]
                        gt_row = ginv_t[k]
                        for l in range(dim):
                            row[dim * j + l] += gij * gt_row[l]
        self._class_sums = {
            mu: SquareMatrix(tuple(tuple(r) for r in rows)) for mu, rows in sums.items()
        }
        return self._class_sums

    def projector_numerator(self, lam: tuple[int, ...]) -> SquareMatrix:
        """Integer matrix Q with projector = (dim_lam / 720) * Q."""
        sums = self.class_sums()
        size = self.dim * self.dim
        acc = SquareMatrix.zero(size)
        for mu in self.table.partitions:
            chi = self.table.value(lam, mu)
            if chi:
                acc = acc + sums[mu] * chi
        return acc

    def projector(self, lam: tuple[int, ...]) -> SquareMatrix:
        """Averaged isotypic projector with Fraction entries."""
        scale = Fraction(self.table.dimension(lam), self.order)
        return self.projector_numerator(lam).map_entries(lambda x: x * scale)

    def projector_rank(self, lam: tuple[int, ...]) -> int:
        return exact_rank(self.projector_numerator(lam))


def decompose_conjugation_module(
    rep: RepDefinition, eps: int, table: CharacterTable | None = None
) -> dict[tuple[int, ...], int]:
    return ConjugationModule.from_rep(rep, eps, table).multiplicities()


def isotypic_projector(
    lam: tuple[int, ...],
    rep: RepDefinition,
    eps: int,
    table: CharacterTable | None = None,
) -> SquareMatrix:
    return ConjugationModule.from_rep(rep, eps, table).projector(lam)


def project_trivial(matrix: SquareMatrix) -> Fraction:
    """Coefficient of the identity in the trivial-summand projection: trace / dim."""
    return Fraction(matrix_trace(matrix)) / matrix.dim
