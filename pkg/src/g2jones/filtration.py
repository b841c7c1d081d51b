"""h-adic expansion of Torelli words and their leading matrices.

Substituting u = eps * e^h (eps = +1 or -1) into the evaluated word
matrix yields a series matrix.  For a word acting trivially on homology
the constant term is the identity, so the matrix reads I + h^k * C +
O(h^(k+1)); the exponent k is the word's filtration depth and C its
leading matrix.  :func:`analyze` packages depth, leading matrix, trace,
a determinant identity check, and the projection onto scalars into one
report.

The determinant identity asserted for every analyzed word: det of the
series matrix agrees with 1 + h^k * trace(C) modulo h^(k+1).  It is
checked here with the permutation-sum determinant, deliberately a
different code path from the subset dynamic program used elsewhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    Degree0NontrivialError,
    DepthMismatchError,
    NotTorelliError,
    ValuationExceedsOrderError,
)
from .matrices import (
    SquareMatrix,
    determinant_by_permutations,
    matrix_trace,
    series_matrix_valuation,
)
from .rep import Normalization, RepDefinition
from .rings import LaurentPoly, TruncSeries, laurent_to_series
from .symplectic import is_torelli
from .words import MCGWord, evaluate_word

DEFAULT_ORDER = 12

CASES = {"plus": 1, "minus": -1}


def case_label(eps: int) -> str:
    return {1: "plus", -1: "minus"}[eps]


def word_series(rep: RepDefinition, word: MCGWord, eps: int, order: int) -> SquareMatrix:
    """Evaluate the word over Z[u, u^-1], then substitute u = eps * e^h.

    Substitution is a ring homomorphism, so this equals evaluating the
    word in the already-substituted generator matrices; doing the exact
    Laurent product first keeps the series arithmetic to a single pass.
    """
    laurent = evaluate_word(word, rep.generators)
    return laurent.map_entries(lambda p: laurent_to_series(p, eps, order))


def degree0_matrix(rep: RepDefinition, word: MCGWord, eps: int) -> SquareMatrix:
    """Constant term of the word's series: the Laurent matrix at u = eps."""
    laurent = evaluate_word(word, rep.generators)
    return laurent.map_entries(
        lambda p: p.evaluate_at_sign(eps) if isinstance(p, LaurentPoly) else p
    )


@dataclass(frozen=True)
class FiltrationReport:
    word: str
    epsilon: int
    order: int
    torelli: bool
    degree0_trivial: bool
    depth: int
    delta: SquareMatrix
    trace: Fraction
    det_lemma_ok: bool
    trivial_projection: Fraction
    normalization: Normalization | None

    def to_document(self) -> dict:
        return {
            "word": self.word,
            "epsilon": self.epsilon,
            "order": self.order,
            "torelli": self.torelli,
            "degree0_trivial": self.degree0_trivial,
            "depth": self.depth,
            "delta": [[str(x) for x in row] for row in self.delta.entries],
            "trace": str(self.trace),
            "det_lemma_ok": self.det_lemma_ok,
            "trivial_projection": str(self.trivial_projection),
            "normalization": self.normalization.as_dict() if self.normalization else None,
        }


def _det_identity_holds(series: SquareMatrix, depth: int, lead: SquareMatrix) -> bool:
    # compare modulo h^(depth + 1), i.e. on coefficients 0..depth
    det = determinant_by_permutations(series)
    expected_coeffs = [Fraction(0)] * (depth + 1)
    expected_coeffs[0] = Fraction(1)
    expected_coeffs[depth] = Fraction(matrix_trace(lead))
    return det.truncate(depth) == TruncSeries(depth, expected_coeffs)


def analyze(rep: RepDefinition, word: MCGWord, eps: int, order: int = DEFAULT_ORDER) -> FiltrationReport:
    """Full h-adic report for one Torelli word at one sign of u.

    Raises :class:`NotTorelliError` for words acting nontrivially on
    homology, :class:`Degree0NontrivialError` when the series constant
    term is not the identity, and :class:`ValuationExceedsOrderError`
    when the word is the identity through the requested order.
    """
    if eps not in (1, -1):
        raise ValueError("eps must be +1 or -1")
    if not isinstance(order, int) or order < 2:
        raise ValueError("order must be an integer >= 2")
    if not is_torelli(word):
        raise NotTorelliError(f"word {word} acts nontrivially on homology")
    series = word_series(rep, word, eps, order)
    dim = series.dim
    for i in range(dim):
        for j in range(dim):
            if series.entry(i, j).constant_term() != (1 if i == j else 0):
                raise Degree0NontrivialError(
                    f"constant term of {word} differs from the identity at ({i}, {j})"
                )
    depth, lead = series_matrix_valuation(series)
    trace = Fraction(matrix_trace(lead))
    return FiltrationReport(
        word=str(word),
        epsilon=eps,
        order=order,
        torelli=True,
        degree0_trivial=True,
        depth=depth,
        delta=lead,
        trace=trace,
        det_lemma_ok=_det_identity_holds(series, depth, lead),
        trivial_projection=trace / dim,
        normalization=rep.normalization,
    )


def verify_det_lemma(rep: RepDefinition, word: MCGWord, eps: int, order: int = DEFAULT_ORDER) -> bool:
    """Stand-alone check of the determinant identity for one word."""
    series = word_series(rep, word, eps, order)
    depth, lead = series_matrix_valuation(series)
    return _det_identity_holds(series, depth, lead)


@dataclass(frozen=True)
class AdditivityCheck:
    """Outcome of comparing the leading matrix of x*y with the sum for x and y.

    ``deeper`` is True when the leading matrices cancel and the product
    sits strictly deeper in the filtration; that confirms additivity
    (the sum is zero) rather than refuting it.
    """

    holds: bool
    deeper: bool
    depth: int
    expected: SquareMatrix
    actual: SquareMatrix | None

    def __bool__(self) -> bool:
        return self.holds


def check_delta_additivity(
    rep: RepDefinition, x: MCGWord, y: MCGWord, eps: int, order: int = DEFAULT_ORDER
) -> AdditivityCheck:
    """Leading matrix of x*y against the sum of leading matrices at equal depth.

    Requires x and y to have the same depth k; otherwise raises
    :class:`DepthMismatchError`.  When the sum vanishes, the product
    must be trivial through h^k (it lies deeper), reported with
    ``deeper=True``.
    """
    rx = analyze(rep, x, eps, order)
    ry = analyze(rep, y, eps, order)
    if rx.depth != ry.depth:
        raise DepthMismatchError(
            f"depth {rx.depth} for {x} vs depth {ry.depth} for {y}"
        )
    k = rx.depth
    expected = rx.delta + ry.delta
    product_series = word_series(rep, x * y, eps, order)
    zero = Fraction(0)
    dim = product_series.dim
    actual_rows = tuple(
        tuple(product_series.entry(i, j).coefficient(k) for j in range(dim))
        for i in range(dim)
    )
    actual = SquareMatrix(actual_rows)
    lower_ok = all(
        product_series.entry(i, j).coefficient(t) == (zero if t else (1 if i == j else 0))
        for t in range(k)
        for i in range(dim)
        for j in range(dim)
    )
    expected_zero = expected == SquareMatrix.zero(dim)
    holds = lower_ok and actual == expected
    return AdditivityCheck(
        holds=holds,
        deeper=holds and expected_zero,
        depth=k,
        expected=expected,
        actual=actual,
    )


def check_equivariance(
    rep: RepDefinition, g: MCGWord, x: MCGWord, eps: int, order: int = DEFAULT_ORDER
) -> bool:
    """Conjugating the word conjugates its leading matrix by the degree-0 image.

    Checks depth(g x g^-1) == depth(x) and lead(g x g^-1) ==
    G0 * lead(x) * G0^-1 where G0 is the constant term of g's series.
    """
    base = analyze(rep, x, eps, order)
    conjugated = analyze(rep, g * x * g.inverse(), eps, order)
    g0 = degree0_matrix(rep, g, eps)
    g0_inv = degree0_matrix(rep, g.inverse(), eps)
    if conjugated.depth != base.depth:
        return False
    return conjugated.delta == g0 * base.delta * g0_inv


@dataclass(frozen=True)
class BracketCheck:
    """Outcome of the graded-commutator comparison.

    For x of depth j and y of depth k, the group commutator [x, y] is
    trivial through h^(j + k - 1) and its coefficient at h^(j + k)
    equals the matrix commutator of the leading matrices.  ``deeper``
    records the case where that commutator vanishes and [x, y] sits
    strictly deeper.
    """

    holds: bool
    deeper: bool
    depth: int
    expected: SquareMatrix
    actual: SquareMatrix

    def __bool__(self) -> bool:
        return self.holds


def check_bracket(
    rep: RepDefinition, x: MCGWord, y: MCGWord, eps: int, order: int = DEFAULT_ORDER
) -> BracketCheck:
    """Compare the commutator word's leading behaviour with the matrix bracket."""
    rx = analyze(rep, x, eps, order)
    ry = analyze(rep, y, eps, order)
    target = rx.depth + ry.depth
    if target > order:
        raise ValuationExceedsOrderError(
            order, f"depths {rx.depth} + {ry.depth} exceed order {order}"
        )
    expected = rx.delta * ry.delta - ry.delta * rx.delta
    series = word_series(rep, x.commutator(y), eps, order)
    dim = series.dim
    zero = Fraction(0)
    lower_ok = all(
        series.entry(i, j).coefficient(t) == (zero if t else (1 if i == j else 0))
        for t in range(target)
        for i in range(dim)
        for j in range(dim)
    )
    actual = SquareMatrix(tuple(
        tuple(series.entry(i, j).coefficient(target) for j in range(dim))
        for i in range(dim)
    ))
    holds = lower_ok and actual == expected
    return BracketCheck(
        holds=holds,
        deeper=holds and expected == SquareMatrix.zero(dim),
        depth=target,
        expected=expected,
        actual=actual,
    )
