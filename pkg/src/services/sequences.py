"""
Exact integer generators for the period cardinalities of the Periodic Law and the
historical closed-form weight and volume formulas.

Everything except :func:`mills_weight` and :func:`tchitcherin_volume` is computed in exact
integer arithmetic.
"""
from src.conf import messages
from src.exceptions import InvariantError, PreconditionError
from src.schemas.sequence import HistoricalFormulaInput, SequenceRow


def _positive(name: str, value: int) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise PreconditionError(messages.NON_POSITIVE.format(name=name, value=value))
    return value


def _non_negative(name: str, value: int) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise PreconditionError(messages.NEGATIVE.format(name=name, value=value))
    return value


def period_cardinality(n: int) -> int:
    """
    Number of elements in period ``n``: ``c_n = 2 * floor((n + 2) / 2) ** 2``.

    >>> [period_cardinality(n) for n in range(1, 9)]
    [2, 8, 8, 18, 18, 32, 32, 50]
    """
    _positive("n", n)
    return 2 * ((n + 2) // 2) ** 2


def halved_cardinality(n: int) -> int:
    """
    ``c_n / 2``: the square numbers 1, 4, 4, 9, 9, ... each repeated twice except the first.
    """
    _positive("n", n)
    return ((n + 2) // 2) ** 2


def accumulated_elements(n: int) -> int:
    """
    Number of elements in periods ``1..n`` (the atomic number of the closing noble gas).

    Uses the closed form of the partial sums; the brute-force sum is checked in the test suite.
    """
    _positive("n", n)
    m = n // 2
    # pairs (2j, 2j+1) for j=1..m contribute 4(j+1)^2 minus the unpaired tail when n is even
    total = 2 + _sum_shifted_squares(m) * 4
    if n % 2 == 0:
        total -= period_cardinality(n + 1)
    return total


def _sum_shifted_squares(m: int) -> int:
    # sum_{j=1..m} (j+1)^2
    return (m + 1) * (m + 2) * (2 * m + 3) // 6 - 1


def shell_capacity(n: int) -> int:
    """
    Maximum number of electrons in principal level ``n``: ``2 n^2``.
    """
    _positive("n", n)
    return 2 * n * n


def triangular(n: int) -> int:
    """
    Triangular number ``t_n = n (n + 1) / 2``, with ``t_0 = 0``.

    >>> [triangular(n) for n in range(6)]
    [0, 1, 3, 6, 10, 15]
    """
    _non_negative("n", n)
    return n * (n + 1) // 2


def square_as_adjacent_triangulars(k: int) -> tuple[int, int, int]:
    """
    Split ``k^2`` into the adjacent triangular numbers ``t_{k-1}`` and ``t_k``.

    Returns:
        tuple[int, int, int]: ``(t_{k-1}, t_k, k^2)``.

    Raises:
        InvariantError: If the two triangular numbers do not add up to the square.
    """
    _positive("k", k)
    left, right, square = triangular(k - 1), triangular(k), k * k
    if left + right != square:
        raise InvariantError(messages.INTERNAL_ERROR.format(reason=f"t_{k - 1} + t_{k} != {k}^2"))
    return left, right, square


def gnomon_square(k: int) -> tuple[tuple[int, ...], int]:
    """
    Build ``k^2`` from the first ``k`` odd numbers (gnomons).

    Returns:
        tuple[tuple[int, ...], int]: The gnomons ``1, 3, ..., 2k - 1`` and their sum.
    """
    _positive("k", k)
    gnomons = tuple(2 * i - 1 for i in range(1, k + 1))
    return gnomons, sum(gnomons)


def cardinality_set_vs_sequence(n: int) -> tuple[frozenset[int], tuple[int, ...]]:
    """
    The set ``{2 m^2}`` reached by the first ``n`` periods next to the ordered cardinalities.

    The set carries no multiplicity; the sequence repeats every value except the first.
    """
    _positive("n", n)
    sequence = tuple(period_cardinality(i) for i in range(1, n + 1))
    levels = (n + 2) // 2
    return frozenset(shell_capacity(m) for m in range(1, levels + 1)), sequence


def weise_noble_gas(n: int) -> int:
    """
    Atomic number of the ``n``-th noble gas by Weise's closed form
    ``((-1)^n (3n + 6) + 2n^3 + 12n^2 + 25n - 6) / 12``.

    Raises:
        InvariantError: If the numerator is not divisible by 12.
    """
    _positive("n", n)
    sign = -1 if n % 2 else 1
    numerator = sign * (3 * n + 6) + 2 * n ** 3 + 12 * n ** 2 + 25 * n - 6
    quotient, remainder = divmod(numerator, 12)
    if remainder:
        raise InvariantError(messages.WEISE_NOT_EXACT.format(numerator=numerator, n=n))
    return quotient


def mills_weight(n: int, t: int) -> float:
    """
    Mills' atomic weight formula ``15 (n - 0.9375^t)``.

    Args:
        n (int): Integer multiplier, ``n >= 1``.
        t (int): Exponent, ``t >= 1``.

    Returns:
        float: Weight in atomic weight units; ``mills_weight(2, 1)`` is 15.9375 (oxygen).
    """
    params = HistoricalFormulaInput(mills_n=_positive("n", n), mills_t=_positive("t", t))
    return 15 * (params.mills_n - 0.9375 ** params.mills_t)


def tchitcherin_volume(a: float, n: int) -> float:
    """
    Tchitcherin's atomic volume relation ``A (2 - 0.00535 A n)``.

    Args:
        a (float): Atomic weight, strictly positive.
        n (int): Family parameter, ``n >= 1``.

    Returns:
        float: Atomic volume.
    """
    if not a > 0:
        raise PreconditionError(messages.NON_POSITIVE.format(name="A", value=a))
    params = HistoricalFormulaInput(tchitcherin_A=a, tchitcherin_n=_positive("n", n))
    return params.tchitcherin_A * (2 - 0.00535 * params.tchitcherin_A * params.tchitcherin_n)


def sequence_table(max_n: int) -> list[SequenceRow]:
    """
    Rows ``1..max_n`` of the cardinality report: c_n, c_n/2, accumulated, 2n^2, t_n and Z_n.
    """
    _positive("max", max_n)
    return [SequenceRow(n=n, cardinality=period_cardinality(n), halved=halved_cardinality(n),
                        accumulated=accumulated_elements(n), shell_capacity=shell_capacity(n),
                        triangular=triangular(n), weise=weise_noble_gas(n))
            for n in range(1, max_n + 1)]
