import re
from fractions import Fraction
from typing import Callable

from pydantic import ValidationError

from src.conf import messages
from src.exceptions import PreconditionError
from src.schemas.shell import LETTERS, Comparison, Configuration, Occupancy, OrderParameter, Shell

LABEL_PATTERN = re.compile(r"^\s*(\d+)\s*([a-z])\s*$")

MADELUNG = OrderParameter(kind="madelung")
HYDROGENIC = OrderParameter(kind="hydrogenic")


def make_shell(n: int, l: int) -> Shell:  # noqa: E741
    try:
        return Shell(n=n, l=l)
    except ValidationError:
        raise PreconditionError(messages.INVALID_SHELL.format(n=n, l=l))


def parse_shell(label: str) -> Shell:
    """
    Parse spectroscopic notation such as ``1s``, ``3d`` or ``5g``.

    Raises:
        PreconditionError: If the label is malformed or names an impossible shell (``2d``).
    """
    match = LABEL_PATTERN.match(label)
    if match is None or match.group(2) not in LETTERS:
        raise PreconditionError(messages.BAD_SHELL_LABEL.format(label=label))
    return make_shell(int(match.group(1)), LETTERS.index(match.group(2)))


def parse_order(text: str) -> OrderParameter:
    """
    Parse ``madelung``, ``hydrogenic`` or ``ray:K`` with ``K <= -1``.
    """
    text = text.strip().lower()
    if text in ("madelung", "hydrogenic"):
        return OrderParameter(kind=text)
    if text.startswith("ray:"):
        try:
            slope = float(Fraction(text[4:]))
        except (ValueError, ZeroDivisionError):
            raise PreconditionError(messages.BAD_ORDER.format(order=text))
        try:
            return OrderParameter(kind="ray", slope_k=slope)
        except ValidationError:
            raise PreconditionError(messages.BAD_SLOPE.format(k=text[4:]))
    raise PreconditionError(messages.BAD_ORDER.format(order=text))


def _key_function(order: OrderParameter) -> Callable[[Shell], tuple]:
    if order.kind == "madelung":
        return lambda shell: (shell.n + shell.l, shell.n)
    if order.kind == "hydrogenic":
        return lambda shell: (shell.n, shell.l)
    return _ray_key(order.beta)


def _ray_key(beta: Fraction) -> Callable[[Shell], tuple]:
    # ties on the functional go to the smaller n
    return lambda shell: (shell.n + beta * shell.l, shell.n)


def compare(order: OrderParameter, a: Shell, b: Shell) -> Comparison:
    """
    Compare two shells under an order of the family.

    Args:
        order (OrderParameter): Madelung (``n + l`` then ``n``), hydrogenic (``n`` then ``l``) or a ray
            (``n + beta * l`` then ``n``).
        a (Shell): First shell.
        b (Shell): Second shell.

    Returns:
        Comparison: ``LESS`` when ``a`` fills first, ``EQUAL`` only when ``a == b``.
    """
    key = _key_function(order)
    key_a, key_b = key(a), key(b)
    if key_a < key_b:
        return Comparison.LESS
    if key_a > key_b:
        return Comparison.GREATER
    return Comparison.EQUAL


def _candidates(count: int) -> list[Shell]:
    return [Shell(n=n, l=l) for n in range(1, count + 1) for l in range(n)]  # noqa: E741


def _first_shells(key: Callable[[Shell], tuple], count: int) -> list[Shell]:
    return sorted(_candidates(count), key=key)[:count]


def enumerate_shells(order: OrderParameter, count: int) -> list[Shell]:
    """
    First ``count`` shells in filling order.

    Args:
        order (OrderParameter): The order to fill by.
        count (int): Number of shells, ``count >= 1``.

    Returns:
        list[Shell]: Shells in increasing order.

    Note:
        Candidates are drawn from ``n <= count``, which suffices because the ordering functional is
        at least ``n`` for every member of the family.
    """
    if count < 1:
        raise PreconditionError(messages.NON_POSITIVE.format(name="count", value=count))
    return _first_shells(_key_function(order), count)


def local_order_holds(order: OrderParameter, a: Shell, b: Shell, shift: tuple[int, int]) -> bool:
    """
    Check translation invariance of the order for one pair: ``a < b`` iff ``a + shift < b + shift``.

    Raises:
        PreconditionError: If a shifted shell is not a valid shell.
    """
    dn, dl = shift
    shifted_a = make_shell(a.n + dn, a.l + dl)
    shifted_b = make_shell(b.n + dn, b.l + dl)
    return compare(order, a, b) == compare(order, shifted_a, shifted_b)


def _shells_covering(order: OrderParameter, done: Callable[[list[Shell]], bool]) -> list[Shell]:
    count = 1
    while True:
        shells = enumerate_shells(order, count)
        if done(shells):
            return shells
        count *= 2


def aufbau_configuration(z: int, order: OrderParameter) -> Configuration:
    """
    Fill ``z`` electrons into shells in enumeration order, each shell to capacity ``2 (2l + 1)``.

    Args:
        z (int): Number of electrons, ``z >= 1``.
        order (OrderParameter): Filling order.

    Returns:
        Configuration: The idealized configuration; real-atom exceptions are not modelled.
    """
    if z < 1:
        raise PreconditionError(messages.NON_POSITIVE.format(name="Z", value=z))
    shells = _shells_covering(order, lambda found: sum(shell.capacity for shell in found) >= z)
    entries, remaining = [], z
    for shell in shells:
        if remaining == 0:
            break
        placed = min(shell.capacity, remaining)
        entries.append(Occupancy(shell=shell, electrons=placed))
        remaining -= placed
    return Configuration(entries=tuple(entries), total=z)


def _closes_period(shell: Shell) -> bool:
    return shell.l == 1 or (shell.n, shell.l) == (1, 0)


def period_lengths(order: OrderParameter, num_periods: int) -> list[int]:
    """
    Lengths of the first ``num_periods`` periods implied by a filling order.

    Args:
        order (OrderParameter): Filling order.
        num_periods (int): Number of periods, ``>= 1``.

    Returns:
        list[int]: Electron counts between consecutive period closures.

    Note:
        Period 1 closes when ``1s`` completes and every later period when the next ``p`` shell
        completes. Orders that fill every principal level completely before starting the next one
        (the hydrogenic order, and rays steep enough to agree with it) have no such pattern; there a
        period is a whole level and closes right before the next level's ``s`` shell.
    """
    if num_periods < 1:
        raise PreconditionError(messages.NON_POSITIVE.format(name="num_periods", value=num_periods))
    opening = Shell(n=num_periods + 1, l=0)
    shells = _shells_covering(order, lambda found: opening in found)
    whole_levels = shells.index(opening) == num_periods * (num_periods + 1) // 2
    if not whole_levels:
        shells = _shells_covering(order, lambda found: sum(map(_closes_period, found)) >= num_periods)
    lengths, electrons = [], 0
    for index, shell in enumerate(shells):
        electrons += shell.capacity
        if whole_levels:
            closed = shells[index + 1].n > shell.n
        else:
            closed = _closes_period(shell)
        if closed:
            lengths.append(electrons)
            electrons = 0
            if len(lengths) == num_periods:
                break
    return lengths


def order_transitions(count: int) -> list[tuple[Fraction, tuple[Shell, ...]]]:
    """
    Slopes at which the ray-family enumeration of the first ``count`` shells changes.

    Args:
        count (int): Number of shells tracked.

    Returns:
        list[tuple[Fraction, tuple[Shell, ...]]]: Pairs ``(k, shells)`` with ``k <= -1`` in decreasing
        order; ``shells`` is the enumeration valid for slopes just below ``k``. The first pair is
        ``(-1, madelung enumeration)``.
    """
    if count < 1:
        raise PreconditionError(messages.NON_POSITIVE.format(name="count", value=count))
    pool = _candidates(count)
    critical = set()
    for a in pool:
        for b in pool:
            if a.l > b.l and b.n > a.n:
                beta = Fraction(b.n - a.n, a.l - b.l)
                if beta <= 1:
                    critical.add(beta)
    betas = sorted(critical | {Fraction(1)}, reverse=True)
    transitions = [(Fraction(-1), tuple(_first_shells(_ray_key(Fraction(1)), count)))]
    for index, beta in enumerate(betas):
        lower = betas[index + 1] if index + 1 < len(betas) else Fraction(0)
        below = tuple(_first_shells(_ray_key((beta + lower) / 2), count))
        if below != transitions[-1][1]:
            transitions.append((-1 / beta, below))
    return transitions
