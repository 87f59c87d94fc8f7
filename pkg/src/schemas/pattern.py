from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.conf import messages

PatternKind = Literal["diagonal", "knights_move", "secondary_periodicity"]
Predicate = Literal["cophenetic", "cut"]

# (group offset, period offset) from the first member to the second
OFFSETS = {
    "diagonal": (1, 1),
    "knights_move": (2, 1),
    "secondary_periodicity": (0, 2),
}
# the one diagonal that jumps the empty cells between groups 2 and 13 (Be to Al)
SHORT_PERIOD_GAP = ((2, 2), (13, 3))


class PatternPair(BaseModel):
    """
    Schema representing a pair of elements predicted similar by a positional pattern.

    Attributes:
        kind (PatternKind): ``diagonal``, ``knights_move`` or ``secondary_periodicity``.
        first (str): Upper-left member.
        second (str): Lower-right member.
        first_cell (tuple[int, int]): ``(group, period)`` of ``first``.
        second_cell (tuple[int, int]): ``(group, period)`` of ``second``.
        qualifier (str | None): Condition attached to the pattern that is not checked against data.

    Note:
        Diagonal pairs step one group right and one period down. The only exception is
        ``SHORT_PERIOD_GAP``: group 2 of period 2 pairs with group 13 of period 3.
    """
    kind: PatternKind
    first: str
    second: str
    first_cell: tuple[int, int]
    second_cell: tuple[int, int]
    qualifier: str | None = None
    model_config = ConfigDict(frozen=True)  # noqa

    @model_validator(mode="after")
    def check_offset(self):
        (g1, p1), (g2, p2) = self.first_cell, self.second_cell
        if self.kind == "diagonal" and (self.first_cell, self.second_cell) == SHORT_PERIOD_GAP:
            return self
        dg, dp = OFFSETS[self.kind]
        if (g2 - g1, p2 - p1) != (dg, dp):
            raise ValueError(f"{self.kind} pair needs offset ({dg}, {dp}), got ({g2 - g1}, {p2 - p1})")
        return self

    @property
    def symbols(self) -> tuple[str, str]:
        return self.first, self.second


class PairVerdict(BaseModel):
    pair: PatternPair
    distance: float
    confirmed: bool
    model_config = ConfigDict(frozen=True)  # noqa


class PatternScore(BaseModel):
    """
    Share of pattern pairs that the similarity structure confirms.

    Attributes:
        fraction (float): Confirmed pairs over all pairs; 0 when there are no pairs.
        threshold (float | None): Cophenetic distance at the requested quantile (``cophenetic`` predicate).
        predicate (Predicate): Rule used to confirm a pair.
        verdicts (tuple[PairVerdict, ...]): One verdict per pair, in input order.
    """
    fraction: float = Field(ge=0, le=1)
    threshold: float | None = None
    predicate: Predicate = "cophenetic"
    verdicts: tuple[PairVerdict, ...] = ()
    model_config = ConfigDict(frozen=True)  # noqa


class PettiforScale(BaseModel):
    """
    Schema representing a fixed total order of element symbols.

    Attributes:
        order (tuple[str, ...]): Symbols from rank 1 upward.
    """
    order: tuple[str, ...]
    model_config = ConfigDict(frozen=True)  # noqa

    @model_validator(mode="after")
    def check_bijection(self):
        if not self.order:
            raise ValueError("the scale needs at least one symbol")
        if len(set(self.order)) != len(self.order):
            raise ValueError("symbols on the scale must be unique")
        return self

    @property
    def ranks(self) -> dict[str, int]:
        return {symbol: rank for rank, symbol in enumerate(self.order, start=1)}

    def symbol_at(self, rank: int) -> str:
        return self.order[rank - 1]


class StructureMapPoint(BaseModel):
    x: int = Field(gt=0)
    y: int = Field(gt=0)
    label: str
    model_config = ConfigDict(frozen=True)  # noqa


class CompoundRow(BaseModel):
    """
    One binary compound of the structure-map input.

    Attributes:
        row (int): Physical line number in the source CSV.
        first (str): Symbol of element A.
        second (str): Symbol of element B.
        label (str): Structure label.
    """
    row: int
    first: str
    second: str
    label: str
    model_config = ConfigDict(frozen=True)  # noqa


class RowError(BaseModel):
    row: int
    reason: str
    model_config = ConfigDict(frozen=True)  # noqa

    def __str__(self):
        return messages.COMPOUND_ROW_ERROR.format(row=self.row, reason=self.reason)
