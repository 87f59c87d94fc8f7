from typing import Annotated

from pydantic import BaseModel, ConfigDict, Field

PeriodIndex = Annotated[int, Field(ge=1)]


class HistoricalFormulaInput(BaseModel):
    """
    Schema representing the parameters of the two nineteenth-century closed forms.

    Attributes:
        mills_n (int): Mills' integer multiplier n.
        mills_t (int): Mills' exponent t.
        tchitcherin_A (float): Atomic weight A.
        tchitcherin_n (int): Tchitcherin's element-family parameter n.
    """
    mills_n: int = Field(default=1, gt=0)
    mills_t: int = Field(default=1, gt=0)
    tchitcherin_A: float = Field(default=1.0, gt=0)
    tchitcherin_n: int = Field(default=1, gt=0)
    model_config = ConfigDict(frozen=True)  # noqa


class SequenceRow(BaseModel):
    """
    One row of the period-cardinality report.
    """
    n: int
    cardinality: int
    halved: int
    accumulated: int
    shell_capacity: int
    triangular: int
    weise: int
    model_config = ConfigDict(frozen=True)  # noqa
