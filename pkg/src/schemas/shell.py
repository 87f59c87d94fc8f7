import math
from enum import Enum
from fractions import Fraction
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator

LETTERS = "spdfghiklmnoqrtuvwxyz"


class Shell(BaseModel):
    """
    Schema representing an electron shell (subshell) ``(n, l)``.

    Attributes:
        n (int): Principal quantum number, ``n >= 1``.
        l (int): Azimuthal quantum number, ``0 <= l <= n - 1``.
    """
    n: int = Field(ge=1)
    l: int = Field(ge=0)  # noqa: E741
    model_config = ConfigDict(frozen=True)  # noqa

    @model_validator(mode="after")
    def check_l(self):
        if self.l >= self.n:
            raise ValueError(f"l={self.l} must be smaller than n={self.n}")
        return self

    @property
    def capacity(self) -> int:
        return 2 * (2 * self.l + 1)

    @property
    def label(self) -> str:
        letter = LETTERS[self.l] if self.l < len(LETTERS) else f"[l={self.l}]"
        return f"{self.n}{letter}"

    def __str__(self):
        return self.label


class Comparison(str, Enum):
    LESS = "less"
    EQUAL = "equal-shell"
    GREATER = "greater"


class OrderParameter(BaseModel):
    """
    Schema representing one member of the shell-order family.

    Attributes:
        kind (str): ``madelung``, ``hydrogenic`` or ``ray``.
        slope_k (float | None): Ray slope ``k <= -1``, present only for the ray kind.

    Note:
        A ray orders shells by ``n + beta * l`` with ``beta = -1 / k`` in ``(0, 1]``; ``beta`` is
        kept as an exact fraction so that ties are detected exactly.
    """
    kind: Literal["madelung", "hydrogenic", "ray"]
    slope_k: float | None = None
    model_config = ConfigDict(frozen=True)  # noqa

    @model_validator(mode="after")
    def check_slope(self):
        if self.kind == "ray":
            if self.slope_k is None or not math.isfinite(self.slope_k) or self.slope_k > -1:
                raise ValueError(f"ray slope must be finite and <= -1, got {self.slope_k}")
        elif self.slope_k is not None:
            raise ValueError(f"{self.kind} order takes no slope")
        return self

    @property
    def beta(self) -> Fraction | None:
        if self.slope_k is None:
            return None
        return -1 / Fraction(repr(self.slope_k))

    @property
    def name(self) -> str:
        if self.kind == "ray":
            return f"ray:{self.slope_k!r}"
        return self.kind


class Occupancy(BaseModel):
    shell: Shell
    electrons: int = Field(gt=0)
    model_config = ConfigDict(frozen=True)  # noqa

    @property
    def label(self) -> str:
        return f"{self.shell.label}{self.electrons}"


class Configuration(BaseModel):
    """
    Schema representing an idealized ground-state electron configuration.

    Attributes:
        entries (tuple[Occupancy, ...]): Filled shells in filling order.
        total (int): Number of electrons placed.

    Note:
        Only the last shell may be partially filled.
    """
    entries: tuple[Occupancy, ...]
    total: int = Field(ge=0)
    model_config = ConfigDict(frozen=True)  # noqa

    @model_validator(mode="after")
    def check_filling(self):
        if sum(entry.electrons for entry in self.entries) != self.total:
            raise ValueError("occupancies must add up to the total")
        for index, entry in enumerate(self.entries):
            if entry.electrons > entry.shell.capacity:
                raise ValueError(f"{entry.shell.label} holds at most {entry.shell.capacity} electrons")
            if index < len(self.entries) - 1 and entry.electrons != entry.shell.capacity:
                raise ValueError(f"only the last shell may be partially filled, not {entry.shell.label}")
        return self

    @property
    def label(self) -> str:
        return " ".join(entry.label for entry in self.entries)
