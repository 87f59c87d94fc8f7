from typing import Literal

from pydantic import BaseModel, ConfigDict, model_validator

from src.conf import messages

Orientation = Literal["ascending", "descending"]


class OrderCheck(BaseModel):
    """
    Result of checking the partial-order axioms.

    Attributes:
        holds (bool): True when the relation is reflexive, antisymmetric and transitive.
        axiom (str | None): First failing axiom: ``reflexivity``, ``antisymmetry`` or ``transitivity``.
        witness (tuple[str, ...] | None): Items exhibiting the failure.
    """
    holds: bool
    axiom: str | None = None
    witness: tuple[str, ...] | None = None
    model_config = ConfigDict(frozen=True)  # noqa

    def __bool__(self):
        return self.holds


class Poset(BaseModel):
    """
    Schema representing a finite partially ordered set.

    Attributes:
        ground (tuple[str, ...]): Items, in a fixed presentation order.
        leq (frozenset[tuple[str, str]]): Pairs ``(a, b)`` meaning ``a <= b``, reflexive pairs included.

    Note:
        Construction fails unless the relation is a partial order on ``ground``.
    """
    ground: tuple[str, ...]
    leq: frozenset[tuple[str, str]]
    model_config = ConfigDict(frozen=True)  # noqa

    @model_validator(mode="after")
    def check_axioms(self):
        from src.services.posets import verify_partial_order

        if len(set(self.ground)) != len(self.ground):
            raise ValueError("ground items must be unique")
        check = verify_partial_order(self.ground, self.leq)
        if not check.holds:
            raise ValueError(messages.NOT_PARTIAL_ORDER.format(axiom=check.axiom))
        return self

    def le(self, a: str, b: str) -> bool:
        return (a, b) in self.leq

    def strict_pairs(self) -> list[tuple[str, str]]:
        position = {item: index for index, item in enumerate(self.ground)}
        return sorted(((a, b) for a, b in self.leq if a != b), key=lambda p: (position[p[0]], position[p[1]]))


class HasseDiagram(BaseModel):
    """
    Schema representing the cover relation of a poset.

    Attributes:
        ground (tuple[str, ...]): Items of the poset.
        covers (tuple[tuple[str, str], ...]): Pairs ``(a, b)`` with ``a < b`` and nothing strictly between.
    """
    ground: tuple[str, ...]
    covers: tuple[tuple[str, str], ...]
    model_config = ConfigDict(frozen=True)  # noqa


class MonotonicityReport(BaseModel):
    """
    How often a property follows the table's positional order.

    Attributes:
        property (str): Property checked.
        orientation (str): ``ascending`` or ``descending`` along the positional order.
        fraction (float): Share of checked cover pairs on which the property is monotone.
        checked (int): Number of cover pairs with both values present.
        violations (tuple[tuple[str, str], ...]): Cover pairs breaking monotonicity.
    """
    property: str
    orientation: Orientation
    fraction: float
    checked: int
    violations: tuple[tuple[str, str], ...]
    model_config = ConfigDict(frozen=True)  # noqa
