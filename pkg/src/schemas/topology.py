from pydantic import BaseModel, ConfigDict, model_validator


class Basis(BaseModel):
    """
    Schema representing a generating family of open sets over a finite ground set Q.

    Attributes:
        ground (tuple[str, ...]): The set Q in presentation order.
        sets (tuple[tuple[str, ...], ...]): Non-empty subsets of Q; Q itself is always one of them.
    """
    ground: tuple[str, ...]
    sets: tuple[tuple[str, ...], ...]
    model_config = ConfigDict(frozen=True)  # noqa

    @model_validator(mode="after")
    def check_cover(self):
        ground = frozenset(self.ground)
        if len(ground) != len(self.ground):
            raise ValueError("ground items must be unique")
        if ground not in {frozenset(members) for members in self.sets}:
            raise ValueError("the basis must contain the whole ground set")
        for members in self.sets:
            if not members:
                raise ValueError("basis sets must be non-empty")
            if not frozenset(members) <= ground:
                raise ValueError(f"basis set {members} is not inside the ground set")
        return self


class MinimalNeighborhoods(BaseModel):
    """
    Schema representing a finite topological space by its minimal open neighbourhoods.

    Attributes:
        ground (tuple[str, ...]): The set Q.
        neighborhoods (dict[str, tuple[str, ...]]): ``x`` to ``U_x``, the intersection of all basis sets
            containing ``x``; members listed in ground order.
    """
    ground: tuple[str, ...]
    neighborhoods: dict[str, tuple[str, ...]]
    model_config = ConfigDict(frozen=True)  # noqa

    @model_validator(mode="after")
    def check_points(self):
        if set(self.neighborhoods) != set(self.ground):
            raise ValueError("every point needs exactly one neighbourhood")
        for point, members in self.neighborhoods.items():
            if point not in members:
                raise ValueError(f"{point!r} must belong to its own neighbourhood")
        return self

    def of(self, point: str) -> frozenset[str]:
        return frozenset(self.neighborhoods[point])
