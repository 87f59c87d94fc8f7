from pydantic import BaseModel, ConfigDict, Field, model_validator

F_BLOCK = frozenset(range(57, 72)) | frozenset(range(89, 104))


class ChemicalElement(BaseModel):
    """
    Schema representing one chemical element as a vector of measured property values.

    Attributes:
        atomic_number (int): The atomic number Z.
        symbol (str): The element symbol.
        group (int | None): Column 1-18 of the conventional table, absent for the f-block.
        period (int | None): Row 1-8 of the conventional table.
        properties (dict[str, float | None]): Property name to value; ``None`` marks a missing value.

    Note:
        Missing values are kept as ``None`` and never imputed.
    """
    atomic_number: int = Field(gt=0)
    symbol: str = Field(min_length=1, max_length=3)
    group: int | None = Field(default=None, ge=1, le=18)
    period: int | None = Field(default=None, ge=1, le=8)
    properties: dict[str, float | None] = Field(default_factory=dict)
    model_config = ConfigDict(frozen=True)  # noqa

    def value(self, name: str) -> float | None:
        return self.properties.get(name)


class PropertyTable(BaseModel):
    """
    Schema representing the set Q of elements together with its declared properties.

    Attributes:
        elements (tuple[ChemicalElement, ...]): Elements in input order.
        property_names (tuple[str, ...]): Declared property names in column order.
        units (dict[str, str]): Property name to unit string, for properties with a declared unit.
    """
    elements: tuple[ChemicalElement, ...]
    property_names: tuple[str, ...]
    units: dict[str, str] = Field(default_factory=dict)
    model_config = ConfigDict(frozen=True)  # noqa

    @model_validator(mode="after")
    def check_consistency(self):
        if not self.elements:
            raise ValueError("a table needs at least one element")
        if len(set(self.property_names)) != len(self.property_names):
            raise ValueError("property names must be unique")
        numbers, symbols = set(), set()
        declared = set(self.property_names)
        for element in self.elements:
            if element.atomic_number in numbers:
                raise ValueError(f"duplicate atomic number Z={element.atomic_number}")
            if element.symbol in symbols:
                raise ValueError(f"duplicate symbol {element.symbol!r}")
            numbers.add(element.atomic_number)
            symbols.add(element.symbol)
            extra = set(element.properties) - declared
            if extra:
                raise ValueError(f"{element.symbol} has undeclared properties {sorted(extra)}")
        unknown_units = set(self.units) - declared
        if unknown_units:
            raise ValueError(f"units given for undeclared properties {sorted(unknown_units)}")
        return self

    @property
    def symbols(self) -> tuple[str, ...]:
        return tuple(element.symbol for element in self.elements)

    def element(self, symbol: str) -> ChemicalElement | None:
        for element in self.elements:
            if element.symbol == symbol:
                return element
        return None

    def column(self, name: str) -> tuple[float | None, ...]:
        return tuple(element.value(name) for element in self.elements)


class Cell(BaseModel):
    symbol: str
    group: int | None = Field(default=None, ge=1, le=18)
    period: int = Field(ge=1, le=8)
    model_config = ConfigDict(frozen=True)  # noqa


class LayoutFixture(BaseModel):
    """
    Schema representing the conventional 18-column arrangement of the table.

    Attributes:
        cells (dict[int, Cell]): Atomic number to its symbol and (group, period) cell.

    Note:
        Lanthanides and actinides (Z = 57-71, 89-103) carry a period but no group, and no
        two grouped elements may share a cell.
    """
    cells: dict[int, Cell]
    model_config = ConfigDict(frozen=True)  # noqa

    @model_validator(mode="after")
    def check_cells(self):
        occupied = {}
        symbols = set()
        for z, cell in self.cells.items():
            if z in F_BLOCK and cell.group is not None:
                raise ValueError(f"Z={z} lies in the f-block and cannot carry a group")
            if cell.symbol in symbols:
                raise ValueError(f"duplicate symbol {cell.symbol!r}")
            symbols.add(cell.symbol)
            if cell.group is None:
                continue
            key = (cell.group, cell.period)
            if key in occupied:
                raise ValueError(f"Z={occupied[key]} and Z={z} share cell {key}")
            occupied[key] = z
        return self

    def find(self, symbol: str) -> tuple[int, Cell] | None:
        for z, cell in self.cells.items():
            if cell.symbol == symbol:
                return z, cell
        return None

    def at(self, group: int, period: int) -> str | None:
        for cell in self.cells.values():
            if cell.group == group and cell.period == period:
                return cell.symbol
        return None
