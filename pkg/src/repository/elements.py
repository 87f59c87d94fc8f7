import csv
import io
import logging
import math
from typing import Iterable, TextIO

import numpy as np
from pydantic import ValidationError

from src.conf import messages
from src.exceptions import LookupFailure, PreconditionError, TableFormatError
from src.schemas.cluster import StandardizedMatrix
from src.schemas.element import Cell, ChemicalElement, LayoutFixture, PropertyTable

logger = logging.getLogger(__name__)

FIXED_COLUMNS = ["Z", "symbol", "group", "period"]
UNIT_MARKER = "unit"


def _rows(source: TextIO) -> list[tuple[int, list[str]]]:
    # keep physical line numbers for error reporting, skip blank lines
    return [(number, row) for number, row in enumerate(csv.reader(source), start=1) if row]


def _parse_int(value: str, row: int, column: str) -> int | None:
    value = value.strip()
    if value == "":
        return None
    try:
        return int(value)
    except ValueError:
        raise TableFormatError(messages.MALFORMED_NUMBER.format(value=value, row=row, column=column),
                               row=row, column=column)


def _parse_real(value: str, row: int, column: str) -> float | None:
    value = value.strip()
    if value == "":
        return None
    try:
        number = float(value)
    except ValueError:
        number = math.nan
    if not math.isfinite(number):
        raise TableFormatError(messages.MALFORMED_NUMBER.format(value=value, row=row, column=column),
                               row=row, column=column)
    return number


def load_table(source: TextIO) -> PropertyTable:
    """
    Read a property table from CSV text.

    Args:
        source (TextIO): Character stream with header ``Z,symbol,group,period,<prop1>,...``.

    Returns:
        PropertyTable: The validated table, rows in input order.

    Raises:
        TableFormatError: On empty input, a bad header, malformed numbers (row and column are
            reported), or duplicate atomic numbers or symbols.

    Note:
        An optional second row starting with ``unit`` declares property units. Empty cells are
        missing values.
    """
    rows = _rows(source)
    if not rows:
        raise TableFormatError(messages.EMPTY_INPUT)
    _, header = rows[0]
    header = [cell.strip() for cell in header]
    if header[:4] != FIXED_COLUMNS:
        raise TableFormatError(messages.BAD_HEADER, row=1)
    property_names = header[4:]
    units = {}
    body = rows[1:]
    if body and body[0][1][0].strip() == UNIT_MARKER:
        number, unit_row = body[0]
        units = {name: unit.strip() for name, unit in zip(property_names, unit_row[4:]) if unit.strip()}
        body = body[1:]
    if not body:
        raise TableFormatError(messages.EMPTY_INPUT)

    elements = []
    seen_z, seen_symbols = {}, {}
    for number, row in body:
        if len(row) != len(header):
            raise TableFormatError(messages.WRONG_ROW_LENGTH.format(row=number, found=len(row),
                                                                    expected=len(header)), row=number)
        z = _parse_int(row[0], number, "Z")
        symbol = row[1].strip()
        if z in seen_z:
            raise TableFormatError(messages.DUPLICATE_Z.format(z=z), row=number, column="Z")
        if symbol in seen_symbols:
            raise TableFormatError(messages.DUPLICATE_SYMBOL.format(symbol=symbol), row=number, column="symbol")
        seen_z[z] = seen_symbols[symbol] = number
        properties = {name: _parse_real(cell, number, name) for name, cell in zip(property_names, row[4:])}
        try:
            elements.append(ChemicalElement(atomic_number=z, symbol=symbol,
                                            group=_parse_int(row[2], number, "group"),
                                            period=_parse_int(row[3], number, "period"),
                                            properties=properties))
        except ValidationError as err:
            raise TableFormatError(messages.INVALID_ELEMENT.format(row=number, reason=err.errors()[0]["msg"]),
                                   row=number)
    try:
        return PropertyTable(elements=tuple(elements), property_names=tuple(property_names), units=units)
    except ValidationError as err:
        raise TableFormatError(messages.INVALID_TABLE.format(reason=err.errors()[0]["msg"]))


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return str(value)


def emit_table(table: PropertyTable) -> str:
    """
    Write a table in canonical CSV form.

    Args:
        table (PropertyTable): The table to write.

    Returns:
        str: CSV text with ``\\n`` line endings, reals written with ``repr`` and missing values as
        empty cells, so that ``load_table`` reproduces the table exactly.
    """
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(FIXED_COLUMNS + list(table.property_names))
    if table.units:
        writer.writerow([UNIT_MARKER, "", "", ""] + [table.units.get(name, "") for name in table.property_names])
    for element in table.elements:
        writer.writerow([element.atomic_number, element.symbol, _cell(element.group), _cell(element.period)]
                        + [_cell(element.value(name)) for name in table.property_names])
    return buffer.getvalue()


def load_layout(source: TextIO) -> LayoutFixture:
    """
    Read the conventional table layout from CSV with columns ``Z,symbol,group,period``.

    Args:
        source (TextIO): Character stream holding the layout.

    Returns:
        LayoutFixture: The validated layout.
    """
    rows = _rows(source)
    if not rows:
        raise TableFormatError(messages.EMPTY_INPUT)
    if [cell.strip() for cell in rows[0][1]] != FIXED_COLUMNS:
        raise TableFormatError(messages.BAD_HEADER, row=1)
    cells = {}
    for number, row in rows[1:]:
        if len(row) != 4:
            raise TableFormatError(messages.WRONG_ROW_LENGTH.format(row=number, found=len(row), expected=4),
                                   row=number)
        z = _parse_int(row[0], number, "Z")
        if z in cells:
            raise TableFormatError(messages.DUPLICATE_Z.format(z=z), row=number, column="Z")
        try:
            cells[z] = Cell(symbol=row[1].strip(), group=_parse_int(row[2], number, "group"),
                            period=_parse_int(row[3], number, "period"))
        except ValidationError as err:
            raise TableFormatError(messages.INVALID_ELEMENT.format(row=number, reason=err.errors()[0]["msg"]),
                                   row=number)
    try:
        return LayoutFixture(cells=cells)
    except ValidationError as err:
        raise TableFormatError(messages.INVALID_TABLE.format(reason=err.errors()[0]["msg"]))


def coordinates(z: int, layout: LayoutFixture) -> tuple[int | None, int]:
    """
    Look up the conventional (group, period) cell of an element.

    Args:
        z (int): Atomic number.
        layout (LayoutFixture): Table layout.

    Returns:
        tuple[int | None, int]: ``(group, period)``; group is ``None`` for the f-block.

    Raises:
        LookupFailure: If ``z`` is not in the layout.

    Note:
        >>> from src.database.db import get_layout
        >>> coordinates(11, get_layout())
        (1, 3)
    """
    cell = layout.cells.get(z)
    if cell is None:
        raise LookupFailure(messages.UNKNOWN_Z.format(z=z))
    return cell.group, cell.period


def check_properties(table: PropertyTable, selected: Iterable[str]) -> tuple[str, ...]:
    selected = tuple(selected)
    if not selected:
        raise PreconditionError(messages.NO_PROPERTIES)
    for name in selected:
        if name not in table.property_names:
            raise LookupFailure(messages.UNKNOWN_PROPERTY.format(name=name))
    return selected


def standardize(table: PropertyTable, selected: Iterable[str]) -> StandardizedMatrix:
    """
    Centre each selected property on its mean and scale it to unit sample standard deviation.

    Args:
        table (PropertyTable): Source table.
        selected (Iterable[str]): Property names, in output column order.

    Returns:
        StandardizedMatrix: Rows in table order; missing values stay ``None``.

    Raises:
        LookupFailure: If a property is not declared in the table.
        PreconditionError: If a property has fewer than two values or zero spread.
    """
    selected = check_properties(table, selected)
    columns, means, scales = [], [], []
    for name in selected:
        raw = np.array([np.nan if v is None else v for v in table.column(name)], dtype=float)
        present = raw[~np.isnan(raw)]
        if present.size < 2:
            raise PreconditionError(messages.TOO_FEW_VALUES.format(name=name, found=present.size))
        if present.max() == present.min():
            raise PreconditionError(messages.ZERO_SPREAD.format(name=name))
        mean = float(present.mean())
        scale = float(present.std(ddof=1))
        columns.append((raw - mean) / scale)
        means.append(mean)
        scales.append(scale)
    matrix = np.column_stack(columns)
    values = tuple(tuple(None if np.isnan(v) else float(v) for v in row) for row in matrix)
    return StandardizedMatrix(labels=table.symbols, properties=selected, values=values,
                              means=tuple(means), scales=tuple(scales))


def raw_matrix(table: PropertyTable, selected: Iterable[str]) -> StandardizedMatrix:
    """
    Same shape as :func:`standardize` but with the values left unscaled.
    """
    selected = check_properties(table, selected)
    values = tuple(tuple(element.value(name) for name in selected) for element in table.elements)
    return StandardizedMatrix(labels=table.symbols, properties=selected, values=values)


def partition_by(table: PropertyTable, key: str) -> dict[str, tuple[str, ...]]:
    """
    Split Q into the columns (``key="group"``) or rows (``key="period"``) of the table.

    Args:
        table (PropertyTable): Source table.
        key (str): ``group`` or ``period``.

    Returns:
        dict[str, tuple[str, ...]]: Block label to member symbols, blocks in ascending key order,
        members in table order; elements without the key form the block ``none``.
    """
    if key not in ("group", "period"):
        raise PreconditionError(messages.UNKNOWN_PROPERTY.format(name=key))
    blocks: dict[int | None, list[str]] = {}
    for element in table.elements:
        blocks.setdefault(getattr(element, key), []).append(element.symbol)
    ordered = sorted(blocks, key=lambda value: (value is None, value or 0))
    return {("none" if value is None else str(value)): tuple(blocks[value]) for value in ordered}


def load_element_set(source: TextIO) -> tuple[str, ...]:
    """
    Read a named element set: a ``symbol`` header followed by one symbol per row.

    An empty stream or a header alone is the empty set.
    """
    rows = _rows(source)
    if rows and rows[0][1][0].strip() == "symbol":
        rows = rows[1:]
    symbols = []
    for _, row in rows:
        symbol = row[0].strip()
        if symbol and symbol not in symbols:
            symbols.append(symbol)
    return tuple(symbols)


def load_reference_groups(source: TextIO) -> list[tuple[str, tuple[str, ...]]]:
    """
    Read published similarity groups from CSV with columns ``source,group``.

    Returns:
        list[tuple[str, tuple[str, ...]]]: ``(source, members)`` pairs in file order.
    """
    rows = _rows(source)
    if rows and [cell.strip() for cell in rows[0][1]] == ["source", "group"]:
        rows = rows[1:]
    groups = []
    for number, row in rows:
        if len(row) != 2:
            raise TableFormatError(messages.WRONG_ROW_LENGTH.format(row=number, found=len(row), expected=2),
                                   row=number)
        groups.append((row[0].strip(), tuple(row[1].split())))
    return groups
