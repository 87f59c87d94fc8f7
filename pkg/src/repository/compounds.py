from typing import TextIO

from src.conf import messages
from src.repository.elements import _rows
from src.schemas.pattern import CompoundRow, RowError

HEADER = ["elementA", "elementB", "label"]


def load_compounds(source: TextIO) -> tuple[list[CompoundRow], list[RowError]]:
    """
    Read binary compounds from CSV with columns ``elementA,elementB,label``.

    Args:
        source (TextIO): Character stream; the header row is optional.

    Returns:
        tuple[list[CompoundRow], list[RowError]]: Well-formed rows, and one error per malformed row.
        Malformed rows never stop the remaining rows from loading.
    """
    rows = _rows(source)
    if rows and [cell.strip() for cell in rows[0][1]] == HEADER:
        rows = rows[1:]
    compounds, errors = [], []
    for number, row in rows:
        cells = [cell.strip() for cell in row]
        if len(cells) != len(HEADER):
            errors.append(RowError(row=number, reason=messages.WRONG_ROW_LENGTH.format(
                row=number, found=len(cells), expected=len(HEADER))))
            continue
        if not all(cells):
            errors.append(RowError(row=number, reason=messages.EMPTY_CELL))
            continue
        compounds.append(CompoundRow(row=number, first=cells[0], second=cells[1], label=cells[2]))
    return compounds, errors
