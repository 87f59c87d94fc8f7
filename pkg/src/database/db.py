import contextlib
import functools
import logging
from pathlib import Path
from typing import Iterator, TextIO

from src.conf import messages
from src.exceptions import InputError

logger = logging.getLogger(__name__)

RESOURCE_DIR = Path(__file__).parent


class DatasetManager:
    """
    Locate and open the CSV resources bundled with the package.

    Attributes:
        root (Path): Directory holding the resources.

    Note:
        Resources are opened read-only with ``newline=""`` so the csv module sees raw line endings.
    """

    def __init__(self, root: Path):
        self.root = root

    def path(self, name: str) -> Path:
        path = self.root / name
        if not path.is_file():
            raise FileNotFoundError(f"Bundled resource {name!r} not found in {self.root}")
        return path

    @contextlib.contextmanager
    def open(self, name: str) -> Iterator[TextIO]:
        path = self.path(name)
        logger.debug("Opening bundled resource %s", path)
        stream = path.open("r", encoding="utf-8", newline="")
        try:
            yield stream
        finally:
            stream.close()


datasets = DatasetManager(RESOURCE_DIR)


@functools.cache
def get_layout():
    """
    Return the conventional 18-column layout fixture, loaded once per process.
    """
    from src.repository.elements import load_layout

    with datasets.open("layout.csv") as stream:
        return load_layout(stream)


@functools.cache
def get_fixture_table():
    """
    Return the bundled property table (Z = 1..86 without 58..71), loaded once per process.
    """
    from src.repository.elements import load_table

    with datasets.open("elements.csv") as stream:
        return load_table(stream)


@contextlib.contextmanager
def open_input(path: Path | None, bundled: str) -> Iterator[TextIO]:
    """
    Open a user-supplied CSV, or the bundled resource ``bundled`` when no path is given.

    Raises:
        InputError: If the file cannot be opened.
    """
    if path is None:
        with datasets.open(bundled) as stream:
            yield stream
        return
    try:
        stream = Path(path).open("r", encoding="utf-8", newline="")
    except OSError as err:
        raise InputError(messages.FILE_NOT_FOUND.format(path=path, reason=err.strerror))
    logger.debug("Opening %s", path)
    with stream:
        yield stream
