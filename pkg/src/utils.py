import logging
import sys
from typing import TextIO


class Style:
    RESET = '\033[0m'
    BOLD = '\033[1m'
    UNDERLINE = '\033[4m'

    # Colors
    RED = '\033[91m'
    GREEN = '\033[92m'
    YELLOW = '\033[93m'
    BLUE = '\033[94m'
    MAGENTA = '\033[95m'
    CYAN = '\033[96m'


LEVEL_COLOURS = {
    logging.DEBUG: Style.CYAN,
    logging.INFO: Style.GREEN,
    logging.WARNING: Style.YELLOW,
    logging.ERROR: Style.RED,
    logging.CRITICAL: Style.RED + Style.BOLD,
}


class StyledFormatter(logging.Formatter):
    """Colours the level name when writing to a terminal."""

    def __init__(self, colour: bool) -> None:
        super().__init__("%(levelname)s %(name)s: %(message)s")
        self.colour = colour

    def format(self, record: logging.LogRecord) -> str:
        text = super().format(record)
        if not self.colour:
            return text
        colour = LEVEL_COLOURS.get(record.levelno, "")
        return text.replace(record.levelname, f"{colour}{record.levelname}{Style.RESET}", 1)


def configure_logging(level: str = "WARNING", stream: TextIO | None = None) -> None:
    stream = stream or sys.stderr
    handler = logging.StreamHandler(stream)
    handler.setFormatter(StyledFormatter(colour=getattr(stream, "isatty", lambda: False)()))
    handler.styled = True
    root = logging.getLogger()
    # drop only a handler installed by an earlier call
    for old in [h for h in root.handlers if getattr(h, "styled", False)]:
        root.removeHandler(old)
    root.addHandler(handler)
    root.setLevel(level.upper())
