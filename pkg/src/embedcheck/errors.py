"""Exception types shared by the whole package.

Every precondition violation is a ``ValueError``; the subclasses below let callers
tell a loud cap failure or a malformed group file apart from a plain contract breach.
"""

from __future__ import annotations

import sys

if sys.version_info >= (3, 12):
    from typing import override
else:
    from typing_extensions import override


class CapExceededError(ValueError):
    """A configured size limit was exceeded.

    Attributes:
        cap: Name of the cap (as in :class:`embedcheck.config.Caps`).
        limit: Configured value of the cap.
        actual: The size that was requested.
    """

    def __init__(self, cap: str, limit: int, actual: int):
        super().__init__(f"{cap} exceeded: {actual} > {limit}")
        self.cap = cap
        self.limit = limit
        self.actual = actual


class GroupFileError(ValueError):
    """Syntax or range error in the group file format.

    Attributes:
        message: What went wrong.
        line: 1-based line number, 0 when the error is not tied to a line.
        column: 1-based column number, 0 when unknown.
        path: Source file, when the text came from a file.
    """

    def __init__(self, message: str, line: int = 0, column: int = 0, path: str | None = None):
        super().__init__(message)
        self.message = message
        self.line = line
        self.column = column
        self.path = path

    def with_path(self, path: str) -> GroupFileError:
        return GroupFileError(self.message, self.line, self.column, path)

    @override
    def __str__(self) -> str:
        where = self.path or "<text>"
        if self.line:
            where = f"{where}:{self.line}:{self.column}"
        return f"{where}: {self.message}"
