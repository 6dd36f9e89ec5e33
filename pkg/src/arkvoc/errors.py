"""Shared error base so the CLI can map any domain failure to exit code 1."""


class ArkvocError(Exception):
    """A domain error with a stable, machine-readable ``code`` tag."""

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code

    def __str__(self) -> str:
        return f"{self.code}: {super().__str__()}"
