"""Minimal ANVL-style key-value record format.

Grammar used throughout this package (registry files, minter state,
term records, manifests, drift reports):

  record  = line+
  line    = key ":" [" " value]      -- key has no leading whitespace
          | WSP continuation         -- appended to the previous value
          | "#" comment              -- ignored
  records in one file are separated by one or more blank lines

Values are stripped of surrounding whitespace. A value containing
newlines is written as continuation lines indented with a single tab
and reads back with the newlines restored.
"""

from arkvoc.errors import ArkvocError


class AnvlError(ArkvocError):
    pass


def format_record(pairs) -> str:
    """Render (key, value) pairs, in order, as one ANVL record."""
    lines = []
    for key, value in pairs:
        value = "" if value is None else str(value)
        head, *rest = value.split("\n")
        lines.append(f"{key}: {head}" if head else f"{key}:")
        for cont in rest:
            lines.append(f"\t{cont}")
    return "\n".join(lines) + "\n" if lines else ""


def parse_record(text: str):
    """Parse one record into an ordered list of (key, value) pairs."""
    records = parse_blocks(text)
    if not records:
        return []
    if len(records) > 1:
        raise AnvlError("anvl-multiple-records", "expected a single record")
    return records[0]


def parse_blocks(text: str):
    """Parse blank-line-separated records; returns a list of pair lists."""
    records = []
    current = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            if current:
                records.append(current)
                current = []
            continue
        if line.lstrip().startswith("#"):
            continue
        if line[0] in " \t":
            if not current:
                raise AnvlError("anvl-malformed-line", f"line {lineno}: continuation before any key")
            key, value = current[-1]
            current[-1] = (key, value + "\n" + line.strip())
            continue
        key, sep, value = line.partition(":")
        if not sep or not key.strip():
            raise AnvlError("anvl-malformed-line", f"line {lineno}: expected 'key: value', got {line!r}")
        current.append((key.strip(), value.strip()))
    if current:
        records.append(current)
    return records


def format_blocks(records) -> str:
    return "\n".join(format_record(r) for r in records)


def first(pairs, key: str, default=None):
    for k, v in pairs:
        if k == key:
            return v
    return default


def all_values(pairs, key: str):
    return [v for k, v in pairs if k == key]
