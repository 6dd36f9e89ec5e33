"""ARK identifier toolkit and vocabulary server.

Mints, parses, resolves, and publishes ARK persistent identifiers for
controlled vocabularies, and applies those vocabularies to documents
through an automatic subject indexer with temporal concept-drift
metrics.
"""

from arkvoc._backend import BACKEND
from arkvoc.core import (
    ALPHABET,
    ArkName,
    ArkParseError,
    Inflection,
    Shoulder,
    canonical_string,
    check_char,
    is_betanumeric,
    parse,
    same_identity,
    split_shoulder,
    to_uri,
    verify_check,
)
from arkvoc.errors import ArkvocError

__version__ = "0.1.0"

__all__ = [
    "ALPHABET",
    "BACKEND",
    "ArkName",
    "ArkParseError",
    "ArkvocError",
    "Inflection",
    "Shoulder",
    "canonical_string",
    "check_char",
    "is_betanumeric",
    "parse",
    "same_identity",
    "split_shoulder",
    "to_uri",
    "verify_check",
    "__version__",
]
