"""ARK identifier core: parsing, normalization, comparison, check characters.

An ARK's identity is the hostname-free string ``ark:/<naan>/<name>``
optionally followed by ``/<qualifier>`` containment components. Any
resolver hostname in front of it is presentation, not identity, so
parsing strips it. Hyphens are insignificant and removed. A trailing
``?`` asks for metadata, ``??`` for the provider's persistence
commitment; both are captured separately from the identity.
"""

import enum
from dataclasses import dataclass

from arkvoc import _backend
from arkvoc.errors import ArkvocError

#: The 29-character transcription-safe alphabet: digits plus lowercase
#: consonants, with `l` excluded.
ALPHABET = _backend.ALPHABET

_ALPHA_SET = frozenset(ALPHABET)
_DIGITS = frozenset("0123456789")
_LABEL = "ark:"


class ArkParseError(ArkvocError):
    pass


class Inflection(enum.Enum):
    NONE = ""
    METADATA = "?"
    COMMITMENT = "??"


@dataclass(frozen=True)
class ArkName:
    """Parsed, hostname-independent ARK identity."""

    naan: str
    assigned_name: str
    qualifiers: tuple = ()
    inflection: Inflection = Inflection.NONE


@dataclass(frozen=True)
class Shoulder:
    """Split of an assigned name at the first digit.

    The shoulder is the shortest prefix ending in a digit; the blade is
    the rest. A name with no digit at all keeps the whole name as its
    shoulder and is flagged degenerate.
    """

    shoulder: str
    blade: str
    degenerate: bool = False


def is_betanumeric(s: str) -> bool:
    """True iff every character of s is in the 29-symbol alphabet."""
    return all(ch in _ALPHA_SET for ch in s)


def _clean_component(raw: str) -> str:
    # hyphens are insignificant everywhere inside the identity
    return raw.replace("-", "")


def _parse(text: str, allow_suffix: bool):
    pos = text.find(_LABEL)
    if pos < 0:
        raise ArkParseError("malformed-label", f"no {_LABEL!r} label in {text!r}")
    if pos > 0 and text[pos - 1] != "/":
        raise ArkParseError("malformed-label", f"{_LABEL!r} label not at a path boundary in {text!r}")
    rest = text[pos + len(_LABEL):]
    if rest.startswith("/"):
        rest = rest[1:]

    inflection = Inflection.NONE
    if rest.endswith("??"):
        inflection = Inflection.COMMITMENT
        rest = rest[:-2]
    elif rest.endswith("?"):
        inflection = Inflection.METADATA
        rest = rest[:-1]

    parts = rest.split("/")
    naan = _clean_component(parts[0])
    if not naan:
        raise ArkParseError("empty-naan", f"missing NAAN in {text!r}")
    if not all(ch in _DIGITS for ch in naan):
        raise ArkParseError("non-digit-naan", f"NAAN {parts[0]!r} is not all digits")

    if len(parts) < 2:
        raise ArkParseError("empty-name", f"missing assigned name in {text!r}")
    name = _clean_component(parts[1])
    if not name:
        raise ArkParseError("empty-name", f"empty assigned name in {text!r}")
    if not is_betanumeric(name):
        raise ArkParseError("illegal-character", f"assigned name {parts[1]!r} is not betanumeric")

    qualifiers = []
    suffix = ""
    for i, raw in enumerate(parts[2:], start=2):
        q = _clean_component(raw)
        if q and is_betanumeric(q):
            qualifiers.append(q)
            continue
        if allow_suffix:
            suffix = "/" + "/".join(parts[i:])
            break
        if not q:
            raise ArkParseError("empty-qualifier", f"empty qualifier in {text!r}")
        raise ArkParseError("illegal-character", f"qualifier {raw!r} is not betanumeric")

    ark = ArkName(naan, name, tuple(qualifiers), inflection)
    return ark, suffix


def parse(text: str) -> ArkName:
    """Parse an ARK from a bare string or from a URI that embeds one.

    Accepts ``ark:/...``, ``ark:...``, or any absolute URI whose path
    contains the label. Raises ArkParseError with codes malformed-label,
    empty-naan, non-digit-naan, empty-name, empty-qualifier, or
    illegal-character.
    """
    ark, _ = _parse(text, allow_suffix=False)
    return ark


def split_request(text: str):
    """Parse the leading ARK of a request path, keeping the remainder.

    Qualifier components are consumed while they stay betanumeric; the
    first component that does not conform starts the raw suffix, which
    is returned verbatim (leading slash included) for passthrough.
    Returns (ArkName, suffix).
    """
    return _parse(text, allow_suffix=True)


def canonical_string(a: ArkName) -> str:
    """Hostname-free canonical form, inflection omitted."""
    out = f"ark:/{a.naan}/{a.assigned_name}"
    for q in a.qualifiers:
        out += "/" + q
    return out


def to_uri(a: ArkName, resolver_host: str) -> str:
    """Actionable https URI for the ARK at the given resolver hostname."""
    if not resolver_host:
        raise ArkParseError("empty-host", "resolver_host must be non-empty")
    return f"https://{resolver_host}/{canonical_string(a)}{a.inflection.value}"


def same_identity(a: ArkName, b: ArkName) -> bool:
    """Field-wise equality ignoring the inflection."""
    return (a.naan, a.assigned_name, a.qualifiers) == (b.naan, b.assigned_name, b.qualifiers)


def split_shoulder(assigned_name: str) -> Shoulder:
    if not assigned_name:
        raise ArkParseError("empty-input", "assigned name is empty")
    for i, ch in enumerate(assigned_name):
        if ch in _DIGITS:
            return Shoulder(assigned_name[: i + 1], assigned_name[i + 1:])
    return Shoulder(assigned_name, "", degenerate=True)


def weighted_sum(s: str) -> int:
    return _backend.weighted_sum(s)


def check_char(s: str) -> str:
    """Check character for s: ALPHABET[(sum of i*value_i) mod 29].

    Positions are 1-based; characters outside the alphabet (such as the
    ``/`` between NAAN and name) contribute value 0. The expected input
    is ``<naan>/<name-without-its-check-char>``.
    """
    return _backend.check_char(s)


def verify_check(s: str) -> bool:
    """True iff the last character of s is the check character of the rest."""
    return _backend.verify_check(s)
